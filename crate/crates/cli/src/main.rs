use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use annulus_cli::ops::{self, Object, Target};
use annulus_cli::server;
use annulus_core::graphs::Graph;
use annulus_core::json::{parse, to_canonical_string};
use annulus_core::symmetry::McgWord;
use annulus_core::tilting::{LambdaVertex, TiltingBundle, Triangulation};
use annulus_core::{Error, Result, WeightType};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::Value;
use tracing_subscriber::EnvFilter;

/// Arcs on the marked annulus and sheaves on the weighted projective line.
#[derive(Parser)]
#[command(name = "annulus", version)]
struct Cli {
    /// Weight of the point at infinity (inner boundary points).
    #[arg(long, global = true)]
    p: Option<i64>,
    /// Weight of the point at zero (outer boundary points).
    #[arg(long, global = true)]
    q: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Read the JSON input from this file instead of stdin.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Translate between a curve class and its sheaf.
    Classify {
        #[arg(long)]
        object: Option<String>,
    },
    /// dim Hom between two objects.
    Hom(Pair),
    /// dim Ext^1 between two objects.
    Ext(Pair),
    /// Positive intersection number of two curves.
    Iplus(Pair),
    /// Resolve a single positive crossing into two curves.
    Resolve(Pair),
    /// The Auslander-Reiten sequence starting at an object.
    Ar {
        #[arg(long)]
        object: Option<String>,
    },
    /// The tilting bundle of a vertex of Lambda.
    Triangulate {
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Check whether a set of arcs is a triangulation.
    Validate,
    /// Flip the arc at a 0-based index of the sorted arc list.
    Flip {
        #[arg(long)]
        index: usize,
    },
    /// The two arcs completing an almost complete set.
    Complements,
    /// Flippability bits of a tilting bundle.
    Iota {
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Bundle flips ending at a fan.
    ReduceToFan {
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Lambda restricted to c1 in a range.
    LambdaGraph {
        #[arg(long, allow_hyphen_values = true, default_value = "-2:2")]
        c1_range: String,
    },
    /// Flip graph around a seed triangulation.
    ExchangeGraph {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Compare the bundle flip graph with Lambda on a window.
    VerifyLambdaIso {
        #[arg(long, allow_hyphen_values = true, default_value = "-1:1")]
        c1_range: String,
    },
    /// Apply a mapping class word such as "r1 r2- s".
    Act {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// The boundary swap on a vertex (p = q).
    Rho {
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Perpendicular category of an exceptional object.
    Perp {
        #[arg(long)]
        object: Option<String>,
    },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(clap::Args)]
struct Pair {
    #[arg(long, alias = "alpha")]
    from: Option<String>,
    #[arg(long, alias = "beta")]
    to: Option<String>,
}

enum Output {
    Json(Value),
    Graph(Graph, &'static str),
    Failed(Value),
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    let mut s = String::new();
    match file {
        Some(path) => {
            s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

impl Cli {
    fn weight(&self) -> Result<WeightType> {
        match (self.p, self.q) {
            (Some(p), Some(q)) => WeightType::new(p, q),
            _ => Err(Error::Parse("--p and --q are required".into())),
        }
    }

    fn input(&self) -> Result<String> {
        read_input(&self.file)
    }

    fn object(&self, flag: &Option<String>) -> Result<Object> {
        match flag {
            Some(s) => Object::parse(s),
            None => Object::parse(&self.input()?),
        }
    }

    fn pair(&self, pair: &Pair) -> Result<(Object, Object)> {
        #[derive(Deserialize)]
        struct Doc {
            #[serde(alias = "alpha")]
            from: Object,
            #[serde(alias = "beta")]
            to: Object,
        }
        match (&pair.from, &pair.to) {
            (Some(a), Some(b)) => Ok((Object::parse(a)?, Object::parse(b)?)),
            (None, None) => {
                let doc: Doc = parse(&self.input()?)?;
                Ok((doc.from, doc.to))
            }
            _ => Err(Error::Parse("give both --from and --to, or neither".into())),
        }
    }

    fn vertex(&self, flag: &Option<String>, w: WeightType) -> Result<LambdaVertex> {
        match flag {
            Some(s) => ops::parse_vertex(s, w),
            None => ops::parse_vertex(&self.input()?, w),
        }
    }

    fn triangulation(&self, w: WeightType) -> Result<Triangulation> {
        ops::parse_triangulation(&self.input()?, w)
    }

    /// A tilting bundle from `--vertex`, or from a triangulation on the input.
    fn bundle(&self, flag: &Option<String>, w: WeightType) -> Result<TiltingBundle> {
        match flag {
            Some(s) => annulus_core::tilting::vertex_to_tilting(&ops::parse_vertex(s, w)?, w),
            None => ops::bundle(&self.triangulation(w)?),
        }
    }

    fn run(&self) -> Result<Output> {
        use Command::*;
        let json = |v: Result<Value>| v.map(Output::Json);
        match &self.command {
            Serve { .. } => unreachable!("handled in main"),
            Classify { object } => json(ops::classify(self.object(object)?, self.weight()?)),
            Hom(pair) => {
                let (a, b) = self.pair(pair)?;
                json(ops::hom(a, b, self.weight()?))
            }
            Ext(pair) => {
                let (a, b) = self.pair(pair)?;
                json(ops::ext(a, b, self.weight()?))
            }
            Iplus(pair) => {
                let (a, b) = self.pair(pair)?;
                json(ops::iplus(a, b, self.weight()?))
            }
            Resolve(pair) => {
                let (a, b) = self.pair(pair)?;
                json(ops::resolve(a, b, self.weight()?))
            }
            Ar { object } => json(ops::ar(self.object(object)?, self.weight()?)),
            Triangulate { vertex } => {
                let w = self.weight()?;
                json(ops::triangulate(&self.vertex(vertex, w)?, w))
            }
            Validate => {
                let w = self.weight()?;
                json(ops::validate(&ops::parse_arcs(&self.input()?, w)?, w))
            }
            Flip { index } => json(ops::flip(&self.triangulation(self.weight()?)?, *index)),
            Complements => {
                let w = self.weight()?;
                json(ops::complements(&ops::parse_arcs(&self.input()?, w)?, w))
            }
            Iota { vertex } => json(ops::iota(&self.bundle(vertex, self.weight()?)?)),
            ReduceToFan { vertex } => json(ops::reduce_to_fan(&self.bundle(vertex, self.weight()?)?)),
            LambdaGraph { c1_range } => {
                let (lo, hi) = ops::parse_range(c1_range)?;
                Ok(Output::Graph(ops::lambda_graph(self.weight()?, lo, hi)?, "lambda"))
            }
            ExchangeGraph { depth, vertex } => {
                let w = self.weight()?;
                let seed = match vertex {
                    Some(_) => self.bundle(vertex, w)?.triangulation(),
                    None => self.triangulation(w)?,
                };
                Ok(Output::Graph(ops::exchange_graph(&seed, *depth)?, "exchange"))
            }
            VerifyLambdaIso { c1_range } => {
                let (lo, hi) = ops::parse_range(c1_range)?;
                let (report, ok) = ops::verify_lambda_iso(self.weight()?, lo, hi)?;
                Ok(if ok {
                    Output::Json(report)
                } else {
                    Output::Failed(report)
                })
            }
            Act { word, vertex } => {
                let w = self.weight()?;
                let f: McgWord = word.parse()?;
                let target = match vertex {
                    Some(s) => Target::Vertex(ops::parse_vertex(s, w)?),
                    None => {
                        let text = self.input()?;
                        let doc: Value = parse(&text)?;
                        if doc.is_array() || doc.get("arcs").is_some() {
                            Target::Triangulation(ops::parse_triangulation(&text, w)?)
                        } else {
                            Target::Object(Object::from_value(doc)?)
                        }
                    }
                };
                json(ops::act(&f, target, w))
            }
            Rho { vertex } => {
                let w = self.weight()?;
                json(ops::rho_vertex(&self.vertex(vertex, w)?, w))
            }
            Perp { object } => json(ops::perp(self.object(object)?, self.weight()?)),
        }
    }
}

fn print_json(v: &Value) {
    match to_canonical_string(v) {
        Ok(s) => println!("{s}"),
        Err(e) => println!("{}", ops::error_value(&e)),
    }
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_env("ANNULUS_LOG").unwrap_or_else(|_| EnvFilter::new("warn")))
        .with_writer(std::io::stderr)
        .init();
    let cli = Cli::parse();
    if let Command::Serve { port } = cli.command {
        let rt = tokio::runtime::Runtime::new().expect("tokio runtime");
        return match rt.block_on(server::serve(port)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                tracing::error!("server failed: {e}");
                ExitCode::from(1)
            }
        };
    }
    match cli.run() {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Graph(g, name)) => {
            match cli.format {
                Format::Dot => print!("{}", g.to_dot(name)),
                Format::Json => match annulus_core::json::canonical_value(&g) {
                    Ok(v) => print_json(&v),
                    Err(e) => print_json(&ops::error_value(&e)),
                },
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(v)) => {
            print_json(&v);
            ExitCode::from(1)
        }
        Err(e) => {
            print_json(&ops::error_value(&e));
            ExitCode::from(if e.is_internal() { 1 } else { 2 })
        }
    }
}
