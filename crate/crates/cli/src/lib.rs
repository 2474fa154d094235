//! Front ends for `annulus-core`: the operations behind the `annulus`
//! command and its HTTP API.

pub mod ops;
pub mod server;
