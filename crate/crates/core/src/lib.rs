//! Open-locating-dominating (OLD) and redundant OLD (RED:OLD) sets.
//!
//! The crate is organised around a small graph core:
//!
//! * [`graph`] and [`set`]: finite simple graphs with bitset neighborhoods.
//! * [`verify`]: polynomial-time checkers for OLD, RED:OLD, locating-dominating
//!   sets and identifying codes, with diagnostic witnesses.
//! * [`solve`]: exact minimum solvers (branch and bound with forcing rules) and a
//!   brute-force oracle.
//! * [`reduce3sat`]: the 3-SAT to RED:OLD gadget reduction and DIMACS ingestion.
//! * [`grids`]: the SQ, HEX, TRI and KING lattices, periodic detector patterns,
//!   exact densities, torus cross-checks and small-period pattern search.
//! * [`fixtures`]: named graphs used throughout the tests and the CLI.

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod grids;
pub mod reduce3sat;
pub mod set;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use set::VertexSet;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The two distinguishing-set problems solved by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Old,
    RedOld,
}

impl Kind {
    /// Required domination multiplicity and distinguishing count.
    pub fn fold(self) -> usize {
        match self {
            Kind::Old => 1,
            Kind::RedOld => 2,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Old => "old",
            Kind::RedOld => "redold",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "old" => Ok(Kind::Old),
            "redold" | "red:old" | "red-old" => Ok(Kind::RedOld),
            other => Err(Error::Input(format!("unknown kind '{other}'"))),
        }
    }
}
