//! JSON forms of bodies: rationals are written as "p/q" strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::RationalVector;
use crate::zonotope::Zonotope;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<RationalVector>,
}

impl From<&Polytope> for PolytopeJson {
    fn from(p: &Polytope) -> PolytopeJson {
        PolytopeJson {
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        }
    }
}

impl PolytopeJson {
    pub fn to_polytope(&self) -> Result<Polytope> {
        if let Some(v) = self.vertices.iter().find(|v| v.dim() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        Polytope::new(self.vertices.clone())
    }
}

pub fn polytope_to_json(p: &Polytope) -> String {
    serde_json::to_string(&PolytopeJson::from(p)).expect("serialisable")
}

pub fn polytope_from_json(s: &str) -> Result<Polytope> {
    let raw: PolytopeJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    raw.to_polytope()
}

pub fn zonotope_to_json(z: &Zonotope) -> String {
    serde_json::to_string(z).expect("serialisable")
}

/// Parses and validates a zonotope.
pub fn zonotope_from_json(s: &str) -> Result<Zonotope> {
    let raw: Zonotope = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Zonotope::new(raw.generators().to_vec(), raw.center().clone())
}
