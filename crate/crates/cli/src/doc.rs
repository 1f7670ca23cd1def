//! JSON result documents.

use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Per-level counts followed by the total, keys in level order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub levels: Vec<usize>,
    pub total: usize,
}

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.levels.len() + 1))?;
        for (k, c) in self.levels.iter().enumerate() {
            m.serialize_entry(&format!("level_{}", k + 1), c)?;
        }
        m.serialize_entry("total", &self.total)?;
        m.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    /// Innermost first (`x_1` first).
    pub variables: Vec<String>,
    /// Outermost first (projection order).
    pub order: Vec<String>,
    pub method: String,
    pub strategy: String,
    pub counts: Counts,
    pub samples: Vec<Vec<String>>,
    pub verdict: Option<String>,
    pub witness: Option<Vec<String>>,
    pub ms: u64,
}

pub fn rational(q: &BigRational) -> String {
    q.to_string()
}

pub fn point(p: &[BigRational]) -> Vec<String> {
    p.iter().map(rational).collect()
}
