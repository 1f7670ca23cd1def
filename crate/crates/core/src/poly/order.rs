use std::collections::HashSet;

/// Names of the variables, innermost (`x_1`) first.
///
/// Projection eliminates the last name first; the precedence notation
/// `z > y > x` lists the same names outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    /// Builds an order from names listed innermost first. Returns `None` on duplicates.
    pub fn from_innermost<S: AsRef<str>>(names: &[S]) -> Option<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let distinct: HashSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return None;
        }
        Some(VarOrder { names })
    }

    /// Builds an order from names listed outermost first (`z,y,x` for `z > y > x`).
    pub fn from_precedence<S: AsRef<str>>(names: &[S]) -> Option<Self> {
        let mut v: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
        v.reverse();
        Self::from_innermost(&v)
    }

    /// Default order: names sorted ascending, the last one outermost.
    /// Digit runs compare numerically so `x2` precedes `x10`.
    pub fn sorted<S: AsRef<str>>(names: &[S]) -> Self {
        let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        v.sort_by(|a, b| natural_cmp(a, b));
        v.dedup();
        VarOrder { names: v }
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: usize) -> Self {
        VarOrder {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Names outermost first.
    pub fn precedence(&self) -> Vec<String> {
        self.names.iter().rev().cloned().collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let ord = if *da && *db {
            let ta = sa.trim_start_matches('0');
            let tb = sb.trim_start_matches('0');
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
        } else {
            sa.cmp(sb)
        };
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_reverses() {
        let o = VarOrder::from_precedence(&["z", "y", "x"]).unwrap();
        assert_eq!(o.names(), &["x", "y", "z"]);
        assert_eq!(o.precedence(), vec!["z", "y", "x"]);
        assert!(VarOrder::from_innermost(&["x", "x"]).is_none());
    }

    #[test]
    fn natural_sorting() {
        let o = VarOrder::sorted(&["x10", "x2", "x1"]);
        assert_eq!(o.names(), &["x1", "x2", "x10"]);
        let o = VarOrder::sorted(&["z", "x", "y"]);
        assert_eq!(o.names(), &["x", "y", "z"]);
    }
}
