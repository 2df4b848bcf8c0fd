//! The four concrete vector lattices elements can live in.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// A concrete Riesz space.
///
/// * `FinitePointwise(n)`: ℚⁿ with the componentwise order.
/// * `SparseSeq`: eventually-zero sequences indexed from 1, componentwise order.
/// * `LexPlane`: ℚ² with the lexicographic order (totally ordered, not Archimedean).
/// * `IdentityLine`: a single rational coordinate with its usual order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    FinitePointwise(usize),
    SparseSeq,
    LexPlane,
    IdentityLine,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "snake_case", deny_unknown_fields)]
enum Descriptor {
    FinitePointwise { dim: usize },
    SparseSeq,
    LexPlane,
    IdentityLine,
}

impl Space {
    pub fn finite_pointwise(dim: usize) -> Result<Space> {
        if dim == 0 {
            return Err(Error::InvalidDescriptor(
                "finite_pointwise needs dim >= 1".into(),
            ));
        }
        Ok(Space::FinitePointwise(dim))
    }

    /// Short name used in descriptors and on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Space::FinitePointwise(_) => "finite_pointwise",
            Space::SparseSeq => "sparse_seq",
            Space::LexPlane => "lex_plane",
            Space::IdentityLine => "identity_line",
        }
    }

    /// Parses `{"space":"sparse_seq"}`, `{"space":"finite_pointwise","dim":3}`, ...
    pub fn from_descriptor(value: &Value) -> Result<Space> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidDescriptor("space descriptor must be an object".into()))?;
        // Extra keys (e.g. a truncation riding along in an assertion header) are ignored here.
        let mut only = serde_json::Map::new();
        for key in ["space", "dim"] {
            if let Some(v) = obj.get(key) {
                only.insert(key.to_string(), v.clone());
            }
        }
        let d: Descriptor = serde_json::from_value(Value::Object(only))
            .map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        match d {
            Descriptor::FinitePointwise { dim } => Space::finite_pointwise(dim),
            Descriptor::SparseSeq => Ok(Space::SparseSeq),
            Descriptor::LexPlane => Ok(Space::LexPlane),
            Descriptor::IdentityLine => Ok(Space::IdentityLine),
        }
    }

    pub fn to_descriptor(&self) -> Value {
        let d = match *self {
            Space::FinitePointwise(dim) => Descriptor::FinitePointwise { dim },
            Space::SparseSeq => Descriptor::SparseSeq,
            Space::LexPlane => Descriptor::LexPlane,
            Space::IdentityLine => Descriptor::IdentityLine,
        };
        serde_json::to_value(d).expect("descriptor serializes")
    }

    /// Accepts a bare name (`sparse_seq`), the display form `finite_pointwise(3)`, or a
    /// JSON descriptor.
    pub fn parse_arg(s: &str) -> Result<Space> {
        let t = s.trim();
        if t.starts_with('{') {
            let v: Value =
                serde_json::from_str(t).map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
            return Space::from_descriptor(&v);
        }
        if let Some(dim) = t
            .strip_prefix("finite_pointwise(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let dim = dim
                .trim()
                .parse()
                .map_err(|_| Error::InvalidDescriptor(format!("bad dimension in {t:?}")))?;
            return Space::finite_pointwise(dim);
        }
        Space::from_descriptor(&serde_json::json!({ "space": t }))
    }

    /// True when the componentwise rational order makes the space Archimedean.
    pub fn is_archimedean(&self) -> bool {
        !matches!(self, Space::LexPlane)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::FinitePointwise(n) => write!(f, "finite_pointwise({n})"),
            other => f.write_str(other.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn descriptors() {
        assert_eq!(
            Space::from_descriptor(&json!({"space":"finite_pointwise","dim":3})).unwrap(),
            Space::FinitePointwise(3)
        );
        assert_eq!(Space::parse_arg("lex_plane").unwrap(), Space::LexPlane);
        assert!(Space::from_descriptor(&json!({"space":"finite_pointwise","dim":0})).is_err());
        assert!(Space::from_descriptor(&json!({"space":"finite_pointwise"})).is_err());
        assert!(Space::parse_arg("hilbert").is_err());
        for s in [
            Space::SparseSeq,
            Space::FinitePointwise(2),
            Space::IdentityLine,
        ] {
            assert_eq!(Space::from_descriptor(&s.to_descriptor()).unwrap(), s);
        }
    }
}
