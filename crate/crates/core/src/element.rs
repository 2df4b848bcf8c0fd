//! Elements of the concrete spaces and the primitive lattice operations on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::Space;

/// A vector-lattice element. The variant determines its [`Space`]; for `Dense` the
/// dimension is the tuple length.
///
/// `Sparse` never stores a zero value, so derived equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Dense(Vec<Rational>),
    Sparse(BTreeMap<u64, Rational>),
    Lex(Rational, Rational),
    Line(Rational),
}

impl Element {
    pub fn zero(space: Space) -> Element {
        match space {
            Space::FinitePointwise(n) => Element::Dense(vec![Rational::zero(); n]),
            Space::SparseSeq => Element::Sparse(BTreeMap::new()),
            Space::LexPlane => Element::Lex(Rational::zero(), Rational::zero()),
            Space::IdentityLine => Element::Line(Rational::zero()),
        }
    }

    pub fn dense(coords: Vec<Rational>) -> Element {
        assert!(
            !coords.is_empty(),
            "dense elements need at least one coordinate"
        );
        Element::Dense(coords)
    }

    /// Sparse sequence from `(index, value)` pairs; indices start at 1, zeros are dropped
    /// and repeated indices are summed.
    pub fn try_sparse<I>(entries: I) -> Result<Element>
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut map: BTreeMap<u64, Rational> = BTreeMap::new();
        for (k, v) in entries {
            if k == 0 {
                return Err(Error::InvalidDescriptor(
                    "sparse sequence indices start at 1".into(),
                ));
            }
            let slot = map.entry(k).or_insert_with(Rational::zero);
            *slot = &*slot + &v;
        }
        map.retain(|_, v| !v.is_zero());
        Ok(Element::Sparse(map))
    }

    pub fn sparse<I>(entries: I) -> Element
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        Element::try_sparse(entries).expect("valid sparse entries")
    }

    pub fn lex(first: Rational, second: Rational) -> Element {
        Element::Lex(first, second)
    }

    pub fn line(value: Rational) -> Element {
        Element::Line(value)
    }

    pub fn space(&self) -> Space {
        match self {
            Element::Dense(v) => Space::FinitePointwise(v.len()),
            Element::Sparse(_) => Space::SparseSeq,
            Element::Lex(..) => Space::LexPlane,
            Element::Line(_) => Space::IdentityLine,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Dense(v) => v.iter().all(Rational::is_zero),
            Element::Sparse(m) => m.is_empty(),
            Element::Lex(a, b) => a.is_zero() && b.is_zero(),
            Element::Line(a) => a.is_zero(),
        }
    }

    fn same_space(&self, other: &Element) -> Result<()> {
        if self.space() == other.space() {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.space(),
                right: other.space(),
            })
        }
    }

    /// Applies `f` coordinate by coordinate. Lex pairs are treated as plain pairs here,
    /// which is right for the vector operations but not for the order.
    fn zip_with(
        &self,
        other: &Element,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Element> {
        self.same_space(other)?;
        Ok(match (self, other) {
            (Element::Dense(a), Element::Dense(b)) => {
                Element::Dense(a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            }
            (Element::Sparse(a), Element::Sparse(b)) => {
                let zero = Rational::zero();
                let keys: std::collections::BTreeSet<u64> =
                    a.keys().chain(b.keys()).copied().collect();
                let mut out = BTreeMap::new();
                for k in keys {
                    let v = f(a.get(&k).unwrap_or(&zero), b.get(&k).unwrap_or(&zero));
                    if !v.is_zero() {
                        out.insert(k, v);
                    }
                }
                Element::Sparse(out)
            }
            (Element::Lex(a1, a2), Element::Lex(b1, b2)) => Element::Lex(f(a1, b1), f(a2, b2)),
            (Element::Line(a), Element::Line(b)) => Element::Line(f(a, b)),
            _ => unreachable!("spaces already checked"),
        })
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Element {
        match self {
            Element::Dense(a) => Element::Dense(a.iter().map(&f).collect()),
            Element::Sparse(a) => Element::Sparse(
                a.iter()
                    .map(|(k, v)| (*k, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            ),
            Element::Lex(a, b) => Element::Lex(f(a), f(b)),
            Element::Line(a) => Element::Line(f(a)),
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(self.space());
        }
        self.map(|x| c * x)
    }

    pub fn negate(&self) -> Element {
        self.map(|x| -x)
    }

    /// Exact order comparison; `None` means incomparable.
    pub fn partial_cmp_lattice(&self, other: &Element) -> Result<Option<Ordering>> {
        self.same_space(other)?;
        if let (Element::Lex(a1, a2), Element::Lex(b1, b2)) = (self, other) {
            return Ok(Some(a1.cmp(b1).then_with(|| a2.cmp(b2))));
        }
        let diff = self.sub(other)?;
        let (mut le, mut ge) = (true, true);
        for c in diff.coords() {
            match c.cmp(&Rational::zero()) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    pub fn leq(&self, other: &Element) -> Result<bool> {
        Ok(matches!(
            self.partial_cmp_lattice(other)?,
            Some(Ordering::Less | Ordering::Equal)
        ))
    }

    /// `self >= 0`.
    pub fn is_positive(&self) -> bool {
        Element::zero(self.space())
            .leq(self)
            .expect("zero lives in the same space")
    }

    /// Stored coordinates (for `Sparse`, only the support).
    fn coords(&self) -> Vec<&Rational> {
        match self {
            Element::Dense(v) => v.iter().collect(),
            Element::Sparse(m) => m.values().collect(),
            Element::Lex(a, b) => vec![a, b],
            Element::Line(a) => vec![a],
        }
    }

    pub fn join(&self, other: &Element) -> Result<Element> {
        if let (Element::Lex(..), Element::Lex(..)) = (self, other) {
            return Ok(if self.leq(other)? {
                other.clone()
            } else {
                self.clone()
            });
        }
        self.zip_with(other, |x, y| x.clone().max(y.clone()))
    }

    pub fn meet(&self, other: &Element) -> Result<Element> {
        if let (Element::Lex(..), Element::Lex(..)) = (self, other) {
            return Ok(if self.leq(other)? {
                self.clone()
            } else {
                other.clone()
            });
        }
        self.zip_with(other, |x, y| x.clone().min(y.clone()))
    }

    pub fn abs(&self) -> Element {
        self.join(&self.negate()).expect("same space")
    }

    /// `a ∨ 0`.
    pub fn pos(&self) -> Element {
        self.join(&Element::zero(self.space())).expect("same space")
    }

    /// `(-a) ∨ 0`, always positive.
    pub fn neg(&self) -> Element {
        self.negate()
            .join(&Element::zero(self.space()))
            .expect("same space")
    }

    /// Value at a 1-based coordinate for pointwise spaces.
    pub fn coord(&self, index: usize) -> Option<Rational> {
        match self {
            Element::Dense(v) => index.checked_sub(1).and_then(|i| v.get(i)).cloned(),
            Element::Sparse(m) => Some(m.get(&(index as u64)).cloned().unwrap_or_default()),
            Element::Line(a) if index == 1 => Some(a.clone()),
            _ => None,
        }
    }

    /// Canonical JSON: dense arrays of `"p/q"`, sparse maps `{"1":"2/3"}`, lex pairs
    /// `["0/1","1/1"]`, and a bare `"p/q"` string for the identity line.
    pub fn to_json(&self) -> Value {
        match self {
            Element::Dense(v) => {
                Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
            }
            Element::Sparse(m) => {
                // serde_json orders keys as strings ("10" before "2"); still canonical.
                let mut out = Map::new();
                for (k, v) in m {
                    out.insert(k.to_string(), Value::String(v.to_string()));
                }
                Value::Object(out)
            }
            Element::Lex(a, b) => Value::Array(vec![
                Value::String(a.to_string()),
                Value::String(b.to_string()),
            ]),
            Element::Line(a) => Value::String(a.to_string()),
        }
    }

    pub fn from_json(space: Space, value: &Value) -> Result<Element> {
        let bad = |what: &str| Error::InvalidDescriptor(format!("{what} for {space}: {value}"));
        let rat = |v: &Value| -> Result<Rational> {
            match v {
                Value::String(s) => s.parse().map_err(|e: crate::rational::ParseRationalError| {
                    Error::InvalidDescriptor(e.to_string())
                }),
                Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap())),
                _ => Err(Error::InvalidDescriptor(format!(
                    "expected a \"p/q\" string, got {v}"
                ))),
            }
        };
        match space {
            Space::FinitePointwise(n) => {
                let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
                if arr.len() != n {
                    return Err(bad("wrong dimension"));
                }
                Ok(Element::Dense(arr.iter().map(rat).collect::<Result<_>>()?))
            }
            Space::SparseSeq => {
                let obj = value
                    .as_object()
                    .ok_or_else(|| bad("expected an index map"))?;
                let mut entries = Vec::with_capacity(obj.len());
                for (k, v) in obj {
                    let idx: u64 = k
                        .parse()
                        .map_err(|_| bad("index keys must be integers >= 1"))?;
                    entries.push((idx, rat(v)?));
                }
                Element::try_sparse(entries)
            }
            Space::LexPlane => match value.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok(Element::Lex(rat(a)?, rat(b)?)),
                _ => Err(bad("expected a pair")),
            },
            Space::IdentityLine => match value {
                Value::Array(a) if a.len() == 1 => Ok(Element::Line(rat(&a[0])?)),
                other => Ok(Element::Line(rat(other)?)),
            },
        }
    }

    /// Componentwise / lexicographic supremum of a finite nonempty set.
    pub fn sup_finite<'a, I>(set: I) -> Result<Element>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut it = set.into_iter();
        let first = it.next().ok_or(Error::EmptySet)?.clone();
        it.try_fold(first, |acc, x| acc.join(x))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
