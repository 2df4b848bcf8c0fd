use std::collections::BTreeSet;
use std::fmt;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// A rational constant; in a unitization `c` means `c·1`.
    Lit(Rational),
    One,
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Scale(Rational, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Abs(Box<Term>),
    Pos(Box<Term>),
    Neg(Box<Term>),
    Trunc(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Lit(_) | Term::One => {}
            Term::Add(a, b) | Term::Sub(a, b) | Term::Join(a, b) | Term::Meet(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Scale(_, a) | Term::Abs(a) | Term::Pos(a) | Term::Neg(a) | Term::Trunc(a) => {
                a.collect_vars(out)
            }
        }
    }

    /// Whether the term mentions a nonzero constant, which only exists in a unitization.
    pub fn needs_unit(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Lit(c) => !c.is_zero(),
            Term::One => true,
            Term::Add(a, b) | Term::Sub(a, b) | Term::Join(a, b) | Term::Meet(a, b) => {
                a.needs_unit() || b.needs_unit()
            }
            Term::Scale(_, a) | Term::Abs(a) | Term::Pos(a) | Term::Neg(a) | Term::Trunc(a) => {
                a.needs_unit()
            }
        }
    }

    /// Canonical, fully parenthesized form; parsing it gives back the same term.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Lit(c) => write!(f, "{c}"),
            Term::One => f.write_str("1"),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Sub(a, b) => write!(f, "({a} - {b})"),
            Term::Scale(c, a) => write!(f, "({c} * {a})"),
            Term::Join(a, b) => write!(f, "({a} \\/ {b})"),
            Term::Meet(a, b) => write!(f, "({a} /\\ {b})"),
            Term::Abs(a) => write!(f, "|{a}|"),
            Term::Pos(a) => write!(f, "pos({a})"),
            Term::Neg(a) => write!(f, "neg({a})"),
            Term::Trunc(a) => write!(f, "tr({a})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Leq,
    Eq,
    Geq,
    Disjoint,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Leq => "<=",
            Relation::Eq => "==",
            Relation::Geq => ">=",
            Relation::Disjoint => "perp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub lhs: Term,
    pub relation: Relation,
    pub rhs: Term,
}

impl Assertion {
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = self.lhs.vars();
        self.rhs.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.relation.symbol(), self.rhs)
    }
}
