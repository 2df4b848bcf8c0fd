//! Lexer and recursive-descent parser.
//!
//! Precedence, loosest to tightest: `\/`, `/\`, `+` and `-`, `c *`, then atoms. All binary
//! operators associate to the left, so `x + y /\ z` is `(x + y) /\ z` and
//! `a /\ b \/ c` is `(a /\ b) \/ c`.

use std::fmt;

use super::term::{Assertion, Relation, Term};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(Rational),
    /// `1` spelled bare, which is the unit rather than a literal.
    One,
    Plus,
    Minus,
    Star,
    Join,
    Meet,
    Bar,
    LParen,
    RParen,
    Leq,
    Geq,
    EqEq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Number(r) => format!("number {r}"),
            Tok::One => "\"1\"".into(),
            Tok::Plus => "\"+\"".into(),
            Tok::Minus => "\"-\"".into(),
            Tok::Star => "\"*\"".into(),
            Tok::Join => "\"\\/\"".into(),
            Tok::Meet => "\"/\\\"".into(),
            Tok::Bar => "\"|\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Leq => "\"<=\"".into(),
            Tok::Geq => "\">=\"".into(),
            Tok::EqEq => "\"==\"".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |at: usize, expected: &[&str], found: String| ParseError {
        offset: at,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found,
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let two = |next: u8| bytes.get(i + 1) == Some(&next);
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'|' => Tok::Bar,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'\\' if two(b'/') => {
                i += 1;
                Tok::Join
            }
            b'/' if two(b'\\') => {
                i += 1;
                Tok::Meet
            }
            b'<' if two(b'=') => {
                i += 1;
                Tok::Leq
            }
            b'>' if two(b'=') => {
                i += 1;
                Tok::Geq
            }
            b'=' if two(b'=') => {
                i += 1;
                Tok::EqEq
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                // `p/q` is one token; `/\` after a number is a meet.
                if bytes.get(i + 1) == Some(&b'/')
                    && bytes.get(i + 2).is_some_and(u8::is_ascii_digit)
                {
                    i += 2;
                    while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                }
                if bytes.get(i + 1) == Some(&b'.') {
                    return Err(err(i + 1, &["p/q rational (no decimals)"], "\".\"".into()));
                }
                let text = &input[start..=i];
                if text == "1" {
                    Tok::One
                } else {
                    let r: Rational = text
                        .parse()
                        .map_err(|_| err(start, &["nonzero denominator"], format!("{text:?}")))?;
                    Tok::Number(r)
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Ident(input[start..=i].to_string())
            }
            _ => {
                let ch = input[start..].chars().next().expect("in bounds");
                return Err(err(
                    start,
                    &["an operator, operand or parenthesis"],
                    format!("{ch:?}"),
                ));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::Eof, input.len()));
    Ok(out)
}

const FUNCTIONS: [&str; 3] = ["pos", "neg", "tr"];
const RESERVED: [&str; 4] = ["pos", "neg", "tr", "perp"];

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut t = self.meet()?;
        while *self.peek() == Tok::Join {
            self.bump();
            t = Term::Join(Box::new(t), Box::new(self.meet()?));
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut t = self.sum()?;
        while *self.peek() == Tok::Meet {
            self.bump();
            t = Term::Meet(Box::new(t), Box::new(self.sum()?));
        }
        Ok(t)
    }

    fn sum(&mut self) -> Result<Term, ParseError> {
        let mut t = self.prod()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    t = Term::Add(Box::new(t), Box::new(self.prod()?));
                }
                Tok::Minus => {
                    self.bump();
                    t = Term::Sub(Box::new(t), Box::new(self.prod()?));
                }
                _ => return Ok(t),
            }
        }
    }

    /// A rational literal (optionally negative) in operand position, without consuming it.
    fn literal_ahead(&self) -> Option<(Rational, usize)> {
        match (self.peek(), self.peek_at(1)) {
            (Tok::Number(r), _) => Some((r.clone(), 1)),
            (Tok::One, _) => Some((Rational::one(), 1)),
            (Tok::Minus, Tok::Number(r)) => Some((-r.clone(), 2)),
            (Tok::Minus, Tok::One) => Some((-Rational::one(), 2)),
            _ => None,
        }
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        if let Some((c, len)) = self.literal_ahead() {
            if *self.peek_at(len) == Tok::Star {
                self.pos += len + 1;
                return Ok(Term::Scale(c, Box::new(self.prod()?)));
            }
        }
        self.unary()
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        const OPERAND: [&str; 8] = [
            "\"|\"",
            "\"(\"",
            "pos(",
            "neg(",
            "tr(",
            "a variable",
            "a rational",
            "\"1\"",
        ];
        if *self.peek() == Tok::One {
            self.bump();
            return Ok(Term::One);
        }
        if let Some((c, len)) = self.literal_ahead() {
            self.pos += len;
            return Ok(Term::Lit(c));
        }
        match self.peek().clone() {
            Tok::Bar => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::Bar, "\"|\"")?;
                Ok(Term::Abs(Box::new(inner)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "\")\"")?;
                Ok(inner)
            }
            Tok::Ident(name) if FUNCTIONS.contains(&name.as_str()) => {
                self.bump();
                self.expect(Tok::LParen, "\"(\"")?;
                let inner = Box::new(self.expr()?);
                self.expect(Tok::RParen, "\")\"")?;
                Ok(match name.as_str() {
                    "pos" => Term::Pos(inner),
                    "neg" => Term::Neg(inner),
                    _ => Term::Trunc(inner),
                })
            }
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                self.bump();
                Ok(Term::Var(name))
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

fn relation(tok: &Tok) -> Option<Relation> {
    match tok {
        Tok::Leq => Some(Relation::Leq),
        Tok::Geq => Some(Relation::Geq),
        Tok::EqEq => Some(Relation::Eq),
        Tok::Ident(s) if s == "perp" => Some(Relation::Disjoint),
        _ => None,
    }
}

pub fn parse(input: &str) -> Result<Term, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
    };
    let t = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["an operator", "end of input"]));
    }
    Ok(t)
}

/// `lhs REL rhs` with `REL` one of `<=`, `==`, `>=`, `perp`.
pub fn parse_assertion(input: &str) -> Result<Assertion, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
    };
    let lhs = p.expr()?;
    let relation =
        relation(p.peek()).ok_or_else(|| p.error(&["\"<=\"", "\"==\"", "\">=\"", "\"perp\""]))?;
    p.bump();
    let rhs = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["an operator", "end of input"]));
    }
    Ok(Assertion { lhs, relation, rhs })
}
