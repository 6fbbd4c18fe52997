//! A small language for naming curves, and a parser for polynomials in `t`.
//!
//! ```text
//! expr  := atom | "T(" expr ")" power? "(" expr ")" | "psi(" expr ")"
//!        | "phi[" int "](" expr ")"
//! atom  := ("a" | "b") int | "c" | "B[" int "," int "]"
//! power := "^" "-"? int
//! ```
//!
//! Whitespace between tokens is ignored.

use std::fmt;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::linalg::LaurentPoly;
use crate::mapping_class::StandardCurveSystem;
use crate::scalar::Scalar;

/// Largest twist count accepted in an expression; keeps word lengths sane.
pub const MAX_TWISTS: u64 = 100_000;

/// Deepest nesting of parentheses the parser follows.
pub const MAX_DEPTH: usize = 200;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Expr {
    Alpha(u32),
    Beta(u32),
    C,
    /// `β_{g,n}`.
    BetaGn { genus: u32, n: u64 },
    /// `t_about^power(target)`.
    Twist {
        about: Box<Expr>,
        power: i64,
        target: Box<Expr>,
    },
    Psi(Box<Expr>),
    Phi { n: u64, arg: Box<Expr> },
}

impl Expr {
    pub fn eval(&self, sys: &StandardCurveSystem) -> Result<Curve> {
        Ok(match self {
            Expr::Alpha(i) => sys.alpha(*i).clone(),
            Expr::Beta(i) => sys.beta(*i).clone(),
            Expr::C => sys.c().clone(),
            Expr::BetaGn { n, .. } => sys.beta_gn(*n as i64)?,
            Expr::Twist {
                about,
                power,
                target,
            } => target.eval(sys)?.dehn_twist(&about.eval(sys)?, *power)?,
            Expr::Psi(arg) => sys.psi().apply(&arg.eval(sys)?)?,
            Expr::Phi { n, arg } => sys.phi(*n as i64)?.apply(&arg.eval(sys)?)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Alpha(i) => write!(f, "a{i}"),
            Expr::Beta(i) => write!(f, "b{i}"),
            Expr::C => write!(f, "c"),
            Expr::BetaGn { genus, n } => write!(f, "B[{genus},{n}]"),
            Expr::Twist {
                about,
                power,
                target,
            } => {
                write!(f, "T({about})")?;
                if *power != 1 {
                    write!(f, "^{power}")?;
                }
                write!(f, "({target})")
            }
            Expr::Psi(arg) => write!(f, "psi({arg})"),
            Expr::Phi { n, arg } => write!(f, "phi[{n}]({arg})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(String),
    Sym(char),
    Other(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "{w:?}"),
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Sym(c) | Tok::Other(c) => write!(f, "'{}'", c.escape_default()),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut it = input.char_indices().peekable();
    while let Some(&(i, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_ascii_alphabetic()) {
                s.push(c);
                it.next();
            }
            out.push((i, Tok::Word(s)));
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_ascii_digit()) {
                s.push(c);
                it.next();
            }
            out.push((i, Tok::Int(s)));
        } else {
            it.next();
            let t = if "()[],^-+*".contains(ch) {
                Tok::Sym(ch)
            } else {
                Tok::Other(ch)
            };
            out.push((i, t));
        }
    }
    out.push((input.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    genus: u32,
    /// Offsets of currently open parentheses and brackets.
    open: Vec<usize>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn error(&self, expected: &[&str]) -> Error {
        let closing = expected.iter().any(|e| *e == "')'" || *e == "']'");
        Error::SyntaxError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
            unclosed: if closing { self.open.last().copied() } else { None },
        }
    }

    fn sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            match c {
                '(' | '[' if self.open.len() >= MAX_DEPTH => {
                    return Err(Error::IndexOutOfRange {
                        what: "nesting depth".into(),
                        offset: self.offset(),
                        range: format!("0..={MAX_DEPTH}"),
                    })
                }
                '(' | '[' => self.open.push(self.offset()),
                ')' | ']' => {
                    self.open.pop();
                }
                _ => {}
            }
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    /// An unsigned integer literal in `lo..=hi`.
    fn int(&mut self, what: &str, lo: u64, hi: u64) -> Result<u64> {
        let Tok::Int(s) = self.peek().clone() else {
            return Err(self.error(&["integer"]));
        };
        let at = self.offset();
        match s.parse::<u64>() {
            Ok(v) if (lo..=hi).contains(&v) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(Error::IndexOutOfRange {
                what: what.to_string(),
                offset: at,
                range: format!("{lo}..={hi}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let word = match self.peek() {
            Tok::Word(w) => w.clone(),
            _ => return Err(self.error(&["a", "b", "c", "B", "T", "psi", "phi"])),
        };
        let g = self.genus as u64;
        match word.as_str() {
            "a" | "b" => {
                self.pos += 1;
                let i = self.int("curve index", 1, g)? as u32;
                Ok(if word == "a" {
                    Expr::Alpha(i)
                } else {
                    Expr::Beta(i)
                })
            }
            "c" => {
                self.pos += 1;
                Ok(Expr::C)
            }
            "B" => {
                self.pos += 1;
                self.sym('[')?;
                let genus = self.int("genus of B[g,n]", g, g)? as u32;
                self.sym(',')?;
                let n = self.int("twist count", 0, MAX_TWISTS)?;
                self.sym(']')?;
                Ok(Expr::BetaGn { genus, n })
            }
            "T" => {
                self.pos += 1;
                self.sym('(')?;
                let about = self.expr()?;
                self.sym(')')?;
                let mut power = 1i64;
                if *self.peek() == Tok::Sym('^') {
                    self.pos += 1;
                    let neg = *self.peek() == Tok::Sym('-');
                    if neg {
                        self.pos += 1;
                    }
                    let v = self.int("twist power", 0, MAX_TWISTS)? as i64;
                    power = if neg { -v } else { v };
                }
                self.sym('(')?;
                let target = self.expr()?;
                self.sym(')')?;
                Ok(Expr::Twist {
                    about: Box::new(about),
                    power,
                    target: Box::new(target),
                })
            }
            "psi" => {
                self.pos += 1;
                self.sym('(')?;
                let arg = self.expr()?;
                self.sym(')')?;
                Ok(Expr::Psi(Box::new(arg)))
            }
            "phi" => {
                self.pos += 1;
                self.sym('[')?;
                let n = self.int("twist count", 0, MAX_TWISTS)?;
                self.sym(']')?;
                self.sym('(')?;
                let arg = self.expr()?;
                self.sym(')')?;
                Ok(Expr::Phi {
                    n,
                    arg: Box::new(arg),
                })
            }
            _ => Err(self.error(&["a", "b", "c", "B", "T", "psi", "phi"])),
        }
    }
}

/// Parses a curve expression on the genus-`genus` surface.
pub fn parse_expression(input: &str, genus: u32) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(input),
        pos: 0,
        genus,
        open: Vec::new(),
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["end of input"]));
    }
    Ok(e)
}

/// Parses and evaluates in one go.
pub fn eval_expression(input: &str, sys: &StandardCurveSystem) -> Result<Curve> {
    parse_expression(input, sys.genus())?.eval(sys)
}

/// Parses a signed sum of monomials in `t`, such as `t^4 - t^3 + 1` or
/// `3 - 2*t^-1`.
pub fn parse_polynomial<T: Scalar>(input: &str) -> Result<LaurentPoly<T>> {
    let toks = lex(input);
    let mut pos = 0;
    let err = |pos: usize, expected: &[&str]| Error::SyntaxError {
        offset: toks[pos].0,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: toks[pos].1.to_string(),
        unclosed: None,
    };
    let int = |s: &str, at: usize| {
        T::from_str_radix(s, 10).map_err(|_| Error::IndexOutOfRange {
            what: "coefficient".into(),
            offset: at,
            range: "the scalar type".into(),
        })
    };
    let mut terms: Vec<(i64, T)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = T::one();
        match toks[pos].1 {
            Tok::Sym('+') => pos += 1,
            Tok::Sym('-') => {
                sign = -sign;
                pos += 1;
            }
            Tok::End if !first => break,
            _ if !first => return Err(err(pos, &["'+'", "'-'", "end of input"])),
            _ => {}
        }
        first = false;
        let mut coeff = None;
        if let Tok::Int(s) = &toks[pos].1 {
            coeff = Some(int(s, toks[pos].0)?);
            pos += 1;
            if toks[pos].1 == Tok::Sym('*') {
                pos += 1;
                if toks[pos].1 != Tok::Word("t".into()) {
                    return Err(err(pos, &["t"]));
                }
            }
        }
        let mut exp = 0i64;
        if toks[pos].1 == Tok::Word("t".into()) {
            pos += 1;
            exp = 1;
            if toks[pos].1 == Tok::Sym('^') {
                pos += 1;
                let neg = toks[pos].1 == Tok::Sym('-');
                if neg {
                    pos += 1;
                }
                let Tok::Int(s) = &toks[pos].1 else {
                    return Err(err(pos, &["integer"]));
                };
                let v: i64 = s.parse().map_err(|_| Error::IndexOutOfRange {
                    what: "exponent".into(),
                    offset: toks[pos].0,
                    range: "64-bit integers".into(),
                })?;
                exp = if neg { -v } else { v };
                pos += 1;
            }
        } else if coeff.is_none() {
            return Err(err(pos, &["integer", "t"]));
        }
        terms.push((exp, sign * coeff.unwrap_or_else(T::one)));
    }
    Ok(LaurentPoly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let e = parse_expression("T(c)^3(b2)", 2).unwrap();
        assert_eq!(e.to_string(), "T(c)^3(b2)");
        let e = parse_expression(" psi ( B[2, 4] ) ", 2).unwrap();
        assert_eq!(e.to_string(), "psi(B[2,4])");
        let e = parse_expression("phi[1](T(a1)^-2(b1))", 3).unwrap();
        assert_eq!(e.to_string(), "phi[1](T(a1)^-2(b1))");
    }

    #[test]
    fn unmatched_paren() {
        match parse_expression("T(c^3(b2)", 2) {
            Err(Error::SyntaxError {
                offset, unclosed, ..
            }) => {
                assert_eq!(offset, 3);
                assert_eq!(unclosed, Some(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn index_out_of_range() {
        let e = parse_expression("a5", 3).unwrap_err();
        assert_eq!(e.name(), "IndexOutOfRange");
        let e = parse_expression("B[3,1]", 2).unwrap_err();
        assert_eq!(e.name(), "IndexOutOfRange");
    }

    #[test]
    fn polynomials() {
        let p: LaurentPoly<i64> = parse_polynomial("t^4 - t^3 + t^2 - t + 1").unwrap();
        assert_eq!(p, LaurentPoly::new(0, vec![1, -1, 1, -1, 1]));
        assert_eq!(p.to_string(), "t^4 - t^3 + t^2 - t + 1");
        let q: LaurentPoly<i64> = parse_polynomial("3 - 2*t^-1").unwrap();
        assert_eq!(q, LaurentPoly::new(-1, vec![-2, 3]));
        let r: LaurentPoly<i64> = parse_polynomial("-2t + t").unwrap();
        assert_eq!(r, LaurentPoly::monomial(-1, 1));
        for bad in ["", "t^", "t t", "1 +", "x"] {
            assert_eq!(parse_polynomial::<i64>(bad).unwrap_err().name(), "SyntaxError", "{bad}");
        }
    }
}
