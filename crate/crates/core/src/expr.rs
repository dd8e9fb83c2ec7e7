//! Polynomial expression parser.
//!
//! Grammar (whitespace ignored between tokens):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary | "/" number)*
//! unary  := "-" unary | "+" unary | power
//! power  := atom ("^" number)?
//! atom   := number | ident | "(" expr ")"
//! ```
//!
//! Exactly one variable name may occur. Division is only allowed by a
//! number literal, so `p/q` rationals and `t^2/2` both parse; implicit
//! multiplication (`2x`) is rejected.

use crate::algebra::{Rational, UniPoly};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Largest accepted exponent; keeps hostile input from exhausting memory.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    Expected(&'static str),
    UnknownVariable { found: String, expected: String },
    NonIntegerExponent,
    ExponentTooLarge,
    DivisionByZero,
    DivisionByNonConstant,
}

/// Syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: ", self.position)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::UnknownVariable { found, expected } => {
                write!(f, "unknown variable {found:?} (polynomial is in {expected:?})")
            }
            ParseErrorKind::NonIntegerExponent => {
                write!(f, "exponent must be a non-negative integer")
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent exceeds {MAX_EXPONENT}")
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::DivisionByNonConstant => {
                write!(f, "only division by a number literal is allowed")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed polynomial together with its source text and variable name.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: UniPoly,
    /// `None` when the expression is a constant.
    pub var: Option<String>,
}

impl PolyExpr {
    pub fn parse(text: &str, var: Option<&str>) -> Result<Self, ParseError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            var: var.map(str::to_string),
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error(ParseErrorKind::UnexpectedChar(p.peek_char())));
        }
        Ok(PolyExpr {
            source: text.to_string(),
            poly,
            var: p.var,
        })
    }
}

/// Parses a polynomial in one variable. With `var = None` the variable
/// name is inferred from the first identifier.
pub fn parse_poly(text: &str, var: Option<&str>) -> Result<UniPoly, ParseError> {
    PolyExpr::parse(text, var).map(|e| e.poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: Option<String>,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn expr(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.error(ParseErrorKind::DivisionByNonConstant));
                    }
                    let d = self.number()?;
                    if d.is_zero() {
                        return Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    acc = acc.scale(&Rational::from_integer(d).recip());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    return Err(self.error(ParseErrorKind::Expected("an operator")));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<UniPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<UniPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error(ParseErrorKind::NonIntegerExponent));
        }
        let e = self.number()?;
        if matches!(self.src.get(self.pos), Some(b'.')) {
            return Err(self.error(ParseErrorKind::NonIntegerExponent));
        }
        let e = match e.to_usize() {
            Some(e) if e <= MAX_EXPONENT => e,
            _ => {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::ExponentTooLarge,
                })
            }
        };
        if self.peek() == Some(b'^') {
            return Err(self.error(ParseErrorKind::Expected("parentheses around a power")));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<UniPoly, ParseError> {
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(match self.peek() {
                        None => self.error(ParseErrorKind::UnexpectedEnd),
                        Some(_) => self.error(ParseErrorKind::Expected("')'")),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                if matches!(self.src.get(self.pos), Some(b'.')) {
                    return Err(self.error(ParseErrorKind::UnexpectedChar('.')));
                }
                Ok(UniPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match &self.var {
                    Some(v) if v != name => Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::UnknownVariable {
                            found: name.to_string(),
                            expected: v.clone(),
                        },
                    }),
                    Some(_) => Ok(UniPoly::x()),
                    None => {
                        self.var = Some(name.to_string());
                        Ok(UniPoly::x())
                    }
                }
            }
            Some(_) => Err(self.error(ParseErrorKind::UnexpectedChar(self.peek_char()))),
        }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(ParseErrorKind::Expected("a number")));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn parses_documented_examples() {
        assert_eq!(
            parse_poly("x^4 + 2*x^2 + 1", None).unwrap(),
            UniPoly::from_ints(&[1, 0, 2, 0, 1])
        );
        assert_eq!(
            parse_poly("4*y^3 - 3*y", None).unwrap(),
            UniPoly::from_ints(&[0, -3, 0, 4])
        );
        let half = parse_poly("y^2 + 1/2", None).unwrap();
        assert_eq!(half.coeff(0), rat(1, 2));
        assert_eq!(parse_poly("t^2/2", Some("t")).unwrap().coeff(2), rat(1, 2));
        assert_eq!(
            parse_poly("-(x+1)^2", None).unwrap(),
            UniPoly::from_ints(&[-1, -2, -1])
        );
        assert_eq!(parse_poly("-x^2", None).unwrap(), UniPoly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("7", None).unwrap(), UniPoly::from_ints(&[7]));
    }

    #[test]
    fn rejects_with_positions() {
        let e = parse_poly("x + y", None).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(matches!(e.kind, ParseErrorKind::UnknownVariable { .. }));
        let e = parse_poly("x^1.5", None).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonIntegerExponent);
        let e = parse_poly("x^-1", None).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonIntegerExponent);
        let e = parse_poly("2x", None).unwrap_err();
        assert_eq!(e.position, 1);
        assert!(parse_poly("x +", None).is_err());
        assert!(parse_poly("(x", None).is_err());
        assert!(parse_poly("x / 0", None).is_err());
        assert!(parse_poly("1 / x", None).is_err());
        assert!(parse_poly("x^2^3", None).is_err());
        assert!(parse_poly("x # 2", None).is_err());
        assert!(parse_poly("t", Some("x")).is_err());
        assert!(parse_poly("", None).is_err());
    }

    #[test]
    fn round_trips_display() {
        for text in ["4*y^3 - 3*y", "y^2 + 1/2", "-x^5 + 3/7*x - 2", "0"] {
            let p = parse_poly(text, None).unwrap();
            let again = parse_poly(&p.display("y").to_string(), Some("y")).unwrap();
            assert_eq!(p, again, "{text}");
        }
    }
}
