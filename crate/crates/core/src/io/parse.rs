//! Polynomial text formats.
//!
//! * `expr`: expressions in `x` with `+ - * ^`, parentheses and integer
//!   literals, e.g. `2*x^3 - (x - 1)^2`.
//! * `coeffs`: integer coefficients from the constant term upward, separated
//!   by whitespace or commas.
//! * `sparse`: `exponent:coefficient` pairs, e.g. `100:1 0:-1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Expr,
    Coeffs,
    Sparse,
}

impl FromStr for InputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expr" => Ok(InputFormat::Expr),
            "coeffs" => Ok(InputFormat::Coeffs),
            "sparse" => Ok(InputFormat::Sparse),
            _ => Err(Error::InvalidSpec(format!("unknown input format {s:?}"))),
        }
    }
}

pub fn parse_polynomial(text: &str, format: InputFormat) -> Result<IntPoly> {
    match format {
        InputFormat::Expr => parse_expression(text),
        InputFormat::Coeffs => parse_coeffs(text),
        InputFormat::Sparse => parse_sparse(text),
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Splits on whitespace and commas, keeping byte offsets for errors.
fn fields(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(move |s| (s.as_ptr() as usize - text.as_ptr() as usize, s))
}

fn int_at(pos: usize, s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| perr(pos, format!("expected an integer, found {s:?}")))
}

pub fn parse_coeffs(text: &str) -> Result<IntPoly> {
    let coeffs = fields(text)
        .map(|(pos, s)| int_at(pos, s))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(perr(0, "no coefficients"));
    }
    Ok(IntPoly::new(coeffs))
}

pub fn parse_sparse(text: &str) -> Result<IntPoly> {
    let mut terms = Vec::new();
    for (pos, field) in fields(text) {
        let (e, c) = field
            .split_once(':')
            .ok_or_else(|| perr(pos, format!("expected exponent:coefficient, found {field:?}")))?;
        let exp = e
            .parse::<usize>()
            .map_err(|_| perr(pos, format!("bad exponent {e:?}")))?;
        let coeff = int_at(pos + e.len() + 1, c)?;
        terms.push((exp, coeff));
    }
    if terms.is_empty() {
        return Err(perr(0, "no terms"));
    }
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::new(coeffs))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b'x' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(perr(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<IntPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.unary()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | product
    fn unary(&mut self) -> Result<IntPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.product()
    }

    // product := power ('*' power)*
    fn product(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = if self.peek() == Some(&Tok::Minus) {
                self.unary()?
            } else {
                self.power()?
            };
            acc = &acc * &rhs;
        }
        if matches!(self.peek(), Some(Tok::X | Tok::Int(_) | Tok::LParen)) {
            return Err(perr(self.offset(), "implicit multiplication; use '*'"));
        }
        Ok(acc)
    }

    // power := atom ('^' int)?   (right-assoc via recursion on the exponent)
    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let exp = self.exponent()?;
        let e = u32::try_from(&exp).map_err(|_| perr(at, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn exponent(&mut self) -> Result<BigInt> {
        let at = self.offset();
        let Some(Tok::Int(v)) = self.bump() else {
            return Err(perr(at, "exponent must be a nonnegative integer literal"));
        };
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let inner_at = self.offset();
            let inner = self.exponent()?;
            let e = u32::try_from(&inner).map_err(|_| perr(inner_at, "exponent too large"))?;
            return Ok(num_traits::pow(v, e as usize));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<IntPoly> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(IntPoly::constant(v)),
            Some(Tok::X) => Ok(IntPoly::x()),
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                let close = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(perr(close, "expected ')'")),
                }
            }
            Some(t) => Err(perr(at, format!("unexpected {}", describe(&t)))),
            None => Err(perr(at, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::X => "'x'",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
    }
}

/// Parses an integer polynomial expression in `x`.
pub fn parse_expression(text: &str) -> Result<IntPoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(perr(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let poly = p.sum()?;
    if p.pos < p.toks.len() {
        let at = p.offset();
        let t = p.bump().expect("token present");
        return Err(perr(at, format!("unexpected {}", describe(&t))));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_expression("x^2 - 2").unwrap(), p(&[-2, 0, 1]));
        assert_eq!(parse_expression("(x-1)*(x+1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_expression("-x^2").unwrap(), p(&[0, 0, -1]));
        assert_eq!(parse_expression("x^2^2").unwrap(), p(&[0, 0, 0, 0, 1]));
        assert_eq!(parse_expression("3*-x").unwrap(), p(&[0, -3]));
        assert_eq!(parse_expression(" 7 ").unwrap(), p(&[7]));
        assert_eq!(parse_expression("x - -1").unwrap(), p(&[1, 1]));
    }

    #[test]
    fn expression_errors_carry_positions() {
        let pos = |s: &str| match parse_expression(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s:?} gave {other:?}"),
        };
        assert_eq!(pos("2x"), 1);
        assert_eq!(pos("x^"), 2);
        assert_eq!(pos("x^-1"), 2);
        assert_eq!(pos("(x+1"), 4);
        assert_eq!(pos("y"), 0);
        assert_eq!(pos("x +"), 3);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("x)"), 1);
    }

    #[test]
    fn coefficient_lists() {
        assert_eq!(parse_coeffs("-2, 0 1").unwrap(), p(&[-2, 0, 1]));
        assert_eq!(parse_coeffs("0 0").unwrap(), IntPoly::zero());
        assert!(matches!(parse_coeffs("1 a"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_coeffs("  ").is_err());
    }

    #[test]
    fn sparse_terms() {
        assert_eq!(parse_sparse("3:1 0:-1").unwrap(), p(&[-1, 0, 0, 1]));
        assert_eq!(parse_sparse("1:2,1:3").unwrap(), p(&[0, 5]));
        assert!(matches!(parse_sparse("2:x"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_sparse("5").is_err());
    }
}
