//! Text form of factored polynomials, e.g. `(t+3/5)^2*(t-1/3)*t`.
//!
//! ```text
//! Expr   := Term ('*' Term)*
//! Term   := Factor ('^' uint)?
//! Factor := '(' 't' (('+'|'-') Rat)? ')' | 't' | Rat
//! Rat    := '-'? uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Offsets in errors count characters of the input
//! with whitespace removed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Factored, Rational};
use crate::error::{Error, Result};

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = self.eat('-');
        let num = self.uint()?;
        let den = if self.eat('/') {
            let at = self.pos;
            let d = self.uint()?;
            if d.is_zero() {
                return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
            }
            d
        } else {
            BigInt::one()
        };
        let r = Rational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    /// `Ok(Some(root))` for a linear factor, `Ok(None)` for a constant.
    fn factor(&mut self) -> Result<(Option<Rational>, Rational)> {
        if self.eat('t') {
            return Ok((Some(Rational::zero()), Rational::one()));
        }
        if self.eat('(') {
            if !self.eat('t') {
                return self.err("expected 't' after '('");
            }
            let root = if self.eat('+') {
                -self.rational()?
            } else if self.eat('-') {
                self.rational()?
            } else {
                Rational::zero()
            };
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            return Ok((Some(root), Rational::one()));
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '-') {
            return Ok((None, self.rational()?));
        }
        match self.peek() {
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.uint()?;
        u32::try_from(e).map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })
    }
}

/// Parses the factored text form. Repeated roots are kept as written.
pub fn parse_factored(text: &str) -> Result<Factored> {
    let chars: Vec<char> =
        text.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
    let mut p = Parser { chars, pos: 0 };
    let mut leading = Rational::one();
    let mut factors = Vec::new();
    loop {
        let (root, constant) = p.factor()?;
        let e = p.exponent()?;
        match root {
            Some(r) if e > 0 => factors.push((r, e)),
            Some(_) => {}
            None => leading *= super::pow(&constant, e),
        }
        if p.pos == p.chars.len() {
            break;
        }
        if !p.eat('*') {
            return p.err("expected '*'");
        }
    }
    Ok(Factored::new(leading, factors))
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.leading.is_one() || self.factors.is_empty() {
            parts.push(self.leading.to_string());
        }
        for (r, m) in &self.factors {
            let base = if r.is_zero() {
                "t".to_string()
            } else if r.is_negative() {
                format!("(t+{})", -r)
            } else {
                format!("(t-{r})")
            };
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        f.write_str(&parts.join("*"))
    }
}

impl core::str::FromStr for Factored {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_factored(s)
    }
}
