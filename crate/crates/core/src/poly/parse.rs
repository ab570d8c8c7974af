//! Parser for rational expressions in one variable.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' power)?
//! primary := integer | variable | '(' expr ')'
//! ```
//!
//! Exponents must evaluate to nonnegative integer constants. Positions in
//! errors are 0-based byte offsets.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::polynomial::Polynomial;
use super::rational_function::RationalFunction;
use crate::error::{Error, Result};
use crate::Rational;

/// Parses `text` as a rational function of the single-letter `variable`.
pub fn parse_expression(text: &str, variable: char) -> Result<RationalFunction> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        var: variable,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a rational constant such as `-3/4` or `(1+2)/5`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    // any letter is rejected because no variable is declared
    let f = parse_expression(text, '\0')?;
    f.as_constant().ok_or_else(|| Error::Parse {
        position: 0,
        message: "expected a constant".into(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: char,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).map_err(|_| Error::Parse {
                    position: at,
                    message: "division by the zero polynomial".into(),
                })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let exponent = self.power()?;
        let e = exponent
            .as_constant()
            .filter(|c| c.is_integer() && !c.is_negative())
            .and_then(|c| c.to_integer().to_u32())
            .ok_or(Error::Parse {
                position: at,
                message: "exponent must be a nonnegative integer constant".into(),
            })?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().expect("digit run parses");
                Ok(RationalFunction::constant(Rational::from_integer(n)))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                if b as char == self.var {
                    self.pos += 1;
                    Ok(RationalFunction::from_polynomial(Polynomial::variable()))
                } else {
                    Err(self.error(&format!("unknown identifier '{}'", b as char)))
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
