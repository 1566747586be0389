//! Text form of polynomials.
//!
//! ```text
//! poly   := ['-'] term { ('+'|'-') term } | '0'
//! term   := coeff [ '*' mono ] | mono
//! coeff  := nat [ '/' nat ]
//! mono   := factor { '*' factor }
//! factor := 'z' nat [ '^' nat ]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }

    fn small_nat(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            position: start,
            message: format!("{what} too large"),
        })
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.nat()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.nat()?;
            if den.is_zero() {
                return Err(Error::Parse {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn mono(&mut self, nvars: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; nvars];
        loop {
            if !self.eat(b'z') {
                return self.error("expected a variable z<index>");
            }
            let at = self.pos;
            let idx = self.small_nat("variable index")? as usize;
            if idx >= nvars {
                return Err(Error::Parse {
                    position: at,
                    message: format!("variable index z{idx} out of range for {nvars} variables"),
                });
            }
            let e = if self.eat(b'^') {
                self.small_nat("exponent")?
            } else {
                1
            };
            exps[idx] += e;
            // A '*' only continues the monomial when another factor follows.
            let save = self.pos;
            if self.eat(b'*') {
                if self.peek() == Some(b'z') {
                    continue;
                }
                self.pos = save;
                return self.error("expected a variable after '*'");
            }
            return Ok(Monomial::new(exps));
        }
    }

    fn term(&mut self, nvars: usize) -> Result<(Monomial, Rational)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.eat(b'*') {
                    Ok((self.mono(nvars)?, c))
                } else {
                    Ok((Monomial::one(nvars), c))
                }
            }
            Some(b'z') => Ok((self.mono(nvars)?, Rational::one())),
            Some(_) => self.error("expected a coefficient or variable"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses the text form with variables `z0 .. z{nvars-1}`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = lx.eat(b'-');
    loop {
        let (m, c) = lx.term(nvars)?;
        terms.push((m, if negative { -c } else { c }));
        if lx.eat(b'+') {
            negative = false;
        } else if lx.eat(b'-') {
            negative = true;
        } else {
            break;
        }
    }
    if lx.peek().is_some() {
        return lx.error("unexpected trailing input");
    }
    Polynomial::from_terms(nvars, terms)
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_rational`]; accepts an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let mut lx = Lexer {
        src: body.as_bytes(),
        pos: 0,
    };
    let r = lx.coeff()?;
    if lx.peek().is_some() {
        return lx.error("unexpected trailing input");
    }
    Ok(if neg { -r } else { r })
}

fn format_monomial(m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("z{i}")
            } else {
                format!("z{i}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn print_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            out.push_str(&format_monomial(m));
        }
    }
    out
}
