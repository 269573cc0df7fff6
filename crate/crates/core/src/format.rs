//! Text format for elements.
//!
//! ```text
//! expr   := term (('+'|'-') term)* ;
//! term   := (coeff '*')? basis ;
//! coeff  := decimal integer (any sign; reduced mod 5) ;
//! basis  := 'a[' int ']' | 's[' int ',' uint ']' ;
//! ```
//!
//! Whitespace is ignored between tokens. Two conveniences sit on top of the
//! grammar so that everything [`print_element`] and [`print_signed`] emit
//! parses back: the lone literal `0` denotes the zero element, and the first
//! term may carry a bare sign (`-a[1]`).

use crate::basis::{class_of, BasisSymbol};
use crate::element::Element;
use crate::error::ParseError;
use crate::scalar::Scalar;

/// Parses an element, canonicalizing every symbol. `s[r,0]` parses to zero.
pub fn parse_element(text: &str) -> Result<Element, ParseError> {
    Parser::new(text).expr()
}

/// Canonical rendering: coefficients in `1..=4`, terms in basis order, `0`
/// for the zero element.
pub fn print_element(x: &Element) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (b, c)) in x.terms().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if c != Scalar::ONE {
            out.push_str(&format!("{c}*"));
        }
        out.push_str(&b.to_string());
    }
    out
}

/// Rendering with coefficients in `-2..=2`, so `3` shows as `-2` and `4` as
/// `-1`.
pub fn print_signed(x: &Element) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (b, c)) in x.terms().enumerate() {
        let v = c.signed();
        match (i, v < 0) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if v.abs() != 1 {
            out.push_str(&format!("{}*", v.abs()));
        }
        out.push_str(&b.to_string());
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// An integer literal read digit by digit, so no width limit applies to the
/// residues.
struct IntLit {
    negative: bool,
    digits: String,
    start: usize,
}

impl IntLit {
    fn residue(&self, modulus: u64) -> u64 {
        let r = self
            .digits
            .bytes()
            .fold(0u64, |acc, d| (acc * 10 + u64::from(d - b'0')) % modulus);
        if self.negative {
            (modulus - r) % modulus
        } else {
            r
        }
    }

    fn as_i64(&self) -> Result<i64, ParseError> {
        let text = if self.negative {
            format!("-{}", self.digits)
        } else {
            self.digits.clone()
        };
        text.parse()
            .map_err(|_| ParseError::new(self.start, format!("integer {text} out of range")))
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
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

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected `{}`, found `{}`",
                byte as char, b as char
            ))),
            None => Err(self.error(format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut out = Element::zero();
        if self.lone_zero() {
            return Ok(out);
        }
        let mut sign = Scalar::ONE;
        match self.peek() {
            Some(b'-') if self.bare_sign_follows() => {
                self.pos += 1;
                sign = -Scalar::ONE;
            }
            Some(b'+') if self.bare_sign_follows() => self.pos += 1,
            _ => {}
        }
        self.term(sign, &mut out)?;
        loop {
            let sign = match self.peek() {
                None => return Ok(out),
                Some(b'+') => Scalar::ONE,
                Some(b'-') => -Scalar::ONE,
                Some(b) => {
                    return Err(self.error(format!("expected `+` or `-`, found `{}`", b as char)))
                }
            };
            self.pos += 1;
            self.term(sign, &mut out)?;
        }
    }

    fn lone_zero(&self) -> bool {
        std::str::from_utf8(self.src).is_ok_and(|s| s.trim() == "0")
    }

    /// A sign directly followed (modulo whitespace) by a basis letter.
    fn bare_sign_follows(&self) -> bool {
        self.src[self.pos + 1..]
            .iter()
            .find(|b| !b.is_ascii_whitespace())
            .is_some_and(|&b| b == b'a' || b == b's')
    }

    fn term(&mut self, sign: Scalar, out: &mut Element) -> Result<(), ParseError> {
        let coeff = match self.peek() {
            Some(b) if b == b'+' || b == b'-' || b.is_ascii_digit() => {
                let lit = self.int(true)?;
                self.expect(b'*')?;
                Scalar::new(lit.residue(5) as i64)
            }
            _ => Scalar::ONE,
        };
        let coeff = sign * coeff;
        match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.int(true)?.as_i64()?;
                self.expect(b']')?;
                out.add_term(BasisSymbol::Axis(i), coeff);
            }
            Some(b's') => {
                self.pos += 1;
                self.expect(b'[')?;
                let r = self.int(true)?;
                self.expect(b',')?;
                let n_lit = self.int(false)?;
                let n: u64 = n_lit.digits.parse().map_err(|_| {
                    ParseError::new(n_lit.start, format!("level {} out of range", n_lit.digits))
                })?;
                self.expect(b']')?;
                let class = class_of(r.residue(3) as i64);
                out.add_sigma(class as i64, n, coeff);
            }
            Some(b) => {
                return Err(self.error(format!("expected `a[` or `s[`, found `{}`", b as char)))
            }
            None => return Err(self.error("expected a basis symbol, found end of input")),
        }
        Ok(())
    }

    fn int(&mut self, signed: bool) -> Result<IntLit, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut negative = false;
        if signed {
            match self.src.get(self.pos) {
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(b'+') => self.pos += 1,
                _ => {}
            }
            self.skip_ws();
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[digits_start..self.pos])
            .expect("ascii digits")
            .to_string();
        Ok(IntLit {
            negative,
            digits,
            start,
        })
    }
}
