//! Text form of monomials and ideals.
//!
//! Grammar (ASCII, whitespace free between any two tokens):
//!
//! ```text
//! ideal  := '0' | term (',' term)*
//! term   := '1' | factor ('*' factor)*
//! factor := 'x' INDEX ('^' EXPONENT)?
//! ```
//!
//! Variable indices are 1-based in text (`x1`, `x2`, ...). Parsed generator
//! lists are minimalized, so redundant generators are dropped silently.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser { bytes: input.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected '{}'", byte as char))),
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Parse { position: self.pos, message }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| Error::Parse { position: start, message: "number too large".into() })
    }

    /// `'x' INDEX ('^' EXPONENT)?`, returned as (0-based index, exponent).
    fn factor(&mut self, ambient: usize) -> Result<(usize, u16)> {
        self.expect(b'x')?;
        let index = self.number()?;
        if index == 0 || index as usize > ambient {
            return Err(Error::VariableOutOfRange { index: index as usize, ambient });
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp_pos = self.pos;
            let e = self.number()?;
            u16::try_from(e)
                .map_err(|_| Error::Parse { position: exp_pos, message: "exponent too large".into() })?
        } else {
            1
        };
        Ok((index as usize - 1, exp))
    }

    fn term(&mut self, ambient: usize) -> Result<Monomial> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::one(ambient));
        }
        let mut exps = vec![0u16; ambient];
        loop {
            let (idx, exp) = self.factor(ambient)?;
            exps[idx] = exps[idx]
                .checked_add(exp)
                .ok_or_else(|| self.error("exponent too large".into()))?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// Parses an ideal in `ambient` variables; the result is minimalized.
pub fn parse_ideal(input: &str, ambient: usize) -> Result<MonomialIdeal> {
    let mut p = Parser::new(input);
    if p.peek() == Some(b'0') {
        p.pos += 1;
        if p.peek().is_some() {
            return Err(p.error("unexpected input after '0'".into()));
        }
        return Ok(MonomialIdeal::zero(ambient));
    }
    if p.peek().is_none() {
        return Err(p.error("expected an ideal".into()));
    }
    let mut gens = vec![p.term(ambient)?];
    while p.peek() == Some(b',') {
        p.pos += 1;
        gens.push(p.term(ambient)?);
    }
    if let Some(b) = p.peek() {
        return Err(p.error(format!("unexpected character '{}'", b as char)));
    }
    MonomialIdeal::minimalize(ambient, gens)
}

/// Canonical text form of a monomial (`x1^2*x3`, or `1`).
pub fn format_monomial(m: &Monomial) -> String {
    m.to_string()
}

/// Canonical text form of an ideal (`x1^2, x1*x2`, or `0`, or `1`).
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn parses_basic_forms() {
        let i = parse_ideal("x1^2, x1*x2, x2^2", 2).unwrap();
        assert_eq!(i.gens(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let j = parse_ideal(" x2 ,  x1^3 ", 3).unwrap();
        assert_eq!(j.gens(), &[m(&[0, 1, 0]), m(&[3, 0, 0])]);
        assert!(parse_ideal("0", 2).unwrap().is_zero());
        assert!(parse_ideal("1", 2).unwrap().is_unit());
        // repeated variables multiply together
        let k = parse_ideal("x1*x1*x2^0", 2).unwrap();
        assert_eq!(k.gens(), &[m(&[2, 0])]);
    }

    #[test]
    fn minimalizes_input() {
        let i = parse_ideal("x1, x1^2, x1*x2", 2).unwrap();
        assert_eq!(i.gens(), &[m(&[1, 0])]);
    }

    #[test]
    fn error_positions() {
        let err = parse_ideal("x1 + x2", 2).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 3, .. }), "{err:?}");
        let err = parse_ideal("x9", 2).unwrap_err();
        assert!(matches!(err, Error::VariableOutOfRange { index: 9, ambient: 2 }));
        let err = parse_ideal("x0", 2).unwrap_err();
        assert!(matches!(err, Error::VariableOutOfRange { index: 0, .. }));
        let err = parse_ideal("", 2).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_ideal("x1^70000", 2).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    proptest! {
        #[test]
        fn round_trips_canonical_text(
            n in 1usize..=3,
            raw in proptest::collection::vec(proptest::collection::vec(0u16..5, 3), 1..5),
        ) {
            let gens = raw.iter().map(|e| Monomial::new(e[..n].to_vec()));
            let Ok(ideal) = MonomialIdeal::minimalize(n, gens) else {
                return Ok(());
            };
            if ideal.is_zero() {
                return Ok(());
            }
            let text = format_ideal(&ideal);
            let back = parse_ideal(&text, n).unwrap();
            prop_assert_eq!(back, ideal);
        }
    }
}
