//! Expressions such as `(b3 + b2*e2_1 + bt1*e2_2)*(bt1 + h1_1) - 1/2*c4`.
//!
//! Atoms: integers and fractions, `b<p>`, `bt<k>` (or `bt`), `c<p>`,
//! `t<i>`, and `e<r>_<j>` / `h<r>_<j>` standing for `e^r_j(-t)` and
//! `h^r_j(-t)`. Juxtaposition multiplies.

use crate::error::{EtaError, Result};
use crate::polyring::{c, e_sym, h_sym, Polynomial};
use crate::scalar::Scalar;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    k: u32,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(EtaError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn expr<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.term::<C>()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term::<C>()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let mut negate = false;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            negate ^= op == b'-';
        }
        let mut acc = self.power::<C>()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power::<C>()?;
                }
                Some(ch) if ch == b'(' || ch.is_ascii_alphanumeric() => {
                    acc = acc * self.power::<C>()?;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn power<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let base = self.atom::<C>()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = match self.number() {
                Some(e) => e,
                None => return self.err("expected an exponent after '^'"),
            };
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn index(&mut self, what: &str) -> Result<u64> {
        match self.number() {
            Some(n) => Ok(n),
            None => self.err(format!("expected a subscript after {what}")),
        }
    }

    fn atom<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err("unexpected end of input"),
        };
        let ch = self.src[start];
        if ch == b'(' {
            self.pos += 1;
            let inner = self.expr::<C>()?;
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
            return Ok(inner);
        }
        if ch.is_ascii_digit() {
            let num = self.number().expect("starts with a digit");
            let mut text = num.to_string();
            if self.src.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                match self.number() {
                    Some(den) if den > 0 => text = format!("{num}/{den}"),
                    _ => return self.err("expected a positive denominator"),
                }
            }
            return match C::parse_decimal(&text) {
                Some(v) => Ok(Polynomial::constant(v)),
                None => {
                    self.pos = start;
                    self.err(format!("{text} is not representable in this coefficient ring"))
                }
            };
        }
        self.pos += 1;
        match ch {
            b'b' if self.src.get(self.pos) == Some(&b't') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    let i = self.index("bt")?;
                    if i != self.k as u64 {
                        self.pos = start;
                        return self.err(format!("bt{i} does not match k={}", self.k));
                    }
                }
                Ok(Polynomial::btilde())
            }
            b'b' => {
                let p = self.index("b")?;
                Ok(if p == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::b(p as u32)
                })
            }
            b'c' => {
                let p = self.index("c")?;
                Ok(c(p as i64, self.k))
            }
            b't' => {
                let i = self.index("t")?;
                if i == 0 {
                    self.pos = start;
                    return self.err("t-variables are indexed from 1");
                }
                Ok(Polynomial::t(i as u32))
            }
            b'e' | b'h' => {
                let r = self.index("e/h")?;
                if self.src.get(self.pos) != Some(&b'_') {
                    return self.err("expected '_' between the two indices");
                }
                self.pos += 1;
                let j = self.index("'_'")?;
                Ok(if ch == b'e' {
                    e_sym(j as i64, r as i64, true)
                } else {
                    h_sym(j as i64, r as i64, true)
                })
            }
            _ => {
                self.pos = start;
                self.err(format!("unexpected character {:?}", ch as char))
            }
        }
    }
}

/// Parse an expression in the variables of `Z[b, t]` for the given `k`.
pub fn parse_expr<C: Scalar>(s: &str, k: u32) -> Result<Polynomial<C>> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        k,
    };
    let out = p.expr::<C>()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = Polynomial<BigInt>;

    #[test]
    fn parses_table_notation() {
        let f: P = parse_expr("b1 + h1_1", 1).unwrap();
        assert_eq!(f, P::b(1) - P::t(1));
        let g: P = parse_expr("(b2 + bt1 e1_1) b1 - (b3 + b2*e1_1)", 1).unwrap();
        let expect = (P::b(2) - P::btilde() * P::t(1)) * P::b(1) - (P::b(3) - P::b(2) * P::t(1));
        assert_eq!(g, expect);
        assert_eq!(parse_expr::<BigInt>("c1", 1).unwrap(), P::b(1) + P::btilde());
        assert_eq!(
            parse_expr::<BigInt>("-t2^2 + 3", 1).unwrap(),
            P::from_i64(3) - P::t(2).pow(2)
        );
        let half: Polynomial<BigRational> = parse_expr("1/2*c1", 1).unwrap();
        assert!(!half.is_integral());
        let whole: Polynomial<BigRational> = parse_expr("1/2*(c2 + 2 bt1 e1_1)", 1).unwrap();
        assert!(whole.is_integral());
    }

    #[test]
    fn reports_positions() {
        assert!(matches!(
            parse_expr::<BigInt>("b1 + q", 1),
            Err(EtaError::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_expr::<BigInt>("bt2", 1),
            Err(EtaError::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expr::<BigInt>("(b1", 1),
            Err(EtaError::Parse { pos: 3, .. })
        ));
        assert!(parse_expr::<BigInt>("1/2", 1).is_err());
    }
}
