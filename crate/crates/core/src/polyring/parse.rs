//! Parser for the human-readable polynomial notation, e.g.
//! `x^2y+xy^2+2xyz-(1/2)z` or `x*y1^2 + 3*y4`.
//!
//! Variables are matched against a caller-supplied name list (longest name
//! first), so single-letter names may be written without separators.

use num_bigint::BigInt;
use num_traits::One;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn integer(&mut self) -> Result<Option<BigInt>> {
        match self.digits() {
            None => Ok(None),
            Some(d) => Ok(Some(d.parse().expect("digits"))),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let Some(d) = self.digits() else {
            return self.err("expected exponent");
        };
        match d.parse::<u32>() {
            Ok(v) => Ok(v),
            Err(_) => self.err("exponent too large"),
        }
    }
}

/// Parses `text` as a polynomial in the variables `names` (index i of the
/// slice is variable i).
pub fn parse_poly(text: &str, names: &[&str]) -> Result<MultiPoly> {
    if names.is_empty() {
        return Err(Error::InvalidArgument("no variable names".into()));
    }
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
    let arity = names.len();
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = MultiPoly::zero(arity);
    cur.skip_ws();
    if cur.peek().is_none() {
        return cur.err("empty input");
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign_neg = false;
        if cur.eat(b'-') {
            sign_neg = true;
        } else if cur.eat(b'+') {
        } else if !first {
            return cur.err("expected '+' or '-'");
        }
        first = false;
        cur.skip_ws();
        let (expo, coeff) = parse_term(&mut cur, names, &order)?;
        out.add_term(expo, if sign_neg { -coeff } else { coeff });
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

fn parse_term(
    cur: &mut Cursor<'_>,
    names: &[&str],
    order: &[usize],
) -> Result<(Vec<u32>, Rational)> {
    let mut coeff = Rational::one();
    let mut expo = vec![0u32; names.len()];
    let mut any = false;
    if cur.eat(b'(') {
        cur.skip_ws();
        let neg = cur.eat(b'-');
        let Some(n) = cur.integer()? else {
            return cur.err("expected numerator");
        };
        cur.skip_ws();
        let d = if cur.eat(b'/') {
            cur.skip_ws();
            match cur.integer()? {
                Some(d) if d != BigInt::from(0) => d,
                _ => return cur.err("expected nonzero denominator"),
            }
        } else {
            BigInt::one()
        };
        cur.skip_ws();
        if !cur.eat(b')') {
            return cur.err("expected ')'");
        }
        coeff = Rational::new(if neg { -n } else { n }, d);
        any = true;
    } else if let Some(n) = cur.integer()? {
        let d = if cur.eat(b'/') {
            match cur.integer()? {
                Some(d) if d != BigInt::from(0) => d,
                _ => return cur.err("expected nonzero denominator"),
            }
        } else {
            BigInt::one()
        };
        coeff = Rational::new(n, d);
        any = true;
    }
    loop {
        let save = cur.pos;
        cur.skip_ws();
        let star = cur.eat(b'*');
        if star {
            cur.skip_ws();
        }
        let rest = &cur.src[cur.pos..];
        let hit = order
            .iter()
            .copied()
            .find(|&i| rest.starts_with(names[i].as_bytes()));
        match hit {
            Some(v) => {
                cur.pos += names[v].len();
                let k = if cur.eat(b'^') { cur.small()? } else { 1 };
                expo[v] = match expo[v].checked_add(k) {
                    Some(e) => e,
                    None => return cur.err("exponent overflow"),
                };
                any = true;
            }
            None if star => return cur.err("expected variable after '*'"),
            None => {
                cur.pos = save;
                break;
            }
        }
    }
    if !any {
        return cur.err("expected a term");
    }
    Ok((expo, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn parses_table_notation() {
        let p = parse_poly("x^2y+x^2z+xy^2+xyz+x^2+2xy+xz+y^2+yz", &XYZ).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.to_string(), "x^2y+x^2z+xy^2+xyz+x^2+2xy+xz+y^2+yz");
    }

    #[test]
    fn parses_fractions_and_long_names() {
        let names = ["x", "y1", "y4", "y5"];
        let p = parse_poly("x*y4 - (3/2)y1^2 + 1/2", &names).unwrap();
        assert_eq!(p.coefficient_of(&[1, 0, 1, 0]), Rational::one());
        assert_eq!(
            p.coefficient_of(&[0, 2, 0, 0]),
            Rational::new((-3).into(), 2.into())
        );
        assert_eq!(
            p.coefficient_of(&[0, 0, 0, 0]),
            Rational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "",
            "x+",
            "2 3",
            "x^",
            "x*",
            "(1/0)x",
            "w",
            "x^99999999999",
            "()",
        ] {
            assert!(parse_poly(bad, &XYZ).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn repeated_variables_multiply() {
        assert_eq!(
            parse_poly("xxy", &XYZ).unwrap(),
            parse_poly("x^2y", &XYZ).unwrap()
        );
    }
}
