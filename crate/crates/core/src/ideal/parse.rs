//! Text form of monomial ideals.
//!
//! ```text
//! ideal    := "(" monomial ("," monomial)* ")"
//! monomial := factor ("*" factor)* | "1"
//! factor   := "x" INDEX ("^" EXP)?        INDEX ≥ 1, EXP ≥ 1
//! ```
//!
//! Whitespace is ignored everywhere. Repeated variables in a monomial add up.

use super::{ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};
use crate::exactmath::IntVec;

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

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{}', found '{}'", c as char, got as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {what}"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err(format!("{what} too large"))
        })
    }
}

/// A monomial as a list of (0-based variable, exponent) pairs.
type RawMonomial = Vec<(usize, u64)>;

fn monomial(cur: &mut Cursor) -> Result<RawMonomial> {
    if cur.peek() == Some(b'1') {
        cur.pos += 1;
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    loop {
        cur.expect(b'x')?;
        let at = cur.pos;
        let index = cur.number("variable index")?;
        if index == 0 {
            cur.pos = at;
            return cur.err("variable indices start at 1");
        }
        let mut exp = 1;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            if cur.peek() == Some(b'-') {
                return cur.err("exponents must be positive");
            }
            let at = cur.pos;
            exp = cur.number("exponent")?;
            if exp == 0 {
                cur.pos = at;
                return cur.err("exponents must be positive");
            }
        }
        let index = usize::try_from(index - 1).or_else(|_| cur.err("variable index too large"))?;
        factors.push((index, exp));
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            return Ok(factors);
        }
    }
}

/// Parses an ideal such as `"(x1^2, x1*x2, x2^3)"`.
///
/// When `n` is `None` the dimension is the largest variable index used.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    cur.expect(b'(')?;
    let mut monomials = Vec::new();
    loop {
        let start = cur.pos;
        monomials.push((start, monomial(&mut cur)?));
        match cur.peek() {
            Some(b',') => cur.pos += 1,
            Some(b')') => {
                cur.pos += 1;
                break;
            }
            Some(c) => return cur.err(format!("expected ',' or ')', found '{}'", c as char)),
            None => return cur.err("unterminated ideal, expected ')'"),
        }
    }
    if cur.peek().is_some() {
        return cur.err("trailing input after ')'");
    }

    let used = monomials
        .iter()
        .flat_map(|(_, m)| m.iter().map(|&(i, _)| i + 1))
        .max()
        .unwrap_or(0);
    let n = match n {
        Some(n) if used > n => {
            return Err(Error::Parse {
                offset: 0,
                message: format!("variable x{used} exceeds the dimension {n}"),
            })
        }
        Some(n) => n,
        None if used == 0 => {
            return Err(Error::Parse {
                offset: 0,
                message: "cannot infer the dimension of a constant ideal; pass it explicitly"
                    .into(),
            })
        }
        None => used,
    };

    let mut points = Vec::with_capacity(monomials.len());
    for (start, m) in monomials {
        let mut e = vec![0i64; n];
        for (i, exp) in m {
            e[i] = i64::try_from(exp)
                .ok()
                .and_then(|x| e[i].checked_add(x))
                .ok_or(Error::Parse {
                    offset: start,
                    message: "exponent too large".into(),
                })?;
        }
        points.push(ExponentVector::new(e));
    }
    MonomialIdeal::minimalize(points, n)
}

/// Renders a monomial as `x1^2*x3`, or `1` for the constant monomial.
pub(crate) fn format_monomial(a: &IntVec) -> String {
    let factors: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text form, listing the cloud in lexicographic order.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let parts: Vec<String> = ideal.cloud().iter().map(format_monomial).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cloud(i: &MonomialIdeal) -> Vec<Vec<i64>> {
        i.cloud().iter().map(|a| a.entries().to_vec()).collect()
    }

    #[test]
    fn reads_exponents() {
        let i = parse_ideal("(x1^2, x1*x2, x2^3)", None).unwrap();
        assert_eq!(i.dim(), 2);
        assert_eq!(cloud(&i), vec![vec![0, 3], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn explicit_dimension_pads() {
        let i = parse_ideal("(x1*x3, x2)", Some(4)).unwrap();
        assert_eq!(cloud(&i), vec![vec![0, 1, 0, 0], vec![1, 0, 1, 0]]);
    }

    #[test]
    fn whitespace_and_repeats() {
        let i = parse_ideal(" ( x1 * x1 ^ 2 ,\n x2 ) ", None).unwrap();
        assert_eq!(cloud(&i), vec![vec![0, 1], vec![3, 0]]);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_ideal("(x0)", None) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_ideal("(x1^0)", None),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_ideal("(x1^-1)", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal("(x1 x2)", None),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(parse_ideal("(x1", None), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("x1)", None),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            parse_ideal("(y1)", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal("(x1) x2", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_ideal("()", None), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("(x3)", Some(2)),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn constant_monomial() {
        let u = parse_ideal("(1)", Some(3)).unwrap();
        assert!(u.is_unit());
        assert_eq!(format_ideal(&u), "(1)");
        assert!(parse_ideal("(1)", None).is_err());
        // 1 divides everything
        assert!(parse_ideal("(x1, 1)", None).unwrap().is_unit());
    }

    #[test]
    fn canonical_format() {
        let i = parse_ideal("(x2^3, x1^2, x2*x1)", None).unwrap();
        assert_eq!(format_ideal(&i), "(x2^3, x1*x2, x1^2)");
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0i64..5, n), 1..6).prop_map(move |pts| {
                MonomialIdeal::minimalize(pts.into_iter().map(IntVec::new), n).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(i in arb_ideal()) {
            let text = format_ideal(&i);
            let back = parse_ideal(&text, Some(i.dim())).unwrap();
            prop_assert_eq!(back, i);
        }
    }
}
