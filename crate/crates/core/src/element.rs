//! Elements of the bicyclic monoid `C(a,b)`.
//!
//! Every element has the unique normal form `b^i a^j` subject to the single
//! relation `ab = 1`. The positive submonoid `C+(a,b)` consists of the
//! elements with `i <= j`, the negative one of those with `i >= j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// The element `b^i a^j`, stored as the exponent pair `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BicyclicElement {
    #[serde(rename = "b")]
    pub b_exp: u64,
    #[serde(rename = "a")]
    pub a_exp: u64,
}

impl BicyclicElement {
    pub const ONE: BicyclicElement = BicyclicElement { b_exp: 0, a_exp: 0 };

    pub const fn new(b_exp: u64, a_exp: u64) -> Self {
        BicyclicElement { b_exp, a_exp }
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    /// `b^k a^l · b^m a^n = b^(k+m-min(l,m)) a^(l+n-min(l,m))`.
    pub fn multiply(self, other: Self) -> Result<Self> {
        let cancel = self.a_exp.min(other.b_exp);
        let b_exp = self
            .b_exp
            .checked_add(other.b_exp - cancel)
            .ok_or(Error::Overflow("multiply"))?;
        let a_exp = (self.a_exp - cancel)
            .checked_add(other.a_exp)
            .ok_or(Error::Overflow("multiply"))?;
        Ok(Self::new(b_exp, a_exp))
    }

    /// `n`-fold product; the empty product is `1`.
    ///
    /// Uses the closed form `(b^i a^j)^n = b^i a^(j + (n-1)(j-i))` for
    /// `i <= j` and its mirror for `i > j`.
    pub fn power(self, n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::ONE);
        }
        let overflow = || Error::Overflow("power");
        let extra = n - 1;
        if self.b_exp <= self.a_exp {
            let step = (self.a_exp - self.b_exp)
                .checked_mul(extra)
                .ok_or_else(overflow)?;
            let a_exp = self.a_exp.checked_add(step).ok_or_else(overflow)?;
            Ok(Self::new(self.b_exp, a_exp))
        } else {
            let step = (self.b_exp - self.a_exp)
                .checked_mul(extra)
                .ok_or_else(overflow)?;
            let b_exp = self.b_exp.checked_add(step).ok_or_else(overflow)?;
            Ok(Self::new(b_exp, self.a_exp))
        }
    }

    /// Idempotents are exactly the elements `b^t a^t`.
    pub fn is_idempotent(self) -> bool {
        self.b_exp == self.a_exp
    }

    pub fn in_plus(self) -> bool {
        self.b_exp <= self.a_exp
    }

    pub fn in_minus(self) -> bool {
        self.b_exp >= self.a_exp
    }

    /// Image under the minimal group congruence, `j - i`.
    pub fn mg_degree(self) -> i128 {
        i128::from(self.a_exp) - i128::from(self.b_exp)
    }

    /// Shifts both exponents up by `n` (the non-identity branch of the lift map).
    pub(crate) fn raise(self, n: u64) -> Result<Self> {
        let b_exp = self.b_exp.checked_add(n).ok_or(Error::Overflow("lift"))?;
        let a_exp = self.a_exp.checked_add(n).ok_or(Error::Overflow("lift"))?;
        Ok(Self::new(b_exp, a_exp))
    }
}

/// Natural partial order on idempotents: `e <= f` iff `ef = fe = e`.
pub fn natural_leq(e: BicyclicElement, f: BicyclicElement) -> Result<bool> {
    for x in [e, f] {
        if !x.is_idempotent() {
            return Err(Error::Domain(format!(
                "natural order is only defined on idempotents, got {x}"
            )));
        }
    }
    Ok(e.multiply(f)? == e && f.multiply(e)? == e)
}

impl fmt::Display for BicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.b_exp, self.a_exp) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write!(f, "b^{i}"),
            (0, j) => write!(f, "a^{j}"),
            (i, j) => write!(f, "b^{i}a^{j}"),
        }
    }
}

impl FromStr for BicyclicElement {
    type Err = Error;

    /// Accepts `1`, `b^i`, `a^j`, `b^ia^j`; a bare `b` or `a` means exponent 1.
    fn from_str(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        if cur.at_end() {
            return Err(cur.error("empty element literal"));
        }
        if cur.eat("1") {
            cur.finish()?;
            return Ok(Self::ONE);
        }
        let mut b_exp = 0;
        let mut a_exp = 0;
        let mut seen = false;
        if cur.eat("b") {
            b_exp = exponent(&mut cur)?;
            seen = true;
        }
        if cur.eat("a") {
            a_exp = exponent(&mut cur)?;
            seen = true;
        }
        if !seen {
            return Err(cur.error("expected `1`, `b` or `a`"));
        }
        cur.finish()?;
        Ok(Self::new(b_exp, a_exp))
    }
}

fn exponent(cur: &mut Cursor<'_>) -> Result<u64> {
    if cur.eat("^") {
        cur.uint()
    } else {
        Ok(1)
    }
}

pub fn parse_element(text: &str) -> Result<BicyclicElement> {
    text.parse()
}

pub fn format_element(x: BicyclicElement) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u64, j: u64) -> BicyclicElement {
        BicyclicElement::new(i, j)
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(e(1, 2).multiply(e(3, 4)).unwrap(), e(2, 4));
        assert_eq!(e(2, 3).multiply(e(1, 5)).unwrap(), e(2, 7));
        assert_eq!(BicyclicElement::ONE.multiply(e(7, 3)).unwrap(), e(7, 3));
        // ab = 1, ba is not
        assert_eq!(e(0, 1).multiply(e(1, 0)).unwrap(), BicyclicElement::ONE);
        assert_eq!(e(1, 0).multiply(e(0, 1)).unwrap(), e(1, 1));
    }

    #[test]
    fn multiply_overflow_is_reported() {
        let big = e(u64::MAX, u64::MAX);
        assert_eq!(
            big.multiply(e(0, 1)),
            Err(Error::Overflow("multiply"))
        );
        assert!(e(u64::MAX, 0).multiply(e(1, 0)).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(e(1, 3).power(2).unwrap(), e(1, 5));
        assert_eq!(e(4, 9).power(0).unwrap(), BicyclicElement::ONE);
        assert_eq!(e(2, 2).power(5).unwrap(), e(2, 2));
        assert_eq!(e(5, 2).power(3).unwrap(), e(11, 2));
        assert!(e(0, 2).power(u64::MAX).is_err());
    }

    #[test]
    fn predicates() {
        assert!(e(3, 3).is_idempotent());
        assert!(!e(3, 4).is_idempotent());
        assert!(e(2, 5).in_plus());
        assert!(!e(5, 2).in_plus());
        assert!(e(5, 2).in_minus());
        assert!(e(2, 2).in_plus() && e(2, 2).in_minus());
    }

    #[test]
    fn natural_order() {
        assert!(natural_leq(e(4, 4), e(2, 2)).unwrap());
        assert!(!natural_leq(e(2, 2), e(4, 4)).unwrap());
        assert!(matches!(natural_leq(e(1, 2), e(2, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn mg_degree_examples() {
        assert_eq!(e(2, 5).mg_degree(), 3);
        assert_eq!(BicyclicElement::ONE.mg_degree(), 0);
        assert_eq!(e(5, 2).mg_degree(), -3);
        let xy = e(1, 2).multiply(e(3, 4)).unwrap();
        assert_eq!(xy, e(2, 4));
        assert_eq!(xy.mg_degree(), e(1, 2).mg_degree() + e(3, 4).mg_degree());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_element("b^2a^5").unwrap(), e(2, 5));
        assert_eq!(parse_element("1").unwrap(), BicyclicElement::ONE);
        assert_eq!(parse_element("a^3").unwrap(), e(0, 3));
        assert_eq!(parse_element("b^4").unwrap(), e(4, 0));
        assert_eq!(parse_element(" b a ").unwrap(), e(1, 1));
        assert_eq!(parse_element("b ^ 2 a^ 7").unwrap(), e(2, 7));
        assert_eq!(parse_element("b^0a^0").unwrap(), BicyclicElement::ONE);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            parse_element("b^2c"),
            Err(Error::parse(3, "unexpected trailing input"))
        );
        assert!(matches!(parse_element(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_element("b^"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_element("a^2b^1"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_element("1a"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_element("a^99999999999999999999999"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_element(BicyclicElement::ONE), "1");
        assert_eq!(format_element(e(2, 4)), "b^2a^4");
        assert_eq!(format_element(e(0, 3)), "a^3");
        assert_eq!(format_element(e(3, 0)), "b^3");
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&e(2, 5)).unwrap();
        assert_eq!(json, r#"{"b":2,"a":5}"#);
    }
}
