//! Canonical forms for the named monoid endomorphisms of `C+(a,b)`.
//!
//! Maps act on the right: `compose(f, g)` is "apply `f`, then `g`".
//!
//! * `Zero` sends everything to `1`.
//! * `Inj { scale: p, shift: s, lift: n }` is the scaling map
//!   `a^j -> a^(pj)`, `b^i a^j -> b^(pi-s) a^(pj-s)` (for `i >= 1`) followed by
//!   `n` applications of the lift `x -> b x a` on non-identity elements. With
//!   `s = n = 0` this is plain scaling by `p`, and `Inj(1,0,0)` is the identity.
//! * `Sigma { l, m }` factors through the degree map: idempotents go to `1`,
//!   any other `b^i a^j` goes to `b^l a^(l + m(j-i))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::element::BicyclicElement;
use crate::error::{Error, Result};
use crate::parse::Cursor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CanonicalEndo {
    Zero,
    Inj {
        #[serde(rename = "p")]
        scale: u64,
        #[serde(rename = "s")]
        shift: u64,
        #[serde(rename = "n")]
        lift: u64,
    },
    Sigma {
        l: u64,
        m: u64,
    },
}

pub const IDENTITY: CanonicalEndo = CanonicalEndo::Inj {
    scale: 1,
    shift: 0,
    lift: 0,
};

fn overflow() -> Error {
    Error::Overflow("endomorphism arithmetic")
}

impl CanonicalEndo {
    /// Validated `Inj(scale, shift, lift)`; requires `0 <= shift < scale`.
    pub fn inj(scale: u64, shift: u64, lift: u64) -> Result<Self> {
        let f = CanonicalEndo::Inj { scale, shift, lift };
        f.validate()?;
        Ok(f)
    }

    /// Validated `Sigma(l, m)`; requires `m >= 1`.
    pub fn sigma(l: u64, m: u64) -> Result<Self> {
        let f = CanonicalEndo::Sigma { l, m };
        f.validate()?;
        Ok(f)
    }

    /// Scaling by `k`; `k = 0` is the annihilating map.
    pub fn lambda(k: u64) -> Self {
        if k == 0 {
            CanonicalEndo::Zero
        } else {
            CanonicalEndo::Inj {
                scale: k,
                shift: 0,
                lift: 0,
            }
        }
    }

    /// The `n`-th power of the lift map.
    pub fn lift(n: u64) -> Self {
        CanonicalEndo::Inj {
            scale: 1,
            shift: 0,
            lift: n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            CanonicalEndo::Zero => Ok(()),
            CanonicalEndo::Inj { scale, shift, .. } => {
                if scale == 0 {
                    Err(Error::Validation("scale must be at least 1".into()))
                } else if shift >= scale {
                    Err(Error::Validation(format!(
                        "shift must satisfy 0 <= s <= p-1 (got p={scale}, s={shift})"
                    )))
                } else {
                    Ok(())
                }
            }
            CanonicalEndo::Sigma { m, .. } => {
                if m == 0 {
                    Err(Error::Validation("sigma requires m > 0".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn apply(&self, x: BicyclicElement) -> Result<BicyclicElement> {
        if !x.in_plus() {
            return Err(Error::Domain(format!("{x} is not in C+(a,b)")));
        }
        self.validate()?;
        match *self {
            CanonicalEndo::Zero => Ok(BicyclicElement::ONE),
            CanonicalEndo::Sigma { l, m } => {
                if x.is_idempotent() {
                    return Ok(BicyclicElement::ONE);
                }
                let degree = x.a_exp - x.b_exp;
                let a_exp = m
                    .checked_mul(degree)
                    .and_then(|d| d.checked_add(l))
                    .ok_or_else(overflow)?;
                Ok(BicyclicElement::new(l, a_exp))
            }
            CanonicalEndo::Inj { scale, shift, lift } => {
                let scaled = scale_shift(scale, shift, x)?;
                if scaled.is_one() {
                    Ok(scaled)
                } else {
                    scaled.raise(lift)
                }
            }
        }
    }

    /// The composite "apply `self`, then `then`" as a canonical form.
    pub fn compose(&self, then: &CanonicalEndo) -> Result<CanonicalEndo> {
        use CanonicalEndo::*;
        self.validate()?;
        then.validate()?;
        let mul = |x: u64, y: u64| x.checked_mul(y).ok_or_else(overflow);
        let add = |x: u64, y: u64| x.checked_add(y).ok_or_else(overflow);
        let composite = match (*self, *then) {
            (Zero, _) | (_, Zero) => Zero,
            (Sigma { m: m1, .. }, Sigma { l, m: m2 }) => Sigma { l, m: mul(m1, m2)? },
            (Sigma { l, m }, Inj { scale, shift, lift }) => {
                // a non-idempotent b^l a^(l+d) is sent to b^(pl-s+n) a^(...) when l >= 1,
                // and to b^n a^(pd+n) when l = 0
                let first = if l == 0 {
                    lift
                } else {
                    add(mul(scale, l)? - shift, lift)?
                };
                Sigma {
                    l: first,
                    m: mul(scale, m)?,
                }
            }
            (Inj { scale, .. }, Sigma { l, m }) => Sigma { l, m: mul(scale, m)? },
            (
                Inj {
                    scale: p1,
                    shift: s1,
                    lift: n1,
                },
                Inj {
                    scale: p2,
                    shift: s2,
                    lift: n2,
                },
            ) => {
                let scale = mul(p1, p2)?;
                if n1 == 0 {
                    // the first map never lifts, so shifts accumulate: s1*p2 + s2
                    Inj {
                        scale,
                        shift: add(mul(p2, s1)?, s2)?,
                        lift: n2,
                    }
                } else {
                    // a lifted image always has b-exponent >= 1, so the second
                    // shift is absorbed into the lift: p2*n1 - s2 + n2
                    Inj {
                        scale,
                        shift: mul(p2, s1)?,
                        lift: add(mul(p2, n1)? - s2, n2)?,
                    }
                }
            }
        };
        debug_assert!(composite.validate().is_ok());
        Ok(composite)
    }

    pub fn is_injective_form(&self) -> bool {
        matches!(self, CanonicalEndo::Inj { .. })
    }

    /// Membership in the ideal generated by the sigma maps and the zero map.
    pub fn in_ideal_i(&self) -> bool {
        !self.is_injective_form()
    }

    /// Images of the generators `a` and `ba`.
    pub fn generator_images(&self) -> Result<(BicyclicElement, BicyclicElement)> {
        Ok((
            self.apply(BicyclicElement::new(0, 1))?,
            self.apply(BicyclicElement::new(1, 1))?,
        ))
    }
}

fn scale_shift(scale: u64, shift: u64, x: BicyclicElement) -> Result<BicyclicElement> {
    let a_exp = scale.checked_mul(x.a_exp).ok_or_else(overflow)?;
    if x.b_exp == 0 {
        Ok(BicyclicElement::new(0, a_exp))
    } else {
        let b_exp = scale.checked_mul(x.b_exp).ok_or_else(overflow)?;
        Ok(BicyclicElement::new(b_exp - shift, a_exp - shift))
    }
}

impl fmt::Display for CanonicalEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CanonicalEndo::Zero => write!(f, "zero"),
            CanonicalEndo::Sigma { l, m } => write!(f, "sigma({l},{m})"),
            CanonicalEndo::Inj {
                scale: 1,
                shift: 0,
                lift: 0,
            } => write!(f, "id"),
            CanonicalEndo::Inj {
                scale: 1,
                shift: 0,
                lift,
            } => write!(f, "vs^{lift}"),
            CanonicalEndo::Inj {
                scale,
                shift: 0,
                lift: 0,
            } => write!(f, "lambda({scale})"),
            CanonicalEndo::Inj {
                scale,
                shift,
                lift: 0,
            } => write!(f, "lambda({scale},{shift})"),
            CanonicalEndo::Inj { scale, shift, lift } => {
                write!(f, "lambda({scale},{shift})*vs^{lift}")
            }
        }
    }
}

impl FromStr for CanonicalEndo {
    type Err = Error;

    /// Grammar: `zero | id | lambda(k) | lambda(p,s) | sigma(l,m) | vs^n | lambda(p,s)*vs^n`.
    fn from_str(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let form = if cur.eat("zero") {
            CanonicalEndo::Zero
        } else if cur.eat("id") {
            IDENTITY
        } else if cur.eat("sigma") {
            cur.expect("(")?;
            let l = cur.uint()?;
            cur.expect(",")?;
            let m = cur.uint()?;
            cur.expect(")")?;
            CanonicalEndo::sigma(l, m)?
        } else if cur.eat("vs") {
            CanonicalEndo::lift(lift_exponent(&mut cur)?)
        } else if cur.eat("lambda") {
            cur.expect("(")?;
            let scale = cur.uint()?;
            if cur.eat(")") {
                CanonicalEndo::lambda(scale)
            } else {
                cur.expect(",")?;
                let shift = cur.uint()?;
                cur.expect(")")?;
                let lift = if cur.eat("*") {
                    cur.expect("vs")?;
                    lift_exponent(&mut cur)?
                } else {
                    0
                };
                CanonicalEndo::inj(scale, shift, lift)?
            }
        } else {
            return Err(cur.error("expected one of zero, id, lambda, sigma, vs"));
        };
        cur.finish()?;
        Ok(form)
    }
}

fn lift_exponent(cur: &mut Cursor<'_>) -> Result<u64> {
    if cur.eat("^") {
        cur.uint()
    } else {
        Ok(1)
    }
}

pub fn parse_endo(text: &str) -> Result<CanonicalEndo> {
    text.parse()
}

pub fn format_endo(f: &CanonicalEndo) -> String {
    f.to_string()
}

/// All canonical forms whose parameters are at most `bound`: zero, every
/// `Inj(p, s, n)` with `1 <= p <= bound`, `s < p`, `n <= bound`, and every
/// `Sigma(l, m)` with `l <= bound`, `1 <= m <= bound`.
pub fn canonical_forms(bound: u64) -> Vec<CanonicalEndo> {
    let mut forms = vec![CanonicalEndo::Zero];
    for scale in 1..=bound {
        for shift in 0..scale {
            for lift in 0..=bound {
                forms.push(CanonicalEndo::Inj { scale, shift, lift });
            }
        }
    }
    for l in 0..=bound {
        for m in 1..=bound {
            forms.push(CanonicalEndo::Sigma { l, m });
        }
    }
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::window::WindowSpec;

    fn e(i: u64, j: u64) -> BicyclicElement {
        BicyclicElement::new(i, j)
    }

    fn inj(p: u64, s: u64, n: u64) -> CanonicalEndo {
        CanonicalEndo::inj(p, s, n).unwrap()
    }

    fn sigma(l: u64, m: u64) -> CanonicalEndo {
        CanonicalEndo::sigma(l, m).unwrap()
    }

    /// Pointwise composite evaluated straight from the defining formulas,
    /// with the lift applied one step at a time.
    fn naive_apply(f: &CanonicalEndo, x: BicyclicElement) -> BicyclicElement {
        match *f {
            CanonicalEndo::Zero => BicyclicElement::ONE,
            CanonicalEndo::Sigma { l, m } => {
                if x.b_exp == x.a_exp {
                    BicyclicElement::ONE
                } else {
                    e(l, l + m * (x.a_exp - x.b_exp))
                }
            }
            CanonicalEndo::Inj { scale, shift, lift } => {
                let mut y = if x.b_exp == 0 {
                    e(0, scale * x.a_exp)
                } else {
                    e(scale * x.b_exp - shift, scale * x.a_exp - shift)
                };
                for _ in 0..lift {
                    if y != BicyclicElement::ONE {
                        y = e(y.b_exp + 1, y.a_exp + 1);
                    }
                }
                y
            }
        }
    }

    #[test]
    fn apply_examples() {
        assert_eq!(inj(3, 1, 0).apply(e(2, 5)).unwrap(), e(5, 14));
        assert_eq!(inj(4, 3, 2).apply(BicyclicElement::ONE).unwrap(), BicyclicElement::ONE);
        assert_eq!(sigma(2, 3).apply(e(1, 4)).unwrap(), e(2, 11));
        assert_eq!(sigma(2, 3).apply(e(4, 4)).unwrap(), BicyclicElement::ONE);
        assert_eq!(inj(1, 0, 1).apply(e(0, 2)).unwrap(), e(1, 3));
        assert_eq!(CanonicalEndo::Zero.apply(e(3, 8)).unwrap(), BicyclicElement::ONE);
    }

    #[test]
    fn apply_rejects_outside_plus_and_invalid_forms() {
        assert!(matches!(inj(2, 0, 0).apply(e(3, 1)), Err(Error::Domain(_))));
        let bad = CanonicalEndo::Inj {
            scale: 2,
            shift: 2,
            lift: 0,
        };
        assert!(matches!(bad.apply(e(1, 1)), Err(Error::Validation(_))));
        assert!(matches!(
            CanonicalEndo::Sigma { l: 1, m: 0 }.apply(e(0, 1)),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            inj(u64::MAX, 0, 0).apply(e(0, 2)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn apply_matches_naive_formulas() {
        for f in canonical_forms(4) {
            for x in WindowSpec::new(10).elements() {
                assert_eq!(f.apply(x).unwrap(), naive_apply(&f, x), "{f} at {x}");
            }
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sigma(1, 2).compose(&sigma(3, 4)).unwrap(), sigma(3, 8));
        assert_eq!(inj(2, 1, 0).compose(&inj(3, 2, 0)).unwrap(), inj(6, 5, 0));
        assert_eq!(inj(2, 1, 1).compose(&inj(3, 2, 2)).unwrap(), inj(6, 3, 3));
        assert_eq!(sigma(2, 3).compose(&CanonicalEndo::Zero).unwrap(), CanonicalEndo::Zero);
        for f in canonical_forms(3) {
            assert_eq!(f.compose(&IDENTITY).unwrap(), f);
            assert_eq!(IDENTITY.compose(&f).unwrap(), f);
        }
    }

    #[test]
    fn lift_zero_first_factor_accumulates_shift() {
        // scale-only first map: shifts add up instead of feeding the lift
        assert_eq!(inj(2, 1, 0).compose(&inj(3, 2, 1)).unwrap(), inj(6, 5, 1));
        let x = e(1, 3);
        let expected = naive_apply(&inj(3, 2, 1), naive_apply(&inj(2, 1, 0), x));
        assert_eq!(inj(6, 5, 1).apply(x).unwrap(), expected);
    }

    #[test]
    fn compose_agrees_with_pointwise_composite() {
        let window = WindowSpec::new(12);
        for f in canonical_forms(3) {
            for g in canonical_forms(3) {
                let h = f.compose(&g).unwrap();
                for x in window.elements() {
                    let direct = naive_apply(&g, naive_apply(&f, x));
                    assert_eq!(h.apply(x).unwrap(), direct, "{f} then {g} at {x}");
                }
            }
        }
    }

    #[test]
    fn predicates() {
        assert!(inj(3, 1, 2).is_injective_form());
        assert!(!CanonicalEndo::Zero.is_injective_form());
        assert!(!sigma(4, 2).is_injective_form());
        assert!(sigma(0, 1).in_ideal_i());
        assert!(CanonicalEndo::Zero.in_ideal_i());
        assert!(!CanonicalEndo::lambda(2).in_ideal_i());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_endo("lambda(3,1)*vs^2").unwrap(), inj(3, 1, 2));
        assert_eq!(parse_endo("id").unwrap(), IDENTITY);
        assert_eq!(parse_endo("lambda(3)").unwrap(), inj(3, 0, 0));
        assert_eq!(parse_endo("lambda(0)").unwrap(), CanonicalEndo::Zero);
        assert_eq!(parse_endo("vs^4").unwrap(), inj(1, 0, 4));
        assert_eq!(parse_endo(" sigma( 2 , 5 ) ").unwrap(), sigma(2, 5));
        assert_eq!(parse_endo("zero").unwrap(), CanonicalEndo::Zero);
        assert!(matches!(parse_endo("sigma(2,0)"), Err(Error::Validation(m)) if m.contains("m > 0")));
        assert!(matches!(parse_endo("lambda(3,3)"), Err(Error::Validation(m)) if m.contains("p-1")));
        assert!(matches!(parse_endo("lambda(3,1)*"), Err(Error::Parse { position: 12, .. })));
        assert!(matches!(parse_endo("mu(1)"), Err(Error::Parse { position: 0, .. })));

        assert_eq!(format_endo(&inj(3, 1, 2)), "lambda(3,1)*vs^2");
        assert_eq!(format_endo(&inj(5, 0, 0)), "lambda(5)");
        assert_eq!(format_endo(&inj(5, 2, 0)), "lambda(5,2)");
        assert_eq!(format_endo(&inj(5, 0, 3)), "lambda(5,0)*vs^3");
        assert_eq!(format_endo(&inj(1, 0, 3)), "vs^3");
        assert_eq!(format_endo(&IDENTITY), "id");
        for f in canonical_forms(4) {
            assert_eq!(parse_endo(&format_endo(&f)).unwrap(), f);
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            serde_json::to_string(&inj(3, 1, 2)).unwrap(),
            r#"{"kind":"inj","p":3,"s":1,"n":2}"#
        );
        assert_eq!(
            serde_json::to_string(&sigma(2, 3)).unwrap(),
            r#"{"kind":"sigma","l":2,"m":3}"#
        );
        assert_eq!(
            serde_json::to_string(&CanonicalEndo::Zero).unwrap(),
            r#"{"kind":"zero"}"#
        );
    }
}
