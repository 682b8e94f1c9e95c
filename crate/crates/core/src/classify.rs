//! Recognition of monoid endomorphisms of `C+(a,b)` given by the images of
//! the generators `a` and `ba`.
//!
//! Every element factors as `b^i a^j = (b^i a^i) · a^(j-i)`. The idempotent
//! images are tied to the image of `a` by `a · b^(i+1)a^(i+1) = b^i a^i · a`:
//! with `a -> b^n a^(n+p)` and `ba -> b^t a^t`, `t > n` forces
//! `b^i a^i -> b^(t+p(i-1)) a^(t+p(i-1))`. When `t <= n` the relation leaves the
//! higher idempotents free and the candidate keeps them at `b^t a^t`. Whether
//! the pair really extends to an endomorphism is screened on a finite window.

use serde::{Deserialize, Serialize};

use crate::element::BicyclicElement;
use crate::endo::CanonicalEndo;
use crate::error::{Error, Result};
use crate::hom::{check_homomorphism, HomReport, Violation, ViolationKind};
use crate::window::{WindowMap, WindowSpec};

pub const DEFAULT_BOUND: u64 = 12;

const GEN_BA: BicyclicElement = BicyclicElement::new(1, 1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorImages {
    /// image of `a`
    #[serde(rename = "a")]
    pub x_img: BicyclicElement,
    /// image of `ba`
    #[serde(rename = "ba")]
    pub y_img: BicyclicElement,
}

impl GeneratorImages {
    pub fn new(x_img: BicyclicElement, y_img: BicyclicElement) -> Result<Self> {
        for img in [x_img, y_img] {
            if !img.in_plus() {
                return Err(Error::Domain(format!("generator image {img} is not in C+(a,b)")));
            }
        }
        Ok(GeneratorImages { x_img, y_img })
    }

    /// Generator images of a canonical form.
    pub fn of(f: &CanonicalEndo) -> Result<Self> {
        let (x_img, y_img) = f.generator_images()?;
        Ok(GeneratorImages { x_img, y_img })
    }
}

/// Exponent `t_i` of the image `b^(t_i) a^(t_i)` of the idempotent `b^i a^i`.
fn idempotent_level(g: &GeneratorImages, i: u64) -> Result<u64> {
    let (lift, level) = (g.x_img.b_exp, g.y_img.b_exp);
    if i == 0 {
        Ok(0)
    } else if level > lift {
        let step = g.x_img.a_exp - g.x_img.b_exp;
        step.checked_mul(i - 1)
            .and_then(|d| d.checked_add(level))
            .ok_or(Error::Overflow("idempotent image"))
    } else {
        Ok(level)
    }
}

/// `b^i a^j -> e_i · x_img^(j-i)`, where `e_i` is the idempotent image
/// described in the module docs (`e_0 = 1`, `e_1 = y_img`).
pub fn induced_map(g: &GeneratorImages, x: BicyclicElement) -> Result<BicyclicElement> {
    if !x.in_plus() {
        return Err(Error::Domain(format!("{x} is not in C+(a,b)")));
    }
    let level = idempotent_level(g, x.b_exp)?;
    BicyclicElement::new(level, level).multiply(g.x_img.power(x.a_exp - x.b_exp)?)
}

/// Checks the induced map is multiplicative on every pair of `W_B`.
pub fn b_consistency(g: &GeneratorImages, bound: u64) -> HomReport {
    let window: Vec<BicyclicElement> = WindowSpec::new(bound).elements().collect();
    check_homomorphism(
        &window,
        |x, y| x.multiply(*y),
        |x| induced_map(g, *x),
        |x, y| x.multiply(*y),
    )
}

/// Tabulates the induced map over `W_B`.
pub fn window_map(g: &GeneratorImages, bound: u64) -> Result<WindowMap> {
    WindowMap::tabulate(WindowSpec::new(bound), |x| induced_map(g, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BeyondPaperLabel {
    /// `ba -> 1`, `a -> b^l a^l` with `l >= 1`: a sigma map with `m = 0`.
    SigmaDegenerateM0,
    /// Both generators go to the same non-identity idempotent.
    ConstantIdempotent,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum ClassificationResult {
    PaperInjective { form: CanonicalEndo },
    PaperSigma { form: CanonicalEndo },
    PaperZero,
    BeyondPaper { label: BeyondPaperLabel, map: WindowMap },
    Inconsistent { witness: Violation },
}

impl ClassificationResult {
    /// The canonical form, for the named-family verdicts.
    pub fn form(&self) -> Option<CanonicalEndo> {
        match self {
            ClassificationResult::PaperInjective { form }
            | ClassificationResult::PaperSigma { form } => Some(*form),
            ClassificationResult::PaperZero => Some(CanonicalEndo::Zero),
            _ => None,
        }
    }

    pub fn verdict_name(&self) -> &'static str {
        match self {
            ClassificationResult::PaperInjective { .. } => "PaperInjective",
            ClassificationResult::PaperSigma { .. } => "PaperSigma",
            ClassificationResult::PaperZero => "PaperZero",
            ClassificationResult::BeyondPaper { .. } => "BeyondPaper",
            ClassificationResult::Inconsistent { .. } => "Inconsistent",
        }
    }
}

/// Decides which family the candidate `g` belongs to, judged on `W_B`.
///
/// Overflow while screening the candidate is returned as an error.
pub fn classify(g: &GeneratorImages, bound: u64) -> Result<ClassificationResult> {
    let report = b_consistency(g, bound);
    if report
        .violations
        .iter()
        .any(|v| v.kind == ViolationKind::Overflow)
    {
        return Err(Error::Overflow("classification window"));
    }
    if let Some(witness) = report.violations.into_iter().next() {
        return Ok(ClassificationResult::Inconsistent { witness });
    }

    let (x, y) = (g.x_img, g.y_img);
    if !y.is_idempotent() {
        // ba·ba = ba forces an idempotent image
        let square = y.multiply(y)?;
        return Ok(ClassificationResult::Inconsistent {
            witness: Violation {
                kind: ViolationKind::Homomorphism,
                x: GEN_BA.to_string(),
                y: GEN_BA.to_string(),
                lhs: y.to_string(),
                rhs: square.to_string(),
            },
        });
    }
    if x.is_one() && y.is_one() {
        return Ok(ClassificationResult::PaperZero);
    }

    let table = window_map(g, bound)?;
    let reproduces = |f: &CanonicalEndo| table.agrees_with(|z| f.apply(z));
    let lift = x.b_exp;
    let degree = x.a_exp - x.b_exp;
    let level = y.b_exp;

    // a -> b^n a^(n+p) and ba -> b^t a^t with n < t <= n+p pins down the shift s = p + n - t
    if degree >= 1 && level > lift && level - lift <= degree {
        let form = CanonicalEndo::inj(degree, degree + lift - level, lift)?;
        if reproduces(&form) {
            return Ok(ClassificationResult::PaperInjective { form });
        }
    }
    if y.is_one() && degree >= 1 {
        let form = CanonicalEndo::sigma(lift, degree)?;
        if reproduces(&form) {
            return Ok(ClassificationResult::PaperSigma { form });
        }
    }
    let label = if y.is_one() && degree == 0 && lift >= 1 {
        BeyondPaperLabel::SigmaDegenerateM0
    } else if x == y && x.is_idempotent() {
        BeyondPaperLabel::ConstantIdempotent
    } else {
        BeyondPaperLabel::Other
    };
    Ok(ClassificationResult::BeyondPaper { label, map: table })
}

/// Composes a tabulated map with the inverse of the `n`-th lift power.
///
/// The lift `x -> b x a` (identity fixed) has range `{1} ∪ {b^u a^v : u >= n, (u,v) != (n,n)}`
/// after `n` steps; every image of `map` must lie there.
pub fn strip_varsigma(map: &WindowMap, n: u64) -> Result<WindowMap> {
    WindowMap::tabulate(map.window, |x| {
        let y = map.get(x).expect("tabulated over its own window");
        if n == 0 || y.is_one() {
            return Ok(y);
        }
        if y.b_exp < n || (y.b_exp == n && y.a_exp == n) {
            return Err(Error::Factoring {
                element: y.to_string(),
            });
        }
        Ok(BicyclicElement::new(y.b_exp - n, y.a_exp - n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u64, j: u64) -> BicyclicElement {
        BicyclicElement::new(i, j)
    }

    fn images(a: (u64, u64), ba: (u64, u64)) -> GeneratorImages {
        GeneratorImages::new(e(a.0, a.1), e(ba.0, ba.1)).unwrap()
    }

    #[test]
    fn induced_map_examples() {
        let g = images((0, 3), (2, 2));
        assert_eq!(induced_map(&g, e(1, 2)).unwrap(), e(2, 5));
        assert_eq!(induced_map(&g, BicyclicElement::ONE).unwrap(), BicyclicElement::ONE);
        let g = images((2, 5), (4, 4));
        assert_eq!(induced_map(&g, e(0, 1)).unwrap(), e(2, 5));
        // idempotent chain forced upward in steps of 3
        assert_eq!(induced_map(&g, e(3, 3)).unwrap(), e(10, 10));
        assert_eq!(induced_map(&g, e(3, 4)).unwrap(), e(10, 13));
        // below the lift level the chain stays put
        let g = images((2, 5), (1, 1));
        assert_eq!(induced_map(&g, e(3, 4)).unwrap(), e(2, 5));
        assert!(matches!(induced_map(&g, e(2, 1)), Err(Error::Domain(_))));
        assert!(GeneratorImages::new(e(3, 1), e(0, 0)).is_err());
    }

    #[test]
    fn consistency_examples() {
        assert!(b_consistency(&images((0, 2), (1, 1)), 10).holds());
        let identity = GeneratorImages::of(&crate::endo::IDENTITY).unwrap();
        assert_eq!(identity, images((0, 1), (1, 1)));
        assert!(b_consistency(&identity, 7).holds());

        let report = b_consistency(&images((0, 0), (1, 1)), 4);
        assert!(!report.holds());
        let witness = report
            .violations
            .iter()
            .find(|v| v.x == "a^1" && v.y == "b^1a^1")
            .expect("a·ba witness");
        assert_eq!((witness.lhs.as_str(), witness.rhs.as_str()), ("1", "b^1a^1"));
    }

    #[test]
    fn consistency_records_overflow() {
        let g = images((0, u64::MAX / 2), (1, 1));
        let report = b_consistency(&g, 3);
        assert!(report.violations.iter().any(|v| v.kind == ViolationKind::Overflow));
        assert_eq!(classify(&g, 3), Err(Error::Overflow("classification window")));
    }

    #[test]
    fn classify_examples() {
        let inj = |p, s, n| CanonicalEndo::inj(p, s, n).unwrap();
        assert_eq!(
            classify(&images((0, 3), (2, 2)), 12).unwrap(),
            ClassificationResult::PaperInjective { form: inj(3, 1, 0) }
        );
        assert_eq!(
            classify(&images((2, 5), (4, 4)), 12).unwrap(),
            ClassificationResult::PaperInjective { form: inj(3, 1, 2) }
        );
        assert_eq!(
            classify(&images((2, 5), (0, 0)), 12).unwrap(),
            ClassificationResult::PaperSigma {
                form: CanonicalEndo::sigma(2, 3).unwrap()
            }
        );
        assert_eq!(
            classify(&images((0, 0), (0, 0)), 12).unwrap(),
            ClassificationResult::PaperZero
        );
        match classify(&images((3, 3), (0, 0)), 12).unwrap() {
            ClassificationResult::BeyondPaper { label, map } => {
                assert_eq!(label, BeyondPaperLabel::SigmaDegenerateM0);
                assert_eq!(map.get(e(1, 4)), Some(e(3, 3)));
                assert_eq!(map.get(e(4, 4)), Some(BicyclicElement::ONE));
            }
            other => panic!("unexpected {other:?}"),
        }
        match classify(&images((0, 0), (1, 1)), 12).unwrap() {
            ClassificationResult::Inconsistent { witness } => {
                assert_eq!(witness.kind, ViolationKind::Homomorphism)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_endomorphisms_are_surfaced() {
        // a -> b^2a^2, ba -> ba: degree-positive elements to b^2a^2, other idempotents to ba
        match classify(&images((2, 2), (1, 1)), 12).unwrap() {
            ClassificationResult::BeyondPaper { label, .. } => assert_eq!(label, BeyondPaperLabel::Other),
            other => panic!("unexpected {other:?}"),
        }
        match classify(&images((2, 2), (2, 2)), 12).unwrap() {
            ClassificationResult::BeyondPaper { label, .. } => {
                assert_eq!(label, BeyondPaperLabel::ConstantIdempotent)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_idempotent_ba_image_on_tiny_window() {
        // W_0 = {1} cannot see ba, so the idempotency check catches it
        match classify(&images((0, 1), (1, 2)), 0).unwrap() {
            ClassificationResult::Inconsistent { witness } => {
                assert_eq!(witness.x, "b^1a^1");
                assert_eq!(witness.rhs, "b^1a^3");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn strip_examples() {
        let w = WindowSpec::new(8);
        let lifted = CanonicalEndo::inj(3, 1, 2).unwrap();
        let table = WindowMap::tabulate(w, |x| lifted.apply(x)).unwrap();
        let stripped = strip_varsigma(&table, 2).unwrap();
        let base = CanonicalEndo::inj(3, 1, 0).unwrap();
        assert!(stripped.agrees_with(|x| base.apply(x)));

        let id = WindowMap::tabulate(w, Ok).unwrap();
        assert_eq!(strip_varsigma(&id, 0).unwrap(), id);

        let doubling = WindowMap::tabulate(w, |x| CanonicalEndo::lambda(2).apply(x)).unwrap();
        assert_eq!(
            strip_varsigma(&doubling, 1),
            Err(Error::Factoring {
                element: "a^2".into()
            })
        );
    }

    #[test]
    fn strip_rejects_the_bare_idempotent_at_the_lift_level() {
        let w = WindowSpec::new(2);
        let table = WindowMap::tabulate(w, |x| Ok(if x.is_one() { x } else { e(1, 1) })).unwrap();
        assert!(matches!(strip_varsigma(&table, 1), Err(Error::Factoring { .. })));
    }

    #[test]
    fn json_shape() {
        let r = ClassificationResult::PaperInjective {
            form: CanonicalEndo::inj(3, 1, 2).unwrap(),
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"verdict":"PaperInjective","form":{"kind":"inj","p":3,"s":1,"n":2}}"#
        );
        assert_eq!(
            serde_json::to_string(&ClassificationResult::PaperZero).unwrap(),
            r#"{"verdict":"PaperZero"}"#
        );
    }
}
