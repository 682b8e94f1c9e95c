//! Exhaustive homomorphism and isomorphism checks over finite windows.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnWindow,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `map(x·y) != map(x)·map(y)`
    Homomorphism,
    /// Two distinct points with the same image.
    Injectivity,
    /// A target point that no window point reaches.
    Surjectivity,
    /// A stated identity between two computed values fails.
    Law,
    Overflow,
    /// Evaluation failed for a reason other than overflow.
    Error,
}

/// One failed check. `lhs` is the image of the product, `rhs` the product of images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub x: String,
    pub y: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub checked: u64,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl HomReport {
    pub fn new(checked: u64, violations: Vec<Violation>) -> Self {
        let verdict = if violations.is_empty() {
            Verdict::HoldsOnWindow
        } else {
            Verdict::Violated
        };
        HomReport {
            checked,
            verdict,
            violations,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsOnWindow
    }

    /// Concatenates two reports.
    pub fn merge(mut self, other: HomReport) -> HomReport {
        self.violations.extend(other.violations);
        HomReport::new(self.checked + other.checked, self.violations)
    }
}

fn render<T: Display>(value: &Result<T>) -> String {
    match value {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    }
}

fn failure_kind<T>(values: &[&Result<T>]) -> ViolationKind {
    if values
        .iter()
        .any(|v| matches!(v, Err(Error::Overflow(_))))
    {
        ViolationKind::Overflow
    } else {
        ViolationKind::Error
    }
}

/// Checks `map(x·y) = map(x)·map(y)` for every ordered pair of `domain`.
/// Evaluation errors are recorded as violations, never propagated.
pub fn check_homomorphism<D, C>(
    domain: &[D],
    domain_op: impl Fn(&D, &D) -> Result<D>,
    map: impl Fn(&D) -> Result<C>,
    codomain_op: impl Fn(&C, &C) -> Result<C>,
) -> HomReport
where
    D: Display,
    C: Display + PartialEq,
{
    let images: Vec<Result<C>> = domain.iter().map(&map).collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for (x, fx) in domain.iter().zip(&images) {
        for (y, fy) in domain.iter().zip(&images) {
            checked += 1;
            let lhs = domain_op(x, y).and_then(|xy| map(&xy));
            let rhs = match (fx, fy) {
                (Ok(a), Ok(b)) => codomain_op(a, b),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            let kind = match (&lhs, &rhs) {
                (Ok(l), Ok(r)) if l == r => continue,
                (Ok(_), Ok(_)) => ViolationKind::Homomorphism,
                _ => failure_kind(&[&lhs, &rhs]),
            };
            violations.push(Violation {
                kind,
                x: x.to_string(),
                y: y.to_string(),
                lhs: render(&lhs),
                rhs: render(&rhs),
            });
        }
    }
    HomReport::new(checked, violations)
}

/// Homomorphism on `forward`, injectivity on `forward`, and every point of
/// `backward` reached from `forward`.
pub fn check_isomorphism_window<D, C>(
    forward: &[D],
    domain_op: impl Fn(&D, &D) -> Result<D>,
    map: impl Fn(&D) -> Result<C>,
    codomain_op: impl Fn(&C, &C) -> Result<C>,
    backward: &[C],
) -> HomReport
where
    D: Display,
    C: Display + PartialEq,
{
    let hom = check_homomorphism(forward, domain_op, &map, codomain_op);
    let images: Vec<Result<C>> = forward.iter().map(&map).collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for (k, (x, fx)) in forward.iter().zip(&images).enumerate() {
        let Ok(fx) = fx else {
            violations.push(Violation {
                kind: failure_kind(&[fx]),
                x: x.to_string(),
                y: String::new(),
                lhs: render(fx),
                rhs: String::new(),
            });
            continue;
        };
        for (y, fy) in forward[k + 1..].iter().zip(&images[k + 1..]) {
            checked += 1;
            if matches!(fy, Ok(fy) if fy == fx) {
                violations.push(Violation {
                    kind: ViolationKind::Injectivity,
                    x: x.to_string(),
                    y: y.to_string(),
                    lhs: fx.to_string(),
                    rhs: fx.to_string(),
                });
            }
        }
    }
    for target in backward {
        checked += 1;
        if !images.iter().any(|img| matches!(img, Ok(v) if v == target)) {
            violations.push(Violation {
                kind: ViolationKind::Surjectivity,
                x: String::new(),
                y: String::new(),
                lhs: String::new(),
                rhs: target.to_string(),
            });
        }
    }
    hom.merge(HomReport::new(checked, violations))
}
