//! Abstract semigroups used as models for the endomorphism subsemigroups:
//! additive and multiplicative integers, the right-zero semigroup on `ω`,
//! direct and semidirect products, and the triple law on `ℕ³`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::BicyclicElement;
use crate::endo::CanonicalEndo;
use crate::error::{Error, Result};
use crate::hom::{check_homomorphism, HomReport};

/// How the acting factor of a semidirect product twists the base factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    /// `(s)φ_t = t·s`
    Multiply,
    /// `(s)φ_t = s`
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `(s1,t1)·(s2,t2) = (s1 · (s2)φ_t1, t1·t2)`
    Left,
    /// `(s1,t1)·(s2,t2) = ((s1)φ_t2 · s2, t1·t2)`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureDescriptor {
    /// `(ω, +)`
    OmegaPlus,
    /// `(ω, ·)`
    OmegaTimes,
    /// `(ℕ, ·)`
    NatTimes,
    /// `(ℕ, +)`
    NatPlus,
    /// `(ℤ, +)`
    IntPlus,
    /// `ω` with `xy = y`
    RightZeroOmega,
    Direct(Box<StructureDescriptor>, Box<StructureDescriptor>),
    Semidirect {
        base: Box<StructureDescriptor>,
        acting: Box<StructureDescriptor>,
        action: Action,
        convention: Convention,
    },
    /// `(p1,s1,n1)·(p2,s2,n2) = (p2p1, p2s1, p2n1 - s2 + n2)` with `p, n >= 1`, `s >= 0`.
    TripleLaw,
}

/// A point of an abstract structure; the coordinate layout is fixed by the
/// descriptor (base coordinates first, then acting ones, for products).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbstractElement {
    pub coords: Vec<i64>,
}

impl AbstractElement {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        AbstractElement {
            coords: coords.into(),
        }
    }

    pub fn scalar(v: i64) -> Self {
        AbstractElement { coords: vec![v] }
    }
}

impl fmt::Display for AbstractElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [v] = self.coords.as_slice() {
            return write!(f, "{v}");
        }
        write!(f, "(")?;
        for (k, v) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn overflow() -> Error {
    Error::Overflow("abstract structure product")
}

impl StructureDescriptor {
    pub fn direct(left: StructureDescriptor, right: StructureDescriptor) -> Self {
        StructureDescriptor::Direct(Box::new(left), Box::new(right))
    }

    pub fn semidirect(
        base: StructureDescriptor,
        acting: StructureDescriptor,
        action: Action,
        convention: Convention,
    ) -> Self {
        StructureDescriptor::Semidirect {
            base: Box::new(base),
            acting: Box::new(acting),
            action,
            convention,
        }
    }

    pub fn arity(&self) -> usize {
        use StructureDescriptor::*;
        match self {
            OmegaPlus | OmegaTimes | NatTimes | NatPlus | IntPlus | RightZeroOmega => 1,
            Direct(l, r) => l.arity() + r.arity(),
            Semidirect { base, acting, .. } => base.arity() + acting.arity(),
            TripleLaw => 3,
        }
    }

    pub fn contains(&self, x: &AbstractElement) -> bool {
        self.contains_coords(&x.coords)
    }

    fn contains_coords(&self, c: &[i64]) -> bool {
        use StructureDescriptor::*;
        if c.len() != self.arity() {
            return false;
        }
        match self {
            OmegaPlus | OmegaTimes | RightZeroOmega => c[0] >= 0,
            NatTimes | NatPlus => c[0] >= 1,
            IntPlus => true,
            Direct(l, r) => {
                let (a, b) = c.split_at(l.arity());
                l.contains_coords(a) && r.contains_coords(b)
            }
            Semidirect { base, acting, .. } => {
                let (a, b) = c.split_at(base.arity());
                base.contains_coords(a) && acting.contains_coords(b)
            }
            TripleLaw => c[0] >= 1 && c[1] >= 0 && c[2] >= 1,
        }
    }

    /// The structure's product of `x` and `y`.
    pub fn product(&self, x: &AbstractElement, y: &AbstractElement) -> Result<AbstractElement> {
        for z in [x, y] {
            if !self.contains(z) {
                return Err(Error::Domain(format!("{z} is not in the carrier of {self}")));
            }
        }
        let coords = self.product_coords(&x.coords, &y.coords)?;
        Ok(AbstractElement { coords })
    }

    fn product_coords(&self, x: &[i64], y: &[i64]) -> Result<Vec<i64>> {
        use StructureDescriptor::*;
        let add = |a: i64, b: i64| a.checked_add(b).ok_or_else(overflow);
        let mul = |a: i64, b: i64| a.checked_mul(b).ok_or_else(overflow);
        Ok(match self {
            OmegaPlus | NatPlus | IntPlus => vec![add(x[0], y[0])?],
            OmegaTimes | NatTimes => vec![mul(x[0], y[0])?],
            RightZeroOmega => vec![y[0]],
            Direct(l, r) => {
                let k = l.arity();
                let mut out = l.product_coords(&x[..k], &y[..k])?;
                out.extend(r.product_coords(&x[k..], &y[k..])?);
                out
            }
            Semidirect {
                base,
                acting,
                action,
                convention,
            } => {
                let k = base.arity();
                let (s1, t1) = x.split_at(k);
                let (s2, t2) = y.split_at(k);
                let s = match convention {
                    Convention::Left => {
                        let twisted = act(*action, t1, s2)?;
                        base.product_coords(s1, &twisted)?
                    }
                    Convention::Right => {
                        let twisted = act(*action, t2, s1)?;
                        base.product_coords(&twisted, s2)?
                    }
                };
                if !base.contains_coords(&s) {
                    return Err(Error::Validation(format!(
                        "twisted product leaves the base carrier {base}"
                    )));
                }
                let mut out = s;
                out.extend(acting.product_coords(t1, t2)?);
                out
            }
            TripleLaw => {
                let (p1, s1, n1) = (x[0], x[1], x[2]);
                let (p2, s2, n2) = (y[0], y[1], y[2]);
                let n = add(mul(p2, n1)? - s2, n2)?;
                if n <= 0 {
                    return Err(Error::Validation(format!(
                        "triple product has third coordinate {n} <= 0"
                    )));
                }
                vec![mul(p2, p1)?, mul(p2, s1)?, n]
            }
        })
    }

    /// All carrier points with every coordinate in `[-bound, bound]`,
    /// further clipped to the carrier; triples also satisfy `s <= p - 1`.
    pub fn window(&self, bound: i64) -> Vec<AbstractElement> {
        self.window_coords(bound)
            .into_iter()
            .map(AbstractElement::new)
            .collect()
    }

    fn window_coords(&self, bound: i64) -> Vec<Vec<i64>> {
        use StructureDescriptor::*;
        let range = |lo: i64| (lo..=bound).map(|v| vec![v]).collect();
        match self {
            OmegaPlus | OmegaTimes | RightZeroOmega => range(0),
            NatTimes | NatPlus => range(1),
            IntPlus => range(-bound),
            Direct(l, r) => cartesian(l.window_coords(bound), r.window_coords(bound)),
            Semidirect { base, acting, .. } => {
                cartesian(base.window_coords(bound), acting.window_coords(bound))
            }
            TripleLaw => {
                let mut out = Vec::new();
                for p in 1..=bound {
                    for s in 0..p {
                        for n in 1..=bound {
                            out.push(vec![p, s, n]);
                        }
                    }
                }
                out
            }
        }
    }
}

fn cartesian(left: Vec<Vec<i64>>, right: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in &left {
        for b in &right {
            out.push(a.iter().chain(b).copied().collect());
        }
    }
    out
}

fn act(action: Action, by: &[i64], on: &[i64]) -> Result<Vec<i64>> {
    match action {
        Action::Trivial => Ok(on.to_vec()),
        Action::Multiply => {
            let [t] = by else {
                return Err(Error::Domain(
                    "multiplicative action needs a one-coordinate acting factor".into(),
                ));
            };
            on.iter()
                .map(|s| s.checked_mul(*t).ok_or_else(overflow))
                .collect()
        }
    }
}

impl fmt::Display for StructureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StructureDescriptor::*;
        match self {
            OmegaPlus => write!(f, "(ω,+)"),
            OmegaTimes => write!(f, "(ω,*)"),
            NatTimes => write!(f, "(ℕ,*)"),
            NatPlus => write!(f, "(ℕ,+)"),
            IntPlus => write!(f, "(ℤ,+)"),
            RightZeroOmega => write!(f, "RZ(ω)"),
            Direct(l, r) => write!(f, "{l}×{r}"),
            Semidirect {
                base,
                acting,
                action,
                convention,
            } => write!(f, "{base}⋊{acting}[{action:?},{convention:?}]"),
            TripleLaw => write!(f, "ℕ³[triple]"),
        }
    }
}

/// Product of `x` and `y` in the structure `descriptor`.
pub fn product_in(
    descriptor: &StructureDescriptor,
    x: &AbstractElement,
    y: &AbstractElement,
) -> Result<AbstractElement> {
    descriptor.product(x, y)
}

/// Checks that `map` carries composition of canonical forms to the product of `codomain`.
pub fn check_homomorphism_into(
    domain: &[CanonicalEndo],
    map: impl Fn(&CanonicalEndo) -> Result<AbstractElement>,
    codomain: &StructureDescriptor,
) -> HomReport {
    check_homomorphism(domain, |f, g| f.compose(g), map, |x, y| codomain.product(x, y))
}

/// The embedding `(ω,+) -> C(a,b)`: `0 -> b^i a^i`, `n >= 1 -> (b^j a^(j+k))^n`.
pub fn omega_embedding(i: u64, j: u64, k: u64) -> Result<impl Fn(u64) -> Result<BicyclicElement>> {
    if j < i {
        return Err(Error::Domain(format!("embedding needs j >= i (got i={i}, j={j})")));
    }
    if k == 0 {
        return Err(Error::Domain("embedding needs k >= 1".into()));
    }
    Ok(move |n: u64| {
        if n == 0 {
            Ok(BicyclicElement::new(i, i))
        } else {
            BicyclicElement::new(j, j.checked_add(k).ok_or(Error::Overflow("embedding"))?).power(n)
        }
    })
}

/// `sigma(l, m)` built as the degree map followed by `omega_embedding(0, l, m)`.
pub fn sigma_from_factorization(
    l: u64,
    m: u64,
) -> Result<impl Fn(BicyclicElement) -> Result<BicyclicElement>> {
    if m == 0 {
        return Err(Error::Validation("sigma requires m > 0".into()));
    }
    let embed = omega_embedding(0, l, m)?;
    Ok(move |x: BicyclicElement| {
        let degree = u64::try_from(x.mg_degree())
            .map_err(|_| Error::Domain(format!("{x} is not in C+(a,b)")))?;
        embed(degree)
    })
}

/// Outcome of testing one semidirect-product reading as the target of
/// `Inj(n,s,0) -> coordinates`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingCandidate {
    pub label: String,
    pub descriptor: StructureDescriptor,
    pub report: HomReport,
}

/// Tests the four readings of "scaling maps with shift embed in a semidirect
/// product of `(ℕ,*)` and `(ω,+)`" against composition of `Inj(n,s,0)` for
/// `n <= bound`.
///
/// * `(ℕ,*)⋊(ω,+)` with `(p)φ_n = np`, element `(n, s)`, both conventions;
/// * `(ω,+)⋊(ℕ,*)` with `(s)φ_n = ns`, element `(s, n)`, both conventions.
pub fn scaling_embedding_candidates(bound: u64) -> Vec<EmbeddingCandidate> {
    let domain: Vec<CanonicalEndo> = (1..=bound)
        .flat_map(|n| (0..n).map(move |s| CanonicalEndo::Inj { scale: n, shift: s, lift: 0 }))
        .collect();
    let coords = |f: &CanonicalEndo, scale_first: bool| -> Result<AbstractElement> {
        match *f {
            CanonicalEndo::Inj { scale, shift, lift: 0 } => {
                let (n, s) = (scale as i64, shift as i64);
                Ok(AbstractElement::new(if scale_first { [n, s] } else { [s, n] }))
            }
            other => Err(Error::Domain(format!("{other} is not a shifted scaling"))),
        }
    };
    let mut out = Vec::new();
    for convention in [Convention::Left, Convention::Right] {
        let descriptor = StructureDescriptor::semidirect(
            StructureDescriptor::NatTimes,
            StructureDescriptor::OmegaPlus,
            Action::Multiply,
            convention,
        );
        let report = check_homomorphism_into(&domain, |f| coords(f, true), &descriptor);
        out.push(EmbeddingCandidate {
            label: format!("(N,*) x| (w,+), (p)phi_n = np, {convention:?} convention, (n,s)"),
            descriptor,
            report,
        });
    }
    for convention in [Convention::Left, Convention::Right] {
        let descriptor = StructureDescriptor::semidirect(
            StructureDescriptor::OmegaPlus,
            StructureDescriptor::NatTimes,
            Action::Multiply,
            convention,
        );
        let report = check_homomorphism_into(&domain, |f| coords(f, false), &descriptor);
        out.push(EmbeddingCandidate {
            label: format!("(w,+) x| (N,*), (s)phi_n = ns, {convention:?} convention, (s,n)"),
            descriptor,
            report,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::window::WindowSpec;
    use StructureDescriptor::*;

    fn el(c: &[i64]) -> AbstractElement {
        AbstractElement::new(c.to_vec())
    }

    #[test]
    fn product_examples() {
        assert_eq!(TripleLaw.product(&el(&[2, 1, 1]), &el(&[3, 2, 2])).unwrap(), el(&[6, 3, 3]));
        assert_eq!(RightZeroOmega.product(&el(&[7]), &el(&[4])).unwrap(), el(&[4]));
        assert_eq!(OmegaTimes.product(&el(&[1]), &el(&[9])).unwrap(), el(&[9]));
        let rz_nat = StructureDescriptor::direct(RightZeroOmega, NatTimes);
        assert_eq!(rz_nat.product(&el(&[1, 2]), &el(&[3, 4])).unwrap(), el(&[3, 8]));
    }

    #[test]
    fn carrier_and_validation_errors() {
        assert!(matches!(NatTimes.product(&el(&[0]), &el(&[2])), Err(Error::Domain(_))));
        assert!(matches!(OmegaPlus.product(&el(&[1, 2]), &el(&[2])), Err(Error::Domain(_))));
        // carrier-valid but the twisted product 0·p leaves (ℕ,*)
        let literal = StructureDescriptor::semidirect(NatTimes, OmegaPlus, Action::Multiply, Convention::Left);
        assert!(matches!(
            literal.product(&el(&[2, 0]), &el(&[3, 1])),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            TripleLaw.product(&el(&[1, 0, 1]), &el(&[1, 5, 1])),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            OmegaTimes.product(&el(&[i64::MAX]), &el(&[2])),
            Err(Error::Overflow(_))
        ));
    }

    fn assert_associative(d: &StructureDescriptor, bound: i64) {
        let w = d.window(bound);
        for x in &w {
            for y in &w {
                let xy = d.product(x, y).unwrap();
                for z in &w {
                    let yz = d.product(y, z).unwrap();
                    assert_eq!(d.product(&xy, z).unwrap(), d.product(x, &yz).unwrap(), "{d}: {x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn products_are_associative_on_windows() {
        for d in [OmegaPlus, OmegaTimes, NatTimes, NatPlus, IntPlus, RightZeroOmega] {
            assert_associative(&d, 8);
        }
        assert_associative(&TripleLaw, 5);
        assert_associative(&StructureDescriptor::direct(RightZeroOmega, NatTimes), 6);
        for convention in [Convention::Left, Convention::Right] {
            assert_associative(
                &StructureDescriptor::semidirect(OmegaPlus, NatTimes, Action::Multiply, convention),
                6,
            );
            assert_associative(
                &StructureDescriptor::semidirect(IntPlus, NatTimes, Action::Multiply, convention),
                4,
            );
            assert_associative(
                &StructureDescriptor::semidirect(NatTimes, OmegaPlus, Action::Trivial, convention),
                6,
            );
        }
    }

    #[test]
    fn triple_law_stays_in_canonical_range() {
        for x in TripleLaw.window(6) {
            for y in TripleLaw.window(6) {
                let z = TripleLaw.product(&x, &y).unwrap();
                let (p, s, n) = (z.coords[0], z.coords[1], z.coords[2]);
                assert!(s < p && n >= 1, "{x}·{y} = {z}");
            }
        }
    }

    #[test]
    fn omega_embedding_examples() {
        let j = omega_embedding(1, 2, 3).unwrap();
        assert_eq!(j(0).unwrap(), BicyclicElement::new(1, 1));
        assert_eq!(j(1).unwrap(), BicyclicElement::new(2, 5));
        assert_eq!(j(2).unwrap(), BicyclicElement::new(2, 8));
        assert!(omega_embedding(3, 2, 1).is_err());
        assert!(omega_embedding(0, 0, 0).is_err());
    }

    #[test]
    fn sigma_factorization_matches_canonical_form() {
        let s = sigma_from_factorization(2, 3).unwrap();
        assert_eq!(s(BicyclicElement::new(1, 4)).unwrap(), BicyclicElement::new(2, 11));
        assert_eq!(s(BicyclicElement::new(5, 5)).unwrap(), BicyclicElement::ONE);
        let canonical = CanonicalEndo::sigma(2, 3).unwrap();
        for x in WindowSpec::new(12).elements() {
            assert_eq!(s(x).unwrap(), canonical.apply(x).unwrap());
        }
        assert!(sigma_from_factorization(1, 0).is_err());
    }

    #[test]
    fn only_the_mirrored_reading_embeds_shifted_scalings() {
        let candidates = scaling_embedding_candidates(6);
        let holds: Vec<bool> = candidates.iter().map(|c| c.report.holds()).collect();
        assert_eq!(holds, [false, false, false, true]);
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&el(&[1, 2])).unwrap(), "[1,2]");
        let d = StructureDescriptor::direct(RightZeroOmega, NatTimes);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"direct":["right-zero-omega","nat-times"]}"#
        );
    }
}
