//! Named verification suites. Each suite is a thin driver over the library
//! operations: it sweeps a bounded parameter range and collects every failed
//! identity as a [`Violation`].

use std::collections::BTreeSet;
use std::fmt::Display;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::{b_consistency, classify, strip_varsigma, BeyondPaperLabel, ClassificationResult, GeneratorImages};
use crate::element::{natural_leq, BicyclicElement};
use crate::endo::{canonical_forms, CanonicalEndo, IDENTITY};
use crate::error::{Error, Result};
use crate::hom::{check_homomorphism, check_isomorphism_window, HomReport, Violation, ViolationKind};
use crate::search::{enumerate, pointwise_compose_oracle, SearchConfig};
use crate::structures::{
    check_homomorphism_into, omega_embedding, scaling_embedding_candidates, sigma_from_factorization,
    AbstractElement, StructureDescriptor,
};
use crate::window::{WindowMap, WindowSpec};

/// Window used for pointwise comparisons in the law sweeps.
pub const LAW_WINDOW: u64 = 12;
/// Window used by the composition-table sweep.
pub const TABLE_WINDOW: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    CoreAxioms,
    CompositionTable,
    SigmaComposition,
    SigmaScaling,
    ShiftedScaling,
    TripleLaw,
    ScalingIsomorphism,
    SigmaIsomorphism,
    LiftIsomorphism,
    IdentityZeroIdeal,
    InjectiveClassification,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::CoreAxioms,
        Suite::CompositionTable,
        Suite::SigmaComposition,
        Suite::SigmaScaling,
        Suite::ShiftedScaling,
        Suite::TripleLaw,
        Suite::ScalingIsomorphism,
        Suite::SigmaIsomorphism,
        Suite::LiftIsomorphism,
        Suite::IdentityZeroIdeal,
        Suite::InjectiveClassification,
    ];

    /// Name accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreAxioms => "core-axioms",
            Suite::CompositionTable => "composition-table",
            Suite::SigmaComposition => "law-2.4",
            Suite::SigmaScaling => "law-2.6",
            Suite::ShiftedScaling => "law-3.3",
            Suite::TripleLaw => "law-3.11",
            Suite::ScalingIsomorphism => "iso-2.1",
            Suite::SigmaIsomorphism => "iso-2.5",
            Suite::LiftIsomorphism => "iso-3.6",
            Suite::IdentityZeroIdeal => "ideal-2.7",
            Suite::InjectiveClassification => "thm-3.10",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::CoreAxioms => "associativity, identity, C+ closure, degree additivity, idempotent order, powers on W_B",
            Suite::CompositionTable => "closed-form compose agrees with the pointwise composite for all forms with parameters <= bound, on W_16",
            Suite::SigmaComposition => "sigma(l1,m1) then sigma(l2,m2) = sigma(l2, m1*m2)",
            Suite::SigmaScaling => "sigma(l,m) then lambda(k) = sigma(kl,km); lambda(k) then sigma(l,m) = sigma(l,km)",
            Suite::ShiftedScaling => "lambda(n1,s1) then lambda(n2,s2) = lambda(n1n2, s1n2+s2) with s1n2+s2 < n1n2",
            Suite::TripleLaw => "lifted forms compose by (p1,s1,n1).(p2,s2,n2) = (p2p1, p2s1, p2n1-s2+n2)",
            Suite::ScalingIsomorphism => "lambda(k) -> k is an isomorphism onto (w,*)",
            Suite::SigmaIsomorphism => "sigma(l,m) -> (l,m) onto RZ(w) x (N,*); (w,+) embeddings; sigma via degree map",
            Suite::LiftIsomorphism => "vs^n -> n is an isomorphism onto (N,+)",
            Suite::IdentityZeroIdeal => "id is the identity, zero the zero, and {sigma} u {zero} a two-sided ideal",
            Suite::InjectiveClassification => "bounded search: injective candidates are exactly the lifted shifted scalings",
        }
    }

    /// Default for the suite's main bound (parameter bound, or window bound
    /// for `core-axioms` and `thm-3.10`).
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::CoreAxioms => 12,
            Suite::CompositionTable => 4,
            Suite::SigmaComposition | Suite::SigmaScaling | Suite::ShiftedScaling | Suite::TripleLaw => 6,
            Suite::ScalingIsomorphism | Suite::LiftIsomorphism => 8,
            Suite::SigmaIsomorphism => 6,
            Suite::IdentityZeroIdeal => 5,
            Suite::InjectiveClassification => 12,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Validation(format!("unknown suite `{name}` (known: {})", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub bound: Option<u64>,
    /// Generator exponent bound, used by `thm-3.10` only.
    pub gen_exp: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub report: HomReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub description: &'static str,
    pub bound: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Informational findings that do not affect `passed`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, bound: u64, checks: Vec<Check>, notes: Vec<String>) -> Self {
        SuiteReport {
            suite: suite.name(),
            description: suite.description(),
            bound,
            passed: checks.iter().all(|c| c.report.holds()),
            checks,
            notes,
        }
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.report.violations.len()).sum()
    }
}

pub fn run_suite(suite: Suite, options: SuiteOptions) -> Result<SuiteReport> {
    let bound = options.bound.unwrap_or(suite.default_bound());
    let mut notes = Vec::new();
    let checks = match suite {
        Suite::CoreAxioms => core_axioms(bound),
        Suite::CompositionTable => vec![composition_table(bound, TABLE_WINDOW)],
        Suite::SigmaComposition => vec![sigma_composition_law(bound)],
        Suite::SigmaScaling => sigma_scaling_laws(bound),
        Suite::ShiftedScaling => {
            for candidate in scaling_embedding_candidates(bound) {
                let verdict = if candidate.report.holds() { "homomorphism" } else { "not a homomorphism" };
                notes.push(format!("{}: {verdict}", candidate.label));
            }
            shifted_scaling_law(bound)
        }
        Suite::TripleLaw => triple_law(bound),
        Suite::ScalingIsomorphism => vec![scaling_isomorphism(bound)],
        Suite::SigmaIsomorphism => vec![
            sigma_isomorphism(bound),
            omega_embedding_check(3, 6),
            sigma_factorization_check(bound, LAW_WINDOW),
        ],
        Suite::LiftIsomorphism => vec![lift_isomorphism(bound)],
        Suite::IdentityZeroIdeal => identity_zero_ideal(bound),
        Suite::InjectiveClassification => {
            let gen_exp = options.gen_exp.unwrap_or(8);
            let (checks, summary) = injective_classification(gen_exp, bound)?;
            notes.push(summary);
            checks
        }
    };
    Ok(SuiteReport::new(suite, bound, checks, notes))
}

/// Accumulates `lhs == rhs` comparisons.
#[derive(Default)]
struct Tally {
    checked: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn expect_eq<T: Display + PartialEq>(&mut self, x: impl Display, y: impl Display, lhs: Result<T>, rhs: Result<T>) {
        self.checked += 1;
        let kind = match (&lhs, &rhs) {
            (Ok(l), Ok(r)) if l == r => return,
            (Ok(_), Ok(_)) => ViolationKind::Law,
            (Err(Error::Overflow(_)), _) | (_, Err(Error::Overflow(_))) => ViolationKind::Overflow,
            _ => ViolationKind::Error,
        };
        let show = |v: &Result<T>| match v {
            Ok(v) => v.to_string(),
            Err(e) => e.to_string(),
        };
        self.violations.push(Violation {
            kind,
            x: x.to_string(),
            y: y.to_string(),
            lhs: show(&lhs),
            rhs: show(&rhs),
        });
    }

    /// Records a violation with `what` as its description when `holds` is false.
    fn expect(&mut self, x: impl Display, y: impl Display, holds: bool, what: &str) {
        self.checked += 1;
        if !holds {
            self.violations.push(Violation {
                kind: ViolationKind::Law,
                x: x.to_string(),
                y: y.to_string(),
                lhs: what.to_owned(),
                rhs: String::new(),
            });
        }
    }

    /// Compares `form` with the pointwise composite "f then g" on `W_bound`.
    fn expect_pointwise(&mut self, f: &CanonicalEndo, g: &CanonicalEndo, form: &CanonicalEndo, bound: u64) {
        let composite = pointwise_compose_oracle(|x| f.apply(x), |x| g.apply(x), bound);
        let claimed = WindowMap::tabulate(WindowSpec::new(bound), |x| form.apply(x));
        let label = format!("{f} ; {g}");
        match (composite, claimed) {
            (Ok(c), Ok(d)) => {
                self.checked += 1;
                if let Some(at) = c.first_difference(&d) {
                    self.violations.push(Violation {
                        kind: ViolationKind::Law,
                        x: label,
                        y: at.to_string(),
                        lhs: format!("{form} gives {}", d.get(at).map_or("?".into(), |v| v.to_string())),
                        rhs: format!("pointwise gives {}", c.get(at).map_or("?".into(), |v| v.to_string())),
                    });
                }
            }
            (c, d) => self.expect_eq(label, form, c, d),
        }
    }

    fn into_check(self, name: &str) -> Check {
        Check {
            name: name.to_owned(),
            report: HomReport::new(self.checked, self.violations),
        }
    }
}

fn pair_label(x: impl Display, y: impl Display) -> String {
    format!("{x} , {y}")
}

/// Element axioms, exhaustively on `W_bound`.
pub fn core_axioms(bound: u64) -> Vec<Check> {
    let window: Vec<BicyclicElement> = WindowSpec::new(bound).elements().collect();
    let mul = |x: BicyclicElement, y: BicyclicElement| x.multiply(y);

    let mut assoc = Tally::default();
    for &x in &window {
        for &y in &window {
            let xy = mul(x, y);
            for &z in &window {
                let yz = mul(y, z);
                assoc.expect_eq(
                    pair_label(x, y),
                    z,
                    xy.clone().and_then(|xy| mul(xy, z)),
                    yz.and_then(|yz| mul(x, yz)),
                );
            }
        }
    }

    let mut identity = Tally::default();
    for &x in &window {
        identity.expect_eq(x, "1", mul(BicyclicElement::ONE, x), Ok(x));
        identity.expect_eq(x, "1", mul(x, BicyclicElement::ONE), Ok(x));
    }

    let mut closure = Tally::default();
    let mut degree = Tally::default();
    for &x in &window {
        for &y in &window {
            let xy = mul(x, y);
            closure.expect(x, y, xy.as_ref().is_ok_and(|p| p.in_plus()), "product left C+");
            degree.expect_eq(x, y, xy.map(|p| p.mg_degree()), Ok(x.mg_degree() + y.mg_degree()));
            degree.expect(x, y, x.mg_degree() >= 0, "negative degree on C+");
        }
    }

    let mut idempotents = Tally::default();
    for &x in &window {
        idempotents.expect_eq(x, "x·x = x", Ok(mul(x, x).ok() == Some(x)), Ok(x.is_idempotent()));
    }
    for t in 0..=bound {
        for u in 0..=bound {
            let (e, f) = (BicyclicElement::new(t, t), BicyclicElement::new(u, u));
            idempotents.expect_eq(e, f, natural_leq(e, f), Ok(t >= u));
        }
    }

    let mut powers = Tally::default();
    for j in 0..=6 {
        for k in 0..=6 {
            let x = BicyclicElement::new(j, j + k);
            let mut repeated = BicyclicElement::ONE;
            for n in 1..=6u64 {
                repeated = mul(repeated, x).expect("small exponents");
                powers.expect_eq(x, n, x.power(n), Ok(repeated));
                powers.expect_eq(x, n, x.power(n), Ok(BicyclicElement::new(j, j + n * k)));
            }
        }
    }

    vec![
        assoc.into_check("associativity"),
        identity.into_check("identity"),
        closure.into_check("C+ closure"),
        degree.into_check("degree additivity"),
        idempotents.into_check("idempotents and natural order"),
        powers.into_check("powers"),
    ]
}

/// Every pair of canonical forms with parameters `<= param_bound`.
pub fn composition_table(param_bound: u64, window: u64) -> Check {
    let forms = canonical_forms(param_bound);
    let mut tally = Tally::default();
    for f in &forms {
        for g in &forms {
            match f.compose(g) {
                Ok(h) => tally.expect_pointwise(f, g, &h, window),
                Err(e) => tally.expect_eq(f, g, Err::<CanonicalEndo, _>(e), Ok(*f)),
            }
        }
    }
    tally.into_check("composition table")
}

fn sigmas(bound: u64) -> Vec<CanonicalEndo> {
    (0..=bound)
        .flat_map(|l| (1..=bound).map(move |m| CanonicalEndo::Sigma { l, m }))
        .collect()
}

fn shifted_scalings(bound: u64) -> Vec<CanonicalEndo> {
    (1..=bound)
        .flat_map(|n| (0..n).map(move |s| CanonicalEndo::Inj { scale: n, shift: s, lift: 0 }))
        .collect()
}

pub fn sigma_composition_law(bound: u64) -> Check {
    let mut tally = Tally::default();
    for f in sigmas(bound) {
        for g in sigmas(bound) {
            let (CanonicalEndo::Sigma { m: m1, .. }, CanonicalEndo::Sigma { l: l2, m: m2 }) = (f, g) else {
                unreachable!()
            };
            let law = CanonicalEndo::Sigma { l: l2, m: m1 * m2 };
            tally.expect_eq(f, g, f.compose(&g), Ok(law));
            tally.expect_pointwise(&f, &g, &law, LAW_WINDOW);
        }
    }
    tally.into_check("sigma composition")
}

pub fn sigma_scaling_laws(bound: u64) -> Vec<Check> {
    let mut after = Tally::default();
    let mut before = Tally::default();
    for sigma in sigmas(bound) {
        let CanonicalEndo::Sigma { l, m } = sigma else { unreachable!() };
        for k in 1..=bound {
            let lambda = CanonicalEndo::lambda(k);
            let law = CanonicalEndo::Sigma { l: k * l, m: k * m };
            after.expect_eq(sigma, lambda, sigma.compose(&lambda), Ok(law));
            after.expect_pointwise(&sigma, &lambda, &law, LAW_WINDOW);

            let law = CanonicalEndo::Sigma { l, m: k * m };
            before.expect_eq(lambda, sigma, lambda.compose(&sigma), Ok(law));
            before.expect_pointwise(&lambda, &sigma, &law, LAW_WINDOW);
        }
    }
    vec![
        after.into_check("sigma then scaling"),
        before.into_check("scaling then sigma"),
    ]
}

pub fn shifted_scaling_law(bound: u64) -> Vec<Check> {
    let forms = shifted_scalings(bound);
    let mut law_tally = Tally::default();
    let mut shift_bound = Tally::default();
    for f in &forms {
        for g in &forms {
            let (
                CanonicalEndo::Inj { scale: n1, shift: s1, .. },
                CanonicalEndo::Inj { scale: n2, shift: s2, .. },
            ) = (*f, *g)
            else {
                unreachable!()
            };
            let law = CanonicalEndo::Inj {
                scale: n1 * n2,
                shift: s1 * n2 + s2,
                lift: 0,
            };
            law_tally.expect_eq(f, g, f.compose(g), Ok(law));
            law_tally.expect_pointwise(f, g, &law, LAW_WINDOW);
            shift_bound.expect(f, g, s1 * n2 + s2 < n1 * n2, "s1*n2 + s2 >= n1*n2");
        }
    }
    // (n,s) with (n1,s1)(n2,s2) = (n1n2, s1n2+s2)
    let coords = |f: &CanonicalEndo| match *f {
        CanonicalEndo::Inj { scale, shift, lift: 0 } => Ok((scale, shift)),
        other => Err(Error::Domain(format!("{other} is not a shifted scaling"))),
    };
    let phi = check_homomorphism(
        &forms,
        |f, g| f.compose(g),
        |f| coords(f).map(|(n, s)| AbstractElement::new([n as i64, s as i64])),
        |x, y| {
            let (n1, s1, n2, s2) = (x.coords[0], x.coords[1], y.coords[0], y.coords[1]);
            Ok(AbstractElement::new([n1 * n2, s1 * n2 + s2]))
        },
    );
    vec![
        law_tally.into_check("shifted scaling composition"),
        shift_bound.into_check("shift bound"),
        Check {
            name: "(n,s) coordinates respect the law".into(),
            report: phi,
        },
    ]
}

pub fn triple_law(bound: u64) -> Vec<Check> {
    let forms: Vec<CanonicalEndo> = (1..=bound)
        .flat_map(|p| {
            (0..p).flat_map(move |s| (1..=bound).map(move |n| CanonicalEndo::Inj { scale: p, shift: s, lift: n }))
        })
        .collect();
    let mut tally = Tally::default();
    for f in &forms {
        for g in &forms {
            let (
                CanonicalEndo::Inj { scale: p1, shift: s1, lift: n1 },
                CanonicalEndo::Inj { scale: p2, shift: s2, lift: n2 },
            ) = (*f, *g)
            else {
                unreachable!()
            };
            let law = CanonicalEndo::Inj {
                scale: p2 * p1,
                shift: p2 * s1,
                lift: p2 * n1 - s2 + n2,
            };
            tally.expect_eq(f, g, f.compose(g), Ok(law));
            tally.expect_pointwise(f, g, &law, LAW_WINDOW);
        }
    }
    let to_triple = |f: &CanonicalEndo| match *f {
        CanonicalEndo::Inj { scale, shift, lift } if lift >= 1 => {
            Ok(AbstractElement::new([scale as i64, shift as i64, lift as i64]))
        }
        other => Err(Error::Domain(format!("{other} has no lift"))),
    };
    let bijection = check_homomorphism_into(&forms, to_triple, &StructureDescriptor::TripleLaw);
    vec![
        tally.into_check("triple composition law"),
        Check {
            name: "(p,s,n) coordinates into the triple semigroup".into(),
            report: bijection,
        },
    ]
}

pub fn scaling_isomorphism(bound: u64) -> Check {
    let forward: Vec<CanonicalEndo> = (0..=bound).map(CanonicalEndo::lambda).collect();
    let backward: Vec<AbstractElement> = (0..=bound as i64).map(AbstractElement::scalar).collect();
    let codomain = StructureDescriptor::OmegaTimes;
    let report = check_isomorphism_window(
        &forward,
        |f, g| f.compose(g),
        |f| match *f {
            CanonicalEndo::Zero => Ok(AbstractElement::scalar(0)),
            CanonicalEndo::Inj { scale, shift: 0, lift: 0 } => Ok(AbstractElement::scalar(scale as i64)),
            other => Err(Error::Domain(format!("{other} is not a scaling"))),
        },
        |x, y| codomain.product(x, y),
        &backward,
    );
    Check {
        name: "scaling -> (w,*)".into(),
        report,
    }
}

pub fn sigma_isomorphism(bound: u64) -> Check {
    let forward = sigmas(bound);
    let codomain = StructureDescriptor::direct(StructureDescriptor::RightZeroOmega, StructureDescriptor::NatTimes);
    let backward = codomain.window(bound as i64);
    let report = check_isomorphism_window(
        &forward,
        |f, g| f.compose(g),
        |f| match *f {
            CanonicalEndo::Sigma { l, m } => Ok(AbstractElement::new([l as i64, m as i64])),
            other => Err(Error::Domain(format!("{other} is not a sigma map"))),
        },
        |x, y| codomain.product(x, y),
        &backward,
    );
    Check {
        name: "sigma -> RZ(w) x (N,*)".into(),
        report,
    }
}

/// Homomorphism and injectivity of `n -> J_{i,j,k}(n)` for `i <= j <= param`,
/// `1 <= k <= param`, `n <= n_max`.
pub fn omega_embedding_check(param: u64, n_max: u64) -> Check {
    let domain: Vec<u64> = (0..=n_max).collect();
    let mut report = HomReport::new(0, Vec::new());
    for i in 0..=param {
        for j in i..=param {
            for k in 1..=param {
                let embed = omega_embedding(i, j, k).expect("valid parameters");
                let mut sub = check_isomorphism_window(
                    &domain,
                    |x, y| Ok(x + y),
                    |n| embed(*n),
                    |x, y| x.multiply(*y),
                    &[],
                );
                for v in &mut sub.violations {
                    v.x = format!("J({i},{j},{k}) at {}", v.x);
                }
                report = report.merge(sub);
            }
        }
    }
    Check {
        name: "(w,+) embeddings".into(),
        report,
    }
}

/// The degree-map factorization of `sigma(l,m)` agrees with the canonical form on `W_window`.
pub fn sigma_factorization_check(bound: u64, window: u64) -> Check {
    let mut tally = Tally::default();
    for sigma in sigmas(bound) {
        let CanonicalEndo::Sigma { l, m } = sigma else { unreachable!() };
        let factored = sigma_from_factorization(l, m).expect("m >= 1");
        for x in WindowSpec::new(window).elements() {
            tally.expect_eq(sigma, x, factored(x), sigma.apply(x));
        }
    }
    tally.into_check("sigma via degree map")
}

pub fn lift_isomorphism(bound: u64) -> Check {
    let forward: Vec<CanonicalEndo> = (1..=bound).map(CanonicalEndo::lift).collect();
    let backward: Vec<AbstractElement> = (1..=bound as i64).map(AbstractElement::scalar).collect();
    let codomain = StructureDescriptor::NatPlus;
    let mut report = check_isomorphism_window(
        &forward,
        |f, g| f.compose(g),
        |f| match *f {
            CanonicalEndo::Inj { scale: 1, shift: 0, lift } if lift >= 1 => Ok(AbstractElement::scalar(lift as i64)),
            other => Err(Error::Domain(format!("{other} is not a lift power"))),
        },
        |x, y| codomain.product(x, y),
        &backward,
    );
    // distinct as maps, not just as forms
    let tables: Vec<WindowMap> = forward
        .iter()
        .map(|f| WindowMap::tabulate(WindowSpec::new(LAW_WINDOW), |x| f.apply(x)).expect("small window"))
        .collect();
    let mut tally = Tally::default();
    for (a, ta) in forward.iter().zip(&tables) {
        for (b, tb) in forward.iter().zip(&tables) {
            if a != b {
                tally.expect(a, b, ta != tb, "equal on W_12");
            }
        }
    }
    report = report.merge(tally.into_check("").report);
    Check {
        name: "lift powers -> (N,+)".into(),
        report,
    }
}

pub fn identity_zero_ideal(bound: u64) -> Vec<Check> {
    let forms = canonical_forms(bound);
    let mut identity = Tally::default();
    let mut zero = Tally::default();
    let mut ideal = Tally::default();
    for f in &forms {
        identity.expect_eq(f, "id", f.compose(&IDENTITY), Ok(*f));
        identity.expect_eq("id", f, IDENTITY.compose(f), Ok(*f));
        zero.expect_eq(f, "zero", f.compose(&CanonicalEndo::Zero), Ok(CanonicalEndo::Zero));
        zero.expect_eq("zero", f, CanonicalEndo::Zero.compose(f), Ok(CanonicalEndo::Zero));
        for x in WindowSpec::new(LAW_WINDOW).elements() {
            identity.expect_eq("id", x, IDENTITY.apply(x), Ok(x));
            zero.expect_eq("zero", x, CanonicalEndo::Zero.apply(x), Ok(BicyclicElement::ONE));
        }
        if !f.in_ideal_i() {
            continue;
        }
        for g in &forms {
            ideal.expect(f, g, f.compose(g).is_ok_and(|h| h.in_ideal_i()), "f;g left the ideal");
            ideal.expect(g, f, g.compose(f).is_ok_and(|h| h.in_ideal_i()), "g;f left the ideal");
        }
    }
    vec![
        identity.into_check("identity"),
        zero.into_check("zero"),
        ideal.into_check("ideal"),
    ]
}

/// The triples `(p, s, n)` with `p >= 1`, `n >= 0`, `n + p <= gen_exp`, `s < p`.
pub fn expected_injective_triples(gen_exp: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    for p in 1..=gen_exp {
        for n in 0..=gen_exp - p {
            for s in 0..p {
                out.insert((p, s, n));
            }
        }
    }
    out
}

/// Bounded search plus classification round trips and negative controls.
/// Returns the checks and a one-line summary of the search.
pub fn injective_classification(gen_exp: u64, bound: u64) -> Result<(Vec<Check>, String)> {
    let config = SearchConfig::new(gen_exp, bound, false)?;
    let report = enumerate(&config)?;

    let mut completeness = Tally::default();
    let expected = expected_injective_triples(gen_exp);
    completeness.expect_eq("injective candidates", "", Ok(report.injective), Ok(expected.len()));
    completeness.expect_eq("undecided (overflow)", "", Ok(report.undecided_overflow), Ok(0));
    let mut found = BTreeSet::new();
    for row in report.rows.iter().filter(|r| r.injective) {
        match row.form {
            Some(CanonicalEndo::Inj { scale, shift, lift }) if row.verdict == "PaperInjective" => {
                completeness.expect(row.images.x_img, row.images.y_img, found.insert((scale, shift, lift)), "duplicate triple");
            }
            _ => completeness.expect(row.images.x_img, row.images.y_img, false, &format!("injective candidate classified {}", row.verdict)),
        }
    }
    let found_list = |s: &BTreeSet<(u64, u64, u64)>| format!("{} triples", s.len());
    completeness.expect_eq("recovered triples", "", Ok(found == expected), Ok(true));
    if found != expected {
        completeness.violations.last_mut().expect("just pushed").lhs =
            format!("{} vs expected {}", found_list(&found), found_list(&expected));
    }
    for row in &report.rows {
        let again = classify(&row.images, bound)?;
        completeness.expect_eq(row.images.x_img, row.images.y_img, Ok(again.verdict_name()), Ok(row.verdict.as_str()));
    }

    let mut specimens = Tally::default();
    for s in &report.beyond_paper {
        specimens.expect(s.images.x_img, s.images.y_img, b_consistency(&s.images, bound).holds(), "fails consistency");
    }
    let degenerate = GeneratorImages::new(BicyclicElement::new(2, 2), BicyclicElement::ONE)?;
    match classify(&degenerate, bound)? {
        ClassificationResult::BeyondPaper { label: BeyondPaperLabel::SigmaDegenerateM0, .. } => specimens.expect("a -> b^2a^2", "ba -> 1", true, ""),
        other => specimens.expect("a -> b^2a^2", "ba -> 1", false, other.verdict_name()),
    }
    let inconsistent = GeneratorImages::new(BicyclicElement::ONE, BicyclicElement::new(1, 1))?;
    match classify(&inconsistent, bound)? {
        ClassificationResult::Inconsistent { witness } => {
            specimens.expect("a -> 1", "ba -> ba", witness.lhs != witness.rhs, "witness does not separate")
        }
        other => specimens.expect("a -> 1", "ba -> ba", false, other.verdict_name()),
    }

    let round_trip = classification_round_trip(6, 4, 6, bound)?;
    let strip = strip_round_trip(5, 4, bound)?;
    let again = enumerate(&config)?;
    let mut determinism = Tally::default();
    determinism.expect_eq("enumerate", "twice", Ok(again == report), Ok(true));

    let summary = format!(
        "E={gen_exp} B={bound}: {} candidates, {} consistent, {} inconsistent, {} injective, {} beyond the named families",
        report.total,
        report.consistent,
        report.inconsistent,
        report.injective,
        report.beyond_paper.len()
    );
    Ok((
        vec![
            completeness.into_check("completeness of injective classification"),
            specimens.into_check("negative controls and beyond-family specimens"),
            round_trip,
            strip,
            determinism.into_check("determinism"),
        ],
        summary,
    ))
}

/// Classifying the generator images of each form recovers the form.
pub fn classification_round_trip(inj_bound: u64, lift_bound: u64, sigma_bound: u64, bound: u64) -> Result<Check> {
    let mut forms = vec![CanonicalEndo::Zero];
    for p in 1..=inj_bound {
        for s in 0..p {
            for n in 0..=lift_bound {
                forms.push(CanonicalEndo::Inj { scale: p, shift: s, lift: n });
            }
        }
    }
    forms.extend(sigmas(sigma_bound));
    let mut tally = Tally::default();
    for f in forms {
        let images = GeneratorImages::of(&f)?;
        let result = classify(&images, bound)?;
        tally.expect_eq(f, "", Ok(result.form().map_or_else(|| result.verdict_name().to_owned(), |g| g.to_string())), Ok(f.to_string()));
        if let Some(g) = result.form() {
            let table = crate::classify::window_map(&images, bound)?;
            tally.expect(f, "agrees on window", table.agrees_with(|x| g.apply(x)), "recovered form disagrees");
        }
    }
    Ok(tally.into_check("classification round trip"))
}

/// Stripping `n` lifts from `Inj(p,s,n)` leaves `Inj(p,s,0)` on `W_bound`.
pub fn strip_round_trip(scale_bound: u64, lift_bound: u64, bound: u64) -> Result<Check> {
    let window = WindowSpec::new(bound);
    let mut tally = Tally::default();
    for p in 1..=scale_bound {
        for s in 0..p {
            for n in 0..=lift_bound {
                let lifted = CanonicalEndo::Inj { scale: p, shift: s, lift: n };
                let base = CanonicalEndo::Inj { scale: p, shift: s, lift: 0 };
                let table = WindowMap::tabulate(window, |x| lifted.apply(x))?;
                let stripped = strip_varsigma(&table, n);
                let expected = WindowMap::tabulate(window, |x| base.apply(x));
                tally.expect_eq(lifted, n, stripped.map(|m| format!("{m}")), expected.map(|m| format!("{m}")));
            }
        }
    }
    Ok(tally.into_check("lift stripping"))
}
