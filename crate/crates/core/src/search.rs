//! Brute-force enumeration of candidate endomorphisms of `C+(a,b)` with
//! bounded generator images.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, window_map, BeyondPaperLabel, ClassificationResult, GeneratorImages};
use crate::element::BicyclicElement;
use crate::endo::CanonicalEndo;
use crate::error::{Error, Result};
use crate::window::{WindowMap, WindowSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest exponent allowed in a generator image.
    pub gen_exp_bound: u64,
    pub window_bound: u64,
    /// Only record injective candidates in `rows` and `verdict_counts`.
    pub injective_only: bool,
}

impl SearchConfig {
    pub fn new(gen_exp_bound: u64, window_bound: u64, injective_only: bool) -> Result<Self> {
        let config = SearchConfig {
            gen_exp_bound,
            window_bound,
            injective_only,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.gen_exp_bound == 0 {
            return Err(Error::Validation("generator exponent bound must be at least 1".into()));
        }
        if self.window_bound < 2 {
            return Err(Error::Validation(format!(
                "window bound {} must be at least 2 so products of generators are observed",
                self.window_bound
            )));
        }
        Ok(())
    }

    /// Candidates in lexicographic order of (ba-image exponent, a-image b-exponent, a-image a-exponent).
    pub fn candidates(&self) -> impl Iterator<Item = GeneratorImages> {
        let e = self.gen_exp_bound;
        (0..=e).flat_map(move |t| {
            WindowSpec::new(e).elements().map(move |x| GeneratorImages {
                x_img: x,
                y_img: BicyclicElement::new(t, t),
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRow {
    pub images: GeneratorImages,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<CanonicalEndo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<BeyondPaperLabel>,
    pub injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specimen {
    pub images: GeneratorImages,
    pub label: BeyondPaperLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub config: SearchConfig,
    pub total: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub undecided_overflow: usize,
    pub injective: usize,
    pub verdict_counts: BTreeMap<String, usize>,
    pub beyond_paper: Vec<Specimen>,
    pub rows: Vec<CandidateRow>,
}

impl CoverageReport {
    /// Recovered canonical forms of the injective candidates, in row order.
    pub fn injective_forms(&self) -> Vec<CanonicalEndo> {
        self.rows
            .iter()
            .filter(|r| r.injective)
            .filter_map(|r| r.form)
            .collect()
    }

    /// One line per recorded candidate: `a_image,ba_image,verdict,parameters,injective`.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["a_image", "ba_image", "verdict", "parameters", "injective"])?;
        for row in &self.rows {
            let parameters = match (&row.form, &row.label) {
                (Some(f), _) => f.to_string(),
                (None, Some(label)) => serde_json::to_value(label)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_owned))
                    .unwrap_or_default(),
                (None, None) => String::new(),
            };
            writer.write_record([
                row.images.x_img.to_string(),
                row.images.y_img.to_string(),
                row.verdict.clone(),
                parameters,
                row.injective.to_string(),
            ])?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Screens and classifies every candidate of `config`.
pub fn enumerate(config: &SearchConfig) -> Result<CoverageReport> {
    config.validate()?;
    let mut report = CoverageReport {
        config: *config,
        total: 0,
        consistent: 0,
        inconsistent: 0,
        undecided_overflow: 0,
        injective: 0,
        verdict_counts: BTreeMap::new(),
        beyond_paper: Vec::new(),
        rows: Vec::new(),
    };
    for images in config.candidates() {
        report.total += 1;
        let result = match classify(&images, config.window_bound) {
            Ok(result) => result,
            Err(Error::Overflow(_)) => {
                report.undecided_overflow += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if let ClassificationResult::Inconsistent { .. } = result {
            report.inconsistent += 1;
            continue;
        }
        report.consistent += 1;
        let injective = window_map(&images, config.window_bound)?.is_injective();
        if injective {
            report.injective += 1;
        }
        if config.injective_only && !injective {
            continue;
        }
        *report
            .verdict_counts
            .entry(result.verdict_name().to_owned())
            .or_default() += 1;
        let label = match &result {
            ClassificationResult::BeyondPaper { label, .. } => {
                report.beyond_paper.push(Specimen { images, label: *label });
                Some(*label)
            }
            _ => None,
        };
        report.rows.push(CandidateRow {
            images,
            verdict: result.verdict_name().to_owned(),
            form: result.form(),
            label,
            injective,
        });
    }
    Ok(report)
}

/// `x -> g(f(x))` on `W_B`, evaluated point by point.
pub fn pointwise_compose_oracle(
    f: impl Fn(BicyclicElement) -> Result<BicyclicElement>,
    g: impl Fn(BicyclicElement) -> Result<BicyclicElement>,
    bound: u64,
) -> Result<WindowMap> {
    WindowMap::tabulate(WindowSpec::new(bound), |x| g(f(x)?))
}
