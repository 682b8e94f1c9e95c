use std::process::ExitCode;

use bicyclic::{
    classify, enumerate, parse_element, parse_endo, run_suite, BicyclicElement, CanonicalEndo, ClassificationResult,
    Error, GeneratorImages, SearchConfig, Suite, SuiteOptions, SuiteReport,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Exact arithmetic and endomorphism algebra for the bicyclic monoid.
///
/// Endomorphisms act on the right: `compose f g` means "apply f, then g".
#[derive(Parser)]
#[command(name = "bicyclic", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two elements, e.g. `mul b^1a^2 b^3a^4`.
    Mul { x: String, y: String },
    /// n-th power of an element.
    Pow { x: String, n: u64 },
    /// Image of an element of C+ under an endomorphism.
    Apply { endo: String, element: String },
    /// Composite of endomorphisms, applied left to right.
    Compose {
        #[arg(required = true, num_args = 1..)]
        endos: Vec<String>,
    },
    /// Classify the endomorphism determined by generator images.
    Classify {
        #[arg(long)]
        image_a: String,
        #[arg(long)]
        image_ba: String,
        #[arg(long, visible_alias = "window", default_value_t = 12)]
        bound: u64,
    },
    /// Screen and classify every candidate with bounded generator images.
    Enumerate {
        #[arg(long, default_value_t = 8)]
        gen_exp: u64,
        #[arg(long, visible_alias = "window", default_value_t = 12)]
        bound: u64,
        #[arg(long)]
        injective_only: bool,
        /// Print candidate rows as CSV instead of the summary.
        #[arg(long)]
        csv: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, visible_alias = "window")]
        bound: Option<u64>,
        #[arg(long)]
        gen_exp: Option<u64>,
    },
    /// List the verification suites.
    Suites,
}

fn parse_suite(name: &str) -> Result<Suite, String> {
    name.parse().map_err(|e: Error| e.to_string())
}

enum Outcome {
    Ok,
    Violated,
}

struct Output {
    text: String,
    json: Value,
    outcome: Outcome,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            outcome: Outcome::Ok,
        }
    }
}

fn element_json(x: BicyclicElement) -> Value {
    json!({ "text": x.to_string(), "b": x.b_exp, "a": x.a_exp })
}

fn endo_json(f: &CanonicalEndo) -> Value {
    json!({ "text": f.to_string(), "form": f })
}

fn run(command: Command) -> bicyclic::Result<Output> {
    Ok(match command {
        Command::Mul { x, y } => {
            let (x, y) = (parse_element(&x)?, parse_element(&y)?);
            let p = x.multiply(y)?;
            Output::ok(p.to_string(), json!({ "command": "mul", "result": element_json(p) }))
        }
        Command::Pow { x, n } => {
            let p = parse_element(&x)?.power(n)?;
            Output::ok(p.to_string(), json!({ "command": "pow", "result": element_json(p) }))
        }
        Command::Apply { endo, element } => {
            let (f, x) = (parse_endo(&endo)?, parse_element(&element)?);
            let y = f.apply(x)?;
            Output::ok(y.to_string(), json!({ "command": "apply", "result": element_json(y) }))
        }
        Command::Compose { endos } => {
            let mut forms = endos.iter().map(|e| parse_endo(e));
            let first = forms.next().expect("clap requires one endo")?;
            let h = forms.try_fold(first, |acc, f| acc.compose(&f?))?;
            Output::ok(h.to_string(), json!({ "command": "compose", "result": endo_json(&h) }))
        }
        Command::Classify { image_a, image_ba, bound } => {
            let images = GeneratorImages::new(parse_element(&image_a)?, parse_element(&image_ba)?)?;
            let result = classify(&images, bound)?;
            let text = match &result {
                ClassificationResult::PaperInjective { form } | ClassificationResult::PaperSigma { form } => {
                    format!("{} {form}", result.verdict_name())
                }
                ClassificationResult::PaperZero => "PaperZero zero".to_owned(),
                ClassificationResult::BeyondPaper { label, map } => {
                    let label = serde_json::to_value(label).expect("label serializes");
                    format!("BeyondPaper {}\n{map}", label.as_str().unwrap_or_default())
                }
                ClassificationResult::Inconsistent { witness } => format!(
                    "Inconsistent\nwitness: x = {}, y = {}: image of product {} != product of images {}",
                    witness.x, witness.y, witness.lhs, witness.rhs
                ),
            };
            Output::ok(
                text,
                json!({ "command": "classify", "images": images, "bound": bound, "result": result }),
            )
        }
        Command::Enumerate { gen_exp, bound, injective_only, csv } => {
            let config = SearchConfig::new(gen_exp, bound, injective_only)?;
            let report = enumerate(&config)?;
            let text = if csv {
                report.to_csv().map_err(|e| Error::Validation(e.to_string()))?
            } else {
                let mut lines = vec![
                    format!("generator exponent bound {gen_exp}, window W_{bound}"),
                    format!("candidates    {}", report.total),
                    format!("consistent    {}", report.consistent),
                    format!("inconsistent  {}", report.inconsistent),
                    format!("overflow      {}", report.undecided_overflow),
                    format!("injective     {}", report.injective),
                ];
                for (verdict, count) in &report.verdict_counts {
                    lines.push(format!("  {verdict:<15} {count}"));
                }
                lines.join("\n")
            };
            Output::ok(text, serde_json::to_value(&report).expect("report serializes"))
        }
        Command::Verify { suite, bound, gen_exp } => {
            let report = run_suite(suite, SuiteOptions { bound, gen_exp })?;
            Output {
                text: render_suite(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                outcome: if report.passed { Outcome::Ok } else { Outcome::Violated },
            }
        }
        Command::Suites => {
            let text = Suite::ALL
                .iter()
                .map(|s| format!("{:<18} {}", s.name(), s.description()))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<Value> = Suite::ALL
                .iter()
                .map(|s| json!({ "name": s.name(), "description": s.description(), "default_bound": s.default_bound() }))
                .collect();
            Output::ok(text, json!({ "suites": list }))
        }
    })
}

/// Witnesses shown per failing check in text mode.
const SHOWN_WITNESSES: usize = 10;

fn render_suite(report: &SuiteReport) -> String {
    let mut out = vec![format!("{} (bound {}): {}", report.suite, report.bound, report.description)];
    for check in &report.checks {
        let status = if check.report.holds() { "ok  " } else { "FAIL" };
        out.push(format!("  {status} {} ({} checked)", check.name, check.report.checked));
        for v in check.report.violations.iter().take(SHOWN_WITNESSES) {
            out.push(format!("       {:?}: x = {}, y = {}: {} vs {}", v.kind, v.x, v.y, v.lhs, v.rhs));
        }
        let hidden = check.report.violations.len().saturating_sub(SHOWN_WITNESSES);
        if hidden > 0 {
            out.push(format!("       ... {hidden} more"));
        }
    }
    for note in &report.notes {
        out.push(format!("  note: {note}"));
    }
    let verdict = if report.passed {
        "PASS".to_owned()
    } else {
        format!("FAIL ({} violations)", report.violation_count())
    };
    out.push(verdict);
    out.join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(output) => {
            match format {
                Format::Text => println!("{}", output.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&output.json).expect("json")),
            }
            match output.outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Violated => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if format == Format::Json {
                let mut detail = json!({ "kind": e.kind(), "message": e.to_string() });
                if let Error::Parse { position, .. } = &e {
                    detail["position"] = json!(position);
                }
                println!("{}", serde_json::to_string_pretty(&json!({ "error": detail })).expect("json"));
            }
            ExitCode::from(2)
        }
    }
}
