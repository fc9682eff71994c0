use std::process::ExitCode;
use std::time::Instant;

use bicomplex::verify::{run_selected, Backend, Fault, Suite, VerifyConfig};

const SEED: u64 = 20_260_101;
const BUDGET_SECS: f64 = 60.0;

struct Criterion {
    label: &'static str,
    suite: Suite,
    properties: &'static [&'static str],
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        label: "algebra laws, 10^4 cases each, exact",
        suite: Suite::Algebra,
        properties: &[
            "algebra.ring-laws",
            "algebra.conjugation-table",
            "algebra.k-modulus",
            "algebra.k-norm-multiplicative",
            "algebra.k-unit",
            "algebra.inverse-law",
            "algebra.representations",
        ],
    },
    Criterion {
        label: "hyperbolic part derivations and reconstruction, 10^3 functionals",
        suite: Suite::Linear,
        properties: &["linear.hyperbolic-part-forms", "linear.reconstruction"],
    },
    Criterion {
        label: "separation certificates and LP oracle agreement, 200 instances",
        suite: Suite::Separation,
        properties: &["separation.certificate", "separation.overlap"],
    },
    Criterion {
        label: "gauge closed form vs bisection and vertex LP, sublinearity, 500 pairs",
        suite: Suite::Convex,
        properties: &[
            "convex.gauge-facets-vs-vertices",
            "convex.gauge-bisection",
            "convex.gauge-sublinear",
        ],
    },
    Criterion {
        label: "nested-ball witnesses on 50 covers, NotACover on 50 punctured covers",
        suite: Suite::Metric,
        properties: &["metric.baire-cover", "metric.baire-punctured"],
    },
    Criterion {
        label: "open mapping radius and inverse bounds, 100 maps",
        suite: Suite::Theorems,
        properties: &["theorems.omt", "theorems.imt"],
    },
    Criterion {
        label: "maps from graphs: 100 reconstructions, 100 rejections",
        suite: Suite::Theorems,
        properties: &["theorems.cgt-graph", "theorems.cgt-non-graph"],
    },
    Criterion {
        label: "uniform bounds on 100 families, growth control",
        suite: Suite::Theorems,
        properties: &["theorems.ubp", "theorems.ubp-growth"],
    },
    Criterion {
        label: "hyperplane normalization, gauge bound, zero-divisor levels, 200 instances",
        suite: Suite::Theorems,
        properties: &[
            "theorems.hyperplane-normalize",
            "theorems.hyperplane-gauge-bound",
            "theorems.hyperplane-zero-divisor",
        ],
    },
];

fn config() -> VerifyConfig {
    VerifyConfig {
        seed: SEED,
        cases: None,
        backend: Backend::Exact,
        fault: None,
    }
}

/// A swapped multiplication must be caught by the ring laws.
fn mutation_caught() -> bool {
    let cfg = VerifyConfig {
        cases: Some(1_000),
        fault: Some(Fault::SwapMul),
        ..config()
    };
    let report = run_selected(Suite::Algebra, &cfg, |p| p == "algebra.ring-laws");
    report
        .property("algebra.ring-laws")
        .is_some_and(|p| p.failures > 0)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut all_passed = true;
    for (i, criterion) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let report = run_selected(criterion.suite, &config(), |p| {
            criterion.properties.contains(&p)
        });
        let complete = criterion
            .properties
            .iter()
            .all(|p| report.property(p).is_some_and(|r| r.cases > 0));
        let mut passed = complete && report.passed();
        let mut detail = report
            .properties
            .iter()
            .map(|p| format!("{} {}/{}", p.name, p.cases - p.failures, p.cases))
            .collect::<Vec<_>>()
            .join(", ");
        if i == 0 {
            let caught = mutation_caught();
            passed &= caught;
            detail.push_str(if caught {
                ", injected fault caught"
            } else {
                ", injected fault MISSED"
            });
        }
        all_passed &= passed;
        println!(
            "{} {}. {} [{}] ({:.1} s)",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            criterion.label,
            detail,
            t.elapsed().as_secs_f64()
        );
        for failure in report.failures.iter().take(3) {
            println!(
                "    {} case {}: expected {}",
                failure.property, failure.case, failure.expected
            );
        }
    }
    let total = start.elapsed().as_secs_f64();
    let in_budget = total < BUDGET_SECS;
    println!(
        "total {total:.1} s (budget {BUDGET_SECS:.0} s{})",
        if in_budget { "" } else { ", exceeded" }
    );
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
