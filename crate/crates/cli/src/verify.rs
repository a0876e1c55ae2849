use std::io::Write;
use std::thread;

use bipart_core::partition::{verify_euler_recursion, verify_theorem_recursion};
use bipart_core::qseries::{
    verify_appendix_identities, verify_congruence, verify_f_squared, verify_first_proof,
    verify_jacobi_triple_product, verify_lemma_theta_product,
};
use bipart_core::symbols::{verify_corollary, verify_families};
use bipart_core::{Fault, Report};
use serde_json::Value;

use crate::args::{Target, VerifyArgs};
use crate::output::{write_csv, write_json, write_line, Format};
use crate::Status;

/// Default bounds for each target: (series/count bound, enumeration bound).
pub fn defaults(target: Target) -> (u64, u64) {
    match target {
        Target::Euler => (1000, 40),
        Target::Thm1 => (5000, 25),
        Target::Lemma22 => (1000, 40),
        Target::Jacobi => (200, 0),
        Target::Firstproof => (1000, 0),
        Target::Families => (12, 12),
        Target::Corollary => (2000, 12),
        Target::Appendix => (500, 0),
        Target::Congruence => (10_000, 0),
        Target::All => (0, 0),
    }
}

pub const ALL_TARGETS: [Target; 9] = [
    Target::Euler,
    Target::Thm1,
    Target::Lemma22,
    Target::Jacobi,
    Target::Firstproof,
    Target::Families,
    Target::Corollary,
    Target::Appendix,
    Target::Congruence,
];

/// Runs one target. `families` is purely enumerative, so an explicit
/// `--max` sets its rank bound directly.
pub fn run_target(
    target: Target,
    max: Option<u64>,
    enum_max: Option<u64>,
    fault: Option<&Fault>,
) -> bipart_core::Result<Vec<Report>> {
    let (default_max, default_enum) = defaults(target);
    let n = max.unwrap_or(default_max) as usize;
    let e = enum_max.unwrap_or(default_enum) as usize;
    Ok(match target {
        Target::Euler => vec![verify_euler_recursion(n, e, fault)?],
        Target::Thm1 => vec![verify_theorem_recursion(n, e, fault)?],
        Target::Lemma22 => vec![verify_lemma_theta_product(n, fault)?],
        Target::Jacobi => vec![verify_jacobi_triple_product(n, fault)],
        Target::Firstproof => vec![verify_first_proof(n, fault)?],
        Target::Families => vec![verify_families(max.or(enum_max).unwrap_or(default_max), fault)?],
        Target::Corollary => vec![verify_corollary(n as u64, e as u64, fault)?],
        Target::Appendix => vec![verify_f_squared(fault), verify_appendix_identities(n, fault)?],
        Target::Congruence => vec![verify_congruence(n, fault)],
        Target::All => {
            // Independent targets run concurrently; reports are collected and
            // printed in the fixed target order so output never interleaves.
            let results: Vec<_> = thread::scope(|s| {
                let handles: Vec<_> = ALL_TARGETS
                    .iter()
                    .map(|&t| {
                        let max = if t == Target::Families { None } else { max };
                        s.spawn(move || run_target(t, max, enum_max, fault))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
            });
            let mut reports = Vec::new();
            for r in results {
                reports.extend(r?);
            }
            reports
        }
    })
}

pub fn run(out: &mut dyn Write, format: Format, args: &VerifyArgs) -> Result<Status, String> {
    let fault = args.inject_fault.as_ref().map(|f| &f.0);
    let reports = run_target(args.target, args.max, args.enum_max, fault).map_err(|e| e.to_string())?;
    let passed = reports.iter().all(Report::passed);
    match format {
        Format::Json => {
            let value = serde_json::to_value(&reports).map_err(|e| e.to_string())?;
            let mut obj = serde_json::Map::new();
            obj.insert("passed".into(), Value::Bool(passed));
            obj.insert("reports".into(), value);
            write_json(out, &Value::Object(obj))?;
        }
        Format::Csv => {
            let header = ["report", "check", "bound", "passed", "location", "left", "right"];
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| {
                        let (loc, left, right) = c.mismatch.as_ref().map_or_else(
                            || (String::new(), String::new(), String::new()),
                            |m| (m.location.to_string(), m.left.clone(), m.right.clone()),
                        );
                        vec![r.identity.clone(), c.name.clone(), c.bound.to_string(), c.passed().to_string(), loc, left, right]
                    })
                })
                .collect();
            write_csv(out, &header, &rows)?;
        }
        Format::Text => {
            for r in &reports {
                write!(out, "{r}").map_err(|e| e.to_string())?;
            }
            write_line(out, if passed { "ALL PASSED" } else { "VERIFICATION FAILED" })?;
        }
    }
    Ok(if passed { Status::Ok } else { Status::VerificationFailed })
}
