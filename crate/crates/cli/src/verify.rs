use serde::Serialize;
use sot_core::clifford::{quadratic_form_check, verify_b, verify_clifford};
use sot_core::octonion::identities::compare_tables;
use sot_core::octonion::{
    generate_basis_from_j, verify_associators, verify_malcev, verify_moufang, StructureConstants,
};
use sot_core::triality::{
    boost_table_check, correspondence_check, double_cover_check, role_swap_check,
    rotor_invariance_check, rotation_table_check, trilinear_agreement_check,
    trilinear_invariance_check, xi_check,
};
use sot_core::{IdentityCheck, Rational, Scalar, VerificationReport};

use crate::args::{RunConfig, Suite};
use crate::emit::{to_json, CsvWriter, Emission};

/// Largest |θ| drawn for the random-rotor invariance sweep.
const ROTOR_ANGLE_BOUND: f64 = 3.0;
/// Rapidity at which the finite boost is checked.
const BOOST_RAPIDITY: f64 = 1.0;

#[derive(Serialize)]
pub struct VerifyOutput {
    pub suite: &'static str,
    pub mode: &'static str,
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    pub reports: Vec<VerificationReport>,
}

const SUITES: [Suite; 6] =
    [Suite::Moufang, Suite::Malcev, Suite::Clifford, Suite::Associators, Suite::Correspondence, Suite::Triality];

fn generation_report() -> VerificationReport {
    let mut report = VerificationReport::new("basis generation", true);
    let check = match generate_basis_from_j() {
        Ok(t) => compare_tables("table generated from J1, J2, J3 = hard-coded table", &t, StructureConstants::canonical()),
        Err(e) => {
            let mut c = IdentityCheck::new("table generated from J1, J2, J3 = hard-coded table");
            c.record(false, f64::NAN, || e.to_string());
            c
        }
    };
    report.push(check);
    report
}

fn generic<T: Scalar>(suite: Suite, c: &RunConfig) -> Vec<VerificationReport> {
    let tol = c.tolerance;
    match suite {
        Suite::Moufang => vec![verify_moufang::<T>(tol)],
        Suite::Malcev => vec![verify_malcev::<T>(tol)],
        Suite::Clifford => vec![verify_clifford::<T>(tol)],
        Suite::Associators => vec![verify_associators::<T>(tol), generation_report()],
        Suite::Correspondence => vec![correspondence_check(c.samples, c.seed)],
        Suite::Triality => {
            let (n, seed) = (c.samples, c.seed);
            let jobs: Vec<Box<dyn Fn() -> VerificationReport + Send + Sync>> = vec![
                Box::new(xi_check::<Rational>),
                Box::new(move || verify_b::<T>(tol)),
                Box::new(move || quadratic_form_check(n, seed)),
                Box::new(rotation_table_check),
                Box::new(|| boost_table_check(BOOST_RAPIDITY)),
                Box::new(role_swap_check),
                Box::new(move || double_cover_check(tol)),
                Box::new(move || rotor_invariance_check(n, seed, ROTOR_ANGLE_BOUND, tol)),
                Box::new(move || trilinear_agreement_check(n, seed)),
                Box::new(move || trilinear_invariance_check(n, seed, tol)),
            ];
            parallel(&jobs)
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Runs independent pure checks side by side; results keep the listed order.
fn parallel<F: Fn() -> VerificationReport + Send + Sync>(jobs: &[F]) -> Vec<VerificationReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|f| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}

fn one(suite: Suite, c: &RunConfig) -> Vec<VerificationReport> {
    if c.exact() {
        generic::<Rational>(suite, c)
    } else {
        generic::<f64>(suite, c)
    }
}

pub fn run(suite: Suite, c: &RunConfig) -> VerifyOutput {
    let reports: Vec<VerificationReport> = if suite == Suite::All {
        // Suites are pure and independent; run them side by side and keep the fixed order.
        std::thread::scope(|s| {
            let handles: Vec<_> = SUITES.iter().map(|&x| s.spawn(move || one(x, c))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite thread panicked")).collect()
        })
    } else {
        one(suite, c)
    };
    VerifyOutput {
        suite: suite.name(),
        mode: if c.exact() { "exact" } else { "float" },
        seed: c.seed,
        tolerance: c.tolerance,
        samples: c.samples,
        passed: reports.iter().all(VerificationReport::passed),
        cases: reports.iter().map(|r| r.cases).sum(),
        failures: reports.iter().map(|r| r.failures).sum(),
        reports,
    }
}

impl Emission for VerifyOutput {
    fn json(&self) -> serde_json::Result<String> {
        to_json(self)
    }

    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()> {
        w.write_record(["report", "mode", "identity", "cases", "failures", "max_residual"])?;
        for r in &self.reports {
            for c in &r.checks {
                w.write_record([
                    r.suite.as_str(),
                    r.mode.as_str(),
                    c.identity.as_str(),
                    &c.cases.to_string(),
                    &c.failures.to_string(),
                    &format!("{:e}", c.max_residual),
                ])?;
            }
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            s += &format!("{status}  {} [{}]  {} cases, {} failures\n", r.suite, r.mode, r.cases, r.failures);
            for c in &r.checks {
                let mark = if c.passed() { "ok " } else { "!! " };
                s += &format!("    {mark}{}  ({}/{} failing, max residual {:e})\n", c.identity, c.failures, c.cases, c.max_residual);
                for f in &c.failure_samples {
                    s += &format!("        {f}\n");
                }
            }
            for n in &r.notes {
                s += &format!("    note: {n}\n");
            }
        }
        s += &format!(
            "\n{}: suite {} — {} cases, {} failures\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.cases,
            self.failures
        );
        s
    }
}
