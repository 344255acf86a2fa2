//! Self-check suites that re-certify a build against reference values,
//! structural identities and the slow oracles.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::bigraded::BiSymFunc;
use crate::error::{Error, Result};
use crate::golden::{reference_betti, GOLDEN};
use crate::length::{length_theorem_report, plethysm_w_closed_form, w};
use crate::moduli::{r, Engine};
use crate::oracle::{expand, jacobi_trudi_to_powersum, oracle_plethysm};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, SymFunc};

pub const SEED: u64 = 0x5eed_0001;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ReferenceExamples,
    Duality,
    Oracles,
    LengthTheorem,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::ReferenceExamples,
        Suite::Duality,
        Suite::Oracles,
        Suite::LengthTheorem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ReferenceExamples => "paper-examples",
            Suite::Duality => "duality",
            Suite::Oracles => "oracles",
            Suite::LengthTheorem => "length-theorem",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Duality | Suite::LengthTheorem => 10,
            _ => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub v: u32,
    pub suite: String,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        SuiteReport {
            v: 1,
            suite: suite.name().into(),
            passed: failed == 0,
            total: checks.len(),
            failed,
            checks,
        }
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: (!passed).then(detail),
    }
}

pub fn run(suite: Suite, engine: &Engine, n_max: usize) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::ReferenceExamples => reference_examples(engine)?,
        Suite::Duality => duality(engine, n_max)?,
        Suite::Oracles => oracles(n_max, SEED)?,
        Suite::LengthTheorem => length_theorem(engine, n_max, SEED)?,
    };
    Ok(SuiteReport::new(suite, checks))
}

/// Reference characters and Betti numbers.
pub fn reference_examples(engine: &Engine) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for g in &GOLDEN {
        let expected = g.value()?;
        let got = engine.e(g.n, g.k, g.l)?;
        checks.push(check(g.name, *got == expected, || {
            format!("difference {}", crate::render::latex(&(&*got - &expected)))
        }));
    }
    for n in 6..=8 {
        let Some(expected) = reference_betti(n)? else {
            continue;
        };
        let got = engine.poincare_polynomial(n)?;
        let got = got.to_integers().unwrap_or_default();
        checks.push(check(format!("betti_{n}"), got == expected, || {
            format!("got {got:?}, expected {expected:?}")
        }));
    }
    Ok(checks)
}

/// `q^{n-3} E(1/q) = E(q)` and `E(0) = s^x_(k) s^y_(n-k)` for every
/// `3 ≤ n ≤ n_max`, `0 ≤ k ≤ n` and `1 ≤ l ≤ r(n,k)`.
pub fn duality(engine: &Engine, n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 3..=n_max {
        for k in 0..=n {
            for l in 1..=r(n, k)? {
                let e = engine.e_schur(n, k, l)?;
                let point = BiSymFunc::schur(Partition::row(k), Partition::row(n - k));
                let ok = e.is_palindromic(n - 3)
                    && e.q_coefficient(0) == point
                    && e.q_coefficient(n - 3) == point;
                checks.push(check(format!("E{n}_{k}_{l}"), ok, || {
                    crate::render::latex(&e)
                }));
            }
        }
    }
    Ok(checks)
}

fn random_schur(rng: &mut StdRng, degree: usize, positive: bool) -> SymFunc {
    let parts = partitions_of(degree);
    let mut f = SymFunc::zero(Basis::Schur);
    let count = rng.gen_range(1..=3.min(parts.len()));
    for _ in 0..count {
        let lambda = &parts[rng.gen_range(0..parts.len())];
        let c: i64 = if positive {
            rng.gen_range(1..=3)
        } else {
            rng.gen_range(-3..=3)
        };
        f.add_term(lambda, &QPoly::from(c));
    }
    if f.is_zero() {
        f.add_term(&parts[0], &QPoly::one());
    }
    f
}

/// Character-table conversion against Jacobi–Trudi for `|λ| ≤ n_max`, kernel
/// plethysm and product against monomial expansion.
pub fn oracles(n_max: usize, seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let mut bad = Vec::new();
        for lambda in partitions_of(n) {
            if jacobi_trudi_to_powersum(&lambda) != SymFunc::s(lambda.clone()).to_powersum() {
                bad.push(lambda.to_string());
            }
        }
        checks.push(check(format!("schur_to_powersum_{n}"), bad.is_empty(), || {
            bad.join(" ")
        }));
    }

    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for mu in partitions_of(a) {
                for nu in partitions_of(b) {
                    pairs.push((mu.clone(), nu));
                }
            }
        }
    }
    for (mu, nu) in pairs {
        let f = SymFunc::s(mu.clone());
        let g = SymFunc::s(nu.clone());
        let nvars = mu.size() * nu.size();
        let ok = expand(&f.plethysm(&g), nvars)? == oracle_plethysm(&f, &g, nvars)?;
        checks.push(check(format!("plethysm_s{mu}_s{nu}"), ok, String::new));
    }

    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..100 {
        let df = rng.gen_range(0..=4);
        let f = random_schur(&mut rng, df, false);
        let dg = rng.gen_range(0..=4);
        let g = random_schur(&mut rng, dg, false);
        let nvars = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
        let lhs = expand(&f.multiply(&g), nvars)?;
        let rhs = expand(&f, nvars)?.mul(&expand(&g, nvars)?);
        if lhs != rhs {
            bad += 1;
        }
    }
    checks.push(check("multiply_random_100", bad == 0, || format!("{bad} mismatches")));
    Ok(checks)
}

/// The length theorem for `3 ≤ n ≤ n_max`, the product rule for the leading
/// constituent, and its closed form on plethysms.
pub fn length_theorem(engine: &Engine, n_max: usize, seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 3..=n_max {
        let report = length_theorem_report(engine, n)?;
        let failures = report.failures();
        checks.push(check(format!("length_{n}"), failures.is_empty(), || {
            failures.join("; ")
        }));
    }
    checks.push(leading_product_rule(200, 8, seed)?);
    for mu_size in 1..=4 {
        for mu in partitions_of(mu_size) {
            for m in 1..=4 {
                let expected = plethysm_w_closed_form(&mu, m)?;
                let got = w(&SymFunc::s(mu.clone()).plethysm(&SymFunc::h(m)))?;
                checks.push(check(format!("plethysm_w_s{mu}_s({m})"), got == expected, || {
                    format!("w = {got}, closed form {expected}")
                }));
            }
        }
    }
    Ok(checks)
}

/// `w(fg) = w(f) ∪ w(g)` on random Schur-positive pairs.
pub fn leading_product_rule(trials: usize, max_degree: usize, seed: u64) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0xa5a5);
    let mut bad = Vec::new();
    for _ in 0..trials {
        let df = rng.gen_range(1..=max_degree);
        let f = random_schur(&mut rng, df, true);
        let dg = rng.gen_range(1..=max_degree);
        let g = random_schur(&mut rng, dg, true);
        let (wf, wg) = (w(&f)?, w(&g)?);
        let wfg = w(&f.multiply(&g))?;
        if wfg != wf.union(&wg) {
            bad.push(format!("w({f:?} · {g:?}) = {wfg}"));
        }
    }
    Ok(check(format!("leading_product_rule_{trials}"), bad.is_empty(), || {
        bad.join("; ")
    }))
}
