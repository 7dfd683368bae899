//! The `verify` subcommand: independent methods checked against each other, case by case.

use num_bigint::BigUint;
use rayon::prelude::*;

use primfact_core::arith::rational_from_uint;
use primfact_core::brute_force::{
    count_minimal_transitive, count_primitive, count_primitive_by_type,
};
use primfact_core::characters::phi_series;
use primfact_core::class_algebra::{complete_h_on_jm, resolve_to_classes};
use primfact_core::counting::{
    hurwitz_minimal_transitive, minimal_primitive_by_type, minimal_primitive_total,
};
use primfact_core::matrix_model::{
    verify_matrix_identity_with_table, weingarten_character, weingarten_gram, MAX_GRAM_DEGREE,
};
use primfact_core::partition::partitions_of;
use primfact_core::{Budget, CharacterTable, Error, Partition, Permutation, Result};

use crate::args::Suite;
use crate::output::CaseResult;

type Check = Box<dyn Fn(&Budget) -> Result<Option<String>> + Send + Sync>;

/// Outcome of a whole suite run.
pub struct Report {
    pub cases: Vec<CaseResult>,
    /// Failed cases that failed only because they ran out of budget.
    pub budget_failures: usize,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }
}

pub fn run(suite: Suite, max_n: usize, jobs: Option<usize>, budget: &Budget) -> Result<Report> {
    let mut checks: Vec<(String, Check)> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Minimal {
        minimal_cases(max_n, &mut checks);
    }
    if all || suite == Suite::Jm {
        jm_cases(max_n, &mut checks);
    }
    if all || suite == Suite::Character {
        character_cases(max_n, &mut checks);
    }
    if all || suite == Suite::Matrix {
        matrix_cases(max_n, &mut checks);
    }
    checks.sort_by(|a, b| a.0.cmp(&b.0));

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let outcomes: Vec<(CaseResult, bool)> = pool.install(|| {
        checks
            .par_iter()
            .map(|(key, check)| match check(budget) {
                Ok(None) => (
                    CaseResult {
                        case: key.clone(),
                        pass: true,
                        detail: String::new(),
                    },
                    false,
                ),
                Ok(Some(why)) => (
                    CaseResult {
                        case: key.clone(),
                        pass: false,
                        detail: why,
                    },
                    false,
                ),
                Err(e) => {
                    let budget_hit = matches!(e, Error::BudgetExceeded { .. });
                    (
                        CaseResult {
                            case: key.clone(),
                            pass: false,
                            detail: e.to_string(),
                        },
                        budget_hit,
                    )
                }
            })
            .collect()
    });
    let budget_failures = outcomes.iter().filter(|(_, b)| *b).count();
    Ok(Report {
        cases: outcomes.into_iter().map(|(c, _)| c).collect(),
        budget_failures,
    })
}

fn mismatch(what: &str, a: &impl ToString, b: &impl ToString) -> Option<String> {
    let (a, b) = (a.to_string(), b.to_string());
    (a != b).then(|| format!("{what}: {a} vs {b}"))
}

fn minimal_cases(max_n: usize, out: &mut Vec<(String, Check)>) {
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            let key = format!("minimal/n={n:02}/mu={mu}");
            let m = mu.clone();
            out.push((
                key,
                Box::new(move |budget| {
                    let target = Permutation::class_representative(&m)?;
                    let length = m.size() - m.len();
                    let total = minimal_primitive_total(&m);
                    let brute = count_primitive(&target, length, budget)?;
                    if let Some(why) = mismatch("total vs brute", &total, &brute) {
                        return Ok(Some(why));
                    }
                    let mut sum = BigUint::default();
                    for lambda in partitions_of(length) {
                        let formula = minimal_primitive_by_type(&m.reduced(), &lambda)?;
                        let brute = count_primitive_by_type(&target, &lambda, budget)?;
                        if let Some(why) = mismatch(&format!("type ({lambda})"), &formula, &brute) {
                            return Ok(Some(why));
                        }
                        sum += formula;
                    }
                    Ok(mismatch("sum over types vs total", &sum, &total))
                }),
            ));
        }
        // Exhaustive transitive search: all classes up to n = 4, then only the n-cycle.
        let hurwitz_shapes = match n {
            0..=4 => partitions_of(n),
            _ => vec![Partition::single(n)],
        };
        if n <= 5 {
            for mu in hurwitz_shapes {
                let key = format!("minimal/hurwitz/mu={mu}");
                out.push((
                    key,
                    Box::new(move |budget| {
                        let formula = hurwitz_minimal_transitive(&mu)?;
                        let brute = count_minimal_transitive(&mu, budget)?;
                        Ok(mismatch("formula vs brute", &formula, &brute))
                    }),
                ));
            }
        }
    }
}

fn jm_cases(max_n: usize, out: &mut Vec<(String, Check)>) {
    for n in 1..=max_n {
        for k in 0..=max_n + 2 {
            out.push((
                format!("jm/n={n:02}/k={k:02}"),
                Box::new(move |budget| {
                    let classes = resolve_to_classes(&complete_h_on_jm(k, n, budget)?)?;
                    for mu in partitions_of(n) {
                        let target = Permutation::class_representative(&mu)?;
                        let brute = count_primitive(&target, k, budget)?;
                        let jm = classes.natural(&mu)?;
                        if let Some(why) = mismatch(&format!("class ({mu})"), &jm, &brute) {
                            return Ok(Some(why));
                        }
                    }
                    Ok(None)
                }),
            ));
        }
    }
}

fn character_cases(max_n: usize, out: &mut Vec<(String, Check)>) {
    for n in 1..=max_n {
        out.push((
            format!("character/n={n:02}/orthogonality"),
            Box::new(move |_| {
                let table = CharacterTable::new(n);
                let shapes = table.partitions();
                for a in shapes {
                    for b in shapes {
                        let s: i64 = shapes
                            .iter()
                            .map(|l| table.get(l, a).unwrap_or(0) * table.get(l, b).unwrap_or(0))
                            .sum();
                        let expect = if a == b {
                            a.centralizer_order()
                        } else {
                            BigUint::default()
                        };
                        if BigUint::from(s.unsigned_abs()) != expect || s < 0 {
                            return Ok(Some(format!("columns ({a}), ({b}) give {s}")));
                        }
                    }
                }
                Ok(None)
            }),
        ));
        let order = max_n + 2;
        out.push((
            format!("character/n={n:02}/series"),
            Box::new(move |budget| {
                let resolutions = (0..=order)
                    .map(|k| resolve_to_classes(&complete_h_on_jm(k, n, budget)?))
                    .collect::<Result<Vec<_>>>()?;
                for mu in partitions_of(n) {
                    let series = phi_series(&mu, order)?;
                    for (k, res) in resolutions.iter().enumerate() {
                        let jm = rational_from_uint(&res.natural(&mu)?);
                        if series.coefficient(k) != &jm {
                            return Ok(Some(format!(
                                "a_{{{k},({mu})}}: series {} vs jm {jm}",
                                series.coefficient(k)
                            )));
                        }
                    }
                }
                Ok(None)
            }),
        ));
    }
}

fn matrix_cases(max_n: usize, out: &mut Vec<(String, Check)>) {
    for n in 1..=max_n {
        for dim in [n as u64, n as u64 + 1, n as u64 + 2] {
            out.push((
                format!("matrix/n={n:02}/N={dim:02}"),
                Box::new(move |_| {
                    let chars = weingarten_character(n, dim)?;
                    // The Gram construction stops at MAX_GRAM_DEGREE; above it only the
                    // character table is checked against the series side.
                    if n <= MAX_GRAM_DEGREE.min(5) {
                        let gram = weingarten_gram(n, dim)?;
                        if gram != chars {
                            return Ok(Some("Gram and character tables differ".into()));
                        }
                    }
                    for mu in partitions_of(n) {
                        let report = verify_matrix_identity_with_table(&chars, &mu)?;
                        if !report.equal {
                            return Ok(Some(report.to_string()));
                        }
                    }
                    Ok(None)
                }),
            ));
        }
    }
}
