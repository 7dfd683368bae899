use primfact_core::arith::format_rational;
use primfact_core::brute_force::{count_primitive, count_transitive};
use primfact_core::characters::{phi_rational, phi_series};
use primfact_core::counting::{
    hurwitz_full_cycle_genus, hurwitz_minimal_transitive, minimal_primitive_by_type,
    minimal_primitive_total, primitive_full_cycle, primitive_full_cycle_sinh,
};
use primfact_core::dispatch::{count_by_length, count_by_type, Method};
use primfact_core::matrix_model::{permutation_correlator_with, WeingartenMethod};
use primfact_core::{Budget, Error, Partition, Permutation, Result};

use crate::args::{
    CorrelatorArgs, CountArgs, CountMethod, FullCycleArgs, FullCycleMethod, HurwitzArgs,
    MinimalArgs, PhiArgs, WeingartenChoice,
};
use crate::output::{Query, Value};

/// What a subcommand computed, before timing is attached.
pub struct Answer {
    pub query: Query,
    pub value: Value,
    pub method: String,
}

impl Answer {
    fn scalar(query: Query, value: impl ToString, method: &str) -> Self {
        Answer {
            query,
            value: Value::Scalar(value.to_string()),
            method: method.to_string(),
        }
    }
}

fn core_method(m: CountMethod) -> Method {
    match m {
        CountMethod::Auto => Method::Auto,
        CountMethod::Brute => Method::Brute,
        CountMethod::Jm => Method::Jm,
        CountMethod::Character => Method::Character,
    }
}

pub fn count(args: &CountArgs, budget: &Budget) -> Result<Answer> {
    let method = core_method(args.method);
    let query = Query::new("count")
        .arg("perm", &args.perm)
        .arg("method", method.label());
    let (query, result) = match (&args.length, &args.lambda) {
        (Some(k), None) => (
            query.arg("length", k),
            count_by_length(&args.perm, *k, method, budget)?,
        ),
        (None, Some(lambda)) => (
            query.arg("type", lambda),
            count_by_type(&args.perm, lambda, method, budget)?,
        ),
        _ => {
            return Err(Error::OutOfRange(
                "give exactly one of --length and --type".into(),
            ))
        }
    };
    Ok(Answer::scalar(query, result.value, result.method))
}

pub fn minimal(args: &MinimalArgs) -> Result<Answer> {
    let mu = &args.cycle_type;
    let query = Query::new("minimal").arg("cycle-type", mu);
    match &args.lambda {
        None => Ok(Answer::scalar(
            query,
            minimal_primitive_total(mu),
            "catalan-product",
        )),
        Some(lambda) => {
            let expected = mu.size() - mu.len();
            if lambda.size() != expected {
                return Err(Error::SizeMismatch {
                    expected,
                    found: lambda.size(),
                });
            }
            let value = minimal_primitive_by_type(&mu.reduced(), lambda)?;
            Ok(Answer::scalar(
                query.arg("type", lambda),
                value,
                "refined-catalan",
            ))
        }
    }
}

pub fn full_cycle(args: &FullCycleArgs, budget: &Budget) -> Result<Answer> {
    let (n, g) = (args.n, args.genus);
    let label = match args.method {
        FullCycleMethod::Cf => "cf",
        FullCycleMethod::Sinh => "sinh",
        FullCycleMethod::Brute => "brute",
    };
    let query = Query::new("full-cycle")
        .arg("n", n)
        .arg("genus", g)
        .arg("method", label);
    let value = match args.method {
        FullCycleMethod::Cf => primitive_full_cycle(n, g)?,
        FullCycleMethod::Sinh => primitive_full_cycle_sinh(n, g)?,
        FullCycleMethod::Brute => {
            if n == 0 {
                return Err(Error::OutOfRange("n must be at least 1".into()));
            }
            let cycle = Permutation::class_representative(&Partition::single(n))?;
            count_primitive(&cycle, n - 1 + 2 * g, budget)?
        }
    };
    Ok(Answer::scalar(query, value, label))
}

pub fn hurwitz(args: &HurwitzArgs, budget: &Budget) -> Result<Answer> {
    let mu = &args.cycle_type;
    let g = args.genus;
    let query = Query::new("hurwitz").arg("cycle-type", mu).arg("genus", g);
    if mu.is_empty() {
        return Err(Error::OutOfRange(
            "cycle type must be a partition of n ≥ 1".into(),
        ));
    }
    if g == 0 {
        return Ok(Answer::scalar(
            query,
            hurwitz_minimal_transitive(mu)?,
            "hurwitz-formula",
        ));
    }
    if mu.len() == 1 {
        return Ok(Answer::scalar(
            query,
            hurwitz_full_cycle_genus(mu.size(), g)?,
            "sinh",
        ));
    }
    let target = Permutation::class_representative(mu)?;
    let length = mu.size() + mu.len() - 2 + 2 * g;
    Ok(Answer::scalar(
        query,
        count_transitive(&target, length, budget)?,
        "brute",
    ))
}

pub fn phi(args: &PhiArgs) -> Result<Answer> {
    let mu = &args.cycle_type;
    let query = Query::new("phi").arg("cycle-type", mu);
    if mu.is_empty() {
        return Err(Error::OutOfRange(
            "cycle type must be a partition of n ≥ 1".into(),
        ));
    }
    if args.closed_form {
        let f = phi_rational(mu)?;
        return Ok(Answer::scalar(
            query.arg("closed-form", true),
            f,
            "character",
        ));
    }
    let series = phi_series(mu, args.order)?;
    let coeffs = series.coefficients().iter().map(format_rational).collect();
    Ok(Answer {
        query: query.arg("order", args.order),
        value: Value::Series(coeffs),
        method: "character".into(),
    })
}

pub fn correlator(args: &CorrelatorArgs) -> Result<Answer> {
    let (method, label) = match args.method {
        WeingartenChoice::Gram => (WeingartenMethod::Gram, "gram"),
        WeingartenChoice::Character => (WeingartenMethod::Character, "character"),
    };
    let query = Query::new("correlator")
        .arg("perm", &args.perm)
        .arg("dim", args.dim)
        .arg("method", label);
    let value = permutation_correlator_with(&args.perm, args.dim, method)?;
    Ok(Answer::scalar(query, format_rational(&value), label))
}
