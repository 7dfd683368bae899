mod args;
mod commands;
mod output;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use primfact_core::{Budget, Error};

use args::{Cli, Command};
use commands::Answer;
use output::{Query, QueryResult, Value};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn emit(result: &QueryResult, json: bool) {
    if json {
        match serde_json::to_string(result) {
            Ok(s) => println!("{s}"),
            Err(e) => eprintln!("error: cannot serialize result: {e}"),
        }
    } else {
        println!("{}", result.render_text());
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let budget = Budget::new(cli.max_nodes);
    let start = Instant::now();

    if let Command::Verify(v) = &cli.command {
        let report = match verify::run(v.suite, v.max_n, v.jobs, &budget) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(exit_code_for(&e));
            }
        };
        let failures = report.failures();
        let passed = failures == 0;
        let only_budget = report.budget_failures == failures;
        let suite = format!("{:?}", v.suite).to_lowercase();
        let result = QueryResult {
            query: Query::new("verify")
                .arg("suite", &suite)
                .arg("max-n", v.max_n),
            value: Value::Scalar(if passed { "pass" } else { "fail" }.into()),
            method: suite,
            elapsed_ms: start.elapsed().as_millis() as u64,
            cases: report.cases,
        };
        emit(&result, cli.json);
        return if passed {
            ExitCode::SUCCESS
        } else if only_budget {
            ExitCode::from(EXIT_BUDGET)
        } else {
            ExitCode::from(EXIT_VERIFY)
        };
    }

    let answer: Result<Answer, Error> = match &cli.command {
        Command::Count(a) => commands::count(a, &budget),
        Command::Minimal(a) => commands::minimal(a),
        Command::FullCycle(a) => commands::full_cycle(a, &budget),
        Command::Hurwitz(a) => commands::hurwitz(a, &budget),
        Command::Phi(a) => commands::phi(a),
        Command::Correlator(a) => commands::correlator(a),
        Command::Verify(_) => unreachable!("handled above"),
    };
    match answer {
        Ok(a) => {
            let result = QueryResult {
                query: a.query,
                value: a.value,
                method: a.method,
                elapsed_ms: start.elapsed().as_millis() as u64,
                cases: Vec::new(),
            };
            emit(&result, cli.json);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
