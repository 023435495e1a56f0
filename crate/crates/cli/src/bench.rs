//! Seeded benchmark over random instances with known factorizations.

use std::fs;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sqfree_core::instance::{random_instance, CoeffKind, GeneratorConfig};
use sqfree_core::{BitTrace, Method};

use crate::commands::{CliError, Output};
use crate::{BenchArgs, CoeffArg, Format, MethodArg};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub trial: usize,
    pub degree: usize,
    pub method: &'static str,
    pub micros: u128,
    pub max_bits: u64,
    pub agrees: bool,
}

fn config(args: &BenchArgs) -> Result<GeneratorConfig, CliError> {
    if args.trials == 0 {
        return Err(CliError::Input(
            "invalid bounds: trials must be at least 1".into(),
        ));
    }
    let config = GeneratorConfig {
        min_degree: args.min_degree,
        max_degree: args.max_degree,
        max_mult: args.max_mult,
        coeffs: match args.coeffs {
            CoeffArg::Integer => CoeffKind::Integer,
            CoeffArg::Rational => CoeffKind::Rational,
        },
        ..GeneratorConfig::default()
    };
    config.validate()?;
    Ok(config)
}

/// Methods run one after another so timings do not contend for cores.
/// A row agrees when its result equals the known answer, which every other
/// method is held to as well.
pub fn bench_rows(args: &BenchArgs) -> Result<Vec<Row>, CliError> {
    let config = config(args)?;
    let methods = match args.method {
        MethodArg::Companion => vec![Method::Companion],
        MethodArg::Tobey => vec![Method::TobeyHorowitz],
        MethodArg::Yun => vec![Method::Yun],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut rows = Vec::new();
    for trial in 0..args.trials {
        let instance = random_instance(&mut rng, &config)?;
        let degree = instance.f.degree_or_zero();
        for &method in &methods {
            let mut trace = BitTrace::new();
            let start = Instant::now();
            let result = method.factor_traced(&instance.f, &mut trace);
            let micros = if args.no_timing {
                0
            } else {
                start.elapsed().as_micros()
            };
            rows.push(Row {
                trial,
                degree,
                method: method.as_str(),
                micros,
                max_bits: trace.max_bits(),
                agrees: result.is_ok_and(|sf| sf == instance.expected),
            });
        }
    }
    Ok(rows)
}

pub fn render(rows: &[Row], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| CliError::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| CliError::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn run_bench(args: &BenchArgs) -> Result<Output, CliError> {
    let rows = bench_rows(args)?;
    let body = render(&rows, args.format)?;
    let ok = rows.iter().all(|r| r.agrees);
    let stdout = match &args.output {
        Some(path) => {
            fs::write(path, &body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let disagreements = rows.iter().filter(|r| !r.agrees).count();
            format!(
                "{} trials, {} rows written to {}, {} disagreements\n",
                args.trials,
                rows.len(),
                path.display(),
                disagreements
            )
        }
        None => body,
    };
    Ok(Output {
        stdout,
        warnings: Vec::new(),
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(seed: u64) -> BenchArgs {
        BenchArgs {
            seed,
            trials: 3,
            min_degree: 4,
            max_degree: 12,
            max_mult: 4,
            coeffs: CoeffArg::Integer,
            method: MethodArg::All,
            format: Format::Text,
            output: None,
            no_timing: true,
        }
    }

    #[test]
    fn all_methods_agree() {
        let rows = bench_rows(&BenchArgs {
            trials: 1,
            ..args(11)
        })
        .unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.agrees));
        assert!(rows.iter().all(|r| r.max_bits > 0));
    }

    #[test]
    fn zero_degree_bound_rejected() {
        let e = bench_rows(&BenchArgs {
            min_degree: 0,
            max_degree: 0,
            ..args(1)
        })
        .unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(bench_rows(&BenchArgs { trials: 0, ..args(1) }).is_err());
    }

    #[test]
    fn deterministic_csv() {
        let a = render(&bench_rows(&args(5)).unwrap(), Format::Text).unwrap();
        let b = render(&bench_rows(&args(5)).unwrap(), Format::Text).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("trial,degree,method,micros,max_bits,agrees\n"));
        assert_eq!(a.lines().count(), 1 + 3 * 3);
    }

    #[test]
    fn timed_runs_differ_only_in_micros() {
        let strip =
            |rows: Vec<Row>| -> Vec<Row> { rows.into_iter().map(|r| Row { micros: 0, ..r }).collect() };
        let timed = BenchArgs {
            no_timing: false,
            ..args(9)
        };
        assert_eq!(strip(bench_rows(&timed).unwrap()), bench_rows(&args(9)).unwrap());
    }
}
