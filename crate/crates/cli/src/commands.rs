use std::fmt::Write as _;
use std::thread;

use serde::Serialize;
use sqfree_core::{
    compute_mf, forecast_from_report, normalize_input, verify_factorization, Error, Method, Polynomial,
    RationalMatrix, SquareFreeFactorization,
};

use crate::{Format, MethodArg, PolyArgs};

#[derive(Debug)]
pub enum CliError {
    /// Bad polynomial text, constant input, invalid bounds. Exit code 2.
    Input(String),
    /// A broken invariant inside a computation. Exit code 3.
    Internal(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Internal(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

/// What a command prints. `ok == false` means the command ran but a check failed.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub ok: bool,
}

impl Output {
    fn ok(stdout: String, warnings: Vec<String>) -> Self {
        Output {
            stdout,
            warnings,
            ok: true,
        }
    }
}

/// Parses and normalizes the input polynomial, collecting a warning if it was rescaled.
fn parse_input(text: &str) -> Result<(Polynomial, Polynomial, Vec<String>), CliError> {
    let parsed: Polynomial = text.trim().parse()?;
    let (f, normalized) = normalize_input(&parsed)?;
    let mut warnings = Vec::new();
    if normalized {
        warnings.push(format!("input is not monic; using {f}"));
    }
    Ok((parsed, f, warnings))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn matrix_rows(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn selected_methods(arg: MethodArg) -> Vec<Method> {
    match arg {
        MethodArg::Companion => vec![Method::Companion],
        MethodArg::Tobey => vec![Method::TobeyHorowitz],
        MethodArg::Yun => vec![Method::Yun],
        MethodArg::All => Method::ALL.to_vec(),
    }
}

/// Runs each method on its own thread; results come back in `methods` order.
pub fn factor_concurrently(
    f: &Polynomial,
    methods: &[Method],
) -> Vec<(Method, Result<SquareFreeFactorization, Error>)> {
    thread::scope(|scope| {
        let handles: Vec<_> = methods
            .iter()
            .map(|&m| (m, scope.spawn(move || m.factor(f))))
            .collect();
        handles
            .into_iter()
            .map(|(m, h)| (m, h.join().expect("factor thread panicked")))
            .collect()
    })
}

#[derive(Serialize)]
struct ComponentJson {
    k: usize,
    poly: String,
    degree: usize,
}

#[derive(Serialize)]
struct FactorJson {
    input: String,
    m: usize,
    components: Vec<ComponentJson>,
    method: String,
}

fn components_json(sf: &SquareFreeFactorization) -> Vec<ComponentJson> {
    sf.components()
        .iter()
        .map(|(k, p)| ComponentJson {
            k: *k,
            poly: p.to_string(),
            degree: p.degree_or_zero(),
        })
        .collect()
}

pub fn run_factor(text: &str, args: &PolyArgs) -> Result<Output, CliError> {
    let (parsed, f, warnings) = parse_input(text)?;
    let methods = selected_methods(args.method);
    let mut results = Vec::new();
    for (m, r) in factor_concurrently(&f, &methods) {
        results.push((m, r?));
    }
    let (_, sf) = &results[0];
    if let Some((m, other)) = results.iter().find(|(_, r)| r != sf) {
        return Err(CliError::Internal(format!(
            "{m} produced {other}, {} produced {sf}",
            results[0].0
        )));
    }
    let method = match args.method {
        MethodArg::All => "all".to_string(),
        _ => results[0].0.to_string(),
    };
    let stdout = match args.format {
        Format::Text => format!("f = {sf}\n"),
        Format::Json => to_json(&FactorJson {
            input: parsed.to_string(),
            m: sf.m(),
            components: components_json(sf),
            method,
        }),
    };
    Ok(Output::ok(stdout, warnings))
}

#[derive(Serialize)]
struct MfJson {
    mf: String,
    f0: String,
    #[serde(rename = "P")]
    p: String,
    g: String,
    h: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    companion: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mf_matrix: Option<Vec<Vec<String>>>,
}

pub fn run_mf(text: &str, args: &PolyArgs) -> Result<Output, CliError> {
    let (_, f, warnings) = parse_input(text)?;
    let report = compute_mf(&f)?;
    let matrices = if args.show_matrix {
        Some((sqfree_core::companion(&report.f0)?, report.mf_matrix()?))
    } else {
        None
    };
    let stdout = match args.format {
        Format::Text => {
            let mut s = format!("M_f = {}\n", report.mf);
            if let Some((c, m)) = &matrices {
                write!(s, "C_f0 =\n{c}M_f(C_f0) =\n{m}").unwrap();
            }
            s
        }
        Format::Json => to_json(&MfJson {
            mf: report.mf.to_string(),
            f0: report.f0.to_string(),
            p: report.p.to_string(),
            g: report.g.to_string(),
            h: report.h.to_string(),
            companion: matrices.as_ref().map(|(c, _)| matrix_rows(c)),
            mf_matrix: matrices.as_ref().map(|(_, m)| matrix_rows(m)),
        }),
    };
    Ok(Output::ok(stdout, warnings))
}

#[derive(Serialize)]
struct DegreeJson {
    k: usize,
    degree: usize,
}

#[derive(Serialize)]
struct ForecastJson {
    input: String,
    m: usize,
    degrees: Vec<DegreeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    char_poly: Option<String>,
}

pub fn run_forecast(text: &str, args: &PolyArgs) -> Result<Output, CliError> {
    let (parsed, f, warnings) = parse_input(text)?;
    let report = compute_mf(&f)?;
    let forecast = forecast_from_report(&report)?;
    let mf_matrix = report.mf_matrix()?;
    let stdout = match args.format {
        Format::Text => {
            let mut s = String::new();
            if args.show_matrix {
                let cp = sqfree_core::char_poly(&mf_matrix);
                write!(s, "M_f(C_f0) =\n{mf_matrix}char = {cp}\n").unwrap();
            }
            writeln!(s, "m = {}", forecast.m).unwrap();
            for (k, d) in &forecast.degrees {
                writeln!(s, "deg(P_{k}) = {d}").unwrap();
            }
            s
        }
        Format::Json => to_json(&ForecastJson {
            input: parsed.to_string(),
            m: forecast.m,
            degrees: forecast
                .degrees
                .iter()
                .map(|(&k, &degree)| DegreeJson { k, degree })
                .collect(),
            char_poly: args
                .show_matrix
                .then(|| sqfree_core::char_poly(&mf_matrix).to_string()),
        }),
    };
    Ok(Output::ok(stdout, warnings))
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct MethodJson {
    method: String,
    factorization: String,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct VerifyJson {
    input: String,
    methods: Vec<MethodJson>,
    agree: bool,
    forecast_matches: bool,
    ok: bool,
}

/// All three methods, the structural checks on each, pairwise agreement, and
/// the forecast against the computed degree profile. `compute_mf` runs both
/// routes, so route disagreement surfaces as an internal error.
pub fn run_verify(text: &str, args: &PolyArgs) -> Result<Output, CliError> {
    let (parsed, f, warnings) = parse_input(text)?;
    let mut methods = Vec::new();
    for (m, r) in factor_concurrently(&f, &Method::ALL) {
        let sf = r?;
        let report = verify_factorization(&f, &sf);
        methods.push((m, sf, report));
    }
    let reference = &methods[0].1;
    let agree = methods.iter().all(|(_, sf, _)| sf == reference);
    let forecast = forecast_from_report(&compute_mf(&f)?)?;
    let forecast_matches = forecast.degrees == reference.degree_profile();
    let ok = agree && forecast_matches && methods.iter().all(|(_, _, r)| r.all_passed());

    let stdout = match args.format {
        Format::Text => {
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            let mut s = String::new();
            for (m, sf, report) in &methods {
                writeln!(s, "{m}: f = {sf}").unwrap();
                for c in &report.checks {
                    writeln!(s, "  {:<17} {}", c.name, mark(c.passed)).unwrap();
                }
            }
            writeln!(s, "agreement: {}", mark(agree)).unwrap();
            writeln!(s, "forecast: {}", mark(forecast_matches)).unwrap();
            writeln!(s, "result: {}", mark(ok)).unwrap();
            s
        }
        Format::Json => to_json(&VerifyJson {
            input: parsed.to_string(),
            methods: methods
                .iter()
                .map(|(m, sf, report)| MethodJson {
                    method: m.to_string(),
                    factorization: sf.to_string(),
                    checks: report
                        .checks
                        .iter()
                        .map(|c| CheckJson {
                            name: c.name.to_string(),
                            passed: c.passed,
                            detail: c.detail.clone(),
                        })
                        .collect(),
                })
                .collect(),
            agree,
            forecast_matches,
            ok,
        }),
    };
    Ok(Output { stdout, warnings, ok })
}
