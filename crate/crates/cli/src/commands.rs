use std::io::{Read, Write};
use std::process::ExitCode;

use double_eta::eta::{double_eta, double_eta_hat, single_eta};
use double_eta::io::{expansion_to_json, from_json_str, to_json, to_latex, to_text};
use double_eta::quotient::{expand_in_b_basis, expand_in_eta_basis, normal_form, BasisExpansion};
use double_eta::schubert::{schubert_poly, Permutation};
use double_eta::verify::{jobs, Report, Suite, SuiteConfig};
use double_eta::{IntPoly, KStrictPartition, Polynomial, RatPoly, Scalar, TypedPartition};
use rayon::prelude::*;
use serde_json::json;

use crate::error::CliError;
use crate::{Basis, ComputeArgs, EnumerateArgs, ExpandArgs, Format, InputArgs, SchubertArgs, VerifyArgs};

type Outcome = Result<ExitCode, CliError>;

fn render<C: Scalar>(f: &Polynomial<C>, k: u32, format: Format) -> String {
    match format {
        Format::Json => to_json(f, k).to_string(),
        Format::Latex => to_latex(f, k),
        Format::Text => to_text(f, k),
    }
}

fn render_expansion<C: Scalar>(e: &BasisExpansion<C>, k: u32, format: Format) -> String {
    if format == Format::Json {
        return expansion_to_json(e, k).to_string();
    }
    let lines: Vec<String> = e
        .iter()
        .map(|(lam, c)| format!("{lam}: {}", render(c, k, format)))
        .collect();
    if lines.is_empty() {
        "0".to_string()
    } else {
        lines.join("\n")
    }
}

fn expand<C: Scalar>(f: &Polynomial<C>, k: u32, basis: Basis) -> Result<BasisExpansion<C>, CliError> {
    Ok(match basis {
        Basis::B => expand_in_b_basis(f, k)?,
        Basis::Eta => expand_in_eta_basis(f, k)?,
    })
}

fn check_k(k: u32) -> Result<(), CliError> {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    Ok(())
}

pub fn compute(a: &ComputeArgs) -> Outcome {
    check_k(a.k)?;
    let mut f: IntPoly = if a.hat {
        double_eta_hat(&KStrictPartition::parse(&a.lambda, a.k)?)?
    } else {
        let lam = TypedPartition::parse(&a.lambda, a.k)?;
        if a.single {
            single_eta(&lam)?
        } else {
            double_eta(&lam)?
        }
    };
    if a.normal_form {
        f = normal_form(&f, a.k);
    }
    let out = match a.expand {
        Some(basis) => render_expansion(&expand(&f, a.k, basis)?, a.k, a.format),
        None => render(&f, a.k, a.format),
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn read_input(a: &InputArgs) -> Result<RatPoly, CliError> {
    check_k(a.k)?;
    let text = match &a.input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(from_json_str(&text, a.k)?)
}

pub fn normal_form_cmd(a: &InputArgs) -> Outcome {
    let f = read_input(a)?;
    println!("{}", render(&normal_form(&f, a.k), a.k, a.format));
    Ok(ExitCode::SUCCESS)
}

pub fn basis_expand(a: &ExpandArgs) -> Outcome {
    let f = read_input(&a.input)?;
    let k = a.input.k;
    println!(
        "{}",
        render_expansion(&expand(&f, k, a.basis)?, k, a.input.format)
    );
    Ok(ExitCode::SUCCESS)
}

pub fn schubert(a: &SchubertArgs) -> Outcome {
    let u: Permutation = a.perm.parse()?;
    let s: IntPoly = schubert_poly(&u)?;
    println!("{}", render(&s, 1, a.format));
    Ok(ExitCode::SUCCESS)
}

fn threads() -> Result<usize, CliError> {
    match std::env::var("ETA_THREADS") {
        Ok(v) => {
            v.trim().parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(|| {
                CliError::Usage(format!("ETA_THREADS must be a positive integer, found {v:?}"))
            })
        }
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

pub fn verify(a: &VerifyArgs) -> Outcome {
    let suite: Suite = a.suite.parse()?;
    if a.k == Some(0) {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    if let Some(n) = a.n {
        let k = a.k.unwrap_or(2);
        if n <= k && matches!(suite, Suite::Covers | Suite::Basis | Suite::All) {
            return Err(CliError::Usage(format!(
                "--n must exceed k={k}: the rank-n rectangle has n-k rows"
            )));
        }
    }
    let cfg = SuiteConfig {
        k: a.k,
        n: a.n,
        seed: a.seed,
        max_weight: a.max_weight,
    };
    let work = jobs(suite, &cfg);
    let threads = threads()?;
    let mut total = Report::new();
    let stdout = std::io::stdout();
    let mut emit = |r: Report| -> Result<(), CliError> {
        let r = r.sorted();
        let mut out = stdout.lock();
        for c in r.checks() {
            writeln!(out, "{c}")?;
        }
        out.flush()?;
        total.extend(r);
        Ok(())
    };
    if threads == 1 {
        for job in work {
            emit(job.run())?;
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let reports: Vec<Report> = pool.install(|| work.into_par_iter().map(|j| j.run()).collect());
        for r in reports {
            emit(r)?;
        }
    }
    println!("{}/{} passed", total.passed(), total.len());
    Ok(if total.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn enumerate(a: &EnumerateArgs) -> Outcome {
    check_k(a.k)?;
    let (rows, cols) = match (a.n, a.rows, a.cols) {
        (Some(n), _, _) if n <= a.k => (0, 0),
        (Some(n), _, _) => ((n - a.k) as usize, n + a.k - 1),
        (None, Some(r), Some(c)) => (r, c),
        _ => return Err(CliError::Usage("give --n or both --rows and --cols".into())),
    };
    let list = TypedPartition::enumerate(a.k, rows, cols);
    match a.format {
        Format::Json => {
            let items: Vec<_> = list
                .iter()
                .map(|lam| {
                    let w = lam.to_perm();
                    json!({ "partition": lam.to_string(), "size": lam.size(), "permutation": w.to_string(),
                            "length": w.length() })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        _ => {
            for lam in &list {
                let w = lam.to_perm();
                println!("{lam}\t|λ|={}\tw=({w})\tℓ={}", lam.size(), w.length());
            }
            println!("{} typed partitions", list.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_expansion_renders_as_zero() {
        let e = expand_in_b_basis(&IntPoly::zero(), 1).unwrap();
        assert_eq!(render_expansion(&e, 1, Format::Text), "0");
        assert_eq!(render_expansion(&e, 1, Format::Json), "[]");
    }
}
