//! The acceptance criteria, each run at its pinned range and time limit.
//! Runs without the libtest harness so the per-criterion lines are always
//! printed; the process exits nonzero if any line is FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use double_eta::verify::{
    basis_dimensions, basis_triangularity, cover_rules, double_eta_table, elementary_identities,
    family_identities, hat_cover_rules, hat_eta_table, hat_sums, ideal_witnesses, reconstruction, splitting,
    weyl_laws, EtaCache, IdentityRange, Report, SampleConfig,
};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> (Report, Option<usize>),
}

fn table_1() -> (Report, Option<usize>) {
    (double_eta_table(), Some(17))
}

fn table_2() -> (Report, Option<usize>) {
    (hat_eta_table(), Some(13))
}

fn family_identities_full() -> (Report, Option<usize>) {
    (
        family_identities(IdentityRange {
            max_k: 3,
            max_p: 8,
            max_r: 6,
        }),
        None,
    )
}

fn weyl() -> (Report, Option<usize>) {
    (
        weyl_laws(SampleConfig {
            seed: 7,
            samples: 200,
            max_degree: 6,
            max_k: 3,
        }),
        None,
    )
}

// Covers do not depend on the rank, and the rank-5 rectangle contains
// every smaller one, so n = 5 covers the whole range n <= 5.
fn cover_suite() -> (Report, Option<usize>) {
    let mut report = Report::new();
    for k in [1, 2] {
        report.extend(cover_rules(k, 5, &mut EtaCache::new()));
    }
    report.extend(ideal_witnesses(1, &mut EtaCache::new()));
    (report, None)
}

fn hat_cover_suite() -> (Report, Option<usize>) {
    let mut report = Report::new();
    for k in [1, 2] {
        report.extend(hat_cover_rules(k, 5, &mut EtaCache::new()));
    }
    (report, Some(8))
}

fn hat_sum() -> (Report, Option<usize>) {
    (hat_sums(&[1, 2], 8, &mut EtaCache::new()), None)
}

fn basis() -> (Report, Option<usize>) {
    let mut report = basis_triangularity(&[1, 2], 8, &mut EtaCache::new());
    report.extend(basis_dimensions(&[1, 2, 3], 10));
    (report, None)
}

fn rebuild() -> (Report, Option<usize>) {
    (reconstruction(1, 4, &mut EtaCache::new()), None)
}

fn split() -> (Report, Option<usize>) {
    (splitting(&[1, 2], 6, &mut EtaCache::new()), None)
}

fn elementary() -> (Report, Option<usize>) {
    (elementary_identities(8, 6), None)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "H table, 17 rows",
        limit: Duration::from_secs(5),
        run: table_1,
    },
    Criterion {
        id: 2,
        title: "Hhat table, 13 rows",
        limit: Duration::from_secs(5),
        run: table_2,
    },
    Criterion {
        id: 3,
        title: "c, c-hat and f identities, k<=3 p,q<=8 |r|<=6",
        limit: Duration::from_secs(60),
        run: family_identities_full,
    },
    Criterion {
        id: 4,
        title: "Weyl action laws, 200 samples",
        limit: Duration::from_secs(60),
        run: weyl,
    },
    Criterion {
        id: 5,
        title: "cover rules mod J, k<=2 n<=5",
        limit: Duration::from_secs(600),
        run: cover_suite,
    },
    Criterion {
        id: 6,
        title: "exact Hhat cover rules, k<=2 n<=5",
        limit: Duration::from_secs(600),
        run: hat_cover_suite,
    },
    Criterion {
        id: 7,
        title: "Hhat = H + H', |λ|<=8 k<=2",
        limit: Duration::from_secs(120),
        run: hat_sum,
    },
    Criterion {
        id: 8,
        title: "triangularity and dimensions",
        limit: Duration::from_secs(300),
        run: basis,
    },
    Criterion {
        id: 9,
        title: "reconstruction from the top class, k=1 n=4",
        limit: Duration::from_secs(600),
        run: rebuild,
    },
    Criterion {
        id: 10,
        title: "splitting formula, |λ|<=6 k<=2",
        limit: Duration::from_secs(600),
        run: split,
    },
    Criterion {
        id: 11,
        title: "elementary alternating sums",
        limit: Duration::from_secs(5),
        run: elementary,
    },
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let (report, expected_len) = (c.run)();
        let elapsed = start.elapsed();
        let mut problems: Vec<String> = report.failures().map(|f| f.to_string()).collect();
        if let Some(n) = expected_len {
            if report.len() != n {
                problems.push(format!("expected {n} checks, found {}", report.len()));
            }
        }
        if report.is_empty() {
            problems.push("no checks ran".into());
        }
        if elapsed > c.limit {
            problems.push(format!("took {:.1?}, limit {:?}", elapsed, c.limit));
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {} [{}/{} checks, {:.2}s of {}s]",
            c.id,
            c.title,
            report.passed(),
            report.len(),
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
