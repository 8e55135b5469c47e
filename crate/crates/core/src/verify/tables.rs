//! Golden values for the double eta polynomials of the Grassmannian
//! elements of `W̃_3` (`k = 1, 2`).
//!
//! Expressions use the parser notation: `e<r>_<j>` and `h<r>_<j>` denote
//! `e^r_j(-t)` and `h^r_j(-t)`.

use num_rational::BigRational;

use super::{Check, Report};
use crate::eta::{double_eta, double_eta_hat};
use crate::io::parse_expr;
use crate::weyl::{KStrictPartition, TypedPartition};

/// `(k, partition, H_λ(c|t))`.
pub const DOUBLE_ETA_TABLE: &[(u32, &str, &str)] = &[
    (1, "-", "1"),
    (1, "1:t1", "b1 + h1_1"),
    (1, "1:t2", "bt1"),
    (1, "2", "b2 + bt1 e1_1"),
    (1, "1,1:t1", "(b1 + h1_1)(c1 + h2_1) - (b2 + c1 h1_1 + h1_2)"),
    (1, "1,1:t2", "bt1 (c1 + h2_1) - b2"),
    (1, "3", "b3 + b2 e2_1 + bt1 e2_2"),
    (1, "2,1:t1", "(b2 + bt1 e1_1) b1 - (b3 + b2 e1_1)"),
    (1, "2,1:t2", "(b2 + bt1 e1_1)(bt1 + h1_1) - (b3 + b2 e1_1)"),
    (
        1,
        "3,1:t1",
        "(b3 + b2 e2_1 + bt1 e2_2) b1 - (b4 + b3 e2_1 + b2 e2_2)",
    ),
    (
        1,
        "3,1:t2",
        "(b3 + b2 e2_1 + bt1 e2_2)(bt1 + h1_1) - (b4 + b3 e2_1 + b2 e2_2)",
    ),
    (
        1,
        "3,2",
        "(b3 + b2 e2_1 + bt1 e2_2)(b2 + b1 e1_1) - (b4 + b3 e2_1 + b2 e2_2)(c1 + e1_1) \
         + (b5 + b4 e2_1 + b3 e2_2)",
    ),
    (2, "1", "b1 + h2_1"),
    (2, "2:t1", "b2 + b1 h1_1 + h1_2"),
    (2, "2:t2", "bt2"),
    (2, "3", "b3 + bt2 e1_1"),
    (2, "4", "b4 + b3 e2_1 + bt2 e2_2"),
];

/// `(k, shape, Ĥ_λ(c|t))`, with the powers of two kept as printed.
pub const HAT_ETA_TABLE: &[(u32, &str, &str)] = &[
    (1, "-", "1"),
    (1, "1", "c1 + h1_1"),
    (1, "2", "1/2 (c2 + 2 bt1 e1_1)"),
    (1, "1,1", "(c1 + h1_1)(c1 + h2_1) - (c2 + c1 h1_1 + h1_2)"),
    (1, "3", "1/2 (c3 + c2 e2_1 + 2 bt1 e2_2)"),
    (1, "2,1", "1/2 ((c2 + 2 bt1 e1_1)(c1 + h1_1) - 2 (c3 + c2 e1_1))"),
    (
        1,
        "3,1",
        "1/2 ((c3 + c2 e2_1 + 2 bt1 e2_2)(c1 + h1_1) - 2 (c4 + c3 e2_1 + c2 e2_2))",
    ),
    (
        1,
        "3,2",
        "1/4 ((c3 + c2 e2_1 + 2 bt1 e2_2)(c2 + 2 b1 e1_1) - 2 (c4 + c3 e2_1 + c2 e2_2)(c1 + e1_1) \
         + 2 (c5 + c4 e2_1 + c3 e2_2))",
    ),
    (2, "-", "1"),
    (2, "1", "c1 + h2_1"),
    (2, "2", "c2 + c1 h1_1 + h1_2"),
    (2, "3", "1/2 (c3 + 2 bt2 e1_1)"),
    (2, "4", "1/2 (c4 + c3 e2_1 + 2 bt2 e2_2)"),
];

fn compare(
    suite: &str,
    k: u32,
    label: &str,
    expected: &str,
    computed: crate::Result<crate::polyring::Polynomial<BigRational>>,
) -> Check {
    let name = format!("k={k} {label}");
    let outcome = parse_expr::<BigRational>(expected, k).and_then(|want| {
        let got = computed?;
        Ok((got == want, format!("expected {want}, computed {got}")))
    });
    match outcome {
        Ok((true, _)) => Check::pass(suite, name),
        Ok((false, detail)) => Check::fail(suite, name, detail),
        Err(e) => Check::fail(suite, name, e.to_string()),
    }
}

/// Every row of the `H_λ(c|t)` table.
pub fn double_eta_table() -> Report {
    let mut report = Report::new();
    for &(k, lam, expected) in DOUBLE_ETA_TABLE {
        let computed = TypedPartition::parse(lam, k).and_then(|l| double_eta::<BigRational>(&l));
        report.push(compare("table-H", k, lam, expected, computed));
    }
    report
}

/// Every row of the `Ĥ_λ(c|t)` table.
pub fn hat_eta_table() -> Report {
    let mut report = Report::new();
    for &(k, lam, expected) in HAT_ETA_TABLE {
        let computed = KStrictPartition::parse(lam, k).and_then(|s| double_eta_hat::<BigRational>(&s));
        report.push(compare("table-Hhat", k, lam, expected, computed));
    }
    report
}
