use crate::polyring::{Monomial, Polynomial, Var};
use crate::scalar::Scalar;

fn var_text(v: Var, k: u32) -> String {
    match v {
        Var::BTilde => format!("bt{k}"),
        Var::B(p) => format!("b{p}"),
        Var::T(i) => format!("t{i}"),
    }
}

fn var_latex(v: Var, k: u32) -> String {
    match v {
        Var::BTilde => format!("\\wt{{b}}_{{{k}}}"),
        Var::B(p) => format!("b_{{{p}}}"),
        Var::T(i) => format!("t_{{{i}}}"),
    }
}

fn monomial_with(m: &Monomial, k: u32, latex: bool) -> String {
    let mut parts = Vec::new();
    for (v, e) in m.iter() {
        let base = if latex { var_latex(v, k) } else { var_text(v, k) };
        parts.push(match (e, latex) {
            (1, _) => base,
            (e, true) => format!("{base}^{{{e}}}"),
            (e, false) => format!("{base}^{e}"),
        });
    }
    parts.join(if latex { " " } else { "*" })
}

fn render<C: Scalar>(f: &Polynomial<C>, k: u32, latex: bool) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (m, c)) in f.sorted_terms(k).into_iter().enumerate() {
        let neg = c.is_negative_value();
        let abs = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let coeff = if latex {
            latex_scalar(&abs)
        } else {
            abs.to_string()
        };
        if m.is_one() {
            out.push_str(&coeff);
        } else {
            if !abs.is_one() {
                out.push_str(&coeff);
                out.push_str(if latex { " " } else { "*" });
            }
            out.push_str(&monomial_with(m, k, latex));
        }
    }
    out
}

fn latex_scalar<C: Scalar>(c: &C) -> String {
    let s = c.to_string();
    match s.split_once('/') {
        Some((num, den)) => format!("\\frac{{{num}}}{{{den}}}"),
        None => s,
    }
}

/// Plain text such as `b2*bt1 - 2*b3 + t1^2`, highest terms first.
pub fn to_text<C: Scalar>(f: &Polynomial<C>, k: u32) -> String {
    render(f, k, false)
}

/// LaTeX with `b_{p}`, `\wt{b}_{k}` and `t_{i}`.
pub fn to_latex<C: Scalar>(f: &Polynomial<C>, k: u32) -> String {
    render(f, k, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = Polynomial<BigInt>;

    #[test]
    fn text_and_latex() {
        let f = P::b(2) * P::btilde() - P::b(3).scale_i64(2) + P::t(1).pow(2);
        assert_eq!(to_text(&f, 1), "bt1*b2 - 2*b3 + t1^2");
        assert_eq!(to_latex(&f, 1), "\\wt{b}_{1} b_{2} - 2 b_{3} + t_{1}^{2}");
        assert_eq!(to_text(&P::zero(), 1), "0");
        assert_eq!(to_text(&P::one(), 1), "1");
        let half = Polynomial::<BigRational>::b(1).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(to_latex(&half, 2), "\\frac{1}{2} b_{1}");
    }
}
