//! Text and LaTeX rendering of the polynomials the engine produces.
//!
//! Text output lists terms in descending degree with spaced signs (`y^2 + 1`).
//! LaTeX output is meant for math mode and follows the usual table layout:
//! unspaced signs, braced exponents and the expected factors pulled out front.

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{CoeffPoly, Monomial, UniPoly};
use crate::higgs::BiPoly;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

fn exponent(num2: i32, style: Style) -> String {
    // num2 is twice the exponent
    let body = if num2 % 2 == 0 {
        (num2 / 2).to_string()
    } else {
        format!("{num2}/2")
    };
    match style {
        Style::Latex => format!("^{{{body}}}"),
        Style::Text if num2 % 2 == 0 && num2 > 0 => format!("^{body}"),
        Style::Text => format!("^({body})"),
    }
}

fn power(var: &str, num2: i32, style: Style) -> String {
    match num2 {
        0 => String::new(),
        2 => var.to_string(),
        _ => format!("{var}{}", exponent(num2, style)),
    }
}

fn join_terms<I: IntoIterator<Item = (BigInt, String)>>(terms: I, style: Style) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let sep = match (out.is_empty(), neg, style) {
            (true, true, _) => "-",
            (true, false, _) => "",
            (false, true, Style::Text) => " - ",
            (false, false, Style::Text) => " + ",
            (false, true, Style::Latex) => "-",
            (false, false, Style::Latex) => "+",
        };
        out.push_str(sep);
        let a = c.abs();
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn uni(p: &UniPoly, var: &str, style: Style) -> String {
    join_terms(
        p.terms()
            .iter()
            .rev()
            .map(|(e, c)| (c.clone(), power(var, (2 * e) as i32, style))),
        style,
    )
}

fn monomial(m: Monomial, style: Style) -> String {
    format!("{}{}", power("u", m.u2, style), power("v", m.v2, style))
}

fn poly(p: &CoeffPoly, style: Style) -> String {
    let mut terms: Vec<_> = p.terms().to_vec();
    terms.sort_by_key(|(m, _)| Reverse((m.u2 + m.v2, m.v2)));
    join_terms(
        terms.into_iter().map(|(m, c)| (c, monomial(m, style))),
        style,
    )
}

/// Univariate polynomial in descending degree, e.g. `3y^8 + 4y^6 + 1`.
pub fn uni_text(p: &UniPoly, var: &str) -> String {
    uni(p, var, Style::Text)
}

pub fn uni_latex(p: &UniPoly, var: &str) -> String {
    uni(p, var, Style::Latex)
}

/// Polynomial in `u, v` by descending total degree, e.g. `u^2v^2 - u + 1`.
pub fn poly_text(p: &CoeffPoly) -> String {
    poly(p, Style::Text)
}

pub fn poly_latex(p: &CoeffPoly) -> String {
    poly(p, Style::Latex)
}

fn bipoly(p: &BiPoly, style: Style) -> String {
    let mut terms: Vec<_> = p.terms().to_vec();
    terms.sort_by(|(a, _), (b, _)| b.cmp(a));
    join_terms(
        terms.into_iter().map(|((q, w), c)| {
            let m = format!(
                "{}{}",
                power("q", (2 * q) as i32, style),
                power("w", (2 * w) as i32, style)
            );
            (c, m)
        }),
        style,
    )
}

/// Polynomial in `q, w` by descending `q` degree, then descending `w` degree.
pub fn bipoly_text(p: &BiPoly) -> String {
    bipoly(p, Style::Text)
}

pub fn bipoly_latex(p: &BiPoly) -> String {
    bipoly(p, Style::Latex)
}

fn factor_power(base: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => format!("({base})"),
        2..=9 => format!("({base})^{k}"),
        _ => format!("({base})^{{{k}}}"),
    }
}

/// `P(y)` with the factor `(1+y)^{2g}` pulled out when it divides.
pub fn poincare_latex(g: u32, p: &UniPoly) -> String {
    if p.is_zero() || g == 0 {
        return uni_latex(p, "y");
    }
    let (k, rest) = p.strip_factor(&UniPoly::from_coeffs(&[1, 1]), 2 * g);
    if k == 0 {
        return uni_latex(p, "y");
    }
    format!("{}({})", factor_power("1+y", k), uni_latex(&rest, "y"))
}

/// `E(u, v)` with `(uv)^m` and `(1-u)^g (1-v)^g` pulled out where they divide.
pub fn epoly_latex(g: u32, e: &CoeffPoly) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let m = e
        .terms()
        .iter()
        .map(|(mo, _)| mo.u2.min(mo.v2))
        .min()
        .unwrap()
        .max(0)
        / 2;
    let mut rest = e.mul_monomial(Monomial::lefschetz(-m));
    let mut prefix = if m == 1 {
        "(uv)".to_string()
    } else if m > 1 {
        format!("(uv)^{{{m}}}")
    } else {
        String::new()
    };
    if g > 0 {
        let one_minus = |d: (i32, i32)| CoeffPoly::from_doubled(&[(0, 0, 1), (d.0, d.1, -1)]);
        let px = one_minus((2, 0)).pow(g).mul(&one_minus((0, 2)).pow(g));
        if let Some(q) = rest.div_exact(&px) {
            rest = q;
            prefix.push_str(&if g == 1 {
                "(1-u)(1-v)".to_string()
            } else {
                format!("(1-u)^{g}(1-v)^{g}")
            });
        }
    }
    if prefix.is_empty() {
        poly_latex(&rest)
    } else if rest.is_one() {
        prefix
    } else {
        format!("{prefix}({})", poly_latex(&rest))
    }
}
