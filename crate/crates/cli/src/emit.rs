//! Output documents for each command in the three formats.

use higgsmotive::adhm::{MulticoverReport, RecursionReport, WallcrossingReport};
use higgsmotive::algebra::json::poly_to_records;
use higgsmotive::algebra::UniPoly;
use higgsmotive::higgs::{self, character_mhp, BiPoly, HnPoly, PropertyReport};
use higgsmotive::render::{
    bipoly_latex, bipoly_text, epoly_latex, poincare_latex, poly_latex, poly_text, uni_text,
};
use higgsmotive::Result;
use serde_json::{json, Value};

use crate::{Format, Kind};

pub enum Doc {
    Json(Value),
    Text(String),
}

impl Doc {
    pub fn render(&self) -> String {
        let mut s = match self {
            Doc::Json(v) => serde_json::to_string_pretty(v).expect("JSON values serialize"),
            Doc::Text(s) => s.clone(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

fn header(h: &HnPoly) -> Value {
    json!({"g": h.params.g, "p": h.params.p, "n": h.n, "dim": h.dim})
}

fn with(mut v: Value, key: &str, val: Value) -> Value {
    v[key] = val;
    v
}

fn uni_records(p: &UniPoly) -> Value {
    p.terms()
        .iter()
        .map(|(e, c)| json!({"y": e, "c": c.to_string()}))
        .collect()
}

fn bi_records(p: &BiPoly) -> Value {
    p.terms()
        .iter()
        .map(|((q, w), c)| json!({"q": q, "w": w, "c": c.to_string()}))
        .collect()
}

fn align(rows: &[String]) -> String {
    format!(
        "\\begin{{align*}}\n{}\n\\end{{align*}}\n",
        rows.join("\\\\\n")
    )
}

fn label(kind: char, h: &HnPoly) -> String {
    let args = if kind == 'E' { "(u,v)" } else { "(y)" };
    format!(
        "{kind}_{{{},{}}}^{{({})}}{args}",
        h.params.g, h.n, h.params.p
    )
}

pub fn hn(h: &HnPoly, fmt: Format) -> Doc {
    match fmt {
        Format::Json => Doc::Json(h.to_json()),
        Format::Text => {
            let lines: Vec<String> = h
                .poly
                .iter()
                .map(|(k, c)| format!("t^{k}: {}", poly_text(c)))
                .collect();
            Doc::Text(if lines.is_empty() {
                "0".into()
            } else {
                lines.join("\n")
            })
        }
        Format::Latex => {
            let terms: Vec<String> = h
                .poly
                .iter()
                .map(|(k, c)| {
                    let t = match k {
                        0 => String::new(),
                        1 => "t".into(),
                        _ => format!("t^{{{k}}}"),
                    };
                    format!("({}){t}", poly_latex(c))
                })
                .collect();
            let body = if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            };
            Doc::Text(format!(
                "H_{{{},{}}}^{{({})}}(t)={body}",
                h.params.g, h.n, h.params.p
            ))
        }
    }
}

pub fn epoly(h: &HnPoly, fmt: Format) -> Result<Doc> {
    let e = higgs::epoly(h)?;
    Ok(match fmt {
        Format::Json => Doc::Json(with(header(h), "epoly", json!(poly_to_records(&e)))),
        Format::Text => Doc::Text(poly_text(&e)),
        Format::Latex => Doc::Text(epoly_latex(h.params.g, &e)),
    })
}

pub fn poincare(h: &HnPoly, fmt: Format) -> Result<Doc> {
    let p = higgs::poincare(h)?;
    Ok(match fmt {
        Format::Json => Doc::Json(with(header(h), "poincare", uni_records(&p))),
        Format::Text => Doc::Text(uni_text(&p, "y")),
        Format::Latex => Doc::Text(poincare_latex(h.params.g, &p)),
    })
}

pub fn hodge(h: &HnPoly, fmt: Format) -> Result<Doc> {
    let p = higgs::hodge(h)?;
    Ok(match fmt {
        Format::Json => Doc::Json(with(header(h), "hodge", json!(poly_to_records(&p)))),
        Format::Text => Doc::Text(poly_text(&p)),
        Format::Latex => Doc::Text(poly_latex(&p)),
    })
}

pub fn charvar(h: &HnPoly, fmt: Format) -> Result<Doc> {
    let p = character_mhp(h)?;
    Ok(match fmt {
        Format::Json => Doc::Json(with(header(h), "charvar", bi_records(&p))),
        Format::Text => Doc::Text(bipoly_text(&p)),
        Format::Latex => Doc::Text(bipoly_latex(&p)),
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn properties(rep: &PropertyReport, fmt: Format) -> Doc {
    match fmt {
        Format::Json => Doc::Json(with(
            serde_json::to_value(rep).expect("report serializes"),
            "pass",
            rep.all_pass().into(),
        )),
        _ => Doc::Text(format!(
            "g={} p={} n={} D={} degree={}\n\
             degree equals D: {}\npalindromic: {}\ndivisible by P_X: {}\n\
             nonnegative after t -> -t: {}\n{}",
            rep.g,
            rep.p,
            rep.n,
            rep.dim,
            rep.degree.map_or("none".into(), |d| d.to_string()),
            rep.degree_equals_d,
            rep.palindromy,
            rep.pxdiv,
            rep.signflip_nonneg,
            verdict(rep.all_pass())
        )),
    }
}

pub fn recursion(rep: &RecursionReport, fmt: Format) -> Doc {
    let o = &rep.omegas;
    match fmt {
        Format::Json => Doc::Json(with(rep.to_json(), "pass", true.into())),
        Format::Latex => Doc::Text(align(
            &(1..=o.rmax())
                .map(|r| format!("\\Omega_{{{r}}}&={}", poly_latex(&o.get(r))))
                .collect::<Vec<_>>(),
        )),
        Format::Text => {
            let mut lines: Vec<String> = (1..=o.rmax())
                .map(|r| format!("Omega_{r} = {}", poly_text(&o.get(r))))
                .collect();
            lines.push(format!(
                "identity checked at charges -{w}..{w} on ranks 1..{} ({} slopes)",
                o.rmax(),
                rep.slopes_checked,
                w = rep.window
            ));
            lines.push(verdict(true).into());
            Doc::Text(lines.join("\n"))
        }
    }
}

fn range(r: Option<(i64, i64)>) -> String {
    r.map_or("none".into(), |(a, b)| format!("[{a}, {b}]"))
}

pub fn wallcrossing(rep: &WallcrossingReport, fmt: Format) -> Doc {
    if fmt == Format::Json {
        return Doc::Json(serde_json::to_value(rep).expect("report serializes"));
    }
    let mut lines = vec![format!(
        "g={} p={} mu={} rmax={} window={}",
        rep.g, rep.p, rep.mu, rep.rmax, rep.window
    )];
    for c in &rep.ranks {
        lines.push(format!(
            "rank {}: equal={} band={} support={} {}",
            c.r,
            c.equal,
            range(c.band),
            range(c.lhs_support),
            verdict(c.pass)
        ));
    }
    lines.push(verdict(rep.pass).into());
    Doc::Text(lines.join("\n"))
}

pub fn multicover(rep: &MulticoverReport, fmt: Format) -> Doc {
    if fmt == Format::Json {
        return Doc::Json(serde_json::to_value(rep).expect("report serializes"));
    }
    let mut lines = vec![format!(
        "g={} p={} mu={} rmax={} window={}",
        rep.g, rep.p, rep.mu, rep.rmax, rep.window
    )];
    for c in &rep.ranks {
        let status = match c.first_mismatch {
            None => "agree".to_string(),
            Some(k) => format!("differ at charge {k}"),
        };
        lines.push(format!(
            "rank {}: charges {} {status}",
            c.r,
            range(Some(c.compared))
        ));
    }
    lines.push(format!("integral: {}", rep.integral));
    lines.push(verdict(rep.pass).into());
    Doc::Text(lines.join("\n"))
}

pub fn table(rows: &[HnPoly], kind: Kind, fmt: Format) -> Result<Doc> {
    let kinds: &[char] = match kind {
        Kind::E => &['E'],
        Kind::P => &['P'],
        Kind::Both => &['E', 'P'],
    };
    let mut json_rows = Vec::new();
    let mut blocks = Vec::new();
    for &k in kinds {
        let mut lines = Vec::new();
        for h in rows {
            let (latex, text, value) = if k == 'E' {
                let e = higgs::epoly(h)?;
                (
                    epoly_latex(h.params.g, &e),
                    poly_text(&e),
                    json!(poly_to_records(&e)),
                )
            } else {
                let p = higgs::poincare(h)?;
                (
                    poincare_latex(h.params.g, &p),
                    uni_text(&p, "y"),
                    uni_records(&p),
                )
            };
            match fmt {
                Format::Latex => lines.push(format!("{}&={latex}", label(k, h))),
                Format::Text => lines.push(format!("{} = {text}", label(k, h))),
                Format::Json => json_rows.push(with(
                    with(header(h), "kind", k.to_string().into()),
                    "terms",
                    value,
                )),
            }
        }
        blocks.push(match fmt {
            Format::Latex => align(&lines),
            _ => lines.join("\n") + "\n",
        });
    }
    Ok(match fmt {
        Format::Json => Doc::Json(Value::Array(json_rows)),
        _ => Doc::Text(blocks.join("\n")),
    })
}
