//! Human-readable renderings. Variables named v3 or w{2,4,6} print in the
//! subscript style x_{3} and x_{2,4,6}; anything else keeps its name.

use std::fmt::Write as _;

use chroma::bridge::BridgeReport;
use chroma::ideal::MonomialIdeal;

use crate::{ColorEflOutput, CompareOutput, MethodOutcome, MultOutput};

fn var_display(name: &str) -> String {
    if let Some(digits) = name.strip_prefix('v') {
        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            return format!("x_{{{digits}}}");
        }
    }
    if let Some(rest) = name.strip_prefix("w{") {
        if let Some(inner) = rest.strip_suffix('}') {
            return format!("x_{{{inner}}}");
        }
    }
    name.to_string()
}

fn set_text(s: &[u32]) -> String {
    let inner: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn ideal_text(m: &MonomialIdeal) -> String {
    let registry = m.registry();
    let vars: Vec<String> = registry.names().iter().map(|n| var_display(n)).collect();
    let mut out = format!("variables: {}\ngenerators:\n", vars.join(" "));
    for g in m.generators() {
        let factors: Vec<String> = g
            .exponents()
            .iter()
            .map(|&(v, e)| {
                let name = var_display(registry.name(v));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        let _ = writeln!(out, "  {}", factors.join("*"));
    }
    out
}

fn method_lines(out: &mut String, m: &chroma::bridge::MultiplicityByMethod) {
    if let Some(v) = m.realizations {
        let _ = writeln!(out, "  by realizations: {v}");
    }
    if let Some(v) = m.inclusion_exclusion {
        let _ = writeln!(out, "  by subset expansion: {v}");
    }
    if let Some(v) = m.recursive {
        let _ = writeln!(out, "  by recursion: {v}");
    }
}

pub fn report_text(r: &BridgeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "chi: {}", r.chi);
    let _ = writeln!(out, "codim: {}", r.codim);
    let _ = writeln!(out, "realizations: {}", r.realizations_count);
    match r.mult {
        Some(e) => {
            let _ = writeln!(out, "multiplicity: {e}");
            method_lines(&mut out, &r.mult_by_method);
        }
        None => {
            let _ = writeln!(out, "multiplicity: none (no complete intersection)");
        }
    }
    if let Some(p) = r.p_at_chi {
        let _ = writeln!(out, "P(chi): {p}");
    }
    if let Some(cover) = &r.clique_cover_used {
        let cliques: Vec<String> = cover.cliques.iter().map(|c| set_text(c)).collect();
        let _ = writeln!(out, "cover: {}", cliques.join(" "));
    }
    out
}

pub fn color_text(o: &ColorEflOutput) -> String {
    let mut out = String::new();
    let cliques: Vec<String> = o.instance.cliques.iter().map(|c| set_text(c)).collect();
    let _ = writeln!(
        out,
        "k: {}, n: {}, cliques: {}",
        o.instance.k,
        o.instance.graph.n,
        cliques.join(" ")
    );
    for (v, c) in &o.coloring.colors {
        let _ = writeln!(out, "vertex {v} -> color {c}");
    }
    let _ = writeln!(out, "proper: {}", o.coloring.proper);
    let classes: Vec<String> = o
        .coloring
        .configuration
        .iter()
        .map(|s| set_text(s))
        .collect();
    let _ = writeln!(out, "configuration: {}", classes.join(" "));
    out
}

pub fn mult_text(o: &MultOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "codimension: {}", o.codimension);
    let ci: Vec<String> = o.decomposition.ci.iter().map(usize::to_string).collect();
    let others: Vec<String> = o
        .decomposition
        .others
        .iter()
        .map(usize::to_string)
        .collect();
    let _ = writeln!(
        out,
        "complete intersection: generators {}; others: {}",
        ci.join(", "),
        if others.is_empty() {
            "none".to_string()
        } else {
            others.join(", ")
        }
    );
    let _ = writeln!(out, "multiplicity: {}", o.multiplicity);
    method_lines(&mut out, &o.by_method);
    out
}

fn outcome_text(o: &MethodOutcome) -> String {
    match (o.value, &o.error) {
        (Some(v), _) => v.to_string(),
        (None, Some(e)) => format!("refused ({e})"),
        (None, None) => "refused".to_string(),
    }
}

pub fn compare_text(o: &CompareOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "codimension: {}", o.codimension);
    let _ = writeln!(out, "dominant: {}", o.dominant);
    let _ = writeln!(out, "realizations: {}", outcome_text(&o.realizations));
    let _ = writeln!(
        out,
        "subset expansion: {}",
        outcome_text(&o.inclusion_exclusion)
    );
    let _ = writeln!(out, "recursion: {}", outcome_text(&o.recursive));
    match o.agreement {
        Some(a) => {
            let _ = writeln!(out, "agreement: {a}");
        }
        None => {
            let _ = writeln!(out, "agreement: not comparable");
        }
    }
    out
}
