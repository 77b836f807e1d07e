//! Text and JSON renderings of smoothness reports.

use std::fmt::Write as _;

use lunasmooth::lattice::IntVector;
use lunasmooth::smooth::{ComponentOutcome, FactorialityReport, SmoothnessReport};
use serde_json::{json, Value};

fn vec_json(v: &IntVector) -> Value {
    Value::Array(
        v.0.iter()
            .map(|x| match i64::try_from(x) {
                Ok(n) => json!(n),
                Err(_) => json!(x.to_string()),
            })
            .collect(),
    )
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn factorial_text(r: &FactorialityReport) -> String {
    let mut s = format!("condition 1 (locally factorial): {}\n", pass(r.pass));
    let rays: Vec<String> = r.rays.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(s, "  extremal rays: {}", rays.join(" "));
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "  witness: {w}");
    }
    s
}

pub fn factorial_json(r: &FactorialityReport) -> Value {
    json!({
        "pass": r.pass,
        "rays": r.rays.iter().map(vec_json).collect::<Vec<_>>(),
        "witness": r.witness.as_ref().map(|w| w.to_string()),
    })
}

pub fn text(r: &SmoothnessReport, explain: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "smooth: {}", if r.verdict { "yes" } else { "no" });
    s.push_str(&factorial_text(&r.cond1));
    let vacuous2 = r.cond2.components.iter().all(|c| c.outcome == ComponentOutcome::Colorless);
    let _ = writeln!(
        s,
        "condition 2 (catalog): {}{}",
        pass(r.cond2.pass),
        if vacuous2 && r.cond2.pass { " (vacuous)" } else { "" }
    );
    if explain {
        let sf: Vec<String> = r.s_f_used.iter().map(|id| id.to_string()).collect();
        let _ = writeln!(s, "  S_F = {{{}}}", sf.join(", "));
    }
    for c in &r.cond2.components {
        let what = match &c.outcome {
            ComponentOutcome::Colorless => "no colors".to_string(),
            ComponentOutcome::Unmatched => "not in the catalog".to_string(),
            ComponentOutcome::Matched(ms) => {
                let parts: Vec<String> = ms
                    .iter()
                    .map(|m| {
                        let p = m.params.to_string();
                        let marks: Vec<usize> = m.marked_pullback.iter().map(|&j| c.roots[j] + 1).collect();
                        format!(
                            "entry {}{} marks {:?}",
                            m.entry_id,
                            if p.is_empty() { p } else { format!(" ({p})") },
                            marks
                        )
                    })
                    .collect();
                parts.join("; ")
            }
        };
        if explain || c.outcome == ComponentOutcome::Unmatched {
            let _ = writeln!(s, "  component {}: {what}", c.summary);
        }
    }
    let vacuous3 = r.cond3.marked.is_empty() && r.cond3.pass;
    let _ =
        writeln!(s, "condition 3 (marked roots): {}{}", pass(r.cond3.pass), if vacuous3 { " (vacuous)" } else { "" });
    if explain {
        let us: Vec<String> = r.u_set.iter().map(|u| u.to_string()).collect();
        let _ = writeln!(s, "  non-color rays: {}", if us.is_empty() { "none".into() } else { us.join(" ") });
        for a in &r.cond3.assignment {
            let _ = writeln!(s, "  root #{} {} <-> {}", a.root + 1, a.gamma, a.u);
        }
    }
    if let Some(f) = &r.cond3.failure {
        let _ = writeln!(s, "  witness: {f}");
    }
    for f in &r.findings {
        let _ = writeln!(s, "note: {f}");
    }
    s
}

pub fn json(r: &SmoothnessReport) -> Value {
    json!({
        "smooth": r.verdict,
        "failed": r.failed_conditions(),
        "condition1": factorial_json(&r.cond1),
        "condition2": {
            "pass": r.cond2.pass,
            "s_f": r.s_f_used.iter().map(|id| id.to_string()).collect::<Vec<_>>(),
            "components": r.cond2.components.iter().map(|c| json!({
                "system": c.summary,
                "roots": c.roots,
                "outcome": match &c.outcome {
                    ComponentOutcome::Colorless => json!("no colors"),
                    ComponentOutcome::Unmatched => json!("unmatched"),
                    ComponentOutcome::Matched(ms) => Value::Array(ms.iter().map(|m| json!({
                        "entry": m.entry_id,
                        "params": m.params.to_string(),
                        "marked": m.marked_pullback.iter().map(|&j| c.roots[j]).collect::<Vec<_>>(),
                    })).collect()),
                },
            })).collect::<Vec<_>>(),
        },
        "condition3": {
            "pass": r.cond3.pass,
            "u": r.u_set.iter().map(vec_json).collect::<Vec<_>>(),
            "marked": r.cond3.marked,
            "assignment": r.cond3.assignment.iter().map(|a| json!({
                "root": a.root,
                "gamma": vec_json(&a.gamma),
                "u": vec_json(&a.u),
            })).collect::<Vec<_>>(),
            "failure": r.cond3.failure.as_ref().map(|f| f.to_string()),
        },
        "findings": r.findings.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    })
}
