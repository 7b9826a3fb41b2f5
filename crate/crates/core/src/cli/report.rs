//! Text and JSON renderings of reports and verdicts.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::formats::{coeffs_json, direction_json, int_json, rational_string};
use crate::linefactor::{CriticalSet, DirectionCritical};
use crate::perfect::{Evidence, Verdict};
use crate::{CriticalTReport, LineFactorReport, Rational};

pub fn rational_set(values: &BTreeSet<Rational>) -> String {
    let parts: Vec<String> = values.iter().map(rational_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn critical_text(report: &CriticalTReport) -> String {
    let mut out = String::from("critical t: ");
    match &report.global {
        CriticalSet::NoneForAnyT => out.push_str("{}"),
        CriticalSet::OnlyAt(t0) => out.push_str(&format!("{{{}}}", rational_string(t0))),
        CriticalSet::Finite(set) => out.push_str(&rational_set(set)),
        CriticalSet::Unresolved { known, residuals } => {
            out.push_str(&rational_set(known));
            for (v, r) in residuals {
                out.push_str(&format!(" plus the roots of {r} along {v}"));
            }
            out.push_str(" (unresolved)");
        }
        CriticalSet::AllT => out.push_str("all but finitely many t"),
    }
    out.push('\n');
    for (v, d) in &report.per_direction {
        let line = match d {
            DirectionCritical::NoCriticalT => "none".to_string(),
            DirectionCritical::AllT => "all but finitely many t".to_string(),
            DirectionCritical::Critical { witness, resultant, values, residual } => {
                let mut s = format!("fiber gcd {witness}");
                if let Some(r) = resultant {
                    s.push_str(&format!(", resultant {r}"));
                }
                s.push_str(&format!(", critical {}", rational_set(values)));
                if !residual.is_constant() {
                    s.push_str(&format!(", residual {residual}"));
                }
                s
            }
        };
        out.push_str(&format!("  direction {v}: {line}\n"));
    }
    out
}

pub fn critical_json(report: &CriticalTReport) -> Value {
    let strings = |set: &BTreeSet<Rational>| -> Vec<String> { set.iter().map(rational_string).collect() };
    let global = match &report.global {
        CriticalSet::NoneForAnyT => json!({ "kind": "none-for-any-t", "values": [] }),
        CriticalSet::OnlyAt(t0) => json!({ "kind": "only-at", "values": [rational_string(t0)] }),
        CriticalSet::Finite(set) => json!({ "kind": "finite", "values": strings(set) }),
        CriticalSet::Unresolved { known, residuals } => json!({
            "kind": "unresolved",
            "values": strings(known),
            "residuals": residuals
                .iter()
                .map(|(v, r)| json!({ "direction": direction_json(*v), "polynomial": coeffs_json(r) }))
                .collect::<Vec<_>>(),
        }),
        CriticalSet::AllT => json!({ "kind": "all-t", "values": [] }),
    };
    let directions: Vec<Value> = report
        .per_direction
        .iter()
        .map(|(v, d)| match d {
            DirectionCritical::NoCriticalT => json!({ "direction": direction_json(*v), "kind": "none" }),
            DirectionCritical::AllT => json!({ "direction": direction_json(*v), "kind": "all-t" }),
            DirectionCritical::Critical { witness, resultant, values, residual } => json!({
                "direction": direction_json(*v),
                "kind": "critical",
                "fiber_gcd": coeffs_json(witness),
                "resultant": resultant.as_ref().map(coeffs_json),
                "values": strings(values),
                "residual_degree": residual.degree().unwrap_or(0),
            }),
        })
        .collect();
    json!({ "global": global, "directions": directions })
}

pub fn factor_json(r: &LineFactorReport) -> Value {
    json!({ "direction": direction_json(r.direction), "gcd": coeffs_json(&r.gcd_normal_form) })
}

pub fn factor_text(r: &LineFactorReport) -> String {
    format!("direction {}: gcd {}", r.direction, r.gcd_normal_form)
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = v.class().label().to_string();
    if let Some(d) = v.direction() {
        out.push_str(&format!(" {d}"));
    }
    if let Verdict::Inconclusive { reason, .. } = v {
        out.push_str(&format!(" ({reason})"));
    }
    match v.evidence() {
        Evidence::NoLineFactors => out.push_str("; no line polynomial factors"),
        Evidence::LineFactors(reports) => {
            let parts: Vec<String> = reports.iter().map(factor_text).collect();
            out.push_str(&format!("; factors: {}", parts.join("; ")));
        }
        Evidence::Convex(cert) => {
            let parts: Vec<String> = cert
                .directions
                .iter()
                .map(|d| format!("{} d={}{}", d.direction, d.d, if d.has_factor { " factor" } else { "" }))
                .collect();
            out.push_str(&format!("; directions: {}", if parts.is_empty() { "none".into() } else { parts.join(", ") }));
        }
        Evidence::CriticalT { report, determinant } => {
            if let (CriticalSet::OnlyAt(t0), Some(det)) = (&report.global, determinant) {
                out.push_str(&format!("; t0 = {}, det(B - t0*I) = {}", rational_string(t0), rational_string(det)));
            } else if matches!(report.global, CriticalSet::NoneForAnyT) {
                out.push_str("; no critical t");
            }
        }
    }
    out
}

pub fn verdict_json(v: &Verdict) -> Value {
    let evidence = match v.evidence() {
        Evidence::NoLineFactors => json!({ "kind": "no-line-factors" }),
        Evidence::LineFactors(reports) => {
            json!({ "kind": "line-factors", "factors": reports.iter().map(factor_json).collect::<Vec<_>>() })
        }
        Evidence::Convex(cert) => json!({
            "kind": "convex",
            "delta": int_json(&cert.delta),
            "directions": cert.directions.iter().map(|d| json!({
                "direction": direction_json(d.direction),
                "d": d.d,
                "origin_fiber": d.origin_fiber.as_ref().map(coeffs_json),
                "has_factor": d.has_factor,
            })).collect::<Vec<_>>(),
        }),
        Evidence::CriticalT { report, determinant } => json!({
            "kind": "critical-t",
            "critical": critical_json(report),
            "determinant": determinant.as_ref().map(rational_string),
        }),
    };
    let reason = match v {
        Verdict::Inconclusive { reason, .. } => Some(reason.clone()),
        _ => None,
    };
    json!({
        "class": v.class().label(),
        "direction": v.direction().map(direction_json),
        "reason": reason,
        "evidence": evidence,
    })
}
