//! JSON and text renderings of measures and reports.

use std::fmt::Write as _;

use eqmeas_core::edge::RatioReports;
use eqmeas_core::vertex::ZReport;
use eqmeas_core::{
    FactoredForm, Failure, LaurentPoly, Rational, Sign, Value, VerificationReport,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value as Json};

/// Version tag carried by every top-level JSON document.
pub const SCHEMA: &str = "1";

/// An integer as a JSON number, or as a decimal string when it does not fit
/// in 64 bits.
pub fn int_json(n: &BigInt) -> Json {
    match n.to_i64() {
        Some(i) => Json::from(i),
        None => Json::String(n.to_string()),
    }
}

/// A rational as `"p/q"`, or `"p"` when integral.
pub fn rational_json(r: &Rational) -> Json {
    Json::String(r.to_string())
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+1",
        Sign::Minus => "-1",
    }
}

/// `{"unit":±1,"content":"p/q","factors":[{"form":[a,b,c],"exp":e}]}`.
pub fn factored_json(f: &FactoredForm) -> Json {
    let factors: Vec<Json> = f
        .factors()
        .map(|(form, exp)| {
            json!({
                "form": form.coeffs().iter().map(int_json).collect::<Vec<_>>(),
                "exp": exp,
            })
        })
        .collect();
    json!({
        "unit": f.unit().to_i64(),
        "content": rational_json(f.content()),
        "factors": factors,
    })
}

/// `{"axes":n,"terms":[{"exp":[i,j(,k)],"coeff":c}]}`.
pub fn laurent_json(p: &LaurentPoly) -> Json {
    let terms: Vec<Json> = p
        .terms()
        .map(|(e, c)| json!({"exp": &e[..p.axes()], "coeff": int_json(c)}))
        .collect();
    json!({"axes": p.axes(), "terms": terms})
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Factored(f) => factored_json(f),
        Value::Laurent(p) => laurent_json(p),
        Value::Error(e) => json!({"error": e.to_string()}),
    }
}

fn failure_json(f: &Failure) -> Json {
    json!({
        "partition": f.subject,
        "lhs": value_json(&f.lhs),
        "rhs": value_json(&f.rhs),
    })
}

/// `{checked, passed, failures:[{partition,lhs,rhs}], excluded:[{partition,reason}]}`.
pub fn report_json(r: &VerificationReport) -> Json {
    json!({
        "checked": r.checked,
        "passed": r.passed,
        "failures": r.failures.iter().map(failure_json).collect::<Vec<_>>(),
        "excluded": r
            .excluded
            .iter()
            .map(|(p, why)| json!({"partition": p, "reason": why}))
            .collect::<Vec<_>>(),
    })
}

/// A top-level document: `"schema"` first, then `fields` in order.
pub fn document(fields: Vec<(&str, Json)>) -> Json {
    let mut map = Map::new();
    map.insert("schema".into(), Json::from(SCHEMA));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Json::Object(map)
}

/// A report flattened into a top-level document after `head`, followed by
/// `tail`.
pub fn report_document(head: Vec<(&str, Json)>, r: &VerificationReport, tail: Vec<(&str, Json)>) -> Json {
    let mut doc = document(head);
    let map = doc.as_object_mut().expect("document is an object");
    if let Json::Object(body) = report_json(r) {
        map.extend(body);
    }
    map.extend(tail.into_iter().map(|(k, v)| (k.to_string(), v)));
    doc
}

/// Ratio sweep reports keyed `jack`, `mnop`, `equal`, `negated`.
pub fn ratio_reports_json(r: &RatioReports) -> Vec<(&'static str, Json)> {
    vec![
        ("jack", report_json(&r.jack)),
        ("mnop", report_json(&r.mnop)),
        ("equal", report_json(&r.equal)),
        ("negated", report_json(&r.negated)),
    ]
}

/// `{"order","points","sign","per_point","per_sign","calabi_yau"}`.
pub fn zreport_fields(z: &ZReport) -> Vec<(&'static str, Json)> {
    let points: Vec<Json> = z
        .points
        .iter()
        .map(|p| Json::Array(p.iter().map(rational_json).collect()))
        .collect();
    let mut per_sign = Map::new();
    for (s, matches) in &z.per_sign {
        per_sign.insert(sign_str(*s).into(), json!(matches));
    }
    let cy: Vec<Json> = z
        .calabi_yau
        .iter()
        .map(|(pi, v)| {
            json!({
                "plane_partition": pi.to_string(),
                "value": v.as_ref().map_or(Json::Null, rational_json),
            })
        })
        .collect();
    vec![
        ("order", json!(z.order)),
        ("points", Json::Array(points)),
        ("sign", json!(z.sign.map_or("none", sign_str))),
        ("per_point", json!(z.per_point)),
        ("per_sign", Json::Object(per_sign)),
        ("calabi_yau", Json::Array(cy)),
    ]
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty(doc: &Json) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    s.push('\n');
    s
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Factored(f) => f.to_string(),
        Value::Laurent(p) => p.to_string(),
        Value::Error(e) => format!("error: {e}"),
    }
}

fn show_subject(s: &str) -> &str {
    if s.is_empty() {
        "(empty)"
    } else {
        s
    }
}

/// `name: checked N, passed P, failed F` followed by one line per failure
/// and exclusion.
pub fn report_text(name: &str, r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{name}: checked {}, passed {}, failed {}",
        r.checked,
        r.passed,
        r.failures.len()
    );
    for f in &r.failures {
        let _ = writeln!(
            out,
            "  FAIL {}: lhs = {}; rhs = {}",
            show_subject(&f.subject),
            value_text(&f.lhs),
            value_text(&f.rhs)
        );
    }
    for (p, why) in &r.excluded {
        let _ = writeln!(out, "  excluded {}: {why}", show_subject(p));
    }
    out
}

/// Human-readable vertex report.
pub fn zreport_text(z: &ZReport) -> String {
    let mut out = String::new();
    let sign = z.sign.map_or("none", sign_str);
    let _ = writeln!(
        out,
        "vertex: order {}, points {}, sign {sign}, {}",
        z.order,
        z.points.len(),
        if z.passed() { "passed" } else { "FAILED" }
    );
    for (i, p) in z.points.iter().enumerate() {
        let marks: Vec<String> = z
            .per_sign
            .iter()
            .map(|(s, m)| format!("{} {}", sign_str(*s), if m[i] { "match" } else { "mismatch" }))
            .collect();
        let _ = writeln!(out, "  ({}, {}, {}): {}", p[0], p[1], p[2], marks.join(", "));
    }
    let _ = writeln!(out, "calabi-yau values at (1, 2, -3):");
    for (pi, v) in &z.calabi_yau {
        let v = v.as_ref().map_or("pole".to_string(), ToString::to_string);
        let _ = writeln!(out, "  {pi}: {v}");
    }
    out
}
