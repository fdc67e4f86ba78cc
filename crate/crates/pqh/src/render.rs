//! Human-readable renderings. Every line is deterministic.

use std::fmt::Write;

use pqh_core::classify::ClassificationReport;
use pqh_core::matrix::Matrix;
use pqh_core::uft::UftForm;
use pqh_core::{Operator, Rational, SignatureTriple, Subspace};

use crate::dto::DecompositionDto;

pub fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn operator(a: &Operator) -> String {
    let c = a.coords();
    format!("({}, {}, {})", c[0], c[1], c[2])
}

pub fn signature(s: &SignatureTriple) -> String {
    format!("({}, {}, {})", s.p, s.s, s.q)
}

fn list(out: &mut String, indent: &str, label: &str, rows: &[Vec<Rational>]) {
    if rows.is_empty() {
        let _ = writeln!(out, "{indent}{label}: none");
        return;
    }
    let _ = writeln!(out, "{indent}{label}:");
    for r in rows {
        let _ = writeln!(out, "{indent}  {}", vector(r));
    }
}

pub fn subspace(out: &mut String, indent: &str, label: &str, u: &Subspace) {
    list(out, indent, label, &u.vectors());
}

pub fn matrix(out: &mut String, indent: &str, label: &str, m: &Matrix) {
    list(out, indent, label, &m.to_rows());
}

pub fn uft(out: &mut String, indent: &str, u: &UftForm) {
    matrix(out, indent, "h basis (columns h1', h2')", u.h_basis.matrix());
    subspace(out, indent, "F", &u.f);
    list(out, indent, "T on the basis of F", &u.t.to_cols());
}

pub fn report(out: &mut String, indent: &str, r: &ClassificationReport) {
    let f = &r.flags;
    let _ = writeln!(out, "{indent}dim: {}", r.dim);
    let _ = writeln!(out, "{indent}signature: {}", signature(&r.signature));
    let flags = [
        ("para_quaternionic", f.para_quaternionic),
        ("pure", f.pure),
        ("complex", f.complex),
        ("weakly_para_complex", f.weakly_para_complex),
        ("para_complex", f.para_complex),
        ("real", f.real),
        ("hermitian", f.hermitian),
        ("totally_complex", f.totally_complex),
        ("totally_para_complex", f.totally_para_complex),
        ("totally_real", f.totally_real),
    ];
    let mut set: Vec<&str> = flags.iter().filter(|(_, v)| *v).map(|(n, _)| *n).collect();
    if f.nilpotent.is_some() {
        set.push("nilpotent");
    }
    let _ = writeln!(out, "{indent}flags: {}", if set.is_empty() { "none".to_string() } else { set.join(" ") });
    for (name, value) in flags {
        let _ = writeln!(out, "{indent}{name}: {value}");
    }
    let _ = match f.nilpotent {
        Some(d) => writeln!(out, "{indent}nilpotent: degree {d}"),
        None => writeln!(out, "{indent}nilpotent: false"),
    };
    let w = &r.witnesses;
    for (name, a) in [
        ("complex", &w.complex),
        ("weakly_para_complex", &w.weakly_para_complex),
        ("para_complex", &w.para_complex),
        ("nilpotent", &w.nilpotent),
    ] {
        let shown = a.as_ref().map_or_else(|| "none".to_string(), operator);
        let _ = writeln!(out, "{indent}witness {name}: {shown}");
    }
    let stab: Vec<String> = r.stabilizer.iter().map(operator).collect();
    let _ = writeln!(out, "{indent}stabilizer: [{}]", stab.join(", "));
    subspace(out, indent, "u0", &r.u0);
    match &r.uft {
        Some(u) => {
            let _ = writeln!(out, "{indent}uft:");
            uft(out, &format!("{indent}  "), u);
        }
        None => {
            let _ = writeln!(out, "{indent}uft: none");
        }
    }
}

pub fn report_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    report(&mut out, "", r);
    out
}

pub fn decomposition_text(d: &DecompositionDto) -> Result<String, crate::dto::DtoError> {
    let mut out = String::new();
    let _ = writeln!(out, "mode: {}", d.mode);
    let _ = writeln!(out, "addends: {}", d.addends.len());
    for (i, a) in d.addends.iter().enumerate() {
        let _ = writeln!(out, "addend {}: {}", i + 1, a.kind);
        if let Some(h) = &a.direction {
            let _ = writeln!(out, "  direction: [{}]", h.join(", "));
        }
        if let Some(p) = &a.factor {
            let _ = writeln!(out, "  factor: {p}");
        }
        if let Some(w) = &a.witness {
            let _ = writeln!(out, "  witness: ({})", w.join(", "));
        }
        subspace(&mut out, "  ", "basis", &a.subspace.to_subspace()?);
        if let Some(u) = &a.uft {
            let _ = writeln!(out, "  uft:");
            uft(&mut out, "    ", &u.to_uft()?);
        }
        let _ = writeln!(out, "  report:");
        report(&mut out, "    ", &a.report.to_report()?);
    }
    Ok(out)
}
