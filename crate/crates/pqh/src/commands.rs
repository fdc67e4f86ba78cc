use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use pqh_core::classify::{check_nilpotent, classify, ClassificationReport, generic_decompose, oracle_check, AddendKind};
use pqh_core::gen::{generate, Kind};
use pqh_core::matrix::Matrix;
use pqh_core::model::standardize;
use pqh_core::subspace::{decomposable, gram, maximal_pq, signature_of};
use pqh_core::uft::{decompose_form1, decompose_form2, find_transversal_direction, to_uft};
use pqh_core::{AdmissibleBasis, ModelSpace, ParaQuaternion, Subspace};

use crate::dto::{
    operator, row, rows, AddendDto, DecompositionDto, OracleDto, ProductDto, ReportDto, SignatureDto,
    StandardizationDto, SubspaceDto, UftDto, UftResultDto,
};
use crate::error::{CliError, EXIT_OK, EXIT_ORACLE, EXIT_PARSE};
use crate::instance::{parse_instance, Entry, Instance, InstanceFile};
use crate::render;

/// Everything a command produces; `main` prints it and exits with `code`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Parser)]
#[command(name = "pqh", version, about = "Classify subspaces of para-quaternionic Hermitian vector spaces over ℚ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Generic,
    Form1,
    Form2,
    Nilpotent,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flags, witnesses, stabilizer, signature and presentation of the subspace.
    Classify {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Split the subspace into addends and classify each one.
    Decompose {
        path: String,
        #[arg(long, value_enum, default_value = "generic")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Signature (p, s, q) of the metric restricted to the subspace.
    Signature {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// The subspace as a graph {h1'⊗f + h2'⊗Tf}, or why there is none.
    Uft {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Hermitian product of two input rows, in the admissible basis of the instance's h_basis.
    Product {
        path: String,
        /// Index of X among the input rows.
        #[arg(long)]
        x: usize,
        /// Index of Y among the input rows.
        #[arg(long)]
        y: usize,
        /// Use the standard basis (I, J, K) even if the instance has an h_basis.
        #[arg(long)]
        standard: bool,
        #[arg(long)]
        json: bool,
    },
    /// Bring a para-hypercomplex triple {"i", "j", "k"} to the standard form.
    Standardize {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Re-verify the classification from the raw definitions; exit 4 on disagreement.
    Oracle {
        path: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random instance of the requested kind.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// n, with dim E = 2n.
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long, default_value = "random", value_parser = parse_kind)]
        kind: Kind,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown kind `{s}`; expected one of {}", names.join(", "))
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("DTOs serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code: EXIT_PARSE }
            } else {
                Output { stdout: text, stderr: String::new(), code: EXIT_OK }
            }
        }
    }
}

pub fn execute(command: Command) -> Output {
    let mut warnings = Vec::new();
    let result = dispatch(command, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("{w}\n")).collect();
    match result {
        Ok((stdout, code)) => Output { stdout, stderr, code },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            Output { stdout: String::new(), stderr, code: e.code }
        }
    }
}

fn load(path: &str, warnings: &mut Vec<String>) -> Result<Instance, CliError> {
    let inst = parse_instance(path)?;
    warnings.extend(inst.warnings.iter().cloned());
    Ok(inst)
}

fn dispatch(command: Command, warnings: &mut Vec<String>) -> Result<(String, i32), CliError> {
    match command {
        Command::Classify { path, json: as_json } => {
            let inst = load(&path, warnings)?;
            let report = classify(&inst.space, &inst.subspace);
            Ok((if as_json { json(&ReportDto::from(&report)) } else { render::report_text(&report) }, EXIT_OK))
        }
        Command::Decompose { path, mode, json: as_json } => {
            let inst = load(&path, warnings)?;
            let d = decompose(&inst, mode)?;
            Ok((if as_json { json(&d) } else { render::decomposition_text(&d)? }, EXIT_OK))
        }
        Command::Signature { path, json: as_json } => {
            let inst = load(&path, warnings)?;
            let s = signature_of(&gram(&inst.space, &inst.subspace));
            let text = if as_json {
                json(&SignatureDto { p: s.p, s: s.s, q: s.q })
            } else {
                format!("{}\n", render::signature(&s))
            };
            Ok((text, EXIT_OK))
        }
        Command::Uft { path, json: as_json } => {
            let inst = load(&path, warnings)?;
            let result = uft(&inst);
            let text = if as_json {
                json(&result)
            } else {
                match &result {
                    UftResultDto::Found(u) => {
                        let mut out = String::new();
                        render::uft(&mut out, "", &u.to_uft()?);
                        out
                    }
                    UftResultDto::Missing { reason } => format!("no presentation: {reason}\n"),
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Product { path, x, y, standard, json: as_json } => {
            let inst = load(&path, warnings)?;
            let (p, value) = product(&inst, x, y, standard)?;
            let text = if as_json {
                json(&p)
            } else {
                let [i, j, k] = &p.basis;
                format!(
                    "basis: I = ({}), J = ({}), K = ({})\nX·Y = {value}\nN(Im(X·Y)) = {}\n",
                    i.join(", "),
                    j.join(", "),
                    k.join(", "),
                    p.norm_im
                )
            };
            Ok((text, EXIT_OK))
        }
        Command::Standardize { path, json: as_json } => {
            let s = standardize_file(&path)?;
            let text = if as_json {
                json(&s)
            } else {
                let mut out = format!("m: {}\n", s.m);
                let basis = crate::dto::parse_rows(s.basis.first().map_or(0, Vec::len), &s.basis)?;
                render::matrix(&mut out, "", "basis (columns h1⊗e1, …, h2⊗em)", &basis);
                out
            };
            Ok((text, EXIT_OK))
        }
        Command::Oracle { path, seed, samples, json: as_json } => {
            let inst = load(&path, warnings)?;
            let report = classify(&inst.space, &inst.subspace);
            Ok(oracle(&inst, &report, seed, samples, as_json))
        }
        Command::Gen { seed, dim, kind } => {
            if dim == 0 {
                return Err(CliError::parse("--dim must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = generate(&mut rng, dim, kind);
            let file = InstanceFile::new(&inst.space, &inst.subspace.vectors(), Some(&inst.h_basis));
            Ok((file.to_json(), EXIT_OK))
        }
    }
}

/// Cross-checks `report` against `inst`; exit code 4 when any check fails.
pub fn oracle(inst: &Instance, report: &ClassificationReport, seed: u64, samples: usize, as_json: bool) -> (String, i32) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let o = oracle_check(&inst.space, report, &inst.subspace, &mut rng, samples);
    let dto = OracleDto { seed, samples, confirmations: o.confirmations.len(), violations: o.violations };
    let code = if dto.violations.is_empty() { EXIT_OK } else { EXIT_ORACLE };
    let text = if as_json {
        json(&dto)
    } else {
        let mut out = format!("confirmations: {}\nviolations: {}\n", dto.confirmations, dto.violations.len());
        for v in &dto.violations {
            let _ = writeln!(out, "violation: {v}");
        }
        out
    };
    (text, code)
}

fn addend(sp: &ModelSpace, kind: &str, u: &Subspace) -> AddendDto {
    AddendDto {
        kind: kind.into(),
        direction: None,
        factor: None,
        witness: None,
        subspace: SubspaceDto::new(u),
        uft: None,
        report: ReportDto::from(&classify(sp, u)),
    }
}

fn kind_name(k: AddendKind) -> &'static str {
    match k {
        AddendKind::ParaQuaternionic => "para-quaternionic",
        AddendKind::Complex => "complex",
        AddendKind::WeaklyParaComplex => "weakly-para-complex",
        AddendKind::Residual => "residual",
        AddendKind::Real => "real",
    }
}

pub fn decompose(inst: &Instance, mode: Mode) -> Result<DecompositionDto, CliError> {
    let sp = &inst.space;
    let u = &inst.subspace;
    let mut addends = Vec::new();
    let mode_name = match mode {
        Mode::Generic => {
            for a in generic_decompose(sp, u).addends {
                let mut d = addend(sp, kind_name(a.kind), &a.subspace);
                d.witness = a.witness.as_ref().map(operator);
                d.factor = a.factor.as_ref().map(ToString::to_string);
                addends.push(d);
            }
            "generic"
        }
        Mode::Form1 => {
            let f = decompose_form1(sp, u);
            let dec = f.decomposable_part(sp);
            if !dec.is_zero() {
                let mut d = addend(sp, "decomposable", &dec);
                d.direction = Some(row(&f.h));
                addends.push(d);
            }
            let g = f.uft.to_subspace();
            if !g.is_zero() {
                let mut d = addend(sp, "graph", &g);
                d.uft = Some(UftDto::new(&f.uft));
                addends.push(d);
            }
            "form1"
        }
        Mode::Form2 => {
            let f = decompose_form2(sp, u);
            for dir in &f.decomposables {
                let mut d = addend(sp, "decomposable", &decomposable(sp, &dir.h, &dir.fiber));
                d.direction = Some(row(&dir.h));
                addends.push(d);
            }
            let g = f.uft.to_subspace();
            if !g.is_zero() {
                let mut d = addend(sp, "graph", &g);
                d.uft = Some(UftDto::new(&f.uft));
                addends.push(d);
            }
            "form2"
        }
        Mode::Nilpotent => {
            let report = classify(sp, u);
            let a = report.witnesses.nilpotent.ok_or_else(|| CliError::input("no nonzero nilpotent operator leaves U invariant"))?;
            let c = check_nilpotent(sp, u, &a)?;
            if !c.u0.is_zero() {
                addends.push(addend(sp, "para-quaternionic", &c.u0));
            }
            if !c.e1.is_zero() {
                let mut d = addend(sp, "decomposable", &decomposable(sp, &c.h, &c.e1));
                d.direction = Some(row(&c.h));
                d.witness = Some(operator(&a));
                addends.push(d);
            }
            if !c.rest.is_zero() {
                let mut d = addend(sp, if c.rest_real { "real" } else { "remainder" }, &c.rest);
                d.uft = c.rest_uft.as_ref().map(UftDto::new);
                addends.push(d);
            }
            "nilpotent"
        }
    };
    Ok(DecompositionDto { mode: mode_name.into(), addends })
}

pub fn uft(inst: &Instance) -> UftResultDto {
    let u = &inst.subspace;
    if let Some(s) = &inst.h_basis {
        if let Ok(form) = to_uft(u, s) {
            return UftResultDto::Found(UftDto::new(&form));
        }
    }
    if let Some((_, basis)) = find_transversal_direction(&inst.space, u) {
        let form = to_uft(u, &basis).expect("transversal direction gives a presentation");
        return UftResultDto::Found(UftDto::new(&form));
    }
    let u0 = maximal_pq(u);
    let reason = if !u0.is_zero() {
        format!("U contains the para-quaternionic subspace H ⊗ E₀ of dimension {}, which meets every h ⊗ E", u0.dim())
    } else {
        "U contains decomposable vectors h ⊗ e for every direction h".to_string()
    };
    UftResultDto::Missing { reason }
}

pub fn product(inst: &Instance, x: usize, y: usize, standard: bool) -> Result<(ProductDto, ParaQuaternion), CliError> {
    let count = inst.rows.len();
    for i in [x, y] {
        if i >= count {
            return Err(CliError::parse(format!("row index {i} out of range: the instance has {count} rows")));
        }
    }
    let basis = match (&inst.h_basis, standard) {
        (Some(s), false) => s.admissible_basis(),
        _ => AdmissibleBasis::standard(),
    };
    let v = inst.space.hermitian_product(&inst.rows[x], &inst.rows[y], &basis);
    let dto = ProductDto {
        x,
        y,
        basis: [operator(&basis.i), operator(&basis.j), operator(&basis.k)],
        value: row(&[v.q0.clone(), v.q1.clone(), v.q2.clone(), v.q3.clone()]),
        norm_im: v.imaginary_part().norm().to_string(),
    };
    Ok((dto, v))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleFile {
    i: Vec<Vec<Entry>>,
    j: Vec<Vec<Entry>>,
    k: Vec<Vec<Entry>>,
}

fn square(name: &str, entries: Vec<Vec<Entry>>) -> Result<Matrix, CliError> {
    let n = entries.len();
    if entries.iter().any(|r| r.len() != n) {
        return Err(CliError::parse(format!("{name} must be a square matrix")));
    }
    let data: Vec<Vec<_>> = entries.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect();
    Ok(Matrix::from_rows(n, &data))
}

pub fn standardize_file(path: &str) -> Result<StandardizationDto, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))?;
    let raw: TripleFile = serde_json::from_str(&text).map_err(|e| CliError::parse(format!("malformed triple: {e}")))?;
    let (i, j, k) = (square("i", raw.i)?, square("j", raw.j)?, square("k", raw.k)?);
    let s = standardize(&i, &j, &k)?;
    Ok(StandardizationDto { m: s.m, basis: rows(&s.basis) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_instance_str;

    const ROTATION: &str =
        r#"{"n": 1, "omega_E": [["0","1"],["-1","0"]], "vectors": [["1","0","0","1"],["0","1","-1","0"]]}"#;

    #[test]
    fn oracle_exit_codes() {
        let inst = parse_instance_str(ROTATION).unwrap();
        let report = classify(&inst.space, &inst.subspace);
        assert_eq!(oracle(&inst, &report, 0, 4, false).1, EXIT_OK);
        let mut forged = report.clone();
        forged.flags.real = true;
        let (text, code) = oracle(&inst, &forged, 0, 4, false);
        assert_eq!(code, EXIT_ORACLE);
        assert!(text.contains("violation: "));
    }

    #[test]
    fn form1_of_a_para_quaternionic_line() {
        let text = r#"{"n": 1, "omega_E": [["0","1"],["-1","0"]], "vectors": [["1","0","0","0"],["0","0","1","0"]]}"#;
        let inst = parse_instance_str(text).unwrap();
        let d = decompose(&inst, Mode::Form1).unwrap();
        assert_eq!(d.addends.len(), 2);
        assert_eq!(d.addends[0].kind, "decomposable");
        assert_eq!(d.addends[0].direction.as_deref(), Some(&["1".to_string(), "0".to_string()][..]));
        assert_eq!(d.addends[0].subspace.basis, vec![vec!["1", "0", "0", "0"]]);
        assert_eq!(d.addends[1].kind, "graph");
        assert_eq!(d.addends[1].report.dim, 1);
    }

    #[test]
    fn gen_then_classify_is_complex() {
        for seed in 0..100u64 {
            let (seed, dim) = (seed.to_string(), (1 + seed % 3).to_string());
            let out = run(["pqh", "gen", "--seed", &seed, "--dim", &dim, "--kind", "complex"]);
            assert_eq!(out.code, 0);
            let inst = parse_instance_str(&out.stdout).unwrap();
            assert!(classify(&inst.space, &inst.subspace).flags.complex, "seed {seed}");
        }
    }
}
