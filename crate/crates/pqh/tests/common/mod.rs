//! Golden cases shared by the golden test and the acceptance target.
//!
//! Set `PQH_UPDATE_GOLDEN=1` to rewrite the expected files.

#![allow(dead_code)]

use std::path::PathBuf;

use pqh::Output;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn data(name: &str) -> String {
    manifest_dir().join("tests/data").join(name).to_string_lossy().into_owned()
}

/// `(golden name, arguments)`. `@file` expands to a fixture path.
pub const CASES: &[(&str, &[&str])] = &[
    ("classify_totally_real_line", &["classify", "@totally_real_line.json"]),
    ("classify_pq_line", &["classify", "@pq_line.json"]),
    ("classify_pq_line_json", &["classify", "@pq_line.json", "--json"]),
    ("classify_complex_rotation", &["classify", "@complex_rotation.json"]),
    ("classify_complex_rotation_json", &["classify", "@complex_rotation.json", "--json"]),
    ("classify_decomposable", &["classify", "@decomposable.json"]),
    ("classify_real_plane", &["classify", "@real_plane.json"]),
    ("classify_totally_real_plane", &["classify", "@totally_real_plane.json"]),
    ("classify_para_diagonal", &["classify", "@para_diagonal.json"]),
    ("classify_para_diagonal_json", &["classify", "@para_diagonal.json", "--json"]),
    ("classify_nilpotent_pair", &["classify", "@nilpotent_pair.json"]),
    ("classify_dependent_rows", &["classify", "@dependent_rows.json"]),
    ("classify_zero_omega", &["classify", "@zero_omega.json"]),
    ("classify_decimal", &["classify", "@decimal.json"]),
    ("classify_missing_file", &["classify", "@no_such_file.json"]),
    ("decompose_generic_complex_rotation", &["decompose", "@complex_rotation.json", "--mode", "generic"]),
    ("decompose_generic_real_plane", &["decompose", "@real_plane.json"]),
    ("decompose_generic_para_diagonal_json", &["decompose", "@para_diagonal.json", "--json"]),
    ("decompose_generic_pq_line", &["decompose", "@pq_line.json", "--mode", "generic"]),
    ("decompose_form1_pq_line", &["decompose", "@pq_line.json", "--mode", "form1"]),
    ("decompose_form1_real_plane", &["decompose", "@real_plane.json", "--mode", "form1"]),
    ("decompose_form2_pq_line", &["decompose", "@pq_line.json", "--mode", "form2"]),
    ("decompose_form2_para_diagonal", &["decompose", "@para_diagonal.json", "--mode", "form2"]),
    ("decompose_nilpotent_pair", &["decompose", "@nilpotent_pair.json", "--mode", "nilpotent"]),
    ("decompose_nilpotent_pair_json", &["decompose", "@nilpotent_pair.json", "--mode", "nilpotent", "--json"]),
    ("decompose_nilpotent_without_witness", &["decompose", "@complex_rotation.json", "--mode", "nilpotent"]),
    ("signature_pq_line", &["signature", "@pq_line.json"]),
    ("signature_totally_real_line", &["signature", "@totally_real_line.json"]),
    ("signature_para_diagonal_json", &["signature", "@para_diagonal.json", "--json"]),
    ("uft_complex_rotation", &["uft", "@complex_rotation.json"]),
    ("uft_para_diagonal", &["uft", "@para_diagonal.json"]),
    ("uft_pq_line", &["uft", "@pq_line.json"]),
    ("uft_real_plane_json", &["uft", "@real_plane.json", "--json"]),
    ("uft_pq_line_json", &["uft", "@pq_line.json", "--json"]),
    ("product_real_plane", &["product", "@real_plane.json", "--x", "0", "--y", "1"]),
    ("product_para_diagonal", &["product", "@para_diagonal.json", "--x", "0", "--y", "1"]),
    ("product_para_diagonal_standard", &["product", "@para_diagonal.json", "--x", "0", "--y", "1", "--standard"]),
    ("product_complex_rotation_json", &["product", "@complex_rotation.json", "--x", "1", "--y", "0", "--json"]),
    ("product_index_out_of_range", &["product", "@complex_rotation.json", "--x", "0", "--y", "5"]),
    ("standardize_triple", &["standardize", "@triple.json"]),
    ("standardize_triple_json", &["standardize", "@triple.json", "--json"]),
    ("standardize_bad_triple", &["standardize", "@bad_triple.json"]),
    ("oracle_complex_rotation", &["oracle", "@complex_rotation.json", "--seed", "7", "--samples", "8"]),
    ("oracle_pq_line_json", &["oracle", "@pq_line.json", "--seed", "1", "--samples", "4", "--json"]),
    ("oracle_nilpotent_pair", &["oracle", "@nilpotent_pair.json"]),
    ("gen_para_quaternionic", &["gen", "--seed", "5", "--dim", "2", "--kind", "para-quaternionic"]),
    ("gen_complex", &["gen", "--seed", "5", "--dim", "2", "--kind", "complex"]),
    ("gen_para_complex", &["gen", "--seed", "5", "--dim", "2", "--kind", "para-complex"]),
    ("gen_weakly_para_complex", &["gen", "--seed", "5", "--dim", "2", "--kind", "weakly-para-complex"]),
    ("gen_nilpotent", &["gen", "--seed", "5", "--dim", "2", "--kind", "nilpotent"]),
    ("gen_real", &["gen", "--seed", "5", "--dim", "2", "--kind", "real"]),
    ("gen_totally_real", &["gen", "--seed", "5", "--dim", "2", "--kind", "totally-real"]),
    ("gen_totally_complex", &["gen", "--seed", "5", "--dim", "1", "--kind", "totally-complex"]),
    ("gen_totally_para_complex", &["gen", "--seed", "5", "--dim", "1", "--kind", "totally-para-complex"]),
    ("gen_decomposable", &["gen", "--seed", "5", "--dim", "2", "--kind", "decomposable"]),
    ("gen_random", &["gen", "--seed", "5", "--dim", "2", "--kind", "random"]),
    ("gen_zero_dim", &["gen", "--dim", "0"]),
    ("gen_unknown_kind", &["gen", "--kind", "octonionic"]),
];

pub fn run_case(args: &[&str]) -> Output {
    let mut argv = vec!["pqh".to_string()];
    argv.extend(args.iter().map(|a| match a.strip_prefix('@') {
        Some(file) => data(file),
        None => a.to_string(),
    }));
    let mut out = pqh::run(argv);
    // fixture paths are machine-specific
    let dir = manifest_dir().join("tests/data").to_string_lossy().into_owned();
    out.stderr = out.stderr.replace(&dir, "<data>");
    out
}

pub fn transcript(out: &Output) -> String {
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", out.code, out.stdout, out.stderr)
}

fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.txt"))
}

/// Runs every case twice and compares against its golden file. Returns one message per mismatch.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("PQH_UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let first = transcript(&run_case(args));
        let second = transcript(&run_case(args));
        if first != second {
            failures.push(format!("{name}: output differs between identical runs"));
            continue;
        }
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &first).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(_) => failures.push(format!("{name}: output differs from {}", path.display())),
            Err(e) => failures.push(format!("{name}: cannot read {}: {e}", path.display())),
        }
    }
    failures
}
