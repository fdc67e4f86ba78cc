mod common;

#[test]
fn every_command_matches_its_golden_file() {
    let failures = common::check_goldens();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
