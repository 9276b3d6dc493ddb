//! Acceptance suite: one test per verification criterion, run at the full
//! stated bounds with exact (zero-tolerance) comparisons. Each test prints a
//! pass/fail line; run with `--nocapture` to see them all.

use schur0::verify::{run_check, Bounds, CheckResult};

fn run(criterion: usize, name: &str) -> CheckResult {
    let result = run_check(name, &Bounds::full()).expect("check is registered");
    println!(
        "acceptance criterion {criterion:2} ({name}): {} in {} ms — {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.elapsed_ms,
        result.detail
    );
    assert!(result.passed, "criterion {criterion} ({name}) failed: {}", result.detail);
    result
}

#[test]
fn criterion_01_dimension_formula() {
    let result = run(1, "dimension_formula");
    assert!(result.elapsed_ms < 5_000, "dimension sweep took {} ms", result.elapsed_ms);
}

#[test]
fn criterion_02_worked_example_reproduced() {
    run(2, "worked_example");
}

#[test]
fn criterion_03_newex_products() {
    run(3, "newex_example");
}

#[test]
fn criterion_04_associativity() {
    let result = run(4, "associativity");
    assert!(result.elapsed_ms < 120_000, "associativity sweep took {} ms", result.elapsed_ms);
}

#[test]
fn criterion_05_filtration_defects() {
    run(5, "filtration_defects");
}

#[test]
fn criterion_06_presentation_relations() {
    run(6, "presentation_relations");
}

#[test]
fn criterion_07_ideal_structure() {
    run(7, "ideal_structure");
}

#[test]
fn criterion_08_maintheorem_isomorphism() {
    run(8, "maintheorem_iso");
}

#[test]
fn criterion_09_rescaling_isomorphism() {
    run(9, "rescaling_iso");
}

#[test]
fn criterion_10_hecke_corner() {
    run(10, "hecke0_corner");
}

#[test]
fn criterion_11_nilhecke_graded() {
    run(11, "nilhecke_graded");
}

#[test]
fn criterion_12_nil_temperley_lieb() {
    let result = run(12, "ntl_catalan");
    assert!(result.elapsed_ms < 30_000, "NTL sweep took {} ms", result.elapsed_ms);
}
