//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with timing. Run with `cargo test -p xnd-core --test acceptance`
//! (optionally `-- --nocapture` for the detail lines).

use xnd_core::verify;

fn run(result: verify::CriterionResult) {
    println!("{}", result.summary_line());
    for d in &result.details {
        println!("    {d}");
    }
    assert!(result.passed, "{}", result.summary_line());
}

#[test]
fn criterion_1_golden_table() {
    run(verify::criterion_1());
}

#[test]
fn criterion_2_table_structure() {
    run(verify::criterion_2());
}

#[test]
fn criterion_3_les_euler_oracle() {
    run(verify::criterion_3());
}

#[test]
fn criterion_4_beta_set_invariance() {
    run(verify::criterion_4());
}

#[test]
fn criterion_5_brauer_line_invariants() {
    run(verify::criterion_5());
}

#[test]
fn criterion_6_partial_tilting_sweep() {
    run(verify::criterion_6());
}

#[test]
fn criterion_7_chain_map_classification() {
    run(verify::criterion_7());
}

#[test]
fn criterion_8_d_model_coherence() {
    run(verify::criterion_8());
}

#[test]
fn criterion_9_modular_gate() {
    run(verify::criterion_9());
}
