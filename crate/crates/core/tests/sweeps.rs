use quadsq_core::sweep::{run, Execution, Mode, Tolerances};

fn check(mode: Mode) {
    let s = run(mode, 0, 1000, Tolerances::default(), Execution::Parallel);
    for f in &s.families {
        println!(
            "{:?} {:<26} max {:.3e} (seed {}) tol {:.0e}",
            mode, f.name, f.max_residual, f.worst_seed, f.tolerance
        );
    }
    assert!(s.sampling_failures.is_empty());
    assert!(
        s.passed,
        "violations: {:?}",
        s.families.iter().filter(|f| !f.passed).collect::<Vec<_>>()
    );
}

#[test]
fn quad_sweep_1000() {
    check(Mode::Quad);
}

#[test]
fn parallelogram_sweep_1000() {
    check(Mode::Parallelogram);
}

#[test]
fn hexagon_sweep_1000() {
    check(Mode::Hexagon);
}
