use num_complex::Complex64;
use proptest::prelude::*;

use xrealign::numerics::{hermitian_eigenvalues, Tolerance};
use xrealign::states::{random_x_state, read_state, write_matrix, write_state, SamplerParams, StateInput, XState};
use xrealign::Error;

fn state() -> impl Strategy<Value = XState> {
    any::<u64>().prop_map(|seed| random_x_state(seed, &SamplerParams::default()))
}

proptest! {
    #[test]
    fn samples_are_valid(s in state()) {
        let tol = Tolerance::default();
        let spectrum = s.validate(&tol).unwrap();
        prop_assert!((s.trace() - 1.0).abs() < 1e-12);
        let dense = hermitian_eigenvalues(&s.to_matrix(), &tol).unwrap();
        for (a, b) in spectrum.eigenvalues.iter().zip(dense) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn json_round_trip_is_exact(s in state()) {
        let back = read_state(&write_state(&s)).unwrap();
        prop_assert_eq!(back, StateInput::X(s));
    }

    #[test]
    fn matrix_round_trip(s in state()) {
        let tol = Tolerance::default();
        prop_assert_eq!(XState::from_matrix(&s.to_matrix(), &tol).unwrap(), s);
        // The writer prefers the X form for X-shaped matrices.
        let text = write_matrix(&s.to_matrix(), &tol);
        prop_assert!(text.contains("\"diag\""));
        prop_assert_eq!(read_state(&text).unwrap().into_x_state(&tol).unwrap(), s);
    }
}

#[test]
fn dense_input_with_off_x_entries() {
    let tol = Tolerance::default();
    let mut m = XState::maximally_mixed().to_matrix();
    m[(0, 1)] = Complex64::new(0.01, 0.0);
    m[(1, 0)] = Complex64::new(0.01, 0.0);
    let text = write_matrix(&m, &tol);
    assert!(text.contains("\"matrix\""));
    let parsed = read_state(&text).unwrap();
    assert_eq!(parsed, StateInput::Matrix(m));
    match parsed.into_x_state(&tol) {
        Err(Error::NotXShaped { entries }) => assert_eq!(entries, vec![(0, 1), (1, 0)]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_files() {
    for text in [
        "",
        "{}",
        r#"{"diag": [0.25, 0.25, 0.25], "rho14": {"re": 0, "im": 0}, "rho23": {"re": 0, "im": 0}}"#,
        r#"{"diag": [0.25, 0.25, 0.25, 0.25], "rho14": {"re": 0}, "rho23": {"re": 0, "im": 0}}"#,
        r#"{"diag": [0.25, 0.25, 0.25, 0.25], "rho14": {"re": 0, "im": 0, "x": 1}, "rho23": {"re": 0, "im": 0}}"#,
    ] {
        assert!(matches!(read_state(text), Err(Error::Parse(_))), "{text}");
    }
}

#[test]
fn invalid_states_are_parsed_then_rejected() {
    let text = r#"{"diag": [0.35, 0.25, 0.25, 0.15], "rho14": {"re": 0.24, "im": 0}, "rho23": {"re": 0.1, "im": 0}}"#;
    let s = read_state(text).unwrap().into_x_state(&Tolerance::default()).unwrap();
    assert!(matches!(s.validate(&Tolerance::default()), Err(Error::NegativeEigenvalue { .. })));
}
