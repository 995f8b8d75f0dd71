mod common;

use common::{moving_eigenstate, point, scalar, state};
use gwalk_core::catalog::{flipflop_min_state, moving_min_state, nine_point_state};
use gwalk_core::eigen::{
    check_endpoint_structure, check_gamma_relations, check_lemma_structure,
    check_neighbor_property, eigen_residual, is_stationary_measure, ViolationKind,
};
use gwalk_core::walk::grover_coin;
use gwalk_core::{Eigenvalue, Error, LatticePoint, Scalar, ShiftKind, WaveFunction};
use proptest::prelude::*;

fn origin(d: usize) -> LatticePoint {
    LatticePoint::origin(d)
}

#[test]
fn catalog_states_have_zero_residual() {
    for lambda in Eigenvalue::ALL {
        for d in 1..=6 {
            let psi = moving_min_state(d, lambda, &origin(d)).unwrap();
            let r =
                eigen_residual(&psi, lambda, &grover_coin(d).unwrap(), ShiftKind::Moving).unwrap();
            assert!(r.is_zero(), "moving d={d} λ={lambda}");
        }
        for d in 2..=5 {
            let psi = flipflop_min_state(d, lambda, &origin(d)).unwrap();
            let r = eigen_residual(&psi, lambda, &grover_coin(d).unwrap(), ShiftKind::FlipFlop)
                .unwrap();
            assert!(r.is_zero(), "flip-flop d={d} λ={lambda}");
        }
    }
}

#[test]
fn wrong_eigenvalue_or_shift_is_rejected() {
    let psi = moving_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
    let c = grover_coin(2).unwrap();
    assert!(
        !eigen_residual(&psi, Eigenvalue::Minus, &c, ShiftKind::Moving)
            .unwrap()
            .is_zero()
    );
    assert!(
        !eigen_residual(&psi, Eigenvalue::Plus, &c, ShiftKind::FlipFlop)
            .unwrap()
            .is_zero()
    );
}

#[test]
fn gamma_relations_on_catalog() {
    let psi = moving_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
    assert!(check_gamma_relations(&psi, Eigenvalue::Plus, ShiftKind::Moving).passed());
    let ff = flipflop_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
    assert!(check_gamma_relations(&ff, Eigenvalue::Plus, ShiftKind::FlipFlop).passed());
    for p in ff.points() {
        assert!(ff.gamma(p).unwrap().is_zero());
    }
    let delta = WaveFunction::from_integer_entries(1, [([0], vec![1, 0])]).unwrap();
    assert!(
        !check_gamma_relations(&delta, Eigenvalue::Plus, ShiftKind::Moving)
            .violations
            .is_empty()
    );
}

#[test]
fn endpoint_structure_moving_square() {
    for lambda in Eigenvalue::ALL {
        let psi = moving_min_state(2, lambda, &origin(2)).unwrap();
        let report =
            check_endpoint_structure(&psi, lambda, ShiftKind::Moving, 0, &origin(2)).unwrap();
        assert!(report.passed(), "{report:?}");
        let ends = &report.endpoints[0];
        assert_eq!(ends.lower, origin(2));
        assert_eq!(ends.upper, LatticePoint::from([1, 0]));
        assert_eq!(ends.alpha, Scalar::one());
        assert_eq!(ends.beta, lambda.to_scalar());
    }
}

#[test]
fn endpoint_structure_flipflop_square() {
    let psi = flipflop_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
    for axis in 0..2 {
        let report = check_endpoint_structure(
            &psi,
            Eigenvalue::Plus,
            ShiftKind::FlipFlop,
            axis,
            &origin(2),
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn endpoint_structure_nine_points() {
    let psi = nine_point_state();
    let report =
        check_endpoint_structure(&psi, Eigenvalue::Plus, ShiftKind::Moving, 0, &origin(2)).unwrap();
    assert!(report.passed());
    let ends = &report.endpoints[0];
    assert_eq!(ends.lower, LatticePoint::from([-1, 0]));
    assert_eq!(ends.upper, LatticePoint::from([1, 0]));
    assert_eq!(ends.alpha, Scalar::from_integer(2));
    assert_eq!(ends.beta, Scalar::from_integer(2));
}

#[test]
fn truncated_state_fails() {
    let mut psi = moving_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
    psi.set(LatticePoint::from([1, 1]), common::ints(&[0, 0, 0, 0]))
        .unwrap();
    assert_eq!(
        check_endpoint_structure(&psi, Eigenvalue::Plus, ShiftKind::Moving, 0, &origin(2)),
        Err(Error::NotEigenstate)
    );
    assert!(!check_gamma_relations(&psi, Eigenvalue::Plus, ShiftKind::Moving).passed());
}

#[test]
fn vanishing_pair_is_an_error() {
    let psi = flipflop_min_state(3, Eigenvalue::Plus, &origin(3)).unwrap();
    assert!(matches!(
        check_endpoint_structure(&psi, Eigenvalue::Plus, ShiftKind::FlipFlop, 2, &origin(3)),
        Err(Error::PairVanishes { axis: 2, .. })
    ));
}

#[test]
fn broken_state_has_isolated_pair() {
    let mut psi = nine_point_state();
    psi.set(LatticePoint::from([0, 0]), common::ints(&[0, 0, 0, 0]))
        .unwrap();
    psi.set(LatticePoint::from([1, 0]), common::ints(&[0, 0, 1, 1]))
        .unwrap();
    psi.set(LatticePoint::from([-1, 0]), common::ints(&[1, 1, 1, 1]))
        .unwrap();
    let report = check_neighbor_property(&psi);
    assert!(report
        .violations
        .iter()
        .any(|v| v.kind == ViolationKind::IsolatedPair));
}

#[test]
fn lemma_structure_on_every_catalog_state() {
    for lambda in Eigenvalue::ALL {
        for d in 1..=5 {
            let psi = moving_min_state(d, lambda, &origin(d)).unwrap();
            let r = check_lemma_structure(&psi, lambda, ShiftKind::Moving).unwrap();
            assert!(r.passed(), "moving d={d}: {:?}", r.violations);
            assert_eq!(r.endpoints.len(), d << (d - 1));
        }
        for d in 2..=5 {
            let psi = flipflop_min_state(d, lambda, &origin(d)).unwrap();
            let r = check_lemma_structure(&psi, lambda, ShiftKind::FlipFlop).unwrap();
            assert!(r.passed(), "flip-flop d={d}: {:?}", r.violations);
        }
    }
    let r =
        check_lemma_structure(&nine_point_state(), Eigenvalue::Plus, ShiftKind::Moving).unwrap();
    assert!(r.passed());
}

#[test]
fn stationarity() {
    for lambda in Eigenvalue::ALL {
        let psi = moving_min_state(3, lambda, &origin(3)).unwrap();
        assert!(
            is_stationary_measure(&psi, &grover_coin(3).unwrap(), ShiftKind::Moving, 10).unwrap()
        );
        let ff = flipflop_min_state(3, lambda, &origin(3)).unwrap();
        assert!(
            is_stationary_measure(&ff, &grover_coin(3).unwrap(), ShiftKind::FlipFlop, 10).unwrap()
        );
    }
    let delta = WaveFunction::from_integer_entries(1, [([0], vec![1, 0])]).unwrap();
    assert!(
        !is_stationary_measure(&delta, &grover_coin(1).unwrap(), ShiftKind::Moving, 1).unwrap()
    );
}

fn perturbed(lambda: Eigenvalue) -> impl Strategy<Value = (WaveFunction, bool)> {
    (
        prop_oneof![moving_eigenstate(1, lambda), moving_eigenstate(2, lambda)],
        proptest::option::of((point(2, 3), 0usize..4, scalar())),
    )
        .prop_map(|(psi, kick)| match kick {
            Some((p, j, s)) => {
                let d = psi.dim();
                let p = LatticePoint::new(p.coords()[..d].to_vec());
                let mut amps: Vec<Scalar> = (0..2 * d).map(|c| psi.amplitude(&p, c)).collect();
                amps[j % (2 * d)] = &amps[j % (2 * d)] + &s;
                let mut out = psi.clone();
                out.set(p, amps).unwrap();
                (out, true)
            }
            None => (psi, false),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn residual_and_gamma_relations_agree_moving((psi, _) in perturbed(Eigenvalue::Plus)) {
        let c = grover_coin(psi.dim()).unwrap();
        let zero = eigen_residual(&psi, Eigenvalue::Plus, &c, ShiftKind::Moving).unwrap().is_zero();
        prop_assert_eq!(zero, check_gamma_relations(&psi, Eigenvalue::Plus, ShiftKind::Moving).passed());
    }

    #[test]
    fn residual_and_gamma_relations_agree_minus((psi, _) in perturbed(Eigenvalue::Minus)) {
        let c = grover_coin(psi.dim()).unwrap();
        let zero = eigen_residual(&psi, Eigenvalue::Minus, &c, ShiftKind::Moving).unwrap().is_zero();
        prop_assert_eq!(zero, check_gamma_relations(&psi, Eigenvalue::Minus, ShiftKind::Moving).passed());
    }

    #[test]
    fn residual_and_gamma_relations_agree_random(psi in state(2, 4), lambda in prop_oneof![Just(Eigenvalue::Plus), Just(Eigenvalue::Minus)]) {
        let c = grover_coin(2).unwrap();
        for shift in ShiftKind::ALL {
            let zero = eigen_residual(&psi, lambda, &c, shift).unwrap().is_zero();
            prop_assert_eq!(zero, check_gamma_relations(&psi, lambda, shift).passed());
        }
    }

    #[test]
    fn eigenstates_have_stationary_measures(psi in moving_eigenstate(2, Eigenvalue::Minus)) {
        prop_assume!(!psi.is_zero());
        prop_assert!(is_stationary_measure(&psi, &grover_coin(2).unwrap(), ShiftKind::Moving, 6).unwrap());
    }

    #[test]
    fn eigenstates_satisfy_neighbor_property(psi in moving_eigenstate(2, Eigenvalue::Plus)) {
        prop_assert!(check_neighbor_property(&psi).passed());
    }

    #[test]
    fn plus_one_space_closed_under_translation_and_scaling(v in point(2, 5), c in scalar()) {
        let psi = moving_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap();
        let moved = psi.translate(&v).unwrap().scale(&c);
        let coin = grover_coin(2).unwrap();
        prop_assert!(eigen_residual(&moved, Eigenvalue::Plus, &coin, ShiftKind::Moving).unwrap().is_zero());
        let ff = flipflop_min_state(2, Eigenvalue::Plus, &origin(2)).unwrap().translate(&v).unwrap().scale(&c);
        prop_assert!(eigen_residual(&ff, Eigenvalue::Plus, &coin, ShiftKind::FlipFlop).unwrap().is_zero());
    }

    #[test]
    fn minus_one_translates_reverified(v in point(2, 5)) {
        let coin = grover_coin(2).unwrap();
        for shift in ShiftKind::ALL {
            let psi = match shift {
                ShiftKind::Moving => moving_min_state(2, Eigenvalue::Minus, &origin(2)).unwrap(),
                ShiftKind::FlipFlop => flipflop_min_state(2, Eigenvalue::Minus, &origin(2)).unwrap(),
            };
            let moved = psi.translate(&v).unwrap();
            prop_assert!(eigen_residual(&moved, Eigenvalue::Minus, &coin, shift).unwrap().is_zero());
        }
    }
}
