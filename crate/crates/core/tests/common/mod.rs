#![allow(dead_code)]

pub mod oracle;

use gwalk_core::catalog::moving_min_state;
use gwalk_core::{Eigenvalue, LatticePoint, Rational, Scalar, WaveFunction};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..6, 1i64..4).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

pub fn point(dim: usize, r: i64) -> impl Strategy<Value = LatticePoint> {
    proptest::collection::vec(-r..=r, dim).prop_map(LatticePoint::new)
}

/// Random finitely supported state with up to `max_sites` sites in `[-2,2]^d`.
pub fn state(dim: usize, max_sites: usize) -> impl Strategy<Value = WaveFunction> {
    proptest::collection::vec(
        (point(dim, 2), proptest::collection::vec(scalar(), 2 * dim)),
        0..=max_sites,
    )
    .prop_map(move |entries| {
        let mut psi = WaveFunction::zero(dim).unwrap();
        for (p, amps) in entries {
            psi.set(p, amps).unwrap();
        }
        psi
    })
}

/// Superpositions of translated minimal moving-shift eigenstates.
pub fn moving_eigenstate(dim: usize, lambda: Eigenvalue) -> impl Strategy<Value = WaveFunction> {
    proptest::collection::vec((scalar(), point(dim, 2)), 1..4).prop_map(move |terms| {
        let base = moving_min_state(dim, lambda, &LatticePoint::origin(dim)).unwrap();
        let states: Vec<WaveFunction> = terms
            .iter()
            .map(|(_, v)| base.translate(v).unwrap())
            .collect();
        WaveFunction::linear_combine(terms.iter().map(|(c, _)| c).zip(&states)).unwrap()
    })
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_integer(x)).collect()
}
