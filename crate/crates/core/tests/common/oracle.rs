//! Dense reference for the finite eigen-system: every equation is written
//! out by direct substitution into the componentwise Grover eigen-system,
//! and solved with plain Gauss-Jordan over the rationals.

use std::collections::BTreeSet;

use gwalk_core::search::SupportCandidate;
use gwalk_core::{Eigenvalue, LatticePoint, Rational, ShiftKind, WaveFunction};

/// Rows of the system for states supported on `candidate`.
///
/// Moving:    λΨ^{2k}(x)   = Σ_j g_j Ψ^j(x+e_k), diagonal weight on j = 2k
///            λΨ^{2k+1}(x) = Σ_j g_j Ψ^j(x-e_k), diagonal weight on j = 2k+1
/// Flip-flop: same displacements, diagonal weights on j = 2k+1 and j = 2k.
pub fn dense_system(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    shift: ShiftKind,
) -> Vec<Vec<Rational>> {
    let pts = candidate.points();
    let d = pts[0].dim();
    let n = 2 * d;
    let cols = n * pts.len();
    let index = |p: &LatticePoint| pts.iter().position(|q| q == p);
    let off = Rational::new(1, d as i64);
    let diag = Rational::new(1 - d as i64, d as i64);
    let lam = Rational::from_integer(lambda.sign());

    let mut sites = BTreeSet::new();
    for p in pts {
        sites.insert(p.clone());
        for k in 0..d {
            let mut a = p.coords().to_vec();
            a[k] -= 1;
            sites.insert(LatticePoint::new(a));
            let mut b = p.coords().to_vec();
            b[k] += 1;
            sites.insert(LatticePoint::new(b));
        }
    }

    let mut rows = Vec::new();
    for x in &sites {
        for k in 0..d {
            for upper in [false, true] {
                let comp = 2 * k + usize::from(upper);
                let mut nb = x.coords().to_vec();
                nb[k] += if upper { -1 } else { 1 };
                let nb = LatticePoint::new(nb);
                let diag_at = match (shift, upper) {
                    (ShiftKind::Moving, false) => 2 * k,
                    (ShiftKind::Moving, true) => 2 * k + 1,
                    (ShiftKind::FlipFlop, false) => 2 * k + 1,
                    (ShiftKind::FlipFlop, true) => 2 * k,
                };
                let mut row = vec![Rational::zero(); cols];
                // right-hand side minus left-hand side
                if let Some(s) = index(&nb) {
                    for j in 0..n {
                        row[s * n + j] = if j == diag_at {
                            diag.clone()
                        } else {
                            off.clone()
                        };
                    }
                }
                if let Some(h) = index(x) {
                    row[h * n + comp] = &row[h * n + comp] - &lam;
                }
                rows.push(row);
            }
        }
    }
    rows
}

pub fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn nullity(candidate: &SupportCandidate, lambda: Eigenvalue, shift: ShiftKind) -> usize {
    let m = dense_system(candidate, lambda, shift);
    let cols = 2 * candidate.dim() * candidate.len();
    cols - rank(m)
}

/// Flattens a (real) state supported in `candidate` into the unknown vector.
pub fn flatten(candidate: &SupportCandidate, psi: &WaveFunction) -> Vec<Rational> {
    let n = 2 * candidate.dim();
    let mut v = Vec::with_capacity(n * candidate.len());
    for p in candidate.points() {
        for j in 0..n {
            let a = psi.amplitude(p, j);
            assert!(a.im.is_zero(), "real system expected");
            v.push(a.re);
        }
    }
    v
}

pub fn annihilates(m: &[Vec<Rational>], v: &[Rational]) -> bool {
    m.iter().all(|row| {
        let mut acc = Rational::zero();
        for (a, b) in row.iter().zip(v) {
            acc += &(a * b);
        }
        acc.is_zero()
    })
}

/// Number of discrepancies between the solver basis and the dense oracle
/// for one candidate: dimension mismatch, vectors outside the oracle
/// nullspace, or a dependent basis.
pub fn discrepancies(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    shift: ShiftKind,
    basis: &[WaveFunction],
) -> usize {
    let m = dense_system(candidate, lambda, shift);
    let cols = 2 * candidate.dim() * candidate.len();
    let mut bad = 0;
    let expected = cols - rank(m.clone());
    if expected != basis.len() {
        bad += 1;
    }
    let flat: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(candidate, b)).collect();
    bad += flat.iter().filter(|v| !annihilates(&m, v)).count();
    if !flat.is_empty() && rank(flat.clone()) != flat.len() {
        bad += 1;
    }
    bad
}
