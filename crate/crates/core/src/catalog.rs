//! Closed-form finitely supported eigenstates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::eigen::Eigenvalue;
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::scalar::Scalar;
use crate::wave::WaveFunction;

/// `|0⟩ = (1, 0)` and `|1⟩ = (0, 1)` on a chirality pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChiralityBit {
    Zero,
    One,
}

impl ChiralityBit {
    pub fn from_coordinate(c: i64) -> Self {
        if c == 0 {
            ChiralityBit::Zero
        } else {
            ChiralityBit::One
        }
    }

    pub fn ket(self) -> [i64; 2] {
        match self {
            ChiralityBit::Zero => [1, 0],
            ChiralityBit::One => [0, 1],
        }
    }
}

fn check_base(dim: usize, base: &LatticePoint) -> Result<()> {
    if base.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: base.dim(),
        });
    }
    Ok(())
}

/// All points of `{0,1}^dim` in lexicographic order.
fn unit_cube(dim: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u64 << dim).map(move |bits| {
        (0..dim)
            .map(|k| ((bits >> (dim - 1 - k)) & 1) as i64)
            .collect()
    })
}

/// The moving-shift eigenstate on the cube `base + {0,1}^d`: at offset
/// `(x_1..x_d)` the pair of axis `k` is `λ^{Σx}·|x_k⟩`.
pub fn moving_min_state(
    dim: usize,
    lambda: Eigenvalue,
    base: &LatticePoint,
) -> Result<WaveFunction> {
    if dim == 0 {
        return Err(Error::InvalidDimension { min: 1, found: 0 });
    }
    check_base(dim, base)?;
    let entries = unit_cube(dim).map(|offset| {
        let sign = lambda.pow(offset.iter().sum());
        let amps = offset
            .iter()
            .flat_map(|&c| ChiralityBit::from_coordinate(c).ket())
            .map(|a| Scalar::from_integer(sign * a))
            .collect();
        (base.add(&LatticePoint::new(offset)), amps)
    });
    WaveFunction::from_entries(dim, entries)
}

/// The flip-flop eigenstate on the square `base + {0,1}² × {0}^{d-2}`.
///
/// At offset `(m_1, m_2)` the first two pairs are
/// `λ^{m_1+m_2}(-1)^{m_1+m_2}|m_1⟩` and `λ^{m_1+m_2}(-1)^{m_1+m_2+1}|m_2⟩`;
/// every other pair is zero. There is no finitely supported flip-flop
/// eigenstate for `d = 1`, so that case is an error.
pub fn flipflop_min_state(
    dim: usize,
    lambda: Eigenvalue,
    base: &LatticePoint,
) -> Result<WaveFunction> {
    if dim < 2 {
        return Err(Error::InvalidDimension { min: 2, found: dim });
    }
    check_base(dim, base)?;
    let entries = unit_cube(2).map(|m| {
        let s = m[0] + m[1];
        let sign = lambda.pow(s) * if s % 2 == 0 { 1 } else { -1 };
        let mut amps = vec![Scalar::zero(); 2 * dim];
        for (k, &c) in m.iter().enumerate() {
            let pair_sign = if k == 0 { sign } else { -sign };
            let ket = ChiralityBit::from_coordinate(c).ket();
            amps[2 * k] = Scalar::from_integer(pair_sign * ket[0]);
            amps[2 * k + 1] = Scalar::from_integer(pair_sign * ket[1]);
        }
        let mut offset = vec![0; dim];
        offset[..2].copy_from_slice(&m);
        (base.add(&LatticePoint::new(offset)), amps)
    });
    WaveFunction::from_entries(dim, entries)
}

/// The `λ = +1` family on `Z²` generated by a finitely supported kernel:
///
/// `Ψ(x,y) = (1,0,1,0)g(x,y) + (0,1,1,0)g(x-1,y) + (1,0,0,1)g(x,y-1) + (0,1,0,1)g(x-1,y-1)`,
///
/// i.e. the superposition `Σ_p g(p)·(minimal state translated to p)`.
pub fn convolve_moving_d2(g: &BTreeMap<LatticePoint, Scalar>) -> Result<WaveFunction> {
    const BLOCKS: [([i64; 2], [i64; 4]); 4] = [
        ([0, 0], [1, 0, 1, 0]),
        ([1, 0], [0, 1, 1, 0]),
        ([0, 1], [1, 0, 0, 1]),
        ([1, 1], [0, 1, 0, 1]),
    ];
    if g.values().all(Scalar::is_zero) {
        return Err(Error::ZeroKernel);
    }
    let mut out = WaveFunction::zero(2)?;
    for (p, c) in g {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        if c.is_zero() {
            continue;
        }
        for (shift, block) in BLOCKS {
            let target = p.add(&LatticePoint::from(shift));
            for (j, &b) in block.iter().enumerate() {
                if b != 0 {
                    out.accumulate(target.clone(), j, &c.scale(&b.into()));
                }
            }
        }
    }
    out.prune();
    Ok(out)
}

/// The kernel equal to one on `{0,-1}²` and zero elsewhere.
pub fn nine_point_kernel() -> BTreeMap<LatticePoint, Scalar> {
    [[0, 0], [0, -1], [-1, 0], [-1, -1]]
        .into_iter()
        .map(|p| (LatticePoint::from(p), Scalar::one()))
        .collect()
}

/// The nine-site stationary amplitude on `{-1,0,1}²`, written out entry by
/// entry.
pub fn nine_point_state() -> WaveFunction {
    WaveFunction::from_integer_entries(
        2,
        [
            ([0, 0], vec![2, 2, 2, 2]),
            ([0, 1], vec![1, 1, 0, 2]),
            ([1, 0], vec![0, 2, 1, 1]),
            ([0, -1], vec![1, 1, 2, 0]),
            ([-1, 0], vec![2, 0, 1, 1]),
            ([1, 1], vec![0, 1, 0, 1]),
            ([1, -1], vec![0, 1, 1, 0]),
            ([-1, -1], vec![1, 0, 1, 0]),
            ([-1, 1], vec![1, 0, 0, 1]),
        ],
    )
    .expect("static table is well formed")
}
