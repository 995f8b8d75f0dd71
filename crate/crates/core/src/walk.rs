//! Coins and the one-step evolution operators.
//!
//! Component indices are 0-based: `2k` and `2k+1` are the pair of axis `k`.
//! Under the moving shift component `2k` of the output at `x` is coin row
//! `2k` applied to `Ψ(x+e_k)` and component `2k+1` is row `2k+1` applied to
//! `Ψ(x-e_k)`. The flip-flop shift uses the same displacements but exchanges
//! the two rows of every pair.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::wave::WaveFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShiftKind {
    Moving,
    FlipFlop,
}

impl ShiftKind {
    pub const ALL: [ShiftKind; 2] = [ShiftKind::Moving, ShiftKind::FlipFlop];

    pub fn name(self) -> &'static str {
        match self {
            ShiftKind::Moving => "moving",
            ShiftKind::FlipFlop => "flipflop",
        }
    }

    /// Where output component `j` at `x` reads from: `(coin row, axis,
    /// displacement)` meaning row applied to `Ψ(x + displacement·e_axis)`.
    pub fn source(self, j: usize) -> (usize, usize, i64) {
        let axis = j / 2;
        let (from_plus, row) = match (self, j % 2) {
            (ShiftKind::Moving, 0) => (true, j),
            (ShiftKind::Moving, _) => (false, j),
            (ShiftKind::FlipFlop, 0) => (true, j + 1),
            (ShiftKind::FlipFlop, _) => (false, j - 1),
        };
        (row, axis, if from_plus { 1 } else { -1 })
    }
}

impl fmt::Display for ShiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A square matrix of exact scalars acting on the `2d` internal states.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coin {
    size: usize,
    entries: Vec<Scalar>,
}

impl Coin {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::CoinSize {
                    rows: size,
                    cols: row.len(),
                    expected: size,
                });
            }
            entries.extend(row);
        }
        Ok(Coin { size, entries })
    }

    pub fn from_integer_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Coin::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_integer).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![Scalar::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Scalar::one();
        }
        Coin { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(Scalar::is_real)
    }

    /// Same matrix with rows `2k` and `2k+1` exchanged for every `k`.
    pub fn swap_pair_rows(&self) -> Self {
        let mut rows: Vec<Vec<Scalar>> = (0..self.size).map(|r| self.row(r).to_vec()).collect();
        for k in 0..self.size / 2 {
            rows.swap(2 * k, 2 * k + 1);
        }
        Coin::from_rows(rows).expect("square by construction")
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.size)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn check_walk(&self, dim: usize) -> Result<()> {
        if self.size != 2 * dim {
            return Err(Error::CoinSize {
                rows: self.size,
                cols: self.size,
                expected: 2 * dim,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Coin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.size).map(|r| self.row(r)))
            .finish()
    }
}

/// The Grover coin on `2d` states: `1/d - δ_ij`.
pub fn grover_coin(dim: usize) -> Result<Coin> {
    if dim == 0 {
        return Err(Error::InvalidDimension { min: 1, found: 0 });
    }
    let size = 2 * dim;
    let off = Scalar::real(Rational::new(1, dim as i64));
    let diag = Scalar::real(Rational::new(1 - dim as i64, dim as i64));
    let entries = (0..size * size)
        .map(|idx| {
            if idx / size == idx % size {
                diag.clone()
            } else {
                off.clone()
            }
        })
        .collect();
    Ok(Coin { size, entries })
}

/// `A·A* = I`, exactly.
pub fn check_unitary(coin: &Coin) -> bool {
    let n = coin.size;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Scalar::zero();
            for k in 0..n {
                acc += &(coin.get(i, k) * &coin.get(j, k).conj());
            }
            let expected = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if acc != expected {
                return false;
            }
        }
    }
    true
}

/// One application of `U_A`.
pub fn step(psi: &WaveFunction, coin: &Coin, shift: ShiftKind) -> Result<WaveFunction> {
    coin.check_walk(psi.dim())?;
    let mut out = WaveFunction::zero(psi.dim())?;
    for (x, amps) in psi.iter() {
        let mixed = coin.apply(amps);
        for k in 0..psi.dim() {
            // Component 2k always moves to x - e_k and 2k+1 to x + e_k; the
            // shift decides which coin row feeds each of them.
            let (minus_row, plus_row) = match shift {
                ShiftKind::Moving => (2 * k, 2 * k + 1),
                ShiftKind::FlipFlop => (2 * k + 1, 2 * k),
            };
            out.accumulate(x.offset(k, -1), 2 * k, &mixed[minus_row]);
            out.accumulate(x.offset(k, 1), 2 * k + 1, &mixed[plus_row]);
        }
    }
    out.prune();
    Ok(out)
}

/// `U_A^n ψ`.
pub fn evolve(psi: &WaveFunction, coin: &Coin, shift: ShiftKind, n: usize) -> Result<WaveFunction> {
    coin.check_walk(psi.dim())?;
    let mut cur = psi.clone();
    for _ in 0..n {
        cur = step(&cur, coin, shift)?;
    }
    Ok(cur)
}
