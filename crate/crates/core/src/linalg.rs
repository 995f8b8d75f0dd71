//! Exact nullspaces of homogeneous systems over `Q(i)`.
//!
//! Rows are scaled to Gaussian integers and reduced with fraction-free
//! (Bareiss) elimination; every intermediate division is exact, so entries
//! stay integral and bounded by minors of the input. Pivots are the first
//! nonzero entry in column order, which makes the basis deterministic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Rational;
use crate::scalar::Scalar;

/// `re + i·im` with integer parts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn one() -> Self {
        GaussInt::new(BigInt::one(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, rhs: &GaussInt) -> GaussInt {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussInt::new(&self.re * &rhs.re, BigInt::zero());
        }
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    pub fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    /// Division known to be exact in `Z[i]`. Panics otherwise.
    pub fn div_exact(&self, rhs: &GaussInt) -> GaussInt {
        if rhs.im.is_zero() {
            let (qr, rr) = self.re.div_rem(&rhs.re);
            let (qi, ri) = self.im.div_rem(&rhs.re);
            assert!(
                rr.is_zero() && ri.is_zero(),
                "inexact fraction-free division"
            );
            return GaussInt::new(qr, qi);
        }
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num_re = &self.re * &rhs.re + &self.im * &rhs.im;
        let num_im = &self.im * &rhs.re - &self.re * &rhs.im;
        let (qr, rr) = num_re.div_rem(&norm);
        let (qi, ri) = num_im.div_rem(&norm);
        assert!(
            rr.is_zero() && ri.is_zero(),
            "inexact fraction-free division"
        );
        GaussInt::new(qr, qi)
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::new(
            Rational::from(self.re.clone()),
            Rational::from(self.im.clone()),
        )
    }
}

/// Dense row-major matrix of Gaussian integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussInt>,
}

impl IntMatrix {
    /// Clears the denominators of each row separately; the solution space
    /// is unchanged.
    pub fn from_scalar_rows(rows: &[Vec<Scalar>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged system");
            let mut lcm = BigInt::one();
            for s in row {
                lcm = lcm.lcm(s.re.denom()).lcm(s.im.denom());
            }
            for s in row {
                let re = s.re.numer() * (&lcm / s.re.denom());
                let im = s.im.numer() * (&lcm / s.im.denom());
                data.push(GaussInt::new(re, im));
            }
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn at(&self, r: usize, c: usize) -> &GaussInt {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over `F_p` for `p = 998244353` with `i ↦ √-1 mod p`. This is a
    /// ring homomorphism from `Z[i]`, so the rank over `Q(i)` is at least the
    /// returned value; full column rank here proves a trivial nullspace.
    pub fn rank_mod_prime(&self) -> usize {
        let p = BigInt::from(MODULUS);
        let reduce =
            |x: &BigInt| -> u64 { x.mod_floor(&p).to_u64().expect("reduced below modulus") };
        let m = self
            .data
            .iter()
            .map(|g| {
                if g.im.is_zero() {
                    reduce(&g.re)
                } else {
                    (reduce(&g.re) + mul_mod(reduce(&g.im), SQRT_MINUS_ONE)) % MODULUS
                }
            })
            .collect();
        dense_rank_mod_prime(m, self.rows, self.cols)
    }

    /// Fraction-free reduction to row echelon form. Returns the pivot
    /// columns; rows past `pivots.len()` are zero afterwards.
    pub fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prev = GaussInt::one();
        let cols = self.cols;
        for c in 0..cols {
            let r = pivots.len();
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let pivot = self.at(r, c).clone();
            for i in r + 1..self.rows {
                let lead = self.at(i, c).clone();
                for j in c + 1..cols {
                    let a = pivot.mul(self.at(i, j));
                    let b = if lead.is_zero() {
                        GaussInt::default()
                    } else {
                        lead.mul(self.at(r, j))
                    };
                    self.data[i * cols + j] = a.sub(&b).div_exact(&prev);
                }
                self.data[i * cols + c] = GaussInt::default();
            }
            prev = pivot;
            pivots.push(c);
        }
        pivots
    }
}

const MODULUS: u64 = 998_244_353;
/// `3^((p-1)/4) mod p`; 3 generates the multiplicative group.
const SQRT_MINUS_ONE: u64 = 911_660_635;

/// The image of `s` under the same map as [`IntMatrix::rank_mod_prime`],
/// or `None` if a denominator is divisible by the prime.
pub fn scalar_mod_prime(s: &Scalar) -> Option<u64> {
    let p = BigInt::from(MODULUS);
    let part = |r: &Rational| -> Option<u64> {
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(mul_mod(num, pow_mod(den, MODULUS - 2)))
    };
    let re = part(&s.re)?;
    let im = part(&s.im)?;
    Some((re + mul_mod(im, SQRT_MINUS_ONE)) % MODULUS)
}

/// `a - b` modulo the prime.
pub fn sub_mod_prime(a: u64, b: u64) -> u64 {
    (a + MODULUS - b) % MODULUS
}

/// Rank over `F_p` of a row-major `rows × cols` matrix with reduced entries.
pub fn dense_rank_mod_prime(mut m: Vec<u64>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(m[rank * cols + c], MODULUS - 2);
        for r in rank + 1..rows {
            let f = m[r * cols + c];
            if f == 0 {
                continue;
            }
            let f = mul_mod(f, inv);
            for j in c..cols {
                let sub = mul_mod(f, m[rank * cols + j]);
                m[r * cols + j] = sub_mod_prime(m[r * cols + j], sub);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64) -> u64 {
    a * b % MODULUS
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    base %= MODULUS;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// A basis of `{x : A x = 0}` with one vector per free column (that entry
/// set to one, the other free entries zero).
pub fn nullspace(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m = IntMatrix::from_scalar_rows(rows, cols);
    if m.rank_mod_prime() == cols {
        return Vec::new();
    }
    let pivots = m.echelon();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let echelon: Vec<Vec<Scalar>> = (0..pivots.len())
        .map(|r| (0..cols).map(|c| m.at(r, c).to_scalar()).collect())
        .collect();
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = vec![Scalar::zero(); cols];
            x[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Scalar::zero();
                for j in pc + 1..cols {
                    if !x[j].is_zero() && !echelon[r][j].is_zero() {
                        acc += &(&echelon[r][j] * &x[j]);
                    }
                }
                x[pc] = -acc
                    .checked_div(&echelon[r][pc])
                    .expect("pivots are nonzero");
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_integer(v)).collect())
            .collect()
    }

    fn apply(rows: &[Vec<Scalar>], x: &[Scalar]) -> Vec<Scalar> {
        rows.iter()
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in r.iter().zip(x) {
                    acc += &(a * b);
                }
                acc
            })
            .collect()
    }

    #[test]
    fn sqrt_minus_one_is_correct() {
        assert_eq!(mul_mod(SQRT_MINUS_ONE, SQRT_MINUS_ONE), MODULUS - 1);
    }

    #[test]
    fn scalar_reduction_matches_matrix_reduction() {
        let s = Scalar::new(Rational::new(-3, 4), Rational::new(5, 6));
        let m = IntMatrix::from_scalar_rows(&[vec![s.clone()]], 1);
        // The row was scaled by 12, a unit mod p.
        let scaled = mul_mod(scalar_mod_prime(&s).unwrap(), 12);
        let g = m.at(0, 0);
        let direct = (g.re.to_i64().unwrap().rem_euclid(MODULUS as i64) as u64
            + mul_mod(g.im.to_u64().unwrap(), SQRT_MINUS_ONE))
            % MODULUS;
        assert_eq!(scaled, direct);
        assert_eq!(
            mul_mod(scalar_mod_prime(&Scalar::i()).unwrap(), SQRT_MINUS_ONE),
            MODULUS - 1
        );
        let bad =
            Scalar::real(Rational::from_bigints(BigInt::one(), BigInt::from(MODULUS)).unwrap());
        assert_eq!(scalar_mod_prime(&bad), None);
    }

    #[test]
    fn full_rank_has_empty_nullspace() {
        let a = ints(&[&[1, 2], &[3, 4]]);
        assert!(nullspace(&a, 2).is_empty());
    }

    #[test]
    fn rank_deficient_with_skipped_column() {
        // Column 1 is zero below the first pivot, exercising the skip path.
        let a = ints(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[3, 6, 10, 13]]);
        let basis = nullspace(&a, 4);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(apply(&a, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rational_rows_are_scaled() {
        let half = Scalar::real(Rational::new(1, 2));
        let third = Scalar::real(Rational::new(-1, 3));
        let a = vec![vec![half.clone(), third.clone()]];
        let basis = nullspace(&a, 2);
        assert_eq!(basis.len(), 1);
        assert!(apply(&a, &basis[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn complex_system() {
        // x + i y = 0 has the single direction (−i, 1).
        let a = vec![vec![Scalar::one(), Scalar::i()]];
        let basis = nullspace(&a, 2);
        assert_eq!(basis, vec![vec![-Scalar::i(), Scalar::one()]]);
    }

    #[test]
    fn bareiss_determinant_is_last_pivot() {
        let rows = ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let mut m = IntMatrix::from_scalar_rows(&rows, 3);
        assert_eq!(m.echelon(), vec![0, 1, 2]);
        assert_eq!(m.at(2, 2), &GaussInt::new(BigInt::from(4), BigInt::zero()));
    }

    #[test]
    fn zero_matrix_keeps_every_direction() {
        let a = ints(&[&[0, 0, 0]]);
        assert_eq!(nullspace(&a, 3).len(), 3);
    }
}
