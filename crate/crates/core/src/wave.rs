//! Finitely supported wavefunctions `Z^d → C^{2d}` and their measures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// A state of the walk: each stored point carries `2d` amplitudes, where
/// components `2k` and `2k+1` (0-based) form the chirality pair of axis `k`.
///
/// All-zero amplitude vectors are never stored, so the key set is exactly
/// the support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WaveFunction {
    dim: usize,
    entries: BTreeMap<LatticePoint, Vec<Scalar>>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::InvalidDimension { min: 1, found: 0 })
    } else {
        Ok(())
    }
}

fn check_point(dim: usize, point: &LatticePoint) -> Result<()> {
    if point.dim() != dim {
        Err(Error::DimensionMismatch {
            expected: dim,
            found: point.dim(),
        })
    } else {
        Ok(())
    }
}

impl WaveFunction {
    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(WaveFunction {
            dim,
            entries: BTreeMap::new(),
        })
    }

    /// Builds a state from explicit entries. Duplicate points are rejected
    /// and zero vectors dropped.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, Vec<Scalar>)>,
    {
        let mut psi = WaveFunction::zero(dim)?;
        let mut seen = BTreeSet::new();
        for (point, amps) in entries {
            if !seen.insert(point.clone()) {
                return Err(Error::DuplicatePoint(point));
            }
            psi.set(point, amps)?;
        }
        Ok(psi)
    }

    /// Like [`from_entries`](Self::from_entries) with integer amplitudes.
    pub fn from_integer_entries<I, P>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Vec<i64>)>,
        P: Into<LatticePoint>,
    {
        WaveFunction::from_entries(
            dim,
            entries.into_iter().map(|(p, amps)| {
                (
                    p.into(),
                    amps.into_iter().map(Scalar::from_integer).collect(),
                )
            }),
        )
    }

    /// A single site carrying `amps`.
    pub fn delta(point: LatticePoint, amps: Vec<Scalar>) -> Result<Self> {
        WaveFunction::from_entries(point.dim(), [(point, amps)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of internal states, `2d`.
    pub fn components(&self) -> usize {
        2 * self.dim
    }

    /// Replaces the amplitude vector at `point`; a zero vector removes it.
    pub fn set(&mut self, point: LatticePoint, amps: Vec<Scalar>) -> Result<()> {
        check_point(self.dim, &point)?;
        if amps.len() != self.components() {
            return Err(Error::AmplitudeLength {
                point,
                expected: self.components(),
                found: amps.len(),
            });
        }
        if amps.iter().all(Scalar::is_zero) {
            self.entries.remove(&point);
        } else {
            self.entries.insert(point, amps);
        }
        Ok(())
    }

    /// Adds `amps` into the vector at `point`, pruning if the sum vanishes.
    /// Callers guarantee matching dimension and length.
    pub(crate) fn accumulate(&mut self, point: LatticePoint, component: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let n = self.components();
        let slot = self
            .entries
            .entry(point)
            .or_insert_with(|| vec![Scalar::zero(); n]);
        slot[component] += value;
    }

    pub(crate) fn prune(&mut self) {
        self.entries.retain(|_, v| v.iter().any(|s| !s.is_zero()));
    }

    pub fn get(&self, point: &LatticePoint) -> Option<&[Scalar]> {
        self.entries.get(point).map(Vec::as_slice)
    }

    /// Component `j` (0-based) at `point`, zero off the support.
    pub fn amplitude(&self, point: &LatticePoint, j: usize) -> Scalar {
        self.entries
            .get(point)
            .map(|v| v[j].clone())
            .unwrap_or_default()
    }

    /// The chirality pair `(Ψ^{2k}, Ψ^{2k+1})` of axis `k` at `point`.
    pub fn pair(&self, point: &LatticePoint, axis: usize) -> (Scalar, Scalar) {
        (
            self.amplitude(point, 2 * axis),
            self.amplitude(point, 2 * axis + 1),
        )
    }

    pub fn pair_is_zero(&self, point: &LatticePoint, axis: usize) -> bool {
        self.entries
            .get(point)
            .is_none_or(|v| v[2 * axis].is_zero() && v[2 * axis + 1].is_zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, &[Scalar])> {
        self.entries.iter().map(|(p, v)| (p, v.as_slice()))
    }

    pub fn points(&self) -> impl Iterator<Item = &LatticePoint> {
        self.entries.keys()
    }

    /// Size of the support.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> BTreeSet<LatticePoint> {
        self.entries.keys().cloned().collect()
    }

    /// `Γ(x)`, the sum of all components at `x`.
    pub fn gamma(&self, point: &LatticePoint) -> Result<Scalar> {
        check_point(self.dim, point)?;
        let mut sum = Scalar::zero();
        if let Some(v) = self.entries.get(point) {
            for s in v {
                sum += s;
            }
        }
        Ok(sum)
    }

    pub fn to_measure(&self) -> Measure {
        let entries = self
            .entries
            .iter()
            .map(|(p, v)| {
                let mut mass = Rational::zero();
                for s in v {
                    mass += &s.norm_sqr();
                }
                (p.clone(), mass)
            })
            .collect();
        Measure {
            dim: self.dim,
            entries,
        }
    }

    /// `Σ_x ‖Ψ(x)‖²`.
    pub fn norm_sqr(&self) -> Rational {
        self.to_measure().total()
    }

    /// The state moved by `+v`.
    pub fn translate(&self, v: &LatticePoint) -> Result<Self> {
        check_point(self.dim, v)?;
        Ok(WaveFunction {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(p, amps)| (p.add(v), amps.clone()))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return WaveFunction {
                dim: self.dim,
                entries: BTreeMap::new(),
            };
        }
        WaveFunction {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(p, amps)| (p.clone(), amps.iter().map(|a| a * c).collect()))
                .collect(),
        }
    }

    /// `Σ c_i ψ_i`, pointwise and exact. An empty list is an error since
    /// the dimension would be unknown.
    pub fn linear_combine<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Scalar, &'a WaveFunction)>,
    {
        let mut terms = terms.into_iter().peekable();
        let dim = terms.peek().ok_or(Error::ZeroState)?.1.dim;
        let mut out = WaveFunction::zero(dim)?;
        for (c, psi) in terms {
            if psi.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: psi.dim,
                });
            }
            if c.is_zero() {
                continue;
            }
            for (p, amps) in &psi.entries {
                for (j, a) in amps.iter().enumerate() {
                    out.accumulate(p.clone(), j, &(c * a));
                }
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn add(&self, other: &WaveFunction) -> Result<Self> {
        let one = Scalar::one();
        WaveFunction::linear_combine([(&one, self), (&one, other)])
    }

    pub fn sub(&self, other: &WaveFunction) -> Result<Self> {
        let one = Scalar::one();
        let minus = -Scalar::one();
        WaveFunction::linear_combine([(&one, self), (&minus, other)])
    }

    /// Scales so that the first nonzero component (in point order, then
    /// component order) equals one.
    pub fn normalized(&self) -> Self {
        let first = self
            .entries
            .values()
            .flat_map(|v| v.iter())
            .find(|s| !s.is_zero());
        match first.and_then(Scalar::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Support together with every unit neighbour `x ± e_k`.
    pub fn neighborhood_closure(&self) -> BTreeSet<LatticePoint> {
        closure(self.entries.keys(), self.dim)
    }
}

pub(crate) fn closure<'a, I>(points: I, dim: usize) -> BTreeSet<LatticePoint>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    let mut out = BTreeSet::new();
    for p in points {
        out.insert(p.clone());
        for k in 0..dim {
            out.insert(p.offset(k, -1));
            out.insert(p.offset(k, 1));
        }
    }
    out
}

impl core::fmt::Debug for WaveFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// A finitely supported nonnegative measure on `Z^d`; zeros are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Measure {
    dim: usize,
    entries: BTreeMap<LatticePoint, Rational>,
}

impl Measure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, point: &LatticePoint) -> Rational {
        self.entries.get(point).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> BTreeSet<LatticePoint> {
        self.entries.keys().cloned().collect()
    }

    pub fn total(&self) -> Rational {
        let mut sum = Rational::zero();
        for v in self.entries.values() {
            sum += v;
        }
        sum
    }

    pub fn scale(&self, c: &Rational) -> Measure {
        Measure {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}
