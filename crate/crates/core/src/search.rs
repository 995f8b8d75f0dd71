//! Exhaustive minimal-support search inside a finite window.
//!
//! For each support size `s = 1, 2, …` every translation class of `s`-point
//! sets fitting in the box `[-R, R]^d` is turned into the finite linear
//! system `U ψ = λ ψ` restricted to states supported on the set, and its
//! exact nullspace decides whether an eigenstate with exactly that support
//! exists. The first size with a hit is the certified minimum for the window.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::eigen::{self, Eigenvalue};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::linalg;
use crate::scalar::Scalar;
use crate::walk::{grover_coin, Coin, ShiftKind};
use crate::wave::{closure, WaveFunction};

/// A nonempty point set translated so that its lexicographically smallest
/// point is the origin. Points are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportCandidate {
    points: Vec<LatticePoint>,
}

impl SupportCandidate {
    pub fn new<I: IntoIterator<Item = LatticePoint>>(points: I) -> Result<Self> {
        let set: BTreeSet<LatticePoint> = points.into_iter().collect();
        let min = set.iter().next().ok_or(Error::ZeroState)?.clone();
        let dim = min.dim();
        if let Some(p) = set.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(SupportCandidate {
            points: set.iter().map(|p| p.sub(&min)).collect(),
        })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }
}

/// Streams the translation classes of `size`-point subsets of `[-R, R]^d`,
/// each once, in lexicographic order of their sorted point lists.
pub fn enumerate_supports(dim: usize, window_radius: u32, size: usize) -> Supports {
    let span = 2 * i64::from(window_radius);
    // Lexicographically positive offsets whose coordinates fit in the span.
    let mut offsets = Vec::new();
    if dim > 0 && size > 0 {
        let side = (2 * span + 1) as usize;
        let total = side.pow(dim as u32);
        for idx in 0..total {
            let mut rest = idx;
            let mut coords = vec![0i64; dim];
            for c in coords.iter_mut().rev() {
                *c = (rest % side) as i64 - span;
                rest /= side;
            }
            let p = LatticePoint::new(coords);
            if p > LatticePoint::origin(dim) {
                offsets.push(p);
            }
        }
    }
    Supports {
        dim,
        span,
        need: size.saturating_sub(1),
        offsets,
        chosen: Vec::new(),
        bounds: vec![(vec![0; dim], vec![0; dim])],
        cursor: 0,
        done: dim == 0 || size == 0,
    }
}

pub struct Supports {
    dim: usize,
    span: i64,
    need: usize,
    offsets: Vec<LatticePoint>,
    chosen: Vec<usize>,
    /// Per-coordinate (min, max) of origin plus the chosen offsets.
    bounds: Vec<(Vec<i64>, Vec<i64>)>,
    cursor: usize,
    done: bool,
}

impl Supports {
    fn try_push(&mut self, i: usize) -> bool {
        let (lo, hi) = self.bounds.last().expect("root bounds");
        let p = self.offsets[i].coords();
        let mut nlo = lo.clone();
        let mut nhi = hi.clone();
        for k in 0..self.dim {
            nlo[k] = nlo[k].min(p[k]);
            nhi[k] = nhi[k].max(p[k]);
            if nhi[k] - nlo[k] > self.span {
                return false;
            }
        }
        self.chosen.push(i);
        self.bounds.push((nlo, nhi));
        true
    }

    fn backtrack(&mut self) {
        match self.chosen.pop() {
            Some(i) => {
                self.bounds.pop();
                self.cursor = i + 1;
            }
            None => self.done = true,
        }
    }
}

impl Iterator for Supports {
    type Item = SupportCandidate;

    fn next(&mut self) -> Option<SupportCandidate> {
        while !self.done {
            if self.chosen.len() == self.need {
                let mut points = Vec::with_capacity(self.need + 1);
                points.push(LatticePoint::origin(self.dim));
                points.extend(self.chosen.iter().map(|&i| self.offsets[i].clone()));
                self.backtrack();
                return Some(SupportCandidate { points });
            }
            let remaining = self.need - self.chosen.len();
            let mut pushed = false;
            while self.cursor + remaining <= self.offsets.len() {
                let i = self.cursor;
                self.cursor += 1;
                if self.try_push(i) {
                    pushed = true;
                    break;
                }
            }
            if !pushed {
                self.backtrack();
            }
        }
        None
    }
}

/// The rows of `U ψ - λ ψ = 0` for states supported on `candidate`, one
/// block of `2d` equations per point of the unit-neighbourhood closure.
/// Unknown `2d·i + j` is component `j` at `candidate.points()[i]`.
pub fn eigen_system(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Result<Vec<Vec<Scalar>>> {
    let dim = candidate.dim();
    let n = 2 * dim;
    check_coin(coin, dim)?;
    let cols = n * candidate.len();
    let lam = lambda.to_scalar();
    let mut rows = Vec::new();
    for y in closure(candidate.points(), dim) {
        let here = candidate.index_of(&y);
        for j in 0..n {
            let (coin_row, axis, delta) = shift.source(j);
            let mut row = vec![Scalar::zero(); cols];
            let mut nonzero = false;
            if let Some(s) = candidate.index_of(&y.offset(axis, delta)) {
                for (c, a) in coin.row(coin_row).iter().enumerate() {
                    if !a.is_zero() {
                        row[s * n + c] = a.clone();
                        nonzero = true;
                    }
                }
            }
            if let Some(h) = here {
                row[h * n + j] -= &lam;
                nonzero = true;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

fn check_coin(coin: &Coin, dim: usize) -> Result<()> {
    if coin.size() != 2 * dim {
        return Err(Error::CoinSize {
            rows: coin.size(),
            cols: coin.size(),
            expected: 2 * dim,
        });
    }
    Ok(())
}

/// [`eigen_system`] reduced modulo the prefilter prime, row-major, with its
/// row count. `None` if some coin entry does not reduce.
fn eigen_system_mod_prime(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Option<(Vec<u64>, usize)> {
    let dim = candidate.dim();
    let n = 2 * dim;
    let cols = n * candidate.len();
    let reduced: Vec<u64> = (0..n)
        .flat_map(|r| coin.row(r))
        .map(linalg::scalar_mod_prime)
        .collect::<Option<_>>()?;
    let lam = linalg::scalar_mod_prime(&lambda.to_scalar())?;
    let mut m = Vec::new();
    let mut rows = 0;
    for y in closure(candidate.points(), dim) {
        let here = candidate.index_of(&y);
        for j in 0..n {
            let (coin_row, axis, delta) = shift.source(j);
            let start = m.len();
            m.resize(start + cols, 0);
            let row = &mut m[start..];
            let mut nonzero = false;
            if let Some(s) = candidate.index_of(&y.offset(axis, delta)) {
                row[s * n..(s + 1) * n].copy_from_slice(&reduced[coin_row * n..(coin_row + 1) * n]);
                nonzero = true;
            }
            if let Some(h) = here {
                row[h * n + j] = linalg::sub_mod_prime(row[h * n + j], lam);
                nonzero = true;
            }
            if nonzero {
                rows += 1;
            } else {
                m.truncate(start);
            }
        }
    }
    Some((m, rows))
}

/// Exact basis of the eigenstates supported inside `candidate`, each scaled
/// so its first nonzero component is one. Empty when only the zero state
/// solves the system.
pub fn eigen_nullspace(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Result<Vec<WaveFunction>> {
    let dim = candidate.dim();
    let n = 2 * dim;
    check_coin(coin, dim)?;
    // Full column rank modulo p already proves the nullspace is trivial,
    // without building the exact system.
    if let Some((m, rows)) = eigen_system_mod_prime(candidate, lambda, coin, shift) {
        if linalg::dense_rank_mod_prime(m, rows, n * candidate.len()) == n * candidate.len() {
            return Ok(Vec::new());
        }
    }
    let rows = eigen_system(candidate, lambda, coin, shift)?;
    linalg::nullspace(&rows, n * candidate.len())
        .into_iter()
        .map(|v| {
            let entries = candidate
                .points()
                .iter()
                .cloned()
                .zip(v.chunks(n).map(<[Scalar]>::to_vec));
            Ok(WaveFunction::from_entries(dim, entries)?.normalized())
        })
        .collect()
}

/// An eigenstate whose support is exactly `candidate`, if one exists.
///
/// Solutions with full support exist iff the basis vectors' supports cover
/// the candidate; then `Σ t^i v_i` has full support for all but finitely
/// many `t`, and the smallest such positive integer `t` is used.
pub fn exact_support_witness(
    candidate: &SupportCandidate,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Result<Option<WaveFunction>> {
    let basis = eigen_nullspace(candidate, lambda, coin, shift)?;
    let covered: BTreeSet<&LatticePoint> = basis.iter().flat_map(|v| v.points()).collect();
    if covered.len() != candidate.len() {
        return Ok(None);
    }
    if basis.len() == 1 {
        return Ok(basis.into_iter().next());
    }
    for t in 1i64.. {
        let mut coeffs = Vec::with_capacity(basis.len());
        let mut c = Scalar::one();
        for _ in 0..basis.len() {
            coeffs.push(c.clone());
            c = &c * &Scalar::from_integer(t);
        }
        let combo = WaveFunction::linear_combine(coeffs.iter().zip(&basis))?;
        if combo.len() == candidate.len() {
            return Ok(Some(combo.normalized()));
        }
    }
    unreachable!("only finitely many t cancel a site")
}

/// Runs a probe over a batch of candidates and reports the first hit in
/// batch order, regardless of how the work is scheduled.
pub trait CandidateScan {
    fn find_first(
        &self,
        batch: &[SupportCandidate],
        probe: &(dyn Fn(&SupportCandidate) -> Option<WaveFunction> + Sync),
    ) -> Option<(usize, WaveFunction)>;
}

/// Scans on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl CandidateScan for Sequential {
    fn find_first(
        &self,
        batch: &[SupportCandidate],
        probe: &(dyn Fn(&SupportCandidate) -> Option<WaveFunction> + Sync),
    ) -> Option<(usize, WaveFunction)> {
        batch
            .iter()
            .enumerate()
            .find_map(|(i, c)| probe(c).map(|w| (i, w)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub dim: usize,
    pub lambda: Eigenvalue,
    pub coin: Coin,
    pub shift: ShiftKind,
    pub max_size: usize,
    pub window_radius: u32,
    /// Maximum number of candidates to examine; `None` is unlimited.
    pub budget: Option<u64>,
}

impl SearchConfig {
    /// Grover coin of dimension `dim`, no budget.
    pub fn grover(
        dim: usize,
        lambda: Eigenvalue,
        shift: ShiftKind,
        max_size: usize,
        window_radius: u32,
    ) -> Result<Self> {
        Ok(SearchConfig {
            dim,
            lambda,
            coin: grover_coin(dim)?,
            shift,
            max_size,
            window_radius,
            budget: None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeScan {
    pub size: usize,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub shift: ShiftKind,
    pub lambda: Eigenvalue,
    pub dim: usize,
    pub window_radius: u32,
    pub max_size: usize,
    pub found: Option<(SupportCandidate, WaveFunction)>,
    pub certified_min: Option<usize>,
    /// Candidates examined per size, in increasing size order. Sizes before
    /// the hit were scanned exhaustively.
    pub scans: Vec<SizeScan>,
}

const BATCH: usize = 1024;

/// Scans sizes `1..=max_size` and stops at the first size admitting an
/// eigenstate with exactly that support inside the window.
///
/// Any witness is re-verified through the residual, and for the Grover coin
/// also through the `Γ` relations and lemma checks, before it is returned.
pub fn min_support_search<S: CandidateScan + ?Sized>(
    config: &SearchConfig,
    scanner: &S,
) -> Result<SearchResult> {
    if config.dim == 0 {
        return Err(Error::InvalidDimension { min: 1, found: 0 });
    }
    if config.max_size == 0 {
        return Err(Error::NonPositive { name: "max_size" });
    }
    if config.coin.size() != 2 * config.dim {
        return Err(Error::CoinSize {
            rows: config.coin.size(),
            cols: config.coin.size(),
            expected: 2 * config.dim,
        });
    }
    let is_grover = config.coin == grover_coin(config.dim)?;
    let probe = |c: &SupportCandidate| -> Option<WaveFunction> {
        exact_support_witness(c, config.lambda, &config.coin, config.shift)
            .expect("candidate and coin dimensions agree")
    };

    let mut result = SearchResult {
        shift: config.shift,
        lambda: config.lambda,
        dim: config.dim,
        window_radius: config.window_radius,
        max_size: config.max_size,
        found: None,
        certified_min: None,
        scans: Vec::new(),
    };
    let mut scanned: u64 = 0;
    for size in 1..=config.max_size {
        let mut stream = enumerate_supports(config.dim, config.window_radius, size).peekable();
        let mut count = 0u64;
        let mut batch = Vec::with_capacity(BATCH);
        while stream.peek().is_some() {
            let allowed = match config.budget {
                Some(b) => (b - scanned).min(BATCH as u64) as usize,
                None => BATCH,
            };
            if allowed == 0 {
                return Err(Error::BudgetExceeded {
                    budget: config.budget.unwrap_or(0),
                    scanned,
                    reached_size: size,
                });
            }
            batch.clear();
            batch.extend(stream.by_ref().take(allowed));
            let hit = scanner.find_first(&batch, &probe);
            let examined = hit.as_ref().map_or(batch.len(), |(i, _)| i + 1) as u64;
            count += examined;
            scanned += examined;
            if let Some((i, witness)) = hit {
                verify_witness(&witness, config, is_grover, size)?;
                result.scans.push(SizeScan {
                    size,
                    candidates: count,
                });
                result.found = Some((batch.swap_remove(i), witness));
                result.certified_min = Some(size);
                return Ok(result);
            }
        }
        result.scans.push(SizeScan {
            size,
            candidates: count,
        });
    }
    Ok(result)
}

fn verify_witness(
    witness: &WaveFunction,
    config: &SearchConfig,
    is_grover: bool,
    size: usize,
) -> Result<()> {
    let rejected = Error::WitnessRejected { size };
    if witness.len() != size
        || !eigen::is_eigenstate(witness, config.lambda, &config.coin, config.shift)?
    {
        return Err(rejected);
    }
    if is_grover {
        let gamma = eigen::check_gamma_relations(witness, config.lambda, config.shift);
        let lemmas = eigen::check_lemma_structure(witness, config.lambda, config.shift)?;
        if !gamma.passed() || !lemmas.passed() {
            return Err(rejected);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(list: &[&[i64]]) -> Vec<LatticePoint> {
        list.iter().map(|p| LatticePoint::new(p.to_vec())).collect()
    }

    #[test]
    fn modular_system_is_the_reduced_exact_system() {
        let coin = grover_coin(3).unwrap();
        for shift in ShiftKind::ALL {
            for lambda in Eigenvalue::ALL {
                for cand in enumerate_supports(3, 1, 3).step_by(37) {
                    let exact = eigen_system(&cand, lambda, &coin, shift).unwrap();
                    let (m, rows) = eigen_system_mod_prime(&cand, lambda, &coin, shift).unwrap();
                    assert_eq!(rows, exact.len());
                    let reduced: Vec<u64> = exact
                        .iter()
                        .flatten()
                        .map(|x| linalg::scalar_mod_prime(x).unwrap())
                        .collect();
                    assert_eq!(m, reduced);
                }
            }
        }
    }

    #[test]
    fn candidate_is_canonicalized() {
        let c = SupportCandidate::new(pts(&[&[3, 1], &[2, 5], &[2, 2]])).unwrap();
        assert_eq!(c.points(), pts(&[&[0, 0], &[0, 3], &[1, -1]]).as_slice());
        assert!(SupportCandidate::new(Vec::new()).is_err());
    }

    #[test]
    fn line_pairs_in_radius_one() {
        let got: Vec<_> = enumerate_supports(1, 1, 2).collect();
        let want = vec![
            SupportCandidate::new(pts(&[&[0], &[1]])).unwrap(),
            SupportCandidate::new(pts(&[&[0], &[2]])).unwrap(),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn singletons() {
        let got: Vec<_> = enumerate_supports(2, 1, 1).collect();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].points(), &[LatticePoint::origin(2)]);
    }

    #[test]
    fn empty_streams() {
        assert_eq!(enumerate_supports(2, 1, 0).count(), 0);
        assert_eq!(enumerate_supports(0, 1, 2).count(), 0);
        // Radius zero only holds a single point.
        assert_eq!(enumerate_supports(2, 0, 2).count(), 0);
    }

    #[test]
    fn order_is_lexicographic() {
        let all: Vec<_> = enumerate_supports(2, 1, 3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn lone_site_has_no_eigenstate() {
        let c = SupportCandidate::new(pts(&[&[0]])).unwrap();
        let coin = grover_coin(1).unwrap();
        let basis = eigen_nullspace(&c, Eigenvalue::Plus, &coin, ShiftKind::Moving).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let mut cfg = SearchConfig::grover(2, Eigenvalue::Plus, ShiftKind::Moving, 4, 2).unwrap();
        cfg.budget = Some(5);
        let err = min_support_search(&cfg, &Sequential).unwrap_err();
        assert!(
            matches!(err, Error::BudgetExceeded { scanned: 5, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn coin_size_validated() {
        let mut cfg = SearchConfig::grover(2, Eigenvalue::Plus, ShiftKind::Moving, 4, 2).unwrap();
        cfg.coin = grover_coin(1).unwrap();
        assert!(matches!(
            min_support_search(&cfg, &Sequential),
            Err(Error::CoinSize { .. })
        ));
    }
}
