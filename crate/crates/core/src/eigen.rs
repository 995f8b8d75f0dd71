//! Eigen-equation residuals and structural checks for candidate eigenstates
//! of the Grover walk.
//!
//! The `Γ` relations and lemma checks assume the Grover coin of the state's
//! dimension; [`eigen_residual`] and [`is_stationary_measure`] accept any coin.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::walk::{grover_coin, step, Coin, ShiftKind};
use crate::wave::WaveFunction;

/// The two eigenvalues a finitely supported Grover-walk eigenstate can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eigenvalue {
    Plus,
    Minus,
}

impl Eigenvalue {
    pub const ALL: [Eigenvalue; 2] = [Eigenvalue::Plus, Eigenvalue::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Eigenvalue::Plus => 1,
            Eigenvalue::Minus => -1,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::from_integer(self.sign())
    }

    /// `λ^n` for any integer exponent.
    pub fn pow(self, n: i64) -> i64 {
        match self {
            Eigenvalue::Plus => 1,
            Eigenvalue::Minus if n.rem_euclid(2) == 0 => 1,
            Eigenvalue::Minus => -1,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eigenvalue::Plus => "+1",
            Eigenvalue::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// `λΨ(x-e_k) + Ψ(x) = Γ(x)/d` fails for the component entering from `-e_k`.
    MinusRelation,
    /// The companion relation for the component entering from `+e_k`.
    PlusRelation,
    /// The two relations disagree with each other.
    PairRelation,
    /// A nonzero pair with both axis neighbours' pairs zero.
    IsolatedPair,
    /// The lowest nonzero pair on the line is not of the form `(α, 0)`.
    LowerEndpointShape,
    /// The highest nonzero pair on the line is not of the form `(0, β)`.
    UpperEndpointShape,
    /// Only one site of the line carries the pair.
    DegenerateLine,
    /// Moving shift: another axis' pair vanishes at an endpoint.
    OtherPairVanishes { other_axis: usize },
    /// Flip-flop shift: `Γ` is nonzero at an endpoint.
    EndpointGammaNonzero,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::MinusRelation => f.write_str("relation for the -e_k component fails"),
            ViolationKind::PlusRelation => f.write_str("relation for the +e_k component fails"),
            ViolationKind::PairRelation => f.write_str("pair relation fails"),
            ViolationKind::IsolatedPair => {
                f.write_str("nonzero pair without a nonzero neighbour pair")
            }
            ViolationKind::LowerEndpointShape => {
                f.write_str("lower endpoint is not (alpha, 0) with alpha != 0")
            }
            ViolationKind::UpperEndpointShape => {
                f.write_str("upper endpoint is not (0, beta) with beta != 0")
            }
            ViolationKind::DegenerateLine => {
                f.write_str("pair is nonzero at a single site of the line")
            }
            ViolationKind::OtherPairVanishes { other_axis } => {
                write!(f, "pair of axis {other_axis} vanishes at an endpoint")
            }
            ViolationKind::EndpointGammaNonzero => f.write_str("gamma is nonzero at an endpoint"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub point: LatticePoint,
    pub axis: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {} axis {}: {}", self.point, self.axis, self.kind)
    }
}

/// Extremal sites of a chirality pair along one axis line, with the
/// endpoint scalars `α` (lower) and `β` (upper).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisEndpoints {
    pub axis: usize,
    pub lower: LatticePoint,
    pub upper: LatticePoint,
    pub alpha: Scalar,
    pub beta: Scalar,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub violations: Vec<Violation>,
    pub endpoints: Vec<AxisEndpoints>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: LemmaReport) {
        self.violations.extend(other.violations);
        self.endpoints.extend(other.endpoints);
    }

    fn flag(&mut self, point: &LatticePoint, axis: usize, kind: ViolationKind) {
        self.violations.push(Violation {
            point: point.clone(),
            axis,
            kind,
        });
    }
}

/// `U_A ψ - λψ`; zero exactly when `ψ` is an eigenvector (or zero).
pub fn eigen_residual(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Result<WaveFunction> {
    let stepped = step(psi, coin, shift)?;
    let lam = lambda.to_scalar();
    let minus_one = -Scalar::one();
    let scaled = psi.scale(&lam);
    WaveFunction::linear_combine([(&Scalar::one(), &stepped), (&minus_one, &scaled)])
}

pub fn is_eigenstate(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    coin: &Coin,
    shift: ShiftKind,
) -> Result<bool> {
    Ok(eigen_residual(psi, lambda, coin, shift)?.is_zero())
}

/// Checks the `Γ`-reduced eigen-system of the Grover walk at every point of
/// the unit-neighbourhood closure of the support. Outside the closure every
/// term vanishes, so passing is equivalent to a zero residual.
pub fn check_gamma_relations(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    shift: ShiftKind,
) -> LemmaReport {
    let d = psi.dim();
    let inv_d = Scalar::real(Rational::new(1, d as i64));
    let lam = lambda.to_scalar();
    let mut report = LemmaReport::default();
    for x in psi.neighborhood_closure() {
        let g = &psi.gamma(&x).expect("closure points share the dimension") * &inv_d;
        for k in 0..d {
            let lo = 2 * k;
            let hi = 2 * k + 1;
            // Moving: λΨ^lo(x-e_k) + Ψ^lo(x) = Γ/d and λΨ^hi(x+e_k) + Ψ^hi(x) = Γ/d.
            // Flip-flop exchanges the on-site terms.
            let (own_minus, own_plus) = match shift {
                ShiftKind::Moving => (psi.amplitude(&x, lo), psi.amplitude(&x, hi)),
                ShiftKind::FlipFlop => (psi.amplitude(&x, hi), psi.amplitude(&x, lo)),
            };
            let minus_side = &(&lam * &psi.amplitude(&x.offset(k, -1), lo)) + &own_minus;
            let plus_side = &(&lam * &psi.amplitude(&x.offset(k, 1), hi)) + &own_plus;
            if minus_side != g {
                report.flag(&x, k, ViolationKind::MinusRelation);
            }
            if plus_side != g {
                report.flag(&x, k, ViolationKind::PlusRelation);
            }
            if minus_side != plus_side {
                report.flag(&x, k, ViolationKind::PairRelation);
            }
        }
    }
    report
}

/// Every site with a nonzero pair on axis `k` has a nonzero pair at
/// `x - e_k` or `x + e_k`. Holds for every finitely supported eigenstate
/// under either shift.
pub fn check_neighbor_property(psi: &WaveFunction) -> LemmaReport {
    let mut report = LemmaReport::default();
    for x in psi.points() {
        for k in 0..psi.dim() {
            if psi.pair_is_zero(x, k) {
                continue;
            }
            if psi.pair_is_zero(&x.offset(k, -1), k) && psi.pair_is_zero(&x.offset(k, 1), k) {
                report.flag(x, k, ViolationKind::IsolatedPair);
            }
        }
    }
    report
}

fn require_grover_eigenstate(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    shift: ShiftKind,
) -> Result<()> {
    let coin = grover_coin(psi.dim())?;
    if psi.is_zero() || !is_eigenstate(psi, lambda, &coin, shift)? {
        return Err(Error::NotEigenstate);
    }
    Ok(())
}

/// Endpoint structure of the pair of axis `axis` along the line through `x`:
/// the lowest nonzero pair must be `(α, 0)`, the highest `(0, β)`, both
/// nonzero and at distinct sites. Under the moving shift every other axis'
/// pair must be nonzero at both endpoints; under the flip-flop shift `Γ`
/// must vanish there.
///
/// Fails with [`Error::NotEigenstate`] unless `psi` is a nonzero Grover
/// eigenstate for `(lambda, shift)`.
pub fn check_endpoint_structure(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    shift: ShiftKind,
    axis: usize,
    x: &LatticePoint,
) -> Result<LemmaReport> {
    if x.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: x.dim(),
        });
    }
    if axis >= psi.dim() {
        return Err(Error::InvalidAxis {
            axis,
            dim: psi.dim(),
        });
    }
    require_grover_eigenstate(psi, lambda, shift)?;
    endpoint_structure_unchecked(psi, shift, axis, x)
}

fn endpoint_structure_unchecked(
    psi: &WaveFunction,
    shift: ShiftKind,
    axis: usize,
    x: &LatticePoint,
) -> Result<LemmaReport> {
    let line = x.project_out(axis);
    let mut on_line = psi
        .points()
        .filter(|p| p.project_out(axis) == line && !psi.pair_is_zero(p, axis));
    let first = on_line.next().ok_or_else(|| Error::PairVanishes {
        axis,
        point: x.clone(),
    })?;
    // Points iterate in lexicographic order, and along a line only one
    // coordinate varies, so the first and last hits are the extremes.
    let lower = first.clone();
    let upper = on_line.last().unwrap_or(first).clone();

    let mut report = LemmaReport::default();
    let (alpha, lower_hi) = psi.pair(&lower, axis);
    let (upper_lo, beta) = psi.pair(&upper, axis);
    if lower == upper {
        report.flag(&lower, axis, ViolationKind::DegenerateLine);
    }
    if alpha.is_zero() || !lower_hi.is_zero() {
        report.flag(&lower, axis, ViolationKind::LowerEndpointShape);
    }
    if beta.is_zero() || !upper_lo.is_zero() {
        report.flag(&upper, axis, ViolationKind::UpperEndpointShape);
    }
    for end in [&lower, &upper] {
        match shift {
            ShiftKind::Moving => {
                for other in (0..psi.dim()).filter(|&l| l != axis) {
                    if psi.pair_is_zero(end, other) {
                        report.flag(
                            end,
                            axis,
                            ViolationKind::OtherPairVanishes { other_axis: other },
                        );
                    }
                }
            }
            ShiftKind::FlipFlop => {
                if !psi.gamma(end)?.is_zero() {
                    report.flag(end, axis, ViolationKind::EndpointGammaNonzero);
                }
            }
        }
    }
    report.endpoints.push(AxisEndpoints {
        axis,
        lower,
        upper,
        alpha,
        beta,
    });
    Ok(report)
}

/// Runs the neighbour property and the endpoint check on every axis line
/// that carries a nonzero pair.
pub fn check_lemma_structure(
    psi: &WaveFunction,
    lambda: Eigenvalue,
    shift: ShiftKind,
) -> Result<LemmaReport> {
    require_grover_eigenstate(psi, lambda, shift)?;
    let mut report = check_neighbor_property(psi);
    let mut lines = BTreeSet::new();
    for x in psi.points() {
        for k in 0..psi.dim() {
            if !psi.pair_is_zero(x, k) && lines.insert((k, x.project_out(k))) {
                report.merge(endpoint_structure_unchecked(psi, shift, k, x)?);
            }
        }
    }
    Ok(report)
}

/// `φ(U^n ψ) = φ(ψ)` for every `n` in `1..=n_max`.
pub fn is_stationary_measure(
    psi: &WaveFunction,
    coin: &Coin,
    shift: ShiftKind,
    n_max: usize,
) -> Result<bool> {
    if psi.is_zero() {
        return Err(Error::ZeroState);
    }
    let target = psi.to_measure();
    let mut cur = psi.clone();
    for _ in 0..n_max {
        cur = step(&cur, coin, shift)?;
        if cur.to_measure() != target {
            return Ok(false);
        }
    }
    Ok(true)
}
