//! The k-means semidefinite relaxation
//!
//! ```text
//! minimize Tr(DX)  subject to  Tr(X) = k,  X1 = 1,  X >= 0,  X PSD
//! ```
//!
//! solved with a consensus ADMM over three constraint sets: the affine set
//! `{X = X^T, Tr X = k, X1 = 1}`, the nonnegative orthant and the PSD cone.
//! Each set has a cheap exact projection (a closed-form rank-two correction,
//! an entrywise clamp, and an eigenvalue clamp respectively).

use std::io::Write;

use faer::{Mat, MatRef, Side};

use crate::error::{Error, Result};
use crate::mixture::PointCloud;

/// A symmetric cost matrix the relaxation can be solved against.
pub trait CostMatrix {
    fn matrix(&self) -> MatRef<'_, f64>;
}

impl CostMatrix for Mat<f64> {
    fn matrix(&self) -> MatRef<'_, f64> {
        self.as_ref()
    }
}

/// `D_ij = ||x_i - x_j||^2`.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    entries: Mat<f64>,
}

impl DistanceMatrix {
    /// Wraps an existing matrix after checking it is a valid squared-distance table.
    pub fn from_matrix(entries: Mat<f64>) -> Result<Self> {
        let n = entries.nrows();
        if entries.ncols() != n {
            return Err(Error::DimensionMismatch {
                context: "distance matrix",
                expected: n,
                found: entries.ncols(),
            });
        }
        for j in 0..n {
            for i in 0..n {
                let v = entries[(i, j)];
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if v < 0.0 {
                    return Err(Error::InvalidArgument(format!("negative distance at ({i}, {j})")));
                }
                if v != entries[(j, i)] {
                    return Err(Error::NotSymmetric((v - entries[(j, i)]).abs()));
                }
            }
            if entries[(j, j)] != 0.0 {
                return Err(Error::InvalidArgument(format!("nonzero diagonal at {j}")));
            }
        }
        Ok(DistanceMatrix { entries })
    }

    pub fn entries(&self) -> &Mat<f64> {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    pub fn max_entry(&self) -> f64 {
        max_abs(self.entries.as_ref())
    }

    /// Dense row-major CSV, shortest round-trip decimals.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        write_matrix_csv(self.entries.as_ref(), writer)
    }
}

impl CostMatrix for DistanceMatrix {
    fn matrix(&self) -> MatRef<'_, f64> {
        self.entries.as_ref()
    }
}

pub fn squared_distance_matrix(cloud: &PointCloud) -> Result<DistanceMatrix> {
    let n = cloud.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty point cloud".into()));
    }
    let p = cloud.data();
    let m = cloud.dim();
    let mut d = Mat::<f64>::zeros(n, n);
    for b in 0..n {
        let xb = p.col_as_slice(b);
        for a in b + 1..n {
            let xa = p.col_as_slice(a);
            let mut s = 0.0;
            for i in 0..m {
                let t = xa[i] - xb[i];
                s += t * t;
            }
            d[(a, b)] = s;
            d[(b, a)] = s;
        }
    }
    Ok(DistanceMatrix { entries: d })
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SolverConfig {
    /// Feasibility and stagnation tolerance.
    pub tol: f64,
    pub max_iter: usize,
    /// Initial ADMM penalty; rescaled adaptively.
    pub rho: f64,
    /// Over-relaxation factor in `[1, 2)`.
    pub over_relaxation: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-6,
            max_iter: 20_000,
            rho: 1.0,
            over_relaxation: 1.6,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidArgument("max_iter must be positive".into()));
        }
        if !(self.rho > 0.0) {
            return Err(Error::InvalidArgument(format!("rho must be positive, got {}", self.rho)));
        }
        if !(1.0..2.0).contains(&self.over_relaxation) {
            return Err(Error::InvalidArgument(format!(
                "over_relaxation must lie in [1, 2), got {}",
                self.over_relaxation
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Converged,
    MaxIter,
    NumericalFailure,
}

/// Constraint violations of a returned iterate.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Residuals {
    /// `|Tr(X) - k|`
    pub trace_gap: f64,
    /// `max_i |(X1 - 1)_i|`
    pub rowsum_gap: f64,
    /// `max(0, -min_ij X_ij)`
    pub neg_entry: f64,
    /// `max(0, -lambda_min(X))`
    pub neg_eig: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.trace_gap.max(self.rowsum_gap).max(self.neg_entry).max(self.neg_eig)
    }

    /// Evaluates all four residuals of `x` for trace target `k`.
    pub fn of(x: MatRef<'_, f64>, k: usize) -> Result<Self> {
        let n = x.nrows();
        let mut trace = 0.0;
        let mut rowsum_gap = 0.0f64;
        let mut min_entry = f64::INFINITY;
        for i in 0..n {
            trace += x[(i, i)];
            let mut s = 0.0;
            for j in 0..n {
                s += x[(i, j)];
                min_entry = min_entry.min(x[(i, j)]);
            }
            rowsum_gap = rowsum_gap.max((s - 1.0).abs());
        }
        let (lmin, _) = eigenvalue_range_unchecked(x)?;
        Ok(Residuals {
            trace_gap: (trace - k as f64).abs(),
            rowsum_gap,
            neg_entry: (-min_entry).max(0.0),
            neg_eig: (-lmin).max(0.0),
        })
    }
}

/// Penalty and scaled duals, enough to resume a solve.
#[derive(Clone, Debug)]
struct AdmmState {
    y: Mat<f64>,
    z: Mat<f64>,
    u: Mat<f64>,
    w: Mat<f64>,
    rho: f64,
}

#[derive(Clone, Debug)]
pub struct SdpSolution {
    pub x: Mat<f64>,
    /// `Tr(DX)` of the returned `x`, in the units of the cost matrix.
    pub objective: f64,
    pub residuals: Residuals,
    pub iterations: usize,
    pub status: SolveStatus,
    state: Option<AdmmState>,
}

impl SdpSolution {
    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    /// Half the objective: a lower bound on the k-means value when the cost is `D`.
    pub fn certificate(&self) -> f64 {
        0.5 * self.objective
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        write_matrix_csv(self.x.as_ref(), writer)
    }
}

/// Solves the relaxation for `cost` (normally a [`DistanceMatrix`]).
pub fn solve_kmeans_sdp<C: CostMatrix + ?Sized>(cost: &C, k: usize, cfg: &SolverConfig) -> Result<SdpSolution> {
    solve_inner(cost.matrix(), k, cfg, None)
}

/// Resumes from a previous solution of the same problem (same cost, same k).
pub fn solve_kmeans_sdp_warm<C: CostMatrix + ?Sized>(
    cost: &C,
    k: usize,
    cfg: &SolverConfig,
    previous: &SdpSolution,
) -> Result<SdpSolution> {
    if previous.n() != cost.matrix().nrows() {
        return Err(Error::DimensionMismatch {
            context: "warm start",
            expected: cost.matrix().nrows(),
            found: previous.n(),
        });
    }
    solve_inner(cost.matrix(), k, cfg, Some(previous))
}

/// Solves repeatedly with each tolerance in `tols`, warm starting every
/// stage from the previous one. Returns all stage solutions.
pub fn solve_kmeans_sdp_refining<C: CostMatrix + ?Sized>(
    cost: &C,
    k: usize,
    base: &SolverConfig,
    tols: &[f64],
) -> Result<Vec<SdpSolution>> {
    let mut out: Vec<SdpSolution> = Vec::with_capacity(tols.len());
    for &tol in tols {
        let cfg = SolverConfig { tol, ..*base };
        let sol = match out.last() {
            Some(prev) => solve_kmeans_sdp_warm(cost, k, &cfg, prev)?,
            None => solve_kmeans_sdp(cost, k, &cfg)?,
        };
        out.push(sol);
    }
    Ok(out)
}

const ADAPT_EVERY: usize = 10;
const STAGNATION_WINDOW: usize = 100;

fn solve_inner(cost: MatRef<'_, f64>, k: usize, cfg: &SolverConfig, warm: Option<&SdpSolution>) -> Result<SdpSolution> {
    cfg.validate()?;
    let n = cost.nrows();
    if cost.ncols() != n {
        return Err(Error::DimensionMismatch {
            context: "cost matrix",
            expected: n,
            found: cost.ncols(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("empty cost matrix".into()));
    }
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} out of range 1..={n}")));
    }
    let asym = max_asymmetry(cost);
    if asym > 1e-12 * max_abs(cost).max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }

    // Work in units where the cost has unit max entry.
    let scale = {
        let m = max_abs(cost);
        if m > 0.0 && m.is_finite() {
            m
        } else if m == 0.0 {
            1.0
        } else {
            return Err(Error::InvalidArgument("cost matrix has non-finite entries".into()));
        }
    };
    let c = Mat::<f64>::from_fn(n, n, |i, j| 0.5 * (cost[(i, j)] + cost[(j, i)]) / scale);

    if n == 1 {
        let x = Mat::from_fn(1, 1, |_, _| 1.0);
        return finish(cost, x, k, 0, SolveStatus::Converged, None);
    }

    let (mut x, mut st) = match warm.and_then(|w| w.state.clone().map(|s| (w.x.clone(), s))) {
        Some((x, s)) => (x, s),
        None => {
            let x0 = initial_point(n, k);
            let st = AdmmState {
                y: x0.clone(),
                z: x0.clone(),
                u: Mat::zeros(n, n),
                w: Mat::zeros(n, n),
                rho: cfg.rho,
            };
            (x0, st)
        }
    };

    let alpha = cfg.over_relaxation;
    let mut m = Mat::<f64>::zeros(n, n);
    let mut xy = Mat::<f64>::zeros(n, n);
    let mut xz = Mat::<f64>::zeros(n, n);
    let mut history: Vec<f64> = Vec::new();
    let mut status = SolveStatus::MaxIter;
    let mut iterations = 0;

    for it in 1..=cfg.max_iter {
        iterations = it;
        let rho = st.rho;

        // X-update: projection of the averaged consensus target onto the affine set.
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] = 0.5 * (st.y[(i, j)] - st.u[(i, j)] + st.z[(i, j)] - st.w[(i, j)]) - c[(i, j)] / (2.0 * rho);
            }
        }
        project_affine(&mut m, k);
        std::mem::swap(&mut x, &mut m);

        for j in 0..n {
            for i in 0..n {
                xy[(i, j)] = alpha * x[(i, j)] + (1.0 - alpha) * st.y[(i, j)];
                xz[(i, j)] = alpha * x[(i, j)] + (1.0 - alpha) * st.z[(i, j)];
            }
        }

        // Y-update (orthant) and Z-update (PSD cone).
        let mut dy2 = 0.0;
        for j in 0..n {
            for i in 0..n {
                let v = (xy[(i, j)] + st.u[(i, j)]).max(0.0);
                let d = v - st.y[(i, j)];
                dy2 += d * d;
                st.y[(i, j)] = v;
            }
        }
        let mut target = Mat::<f64>::from_fn(n, n, |i, j| xz[(i, j)] + st.w[(i, j)]);
        symmetrize(&mut target);
        let z_new = match project_psd(target.as_ref()) {
            Some(z) => z,
            None => {
                status = SolveStatus::NumericalFailure;
                break;
            }
        };
        let mut dz2 = 0.0;
        for j in 0..n {
            for i in 0..n {
                let d = z_new[(i, j)] - st.z[(i, j)];
                dz2 += d * d;
            }
        }
        st.z = z_new;

        // Dual updates and residuals.
        let mut r_y2 = 0.0;
        let mut r_z2 = 0.0;
        let mut r_y_max = 0.0f64;
        for j in 0..n {
            for i in 0..n {
                st.u[(i, j)] += xy[(i, j)] - st.y[(i, j)];
                st.w[(i, j)] += xz[(i, j)] - st.z[(i, j)];
                let ey = x[(i, j)] - st.y[(i, j)];
                let ez = x[(i, j)] - st.z[(i, j)];
                r_y2 += ey * ey;
                r_z2 += ez * ez;
                r_y_max = r_y_max.max(ey.abs());
            }
        }
        let primal = (r_y2 + r_z2).sqrt();
        let dual = rho * (dy2 + dz2).sqrt();
        if !primal.is_finite() || !dual.is_finite() {
            status = SolveStatus::NumericalFailure;
            break;
        }

        let obj = frobenius_inner(c.as_ref(), x.as_ref());
        history.push(obj);

        let stalled = history.len() > STAGNATION_WINDOW && {
            let old = history[history.len() - 1 - STAGNATION_WINDOW];
            (obj - old).abs() <= cfg.tol * (1.0 + obj.abs())
        };
        let dual_small = dual <= cfg.tol * (n as f64).sqrt();
        // max|X - Y| bounds the most negative entry of X. ||X - Z||_F only
        // bounds the whole negative spectrum, which is loose for large N, so
        // the eigenvalue residual is computed exactly once the rest passes.
        if r_y_max <= cfg.tol && stalled && dual_small && (r_z2.sqrt() <= cfg.tol || it % ADAPT_EVERY == 0) {
            let mut xs = x.clone();
            symmetrize(&mut xs);
            let res = Residuals::of(xs.as_ref(), k);
            match res {
                Ok(r) if r.max() <= cfg.tol => {
                    status = SolveStatus::Converged;
                    break;
                }
                Ok(_) => {}
                Err(_) => {
                    status = SolveStatus::NumericalFailure;
                    break;
                }
            }
        }

        if it % ADAPT_EVERY == 0 {
            if primal > 10.0 * dual {
                st.rho *= 2.0;
                scale_in_place(&mut st.u, 0.5);
                scale_in_place(&mut st.w, 0.5);
            } else if dual > 10.0 * primal {
                st.rho *= 0.5;
                scale_in_place(&mut st.u, 2.0);
                scale_in_place(&mut st.w, 2.0);
            }
        }
    }

    symmetrize(&mut x);
    finish(cost, x, k, iterations, status, Some(st))
}

fn finish(
    cost: MatRef<'_, f64>,
    x: Mat<f64>,
    k: usize,
    iterations: usize,
    mut status: SolveStatus,
    state: Option<AdmmState>,
) -> Result<SdpSolution> {
    let residuals = match Residuals::of(x.as_ref(), k) {
        Ok(r) => r,
        Err(_) => {
            status = SolveStatus::NumericalFailure;
            Residuals {
                trace_gap: f64::NAN,
                rowsum_gap: f64::NAN,
                neg_entry: f64::NAN,
                neg_eig: f64::NAN,
            }
        }
    };
    let objective = frobenius_inner(cost, x.as_ref());
    Ok(SdpSolution {
        x,
        objective,
        residuals,
        iterations,
        status,
        state,
    })
}

/// `a I + b 11^T` with unit row sums and trace `k`; feasible for every constraint.
fn initial_point(n: usize, k: usize) -> Mat<f64> {
    let a = (k as f64 - 1.0) / (n as f64 - 1.0);
    let b = (1.0 - a) / n as f64;
    Mat::from_fn(n, n, |i, j| if i == j { a + b } else { b })
}

/// Euclidean projection of a symmetric matrix onto `{X : Tr X = k, X1 = 1}`.
///
/// The projection is `M + y1^T + 1y^T + tI`; the multipliers solve a
/// two-unknown system once `r = 1 - M1` is known.
pub(crate) fn project_affine(m: &mut Mat<f64>, k: usize) {
    let n = m.nrows();
    let nf = n as f64;
    let mut r = vec![0.0; n];
    let mut trace = 0.0;
    for j in 0..n {
        trace += m[(j, j)];
    }
    for i in 0..n {
        let s: f64 = (0..n).map(|j| m[(i, j)]).sum();
        r[i] = 1.0 - s;
    }
    let r_sum: f64 = r.iter().sum();
    let t = (k as f64 - trace - r_sum / nf) / (nf - 1.0);
    let s = 0.5 * (r_sum / nf - t);
    let y: Vec<f64> = r.iter().map(|ri| (ri - s - t) / nf).collect();
    for j in 0..n {
        for i in 0..n {
            m[(i, j)] += y[i] + y[j];
        }
        m[(j, j)] += t;
    }
}

/// Clamps negative eigenvalues to zero. Reconstructs from whichever side of
/// the spectrum is smaller. `None` on eigendecomposition failure.
pub(crate) fn project_psd(a: MatRef<'_, f64>) -> Option<Mat<f64>> {
    let n = a.nrows();
    let evd = a.self_adjoint_eigen(Side::Lower).ok()?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let lambdas: Vec<f64> = (0..n).map(|i| s[i]).collect();
    if lambdas.iter().any(|l| !l.is_finite()) {
        return None;
    }
    let n_neg = lambdas.iter().filter(|&&l| l < 0.0).count();
    if n_neg == 0 {
        return Some(a.to_owned());
    }
    if n_neg == n {
        return Some(Mat::zeros(n, n));
    }
    let n_pos = n - n_neg;
    if n_pos <= n_neg {
        // Z = sum over positive eigenpairs.
        let b = Mat::<f64>::from_fn(n, n_pos, |i, c| u[(i, n_neg + c)] * lambdas[n_neg + c].sqrt());
        Some(&b * b.transpose())
    } else {
        // Z = A - sum over negative eigenpairs.
        let b = Mat::<f64>::from_fn(n, n_neg, |i, c| u[(i, c)] * (-lambdas[c]).sqrt());
        let neg = &b * b.transpose();
        Some(Mat::from_fn(n, n, |i, j| a[(i, j)] + neg[(i, j)]))
    }
}

/// Extreme eigenvalues of a symmetric matrix.
pub fn eigenvalue_range(x: &Mat<f64>) -> Result<(f64, f64)> {
    if x.nrows() != x.ncols() {
        return Err(Error::DimensionMismatch {
            context: "eigenvalue_range",
            expected: x.nrows(),
            found: x.ncols(),
        });
    }
    let asym = max_asymmetry(x.as_ref());
    if asym > 1e-12 * max_abs(x.as_ref()).max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    eigenvalue_range_unchecked(x.as_ref())
}

fn eigenvalue_range_unchecked(x: MatRef<'_, f64>) -> Result<(f64, f64)> {
    if x.nrows() == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let ev = x.self_adjoint_eigenvalues(Side::Lower).map_err(|_| Error::Eigen)?;
    let lo = ev.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ev.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Eigen);
    }
    Ok((lo, hi))
}

/// Matrix `R` with the block-diagonal partition matrix as its unique SDP
/// optimizer, built from labeled points and their true centers.
#[derive(Clone, Debug)]
pub struct ReferenceMatrix {
    entries: Mat<f64>,
    xi: f64,
}

impl ReferenceMatrix {
    pub fn entries(&self) -> &Mat<f64> {
        &self.entries
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }
}

impl CostMatrix for ReferenceMatrix {
    fn matrix(&self) -> MatRef<'_, f64> {
        self.entries.as_ref()
    }
}

/// Entry `(i, j)` for points `i` in component `a` and `j` in component `b`:
///
/// ```text
/// xi + D_ab^2 / 2 + max(0, D_ab^2 / 2 + 2 <r_i - r_j, g_a - g_b>)
/// ```
///
/// where `D_ab = |g_a - g_b|` and `r_i = x_i - g_a` is the offset of a point
/// from its own center.
pub fn build_reference_matrix(cloud: &PointCloud, centers: &[Vec<f64>], xi: f64) -> Result<ReferenceMatrix> {
    let labels = cloud
        .labels()
        .ok_or_else(|| Error::InvalidArgument("reference matrix needs labeled points".into()))?;
    if !(xi > 0.0) {
        return Err(Error::InvalidArgument(format!("xi must be positive, got {xi}")));
    }
    let m = cloud.dim();
    for (t, c) in centers.iter().enumerate() {
        if c.len() != m {
            return Err(Error::DimensionMismatch {
                context: "reference centers",
                expected: m,
                found: c.len(),
            });
        }
        for (s, other) in centers.iter().enumerate().take(t) {
            if c == other {
                return Err(Error::InvalidArgument(format!("centers {s} and {t} coincide")));
            }
        }
    }
    let k = centers.len();
    if let Some(&l) = labels.iter().find(|&&l| l >= k) {
        return Err(Error::LabelOutOfRange { label: l, k });
    }
    let n = cloud.len();
    let p = cloud.data();
    let offsets: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..m).map(|i| p[(i, j)] - centers[labels[j]][i]).collect())
        .collect();
    let entries = Mat::<f64>::from_fn(n, n, |i, j| {
        let (a, b) = (labels[i], labels[j]);
        if a == b {
            return xi;
        }
        let mut delta2 = 0.0;
        let mut inner = 0.0;
        for c in 0..m {
            let g = centers[a][c] - centers[b][c];
            delta2 += g * g;
            inner += (offsets[i][c] - offsets[j][c]) * g;
        }
        xi + 0.5 * delta2 + (0.5 * delta2 + 2.0 * inner).max(0.0)
    });
    Ok(ReferenceMatrix { entries, xi })
}

/// `sum_i (1/n_t) 1_t 1_t^T` for the given labels.
pub fn block_partition_matrix(labels: &[usize]) -> Mat<f64> {
    let n = labels.len();
    let k = labels.iter().copied().max().map_or(0, |l| l + 1);
    let mut sizes = vec![0usize; k];
    for &l in labels {
        sizes[l] += 1;
    }
    Mat::from_fn(n, n, |i, j| {
        if labels[i] == labels[j] {
            1.0 / sizes[labels[i]] as f64
        } else {
            0.0
        }
    })
}

pub(crate) fn frobenius_inner(a: MatRef<'_, f64>, b: MatRef<'_, f64>) -> f64 {
    let mut s = 0.0;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            s += a[(i, j)] * b[(i, j)];
        }
    }
    s
}

fn max_abs(a: MatRef<'_, f64>) -> f64 {
    let mut m = 0.0f64;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            m = m.max(a[(i, j)].abs());
        }
    }
    m
}

fn max_asymmetry(a: MatRef<'_, f64>) -> f64 {
    let n = a.nrows();
    let mut m = 0.0f64;
    for j in 0..n {
        for i in j + 1..n {
            m = m.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    m
}

fn symmetrize(a: &mut Mat<f64>) {
    let n = a.nrows();
    for j in 0..n {
        for i in j + 1..n {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
}

fn scale_in_place(a: &mut Mat<f64>, f: f64) {
    for j in 0..a.ncols() {
        for v in a.col_as_slice_mut(j) {
            *v *= f;
        }
    }
}

pub(crate) fn write_matrix_csv<W: Write>(a: MatRef<'_, f64>, writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    for i in 0..a.nrows() {
        w.write_record((0..a.ncols()).map(|j| a[(i, j)].to_string()))?;
    }
    w.flush()?;
    Ok(())
}
