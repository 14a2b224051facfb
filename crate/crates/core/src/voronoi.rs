//! Voronoi means of orthoplex Gaussian mixtures.
//!
//! For the mixture of `2d` unit-variance spherical Gaussians centered at
//! `c * (+-e_i)`, `alpha_d(c)` is the first coordinate of the conditional
//! mean over the Voronoi cell of `e_1`. Symmetry collapses the `d`-fold
//! integral to
//!
//! ```text
//! alpha_d(c) = int_0^inf x (phi(x - c) + phi(x + c)) erf(x/sqrt2)^(d-1) dx
//!            + (2d - 2) int_0^inf x phi(x) (Phi(x - c) - Phi(-x - c)) erf(x/sqrt2)^(d-2) dx
//! ```
//!
//! with `phi`, `Phi` the standard normal density and distribution function.

use std::io::Write;

use faer::Mat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::erf::{erf, erfc};

use crate::error::{Error, Result};
use crate::evaluation::center_error;
use crate::mixture::{make_orthoplex, sample_mixture, DistributionKind, MixtureSpec};
use crate::postprocess::best_of_kmeanspp;
use crate::quadrature::integrate;

/// Integration cutoff, in standard deviations beyond the farthest center.
const TAIL: f64 = 12.0;
const QUAD_TOL: f64 = 1e-12;
const DEFAULT_PANELS: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMethod {
    Quadrature,
    MonteCarlo,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaQuery {
    pub d: usize,
    /// Center scale: components sit at `c * (+-e_i)`.
    pub c: f64,
    /// Entrywise standard deviation of every component.
    pub sigma: f64,
    pub method: AlphaMethod,
    /// Panel budget for quadrature, sample count for Monte Carlo.
    pub samples_or_nodes: usize,
    /// Monte Carlo only.
    pub seed: u64,
}

impl AlphaQuery {
    pub fn quadrature(d: usize, c: f64) -> Self {
        AlphaQuery {
            d,
            c,
            sigma: 1.0,
            method: AlphaMethod::Quadrature,
            samples_or_nodes: DEFAULT_PANELS,
            seed: 0,
        }
    }

    pub fn monte_carlo(d: usize, c: f64, samples: usize, seed: u64) -> Self {
        AlphaQuery {
            d,
            c,
            sigma: 1.0,
            method: AlphaMethod::MonteCarlo,
            samples_or_nodes: samples,
            seed,
        }
    }

    pub fn with_sigma(self, sigma: f64) -> Self {
        AlphaQuery { sigma, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.d < 1 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        if !(self.c >= 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidArgument(format!("c must be finite and nonnegative, got {}", self.c)));
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidArgument(format!("sigma must be positive, got {}", self.sigma)));
        }
        if self.samples_or_nodes == 0 {
            return Err(Error::InvalidArgument("samples_or_nodes must be positive".into()));
        }
        Ok(())
    }
}

/// A numerical estimate with its error bar (quadrature bound or standard error).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Conditional mean of the first coordinate over the Voronoi cell of `e_1`,
/// for centers `c * (+-e_i)` and noise `sigma`: `sigma * alpha_d(c / sigma)`.
pub fn alpha(query: &AlphaQuery) -> Result<Estimate> {
    query.validate()?;
    let scaled = query.c / query.sigma;
    let unit = match query.method {
        AlphaMethod::Quadrature => alpha_quadrature(query.d, scaled, query.samples_or_nodes)?,
        AlphaMethod::MonteCarlo => alpha_monte_carlo(query.d, scaled, query.samples_or_nodes, query.seed)?,
    };
    Ok(Estimate {
        value: query.sigma * unit.value,
        error: query.sigma * unit.error,
    })
}

fn std_normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

fn alpha_quadrature(d: usize, c: f64, max_panels: usize) -> Result<Estimate> {
    let upper = c + TAIL;
    // Unit panels wherever either integrand carries mass: near the origin
    // (the cross-center terms) and around c (the on-axis terms).
    let mut breaks: Vec<f64> = (0..=TAIL as usize).map(|i| i as f64).collect();
    let lo = (c - TAIL).max(0.0);
    let steps = (upper - lo).ceil() as usize;
    breaks.extend((0..=steps).map(|i| (lo + i as f64).min(upper)));
    breaks.push(upper);
    breaks.retain(|&b| b <= upper);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let powf = |x: f64, p: usize| erf(x / std::f64::consts::SQRT_2).powi(p as i32);
    let on_axis = |x: f64| x * (std_normal_pdf(x - c) + std_normal_pdf(x + c)) * powf(x, d - 1);
    let a = integrate(on_axis, &breaks, QUAD_TOL, QUAD_TOL, max_panels)?;
    if d == 1 {
        return Ok(Estimate { value: a.value, error: a.error });
    }
    let off_axis =
        |x: f64| x * std_normal_pdf(x) * (std_normal_cdf(x - c) - std_normal_cdf(-x - c)) * powf(x, d - 2);
    let b = integrate(off_axis, &breaks, QUAD_TOL, QUAD_TOL, max_panels)?;
    let mult = (2 * d - 2) as f64;
    Ok(Estimate {
        value: a.value + mult * b.value,
        error: a.error + mult * b.error,
    })
}

/// Index of the Voronoi cell of the unit orthoplex containing `x`:
/// `j` for `+e_j`, `d + j` for `-e_j`, with `j = argmax |x_j|` (lowest index on ties).
pub fn orthoplex_cell(x: &[f64]) -> usize {
    let mut j = 0;
    for i in 1..x.len() {
        if x[i].abs() > x[j].abs() {
            j = i;
        }
    }
    if x[j] > 0.0 {
        j
    } else {
        x.len() + j
    }
}

fn alpha_monte_carlo(d: usize, c: f64, samples: usize, seed: u64) -> Result<Estimate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; d];
    let (mut count, mut sum, mut sum_sq) = (0usize, 0.0, 0.0);
    for _ in 0..samples {
        let t = rng.random_range(0..2 * d);
        for v in x.iter_mut() {
            *v = rng.sample(StandardNormal);
        }
        if t < d {
            x[t] += c;
        } else {
            x[t - d] -= c;
        }
        if orthoplex_cell(&x) == 0 {
            count += 1;
            sum += x[0];
            sum_sq += x[0] * x[0];
        }
    }
    mean_and_stderr(count, sum, sum_sq).ok_or(Error::EmptyCell)
}

fn mean_and_stderr(count: usize, sum: f64, sum_sq: f64) -> Option<Estimate> {
    if count == 0 {
        return None;
    }
    let n = count as f64;
    let mean = sum / n;
    let var = if count > 1 { ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0) } else { 0.0 };
    Some(Estimate {
        value: mean,
        error: (var / n).sqrt(),
    })
}

/// Monte Carlo estimate of `E ||g||_inf` for `g ~ N(0, I_d)`, with its standard error.
pub fn expected_max_abs_gaussian(d: usize, samples: usize, seed: u64) -> Result<Estimate> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for _ in 0..samples {
        let mut m = 0.0f64;
        for _ in 0..d {
            m = m.max(rng.sample::<f64, _>(StandardNormal).abs());
        }
        sum += m;
        sum_sq += m * m;
    }
    Ok(mean_and_stderr(samples, sum, sum_sq).expect("samples > 0"))
}

/// Voronoi means `sigma * alpha_d(1 / sigma) * gamma_t` of the unit-orthoplex mixture.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoplexVoronoiMeans {
    /// The common scale factor multiplying each `gamma_t`.
    pub coefficient: Estimate,
    /// `2d` vectors in orthoplex order `e_1, ..., e_d, -e_1, ..., -e_d`.
    pub means: Vec<Vec<f64>>,
}

pub fn voronoi_means_orthoplex(d: usize, sigma: f64, method: AlphaMethod, budget: usize, seed: u64) -> Result<OrthoplexVoronoiMeans> {
    let q = AlphaQuery {
        d,
        c: 1.0,
        sigma,
        method,
        samples_or_nodes: budget,
        seed,
    };
    let coefficient = alpha(&q)?;
    let gamma = make_orthoplex(d)?;
    let means = (0..2 * d)
        .map(|t| (0..d).map(|i| coefficient.value * gamma[(i, t)]).collect())
        .collect();
    Ok(OrthoplexVoronoiMeans { coefficient, means })
}

fn orthoplex_centers(d: usize) -> Result<Vec<Vec<f64>>> {
    let g = make_orthoplex(d)?;
    Ok((0..2 * d).map(|t| (0..d).map(|i| g[(i, t)]).collect()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VoronoiExperimentSpec {
    pub d: usize,
    pub sigma: f64,
    pub n_per_center: usize,
    pub trials: usize,
    pub kmeanspp_restarts: usize,
    pub seed: u64,
}

impl VoronoiExperimentSpec {
    pub fn new(d: usize, sigma: f64, n_per_center: usize, trials: usize, seed: u64) -> Self {
        VoronoiExperimentSpec {
            d,
            sigma,
            n_per_center,
            trials,
            kmeanspp_restarts: 10,
            seed,
        }
    }
}

/// One centroid of one trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    pub n: usize,
    pub centroid_idx: usize,
    pub coords: Vec<f64>,
    pub err_to_voronoi: f64,
    pub err_to_center: f64,
}

/// Matched max errors of one trial's best centroids.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub kmeans_value: f64,
    pub max_err_to_voronoi: f64,
    pub max_err_to_center: f64,
}

#[derive(Clone, Debug)]
pub struct VoronoiExperiment {
    pub spec: VoronoiExperimentSpec,
    pub voronoi_means: OrthoplexVoronoiMeans,
    pub rows: Vec<TrialRow>,
    pub trials: Vec<TrialSummary>,
}

const LLOYD_MAX_ITER: usize = 300;

impl VoronoiExperiment {
    pub fn median_err_to_voronoi(&self) -> f64 {
        median(self.trials.iter().map(|t| t.max_err_to_voronoi).collect())
    }

    pub fn median_err_to_center(&self) -> f64 {
        median(self.trials.iter().map(|t| t.max_err_to_center).collect())
    }

    /// Header `trial,n,centroid_idx,x0,...,err_to_voronoi,err_to_center`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header = vec!["trial".to_string(), "n".into(), "centroid_idx".into()];
        header.extend((0..self.spec.d).map(|i| format!("x{i}")));
        header.push("err_to_voronoi".into());
        header.push("err_to_center".into());
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec = vec![r.trial.to_string(), r.n.to_string(), r.centroid_idx.to_string()];
            rec.extend(r.coords.iter().map(f64::to_string));
            rec.push(r.err_to_voronoi.to_string());
            rec.push(r.err_to_center.to_string());
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Per trial: sample `n_per_center` points around each unit-orthoplex
/// vertex with noise `sigma`, keep the best of `kmeanspp_restarts`
/// k-means++/Lloyd runs, and measure its centroids against the Voronoi
/// means and against the Gaussian centers. Trials run in parallel; each
/// uses the seed `derive_seed(seed, trial)`, so output is independent of
/// scheduling.
pub fn run_voronoi_experiment(spec: &VoronoiExperimentSpec) -> Result<VoronoiExperiment> {
    if spec.d < 1 || spec.n_per_center < 1 || spec.trials < 1 || spec.kmeanspp_restarts < 1 {
        return Err(Error::InvalidArgument("experiment counts must all be at least 1".into()));
    }
    let voronoi_means = voronoi_means_orthoplex(spec.d, spec.sigma, AlphaMethod::Quadrature, DEFAULT_PANELS, 0)?;
    let centers = orthoplex_centers(spec.d)?;
    let gamma = make_orthoplex(spec.d)?;
    let k = 2 * spec.d;

    let per_trial: Vec<Result<(TrialSummary, Vec<TrialRow>)>> = (0..spec.trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = crate::derive_seed(spec.seed, trial as u64);
            let mix = MixtureSpec::from_centers(&gamma, spec.sigma, spec.n_per_center, DistributionKind::Gaussian, trial_seed);
            let cloud = sample_mixture(&mix)?;
            let best = best_of_kmeanspp(
                &cloud,
                k,
                spec.kmeanspp_restarts,
                crate::derive_seed(trial_seed, u64::MAX),
                LLOYD_MAX_ITER,
            )?;
            let to_v = center_error(&best.centers, &voronoi_means.means)?;
            let to_c = center_error(&best.centers, &centers)?;
            let rows = best
                .centers
                .iter()
                .enumerate()
                .map(|(i, c)| TrialRow {
                    trial,
                    n: spec.n_per_center,
                    centroid_idx: i,
                    coords: c.clone(),
                    err_to_voronoi: crate::mixture::euclidean(c, &voronoi_means.means[to_v.permutation[i]]),
                    err_to_center: crate::mixture::euclidean(c, &centers[to_c.permutation[i]]),
                })
                .collect();
            Ok((
                TrialSummary {
                    trial,
                    kmeans_value: best.kmeans_value,
                    max_err_to_voronoi: to_v.max_err,
                    max_err_to_center: to_c.max_err,
                },
                rows,
            ))
        })
        .collect();

    let mut rows = Vec::new();
    let mut trials = Vec::new();
    for r in per_trial {
        let (s, mut rs) = r?;
        trials.push(s);
        rows.append(&mut rs);
    }
    Ok(VoronoiExperiment {
        spec: *spec,
        voronoi_means,
        rows,
        trials,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub d: usize,
    pub c: f64,
    pub alpha: f64,
    pub err: f64,
}

pub fn write_alpha_csv<W: Write>(rows: &[AlphaRow], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    pub rows: Vec<AlphaRow>,
    pub baseline: Estimate,
    /// Grid points where `alpha_d(c) < alpha_d(0) - error`.
    pub violations: Vec<f64>,
    /// Whether the tabulated values are nondecreasing in grid order (reported, not asserted).
    pub nondecreasing: bool,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tabulates `alpha_d` on `grid` by quadrature and checks `alpha_d(c) >= alpha_d(0)`
/// up to the combined quadrature error.
pub fn check_alpha_monotonicity(d: usize, grid: &[f64]) -> Result<MonotonicityReport> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty c grid".into()));
    }
    let baseline = alpha(&AlphaQuery::quadrature(d, 0.0))?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut violations = Vec::new();
    for &c in grid {
        let e = alpha(&AlphaQuery::quadrature(d, c))?;
        if e.value < baseline.value - (e.error + baseline.error) {
            violations.push(c);
        }
        rows.push(AlphaRow { d, c, alpha: e.value, err: e.error });
    }
    let nondecreasing = rows.windows(2).all(|w| w[1].alpha >= w[0].alpha - (w[0].err + w[1].err));
    Ok(MonotonicityReport {
        rows,
        baseline,
        violations,
        nondecreasing,
    })
}

/// Centers of the unit orthoplex in `R^d` as an owned matrix; handy for examples.
pub fn orthoplex_matrix(d: usize) -> Result<Mat<f64>> {
    make_orthoplex(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_normal_mean() {
        let e = alpha(&AlphaQuery::quadrature(1, 0.0)).unwrap();
        assert!((e.value - (2.0 / std::f64::consts::PI).sqrt()).abs() < 1e-10);
        assert!(e.error < 1e-10);
    }

    #[test]
    fn alpha_two_at_one() {
        let e = alpha(&AlphaQuery::quadrature(2, 1.0)).unwrap();
        assert!((e.value - 1.39928).abs() < 1e-3, "{}", e.value);
    }

    #[test]
    fn two_dimensional_zero_center_closed_form() {
        // E max(|g1|, |g2|) = 2 / sqrt(pi).
        let e = alpha(&AlphaQuery::quadrature(2, 0.0)).unwrap();
        assert!((e.value - 2.0 / std::f64::consts::PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn sigma_rescaling() {
        let a = alpha(&AlphaQuery::quadrature(3, 2.0).with_sigma(0.5)).unwrap();
        let b = alpha(&AlphaQuery::quadrature(3, 4.0)).unwrap();
        assert!((a.value - 0.5 * b.value).abs() < 1e-12);
    }

    #[test]
    fn far_centers_are_found() {
        // The on-axis bump sits at x = c; unit panels must catch it.
        let e = alpha(&AlphaQuery::quadrature(2, 1000.0)).unwrap();
        assert!((e.value - 1000.0).abs() < 1e-6, "{}", e.value);
    }

    #[test]
    fn query_validation() {
        assert!(alpha(&AlphaQuery::quadrature(0, 1.0)).is_err());
        assert!(alpha(&AlphaQuery::quadrature(2, -1.0)).is_err());
        assert!(alpha(&AlphaQuery::quadrature(2, 1.0).with_sigma(0.0)).is_err());
        assert!(expected_max_abs_gaussian(2, 0, 1).is_err());
    }

    #[test]
    fn tiny_sample_budget_can_miss_the_cell() {
        // With one sample the draw lands in cell 0 only 1/(2d) of the time.
        let misses = (0..20)
            .filter(|&s| matches!(alpha(&AlphaQuery::monte_carlo(4, 1.0, 1, s)), Err(Error::EmptyCell)))
            .count();
        assert!(misses > 0);
    }

    #[test]
    fn cell_membership() {
        assert_eq!(orthoplex_cell(&[2.0, 1.0]), 0);
        assert_eq!(orthoplex_cell(&[0.5, -1.0]), 3);
        assert_eq!(orthoplex_cell(&[-3.0, 1.0, 2.0]), 3);
        assert_eq!(orthoplex_cell(&[1.0, 1.0]), 0);
    }

    #[test]
    fn voronoi_means_are_scaled_orthoplex() {
        let v = voronoi_means_orthoplex(2, 1.0, AlphaMethod::Quadrature, 4000, 0).unwrap();
        let a = v.coefficient.value;
        assert_eq!(v.means, vec![vec![a, 0.0], vec![0.0, a], vec![-a, 0.0], vec![0.0, -a]]);
        for i in 0..2 {
            assert_eq!(v.means.iter().map(|m| m[i]).sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
