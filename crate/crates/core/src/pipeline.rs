//! Relax-and-round clustering and the separation sweep built on it.
//!
//! `relax_and_round` runs: squared distances, SDP, denoising `PX`,
//! rounding to `k` centers, and a final nearest-center assignment.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluation::{center_error, misclassification_rate, EvalReport};
use crate::mixture::{euclidean, make_simplex, sample_mixture, DistributionKind, MixtureSpec, PointCloud};
use crate::postprocess::{
    assign_points, ball_rounding, denoise, label_centroids, popular_locations, ClusteringResult, DenoisedCloud,
    RoundingConfig,
};
use crate::sdp::{solve_kmeans_sdp, squared_distance_matrix, DistanceMatrix, SdpSolution, SolveStatus, SolverConfig};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    /// Max-degree ball rounding, falling back to popular locations when it fails.
    #[default]
    Ball,
    /// The `k` most frequent denoised locations.
    Popular,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub k: usize,
    pub solver: SolverConfig,
    pub rounding: Rounding,
    /// Ball radius. When absent it is a tenth of the smallest distance
    /// between the `k` most popular denoised locations.
    pub epsilon: Option<f64>,
}

impl PipelineConfig {
    pub fn new(k: usize) -> Self {
        PipelineConfig {
            k,
            solver: SolverConfig::default(),
            rounding: Rounding::Ball,
            epsilon: None,
        }
    }
}

/// Relative tolerance (to the cloud diameter) for merging denoised columns.
pub const MERGE_TOL: f64 = 1e-4;

pub struct PipelineOutput<'a> {
    pub clustering: ClusteringResult,
    pub report: EvalReport,
    pub solution: SdpSolution,
    pub distances: DistanceMatrix,
    pub denoised: DenoisedCloud<'a>,
    /// Rounding that produced the centers, after any fallback.
    pub rounding_used: Rounding,
    /// Ball radius actually used, if ball rounding ran.
    pub epsilon: Option<f64>,
    /// Predicted-to-truth label map when the cloud carries labels.
    pub label_permutation: Option<Vec<usize>>,
}

impl PipelineOutput<'_> {
    pub fn converged(&self) -> bool {
        self.solution.status == SolveStatus::Converged
    }
}

/// Runs the relax-and-round procedure on `cloud`.
///
/// A non-converged solve still yields a clustering; callers inspect
/// `solution.status`.
pub fn relax_and_round<'a>(cloud: &'a PointCloud, cfg: &PipelineConfig) -> Result<PipelineOutput<'a>> {
    let k = cfg.k;
    if k < 1 || k > cloud.len() {
        return Err(Error::InvalidArgument(format!("k = {k} out of range 1..={}", cloud.len())));
    }
    if let Some(e) = cfg.epsilon {
        if !(e > 0.0 && e.is_finite()) {
            return Err(Error::InvalidArgument(format!("epsilon must be positive, got {e}")));
        }
    }
    let distances = squared_distance_matrix(cloud)?;
    let solution = solve_kmeans_sdp(&distances, k, &cfg.solver)?;
    let denoised = denoise(cloud, &solution)?;
    let merge_tol = MERGE_TOL * cloud.diameter();

    let (centers, rounding_used, epsilon) = match cfg.rounding {
        Rounding::Popular => (popular_centers(&denoised, k, merge_tol)?, Rounding::Popular, None),
        Rounding::Ball => {
            let popular = popular_locations(&denoised, k, merge_tol);
            let eps = match (cfg.epsilon, &popular) {
                (Some(e), _) => Some(e),
                (None, Ok(locs)) => auto_epsilon(locs.iter().map(|l| l.center.as_slice()).collect()),
                (None, Err(_)) => None,
            };
            let ball = eps.map(|e| ball_rounding(&denoised, &RoundingConfig { epsilon: e, k }));
            match (ball, popular) {
                (Some(Ok(b)), _) => (b.centers, Rounding::Ball, eps),
                (_, Ok(locs)) => (locs.into_iter().map(|l| l.center).collect(), Rounding::Popular, None),
                (Some(Err(e)), Err(_)) => return Err(e),
                (None, Err(e)) => return Err(e),
            }
        }
    };

    let mut clustering = assign_points(cloud, &centers)?;
    clustering.certificate = Some(solution.certificate());
    let mut report = EvalReport::from_assignment(cloud, &distances, &clustering.assignment, k)?;
    report.sdp_certificate = clustering.certificate;
    let label_permutation = match cloud.labels() {
        Some(truth) if truth.iter().all(|&t| t < k) => {
            let (rate, perm) = misclassification_rate(&clustering.assignment, truth, k)?;
            report.misclassification_rate = Some(rate);
            let truth_centroids = label_centroids(cloud.data(), truth);
            if truth_centroids.len() == k {
                let ce = center_error(&clustering.centers, &truth_centroids)?;
                report.center_error_max = Some(ce.max_err);
                report.center_error_mse = Some(ce.mse);
            }
            Some(perm)
        }
        _ => None,
    };
    Ok(PipelineOutput {
        clustering,
        report,
        solution,
        distances,
        denoised,
        rounding_used,
        epsilon,
        label_permutation,
    })
}

fn popular_centers(denoised: &DenoisedCloud<'_>, k: usize, merge_tol: f64) -> Result<Vec<Vec<f64>>> {
    Ok(popular_locations(denoised, k, merge_tol)?.into_iter().map(|l| l.center).collect())
}

/// A tenth of the smallest pairwise distance, below the `Delta / 8` that
/// ball rounding requires. `None` for fewer than two locations or coincident ones.
fn auto_epsilon(locations: Vec<&[f64]>) -> Option<f64> {
    let mut min = f64::INFINITY;
    for a in 0..locations.len() {
        for b in a + 1..locations.len() {
            min = min.min(euclidean(locations[a], locations[b]));
        }
    }
    (min.is_finite() && min > 0.0).then_some(min / 10.0)
}

/// Grid of separations for simplex-centered mixtures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub m: usize,
    pub k: usize,
    pub n_per_center: usize,
    pub sigma: f64,
    /// Values of `Delta / sigma`, where `Delta` is the common center
    /// distance. With `sigma = 0` they are taken as `Delta` itself.
    pub ratios: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    #[serde(default)]
    pub kind: Option<DistributionKind>,
    pub pipeline: PipelineConfig,
}

impl SweepSpec {
    pub fn new(m: usize, k: usize, n_per_center: usize, ratios: Vec<f64>, trials: usize, seed: u64) -> Self {
        SweepSpec {
            m,
            k,
            n_per_center,
            sigma: 1.0,
            ratios,
            trials,
            seed,
            kind: None,
            pipeline: PipelineConfig::new(k),
        }
    }

    /// Mixture for one trial at one separation.
    pub fn mixture(&self, ratio: f64, seed: u64) -> Result<MixtureSpec> {
        if self.k < 2 {
            return Err(Error::InvalidArgument("a sweep needs k >= 2".into()));
        }
        let base = make_simplex(self.k, self.m)?;
        let k = self.k as f64;
        let side = (2.0 * k / (k - 1.0)).sqrt();
        let unit = if self.sigma > 0.0 { self.sigma } else { 1.0 };
        let scale = ratio * unit / side;
        let centers = faer::Mat::from_fn(self.m, self.k, |i, j| scale * base[(i, j)]);
        Ok(MixtureSpec::from_centers(
            &centers,
            self.sigma,
            self.n_per_center,
            self.kind.unwrap_or(DistributionKind::Gaussian),
            seed,
        ))
    }
}

/// Per-separation trial averages.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub delta_over_sigma: f64,
    /// Mean squared distance of denoised columns to their group's empirical centroid.
    pub denoise_mse: f64,
    /// Mean squared distance of raw points to their true center.
    pub raw_mse: f64,
    /// Matched max distance of output centers to empirical centroids.
    pub center_err: f64,
    pub misclass_rate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTrial {
    pub delta_over_sigma: f64,
    pub trial: usize,
    pub denoise_mse: f64,
    pub raw_mse: f64,
    pub center_err: f64,
    pub misclass_rate: f64,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub trials: Vec<SweepTrial>,
}

impl SweepReport {
    pub fn unconverged(&self) -> usize {
        self.trials.iter().filter(|t| !t.converged).count()
    }

    /// Header `delta_over_sigma,denoise_mse,raw_mse,center_err,misclass_rate`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn mean(v: impl Iterator<Item = f64>) -> f64 {
    let (s, n) = v.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    s / n as f64
}

/// Runs `trials` relax-and-round trials at each separation. Trials run in
/// parallel with seeds derived from `(seed, ratio index, trial)`; rows and
/// trials come back in grid and trial order.
pub fn sweep(spec: &SweepSpec) -> Result<SweepReport> {
    if spec.trials < 1 || spec.ratios.is_empty() {
        return Err(Error::InvalidArgument("sweep needs at least one trial and one ratio".into()));
    }
    if spec.pipeline.k != spec.k {
        return Err(Error::InvalidArgument(format!(
            "pipeline k = {} differs from sweep k = {}",
            spec.pipeline.k, spec.k
        )));
    }
    let jobs: Vec<(usize, usize)> = (0..spec.ratios.len()).flat_map(|g| (0..spec.trials).map(move |t| (g, t))).collect();
    let trials: Vec<Result<SweepTrial>> = jobs
        .par_iter()
        .map(|&(g, t)| {
            let ratio = spec.ratios[g];
            let seed = crate::derive_seed(crate::derive_seed(spec.seed, g as u64), t as u64);
            let mix = spec.mixture(ratio, seed)?;
            let cloud = sample_mixture(&mix)?;
            let truth = cloud.labels().expect("sampled clouds are labeled");
            let true_centers = mix.centers();
            let raw_mse = mean((0..cloud.len()).map(|j| {
                let d = euclidean(cloud.data().col_as_slice(j), &true_centers[truth[j]]);
                d * d
            }));
            let out = relax_and_round(&cloud, &spec.pipeline)?;
            Ok(SweepTrial {
                delta_over_sigma: ratio,
                trial: t,
                denoise_mse: out.denoised.mse_to_label_centroids().expect("labeled"),
                raw_mse,
                center_err: out.report.center_error_max.expect("labeled"),
                misclass_rate: out.report.misclassification_rate.expect("labeled"),
                converged: out.converged(),
            })
        })
        .collect();
    let trials = trials.into_iter().collect::<Result<Vec<_>>>()?;
    let rows = spec
        .ratios
        .iter()
        .enumerate()
        .map(|(g, &ratio)| {
            let ts = &trials[g * spec.trials..(g + 1) * spec.trials];
            SweepRow {
                delta_over_sigma: ratio,
                denoise_mse: mean(ts.iter().map(|t| t.denoise_mse)),
                raw_mse: mean(ts.iter().map(|t| t.raw_mse)),
                center_err: mean(ts.iter().map(|t| t.center_err)),
                misclass_rate: mean(ts.iter().map(|t| t.misclass_rate)),
            }
        })
        .collect();
    Ok(SweepReport { rows, trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_pairs() -> PointCloud {
        let pts = vec![vec![0.0, 0.0], vec![0.0, 0.1], vec![10.0, 0.0], vec![10.0, 0.1]];
        PointCloud::from_points(&pts, Some(vec![0, 0, 1, 1])).unwrap()
    }

    #[test]
    fn recovers_two_pairs() {
        let cloud = two_pairs();
        let out = relax_and_round(&cloud, &PipelineConfig::new(2)).unwrap();
        assert!(out.converged());
        assert_eq!(out.report.misclassification_rate, Some(0.0));
        assert!((out.clustering.kmeans_value - 0.01).abs() < 1e-12);
        let cert = out.clustering.certificate.unwrap();
        assert!(cert <= out.clustering.kmeans_value + 1e-6);
        assert!((cert - 0.01).abs() < 1e-3);
        assert_eq!(out.rounding_used, Rounding::Ball);
    }

    #[test]
    fn popular_rounding_agrees_on_tight_instance() {
        let cloud = two_pairs();
        let mut cfg = PipelineConfig::new(2);
        cfg.rounding = Rounding::Popular;
        let out = relax_and_round(&cloud, &cfg).unwrap();
        assert_eq!(out.rounding_used, Rounding::Popular);
        assert_eq!(out.report.misclassification_rate, Some(0.0));
    }

    #[test]
    fn k_one_gives_global_centroid() {
        let cloud = two_pairs();
        let out = relax_and_round(&cloud, &PipelineConfig::new(1)).unwrap();
        let c = &out.clustering.centers[0];
        assert!((c[0] - 5.0).abs() < 1e-12 && (c[1] - 0.05).abs() < 1e-12);
        assert!(out.clustering.certificate.unwrap() <= out.clustering.kmeans_value + 1e-9);
    }

    #[test]
    fn bad_arguments() {
        let cloud = two_pairs();
        assert!(relax_and_round(&cloud, &PipelineConfig::new(0)).is_err());
        assert!(relax_and_round(&cloud, &PipelineConfig::new(5)).is_err());
        let mut cfg = PipelineConfig::new(2);
        cfg.epsilon = Some(-1.0);
        assert!(relax_and_round(&cloud, &cfg).is_err());
    }

    #[test]
    fn sweep_mixture_has_requested_separation() {
        let spec = SweepSpec::new(5, 4, 3, vec![7.0], 1, 0);
        let mix = spec.mixture(7.0, 1).unwrap();
        assert!((mix.delta_min() - 7.0).abs() < 1e-10);
        assert!((mix.delta_max() - 7.0).abs() < 1e-10);
    }

    #[test]
    fn zero_noise_sweep_denoises_exactly() {
        let mut spec = SweepSpec::new(3, 3, 4, vec![5.0], 2, 3);
        spec.sigma = 0.0;
        let report = sweep(&spec).unwrap();
        assert_eq!(report.unconverged(), 0);
        let row = report.rows[0];
        assert!(row.denoise_mse < 1e-6, "{}", row.denoise_mse);
        assert_eq!(row.raw_mse, 0.0);
        assert_eq!(row.misclass_rate, 0.0);
    }
}
