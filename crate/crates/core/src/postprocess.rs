//! From an SDP optimizer to hard centers: denoising by `P X`, the max-degree
//! ball rounding scheme, popular-location extraction, and the Lloyd /
//! k-means++ baselines.

use std::io::Write;

use faer::Mat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixture::PointCloud;
use crate::sdp::{write_matrix_csv, SdpSolution};

/// Columns of `P X`: each a (tolerance-approximate) convex combination of data points.
#[derive(Clone, Debug)]
pub struct DenoisedCloud<'a> {
    columns: Mat<f64>,
    source: &'a PointCloud,
}

impl<'a> DenoisedCloud<'a> {
    pub fn columns(&self) -> &Mat<f64> {
        &self.columns
    }

    pub fn source(&self) -> &'a PointCloud {
        self.source
    }

    pub fn len(&self) -> usize {
        self.columns.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.ncols() == 0
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.columns.col_as_slice(j).to_vec()
    }

    /// Same CSV layout as a point cloud (`x0,...`), carrying the source labels if any.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let pc = PointCloud::new(self.columns.clone(), self.source.labels().map(<[usize]>::to_vec))?;
        pc.write_csv(writer)
    }

    /// Mean squared distance of each column to the centroid of its
    /// ground-truth group. `None` without labels.
    pub fn mse_to_label_centroids(&self) -> Option<f64> {
        let labels = self.source.labels()?;
        let centroids = label_centroids(self.source.data(), labels);
        let n = self.len();
        let m = self.columns.nrows();
        let total: f64 = (0..n)
            .map(|j| (0..m).map(|i| (self.columns[(i, j)] - centroids[labels[j]][i]).powi(2)).sum::<f64>())
            .sum();
        Some(total / n as f64)
    }
}

/// Per-label centroids of the columns of `data`.
pub fn label_centroids(data: &Mat<f64>, labels: &[usize]) -> Vec<Vec<f64>> {
    let k = labels.iter().copied().max().map_or(0, |l| l + 1);
    let m = data.nrows();
    let mut sums = vec![vec![0.0; m]; k];
    let mut counts = vec![0usize; k];
    for (j, &l) in labels.iter().enumerate() {
        counts[l] += 1;
        for i in 0..m {
            sums[l][i] += data[(i, j)];
        }
    }
    for (s, &c) in sums.iter_mut().zip(&counts) {
        if c > 0 {
            s.iter_mut().for_each(|v| *v /= c as f64);
        }
    }
    sums
}

/// `P X`.
pub fn denoise<'a>(cloud: &'a PointCloud, solution: &SdpSolution) -> Result<DenoisedCloud<'a>> {
    if solution.n() != cloud.len() {
        return Err(Error::DimensionMismatch {
            context: "denoise",
            expected: cloud.len(),
            found: solution.n(),
        });
    }
    denoise_with(cloud, &solution.x)
}

/// `P X` for an arbitrary `N x N` matrix `x`.
pub fn denoise_with<'a>(cloud: &'a PointCloud, x: &Mat<f64>) -> Result<DenoisedCloud<'a>> {
    if x.nrows() != cloud.len() || x.ncols() != cloud.len() {
        return Err(Error::DimensionMismatch {
            context: "denoise",
            expected: cloud.len(),
            found: x.nrows(),
        });
    }
    Ok(DenoisedCloud {
        columns: cloud.data() * x,
        source: cloud,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundingConfig {
    /// Ball radius; vertices are adjacent within `2 epsilon`, purged within `4 epsilon`.
    pub epsilon: f64,
    pub k: usize,
}

/// Outcome of [`ball_rounding`].
#[derive(Clone, Debug, PartialEq)]
pub struct BallRounding {
    pub centers: Vec<Vec<f64>>,
    /// Column index of each selected vertex.
    pub vertices: Vec<usize>,
    /// Degree of each selected vertex at the time it was picked.
    pub degrees: Vec<usize>,
}

/// Max-degree rounding on the `2 epsilon` proximity graph of the denoised
/// columns: pick the surviving vertex of largest degree (lowest index on
/// ties), delete every vertex within `4 epsilon` of it, repeat `k` times.
pub fn ball_rounding(cloud: &DenoisedCloud<'_>, cfg: &RoundingConfig) -> Result<BallRounding> {
    ball_rounding_columns(&cloud.columns, cfg)
}

/// [`ball_rounding`] on a raw `m x N` column matrix.
pub fn ball_rounding_columns(columns: &Mat<f64>, cfg: &RoundingConfig) -> Result<BallRounding> {
    let n = columns.ncols();
    if !(cfg.epsilon > 0.0) {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", cfg.epsilon)));
    }
    if cfg.k < 1 || cfg.k > n {
        return Err(Error::InvalidArgument(format!("k = {} out of range 1..={n}", cfg.k)));
    }
    let dist = pairwise_distances(columns);
    let adj = 2.0 * cfg.epsilon;
    let purge = 4.0 * cfg.epsilon;
    let mut alive = vec![true; n];
    let mut out = BallRounding {
        centers: Vec::with_capacity(cfg.k),
        vertices: Vec::with_capacity(cfg.k),
        degrees: Vec::with_capacity(cfg.k),
    };
    for picked in 0..cfg.k {
        let mut best: Option<(usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let deg = (0..n).filter(|&w| w != v && alive[w] && dist[v * n + w] <= adj).count();
            if best.is_none_or(|(_, d)| deg > d) {
                best = Some((v, deg));
            }
        }
        let (v, deg) = best.ok_or(Error::RoundingExhausted { picked, k: cfg.k })?;
        out.centers.push(columns.col_as_slice(v).to_vec());
        out.vertices.push(v);
        out.degrees.push(deg);
        for w in 0..n {
            if dist[v * n + w] <= purge {
                alive[w] = false;
            }
        }
    }
    Ok(out)
}

fn pairwise_distances(columns: &Mat<f64>) -> Vec<f64> {
    let n = columns.ncols();
    let mut d = vec![0.0; n * n];
    for a in 0..n {
        let xa = columns.col_as_slice(a);
        for b in a + 1..n {
            let xb = columns.col_as_slice(b);
            let s: f64 = xa.iter().zip(xb).map(|(p, q)| (p - q) * (p - q)).sum();
            d[a * n + b] = s.sqrt();
            d[b * n + a] = s.sqrt();
        }
    }
    d
}

/// A bin of nearly coincident denoised columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Location {
    pub center: Vec<f64>,
    pub multiplicity: usize,
    /// Index of the first column that opened this bin.
    pub first: usize,
}

/// Bins columns greedily (each column joins the first bin whose opening
/// column lies within `merge_tol`, else opens a new bin) and returns the
/// `k` bins of highest multiplicity, ties broken by first occurrence.
pub fn popular_locations(cloud: &DenoisedCloud<'_>, k: usize, merge_tol: f64) -> Result<Vec<Location>> {
    popular_locations_columns(&cloud.columns, k, merge_tol)
}

pub fn popular_locations_columns(columns: &Mat<f64>, k: usize, merge_tol: f64) -> Result<Vec<Location>> {
    if !(merge_tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("merge_tol must be nonnegative, got {merge_tol}")));
    }
    let n = columns.ncols();
    let m = columns.nrows();
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds {n} columns")));
    }
    let mut seeds: Vec<usize> = Vec::new();
    let mut sums: Vec<Vec<f64>> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for j in 0..n {
        let x = columns.col_as_slice(j);
        let hit = seeds.iter().position(|&s| {
            let y = columns.col_as_slice(s);
            x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt() <= merge_tol
        });
        match hit {
            Some(b) => {
                counts[b] += 1;
                sums[b].iter_mut().zip(x).for_each(|(s, v)| *s += v);
            }
            None => {
                seeds.push(j);
                sums.push(x.to_vec());
                counts.push(1);
            }
        }
    }
    if seeds.len() < k {
        return Err(Error::TooFewLocations { found: seeds.len(), k });
    }
    let mut order: Vec<usize> = (0..seeds.len()).collect();
    // Stable sort keeps first-occurrence order among equal multiplicities.
    order.sort_by(|&a, &b| counts[b].cmp(&counts[a]));
    Ok(order
        .into_iter()
        .take(k)
        .map(|b| Location {
            center: (0..m).map(|i| sums[b][i] / counts[b] as f64).collect(),
            multiplicity: counts[b],
            first: seeds[b],
        })
        .collect())
}

/// Hard clustering: centers, one label per point, and its k-means value.
///
/// JSON form: `{"centers":[[...]],"assignment":[...],"kmeans_value":f,"certificate":f|null}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusteringResult {
    pub centers: Vec<Vec<f64>>,
    pub assignment: Vec<usize>,
    pub kmeans_value: f64,
    pub certificate: Option<f64>,
    /// Clusters that received no points; their centers are the inputs unchanged.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub empty_clusters: Vec<usize>,
}

impl ClusteringResult {
    pub fn k(&self) -> usize {
        self.centers.len()
    }
}

fn check_centers(cloud: &PointCloud, centers: &[Vec<f64>]) -> Result<()> {
    if centers.is_empty() {
        return Err(Error::InvalidArgument("at least one center required".into()));
    }
    if let Some(c) = centers.iter().find(|c| c.len() != cloud.dim()) {
        return Err(Error::DimensionMismatch {
            context: "center dimension",
            expected: cloud.dim(),
            found: c.len(),
        });
    }
    Ok(())
}

/// Index of the nearest center to column `j` (lowest index on ties) and the squared distance.
fn nearest(cloud: &PointCloud, j: usize, centers: &[Vec<f64>]) -> (usize, f64) {
    let x = cloud.data().col_as_slice(j);
    let mut best = (0, f64::INFINITY);
    for (t, c) in centers.iter().enumerate() {
        let d: f64 = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
        if d < best.1 {
            best = (t, d);
        }
    }
    best
}

fn assign(cloud: &PointCloud, centers: &[Vec<f64>]) -> Vec<usize> {
    (0..cloud.len()).map(|j| nearest(cloud, j, centers).0).collect()
}

/// Centroids of each label; empty labels keep `fallback[t]`. Also returns the empty labels.
fn recenter(cloud: &PointCloud, assignment: &[usize], fallback: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<usize>) {
    let k = fallback.len();
    let m = cloud.dim();
    let mut sums = vec![vec![0.0; m]; k];
    let mut counts = vec![0usize; k];
    for (j, &t) in assignment.iter().enumerate() {
        counts[t] += 1;
        for (s, v) in sums[t].iter_mut().zip(cloud.data().col_as_slice(j)) {
            *s += v;
        }
    }
    let mut empty = Vec::new();
    let centers = (0..k)
        .map(|t| {
            if counts[t] == 0 {
                empty.push(t);
                fallback[t].clone()
            } else {
                sums[t].iter().map(|s| s / counts[t] as f64).collect()
            }
        })
        .collect();
    (centers, empty)
}

fn objective(cloud: &PointCloud, assignment: &[usize], centers: &[Vec<f64>]) -> f64 {
    assignment
        .iter()
        .enumerate()
        .map(|(j, &t)| {
            cloud
                .data()
                .col_as_slice(j)
                .iter()
                .zip(&centers[t])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
        })
        .sum()
}

/// Assigns every point to its nearest center (ties to the lowest index),
/// then replaces each center by the centroid of its points. Empty clusters
/// keep their input center and are listed in `empty_clusters`.
pub fn assign_points(cloud: &PointCloud, centers: &[Vec<f64>]) -> Result<ClusteringResult> {
    check_centers(cloud, centers)?;
    let assignment = assign(cloud, centers);
    let (centers, empty_clusters) = recenter(cloud, &assignment, centers);
    let kmeans_value = objective(cloud, &assignment, &centers);
    Ok(ClusteringResult {
        centers,
        assignment,
        kmeans_value,
        certificate: None,
        empty_clusters,
    })
}

/// Lloyd iterations from `init`. Stops when the assignment repeats or after `max_iter` recenterings.
pub fn lloyd(cloud: &PointCloud, init: &[Vec<f64>], max_iter: usize) -> Result<ClusteringResult> {
    Ok(lloyd_trace(cloud, init, max_iter)?.result)
}

#[derive(Clone, Debug)]
pub struct LloydTrace {
    pub result: ClusteringResult,
    /// k-means value after each recentering step.
    pub history: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// [`lloyd`] with the per-iteration objective.
///
/// A cluster that empties is re-seeded at the point farthest from its
/// nearest center, which then moves into that cluster.
pub fn lloyd_trace(cloud: &PointCloud, init: &[Vec<f64>], max_iter: usize) -> Result<LloydTrace> {
    check_centers(cloud, init)?;
    let k = init.len();
    let n = cloud.len();
    let mut centers = init.to_vec();
    let mut previous: Option<Vec<usize>> = None;
    let mut history = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    loop {
        let mut assignment = assign(cloud, &centers);
        if previous.as_ref() == Some(&assignment) {
            converged = true;
            break;
        }
        if iterations == max_iter {
            break;
        }
        // Re-seed empty clusters, one at a time, from the worst-served points.
        let mut counts = vec![0usize; k];
        assignment.iter().for_each(|&t| counts[t] += 1);
        for t in 0..k {
            if counts[t] == 0 && n > 0 {
                let far = (0..n)
                    .filter(|&j| counts[assignment[j]] > 1)
                    .map(|j| {
                        let c = &centers[assignment[j]];
                        let d: f64 = cloud
                            .data()
                            .col_as_slice(j)
                            .iter()
                            .zip(c)
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum();
                        (j, d)
                    })
                    .fold(None, |acc: Option<(usize, f64)>, (j, d)| match acc {
                        Some((_, bd)) if bd >= d => acc,
                        _ => Some((j, d)),
                    });
                if let Some((j, _)) = far {
                    counts[assignment[j]] -= 1;
                    assignment[j] = t;
                    counts[t] = 1;
                    centers[t] = cloud.point(j);
                }
            }
        }
        let (c, _) = recenter(cloud, &assignment, &centers);
        centers = c;
        history.push(objective(cloud, &assignment, &centers));
        previous = Some(assignment);
        iterations += 1;
    }
    let assignment = previous.unwrap_or_else(|| assign(cloud, &centers));
    let (centers, empty_clusters) = recenter(cloud, &assignment, &centers);
    let kmeans_value = objective(cloud, &assignment, &centers);
    Ok(LloydTrace {
        result: ClusteringResult {
            centers,
            assignment,
            kmeans_value,
            certificate: None,
            empty_clusters,
        },
        history,
        iterations,
        converged,
    })
}

/// D^2 seeding: first center uniform, each next one drawn with probability
/// proportional to squared distance from the nearest chosen center. When
/// every remaining point coincides with a chosen one, draws uniformly among
/// unchosen indices.
pub fn kmeanspp_init(cloud: &PointCloud, k: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let n = cloud.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} out of range 1..={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = vec![false; n];
    let first = rng.random_range(0..n);
    chosen[first] = true;
    let mut centers = vec![cloud.point(first)];
    let mut d2: Vec<f64> = (0..n).map(|j| nearest(cloud, j, &centers).1).collect();
    while centers.len() < k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut pick = None;
            for (j, &w) in d2.iter().enumerate() {
                if w > 0.0 {
                    pick = Some(j);
                    if target < w {
                        break;
                    }
                    target -= w;
                }
            }
            pick.expect("positive total weight has a support point")
        } else {
            let free: Vec<usize> = (0..n).filter(|&j| !chosen[j]).collect();
            free[rng.random_range(0..free.len())]
        };
        chosen[pick] = true;
        let c = cloud.point(pick);
        for (j, w) in d2.iter_mut().enumerate() {
            let d: f64 = cloud.data().col_as_slice(j).iter().zip(&c).map(|(a, b)| (a - b) * (a - b)).sum();
            *w = w.min(d);
        }
        centers.push(c);
    }
    Ok(centers)
}

/// k-means++ seeding followed by Lloyd, repeated `restarts` times with seeds
/// derived from `seed`; returns the run with least k-means value (earliest on ties).
pub fn best_of_kmeanspp(cloud: &PointCloud, k: usize, restarts: usize, seed: u64, max_iter: usize) -> Result<ClusteringResult> {
    let mut best: Option<ClusteringResult> = None;
    for r in 0..restarts.max(1) {
        let init = kmeanspp_init(cloud, k, crate::derive_seed(seed, r as u64))?;
        let res = lloyd(cloud, &init, max_iter)?;
        if best.as_ref().is_none_or(|b| res.kmeans_value < b.kmeans_value) {
            best = Some(res);
        }
    }
    Ok(best.expect("at least one restart"))
}

/// Writes centers as CSV with header `x0,...`.
pub fn write_centers_csv<W: Write>(centers: &[Vec<f64>], writer: W) -> Result<()> {
    let m = centers.first().map_or(0, Vec::len);
    let mat = Mat::from_fn(centers.len(), m, |i, j| centers[i][j]);
    let mut w = writer;
    let header: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
    writeln!(w, "{}", header.join(","))?;
    write_matrix_csv(mat.as_ref(), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdp::block_partition_matrix;

    fn pc(points: &[&[f64]]) -> PointCloud {
        PointCloud::from_points(&points.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), None).unwrap()
    }

    #[test]
    fn block_form_denoises_to_centroids() {
        let cloud = PointCloud::from_points(
            &[vec![0.0, 0.0], vec![2.0, 0.0], vec![10.0, 1.0], vec![10.0, 3.0], vec![10.0, 5.0]],
            Some(vec![0, 0, 1, 1, 1]),
        )
        .unwrap();
        let x = block_partition_matrix(cloud.labels().unwrap());
        let dn = denoise_with(&cloud, &x).unwrap();
        for j in 0..2 {
            assert_eq!(dn.column(j), vec![1.0, 0.0]);
        }
        for j in 2..5 {
            let c = dn.column(j);
            assert!((c[0] - 10.0).abs() < 1e-12 && (c[1] - 3.0).abs() < 1e-12);
        }
        assert!(dn.mse_to_label_centroids().unwrap() < 1e-24);
        let id = Mat::<f64>::identity(5, 5);
        assert_eq!(denoise_with(&cloud, &id).unwrap().columns(), cloud.data());
        assert!(denoise_with(&cloud, &Mat::<f64>::identity(4, 4)).is_err());
    }

    #[test]
    fn ball_rounding_exact_copies() {
        let centers = [[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]];
        let n = 4;
        let cols = Mat::from_fn(2, 3 * n, |i, j| centers[j / n][i]);
        let r = ball_rounding_columns(&cols, &RoundingConfig { epsilon: 1.0, k: 3 }).unwrap();
        assert_eq!(r.centers, vec![vec![0.0, 0.0], vec![10.0, 0.0], vec![0.0, 10.0]]);
        assert_eq!(r.degrees, vec![n - 1; 3]);
        assert_eq!(r.vertices, vec![0, n, 2 * n]);
    }

    #[test]
    fn ball_rounding_radius_too_large() {
        let cols = Mat::from_fn(1, 4, |_, j| [0.0, 0.1, 1.0, 1.1][j]);
        let err = ball_rounding_columns(&cols, &RoundingConfig { epsilon: 1.0, k: 2 }).unwrap_err();
        assert!(matches!(err, Error::RoundingExhausted { picked: 1, k: 2 }));
        assert!(ball_rounding_columns(&cols, &RoundingConfig { epsilon: 0.0, k: 2 }).is_err());
    }

    #[test]
    fn popular_locations_counts() {
        let cols = Mat::from_fn(1, 7, |_, j| [5.0, 1.0, 5.0, 1.0, 5.0, 9.0, 1.0 + 1e-9][j]);
        let locs = popular_locations_columns(&cols, 2, 1e-6).unwrap();
        assert_eq!(locs[0].multiplicity, 3);
        assert_eq!(locs[0].center, vec![5.0]);
        assert_eq!(locs[1].multiplicity, 3);
        assert!((locs[1].center[0] - 1.0).abs() < 1e-9);
        // Tie between 5.0 and 1.0 goes to the first seen.
        assert_eq!(locs[0].first, 0);
        assert!(matches!(
            popular_locations_columns(&cols, 4, 100.0),
            Err(Error::TooFewLocations { found: 1, k: 4 })
        ));
    }

    #[test]
    fn assign_points_examples() {
        let cloud = pc(&[&[0.0, 0.0], &[5.0, 5.0]]);
        let r = assign_points(&cloud, &[vec![0.0, 0.0], vec![5.0, 5.0]]).unwrap();
        assert_eq!(r.assignment, vec![0, 1]);
        assert_eq!(r.kmeans_value, 0.0);

        let line = pc(&[&[0.0], &[2.0]]);
        let r = assign_points(&line, &[vec![-7.0]]).unwrap();
        assert_eq!(r.centers, vec![vec![1.0]]);
        assert_eq!(r.kmeans_value, 2.0);

        let r = assign_points(&line, &[vec![1.0], vec![100.0]]).unwrap();
        assert_eq!(r.empty_clusters, vec![1]);
        assert_eq!(r.centers[1], vec![100.0]);
        let json = serde_json::to_string(&assign_points(&line, &[vec![1.0]]).unwrap()).unwrap();
        assert_eq!(json, r#"{"centers":[[1.0]],"assignment":[0,0],"kmeans_value":2.0,"certificate":null}"#);
    }

    #[test]
    fn assign_ties_go_to_lowest_index() {
        let cloud = pc(&[&[0.0]]);
        let r = assign_points(&cloud, &[vec![-1.0], vec![1.0]]).unwrap();
        assert_eq!(r.assignment, vec![0]);
    }

    #[test]
    fn lloyd_fixed_point_and_reseed() {
        let cloud = pc(&[&[0.0], &[1.0], &[10.0], &[11.0]]);
        let t = lloyd_trace(&cloud, &[vec![0.5], vec![10.5]], 50).unwrap();
        assert_eq!(t.iterations, 1);
        assert!(t.converged);
        assert_eq!(t.result.assignment, vec![0, 0, 1, 1]);

        // Second center never wins a point at first; it gets re-seeded.
        let t = lloyd_trace(&cloud, &[vec![5.0], vec![1000.0]], 50).unwrap();
        assert!(t.result.empty_clusters.is_empty());
        assert_eq!(t.result.kmeans_value, 1.0);
        for w in t.history.windows(2) {
            assert!(w[1] <= w[0]);
        }
    }

    #[test]
    fn kmeanspp_examples() {
        let cloud = pc(&[&[0.0], &[3.0], &[7.0], &[8.0]]);
        let mut all = kmeanspp_init(&cloud, 4, 1).unwrap();
        all.sort_by(|a, b| a[0].total_cmp(&b[0]));
        assert_eq!(all, cloud.points());
        let dup = pc(&[&[2.0], &[2.0], &[2.0]]);
        assert_eq!(kmeanspp_init(&dup, 1, 9).unwrap(), vec![vec![2.0]]);
        assert_eq!(kmeanspp_init(&dup, 3, 9).unwrap().len(), 3);
        assert_eq!(kmeanspp_init(&cloud, 2, 42).unwrap(), kmeanspp_init(&cloud, 2, 42).unwrap());
        assert!(kmeanspp_init(&cloud, 5, 0).is_err());
    }
}
