//! Synthetic point clouds drawn from spherical subgaussian mixtures, and the
//! symmetric center configurations (simplex, orthoplex) used by the
//! experiments.

use std::io::{Read, Write};

use faer::Mat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distribution of a single mixture component around its center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionKind {
    /// `N(center, sigma^2 I)`.
    Gaussian,
    /// Uniform on the ball of radius `sigma` around the center.
    UniformBall,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub center: Vec<f64>,
    pub sigma: f64,
    pub n: usize,
    pub kind: DistributionKind,
}

impl Component {
    pub fn gaussian(center: Vec<f64>, sigma: f64, n: usize) -> Self {
        Component {
            center,
            sigma,
            n,
            kind: DistributionKind::Gaussian,
        }
    }

    pub fn uniform_ball(center: Vec<f64>, radius: f64, n: usize) -> Self {
        Component {
            center,
            sigma: radius,
            n,
            kind: DistributionKind::UniformBall,
        }
    }
}

/// A finite mixture with explicit per-component sample counts.
///
/// JSON form: `{"seed":u64,"components":[{"center":[...],"sigma":f,"n":int,"kind":"gaussian"|"uniform_ball"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixtureSpec {
    pub seed: u64,
    pub components: Vec<Component>,
}

impl MixtureSpec {
    pub fn new(components: Vec<Component>, seed: u64) -> Self {
        MixtureSpec { seed, components }
    }

    /// One component per column of `centers`, all sharing `sigma`, `n` and `kind`.
    pub fn from_centers(centers: &Mat<f64>, sigma: f64, n: usize, kind: DistributionKind, seed: u64) -> Self {
        let components = (0..centers.ncols())
            .map(|t| Component {
                center: (0..centers.nrows()).map(|i| centers[(i, t)]).collect(),
                sigma,
                n,
                kind,
            })
            .collect();
        MixtureSpec { seed, components }
    }

    /// Parses the JSON form. Errors name the offending field path.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(s);
        let spec: MixtureSpec = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::InvalidSpec(format!("field `{}`: {}", path, e.into_inner()))
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("mixture spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let first = self
            .components
            .first()
            .ok_or_else(|| Error::InvalidSpec("field `components`: at least one component required".into()))?;
        let m = first.center.len();
        if m == 0 {
            return Err(Error::InvalidSpec("field `components[0].center`: empty center".into()));
        }
        for (t, c) in self.components.iter().enumerate() {
            if c.center.len() != m {
                return Err(Error::InvalidSpec(format!(
                    "field `components[{t}].center`: dimension {} differs from {m}",
                    c.center.len()
                )));
            }
            if c.center.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidSpec(format!("field `components[{t}].center`: non-finite entry")));
            }
            if !(c.sigma >= 0.0 && c.sigma.is_finite()) {
                return Err(Error::InvalidSpec(format!(
                    "field `components[{t}].sigma`: must be finite and nonnegative, got {}",
                    c.sigma
                )));
            }
            if c.n == 0 {
                return Err(Error::InvalidSpec(format!("field `components[{t}].n`: must be positive")));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn dim(&self) -> usize {
        self.components.first().map_or(0, |c| c.center.len())
    }

    pub fn total(&self) -> usize {
        self.components.iter().map(|c| c.n).sum()
    }

    pub fn centers(&self) -> Vec<Vec<f64>> {
        self.components.iter().map(|c| c.center.clone()).collect()
    }

    /// Minimum pairwise center distance; `inf` when k = 1.
    pub fn delta_min(&self) -> f64 {
        self.pairwise_center_distances().fold(f64::INFINITY, f64::min)
    }

    pub fn delta_max(&self) -> f64 {
        self.pairwise_center_distances().fold(0.0, f64::max)
    }

    pub fn sigma_max(&self) -> f64 {
        self.components.iter().map(|c| c.sigma).fold(0.0, f64::max)
    }

    pub fn n_min(&self) -> usize {
        self.components.iter().map(|c| c.n).min().unwrap_or(0)
    }

    pub fn n_max(&self) -> usize {
        self.components.iter().map(|c| c.n).max().unwrap_or(0)
    }

    /// Ratio `n_max / n_min`.
    pub fn imbalance(&self) -> f64 {
        self.n_max() as f64 / self.n_min() as f64
    }

    fn pairwise_center_distances(&self) -> impl Iterator<Item = f64> + '_ {
        let cs = &self.components;
        (0..cs.len()).flat_map(move |a| {
            (a + 1..cs.len()).map(move |b| euclidean(&cs[a].center, &cs[b].center))
        })
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// `m x N` data matrix (one point per column) with optional ground-truth labels.
#[derive(Clone, Debug)]
pub struct PointCloud {
    data: Mat<f64>,
    labels: Option<Vec<usize>>,
}

impl PartialEq for PointCloud {
    fn eq(&self, other: &Self) -> bool {
        self.data.nrows() == other.data.nrows()
            && self.data.ncols() == other.data.ncols()
            && self.labels == other.labels
            && (0..self.data.ncols())
                .all(|j| (0..self.data.nrows()).all(|i| self.data[(i, j)].to_bits() == other.data[(i, j)].to_bits()))
    }
}

impl PointCloud {
    pub fn new(data: Mat<f64>, labels: Option<Vec<usize>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != data.ncols() {
                return Err(Error::DimensionMismatch {
                    context: "point cloud labels",
                    expected: data.ncols(),
                    found: l.len(),
                });
            }
        }
        for j in 0..data.ncols() {
            for i in 0..data.nrows() {
                if !data[(i, j)].is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(PointCloud { data, labels })
    }

    /// Builds a cloud from a list of points (each of the same length).
    pub fn from_points(points: &[Vec<f64>], labels: Option<Vec<usize>>) -> Result<Self> {
        let m = points.first().map_or(0, Vec::len);
        if let Some((j, p)) = points.iter().enumerate().find(|(_, p)| p.len() != m) {
            return Err(Error::DimensionMismatch {
                context: "point coordinates",
                expected: m,
                found: points[j].len().min(p.len()),
            });
        }
        Self::new(Mat::from_fn(m, points.len(), |i, j| points[j][i]), labels)
    }

    pub fn data(&self) -> &Mat<f64> {
        &self.data
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn len(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.data.ncols() == 0
    }

    pub fn point(&self, j: usize) -> Vec<f64> {
        (0..self.dim()).map(|i| self.data[(i, j)]).collect()
    }

    pub fn points(&self) -> Vec<Vec<f64>> {
        (0..self.len()).map(|j| self.point(j)).collect()
    }

    /// Largest pairwise distance between points.
    pub fn diameter(&self) -> f64 {
        let n = self.len();
        let mut best = 0.0f64;
        for a in 0..n {
            for b in a + 1..n {
                let d2: f64 = (0..self.dim())
                    .map(|i| {
                        let d = self.data[(i, a)] - self.data[(i, b)];
                        d * d
                    })
                    .sum();
                best = best.max(d2);
            }
        }
        best.sqrt()
    }

    /// Writes one row per point with header `x0,...,x{m-1}[,label]`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header: Vec<String> = (0..self.dim()).map(|i| format!("x{i}")).collect();
        if self.labels.is_some() {
            header.push("label".into());
        }
        w.write_record(&header)?;
        for j in 0..self.len() {
            let mut row: Vec<String> = (0..self.dim()).map(|i| self.data[(i, j)].to_string()).collect();
            if let Some(l) = &self.labels {
                row.push(l[j].to_string());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads a point CSV. A header row is optional; a column named `label`
    /// (case-insensitive) is taken as ground truth, every other column as a
    /// coordinate.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = r.records();
        let first = match records.next() {
            Some(rec) => rec?,
            None => return Err(Error::InvalidArgument("empty CSV input".into())),
        };
        let is_header = first.iter().any(|f| f.parse::<f64>().is_err());
        let label_col = if is_header {
            first.iter().position(|f| f.eq_ignore_ascii_case("label"))
        } else {
            None
        };
        let width = first.len();
        let mut points = Vec::new();
        let mut labels = Vec::new();
        let mut parse_row = |rec: &csv::StringRecord, line: usize| -> Result<()> {
            if rec.len() != width {
                return Err(Error::InvalidArgument(format!(
                    "CSV row {line} has {} fields, expected {width}",
                    rec.len()
                )));
            }
            let mut p = Vec::with_capacity(width);
            for (c, f) in rec.iter().enumerate() {
                if Some(c) == label_col {
                    let l = f
                        .parse::<f64>()
                        .ok()
                        .filter(|v| *v >= 0.0 && v.fract() == 0.0)
                        .ok_or_else(|| Error::InvalidArgument(format!("CSV row {line}: bad label `{f}`")))?;
                    labels.push(l as usize);
                } else {
                    let v = f
                        .parse::<f64>()
                        .map_err(|_| Error::InvalidArgument(format!("CSV row {line}: bad number `{f}`")))?;
                    p.push(v);
                }
            }
            points.push(p);
            Ok(())
        };
        if !is_header {
            parse_row(&first, 1)?;
        }
        for (i, rec) in records.enumerate() {
            parse_row(&rec?, i + 2)?;
        }
        if points.is_empty() {
            return Err(Error::InvalidArgument("CSV contains no points".into()));
        }
        let labels = label_col.map(|_| labels);
        PointCloud::from_points(&points, labels)
    }
}

/// Draws `N = sum n_t` points; columns are grouped by component in spec order.
///
/// Component `t` uses its own ChaCha stream (stream id `t`) under the spec
/// seed, so the result is a pure function of the spec.
pub fn sample_mixture(spec: &MixtureSpec) -> Result<PointCloud> {
    spec.validate()?;
    let m = spec.dim();
    let total = spec.total();
    let mut data = Mat::<f64>::zeros(m, total);
    let mut labels = Vec::with_capacity(total);
    let mut col = 0;
    let mut z = vec![0.0; m];
    for (t, comp) in spec.components.iter().enumerate() {
        let mut rng = component_rng(spec.seed, t as u64);
        for _ in 0..comp.n {
            match comp.kind {
                DistributionKind::Gaussian => {
                    for zi in z.iter_mut() {
                        *zi = comp.sigma * rng.sample::<f64, _>(StandardNormal);
                    }
                }
                DistributionKind::UniformBall => sample_ball(&mut rng, comp.sigma, &mut z),
            }
            for i in 0..m {
                data[(i, col)] = comp.center[i] + z[i];
            }
            labels.push(t);
            col += 1;
        }
    }
    PointCloud::new(data, Some(labels))
}

pub(crate) fn component_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform point in the ball of radius `radius`: Gaussian direction, radius `U^(1/m)`.
fn sample_ball<R: Rng>(rng: &mut R, radius: f64, out: &mut [f64]) {
    let m = out.len();
    let norm = loop {
        for v in out.iter_mut() {
            *v = rng.sample(StandardNormal);
        }
        let norm = out.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            break norm;
        }
    };
    let u: f64 = rng.random();
    let r = radius * u.powf(1.0 / m as f64);
    for v in out.iter_mut() {
        *v *= r / norm;
    }
}

/// `k` unit vectors in `R^m` summing to zero with pairwise inner product `-1/(k-1)`.
///
/// Built as an orthonormal factor of the centered projector `I - 11^T/k`.
pub fn make_simplex(k: usize, m: usize) -> Result<Mat<f64>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("simplex needs k >= 2, got {k}")));
    }
    if k > m + 1 {
        return Err(Error::InvalidArgument(format!(
            "a {k}-point simplex does not fit in dimension {m}"
        )));
    }
    // The projector has eigenvalue 1 with multiplicity k-1; its eigenvectors
    // form a (k x (k-1)) matrix V with V V^T = I - 11^T/k. Rows of V, rescaled,
    // are the simplex vertices.
    let proj = Mat::<f64>::from_fn(k, k, |i, j| if i == j { 1.0 } else { 0.0 } - 1.0 / k as f64);
    let evd = proj.self_adjoint_eigen(faer::Side::Lower).map_err(|_| Error::Eigen)?;
    let u = evd.U();
    // Eigenvalues ascend; the first one is the zero eigenvalue of the all-ones direction.
    let scale = (k as f64 / (k as f64 - 1.0)).sqrt();
    let mut out = Mat::<f64>::zeros(m, k);
    for t in 0..k {
        for i in 0..k - 1 {
            out[(i, t)] = scale * u[(t, i + 1)];
        }
    }
    Ok(out)
}

/// Columns `e_1, ..., e_d, -e_1, ..., -e_d`.
pub fn make_orthoplex(d: usize) -> Result<Mat<f64>> {
    if d < 1 {
        return Err(Error::InvalidArgument("orthoplex needs d >= 1".into()));
    }
    Ok(Mat::from_fn(d, 2 * d, |i, j| {
        if j == i {
            1.0
        } else if j == i + d {
            -1.0
        } else {
            0.0
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsogonKind {
    Simplex,
    Orthoplex,
}

/// A named symmetric center configuration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsogonConfig {
    pub kind: IsogonKind,
    pub k: usize,
    pub scale: f64,
}

impl IsogonConfig {
    /// Centers as columns of an `m x k` matrix, each of norm `scale`.
    pub fn centers(&self, m: usize) -> Result<Mat<f64>> {
        if !(self.scale > 0.0) {
            return Err(Error::InvalidArgument(format!("isogon scale must be positive, got {}", self.scale)));
        }
        let base = match self.kind {
            IsogonKind::Simplex => make_simplex(self.k, m)?,
            IsogonKind::Orthoplex => {
                if !self.k.is_multiple_of(2) || self.k == 0 {
                    return Err(Error::InvalidArgument(format!("orthoplex needs even k, got {}", self.k)));
                }
                let d = self.k / 2;
                if m < d {
                    return Err(Error::InvalidArgument(format!(
                        "orthoplex with k = {} needs dimension >= {d}, got {m}",
                        self.k
                    )));
                }
                let o = make_orthoplex(d)?;
                Mat::from_fn(m, self.k, |i, j| if i < d { o[(i, j)] } else { 0.0 })
            }
        };
        Ok(Mat::from_fn(m, self.k, |i, j| self.scale * base[(i, j)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(g: &Mat<f64>) -> Mat<f64> {
        g.transpose() * g
    }

    #[test]
    fn zero_variance_component_repeats_center() {
        let spec = MixtureSpec::new(vec![Component::gaussian(vec![1.0, 2.0], 0.0, 3)], 7);
        let cloud = sample_mixture(&spec).unwrap();
        assert_eq!(cloud.len(), 3);
        for j in 0..3 {
            assert_eq!(cloud.point(j), vec![1.0, 2.0]);
        }
        assert_eq!(cloud.labels(), Some(&[0, 0, 0][..]));
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = MixtureSpec::new(
            vec![
                Component::gaussian(vec![0.0, 0.0, 1.0], 1.0, 20),
                Component::uniform_ball(vec![5.0, 0.0, 0.0], 2.0, 30),
            ],
            99,
        );
        assert_eq!(sample_mixture(&spec).unwrap(), sample_mixture(&spec).unwrap());
        let other = MixtureSpec { seed: 100, ..spec.clone() };
        assert_ne!(sample_mixture(&spec).unwrap(), sample_mixture(&other).unwrap());
    }

    #[test]
    fn group_means_converge() {
        let n = 10_000;
        let c = 3.0;
        let spec = MixtureSpec::new(
            vec![
                Component::gaussian(vec![c, 0.0, 0.0], 1.0, n),
                Component::gaussian(vec![-c, 0.0, 0.0], 1.0, n),
            ],
            2024,
        );
        let cloud = sample_mixture(&spec).unwrap();
        let labels = cloud.labels().unwrap();
        for (t, comp) in spec.components.iter().enumerate() {
            for i in 0..3 {
                let mean: f64 = (0..cloud.len())
                    .filter(|&j| labels[j] == t)
                    .map(|j| cloud.data()[(i, j)])
                    .sum::<f64>()
                    / n as f64;
                assert!((mean - comp.center[i]).abs() <= 0.05, "component {t} coord {i}: {mean}");
            }
        }
    }

    #[test]
    fn gaussian_covariance_is_spherical() {
        let n = 10_000;
        let sigma = 2.0;
        let spec = MixtureSpec::new(vec![Component::gaussian(vec![1.0, -1.0, 0.5], sigma, n)], 5);
        let cloud = sample_mixture(&spec).unwrap();
        let m = cloud.dim();
        let mean: Vec<f64> = (0..m)
            .map(|i| (0..n).map(|j| cloud.data()[(i, j)]).sum::<f64>() / n as f64)
            .collect();
        let bound = 10.0 * sigma * sigma / (n as f64).sqrt();
        for a in 0..m {
            for b in 0..m {
                let cov = (0..n)
                    .map(|j| (cloud.data()[(a, j)] - mean[a]) * (cloud.data()[(b, j)] - mean[b]))
                    .sum::<f64>()
                    / (n - 1) as f64;
                let target = if a == b { sigma * sigma } else { 0.0 };
                assert!((cov - target).abs() <= bound, "cov[{a},{b}] = {cov}");
            }
        }
    }

    #[test]
    fn uniform_ball_stays_inside_radius() {
        let spec = MixtureSpec::new(vec![Component::uniform_ball(vec![1.0, 1.0], 0.5, 2000)], 3);
        let cloud = sample_mixture(&spec).unwrap();
        let mut max_r = 0.0f64;
        let mut mean_r2 = 0.0;
        for p in cloud.points() {
            let r = euclidean(&p, &[1.0, 1.0]);
            max_r = max_r.max(r);
            mean_r2 += r * r / 2000.0;
        }
        assert!(max_r <= 0.5 + 1e-12);
        // E r^2 = R^2 m/(m+2) = 0.125 in the plane.
        assert!((mean_r2 - 0.125).abs() < 0.01, "{mean_r2}");
    }

    #[test]
    fn spec_errors() {
        assert!(sample_mixture(&MixtureSpec::new(vec![], 0)).is_err());
        let bad = MixtureSpec::new(
            vec![Component::gaussian(vec![0.0], 1.0, 2), Component::gaussian(vec![0.0, 1.0], 1.0, 2)],
            0,
        );
        assert!(matches!(sample_mixture(&bad), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn json_errors_name_the_field() {
        let err = MixtureSpec::from_json_str(
            r#"{"seed":1,"components":[{"center":[0,0],"sigma":1,"n":3,"kind":"gausian"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("components[0].kind"), "{err}");
        let err = MixtureSpec::from_json_str(r#"{"seed":1,"components":[{"center":[0,0],"sigma":1,"kind":"gaussian"}]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("components[0]"), "{err}");
        let err = MixtureSpec::from_json_str(
            r#"{"seed":1,"components":[{"center":[0,0],"sigma":1,"n":3,"kind":"gaussian"},{"center":[0],"sigma":1,"n":3,"kind":"gaussian"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("components[1].center"), "{err}");
    }

    #[test]
    fn spec_summary_statistics() {
        let spec = MixtureSpec::new(
            vec![
                Component::gaussian(vec![0.0, 0.0], 1.0, 10),
                Component::gaussian(vec![3.0, 4.0], 0.5, 20),
                Component::gaussian(vec![0.0, 8.0], 2.0, 5),
            ],
            0,
        );
        assert_eq!(spec.delta_min(), 5.0);
        assert_eq!(spec.delta_max(), 8.0);
        assert_eq!(spec.sigma_max(), 2.0);
        assert_eq!(spec.imbalance(), 4.0);
        assert_eq!(spec.total(), 35);
    }

    #[test]
    fn simplex_antipodal_pair() {
        let g = make_simplex(2, 1).unwrap();
        let mut v = [g[(0, 0)], g[(0, 1)]];
        v.sort_by(f64::total_cmp);
        assert!((v[0] + 1.0).abs() < 1e-12 && (v[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_gram_matrix() {
        for (k, m) in [(3, 2), (4, 5), (7, 6), (10, 12)] {
            let g = make_simplex(k, m).unwrap();
            let gr = gram(&g);
            let kf = k as f64;
            for a in 0..k {
                for b in 0..k {
                    let target = if a == b { 1.0 } else { -1.0 / (kf - 1.0) };
                    assert!((gr[(a, b)] - target).abs() <= 1e-10, "k={k} ({a},{b}) {}", gr[(a, b)]);
                }
            }
            for i in 0..m {
                let s: f64 = (0..k).map(|t| g[(i, t)]).sum();
                assert!(s.abs() <= 1e-12);
            }
        }
        assert!(make_simplex(5, 3).is_err());
    }

    #[test]
    fn orthoplex_layout() {
        let o = make_orthoplex(2).unwrap();
        let cols: Vec<[f64; 2]> = (0..4).map(|j| [o[(0, j)], o[(1, j)]]).collect();
        assert_eq!(cols, vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]);
        let o1 = make_orthoplex(1).unwrap();
        assert_eq!((o1[(0, 0)], o1[(0, 1)]), (1.0, -1.0));
        assert!(make_orthoplex(0).is_err());
        for d in 1..6 {
            let o = make_orthoplex(d).unwrap();
            for i in 0..d {
                assert_eq!((0..2 * d).map(|j| o[(i, j)]).sum::<f64>(), 0.0);
            }
            for a in 0..2 * d {
                for b in a + 1..2 * d {
                    let d2: f64 = (0..d).map(|i| (o[(i, a)] - o[(i, b)]).powi(2)).sum();
                    let expected = if b == a + d { 4.0 } else { 2.0 };
                    assert_eq!(d2, expected);
                }
            }
        }
    }

    #[test]
    fn isogon_config_embeds_and_scales() {
        let c = IsogonConfig { kind: IsogonKind::Orthoplex, k: 4, scale: 3.0 }.centers(5).unwrap();
        assert_eq!((c.nrows(), c.ncols()), (5, 4));
        assert_eq!(c[(1, 1)], 3.0);
        assert_eq!(c[(4, 0)], 0.0);
        assert!(IsogonConfig { kind: IsogonKind::Orthoplex, k: 3, scale: 1.0 }.centers(5).is_err());
        assert!(IsogonConfig { kind: IsogonKind::Orthoplex, k: 8, scale: 1.0 }.centers(3).is_err());
        let s = IsogonConfig { kind: IsogonKind::Simplex, k: 3, scale: 2.0 }.centers(2).unwrap();
        let norm0 = (s[(0, 0)].powi(2) + s[(1, 0)].powi(2)).sqrt();
        assert!((norm0 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn csv_round_trip_with_labels() {
        let spec = MixtureSpec::new(vec![Component::gaussian(vec![0.25, -3.0], 1.5, 4)], 11);
        let cloud = sample_mixture(&spec).unwrap();
        let mut buf = Vec::new();
        cloud.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("x0,x1,label\n"));
        assert_eq!(PointCloud::read_csv(&buf[..]).unwrap(), cloud);
    }

    #[test]
    fn csv_without_header() {
        let cloud = PointCloud::read_csv("1,2\n3,4\n".as_bytes()).unwrap();
        assert_eq!(cloud.points(), vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!(cloud.labels().is_none());
        assert!(PointCloud::read_csv("1,2\n3\n".as_bytes()).is_err());
        assert!(PointCloud::read_csv("a,b\n1,nan_x\n".as_bytes()).is_err());
    }
}
