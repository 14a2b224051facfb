//! Scoring of clusterings: the k-means objective in its direct and lifted
//! forms, misclassification under the best relabeling, and matched
//! center-estimation errors.

use std::io::Write;

use faer::Mat;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixture::PointCloud;
use crate::sdp::{frobenius_inner, DistanceMatrix};

/// A partition of `0..n` into index sets.
pub type Partition = Vec<Vec<usize>>;

/// Checks that `partition` covers `0..n` with no index repeated.
pub fn validate_partition(partition: &[Vec<usize>], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for (t, set) in partition.iter().enumerate() {
        for &i in set {
            if i >= n {
                return Err(Error::InvalidPartition(format!("index {i} in set {t} exceeds n = {n}")));
            }
            if seen[i] {
                return Err(Error::InvalidPartition(format!("index {i} appears twice")));
            }
            seen[i] = true;
        }
    }
    if let Some(gap) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidPartition(format!("index {gap} is not covered")));
    }
    Ok(())
}

/// Groups indices by label; set `t` holds the indices labeled `t`.
pub fn partition_from_labels(labels: &[usize], k: usize) -> Result<Partition> {
    let mut p = vec![Vec::new(); k];
    for (i, &l) in labels.iter().enumerate() {
        if l >= k {
            return Err(Error::LabelOutOfRange { label: l, k });
        }
        p[l].push(i);
    }
    Ok(p)
}

/// `X_ij = 1/|A_t|` when `i, j` share a set `A_t`, zero otherwise.
pub fn partition_matrix(partition: &[Vec<usize>], n: usize) -> Result<Mat<f64>> {
    validate_partition(partition, n)?;
    let mut x = Mat::<f64>::zeros(n, n);
    for set in partition {
        let w = 1.0 / set.len() as f64;
        for &i in set {
            for &j in set {
                x[(i, j)] = w;
            }
        }
    }
    Ok(x)
}

/// Sum over sets of squared distances to the set centroid. Empty sets add nothing.
pub fn kmeans_value(cloud: &PointCloud, partition: &[Vec<usize>]) -> Result<f64> {
    validate_partition(partition, cloud.len())?;
    let m = cloud.dim();
    let p = cloud.data();
    let mut total = 0.0;
    for set in partition.iter().filter(|s| !s.is_empty()) {
        let mut centroid = vec![0.0; m];
        for &j in set {
            for (i, c) in centroid.iter_mut().enumerate() {
                *c += p[(i, j)];
            }
        }
        for c in centroid.iter_mut() {
            *c /= set.len() as f64;
        }
        for &j in set {
            total += (0..m).map(|i| (p[(i, j)] - centroid[i]).powi(2)).sum::<f64>();
        }
    }
    Ok(total)
}

/// `Tr(D X) / 2` with `X` the partition matrix.
pub fn lifted_value(d: &DistanceMatrix, partition: &[Vec<usize>]) -> Result<f64> {
    let x = partition_matrix(partition, d.n())?;
    Ok(0.5 * frobenius_inner(d.entries().as_ref(), x.as_ref()))
}

/// `counts[p][t]` = number of points predicted `p` whose truth is `t`.
pub fn confusion_matrix(predicted: &[usize], truth: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    if predicted.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            context: "label vectors",
            expected: truth.len(),
            found: predicted.len(),
        });
    }
    let mut counts = vec![vec![0usize; k]; k];
    for (&p, &t) in predicted.iter().zip(truth) {
        if p >= k {
            return Err(Error::LabelOutOfRange { label: p, k });
        }
        if t >= k {
            return Err(Error::LabelOutOfRange { label: t, k });
        }
        counts[p][t] += 1;
    }
    Ok(counts)
}

pub fn write_confusion_csv<W: Write>(counts: &[Vec<usize>], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let k = counts.len();
    let mut header = vec!["predicted".to_string()];
    header.extend((0..k).map(|t| format!("truth{t}")));
    w.write_record(&header)?;
    for (p, row) in counts.iter().enumerate() {
        let mut rec = vec![p.to_string()];
        rec.extend(row.iter().map(usize::to_string));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Fraction of points misclassified under the relabeling of predictions that
/// minimizes it. `permutation[p]` is the truth label assigned to predicted label `p`.
pub fn misclassification_rate(predicted: &[usize], truth: &[usize], k: usize) -> Result<(f64, Vec<usize>)> {
    let counts = confusion_matrix(predicted, truth, k)?;
    if predicted.is_empty() {
        return Ok((0.0, (0..k).collect()));
    }
    let cost: Vec<Vec<f64>> = counts
        .iter()
        .map(|row| row.iter().map(|&c| -(c as f64)).collect())
        .collect();
    let perm = min_cost_assignment(&cost);
    let agree: usize = perm.iter().enumerate().map(|(p, &t)| counts[p][t]).sum();
    Ok(((predicted.len() - agree) as f64 / predicted.len() as f64, perm))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterError {
    /// `max_i |est_i - ref_perm(i)|` minimized over matchings.
    pub max_err: f64,
    /// Mean squared error under the same matching.
    pub mse: f64,
    /// `permutation[i]` = index of the reference matched to estimate `i`.
    pub permutation: Vec<usize>,
}

/// Bottleneck matching between estimated and reference centers. Among
/// matchings with the optimal max error, the one with least total squared
/// error is reported.
pub fn center_error(estimated: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<CenterError> {
    let k = estimated.len();
    if reference.len() != k {
        return Err(Error::DimensionMismatch {
            context: "center counts",
            expected: reference.len(),
            found: k,
        });
    }
    if k == 0 {
        return Ok(CenterError { max_err: 0.0, mse: 0.0, permutation: vec![] });
    }
    let dim = reference[0].len();
    if let Some(bad) = estimated.iter().chain(reference).find(|c| c.len() != dim) {
        return Err(Error::DimensionMismatch {
            context: "center dimension",
            expected: dim,
            found: bad.len(),
        });
    }
    let sq: Vec<Vec<f64>> = estimated
        .iter()
        .map(|e| reference.iter().map(|r| e.iter().zip(r).map(|(a, b)| (a - b) * (a - b)).sum()).collect())
        .collect();

    let mut levels: Vec<f64> = sq.iter().flatten().copied().collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    // Smallest threshold admitting a perfect matching.
    let (mut lo, mut hi) = (0, levels.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(&sq, levels[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let threshold = levels[lo];

    let total: f64 = levels.iter().sum::<f64>().max(1.0);
    let forbidden = 4.0 * k as f64 * total;
    let cost: Vec<Vec<f64>> = sq
        .iter()
        .map(|row| row.iter().map(|&v| if v <= threshold { v } else { forbidden }).collect())
        .collect();
    let permutation = min_cost_assignment(&cost);
    let max_sq = permutation.iter().enumerate().map(|(i, &j)| sq[i][j]).fold(0.0, f64::max);
    let mse = permutation.iter().enumerate().map(|(i, &j)| sq[i][j]).sum::<f64>() / k as f64;
    Ok(CenterError { max_err: max_sq.sqrt(), mse, permutation })
}

fn has_perfect_matching(sq: &[Vec<f64>], threshold: f64) -> bool {
    let k = sq.len();
    let mut match_of_right: Vec<Option<usize>> = vec![None; k];
    fn augment(u: usize, sq: &[Vec<f64>], thr: f64, seen: &mut [bool], mr: &mut [Option<usize>]) -> bool {
        for v in 0..sq.len() {
            if sq[u][v] <= thr && !seen[v] {
                seen[v] = true;
                if mr[v].is_none_or(|w| augment(w, sq, thr, seen, mr)) {
                    mr[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    (0..k).all(|u| {
        let mut seen = vec![false; k];
        augment(u, sq, threshold, &mut seen, &mut match_of_right)
    })
}

/// Hungarian algorithm (shortest augmenting paths with potentials) for a
/// square cost matrix. Returns `assignment[row] = column`.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    // 1-based arrays; column 0 is a virtual source.
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of_col[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of_col[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of_col[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[row_of_col[j] - 1] = j - 1;
    }
    assignment
}

/// Summary metrics for one clustering.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub kmeans_value: f64,
    pub lifted_value: f64,
    pub sdp_certificate: Option<f64>,
    pub misclassification_rate: Option<f64>,
    pub center_error_max: Option<f64>,
    pub center_error_mse: Option<f64>,
}

impl EvalReport {
    /// Fills the objective fields from an assignment; optional fields start empty.
    pub fn from_assignment(cloud: &PointCloud, d: &DistanceMatrix, assignment: &[usize], k: usize) -> Result<Self> {
        let partition = partition_from_labels(assignment, k)?;
        Ok(EvalReport {
            kmeans_value: kmeans_value(cloud, &partition)?,
            lifted_value: lifted_value(d, &partition)?,
            ..Default::default()
        })
    }
}
