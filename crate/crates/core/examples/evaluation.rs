//! Scoring clusterings: the lifted objective identity, misclassification
//! under the best relabeling, matched center errors, and the SDP lower
//! bound against the exhaustive k-means optimum.

use kmeans_sdp::evaluation::{
    center_error, confusion_matrix, kmeans_value, lifted_value, misclassification_rate, partition_from_labels,
};
use kmeans_sdp::mixture::PointCloud;
use kmeans_sdp::pipeline::{relax_and_round, PipelineConfig};
use kmeans_sdp::sdp::squared_distance_matrix;

fn main() -> kmeans_sdp::Result<()> {
    let pts = vec![
        vec![0.0, 0.0],
        vec![1.0, 0.2],
        vec![0.3, 1.1],
        vec![5.0, 5.0],
        vec![5.5, 4.2],
        vec![4.6, 5.3],
        vec![2.6, 2.4],
        vec![6.1, 5.9],
    ];
    let cloud = PointCloud::from_points(&pts, None)?;
    let d = squared_distance_matrix(&cloud)?;

    // Exhaustive minimum over all 2-partitions.
    let n = pts.len();
    let mut best = (f64::INFINITY, 0u32);
    for mask in 1..(1u32 << (n - 1)) {
        let labels: Vec<usize> = (0..n).map(|j| ((mask >> j) & 1) as usize).collect();
        let part = partition_from_labels(&labels, 2)?;
        let direct = kmeans_value(&cloud, &part)?;
        let lifted = lifted_value(&d, &part)?;
        assert!((direct - lifted).abs() <= 1e-9 * direct.max(1.0));
        if direct < best.0 {
            best = (direct, mask);
        }
    }
    let out = relax_and_round(&cloud, &PipelineConfig::new(2))?;
    println!("SDP certificate     {:.9}", out.solution.certificate());
    println!("exhaustive optimum  {:.9}", best.0);
    println!("relax-and-round     {:.9}", out.clustering.kmeans_value);

    let truth = vec![0, 0, 0, 1, 1, 1, 0, 1];
    let pred = vec![1, 1, 1, 0, 0, 0, 0, 0];
    let (rate, perm) = misclassification_rate(&pred, &truth, 2)?;
    println!("confusion (rows predicted) {:?}", confusion_matrix(&pred, &truth, 2)?);
    println!("misclassification {rate} with predicted->truth map {perm:?}");

    let est = vec![vec![5.1, 4.9], vec![0.2, 0.1]];
    let reference = vec![vec![0.0, 0.0], vec![5.0, 5.0]];
    let ce = center_error(&est, &reference)?;
    println!("center error: max {:.4}, mse {:.4}, matching {:?}", ce.max_err, ce.mse, ce.permutation);
    Ok(())
}
