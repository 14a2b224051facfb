//! The reference cost matrix: for it the SDP optimum is the block matrix
//! `sum_t 1_t 1_t^T / n_t` of the planted labels, with value `N * xi`.

use kmeans_sdp::mixture::{make_simplex, sample_mixture, Component, MixtureSpec};
use kmeans_sdp::sdp::{block_partition_matrix, build_reference_matrix, solve_kmeans_sdp, SolverConfig};

fn main() -> kmeans_sdp::Result<()> {
    let base = make_simplex(3, 2)?;
    let sizes = [5, 7, 9];
    let components = (0..3)
        .map(|t| Component::gaussian(vec![4.0 * base[(0, t)], 4.0 * base[(1, t)]], 1.0, sizes[t]))
        .collect();
    let spec = MixtureSpec::new(components, 11);
    let cloud = sample_mixture(&spec)?;
    let xi = 1.0;
    let r = build_reference_matrix(&cloud, &spec.centers(), xi)?;
    let sol = solve_kmeans_sdp(&r, 3, &SolverConfig::default())?;

    let block = block_partition_matrix(cloud.labels().unwrap());
    let diff = (&sol.x - &block).norm_l2();
    let n = cloud.len() as f64;
    println!("{:?} after {} iterations", sol.status, sol.iterations);
    println!("||X - block||_F = {diff:.2e}");
    println!("objective {:.6}, expected N * xi = {}", sol.objective, n * xi);
    Ok(())
}
