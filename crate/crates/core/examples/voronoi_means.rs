//! Best-of-10 k-means++ centroids on the planar orthoplex mixture (four
//! unit-variance Gaussians at +-e_1, +-e_2) land near the Voronoi means
//! alpha_2(1) * (+-e_i), not near the Gaussian centers.
//!
//! cargo run --release --example voronoi_means [n_per_center] [trials] [out.csv]

use kmeans_sdp::voronoi::{run_voronoi_experiment, VoronoiExperimentSpec};

fn main() -> kmeans_sdp::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let trials = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(30);
    let spec = VoronoiExperimentSpec::new(2, 1.0, n, trials, 0);
    let exp = run_voronoi_experiment(&spec)?;

    println!("alpha_2(1) = {:.5}", exp.voronoi_means.coefficient.value);
    println!("trial  max err to Voronoi means  max err to centers");
    for t in &exp.trials {
        println!("{:5}  {:26.4}  {:18.4}", t.trial, t.max_err_to_voronoi, t.max_err_to_center);
    }
    println!("median: {:.4} vs {:.4}", exp.median_err_to_voronoi(), exp.median_err_to_center());
    if let Some(path) = args.get(3) {
        exp.write_csv(std::fs::File::create(path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
