//! Relax-and-round on three well-separated planar Gaussians, 100 points each.
//!
//! Prints the SDP certificate next to the k-means value of the rounded
//! clustering, and how far the denoised columns `PX` sit from the group
//! centroids compared with the raw points.

use kmeans_sdp::mixture::{make_simplex, sample_mixture, DistributionKind, MixtureSpec};
use kmeans_sdp::pipeline::{relax_and_round, PipelineConfig};
use kmeans_sdp::postprocess::label_centroids;

fn main() -> kmeans_sdp::Result<()> {
    let (k, sigma, delta) = (3, 1.0, 10.0);
    // Unit simplex vertices are sqrt(2k/(k-1)) apart.
    let side = (2.0 * k as f64 / (k as f64 - 1.0)).sqrt();
    let base = make_simplex(k, 2)?;
    let centers = faer::Mat::from_fn(2, k, |i, j| base[(i, j)] * delta / side);
    let spec = MixtureSpec::from_centers(&centers, sigma, 100, DistributionKind::Gaussian, 2024);
    let cloud = sample_mixture(&spec)?;

    let out = relax_and_round(&cloud, &PipelineConfig::new(k))?;
    let sol = &out.solution;
    println!(
        "solver: {:?} after {} iterations, max residual {:.2e}",
        sol.status,
        sol.iterations,
        sol.residuals.max()
    );
    println!("certificate (Tr(DX)/2): {:.6}", sol.certificate());
    println!("k-means value:          {:.6}", out.clustering.kmeans_value);
    println!("misclassification rate: {}", out.report.misclassification_rate.unwrap());
    println!("rounding: {:?}, epsilon {:?}", out.rounding_used, out.epsilon);

    let labels = cloud.labels().unwrap();
    let centroids = label_centroids(cloud.data(), labels);
    let raw: f64 = (0..cloud.len())
        .map(|j| {
            let c = &centroids[labels[j]];
            (0..2).map(|i| (cloud.data()[(i, j)] - c[i]).powi(2)).sum::<f64>()
        })
        .sum::<f64>()
        / cloud.len() as f64;
    println!(
        "mean squared distance to group centroid: raw {:.4}, denoised {:.2e}",
        raw,
        out.denoised.mse_to_label_centroids().unwrap()
    );
    for (t, c) in out.clustering.centers.iter().enumerate() {
        println!("center {t}: [{:.3}, {:.3}]", c[0], c[1]);
    }
    Ok(())
}
