//! k-means++ seeding followed by Lloyd iterations, the baseline the SDP
//! certificate is compared against.

use kmeans_sdp::mixture::{make_simplex, sample_mixture, DistributionKind, MixtureSpec};
use kmeans_sdp::postprocess::{best_of_kmeanspp, kmeanspp_init, lloyd_trace};
use kmeans_sdp::sdp::{solve_kmeans_sdp, squared_distance_matrix, SolverConfig};

fn main() -> kmeans_sdp::Result<()> {
    let k = 4;
    let base = make_simplex(k, 3)?;
    let centers = faer::Mat::from_fn(3, k, |i, j| 3.0 * base[(i, j)]);
    let cloud = sample_mixture(&MixtureSpec::from_centers(&centers, 1.0, 40, DistributionKind::Gaussian, 3))?;

    let init = kmeanspp_init(&cloud, k, 1)?;
    let trace = lloyd_trace(&cloud, &init, 100)?;
    println!("single run: {} iterations, converged {}", trace.iterations, trace.converged);
    println!("objective history {:?}", trace.history.iter().map(|v| (v * 1e3).round() / 1e3).collect::<Vec<_>>());

    let best = best_of_kmeanspp(&cloud, k, 10, 1, 100)?;
    let sol = solve_kmeans_sdp(&squared_distance_matrix(&cloud)?, k, &SolverConfig::default())?;
    println!("best of 10: {:.4}", best.kmeans_value);
    println!("SDP lower bound: {:.4} ({:?})", sol.certificate(), sol.status);
    Ok(())
}
