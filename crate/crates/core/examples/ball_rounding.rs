//! Ball rounding on a synthetic denoised cloud: most columns sit within
//! `epsilon` of one of `k` well-separated centers, a minority are outliers.
//! Every selected vertex lands within `3 epsilon` of a distinct center.

use kmeans_sdp::evaluation::center_error;
use kmeans_sdp::postprocess::{ball_rounding_columns, popular_locations_columns, RoundingConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> kmeans_sdp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let centers = vec![vec![0.0, 0.0], vec![10.0, 0.0], vec![0.0, 10.0], vec![10.0, 10.0]];
    let (per_center, outliers, eps) = (20, 15, 1.0);

    let mut cols: Vec<Vec<f64>> = Vec::new();
    for c in &centers {
        for _ in 0..per_center {
            // Uniform in the disk of radius eps around c.
            let r = eps * rng.random::<f64>().sqrt();
            let a = rng.random::<f64>() * std::f64::consts::TAU;
            cols.push(vec![c[0] + r * a.cos(), c[1] + r * a.sin()]);
        }
    }
    for _ in 0..outliers {
        cols.push(vec![rng.random_range(-5.0..15.0), rng.random_range(-5.0..15.0)]);
    }
    let m = faer::Mat::from_fn(2, cols.len(), |i, j| cols[j][i]);

    let cfg = RoundingConfig { epsilon: eps, k: centers.len() };
    let ball = ball_rounding_columns(&m, &cfg)?;
    let err = center_error(&ball.centers, &centers)?;
    for (c, (v, d)) in ball.centers.iter().zip(ball.vertices.iter().zip(&ball.degrees)) {
        println!("vertex {v:3} (degree {d:2}) at [{:6.3}, {:6.3}]", c[0], c[1]);
    }
    println!("max distance to matched center: {:.3} (bound 3 epsilon = {})", err.max_err, 3.0 * eps);

    // The frequency-based alternative needs exact repeats, so it only
    // suits denoised clouds from tight solves.
    match popular_locations_columns(&m, centers.len(), 1e-9) {
        Ok(locs) => println!("popular locations: multiplicities {:?}", locs.iter().map(|l| l.multiplicity).collect::<Vec<_>>()),
        Err(e) => println!("popular locations: {e}"),
    }
    Ok(())
}
