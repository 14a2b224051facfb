//! The Voronoi-mean coefficient alpha_d(c) of the orthoplex mixture, by
//! quadrature and by Monte Carlo, and the check alpha_d(c) >= alpha_d(0).

use kmeans_sdp::voronoi::{alpha, check_alpha_monotonicity, expected_max_abs_gaussian, AlphaQuery};

fn main() -> kmeans_sdp::Result<()> {
    let q = alpha(&AlphaQuery::quadrature(2, 1.0))?;
    let mc = alpha(&AlphaQuery::monte_carlo(2, 1.0, 400_000, 9))?;
    println!("alpha_2(1): quadrature {:.6} (+- {:.1e}), Monte Carlo {:.4} (+- {:.4})", q.value, q.error, mc.value, mc.error);

    // At c = 0 the coefficient is E max_i |g_i|.
    for d in [1, 2, 4, 8] {
        let a0 = alpha(&AlphaQuery::quadrature(d, 0.0))?;
        let e = expected_max_abs_gaussian(d, 200_000, 4)?;
        println!("d = {d}: alpha_d(0) = {:.5}, E||g||_inf ~ {:.5} +- {:.5}", a0.value, e.value, e.error);
    }

    let grid = [0.0, 0.5, 1.0, 2.0, 4.0];
    for d in 1..=3 {
        let r = check_alpha_monotonicity(d, &grid)?;
        let vals: Vec<String> = r.rows.iter().map(|row| format!("{:.5}", row.alpha)).collect();
        println!("d = {d}: [{}] holds = {}", vals.join(", "), r.holds());
    }
    Ok(())
}
