//! Sample a labeled Gaussian mixture from a JSON spec and write it as CSV.
//!
//! cargo run --example generate_mixture [out.csv]

use kmeans_sdp::mixture::{sample_mixture, MixtureSpec};

const SPEC: &str = r#"{
  "seed": 7,
  "components": [
    {"center": [0.0, 0.0],  "sigma": 1.0, "n": 100, "kind": "gaussian"},
    {"center": [10.0, 0.0], "sigma": 1.0, "n": 100, "kind": "gaussian"},
    {"center": [5.0, 8.66], "sigma": 1.0, "n": 100, "kind": "uniform_ball"}
  ]
}"#;

fn main() -> kmeans_sdp::Result<()> {
    let spec = MixtureSpec::from_json_str(SPEC)?;
    let cloud = sample_mixture(&spec)?;
    println!(
        "N = {}, m = {}, k = {}, delta_min = {:.3}, sigma_max = {}",
        cloud.len(),
        cloud.dim(),
        spec.k(),
        spec.delta_min(),
        spec.sigma_max()
    );

    let labels = cloud.labels().unwrap();
    for t in 0..spec.k() {
        let idx: Vec<usize> = (0..cloud.len()).filter(|&j| labels[j] == t).collect();
        let mean: Vec<f64> = (0..cloud.dim())
            .map(|i| idx.iter().map(|&j| cloud.data()[(i, j)]).sum::<f64>() / idx.len() as f64)
            .collect();
        println!("component {t}: center {:?}, sample mean [{:.3}, {:.3}]", spec.components[t].center, mean[0], mean[1]);
    }

    // A malformed spec names the offending field.
    let bad = SPEC.replace("\"uniform_ball\"", "\"laplace\"");
    if let Err(e) = MixtureSpec::from_json_str(&bad) {
        println!("rejected: {e}");
    }

    if let Some(path) = std::env::args().nth(1) {
        cloud.write_csv(std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
