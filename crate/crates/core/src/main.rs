fn main() {
    std::process::exit(kmeans_sdp::cli::main());
}
