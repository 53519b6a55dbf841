fn main() {
    std::process::exit(braidcluster::cli::run());
}
