fn main() {
    std::process::exit(deltasieve::cli::run());
}
