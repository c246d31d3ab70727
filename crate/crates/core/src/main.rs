fn main() {
    std::process::exit(acbm3::cli::run());
}
