fn main() {
    std::process::exit(ybq::cli::run());
}
