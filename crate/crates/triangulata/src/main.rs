fn main() {
    std::process::exit(triangulata::cli::run());
}
