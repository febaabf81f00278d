fn main() {
    std::process::exit(rigidity::cli::run());
}
