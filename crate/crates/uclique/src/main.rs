fn main() {
    std::process::exit(uclique::cli::run());
}
