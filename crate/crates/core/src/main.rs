fn main() {
    std::process::exit(vpoker::cli::run());
}
