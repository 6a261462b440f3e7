fn main() {
    std::process::exit(bbgroup::harness::cli::main_with(std::env::args().collect()));
}
