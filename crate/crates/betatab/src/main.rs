fn main() {
    std::process::exit(betatab::cli::run(std::env::args_os()));
}
