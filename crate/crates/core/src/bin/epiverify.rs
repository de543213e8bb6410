fn main() {
    std::process::exit(epiverify::cli::run(std::env::args_os()));
}
