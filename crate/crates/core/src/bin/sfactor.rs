fn main() {
    std::process::exit(spectral_factors::cli::run(std::env::args_os()));
}
