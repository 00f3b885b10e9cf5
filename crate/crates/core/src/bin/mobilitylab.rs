fn main() {
    std::process::exit(mobilitylab::cli::run(std::env::args_os()));
}
