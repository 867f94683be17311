fn main() {
    std::process::exit(schurlie::cli::run(std::env::args_os()));
}
