fn main() {
    std::process::exit(pdetlab::cli::run(std::env::args_os()));
}
