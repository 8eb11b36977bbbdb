fn main() {
    std::process::exit(daha::cli::run(std::env::args_os()));
}
