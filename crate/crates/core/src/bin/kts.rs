fn main() {
    std::process::exit(kts::cli::run(std::env::args_os()));
}
