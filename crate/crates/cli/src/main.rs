fn main() {
    std::process::exit(lifshitz_cli::run(std::env::args_os()));
}
