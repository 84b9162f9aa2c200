fn main() {
    std::process::exit(tropchar_cli::run(std::env::args_os()));
}
