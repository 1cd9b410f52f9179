fn main() {
    std::process::exit(kgrotor::cli::main_with_args(std::env::args_os()));
}
