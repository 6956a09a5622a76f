fn main() {
    std::process::exit(modp_reduction::cli::main_from_args(std::env::args_os()));
}
