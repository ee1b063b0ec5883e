fn main() {
    std::process::exit(schur_repdim::cli::main_with_args(std::env::args_os()));
}
