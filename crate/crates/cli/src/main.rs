fn main() {
    std::process::exit(formalode_cli::main_with_args(std::env::args_os()));
}
