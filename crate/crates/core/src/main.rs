fn main() {
    std::process::exit(ptl_core::cli::main_with_args(std::env::args_os()));
}
