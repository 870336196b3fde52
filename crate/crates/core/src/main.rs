fn main() {
    std::process::exit(links_gould::cli::main_with_args(std::env::args_os()));
}
