fn main() {
    std::process::exit(pencil5::cli::main_with_args(std::env::args_os()));
}
