fn main() {
    std::process::exit(grothendieck::cli::main_with_args(std::env::args_os()));
}
