fn main() {
    std::process::exit(odd_colouring::cli::run(std::env::args_os()));
}
