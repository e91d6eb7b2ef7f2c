fn main() {
    std::process::exit(ccmk::cli::run(std::env::args_os()));
}
