fn main() {
    std::process::exit(hyperfib::cli::run(std::env::args_os()));
}
