fn main() {
    std::process::exit(nonham::cli::run(std::env::args_os()));
}
