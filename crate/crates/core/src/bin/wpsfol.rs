fn main() {
    std::process::exit(wpsfol::cli::run(std::env::args_os()));
}
