fn main() {
    std::process::exit(regsc::cli::run(std::env::args_os()));
}
