fn main() {
    std::process::exit(covering_type::cli::run(std::env::args_os()));
}
