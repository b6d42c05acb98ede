fn main() {
    std::process::exit(bramsey::cli::run(std::env::args_os()));
}
