fn main() {
    std::process::exit(bures_discord::cli::run(std::env::args_os()));
}
