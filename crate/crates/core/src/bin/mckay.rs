fn main() {
    std::process::exit(mckay_quiver::cli::cli_main(std::env::args_os()));
}
