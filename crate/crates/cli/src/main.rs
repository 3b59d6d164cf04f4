fn main() {
    std::process::exit(bkposet_cli::run(std::env::args_os()));
}
