fn main() {
    std::process::exit(wlstab_cli::run(std::env::args_os().skip(1)));
}
