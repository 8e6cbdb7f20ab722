fn main() {
    std::process::exit(packet_overlap::cli::main_with_args(std::env::args_os()));
}
