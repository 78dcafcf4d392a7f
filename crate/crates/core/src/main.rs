fn main() {
    std::process::exit(cyclesynth::cli::cli_main(std::env::args_os()));
}
