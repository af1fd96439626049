fn main() {
    std::process::exit(diracsea::cli::run(std::env::args_os()));
}
