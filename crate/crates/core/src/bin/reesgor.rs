fn main() {
    std::process::exit(rees_gorenstein::cli::main_with_args());
}
