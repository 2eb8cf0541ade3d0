fn main() {
    std::process::exit(turan_cycles::cli::run_from_args());
}
