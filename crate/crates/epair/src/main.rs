fn main() {
    std::process::exit(epair::cli::main_entry());
}
