fn main() {
    std::process::exit(sommerfeld_cli::main_with_std_streams());
}
