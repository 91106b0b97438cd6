fn main() {
    std::process::exit(efros::cli::main());
}
