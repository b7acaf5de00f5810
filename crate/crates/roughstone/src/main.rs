fn main() {
    std::process::exit(roughstone::cli::run_from_env());
}
