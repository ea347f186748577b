fn main() {
    std::process::exit(wls::cli::run());
}
