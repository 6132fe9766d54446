fn main() {
    std::process::exit(encdec::cli::main_from_env());
}
