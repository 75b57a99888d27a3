fn main() {
    std::process::exit(skewbrace::cli::main_with_env());
}
