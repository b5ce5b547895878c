fn main() {
    std::process::exit(color2surface::cli::main(std::env::args_os()));
}
