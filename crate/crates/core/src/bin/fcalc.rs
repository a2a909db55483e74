fn main() {
    std::process::exit(fractal_calculus::cli::run(std::env::args_os()));
}
