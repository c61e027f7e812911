fn main() {
    let (code, out) = centralfire::cli::run(std::env::args());
    print!("{out}");
    std::process::exit(code);
}
