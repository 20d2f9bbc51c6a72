fn main() {
    std::process::exit(youngmod::run(std::env::args()));
}
