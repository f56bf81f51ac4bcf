use std::process::exit;

fn main() {
    exit(exoseries::cli::run(std::env::args()));
}
