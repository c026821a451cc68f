fn main() { std::process::exit(qcong::cli::run()); }
