//! `verify <suite> [options]`: runs a verification suite and writes a JSON report.

fn main() {
    std::process::exit(twisted_rtt::cli::main_with(std::env::args_os()));
}
