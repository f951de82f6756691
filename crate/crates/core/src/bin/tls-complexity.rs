use std::io;

fn main() {
    let code = tls_complexity::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
