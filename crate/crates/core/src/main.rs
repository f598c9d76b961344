use std::io::{self, Write};

fn main() {
    let mut stdout = io::stdout().lock();
    let code = planar_turan::cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut stdout, &mut io::stderr());
    let _ = stdout.flush();
    std::process::exit(code);
}
