use std::io::Write;

fn main() {
    let out = mdlab::cli::run(std::env::args().skip(1), &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
