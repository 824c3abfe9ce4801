use std::io::{self, Read};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut stdin = String::new();
    let needs_stdin = args.iter().skip(1).any(|a| a == "-");
    if needs_stdin && io::stdin().read_to_string(&mut stdin).is_err() {
        eprintln!("error: could not read standard input");
        std::process::exit(2);
    }
    let code = freemonoid::cli::run(&args, &stdin, &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
