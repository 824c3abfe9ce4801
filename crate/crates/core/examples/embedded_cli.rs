// Drive the command line front end from code, with an in-memory input.

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = ["freemonoid", "--json", "cofinite", "-"].iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = freemonoid::cli::run(&args, "000\n00000\n", &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    eprint!("{}", String::from_utf8(err)?);
    println!("exit code {code}");
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
