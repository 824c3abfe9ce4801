// Print the reachable subset automaton of a star in Graphviz format.

use freemonoid::automata::{determinize_reachable, subset_dfa_to_dot};
use freemonoid::frobenius::{default_cap, star_nfa};
use freemonoid::words::Dictionary;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let dict = Dictionary::from_strs(["0", "01", "10", "11"])?;
    let nfa = star_nfa(&dict);
    let sd = determinize_reachable(&nfa, &nfa.initial_set(), default_cap(&dict))?;
    print!("{}", subset_dfa_to_dot(&sd, dict.alphabet().glyphs()));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
