// Turn NFA universality into immortality of a rewriting system.

use freemonoid::reductions::{nfa_to_srs, Nfa};
use freemonoid::srw::is_immortal;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // two states over {a, b}; words ending in b are rejected
    let nfa = Nfa::new(2, 2, 0, vec![true, false], vec![vec![0], vec![1], vec![0], vec![1]])?;
    let srs = nfa_to_srs(&nfa)?;
    println!("rejected word: {:?}", nfa.shortest_rejected().map(|w| w.into_symbols()));
    println!("system has {} elements and {} rules", srs.ell(), srs.m());
    match is_immortal(&srs)? {
        Some(w) => println!(
            "immortal: subset {:?} returns to itself under rules {:?}",
            w.subset.iter().collect::<Vec<_>>(),
            w.rules
        ),
        None => println!("mortal"),
    }

    let universal = Nfa::new(1, 2, 0, vec![true], vec![vec![0], vec![0]])?;
    println!("universal NFA gives an immortal system: {}", is_immortal(&nfa_to_srs(&universal)?)?.is_some());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
