// Set rewriting systems: immortality, long legal sequences and emptying
// sequences on the two binary counters.

use freemonoid::families::{emptying_counter, immortality_counter};
use freemonoid::srw::{is_immortal, longest_legal_sequence, shortest_emptying_sequence};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let srs = immortality_counter(3)?;
    print!("{}", srs.to_text());
    println!("immortal: {}", is_immortal(&srs)?.is_some());
    let seq = longest_legal_sequence(&srs, &srs.singleton(0))?;
    let mut current = srs.singleton(0);
    for &rule in &seq {
        current = srs.apply_rule(&current, rule).expect("sequence is legal");
        println!("  r{} -> counter value {}", rule + 1, current.to_mask());
    }

    for n in 2..=6 {
        let srs = emptying_counter(n)?;
        let seq = shortest_emptying_sequence(&srs)?.expect("the counter can be emptied");
        println!("emptying counter with {n} bits: shortest emptying sequence has {} rules", seq.len());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
