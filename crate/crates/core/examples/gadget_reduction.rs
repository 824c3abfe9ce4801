// Reduce a rewriting system to a binary word list, for either question.

use freemonoid::completeness::is_complete;
use freemonoid::families::{emptying_counter, immortality_counter};
use freemonoid::frobenius::is_cofinite;
use freemonoid::reductions::{reduce, GadgetVariant};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let srs = immortality_counter(2)?;
    let r = reduce(&srs, GadgetVariant::Frobenius)?;
    println!(
        "gadget: {} states, binary: {} states, {} words up to length {}",
        r.gadget.dfa().state_count(),
        r.binary.state_count(),
        r.dictionary.len(),
        r.dictionary.norm_max()
    );
    println!("mortal counter gives a cofinite star: {}", is_cofinite(&r.dictionary)?);
    for w in r.dictionary.rendered_words().iter().take(6) {
        println!("  {w}");
    }

    let r = reduce(&emptying_counter(2)?, GadgetVariant::FactorUniversality)?;
    println!("emptying counter gives a complete list: {}", is_complete(&r.dictionary)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
