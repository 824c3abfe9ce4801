// Decide whether the star of a word list is cofinite and show the longest
// omitted word, or a family of omitted words when there are infinitely many.

use freemonoid::frobenius::{analyze_cofiniteness, default_cap};
use freemonoid::words::Dictionary;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for words in [&["000", "00000"][..], &["0", "01", "10", "11"], &["0", "01", "10", "11", "101", "111"]] {
        let dict = Dictionary::from_strs(words.iter().copied())?;
        let report = analyze_cofiniteness(&dict, default_cap(&dict))?;
        print!("{words:?}: ");
        if let Some(w) = &report.longest_omitted {
            println!("cofinite, longest omitted word {} (length {})", dict.render(w), w.len());
        } else if let Some(p) = &report.pump {
            println!(
                "not cofinite, omits {} ({})^k {}",
                dict.render(&p.prefix),
                dict.render(&p.pump),
                dict.render(&p.suffix)
            );
        } else {
            println!("every word is a member");
        }
        println!("  {} subsets explored", report.subsets);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
