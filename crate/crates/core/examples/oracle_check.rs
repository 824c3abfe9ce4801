// Cross-check the subset searches against the brute-force oracles.

use freemonoid::completeness::{incompletable_length_bound, shortest_incompletable_word};
use freemonoid::frobenius::is_cofinite;
use freemonoid::oracle::{oracle_cofinite, oracle_cofinite_exact, oracle_shortest_incompletable, IncompletableSearch};
use freemonoid::words::Dictionary;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for words in [&["0", "01", "10", "11", "111"][..], &["0", "01", "10", "11", "101", "111"], &["01", "10", "11", "000"]] {
        let d = Dictionary::from_strs(words.iter().copied())?;
        let scan = oracle_cofinite(&d, 14)?;
        println!(
            "{words:?}: cofinite {} (exact oracle {}, scan {:?})",
            is_cofinite(&d)?,
            oracle_cofinite_exact(&d, 1 << 16)?,
            scan.verdict
        );
        let main = shortest_incompletable_word(&d)?;
        let oracle = match oracle_shortest_incompletable(&d, incompletable_length_bound(&d))? {
            IncompletableSearch::Incompletable(w) => Some(w),
            _ => None,
        };
        assert_eq!(main, oracle);
        println!("  shortest incompletable: {:?}", main.map(|w| d.render(&w)));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
