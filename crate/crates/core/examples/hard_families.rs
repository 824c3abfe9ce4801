// Word lists with exponentially long extremal words.

use freemonoid::completeness::shortest_incompletable_word;
use freemonoid::families::{appendix_difference, frobenius_hard_family, incompletable_hard_family};
use freemonoid::frobenius::longest_omitted_word;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2, 3] {
        let d = frobenius_hard_family(n)?;
        let omitted = longest_omitted_word(&d)?.map_or(0, |w| w.len());
        let d2 = incompletable_hard_family(n)?;
        let incompletable = shortest_incompletable_word(&d2)?.map_or(0, |w| w.len());
        println!(
            "n = {n}: {} words (sum {}), longest omitted {omitted}; {} words (sum {}), shortest incompletable {incompletable}",
            d.len(),
            d.norm_sum(),
            d2.len(),
            d2.norm_sum()
        );
        let (only_closed, only_pipeline) = appendix_difference(n)?;
        println!("  closed form vs pipeline: {} / {} words differ", only_closed.len(), only_pipeline.len());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
