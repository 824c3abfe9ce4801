// Completeness: is every word a factor of some word in `L*`?

use freemonoid::completeness::{analyze_completeness, is_completable, verify_incompletable};
use freemonoid::frobenius::default_cap;
use freemonoid::words::Dictionary;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let dict = Dictionary::from_strs(["01", "10", "11", "000"])?;
    let report = analyze_completeness(&dict, default_cap(&dict))?;
    let witness = report.witness.expect("this list is incomplete");
    verify_incompletable(&dict, &witness)?;
    println!("shortest incompletable word: {}", dict.render(&witness));

    let w = dict.alphabet().parse_word("100010001")?;
    println!("100010001 completable: {}", is_completable(&dict, &w)?);

    let full = Dictionary::from_strs(["00", "01", "10", "11"])?;
    println!("{{00,01,10,11}} complete: {}", analyze_completeness(&full, default_cap(&full))?.complete);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
