// Membership in `L*`, once by stepping through subsets of the star automaton
// and once by the factorization table.

use freemonoid::frobenius::is_member;
use freemonoid::words::{is_member_dp, Dictionary};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let dict = Dictionary::from_strs(["0", "01", "10", "11"])?;
    for text in ["", "0110", "111", "1010", "10101"] {
        let w = dict.alphabet().parse_word(text)?;
        let member = is_member(&dict, &w)?;
        assert_eq!(member, is_member_dp(&dict, &w)?);
        println!("{:>6}  {}", format!("{text:?}"), if member { "member" } else { "not a member" });
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
