//! Completeness (factor universality) of a dictionary.
//!
//! A word is completable when it is a factor of some word of `L*`. Starting
//! the star automaton in every state at once and reading `w` leaves a
//! non-empty set exactly when `w` is completable, so `L` is complete iff the
//! empty set cannot be reached from the full state set.

use crate::automata::{shortest_word_to_empty, KleeneNfa};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::frobenius::{default_cap, star_nfa};
use crate::words::{Dictionary, Word};

/// Star automaton read with every state initial and every state final.
#[derive(Clone, Debug)]
pub struct FactorNfa {
    nfa: KleeneNfa,
}

impl FactorNfa {
    pub fn nfa(&self) -> &KleeneNfa {
        &self.nfa
    }

    pub fn start(&self) -> BitSet {
        self.nfa.full_set()
    }

    /// Active states after reading `word` from the full state set.
    pub fn run(&self, word: &[usize]) -> BitSet {
        self.nfa.run(&self.start(), word)
    }

    pub fn is_completable(&self, word: &[usize]) -> bool {
        !self.run(word).is_empty()
    }
}

pub fn factor_nfa(dict: &Dictionary) -> FactorNfa {
    let nfa = star_nfa(dict);
    // with the sink gone every trie state lies on a path from the root to a
    // word end, which the emptying criterion relies on
    debug_assert!((0..nfa.state_count()).all(|q| {
        let mut cur = q;
        while !nfa.finals().contains(cur) {
            match (0..nfa.alphabet_size()).find_map(|a| nfa.successor(cur, a)) {
                Some(t) => cur = t,
                None => return false,
            }
        }
        true
    }));
    FactorNfa { nfa }
}

/// `‖L‖max + 1 + (‖L‖sum + 1) · 2^‖L‖max`.
pub fn incompletable_length_bound(dict: &Dictionary) -> usize {
    crate::frobenius::omitted_length_bound(dict).saturating_add(dict.norm_max())
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub complete: bool,
    /// Shortest incompletable word, lexicographically smallest among those.
    pub witness: Option<Word>,
    /// Subsets stored by the search.
    pub subsets: usize,
}

pub fn analyze_completeness(dict: &Dictionary, cap: usize) -> Result<CompletenessReport> {
    let f = factor_nfa(dict);
    let found = shortest_word_to_empty(f.nfa(), &f.start(), cap)?;
    Ok(CompletenessReport {
        complete: found.word.is_none(),
        witness: found.word,
        subsets: found.visited,
    })
}

pub fn is_complete(dict: &Dictionary) -> Result<bool> {
    Ok(analyze_completeness(dict, default_cap(dict))?.complete)
}

pub fn shortest_incompletable_word(dict: &Dictionary) -> Result<Option<Word>> {
    Ok(analyze_completeness(dict, default_cap(dict))?.witness)
}

pub fn is_completable(dict: &Dictionary, word: &Word) -> Result<bool> {
    dict.alphabet().check(word)?;
    Ok(factor_nfa(dict).is_completable(word.symbols()))
}

/// Checks that `word` is incompletable while every proper prefix is
/// completable; used to re-verify witnesses before reporting them.
pub fn verify_incompletable(dict: &Dictionary, word: &Word) -> Result<()> {
    let f = factor_nfa(dict);
    if f.is_completable(word.symbols()) {
        return Err(Error::Contract("reported word is completable".into()));
    }
    if !word.is_empty() && !f.is_completable(&word.symbols()[..word.len() - 1]) {
        return Err(Error::Contract("a proper prefix of the reported word is already incompletable".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn dict(words: &[&str]) -> Dictionary {
        Dictionary::from_strs(words.iter().copied()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let d = dict(&["01", "10", "11", "000"]);
        assert!(!is_complete(&d).unwrap());
        let w = d.alphabet().parse_word("100010001").unwrap();
        assert!(!is_completable(&d, &w).unwrap());
        assert!(is_completable(&d, &d.alphabet().parse_word("0001").unwrap()).unwrap());
        let shortest = shortest_incompletable_word(&d).unwrap().unwrap();
        assert!(shortest.len() <= 9);
        verify_incompletable(&d, &shortest).unwrap();

        assert!(is_complete(&dict(&["00", "01", "10", "11"])).unwrap());
        assert!(is_complete(&dict(&["0", "1"])).unwrap());
    }

    #[test]
    fn single_letter_over_binary() {
        let d = Dictionary::with_alphabet(Alphabet::binary(), ["0"]).unwrap();
        assert_eq!(shortest_incompletable_word(&d).unwrap(), Some(Word::new(vec![1])));
        assert!(is_completable(&d, &Word::empty()).unwrap());
    }
}
