//! Cofiniteness of `L*` and its longest omitted words.

use crate::automata::{
    determinize_reachable, has_rejecting_cycle, kleene_star_nfa, longest_path_to_nonfinal, rejecting_pump,
    KleeneNfa, Pump, SubsetDfa,
};
use crate::error::{Error, Result};
use crate::words::{build_trie_dfa, Dictionary, Word};

fn pow2(exp: usize) -> usize {
    u32::try_from(exp).ok().and_then(|e| 1usize.checked_shl(e)).unwrap_or(usize::MAX)
}

/// `(‖L‖sum + 1) · 2^‖L‖max + 1`, the largest number of subsets a search
/// from the initial state can visit.
pub fn subset_bound(dict: &Dictionary) -> usize {
    (dict.norm_sum() + 1).saturating_mul(pow2(dict.norm_max())).saturating_add(1)
}

/// Default cap on stored subsets: four times [`subset_bound`].
pub fn default_cap(dict: &Dictionary) -> usize {
    subset_bound(dict).saturating_mul(4)
}

/// Upper bound on the length of an omitted word when `L*` is cofinite.
pub fn omitted_length_bound(dict: &Dictionary) -> usize {
    (dict.norm_sum() + 1).saturating_mul(pow2(dict.norm_max())).saturating_add(1)
}

pub fn star_nfa(dict: &Dictionary) -> KleeneNfa {
    kleene_star_nfa(&build_trie_dfa(dict)).expect("trie automata never accept the empty word and never return")
}

/// Result of the cofiniteness search.
#[derive(Clone, Debug)]
pub struct CofinitenessReport {
    pub cofinite: bool,
    /// Subsets stored by the search.
    pub subsets: usize,
    /// Largest number of active states sharing one trie level.
    pub max_level_occupancy: usize,
    /// Longest omitted word (lexicographically smallest among the longest),
    /// present only for cofinite stars with a non-empty complement.
    pub longest_omitted: Option<Word>,
    /// Family of omitted words, present only when the star is not cofinite.
    pub pump: Option<Pump>,
}

fn search(dict: &Dictionary, cap: usize) -> Result<(KleeneNfa, SubsetDfa)> {
    let nfa = star_nfa(dict);
    let sd = determinize_reachable(&nfa, &nfa.initial_set(), cap)?;
    let occupancy = sd.max_level_occupancy().unwrap_or(0);
    if occupancy > 1 {
        return Err(Error::Contract(format!(
            "a reachable subset holds {occupancy} states of one trie level"
        )));
    }
    Ok((nfa, sd))
}

pub fn analyze_cofiniteness(dict: &Dictionary, cap: usize) -> Result<CofinitenessReport> {
    let (_, sd) = search(dict, cap)?;
    let cofinite = !has_rejecting_cycle(&sd);
    let (longest_omitted, pump) = if cofinite {
        (longest_path_to_nonfinal(&sd)?, None)
    } else {
        (None, rejecting_pump(&sd))
    };
    Ok(CofinitenessReport {
        cofinite,
        subsets: sd.len(),
        max_level_occupancy: sd.max_level_occupancy().unwrap_or(0),
        longest_omitted,
        pump,
    })
}

pub fn is_cofinite(dict: &Dictionary) -> Result<bool> {
    Ok(analyze_cofiniteness(dict, default_cap(dict))?.cofinite)
}

/// Longest word outside `L*`; `None` when `L* = Σ*`. Fails with a contract
/// error when `L*` is not cofinite.
pub fn longest_omitted_word(dict: &Dictionary) -> Result<Option<Word>> {
    let report = analyze_cofiniteness(dict, default_cap(dict))?;
    if !report.cofinite {
        return Err(Error::Contract("the star of the dictionary is not cofinite".into()));
    }
    Ok(report.longest_omitted)
}

/// Membership in `L*` by subset stepping.
pub fn is_member(dict: &Dictionary, word: &Word) -> Result<bool> {
    dict.alphabet().check(word)?;
    Ok(star_nfa(dict).accepts(word.symbols()))
}
