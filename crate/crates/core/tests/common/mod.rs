#![allow(dead_code)]

use freemonoid::bitset::BitSet;
use freemonoid::reductions::Nfa;
use freemonoid::srw::SetRewritingSystem;
use freemonoid::words::{Alphabet, Dictionary, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub fn dict(words: &[&str]) -> Dictionary {
    Dictionary::from_strs(words.iter().copied()).unwrap()
}

pub fn word(text: &str) -> Word {
    Alphabet::binary().parse_word(text).unwrap()
}

pub fn random_word(rng: &mut StdRng, k: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| rng.gen_range(0..k)).collect())
}

/// Random binary dictionary with words of length at most `max_len` and total
/// length at most `max_sum`. Short words are favoured so that a fair share of
/// the samples have cofinite stars.
pub fn random_dictionary(rng: &mut StdRng, max_len: usize, max_sum: usize) -> Dictionary {
    loop {
        let target = rng.gen_range(1..=max_sum);
        let mut words: Vec<Word> = Vec::new();
        let mut sum = 0;
        for _ in 0..16 {
            let cap = rng.gen_range(1..=max_len);
            let len = rng.gen_range(1..=cap);
            if sum + len > target {
                continue;
            }
            let w = random_word(rng, 2, len);
            if !words.contains(&w) {
                sum += len;
                words.push(w);
            }
        }
        if !words.is_empty() {
            return Dictionary::new(Alphabet::binary(), words).unwrap();
        }
    }
}

fn random_subset(rng: &mut StdRng, ell: usize, allow_empty: bool) -> BitSet {
    loop {
        let mask = rng.gen_range(0..(1u64 << ell));
        if allow_empty || mask != 0 {
            return BitSet::from_mask(ell, mask);
        }
    }
}

pub fn random_non_emptiable(rng: &mut StdRng, ell: usize, m: usize) -> SetRewritingSystem {
    SetRewritingSystem::from_fn(ell, m, |_, _| {
        if rng.gen_bool(0.25) {
            None
        } else {
            Some(random_subset(rng, ell, false))
        }
    })
    .unwrap()
}

pub fn random_permissive(rng: &mut StdRng, ell: usize, m: usize) -> SetRewritingSystem {
    SetRewritingSystem::from_fn(ell, m, |_, _| {
        let allow_empty = rng.gen_bool(0.3);
        Some(random_subset(rng, ell, allow_empty))
    })
    .unwrap()
}

/// Every system with `ell` elements and `m` rules whose images are drawn
/// from `choices`, in a fixed order.
pub fn all_systems(ell: usize, m: usize, choices: &[Option<BitSet>]) -> Vec<SetRewritingSystem> {
    let entries = ell * m;
    let total = choices.len().pow(entries as u32);
    (0..total)
        .map(|mut code| {
            let mut table = vec![vec![None; ell]; m];
            for slot in table.iter_mut().flat_map(|rule| rule.iter_mut()) {
                *slot = choices[code % choices.len()].clone();
                code /= choices.len();
            }
            SetRewritingSystem::new(ell, table).unwrap()
        })
        .collect()
}

pub fn non_emptiable_images(ell: usize) -> Vec<Option<BitSet>> {
    std::iter::once(None)
        .chain((1..(1u64 << ell)).map(|mask| Some(BitSet::from_mask(ell, mask))))
        .collect()
}

pub fn permissive_images(ell: usize) -> Vec<Option<BitSet>> {
    (0..(1u64 << ell)).map(|mask| Some(BitSet::from_mask(ell, mask))).collect()
}

pub fn random_nfa(rng: &mut StdRng, max_states: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let finals = (0..n).map(|_| rng.gen_bool(0.6)).collect();
    let transitions = (0..n * 2)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    Nfa::new(n, 2, 0, finals, transitions).unwrap()
}
