//! Extremal instances: the two binary counters and the word lists derived
//! from them.
//!
//! Counter elements are `b_0..b_{n-1}`; when the counters are fed to the
//! gadget construction `b_i` becomes the element `p_{i+1}`.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::reductions::{factor_universality_pipeline, frobenius_pipeline};
use crate::srw::SetRewritingSystem;
use crate::words::{Alphabet, Dictionary, Word};

fn require(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("family size must be at least {min}, got {n}")));
    }
    Ok(())
}

/// Mortal, non-emptiable counter whose longest legal sequence from `{b_0}`
/// has length `2^n - 2`. Rule `r_j` sets bit `j` and clears the bits below.
pub fn immortality_counter(n: usize) -> Result<SetRewritingSystem> {
    require(n, 1)?;
    SetRewritingSystem::from_fn(n, n, |j, i| {
        if i == j {
            None
        } else if i < j {
            Some(BitSet::singleton(n, j))
        } else {
            Some(BitSet::from_indices(n, [j, i]))
        }
    })
}

/// Permissive counter whose shortest emptying sequence has length `2^n - 1`.
/// Rule `r_j` decrements when `b_j` is the lowest active bit and resets the
/// counter to its maximum when a lower bit is active.
pub fn emptying_counter(n: usize) -> Result<SetRewritingSystem> {
    require(n, 1)?;
    SetRewritingSystem::from_fn(n, n, |j, i| {
        Some(if i == j {
            BitSet::from_indices(n, 0..j)
        } else if i < j {
            BitSet::full(n)
        } else {
            BitSet::singleton(n, i)
        })
    })
}

/// Binary words whose star is cofinite with longest omitted words of length
/// at least `2^n * n`; the longest word has length `4n + 1`.
pub fn frobenius_hard_family(n: usize) -> Result<Dictionary> {
    require(n, 2)?;
    frobenius_pipeline(&immortality_counter(n)?)
}

/// Incomplete binary words whose shortest incompletable words have length at
/// least `2^n * n`; the longest word has length `4n`.
pub fn incompletable_hard_family(n: usize) -> Result<Dictionary> {
    require(n, 2)?;
    factor_universality_pipeline(&emptying_counter(n)?)
}

fn zeros(k: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(0, k)
}

fn ones(k: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(1, k)
}

struct Builder(Vec<Word>);

impl Builder {
    fn add<I: IntoIterator<Item = usize>>(&mut self, parts: I) {
        self.0.push(Word::new(parts.into_iter().collect()));
    }
}

/// The incompletable family written out from its closed-form word schemata,
/// without running any automaton construction.
pub fn appendix_family(n: usize) -> Result<Dictionary> {
    require(n, 2)?;
    let mut b = Builder(Vec::new());

    // words ending in a forcing state f_x
    for x in 0..n {
        b.add([1].into_iter().chain(zeros(x)));
        b.add(zeros(n + 1 + x));
        for i in 1..=n {
            for k in 0..n {
                for j in 1..n {
                    b.add(zeros(i).chain(ones(j)).chain(zeros(1 + k)).chain([1]).chain(zeros(x)));
                }
                b.add(zeros(i).chain(ones(n)).chain(zeros(k)).chain([1]).chain(zeros(x)));
            }
            for j in 1..n {
                b.add(zeros(i).chain(ones(j)).chain(zeros(1 + n + 1 + x)));
            }
            b.add(zeros(i).chain(ones(n)).chain(zeros(n + 1 + x)));
        }
    }

    // r_j(p_j) = {p_1 .. p_{j-1}}
    for j in 1..n {
        for k in 1..j {
            b.add(zeros(j).chain(ones(j)).chain(zeros(1 + n - k)));
        }
    }
    for k in 1..n {
        b.add(zeros(n).chain(ones(n)).chain(zeros(n - k)));
    }

    // r_j(p_i) = P for i < j
    for j in 1..n {
        for i in 1..j {
            for k in 1..=n {
                b.add(zeros(i).chain(ones(j)).chain(zeros(1 + n - k)));
            }
        }
    }
    for i in 1..n {
        for k in 1..=n {
            b.add(zeros(i).chain(ones(n)).chain(zeros(n - k)));
        }
    }

    // r_j(p_i) = {p_i} for i > j
    for j in 1..n {
        for i in j + 1..=n {
            b.add(zeros(i).chain(ones(j)).chain(zeros(1 + n - i)));
        }
    }

    Dictionary::new(Alphabet::binary(), b.0)
}

/// Words only in the closed-form list and words only in the pipeline output.
pub fn appendix_difference(n: usize) -> Result<(Vec<Word>, Vec<Word>)> {
    let appendix = appendix_family(n)?;
    let pipeline = incompletable_hard_family(n)?;
    let only_appendix = appendix.words().iter().filter(|w| !pipeline.contains(w)).cloned().collect();
    let only_pipeline = pipeline.words().iter().filter(|w| !appendix.contains(w)).cloned().collect();
    Ok((only_appendix, only_pipeline))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, items: &[usize]) -> Option<BitSet> {
        Some(BitSet::from_indices(n, items.iter().copied()))
    }

    #[test]
    fn counter_tables_for_two_bits() {
        let c = immortality_counter(2).unwrap();
        assert_eq!(c.image(0, 0), None);
        assert_eq!(c.image(0, 1).cloned(), set(2, &[0, 1]));
        assert_eq!(c.image(1, 0).cloned(), set(2, &[1]));
        assert_eq!(c.image(1, 1), None);

        let e = emptying_counter(2).unwrap();
        assert_eq!(e.image(0, 0).cloned(), set(2, &[]));
        assert_eq!(e.image(0, 1).cloned(), set(2, &[1]));
        assert_eq!(e.image(1, 0).cloned(), set(2, &[0, 1]));
        assert_eq!(e.image(1, 1).cloned(), set(2, &[0]));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(immortality_counter(0).is_err());
        assert!(emptying_counter(0).is_err());
        assert!(appendix_family(1).is_err());
    }

    #[test]
    fn appendix_contains_listed_words() {
        let d = appendix_family(2).unwrap();
        let has = |s: &str| d.contains(&d.alphabet().parse_word(s).unwrap());
        assert!(has("1") && has("10") && has("000") && has("0000"));
        assert!(has("00110"));
        assert_eq!(d.norm_max(), 8);
    }
}
