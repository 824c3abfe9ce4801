//! Brute-force reference implementations.
//!
//! Nothing here uses the bit vectors, the trie or the subset searches of the
//! other modules. Membership state is tracked as an explicit list of
//! `(word, offset)` pairs plus a flag saying whether the prefix read so far
//! lies in `L*`; rewriting subsets are sorted vectors of element indices.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::reductions::Nfa;
use crate::srw::SetRewritingSystem;
use crate::words::{Dictionary, Word};

fn raw_words(dict: &Dictionary) -> Vec<Vec<usize>> {
    dict.words().iter().map(|w| w.symbols().to_vec()).collect()
}

fn dp_member(words: &[Vec<usize>], w: &[usize]) -> bool {
    let mut ok = vec![false; w.len() + 1];
    ok[0] = true;
    for end in 1..=w.len() {
        ok[end] = words
            .iter()
            .any(|x| x.len() <= end && ok[end - x.len()] && w[end - x.len()..end] == x[..]);
    }
    ok[w.len()]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

/// Outcome of scanning every word up to a length limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofiniteScan {
    pub verdict: Verdict,
    /// Lengths at which at least one non-member was found.
    pub non_member_lengths: Vec<usize>,
    /// Lexicographically smallest among the longest non-members found.
    pub longest_non_member: Option<Word>,
    pub limit: usize,
}

/// Largest scan limit accepted for binary alphabets.
pub const MAX_SCAN_LIMIT: usize = 24;

/// Scans all words up to `limit` with a factorization DP.
///
/// The star is cofinite once every word whose length lies in the last
/// `‖L‖max` lengths of the scan is a member: a longer word has a suffix of
/// length `limit`, that suffix ends with a dictionary word, and what precedes
/// that word is long enough to be a member by induction. A non-member longer
/// than the general omitted-length bound proves the opposite.
pub fn oracle_cofinite(dict: &Dictionary, limit: usize) -> Result<CofiniteScan> {
    let k = dict.alphabet().size();
    if k > 2 {
        return Err(Error::InvalidArgument(
            "exhaustive scans support alphabets of at most two letters; sample words instead".into(),
        ));
    }
    if k == 2 && limit > MAX_SCAN_LIMIT {
        return Err(Error::InvalidArgument(format!("scan limit {limit} exceeds {MAX_SCAN_LIMIT}")));
    }
    let words = raw_words(dict);
    let max = dict.norm_max();
    let mut non_member_lengths = Vec::new();
    let mut longest_non_member = None;
    let mut window_clean = true;
    let window_start = limit.saturating_sub(max) + 1;
    for len in 0..=limit {
        let count = k.pow(len as u32);
        let mut found = None;
        for code in 0..count {
            let w: Vec<usize> = (0..len).rev().map(|pos| (code / k.pow(pos as u32)) % k).collect();
            if !dp_member(&words, &w) {
                found = Some(w);
                break;
            }
        }
        if let Some(w) = found {
            non_member_lengths.push(len);
            longest_non_member = Some(Word::new(w));
            if len >= window_start {
                window_clean = false;
            }
        }
    }
    let general_bound = (dict.norm_sum() + 1)
        .checked_mul(1usize.checked_shl(max as u32).unwrap_or(usize::MAX))
        .and_then(|v| v.checked_add(1))
        .unwrap_or(usize::MAX);
    let verdict = if limit >= max && window_clean {
        Verdict::Holds
    } else if !window_clean && window_start > general_bound {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    };
    Ok(CofiniteScan {
        verdict,
        non_member_lengths,
        longest_non_member,
        limit,
    })
}

/// Explicit configuration: whether the prefix is in `L*`, and the list of
/// partially read dictionary words as `(word, symbols read)`.
type Config = (bool, Vec<(usize, usize)>);

fn config_step(words: &[Vec<usize>], config: &Config, a: usize) -> Config {
    let (boundary, items) = config;
    let mut next_boundary = false;
    let mut next_items = Vec::new();
    let mut advance = |i: usize, read: usize| {
        if words[i][read] == a {
            if read + 1 == words[i].len() {
                next_boundary = true;
            } else {
                next_items.push((i, read + 1));
            }
        }
    };
    for &(i, read) in items {
        advance(i, read);
    }
    if *boundary {
        for i in 0..words.len() {
            advance(i, 0);
        }
    }
    next_items.sort_unstable();
    next_items.dedup();
    (next_boundary, next_items)
}

fn explore(words: &[Vec<usize>], k: usize, start: Config, cap: usize) -> Result<(Vec<Config>, Vec<Vec<usize>>)> {
    let mut ids: HashMap<Config, usize> = HashMap::from([(start.clone(), 0)]);
    let mut configs = vec![start];
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < configs.len() {
        let mut out = Vec::with_capacity(k);
        for a in 0..k {
            let t = config_step(words, &configs[next], a);
            let id = match ids.get(&t) {
                Some(&id) => id,
                None => {
                    if configs.len() >= cap {
                        return Err(Error::CapExceeded {
                            reached: configs.len() + 1,
                            cap,
                        });
                    }
                    ids.insert(t.clone(), configs.len());
                    configs.push(t);
                    configs.len() - 1
                }
            };
            out.push(id);
        }
        edges.push(out);
        next += 1;
    }
    Ok((configs, edges))
}

/// Exact cofiniteness through the explicit configuration graph: the
/// complement is infinite iff some configuration lies on a cycle and can
/// still reach a rejecting configuration.
pub fn oracle_cofinite_exact(dict: &Dictionary, cap: usize) -> Result<bool> {
    let words = raw_words(dict);
    let k = dict.alphabet().size();
    let (configs, edges) = explore(&words, k, (true, Vec::new()), cap)?;
    let n = configs.len();
    let mut preds = vec![Vec::new(); n];
    for (v, out) in edges.iter().enumerate() {
        for &t in out {
            preds[t].push(v);
        }
    }
    let mut reaches_reject: Vec<bool> = configs.iter().map(|c| !c.0).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| reaches_reject[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &u in &preds[v] {
            if !reaches_reject[u] {
                reaches_reject[u] = true;
                queue.push_back(u);
            }
        }
    }
    for v in (0..n).filter(|&v| reaches_reject[v]) {
        let mut seen = HashSet::new();
        let mut stack: Vec<usize> = edges[v].clone();
        while let Some(u) = stack.pop() {
            if u == v {
                return Ok(false);
            }
            if seen.insert(u) {
                stack.extend(edges[u].iter().copied());
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncompletableSearch {
    /// Lexicographically smallest among the shortest incompletable words.
    Incompletable(Word),
    /// Every configuration reachable from the start was explored.
    Complete,
    /// The length limit was reached first.
    Inconclusive,
}

/// Breadth-first search by word length for a word that kills every
/// configuration, starting from all partial word positions at once.
pub fn oracle_shortest_incompletable(dict: &Dictionary, limit: usize) -> Result<IncompletableSearch> {
    let words = raw_words(dict);
    let k = dict.alphabet().size();
    let mut items = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for read in 1..w.len() {
            items.push((i, read));
        }
    }
    let start: Config = (true, items);
    let mut parent: HashMap<Config, Option<(Config, usize)>> = HashMap::from([(start.clone(), None)]);
    let mut frontier = vec![start];
    for _depth in 0..limit {
        let mut next_frontier = Vec::new();
        for c in &frontier {
            for a in 0..k {
                let t = config_step(&words, c, a);
                if parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t.clone(), Some((c.clone(), a)));
                if !t.0 && t.1.is_empty() {
                    let mut rev = Vec::new();
                    let mut cur = t;
                    while let Some((prev, a)) = parent[&cur].clone() {
                        rev.push(a);
                        cur = prev;
                    }
                    rev.reverse();
                    return Ok(IncompletableSearch::Incompletable(Word::new(rev)));
                }
                next_frontier.push(t);
            }
        }
        if next_frontier.is_empty() {
            return Ok(IncompletableSearch::Complete);
        }
        frontier = next_frontier;
    }
    Ok(if frontier.is_empty() {
        IncompletableSearch::Complete
    } else {
        IncompletableSearch::Inconclusive
    })
}

/// Membership by the factorization DP.
pub fn oracle_member(dict: &Dictionary, word: &Word) -> bool {
    dp_member(&raw_words(dict), word.symbols())
}

/// Completability through explicit configurations.
pub fn oracle_completable(dict: &Dictionary, word: &Word) -> bool {
    let words = raw_words(dict);
    let mut items = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for read in 1..w.len() {
            items.push((i, read));
        }
    }
    let mut c: Config = (true, items);
    for &a in word.symbols() {
        c = config_step(&words, &c, a);
    }
    c.0 || !c.1.is_empty()
}

/// Largest element count accepted by [`oracle_srs_search`].
pub const MAX_SRS_ELEMENTS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrsReport {
    pub immortal: bool,
    /// Longest legal sequence from each singleton `{p_i}`; `None` when
    /// unbounded.
    pub longest_from_singletons: Vec<Option<usize>>,
    /// Shortest emptying length; `None` for non-permissive systems,
    /// `Some(None)` when no emptying sequence exists.
    pub shortest_emptying: Option<Option<usize>>,
}

type Subset = Vec<usize>;

fn apply(table: &[Vec<Option<Subset>>], s: &Subset, rule: usize) -> Option<Subset> {
    let mut out = BTreeSet::new();
    for &e in s {
        out.extend(table[rule][e].as_ref()?.iter().copied());
    }
    Some(out.into_iter().collect())
}

fn longest_from(
    table: &[Vec<Option<Subset>>],
    s: &Subset,
    memo: &mut HashMap<Subset, Option<usize>>,
    open: &mut HashSet<Subset>,
) -> Option<usize> {
    if let Some(&v) = memo.get(s) {
        return v;
    }
    if !open.insert(s.clone()) {
        return None;
    }
    let mut best = Some(0);
    for rule in 0..table.len() {
        if let Some(t) = apply(table, s, rule) {
            best = match (best, longest_from(table, &t, memo, open)) {
                (Some(b), Some(l)) => Some(b.max(l + 1)),
                _ => None,
            };
        }
    }
    open.remove(s);
    memo.insert(s.clone(), best);
    best
}

/// Exhaustive analysis of a small rewriting system.
pub fn oracle_srs_search(srs: &SetRewritingSystem) -> Result<SrsReport> {
    let ell = srs.ell();
    if ell > MAX_SRS_ELEMENTS {
        return Err(Error::InvalidArgument(format!(
            "exhaustive rewriting search supports at most {MAX_SRS_ELEMENTS} elements, got {ell}"
        )));
    }
    let table: Vec<Vec<Option<Subset>>> = (0..srs.m())
        .map(|j| (0..ell).map(|i| srs.image(j, i).map(|s| s.iter().collect())).collect())
        .collect();

    let mut all_subsets: Vec<Subset> = Vec::new();
    for mask in 1u32..(1 << ell) {
        all_subsets.push((0..ell).filter(|&i| mask >> i & 1 == 1).collect());
    }
    let returns_to_itself = |s: &Subset| {
        let mut seen = HashSet::new();
        let mut queue: VecDeque<Subset> = (0..table.len()).filter_map(|r| apply(&table, s, r)).collect();
        while let Some(t) = queue.pop_front() {
            if &t == s {
                return true;
            }
            if seen.insert(t.clone()) {
                queue.extend((0..table.len()).filter_map(|r| apply(&table, &t, r)));
            }
        }
        false
    };
    let immortal = all_subsets.iter().any(returns_to_itself);

    let mut memo = HashMap::new();
    let mut open = HashSet::new();
    let longest_from_singletons = (0..ell)
        .map(|i| longest_from(&table, &vec![i], &mut memo, &mut open))
        .collect();

    let permissive = table.iter().all(|rule| rule.iter().all(Option::is_some));
    let shortest_emptying = permissive.then(|| {
        let full: Subset = (0..ell).collect();
        let mut dist: HashMap<Subset, usize> = HashMap::from([(full.clone(), 0)]);
        let mut queue = VecDeque::from([full]);
        while let Some(s) = queue.pop_front() {
            if s.is_empty() {
                return Some(dist[&s]);
            }
            for r in 0..table.len() {
                let t = apply(&table, &s, r).expect("permissive");
                if !dist.contains_key(&t) {
                    dist.insert(t.clone(), dist[&s] + 1);
                    queue.push_back(t);
                }
            }
        }
        None
    });

    Ok(SrsReport {
        immortal,
        longest_from_singletons,
        shortest_emptying,
    })
}

/// Universality of an NFA by subset construction over ordered sets.
pub fn oracle_nfa_universal(nfa: &Nfa) -> bool {
    let start: BTreeSet<usize> = BTreeSet::from([nfa.initial()]);
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(set) = stack.pop() {
        if !set.iter().any(|&q| nfa.is_final(q)) {
            return false;
        }
        for a in 0..nfa.alphabet_size() {
            let next: BTreeSet<usize> = set.iter().flat_map(|&q| nfa.targets(q, a).iter().copied()).collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{emptying_counter, immortality_counter};
    use crate::words::Alphabet;

    fn dict(words: &[&str]) -> Dictionary {
        Dictionary::from_strs(words.iter().copied()).unwrap()
    }

    #[test]
    fn scan_examples() {
        let scan = oracle_cofinite(&dict(&["000", "00000"]), 12).unwrap();
        assert_eq!(scan.verdict, Verdict::Holds);
        assert_eq!(scan.longest_non_member.unwrap().len(), 7);

        let scan = oracle_cofinite(&dict(&["0", "01", "10", "11"]), 12).unwrap();
        assert_eq!(scan.non_member_lengths, vec![1, 3, 5, 7, 9, 11]);
        assert_eq!(scan.verdict, Verdict::Inconclusive);

        let scan = oracle_cofinite(&dict(&["0", "1"]), 6).unwrap();
        assert_eq!(scan.verdict, Verdict::Holds);
        assert_eq!(scan.longest_non_member, None);

        assert!(oracle_cofinite(&dict(&["a", "b", "c"]), 4).is_err());
    }

    #[test]
    fn exact_cofiniteness() {
        assert!(oracle_cofinite_exact(&dict(&["000", "00000"]), 1000).unwrap());
        assert!(!oracle_cofinite_exact(&dict(&["0", "01", "10", "11"]), 1000).unwrap());
        assert!(!oracle_cofinite_exact(&dict(&["0", "01", "10", "11", "111"]), 1000).unwrap());
        assert!(oracle_cofinite_exact(&dict(&["0", "01", "10", "11", "101", "111"]), 1000).unwrap());
    }

    #[test]
    fn incompletable_examples() {
        let d = Dictionary::with_alphabet(Alphabet::binary(), ["0"]).unwrap();
        assert_eq!(
            oracle_shortest_incompletable(&d, 5).unwrap(),
            IncompletableSearch::Incompletable(Word::new(vec![1]))
        );
        let d = dict(&["00", "01", "10", "11"]);
        assert_eq!(oracle_shortest_incompletable(&d, 10).unwrap(), IncompletableSearch::Complete);
        let d = dict(&["01", "10", "11", "000"]);
        assert!(matches!(
            oracle_shortest_incompletable(&d, 12).unwrap(),
            IncompletableSearch::Incompletable(_)
        ));
        assert!(!oracle_completable(&d, &d.alphabet().parse_word("100010001").unwrap()));
    }

    #[test]
    fn counters() {
        let r = oracle_srs_search(&immortality_counter(3).unwrap()).unwrap();
        assert!(!r.immortal);
        assert_eq!(r.longest_from_singletons[0], Some(6));
        assert_eq!(r.shortest_emptying, None);
        let r = oracle_srs_search(&emptying_counter(3).unwrap()).unwrap();
        assert_eq!(r.shortest_emptying, Some(Some(7)));
        assert!(oracle_srs_search(&immortality_counter(6).unwrap()).is_err());
    }
}
