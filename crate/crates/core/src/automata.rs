//! Deterministic automata, the Kleene-star NFA and subset-space searches.
//!
//! The Kleene-star NFA is never determinized up front. Every analysis walks
//! the subsets of NFA states that are actually reachable, with the empty
//! subset kept as an explicit absorbing configuration.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::strongly_connected;
use crate::words::{Symbol, Word};

/// Total deterministic automaton with an optional designated sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    state_count: usize,
    alphabet_size: usize,
    transitions: Vec<usize>,
    initial: usize,
    finals: Vec<bool>,
    sink: Option<usize>,
}

impl Dfa {
    /// `transitions[q * alphabet_size + a]` is the successor of `q` on `a`.
    pub fn new(
        state_count: usize,
        alphabet_size: usize,
        transitions: Vec<usize>,
        initial: usize,
        finals: Vec<bool>,
        sink: Option<usize>,
    ) -> Result<Self> {
        if state_count == 0 || alphabet_size == 0 {
            return Err(Error::InvalidAutomaton(
                "need at least one state and one symbol".into(),
            ));
        }
        if transitions.len() != state_count * alphabet_size {
            return Err(Error::InvalidAutomaton(format!(
                "expected {} transitions, got {}",
                state_count * alphabet_size,
                transitions.len()
            )));
        }
        if finals.len() != state_count {
            return Err(Error::InvalidAutomaton("final flags do not match state count".into()));
        }
        if initial >= state_count {
            return Err(Error::InvalidAutomaton(format!("initial state {initial} out of range")));
        }
        if let Some(&bad) = transitions.iter().find(|&&t| t >= state_count) {
            return Err(Error::InvalidAutomaton(format!("transition target {bad} out of range")));
        }
        if let Some(s) = sink {
            if s >= state_count {
                return Err(Error::InvalidAutomaton(format!("sink {s} out of range")));
            }
            if finals[s] {
                return Err(Error::InvalidAutomaton("sink must not be final".into()));
            }
            if (0..alphabet_size).any(|a| transitions[s * alphabet_size + a] != s) {
                return Err(Error::InvalidAutomaton("sink must loop on every symbol".into()));
            }
        }
        Ok(Dfa {
            state_count,
            alphabet_size,
            transitions,
            initial,
            finals,
            sink,
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    #[inline]
    pub fn next(&self, state: usize, symbol: Symbol) -> usize {
        self.transitions[state * self.alphabet_size + symbol]
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn final_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count).filter(|&q| self.finals[q])
    }

    pub fn run(&self, word: &[Symbol]) -> usize {
        word.iter().fold(self.initial, |q, &a| self.next(q, a))
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.finals[self.run(word)]
    }

    /// Depth of every non-sink state when the non-sink part is a tree rooted
    /// at the initial state (every other state has exactly one incoming edge
    /// and the root has none). `None` for any other shape.
    pub fn tree_levels(&self) -> Option<Vec<usize>> {
        let k = self.alphabet_size;
        let mut indegree = vec![0usize; self.state_count];
        for q in 0..self.state_count {
            if Some(q) == self.sink {
                continue;
            }
            for a in 0..k {
                let t = self.next(q, a);
                if Some(t) != self.sink {
                    indegree[t] += 1;
                }
            }
        }
        let mut levels = vec![usize::MAX; self.state_count];
        levels[self.initial] = 0;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let t = self.next(q, a);
                if Some(t) != self.sink && levels[t] == usize::MAX {
                    levels[t] = levels[q] + 1;
                    queue.push_back(t);
                }
            }
        }
        let tree = (0..self.state_count).all(|q| {
            Some(q) == self.sink
                || if q == self.initial {
                    indegree[q] == 0
                } else {
                    indegree[q] == 1 && levels[q] != usize::MAX
                }
        });
        tree.then_some(levels)
    }

    /// Text dump: a `dfa <states> <symbols>` header, `initial`, `final` and
    /// optional `sink` stanzas, then one `src symbol dst` line per transition.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dfa {} {}", self.state_count, self.alphabet_size);
        let _ = writeln!(out, "initial {}", self.initial);
        out.push_str("final");
        for q in self.final_states() {
            let _ = write!(out, " {q}");
        }
        out.push('\n');
        if let Some(s) = self.sink {
            let _ = writeln!(out, "sink {s}");
        }
        for q in 0..self.state_count {
            for a in 0..self.alphabet_size {
                let _ = writeln!(out, "{q} {a} {}", self.next(q, a));
            }
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut initial = None;
        let mut finals_list: Vec<usize> = Vec::new();
        let mut sink = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let num = |tok: &str, line: usize| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("expected a number, found {tok:?}"),
            })
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            match toks[0] {
                "dfa" if toks.len() == 3 => {
                    header = Some((num(toks[1], line)?, num(toks[2], line)?));
                }
                "initial" if toks.len() == 2 => initial = Some(num(toks[1], line)?),
                "final" => {
                    for t in &toks[1..] {
                        finals_list.push(num(t, line)?);
                    }
                }
                "sink" if toks.len() == 2 => sink = Some(num(toks[1], line)?),
                _ if toks.len() == 3 => {
                    edges.push((num(toks[0], line)?, num(toks[1], line)?, num(toks[2], line)?));
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unrecognized line {trimmed:?}"),
                    })
                }
            }
        }
        let (n, k) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `dfa <states> <symbols>` header".into(),
        })?;
        let initial = initial.ok_or(Error::Parse {
            line: 0,
            message: "missing `initial` stanza".into(),
        })?;
        let mut transitions = vec![usize::MAX; n * k];
        for (q, a, t) in edges {
            if q >= n || a >= k {
                return Err(Error::InvalidAutomaton(format!("transition {q} {a} out of range")));
            }
            transitions[q * k + a] = t;
        }
        if transitions.contains(&usize::MAX) {
            return Err(Error::InvalidAutomaton("transition function is not total".into()));
        }
        let mut finals = vec![false; n];
        for q in finals_list {
            if q >= n {
                return Err(Error::InvalidAutomaton(format!("final state {q} out of range")));
            }
            finals[q] = true;
        }
        Dfa::new(n, k, transitions, initial, finals, sink)
    }
}

/// NFA for `L*` built from a DFA for `L`: the sink is dropped, every final
/// state carries an ε-move back to the initial state, and the initial state
/// is final. Stepping always returns ε-closed subsets.
#[derive(Clone, Debug)]
pub struct KleeneNfa {
    state_count: usize,
    alphabet_size: usize,
    /// Deterministic part; `None` stands for the removed sink.
    delta: Vec<Option<usize>>,
    initial: usize,
    finals: BitSet,
    levels: Option<Vec<usize>>,
    dfa_states: Vec<usize>,
}

pub fn kleene_star_nfa(dfa: &Dfa) -> Result<KleeneNfa> {
    if dfa.is_final(dfa.initial()) {
        return Err(Error::AcceptsEmptyWord);
    }
    let k = dfa.alphabet_size();
    let sink = dfa.sink();

    // non-returning: no non-empty word leads back to the initial state
    let mut seen = vec![false; dfa.state_count()];
    let mut queue = VecDeque::new();
    for a in 0..k {
        let t = dfa.next(dfa.initial(), a);
        if !seen[t] {
            seen[t] = true;
            queue.push_back(t);
        }
    }
    while let Some(q) = queue.pop_front() {
        if q == dfa.initial() {
            return Err(Error::ReturningInitial);
        }
        for a in 0..k {
            let t = dfa.next(q, a);
            if !seen[t] && Some(t) != sink {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }

    let dfa_states: Vec<usize> = (0..dfa.state_count()).filter(|&q| Some(q) != sink).collect();
    let mut renumber = vec![None; dfa.state_count()];
    for (new, &old) in dfa_states.iter().enumerate() {
        renumber[old] = Some(new);
    }
    let n = dfa_states.len();
    let mut delta = vec![None; n * k];
    let mut finals = BitSet::empty(n);
    for (new, &old) in dfa_states.iter().enumerate() {
        for a in 0..k {
            delta[new * k + a] = renumber[dfa.next(old, a)];
        }
        if dfa.is_final(old) {
            finals.insert(new);
        }
    }
    let initial = renumber[dfa.initial()].expect("initial state is not the sink");
    finals.insert(initial);
    let levels = dfa
        .tree_levels()
        .map(|lv| dfa_states.iter().map(|&q| lv[q]).collect());

    Ok(KleeneNfa {
        state_count: n,
        alphabet_size: k,
        delta,
        initial,
        finals,
        levels,
        dfa_states,
    })
}

impl KleeneNfa {
    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BitSet {
        &self.finals
    }

    /// Depth of each state in the prefix tree, when the source DFA was a tree.
    pub fn levels(&self) -> Option<&[usize]> {
        self.levels.as_deref()
    }

    /// Index in the source DFA of NFA state `state`.
    pub fn dfa_state(&self, state: usize) -> usize {
        self.dfa_states[state]
    }

    /// NFA index of source-DFA state `dfa_state`, `None` for the sink.
    pub fn nfa_state(&self, dfa_state: usize) -> Option<usize> {
        self.dfa_states.binary_search(&dfa_state).ok()
    }

    pub fn successor(&self, state: usize, symbol: Symbol) -> Option<usize> {
        self.delta[state * self.alphabet_size + symbol]
    }

    pub fn initial_set(&self) -> BitSet {
        BitSet::singleton(self.state_count, self.initial)
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.state_count)
    }

    pub fn is_accepting(&self, set: &BitSet) -> bool {
        set.intersects(&self.finals)
    }

    /// Adds the initial state when a final state is active.
    pub fn close(&self, set: &mut BitSet) {
        if set.intersects(&self.finals) {
            set.insert(self.initial);
        }
    }

    pub fn step(&self, set: &BitSet, symbol: Symbol) -> BitSet {
        subset_step(self, set, symbol)
    }

    /// Closes `start` and feeds it `word`.
    pub fn run(&self, start: &BitSet, word: &[Symbol]) -> BitSet {
        let mut set = start.clone();
        self.close(&mut set);
        for &a in word {
            set = self.step(&set, a);
        }
        set
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.is_accepting(&self.run(&self.initial_set(), word))
    }
}

/// One symbol of subset stepping followed by ε-closure.
pub fn subset_step(nfa: &KleeneNfa, set: &BitSet, symbol: Symbol) -> BitSet {
    let mut out = BitSet::empty(nfa.state_count);
    for q in set.iter() {
        if let Some(t) = nfa.successor(q, symbol) {
            out.insert(t);
        }
    }
    nfa.close(&mut out);
    out
}

fn level_occupancy(levels: &[usize], set: &BitSet, counts: &mut Vec<usize>) -> usize {
    counts.clear();
    let mut worst = 0;
    for q in set.iter() {
        let l = levels[q];
        if counts.len() <= l {
            counts.resize(l + 1, 0);
        }
        counts[l] += 1;
        worst = worst.max(counts[l]);
    }
    worst
}

/// The reachable part of the subset automaton of a [`KleeneNfa`].
#[derive(Clone, Debug)]
pub struct SubsetDfa {
    alphabet_size: usize,
    subsets: Vec<BitSet>,
    transitions: Vec<usize>,
    accepting: Vec<bool>,
    parents: Vec<Option<(usize, Symbol)>>,
    empty: Option<usize>,
    max_level_occupancy: Option<usize>,
}

/// Breadth-first exploration of the subsets reachable from `start` (after
/// closing it). Fails once more than `cap` subsets would be stored.
pub fn determinize_reachable(nfa: &KleeneNfa, start: &BitSet, cap: usize) -> Result<SubsetDfa> {
    if cap == 0 {
        return Err(Error::InvalidArgument("subset cap must be at least 1".into()));
    }
    let k = nfa.alphabet_size;
    let mut start = start.clone();
    nfa.close(&mut start);

    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    let mut parents = vec![None];
    index.insert(start, 0);
    let mut transitions: Vec<usize> = Vec::new();
    let mut counts = Vec::new();
    let mut occupancy = 0;

    let mut next = 0;
    while next < subsets.len() {
        if let Some(levels) = &nfa.levels {
            occupancy = occupancy.max(level_occupancy(levels, &subsets[next], &mut counts));
        }
        for a in 0..k {
            let target = subset_step(nfa, &subsets[next], a);
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= cap {
                        return Err(Error::CapExceeded {
                            reached: subsets.len() + 1,
                            cap,
                        });
                    }
                    let id = subsets.len();
                    index.insert(target.clone(), id);
                    subsets.push(target);
                    parents.push(Some((next, a)));
                    id
                }
            };
            transitions.push(id);
        }
        next += 1;
    }

    let accepting = subsets.iter().map(|s| nfa.is_accepting(s)).collect();
    let empty = subsets.iter().position(BitSet::is_empty);
    Ok(SubsetDfa {
        alphabet_size: k,
        subsets,
        transitions,
        accepting,
        parents,
        empty,
        max_level_occupancy: nfa.levels.as_ref().map(|_| occupancy),
    })
}

/// Outcome of a breadth-first search for the empty subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptyingSearch {
    /// Shortest (then lexicographically smallest) word leading to ∅.
    pub word: Option<Word>,
    /// Distinct subsets stored by the search.
    pub visited: usize,
}

/// Breadth-first search from `start` that stops as soon as ∅ appears.
/// Symbols are tried in increasing order, so the returned word is the
/// lexicographically smallest among the shortest ones.
pub fn shortest_word_to_empty(nfa: &KleeneNfa, start: &BitSet, cap: usize) -> Result<EmptyingSearch> {
    if cap == 0 {
        return Err(Error::InvalidArgument("subset cap must be at least 1".into()));
    }
    let mut start = start.clone();
    nfa.close(&mut start);
    if start.is_empty() {
        return Ok(EmptyingSearch {
            word: Some(Word::empty()),
            visited: 1,
        });
    }
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    let mut parents: Vec<Option<(usize, Symbol)>> = vec![None];
    index.insert(start, 0);
    let mut next = 0;
    while next < subsets.len() {
        for a in 0..nfa.alphabet_size {
            let target = subset_step(nfa, &subsets[next], a);
            if index.contains_key(&target) {
                continue;
            }
            if target.is_empty() {
                let mut word = trace_parents(&parents, next);
                word.push(a);
                return Ok(EmptyingSearch {
                    word: Some(word),
                    visited: subsets.len() + 1,
                });
            }
            if subsets.len() >= cap {
                return Err(Error::CapExceeded {
                    reached: subsets.len() + 1,
                    cap,
                });
            }
            index.insert(target.clone(), subsets.len());
            subsets.push(target);
            parents.push(Some((next, a)));
        }
        next += 1;
    }
    Ok(EmptyingSearch {
        word: None,
        visited: subsets.len(),
    })
}

fn trace_parents(parents: &[Option<(usize, Symbol)>], mut node: usize) -> Word {
    let mut rev = Vec::new();
    while let Some((p, a)) = parents[node] {
        rev.push(a);
        node = p;
    }
    rev.reverse();
    Word::new(rev)
}

/// A word family `prefix · pump^k · suffix` that stays outside the language
/// for every `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pump {
    pub prefix: Word,
    pub pump: Word,
    pub suffix: Word,
}

impl Pump {
    pub fn instance(&self, k: usize) -> Word {
        self.prefix.concat(&self.pump.repeat(k)).concat(&self.suffix)
    }
}

impl SubsetDfa {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn subsets(&self) -> &[BitSet] {
        &self.subsets
    }

    pub fn subset(&self, id: usize) -> &BitSet {
        &self.subsets[id]
    }

    pub fn is_accepting(&self, id: usize) -> bool {
        self.accepting[id]
    }

    pub fn next(&self, id: usize, symbol: Symbol) -> usize {
        self.transitions[id * self.alphabet_size + symbol]
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.transitions[id * self.alphabet_size..(id + 1) * self.alphabet_size]
    }

    /// Id of the empty subset, when reachable.
    pub fn empty_subset(&self) -> Option<usize> {
        self.empty
    }

    /// Largest number of simultaneously active states sharing one trie level,
    /// over all stored subsets. `None` when the NFA has no level structure.
    pub fn max_level_occupancy(&self) -> Option<usize> {
        self.max_level_occupancy
    }

    /// Shortest word from the start subset to `id` (BFS tree).
    pub fn path_to(&self, id: usize) -> Word {
        trace_parents(&self.parents, id)
    }

    /// Subsets from which a non-accepting subset can be reached (including
    /// the non-accepting ones themselves).
    fn coreaches_rejection(&self) -> Vec<bool> {
        let n = self.len();
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            for &t in self.successors(v) {
                reverse[t].push(v);
            }
        }
        let mut mark = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| !self.accepting[v]).collect();
        for &v in &queue {
            mark[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &u in &reverse[v] {
                if !mark[u] {
                    mark[u] = true;
                    queue.push_back(u);
                }
            }
        }
        mark
    }

    fn shortest_path_between<F: Fn(usize) -> bool>(&self, from: usize, goal: F, nonempty: bool) -> Option<Word> {
        if !nonempty && goal(from) {
            return Some(Word::empty());
        }
        let mut parent: HashMap<usize, (usize, Symbol)> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = vec![false; self.len()];
        seen[from] = !nonempty;
        while let Some(v) = queue.pop_front() {
            for a in 0..self.alphabet_size {
                let t = self.next(v, a);
                if goal(t) {
                    let mut rev = vec![a];
                    let mut cur = v;
                    while cur != from {
                        let (p, s) = parent[&cur];
                        rev.push(s);
                        cur = p;
                    }
                    rev.reverse();
                    return Some(Word::new(rev));
                }
                if !seen[t] {
                    seen[t] = true;
                    parent.insert(t, (v, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }
}

/// Whether some cycle of the subset graph passes through a non-accepting
/// subset. A reachable ∅ always counts, since it loops on itself.
pub fn has_nonfinal_cycle(sd: &SubsetDfa) -> bool {
    let comps = strongly_connected(sd.len(), |v| sd.successors(v));
    (0..sd.len()).any(|v| !sd.accepting[v] && comps.cyclic[comps.component[v]])
}

/// Whether some cycle can be followed by a path to a non-accepting subset,
/// i.e. whether the recognized language has an infinite complement. This is
/// exact on non-minimal subset automata.
pub fn has_rejecting_cycle(sd: &SubsetDfa) -> bool {
    let comps = strongly_connected(sd.len(), |v| sd.successors(v));
    let co = sd.coreaches_rejection();
    (0..sd.len()).any(|v| co[v] && comps.cyclic[comps.component[v]])
}

/// A pump witnessing an infinite complement, or `None` when the complement
/// is finite. Prefers a cycle through a non-accepting subset, in which case
/// the suffix is empty.
pub fn rejecting_pump(sd: &SubsetDfa) -> Option<Pump> {
    let comps = strongly_connected(sd.len(), |v| sd.successors(v));
    let co = sd.coreaches_rejection();
    let on_cycle = |v: usize| comps.cyclic[comps.component[v]];
    let anchor = (0..sd.len())
        .find(|&v| !sd.accepting[v] && on_cycle(v))
        .or_else(|| (0..sd.len()).find(|&v| co[v] && on_cycle(v)))?;
    let prefix = sd.path_to(anchor);
    let pump = sd
        .shortest_path_between(anchor, |t| t == anchor, true)
        .expect("anchor lies on a cycle");
    let suffix = sd
        .shortest_path_between(anchor, |t| !sd.accepting[t], false)
        .expect("anchor reaches a rejecting subset");
    Some(Pump {
        prefix,
        pump,
        suffix,
    })
}

/// Longest word from the start subset ending in a non-accepting subset,
/// lexicographically smallest among the longest. `None` when every reachable
/// subset accepts. Errors when such words are unbounded.
pub fn longest_path_to_nonfinal(sd: &SubsetDfa) -> Result<Option<Word>> {
    if has_rejecting_cycle(sd) {
        return Err(Error::Contract(
            "subset automaton has a cycle that reaches a rejecting subset".into(),
        ));
    }
    let n = sd.len();
    let co = sd.coreaches_rejection();
    if n == 0 || !co[0] {
        return Ok(None);
    }
    // post-order over the acyclic co-reachable part
    const UNSET: usize = usize::MAX;
    let mut longest = vec![UNSET; n];
    let mut frames: Vec<(usize, usize)> = vec![(0, 0)];
    let mut entered = vec![false; n];
    entered[0] = true;
    while let Some(frame) = frames.last_mut() {
        let v = frame.0;
        if frame.1 < sd.alphabet_size {
            let t = sd.next(v, frame.1);
            frame.1 += 1;
            if co[t] && !entered[t] {
                entered[t] = true;
                frames.push((t, 0));
            }
            continue;
        }
        frames.pop();
        let mut best = if sd.accepting[v] { None } else { Some(0) };
        for &t in sd.successors(v) {
            if co[t] {
                debug_assert_ne!(longest[t], UNSET);
                best = Some(best.map_or(longest[t] + 1, |b: usize| b.max(longest[t] + 1)));
            }
        }
        longest[v] = best.expect("co-reachable subset has a rejecting continuation");
    }

    let mut word = Word::empty();
    let mut v = 0;
    while longest[v] > 0 {
        let (a, t) = (0..sd.alphabet_size)
            .map(|a| (a, sd.next(v, a)))
            .find(|&(_, t)| co[t] && longest[t] + 1 == longest[v])
            .expect("longest path continues");
        word.push(a);
        v = t;
    }
    debug_assert!(!sd.accepting[v]);
    Ok(Some(word))
}

/// GraphViz rendering of a subset automaton; states are labelled with their
/// NFA members, rejecting subsets are drawn as boxes.
pub fn subset_dfa_to_dot(sd: &SubsetDfa, glyphs: &[char]) -> String {
    let mut out = String::from("digraph subsets {\n  rankdir=LR;\n");
    for (id, set) in sd.subsets.iter().enumerate() {
        let members: Vec<String> = set.iter().map(|q| q.to_string()).collect();
        let shape = if sd.accepting[id] { "ellipse" } else { "box" };
        let _ = writeln!(
            out,
            "  s{id} [label=\"{{{}}}\", shape={shape}];",
            members.join(",")
        );
    }
    for v in 0..sd.len() {
        for a in 0..sd.alphabet_size {
            let glyph = glyphs.get(a).copied().unwrap_or('?');
            let _ = writeln!(out, "  s{v} -> s{} [label=\"{glyph}\"];", sd.next(v, a));
        }
    }
    out.push_str("}\n");
    out
}
