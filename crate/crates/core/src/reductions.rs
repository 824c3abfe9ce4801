//! Executable reductions: NFA non-universality to set rewriting, set
//! rewriting to the gadget DFA (two variants), binarization, and word-list
//! extraction.
//!
//! Gadget alphabet: symbol 0 is `α`, symbol `j` (1-based) is the rule letter
//! `r_j`. In the binary encoding `α` is `0`, `r_j` is `1^j 0` for `j < m`
//! and `r_m` is `1^m`.
//!
//! Interpretation note: outside the element states every rule letter acts the
//! same way, so after binarization those states read a single `1` and the
//! rest of a rule-letter encoding is consumed from wherever that `1` leads.

use std::collections::VecDeque;

use crate::automata::Dfa;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::srw::SetRewritingSystem;
use crate::words::{Alphabet, Dictionary, Symbol, Word};

/// Plain NFA with a single initial state, used as input to [`nfa_to_srs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet_size: usize,
    initial: usize,
    finals: Vec<bool>,
    /// `transitions[q * alphabet_size + a]`, sorted and deduplicated.
    transitions: Vec<Vec<usize>>,
}

impl Nfa {
    pub fn new(
        state_count: usize,
        alphabet_size: usize,
        initial: usize,
        finals: Vec<bool>,
        mut transitions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if state_count == 0 || alphabet_size == 0 {
            return Err(Error::InvalidAutomaton("need at least one state and one symbol".into()));
        }
        if initial >= state_count || finals.len() != state_count {
            return Err(Error::InvalidAutomaton("initial state or final flags out of range".into()));
        }
        if transitions.len() != state_count * alphabet_size {
            return Err(Error::InvalidAutomaton("transition table has the wrong size".into()));
        }
        for targets in &mut transitions {
            targets.sort_unstable();
            targets.dedup();
            if targets.iter().any(|&t| t >= state_count) {
                return Err(Error::InvalidAutomaton("transition target out of range".into()));
            }
        }
        Ok(Nfa {
            state_count,
            alphabet_size,
            initial,
            finals,
            transitions,
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

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn targets(&self, state: usize, symbol: Symbol) -> &[usize] {
        &self.transitions[state * self.alphabet_size + symbol]
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut current = BitSet::singleton(self.state_count, self.initial);
        for &a in word {
            let mut next = BitSet::empty(self.state_count);
            for q in current.iter() {
                for &t in self.targets(q, a) {
                    next.insert(t);
                }
            }
            current = next;
        }
        current.iter().any(|q| self.finals[q])
    }

    /// Shortest rejected word, found by breadth-first subset construction.
    pub fn shortest_rejected(&self) -> Option<Word> {
        let start = BitSet::singleton(self.state_count, self.initial);
        let mut seen = std::collections::HashMap::from([(start.clone(), None::<(BitSet, Symbol)>)]);
        let mut queue = VecDeque::from([start]);
        while let Some(set) = queue.pop_front() {
            if !set.iter().any(|q| self.finals[q]) {
                let mut rev = Vec::new();
                let mut cur = set;
                while let Some((prev, a)) = seen[&cur].clone() {
                    rev.push(a);
                    cur = prev;
                }
                rev.reverse();
                return Some(Word::new(rev));
            }
            for a in 0..self.alphabet_size {
                let mut next = BitSet::empty(self.state_count);
                for q in set.iter() {
                    for &t in self.targets(q, a) {
                        next.insert(t);
                    }
                }
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), Some((set.clone(), a)));
                    queue.push_back(next);
                }
            }
        }
        None
    }

    pub fn is_universal(&self) -> bool {
        self.shortest_rejected().is_none()
    }
}

/// Number of counter bits used by [`nfa_to_srs`]: one per NFA state, but at
/// least two. A single bit cannot count past the first letter, which would
/// make every one-state NFA look universal.
pub fn counter_width(nfa: &Nfa) -> usize {
    nfa.state_count().max(2)
}

/// Element index of the counter bit `b_i` in a system built by [`nfa_to_srs`].
pub fn counter_element(nfa: &Nfa, bit: usize) -> usize {
    nfa.state_count() + bit
}

/// Rule index of `r_{a,j}`; the reset rule comes last.
pub fn letter_rule(nfa: &Nfa, symbol: Symbol, position: usize) -> usize {
    symbol * counter_width(nfa) + position
}

pub fn reset_rule(nfa: &Nfa) -> usize {
    nfa.alphabet_size() * counter_width(nfa)
}

/// Non-emptiable system that is immortal exactly when `nfa` rejects some
/// word. Elements are the NFA states followed by the counter bits
/// `b_0..b_{c-1}` with `c` = [`counter_width`].
pub fn nfa_to_srs(nfa: &Nfa) -> Result<SetRewritingSystem> {
    let n = nfa.state_count();
    let c = counter_width(nfa);
    let ell = n + c;
    let bit = |i: usize| n + i;
    let mut rules = Vec::with_capacity(nfa.alphabet_size() * c + 1);
    for a in 0..nfa.alphabet_size() {
        for j in 0..c {
            let mut rule = Vec::with_capacity(ell);
            for q in 0..n {
                let mut image = BitSet::from_indices(ell, nfa.targets(q, a).iter().copied());
                image.insert(bit(j));
                rule.push(Some(image));
            }
            for i in 0..c {
                rule.push(match i.cmp(&j) {
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Less => Some(BitSet::singleton(ell, bit(j))),
                    std::cmp::Ordering::Greater => Some(BitSet::from_indices(ell, [bit(j), bit(i)])),
                });
            }
            rules.push(rule);
        }
    }
    let restart = BitSet::from_indices(ell, [nfa.initial(), bit(0)]);
    let reset = (0..ell)
        .map(|e| if e < n && nfa.is_final(e) { None } else { Some(restart.clone()) })
        .collect();
    rules.push(reset);
    let srs = SetRewritingSystem::new(ell, rules)?;
    debug_assert!(srs.is_non_emptiable());
    Ok(srs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetVariant {
    /// Forcing chain `f_0..f_ell`; used for cofiniteness.
    Frobenius,
    /// Forcing chain `f_0..f_{ell-1}`; used for completeness.
    FactorUniversality,
}

/// Role of a gadget state. Indices are 0-based: `Element(i)` is `p_{i+1}`,
/// `Setting { step: x, .. }` is `s_x` with `x` in `1..=ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateRole {
    Initial,
    Element(usize),
    Forcing(usize),
    Setting { element: usize, rule: usize, step: usize },
    Guard,
    Sink,
}

/// Gadget DFA over `{α} ∪ R` together with the role of each state.
#[derive(Clone, Debug)]
pub struct GadgetDfa {
    dfa: Dfa,
    roles: Vec<StateRole>,
    variant: GadgetVariant,
    ell: usize,
    m: usize,
    setting_base: Vec<Option<usize>>,
}

pub const ALPHA: Symbol = 0;

/// Gadget symbol of the 0-based rule index `rule`.
pub fn rule_letter(rule: usize) -> Symbol {
    rule + 1
}

impl GadgetDfa {
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn roles(&self) -> &[StateRole] {
        &self.roles
    }

    pub fn role(&self, state: usize) -> StateRole {
        self.roles[state]
    }

    pub fn variant(&self) -> GadgetVariant {
        self.variant
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> usize {
        1 + i
    }

    pub fn forcing(&self, x: usize) -> usize {
        1 + self.ell + x
    }

    /// Number of forcing states.
    pub fn forcing_count(&self) -> usize {
        match self.variant {
            GadgetVariant::Frobenius => self.ell + 1,
            GadgetVariant::FactorUniversality => self.ell,
        }
    }

    /// `s^{i,j}_x` (0-based element and rule, `x` in `1..=ell`), if present.
    pub fn setting(&self, element: usize, rule: usize, step: usize) -> Option<usize> {
        assert!((1..=self.ell).contains(&step));
        self.setting_base[element * self.m + rule].map(|base| base + (self.ell - step))
    }

    pub fn guard(&self) -> usize {
        self.roles.len() - 2
    }

    pub fn sink(&self) -> usize {
        self.roles.len() - 1
    }

    /// States that make up `Q_P`, in order.
    pub fn element_states(&self) -> std::ops::Range<usize> {
        1..1 + self.ell
    }

    /// The word `r_{i_1} α^ell ... r_{i_k} α^ell` for 0-based rule indices.
    pub fn simulating_word(&self, rules: &[usize]) -> Word {
        let mut symbols = Vec::with_capacity(rules.len() * (self.ell + 1));
        for &r in rules {
            symbols.push(rule_letter(r));
            symbols.extend(std::iter::repeat_n(ALPHA, self.ell));
        }
        Word::new(symbols)
    }
}

/// Builds the gadget DFA of `srs`. The Frobenius variant needs a
/// non-emptiable system, the factor-universality variant a permissive one.
pub fn srs_to_dfa(srs: &SetRewritingSystem, variant: GadgetVariant) -> Result<GadgetDfa> {
    match variant {
        GadgetVariant::Frobenius if !srs.is_non_emptiable() => {
            return Err(Error::Precondition("the Frobenius gadget needs a non-emptiable system".into()))
        }
        GadgetVariant::FactorUniversality if !srs.is_permissive() => {
            return Err(Error::Precondition(
                "the factor-universality gadget needs a permissive system".into(),
            ))
        }
        _ => {}
    }
    let ell = srs.ell();
    let m = srs.m();
    let k = m + 1;
    let forcing_count = match variant {
        GadgetVariant::Frobenius => ell + 1,
        GadgetVariant::FactorUniversality => ell,
    };

    let mut roles = vec![StateRole::Initial];
    roles.extend((0..ell).map(StateRole::Element));
    roles.extend((0..forcing_count).map(StateRole::Forcing));
    let mut setting_base = vec![None; ell * m];
    for i in 0..ell {
        for j in 0..m {
            if srs.image(j, i).is_some() {
                setting_base[i * m + j] = Some(roles.len());
                roles.extend((1..=ell).rev().map(|step| StateRole::Setting {
                    element: i,
                    rule: j,
                    step,
                }));
            }
        }
    }
    roles.push(StateRole::Guard);
    roles.push(StateRole::Sink);

    let n = roles.len();
    let q0 = 0;
    let p = |i: usize| 1 + i;
    let f = |x: usize| 1 + ell + x;
    let guard = n - 2;
    let sink = n - 1;
    let mut delta = vec![usize::MAX; n * k];
    let mut set = |q: usize, a: Symbol, t: usize| delta[q * k + a] = t;
    let all_rules = 1..=m;

    set(q0, ALPHA, p(0));
    for a in all_rules.clone() {
        set(q0, a, f(0));
    }
    for i in 0..ell {
        set(p(i), ALPHA, if i + 1 < ell { p(i + 1) } else { f(0) });
        for j in 0..m {
            let target = setting_base[i * m + j].unwrap_or(f(0));
            set(p(i), rule_letter(j), target);
        }
    }
    for x in 0..forcing_count {
        set(f(x), ALPHA, if x + 1 < forcing_count { f(x + 1) } else { sink });
        for a in all_rules.clone() {
            set(f(x), a, sink);
        }
    }
    for base in setting_base.iter().flatten() {
        // base holds s_ell, base + ell - 1 holds s_1
        for offset in 0..ell {
            let q = base + offset;
            set(q, ALPHA, if offset + 1 < ell { q + 1 } else { guard });
            for a in all_rules.clone() {
                set(q, a, f(0));
            }
        }
    }
    set(guard, ALPHA, f(0));
    for a in all_rules.clone() {
        set(guard, a, sink);
    }
    for a in 0..k {
        set(sink, a, sink);
    }
    debug_assert!(!delta.contains(&usize::MAX));

    let finals = roles
        .iter()
        .map(|role| match *role {
            StateRole::Forcing(_) => true,
            StateRole::Setting { element, rule, step } => srs
                .image(rule, element)
                .is_some_and(|image| image.contains(step - 1)),
            _ => false,
        })
        .collect();

    let dfa = Dfa::new(n, k, delta, q0, finals, Some(sink))?;
    Ok(GadgetDfa {
        dfa,
        roles,
        variant,
        ell,
        m,
        setting_base,
    })
}

/// Binary encoding of a gadget word over `m` rule letters.
pub fn encode_word(m: usize, word: &[Symbol]) -> Word {
    let mut bits = Vec::new();
    for &a in word {
        if a == ALPHA {
            bits.push(0);
        } else {
            assert!(a <= m, "rule letter {a} out of range for {m} rules");
            bits.extend(std::iter::repeat_n(1, a));
            if a < m {
                bits.push(0);
            }
        }
    }
    Word::new(bits)
}

/// Decodes a binary word into gadget letters. The second component is the
/// number of trailing `1`s that do not yet form a complete code word.
pub fn decode_word(m: usize, bits: &[Symbol]) -> Result<(Word, usize)> {
    let mut out = Vec::new();
    let mut ones = 0;
    for &b in bits {
        match b {
            0 if ones == 0 => out.push(ALPHA),
            0 => {
                out.push(ones);
                ones = 0;
            }
            1 => {
                ones += 1;
                if ones == m {
                    out.push(m);
                    ones = 0;
                }
            }
            other => return Err(Error::SymbolOutOfRange { symbol: other, size: 2 }),
        }
    }
    Ok((Word::new(out), ones))
}

/// Binary DFA: element states decode rule letters through `m - 1` fresh
/// non-final states each (appended after the gadget states); everywhere else
/// `0` acts as `α` and `1` as any rule letter.
pub fn binarize(gadget: &GadgetDfa) -> Dfa {
    let g = gadget.dfa();
    let m = gadget.m();
    let base = g.state_count();
    let fresh = gadget.ell() * (m - 1);
    let n = base + fresh;
    let mut delta = vec![0usize; n * 2];
    let mut finals = vec![false; n];

    for q in 0..base {
        finals[q] = g.is_final(q);
        delta[q * 2] = g.next(q, ALPHA);
        if let StateRole::Element(_) = gadget.role(q) {
            continue;
        }
        debug_assert!((1..=m).all(|a| g.next(q, a) == g.next(q, 1)));
        delta[q * 2 + 1] = g.next(q, 1);
    }
    for (idx, q) in gadget.element_states().enumerate() {
        if m == 1 {
            delta[q * 2 + 1] = g.next(q, 1);
            continue;
        }
        // d_1 .. d_{m-1}
        let d = |k: usize| base + idx * (m - 1) + (k - 1);
        delta[q * 2 + 1] = d(1);
        for k in 1..m {
            delta[d(k) * 2] = g.next(q, k);
            delta[d(k) * 2 + 1] = if k + 1 < m { d(k + 1) } else { g.next(q, m) };
        }
    }
    Dfa::new(n, 2, delta, g.initial(), finals, g.sink()).expect("binarized gadget is well formed")
}

/// All words accepted by `dfa`, as a dictionary over the standard glyphs.
pub fn dfa_to_wordlist(dfa: &Dfa) -> Result<Dictionary> {
    if dfa.is_final(dfa.initial()) {
        return Err(Error::AcceptsEmptyWord);
    }
    let n = dfa.state_count();
    let k = dfa.alphabet_size();
    let mut reachable = vec![false; n];
    reachable[dfa.initial()] = true;
    let mut queue = VecDeque::from([dfa.initial()]);
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let t = dfa.next(q, a);
            if !reachable[t] {
                reachable[t] = true;
                queue.push_back(t);
            }
        }
    }
    let mut reverse = vec![Vec::new(); n];
    for q in 0..n {
        for a in 0..k {
            reverse[dfa.next(q, a)].push(q);
        }
    }
    let mut productive: Vec<bool> = (0..n).map(|q| dfa.is_final(q)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&q| productive[q]).collect();
    while let Some(q) = queue.pop_front() {
        for &s in &reverse[q] {
            if !productive[s] {
                productive[s] = true;
                queue.push_back(s);
            }
        }
    }
    let useful: Vec<bool> = (0..n).map(|q| reachable[q] && productive[q]).collect();

    // cycle check on the useful part (Kahn)
    let mut indegree = vec![0usize; n];
    for q in (0..n).filter(|&q| useful[q]) {
        for a in 0..k {
            let t = dfa.next(q, a);
            if useful[t] {
                indegree[t] += 1;
            }
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&q| useful[q] && indegree[q] == 0).collect();
    let mut removed = 0;
    while let Some(q) = queue.pop_front() {
        removed += 1;
        for a in 0..k {
            let t = dfa.next(q, a);
            if useful[t] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
    }
    if removed != useful.iter().filter(|&&u| u).count() {
        return Err(Error::InfiniteLanguage);
    }

    let mut words = Vec::new();
    let mut path = Vec::new();
    // frames: (state, next symbol)
    let mut frames = vec![(dfa.initial(), 0usize)];
    if !useful[dfa.initial()] {
        return Err(Error::EmptyDictionary);
    }
    while let Some(frame) = frames.last_mut() {
        let (q, a) = *frame;
        if a == k {
            frames.pop();
            path.pop();
            continue;
        }
        frame.1 += 1;
        let t = dfa.next(q, a);
        if !useful[t] {
            continue;
        }
        path.push(a);
        if dfa.is_final(t) {
            words.push(Word::new(path.clone()));
        }
        frames.push((t, 0));
    }
    Dictionary::new(Alphabet::standard(k)?, words)
}

/// Every stage of a reduction from a rewriting system to a word list.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub gadget: GadgetDfa,
    pub binary: Dfa,
    pub dictionary: Dictionary,
}

pub fn reduce(srs: &SetRewritingSystem, variant: GadgetVariant) -> Result<Reduction> {
    let gadget = srs_to_dfa(srs, variant)?;
    let binary = binarize(&gadget);
    let dictionary = dfa_to_wordlist(&binary)?;
    Ok(Reduction {
        gadget,
        binary,
        dictionary,
    })
}

/// Binary word list whose star is cofinite iff `srs` is mortal.
pub fn frobenius_pipeline(srs: &SetRewritingSystem) -> Result<Dictionary> {
    Ok(reduce(srs, GadgetVariant::Frobenius)?.dictionary)
}

/// Binary word list that is complete iff `srs` has no emptying sequence.
pub fn factor_universality_pipeline(srs: &SetRewritingSystem) -> Result<Dictionary> {
    Ok(reduce(srs, GadgetVariant::FactorUniversality)?.dictionary)
}
