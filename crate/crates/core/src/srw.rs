//! Set rewriting systems.
//!
//! A system has elements `p_1..p_ell` (0-based internally) and rules
//! `r_1..r_m`; each rule maps every element either to a subset of elements
//! or to ⊥. A rule is legal for a subset when no member maps to ⊥, and the
//! result is the union of the images.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Sequence of 0-based rule indices.
pub type RuleSeq = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetRewritingSystem {
    ell: usize,
    m: usize,
    /// `table[j * ell + i]` is `r_j(p_i)`, `None` for ⊥.
    table: Vec<Option<BitSet>>,
    non_emptiable: bool,
    permissive: bool,
}

impl SetRewritingSystem {
    /// `rules[j][i]` is the image of element `i` under rule `j`.
    pub fn new(ell: usize, rules: Vec<Vec<Option<BitSet>>>) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidArgument("a rewriting system needs at least one element".into()));
        }
        if rules.is_empty() {
            return Err(Error::InvalidArgument("a rewriting system needs at least one rule".into()));
        }
        let m = rules.len();
        let mut table = Vec::with_capacity(ell * m);
        for (j, rule) in rules.into_iter().enumerate() {
            if rule.len() != ell {
                return Err(Error::InvalidArgument(format!(
                    "rule {} has {} images, expected {ell}",
                    j + 1,
                    rule.len()
                )));
            }
            for image in rule {
                if let Some(set) = &image {
                    if set.width() != ell {
                        return Err(Error::InvalidArgument(format!(
                            "rule {} has an image of width {}, expected {ell}",
                            j + 1,
                            set.width()
                        )));
                    }
                }
                table.push(image);
            }
        }
        let non_emptiable = table.iter().all(|e| e.as_ref().is_none_or(|s| !s.is_empty()));
        let permissive = table.iter().all(Option::is_some);
        Ok(SetRewritingSystem {
            ell,
            m,
            table,
            non_emptiable,
            permissive,
        })
    }

    /// Builds the table from a closure `(rule, element) -> image`.
    pub fn from_fn<F>(ell: usize, m: usize, mut image: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Option<BitSet>,
    {
        let rules = (0..m).map(|j| (0..ell).map(|i| image(j, i)).collect()).collect();
        Self::new(ell, rules)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `r_rule(p_element)`, `None` for ⊥.
    pub fn image(&self, rule: usize, element: usize) -> Option<&BitSet> {
        self.table[rule * self.ell + element].as_ref()
    }

    pub fn is_non_emptiable(&self) -> bool {
        self.non_emptiable
    }

    pub fn is_permissive(&self) -> bool {
        self.permissive
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.ell)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::empty(self.ell)
    }

    pub fn singleton(&self, element: usize) -> BitSet {
        BitSet::singleton(self.ell, element)
    }

    /// `S · r_rule`, or `None` when the rule is illegal for `S`.
    pub fn apply_rule(&self, subset: &BitSet, rule: usize) -> Option<BitSet> {
        let mut out = BitSet::empty(self.ell);
        for s in subset.iter() {
            out.union_with(self.image(rule, s)?);
        }
        Some(out)
    }

    pub fn apply_sequence(&self, subset: &BitSet, rules: &[usize]) -> Option<BitSet> {
        rules
            .iter()
            .try_fold(subset.clone(), |s, &r| self.apply_rule(&s, r))
    }

    /// Text form: `srs <ell> <m>` then one `r<j> p<i> -> ...` line per pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "srs {} {}", self.ell, self.m);
        for j in 0..self.m {
            for i in 0..self.ell {
                let _ = write!(out, "r{} p{} ->", j + 1, i + 1);
                match self.image(j, i) {
                    None => out.push_str(" !"),
                    Some(set) => {
                        for a in set.iter() {
                            let _ = write!(out, " p{}", a + 1);
                        }
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut cells: Vec<Option<Option<BitSet>>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let toks: Vec<&str> = content.split_whitespace().collect();
            let Some((ell, m)) = header else {
                if toks.len() != 3 || toks[0] != "srs" {
                    return Err(err("expected `srs <ell> <m>` header".into()));
                }
                let ell: usize = toks[1].parse().map_err(|_| err(format!("bad element count {:?}", toks[1])))?;
                let m: usize = toks[2].parse().map_err(|_| err(format!("bad rule count {:?}", toks[2])))?;
                if ell == 0 || m == 0 {
                    return Err(err("element and rule counts must be positive".into()));
                }
                header = Some((ell, m));
                cells = vec![None; ell * m];
                continue;
            };
            if toks.len() < 3 || toks[2] != "->" {
                return Err(err(format!("expected `r<j> p<i> -> ...`, found {content:?}")));
            }
            let index = |tok: &str, prefix: char, bound: usize| -> Result<usize> {
                tok.strip_prefix(prefix)
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1 && n <= bound)
                    .map(|n| n - 1)
                    .ok_or_else(|| err(format!("expected {prefix}1..{prefix}{bound}, found {tok:?}")))
            };
            let j = index(toks[0], 'r', m)?;
            let i = index(toks[1], 'p', ell)?;
            let rhs = &toks[3..];
            let image = if rhs == ["!"] {
                None
            } else {
                let mut set = BitSet::empty(ell);
                for tok in rhs {
                    set.insert(index(tok, 'p', ell)?);
                }
                Some(set)
            };
            let cell = &mut cells[j * ell + i];
            if cell.is_some() {
                return Err(err(format!("r{} p{} defined twice", j + 1, i + 1)));
            }
            *cell = Some(image);
        }
        let (ell, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `srs <ell> <m>` header".into(),
        })?;
        if let Some(pos) = cells.iter().position(Option::is_none) {
            return Err(Error::Parse {
                line: 0,
                message: format!("missing line for r{} p{}", pos / ell + 1, pos % ell + 1),
            });
        }
        let mut flat = cells.into_iter().map(|c| c.expect("checked above"));
        let rules = (0..m).map(|_| flat.by_ref().take(ell).collect()).collect();
        Self::new(ell, rules)
    }
}

/// A non-empty subset that some non-empty legal sequence maps back to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmortalityWitness {
    pub subset: BitSet,
    pub rules: RuleSeq,
}

/// Searches for a cycle among the subsets reachable from singletons.
/// Returns a witness when the system is immortal.
pub fn is_immortal(srs: &SetRewritingSystem) -> Result<Option<ImmortalityWitness>> {
    if !srs.is_non_emptiable() {
        return Err(Error::Precondition("immortality needs a non-emptiable system".into()));
    }
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;

    let mut ids: HashMap<BitSet, usize> = HashMap::new();
    let mut nodes: Vec<BitSet> = Vec::new();
    let mut color: Vec<u8> = Vec::new();
    let mut stack_pos: Vec<usize> = Vec::new();
    let mut intern = |set: BitSet, nodes: &mut Vec<BitSet>, color: &mut Vec<u8>, stack_pos: &mut Vec<usize>| {
        *ids.entry(set.clone()).or_insert_with(|| {
            nodes.push(set);
            color.push(WHITE);
            stack_pos.push(usize::MAX);
            nodes.len() - 1
        })
    };

    for seed in 0..srs.ell() {
        let root = intern(srs.singleton(seed), &mut nodes, &mut color, &mut stack_pos);
        if color[root] != WHITE {
            continue;
        }
        // frames: (node, next rule to try)
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = GRAY;
        stack_pos[root] = 0;
        while let Some(&mut (v, ref mut rule)) = frames.last_mut() {
            if *rule == srs.m() {
                color[v] = BLACK;
                frames.pop();
                continue;
            }
            let r = *rule;
            *rule += 1;
            let Some(target) = srs.apply_rule(&nodes[v], r) else {
                continue;
            };
            let t = intern(target, &mut nodes, &mut color, &mut stack_pos);
            match color[t] {
                WHITE => {
                    color[t] = GRAY;
                    stack_pos[t] = frames.len();
                    frames.push((t, 0));
                }
                GRAY => {
                    let rules = frames[stack_pos[t]..].iter().map(|&(_, next)| next - 1).collect();
                    return Ok(Some(ImmortalityWitness {
                        subset: nodes[t].clone(),
                        rules,
                    }));
                }
                _ => {}
            }
        }
    }
    Ok(None)
}

/// Longest legal rule sequence starting from `start`, with the smallest rule
/// index chosen at every tie.
pub fn longest_legal_sequence(srs: &SetRewritingSystem, start: &BitSet) -> Result<RuleSeq> {
    if !srs.is_non_emptiable() {
        return Err(Error::Precondition("longest sequences need a non-emptiable system".into()));
    }
    if start.width() != srs.ell() {
        return Err(Error::InvalidArgument("start subset has the wrong width".into()));
    }
    if start.is_empty() {
        // every rule is legal for the empty set and keeps it empty
        return Err(Error::ImmortalFrom);
    }
    const UNSEEN: usize = usize::MAX;
    const OPEN: usize = usize::MAX - 1;

    let mut ids: HashMap<BitSet, usize> = HashMap::new();
    let mut nodes: Vec<BitSet> = vec![start.clone()];
    let mut longest: Vec<usize> = vec![OPEN];
    let mut choice: Vec<Option<(usize, usize)>> = vec![None];
    ids.insert(start.clone(), 0);

    let mut frames: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(&mut (v, ref mut rule)) = frames.last_mut() {
        if *rule < srs.m() {
            let r = *rule;
            *rule += 1;
            let Some(target) = srs.apply_rule(&nodes[v], r) else {
                continue;
            };
            let t = *ids.entry(target.clone()).or_insert_with(|| {
                nodes.push(target);
                longest.push(UNSEEN);
                choice.push(None);
                nodes.len() - 1
            });
            match longest[t] {
                OPEN => return Err(Error::ImmortalFrom),
                UNSEEN => {
                    longest[t] = OPEN;
                    frames.push((t, 0));
                }
                _ => {}
            }
            continue;
        }
        frames.pop();
        let mut best = 0;
        let mut pick = None;
        for r in 0..srs.m() {
            if let Some(target) = srs.apply_rule(&nodes[v], r) {
                let t = ids[&target];
                if pick.is_none() || longest[t] + 1 > best {
                    best = longest[t] + 1;
                    pick = Some((r, t));
                }
            }
        }
        longest[v] = best;
        choice[v] = pick;
    }

    let mut seq = Vec::with_capacity(longest[0]);
    let mut v = 0;
    while let Some((r, t)) = choice[v] {
        seq.push(r);
        v = t;
    }
    debug_assert_eq!(seq.len(), longest[0]);
    Ok(seq)
}

/// Shortest sequence mapping the full element set to ∅, with the smallest
/// rule index explored first. `None` when ∅ cannot be reached.
pub fn shortest_emptying_sequence(srs: &SetRewritingSystem) -> Result<Option<RuleSeq>> {
    if !srs.is_permissive() {
        return Err(Error::Precondition("emptying search needs a permissive system".into()));
    }
    let start = srs.full_set();
    let mut ids: HashMap<BitSet, usize> = HashMap::new();
    let mut nodes = vec![start.clone()];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    ids.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for r in 0..srs.m() {
            let target = srs.apply_rule(&nodes[v], r).expect("permissive rules are always legal");
            if ids.contains_key(&target) {
                continue;
            }
            let found = target.is_empty();
            ids.insert(target.clone(), nodes.len());
            nodes.push(target);
            parents.push(Some((v, r)));
            if found {
                let mut seq = Vec::new();
                let mut cur = nodes.len() - 1;
                while let Some((p, rule)) = parents[cur] {
                    seq.push(rule);
                    cur = p;
                }
                seq.reverse();
                return Ok(Some(seq));
            }
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ell: usize, items: &[usize]) -> Option<BitSet> {
        Some(BitSet::from_indices(ell, items.iter().copied()))
    }

    #[test]
    fn empty_subset_is_fixed() {
        let srs = SetRewritingSystem::new(2, vec![vec![None, set(2, &[0])]]).unwrap();
        assert_eq!(srs.apply_rule(&srs.empty_set(), 0), Some(srs.empty_set()));
        assert_eq!(srs.apply_rule(&srs.full_set(), 0), None);
        assert_eq!(srs.apply_sequence(&srs.full_set(), &[]), Some(srs.full_set()));
    }

    #[test]
    fn classification() {
        let srs = SetRewritingSystem::new(1, vec![vec![set(1, &[])]]).unwrap();
        assert!(srs.is_permissive());
        assert!(!srs.is_non_emptiable());
        assert_eq!(shortest_emptying_sequence(&srs).unwrap(), Some(vec![0]));
        assert!(matches!(is_immortal(&srs), Err(Error::Precondition(_))));
    }

    #[test]
    fn self_loop_is_immortal() {
        let srs = SetRewritingSystem::new(1, vec![vec![set(1, &[0])]]).unwrap();
        let w = is_immortal(&srs).unwrap().unwrap();
        assert_eq!(w.rules, vec![0]);
        assert_eq!(srs.apply_sequence(&w.subset, &w.rules), Some(w.subset));
        assert_eq!(longest_legal_sequence(&srs, &srs.singleton(0)), Err(Error::ImmortalFrom));
    }

    #[test]
    fn longer_cycle_witness() {
        // p1 -> p2 -> p3 -> p1 under rule 2; rule 1 is illegal everywhere but p1
        let srs = SetRewritingSystem::new(
            3,
            vec![
                vec![set(3, &[0, 1]), None, None],
                vec![set(3, &[1]), set(3, &[2]), set(3, &[0])],
            ],
        )
        .unwrap();
        let w = is_immortal(&srs).unwrap().unwrap();
        assert!(!w.rules.is_empty());
        assert_eq!(srs.apply_sequence(&w.subset, &w.rules), Some(w.subset));
    }

    #[test]
    fn text_round_trip() {
        let srs = SetRewritingSystem::new(
            2,
            vec![vec![None, set(2, &[0, 1])], vec![set(2, &[1]), set(2, &[])]],
        )
        .unwrap();
        let text = srs.to_text();
        assert!(text.contains("r1 p1 -> !"));
        assert!(text.contains("r2 p2 ->\n"));
        assert_eq!(SetRewritingSystem::parse(&text).unwrap(), srs);
    }

    #[test]
    fn parse_rejects_missing_and_duplicate_pairs() {
        assert!(SetRewritingSystem::parse("srs 1 1\n").is_err());
        assert!(SetRewritingSystem::parse("srs 1 1\nr1 p1 -> p1\nr1 p1 -> !\n").is_err());
        assert!(SetRewritingSystem::parse("srs 1 1\nr1 p2 -> p1\n").is_err());
        let ok = SetRewritingSystem::parse("# comment\nsrs 1 1\nr1 p1 -> p1 # loop\n").unwrap();
        assert_eq!(ok.image(0, 0), Some(&BitSet::singleton(1, 0)));
    }
}
