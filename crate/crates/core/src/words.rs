//! Words, alphabets and finite dictionaries.
//!
//! A [`Dictionary`] is a finite, non-empty set of non-empty words. It is the
//! user-facing input of every analysis; [`build_trie_dfa`] turns it into the
//! prefix-tree automaton the subset searches run on.
//!
//! # Dictionary file format
//!
//! UTF-8 text with one word per line. Lines starting with `#` are comments
//! and blank lines are ignored. An optional `#alphabet: <glyphs>` comment
//! before the first word declares the alphabet; otherwise it is inferred as
//! the sorted set of characters used by the words. The literal line `ε`
//! denotes the empty word, which is rejected.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::automata::Dfa;
use crate::error::{Error, Result};

pub type Symbol = usize;

const STANDARD_GLYPHS: &str = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Ordered list of distinct glyphs; symbol `i` is rendered as `glyphs[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(glyphs: I) -> Result<Self> {
        let glyphs: Vec<char> = glyphs.into_iter().collect();
        if glyphs.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must not be empty".into()));
        }
        let mut seen = BTreeSet::new();
        for &g in &glyphs {
            if g.is_whitespace() || g == '#' {
                return Err(Error::InvalidAlphabet(format!("glyph {g:?} is reserved")));
            }
            if !seen.insert(g) {
                return Err(Error::InvalidAlphabet(format!("duplicate glyph '{g}'")));
            }
        }
        Ok(Alphabet { glyphs })
    }

    /// `0`, `1`, ... , `9`, `a`, ... for alphabets of up to 62 symbols.
    pub fn standard(size: usize) -> Result<Self> {
        if size == 0 || size > STANDARD_GLYPHS.len() {
            return Err(Error::InvalidAlphabet(format!(
                "no standard glyph set of size {size}"
            )));
        }
        Alphabet::new(STANDARD_GLYPHS.chars().take(size))
    }

    pub fn binary() -> Self {
        Alphabet { glyphs: vec!['0', '1'] }
    }

    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn glyph(&self, symbol: Symbol) -> char {
        self.glyphs[symbol]
    }

    pub fn index_of(&self, glyph: char) -> Result<Symbol> {
        self.glyphs
            .iter()
            .position(|&g| g == glyph)
            .ok_or(Error::UnknownGlyph(glyph))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| self.index_of(c))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn render(&self, word: &Word) -> String {
        word.0.iter().map(|&s| self.glyph(s)).collect()
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.0.iter().find(|&&s| s >= self.size()) {
            Some(&symbol) => Err(Error::SymbolOutOfRange {
                symbol,
                size: self.size(),
            }),
            None => Ok(()),
        }
    }
}

/// A finite sequence of symbol indices. Ordering is lexicographic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

/// A finite set of non-empty words over an alphabet, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dictionary {
    alphabet: Alphabet,
    words: Vec<Word>,
    norm_max: usize,
    norm_sum: usize,
}

impl Dictionary {
    /// Builds a dictionary, collapsing duplicates.
    pub fn new<I: IntoIterator<Item = Word>>(alphabet: Alphabet, words: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for word in words {
            if word.is_empty() {
                return Err(Error::EmptyWord { line: 0 });
            }
            alphabet.check(&word)?;
            set.insert(word);
        }
        if set.is_empty() {
            return Err(Error::EmptyDictionary);
        }
        let words: Vec<Word> = set.into_iter().collect();
        let norm_max = words.iter().map(Word::len).max().unwrap_or(0);
        let norm_sum = words.iter().map(Word::len).sum();
        Ok(Dictionary {
            alphabet,
            words,
            norm_max,
            norm_sum,
        })
    }

    /// Dictionary over the sorted set of glyphs used by `words`.
    pub fn from_strs<'a, I: IntoIterator<Item = &'a str>>(words: I) -> Result<Self> {
        let words: Vec<&str> = words.into_iter().collect();
        let glyphs: BTreeSet<char> = words.iter().flat_map(|w| w.chars()).collect();
        if glyphs.is_empty() {
            return Err(Error::EmptyDictionary);
        }
        Self::with_alphabet(Alphabet::new(glyphs)?, words)
    }

    pub fn with_alphabet<'a, I: IntoIterator<Item = &'a str>>(
        alphabet: Alphabet,
        words: I,
    ) -> Result<Self> {
        let parsed = words
            .into_iter()
            .map(|w| alphabet.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, parsed)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Length of the longest word.
    pub fn norm_max(&self) -> usize {
        self.norm_max
    }

    /// Total length of all words.
    pub fn norm_sum(&self) -> usize {
        self.norm_sum
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }

    pub fn render(&self, word: &Word) -> String {
        self.alphabet.render(word)
    }

    pub fn rendered_words(&self) -> Vec<String> {
        self.words.iter().map(|w| self.render(w)).collect()
    }

    /// Serializes in the dictionary file format, always with an alphabet header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("#alphabet: ");
        out.extend(self.alphabet.glyphs().iter());
        out.push('\n');
        for w in &self.words {
            out.push_str(&self.render(w));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Dictionary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.rendered_words().join(","))
    }
}

/// Result of [`parse_dictionary`]: the dictionary plus how many duplicate
/// lines were collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDictionary {
    pub dictionary: Dictionary,
    pub duplicates: usize,
}

pub fn parse_dictionary(text: &str) -> Result<ParsedDictionary> {
    let mut declared: Option<Alphabet> = None;
    let mut raw: Vec<(usize, String)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(glyphs) = comment.trim_start().strip_prefix("alphabet:") {
                if !raw.is_empty() || declared.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "alphabet header must come before the first word".into(),
                    });
                }
                let alphabet = Alphabet::new(glyphs.chars().filter(|c| !c.is_whitespace()))
                    .map_err(|e| Error::Parse {
                        line: line_no,
                        message: e.to_string(),
                    })?;
                declared = Some(alphabet);
            }
            continue;
        }
        if line == "ε" {
            return Err(Error::EmptyWord { line: line_no });
        }
        if let Some(c) = line.chars().find(|c| c.is_whitespace()) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("whitespace {c:?} inside a word"),
            });
        }
        if let Some(alphabet) = &declared {
            if let Some(c) = line.chars().find(|&c| alphabet.index_of(c).is_err()) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("character '{c}' is outside the declared alphabet"),
                });
            }
        }
        raw.push((line_no, line.to_string()));
    }

    if raw.is_empty() {
        return Err(Error::EmptyDictionary);
    }
    let alphabet = match declared {
        Some(a) => a,
        None => Alphabet::new(
            raw.iter()
                .flat_map(|(_, w)| w.chars())
                .collect::<BTreeSet<char>>(),
        )?,
    };
    let words = raw
        .iter()
        .map(|(_, w)| alphabet.parse_word(w))
        .collect::<Result<Vec<_>>>()?;
    let total = words.len();
    let dictionary = Dictionary::new(alphabet, words)?;
    let duplicates = total - dictionary.len();
    Ok(ParsedDictionary {
        dictionary,
        duplicates,
    })
}

/// Prefix-tree DFA of a dictionary.
///
/// States are numbered breadth-first with children in symbol order: state 0
/// is the empty prefix, the last state is the non-final sink that absorbs
/// every missing edge.
pub fn build_trie_dfa(dict: &Dictionary) -> Dfa {
    let k = dict.alphabet().size();
    // children[node][symbol], insertion order numbering
    let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut terminal = vec![false];
    for word in dict.words() {
        let mut node = 0;
        for &s in word.symbols() {
            node = match children[node][s] {
                Some(next) => next,
                None => {
                    children.push(vec![None; k]);
                    terminal.push(false);
                    let next = children.len() - 1;
                    children[node][s] = Some(next);
                    next
                }
            };
        }
        terminal[node] = true;
    }

    let mut order = Vec::with_capacity(children.len());
    let mut renumber = vec![usize::MAX; children.len()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(node) = queue.pop_front() {
        renumber[node] = order.len();
        order.push(node);
        queue.extend(children[node].iter().flatten().copied());
    }

    let sink = order.len();
    let state_count = sink + 1;
    let mut transitions = vec![sink; state_count * k];
    let mut finals = vec![false; state_count];
    for (new, &old) in order.iter().enumerate() {
        finals[new] = terminal[old];
        for s in 0..k {
            if let Some(child) = children[old][s] {
                transitions[new * k + s] = renumber[child];
            }
        }
    }
    Dfa::new(state_count, k, transitions, 0, finals, Some(sink))
        .expect("trie construction yields a valid DFA")
}

/// Dynamic-programming membership in `dict*`: position `i` is reachable when
/// some factorization of the first `i` symbols exists.
pub fn is_member_dp(dict: &Dictionary, word: &Word) -> Result<bool> {
    dict.alphabet().check(word)?;
    let w = word.symbols();
    let mut reachable = vec![false; w.len() + 1];
    reachable[0] = true;
    for i in 0..w.len() {
        if !reachable[i] {
            continue;
        }
        for piece in dict.words() {
            let p = piece.symbols();
            if i + p.len() <= w.len() && &w[i..i + p.len()] == p {
                reachable[i + p.len()] = true;
            }
        }
    }
    Ok(reachable[w.len()])
}
