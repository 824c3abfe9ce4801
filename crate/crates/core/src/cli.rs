//! Command-line front end. The binary only forwards to [`run`].
//!
//! Exit codes: 0 when the queried property holds, 1 when it fails, 2 for
//! usage or input errors, 3 when a resource cap is hit or an oracle cannot
//! decide within its limit.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::automata::{determinize_reachable, subset_dfa_to_dot, Pump};
use crate::completeness::{analyze_completeness, factor_nfa, is_completable, verify_incompletable};
use crate::error::{Error, Result};
use crate::families::{
    appendix_family, emptying_counter, frobenius_hard_family, immortality_counter, incompletable_hard_family,
};
use crate::frobenius::{analyze_cofiniteness, default_cap, is_member, omitted_length_bound, star_nfa};
use crate::oracle::{
    oracle_cofinite, oracle_shortest_incompletable, oracle_srs_search, IncompletableSearch, Verdict,
    MAX_SCAN_LIMIT,
};
use crate::reductions::{reduce, GadgetVariant};
use crate::srw::{is_immortal, longest_legal_sequence, shortest_emptying_sequence, SetRewritingSystem};
use crate::words::{is_member_dp, parse_dictionary, Dictionary, Word};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "freemonoid", version, about = "Cofiniteness and completeness of finite word lists")]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Cap on stored subsets (default: four times the subset bound)
    #[arg(long, global = true, value_name = "N")]
    max_subsets: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the star of a dictionary is cofinite
    Cofinite {
        file: String,
        /// Write the explored subset automaton in GraphViz format
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
    /// Print a longest word missing from the star
    LongestOmitted { file: String },
    /// Test membership of a word in the star
    Member { file: String, word: String },
    /// Decide whether a dictionary is complete
    Complete {
        file: String,
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
    /// Print a shortest incompletable word
    ShortestIncompletable { file: String },
    /// Test whether a word is a factor of some word of the star
    Completable { file: String, word: String },
    /// Analyze a set rewriting system
    Srs { file: String },
    /// Turn a set rewriting system into a binary word list
    Reduce {
        file: String,
        /// Use the completeness variant instead of the cofiniteness one
        #[arg(long)]
        fu: bool,
    },
    /// Generate counters and extremal families
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run a brute-force reference check
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Mortal counter with longest legal sequences of length 2^n - 2
    Counter { n: usize },
    /// Permissive counter with shortest emptying sequence of length 2^n - 1
    EmptyingCounter { n: usize },
    /// Cofinite word list with long omitted words
    FrobeniusFamily { n: usize },
    /// Incomplete word list with long shortest incompletable words
    RestivoFamily {
        n: usize,
        /// Build the list from its closed-form schemata
        #[arg(long)]
        appendix: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Scan every word up to a length limit
    Cofinite {
        file: String,
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
    },
    /// Search incompletable words by increasing length
    Incompletable {
        file: String,
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
    },
    /// Exhaustive rewriting-system search (at most five elements)
    Srs { file: String },
}

#[derive(Serialize, Debug)]
struct Report {
    command: &'static str,
    verdict: String,
    holds: bool,
    witness: Option<String>,
    length: Option<usize>,
    subsets: Option<usize>,
    elapsed_ms: f64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    details: BTreeMap<&'static str, Value>,
}

impl Report {
    fn new(command: &'static str, verdict: impl Into<String>, holds: bool) -> Self {
        Report {
            command,
            verdict: verdict.into(),
            holds,
            witness: None,
            length: None,
            subsets: None,
            elapsed_ms: 0.0,
            details: BTreeMap::new(),
        }
    }

    fn witness(mut self, text: String, length: usize) -> Self {
        self.witness = Some(text);
        self.length = Some(length);
        self
    }

    fn detail(mut self, key: &'static str, value: Value) -> Self {
        self.details.insert(key, value);
        self
    }

    fn exit_code(&self) -> i32 {
        if self.holds {
            EXIT_HOLDS
        } else {
            EXIT_FAILS
        }
    }
}

enum Output {
    Report(Report),
    /// Raw text (generated files), with an optional JSON form.
    Text(String, Value),
    Resource(Report),
}

struct Context<'a> {
    stdin: &'a str,
    json: bool,
    max_subsets: Option<usize>,
}

impl Context<'_> {
    fn read(&self, path: &str) -> Result<String> {
        if path == "-" {
            return Ok(self.stdin.to_string());
        }
        std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
    }

    fn dictionary(&self, path: &str) -> Result<Dictionary> {
        Ok(parse_dictionary(&self.read(path)?)?.dictionary)
    }

    fn srs(&self, path: &str) -> Result<SetRewritingSystem> {
        SetRewritingSystem::parse(&self.read(path)?)
    }

    fn cap(&self, dict: &Dictionary) -> usize {
        self.max_subsets.unwrap_or_else(|| default_cap(dict))
    }
}

fn render(dict: &Dictionary, word: &Word) -> String {
    if word.is_empty() {
        "ε".to_string()
    } else {
        dict.render(word)
    }
}

fn parse_query(dict: &Dictionary, text: &str) -> Result<Word> {
    if text.is_empty() || text == "ε" {
        return Ok(Word::empty());
    }
    dict.alphabet().parse_word(text)
}

fn rules_text(rules: &[usize]) -> String {
    rules.iter().map(|r| format!("r{}", r + 1)).collect::<Vec<_>>().join(" ")
}

fn subset_text(set: impl Iterator<Item = usize>) -> String {
    let items: Vec<String> = set.map(|e| format!("p{}", e + 1)).collect();
    format!("{{{}}}", items.join(", "))
}

fn verify_pump(dict: &Dictionary, pump: &Pump) -> Result<()> {
    for k in 0..4 {
        if is_member_dp(dict, &pump.instance(k))? {
            return Err(Error::Contract("pumped witness is a member".into()));
        }
    }
    Ok(())
}

fn cmd_cofinite(ctx: &Context, file: &str, dot: Option<&str>, command: &'static str) -> Result<Output> {
    let dict = ctx.dictionary(file)?;
    let cap = ctx.cap(&dict);
    let report = analyze_cofiniteness(&dict, cap)?;
    if let Some(path) = dot {
        let nfa = star_nfa(&dict);
        let sd = determinize_reachable(&nfa, &nfa.initial_set(), cap)?;
        write_file(path, &subset_dfa_to_dot(&sd, dict.alphabet().glyphs()))?;
    }
    let bound = omitted_length_bound(&dict);
    let mut out = if report.cofinite {
        let length = report.longest_omitted.as_ref().map_or(0, Word::len);
        let verdict = match &report.longest_omitted {
            Some(_) => format!("cofinite; longest omitted length {length}"),
            None => "cofinite; every word is a member".to_string(),
        };
        let mut out = Report::new(command, verdict, true);
        if let Some(w) = &report.longest_omitted {
            if is_member_dp(&dict, w)? || w.len() > bound {
                return Err(Error::Contract("longest omitted word failed re-verification".into()));
            }
            out = out.witness(render(&dict, w), w.len());
        }
        out
    } else {
        let pump = report.pump.as_ref().expect("non-cofinite stars come with a pump");
        verify_pump(&dict, pump)?;
        let shortest = pump.instance(0);
        Report::new(command, "not cofinite", false)
            .witness(render(&dict, &shortest), shortest.len())
            .detail(
                "pump",
                json!({
                    "prefix": render(&dict, &pump.prefix),
                    "pump": render(&dict, &pump.pump),
                    "suffix": render(&dict, &pump.suffix),
                }),
            )
    };
    out.subsets = Some(report.subsets);
    out = out
        .detail("length_bound", json!(bound))
        .detail("max_level_occupancy", json!(report.max_level_occupancy));
    Ok(Output::Report(out))
}

fn cmd_member(ctx: &Context, file: &str, word: &str) -> Result<Output> {
    let dict = ctx.dictionary(file)?;
    let w = parse_query(&dict, word)?;
    let member = is_member(&dict, &w)?;
    if member != is_member_dp(&dict, &w)? {
        return Err(Error::Contract("membership methods disagree".into()));
    }
    let verdict = if member { "member" } else { "not a member" };
    Ok(Output::Report(Report::new("member", verdict, member).witness(render(&dict, &w), w.len())))
}

fn cmd_complete(ctx: &Context, file: &str, dot: Option<&str>, command: &'static str) -> Result<Output> {
    let dict = ctx.dictionary(file)?;
    let cap = ctx.cap(&dict);
    let report = analyze_completeness(&dict, cap)?;
    if let Some(path) = dot {
        let f = factor_nfa(&dict);
        let sd = determinize_reachable(f.nfa(), &f.start(), cap)?;
        write_file(path, &subset_dfa_to_dot(&sd, dict.alphabet().glyphs()))?;
    }
    let bound = crate::completeness::incompletable_length_bound(&dict);
    let mut out = match &report.witness {
        None => Report::new(command, "complete", true),
        Some(w) => {
            verify_incompletable(&dict, w)?;
            Report::new(command, format!("incomplete; shortest incompletable length {}", w.len()), false)
                .witness(render(&dict, w), w.len())
        }
    };
    out.subsets = Some(report.subsets);
    Ok(Output::Report(out.detail("length_bound", json!(bound))))
}

fn cmd_completable(ctx: &Context, file: &str, word: &str) -> Result<Output> {
    let dict = ctx.dictionary(file)?;
    let w = parse_query(&dict, word)?;
    let ok = is_completable(&dict, &w)?;
    let verdict = if ok { "completable" } else { "incompletable" };
    Ok(Output::Report(Report::new("completable", verdict, ok).witness(render(&dict, &w), w.len())))
}

fn srs_classes(srs: &SetRewritingSystem) -> Value {
    json!({
        "elements": srs.ell(),
        "rules": srs.m(),
        "non_emptiable": srs.is_non_emptiable(),
        "permissive": srs.is_permissive(),
    })
}

fn cmd_srs(ctx: &Context, file: &str) -> Result<Output> {
    let srs = ctx.srs(file)?;
    let report = if srs.is_non_emptiable() {
        match is_immortal(&srs)? {
            Some(w) => {
                if srs.apply_sequence(&w.subset, &w.rules).as_ref() != Some(&w.subset) {
                    return Err(Error::Contract("immortality witness failed re-verification".into()));
                }
                Report::new("srs", "immortal", true)
                    .witness(rules_text(&w.rules), w.rules.len())
                    .detail("subset", json!(subset_text(w.subset.iter())))
            }
            None => {
                let mut best: Option<(usize, Vec<usize>)> = None;
                for i in 0..srs.ell() {
                    let seq = longest_legal_sequence(&srs, &srs.singleton(i))?;
                    if best.as_ref().is_none_or(|(_, b)| seq.len() > b.len()) {
                        best = Some((i, seq));
                    }
                }
                let (seed, seq) = best.expect("at least one element");
                Report::new("srs", format!("mortal; longest legal sequence length {}", seq.len()), false)
                    .witness(rules_text(&seq), seq.len())
                    .detail("seed", json!(format!("p{}", seed + 1)))
            }
        }
    } else if srs.is_permissive() {
        match shortest_emptying_sequence(&srs)? {
            Some(seq) => {
                if srs.apply_sequence(&srs.full_set(), &seq).is_none_or(|s| !s.is_empty()) {
                    return Err(Error::Contract("emptying witness failed re-verification".into()));
                }
                Report::new("srs", format!("emptying; shortest length {}", seq.len()), true)
                    .witness(rules_text(&seq), seq.len())
            }
            None => Report::new("srs", "not emptying", false),
        }
    } else {
        return Err(Error::Precondition(
            "the system is neither non-emptiable nor permissive, so no analysis applies".into(),
        ));
    };
    Ok(Output::Report(report.detail("system", srs_classes(&srs))))
}

fn cmd_reduce(ctx: &Context, file: &str, fu: bool) -> Result<Output> {
    let srs = ctx.srs(file)?;
    let variant = if fu {
        GadgetVariant::FactorUniversality
    } else {
        GadgetVariant::Frobenius
    };
    let r = reduce(&srs, variant)?;
    let name = if fu { "completeness" } else { "cofiniteness" };
    let mut text = String::new();
    text.push_str(&format!("# reduction for {name}\n"));
    text.push_str(&format!("# elements {}, rules {}\n", srs.ell(), srs.m()));
    text.push_str(&format!(
        "# gadget states {}, binary states {}\n",
        r.gadget.dfa().state_count(),
        r.binary.state_count()
    ));
    text.push_str(&format!(
        "# words {}, longest {}\n",
        r.dictionary.len(),
        r.dictionary.norm_max()
    ));
    text.push_str(&r.dictionary.to_text());
    let value = json!({
        "variant": name,
        "elements": srs.ell(),
        "rules": srs.m(),
        "gadget_states": r.gadget.dfa().state_count(),
        "binary_states": r.binary.state_count(),
        "word_count": r.dictionary.len(),
        "max_length": r.dictionary.norm_max(),
        "words": r.dictionary.rendered_words(),
    });
    Ok(Output::Text(text, value))
}

fn cmd_gen(what: &GenCommand) -> Result<Output> {
    let (kind, text) = match *what {
        GenCommand::Counter { n } => ("counter", immortality_counter(n)?.to_text()),
        GenCommand::EmptyingCounter { n } => ("emptying-counter", emptying_counter(n)?.to_text()),
        GenCommand::FrobeniusFamily { n } => ("frobenius-family", frobenius_hard_family(n)?.to_text()),
        GenCommand::RestivoFamily { n, appendix: false } => {
            ("restivo-family", incompletable_hard_family(n)?.to_text())
        }
        GenCommand::RestivoFamily { n, appendix: true } => ("restivo-family", appendix_family(n)?.to_text()),
    };
    let value = json!({ "kind": kind, "text": text });
    Ok(Output::Text(text, value))
}

fn cmd_oracle(ctx: &Context, what: &OracleCommand) -> Result<Output> {
    let start = Instant::now();
    let report = match what {
        OracleCommand::Cofinite { file, limit } => {
            let dict = ctx.dictionary(file)?;
            let limit = limit.unwrap_or_else(|| {
                if dict.alphabet().size() == 1 {
                    omitted_length_bound(&dict).saturating_add(dict.norm_max()).min(4096)
                } else {
                    16.min(MAX_SCAN_LIMIT)
                }
            });
            let scan = oracle_cofinite(&dict, limit)?;
            let (verdict, holds) = match scan.verdict {
                Verdict::Holds => ("cofinite", Some(true)),
                Verdict::Fails => ("not cofinite", Some(false)),
                Verdict::Inconclusive => ("inconclusive", None),
            };
            let mut r = Report::new("oracle cofinite", verdict, holds.unwrap_or(false))
                .detail("limit", json!(limit))
                .detail("non_member_lengths", json!(scan.non_member_lengths));
            if let Some(w) = &scan.longest_non_member {
                r = r.witness(render(&dict, w), w.len());
            }
            if holds.is_none() {
                return finish_resource(r, start);
            }
            r
        }
        OracleCommand::Incompletable { file, limit } => {
            let dict = ctx.dictionary(file)?;
            let limit = limit.unwrap_or_else(|| crate::completeness::incompletable_length_bound(&dict).min(10_000));
            match oracle_shortest_incompletable(&dict, limit)? {
                IncompletableSearch::Complete => Report::new("oracle incompletable", "complete", true),
                IncompletableSearch::Incompletable(w) => {
                    Report::new("oracle incompletable", "incomplete", false).witness(render(&dict, &w), w.len())
                }
                IncompletableSearch::Inconclusive => {
                    let r = Report::new("oracle incompletable", "inconclusive", false).detail("limit", json!(limit));
                    return finish_resource(r, start);
                }
            }
        }
        OracleCommand::Srs { file } => {
            let srs = ctx.srs(file)?;
            let o = oracle_srs_search(&srs)?;
            let (verdict, holds) = if srs.is_non_emptiable() || !srs.is_permissive() {
                (if o.immortal { "immortal" } else { "mortal" }, o.immortal)
            } else {
                match o.shortest_emptying.flatten() {
                    Some(_) => ("emptying", true),
                    None => ("not emptying", false),
                }
            };
            let mut r = Report::new("oracle srs", verdict, holds)
                .detail("immortal", json!(o.immortal))
                .detail("longest_from_singletons", json!(o.longest_from_singletons))
                .detail("system", srs_classes(&srs));
            if let Some(e) = o.shortest_emptying {
                r = r.detail("shortest_emptying", json!(e));
            }
            r
        }
    };
    Ok(Output::Report(report))
}

fn finish_resource(mut r: Report, start: Instant) -> Result<Output> {
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Output::Resource(r))
}

fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))
}

fn dispatch(ctx: &Context, command: &Command) -> Result<Output> {
    match command {
        Command::Cofinite { file, dot } => cmd_cofinite(ctx, file, dot.as_deref(), "cofinite"),
        Command::LongestOmitted { file } => cmd_cofinite(ctx, file, None, "longest-omitted"),
        Command::Member { file, word } => cmd_member(ctx, file, word),
        Command::Complete { file, dot } => cmd_complete(ctx, file, dot.as_deref(), "complete"),
        Command::ShortestIncompletable { file } => cmd_complete(ctx, file, None, "shortest-incompletable"),
        Command::Completable { file, word } => cmd_completable(ctx, file, word),
        Command::Srs { file } => cmd_srs(ctx, file),
        Command::Reduce { file, fu } => cmd_reduce(ctx, file, *fu),
        Command::Gen { what } => cmd_gen(what),
        Command::Oracle { what } => cmd_oracle(ctx, what),
    }
}

fn print_report(report: &Report, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string_pretty(report).expect("reports serialize"));
    }
    writeln!(out, "{}", report.verdict)?;
    if let Some(w) = &report.witness {
        writeln!(out, "witness: {w}")?;
    }
    if let Some(len) = report.length {
        writeln!(out, "length: {len}")?;
    }
    if let Some(n) = report.subsets {
        writeln!(out, "subsets: {n}")?;
    }
    for (key, value) in &report.details {
        writeln!(out, "{key}: {value}")?;
    }
    Ok(())
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code. `stdin` is used for file arguments given as `-`.
pub fn run(args: &[String], stdin: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_HOLDS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let ctx = Context {
        stdin,
        json: cli.json,
        max_subsets: cli.max_subsets,
    };
    let start = Instant::now();
    let result = dispatch(&ctx, &cli.command);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let written = match result {
        Ok(Output::Report(mut r)) => {
            r.elapsed_ms = elapsed_ms;
            print_report(&r, ctx.json, out).map(|_| r.exit_code())
        }
        Ok(Output::Resource(r)) => print_report(&r, ctx.json, out).map(|_| EXIT_RESOURCE),
        Ok(Output::Text(text, value)) => {
            if ctx.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("values serialize"))
            } else {
                write!(out, "{text}")
            }
            .map(|_| EXIT_HOLDS)
        }
        Err(e) => {
            let code = match e {
                Error::CapExceeded { .. } => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            };
            if ctx.json {
                let value = json!({ "error": e.to_string(), "exit_code": code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("values serialize"));
            }
            let _ = writeln!(err, "error: {e}");
            Ok(code)
        }
    };
    written.unwrap_or(EXIT_USAGE)
}
