//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{
    all_systems, dict, non_emptiable_images, permissive_images, random_dictionary, random_nfa,
    random_non_emptiable, random_permissive, random_word, word,
};
use freemonoid::completeness::{
    analyze_completeness, incompletable_length_bound, is_complete, is_completable, verify_incompletable,
};
use freemonoid::families::{
    appendix_difference, emptying_counter, frobenius_hard_family, immortality_counter, incompletable_hard_family,
};
use freemonoid::frobenius::{
    analyze_cofiniteness, default_cap, is_cofinite, is_member, longest_omitted_word, omitted_length_bound,
    subset_bound,
};
use freemonoid::oracle::{
    oracle_cofinite_exact, oracle_completable, oracle_member, oracle_nfa_universal, oracle_shortest_incompletable,
    IncompletableSearch,
};
use freemonoid::reductions::{nfa_to_srs, reduce, GadgetVariant};
use freemonoid::srw::{is_immortal, longest_legal_sequence, shortest_emptying_sequence, SetRewritingSystem};
use freemonoid::words::is_member_dp;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let d = dict(&["000", "00000"]);
    ensure!(ok(is_cofinite(&d))?, "{{000,00000}} not cofinite");
    let longest = ok(longest_omitted_word(&d))?.map(|w| w.len());
    ensure!(longest == Some(7), "{{000,00000}} longest omitted {longest:?}");

    let d = dict(&["0", "01", "10", "11"]);
    ensure!(!ok(is_cofinite(&d))?, "{{0,01,10,11}} reported cofinite");
    ensure!(!ok(is_member(&d, &word("111")))?, "111 reported a member");

    let d = dict(&["01", "10", "11", "000"]);
    ensure!(!ok(is_complete(&d))?, "{{01,10,11,000}} reported complete");
    ensure!(!ok(is_completable(&d, &word("100010001")))?, "100010001 reported completable");
    ensure!(ok(is_complete(&dict(&["00", "01", "10", "11"])))?, "{{00,01,10,11}} reported incomplete");

    // stated as cofinite, but 1(01)^k is never a product of these words
    let d = dict(&["0", "01", "10", "11", "111"]);
    let main = ok(is_cofinite(&d))?;
    let exact = ok(oracle_cofinite_exact(&d, 1 << 16))?;
    let family_omitted = (0..12).all(|k| !oracle_member(&d, &word(&format!("1{}", "01".repeat(k)))));
    ensure!(!main && !exact && family_omitted, "{{0,01,10,11,111}}: main {main}, exact oracle {exact}");
    let fixed = dict(&["0", "01", "10", "11", "101", "111"]);
    ensure!(ok(is_cofinite(&fixed))?, "{{0,01,10,11,101,111}} not cofinite");

    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "4 of 5 examples as stated; {{0,01,10,11,111}} is NOT cofinite (1(01)^k omitted, confirmed by the \
         exact oracle), so that stated claim is false; {elapsed:.0?}"
    ))
}

fn counters() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        let srs = ok(immortality_counter(n))?;
        let len = ok(longest_legal_sequence(&srs, &srs.singleton(0)))?.len();
        ensure!(len == (1 << n) - 2, "immortality counter n={n}: {len}");
        let srs = ok(emptying_counter(n))?;
        let len = ok(shortest_emptying_sequence(&srs))?.map(|s| s.len());
        ensure!(len == Some((1 << n) - 1), "emptying counter n={n}: {len:?}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("n = 1..12 exact; {elapsed:.0?}"))
}

fn families() -> Outcome {
    let start = Instant::now();
    let mut lengths = Vec::new();
    for n in [2, 3] {
        let target = (1 << n) * n;
        let d = ok(frobenius_hard_family(n))?;
        ensure!(d.norm_max() == 4 * n + 1, "frobenius family n={n}: max {}", d.norm_max());
        let r = ok(analyze_cofiniteness(&d, default_cap(&d)))?;
        let omitted = r.longest_omitted.as_ref().map_or(0, |w| w.len());
        ensure!(r.cofinite && omitted >= target, "frobenius family n={n}: omitted {omitted}");

        let d = ok(incompletable_hard_family(n))?;
        ensure!(d.norm_max() == 4 * n, "incompletable family n={n}: max {}", d.norm_max());
        let r = ok(analyze_completeness(&d, default_cap(&d)))?;
        let w = r.witness.ok_or(format!("incompletable family n={n} reported complete"))?;
        ok(verify_incompletable(&d, &w))?;
        ensure!(w.len() >= target, "incompletable family n={n}: witness length {}", w.len());
        lengths.push(format!("n={n}: omitted {omitted}, incompletable {} (>= {target})", w.len()));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{}; {elapsed:.0?}", lengths.join(", ")))
}

fn closed_form_family() -> Outcome {
    let mut notes = Vec::new();
    for n in 2..=4 {
        let (only_closed, only_pipeline) = ok(appendix_difference(n))?;
        if only_closed.is_empty() && only_pipeline.is_empty() {
            notes.push(format!("n={n} equal"));
        } else {
            notes.push(format!(
                "n={n} differs: {} only in closed form, {} only in pipeline",
                only_closed.len(),
                only_pipeline.len()
            ));
        }
    }
    Ok(notes.join(", "))
}

fn frobenius_agrees(srs: &SetRewritingSystem) -> Result<bool, String> {
    let immortal = ok(is_immortal(srs))?.is_some();
    let r = ok(reduce(srs, GadgetVariant::Frobenius))?;
    ensure!(r.dictionary.norm_max() <= 3 * srs.ell() + srs.m() + 1, "word list too long");
    Ok(immortal == !ok(is_cofinite(&r.dictionary))?)
}

fn completeness_agrees(srs: &SetRewritingSystem) -> Result<bool, String> {
    let emptying = ok(shortest_emptying_sequence(srs))?.is_some();
    let r = ok(reduce(srs, GadgetVariant::FactorUniversality))?;
    ensure!(r.dictionary.norm_max() <= 3 * srs.ell() + srs.m(), "word list too long");
    Ok(emptying == !ok(is_complete(&r.dictionary))?)
}

fn reduction_equivalences() -> Outcome {
    let mut mismatches = 0;
    let mut checked = 0;
    for srs in all_systems(2, 2, &non_emptiable_images(2)) {
        mismatches += usize::from(!frobenius_agrees(&srs)?);
        checked += 1;
    }
    for srs in all_systems(2, 2, &permissive_images(2)) {
        mismatches += usize::from(!completeness_agrees(&srs)?);
        checked += 1;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..200 {
        mismatches += usize::from(!frobenius_agrees(&random_non_emptiable(&mut rng, 3, 3))?);
        mismatches += usize::from(!completeness_agrees(&random_permissive(&mut rng, 3, 3))?);
        checked += 2;
    }
    ensure!(mismatches == 0, "{mismatches} mismatches out of {checked}");
    Ok(format!("{checked} systems, 0 mismatches"))
}

fn nfa_reduction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x00f1_a5e7);
    let mut mismatches = 0;
    let mut rejecting = 0;
    for _ in 0..100 {
        let nfa = random_nfa(&mut rng, 4);
        let universal = oracle_nfa_universal(&nfa);
        let immortal = ok(is_immortal(&ok(nfa_to_srs(&nfa))?))?.is_some();
        mismatches += usize::from(immortal == universal);
        rejecting += usize::from(!universal);
    }
    ensure!(mismatches == 0, "{mismatches} mismatches");
    Ok(format!("100 NFAs ({rejecting} non-universal), 0 mismatches"))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x0_7ac1e);
    for sample in 0..300 {
        let d = random_dictionary(&mut rng, 4, 14);
        let words = d.rendered_words();
        let cofinite = ok(is_cofinite(&d))?;
        ensure!(cofinite == ok(oracle_cofinite_exact(&d, 1 << 20))?, "sample {sample} {words:?}: cofiniteness");
        let witness = ok(analyze_completeness(&d, default_cap(&d)))?.witness;
        let expected = match ok(oracle_shortest_incompletable(&d, incompletable_length_bound(&d)))? {
            IncompletableSearch::Complete => None,
            IncompletableSearch::Incompletable(w) => Some(w),
            IncompletableSearch::Inconclusive => return Err(format!("sample {sample}: oracle inconclusive")),
        };
        ensure!(witness == expected, "sample {sample} {words:?}: completeness");
        for _ in 0..20 {
            let len = rng.gen_range(0..14);
            let w = random_word(&mut rng, 2, len);
            ensure!(ok(is_member(&d, &w))? == oracle_member(&d, &w), "sample {sample}: membership");
            ensure!(ok(is_completable(&d, &w))? == oracle_completable(&d, &w), "sample {sample}: completable");
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("300 dictionaries, 0 mismatches; {elapsed:.0?}"))
}

fn bounds() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    for sample in 0..300 {
        let d = random_dictionary(&mut rng, 4, 14);
        let r = ok(analyze_cofiniteness(&d, default_cap(&d)))?;
        ensure!(r.subsets <= subset_bound(&d), "sample {sample}: {} subsets", r.subsets);
        ensure!(r.max_level_occupancy <= 1, "sample {sample}: occupancy {}", r.max_level_occupancy);
        if let Some(w) = &r.longest_omitted {
            ensure!(w.len() <= omitted_length_bound(&d), "sample {sample}: omitted length {}", w.len());
            ensure!(!ok(is_member_dp(&d, w))?, "sample {sample}: omitted word is a member");
        }
        if let Some(w) = ok(analyze_completeness(&d, default_cap(&d)))?.witness {
            ensure!(w.len() <= incompletable_length_bound(&d), "sample {sample}: incompletable length {}", w.len());
        }
    }
    // with a single element the counter has no defined image, so the longest
    // word skips the setting states and only the upper limit applies
    for n in 1..=4 {
        let r = ok(reduce(&ok(immortality_counter(n))?, GadgetVariant::Frobenius))?;
        let max = r.dictionary.norm_max();
        ensure!(max == 4 * n + 1 || (n == 1 && max <= 5), "counter n={n}: max {max}");
        let r = ok(reduce(&ok(emptying_counter(n))?, GadgetVariant::FactorUniversality))?;
        let max = r.dictionary.norm_max();
        ensure!(max == 4 * n || (n == 1 && max <= 4), "emptying counter n={n}: max {max}");
    }
    Ok(format!(
        "300 dictionaries within bounds, gadget lengths exact for n=2..4; debug assertions {}",
        if cfg!(debug_assertions) { "on" } else { "off" }
    ))
}

fn scope_note(reductions_ok: bool, families_ok: bool) -> Outcome {
    ensure!(reductions_ok && families_ok, "depends on criteria 3, 5 and 6");
    Ok("hardness is exercised through the executable reductions (5, 6); growth checked at n = 2, 3 only".into())
}

fn report(index: usize, name: &str, outcome: &Outcome) -> bool {
    match outcome {
        Ok(detail) => println!("criterion {index}: PASS  {name}: {detail}"),
        Err(detail) => println!("criterion {index}: FAIL  {name}: {detail}"),
    }
    outcome.is_ok()
}

fn main() {
    let mut all = true;
    all &= report(1, "worked examples", &worked_examples());
    all &= report(2, "counter exactness", &counters());
    let fam = families();
    all &= report(3, "lower-bound families", &fam);
    all &= report(4, "closed-form family", &closed_form_family());
    let red = reduction_equivalences();
    all &= report(5, "reduction equivalences", &red);
    let nfa = nfa_reduction();
    all &= report(6, "NFA reduction", &nfa);
    all &= report(7, "oracle agreement", &oracle_agreement());
    all &= report(8, "bound compliance", &bounds());
    all &= report(9, "scope of testable claims", &scope_note(red.is_ok() && nfa.is_ok(), fam.is_ok()));
    if !all {
        std::process::exit(1);
    }
}
