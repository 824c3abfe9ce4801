mod common;

use common::{all_systems, non_emptiable_images, permissive_images, random_nfa, random_non_emptiable, random_permissive};
use freemonoid::automata::Dfa;
use freemonoid::completeness::is_complete;
use freemonoid::frobenius::is_cofinite;
use freemonoid::oracle::{oracle_nfa_universal, oracle_srs_search};
use freemonoid::reductions::{
    binarize, decode_word, encode_word, factor_universality_pipeline, frobenius_pipeline, nfa_to_srs, reduce,
    GadgetVariant, Nfa, Reduction, ALPHA,
};
use freemonoid::srw::{is_immortal, shortest_emptying_sequence, SetRewritingSystem};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Word count limit for the binary list of a gadget built from a system
/// with `ell` elements and `m` rules.
fn word_count_limit(variant: GadgetVariant, ell: usize, m: usize) -> usize {
    let tail = 2 + ell * m * (1 + ell);
    m * ell * ell
        + match variant {
            GadgetVariant::Frobenius => tail * (1 + ell),
            GadgetVariant::FactorUniversality => tail * ell,
        }
}

fn check_word_list(srs: &SetRewritingSystem, reduction: &Reduction, variant: GadgetVariant) {
    let (ell, m) = (srs.ell(), srs.m());
    let max_len = match variant {
        GadgetVariant::Frobenius => 3 * ell + m + 1,
        GadgetVariant::FactorUniversality => 3 * ell + m,
    };
    let d = &reduction.dictionary;
    assert!(d.norm_max() <= max_len);
    assert!(d.len() <= word_count_limit(variant, ell, m));
    assert_eq!(d.alphabet().size(), 2);
    for w in d.words() {
        assert!(reduction.binary.accepts(w.symbols()));
    }
}

fn frobenius_agrees(srs: &SetRewritingSystem) {
    let immortal = is_immortal(srs).unwrap().is_some();
    let reduction = reduce(srs, GadgetVariant::Frobenius).unwrap();
    check_word_list(srs, &reduction, GadgetVariant::Frobenius);
    let cofinite = is_cofinite(&reduction.dictionary).unwrap();
    assert_eq!(immortal, !cofinite, "system:\n{}", srs.to_text());
}

fn factor_universality_agrees(srs: &SetRewritingSystem) {
    let emptying = shortest_emptying_sequence(srs).unwrap().is_some();
    let reduction = reduce(srs, GadgetVariant::FactorUniversality).unwrap();
    check_word_list(srs, &reduction, GadgetVariant::FactorUniversality);
    let complete = is_complete(&reduction.dictionary).unwrap();
    assert_eq!(emptying, !complete, "system:\n{}", srs.to_text());
}

#[test]
fn every_small_non_emptiable_system() {
    let systems = all_systems(2, 2, &non_emptiable_images(2));
    assert_eq!(systems.len(), 256);
    for srs in &systems {
        frobenius_agrees(srs);
    }
}

#[test]
fn every_small_permissive_system() {
    let systems = all_systems(2, 2, &permissive_images(2));
    assert_eq!(systems.len(), 256);
    for srs in &systems {
        factor_universality_agrees(srs);
    }
}

#[test]
fn random_three_element_systems() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..200 {
        frobenius_agrees(&random_non_emptiable(&mut rng, 3, 3));
    }
    for _ in 0..200 {
        factor_universality_agrees(&random_permissive(&mut rng, 3, 3));
    }
}

#[test]
fn immortality_matches_exhaustive_search() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..300 {
        let srs = random_non_emptiable(&mut rng, 4, 3);
        let report = oracle_srs_search(&srs).unwrap();
        assert_eq!(is_immortal(&srs).unwrap().is_some(), report.immortal);
        let srs = random_permissive(&mut rng, 4, 2);
        let report = oracle_srs_search(&srs).unwrap();
        let shortest = shortest_emptying_sequence(&srs).unwrap().map(|s| s.len());
        assert_eq!(report.shortest_emptying, Some(shortest));
    }
}

#[test]
fn pipelines_reject_unsupported_systems() {
    let mut rng = StdRng::seed_from_u64(5);
    let permissive_with_empty = loop {
        let srs = random_permissive(&mut rng, 2, 2);
        if !srs.is_non_emptiable() {
            break srs;
        }
    };
    assert!(frobenius_pipeline(&permissive_with_empty).is_err());
    let partial = loop {
        let srs = random_non_emptiable(&mut rng, 2, 2);
        if !srs.is_permissive() {
            break srs;
        }
    };
    assert!(factor_universality_pipeline(&partial).is_err());
}

#[test]
fn binarized_gadget_tracks_rule_letters() {
    // the encoding is faithful as long as every rule letter is read in an
    // element state; elsewhere a single 1 already stands for any rule letter
    let mut rng = StdRng::seed_from_u64(11);
    let mut compared = 0;
    for _ in 0..40 {
        let srs = random_non_emptiable(&mut rng, 3, 3);
        let gadget = reduce(&srs, GadgetVariant::Frobenius).unwrap().gadget;
        let binary: Dfa = binarize(&gadget);
        for _ in 0..50 {
            let len = rand::Rng::gen_range(&mut rng, 0..8);
            let w = common::random_word(&mut rng, srs.m() + 1, len);
            let bits = encode_word(srs.m(), w.symbols());
            assert_eq!(decode_word(srs.m(), bits.symbols()).unwrap(), (w.clone(), 0));
            let mut q = gadget.initial();
            let mut faithful = true;
            for &a in w.symbols() {
                faithful &= a == ALPHA || gadget.element_states().contains(&q);
                q = gadget.dfa().next(q, a);
            }
            if faithful {
                compared += 1;
                assert_eq!(gadget.dfa().accepts(w.symbols()), binary.accepts(bits.symbols()));
            }
        }
    }
    assert!(compared > 100);
}

#[test]
fn nfa_reduction_matches_universality() {
    let mut rng = StdRng::seed_from_u64(0x00f1_a5e7);
    let mut non_universal = 0;
    for _ in 0..100 {
        let nfa = random_nfa(&mut rng, 4);
        let srs = nfa_to_srs(&nfa).unwrap();
        assert!(srs.is_non_emptiable());
        let universal = oracle_nfa_universal(&nfa);
        assert_eq!(universal, nfa.is_universal());
        assert_eq!(is_immortal(&srs).unwrap().is_some(), !universal);
        non_universal += usize::from(!universal);
    }
    assert!(non_universal > 10 && non_universal < 90);
}

#[test]
fn one_state_nfas() {
    // loop on the first symbol only: the second symbol is rejected
    let partial = Nfa::new(1, 2, 0, vec![true], vec![vec![0], vec![]]).unwrap();
    assert!(is_immortal(&nfa_to_srs(&partial).unwrap()).unwrap().is_some());
    let full = Nfa::new(1, 2, 0, vec![true], vec![vec![0], vec![0]]).unwrap();
    assert!(is_immortal(&nfa_to_srs(&full).unwrap()).unwrap().is_none());
}
