//! Lexical diversity: densities, type-token ratios, Honore, Maas, MTLD.

use std::collections::HashSet;

use super::{DocContext, FeatureVector};
use crate::model::Upos;

/// Running-TTR threshold that closes an MTLD factor.
const MTLD_THRESHOLD: f64 = 0.72;

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let words: Vec<_> = ctx.words().collect();
    let total = words.len();

    let density = |count: usize| {
        if total == 0 {
            None
        } else {
            Some(count as f64 / total as f64)
        }
    };
    out.insert("lexical_density", density(words.iter().filter(|w| w.is_content()).count()));
    out.insert("noun_density", density(words.iter().filter(|w| w.upos == Upos::NOUN).count()));
    out.insert("verb_density", density(words.iter().filter(|w| w.upos == Upos::VERB).count()));
    out.insert(
        "adjective_density",
        density(words.iter().filter(|w| w.upos == Upos::ADJ).count()),
    );
    out.insert(
        "adverb_density",
        density(words.iter().filter(|w| w.upos == Upos::ADV).count()),
    );

    let forms: Vec<String> = words.iter().map(|w| w.form_lower()).collect();
    let lemmas: Vec<String> = words.iter().map(|w| w.lemma_lower()).collect();

    let ttr_of = |tokens: &[String]| -> Option<f64> {
        if tokens.is_empty() {
            return None;
        }
        let types: HashSet<&String> = tokens.iter().collect();
        Some(types.len() as f64 / tokens.len() as f64)
    };
    let pos_forms = |pos: Upos| -> Vec<String> {
        words
            .iter()
            .filter(|w| w.upos == pos)
            .map(|w| w.form_lower())
            .collect()
    };
    let pos_lemmas = |pos: Upos| -> Vec<String> {
        words
            .iter()
            .filter(|w| w.upos == pos)
            .map(|w| w.lemma_lower())
            .collect()
    };
    let content_forms: Vec<String> = words
        .iter()
        .filter(|w| w.is_content())
        .map(|w| w.form_lower())
        .collect();
    let content_lemmas: Vec<String> = words
        .iter()
        .filter(|w| w.is_content())
        .map(|w| w.lemma_lower())
        .collect();

    out.insert("simple_ttr", ttr_of(&forms));
    out.insert("content_ttr", ttr_of(&content_forms));
    out.insert("noun_ttr", ttr_of(&pos_forms(Upos::NOUN)));
    out.insert("verb_ttr", ttr_of(&pos_forms(Upos::VERB)));
    out.insert("adjective_ttr", ttr_of(&pos_forms(Upos::ADJ)));
    out.insert("adverb_ttr", ttr_of(&pos_forms(Upos::ADV)));
    out.insert("lemma_simple_ttr", ttr_of(&lemmas));
    out.insert("lemma_content_ttr", ttr_of(&content_lemmas));
    out.insert("lemma_noun_ttr", ttr_of(&pos_lemmas(Upos::NOUN)));
    out.insert("lemma_verb_ttr", ttr_of(&pos_lemmas(Upos::VERB)));
    out.insert("lemma_adjective_ttr", ttr_of(&pos_lemmas(Upos::ADJ)));
    out.insert("lemma_adverb_ttr", ttr_of(&pos_lemmas(Upos::ADV)));

    out.insert("honore", honore(&forms));
    out.insert("maas", maas(&forms));
    out.insert("mtld", mtld(&forms));
}

/// Honore R = 100 ln N / (1 - V1/V); undefined when every type is a hapax.
fn honore(tokens: &[String]) -> Option<f64> {
    let n = tokens.len();
    if n == 0 {
        return None;
    }
    let mut counts: std::collections::HashMap<&String, usize> = std::collections::HashMap::new();
    for t in tokens {
        *counts.entry(t).or_default() += 1;
    }
    let v = counts.len() as f64;
    let v1 = counts.values().filter(|&&c| c == 1).count() as f64;
    let denom = 1.0 - v1 / v;
    if denom <= 0.0 {
        return None;
    }
    Some(100.0 * (n as f64).ln() / denom)
}

/// Maas a^2 = (ln N - ln V) / (ln N)^2; undefined for a single token.
fn maas(tokens: &[String]) -> Option<f64> {
    let n = tokens.len() as f64;
    if n < 2.0 {
        return None;
    }
    let types: HashSet<&String> = tokens.iter().collect();
    let v = types.len() as f64;
    Some((n.ln() - v.ln()) / (n.ln() * n.ln()))
}

/// MTLD: mean factor length with threshold 0.72, partial-factor remainder
/// credit, averaged over a forward and a backward pass.
fn mtld(tokens: &[String]) -> Option<f64> {
    if tokens.is_empty() {
        return None;
    }
    let forward = mtld_factors(tokens.iter());
    let backward = mtld_factors(tokens.iter().rev());
    if forward <= 0.0 || backward <= 0.0 {
        return None;
    }
    let n = tokens.len() as f64;
    Some((n / forward + n / backward) / 2.0)
}

fn mtld_factors<'a>(tokens: impl Iterator<Item = &'a String>) -> f64 {
    let mut factors = 0.0f64;
    let mut types: HashSet<&String> = HashSet::new();
    let mut count = 0usize;
    for token in tokens {
        count += 1;
        types.insert(token);
        let ttr = types.len() as f64 / count as f64;
        if ttr < MTLD_THRESHOLD {
            factors += 1.0;
            types.clear();
            count = 0;
        }
    }
    if count > 0 {
        let ttr = types.len() as f64 / count as f64;
        factors += (1.0 - ttr) / (1.0 - MTLD_THRESHOLD);
    }
    factors
}
