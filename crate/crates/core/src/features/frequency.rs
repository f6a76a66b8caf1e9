//! Word-frequency indicators: per-sentence minimum log frequency and rare
//! word statistics (rare = log10 frequency per billion below 4; words
//! outside the table count as rare).

use std::collections::HashSet;

use super::{mean, DocContext, FeatureVector};
use crate::model::Upos;

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let mut sentence_minima = Vec::new();
    for sentence in &ctx.sentences {
        let minimum = sentence
            .lexical_words()
            .filter(|w| w.is_content())
            .filter_map(|w| ctx.profile.word_log_frequency(&w.form))
            .fold(None, |acc: Option<f64>, freq| {
                Some(acc.map_or(freq, |m| m.min(freq)))
            });
        if let Some(minimum) = minimum {
            sentence_minima.push(minimum);
        }
    }
    out.insert("min_freq_per_sentence_mean", mean(&sentence_minima));

    let rare = |w: &&crate::model::Word| ctx.profile.is_rare(&w.form);
    let rare_total = ctx.words().filter(rare).count();
    out.insert("num_rare_words", Some(rare_total as f64));
    out.insert("rare_words_incidence", ctx.incidence(rare_total));

    for (upos, count_id, incidence_id) in [
        (Upos::NOUN, "num_rare_nouns", "rare_nouns_incidence"),
        (Upos::VERB, "num_rare_verbs", "rare_verbs_incidence"),
        (Upos::ADJ, "num_rare_adjectives", "rare_adjectives_incidence"),
        (Upos::ADV, "num_rare_adverbs", "rare_adverbs_incidence"),
    ] {
        let count = ctx.words().filter(|w| w.upos == upos).filter(rare).count();
        out.insert(count_id, Some(count as f64));
        out.insert(incidence_id, ctx.incidence(count));
    }

    let distinct_rare: HashSet<String> = ctx
        .content_words()
        .filter(rare)
        .map(|w| w.form_lower())
        .collect();
    out.insert(
        "num_distinct_rare_content_words",
        Some(distinct_rare.len() as f64),
    );
    out.insert(
        "distinct_rare_content_words_incidence",
        ctx.incidence(distinct_rare.len()),
    );

    let rare_per_sentence: Vec<f64> = ctx
        .sentences
        .iter()
        .map(|s| {
            s.lexical_words()
                .filter(|w| w.is_content())
                .filter(|w| ctx.profile.is_rare(&w.form))
                .count() as f64
        })
        .collect();
    out.insert(
        "rare_content_words_per_sentence_mean",
        mean(&rare_per_sentence),
    );

    let distinct_rare_per_sentence: Vec<f64> = ctx
        .sentences
        .iter()
        .map(|s| {
            s.lexical_words()
                .filter(|w| w.is_content())
                .filter(|w| ctx.profile.is_rare(&w.form))
                .map(|w| w.form_lower())
                .collect::<HashSet<_>>()
                .len() as f64
        })
        .collect();
    out.insert(
        "distinct_rare_content_words_per_sentence_mean",
        mean(&distinct_rare_per_sentence),
    );
}
