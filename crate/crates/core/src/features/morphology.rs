//! Word information: PoS tag distributions, selected morphological feature
//! incidences, content words, proper noun ratio and irregular verbs.

use super::{DocContext, FeatureVector};
use crate::model::Upos;

const POS_IDS: &[(Upos, &str, &str)] = &[
    (Upos::NOUN, "num_nouns", "nouns_incidence"),
    (Upos::PROPN, "num_proper_nouns", "proper_nouns_incidence"),
    (Upos::VERB, "num_verbs", "verbs_incidence"),
    (Upos::AUX, "num_auxiliaries", "auxiliaries_incidence"),
    (Upos::ADJ, "num_adjectives", "adjectives_incidence"),
    (Upos::ADV, "num_adverbs", "adverbs_incidence"),
    (Upos::PRON, "num_pronouns", "pronouns_incidence"),
    (Upos::DET, "num_determiners", "determiners_incidence"),
    (Upos::ADP, "num_adpositions", "adpositions_incidence"),
    (Upos::CCONJ, "num_coord_conjunctions", "coord_conjunctions_incidence"),
    (Upos::SCONJ, "num_subord_conjunctions", "subord_conjunctions_incidence"),
    (Upos::NUM, "num_numerals", "numerals_incidence"),
    (Upos::PART, "num_particles", "particles_incidence"),
    (Upos::INTJ, "num_interjections", "interjections_incidence"),
    (Upos::SYM, "num_symbols", "symbols_incidence"),
    (Upos::X, "num_other_tags", "other_tags_incidence"),
];

/// FEATS-keyed incidence features: id, feature key, feature value.
const FEATS_IDS: &[(&str, &str, &str)] = &[
    ("past_tense_incidence", "Tense", "Past"),
    ("present_tense_incidence", "Tense", "Pres"),
    ("future_tense_incidence", "Tense", "Fut"),
    ("indicative_mood_incidence", "Mood", "Ind"),
    ("subjunctive_mood_incidence", "Mood", "Sub"),
    ("imperative_mood_incidence", "Mood", "Imp"),
    ("first_person_incidence", "Person", "1"),
    ("second_person_incidence", "Person", "2"),
    ("third_person_incidence", "Person", "3"),
    ("infinitive_incidence", "VerbForm", "Inf"),
    ("gerund_incidence", "VerbForm", "Ger"),
    ("participle_incidence", "VerbForm", "Part"),
];

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    for (upos, count_id, incidence_id) in POS_IDS {
        let count = ctx.tokens().filter(|w| w.upos == *upos).count();
        out.insert(*count_id, Some(count as f64));
        out.insert(*incidence_id, ctx.incidence(count));
    }

    // Punctuation is not part of the word denominator, so its incidence is
    // relative to the full token count to stay within [0, 1000].
    let punct = ctx.tokens().filter(|w| w.is_punct()).count();
    out.insert("num_punctuation", Some(punct as f64));
    out.insert("punctuation_incidence", ctx.incidence_tokens(punct));

    let content = ctx.content_words().count();
    out.insert("num_content_words", Some(content as f64));
    out.insert("content_words_incidence", ctx.incidence(content));

    let nouns = ctx.tokens().filter(|w| w.upos == Upos::NOUN).count();
    let proper = ctx.tokens().filter(|w| w.upos == Upos::PROPN).count();
    let ratio = if nouns + proper == 0 {
        None
    } else {
        Some(proper as f64 / (nouns + proper) as f64)
    };
    out.insert("proper_noun_ratio", ratio);

    let irregular = ctx
        .words()
        .filter(|w| matches!(w.upos, Upos::VERB | Upos::AUX))
        .filter(|w| ctx.profile.is_irregular_verb(&w.lemma))
        .count();
    out.insert("num_irregular_verbs", Some(irregular as f64));
    out.insert("irregular_verbs_incidence", ctx.incidence(irregular));

    for (id, key, value) in FEATS_IDS {
        let count = ctx.words().filter(|w| w.feats.has(key, value)).count();
        out.insert(*id, ctx.incidence(count));
    }
}
