//! Descriptive counts and length statistics.

use std::collections::HashSet;

use super::{mean, pop_sd, DocContext, FeatureVector};

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let num_paragraphs = ctx.doc.paragraphs.len();
    let num_sentences = ctx.sentences.len();

    out.insert("num_paragraphs", Some(num_paragraphs as f64));
    out.insert("paragraphs_incidence", ctx.incidence(num_paragraphs));
    out.insert("num_sentences", Some(num_sentences as f64));
    out.insert("sentences_incidence", ctx.incidence(num_sentences));
    out.insert("num_words", Some(ctx.total_words as f64));
    out.insert("num_words_with_punct", Some(ctx.total_tokens as f64));

    let distinct_forms: HashSet<String> = ctx.words().map(|w| w.form_lower()).collect();
    let distinct_lemmas: HashSet<String> = ctx.words().map(|w| w.lemma_lower()).collect();
    out.insert("num_distinct_forms", Some(distinct_forms.len() as f64));
    out.insert("num_distinct_lemmas", Some(distinct_lemmas.len() as f64));

    let num_letters: usize = ctx.words().map(|w| w.letter_count()).sum();
    out.insert("num_letters", Some(num_letters as f64));

    let non_stopwords = ctx.words().filter(|w| !ctx.is_stopword(w)).count();
    out.insert("num_words_without_stopwords", Some(non_stopwords as f64));

    let sentence_lengths: Vec<f64> = ctx
        .sentences
        .iter()
        .map(|s| s.lexical_words().count() as f64)
        .collect();
    out.insert("sentence_length_mean", mean(&sentence_lengths));
    out.insert("sentence_length_sd", pop_sd(&sentence_lengths));

    let sentence_lengths_ns: Vec<f64> = ctx
        .sentences
        .iter()
        .map(|s| s.lexical_words().filter(|w| !ctx.is_stopword(w)).count() as f64)
        .collect();
    out.insert("sentence_length_no_stopwords_mean", mean(&sentence_lengths_ns));
    out.insert("sentence_length_no_stopwords_sd", pop_sd(&sentence_lengths_ns));

    let word_lengths: Vec<f64> = ctx.words().map(|w| w.letter_count() as f64).collect();
    out.insert("word_length_mean", mean(&word_lengths));
    out.insert("word_length_sd", pop_sd(&word_lengths));

    let word_lengths_ns: Vec<f64> = ctx
        .words()
        .filter(|w| !ctx.is_stopword(w))
        .map(|w| w.letter_count() as f64)
        .collect();
    out.insert("word_length_no_stopwords_mean", mean(&word_lengths_ns));
    out.insert("word_length_no_stopwords_sd", pop_sd(&word_lengths_ns));

    let lemma_lengths: Vec<f64> = ctx
        .words()
        .map(|w| w.lemma.chars().filter(|c| c.is_alphabetic()).count() as f64)
        .collect();
    out.insert("lemma_length_mean", mean(&lemma_lengths));
    out.insert("lemma_length_sd", pop_sd(&lemma_lengths));

    match ctx.syllables_per_word() {
        Some(syllables) => {
            out.insert("syllables_per_word_mean", mean(syllables));
            out.insert("syllables_per_word_sd", pop_sd(syllables));
        }
        None => {
            out.insert("syllables_per_word_mean", None);
            out.insert("syllables_per_word_sd", None);
        }
    }

    let paragraph_lengths: Vec<f64> = ctx
        .para_ranges
        .iter()
        .map(|(start, end)| (end - start) as f64)
        .collect();
    out.insert("paragraph_length_mean", mean(&paragraph_lengths));
    out.insert("paragraph_length_sd", pop_sd(&paragraph_lengths));
}
