//! Referential cohesion: noun, argument, stem and content word overlap
//! between sentence pairs, both adjacent and all pairs document-wide.

use std::collections::HashSet;

use super::{mean, pop_sd, DocContext, FeatureVector};
use crate::model::{Sentence, Upos};

struct SentenceSets {
    noun_lemmas: HashSet<String>,
    pronoun_forms: HashSet<String>,
    content_lemmas: HashSet<String>,
    content_forms: HashSet<String>,
    content_tokens: usize,
}

impl SentenceSets {
    fn new(sentence: &Sentence) -> Self {
        let mut noun_lemmas = HashSet::new();
        let mut pronoun_forms = HashSet::new();
        let mut content_lemmas = HashSet::new();
        let mut content_forms = HashSet::new();
        let mut content_tokens = 0;
        for word in sentence.lexical_words() {
            match word.upos {
                Upos::NOUN | Upos::PROPN => {
                    noun_lemmas.insert(word.lemma_lower());
                }
                Upos::PRON => {
                    // Personal pronouns; unmarked PronType counts as personal.
                    if word
                        .feats
                        .get("PronType")
                        .map(|v| v == "Prs")
                        .unwrap_or(true)
                    {
                        pronoun_forms.insert(word.form_lower());
                    }
                }
                _ => {}
            }
            if word.is_content() {
                content_lemmas.insert(word.lemma_lower());
                content_forms.insert(word.form_lower());
                content_tokens += 1;
            }
        }
        SentenceSets {
            noun_lemmas,
            pronoun_forms,
            content_lemmas,
            content_forms,
            content_tokens,
        }
    }
}

fn share<T: std::hash::Hash + Eq>(a: &HashSet<T>, b: &HashSet<T>) -> bool {
    a.iter().any(|x| b.contains(x))
}

fn noun_overlap(a: &SentenceSets, b: &SentenceSets) -> f64 {
    share(&a.noun_lemmas, &b.noun_lemmas) as u8 as f64
}

fn argument_overlap(a: &SentenceSets, b: &SentenceSets) -> f64 {
    (share(&a.noun_lemmas, &b.noun_lemmas) || share(&a.pronoun_forms, &b.pronoun_forms)) as u8
        as f64
}

/// A noun lemma of either sentence appearing among the other's content
/// lemmas.
fn stem_overlap(a: &SentenceSets, b: &SentenceSets) -> f64 {
    (share(&a.noun_lemmas, &b.content_lemmas) || share(&b.noun_lemmas, &a.content_lemmas)) as u8
        as f64
}

/// Shared content forms over the mean content length of the pair; `None`
/// when neither sentence has content words.
fn content_overlap(a: &SentenceSets, b: &SentenceSets) -> Option<f64> {
    let mean_len = (a.content_tokens + b.content_tokens) as f64 / 2.0;
    if mean_len == 0.0 {
        return None;
    }
    let shared = a.content_forms.intersection(&b.content_forms).count() as f64;
    Some(shared / mean_len)
}

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let sets: Vec<SentenceSets> = ctx.sentences.iter().map(|s| SentenceSets::new(s)).collect();
    let n = sets.len();

    let adjacent: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();

    for (pairs, suffix) in [(&adjacent, "adjacent"), (&all_pairs, "all")] {
        let collect = |f: fn(&SentenceSets, &SentenceSets) -> f64| -> Vec<f64> {
            pairs.iter().map(|&(i, j)| f(&sets[i], &sets[j])).collect()
        };
        out.insert(format!("noun_overlap_{suffix}"), mean(&collect(noun_overlap)));
        out.insert(
            format!("argument_overlap_{suffix}"),
            mean(&collect(argument_overlap)),
        );
        out.insert(format!("stem_overlap_{suffix}"), mean(&collect(stem_overlap)));

        let proportional: Vec<f64> = pairs
            .iter()
            .filter_map(|&(i, j)| content_overlap(&sets[i], &sets[j]))
            .collect();
        out.insert(
            format!("content_overlap_{suffix}_mean"),
            mean(&proportional),
        );
        out.insert(format!("content_overlap_{suffix}_sd"), pop_sd(&proportional));
    }
}

#[cfg(test)]
mod tests {
    use super::super::compute_all;
    use crate::catalog::Mode;
    use crate::conllu::parse_conllu;
    use crate::resources::LanguageProfile;

    fn profile() -> LanguageProfile {
        LanguageProfile::builder("en").build().unwrap()
    }

    fn sentence_line(i: usize, form: &str, lemma: &str, upos: &str, head: usize) -> String {
        format!("{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\tdep\t_\t_\n")
    }

    #[test]
    fn shared_noun_lemma_is_full_adjacent_overlap() {
        let mut text = String::new();
        text.push_str(&sentence_line(1, "dogs", "dog", "NOUN", 0));
        text.push('\n');
        text.push_str(&sentence_line(1, "dog", "dog", "NOUN", 0));
        text.push('\n');
        let doc = parse_conllu(text.as_bytes(), "t").unwrap();
        let fv = compute_all(&doc, &profile(), Mode::All, None);
        assert_eq!(fv.value("noun_overlap_adjacent"), Some(1.0));
        assert_eq!(fv.value("argument_overlap_adjacent"), Some(1.0));
        assert_eq!(fv.value("stem_overlap_adjacent"), Some(1.0));
    }

    #[test]
    fn disjoint_vocabulary_means_zero_overlap() {
        let mut text = String::new();
        text.push_str(&sentence_line(1, "dog", "dog", "NOUN", 0));
        text.push('\n');
        text.push_str(&sentence_line(1, "cat", "cat", "NOUN", 0));
        text.push('\n');
        let doc = parse_conllu(text.as_bytes(), "t").unwrap();
        let fv = compute_all(&doc, &profile(), Mode::All, None);
        assert_eq!(fv.value("noun_overlap_adjacent"), Some(0.0));
        assert_eq!(fv.value("argument_overlap_adjacent"), Some(0.0));
        assert_eq!(fv.value("stem_overlap_adjacent"), Some(0.0));
        assert_eq!(fv.value("content_overlap_adjacent_mean"), Some(0.0));
    }

    #[test]
    fn three_sentence_pair_enumeration() {
        // Only sentences 1 and 2 share a noun: adjacent pairs (1,2),(2,3)
        // give 1/2; all pairs (1,2),(1,3),(2,3) give 1/3.
        let mut text = String::new();
        text.push_str(&sentence_line(1, "dog", "dog", "NOUN", 0));
        text.push('\n');
        text.push_str(&sentence_line(1, "dog", "dog", "NOUN", 0));
        text.push('\n');
        text.push_str(&sentence_line(1, "bird", "bird", "NOUN", 0));
        text.push('\n');
        let doc = parse_conllu(text.as_bytes(), "t").unwrap();
        let fv = compute_all(&doc, &profile(), Mode::All, None);
        assert_eq!(fv.value("noun_overlap_adjacent"), Some(0.5));
        let all = fv.value("noun_overlap_all").unwrap();
        assert!((all - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_sentence_document_is_all_missing() {
        let mut text = String::new();
        text.push_str(&sentence_line(1, "dog", "dog", "NOUN", 0));
        text.push('\n');
        let doc = parse_conllu(text.as_bytes(), "t").unwrap();
        let fv = compute_all(&doc, &profile(), Mode::All, None);
        for id in [
            "noun_overlap_adjacent",
            "noun_overlap_all",
            "argument_overlap_adjacent",
            "stem_overlap_all",
            "content_overlap_adjacent_mean",
            "content_overlap_all_sd",
        ] {
            assert_eq!(fv.get(id), Some(None), "{id} should be missing");
        }
    }

    #[test]
    fn argument_overlap_via_personal_pronoun() {
        let mut text = String::new();
        text.push_str(&sentence_line(1, "she", "she", "PRON", 0));
        text.push('\n');
        text.push_str(&sentence_line(1, "She", "she", "PRON", 0));
        text.push('\n');
        let doc = parse_conllu(text.as_bytes(), "t").unwrap();
        let fv = compute_all(&doc, &profile(), Mode::All, None);
        assert_eq!(fv.value("noun_overlap_adjacent"), Some(0.0));
        assert_eq!(fv.value("argument_overlap_adjacent"), Some(1.0));
    }
}
