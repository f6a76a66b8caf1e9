//! Indicator computation over validated documents.
//!
//! [`compute_all`] evaluates the catalog for one document under one
//! language profile. Every selected-and-available feature id is present in
//! the result, either with a finite value or with an explicit missing
//! marker (`None`); nothing else is.

mod connect;
mod descriptive;
mod frequency;
mod lexical;
mod morphology;
mod overlap;
mod readability;
mod semantic;
mod similarity;
mod syntax;
mod vocabulary;

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::{FeatureCatalog, FeatureGroup, Mode};
use crate::model::{Document, Sentence, Word};
use crate::resources::LanguageProfile;

/// One document's computed indicator values. A key maps to `None` when the
/// indicator is selected but undefined for this document (the missing
/// marker). Values are always finite.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FeatureVector {
    values: BTreeMap<String, Option<f64>>,
}

impl FeatureVector {
    pub fn new() -> Self {
        FeatureVector::default()
    }

    /// Insert a value; non-finite values become the missing marker.
    pub fn insert(&mut self, id: impl Into<String>, value: Option<f64>) {
        let value = value.filter(|v| v.is_finite());
        self.values.insert(id.into(), value);
    }

    /// `None` = id absent, `Some(None)` = missing marker, `Some(Some(v))` =
    /// computed value.
    pub fn get(&self, id: &str) -> Option<Option<f64>> {
        self.values.get(id).copied()
    }

    pub fn value(&self, id: &str) -> Option<f64> {
        self.values.get(id).copied().flatten()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.values.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(|k| k.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Option<f64>)> + '_ {
        self.values.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl FromIterator<(String, Option<f64>)> for FeatureVector {
    fn from_iter<T: IntoIterator<Item = (String, Option<f64>)>>(iter: T) -> Self {
        let mut fv = FeatureVector::new();
        for (id, value) in iter {
            fv.insert(id, value);
        }
        fv
    }
}

/// Units per 1000 words; `None` when there are no words to normalize by.
pub fn incidence(count: usize, total_words: usize) -> Option<f64> {
    if total_words == 0 {
        None
    } else {
        Some(1000.0 * count as f64 / total_words as f64)
    }
}

pub(crate) fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        None
    } else {
        Some(values.iter().sum::<f64>() / values.len() as f64)
    }
}

/// Population standard deviation (divide by n).
pub(crate) fn pop_sd(values: &[f64]) -> Option<f64> {
    let m = mean(values)?;
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / values.len() as f64;
    Some(var.sqrt())
}

/// Shared per-document computation state.
pub(crate) struct DocContext<'a> {
    pub doc: &'a Document,
    pub profile: &'a LanguageProfile,
    pub sentences: Vec<&'a Sentence>,
    /// Sentence index ranges `[start, end)` per paragraph.
    pub para_ranges: Vec<(usize, usize)>,
    /// Token count including punctuation.
    pub total_tokens: usize,
    /// Word count excluding punctuation: the incidence denominator.
    pub total_words: usize,
    syllables: OnceCell<Option<Vec<f64>>>,
}

impl<'a> DocContext<'a> {
    pub fn new(doc: &'a Document, profile: &'a LanguageProfile) -> Self {
        let mut sentences = Vec::new();
        let mut para_ranges = Vec::new();
        for paragraph in &doc.paragraphs {
            let start = sentences.len();
            sentences.extend(paragraph.sentences.iter());
            para_ranges.push((start, sentences.len()));
        }
        let total_tokens = sentences.iter().map(|s| s.words.len()).sum();
        let total_words = sentences
            .iter()
            .flat_map(|s| s.words.iter())
            .filter(|w| !w.is_punct())
            .count();
        DocContext {
            doc,
            profile,
            sentences,
            para_ranges,
            total_tokens,
            total_words,
            syllables: OnceCell::new(),
        }
    }

    /// All tokens in document order.
    pub fn tokens(&self) -> impl Iterator<Item = &'a Word> + '_ {
        self.sentences.iter().flat_map(|s| s.words.iter())
    }

    /// Words excluding punctuation.
    pub fn words(&self) -> impl Iterator<Item = &'a Word> + '_ {
        self.tokens().filter(|w| !w.is_punct())
    }

    pub fn content_words(&self) -> impl Iterator<Item = &'a Word> + '_ {
        self.words().filter(|w| w.is_content())
    }

    /// Count per 1000 words (punctuation excluded from the denominator).
    pub fn incidence(&self, count: usize) -> Option<f64> {
        incidence(count, self.total_words)
    }

    /// Count per 1000 tokens; used where the counted class includes
    /// punctuation itself.
    pub fn incidence_tokens(&self, count: usize) -> Option<f64> {
        incidence(count, self.total_tokens)
    }

    /// Syllable counts aligned with the words (non-punctuation, at least one
    /// letter) they were computed from; `None` without a syllabifier.
    pub fn syllables_per_word(&self) -> Option<&[f64]> {
        self.syllables
            .get_or_init(|| {
                let mut counts = Vec::new();
                for word in self.words() {
                    if word.form.chars().any(|c| c.is_alphabetic()) {
                        match self.profile.syllable_count(&word.form) {
                            Ok(n) => counts.push(n as f64),
                            Err(_) => return None,
                        }
                    }
                }
                Some(counts)
            })
            .as_deref()
    }

    pub fn is_stopword(&self, word: &Word) -> bool {
        self.profile.is_stopword(&word.form)
    }
}

/// Compute the selected indicators for a validated document.
///
/// `groups = None` selects every group; `mode = Ratios` drops absolute
/// counts. Output ids are exactly the catalog selection for the profile's
/// available features.
pub fn compute_all(
    doc: &Document,
    profile: &LanguageProfile,
    mode: Mode,
    groups: Option<&BTreeSet<FeatureGroup>>,
) -> FeatureVector {
    let catalog = FeatureCatalog::standard();
    let selected = catalog.select(&profile.available_features, mode, groups);
    let selected_groups: BTreeSet<FeatureGroup> = selected
        .iter()
        .filter_map(|id| catalog.get(id))
        .map(|def| def.group)
        .collect();

    let ctx = DocContext::new(doc, profile);
    let mut raw = FeatureVector::new();
    for group in selected_groups {
        let compute = match group {
            FeatureGroup::Descriptive => descriptive::compute,
            FeatureGroup::LexicalDiversity => lexical::compute,
            FeatureGroup::Readability => readability::compute,
            FeatureGroup::WordFrequency => frequency::compute,
            FeatureGroup::VocabularyKnowledge => vocabulary::compute,
            FeatureGroup::WordInformation => morphology::compute,
            FeatureGroup::Syntax => syntax::compute,
            FeatureGroup::SemanticInformation => semantic::compute,
            FeatureGroup::SemanticOverlap => similarity::compute,
            FeatureGroup::ReferentialCohesion => overlap::compute,
            FeatureGroup::Connectives => connect::compute,
        };
        compute(&ctx, &mut raw);
    }

    selected
        .into_iter()
        .map(|id| (id.to_string(), raw.get(id).flatten()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ScoreKind;
    use crate::synth::{demo_profile, random_document};

    #[test]
    fn default_selection_covers_every_available_id() {
        let profile = demo_profile("en");
        let doc = random_document(1, "d");
        let fv = compute_all(&doc, &profile, Mode::All, None);
        for id in &profile.available_features {
            assert!(fv.contains(id), "missing id {id}");
        }
        assert_eq!(fv.len(), profile.available_features.len());
    }

    #[test]
    fn group_subset_restricts_output() {
        let profile = demo_profile("en");
        let doc = random_document(2, "d");
        let groups: BTreeSet<FeatureGroup> = [FeatureGroup::Descriptive].into();
        let fv = compute_all(&doc, &profile, Mode::All, Some(&groups));
        let catalog = FeatureCatalog::standard();
        assert!(!fv.is_empty());
        for id in fv.ids() {
            assert_eq!(catalog.get(id).unwrap().group, FeatureGroup::Descriptive);
        }
    }

    #[test]
    fn ratios_mode_has_no_absolute_ids() {
        let profile = demo_profile("en");
        let doc = random_document(3, "d");
        let fv = compute_all(&doc, &profile, Mode::Ratios, None);
        let catalog = FeatureCatalog::standard();
        for id in fv.ids() {
            assert_ne!(catalog.get(id).unwrap().kind, ScoreKind::Absolute);
        }
    }

    #[test]
    fn computation_is_deterministic() {
        let profile = demo_profile("en");
        let doc = random_document(4, "d");
        let a = compute_all(&doc, &profile, Mode::All, None);
        let b = compute_all(&doc, &profile, Mode::All, None);
        assert_eq!(a, b);
    }

    #[test]
    fn non_finite_values_become_missing() {
        let mut fv = FeatureVector::new();
        fv.insert("x", Some(f64::NAN));
        fv.insert("y", Some(f64::INFINITY));
        fv.insert("z", Some(1.5));
        assert_eq!(fv.get("x"), Some(None));
        assert_eq!(fv.get("y"), Some(None));
        assert_eq!(fv.get("z"), Some(Some(1.5)));
    }

    #[test]
    fn incidence_arithmetic() {
        assert_eq!(incidence(5, 250), Some(20.0));
        assert_eq!(incidence(0, 10), Some(0.0));
        assert_eq!(incidence(7, 7), Some(1000.0));
        assert_eq!(incidence(1, 0), None);
    }
}
