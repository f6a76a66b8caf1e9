//! Discourse connective inventories and the phrase matcher.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::model::Sentence;

/// Connective categories. Declaration order doubles as the precedence used
/// when one phrase appears in several category lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnectiveCategory {
    Causal,
    Logical,
    Adversative,
    Temporal,
    Conditional,
}

impl ConnectiveCategory {
    pub const ALL: [ConnectiveCategory; 5] = [
        ConnectiveCategory::Causal,
        ConnectiveCategory::Logical,
        ConnectiveCategory::Adversative,
        ConnectiveCategory::Temporal,
        ConnectiveCategory::Conditional,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConnectiveCategory::Causal => "causal",
            ConnectiveCategory::Logical => "logical",
            ConnectiveCategory::Adversative => "adversative",
            ConnectiveCategory::Temporal => "temporal",
            ConnectiveCategory::Conditional => "conditional",
        }
    }
}

impl fmt::Display for ConnectiveCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConnectiveCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConnectiveCategory::ALL
            .iter()
            .find(|c| c.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown connective category `{s}`"))
    }
}

/// A matched connective: category plus the token span `[start, end)` within
/// the sentence word list (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectiveMatch {
    pub category: ConnectiveCategory,
    pub start: usize,
    pub end: usize,
}

/// The per-language connective phrase inventory.
#[derive(Debug, Clone, Default)]
pub struct ConnectiveSet {
    // lowercase token sequence -> category (precedence already applied)
    phrases: HashMap<Vec<String>, ConnectiveCategory>,
    max_len: usize,
}

impl ConnectiveSet {
    pub fn new() -> Self {
        ConnectiveSet::default()
    }

    pub fn insert(&mut self, category: ConnectiveCategory, phrase: &str) {
        let tokens: Vec<String> = phrase
            .split_whitespace()
            .map(|t| t.to_lowercase())
            .collect();
        if tokens.is_empty() {
            return;
        }
        self.max_len = self.max_len.max(tokens.len());
        // First category in precedence order wins for duplicated phrases.
        self.phrases
            .entry(tokens)
            .and_modify(|existing| {
                if category < *existing {
                    *existing = category;
                }
            })
            .or_insert(category);
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn phrase_count(&self) -> usize {
        self.phrases.len()
    }

    /// Greedy longest-match scan over the sentence's lowercased token
    /// sequence. Matched spans never overlap and are returned sorted by
    /// start position.
    pub fn match_sentence(&self, sentence: &Sentence) -> Vec<ConnectiveMatch> {
        let tokens: Vec<String> = sentence.words.iter().map(|w| w.form_lower()).collect();
        let mut matches = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let longest = (1..=self.max_len.min(tokens.len() - i))
                .rev()
                .find_map(|len| {
                    self.phrases
                        .get(&tokens[i..i + len])
                        .map(|&category| (len, category))
                });
            match longest {
                Some((len, category)) => {
                    matches.push(ConnectiveMatch {
                        category,
                        start: i,
                        end: i + len,
                    });
                    i += len;
                }
                None => i += 1,
            }
        }
        matches
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Feats, Upos, Word};

    fn sentence(forms: &[&str]) -> Sentence {
        Sentence {
            words: forms
                .iter()
                .enumerate()
                .map(|(i, f)| Word {
                    index: i + 1,
                    form: f.to_string(),
                    lemma: f.to_lowercase(),
                    upos: Upos::X,
                    feats: Feats::new(),
                    head: if i == 0 { 0 } else { 1 },
                    deprel: "dep".into(),
                    misc: "_".into(),
                })
                .collect(),
            sent_id: None,
        }
    }

    fn sample_set() -> ConnectiveSet {
        let mut set = ConnectiveSet::new();
        set.insert(ConnectiveCategory::Causal, "because");
        set.insert(ConnectiveCategory::Adversative, "on the other hand");
        set.insert(ConnectiveCategory::Adversative, "but");
        set.insert(ConnectiveCategory::Temporal, "then");
        set
    }

    #[test]
    fn single_word_match() {
        let set = sample_set();
        let m = set.match_sentence(&sentence(&["I", "left", "because", "Because"]));
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].category, ConnectiveCategory::Causal);
        assert_eq!((m[0].start, m[0].end), (2, 3));
        assert_eq!((m[1].start, m[1].end), (3, 4));
    }

    #[test]
    fn multiword_is_one_match() {
        let set = sample_set();
        let m = set.match_sentence(&sentence(&["On", "the", "other", "hand", ",", "go"]));
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].category, ConnectiveCategory::Adversative);
        assert_eq!((m[0].start, m[0].end), (0, 4));
    }

    /// Brute-force matcher used as an oracle: enumerate every substring that
    /// is a known phrase, then apply the same leftmost-longest policy.
    #[test]
    fn matches_agree_with_bruteforce_oracle() {
        let set = sample_set();
        let sent = sentence(&[
            "then", "on", "the", "other", "hand", "but", "because", "x", "then",
        ]);
        let tokens: Vec<String> = sent.words.iter().map(|w| w.form_lower()).collect();

        let mut expected = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let mut best: Option<(usize, ConnectiveCategory)> = None;
            for j in (i + 1)..=tokens.len() {
                if let Some(&cat) = set.phrases.get(&tokens[i..j]) {
                    best = Some((j, cat));
                }
            }
            if let Some((j, cat)) = best {
                expected.push(ConnectiveMatch {
                    category: cat,
                    start: i,
                    end: j,
                });
                i = j;
            } else {
                i += 1;
            }
        }

        assert_eq!(set.match_sentence(&sent), expected);
        // spans are disjoint and sorted
        let m = set.match_sentence(&sent);
        for pair in m.windows(2) {
            assert!(pair[0].end <= pair[1].start);
        }
    }

    #[test]
    fn duplicate_phrase_takes_precedence_category() {
        let mut set = ConnectiveSet::new();
        set.insert(ConnectiveCategory::Temporal, "as");
        set.insert(ConnectiveCategory::Causal, "as");
        let m = set.match_sentence(&sentence(&["as"]));
        assert_eq!(m[0].category, ConnectiveCategory::Causal);
    }

    #[test]
    fn no_match_is_empty() {
        let set = sample_set();
        assert!(set.match_sentence(&sentence(&["nothing", "here"])).is_empty());
    }
}
