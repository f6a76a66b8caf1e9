//! The layered linguistic data model: documents are lists of paragraphs,
//! paragraphs are lists of sentences, sentences are lists of words.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Universal PoS tags, UD v2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum Upos {
    ADJ,
    ADP,
    ADV,
    AUX,
    CCONJ,
    DET,
    INTJ,
    NOUN,
    NUM,
    PART,
    PRON,
    PROPN,
    PUNCT,
    SCONJ,
    SYM,
    VERB,
    X,
}

impl Upos {
    /// All 17 tags in a fixed order.
    pub const ALL: [Upos; 17] = [
        Upos::ADJ,
        Upos::ADP,
        Upos::ADV,
        Upos::AUX,
        Upos::CCONJ,
        Upos::DET,
        Upos::INTJ,
        Upos::NOUN,
        Upos::NUM,
        Upos::PART,
        Upos::PRON,
        Upos::PROPN,
        Upos::PUNCT,
        Upos::SCONJ,
        Upos::SYM,
        Upos::VERB,
        Upos::X,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Upos::ADJ => "ADJ",
            Upos::ADP => "ADP",
            Upos::ADV => "ADV",
            Upos::AUX => "AUX",
            Upos::CCONJ => "CCONJ",
            Upos::DET => "DET",
            Upos::INTJ => "INTJ",
            Upos::NOUN => "NOUN",
            Upos::NUM => "NUM",
            Upos::PART => "PART",
            Upos::PRON => "PRON",
            Upos::PROPN => "PROPN",
            Upos::PUNCT => "PUNCT",
            Upos::SCONJ => "SCONJ",
            Upos::SYM => "SYM",
            Upos::VERB => "VERB",
            Upos::X => "X",
        }
    }

    /// Content (lexical) words: NOUN, PROPN, VERB, ADJ, ADV.
    pub fn is_content(&self) -> bool {
        matches!(
            self,
            Upos::NOUN | Upos::PROPN | Upos::VERB | Upos::ADJ | Upos::ADV
        )
    }
}

impl fmt::Display for Upos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Upos {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ADJ" => Upos::ADJ,
            "ADP" => Upos::ADP,
            "ADV" => Upos::ADV,
            "AUX" => Upos::AUX,
            "CCONJ" => Upos::CCONJ,
            "DET" => Upos::DET,
            "INTJ" => Upos::INTJ,
            "NOUN" => Upos::NOUN,
            "NUM" => Upos::NUM,
            "PART" => Upos::PART,
            "PRON" => Upos::PRON,
            "PROPN" => Upos::PROPN,
            "PUNCT" => Upos::PUNCT,
            "SCONJ" => Upos::SCONJ,
            "SYM" => Upos::SYM,
            "VERB" => Upos::VERB,
            "X" => Upos::X,
            _ => return Err(()),
        })
    }
}

/// Morphological features (the FEATS column), `key=value` pairs sorted by key.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Feats(BTreeMap<String, String>);

impl Feats {
    pub fn new() -> Self {
        Feats(BTreeMap::new())
    }

    /// Parse a FEATS column (`Case=Nom|Number=Sing`); `_` means empty.
    pub fn parse(column: &str) -> Self {
        let mut map = BTreeMap::new();
        if column != "_" && !column.is_empty() {
            for pair in column.split('|') {
                if let Some((k, v)) = pair.split_once('=') {
                    map.insert(k.to_string(), v.to_string());
                }
            }
        }
        Feats(map)
    }

    pub fn insert(&mut self, key: &str, value: &str) {
        self.0.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(|v| v.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if some feature whose base name is `key` carries `value`.
    ///
    /// Layered features (`Person[erg]=3`) match their base name, and
    /// multi-valued features (`Case=Nom,Acc`) match any listed value.
    pub fn has(&self, key: &str, value: &str) -> bool {
        self.0.iter().any(|(k, v)| {
            let base = k.split('[').next().unwrap_or(k);
            base == key && v.split(',').any(|part| part == value)
        })
    }

    /// True if some feature with base name `key` is present at all.
    pub fn has_key(&self, key: &str) -> bool {
        self.0
            .keys()
            .any(|k| k.split('[').next().unwrap_or(k) == key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// One syntactic word of a sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct Word {
    /// 1-based position within the sentence.
    pub index: usize,
    /// Surface form.
    pub form: String,
    /// Lemma (falls back to the form when the parser emits `_`).
    pub lemma: String,
    /// Universal PoS tag.
    pub upos: Upos,
    /// Morphological features.
    pub feats: Feats,
    /// Index of the governor; 0 marks the syntactic root.
    pub head: usize,
    /// Universal dependency relation (may carry a subtype, e.g. `nsubj:pass`).
    pub deprel: String,
    /// Raw MISC column.
    pub misc: String,
}

impl Word {
    pub fn is_punct(&self) -> bool {
        self.upos == Upos::PUNCT
    }

    pub fn is_content(&self) -> bool {
        self.upos.is_content()
    }

    /// Deprel with any `:`-subtype stripped (`nsubj:pass` -> `nsubj`).
    pub fn deprel_base(&self) -> &str {
        self.deprel.split(':').next().unwrap_or(&self.deprel)
    }

    /// Surface form lowercased, for case-insensitive lookups.
    pub fn form_lower(&self) -> String {
        self.form.to_lowercase()
    }

    pub fn lemma_lower(&self) -> String {
        self.lemma.to_lowercase()
    }

    /// Number of Unicode alphabetic code points in the form.
    pub fn letter_count(&self) -> usize {
        self.form.chars().filter(|c| c.is_alphabetic()).count()
    }
}

/// A sentence: its words in order plus the optional `# sent_id`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Sentence {
    pub words: Vec<Word>,
    pub sent_id: Option<String>,
}

impl Sentence {
    /// The word with head = 0, when there is exactly one.
    pub fn root(&self) -> Option<&Word> {
        let mut roots = self.words.iter().filter(|w| w.head == 0);
        match (roots.next(), roots.next()) {
            (Some(root), None) => Some(root),
            _ => None,
        }
    }

    /// Word by its 1-based index.
    pub fn word(&self, index: usize) -> Option<&Word> {
        // Usually words[i].index == i + 1; fall back to a scan otherwise.
        if index >= 1 {
            if let Some(w) = self.words.get(index - 1) {
                if w.index == index {
                    return Some(w);
                }
            }
        }
        self.words.iter().find(|w| w.index == index)
    }

    /// Direct dependents of the word at `index`, in surface order.
    pub fn dependents(&self, index: usize) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(move |w| w.head == index)
    }

    /// Words excluding punctuation.
    pub fn lexical_words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(|w| !w.is_punct())
    }
}

/// A paragraph is a nonempty run of sentences.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Paragraph {
    pub sentences: Vec<Sentence>,
}

/// A complete document.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    pub doc_id: String,
    pub paragraphs: Vec<Paragraph>,
}

impl Document {
    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.paragraphs.iter().flat_map(|p| p.sentences.iter())
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.sentences().flat_map(|s| s.words.iter())
    }

    pub fn sentence_count(&self) -> usize {
        self.paragraphs.iter().map(|p| p.sentences.len()).sum()
    }

    /// Token count including punctuation.
    pub fn token_count(&self) -> usize {
        self.sentences().map(|s| s.words.len()).sum()
    }

    /// Word count excluding punctuation.
    pub fn word_count(&self) -> usize {
        self.words().filter(|w| !w.is_punct()).count()
    }
}
