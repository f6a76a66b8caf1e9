//! Per-language resource bundles: stopwords, connective inventories,
//! irregular verbs, CEFR vocabulary, word frequencies, a lexical-semantic
//! table, word embeddings, and a syllabifier.
//!
//! A bundle is described by a manifest (`key=value` lines). Every resource
//! is optional; the profile's `available_features` set shrinks to the
//! indicator ids whose dependencies are actually present.

mod connect;
mod syllable;

pub use connect::{ConnectiveCategory, ConnectiveMatch, ConnectiveSet};
pub use syllable::Syllabifier;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::catalog::{FeatureCatalog, ResourceKind};
use crate::model::{Sentence, Upos};

/// Words with log10 frequency per billion below this value are rare.
pub const RARE_THRESHOLD: f64 = 4.0;

#[derive(Debug, Error)]
pub enum ResourceError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Malformed {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}:{line}: embedding has {found} dimensions, expected {expected}")]
    DimensionMismatch {
        path: String,
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("checksum mismatch for `{path}`")]
    ChecksumMismatch { path: String },
    #[error("resource `{0}` is not present in this profile")]
    ResourceAbsent(ResourceKind),
    #[error("`{0}` contains no letters")]
    NoLetters(String),
}

/// CEFR proficiency levels, easiest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CefrLevel {
    A1,
    A2,
    B1,
    B2,
    C1,
}

impl CefrLevel {
    pub const ALL: [CefrLevel; 5] = [
        CefrLevel::A1,
        CefrLevel::A2,
        CefrLevel::B1,
        CefrLevel::B2,
        CefrLevel::C1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CefrLevel::A1 => "A1",
            CefrLevel::A2 => "A2",
            CefrLevel::B1 => "B1",
            CefrLevel::B2 => "B2",
            CefrLevel::C1 => "C1",
        }
    }
}

impl fmt::Display for CefrLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CefrLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CefrLevel::ALL
            .iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown CEFR level `{s}`"))
    }
}

/// One lexical-semantic entry: WordNet-style sense count and the precomputed
/// hypernym depth of the first sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexEntry {
    pub sense_count: u32,
    pub hypernym_depth: u32,
}

#[derive(Debug, Clone)]
struct Embeddings {
    dim: usize,
    vectors: HashMap<String, Vec<f32>>,
}

/// Manifest keys, their default format tags, and the resource they feed.
const MANIFEST_KEYS: &[(&str, &str, ResourceKind)] = &[
    ("stopwords", "lines", ResourceKind::Stopwords),
    ("connectives", "tsv", ResourceKind::Connectives),
    ("irregular_verbs", "lines", ResourceKind::IrregularVerbs),
    ("cefr", "tsv", ResourceKind::Cefr),
    ("freq_table", "tsv", ResourceKind::FreqTable),
    ("lexnet", "tsv", ResourceKind::Lexnet),
    ("embeddings", "vec", ResourceKind::Embeddings),
    ("syllabifier_rules", "rules", ResourceKind::Syllabifier),
    ("syllabifier_exceptions", "tsv", ResourceKind::Syllabifier),
];

#[derive(Debug, Clone)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub format: String,
    pub sha256: Option<String>,
}

/// Parsed resource manifest: which files make up a language bundle.
#[derive(Debug, Clone, Default)]
pub struct ResourceManifest {
    entries: BTreeMap<String, ManifestEntry>,
}

impl ResourceManifest {
    /// Parse a manifest file. Relative resource paths resolve against the
    /// manifest's own directory.
    pub fn from_file(path: &Path) -> Result<Self, ResourceError> {
        let text = read(path)?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::parse(&text, base, &path.display().to_string())
    }

    pub fn parse(text: &str, base: &Path, origin: &str) -> Result<Self, ResourceError> {
        let mut entries: BTreeMap<String, ManifestEntry> = BTreeMap::new();
        let mut formats: Vec<(String, String, usize)> = Vec::new();
        let mut checksums: Vec<(String, String)> = Vec::new();

        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |message: String| ResourceError::Malformed {
                path: origin.to_string(),
                line: line_no + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| malformed("expected key=value".into()))?;
            let key = key.trim();
            let value = value.trim();

            if let Some(base_key) = key.strip_suffix(".format") {
                formats.push((base_key.to_string(), value.to_string(), line_no + 1));
            } else if let Some(base_key) = key.strip_suffix(".sha256") {
                checksums.push((base_key.to_string(), value.to_lowercase()));
            } else {
                let Some((_, default_format, _)) =
                    MANIFEST_KEYS.iter().find(|(k, _, _)| *k == key)
                else {
                    return Err(malformed(format!("unknown manifest key `{key}`")));
                };
                entries.insert(
                    key.to_string(),
                    ManifestEntry {
                        path: base.join(value),
                        format: default_format.to_string(),
                        sha256: None,
                    },
                );
            }
        }

        for (key, tag, line_no) in formats {
            let Some((_, default_format, _)) =
                MANIFEST_KEYS.iter().find(|(k, _, _)| *k == key.as_str())
            else {
                return Err(ResourceError::Malformed {
                    path: origin.to_string(),
                    line: line_no,
                    message: format!("format tag for unknown key `{key}`"),
                });
            };
            if tag != *default_format {
                return Err(ResourceError::Malformed {
                    path: origin.to_string(),
                    line: line_no,
                    message: format!(
                        "unsupported format `{tag}` for `{key}` (expected `{default_format}`)"
                    ),
                });
            }
            if let Some(entry) = entries.get_mut(&key) {
                entry.format = tag;
            }
        }
        for (key, sum) in checksums {
            if let Some(entry) = entries.get_mut(&key) {
                entry.sha256 = Some(sum);
            }
        }

        Ok(ResourceManifest { entries })
    }

    pub fn entry(&self, key: &str) -> Option<&ManifestEntry> {
        self.entries.get(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|k| k.as_str())
    }
}

/// An immutable language bundle plus the indicator ids computable with it.
#[derive(Debug, Clone)]
pub struct LanguageProfile {
    pub lang: String,
    stopwords: Option<HashSet<String>>,
    connectives: Option<ConnectiveSet>,
    irregular_verbs: Option<HashSet<String>>,
    cefr: Option<HashMap<String, CefrLevel>>,
    freq_table: Option<HashMap<String, f64>>,
    lexnet: Option<HashMap<(String, Upos), LexEntry>>,
    embeddings: Option<Embeddings>,
    syllabifier: Option<Syllabifier>,
    pub available_features: BTreeSet<String>,
}

impl LanguageProfile {
    /// Load a profile from a parsed manifest.
    pub fn load(manifest: &ResourceManifest, lang: &str) -> Result<Self, ResourceError> {
        let stopwords = manifest
            .entry("stopwords")
            .map(|e| load_lines(e).map(|lines| lines.into_iter().collect::<HashSet<_>>()))
            .transpose()?;
        let connectives = manifest
            .entry("connectives")
            .map(load_connectives)
            .transpose()?;
        let irregular_verbs = manifest
            .entry("irregular_verbs")
            .map(|e| load_lines(e).map(|lines| lines.into_iter().collect::<HashSet<_>>()))
            .transpose()?;
        let cefr = manifest.entry("cefr").map(load_cefr).transpose()?;
        let freq_table = manifest.entry("freq_table").map(load_freq).transpose()?;
        let lexnet = manifest.entry("lexnet").map(load_lexnet).transpose()?;
        let embeddings = manifest
            .entry("embeddings")
            .map(load_embeddings)
            .transpose()?;
        let syllabifier = match manifest.entry("syllabifier_rules") {
            Some(rules_entry) => {
                let exceptions = manifest
                    .entry("syllabifier_exceptions")
                    .map(load_syllable_exceptions)
                    .transpose()?
                    .unwrap_or_default();
                let rules = checked_read(rules_entry)?;
                Some(Syllabifier::from_rules(
                    &rules,
                    exceptions,
                    &rules_entry.path.display().to_string(),
                )?)
            }
            None => None,
        };

        let mut profile = LanguageProfile {
            lang: lang.to_string(),
            stopwords,
            connectives,
            irregular_verbs,
            cefr,
            freq_table,
            lexnet,
            embeddings,
            syllabifier,
            available_features: BTreeSet::new(),
        };
        profile.available_features = FeatureCatalog::standard()
            .available_ids(lang, &profile.present_resources())
            .into_iter()
            .map(String::from)
            .collect();
        Ok(profile)
    }

    /// Load a profile straight from a manifest file path.
    pub fn load_from_file(path: &Path, lang: &str) -> Result<Self, ResourceError> {
        let manifest = ResourceManifest::from_file(path)?;
        Self::load(&manifest, lang)
    }

    /// The resource kinds actually present in this bundle.
    pub fn present_resources(&self) -> BTreeSet<ResourceKind> {
        let mut present = BTreeSet::new();
        if self.stopwords.is_some() {
            present.insert(ResourceKind::Stopwords);
        }
        if self.connectives.is_some() {
            present.insert(ResourceKind::Connectives);
        }
        if self.irregular_verbs.is_some() {
            present.insert(ResourceKind::IrregularVerbs);
        }
        if self.cefr.is_some() {
            present.insert(ResourceKind::Cefr);
        }
        if self.freq_table.is_some() {
            present.insert(ResourceKind::FreqTable);
        }
        if self.lexnet.is_some() {
            present.insert(ResourceKind::Lexnet);
        }
        if self.embeddings.is_some() {
            present.insert(ResourceKind::Embeddings);
        }
        if self.syllabifier.is_some() {
            present.insert(ResourceKind::Syllabifier);
        }
        present
    }

    /// Log10 frequency per billion words, case-folded; `None` when the form
    /// is out of the table (or the table is absent).
    pub fn word_log_frequency(&self, form: &str) -> Option<f64> {
        self.freq_table.as_ref()?.get(&form.to_lowercase()).copied()
    }

    /// A word is rare when its log frequency is strictly below
    /// [`RARE_THRESHOLD`]; out-of-table words count as rare.
    pub fn is_rare(&self, form: &str) -> bool {
        match self.word_log_frequency(form) {
            Some(freq) => freq < RARE_THRESHOLD,
            None => true,
        }
    }

    /// Syllable count, exceptions dictionary first. Errors when the profile
    /// has no syllabifier or the form has no letters.
    pub fn syllable_count(&self, form: &str) -> Result<u32, ResourceError> {
        let syllabifier = self
            .syllabifier
            .as_ref()
            .ok_or(ResourceError::ResourceAbsent(ResourceKind::Syllabifier))?;
        syllabifier.count(form)
    }

    /// WordNet-style sense count. Callers must pass a lexicon PoS
    /// (NOUN, VERB, ADJ or ADV).
    pub fn polysemy(&self, lemma: &str, upos: Upos) -> Option<u32> {
        debug_assert!(
            matches!(upos, Upos::NOUN | Upos::VERB | Upos::ADJ | Upos::ADV),
            "polysemy looked up for non-lexicon PoS {upos}"
        );
        self.lexnet
            .as_ref()?
            .get(&(lemma.to_lowercase(), upos))
            .map(|e| e.sense_count)
    }

    /// Precomputed hypernym depth of the first sense. Callers must pass
    /// NOUN or VERB.
    pub fn hypernym_depth(&self, lemma: &str, upos: Upos) -> Option<u32> {
        debug_assert!(
            matches!(upos, Upos::NOUN | Upos::VERB),
            "hypernym depth looked up for PoS {upos}"
        );
        self.lexnet
            .as_ref()?
            .get(&(lemma.to_lowercase(), upos))
            .map(|e| e.hypernym_depth)
    }

    /// Embedding lookup: exact form first, then case-folded.
    pub fn embedding(&self, form: &str) -> Option<&[f32]> {
        let embeddings = self.embeddings.as_ref()?;
        if let Some(v) = embeddings.vectors.get(form) {
            return Some(v);
        }
        embeddings.vectors.get(&form.to_lowercase()).map(|v| v.as_slice())
    }

    pub fn embedding_dim(&self) -> Option<usize> {
        self.embeddings.as_ref().map(|e| e.dim)
    }

    /// CEFR level of a form (case-folded). Errors when the bundle has no
    /// CEFR vocabulary at all.
    pub fn cefr_level(&self, form: &str) -> Result<Option<CefrLevel>, ResourceError> {
        let cefr = self
            .cefr
            .as_ref()
            .ok_or(ResourceError::ResourceAbsent(ResourceKind::Cefr))?;
        Ok(cefr.get(&form.to_lowercase()).copied())
    }

    /// Greedy longest-match connective scan; empty when the inventory is
    /// absent.
    pub fn match_connectives(&self, sentence: &Sentence) -> Vec<ConnectiveMatch> {
        match &self.connectives {
            Some(set) => set.match_sentence(sentence),
            None => Vec::new(),
        }
    }

    pub fn is_stopword(&self, form: &str) -> bool {
        self.stopwords
            .as_ref()
            .is_some_and(|s| s.contains(&form.to_lowercase()))
    }

    pub fn is_irregular_verb(&self, lemma: &str) -> bool {
        self.irregular_verbs
            .as_ref()
            .is_some_and(|s| s.contains(&lemma.to_lowercase()))
    }

    /// Build a profile programmatically instead of from files.
    pub fn builder(lang: &str) -> ProfileBuilder {
        ProfileBuilder {
            profile: LanguageProfile {
                lang: lang.to_string(),
                stopwords: None,
                connectives: None,
                irregular_verbs: None,
                cefr: None,
                freq_table: None,
                lexnet: None,
                embeddings: None,
                syllabifier: None,
                available_features: BTreeSet::new(),
            },
        }
    }
}

/// In-memory profile construction, mainly for embedding the engine in other
/// programs and for synthetic-data tests.
#[derive(Debug)]
pub struct ProfileBuilder {
    profile: LanguageProfile,
}

impl ProfileBuilder {
    pub fn stopwords<I: IntoIterator<Item = S>, S: Into<String>>(mut self, forms: I) -> Self {
        self.profile.stopwords =
            Some(forms.into_iter().map(|f| f.into().to_lowercase()).collect());
        self
    }

    pub fn connectives(mut self, set: ConnectiveSet) -> Self {
        self.profile.connectives = Some(set);
        self
    }

    pub fn irregular_verbs<I: IntoIterator<Item = S>, S: Into<String>>(
        mut self,
        lemmas: I,
    ) -> Self {
        self.profile.irregular_verbs =
            Some(lemmas.into_iter().map(|f| f.into().to_lowercase()).collect());
        self
    }

    pub fn cefr<I: IntoIterator<Item = (S, CefrLevel)>, S: Into<String>>(
        mut self,
        entries: I,
    ) -> Self {
        self.profile.cefr = Some(
            entries
                .into_iter()
                .map(|(f, l)| (f.into().to_lowercase(), l))
                .collect(),
        );
        self
    }

    pub fn freq_table<I: IntoIterator<Item = (S, f64)>, S: Into<String>>(
        mut self,
        entries: I,
    ) -> Self {
        self.profile.freq_table = Some(
            entries
                .into_iter()
                .map(|(f, v)| (f.into().to_lowercase(), v))
                .collect(),
        );
        self
    }

    pub fn lexnet<I: IntoIterator<Item = (S, Upos, u32, u32)>, S: Into<String>>(
        mut self,
        entries: I,
    ) -> Self {
        self.profile.lexnet = Some(
            entries
                .into_iter()
                .map(|(lemma, upos, senses, depth)| {
                    (
                        (lemma.into().to_lowercase(), upos),
                        LexEntry {
                            sense_count: senses.max(1),
                            hypernym_depth: depth,
                        },
                    )
                })
                .collect(),
        );
        self
    }

    /// All vectors must share one dimension; mismatches are rejected at
    /// build time.
    pub fn embeddings<I: IntoIterator<Item = (S, Vec<f32>)>, S: Into<String>>(
        mut self,
        entries: I,
    ) -> Self {
        let vectors: HashMap<String, Vec<f32>> =
            entries.into_iter().map(|(f, v)| (f.into(), v)).collect();
        let dim = vectors.values().next().map(|v| v.len()).unwrap_or(0);
        self.profile.embeddings = Some(Embeddings { dim, vectors });
        self
    }

    pub fn syllabifier(mut self, syllabifier: Syllabifier) -> Self {
        self.profile.syllabifier = Some(syllabifier);
        self
    }

    pub fn build(mut self) -> Result<LanguageProfile, ResourceError> {
        if let Some(embeddings) = &self.profile.embeddings {
            if embeddings.dim == 0 && !embeddings.vectors.is_empty() {
                return Err(ResourceError::Malformed {
                    path: "<builder>".into(),
                    line: 0,
                    message: "embedding dimension must be >= 1".into(),
                });
            }
            if let Some((form, v)) = embeddings
                .vectors
                .iter()
                .find(|(_, v)| v.len() != embeddings.dim)
            {
                return Err(ResourceError::DimensionMismatch {
                    path: format!("<builder: {form}>"),
                    line: 0,
                    expected: embeddings.dim,
                    found: v.len(),
                });
            }
        }
        self.profile.available_features = FeatureCatalog::standard()
            .available_ids(&self.profile.lang, &self.profile.present_resources())
            .into_iter()
            .map(String::from)
            .collect();
        Ok(self.profile)
    }
}

fn read(path: &Path) -> Result<String, ResourceError> {
    fs::read_to_string(path).map_err(|source| ResourceError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Read a resource file, verifying its checksum when the manifest pins one.
fn checked_read(entry: &ManifestEntry) -> Result<String, ResourceError> {
    let text = read(&entry.path)?;
    if let Some(expected) = &entry.sha256 {
        let digest = hex_digest(text.as_bytes());
        if digest != *expected {
            return Err(ResourceError::ChecksumMismatch {
                path: entry.path.display().to_string(),
            });
        }
    }
    Ok(text)
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Non-empty, non-comment lines, lowercased.
fn load_lines(entry: &ManifestEntry) -> Result<Vec<String>, ResourceError> {
    let text = checked_read(entry)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_lowercase())
        .collect())
}

fn tsv_rows(entry: &ManifestEntry) -> Result<Vec<(usize, Vec<String>)>, ResourceError> {
    let text = checked_read(entry)?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i, l.split('\t').map(|c| c.trim().to_string()).collect()))
        .collect())
}

fn columns<'a>(
    entry: &ManifestEntry,
    line: usize,
    row: &'a [String],
    expected: usize,
) -> Result<&'a [String], ResourceError> {
    if row.len() != expected {
        return Err(ResourceError::Malformed {
            path: entry.path.display().to_string(),
            line,
            message: format!("expected {expected} tab-separated columns, found {}", row.len()),
        });
    }
    Ok(row)
}

fn load_connectives(entry: &ManifestEntry) -> Result<ConnectiveSet, ResourceError> {
    let mut set = ConnectiveSet::new();
    for (line, row) in tsv_rows(entry)? {
        let cols = columns(entry, line, &row, 2)?;
        let category =
            cols[0]
                .parse::<ConnectiveCategory>()
                .map_err(|message| ResourceError::Malformed {
                    path: entry.path.display().to_string(),
                    line,
                    message,
                })?;
        set.insert(category, &cols[1]);
    }
    Ok(set)
}

fn load_cefr(entry: &ManifestEntry) -> Result<HashMap<String, CefrLevel>, ResourceError> {
    let mut map: HashMap<String, CefrLevel> = HashMap::new();
    for (line, row) in tsv_rows(entry)? {
        let cols = columns(entry, line, &row, 3)?;
        cols[1]
            .parse::<Upos>()
            .map_err(|_| ResourceError::Malformed {
                path: entry.path.display().to_string(),
                line,
                message: format!("unknown UPOS `{}`", cols[1]),
            })?;
        let level = cols[2]
            .parse::<CefrLevel>()
            .map_err(|message| ResourceError::Malformed {
                path: entry.path.display().to_string(),
                line,
                message,
            })?;
        let form = cols[0].to_lowercase();
        // A form listed under several PoS keeps its easiest level.
        map.entry(form)
            .and_modify(|existing| {
                if level < *existing {
                    *existing = level;
                }
            })
            .or_insert(level);
    }
    Ok(map)
}

fn load_freq(entry: &ManifestEntry) -> Result<HashMap<String, f64>, ResourceError> {
    let mut map = HashMap::new();
    for (line, row) in tsv_rows(entry)? {
        let cols = columns(entry, line, &row, 2)?;
        let freq: f64 = cols[1].parse().map_err(|_| ResourceError::Malformed {
            path: entry.path.display().to_string(),
            line,
            message: format!("`{}` is not a number", cols[1]),
        })?;
        map.insert(cols[0].to_lowercase(), freq);
    }
    Ok(map)
}

fn load_lexnet(
    entry: &ManifestEntry,
) -> Result<HashMap<(String, Upos), LexEntry>, ResourceError> {
    let mut map = HashMap::new();
    for (line, row) in tsv_rows(entry)? {
        let cols = columns(entry, line, &row, 4)?;
        let malformed = |message: String| ResourceError::Malformed {
            path: entry.path.display().to_string(),
            line,
            message,
        };
        let upos = cols[1]
            .parse::<Upos>()
            .map_err(|_| malformed(format!("unknown UPOS `{}`", cols[1])))?;
        let sense_count: u32 = cols[2]
            .parse()
            .map_err(|_| malformed(format!("`{}` is not an integer", cols[2])))?;
        if sense_count < 1 {
            return Err(malformed("sense count must be >= 1".into()));
        }
        let hypernym_depth: u32 = cols[3]
            .parse()
            .map_err(|_| malformed(format!("`{}` is not an integer", cols[3])))?;
        map.insert(
            (cols[0].to_lowercase(), upos),
            LexEntry {
                sense_count,
                hypernym_depth,
            },
        );
    }
    Ok(map)
}

fn load_embeddings(entry: &ManifestEntry) -> Result<Embeddings, ResourceError> {
    let text = checked_read(entry)?;
    let path = entry.path.display().to_string();
    let mut lines = text.lines().enumerate();

    let (_, header) = lines.next().ok_or_else(|| ResourceError::Malformed {
        path: path.clone(),
        line: 1,
        message: "empty embeddings file".into(),
    })?;
    let header_parts: Vec<&str> = header.split_whitespace().collect();
    let (vocab_size, dim) = match header_parts.as_slice() {
        [v, d] => (
            v.parse::<usize>().ok(),
            d.parse::<usize>().ok(),
        ),
        _ => (None, None),
    };
    let (Some(vocab_size), Some(dim)) = (vocab_size, dim) else {
        return Err(ResourceError::Malformed {
            path,
            line: 1,
            message: "header must be `vocab_size dim`".into(),
        });
    };
    if dim < 1 {
        return Err(ResourceError::Malformed {
            path,
            line: 1,
            message: "embedding dimension must be >= 1".into(),
        });
    }

    let mut vectors = HashMap::with_capacity(vocab_size);
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let form = parts.next().unwrap_or_default().to_string();
        let values: Result<Vec<f32>, _> = parts.map(str::parse::<f32>).collect();
        let values = values.map_err(|_| ResourceError::Malformed {
            path: path.clone(),
            line: idx + 1,
            message: "non-numeric vector component".into(),
        })?;
        if values.len() != dim {
            return Err(ResourceError::DimensionMismatch {
                path: path.clone(),
                line: idx + 1,
                expected: dim,
                found: values.len(),
            });
        }
        vectors.insert(form, values);
    }

    if vectors.len() != vocab_size {
        return Err(ResourceError::Malformed {
            path,
            line: 1,
            message: format!(
                "header promises {vocab_size} vectors, file holds {}",
                vectors.len()
            ),
        });
    }

    Ok(Embeddings { dim, vectors })
}

fn load_syllable_exceptions(
    entry: &ManifestEntry,
) -> Result<HashMap<String, u32>, ResourceError> {
    let mut map = HashMap::new();
    for (line, row) in tsv_rows(entry)? {
        let cols = columns(entry, line, &row, 2)?;
        let count: u32 = cols[1].parse().map_err(|_| ResourceError::Malformed {
            path: entry.path.display().to_string(),
            line,
            message: format!("`{}` is not an integer", cols[1]),
        })?;
        map.insert(cols[0].to_lowercase(), count);
    }
    Ok(map)
}

#[cfg(test)]
mod tests;
