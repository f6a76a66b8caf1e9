//! The indicator registry: every feature id, its group, score kind, resource
//! dependencies, and language availability. Selection (language, mode,
//! groups) always yields ids in the fixed catalog order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

macro_rules! fmt_as_str {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str(self.as_str())
        }
    };
}

/// How a feature value is scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreKind {
    /// Raw occurrence count.
    Absolute,
    /// Units per 1000 words.
    Incidence,
    /// One quantity relative to another.
    Ratio,
    Mean,
    /// Population standard deviation (divide by n).
    StdDev,
}

impl ScoreKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScoreKind::Absolute => "absolute",
            ScoreKind::Incidence => "incidence",
            ScoreKind::Ratio => "ratio",
            ScoreKind::Mean => "mean",
            ScoreKind::StdDev => "stddev",
        }
    }
}

/// The eleven feature groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FeatureGroup {
    Descriptive,
    LexicalDiversity,
    Readability,
    WordFrequency,
    VocabularyKnowledge,
    WordInformation,
    Syntax,
    SemanticInformation,
    SemanticOverlap,
    ReferentialCohesion,
    Connectives,
}

impl FeatureGroup {
    pub const ALL: [FeatureGroup; 11] = [
        FeatureGroup::Descriptive,
        FeatureGroup::LexicalDiversity,
        FeatureGroup::Readability,
        FeatureGroup::WordFrequency,
        FeatureGroup::VocabularyKnowledge,
        FeatureGroup::WordInformation,
        FeatureGroup::Syntax,
        FeatureGroup::SemanticInformation,
        FeatureGroup::SemanticOverlap,
        FeatureGroup::ReferentialCohesion,
        FeatureGroup::Connectives,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FeatureGroup::Descriptive => "descriptive",
            FeatureGroup::LexicalDiversity => "lexical_diversity",
            FeatureGroup::Readability => "readability",
            FeatureGroup::WordFrequency => "word_frequency",
            FeatureGroup::VocabularyKnowledge => "vocabulary_knowledge",
            FeatureGroup::WordInformation => "word_information",
            FeatureGroup::Syntax => "syntax",
            FeatureGroup::SemanticInformation => "semantic_information",
            FeatureGroup::SemanticOverlap => "semantic_overlap",
            FeatureGroup::ReferentialCohesion => "referential_cohesion",
            FeatureGroup::Connectives => "connectives",
        }
    }
}

impl fmt::Display for FeatureGroup {
    fmt_as_str!();
}

impl FromStr for FeatureGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FeatureGroup::ALL
            .iter()
            .find(|g| g.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown feature group `{s}`"))
    }
}

/// Which resource bundle entries a feature needs before it can be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResourceKind {
    Stopwords,
    Connectives,
    IrregularVerbs,
    Cefr,
    FreqTable,
    Lexnet,
    Embeddings,
    Syllabifier,
}

impl ResourceKind {
    pub const ALL: [ResourceKind; 8] = [
        ResourceKind::Stopwords,
        ResourceKind::Connectives,
        ResourceKind::IrregularVerbs,
        ResourceKind::Cefr,
        ResourceKind::FreqTable,
        ResourceKind::Lexnet,
        ResourceKind::Embeddings,
        ResourceKind::Syllabifier,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ResourceKind::Stopwords => "stopwords",
            ResourceKind::Connectives => "connectives",
            ResourceKind::IrregularVerbs => "irregular_verbs",
            ResourceKind::Cefr => "cefr",
            ResourceKind::FreqTable => "freq_table",
            ResourceKind::Lexnet => "lexnet",
            ResourceKind::Embeddings => "embeddings",
            ResourceKind::Syllabifier => "syllabifier",
        }
    }
}

impl fmt::Display for ResourceKind {
    fmt_as_str!();
}

/// Feature selection mode: everything, or ratios only (absolute counts
/// excluded, since they track text length rather than text character).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    All,
    Ratios,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::All => "all",
            Mode::Ratios => "ratios",
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Mode::All),
            "ratios" => Ok(Mode::Ratios),
            other => Err(format!("unknown mode `{other}` (expected all|ratios)")),
        }
    }
}

/// One indicator definition.
#[derive(Debug, Clone, Copy)]
pub struct FeatureDef {
    pub id: &'static str,
    pub group: FeatureGroup,
    pub kind: ScoreKind,
    /// Resources the feature cannot be computed without.
    pub deps: &'static [ResourceKind],
    /// `None` means available for every language.
    pub languages: Option<&'static [&'static str]>,
    pub description: &'static str,
}

impl FeatureDef {
    pub fn available_for(&self, lang: &str, resources: &BTreeSet<ResourceKind>) -> bool {
        let lang_ok = match self.languages {
            None => true,
            Some(langs) => langs.contains(&lang),
        };
        lang_ok && self.deps.iter().all(|d| resources.contains(d))
    }
}

macro_rules! feat {
    ($id:literal, $group:ident, $kind:ident, [$($dep:ident),*], $desc:literal) => {
        FeatureDef {
            id: $id,
            group: FeatureGroup::$group,
            kind: ScoreKind::$kind,
            deps: &[$(ResourceKind::$dep),*],
            languages: None,
            description: $desc,
        }
    };
    ($id:literal, $group:ident, $kind:ident, [$($dep:ident),*], langs [$($lang:literal),*], $desc:literal) => {
        FeatureDef {
            id: $id,
            group: FeatureGroup::$group,
            kind: ScoreKind::$kind,
            deps: &[$(ResourceKind::$dep),*],
            languages: Some(&[$($lang),*]),
            description: $desc,
        }
    };
}

/// The full indicator table, in emission order.
pub static CATALOG: &[FeatureDef] = &[
    // ---- descriptive -----------------------------------------------------
    feat!("num_paragraphs", Descriptive, Absolute, [], "Number of paragraphs"),
    feat!("paragraphs_incidence", Descriptive, Incidence, [], "Paragraphs per 1000 words"),
    feat!("num_sentences", Descriptive, Absolute, [], "Number of sentences"),
    feat!("sentences_incidence", Descriptive, Incidence, [], "Sentences per 1000 words"),
    feat!("num_words", Descriptive, Absolute, [], "Number of words (punctuation excluded)"),
    feat!("num_words_with_punct", Descriptive, Absolute, [], "Number of tokens including punctuation"),
    feat!("num_distinct_forms", Descriptive, Absolute, [], "Number of distinct word forms, case-folded"),
    feat!("num_distinct_lemmas", Descriptive, Absolute, [], "Number of distinct lemmas"),
    feat!("num_letters", Descriptive, Absolute, [], "Number of alphabetic characters across words"),
    feat!("num_words_without_stopwords", Descriptive, Absolute, [Stopwords], "Number of non-stopword words"),
    feat!("sentence_length_mean", Descriptive, Mean, [], "Mean sentence length in words"),
    feat!("sentence_length_sd", Descriptive, StdDev, [], "Standard deviation of sentence length in words"),
    feat!("sentence_length_no_stopwords_mean", Descriptive, Mean, [Stopwords], "Mean sentence length in non-stopword words"),
    feat!("sentence_length_no_stopwords_sd", Descriptive, StdDev, [Stopwords], "Standard deviation of sentence length in non-stopword words"),
    feat!("word_length_mean", Descriptive, Mean, [], "Mean word length in letters"),
    feat!("word_length_sd", Descriptive, StdDev, [], "Standard deviation of word length in letters"),
    feat!("word_length_no_stopwords_mean", Descriptive, Mean, [Stopwords], "Mean non-stopword word length in letters"),
    feat!("word_length_no_stopwords_sd", Descriptive, StdDev, [Stopwords], "Standard deviation of non-stopword word length in letters"),
    feat!("lemma_length_mean", Descriptive, Mean, [], "Mean lemma length in letters"),
    feat!("lemma_length_sd", Descriptive, StdDev, [], "Standard deviation of lemma length in letters"),
    feat!("syllables_per_word_mean", Descriptive, Mean, [Syllabifier], "Mean syllables per word"),
    feat!("syllables_per_word_sd", Descriptive, StdDev, [Syllabifier], "Standard deviation of syllables per word"),
    feat!("paragraph_length_mean", Descriptive, Mean, [], "Mean paragraph length in sentences"),
    feat!("paragraph_length_sd", Descriptive, StdDev, [], "Standard deviation of paragraph length in sentences"),
    // ---- lexical diversity ----------------------------------------------
    feat!("lexical_density", LexicalDiversity, Ratio, [], "Content words divided by words"),
    feat!("noun_density", LexicalDiversity, Ratio, [], "Nouns divided by words"),
    feat!("verb_density", LexicalDiversity, Ratio, [], "Verbs divided by words"),
    feat!("adjective_density", LexicalDiversity, Ratio, [], "Adjectives divided by words"),
    feat!("adverb_density", LexicalDiversity, Ratio, [], "Adverbs divided by words"),
    feat!("simple_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over word forms"),
    feat!("content_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over content word forms"),
    feat!("noun_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over noun forms"),
    feat!("verb_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over verb forms"),
    feat!("adjective_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over adjective forms"),
    feat!("adverb_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over adverb forms"),
    feat!("lemma_simple_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over lemmas"),
    feat!("lemma_content_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over content word lemmas"),
    feat!("lemma_noun_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over noun lemmas"),
    feat!("lemma_verb_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over verb lemmas"),
    feat!("lemma_adjective_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over adjective lemmas"),
    feat!("lemma_adverb_ttr", LexicalDiversity, Ratio, [], "Type-token ratio over adverb lemmas"),
    feat!("honore", LexicalDiversity, Ratio, [], "Honore lexical richness statistic"),
    feat!("maas", LexicalDiversity, Ratio, [], "Maas lexical richness statistic"),
    feat!("mtld", LexicalDiversity, Ratio, [], "Measure of textual lexical diversity (bidirectional)"),
    // ---- readability -----------------------------------------------------
    feat!("flesch_reading_ease", Readability, Ratio, [Syllabifier], langs ["en"], "Flesch reading ease"),
    feat!("smog_grade", Readability, Ratio, [Syllabifier], langs ["en"], "SMOG grade"),
    feat!("fernandez_huerta", Readability, Ratio, [Syllabifier], langs ["es"], "Fernandez Huerta readability score"),
    // ---- word frequency --------------------------------------------------
    feat!("min_freq_per_sentence_mean", WordFrequency, Mean, [FreqTable], "Mean over sentences of the minimum content-word log10 frequency"),
    feat!("num_rare_words", WordFrequency, Absolute, [FreqTable], "Number of rare words (log10 frequency below 4)"),
    feat!("rare_words_incidence", WordFrequency, Incidence, [FreqTable], "Rare words per 1000 words"),
    feat!("num_rare_nouns", WordFrequency, Absolute, [FreqTable], "Number of rare nouns"),
    feat!("rare_nouns_incidence", WordFrequency, Incidence, [FreqTable], "Rare nouns per 1000 words"),
    feat!("num_rare_verbs", WordFrequency, Absolute, [FreqTable], "Number of rare verbs"),
    feat!("rare_verbs_incidence", WordFrequency, Incidence, [FreqTable], "Rare verbs per 1000 words"),
    feat!("num_rare_adjectives", WordFrequency, Absolute, [FreqTable], "Number of rare adjectives"),
    feat!("rare_adjectives_incidence", WordFrequency, Incidence, [FreqTable], "Rare adjectives per 1000 words"),
    feat!("num_rare_adverbs", WordFrequency, Absolute, [FreqTable], "Number of rare adverbs"),
    feat!("rare_adverbs_incidence", WordFrequency, Incidence, [FreqTable], "Rare adverbs per 1000 words"),
    feat!("num_distinct_rare_content_words", WordFrequency, Absolute, [FreqTable], "Number of distinct rare content word forms"),
    feat!("distinct_rare_content_words_incidence", WordFrequency, Incidence, [FreqTable], "Distinct rare content word forms per 1000 words"),
    feat!("rare_content_words_per_sentence_mean", WordFrequency, Mean, [FreqTable], "Mean rare content words per sentence"),
    feat!("distinct_rare_content_words_per_sentence_mean", WordFrequency, Mean, [FreqTable], "Mean distinct rare content word forms per sentence"),
    // ---- vocabulary knowledge (CEFR levels) ------------------------------
    feat!("num_a1_words", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of A1-level words"),
    feat!("a1_words_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "A1-level words per 1000 words"),
    feat!("num_a2_words", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of A2-level words"),
    feat!("a2_words_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "A2-level words per 1000 words"),
    feat!("num_b1_words", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of B1-level words"),
    feat!("b1_words_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "B1-level words per 1000 words"),
    feat!("num_b2_words", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of B2-level words"),
    feat!("b2_words_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "B2-level words per 1000 words"),
    feat!("num_c1_words", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of C1-level words"),
    feat!("c1_words_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "C1-level words per 1000 words"),
    feat!("num_content_words_not_in_cefr", VocabularyKnowledge, Absolute, [Cefr], langs ["en"], "Number of content words at no listed CEFR level"),
    feat!("content_words_not_in_cefr_incidence", VocabularyKnowledge, Incidence, [Cefr], langs ["en"], "Content words at no listed CEFR level per 1000 words"),
    // ---- word information (morphology) -----------------------------------
    feat!("num_nouns", WordInformation, Absolute, [], "Number of nouns"),
    feat!("nouns_incidence", WordInformation, Incidence, [], "Nouns per 1000 words"),
    feat!("num_proper_nouns", WordInformation, Absolute, [], "Number of proper nouns"),
    feat!("proper_nouns_incidence", WordInformation, Incidence, [], "Proper nouns per 1000 words"),
    feat!("num_verbs", WordInformation, Absolute, [], "Number of verbs"),
    feat!("verbs_incidence", WordInformation, Incidence, [], "Verbs per 1000 words"),
    feat!("num_auxiliaries", WordInformation, Absolute, [], "Number of auxiliaries"),
    feat!("auxiliaries_incidence", WordInformation, Incidence, [], "Auxiliaries per 1000 words"),
    feat!("num_adjectives", WordInformation, Absolute, [], "Number of adjectives"),
    feat!("adjectives_incidence", WordInformation, Incidence, [], "Adjectives per 1000 words"),
    feat!("num_adverbs", WordInformation, Absolute, [], "Number of adverbs"),
    feat!("adverbs_incidence", WordInformation, Incidence, [], "Adverbs per 1000 words"),
    feat!("num_pronouns", WordInformation, Absolute, [], "Number of pronouns"),
    feat!("pronouns_incidence", WordInformation, Incidence, [], "Pronouns per 1000 words"),
    feat!("num_determiners", WordInformation, Absolute, [], "Number of determiners"),
    feat!("determiners_incidence", WordInformation, Incidence, [], "Determiners per 1000 words"),
    feat!("num_adpositions", WordInformation, Absolute, [], "Number of adpositions"),
    feat!("adpositions_incidence", WordInformation, Incidence, [], "Adpositions per 1000 words"),
    feat!("num_coord_conjunctions", WordInformation, Absolute, [], "Number of coordinating conjunctions"),
    feat!("coord_conjunctions_incidence", WordInformation, Incidence, [], "Coordinating conjunctions per 1000 words"),
    feat!("num_subord_conjunctions", WordInformation, Absolute, [], "Number of subordinating conjunctions"),
    feat!("subord_conjunctions_incidence", WordInformation, Incidence, [], "Subordinating conjunctions per 1000 words"),
    feat!("num_numerals", WordInformation, Absolute, [], "Number of numerals"),
    feat!("numerals_incidence", WordInformation, Incidence, [], "Numerals per 1000 words"),
    feat!("num_particles", WordInformation, Absolute, [], "Number of particles"),
    feat!("particles_incidence", WordInformation, Incidence, [], "Particles per 1000 words"),
    feat!("num_interjections", WordInformation, Absolute, [], "Number of interjections"),
    feat!("interjections_incidence", WordInformation, Incidence, [], "Interjections per 1000 words"),
    feat!("num_symbols", WordInformation, Absolute, [], "Number of symbol tokens"),
    feat!("symbols_incidence", WordInformation, Incidence, [], "Symbol tokens per 1000 words"),
    feat!("num_other_tags", WordInformation, Absolute, [], "Number of tokens tagged X"),
    feat!("other_tags_incidence", WordInformation, Incidence, [], "Tokens tagged X per 1000 words"),
    feat!("num_punctuation", WordInformation, Absolute, [], "Number of punctuation tokens"),
    feat!("punctuation_incidence", WordInformation, Incidence, [], "Punctuation tokens per 1000 tokens"),
    feat!("num_content_words", WordInformation, Absolute, [], "Number of content words"),
    feat!("content_words_incidence", WordInformation, Incidence, [], "Content words per 1000 words"),
    feat!("proper_noun_ratio", WordInformation, Ratio, [], "Proper nouns divided by all nouns"),
    feat!("num_irregular_verbs", WordInformation, Absolute, [IrregularVerbs], "Number of irregular verbs"),
    feat!("irregular_verbs_incidence", WordInformation, Incidence, [IrregularVerbs], "Irregular verbs per 1000 words"),
    feat!("past_tense_incidence", WordInformation, Incidence, [], "Past tense words per 1000 words"),
    feat!("present_tense_incidence", WordInformation, Incidence, [], "Present tense words per 1000 words"),
    feat!("future_tense_incidence", WordInformation, Incidence, [], "Future tense words per 1000 words"),
    feat!("indicative_mood_incidence", WordInformation, Incidence, [], "Indicative mood words per 1000 words"),
    feat!("subjunctive_mood_incidence", WordInformation, Incidence, [], "Subjunctive mood words per 1000 words"),
    feat!("imperative_mood_incidence", WordInformation, Incidence, [], "Imperative mood words per 1000 words"),
    feat!("first_person_incidence", WordInformation, Incidence, [], "First person words per 1000 words"),
    feat!("second_person_incidence", WordInformation, Incidence, [], "Second person words per 1000 words"),
    feat!("third_person_incidence", WordInformation, Incidence, [], "Third person words per 1000 words"),
    feat!("infinitive_incidence", WordInformation, Incidence, [], "Infinitive verb forms per 1000 words"),
    feat!("gerund_incidence", WordInformation, Incidence, [], "Gerund verb forms per 1000 words"),
    feat!("participle_incidence", WordInformation, Incidence, [], "Participle verb forms per 1000 words"),
    // ---- syntax -----------------------------------------------------------
    feat!("left_embeddedness", Syntax, Mean, [], "Mean words before the main verb"),
    feat!("descendants_per_noun_phrase_mean", Syntax, Mean, [], "Mean descendants per noun phrase"),
    feat!("modifiers_per_noun_phrase_mean", Syntax, Mean, [], "Mean modifiers per noun phrase"),
    feat!("noun_phrases_per_sentence_mean", Syntax, Mean, [], "Mean noun phrases per sentence"),
    feat!("verb_phrases_per_sentence_mean", Syntax, Mean, [], "Mean verb phrases per sentence"),
    feat!("propositions_per_sentence_mean", Syntax, Mean, [], "Mean propositions per sentence"),
    feat!("num_propositions", Syntax, Absolute, [], "Number of propositions"),
    feat!("num_subordinate_clauses", Syntax, Absolute, [], "Number of subordinate clauses"),
    feat!("subordinate_clauses_incidence", Syntax, Incidence, [], "Subordinate clauses per 1000 words"),
    feat!("num_passives", Syntax, Absolute, [], "Number of passive constructions"),
    feat!("passives_incidence", Syntax, Incidence, [], "Passive constructions per 1000 words"),
    feat!("num_negations", Syntax, Absolute, [], "Number of negations"),
    feat!("negations_incidence", Syntax, Incidence, [], "Negations per 1000 words"),
    feat!("parse_tree_depth_mean", Syntax, Mean, [], "Mean dependency tree depth per sentence"),
    feat!("parse_tree_depth_sd", Syntax, StdDev, [], "Standard deviation of dependency tree depth per sentence"),
    // ---- semantic information --------------------------------------------
    feat!("polysemy_mean", SemanticInformation, Mean, [Lexnet], "Mean sense count over lexicon words"),
    feat!("noun_hypernym_depth_mean", SemanticInformation, Mean, [Lexnet], "Mean hypernym depth over nouns"),
    feat!("verb_hypernym_depth_mean", SemanticInformation, Mean, [Lexnet], "Mean hypernym depth over verbs"),
    feat!("hypernymy_index", SemanticInformation, Mean, [Lexnet], "Mean hypernym depth over nouns and verbs"),
    // ---- semantic overlap (embedding similarity) --------------------------
    feat!("adjacent_sentence_similarity_mean", SemanticOverlap, Mean, [Embeddings, Stopwords], "Mean cosine similarity of adjacent sentences"),
    feat!("adjacent_sentence_similarity_sd", SemanticOverlap, StdDev, [Embeddings, Stopwords], "Standard deviation of adjacent sentence similarity"),
    feat!("adjacent_paragraph_similarity_mean", SemanticOverlap, Mean, [Embeddings, Stopwords], "Mean cosine similarity of adjacent paragraphs"),
    feat!("adjacent_paragraph_similarity_sd", SemanticOverlap, StdDev, [Embeddings, Stopwords], "Standard deviation of adjacent paragraph similarity"),
    feat!("paragraph_sentence_pairs_similarity_mean", SemanticOverlap, Mean, [Embeddings, Stopwords], "Mean cosine similarity over sentence pairs within paragraphs"),
    feat!("paragraph_sentence_pairs_similarity_sd", SemanticOverlap, StdDev, [Embeddings, Stopwords], "Standard deviation of sentence pair similarity within paragraphs"),
    // ---- referential cohesion ---------------------------------------------
    feat!("noun_overlap_adjacent", ReferentialCohesion, Mean, [], "Share of adjacent sentence pairs with a common noun lemma"),
    feat!("noun_overlap_all", ReferentialCohesion, Mean, [], "Share of all sentence pairs with a common noun lemma"),
    feat!("argument_overlap_adjacent", ReferentialCohesion, Mean, [], "Share of adjacent sentence pairs with a common noun lemma or personal pronoun"),
    feat!("argument_overlap_all", ReferentialCohesion, Mean, [], "Share of all sentence pairs with a common noun lemma or personal pronoun"),
    feat!("stem_overlap_adjacent", ReferentialCohesion, Mean, [], "Share of adjacent sentence pairs where a noun lemma matches a content lemma"),
    feat!("stem_overlap_all", ReferentialCohesion, Mean, [], "Share of all sentence pairs where a noun lemma matches a content lemma"),
    feat!("content_overlap_adjacent_mean", ReferentialCohesion, Mean, [], "Mean proportional content word overlap of adjacent sentence pairs"),
    feat!("content_overlap_adjacent_sd", ReferentialCohesion, StdDev, [], "Standard deviation of proportional content word overlap of adjacent sentence pairs"),
    feat!("content_overlap_all_mean", ReferentialCohesion, Mean, [], "Mean proportional content word overlap of all sentence pairs"),
    feat!("content_overlap_all_sd", ReferentialCohesion, StdDev, [], "Standard deviation of proportional content word overlap of all sentence pairs"),
    // ---- connectives -------------------------------------------------------
    feat!("num_causal_connectives", Connectives, Absolute, [Connectives], "Number of causal connectives"),
    feat!("causal_connectives_incidence", Connectives, Incidence, [Connectives], "Causal connectives per 1000 words"),
    feat!("num_logical_connectives", Connectives, Absolute, [Connectives], "Number of logical connectives"),
    feat!("logical_connectives_incidence", Connectives, Incidence, [Connectives], "Logical connectives per 1000 words"),
    feat!("num_adversative_connectives", Connectives, Absolute, [Connectives], "Number of adversative connectives"),
    feat!("adversative_connectives_incidence", Connectives, Incidence, [Connectives], "Adversative connectives per 1000 words"),
    feat!("num_temporal_connectives", Connectives, Absolute, [Connectives], "Number of temporal connectives"),
    feat!("temporal_connectives_incidence", Connectives, Incidence, [Connectives], "Temporal connectives per 1000 words"),
    feat!("num_conditional_connectives", Connectives, Absolute, [Connectives], "Number of conditional connectives"),
    feat!("conditional_connectives_incidence", Connectives, Incidence, [Connectives], "Conditional connectives per 1000 words"),
    feat!("num_all_connectives", Connectives, Absolute, [Connectives], "Number of connectives of any category"),
    feat!("all_connectives_incidence", Connectives, Incidence, [Connectives], "Connectives of any category per 1000 words"),
];

/// Read-only view over the indicator table.
#[derive(Debug, Clone, Copy)]
pub struct FeatureCatalog {
    defs: &'static [FeatureDef],
}

impl FeatureCatalog {
    pub fn standard() -> Self {
        FeatureCatalog { defs: CATALOG }
    }

    pub fn defs(&self) -> &'static [FeatureDef] {
        self.defs
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&'static FeatureDef> {
        self.defs.iter().find(|d| d.id == id)
    }

    /// Ids computable for a language given the resources actually present,
    /// in catalog order.
    pub fn available_ids(
        &self,
        lang: &str,
        resources: &BTreeSet<ResourceKind>,
    ) -> Vec<&'static str> {
        self.defs
            .iter()
            .filter(|d| d.available_for(lang, resources))
            .map(|d| d.id)
            .collect()
    }

    /// Narrow a set of available ids by mode and optional group subset,
    /// preserving catalog order.
    pub fn select(
        &self,
        available: &BTreeSet<String>,
        mode: Mode,
        groups: Option<&BTreeSet<FeatureGroup>>,
    ) -> Vec<&'static str> {
        self.defs
            .iter()
            .filter(|d| available.contains(d.id))
            .filter(|d| mode == Mode::All || d.kind != ScoreKind::Absolute)
            .filter(|d| groups.is_none_or(|gs| gs.contains(&d.group)))
            .map(|d| d.id)
            .collect()
    }

    /// Ids of absolute-kind features, the set excluded in ratios mode.
    pub fn absolute_ids(&self) -> BTreeSet<&'static str> {
        self.defs
            .iter()
            .filter(|d| d.kind == ScoreKind::Absolute)
            .map(|d| d.id)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut seen = BTreeSet::new();
        for def in CATALOG {
            assert!(seen.insert(def.id), "duplicate id {}", def.id);
        }
    }

    #[test]
    fn every_group_is_populated() {
        for group in FeatureGroup::ALL {
            assert!(
                CATALOG.iter().any(|d| d.group == group),
                "no features in group {group}"
            );
        }
    }

    #[test]
    fn ratios_mode_excludes_exactly_absolutes() {
        let catalog = FeatureCatalog::standard();
        let all_resources: BTreeSet<ResourceKind> = ResourceKind::ALL.into_iter().collect();
        let available: BTreeSet<String> = catalog
            .available_ids("en", &all_resources)
            .into_iter()
            .map(String::from)
            .collect();
        let all_ids = catalog.select(&available, Mode::All, None);
        let ratio_ids = catalog.select(&available, Mode::Ratios, None);
        let dropped: BTreeSet<&str> = all_ids
            .iter()
            .filter(|id| !ratio_ids.contains(*id))
            .copied()
            .collect();
        let absolutes: BTreeSet<&str> = catalog
            .absolute_ids()
            .into_iter()
            .filter(|id| available.contains(*id))
            .collect();
        assert_eq!(dropped, absolutes);
    }

    #[test]
    fn language_availability_rules() {
        let catalog = FeatureCatalog::standard();
        let all_resources: BTreeSet<ResourceKind> = ResourceKind::ALL.into_iter().collect();

        let en = catalog.available_ids("en", &all_resources);
        let es = catalog.available_ids("es", &all_resources);
        let eu = catalog.available_ids("eu", &all_resources);

        assert!(en.contains(&"flesch_reading_ease"));
        assert!(en.contains(&"num_a1_words"));
        assert!(!es.contains(&"flesch_reading_ease"));
        assert!(es.contains(&"fernandez_huerta"));
        assert!(!es.contains(&"num_a1_words"));
        assert!(!eu.iter().any(|id| {
            catalog.get(id).unwrap().group == FeatureGroup::Readability
        }));
        assert!(!eu.contains(&"num_a1_words"));
    }

    #[test]
    fn missing_syllabifier_drops_readability_and_syllable_lengths() {
        let catalog = FeatureCatalog::standard();
        let mut resources: BTreeSet<ResourceKind> = ResourceKind::ALL.into_iter().collect();
        resources.remove(&ResourceKind::Syllabifier);
        let en = catalog.available_ids("en", &resources);
        assert!(!en.contains(&"flesch_reading_ease"));
        assert!(!en.contains(&"smog_grade"));
        assert!(!en.contains(&"syllables_per_word_mean"));
        assert!(!en.contains(&"syllables_per_word_sd"));
        assert!(en.contains(&"sentence_length_mean"));
    }
}
