use std::fs;
use std::path::Path;

use tempfile::TempDir;

use super::*;
use crate::catalog::FeatureGroup;

/// Write a complete little bundle into `dir` and return the manifest path.
fn write_bundle(dir: &Path, include: &[&str]) -> std::path::PathBuf {
    let mut manifest = String::new();
    let mut add = |key: &str, file: &str, content: &str| {
        if include.contains(&key) {
            fs::write(dir.join(file), content).unwrap();
            manifest.push_str(&format!("{key}={file}\n"));
        }
    };

    add("stopwords", "stopwords.txt", "the\na\nof\nto\n");
    add(
        "connectives",
        "connectives.tsv",
        "causal\tbecause\nlogical\tand\nadversative\ton the other hand\ntemporal\tthen\nconditional\tif\n",
    );
    add("irregular_verbs", "irregular.txt", "be\ngo\ntake\n");
    add(
        "cefr",
        "cefr.tsv",
        "cat\tNOUN\tA1\nrun\tVERB\tA1\nanalysis\tNOUN\tB2\nrun\tNOUN\tB1\n",
    );
    add(
        "freq_table",
        "freq.tsv",
        "the\t8.8\ncat\t5.1\nrare\t3.0\nboundary\t4.0\n",
    );
    add(
        "lexnet",
        "lexnet.tsv",
        "cat\tNOUN\t4\t9\nrun\tVERB\t12\t2\nrun\tNOUN\t6\t5\nentity\tNOUN\t1\t0\n",
    );
    add(
        "embeddings",
        "vectors.vec",
        "3 2\ncat 1.0 0.0\ndog 0.0 1.0\nThe 0.5 0.5\n",
    );
    add(
        "syllabifier_rules",
        "syllables.rules",
        "vowels=aeiouy\nmerge_default=true\nfinal_silent_e=true\n",
    );
    add("syllabifier_exceptions", "syllables.tsv", "colonel\t2\n");

    let path = dir.join("manifest.txt");
    fs::write(&path, manifest).unwrap();
    path
}

const FULL: &[&str] = &[
    "stopwords",
    "connectives",
    "irregular_verbs",
    "cefr",
    "freq_table",
    "lexnet",
    "embeddings",
    "syllabifier_rules",
    "syllabifier_exceptions",
];

#[test]
fn full_bundle_enables_cefr_features() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert!(profile.available_features.contains("num_a1_words"));
    assert!(profile.available_features.contains("flesch_reading_ease"));
}

#[test]
fn missing_cefr_drops_vocabulary_group() {
    let dir = TempDir::new().unwrap();
    let keys: Vec<&str> = FULL.iter().copied().filter(|k| *k != "cefr").collect();
    let manifest = write_bundle(dir.path(), &keys);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    let catalog = FeatureCatalog::standard();
    for def in catalog.defs() {
        if def.group == FeatureGroup::VocabularyKnowledge {
            assert!(
                !profile.available_features.contains(def.id),
                "{} should be unavailable without CEFR",
                def.id
            );
        }
    }
    assert!(matches!(
        profile.cefr_level("cat"),
        Err(ResourceError::ResourceAbsent(ResourceKind::Cefr))
    ));
}

#[test]
fn missing_syllabifier_drops_readability_and_syllable_lengths() {
    let dir = TempDir::new().unwrap();
    let keys: Vec<&str> = FULL
        .iter()
        .copied()
        .filter(|k| !k.starts_with("syllabifier"))
        .collect();
    let manifest = write_bundle(dir.path(), &keys);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    for id in [
        "flesch_reading_ease",
        "smog_grade",
        "syllables_per_word_mean",
        "syllables_per_word_sd",
    ] {
        assert!(!profile.available_features.contains(id), "{id}");
    }
    assert!(matches!(
        profile.syllable_count("cat"),
        Err(ResourceError::ResourceAbsent(ResourceKind::Syllabifier))
    ));
}

#[test]
fn frequency_lookup_is_case_folded() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert_eq!(profile.word_log_frequency("The"), Some(8.8));
    assert_eq!(profile.word_log_frequency("the"), Some(8.8));
    assert_eq!(profile.word_log_frequency("missing"), None);
}

#[test]
fn rare_threshold_is_strict() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert!(profile.is_rare("rare")); // 3.0
    assert!(!profile.is_rare("boundary")); // exactly 4.0: not rare
    assert!(profile.is_rare("neverseen")); // out of table
}

#[test]
fn lexnet_keys_include_pos() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert_eq!(profile.polysemy("run", Upos::VERB), Some(12));
    assert_eq!(profile.polysemy("run", Upos::NOUN), Some(6));
    assert_eq!(profile.polysemy("absent", Upos::NOUN), None);
    assert_eq!(profile.hypernym_depth("entity", Upos::NOUN), Some(0));
    assert_eq!(profile.hypernym_depth("run", Upos::VERB), Some(2));
}

#[test]
fn embedding_prefers_exact_form() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert_eq!(profile.embedding("The"), Some(&[0.5f32, 0.5][..]));
    assert_eq!(profile.embedding("cat"), Some(&[1.0f32, 0.0][..]));
    assert_eq!(profile.embedding("CAT"), Some(&[1.0f32, 0.0][..]));
    assert_eq!(profile.embedding("oov"), None);
    assert_eq!(profile.embedding_dim(), Some(2));
}

#[test]
fn cefr_duplicate_forms_keep_easiest_level() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let profile = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    // "run" is listed A1 as a verb and B1 as a noun.
    assert_eq!(profile.cefr_level("Run").unwrap(), Some(CefrLevel::A1));
    assert_eq!(profile.cefr_level("analysis").unwrap(), Some(CefrLevel::B2));
    assert_eq!(profile.cefr_level("unlisted").unwrap(), None);
}

#[test]
fn unreadable_file_names_the_path() {
    let dir = TempDir::new().unwrap();
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(&manifest_path, "stopwords=missing.txt\n").unwrap();
    match LanguageProfile::load_from_file(&manifest_path, "en") {
        Err(ResourceError::Io { path, .. }) => assert!(path.contains("missing.txt")),
        other => panic!("expected io error, got {other:?}"),
    }
}

#[test]
fn malformed_line_is_located() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("freq.tsv"), "good\t5.0\nbad line\n").unwrap();
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(&manifest_path, "freq_table=freq.tsv\n").unwrap();
    match LanguageProfile::load_from_file(&manifest_path, "en") {
        Err(ResourceError::Malformed { line: 2, .. }) => {}
        other => panic!("expected malformed at line 2, got {other:?}"),
    }
}

#[test]
fn embedding_dimension_mismatch_rejected() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("v.vec"), "2 3\na 1 2 3\nb 1 2\n").unwrap();
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(&manifest_path, "embeddings=v.vec\n").unwrap();
    assert!(matches!(
        LanguageProfile::load_from_file(&manifest_path, "en"),
        Err(ResourceError::DimensionMismatch {
            expected: 3,
            found: 2,
            ..
        })
    ));
}

#[test]
fn checksum_mismatch_rejected() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("stop.txt"), "the\n").unwrap();
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(
        &manifest_path,
        format!("stopwords=stop.txt\nstopwords.sha256={}\n", "0".repeat(64)),
    )
    .unwrap();
    assert!(matches!(
        LanguageProfile::load_from_file(&manifest_path, "en"),
        Err(ResourceError::ChecksumMismatch { .. })
    ));
}

#[test]
fn checksum_match_accepted() {
    let dir = TempDir::new().unwrap();
    let content = "the\na\n";
    fs::write(dir.path().join("stop.txt"), content).unwrap();
    let digest = hex_digest(content.as_bytes());
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(
        &manifest_path,
        format!("stopwords=stop.txt\nstopwords.sha256={digest}\n"),
    )
    .unwrap();
    let profile = LanguageProfile::load_from_file(&manifest_path, "en").unwrap();
    assert!(profile.is_stopword("THE"));
}

#[test]
fn unknown_manifest_key_rejected() {
    let dir = TempDir::new().unwrap();
    let manifest_path = dir.path().join("manifest.txt");
    fs::write(&manifest_path, "wordlist=x.txt\n").unwrap();
    assert!(matches!(
        ResourceManifest::from_file(&manifest_path),
        Err(ResourceError::Malformed { .. })
    ));
}

#[test]
fn loading_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let manifest = write_bundle(dir.path(), FULL);
    let a = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    let b = LanguageProfile::load_from_file(&manifest, "en").unwrap();
    assert_eq!(a.available_features, b.available_features);
    assert_eq!(a.present_resources(), b.present_resources());
}
