//! Seeded synthetic documents and a matching in-memory profile.
//!
//! Property tests and demos need structurally valid documents (single root,
//! acyclic heads, at least one non-punctuation word per sentence) without
//! shipping corpora. Everything here is deterministic in the seed.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::model::{Document, Feats, Paragraph, Sentence, Upos, Word};
use crate::resources::{CefrLevel, ConnectiveCategory, ConnectiveSet, LanguageProfile, Syllabifier};

const STEMS: &[&str] = &[
    "mira", "talo", "bensu", "karde", "lopi", "senta", "rukal", "devan", "posi", "lantu",
    "gorbe", "zilar", "metra", "fulo", "handi", "bera", "sokal", "timun", "velar", "oste",
    "prane", "kuda", "limor", "sauta", "nerbi", "tolda", "vista", "marun", "gelda", "ponti",
];

const PUNCT_FORMS: &[&str] = &[".", ",", "!", "?", ";"];

fn upos_for(rng: &mut impl Rng) -> Upos {
    // Rough corpus-like tag mix; PUNCT is handled separately.
    let roll = rng.gen_range(0..100);
    match roll {
        0..=21 => Upos::NOUN,
        22..=29 => Upos::PROPN,
        30..=45 => Upos::VERB,
        46..=51 => Upos::AUX,
        52..=61 => Upos::ADJ,
        62..=69 => Upos::ADV,
        70..=76 => Upos::DET,
        77..=82 => Upos::ADP,
        83..=87 => Upos::PRON,
        88..=91 => Upos::CCONJ,
        92..=94 => Upos::SCONJ,
        95..=96 => Upos::NUM,
        97 => Upos::PART,
        98 => Upos::INTJ,
        _ => Upos::X,
    }
}

fn deprel_for(rng: &mut impl Rng, upos: Upos) -> String {
    let options: &[&str] = match upos {
        Upos::NOUN | Upos::PROPN => &["nsubj", "obj", "obl", "nmod", "conj", "appos", "nsubj:pass"],
        Upos::VERB => &["conj", "advcl", "ccomp", "xcomp", "acl", "acl:relcl", "csubj"],
        Upos::AUX => &["aux", "aux:pass", "cop"],
        Upos::ADJ => &["amod", "conj"],
        Upos::ADV => &["advmod"],
        Upos::DET => &["det"],
        Upos::ADP => &["case"],
        Upos::PRON => &["nsubj", "obj"],
        Upos::CCONJ => &["cc"],
        Upos::SCONJ => &["mark"],
        Upos::NUM => &["nummod"],
        Upos::PART => &["advmod"],
        _ => &["dep"],
    };
    options[rng.gen_range(0..options.len())].to_string()
}

fn feats_for(rng: &mut impl Rng, upos: Upos) -> Feats {
    let mut feats = Feats::new();
    match upos {
        Upos::VERB | Upos::AUX => {
            if rng.gen_bool(0.7) {
                feats.insert("Tense", if rng.gen_bool(0.5) { "Past" } else { "Pres" });
            }
            if rng.gen_bool(0.5) {
                feats.insert("Mood", ["Ind", "Sub", "Imp"][rng.gen_range(0..3)]);
            }
            if rng.gen_bool(0.4) {
                feats.insert("Person", ["1", "2", "3"][rng.gen_range(0..3)]);
            }
            if rng.gen_bool(0.7) {
                feats.insert("VerbForm", ["Fin", "Inf", "Ger", "Part"][rng.gen_range(0..4)]);
            }
            if upos == Upos::VERB && rng.gen_bool(0.1) {
                feats.insert("Voice", "Pass");
            }
            if rng.gen_bool(0.08) {
                feats.insert("Polarity", "Neg");
            }
        }
        Upos::PRON => {
            feats.insert("PronType", "Prs");
            if rng.gen_bool(0.6) {
                feats.insert("Person", ["1", "2", "3"][rng.gen_range(0..3)]);
            }
        }
        _ => {}
    }
    feats
}

fn random_form(rng: &mut impl Rng, upos: Upos) -> String {
    let stem = STEMS[rng.gen_range(0..STEMS.len())];
    let suffix = ["", "", "s", "ak", "en", "ra"][rng.gen_range(0..6)];
    let mut form = format!("{stem}{suffix}");
    if upos == Upos::PROPN {
        let mut chars = form.chars();
        form = chars
            .next()
            .map(|c| c.to_uppercase().collect::<String>() + chars.as_str())
            .unwrap_or_default();
    }
    form
}

/// One random sentence of `len` non-punctuation words (plus usually a final
/// period). Heads form a uniform random recursive tree.
fn random_sentence(rng: &mut impl Rng, len: usize) -> Sentence {
    let len = len.max(1);
    let mut words = Vec::with_capacity(len + 1);

    for i in 0..len {
        let upos = upos_for(rng);
        let form = random_form(rng, upos);
        let lemma = form.to_lowercase();
        words.push(Word {
            index: i + 1,
            form,
            lemma,
            upos,
            feats: feats_for(rng, upos),
            head: 0, // assigned below
            deprel: String::new(),
            misc: "_".into(),
        });
    }

    // Random recursive tree over a shuffled order.
    let mut order: Vec<usize> = (0..len).collect();
    order.shuffle(rng);
    for (pos, &slot) in order.iter().enumerate() {
        if pos == 0 {
            words[slot].head = 0;
            words[slot].deprel = "root".into();
        } else {
            let parent = order[rng.gen_range(0..pos)];
            words[slot].head = parent + 1;
            words[slot].deprel = deprel_for(rng, words[slot].upos);
        }
    }

    if rng.gen_bool(0.9) {
        let root_index = words.iter().find(|w| w.head == 0).map(|w| w.index).unwrap();
        words.push(Word {
            index: len + 1,
            form: PUNCT_FORMS[rng.gen_range(0..PUNCT_FORMS.len())].into(),
            lemma: PUNCT_FORMS[0].into(),
            upos: Upos::PUNCT,
            feats: Feats::new(),
            head: root_index,
            deprel: "punct".into(),
            misc: "_".into(),
        });
    }

    Sentence {
        words,
        sent_id: None,
    }
}

/// A random well-formed document: 1-4 paragraphs of 1-5 sentences of 1-12
/// words. Identical seeds produce identical documents.
pub fn random_document(seed: u64, doc_id: &str) -> Document {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let paragraphs = (0..rng.gen_range(1..=4))
        .map(|_| Paragraph {
            sentences: (0..rng.gen_range(1..=5))
                .map(|_| {
                    let len = rng.gen_range(1..=12);
                    random_sentence(&mut rng, len)
                })
                .collect(),
        })
        .collect();
    Document {
        doc_id: doc_id.to_string(),
        paragraphs,
    }
}

/// Concatenate a document with itself: the duplicate's paragraphs are
/// appended after the original's.
pub fn duplicate_document(doc: &Document) -> Document {
    let mut paragraphs = doc.paragraphs.clone();
    paragraphs.extend(doc.paragraphs.iter().cloned());
    Document {
        doc_id: format!("{}+dup", doc.doc_id),
        paragraphs,
    }
}

/// A full in-memory profile covering every resource kind, aligned with the
/// vocabulary [`random_document`] draws from.
pub fn demo_profile(lang: &str) -> LanguageProfile {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA57E);

    let mut connectives = ConnectiveSet::new();
    for (category, phrase) in [
        (ConnectiveCategory::Causal, "mira"),
        (ConnectiveCategory::Logical, "talo"),
        (ConnectiveCategory::Adversative, "bensu karde"),
        (ConnectiveCategory::Temporal, "lopi"),
        (ConnectiveCategory::Conditional, "senta"),
    ] {
        connectives.insert(category, phrase);
    }

    let mut freq = Vec::new();
    let mut lexnet = Vec::new();
    let mut cefr = Vec::new();
    let mut embeddings = Vec::new();
    for (i, stem) in STEMS.iter().enumerate() {
        freq.push((stem.to_string(), 2.0 + (i % 6) as f64));
        lexnet.push((
            stem.to_string(),
            Upos::NOUN,
            1 + (i % 7) as u32,
            (i % 9) as u32,
        ));
        lexnet.push((
            stem.to_string(),
            Upos::VERB,
            1 + (i % 4) as u32,
            (i % 5) as u32,
        ));
        cefr.push((
            stem.to_string(),
            CefrLevel::ALL[i % CefrLevel::ALL.len()],
        ));
        let vector: Vec<f32> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        embeddings.push((stem.to_string(), vector));
        // suffixed variants share no embedding on purpose: OOV paths stay hot
    }

    let syllabifier = Syllabifier::from_rules(
        "vowels=aeiouy\nmerge_default=true\nfinal_silent_e=true\n",
        Default::default(),
        "<demo>",
    )
    .expect("demo rules parse");

    LanguageProfile::builder(lang)
        .stopwords(["talo", "bera", "oste"])
        .connectives(connectives)
        .irregular_verbs(["mira", "kuda"])
        .cefr(cefr)
        .freq_table(freq)
        .lexnet(lexnet)
        .embeddings(embeddings)
        .syllabifier(syllabifier)
        .build()
        .expect("demo profile is well-formed")
}
