//! Syntactic complexity over dependency trees: left embeddedness, noun
//! phrase statistics, clause counts, passives, negation and tree depth.
//!
//! UD has no constituents, so "noun phrase" means the subtree of a
//! NOUN/PROPN/PRON head and "verb phrase" means a finite verbal token.

use std::collections::{BTreeSet, HashMap};

use super::{mean, pop_sd, DocContext, FeatureVector};
use crate::model::{Sentence, Upos, Word};

/// Relations that head a subordinate clause.
const SUBORDINATE_DEPRELS: &[&str] = &["ccomp", "xcomp", "advcl", "acl", "csubj"];

/// Direct-dependent relations counted as noun phrase modifiers.
const MODIFIER_DEPRELS: &[&str] = &["amod", "nmod", "det", "nummod", "appos", "acl"];

/// Small per-language negator lemma lists, complementing `Polarity=Neg`.
fn negator_lemmas(lang: &str) -> &'static [&'static str] {
    match lang {
        "en" => &["not", "no", "never", "neither", "nor", "n't", "cannot"],
        "es" => &["no", "nunca", "jam\u{e1}s", "ni", "tampoco", "nada", "nadie"],
        "eu" => &["ez", "ezin", "inoiz", "inola"],
        _ => &[],
    }
}

struct Tree<'a> {
    by_index: HashMap<usize, &'a Word>,
    children: HashMap<usize, Vec<usize>>,
    root: Option<usize>,
}

impl<'a> Tree<'a> {
    fn new(sentence: &'a Sentence) -> Self {
        let by_index: HashMap<usize, &Word> =
            sentence.words.iter().map(|w| (w.index, w)).collect();
        let mut children: HashMap<usize, Vec<usize>> = HashMap::new();
        for w in &sentence.words {
            if w.head != 0 {
                children.entry(w.head).or_default().push(w.index);
            }
        }
        for list in children.values_mut() {
            list.sort_unstable();
        }
        let root = sentence.root().map(|w| w.index);
        Tree {
            by_index,
            children,
            root,
        }
    }

    fn subtree_size(&self, index: usize) -> usize {
        let mut size = 0;
        let mut stack = vec![index];
        let mut seen = BTreeSet::new();
        while let Some(at) = stack.pop() {
            if !seen.insert(at) {
                continue; // cyclic input: stop rather than loop
            }
            size += 1;
            if let Some(kids) = self.children.get(&at) {
                stack.extend(kids.iter().copied());
            }
        }
        size
    }

    /// Maximum depth with the root at depth 1.
    fn depth(&self) -> Option<usize> {
        let root = self.root?;
        let mut max_depth = 0;
        let mut stack = vec![(root, 1usize)];
        let mut seen = BTreeSet::new();
        while let Some((at, d)) = stack.pop() {
            if !seen.insert(at) {
                continue;
            }
            max_depth = max_depth.max(d);
            if let Some(kids) = self.children.get(&at) {
                stack.extend(kids.iter().map(|&k| (k, d + 1)));
            }
        }
        Some(max_depth)
    }

    /// The main verb: the root when verbal, otherwise the first direct
    /// VERB/AUX dependent of the root (copula and similar analyses).
    fn main_verb(&self) -> Option<&'a Word> {
        let root = self.by_index.get(&self.root?)?;
        if matches!(root.upos, Upos::VERB | Upos::AUX) {
            return Some(root);
        }
        self.children
            .get(&root.index)?
            .iter()
            .filter_map(|i| self.by_index.get(i).copied())
            .find(|w| matches!(w.upos, Upos::VERB | Upos::AUX))
    }
}

fn is_finite_verbal(word: &Word) -> bool {
    matches!(word.upos, Upos::VERB | Upos::AUX)
        && (word.feats.has("VerbForm", "Fin") || !word.feats.has_key("VerbForm"))
}

fn is_clausal(word: &Word, tree: &Tree) -> bool {
    let base = word.deprel_base();
    if SUBORDINATE_DEPRELS.contains(&base) {
        return true;
    }
    // Coordination of verbal heads opens a clause too.
    base == "conj"
        && matches!(word.upos, Upos::VERB | Upos::AUX)
        && tree
            .by_index
            .get(&word.head)
            .is_some_and(|h| matches!(h.upos, Upos::VERB | Upos::AUX))
}

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let negators = negator_lemmas(&ctx.profile.lang);

    let mut left_embeddedness = Vec::new();
    let mut np_descendants = Vec::new();
    let mut np_modifiers = Vec::new();
    let mut nps_per_sentence = Vec::new();
    let mut vps_per_sentence = Vec::new();
    let mut propositions_per_sentence = Vec::new();
    let mut depths = Vec::new();
    let mut total_propositions = 0usize;
    let mut subordinate = 0usize;
    let mut passives = 0usize;
    let mut negations = 0usize;

    for sentence in &ctx.sentences {
        let tree = Tree::new(sentence);

        if let Some(main) = tree.main_verb() {
            let before = sentence
                .lexical_words()
                .filter(|w| w.index < main.index)
                .count();
            left_embeddedness.push(before as f64);
        }

        let mut np_count = 0usize;
        for word in &sentence.words {
            if matches!(word.upos, Upos::NOUN | Upos::PROPN | Upos::PRON) {
                np_count += 1;
                np_descendants.push((tree.subtree_size(word.index) - 1) as f64);
                let modifiers = tree
                    .children
                    .get(&word.index)
                    .map(|kids| {
                        kids.iter()
                            .filter_map(|i| tree.by_index.get(i))
                            .filter(|k| MODIFIER_DEPRELS.contains(&k.deprel_base()))
                            .count()
                    })
                    .unwrap_or(0);
                np_modifiers.push(modifiers as f64);
            }
        }
        nps_per_sentence.push(np_count as f64);

        let vp_count = sentence
            .lexical_words()
            .filter(|w| is_finite_verbal(w))
            .count();
        vps_per_sentence.push(vp_count as f64);

        let clausal = sentence
            .lexical_words()
            .filter(|w| is_clausal(w, &tree))
            .count();
        propositions_per_sentence.push((1 + clausal) as f64);
        total_propositions += 1 + clausal;

        subordinate += sentence
            .lexical_words()
            .filter(|w| SUBORDINATE_DEPRELS.contains(&w.deprel_base()))
            .count();

        // A passive construction is counted once per governing head, whether
        // marked by `:pass` relations on dependents or `Voice=Pass` itself.
        let mut passive_heads: BTreeSet<usize> = BTreeSet::new();
        for word in &sentence.words {
            if word.deprel.ends_with(":pass") {
                if let Some(head) = tree.by_index.get(&word.head) {
                    if !head.is_punct() {
                        passive_heads.insert(head.index);
                    }
                }
            }
            if word.upos == Upos::VERB && word.feats.has("Voice", "Pass") {
                passive_heads.insert(word.index);
            }
        }
        passives += passive_heads.len();

        negations += sentence
            .lexical_words()
            .filter(|w| {
                w.feats.has("Polarity", "Neg") || negators.contains(&w.lemma_lower().as_str())
            })
            .count();

        if let Some(depth) = tree.depth() {
            depths.push(depth as f64);
        }
    }

    out.insert("left_embeddedness", mean(&left_embeddedness));
    out.insert("descendants_per_noun_phrase_mean", mean(&np_descendants));
    out.insert("modifiers_per_noun_phrase_mean", mean(&np_modifiers));
    out.insert("noun_phrases_per_sentence_mean", mean(&nps_per_sentence));
    out.insert("verb_phrases_per_sentence_mean", mean(&vps_per_sentence));
    out.insert(
        "propositions_per_sentence_mean",
        mean(&propositions_per_sentence),
    );
    out.insert("num_propositions", Some(total_propositions as f64));
    out.insert("num_subordinate_clauses", Some(subordinate as f64));
    out.insert("subordinate_clauses_incidence", ctx.incidence(subordinate));
    out.insert("num_passives", Some(passives as f64));
    out.insert("passives_incidence", ctx.incidence(passives));
    out.insert("num_negations", Some(negations as f64));
    out.insert("negations_incidence", ctx.incidence(negations));
    out.insert("parse_tree_depth_mean", mean(&depths));
    out.insert("parse_tree_depth_sd", pop_sd(&depths));
}
