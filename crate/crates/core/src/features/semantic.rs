//! Semantic information from the lexical-semantic table: polysemy and
//! hypernym depth means.

use super::{mean, DocContext, FeatureVector};
use crate::model::Upos;

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let mut polysemy = Vec::new();
    let mut noun_depths = Vec::new();
    let mut verb_depths = Vec::new();

    for word in ctx.words() {
        if matches!(word.upos, Upos::NOUN | Upos::VERB | Upos::ADJ | Upos::ADV) {
            if let Some(senses) = ctx.profile.polysemy(&word.lemma, word.upos) {
                polysemy.push(senses as f64);
            }
        }
        match word.upos {
            Upos::NOUN => {
                if let Some(depth) = ctx.profile.hypernym_depth(&word.lemma, Upos::NOUN) {
                    noun_depths.push(depth as f64);
                }
            }
            Upos::VERB => {
                if let Some(depth) = ctx.profile.hypernym_depth(&word.lemma, Upos::VERB) {
                    verb_depths.push(depth as f64);
                }
            }
            _ => {}
        }
    }

    let combined: Vec<f64> = noun_depths
        .iter()
        .chain(verb_depths.iter())
        .copied()
        .collect();

    out.insert("polysemy_mean", mean(&polysemy));
    out.insert("noun_hypernym_depth_mean", mean(&noun_depths));
    out.insert("verb_hypernym_depth_mean", mean(&verb_depths));
    out.insert("hypernymy_index", mean(&combined));
}
