//! Classical readability formulas: Flesch reading ease and SMOG for
//! English, Fernandez Huerta for Spanish. Basque has no formula, so the
//! group is simply never selected for it.

use super::{DocContext, FeatureVector};

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let words = ctx.total_words as f64;
    let sentences = ctx.sentences.len() as f64;
    let Some(syllable_counts) = ctx.syllables_per_word() else {
        out.insert("flesch_reading_ease", None);
        out.insert("smog_grade", None);
        out.insert("fernandez_huerta", None);
        return;
    };
    if words == 0.0 || sentences == 0.0 {
        out.insert("flesch_reading_ease", None);
        out.insert("smog_grade", None);
        out.insert("fernandez_huerta", None);
        return;
    }

    let syllables: f64 = syllable_counts.iter().sum();
    let polysyllables = syllable_counts.iter().filter(|&&n| n >= 3.0).count() as f64;

    match ctx.profile.lang.as_str() {
        "en" => {
            let flesch = 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words);
            out.insert("flesch_reading_ease", Some(flesch));
            let smog = 1.0430 * (30.0 * polysyllables / sentences).sqrt() + 3.1291;
            out.insert("smog_grade", Some(smog));
        }
        "es" => {
            // 0.60 per 100 words of syllables = 60 per syllable/word ratio.
            let fh = 206.84 - 60.0 * (syllables / words) - 1.02 * (words / sentences);
            out.insert("fernandez_huerta", Some(fh));
        }
        _ => {}
    }
}
