//! CEFR vocabulary knowledge: words per level plus content words at no
//! listed level.

use super::{DocContext, FeatureVector};
use crate::resources::CefrLevel;

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let mut per_level = [0usize; CefrLevel::ALL.len()];
    let mut unlisted_content = 0usize;

    for word in ctx.words() {
        match ctx.profile.cefr_level(&word.form) {
            Ok(Some(level)) => {
                per_level[CefrLevel::ALL.iter().position(|l| *l == level).unwrap()] += 1
            }
            Ok(None) => {
                if word.is_content() {
                    unlisted_content += 1;
                }
            }
            // No CEFR resource: the group is unavailable and filtered out.
            Err(_) => return,
        }
    }

    for (level, count) in CefrLevel::ALL.iter().zip(per_level) {
        let tag = level.as_str().to_lowercase();
        out.insert(format!("num_{tag}_words"), Some(count as f64));
        out.insert(format!("{tag}_words_incidence"), ctx.incidence(count));
    }
    out.insert(
        "num_content_words_not_in_cefr",
        Some(unlisted_content as f64),
    );
    out.insert(
        "content_words_not_in_cefr_incidence",
        ctx.incidence(unlisted_content),
    );
}

#[cfg(test)]
mod tests {
    use super::super::compute_all;
    use crate::catalog::Mode;
    use crate::conllu::parse_conllu;
    use crate::resources::{CefrLevel, LanguageProfile};

    fn doc_of(forms: &[&str]) -> crate::Document {
        let mut text = String::new();
        for (i, form) in forms.iter().enumerate() {
            let head = if i == 0 { 0 } else { 1 };
            text.push_str(&format!(
                "{}\t{form}\t{form}\tNOUN\t_\t_\t{head}\tdep\t_\t_\n",
                i + 1
            ));
        }
        text.push('\n');
        parse_conllu(text.as_bytes(), "t").unwrap()
    }

    #[test]
    fn level_incidence() {
        let profile = LanguageProfile::builder("en")
            .cefr([("easy", CefrLevel::A1)])
            .build()
            .unwrap();
        let forms: Vec<&str> = std::iter::repeat("easy")
            .take(40)
            .chain(std::iter::repeat("hard").take(60))
            .collect();
        let doc = doc_of(&forms);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        assert_eq!(fv.value("a1_words_incidence"), Some(400.0));
        assert_eq!(fv.value("num_a1_words"), Some(40.0));
        assert_eq!(fv.value("num_content_words_not_in_cefr"), Some(60.0));
    }

    #[test]
    fn lookup_is_case_folded_and_counted_once() {
        let profile = LanguageProfile::builder("en")
            .cefr([("tricky", CefrLevel::B2)])
            .build()
            .unwrap();
        let doc = doc_of(&["Tricky"]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        assert_eq!(fv.value("num_b2_words"), Some(1.0));
        assert_eq!(fv.value("num_b1_words"), Some(0.0));
    }

    #[test]
    fn group_absent_without_cefr_resource() {
        let profile = LanguageProfile::builder("es").build().unwrap();
        let doc = doc_of(&["palabra"]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        assert!(!fv.contains("num_a1_words"));
    }
}
