//! Logical cohesion: connective counts and incidences per category.

use super::{DocContext, FeatureVector};
use crate::resources::ConnectiveCategory;

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let mut per_category = [0usize; ConnectiveCategory::ALL.len()];
    let mut total = 0usize;

    for sentence in &ctx.sentences {
        for matched in ctx.profile.match_connectives(sentence) {
            let slot = ConnectiveCategory::ALL
                .iter()
                .position(|c| *c == matched.category)
                .unwrap();
            per_category[slot] += 1;
            total += 1;
        }
    }

    for (category, count) in ConnectiveCategory::ALL.iter().zip(per_category) {
        out.insert(
            format!("num_{}_connectives", category.as_str()),
            Some(count as f64),
        );
        out.insert(
            format!("{}_connectives_incidence", category.as_str()),
            ctx.incidence(count),
        );
    }
    out.insert("num_all_connectives", Some(total as f64));
    out.insert("all_connectives_incidence", ctx.incidence(total));
}

#[cfg(test)]
mod tests {
    use super::super::compute_all;
    use crate::catalog::Mode;
    use crate::conllu::parse_conllu;
    use crate::resources::{ConnectiveCategory, ConnectiveSet, LanguageProfile};

    fn profile() -> LanguageProfile {
        let mut set = ConnectiveSet::new();
        set.insert(ConnectiveCategory::Causal, "because");
        set.insert(ConnectiveCategory::Temporal, "then");
        LanguageProfile::builder("en")
            .connectives(set)
            .build()
            .unwrap()
    }

    fn doc_of(forms: &[&str]) -> crate::Document {
        let mut text = String::new();
        for (i, form) in forms.iter().enumerate() {
            let head = if i == 0 { 0 } else { 1 };
            text.push_str(&format!(
                "{}\t{form}\t{form}\tADV\t_\t_\t{head}\tdep\t_\t_\n",
                i + 1
            ));
        }
        text.push('\n');
        parse_conllu(text.as_bytes(), "t").unwrap()
    }

    #[test]
    fn one_causal_match_in_hundred_words() {
        let forms: Vec<&str> = std::iter::once("because")
            .chain(std::iter::repeat("word").take(99))
            .collect();
        let fv = compute_all(&doc_of(&forms), &profile(), Mode::All, None);
        assert_eq!(fv.value("causal_connectives_incidence"), Some(10.0));
        assert_eq!(fv.value("num_causal_connectives"), Some(1.0));
    }

    #[test]
    fn no_matches_gives_zero_everywhere() {
        let fv = compute_all(&doc_of(&["plain", "words"]), &profile(), Mode::All, None);
        for id in [
            "causal_connectives_incidence",
            "logical_connectives_incidence",
            "adversative_connectives_incidence",
            "temporal_connectives_incidence",
            "conditional_connectives_incidence",
            "all_connectives_incidence",
        ] {
            assert_eq!(fv.value(id), Some(0.0), "{id}");
        }
    }

    #[test]
    fn categories_sum_into_all() {
        let fv = compute_all(
            &doc_of(&["because", "x", "then"]),
            &profile(),
            Mode::All,
            None,
        );
        assert_eq!(fv.value("num_all_connectives"), Some(2.0));
        assert_eq!(fv.value("num_causal_connectives"), Some(1.0));
        assert_eq!(fv.value("num_temporal_connectives"), Some(1.0));
    }
}
