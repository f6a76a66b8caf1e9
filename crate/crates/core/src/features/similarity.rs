//! Semantic overlap via embedding cosine similarity: adjacent sentences,
//! adjacent paragraphs, and all sentence pairs within each paragraph.

use super::{mean, pop_sd, DocContext, FeatureVector};
use crate::model::Word;

/// L2-normalized mean of the embeddings of in-vocabulary non-stopword
/// tokens; `None` when no token has a vector.
fn unit_vector<'a>(
    ctx: &DocContext,
    words: impl Iterator<Item = &'a Word>,
) -> Option<Vec<f64>> {
    let mut sum: Option<Vec<f64>> = None;
    let mut count = 0usize;
    for word in words {
        if word.is_punct() || ctx.is_stopword(word) {
            continue;
        }
        let Some(vector) = ctx.profile.embedding(&word.form) else {
            continue;
        };
        let sum = sum.get_or_insert_with(|| vec![0.0; vector.len()]);
        for (acc, v) in sum.iter_mut().zip(vector) {
            *acc += *v as f64;
        }
        count += 1;
    }
    let mut sum = sum?;
    let inv = 1.0 / count as f64;
    for v in sum.iter_mut() {
        *v *= inv;
    }
    let norm = sum.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return None;
    }
    for v in sum.iter_mut() {
        *v /= norm;
    }
    Some(sum)
}

fn cosine(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .sum::<f64>()
        .clamp(-1.0, 1.0)
}

pub(super) fn compute(ctx: &DocContext, out: &mut FeatureVector) {
    let sentence_vectors: Vec<Option<Vec<f64>>> = ctx
        .sentences
        .iter()
        .map(|s| unit_vector(ctx, s.words.iter()))
        .collect();
    let paragraph_vectors: Vec<Option<Vec<f64>>> = ctx
        .para_ranges
        .iter()
        .map(|&(start, end)| {
            unit_vector(
                ctx,
                ctx.sentences[start..end].iter().flat_map(|s| s.words.iter()),
            )
        })
        .collect();

    // Pairs with an undefined vector on either side are skipped.
    let pair_similarities = |vectors: &[Option<Vec<f64>>], pairs: &[(usize, usize)]| -> Vec<f64> {
        pairs
            .iter()
            .filter_map(|&(i, j)| match (&vectors[i], &vectors[j]) {
                (Some(a), Some(b)) => Some(cosine(a, b)),
                _ => None,
            })
            .collect()
    };

    let adjacent_sentences: Vec<(usize, usize)> =
        (1..sentence_vectors.len()).map(|i| (i - 1, i)).collect();
    let values = pair_similarities(&sentence_vectors, &adjacent_sentences);
    out.insert("adjacent_sentence_similarity_mean", mean(&values));
    out.insert("adjacent_sentence_similarity_sd", pop_sd(&values));

    let adjacent_paragraphs: Vec<(usize, usize)> =
        (1..paragraph_vectors.len()).map(|i| (i - 1, i)).collect();
    let values = pair_similarities(&paragraph_vectors, &adjacent_paragraphs);
    out.insert("adjacent_paragraph_similarity_mean", mean(&values));
    out.insert("adjacent_paragraph_similarity_sd", pop_sd(&values));

    let within: Vec<(usize, usize)> = ctx
        .para_ranges
        .iter()
        .flat_map(|&(start, end)| {
            (start..end).flat_map(move |i| ((i + 1)..end).map(move |j| (i, j)))
        })
        .collect();
    let values = pair_similarities(&sentence_vectors, &within);
    out.insert("paragraph_sentence_pairs_similarity_mean", mean(&values));
    out.insert("paragraph_sentence_pairs_similarity_sd", pop_sd(&values));
}

#[cfg(test)]
mod tests {
    use super::super::compute_all;
    use crate::catalog::Mode;
    use crate::conllu::parse_conllu;
    use crate::resources::LanguageProfile;

    fn profile(entries: &[(&str, Vec<f32>)]) -> LanguageProfile {
        LanguageProfile::builder("en")
            .stopwords(["the"])
            .embeddings(entries.iter().map(|(f, v)| (f.to_string(), v.clone())))
            .build()
            .unwrap()
    }

    fn one_word_sentences(forms: &[&str], newpar_before: &[usize]) -> crate::Document {
        let mut text = String::new();
        for (i, form) in forms.iter().enumerate() {
            if newpar_before.contains(&i) {
                text.push_str("# newpar\n");
            }
            text.push_str(&format!("1\t{form}\t{form}\tNOUN\t_\t_\t0\troot\t_\t_\n\n"));
        }
        parse_conllu(text.as_bytes(), "t").unwrap()
    }

    #[test]
    fn identical_sentences_have_similarity_one() {
        let profile = profile(&[("cat", vec![0.3, 0.4])]);
        let doc = one_word_sentences(&["cat", "cat"], &[]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        let sim = fv.value("adjacent_sentence_similarity_mean").unwrap();
        assert!((sim - 1.0).abs() < 1e-9);
    }

    #[test]
    fn orthogonal_vectors_have_similarity_zero() {
        let profile = profile(&[("cat", vec![1.0, 0.0]), ("dog", vec![0.0, 1.0])]);
        let doc = one_word_sentences(&["cat", "dog"], &[]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        let sim = fv.value("adjacent_sentence_similarity_mean").unwrap();
        assert!(sim.abs() < 1e-9);
    }

    #[test]
    fn single_paragraph_has_no_adjacent_paragraph_value() {
        let profile = profile(&[("cat", vec![1.0, 0.0]), ("dog", vec![0.0, 1.0])]);
        let doc = one_word_sentences(&["cat", "dog"], &[]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        assert_eq!(fv.get("adjacent_paragraph_similarity_mean"), Some(None));
    }

    #[test]
    fn out_of_vocabulary_pairs_are_skipped() {
        let profile = profile(&[("cat", vec![1.0, 0.0])]);
        let doc = one_word_sentences(&["cat", "oov", "cat"], &[]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        // Both adjacent pairs touch the vectorless sentence.
        assert_eq!(fv.get("adjacent_sentence_similarity_mean"), Some(None));
        // But the within-paragraph pair (cat, cat) survives.
        let within = fv
            .value("paragraph_sentence_pairs_similarity_mean")
            .unwrap();
        assert!((within - 1.0).abs() < 1e-9);
    }

    #[test]
    fn paragraph_vectors_pool_their_sentences() {
        let profile = profile(&[("cat", vec![1.0, 0.0]), ("dog", vec![0.0, 1.0])]);
        // Two paragraphs with identical content: similarity 1.
        let doc = one_word_sentences(&["cat", "dog", "cat", "dog"], &[2]);
        let fv = compute_all(&doc, &profile, Mode::All, None);
        let sim = fv.value("adjacent_paragraph_similarity_mean").unwrap();
        assert!((sim - 1.0).abs() < 1e-9);
    }
}
