//! Stratified k-fold cross-validation, holdout splits and evaluation
//! reports. Fold construction is seeded and per-class, so class balance per
//! fold never drifts by more than one row.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dataset::LabeledDataset;
use crate::model::{train_smo, SvmModel, TrainError};
use crate::smo::SmoParams;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("class `{class}` has {rows} rows, fewer than {k} folds")]
    ClassSmallerThanK { class: String, rows: usize, k: usize },
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("train fraction {0} leaves an empty split")]
    DegenerateFraction(f64),
    #[error("test label `{0}` is not one of the model's classes")]
    UnknownLabel(String),
    #[error(transparent)]
    Train(#[from] TrainError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassMetrics {
    pub label: String,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Pooled evaluation results. The confusion matrix is indexed
/// `[actual][predicted]` in class order; row sums equal per-class instance
/// counts and `accuracy = 100 * trace / total`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub classes: Vec<String>,
    /// Accuracy in percent.
    pub accuracy: f64,
    pub per_class: Vec<ClassMetrics>,
    pub confusion: Vec<Vec<usize>>,
    /// Row indices of each fold (empty for plain test-set evaluation).
    pub folds: Vec<Vec<usize>>,
    pub seed: u64,
}

impl EvalReport {
    fn from_confusion(
        classes: &[String],
        confusion: Vec<Vec<usize>>,
        folds: Vec<Vec<usize>>,
        seed: u64,
    ) -> Self {
        let total: usize = confusion.iter().map(|row| row.iter().sum::<usize>()).sum();
        let trace: usize = (0..classes.len()).map(|i| confusion[i][i]).sum();
        let accuracy = if total == 0 {
            0.0
        } else {
            100.0 * trace as f64 / total as f64
        };

        let per_class = classes
            .iter()
            .enumerate()
            .map(|(i, label)| {
                let tp = confusion[i][i] as f64;
                let actual: f64 = confusion[i].iter().sum::<usize>() as f64;
                let predicted: f64 = confusion.iter().map(|row| row[i]).sum::<usize>() as f64;
                let precision = if predicted > 0.0 { tp / predicted } else { 0.0 };
                let recall = if actual > 0.0 { tp / actual } else { 0.0 };
                let f1 = if precision + recall > 0.0 {
                    2.0 * precision * recall / (precision + recall)
                } else {
                    0.0
                };
                ClassMetrics {
                    label: label.clone(),
                    precision,
                    recall,
                    f1,
                }
            })
            .collect();

        EvalReport {
            classes: classes.to_vec(),
            accuracy,
            per_class,
            confusion,
            folds,
            seed,
        }
    }
}

/// Split row indices into `k` disjoint, exhaustive folds: shuffle each
/// class with the seeded generator, then deal round-robin. Per-fold class
/// counts differ by at most one.
pub fn stratified_folds(
    ds: &LabeledDataset,
    k: usize,
    seed: u64,
) -> Result<Vec<Vec<usize>>, EvalError> {
    if k < 2 {
        return Err(EvalError::BadK(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds = vec![Vec::new(); k];
    for class in &ds.classes {
        let mut indices: Vec<usize> = ds
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| &r.label == class)
            .map(|(i, _)| i)
            .collect();
        if indices.len() < k {
            return Err(EvalError::ClassSmallerThanK {
                class: class.clone(),
                rows: indices.len(),
                k,
            });
        }
        indices.shuffle(&mut rng);
        for (position, row) in indices.into_iter().enumerate() {
            folds[position % k].push(row);
        }
    }
    Ok(folds)
}

/// K-fold cross-validation: per fold, imputation, normalization and the
/// ensemble are fitted on the training portion only, then the held-out
/// fold is scored. Returns the pooled report.
pub fn cross_validate(
    ds: &LabeledDataset,
    k: usize,
    seed: u64,
    params: SmoParams,
) -> Result<EvalReport, EvalError> {
    cross_validate_models(ds, k, seed, params).map(|(report, _)| report)
}

/// Like [`cross_validate`], also returning each fold's fitted model (with
/// its train-side imputation/normalization statistics), which makes
/// leakage directly checkable.
pub fn cross_validate_models(
    ds: &LabeledDataset,
    k: usize,
    seed: u64,
    params: SmoParams,
) -> Result<(EvalReport, Vec<SvmModel>), EvalError> {
    let folds = stratified_folds(ds, k, seed)?;
    let n_classes = ds.classes.len();
    let mut confusion = vec![vec![0usize; n_classes]; n_classes];
    let mut models = Vec::with_capacity(k);

    for held_out_idx in 0..folds.len() {
        let train_indices: Vec<usize> = folds
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != held_out_idx)
            .flat_map(|(_, fold)| fold.iter().copied())
            .collect();
        let model = train_smo(&ds.subset(&train_indices), params)?;
        for &row in &folds[held_out_idx] {
            let actual = ds.class_index(&ds.rows[row].label).unwrap();
            let (predicted_label, _) = model.predict_values(&ds.rows[row].values);
            let predicted = ds.class_index(&predicted_label).unwrap();
            confusion[actual][predicted] += 1;
        }
        models.push(model);
    }

    Ok((
        EvalReport::from_confusion(&ds.classes, confusion, folds, seed),
        models,
    ))
}

/// Evaluate an already-trained model on a test set. Test labels must all be
/// classes the model was trained on.
pub fn evaluate_on(
    model: &SvmModel,
    test: &LabeledDataset,
    seed: u64,
) -> Result<EvalReport, EvalError> {
    let n_classes = model.classes.len();
    let mut confusion = vec![vec![0usize; n_classes]; n_classes];
    for row in &test.rows {
        let actual = model
            .classes
            .iter()
            .position(|c| c == &row.label)
            .ok_or_else(|| EvalError::UnknownLabel(row.label.clone()))?;
        let (predicted_label, _) = model.predict_values(&row.values);
        let predicted = model
            .classes
            .iter()
            .position(|c| c == &predicted_label)
            .expect("prediction is one of the model classes");
        confusion[actual][predicted] += 1;
    }
    Ok(EvalReport::from_confusion(
        &model.classes,
        confusion,
        Vec::new(),
        seed,
    ))
}

/// Stratified train/test split. Each class contributes
/// `ceil(fraction * n)` rows to the training side, which reproduces a
/// 152/37 split for 189 rows at fraction 0.8.
pub fn holdout_split(
    ds: &LabeledDataset,
    train_fraction: f64,
    seed: u64,
) -> Result<(LabeledDataset, LabeledDataset), EvalError> {
    if !(0.0..1.0).contains(&train_fraction) || train_fraction <= 0.0 {
        return Err(EvalError::DegenerateFraction(train_fraction));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train_indices = Vec::new();
    let mut test_indices = Vec::new();
    for class in &ds.classes {
        let mut indices: Vec<usize> = ds
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| &r.label == class)
            .map(|(i, _)| i)
            .collect();
        indices.shuffle(&mut rng);
        let n_train = (train_fraction * indices.len() as f64).ceil() as usize;
        if n_train == 0 || n_train >= indices.len() {
            return Err(EvalError::DegenerateFraction(train_fraction));
        }
        test_indices.extend(indices.split_off(n_train));
        train_indices.extend(indices);
    }
    train_indices.sort_unstable();
    test_indices.sort_unstable();
    Ok((ds.subset(&train_indices), ds.subset(&test_indices)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::DataRow;

    fn balanced_ds(per_class: usize, separable: bool) -> LabeledDataset {
        let mut rows = Vec::new();
        for i in 0..per_class {
            let jitter = (i % 5) as f64 * 0.1;
            rows.push(DataRow {
                doc_id: format!("s{i}"),
                values: vec![Some(jitter), Some(1.0 + jitter)],
                label: "simple".into(),
            });
            let offset = if separable { 5.0 } else { 0.05 };
            rows.push(DataRow {
                doc_id: format!("c{i}"),
                values: vec![Some(offset + jitter), Some(offset + 1.0 - jitter)],
                label: "complex".into(),
            });
        }
        LabeledDataset::new(vec!["f1".into(), "f2".into()], rows).unwrap()
    }

    #[test]
    fn folds_are_balanced_disjoint_and_exhaustive() {
        let ds = balanced_ds(200, true);
        let folds = stratified_folds(&ds, 10, 7).unwrap();
        assert_eq!(folds.len(), 10);
        let mut seen = std::collections::HashSet::new();
        for fold in &folds {
            let simple = fold
                .iter()
                .filter(|&&i| ds.rows[i].label == "simple")
                .count();
            let complex = fold.len() - simple;
            assert_eq!(simple, 20);
            assert_eq!(complex, 20);
            for &i in fold {
                assert!(seen.insert(i), "row {i} in two folds");
            }
        }
        assert_eq!(seen.len(), 400);
    }

    #[test]
    fn small_k_balanced() {
        let ds = balanced_ds(4, true);
        let folds = stratified_folds(&ds, 2, 3).unwrap();
        for fold in &folds {
            assert_eq!(fold.len(), 4);
        }
    }

    #[test]
    fn fold_construction_is_seed_deterministic() {
        let ds = balanced_ds(30, true);
        assert_eq!(
            stratified_folds(&ds, 5, 42).unwrap(),
            stratified_folds(&ds, 5, 42).unwrap()
        );
        assert_ne!(
            stratified_folds(&ds, 5, 42).unwrap(),
            stratified_folds(&ds, 5, 43).unwrap()
        );
    }

    #[test]
    fn class_smaller_than_k_is_an_error() {
        let ds = balanced_ds(3, true);
        assert!(matches!(
            stratified_folds(&ds, 10, 0),
            Err(EvalError::ClassSmallerThanK { .. })
        ));
    }

    #[test]
    fn separable_data_cross_validates_perfectly() {
        let ds = balanced_ds(20, true);
        let report = cross_validate(&ds, 5, 11, SmoParams::default()).unwrap();
        assert_eq!(report.accuracy, 100.0);
        // Internal consistency: trace / total = accuracy.
        let total: usize = report.confusion.iter().flatten().sum();
        let trace: usize = (0..2).map(|i| report.confusion[i][i]).sum();
        assert_eq!(report.accuracy, 100.0 * trace as f64 / total as f64);
    }

    #[test]
    fn confusion_rows_sum_to_class_counts() {
        let ds = balanced_ds(12, false);
        let report = cross_validate(&ds, 4, 5, SmoParams::default()).unwrap();
        for (i, class) in report.classes.iter().enumerate() {
            let row_sum: usize = report.confusion[i].iter().sum();
            let class_rows = ds.rows.iter().filter(|r| &r.label == class).count();
            assert_eq!(row_sum, class_rows);
        }
    }

    #[test]
    fn holdout_matches_published_counts() {
        // 189 rows per class at 0.8 split into 152 train / 37 test.
        let mut rows = Vec::new();
        for class in ["elementary", "intermediate", "advanced"] {
            for i in 0..189 {
                rows.push(DataRow {
                    doc_id: format!("{class}{i}"),
                    values: vec![Some(i as f64)],
                    label: class.into(),
                });
            }
        }
        let ds = LabeledDataset::new(vec!["f".into()], rows).unwrap();
        let (train, test) = holdout_split(&ds, 0.8, 9).unwrap();
        for class in &ds.classes {
            assert_eq!(
                train.rows.iter().filter(|r| &r.label == class).count(),
                152
            );
            assert_eq!(test.rows.iter().filter(|r| &r.label == class).count(), 37);
        }
        assert_eq!(train.rows.len() + test.rows.len(), ds.rows.len());
    }

    #[test]
    fn full_fraction_is_rejected() {
        let ds = balanced_ds(5, true);
        assert!(matches!(
            holdout_split(&ds, 1.0, 0),
            Err(EvalError::DegenerateFraction(_))
        ));
    }

    #[test]
    fn holdout_is_seed_deterministic() {
        let ds = balanced_ds(25, true);
        let (a_train, a_test) = holdout_split(&ds, 0.8, 4).unwrap();
        let (b_train, b_test) = holdout_split(&ds, 0.8, 4).unwrap();
        assert_eq!(a_train, b_train);
        assert_eq!(a_test, b_test);
    }
}
