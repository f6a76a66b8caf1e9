//! Information-gain feature ranking over MDL-discretized bins.

use crate::dataset::LabeledDataset;
use crate::discretize::{discretize_mdl, entropy};

/// Rank every feature by information gain in bits, descending. Gains use
/// the MDL-discretized bins plus a dedicated missing-value bin when missing
/// values exist. Ties keep the dataset's feature order (catalog order).
pub fn info_gain_rank(ds: &LabeledDataset) -> Vec<(String, f64)> {
    let n_classes = ds.classes.len();
    let labels: Vec<usize> = ds
        .rows
        .iter()
        .map(|r| ds.class_index(&r.label).expect("label in classes"))
        .collect();

    let mut ranked: Vec<(String, f64)> = ds
        .feature_ids
        .iter()
        .enumerate()
        .map(|(column, id)| {
            (
                id.clone(),
                feature_gain(ds, column, &labels, n_classes),
            )
        })
        .collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1));
    ranked
}

fn feature_gain(ds: &LabeledDataset, column: usize, labels: &[usize], n_classes: usize) -> f64 {
    let mut present_values = Vec::new();
    let mut present_labels = Vec::new();
    let mut missing_labels = Vec::new();
    for (row, &label) in ds.rows.iter().zip(labels) {
        match row.values[column] {
            Some(v) if v.is_finite() => {
                present_values.push(v);
                present_labels.push(label);
            }
            _ => missing_labels.push(label),
        }
    }

    let cuts = discretize_mdl(&present_values, &present_labels, n_classes);

    // Bin histogram per cut interval, plus one bin for missing values.
    let mut bins = vec![vec![0usize; n_classes]; cuts.len() + 1];
    for (&value, &label) in present_values.iter().zip(&present_labels) {
        let bin = cuts.partition_point(|&c| value > c);
        bins[bin][label] += 1;
    }
    if !missing_labels.is_empty() {
        let mut missing_bin = vec![0usize; n_classes];
        for &label in &missing_labels {
            missing_bin[label] += 1;
        }
        bins.push(missing_bin);
    }

    let total = labels.len() as f64;
    let mut class_hist = vec![0usize; n_classes];
    for &label in labels {
        class_hist[label] += 1;
    }
    let class_entropy = entropy(&class_hist);

    let conditional: f64 = bins
        .iter()
        .map(|hist| {
            let size: usize = hist.iter().sum();
            (size as f64 / total) * entropy(hist)
        })
        .sum();

    // Guard against tiny negative rounding residue.
    (class_entropy - conditional).max(0.0)
}

/// The first `k` ranked ids, order preserved.
pub fn select_top(ranked: &[(String, f64)], k: usize) -> Vec<String> {
    ranked.iter().take(k).map(|(id, _)| id.clone()).collect()
}
