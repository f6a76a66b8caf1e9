//! Fayyad-Irani entropy-based discretization with the MDL stopping rule.
//!
//! Cut points are midpoints between adjacent distinct values; a split is
//! kept only when its information gain beats the minimum-description-length
//! cost of encoding it, recursively on both sides.

/// Shannon entropy in bits of a class-count histogram.
pub(crate) fn entropy(counts: &[usize]) -> f64 {
    let total: usize = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum()
}

fn class_histogram(labels: &[usize], n_classes: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n_classes];
    for &l in labels {
        counts[l] += 1;
    }
    counts
}

fn distinct_classes(counts: &[usize]) -> usize {
    counts.iter().filter(|&&c| c > 0).count()
}

/// Recursive minimum-entropy partitioning of `(value, label)` pairs.
/// Returns the accepted cut points, sorted ascending; an empty list means
/// no split survived the MDL criterion.
pub fn discretize_mdl(values: &[f64], labels: &[usize], n_classes: usize) -> Vec<f64> {
    assert_eq!(values.len(), labels.len());
    let mut pairs: Vec<(f64, usize)> = values
        .iter()
        .copied()
        .zip(labels.iter().copied())
        .filter(|(v, _)| v.is_finite())
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut cuts = Vec::new();
    split_recursive(&pairs, n_classes, &mut cuts);
    cuts.sort_by(f64::total_cmp);
    cuts
}

fn split_recursive(pairs: &[(f64, usize)], n_classes: usize, cuts: &mut Vec<f64>) {
    let n = pairs.len();
    if n < 2 {
        return;
    }
    let parent_counts = class_histogram(
        &pairs.iter().map(|(_, l)| *l).collect::<Vec<_>>(),
        n_classes,
    );
    let parent_entropy = entropy(&parent_counts);
    if parent_entropy == 0.0 {
        return; // already pure
    }

    // Scan every boundary between distinct adjacent values, tracking class
    // counts incrementally. The best cut minimizes weighted child entropy;
    // ties keep the smallest cut so results are order-independent.
    let mut left_counts = vec![0usize; n_classes];
    let mut best: Option<(f64, usize, f64)> = None; // (weighted entropy, split position, cut)
    for i in 0..n - 1 {
        left_counts[pairs[i].1] += 1;
        if pairs[i].0 == pairs[i + 1].0 {
            continue;
        }
        let right_counts: Vec<usize> = parent_counts
            .iter()
            .zip(&left_counts)
            .map(|(p, l)| p - l)
            .collect();
        let n_left = (i + 1) as f64;
        let n_right = (n - i - 1) as f64;
        let weighted = (n_left * entropy(&left_counts) + n_right * entropy(&right_counts))
            / n as f64;
        let cut = (pairs[i].0 + pairs[i + 1].0) / 2.0;
        if best.is_none_or(|(bw, _, _)| weighted < bw) {
            best = Some((weighted, i + 1, cut));
        }
    }
    let Some((weighted, split_at, cut)) = best else {
        return; // all values equal
    };

    let gain = parent_entropy - weighted;
    let left = &pairs[..split_at];
    let right = &pairs[split_at..];
    if !mdl_accepts(gain, pairs, left, right, n_classes) {
        return;
    }

    cuts.push(cut);
    split_recursive(left, n_classes, cuts);
    split_recursive(right, n_classes, cuts);
}

/// The Fayyad-Irani MDL criterion:
/// gain > log2(N-1)/N + [log2(3^k - 2) - (k E(S) - k1 E(S1) - k2 E(S2))] / N.
fn mdl_accepts(
    gain: f64,
    parent: &[(f64, usize)],
    left: &[(f64, usize)],
    right: &[(f64, usize)],
    n_classes: usize,
) -> bool {
    let hist = |part: &[(f64, usize)]| {
        class_histogram(&part.iter().map(|(_, l)| *l).collect::<Vec<_>>(), n_classes)
    };
    let parent_hist = hist(parent);
    let left_hist = hist(left);
    let right_hist = hist(right);

    let k = distinct_classes(&parent_hist) as f64;
    let k1 = distinct_classes(&left_hist) as f64;
    let k2 = distinct_classes(&right_hist) as f64;

    let n = parent.len() as f64;
    let delta = (3f64.powf(k) - 2.0).log2()
        - (k * entropy(&parent_hist) - k1 * entropy(&left_hist) - k2 * entropy(&right_hist));
    gain > ((n - 1.0).log2() + delta) / n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_split_is_accepted() {
        let cuts = discretize_mdl(&[1.0, 1.0, 2.0, 2.0], &[0, 0, 1, 1], 2);
        assert_eq!(cuts.len(), 1);
        assert!(cuts[0] > 1.0 && cuts[0] < 2.0);
    }

    #[test]
    fn constant_values_yield_no_cuts() {
        let cuts = discretize_mdl(&[3.0; 8], &[0, 1, 0, 1, 0, 1, 0, 1], 2);
        assert!(cuts.is_empty());
    }

    #[test]
    fn pure_labels_yield_no_cuts() {
        let cuts = discretize_mdl(&[1.0, 2.0, 3.0, 4.0], &[0, 0, 0, 0], 2);
        assert!(cuts.is_empty());
    }

    #[test]
    fn label_independent_values_are_rejected() {
        // A fixed interleaving the MDL criterion must refuse to split.
        let values: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let labels: Vec<usize> = (0..20).map(|i| i % 2).collect();
        assert!(discretize_mdl(&values, &labels, 2).is_empty());
    }

    #[test]
    fn entropy_in_bits() {
        assert_eq!(entropy(&[2, 2]), 1.0);
        assert_eq!(entropy(&[4, 0]), 0.0);
        assert!((entropy(&[2, 1]) - 0.9182958340544896).abs() < 1e-12);
    }
}
