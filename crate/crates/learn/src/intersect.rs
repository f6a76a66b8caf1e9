//! Cross-lingual feature intersection.

use std::collections::BTreeSet;

use azter_core::{FeatureCatalog, Mode, ScoreKind};

/// Intersect per-language available feature id lists, returned in the first
/// list's order. In ratios mode absolute-kind ids are removed first.
pub fn feature_intersection(catalogs: &[Vec<String>], mode: Mode) -> Vec<String> {
    let Some((first, rest)) = catalogs.split_first() else {
        return Vec::new();
    };
    let feature_catalog = FeatureCatalog::standard();
    let rest_sets: Vec<BTreeSet<&String>> =
        rest.iter().map(|c| c.iter().collect()).collect();

    first
        .iter()
        .filter(|id| {
            mode == Mode::All
                || feature_catalog
                    .get(id)
                    .map(|def| def.kind != ScoreKind::Absolute)
                    .unwrap_or(true)
        })
        .filter(|id| rest_sets.iter().all(|set| set.contains(id)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn identical_catalogs_intersect_to_themselves() {
        let a = ids(&["num_words", "mtld", "simple_ttr"]);
        let out = feature_intersection(&[a.clone(), a.clone()], Mode::All);
        assert_eq!(out, a);
    }

    #[test]
    fn disjoint_catalogs_intersect_to_nothing() {
        let a = ids(&["num_words"]);
        let b = ids(&["mtld"]);
        assert!(feature_intersection(&[a, b], Mode::All).is_empty());
    }

    #[test]
    fn first_catalog_order_is_preserved() {
        let a = ids(&["mtld", "num_words", "simple_ttr"]);
        let b = ids(&["simple_ttr", "mtld"]);
        assert_eq!(
            feature_intersection(&[a, b], Mode::All),
            ids(&["mtld", "simple_ttr"])
        );
    }

    #[test]
    fn ratios_mode_removes_absolutes_first() {
        let a = ids(&["num_words", "mtld"]);
        let b = ids(&["num_words", "mtld"]);
        assert_eq!(
            feature_intersection(&[a, b], Mode::Ratios),
            ids(&["mtld"])
        );
    }
}
