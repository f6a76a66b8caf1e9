//! One-vs-one linear SVM ensemble over normalized, imputed features, plus
//! the versioned text model format.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use azter_core::FeatureVector;

use crate::dataset::LabeledDataset;
use crate::smo::{solve_binary, BinarySvm, SmoParams};

const MODEL_MAGIC: &str = "azter-svm-model v1";

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("training needs at least 2 classes, found {0}")]
    TooFewClasses(usize),
    #[error("class `{0}` has no rows")]
    EmptyClass(String),
}

#[derive(Debug, Error)]
pub enum ModelIoError {
    #[error("cannot access `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("not a model file (bad or missing version header)")]
    BadMagic,
    #[error("model file is corrupt: {0}")]
    Corrupt(String),
}

/// One pairwise classifier: positive decision votes `class_a`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseSvm {
    pub class_a: usize,
    pub class_b: usize,
    pub weights: Vec<f64>,
    pub bias: f64,
}

/// Trained ensemble with its preprocessing statistics: per-feature training
/// means for imputation and per-feature (min, max) for normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel {
    pub feature_ids: Vec<String>,
    pub classes: Vec<String>,
    pub imputation: Vec<f64>,
    pub normalization: Vec<(f64, f64)>,
    pub pairwise: Vec<PairwiseSvm>,
    pub params: SmoParams,
}

impl SvmModel {
    fn normalize(&self, column: usize, value: f64) -> f64 {
        let (min, max) = self.normalization[column];
        if max > min {
            (value - min) / (max - min)
        } else {
            0.0
        }
    }

    /// Feature vector -> normalized input row. Ids absent from the vector
    /// (or explicitly missing) take the training mean; extra ids in the
    /// vector are ignored.
    pub fn project(&self, v: &FeatureVector) -> Vec<f64> {
        self.feature_ids
            .iter()
            .enumerate()
            .map(|(col, id)| {
                let raw = v.value(id).unwrap_or(self.imputation[col]);
                self.normalize(col, raw)
            })
            .collect()
    }

    fn project_row(&self, values: &[Option<f64>]) -> Vec<f64> {
        values
            .iter()
            .enumerate()
            .map(|(col, v)| self.normalize(col, v.unwrap_or(self.imputation[col])))
            .collect()
    }

    /// One-vs-one majority vote. Returns the winning label and the vote
    /// count per class (in `classes` order); ties go to the earlier class.
    pub fn predict(&self, v: &FeatureVector) -> (String, Vec<usize>) {
        self.predict_projected(&self.project(v))
    }

    /// Predict a dataset row (values aligned to the model's feature ids).
    pub fn predict_values(&self, values: &[Option<f64>]) -> (String, Vec<usize>) {
        self.predict_projected(&self.project_row(values))
    }

    fn predict_projected(&self, x: &[f64]) -> (String, Vec<usize>) {
        let mut votes = vec![0usize; self.classes.len()];
        for pair in &self.pairwise {
            let score: f64 = pair
                .weights
                .iter()
                .zip(x)
                .map(|(w, v)| w * v)
                .sum::<f64>()
                + pair.bias;
            // A decision exactly on the hyperplane votes the first class.
            if score >= 0.0 {
                votes[pair.class_a] += 1;
            } else {
                votes[pair.class_b] += 1;
            }
        }
        let winner = votes
            .iter()
            .enumerate()
            .max_by(|(ia, va), (ib, vb)| va.cmp(vb).then(ib.cmp(ia)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        (self.classes[winner].clone(), votes)
    }

    /// Fraction of dataset rows the model labels correctly, in percent.
    pub fn accuracy(&self, ds: &LabeledDataset) -> f64 {
        if ds.rows.is_empty() {
            return 0.0;
        }
        let correct = ds
            .rows
            .iter()
            .filter(|r| self.predict_values(&r.values).0 == r.label)
            .count();
        100.0 * correct as f64 / ds.rows.len() as f64
    }
}

/// Train the one-vs-one ensemble: impute missing values with training
/// column means, min-max normalize with training extrema, then solve each
/// class pair with SMO.
pub fn train_smo(ds: &LabeledDataset, params: SmoParams) -> Result<SvmModel, TrainError> {
    if ds.classes.len() < 2 {
        return Err(TrainError::TooFewClasses(ds.classes.len()));
    }
    for (class, count) in ds.class_counts() {
        if count == 0 {
            return Err(TrainError::EmptyClass(class));
        }
    }

    let n_features = ds.feature_ids.len();
    let mut imputation = vec![0.0f64; n_features];
    for col in 0..n_features {
        let observed: Vec<f64> = ds.rows.iter().filter_map(|r| r.values[col]).collect();
        if !observed.is_empty() {
            imputation[col] = observed.iter().sum::<f64>() / observed.len() as f64;
        }
    }

    let imputed: Vec<Vec<f64>> = ds
        .rows
        .iter()
        .map(|r| {
            r.values
                .iter()
                .enumerate()
                .map(|(col, v)| v.unwrap_or(imputation[col]))
                .collect()
        })
        .collect();

    let mut normalization = vec![(0.0f64, 0.0f64); n_features];
    for (col, stats) in normalization.iter_mut().enumerate() {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for row in &imputed {
            min = min.min(row[col]);
            max = max.max(row[col]);
        }
        *stats = if min.is_finite() { (min, max) } else { (0.0, 0.0) };
    }
    let normalize = |col: usize, v: f64| {
        let (min, max) = normalization[col];
        if max > min {
            (v - min) / (max - min)
        } else {
            0.0
        }
    };
    let normalized: Vec<Vec<f64>> = imputed
        .iter()
        .map(|row| row.iter().enumerate().map(|(c, &v)| normalize(c, v)).collect())
        .collect();

    let class_of: Vec<usize> = ds
        .rows
        .iter()
        .map(|r| ds.class_index(&r.label).expect("label in classes"))
        .collect();

    let mut pairwise = Vec::new();
    for a in 0..ds.classes.len() {
        for b in (a + 1)..ds.classes.len() {
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for (row, &class) in normalized.iter().zip(&class_of) {
                if class == a {
                    xs.push(row.clone());
                    ys.push(1.0);
                } else if class == b {
                    xs.push(row.clone());
                    ys.push(-1.0);
                }
            }
            let BinarySvm { weights, bias, .. } = solve_binary(&xs, &ys, params);
            pairwise.push(PairwiseSvm {
                class_a: a,
                class_b: b,
                weights,
                bias,
            });
        }
    }

    Ok(SvmModel {
        feature_ids: ds.feature_ids.clone(),
        classes: ds.classes.clone(),
        imputation,
        normalization,
        pairwise,
        params,
    })
}

/// Serialize the model to its versioned text format. Floats print in
/// shortest round-trip form, so save/load preserves predictions exactly.
pub fn model_to_string(m: &SvmModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MODEL_MAGIC}");
    let _ = writeln!(out, "classes\t{}", m.classes.join("\t"));
    let _ = writeln!(out, "features\t{}", m.feature_ids.join("\t"));
    let _ = writeln!(
        out,
        "hyperparams\tc={}\ttolerance={}\tepsilon={}",
        m.params.c, m.params.tolerance, m.params.epsilon
    );
    let join = |vs: &[f64]| {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("\t")
    };
    let _ = writeln!(out, "imputation\t{}", join(&m.imputation));
    let _ = writeln!(
        out,
        "minima\t{}",
        join(&m.normalization.iter().map(|(lo, _)| *lo).collect::<Vec<_>>())
    );
    let _ = writeln!(
        out,
        "maxima\t{}",
        join(&m.normalization.iter().map(|(_, hi)| *hi).collect::<Vec<_>>())
    );
    for pair in &m.pairwise {
        let _ = writeln!(
            out,
            "pair\t{}\t{}\t{}",
            m.classes[pair.class_a], m.classes[pair.class_b], pair.bias
        );
        let _ = writeln!(out, "weights\t{}", join(&pair.weights));
    }
    let _ = writeln!(out, "end");
    out
}

pub fn save_model(m: &SvmModel, path: &Path) -> Result<(), ModelIoError> {
    std::fs::write(path, model_to_string(m)).map_err(|source| ModelIoError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_model(path: &Path) -> Result<SvmModel, ModelIoError> {
    let text = std::fs::read_to_string(path).map_err(|source| ModelIoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    model_from_string(&text)
}

pub fn model_from_string(text: &str) -> Result<SvmModel, ModelIoError> {
    let corrupt = |msg: &str| ModelIoError::Corrupt(msg.to_string());
    let mut lines = text.lines();
    if lines.next() != Some(MODEL_MAGIC) {
        return Err(ModelIoError::BadMagic);
    }

    let mut classes: Vec<String> = Vec::new();
    let mut feature_ids: Vec<String> = Vec::new();
    let mut params = SmoParams::default();
    let mut imputation: Option<Vec<f64>> = None;
    let mut minima: Option<Vec<f64>> = None;
    let mut maxima: Option<Vec<f64>> = None;
    let mut pairwise: Vec<PairwiseSvm> = Vec::new();
    let mut pending_pair: Option<(usize, usize, f64)> = None;
    let mut saw_end = false;

    let parse_floats = |fields: &[&str]| -> Result<Vec<f64>, ModelIoError> {
        fields
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| ModelIoError::Corrupt(format!("bad float `{f}`")))
            })
            .collect()
    };

    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        match fields[0] {
            "classes" => classes = fields[1..].iter().map(|s| s.to_string()).collect(),
            "features" => feature_ids = fields[1..].iter().map(|s| s.to_string()).collect(),
            "hyperparams" => {
                for kv in &fields[1..] {
                    let (k, v) = kv.split_once('=').ok_or_else(|| corrupt("bad hyperparam"))?;
                    let v: f64 = v.parse().map_err(|_| corrupt("bad hyperparam value"))?;
                    match k {
                        "c" => params.c = v,
                        "tolerance" => params.tolerance = v,
                        "epsilon" => params.epsilon = v,
                        _ => return Err(corrupt("unknown hyperparam")),
                    }
                }
            }
            "imputation" => imputation = Some(parse_floats(&fields[1..])?),
            "minima" => minima = Some(parse_floats(&fields[1..])?),
            "maxima" => maxima = Some(parse_floats(&fields[1..])?),
            "pair" => {
                if fields.len() != 4 {
                    return Err(corrupt("pair line needs two classes and a bias"));
                }
                let a = classes
                    .iter()
                    .position(|c| c == fields[1])
                    .ok_or_else(|| corrupt("pair names unknown class"))?;
                let b = classes
                    .iter()
                    .position(|c| c == fields[2])
                    .ok_or_else(|| corrupt("pair names unknown class"))?;
                let bias: f64 = fields[3].parse().map_err(|_| corrupt("bad bias"))?;
                pending_pair = Some((a, b, bias));
            }
            "weights" => {
                let (class_a, class_b, bias) =
                    pending_pair.take().ok_or_else(|| corrupt("weights without pair"))?;
                let weights = parse_floats(&fields[1..])?;
                if weights.len() != feature_ids.len() {
                    return Err(corrupt("weight vector arity mismatch"));
                }
                pairwise.push(PairwiseSvm {
                    class_a,
                    class_b,
                    weights,
                    bias,
                });
            }
            "end" => {
                saw_end = true;
                break;
            }
            other => return Err(ModelIoError::Corrupt(format!("unknown block `{other}`"))),
        }
    }

    if !saw_end {
        return Err(corrupt("truncated file (missing end marker)"));
    }
    if pending_pair.is_some() {
        return Err(corrupt("pair without weights"));
    }
    let imputation = imputation.ok_or_else(|| corrupt("missing imputation block"))?;
    let minima = minima.ok_or_else(|| corrupt("missing minima block"))?;
    let maxima = maxima.ok_or_else(|| corrupt("missing maxima block"))?;
    if classes.len() < 2 {
        return Err(corrupt("fewer than two classes"));
    }
    let expected_pairs = classes.len() * (classes.len() - 1) / 2;
    if pairwise.len() != expected_pairs {
        return Err(corrupt("wrong number of pairwise classifiers"));
    }
    if imputation.len() != feature_ids.len()
        || minima.len() != feature_ids.len()
        || maxima.len() != feature_ids.len()
    {
        return Err(corrupt("statistics arity mismatch"));
    }

    Ok(SvmModel {
        feature_ids,
        classes,
        imputation,
        normalization: minima.into_iter().zip(maxima).collect(),
        pairwise,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::DataRow;

    fn two_class_ds() -> LabeledDataset {
        let rows = vec![
            ((0.0, 0.0), "low"),
            ((0.0, 1.0), "low"),
            ((5.0, 5.0), "high"),
            ((5.0, 6.0), "high"),
        ]
        .into_iter()
        .enumerate()
        .map(|(i, ((a, b), label))| DataRow {
            doc_id: format!("d{i}"),
            values: vec![Some(a), Some(b)],
            label: label.to_string(),
        })
        .collect();
        LabeledDataset::new(vec!["f1".into(), "f2".into()], rows).unwrap()
    }

    #[test]
    fn separable_training_reaches_full_accuracy() {
        let ds = two_class_ds();
        let model = train_smo(&ds, SmoParams::default()).unwrap();
        assert_eq!(model.accuracy(&ds), 100.0);
    }

    #[test]
    fn single_class_is_rejected() {
        let rows = vec![DataRow {
            doc_id: "d".into(),
            values: vec![Some(1.0)],
            label: "only".into(),
        }];
        let ds = LabeledDataset::new(vec!["f".into()], rows).unwrap();
        assert!(matches!(
            train_smo(&ds, SmoParams::default()),
            Err(TrainError::TooFewClasses(1))
        ));
    }

    #[test]
    fn scaling_all_features_leaves_predictions_unchanged() {
        let ds = two_class_ds();
        let scaled_rows: Vec<DataRow> = ds
            .rows
            .iter()
            .map(|r| DataRow {
                doc_id: r.doc_id.clone(),
                values: r.values.iter().map(|v| v.map(|x| x * 10.0)).collect(),
                label: r.label.clone(),
            })
            .collect();
        let scaled = LabeledDataset::new(ds.feature_ids.clone(), scaled_rows).unwrap();

        let m1 = train_smo(&ds, SmoParams::default()).unwrap();
        let m2 = train_smo(&scaled, SmoParams::default()).unwrap();
        for (orig, big) in ds.rows.iter().zip(&scaled.rows) {
            assert_eq!(
                m1.predict_values(&orig.values).0,
                m2.predict_values(&big.values).0
            );
        }
    }

    #[test]
    fn missing_values_impute_to_training_means() {
        let ds = two_class_ds();
        let model = train_smo(&ds, SmoParams::default()).unwrap();
        // f1 mean = 2.5: the imputed row should predict like (2.5, 5.5).
        let mut fv = FeatureVector::new();
        fv.insert("f2", Some(5.5));
        let mut complete = FeatureVector::new();
        complete.insert("f1", Some(2.5));
        complete.insert("f2", Some(5.5));
        assert_eq!(model.predict(&fv).0, model.predict(&complete).0);
    }

    #[test]
    fn extra_feature_ids_are_ignored() {
        let ds = two_class_ds();
        let model = train_smo(&ds, SmoParams::default()).unwrap();
        let mut fv = FeatureVector::new();
        fv.insert("f1", Some(5.0));
        fv.insert("f2", Some(5.0));
        fv.insert("unrelated", Some(123.0));
        assert_eq!(model.predict(&fv).0, "high");
    }

    #[test]
    fn save_load_round_trip_predicts_identically() {
        let ds = two_class_ds();
        let model = train_smo(&ds, SmoParams::default()).unwrap();
        let text = model_to_string(&model);
        let loaded = model_from_string(&text).unwrap();
        assert_eq!(model, loaded);
        for row in &ds.rows {
            assert_eq!(
                model.predict_values(&row.values),
                loaded.predict_values(&row.values)
            );
        }
    }

    #[test]
    fn truncated_model_is_rejected() {
        let ds = two_class_ds();
        let model = train_smo(&ds, SmoParams::default()).unwrap();
        let text = model_to_string(&model);
        let truncated = &text[..text.len() / 2];
        assert!(model_from_string(truncated).is_err());
    }

    #[test]
    fn wrong_magic_is_rejected() {
        assert!(matches!(
            model_from_string("something else\nend\n"),
            Err(ModelIoError::BadMagic)
        ));
    }

    #[test]
    fn tie_votes_resolve_to_earlier_class() {
        // Hand-built three-class model with a vote cycle: a beats b, b
        // beats c, c beats a -> every class gets one vote, "a" wins.
        let model = SvmModel {
            feature_ids: vec!["f".into()],
            classes: vec!["a".into(), "b".into(), "c".into()],
            imputation: vec![0.0],
            normalization: vec![(0.0, 1.0)],
            pairwise: vec![
                PairwiseSvm {
                    class_a: 0,
                    class_b: 1,
                    weights: vec![0.0],
                    bias: 1.0,
                },
                PairwiseSvm {
                    class_a: 0,
                    class_b: 2,
                    weights: vec![0.0],
                    bias: -1.0,
                },
                PairwiseSvm {
                    class_a: 1,
                    class_b: 2,
                    weights: vec![0.0],
                    bias: 1.0,
                },
            ],
            params: SmoParams::default(),
        };
        let fv = FeatureVector::new();
        let (label, votes) = model.predict(&fv);
        assert_eq!(votes, vec![1, 1, 1]);
        assert_eq!(label, "a");
    }

    #[test]
    fn boundary_decision_votes_first_class_of_pair() {
        let model = SvmModel {
            feature_ids: vec!["f".into()],
            classes: vec!["x".into(), "y".into()],
            imputation: vec![0.0],
            normalization: vec![(0.0, 1.0)],
            pairwise: vec![PairwiseSvm {
                class_a: 0,
                class_b: 1,
                weights: vec![0.0],
                bias: 0.0,
            }],
            params: SmoParams::default(),
        };
        let (label, _) = model.predict(&FeatureVector::new());
        assert_eq!(label, "x");
    }
}
