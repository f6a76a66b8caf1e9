//! Labeled feature datasets: rows of (doc id, values, class label) aligned
//! to an ordered feature id list.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("csv error in `{path}`: {source}")]
    Csv { path: String, source: csv::Error },
    #[error("{path}: row {row} has {found} values, header has {expected}")]
    Arity {
        path: String,
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("{path}: row {row}: `{value}` is not a number")]
    BadValue {
        path: String,
        row: usize,
        value: String,
    },
    #[error("features file has no `doc_id` column")]
    MissingDocIdColumn,
    #[error("document `{0}` has no label")]
    UnlabeledRow(String),
    #[error("labels file `{path}`, line {line}: expected `doc_id<TAB>label`")]
    BadLabelLine { path: String, line: usize },
    #[error("dataset has empty rows")]
    Empty,
    #[error("rows have inconsistent arity")]
    InconsistentArity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataRow {
    pub doc_id: String,
    /// Values aligned to `feature_ids`; `None` is the missing marker.
    pub values: Vec<Option<f64>>,
    pub label: String,
}

/// Rows of (doc id, feature values, class label). Class labels are kept in
/// sorted order so every derived artifact is independent of row order.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub feature_ids: Vec<String>,
    pub rows: Vec<DataRow>,
    pub classes: Vec<String>,
}

impl LabeledDataset {
    pub fn new(feature_ids: Vec<String>, rows: Vec<DataRow>) -> Result<Self, DatasetError> {
        if rows.is_empty() {
            return Err(DatasetError::Empty);
        }
        if rows.iter().any(|r| r.values.len() != feature_ids.len()) {
            return Err(DatasetError::InconsistentArity);
        }
        let classes: BTreeSet<String> = rows.iter().map(|r| r.label.clone()).collect();
        Ok(LabeledDataset {
            feature_ids,
            rows,
            classes: classes.into_iter().collect(),
        })
    }

    /// Load a feature CSV (`doc_id` column plus one column per feature id;
    /// empty cells are missing values) and a labels TSV (`doc_id<TAB>label`).
    pub fn from_csv(features: &Path, labels: &Path) -> Result<Self, DatasetError> {
        let labels = load_labels(labels)?;

        let features_path = features.display().to_string();
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_path(features)
            .map_err(|source| DatasetError::Csv {
                path: features_path.clone(),
                source,
            })?;

        let header = reader
            .headers()
            .map_err(|source| DatasetError::Csv {
                path: features_path.clone(),
                source,
            })?
            .clone();
        let mut columns = header.iter();
        if columns.next() != Some("doc_id") {
            return Err(DatasetError::MissingDocIdColumn);
        }
        let feature_ids: Vec<String> = columns.map(String::from).collect();

        let mut rows = Vec::new();
        for (row_no, record) in reader.records().enumerate() {
            let record = record.map_err(|source| DatasetError::Csv {
                path: features_path.clone(),
                source,
            })?;
            if record.len() != feature_ids.len() + 1 {
                return Err(DatasetError::Arity {
                    path: features_path.clone(),
                    row: row_no + 2,
                    found: record.len(),
                    expected: feature_ids.len() + 1,
                });
            }
            let doc_id = record[0].to_string();
            let values: Result<Vec<Option<f64>>, DatasetError> = record
                .iter()
                .skip(1)
                .map(|cell| {
                    if cell.is_empty() {
                        Ok(None)
                    } else {
                        cell.parse::<f64>().map(Some).map_err(|_| {
                            DatasetError::BadValue {
                                path: features_path.clone(),
                                row: row_no + 2,
                                value: cell.to_string(),
                            }
                        })
                    }
                })
                .collect();
            let label = labels
                .get(&doc_id)
                .ok_or_else(|| DatasetError::UnlabeledRow(doc_id.clone()))?
                .clone();
            rows.push(DataRow {
                doc_id,
                values: values?,
                label,
            });
        }

        LabeledDataset::new(feature_ids, rows)
    }

    /// Rows at `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> LabeledDataset {
        let rows = indices.iter().map(|&i| self.rows[i].clone()).collect();
        LabeledDataset {
            feature_ids: self.feature_ids.clone(),
            rows,
            classes: self.classes.clone(),
        }
    }

    /// Project onto a subset of feature ids (ids not present are dropped).
    pub fn restrict_features(&self, ids: &[String]) -> LabeledDataset {
        let positions: Vec<usize> = ids
            .iter()
            .filter_map(|id| self.feature_ids.iter().position(|f| f == id))
            .collect();
        let feature_ids: Vec<String> = positions
            .iter()
            .map(|&p| self.feature_ids[p].clone())
            .collect();
        let rows = self
            .rows
            .iter()
            .map(|r| DataRow {
                doc_id: r.doc_id.clone(),
                values: positions.iter().map(|&p| r.values[p]).collect(),
                label: r.label.clone(),
            })
            .collect();
        LabeledDataset {
            feature_ids,
            rows,
            classes: self.classes.clone(),
        }
    }

    pub fn class_counts(&self) -> Vec<(String, usize)> {
        self.classes
            .iter()
            .map(|c| {
                (
                    c.clone(),
                    self.rows.iter().filter(|r| &r.label == c).count(),
                )
            })
            .collect()
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c == label)
    }
}

fn load_labels(path: &Path) -> Result<HashMap<String, String>, DatasetError> {
    let text = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut map = HashMap::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (doc_id, label) = line.split_once('\t').ok_or(DatasetError::BadLabelLine {
            path: path.display().to_string(),
            line: line_no + 1,
        })?;
        map.insert(doc_id.trim().to_string(), label.trim().to_string());
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;
    use tempfile::TempDir;

    #[test]
    fn csv_round_trip_with_missing_cells() {
        let dir = TempDir::new().unwrap();
        let features = dir.path().join("f.csv");
        let labels = dir.path().join("l.tsv");
        fs::write(&features, "doc_id,a,b\nd1,1.5,\nd2,,2.5\n").unwrap();
        fs::write(&labels, "d1\tsimple\nd2\tcomplex\n").unwrap();
        let ds = LabeledDataset::from_csv(&features, &labels).unwrap();
        assert_eq!(ds.feature_ids, ["a", "b"]);
        assert_eq!(ds.rows[0].values, [Some(1.5), None]);
        assert_eq!(ds.rows[1].values, [None, Some(2.5)]);
        assert_eq!(ds.classes, ["complex", "simple"]);
    }

    #[test]
    fn unlabeled_row_is_an_error_naming_the_doc() {
        let dir = TempDir::new().unwrap();
        let features = dir.path().join("f.csv");
        let labels = dir.path().join("l.tsv");
        fs::write(&features, "doc_id,a\nmystery,1\n").unwrap();
        fs::write(&labels, "other\tsimple\n").unwrap();
        match LabeledDataset::from_csv(&features, &labels) {
            Err(DatasetError::UnlabeledRow(id)) => assert_eq!(id, "mystery"),
            other => panic!("expected unlabeled-row error, got {other:?}"),
        }
    }

    #[test]
    fn restrict_features_projects_columns() {
        let ds = LabeledDataset::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![DataRow {
                doc_id: "d".into(),
                values: vec![Some(1.0), Some(2.0), Some(3.0)],
                label: "x".into(),
            }],
        )
        .unwrap();
        let narrowed = ds.restrict_features(&["c".to_string(), "a".to_string()]);
        assert_eq!(narrowed.feature_ids, ["c", "a"]);
        assert_eq!(narrowed.rows[0].values, [Some(3.0), Some(1.0)]);
    }
}
