//! Feature selection, SMO-trained linear SVM classification, stratified
//! cross-validation and cross-lingual feature intersection over labeled
//! feature datasets.

pub mod dataset;
pub mod discretize;
pub mod eval;
pub mod infogain;
pub mod intersect;
pub mod model;
pub mod smo;

pub use dataset::{DataRow, DatasetError, LabeledDataset};
pub use discretize::discretize_mdl;
pub use eval::{
    cross_validate, cross_validate_models, evaluate_on, holdout_split, stratified_folds,
    ClassMetrics, EvalError, EvalReport,
};
pub use infogain::{info_gain_rank, select_top};
pub use intersect::feature_intersection;
pub use model::{load_model, model_from_string, model_to_string, save_model, train_smo,
    ModelIoError, PairwiseSvm, SvmModel, TrainError};
pub use smo::{max_kkt_violation, solve_binary, BinarySvm, SmoParams};
