//! Linguistic indicator extraction over Universal-Dependencies-annotated
//! documents.
//!
//! The pipeline: parse CoNLL-U into the [`Document`] model, load a
//! per-language [`LanguageProfile`] from a resource manifest, then compute
//! the indicator catalog with [`features::compute_all`].

pub mod catalog;
pub mod conllu;
pub mod features;
pub mod model;
pub mod resources;
pub mod synth;
pub mod validate;

pub use catalog::{FeatureCatalog, FeatureDef, FeatureGroup, Mode, ResourceKind, ScoreKind};
pub use conllu::{clean_text, parse_conllu, to_conllu, ParseError};
pub use features::{compute_all, FeatureVector};
pub use model::{Document, Feats, Paragraph, Sentence, Upos, Word};
pub use resources::{LanguageProfile, ResourceError, ResourceManifest};
pub use validate::{validate_document, Violation};
