//! CoNLL-U parsing and raw-text cleanup.
//!
//! Input is the standard 10-column tab-separated format: ID FORM LEMMA UPOS
//! XPOS FEATS HEAD DEPREL DEPS MISC, sentences separated by blank lines,
//! comments starting with `#`. `# newpar` opens a new paragraph; without any
//! `# newpar` the whole document is a single paragraph.

use std::io::{BufRead, BufReader, Read};

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::model::{Document, Feats, Paragraph, Sentence, Upos, Word};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: non-integer head field `{value}`")]
    BadHead { line: usize, value: String },
    #[error("line {line}: non-integer token id `{value}`")]
    BadId { line: usize, value: String },
    #[error("document `{0}` contains no sentences")]
    EmptyDocument(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse a CoNLL-U stream into a [`Document`].
///
/// Multiword-token range lines (`a-b`) are kept only as the surface text of
/// the syntactic words they cover; empty nodes (`a.b`) are skipped entirely.
pub fn parse_conllu<R: Read>(stream: R, doc_id: &str) -> Result<Document, ParseError> {
    let reader = BufReader::new(stream);

    let mut paragraphs: Vec<Paragraph> = Vec::new();
    let mut current: Vec<Sentence> = Vec::new();
    let mut sentence = Sentence::default();
    let mut pending_newpar = false;

    let finish_sentence =
        |sentence: &mut Sentence, current: &mut Vec<Sentence>, paragraphs: &mut Vec<Paragraph>, pending: &mut bool| {
            if sentence.words.is_empty() {
                return;
            }
            if *pending && !current.is_empty() {
                paragraphs.push(Paragraph {
                    sentences: std::mem::take(current),
                });
            }
            *pending = false;
            current.push(std::mem::take(sentence));
        };

    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line_no + 1;
        let trimmed = line.trim_end_matches(['\r', '\n']);

        if trimmed.is_empty() {
            finish_sentence(&mut sentence, &mut current, &mut paragraphs, &mut pending_newpar);
            continue;
        }

        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if comment == "newpar" || comment.starts_with("newpar ") {
                pending_newpar = true;
            } else if let Some(id) = comment.strip_prefix("sent_id") {
                let id = id.trim_start_matches([' ', '=']).trim();
                if !id.is_empty() {
                    sentence.sent_id = Some(id.to_string());
                }
            }
            // `# newdoc` and other comments carry no structure we need.
            continue;
        }

        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() != 10 {
            return Err(ParseError::ColumnCount {
                line: line_no,
                found: cols.len(),
            });
        }

        let id = cols[0];
        if id.contains('-') {
            // Multiword token range: surface only, not a syntactic word.
            continue;
        }
        if id.contains('.') {
            // Empty node (enhanced dependencies): skipped.
            continue;
        }
        let index: usize = id.parse().map_err(|_| ParseError::BadId {
            line: line_no,
            value: id.to_string(),
        })?;
        let head: usize = cols[6].parse().map_err(|_| ParseError::BadHead {
            line: line_no,
            value: cols[6].to_string(),
        })?;

        let form = cols[1].to_string();
        let lemma = if cols[2] == "_" {
            form.clone()
        } else {
            cols[2].to_string()
        };
        // Unknown or empty UPOS falls back to X rather than failing the parse.
        let upos = cols[3].parse::<Upos>().unwrap_or(Upos::X);

        sentence.words.push(Word {
            index,
            form,
            lemma,
            upos,
            feats: Feats::parse(cols[5]),
            head,
            deprel: cols[7].to_string(),
            misc: cols[9].to_string(),
        });
    }
    finish_sentence(&mut sentence, &mut current, &mut paragraphs, &mut pending_newpar);

    if !current.is_empty() {
        paragraphs.push(Paragraph { sentences: current });
    }

    if paragraphs.iter().all(|p| p.sentences.is_empty()) {
        return Err(ParseError::EmptyDocument(doc_id.to_string()));
    }

    Ok(Document {
        doc_id: doc_id.to_string(),
        paragraphs,
    })
}

/// Serialize a document back to CoNLL-U. Paragraph boundaries come out as
/// `# newpar` comments, so `parse_conllu` reads the result back into an
/// equal document.
pub fn to_conllu(doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("# newdoc id = {}\n", doc.doc_id));
    for paragraph in &doc.paragraphs {
        out.push_str("# newpar\n");
        for sentence in &paragraph.sentences {
            if let Some(id) = &sentence.sent_id {
                out.push_str(&format!("# sent_id = {id}\n"));
            }
            for w in &sentence.words {
                let feats = if w.feats.is_empty() {
                    "_".to_string()
                } else {
                    w.feats
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join("|")
                };
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t{}\n",
                    w.index, w.form, w.lemma, w.upos, feats, w.head, w.deprel, w.misc
                ));
            }
            out.push('\n');
        }
    }
    out
}

/// Clean raw text before it goes to an external parser: drop control
/// characters (keeping newline and tab), normalize to NFC, and collapse runs
/// of blank lines into a single blank line.
pub fn clean_text(raw: &str) -> String {
    let stripped: String = raw
        .chars()
        .filter(|&c| c == '\n' || c == '\t' || !c.is_control())
        .nfc()
        .collect();

    let mut out = String::with_capacity(stripped.len());
    let mut newline_run = 0usize;
    for c in stripped.chars() {
        if c == '\n' {
            newline_run += 1;
            if newline_run <= 2 {
                out.push(c);
            }
        } else {
            newline_run = 0;
            out.push(c);
        }
    }
    out
}
