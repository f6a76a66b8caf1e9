//! Structural validation of parsed documents. Violations are data, not
//! failures: an empty list means every invariant holds.

use std::collections::HashSet;
use std::fmt;

use crate::model::{Document, Sentence};

/// One broken invariant, locating the sentence (0-based document order) and
/// naming the rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub sentence: usize,
    pub sent_id: Option<String>,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    EmptyParagraph { paragraph: usize },
    EmptySentence,
    BadIndex { index: usize },
    DuplicateIndex { index: usize },
    DanglingHead { index: usize, head: usize },
    NoRoot,
    MultipleRoots { count: usize },
    Cycle { index: usize },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::EmptyParagraph { paragraph } => write!(f, "paragraph {paragraph} is empty"),
            Rule::EmptySentence => write!(f, "sentence has no words"),
            Rule::BadIndex { index } => write!(f, "word index {index} is not >= 1"),
            Rule::DuplicateIndex { index } => write!(f, "duplicate word index {index}"),
            Rule::DanglingHead { index, head } => {
                write!(f, "word {index} points at nonexistent head {head}")
            }
            Rule::NoRoot => write!(f, "no word has head 0"),
            Rule::MultipleRoots { count } => write!(f, "multiple roots: {count} words have head 0"),
            Rule::Cycle { index } => write!(f, "head cycle through word {index}"),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sent_id {
            Some(id) => write!(f, "sentence {} ({}): {}", self.sentence, id, self.rule),
            None => write!(f, "sentence {}: {}", self.sentence, self.rule),
        }
    }
}

/// Check every structural invariant of the document. Returns an empty list
/// iff the document is well-formed.
pub fn validate_document(doc: &Document) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut sent_no = 0usize;

    for (p_idx, paragraph) in doc.paragraphs.iter().enumerate() {
        if paragraph.sentences.is_empty() {
            violations.push(Violation {
                sentence: sent_no,
                sent_id: None,
                rule: Rule::EmptyParagraph { paragraph: p_idx },
            });
        }
        for sentence in &paragraph.sentences {
            validate_sentence(sentence, sent_no, &mut violations);
            sent_no += 1;
        }
    }
    violations
}

fn validate_sentence(sentence: &Sentence, sent_no: usize, out: &mut Vec<Violation>) {
    let push = |out: &mut Vec<Violation>, rule: Rule| {
        out.push(Violation {
            sentence: sent_no,
            sent_id: sentence.sent_id.clone(),
            rule,
        })
    };

    if sentence.words.is_empty() {
        push(out, Rule::EmptySentence);
        return;
    }

    let mut indices = HashSet::new();
    for w in &sentence.words {
        if w.index < 1 {
            push(out, Rule::BadIndex { index: w.index });
        } else if !indices.insert(w.index) {
            push(out, Rule::DuplicateIndex { index: w.index });
        }
    }

    let mut structural_ok = true;
    for w in &sentence.words {
        if w.head != 0 && !indices.contains(&w.head) {
            push(
                out,
                Rule::DanglingHead {
                    index: w.index,
                    head: w.head,
                },
            );
            structural_ok = false;
        }
    }

    let roots: Vec<usize> = sentence
        .words
        .iter()
        .filter(|w| w.head == 0)
        .map(|w| w.index)
        .collect();
    match roots.len() {
        0 => {
            push(out, Rule::NoRoot);
            structural_ok = false;
        }
        1 => {}
        n => {
            push(out, Rule::MultipleRoots { count: n });
            structural_ok = false;
        }
    }

    if !structural_ok {
        // Cycle/connectivity checks need resolvable heads and a single root.
        return;
    }

    // Walk each word's head chain. With one root and resolvable heads, every
    // chain either reaches the root (connected) or revisits a word (cycle);
    // a chain longer than the sentence proves the latter.
    let mut reported_cycle = false;
    for w in &sentence.words {
        let mut hops = 0usize;
        let mut at = w.index;
        loop {
            let Some(word) = sentence.word(at) else { break };
            if word.head == 0 {
                break;
            }
            at = word.head;
            hops += 1;
            if hops > sentence.words.len() {
                if !reported_cycle {
                    push(out, Rule::Cycle { index: w.index });
                    reported_cycle = true;
                }
                break;
            }
        }
    }
}
