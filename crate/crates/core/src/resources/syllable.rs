//! Rule-driven syllable counting with an exceptions dictionary.
//!
//! The rule file is a small `key=value` grammar:
//!
//! ```text
//! # vowel characters (matched after lowercasing)
//! vowels=aeiouy
//! # whether adjacent vowels share a nucleus by default
//! merge_default=true
//! # vowel pairs that always split into two nuclei (hiatus)
//! split=ia,io,ua
//! # vowel pairs that always share a nucleus (diphthongs); only useful
//! # when merge_default=false
//! merge=ai,ei,au
//! # drop a trailing silent e (keeps consonant+le endings)
//! final_silent_e=true
//! ```
//!
//! The syllable count is the number of vowel nuclei: maximal vowel runs,
//! split inside a run wherever the pair rules say so. The exceptions
//! dictionary (TSV `form<TAB>count`) is always consulted first.

use std::collections::{HashMap, HashSet};

use super::ResourceError;

#[derive(Debug, Clone)]
pub struct Syllabifier {
    vowels: HashSet<char>,
    merge_default: bool,
    split_pairs: HashSet<(char, char)>,
    merge_pairs: HashSet<(char, char)>,
    final_silent_e: bool,
    exceptions: HashMap<String, u32>,
}

impl Syllabifier {
    pub fn from_rules(
        rules: &str,
        exceptions: HashMap<String, u32>,
        path: &str,
    ) -> Result<Self, ResourceError> {
        let mut vowels = HashSet::new();
        let mut merge_default = true;
        let mut split_pairs = HashSet::new();
        let mut merge_pairs = HashSet::new();
        let mut final_silent_e = false;

        for (line_no, raw) in rules.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |msg: String| ResourceError::Malformed {
                path: path.to_string(),
                line: line_no + 1,
                message: msg,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| malformed("expected key=value".into()))?;
            match key.trim() {
                "vowels" => vowels.extend(value.trim().chars()),
                "merge_default" => {
                    merge_default = value
                        .trim()
                        .parse()
                        .map_err(|_| malformed("merge_default must be true or false".into()))?
                }
                "final_silent_e" => {
                    final_silent_e = value
                        .trim()
                        .parse()
                        .map_err(|_| malformed("final_silent_e must be true or false".into()))?
                }
                "split" | "merge" => {
                    let target = if key.trim() == "split" {
                        &mut split_pairs
                    } else {
                        &mut merge_pairs
                    };
                    for pair in value.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                        let mut chars = pair.chars();
                        match (chars.next(), chars.next(), chars.next()) {
                            (Some(a), Some(b), None) => {
                                target.insert((a, b));
                            }
                            _ => {
                                return Err(malformed(format!(
                                    "pair `{pair}` must be exactly two characters"
                                )))
                            }
                        }
                    }
                }
                other => return Err(malformed(format!("unknown rule key `{other}`"))),
            }
        }

        if vowels.is_empty() {
            return Err(ResourceError::Malformed {
                path: path.to_string(),
                line: 0,
                message: "rule file defines no vowels".into(),
            });
        }

        Ok(Syllabifier {
            vowels,
            merge_default,
            split_pairs,
            merge_pairs,
            final_silent_e,
            exceptions,
        })
    }

    /// Count syllables in `form`. The form must contain at least one letter;
    /// callers are expected to filter punctuation and numbers.
    pub fn count(&self, form: &str) -> Result<u32, ResourceError> {
        if !form.chars().any(|c| c.is_alphabetic()) {
            return Err(ResourceError::NoLetters(form.to_string()));
        }
        let lower = form.to_lowercase();
        if let Some(&n) = self.exceptions.get(&lower) {
            return Ok(n.max(1));
        }
        Ok(self.count_by_rules(&lower).max(1))
    }

    fn count_by_rules(&self, lower: &str) -> u32 {
        let chars: Vec<char> = lower.chars().collect();
        let mut nuclei = 0u32;
        let mut prev: Option<char> = None;

        for &c in &chars {
            let is_vowel = self.vowels.contains(&c);
            if is_vowel {
                match prev {
                    Some(p) if self.vowels.contains(&p) => {
                        let pair = (p, c);
                        let split = if self.split_pairs.contains(&pair) {
                            true
                        } else if self.merge_pairs.contains(&pair) {
                            false
                        } else {
                            !self.merge_default
                        };
                        if split {
                            nuclei += 1;
                        }
                    }
                    _ => nuclei += 1,
                }
            }
            prev = Some(c);
        }

        if self.final_silent_e && nuclei > 1 {
            let n = chars.len();
            if chars[n - 1] == 'e' && !self.vowels.contains(&chars[n - 2]) {
                // consonant + "le" keeps its syllable (ta-ble, cas-tle)
                let keeps_le = chars[n - 2] == 'l'
                    && n >= 3
                    && !self.vowels.contains(&chars[n - 3]);
                if !keeps_le {
                    nuclei -= 1;
                }
            }
        }
        nuclei
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn english() -> Syllabifier {
        Syllabifier::from_rules(
            "vowels=aeiouy\nmerge_default=true\nfinal_silent_e=true\n",
            HashMap::new(),
            "test",
        )
        .unwrap()
    }

    fn spanish() -> Syllabifier {
        Syllabifier::from_rules(
            "vowels=aeiou\u{e1}\u{e9}\u{ed}\u{f3}\u{fa}\u{fc}\n\
             merge_default=true\n\
             split=aa,ae,ao,ea,ee,eo,oa,oe,oo,\u{ed}a,\u{ed}e,\u{ed}o,\u{fa}a,\u{fa}e,\u{fa}o,a\u{ed},e\u{ed},o\u{ed},a\u{fa},e\u{fa},o\u{fa}\n",
            HashMap::new(),
            "test",
        )
        .unwrap()
    }

    #[test]
    fn english_basics() {
        let s = english();
        assert_eq!(s.count("cat").unwrap(), 1);
        assert_eq!(s.count("banana").unwrap(), 3);
        assert_eq!(s.count("make").unwrap(), 1);
        assert_eq!(s.count("table").unwrap(), 2);
        assert_eq!(s.count("readable").unwrap(), 3);
    }

    #[test]
    fn spanish_hiatus_and_diphthongs() {
        let s = spanish();
        assert_eq!(s.count("murci\u{e9}lago").unwrap(), 4); // mur-cie-la-go
        assert_eq!(s.count("leer").unwrap(), 2); // le-er
        assert_eq!(s.count("quiero").unwrap(), 2); // quie-ro
        assert_eq!(s.count("d\u{ed}a").unwrap(), 2); // di-a
    }

    #[test]
    fn basque_split_by_default() {
        let s = Syllabifier::from_rules(
            "vowels=aeiou\nmerge_default=false\nmerge=ai,ei,oi,ui,au,eu\n",
            HashMap::new(),
            "test",
        )
        .unwrap();
        assert_eq!(s.count("mendia").unwrap(), 3); // men-di-a
        assert_eq!(s.count("euskara").unwrap(), 3); // eus-ka-ra
        assert_eq!(s.count("zientzia").unwrap(), 4); // zi-en-tzi-a
    }

    #[test]
    fn exceptions_win() {
        let mut exceptions = HashMap::new();
        exceptions.insert("colonel".to_string(), 2u32);
        let s = Syllabifier::from_rules(
            "vowels=aeiouy\nmerge_default=true\nfinal_silent_e=true\n",
            exceptions,
            "test",
        )
        .unwrap();
        assert_eq!(s.count("Colonel").unwrap(), 2);
    }

    #[test]
    fn no_letters_is_an_error() {
        assert!(matches!(
            english().count("123"),
            Err(ResourceError::NoLetters(_))
        ));
        assert!(english().count("it's").is_ok());
    }

    #[test]
    fn count_is_at_least_one() {
        // All consonants by this vowel set; still reports one syllable.
        assert_eq!(english().count("hmm").unwrap(), 1);
    }
}
