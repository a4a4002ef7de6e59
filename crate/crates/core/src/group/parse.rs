//! The line-oriented group definition format.
//!
//! ```text
//! degree 4
//! gen a (1 2 3 4)
//! gen b (1 2)
//! subgroup V = a^2, b*a*b*a^-1
//! ```
//!
//! `#` starts a comment. A subgroup is given by a comma-separated list of
//! words; a word is a `*`-separated product of generator names, each with an
//! optional integer exponent `^k`. The word `1` is the identity.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::perm::{parse_cycles, Perm};
use super::{generate_subgroup, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// One factor `name^exponent` of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub exponent: i64,
}

pub type Word = Vec<Factor>;

/// The syntax tree of a group file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<(String, Perm)>,
    pub subgroups: Vec<(String, Vec<Word>)>,
}

/// A group file evaluated into a concrete group with named elements and
/// subgroups.
#[derive(Clone, Debug)]
pub struct ParsedGroup {
    pub group: Arc<FiniteGroup>,
    pub generators: BTreeMap<String, u32>,
    pub subgroups: BTreeMap<String, Subgroup>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Parses a word such as `a*b^-1*a^2`.
pub fn parse_word(text: &str) -> std::result::Result<Word, String> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text == "1" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err("empty word".into());
    }
    text.split('*')
        .map(|factor| {
            let (name, exponent) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| format!("bad exponent {e:?} in {factor:?}"))?,
                ),
                None => (factor, 1),
            };
            if !is_name(name) {
                return Err(format!("bad generator name {name:?}"));
            }
            Ok(Factor {
                name: name.to_string(),
                exponent,
            })
        })
        .collect()
}

/// Parses a comma-separated list of words.
pub fn parse_word_list(text: &str) -> std::result::Result<Vec<Word>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_word).collect()
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let mut file = GroupFile::default();
    let mut degree: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = line
            .split_once(char::is_whitespace)
            .map(|(d, r)| (d, r.trim()))
            .unwrap_or((line, ""));
        match directive {
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(line_no, "degree given twice"));
                }
                let n = rest
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| parse_err(line_no, format!("bad degree {rest:?}")))?;
                degree = Some(n);
                file.degree = n;
            }
            "gen" => {
                let n = degree.ok_or_else(|| parse_err(line_no, "gen before degree"))?;
                let (name, cycles) = rest
                    .split_once(|c: char| c.is_whitespace() || c == '(')
                    .map(|(name, _)| (name, rest[name.len()..].trim()))
                    .unwrap_or((rest, ""));
                if !is_name(name) {
                    return Err(parse_err(line_no, format!("bad generator name {name:?}")));
                }
                if file.generators.iter().any(|(g, _)| g == name) {
                    return Err(parse_err(line_no, format!("generator {name} defined twice")));
                }
                let perm = parse_cycles(cycles, n).map_err(|e| parse_err(line_no, e.to_string()))?;
                file.generators.push((name.to_string(), perm));
            }
            "subgroup" => {
                let (name, words) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line_no, "expected `subgroup NAME = words`"))?;
                let name = name.trim();
                if !is_name(name) {
                    return Err(parse_err(line_no, format!("bad subgroup name {name:?}")));
                }
                if file.subgroups.iter().any(|(s, _)| s == name) {
                    return Err(parse_err(line_no, format!("subgroup {name} defined twice")));
                }
                let words = parse_word_list(words).map_err(|m| parse_err(line_no, m))?;
                for factor in words.iter().flatten() {
                    if !file.generators.iter().any(|(g, _)| *g == factor.name) {
                        return Err(parse_err(line_no, format!("unknown generator {}", factor.name)));
                    }
                }
                file.subgroups.push((name.to_string(), words));
            }
            other => return Err(parse_err(line_no, format!("unknown directive {other:?}"))),
        }
    }
    if degree.is_none() {
        return Err(parse_err(0, "missing degree line"));
    }
    Ok(file)
}

impl GroupFile {
    pub fn build(&self, cap: usize) -> Result<ParsedGroup> {
        let perms: Vec<Perm> = self.generators.iter().map(|(_, p)| p.clone()).collect();
        let group = Arc::new(FiniteGroup::from_permutations(self.degree, &perms, cap)?);
        let generators = self
            .generators
            .iter()
            .map(|(name, p)| {
                let idx = group.index_of_permutation(p).expect("generator lies in its closure");
                (name.clone(), idx)
            })
            .collect();
        let mut parsed = ParsedGroup {
            group,
            generators,
            subgroups: BTreeMap::new(),
        };
        for (name, words) in &self.subgroups {
            let sub = parsed.subgroup_from_words(words)?;
            parsed.subgroups.insert(name.clone(), sub);
        }
        Ok(parsed)
    }
}

impl ParsedGroup {
    pub fn from_text(text: &str, cap: usize) -> Result<Self> {
        parse_group_file(text)?.build(cap)
    }

    pub fn evaluate(&self, word: &Word) -> Result<u32> {
        word.iter().try_fold(self.group.identity(), |acc, f| {
            let g = *self
                .generators
                .get(&f.name)
                .ok_or_else(|| Error::Domain(format!("unknown generator {}", f.name)))?;
            Ok(self.group.mul(acc, self.group.pow(g, f.exponent)))
        })
    }

    pub fn subgroup_from_words(&self, words: &[Word]) -> Result<Subgroup> {
        let seed = words.iter().map(|w| self.evaluate(w)).collect::<Result<Vec<_>>>()?;
        Ok(generate_subgroup(&self.group, &seed))
    }

    /// A named subgroup, or the subgroup generated by a word list.
    pub fn select(&self, selector: &str) -> Result<Subgroup> {
        if let Some(s) = self.subgroups.get(selector.trim()) {
            return Ok(s.clone());
        }
        let words = parse_word_list(selector).map_err(Error::Domain)?;
        self.subgroup_from_words(&words)
    }
}
