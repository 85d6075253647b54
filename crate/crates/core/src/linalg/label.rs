use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A basis label: one of the 0-graph atoms `a` and `b`, the empty word `ε`,
/// or a non-empty tensor word of child labels.
///
/// The derived order is `a < b < ε < words`, with words compared
/// lexicographically by their children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
    Eps,
    Word(Vec<Label>),
}

impl Label {
    /// A word from its letters; the empty word is `ε`.
    pub fn word(children: Vec<Label>) -> Label {
        if children.is_empty() {
            Label::Eps
        } else {
            Label::Word(children)
        }
    }

    /// The one-letter word holding `self`.
    pub fn letter(self) -> Label {
        Label::Word(vec![self])
    }

    /// Flattened concatenation. `ε` is a two-sided unit and an atom counts as
    /// a one-letter word.
    pub fn concat(&self, other: &Label) -> Label {
        match (self, other) {
            (Label::Eps, y) => y.clone(),
            (x, Label::Eps) => x.clone(),
            (x, y) => {
                let mut out = Vec::with_capacity(x.word_len() + y.word_len());
                x.push_letters(&mut out);
                y.push_letters(&mut out);
                Label::Word(out)
            }
        }
    }

    fn push_letters(&self, out: &mut Vec<Label>) {
        match self {
            Label::Eps => {}
            Label::Word(ch) => out.extend(ch.iter().cloned()),
            atom => out.push(atom.clone()),
        }
    }

    /// Number of letters under the flattened-word reading.
    pub fn word_len(&self) -> usize {
        match self {
            Label::Eps => 0,
            Label::Word(ch) => ch.len(),
            _ => 1,
        }
    }

    /// Nesting depth: atoms are 0, words one more than their deepest child.
    /// `ε` alone has no definite depth and is compatible with any.
    pub fn depth(&self) -> Option<usize> {
        match self {
            Label::A | Label::B => Some(0),
            Label::Eps => None,
            Label::Word(ch) => Some(1 + ch.iter().filter_map(Label::depth).max().unwrap_or(0)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A => f.write_str("a"),
            Label::B => f.write_str("b"),
            Label::Eps => f.write_str("ε"),
            Label::Word(ch) => {
                f.write_str("(")?;
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let fail = |reason: &str| Error::LabelParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars().peekable();
        let label = parse_label(&mut chars).map_err(&fail)?;
        if chars.next().is_some() {
            return Err(fail("trailing characters"));
        }
        Ok(label)
    }
}

fn parse_label(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
) -> std::result::Result<Label, &'static str> {
    match chars.next() {
        Some('a') => Ok(Label::A),
        Some('b') => Ok(Label::B),
        Some('ε') => Ok(Label::Eps),
        Some('(') => {
            let mut children = vec![parse_label(chars)?];
            loop {
                match chars.next() {
                    Some(',') => children.push(parse_label(chars)?),
                    Some(')') => return Ok(Label::Word(children)),
                    _ => return Err("expected ',' or ')'"),
                }
            }
        }
        Some(_) => Err("unexpected character"),
        None => Err("unexpected end of input"),
    }
}
