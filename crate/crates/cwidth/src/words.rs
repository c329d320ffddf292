//! Word grammars for the command line, and their printed forms.
//!
//! Amalgam words are whitespace-separated `1:name` / `2:name` tokens with an
//! optional `^-1` suffix. HNN words use `g:name`, `t` and `t^-1`.

use cwidth_core::amalgam::{AmalgamSpec, Factor, ReducedWord, Syllable};
use cwidth_core::group::{Element, FiniteGroup};
use cwidth_core::hnn::{HnnLetter, HnnSpec, HnnWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message} in token {token:?}")]
pub struct WordError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub token: String,
    pub message: String,
}

/// Tokens with their 1-based starting columns.
fn tokens(input: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut column = 0;
    input
        .split_inclusive(char::is_whitespace)
        .map(move |chunk| {
            let start = column + 1;
            column += chunk.chars().count();
            (start, chunk.trim_end())
        })
        .filter(|(_, t)| !t.is_empty())
}

fn err(column: usize, token: &str, message: impl Into<String>) -> WordError {
    WordError {
        column,
        token: token.to_string(),
        message: message.into(),
    }
}

fn split_inverse(token: &str) -> (&str, bool) {
    match token.strip_suffix("^-1") {
        Some(body) => (body, true),
        None => (token, false),
    }
}

fn element(
    group: &FiniteGroup,
    name: &str,
    column: usize,
    token: &str,
) -> Result<Element, WordError> {
    group.element(name).ok_or_else(|| {
        err(
            column,
            token,
            format!("unknown element {name:?} of {}", group.name()),
        )
    })
}

pub fn parse_syllable(
    spec: &AmalgamSpec,
    token: &str,
    column: usize,
) -> Result<Syllable, WordError> {
    let (body, inverse) = split_inverse(token);
    let (factor, name) = body
        .split_once(':')
        .ok_or_else(|| err(column, token, "expected 1:name or 2:name"))?;
    let factor = match factor {
        "1" => Factor::One,
        "2" => Factor::Two,
        _ => {
            return Err(err(
                column,
                token,
                format!("factor must be 1 or 2, got {factor:?}"),
            ))
        }
    };
    let group = spec.group(factor);
    let mut x = element(group, name, column, token)?;
    if inverse {
        x = group.inv(x);
    }
    Ok(Syllable::new(factor, x))
}

pub fn parse_syllables(spec: &AmalgamSpec, input: &str) -> Result<Vec<Syllable>, WordError> {
    tokens(input)
        .map(|(c, t)| parse_syllable(spec, t, c))
        .collect()
}

/// Parses and reduces an amalgam word. The empty string is the identity.
pub fn parse_amalgam_word(spec: &AmalgamSpec, input: &str) -> Result<ReducedWord, WordError> {
    Ok(spec.reduce(&parse_syllables(spec, input)?))
}

pub fn format_syllable(spec: &AmalgamSpec, s: Syllable) -> String {
    format!("{}:{}", s.factor, spec.syllable_name(s))
}

pub fn format_amalgam_word(spec: &AmalgamSpec, w: &ReducedWord) -> String {
    let parts: Vec<String> = w
        .syllables()
        .iter()
        .map(|&s| format_syllable(spec, s))
        .collect();
    parts.join(" ")
}

pub fn parse_hnn_letters(spec: &HnnSpec, input: &str) -> Result<Vec<HnnLetter>, WordError> {
    tokens(input)
        .map(|(column, token)| match token {
            "t" => Ok(HnnLetter::T(1)),
            "t^-1" => Ok(HnnLetter::T(-1)),
            _ => {
                let (body, inverse) = split_inverse(token);
                let name = body
                    .strip_prefix("g:")
                    .ok_or_else(|| err(column, token, "expected g:name, t or t^-1"))?;
                let g = spec.base();
                let x = element(g, name, column, token)?;
                Ok(HnnLetter::Base(if inverse { g.inv(x) } else { x }))
            }
        })
        .collect()
}

pub fn parse_hnn_word(spec: &HnnSpec, input: &str) -> Result<HnnWord, WordError> {
    Ok(spec.word(&parse_hnn_letters(spec, input)?))
}

/// Identity base segments are omitted.
pub fn format_hnn_word(spec: &HnnSpec, w: &HnnWord) -> String {
    let g = spec.base();
    let mut parts = Vec::new();
    for (i, &seg) in w.segments().iter().enumerate() {
        if seg != g.identity() {
            parts.push(format!("g:{}", g.element_name(seg)));
        }
        match w.exponents().get(i) {
            Some(1) => parts.push("t".to_string()),
            Some(_) => parts.push("t^-1".to_string()),
            None => {}
        }
    }
    parts.join(" ")
}

/// Whitespace-separated element names, e.g. a subgroup or generating set.
pub fn parse_element_list(group: &FiniteGroup, input: &str) -> Result<Vec<Element>, WordError> {
    tokens(input)
        .map(|(c, t)| element(group, t, c, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwidth_core::fixtures;

    #[test]
    fn amalgam_round_trip() {
        let spec = fixtures::f21_z6();
        let w = parse_amalgam_word(&spec, "2:c3 1:x 2:c3 1:x^-1 2:c3 1:x").unwrap();
        assert_eq!(w.syllable_length(), 6);
        let printed = format_amalgam_word(&spec, &w);
        assert_eq!(parse_amalgam_word(&spec, &printed).unwrap(), w);
        assert!(parse_amalgam_word(&spec, "  ").unwrap().is_identity());
    }

    #[test]
    fn errors_carry_columns() {
        let spec = fixtures::f21_z6();
        let e = parse_amalgam_word(&spec, "2:c3  1:q").unwrap_err();
        assert_eq!((e.column, e.token.as_str()), (7, "1:q"));
        let e = parse_amalgam_word(&spec, "3:x").unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_amalgam_word(&spec, "1:x x").unwrap_err();
        assert_eq!(e.column, 5);
    }

    #[test]
    fn hnn_round_trip() {
        let spec = fixtures::z6_hnn();
        let w = parse_hnn_word(&spec, "t^-1 g:c2 t g:c").unwrap();
        assert_eq!(w.t_exponent(), 0);
        let printed = format_hnn_word(&spec, &w);
        assert_eq!(printed, "t^-1 g:c2 t g:c");
        assert_eq!(parse_hnn_word(&spec, &printed).unwrap(), w);
        let e = parse_hnn_word(&spec, "t t^2").unwrap_err();
        assert_eq!(e.column, 3);
    }
}
