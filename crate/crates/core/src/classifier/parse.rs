//! Twist-word grammar.
//!
//! ```text
//! word     := sep* (factor (sep+ factor)*)? sep*
//! factor   := gen ('^' int)?
//! gen      := 's1' | 's2' | 's3' | 'σ1' | 'σ2' | 'σ3' | 'id'
//! sep      := whitespace | '*'
//! ```
//!
//! The leftmost factor acts first.

use thiserror::Error;

use crate::curve::{Generator, TwistLetter, TwistWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown token `{0}` (expected s1, s2 or s3)")]
    UnknownToken(String),
    #[error("`{0}` is outside the supported family: only s1, s2, s3 are available")]
    OutOfScope(String),
    #[error("malformed exponent in `{0}`")]
    BadExponent(String),
}

fn generator(name: &str) -> Result<Option<Generator>, ParseError> {
    match name {
        "s1" | "σ1" => Ok(Some(Generator::Sigma1)),
        "s2" | "σ2" => Ok(Some(Generator::Sigma2)),
        "s3" | "σ3" => Ok(Some(Generator::Sigma3)),
        "id" => Ok(None),
        "s4" | "σ4" => Err(ParseError::OutOfScope(name.to_string())),
        other => Err(ParseError::UnknownToken(other.to_string())),
    }
}

/// Parses a twist word.
pub fn parse_word(text: &str) -> Result<TwistWord, ParseError> {
    let mut word = TwistWord::identity();
    for token in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let e: i64 = exp.parse().map_err(|_| ParseError::BadExponent(token.to_string()))?;
                (name, e)
            }
            None => (token, 1),
        };
        let Some(g) = generator(name)? else {
            continue;
        };
        if exponent.unsigned_abs() > 1_000_000 {
            return Err(ParseError::BadExponent(token.to_string()));
        }
        for _ in 0..exponent.unsigned_abs() {
            word.push(TwistLetter::new(g, exponent > 0));
        }
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(w: &TwistWord) -> Vec<(Generator, bool)> {
        w.letters().iter().map(|l| (l.generator, l.positive)).collect()
    }

    #[test]
    fn grammar() {
        use Generator::*;
        assert_eq!(letters(&parse_word("s1 s2^-1 s3").unwrap()), vec![(Sigma1, true), (Sigma2, false), (Sigma3, true)]);
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("  id ").unwrap().is_empty());
        assert_eq!(letters(&parse_word("s2^3").unwrap()), vec![(Sigma2, true); 3]);
        assert_eq!(letters(&parse_word("σ1*σ3^-2").unwrap()), vec![(Sigma1, true), (Sigma3, false), (Sigma3, false)]);
        assert!(parse_word("s1^0").unwrap().is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_word("s4"), Err(ParseError::OutOfScope(_))));
        assert!(matches!(parse_word("s1 x"), Err(ParseError::UnknownToken(_))));
        assert!(matches!(parse_word("s1^"), Err(ParseError::BadExponent(_))));
        assert!(matches!(parse_word("s1^a"), Err(ParseError::BadExponent(_))));
        assert!(matches!(parse_word("s1s2"), Err(ParseError::UnknownToken(_))));
    }
}
