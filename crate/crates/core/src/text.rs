//! Shared text-form helpers.
//!
//! Words are space-separated by default ("4 5 2 1 3"). A bare run of digits
//! with no whitespace ("45213") is accepted on input as one-digit-per-value
//! shorthand. The shorthand is only unambiguous for words over [n] with
//! n <= 9, so parsing is two-phase: tokens are read as plain numbers first,
//! and the digit expansion is tried only when the plain reading does not
//! validate. That way "(12)" inside a decomposition of [12] stays the fixed
//! point 12, while a bare "(12)" is the transposition.

use crate::error::Error;

/// Plain reading: whitespace-separated integers, a lone token being one
/// integer.
pub(crate) fn parse_plain(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a positive integer")))
        })
        .collect()
}

/// Compact reading: every multi-digit token expands to one value per digit.
/// Returns `None` when no token is eligible (so there is nothing new to try)
/// or a digit 0 appears.
pub(crate) fn parse_compact(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    let mut values = Vec::new();
    let mut expanded = false;
    for tok in s.split_whitespace() {
        if tok.len() > 1 && tok.bytes().all(|b| b.is_ascii_digit()) {
            for b in tok.bytes() {
                if b == b'0' {
                    return None;
                }
                values.push((b - b'0') as usize);
            }
            expanded = true;
        } else {
            values.push(tok.parse::<usize>().ok()?);
        }
    }
    if expanded && !values.is_empty() {
        Some(values)
    } else {
        None
    }
}

/// Parses a list of token groups into an object, trying the plain reading
/// of every group first and falling back to the compact reading of all
/// groups when the plain one fails to build. The plain reading's error is
/// reported when neither works.
pub(crate) fn parse_groups_with<T>(
    groups: &[&str],
    build: impl Fn(Vec<Vec<usize>>) -> Result<T, Error>,
) -> Result<T, Error> {
    let plain: Result<Vec<Vec<usize>>, Error> =
        groups.iter().map(|g| parse_plain(g)).collect();
    let primary = match plain {
        Ok(values) => match build(values) {
            Ok(t) => return Ok(t),
            Err(e) => e,
        },
        Err(e) => e,
    };
    let compact: Option<Vec<Vec<usize>>> = groups.iter().map(|g| parse_compact(g)).collect();
    if let Some(values) = compact {
        if let Ok(t) = build(values) {
            return Ok(t);
        }
    }
    Err(primary)
}

/// Single-group convenience wrapper around [`parse_groups_with`].
pub(crate) fn parse_word_with<T>(
    s: &str,
    build: impl Fn(Vec<usize>) -> Result<T, Error>,
) -> Result<T, Error> {
    parse_groups_with(&[s], |mut groups| build(groups.pop().unwrap()))
}

pub(crate) fn join_values(values: &[usize]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Result<Vec<usize>, Error> {
        parse_word_with(s, |values| {
            if values.iter().all(|&v| v >= 1) {
                Ok(values)
            } else {
                Err(Error::Parse("zero".into()))
            }
        })
    }

    #[test]
    fn spaced_and_compact_forms() {
        assert_eq!(word("4 5 2 1 3").unwrap(), vec![4, 5, 2, 1, 3]);
        assert_eq!(word("7").unwrap(), vec![7]);
        assert_eq!(word(" 1 10 2 ").unwrap(), vec![1, 10, 2]);
        // a lone multi-digit token is a single number when that validates
        assert_eq!(word("45213").unwrap(), vec![45213]);
    }

    #[test]
    fn compact_fallback_engages_on_validation_failure() {
        let parsed = parse_word_with("45213", |values| {
            if values.iter().all(|&v| v <= 9) {
                Ok(values)
            } else {
                Err(Error::Parse("too big".into()))
            }
        })
        .unwrap();
        assert_eq!(parsed, vec![4, 5, 2, 1, 3]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(word("").is_err());
        assert!(word("1,2").is_err());
        assert!(word("a b").is_err());
    }

    #[test]
    fn join_is_spaced() {
        assert_eq!(join_values(&[4, 5, 2, 1, 3]), "4 5 2 1 3");
        assert_eq!(join_values(&[10]), "10");
    }
}
