//! Textual GPM-set syntax.
//!
//! Sets are brace-delimited, comma-separated items; whitespace is
//! insignificant. An item is either an exponent pair `(s,t)` or a product
//! token over `{I, X, Z}` with optional `^k` exponents (`I`, `X`, `Z`,
//! `XZ^3`, `X^5Z^15`, ...). Named aliases (`C1..C31`, `K`, `L`, `G120`,
//! ...) resolve to their reference sets and imply the dimension.

use gpmset::catalog::named_set;
use gpmset::gpm::{Gpm, GpmSet};

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// Dimension implied by an alias argument, if it is one.
pub fn alias_dimension(src: &str) -> Option<u32> {
    named_set(src).map(|s| s.d())
}

/// Resolve an alias or parse a literal set. Aliases carry their own
/// dimension, which must agree with `--d` when both are given; literals
/// require `--d`.
pub fn parse_set_arg(src: &str, d: Option<u32>) -> Result<GpmSet, ParseError> {
    if let Some(named) = named_set(src) {
        if let Some(d) = d {
            if d != named.d() {
                return err(format!(
                    "alias {} has dimension {}, but --d {} was given",
                    src.trim(),
                    named.d(),
                    d
                ));
            }
        }
        return Ok(named);
    }
    let Some(d) = d else {
        return err(format!(
            "set {src:?} is not a known alias; provide --d for literal sets"
        ));
    };
    parse_set(src, d)
}

/// Parse a literal set at a known dimension.
pub fn parse_set(src: &str, d: u32) -> Result<GpmSet, ParseError> {
    let trimmed = src.trim();
    let inner = if let Some(rest) = trimmed.strip_prefix('{') {
        match rest.strip_suffix('}') {
            Some(i) => i,
            None => return err(format!("unbalanced braces in {trimmed:?}")),
        }
    } else if trimmed.ends_with('}') {
        return err(format!("unbalanced braces in {trimmed:?}"));
    } else {
        trimmed
    };

    let mut items: Vec<&str> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                if depth == 0 {
                    return err(format!("unbalanced parentheses in {trimmed:?}"));
                }
                depth -= 1;
            }
            ',' if depth == 0 => {
                items.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(format!("unbalanced parentheses in {trimmed:?}"));
    }
    items.push(&inner[start..]);

    let members: Vec<Gpm> = items
        .iter()
        .map(|item| parse_item(item, d))
        .collect::<Result<_, _>>()?;
    GpmSet::new(d, members).map_err(|e| ParseError(e.to_string()))
}

fn parse_item(item: &str, d: u32) -> Result<Gpm, ParseError> {
    let compact: String = item.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return err("empty set item");
    }
    if compact.starts_with('(') {
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError(format!("malformed pair {item:?}")))?;
        let (s, t) = inner
            .split_once(',')
            .ok_or_else(|| ParseError(format!("malformed pair {item:?}")))?;
        let s: i64 = s
            .parse()
            .map_err(|_| ParseError(format!("bad exponent in {item:?}")))?;
        let t: i64 = t
            .parse()
            .map_err(|_| ParseError(format!("bad exponent in {item:?}")))?;
        if s < 0 || t < 0 {
            return err(format!("negative exponent in {item:?}"));
        }
        return Ok(Gpm::reduced(s, t, d));
    }

    let mut s: i64 = 0;
    let mut t: i64 = 0;
    let chars: Vec<char> = compact.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let base = chars[i];
        i += 1;
        let mut exp: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return err(format!("missing exponent after '^' in {item:?}"));
            }
            exp = compact[start..i]
                .parse()
                .map_err(|_| ParseError(format!("bad exponent in {item:?}")))?;
        }
        match base.to_ascii_uppercase() {
            'I' => {}
            'X' => s += exp,
            'Z' => t += exp,
            other => return err(format!("unexpected symbol {other:?} in {item:?}")),
        }
    }
    Ok(Gpm::reduced(s, t, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(d: u32, pairs: &[(u32, u32)]) -> GpmSet {
        GpmSet::new(d, pairs.iter().map(|&(s, t)| Gpm::new(s, t))).unwrap()
    }

    #[test]
    fn parses_pair_notation() {
        assert_eq!(
            parse_set("{(0,0),(0,1),(0,2),(0,3)}", 6).unwrap(),
            set(6, &[(0, 0), (0, 1), (0, 2), (0, 3)])
        );
        assert_eq!(
            parse_set(" ( 1 , 2 ) , (0,0) ", 6).unwrap(),
            set(6, &[(0, 0), (1, 2)])
        );
    }

    #[test]
    fn parses_token_notation() {
        assert_eq!(
            parse_set("{X, X^3Z^3, Z^4, X^2}", 6).unwrap(),
            set(6, &[(1, 0), (3, 3), (0, 4), (2, 0)])
        );
        assert_eq!(
            parse_set("{I}", 4).unwrap(),
            set(4, &[(0, 0)])
        );
        assert_eq!(
            parse_set("{X^12,Z^3,X^3Z^4,X^5Z^15}", 30).unwrap(),
            set(30, &[(12, 0), (0, 3), (3, 4), (5, 15)])
        );
        // Exponents reduce mod d; XZX is X^2 Z.
        assert_eq!(parse_set("{xzx, I}", 4).unwrap(), set(4, &[(0, 0), (2, 1)]));
    }

    #[test]
    fn resolves_aliases() {
        let k = parse_set_arg("K", None).unwrap();
        assert_eq!(k.d(), 4);
        assert_eq!(parse_set_arg("K", Some(4)).unwrap(), k);
        assert!(parse_set_arg("K", Some(6)).is_err());
        assert!(parse_set_arg("{X}", None).is_err());
        assert_eq!(
            parse_set_arg("C3", None).unwrap(),
            set(6, &[(0, 0), (0, 1), (0, 2), (1, 0)])
        );
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_set("{(0,0)", 6).is_err());
        assert!(parse_set("{(0,0,1)}", 6).is_err());
        assert!(parse_set("{Y}", 6).is_err());
        assert!(parse_set("{X^}", 6).is_err());
        assert!(parse_set("{X, X}", 6).is_err());
        assert!(parse_set("{}", 6).is_err());
        assert!(parse_set("{(0,-1)}", 6).is_err());
    }

    #[test]
    fn round_trips_display_form() {
        let m = set(6, &[(0, 0), (1, 5), (4, 2), (3, 3)]);
        assert_eq!(parse_set(&m.to_string(), 6).unwrap(), m);
    }
}
