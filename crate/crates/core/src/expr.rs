//! Tokenizer for formal sums such as `R[0,3] + 2*B[1,2] + P(0)`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ExprError {
    pub input: String,
    pub reason: String,
}

/// One summand `mult * name(args)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub mult: u64,
    pub name: String,
    pub args: Vec<i64>,
    /// Trailing `*` after the bracket, as in `V(3)*`.
    pub starred: bool,
}

fn err(input: &str, reason: impl Into<String>) -> ExprError {
    ExprError {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_int(input: &str, tok: &str) -> Result<i64, ExprError> {
    tok.trim()
        .replace('−', "-")
        .parse()
        .map_err(|_| err(input, format!("bad integer {tok:?}")))
}

/// Splits on top-level `+` (signs inside brackets are left alone).
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '⊕' if depth == 0 => {
                out.push(&s[start..idx]);
                start = idx + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_sum(input: &str) -> Result<Vec<Term>, ExprError> {
    let s = input.trim();
    if s.is_empty() || s == "0" {
        return Ok(Vec::new());
    }
    split_terms(s)
        .into_iter()
        .map(|raw| parse_term(input, raw.trim()))
        .collect()
}

fn parse_term(input: &str, raw: &str) -> Result<Term, ExprError> {
    if raw.is_empty() {
        return Err(err(input, "empty summand"));
    }
    let (mult, body) = match raw.split_once('*') {
        Some((lhs, rhs)) if !rhs.trim().is_empty() && lhs.trim().parse::<u64>().is_ok() => {
            (lhs.trim().parse::<u64>().unwrap(), rhs.trim())
        }
        _ => (1, raw),
    };
    let open = body
        .find(['(', '['])
        .ok_or_else(|| err(input, format!("missing bracket in {body:?}")))?;
    let close_ch = if body[open..].starts_with('(') { ')' } else { ']' };
    let close = body
        .rfind(close_ch)
        .ok_or_else(|| err(input, format!("unbalanced bracket in {body:?}")))?;
    let name = body[..open].trim().to_string();
    let rest = body[close + 1..].trim();
    let starred = match rest {
        "" => false,
        "*" => true,
        other => return Err(err(input, format!("unexpected trailing {other:?}"))),
    };
    let args = body[open + 1..close]
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty() && !t.chars().all(|c| c == '.' || c == '…'))
        .map(|t| parse_int(input, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Term {
        mult,
        name,
        args,
        starred,
    })
}
