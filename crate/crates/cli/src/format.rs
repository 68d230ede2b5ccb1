//! Plain-text arrangement files.
//!
//! One geometric line per text line: three whitespace-separated rational
//! coefficients `a b c` of `a*x + b*y + c = 0`, each written as an integer
//! or as `p/q`.  Everything after `#` is a comment; blank lines are
//! skipped.  Serialization writes the canonically scaled coefficients, so
//! parse and serialize round-trip to an equal [`Arrangement`].

use std::fmt;

use dplane_core::geometry::{Arrangement, GeometryError, Line, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Parse failure with a 1-based position pointing at the offending token.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn parse_rational(token: &str) -> Result<Rat, String> {
    let (num_text, den_text) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| format!("malformed rational `{token}`"))?;
    let den: BigInt = den_text
        .parse()
        .map_err(|_| format!("malformed rational `{token}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{token}`"));
    }
    Ok(Rat::new(num, den))
}

/// Parses an arrangement file.  An empty file yields an empty arrangement.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let mut lines = Vec::new();
    // File line number of each parsed geometric line, for error reporting.
    let mut origin = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut coeffs = Vec::new();
        for token in content.split_whitespace() {
            // Tokens borrow from `content`, so pointer offsets give columns.
            let column = token.as_ptr() as usize - content.as_ptr() as usize + 1;
            if coeffs.len() == 3 {
                return Err(ParseError {
                    line: lineno,
                    column,
                    message: format!("unexpected fourth token `{token}`"),
                });
            }
            match parse_rational(token) {
                Ok(r) => coeffs.push(r),
                Err(message) => {
                    return Err(ParseError {
                        line: lineno,
                        column,
                        message,
                    })
                }
            }
        }
        if coeffs.len() != 3 {
            return Err(ParseError {
                line: lineno,
                column: 1,
                message: format!("expected three coefficients, found {}", coeffs.len()),
            });
        }
        let c = coeffs.pop().unwrap();
        let b = coeffs.pop().unwrap();
        let a = coeffs.pop().unwrap();
        match Line::new(a, b, c) {
            Ok(line) => lines.push(line),
            Err(GeometryError::ZeroLine) => {
                return Err(ParseError {
                    line: lineno,
                    column: 1,
                    message: "a and b are both zero; not a line".to_string(),
                })
            }
            Err(e) => {
                return Err(ParseError {
                    line: lineno,
                    column: 1,
                    message: e.to_string(),
                })
            }
        }
        origin.push(lineno);
    }
    Arrangement::new(lines).map_err(|e| match e {
        GeometryError::DuplicateLine(i, j) => ParseError {
            line: origin[j.0],
            column: 1,
            message: format!("duplicate of the line on input line {}", origin[i.0]),
        },
        other => ParseError {
            line: 0,
            column: 0,
            message: other.to_string(),
        },
    })
}

/// Formats a rational as `p` or `p/q`, matching the input syntax.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes an arrangement in the text format.  Deterministic.
pub fn serialize_arrangement(arr: &Arrangement) -> String {
    let mut out = String::from("# a b c  with  a*x + b*y + c = 0\n");
    for line in arr.lines() {
        out.push_str(&format!(
            "{} {} {}\n",
            format_rat(line.a()),
            format_rat(line.b()),
            format_rat(line.c())
        ));
    }
    out
}
