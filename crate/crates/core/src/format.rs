//! Text file formats for codes.
//!
//! One codeword per line as a `0`/`1` string, all lines the same length.
//! Blank lines and lines starting with `#` are ignored. If the first
//! remaining line is `matrix`, the following lines are generator-matrix rows
//! and the code is their span. Position 0 is the leftmost character.

use crate::code::BinaryCode;
use crate::codeword::{Codeword, MAX_LENGTH};
use crate::error::{Error, Result};

pub fn parse_code(text: &str) -> Result<BinaryCode> {
    let mut is_matrix = false;
    let mut seen_content = false;
    let mut length = None;
    let mut words = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_content && line == "matrix" {
            is_matrix = true;
            seen_content = true;
            continue;
        }
        seen_content = true;

        if let Some(bad) = line.chars().find(|c| *c != '0' && *c != '1') {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected character {bad:?}"),
            });
        }
        if line.len() > MAX_LENGTH {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("word length {} exceeds {MAX_LENGTH}", line.len()),
            });
        }
        match length {
            None => length = Some(line.len()),
            Some(n) if n != line.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {n} symbols, found {}", line.len()),
                })
            }
            Some(_) => {}
        }
        let w: Codeword = line.parse().map_err(|e: Error| Error::Parse {
            line: line_no,
            msg: e.to_string(),
        })?;
        words.push(w);
    }

    let Some(n) = length else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "no codewords found".into(),
        });
    };
    if is_matrix {
        BinaryCode::span(n, &words)
    } else {
        BinaryCode::new(n, words)
    }
}

pub fn write_code(code: &BinaryCode) -> String {
    let mut out = String::with_capacity(code.size() * (code.length() + 1));
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_words_with_comments() {
        let c = parse_code("# example\n00000\n\n11001\n00111\n").unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.length(), 5);
    }

    #[test]
    fn matrix_span() {
        let c = parse_code("# table\nmatrix\n01011\n10101\n").unwrap();
        assert_eq!(c.size(), 4);
        assert!(c.is_linear());
    }

    #[test]
    fn ragged_lines_report_line_number() {
        let err = parse_code("000\n0110\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_code("01x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code("# only a comment\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn write_then_parse() {
        let c = parse_code("110\n011\n000\n").unwrap();
        assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
    }
}
