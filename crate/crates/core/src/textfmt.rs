//! Shared lexing for the line-oriented text formats (groups, covers, pair
//! sets): `#` starts a comment, blank lines are skipped, and errors carry
//! 1-based line and column numbers.

use crate::error::Error;

/// A non-blank line with its comment removed.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace-separated tokens with their 1-based columns.
    pub fn tokens(&self) -> impl Iterator<Item = (usize, &'a str)> + 'a {
        let text = self.text;
        text.split_whitespace().map(move |tok| {
            let offset = tok.as_ptr() as usize - text.as_ptr() as usize;
            (offset + 1, tok)
        })
    }

    pub fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    pub fn parse_index(&self, column: usize, tok: &str, bound: usize) -> Result<usize, Error> {
        let v: usize = tok
            .parse()
            .map_err(|_| self.error(column, format!("expected a decimal index, found {tok:?}")))?;
        if v >= bound {
            return Err(self.error(column, format!("index {v} out of range 0..{bound}")));
        }
        Ok(v)
    }
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let text = raw.split('#').next().unwrap_or("");
        (!text.trim().is_empty()).then_some(Line {
            number: i + 1,
            text,
        })
    })
}

/// Parses a header line `<keyword> <n> [<m> ...]` into its integers.
pub(crate) fn header(line: &Line<'_>, keyword: &str, arity: usize) -> Result<Vec<usize>, Error> {
    let mut toks = line.tokens();
    match toks.next() {
        Some((_, k)) if k == keyword => {}
        Some((c, k)) => return Err(line.error(c, format!("expected '{keyword}', found {k:?}"))),
        None => return Err(line.error(1, format!("expected '{keyword}'"))),
    }
    let mut out = Vec::with_capacity(arity);
    for _ in 0..arity {
        let (c, t) = toks
            .next()
            .ok_or_else(|| line.error(line.text.len() + 1, "missing size in header"))?;
        out.push(
            t.parse()
                .map_err(|_| line.error(c, format!("expected an integer, found {t:?}")))?,
        );
    }
    if let Some((c, t)) = toks.next() {
        return Err(line.error(c, format!("unexpected {t:?}")));
    }
    Ok(out)
}

pub(crate) fn eof_error(what: &str) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: format!("unexpected end of input: {what}"),
    }
}
