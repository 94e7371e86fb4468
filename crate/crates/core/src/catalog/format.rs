//! The group file format.
//!
//! ```text
//! perm 3            # or: table <n>
//! gen (0 1)
//! gen (0 1 2)
//! ```
//!
//! In `table` mode the header is followed by `n` rows of `n` indices.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits, Permutation};
use crate::textfmt::{content_lines, eof_error};

pub fn parse_group(text: &str, name: &str, limits: &Limits) -> Result<GroupTable> {
    let mut lines = content_lines(text);
    let head = lines.next().ok_or_else(|| eof_error("missing header"))?;
    let mut toks = head.tokens();
    let (kc, kind) = toks.next().expect("content lines are non-blank");
    let (sc, size) = toks
        .next()
        .ok_or_else(|| head.error(head.text.len() + 1, "missing size after mode"))?;
    let size: usize = size
        .parse()
        .map_err(|_| head.error(sc, format!("expected an integer, found {size:?}")))?;
    if let Some((c, t)) = toks.next() {
        return Err(head.error(c, format!("unexpected {t:?}")));
    }
    match kind {
        "perm" => {
            let mut gens = Vec::new();
            for line in lines {
                let body = line.text.trim_start();
                let col = line.text.len() - body.len() + 1;
                let rest = body
                    .strip_prefix("gen")
                    .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
                    .ok_or_else(|| line.error(col, "expected 'gen <cycles>'"))?;
                let cycles = rest.trim();
                let p = Permutation::from_cycles(cycles, size)
                    .map_err(|e| line.error(col + 4, e.to_string()))?;
                gens.push(p);
            }
            GroupTable::from_permutations(&gens, size, name, limits)
        }
        "table" => {
            if size == 0 {
                return Err(head.error(sc, "table size must be positive"));
            }
            let mut rows = Vec::with_capacity(size);
            for line in lines {
                if rows.len() == size {
                    return Err(line.error(1, format!("more than {size} rows")));
                }
                let row = line
                    .tokens()
                    .map(|(c, t)| line.parse_index(c, t, size))
                    .collect::<Result<Vec<_>>>()?;
                if row.len() != size {
                    return Err(
                        line.error(1, format!("expected {size} entries, found {}", row.len()))
                    );
                }
                rows.push(row);
            }
            if rows.len() != size {
                return Err(eof_error(&format!(
                    "expected {size} rows, found {}",
                    rows.len()
                )));
            }
            GroupTable::from_cayley_table_with(rows, name, limits)
        }
        other => Err(head.error(
            kc,
            format!("unknown mode {other:?}, expected perm or table"),
        )),
    }
}

pub fn load_group(path: impl AsRef<Path>, limits: &Limits) -> Result<GroupTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "group".into());
    parse_group(&text, &name, limits).map_err(|e| match e {
        Error::Parse { .. } => Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        },
        other => other,
    })
}

/// Serialises in `table` mode.
pub fn dump_group(g: &GroupTable) -> String {
    let mut out = format!("# {}\ntable {}\n", g.name(), g.order());
    for a in 0..g.order() {
        let row: Vec<String> = g.row(a).iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
