use std::fmt::Write as _;

use rand::Rng;

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::rational::{ratio, Rational};
use crate::textfmt::{content_lines, eof_error, header};

/// A subset of `G x G` stored as `n` row bitsets; row `x` holds the `y`
/// with `(x, y)` in the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    n: usize,
    rows: Vec<ElementSet>,
}

impl PairSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            rows: vec![ElementSet::empty(n); n],
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            rows: vec![ElementSet::full(n); n],
        }
    }

    pub fn from_rows(rows: Vec<ElementSet>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.universe() == n), "rows must be n-bit");
        Self { n, rows }
    }

    /// Each pair included independently with probability `p`.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if rng.gen_bool(p) {
                    s.insert(x, y);
                }
            }
        }
        s
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    #[inline]
    pub fn row(&self, x: usize) -> &ElementSet {
        &self.rows[x]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(ElementSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(ElementSet::is_empty)
    }

    pub fn density(&self) -> Rational {
        ratio(self.len() as u64, (self.n * self.n) as u64)
    }

    pub fn intersect_with(&mut self, other: &PairSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
    }

    /// `columns()[y]` = `{x : (x, y) in A}`.
    pub fn columns(&self) -> Vec<ElementSet> {
        let mut cols = vec![ElementSet::empty(self.n); self.n];
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                cols[y].insert(x);
            }
        }
        cols
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
    }

    /// Parses `pairs <n>` followed by one `x y` pair per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let head = lines
            .next()
            .ok_or_else(|| eof_error("missing 'pairs <n>'"))?;
        let n = header(&head, "pairs", 1)?[0];
        let mut set = Self::empty(n);
        for line in lines {
            let toks: Vec<_> = line.tokens().collect();
            if toks.len() != 2 {
                let col = toks.get(2).map_or(1, |t| t.0);
                return Err(line.error(col, format!("expected 'x y', found {} tokens", toks.len())));
            }
            let x = line.parse_index(toks[0].0, toks[0].1, n)?;
            let y = line.parse_index(toks[1].0, toks[1].1, n)?;
            set.insert(x, y);
        }
        Ok(set)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("pairs {}\n", self.n);
        for (x, y) in self.iter() {
            writeln!(out, "{x} {y}").unwrap();
        }
        out
    }
}
