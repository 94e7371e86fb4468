//! Covers of a group, monochromatic quadruples `(x, y, xy, yx)`, and the
//! non-commuting Schur number.

mod quads;
mod random;
mod schur;

pub use quads::{count_quadruples, cover_avoids, quad_counts, QuadCount, QuadWitness};
pub use random::random_cover;
pub use schur::{schur_number, SchurOptions, SchurResult, DEFAULT_NODE_BUDGET};

use std::fmt::Write as _;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::textfmt::{content_lines, eof_error, header};

/// An ordered family of non-empty sets whose union is the whole group.
/// Classes may overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    classes: Vec<ElementSet>,
    group_order: usize,
}

impl Cover {
    /// Drops empty classes and checks that the rest cover `0..group_order`.
    pub fn new(classes: Vec<ElementSet>, group_order: usize) -> Result<Self> {
        let mut union = ElementSet::empty(group_order);
        for c in &classes {
            if c.universe() != group_order {
                return Err(Error::OrderMismatch {
                    expected: group_order,
                    found: c.universe(),
                });
            }
            union.union_with(c);
        }
        if let Some(missing) = union.complement().first() {
            return Err(Error::NotACover {
                missing,
                order: group_order,
            });
        }
        let classes = classes.into_iter().filter(|c| !c.is_empty()).collect();
        Ok(Self {
            classes,
            group_order,
        })
    }

    /// The partition with `labels[x]` as the class of `x`; class `i` is the
    /// `i`-th distinct label value in increasing order.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![ElementSet::empty(n); k];
        for (x, &l) in labels.iter().enumerate() {
            classes[l].insert(x);
        }
        Self::new(classes, n).expect("labels assign every element")
    }

    pub fn whole(group_order: usize) -> Self {
        Self::new(vec![ElementSet::full(group_order)], group_order).expect("full set covers")
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// True when the classes are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        self.classes.iter().map(ElementSet::len).sum::<usize>() == self.group_order
    }

    /// Parses the `cover <k> <n>` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let head = lines
            .next()
            .ok_or_else(|| eof_error("missing 'cover <k> <n>'"))?;
        let dims = header(&head, "cover", 2)?;
        let (k, n) = (dims[0], dims[1]);
        let mut classes = Vec::with_capacity(k);
        for line in lines {
            if classes.len() == k {
                return Err(line.error(1, format!("more than {k} classes")));
            }
            let mut set = ElementSet::empty(n);
            for (c, t) in line.tokens() {
                set.insert(line.parse_index(c, t, n)?);
            }
            classes.push(set);
        }
        if classes.len() != k {
            return Err(eof_error(&format!(
                "expected {k} classes, found {}",
                classes.len()
            )));
        }
        Self::new(classes, n)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("cover {} {}\n", self.classes.len(), self.group_order);
        for c in &self.classes {
            writeln!(out, "{c}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_covers() {
        let a = ElementSet::from_indices(4, [0, 1]);
        let b = ElementSet::from_indices(4, [1, 2]);
        assert_eq!(
            Cover::new(vec![a.clone(), b], 4).unwrap_err(),
            Error::NotACover {
                missing: 3,
                order: 4
            }
        );
        let wrong = ElementSet::full(5);
        assert!(matches!(
            Cover::new(vec![a, wrong], 4),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn drops_empty_classes() {
        let c = Cover::new(vec![ElementSet::empty(3), ElementSet::full(3)], 3).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.is_partition());
    }

    #[test]
    fn text_round_trip() {
        let c = Cover::from_labels(&[0, 1, 1, 0, 2, 2]);
        let again = Cover::parse(&c.to_text()).unwrap();
        assert_eq!(c, again);
        let with_comments = "# S3 split\ncover 2 6\n0 1 2 # A3\n\n3 4 5\n";
        let c = Cover::parse(with_comments).unwrap();
        assert_eq!(c.classes()[0].to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Cover::parse("cover 2 3\n0 1 7\n2\n"),
            Err(Error::Parse {
                line: 2,
                column: 5,
                ..
            })
        ));
        assert!(Cover::parse("cover 2 3\n0 1 2\n").is_err());
        assert!(Cover::parse("cover 1 3\n0 1\n").is_err());
        assert!(Cover::parse("pairs 1 3\n").is_err());
    }
}
