//! Exhaustive search for the non-commuting Schur number `k(G)`: the largest
//! `k` such that every cover of `G` by `k` sets has a class containing a
//! quadruple `(x, y, xy, yx)` with `xy != yx`.
//!
//! A cover whose classes avoid such quadruples can be shrunk to a partition
//! with no more classes (keep each element in one class; subsets of avoiding
//! classes still avoid), so it suffices to search partitions. Partitions are
//! enumerated as restricted growth strings: element 0 has label 0 and each
//! new label is one more than the largest used so far.
//!
//! Cosets of an Abelian normal subgroup `N` give a structured certificate:
//! `N` itself has no non-commuting pair, and a coset `gN != N` never holds
//! `x`, `y` and `xy` together. When `[G:N]` classes are reached, that
//! colouring is emitted instead of searching the level.

use super::Cover;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::stats::is_abelian;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchurOptions {
    /// Largest `k` to certify.
    pub k_max: usize,
    /// Maximum number of label assignments over the whole search.
    pub node_budget: u64,
}

impl Default for SchurOptions {
    fn default() -> Self {
        Self {
            k_max: 8,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurResult {
    /// `k(G)` when `complete`, otherwise a proven lower bound.
    pub k_value: usize,
    pub complete: bool,
    /// A partition into `k_value + 1` classes with no non-commuting
    /// monochromatic quadruple.
    pub avoiding_colouring: Option<Cover>,
    pub nodes: u64,
    pub symmetry_prunes: u64,
    /// The avoiding colouring is the coset split of an Abelian normal
    /// subgroup rather than a search result.
    pub from_cosets: bool,
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

struct Search<'g> {
    g: &'g GroupTable,
    max_classes: usize,
    labels: Vec<usize>,
    members: Vec<Vec<usize>>,
    nodes: u64,
    prunes: u64,
    budget: u64,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Whether giving `v` the label `c` completes a non-commuting
    /// quadruple inside class `c`. `v` must already carry the label.
    fn creates_violation(&self, v: usize, c: usize) -> bool {
        let g = self.g;
        let same = |u: usize| self.labels[u] == c;
        for &u in &self.members[c] {
            // v in the x or y position.
            let vu = g.mul(v, u);
            let uv = g.mul(u, v);
            if vu != uv && same(vu) && same(uv) {
                return true;
            }
            // v = u y, so y = u^-1 v and the fourth member is y u.
            let y = g.mul(g.inv(u), v);
            let yu = g.mul(y, u);
            if yu != v && same(y) && same(yu) {
                return true;
            }
            // v = y u, so y = v u^-1 and the fourth member is u y.
            let y = g.mul(v, g.inv(u));
            let uy = g.mul(u, y);
            if uy != v && same(y) && same(uy) {
                return true;
            }
        }
        false
    }

    fn run(&mut self, v: usize, used: usize) -> Outcome {
        let n = self.g.order();
        if v == n {
            return Outcome::Found(self.labels.clone());
        }
        let limit = (used + 1).min(self.max_classes);
        self.prunes += (self.max_classes - limit) as u64;
        for c in 0..limit {
            if self.nodes >= self.budget {
                return Outcome::OutOfBudget;
            }
            self.nodes += 1;
            self.labels[v] = c;
            self.members[c].push(v);
            if !self.creates_violation(v, c) {
                match self.run(v + 1, used.max(c + 1)) {
                    Outcome::Exhausted => {}
                    other => {
                        self.members[c].pop();
                        self.labels[v] = UNSET;
                        return other;
                    }
                }
            }
            self.members[c].pop();
            self.labels[v] = UNSET;
        }
        Outcome::Exhausted
    }
}

/// The Abelian normal subgroup of least index (ties: largest, then lex
/// least) with its coset colouring. `None` for groups too large to
/// enumerate subgroups.
fn coset_certificate(g: &GroupTable) -> Option<Cover> {
    let subs = g.all_subgroups(&Limits::default()).ok()?;
    let n = subs
        .iter()
        .filter(|h| h.len() < g.order() && g.is_normal(h) && is_abelian_set(g, h))
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.lex_cmp(a)))?;
    let classes: Vec<ElementSet> = g.left_cosets(n);
    Cover::new(classes, g.order()).ok()
}

fn is_abelian_set(g: &GroupTable, h: &ElementSet) -> bool {
    h.iter().all(|x| h.iter().all(|y| g.commute(x, y)))
}

/// Computes `k(G)` by exhaustive search over canonical partitions.
///
/// For `m = 2, 3, ...` the search looks for a partition into at most `m`
/// classes with no non-commuting monochromatic quadruple; the first `m`
/// that succeeds gives `k(G) = m - 1`. If the node budget runs out, or no
/// avoiding partition exists with `k_max + 1` classes, the result is a
/// lower bound with `complete == false`.
pub fn schur_number(g: &GroupTable, opts: &SchurOptions) -> Result<SchurResult> {
    if is_abelian(g) {
        return Err(Error::AbelianGroup);
    }
    if opts.k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    let n = g.order();
    let mut total_nodes = 0u64;
    let mut total_prunes = 0u64;
    let certificate = coset_certificate(g);
    for m in 2..=opts.k_max + 1 {
        if let Some(c) = certificate.as_ref().filter(|c| c.len() == m) {
            return Ok(SchurResult {
                k_value: m - 1,
                complete: true,
                avoiding_colouring: Some(c.clone()),
                nodes: total_nodes,
                symmetry_prunes: total_prunes,
                from_cosets: true,
            });
        }
        let mut search = Search {
            g,
            max_classes: m,
            labels: vec![UNSET; n],
            members: vec![Vec::new(); m],
            nodes: 0,
            prunes: 0,
            budget: opts.node_budget - total_nodes,
        };
        let outcome = search.run(0, 0);
        total_nodes += search.nodes;
        total_prunes += search.prunes;
        match outcome {
            Outcome::Found(labels) => {
                return Ok(SchurResult {
                    k_value: m - 1,
                    complete: true,
                    avoiding_colouring: Some(Cover::from_labels(&labels)),
                    nodes: total_nodes,
                    symmetry_prunes: total_prunes,
                    from_cosets: false,
                });
            }
            // Every partition into at most m classes has a violation: k >= m.
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Ok(SchurResult {
                    k_value: m - 1,
                    complete: false,
                    avoiding_colouring: None,
                    nodes: total_nodes,
                    symmetry_prunes: total_prunes,
                    from_cosets: false,
                });
            }
        }
    }
    Ok(SchurResult {
        k_value: opts.k_max + 1,
        complete: false,
        avoiding_colouring: None,
        nodes: total_nodes,
        symmetry_prunes: total_prunes,
        from_cosets: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::colouring::cover_avoids;
    use crate::group::Limits;

    fn load(s: &str) -> GroupTable {
        Catalog::default().load(s, &Limits::default()).unwrap()
    }

    #[test]
    fn s3_has_k_one_with_alternating_split() {
        let g = load("S3");
        let r = schur_number(&g, &SchurOptions::default()).unwrap();
        assert!(r.complete && r.from_cosets);
        assert_eq!(r.k_value, 1);
        let cover = r.avoiding_colouring.unwrap();
        assert_eq!(cover_avoids(&g, &cover).unwrap(), None);
        let a3: Vec<usize> = (0..6).filter(|&x| g.element_order(x) != 2).collect();
        let rest: Vec<usize> = (0..6).filter(|x| !a3.contains(x)).collect();
        let classes: Vec<Vec<usize>> = cover.classes().iter().map(|c| c.to_vec()).collect();
        assert_eq!(classes, vec![a3, rest]);
    }

    #[test]
    fn search_alone_also_finds_an_avoiding_split() {
        // Without the certificate the level-2 search must succeed too.
        let g = load("S3");
        let mut search = Search {
            g: &g,
            max_classes: 2,
            labels: vec![UNSET; 6],
            members: vec![Vec::new(); 2],
            nodes: 0,
            prunes: 0,
            budget: 1000,
        };
        match search.run(0, 0) {
            Outcome::Found(labels) => {
                assert_eq!(
                    cover_avoids(&g, &Cover::from_labels(&labels)).unwrap(),
                    None
                )
            }
            _ => panic!("no avoiding 2-partition found"),
        }
    }

    #[test]
    fn abelian_groups_are_rejected() {
        assert_eq!(
            schur_number(&load("C5"), &SchurOptions::default()).unwrap_err(),
            Error::AbelianGroup
        );
    }

    #[test]
    fn tiny_budget_reports_lower_bound() {
        let opts = SchurOptions {
            k_max: 4,
            node_budget: 3,
        };
        // A4 has no Abelian normal subgroup of index 2, so level 2 is searched.
        let r = schur_number(&load("A4"), &opts).unwrap();
        assert!(!r.complete);
        assert_eq!(r.k_value, 1);
        assert!(r.avoiding_colouring.is_none());
        assert!(r.nodes <= 3);
    }
}
