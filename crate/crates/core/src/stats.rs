//! Commuting probability.

use rayon::prelude::*;

use crate::group::GroupTable;
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingReport {
    pub order: usize,
    pub pairs_total: u64,
    pub pairs_commuting: u64,
    pub num_classes: usize,
    /// `pairs_commuting / pairs_total`, in lowest terms.
    pub c: Rational,
}

/// Ordered pairs `(x, y)` with `xy = yx`, by direct enumeration.
pub fn count_commuting_pairs(g: &GroupTable) -> u64 {
    let n = g.order();
    (0..n)
        .into_par_iter()
        .map(|x| (0..n).filter(|&y| g.commute(x, y)).count() as u64)
        .sum()
}

/// `c(G)`, computed both by the pair loop and as `|G| * #classes`.
///
/// # Panics
///
/// If the two counts disagree, which would mean a corrupt table.
pub fn commuting_probability(g: &GroupTable) -> CommutingReport {
    let n = g.order();
    let direct = count_commuting_pairs(g);
    let num_classes = g.conjugacy().num_classes();
    let via_classes = (n * num_classes) as u64;
    assert_eq!(
        direct,
        via_classes,
        "commuting pair count disagrees with class count for {}",
        g.name()
    );
    let total = (n * n) as u64;
    CommutingReport {
        order: n,
        pairs_total: total,
        pairs_commuting: direct,
        num_classes,
        c: ratio(direct, total),
    }
}

pub fn is_abelian(g: &GroupTable) -> bool {
    let n = g.order();
    (0..n).all(|x| (x + 1..n).all(|y| g.commute(x, y)))
}
