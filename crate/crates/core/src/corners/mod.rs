//! Corner statistics of subsets of `G x G`.
//!
//! For `A ⊆ G²` the corner count is the number of triples `(x, y, z)` with
//! `(x, y)`, `(zx, y)` and `(x, yz)` all in `A`; dividing by `|G|³` gives
//! the statistic `S(A)`. The same triples are the triangles of a tripartite
//! graph on three copies of `G` (see [`TripartiteGraph`]), which gives an
//! independent way to count them.

mod pairs;
mod shifts;
mod witness;

pub use pairs::PairSet;
pub use shifts::{
    shifted_intersection, Exhaustive, Sampled, ShiftFound, ShiftRegistry, ShiftSearch,
    ShiftSearchRequest,
};
pub use witness::{witness_finder, RAttempt, WitnessOptions, WitnessSuccess, WitnessTranscript};

use rayon::prelude::*;

use crate::bitset::{and2_count, and3_count, ElementSet};
use crate::group::GroupTable;
use crate::rational::{ratio, Rational};

/// For each `z`, the number of `(x, y)` with `(x, y)`, `(zx, y)`, `(x, yz)`
/// in `A`. Sums to the total corner count.
pub fn corner_counts_by_z(g: &GroupTable, a: &PairSet) -> Vec<u64> {
    let n = g.order();
    assert_eq!(a.n(), n, "pair set over a group of a different order");
    let cols = a.columns();
    (0..n)
        .into_par_iter()
        .map(|z| {
            let row_z = g.row(z);
            (0..n)
                .map(|y| {
                    // {x : zx in C[y]}
                    let shifted =
                        ElementSet::from_indices(n, cols[y].iter().map(|u| g.mul(g.inv(z), u)));
                    debug_assert!(shifted.iter().all(|x| cols[y].contains(row_z[x] as usize)));
                    let yz = g.mul(y, z);
                    and3_count(cols[y].words(), shifted.words(), cols[yz].words())
                })
                .sum::<u64>()
        })
        .collect()
}

/// Total corner count, i.e. `|G|³ · S(A)`.
pub fn corner_count(g: &GroupTable, a: &PairSet) -> u64 {
    corner_counts_by_z(g, a).iter().sum()
}

/// `S(A)` as an exact rational.
pub fn corner_statistic(g: &GroupTable, a: &PairSet) -> Rational {
    let n = g.order() as u64;
    ratio(corner_count(g, a), n * n * n)
}

/// Direct triple loop, for cross-checking.
pub fn corner_count_naive(g: &GroupTable, a: &PairSet) -> u64 {
    let n = g.order();
    let mut count = 0u64;
    for x in 0..n {
        for y in 0..n {
            if !a.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if a.contains(g.mul(z, x), y) && a.contains(x, g.mul(y, z)) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Three copies `V1, V2, V3` of `G` with edges
///
/// * `x ~ y` (V1–V2) when `(x, y) ∈ A`,
/// * `y ~ w` (V2–V3) when `(y⁻¹w, y) ∈ A`,
/// * `x ~ w` (V1–V3) when `(x, wx⁻¹) ∈ A`.
///
/// `(x, y, w)` is a triangle exactly when `(x, y, y⁻¹wx⁻¹)` is a corner
/// triple, and `(x, y, w) ↦ (x, y, y⁻¹wx⁻¹)` is a bijection on `G³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteGraph {
    pub n: usize,
    /// `e12[x]` = neighbours of `x ∈ V1` in `V2`.
    pub e12: Vec<ElementSet>,
    /// `e23[y]` = neighbours of `y ∈ V2` in `V3`.
    pub e23: Vec<ElementSet>,
    /// `e13[x]` = neighbours of `x ∈ V1` in `V3`.
    pub e13: Vec<ElementSet>,
}

impl TripartiteGraph {
    pub fn edge_counts(&self) -> [usize; 3] {
        let count = |m: &[ElementSet]| m.iter().map(ElementSet::len).sum();
        [count(&self.e12), count(&self.e23), count(&self.e13)]
    }
}

pub fn build_tripartite(g: &GroupTable, a: &PairSet) -> TripartiteGraph {
    let n = g.order();
    let e12 = (0..n).map(|x| a.row(x).clone()).collect();
    let e23 = (0..n)
        .map(|y| {
            let yi = g.inv(y);
            ElementSet::from_indices(n, (0..n).filter(|&w| a.contains(g.mul(yi, w), y)))
        })
        .collect();
    let e13 = (0..n)
        .map(|x| {
            let xi = g.inv(x);
            ElementSet::from_indices(n, (0..n).filter(|&w| a.contains(x, g.mul(w, xi))))
        })
        .collect();
    TripartiteGraph { n, e12, e23, e13 }
}

pub fn triangle_count(t: &TripartiteGraph) -> u64 {
    (0..t.n)
        .into_par_iter()
        .map(|x| {
            t.e12[x]
                .iter()
                .map(|y| and2_count(t.e23[y].words(), t.e13[x].words()))
                .sum::<u64>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::group::Limits;

    fn load(s: &str) -> GroupTable {
        Catalog::default().load(s, &Limits::default()).unwrap()
    }

    #[test]
    fn full_and_empty() {
        let g = load("S3");
        let full = PairSet::full(6);
        assert_eq!(corner_statistic(&g, &full), ratio(1, 1));
        assert_eq!(corner_statistic(&g, &PairSet::empty(6)), ratio(0, 1));
        let t = build_tripartite(&g, &full);
        assert_eq!(triangle_count(&t), 216);
        assert_eq!(triangle_count(&build_tripartite(&g, &PairSet::empty(6))), 0);
    }

    #[test]
    fn identity_row_gives_inverse_square() {
        for name in ["S3", "D4", "C5"] {
            let g = load(name);
            let n = g.order();
            let mut a = PairSet::empty(n);
            for y in 0..n {
                a.insert(g.identity(), y);
            }
            assert_eq!(corner_statistic(&g, &a), ratio(1, (n * n) as u64));
            assert_eq!(corner_count_naive(&g, &a), n as u64);
        }
    }

    #[test]
    fn single_pair_is_one_triangle() {
        let g = load("D4");
        let mut a = PairSet::empty(8);
        a.insert(3, 5);
        let t = build_tripartite(&g, &a);
        assert_eq!(t.edge_counts(), [1, 1, 1]);
        assert_eq!(triangle_count(&t), 1);
        assert!(t.e12[3].contains(5));
        // z = e, so w = yzx = yx.
        assert!(t.e23[5].contains(g.mul(5, 3)));
        assert!(t.e13[3].contains(g.mul(5, 3)));
    }
}
