use rayon::prelude::*;

use super::Cover;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A non-commuting monochromatic quadruple: `x, y, xy, yx` all lie in
/// class `class` and `xy != yx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadWitness {
    pub class: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadCount {
    /// `(total, noncommuting)` per class.
    pub per_class: Vec<(u64, u64)>,
    pub witness: Option<QuadWitness>,
}

/// Ordered pairs `(x, y)` in `A^2` with `xy` and `yx` in `A`, and how many
/// of those have `xy != yx`. Diagonal pairs count.
pub fn count_quadruples(g: &GroupTable, a: &ElementSet) -> (u64, u64) {
    let members = a.to_vec();
    members
        .par_iter()
        .map(|&x| {
            let row = g.row(x);
            let mut total = 0u64;
            let mut noncomm = 0u64;
            for &y in &members {
                let xy = row[y] as usize;
                let yx = g.mul(y, x);
                if a.contains(xy) && a.contains(yx) {
                    total += 1;
                    noncomm += (xy != yx) as u64;
                }
            }
            (total, noncomm)
        })
        .reduce(|| (0, 0), |p, q| (p.0 + q.0, p.1 + q.1))
}

fn first_violation(g: &GroupTable, a: &ElementSet) -> Option<(usize, usize)> {
    for x in a.iter() {
        for y in a.iter() {
            let xy = g.mul(x, y);
            let yx = g.mul(y, x);
            if xy != yx && a.contains(xy) && a.contains(yx) {
                return Some((x, y));
            }
        }
    }
    None
}

fn check_order(g: &GroupTable, c: &Cover) -> Result<()> {
    if c.group_order() != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            found: c.group_order(),
        });
    }
    Ok(())
}

pub fn quad_counts(g: &GroupTable, c: &Cover) -> Result<QuadCount> {
    check_order(g, c)?;
    let per_class = c.classes().iter().map(|a| count_quadruples(g, a)).collect();
    Ok(QuadCount {
        per_class,
        witness: cover_avoids(g, c)?,
    })
}

/// `None` when no class contains a non-commuting quadruple; otherwise the
/// first witness in (class, x, y) order.
pub fn cover_avoids(g: &GroupTable, c: &Cover) -> Result<Option<QuadWitness>> {
    check_order(g, c)?;
    Ok(c.classes()
        .iter()
        .enumerate()
        .find_map(|(class, a)| first_violation(g, a).map(|(x, y)| QuadWitness { class, x, y })))
}
