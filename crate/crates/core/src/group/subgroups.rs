use std::collections::HashSet;

use super::{GroupTable, Limits};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Subgroups ordered by size, then lexicographically by member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupList {
    pub subgroups: Vec<ElementSet>,
}

impl SubgroupList {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElementSet> {
        self.subgroups.iter()
    }
}

pub(super) fn closure(g: &GroupTable, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::singleton(g.order(), g.identity());
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

pub(super) fn all_subgroups(g: &GroupTable, limits: &Limits) -> Result<SubgroupList> {
    subgroups_within(g, &g.elements(), limits)
}

/// Cyclic-extension lattice growth restricted to subsets of `within`.
///
/// Every subgroup `H` inside `within` is reached by adding its elements one
/// at a time, and each intermediate subgroup lies inside `H`, so restricting
/// the search loses nothing.
pub(super) fn subgroups_within(
    g: &GroupTable,
    within: &ElementSet,
    limits: &Limits,
) -> Result<SubgroupList> {
    let n = g.order();
    if n > limits.subgroup_bound {
        return Err(Error::SizeLimit {
            limit: limits.subgroup_bound,
            partial: n,
        });
    }
    if within.universe() != n {
        return Err(Error::OrderMismatch {
            expected: n,
            found: within.universe(),
        });
    }
    let trivial = ElementSet::singleton(n, g.identity());
    if !within.contains(g.identity()) {
        return Ok(SubgroupList { subgroups: vec![] });
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    seen.insert(trivial.clone());
    let mut found = vec![(trivial, Vec::<usize>::new())];
    let mut head = 0;
    while head < found.len() {
        let (h, gens) = found[head].clone();
        head += 1;
        for x in within.iter() {
            if h.contains(x) {
                continue;
            }
            let mut ext_gens = gens.clone();
            ext_gens.push(x);
            let k = closure(g, &ext_gens);
            if k.is_subset(within) && seen.insert(k.clone()) {
                found.push((k, ext_gens));
            }
        }
    }
    let mut subgroups: Vec<ElementSet> = found.into_iter().map(|(h, _)| h).collect();
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)));
    Ok(SubgroupList { subgroups })
}

pub(super) fn check_subgroup(g: &GroupTable, h: &ElementSet) -> Result<()> {
    if h.universe() != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            found: h.universe(),
        });
    }
    if !h.contains(g.identity()) {
        return Err(Error::NotSubgroup("missing identity".into()));
    }
    for a in h.iter() {
        if !h.contains(g.inv(a)) {
            return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
        }
        for b in h.iter() {
            let ab = g.mul(a, b);
            if !h.contains(ab) {
                return Err(Error::NotSubgroup(format!("{a}*{b} = {ab} missing")));
            }
        }
    }
    Ok(())
}

pub(super) fn check_normal(g: &GroupTable, k: &ElementSet) -> Result<()> {
    check_subgroup(g, k)?;
    for w in 0..g.order() {
        if k.iter().any(|x| !k.contains(g.conjugate(x, w))) {
            return Err(Error::NotNormal { witness: w });
        }
    }
    Ok(())
}

pub(super) fn left_cosets(g: &GroupTable, k: &ElementSet) -> Vec<ElementSet> {
    let n = g.order();
    let mut assigned = ElementSet::empty(n);
    let mut cosets = Vec::new();
    for x in 0..n {
        if assigned.contains(x) {
            continue;
        }
        let c = g.left_translate(x, k);
        assigned.union_with(&c);
        cosets.push(c);
    }
    cosets
}

pub(super) fn quotient(g: &GroupTable, k: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
    check_normal(g, k)?;
    let cosets = left_cosets(g, k);
    let mut projection = vec![0usize; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for x in c.iter() {
            projection[x] = i;
        }
    }
    let reps: Vec<usize> = cosets.iter().map(|c| c.first().unwrap()).collect();
    let m = reps.len();
    let mul = reps
        .iter()
        .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
        .map(|(a, b)| projection[g.mul(a, b)] as u32)
        .collect();
    let name = format!("{}/K{}", g.name(), k.len());
    let q = GroupTable::from_flat(mul, m, name, 0)?;
    Ok((q, projection))
}

pub(super) fn coset_action_kernel(g: &GroupTable, h: &ElementSet) -> Result<ElementSet> {
    check_subgroup(g, h)?;
    let n = g.order();
    // x g H = g H  iff  g^-1 x g in H.
    Ok(ElementSet::from_indices(
        n,
        h.iter()
            .filter(|&x| (0..n).all(|w| h.contains(g.conjugate(x, w)))),
    ))
}
