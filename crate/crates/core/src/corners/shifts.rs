//! Strategies for choosing shift vectors `s ∈ G^r`.
//!
//! Given classes `A_1, ..., A_r` with densities `α_i`, each shift `s_i`
//! defines `𝒜_i = {(x, y) : x s_i y ∈ A_i}`, and the intersection
//! `𝒜 = 𝒜_1 ∩ ... ∩ 𝒜_r` has density `α_1 ⋯ α_r` on average over `s`.
//! A strategy looks for a shift vector whose intersection meets a target.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::PairSet;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// `∩_i {(x, y) : x s_i y ∈ A_i}`.
pub fn shifted_intersection(g: &GroupTable, classes: &[ElementSet], shifts: &[usize]) -> PairSet {
    assert_eq!(classes.len(), shifts.len(), "one shift per class");
    let n = g.order();
    let rows = (0..n)
        .map(|x| {
            let mut row = ElementSet::full(n);
            for (a, &s) in classes.iter().zip(shifts) {
                let h = g.inv(g.mul(x, s));
                row.intersect_with(&g.left_translate(h, a));
            }
            row
        })
        .collect();
    PairSet::from_rows(rows)
}

#[derive(Debug, Clone, Copy)]
pub struct ShiftSearchRequest<'a> {
    pub group: &'a GroupTable,
    /// The classes `A_1, ..., A_r` to shift.
    pub classes: &'a [ElementSet],
    /// Minimum acceptable `|𝒜|`.
    pub min_pairs: usize,
    pub seed: u64,
    pub trials: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftFound {
    pub shifts: Vec<usize>,
    pub pairs: PairSet,
    /// Candidates examined, counting the successful one.
    pub tried: u64,
}

pub trait ShiftSearch: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// `Ok(None)` when no candidate met the target.
    fn search(&self, req: &ShiftSearchRequest<'_>) -> Result<Option<ShiftFound>>;
}

/// Independent uniform shift vectors, one ChaCha stream per trial. Trials
/// run in parallel; the lowest-index success wins, so the result does not
/// depend on scheduling.
#[derive(Debug, Default, Clone, Copy)]
pub struct Sampled;

impl ShiftSearch for Sampled {
    fn name(&self) -> &'static str {
        "sampled"
    }

    fn summary(&self) -> &'static str {
        "seeded uniform sampling, lowest successful trial wins"
    }

    fn search(&self, req: &ShiftSearchRequest<'_>) -> Result<Option<ShiftFound>> {
        let n = req.group.order();
        let r = req.classes.len() as u64;
        let found = (0..req.trials).into_par_iter().find_map_first(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
            rng.set_stream((r << 32) | trial);
            let shifts: Vec<usize> = (0..req.classes.len())
                .map(|_| rng.gen_range(0..n))
                .collect();
            let pairs = shifted_intersection(req.group, req.classes, &shifts);
            (pairs.len() >= req.min_pairs).then(|| ShiftFound {
                shifts,
                pairs,
                tried: trial + 1,
            })
        });
        Ok(found)
    }
}

/// Every shift vector in lexicographic order; the first that meets the
/// target is returned. Limited to small groups and `r ≤ 2`.
#[derive(Debug, Default, Clone, Copy)]
pub struct Exhaustive;

impl Exhaustive {
    pub const MAX_ORDER: usize = 12;
    pub const MAX_R: usize = 2;
}

impl ShiftSearch for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn summary(&self) -> &'static str {
        "all shift vectors in lex order (n <= 12, r <= 2)"
    }

    fn search(&self, req: &ShiftSearchRequest<'_>) -> Result<Option<ShiftFound>> {
        let n = req.group.order();
        let r = req.classes.len();
        if n > Self::MAX_ORDER || r > Self::MAX_R {
            return Err(Error::InvalidParameter(format!(
                "exhaustive shift search needs order <= {} and r <= {} (got {n}, {r})",
                Self::MAX_ORDER,
                Self::MAX_R
            )));
        }
        let total = (n as u64).pow(r as u32);
        let found = (0..total).into_par_iter().find_map_first(|code| {
            let mut c = code;
            let mut shifts = vec![0; r];
            for s in shifts.iter_mut().rev() {
                *s = (c % n as u64) as usize;
                c /= n as u64;
            }
            let pairs = shifted_intersection(req.group, req.classes, &shifts);
            (pairs.len() >= req.min_pairs).then(|| ShiftFound {
                shifts,
                pairs,
                tried: code + 1,
            })
        });
        Ok(found)
    }
}

/// Shift strategies by name.
pub struct ShiftRegistry {
    strategies: BTreeMap<&'static str, Box<dyn ShiftSearch>>,
}

impl ShiftRegistry {
    pub fn empty() -> Self {
        Self {
            strategies: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, s: Box<dyn ShiftSearch>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ShiftSearch> {
        self.strategies
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown shift strategy '{name}'")))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }
}

impl Default for ShiftRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(Sampled));
        reg.register(Box::new(Exhaustive));
        reg
    }
}
