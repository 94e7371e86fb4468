//! Constructive extraction of a colour class rich in quadruples.
//!
//! Sort the classes by density `α_1 ≥ ... ≥ α_k`. For `r = 1, 2, ...` pick
//! shifts so that `𝒜 = ∩_{i≤r} 𝒜_i` has at least `α_1⋯α_r·n²` pairs and
//! measure `Ŝ = S(𝒜)`. Once `Ŝ/3 ≥ α_{r+1} + ... + α_k`, the set
//! `Z = {z : corners through z ≥ Ŝn²/3}` minus the low-density classes
//! still has at least `Ŝn/3` elements, so some `A_i` with `i ≤ r` meets it in
//! at least `Ŝn/(3r)` of them. Every corner `(x, y, z)` of `𝒜` with `z ∈ A_i`
//! gives the quadruple `(z, u)` with `u = x s_i y`, and the map
//! `(x, y, z) ↦ (u, z)` has fibres of size `n`, so `A_i` contains at least
//! `Ŝ²n²/(9r)` quadruples.

use num::{BigInt, Zero};

use super::shifts::{ShiftRegistry, ShiftSearchRequest};
use super::{corner_counts_by_z, PairSet};
use crate::bitset::ElementSet;
use crate::colouring::{count_quadruples, Cover};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::rational::{ceil, fmt_fraction, from_int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessOptions {
    pub seed: u64,
    /// Shift candidates per `r` for the sampled strategy.
    pub trials: u64,
    pub strategy: String,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 64,
            strategy: "sampled".into(),
        }
    }
}

/// What happened at one value of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RAttempt {
    pub r: usize,
    /// `⌈α_1⋯α_r·n²⌉`.
    pub min_pairs: usize,
    pub shifts: Option<Vec<usize>>,
    pub tried: u64,
    pub intersection_size: usize,
    pub corners: u64,
    /// `α_{r+1} + ... + α_k`.
    pub tail: Rational,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSuccess {
    pub r: usize,
    pub shifts: Vec<usize>,
    pub intersection_density: Rational,
    pub s_measured: Rational,
    pub z_size: usize,
    /// `|Z ∖ (A_{r+1} ∪ ... ∪ A_k)|`.
    pub z_star_size: usize,
    /// 1-based position of the chosen class in density order.
    pub chosen_class: usize,
    /// Index of the chosen class in the input cover.
    pub class_index: usize,
    /// `|Z* ∩ A_i|`.
    pub z_prime_size: usize,
    /// `⌈Ŝ²n²/(9r)⌉`.
    pub quad_lower_bound: BigInt,
    /// `Σ_{z ∈ Z*∩A_i} ⌈corners(z)/n⌉`, a sharper bound from the same fibres.
    pub fibre_bound: u64,
    pub verified_quads: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTranscript {
    pub order: usize,
    /// Densities in non-increasing order.
    pub densities: Vec<Rational>,
    /// `class_order[j]` is the input index of the `j`-th densest class.
    pub class_order: Vec<usize>,
    pub strategy: String,
    pub attempts: Vec<RAttempt>,
    /// `None` when no `r` was accepted.
    pub success: Option<WitnessSuccess>,
}

impl WitnessTranscript {
    /// Stable `key=value` rendering.
    pub fn lines(&self) -> Vec<(String, String)> {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut out = vec![
            ("order".to_string(), self.order.to_string()),
            (
                "densities".into(),
                self.densities
                    .iter()
                    .map(fmt_fraction)
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            ("class_order".into(), join(&self.class_order)),
            ("strategy".into(), self.strategy.clone()),
        ];
        for a in &self.attempts {
            let shifts = a.shifts.as_deref().map_or("none".to_string(), join);
            out.push((
                format!("attempt.{}", a.r),
                format!(
                    "min_pairs={} shifts={} tried={} pairs={} corners={} tail={} accepted={}",
                    a.min_pairs,
                    shifts,
                    a.tried,
                    a.intersection_size,
                    a.corners,
                    fmt_fraction(&a.tail),
                    a.accepted
                ),
            ));
        }
        match &self.success {
            None => out.push(("success".into(), "false".into())),
            Some(s) => {
                out.push(("success".into(), "true".into()));
                out.push(("r".into(), s.r.to_string()));
                out.push(("shifts".into(), join(&s.shifts)));
                out.push((
                    "intersection_density".into(),
                    fmt_fraction(&s.intersection_density),
                ));
                out.push(("S_measured".into(), fmt_fraction(&s.s_measured)));
                out.push(("Z_size".into(), s.z_size.to_string()));
                out.push(("Z_star_size".into(), s.z_star_size.to_string()));
                out.push(("chosen_class".into(), s.chosen_class.to_string()));
                out.push(("class_index".into(), s.class_index.to_string()));
                out.push(("Z_prime_size".into(), s.z_prime_size.to_string()));
                out.push(("quad_lower_bound".into(), s.quad_lower_bound.to_string()));
                out.push(("fibre_bound".into(), s.fibre_bound.to_string()));
                out.push(("verified_quads".into(), s.verified_quads.to_string()));
            }
        }
        out
    }
}

/// Runs the extraction on `cover` with shifts from the named strategy in
/// `registry`.
pub fn witness_finder(
    g: &GroupTable,
    cover: &Cover,
    opts: &WitnessOptions,
    registry: &ShiftRegistry,
) -> Result<WitnessTranscript> {
    let n = g.order();
    if cover.group_order() != n {
        return Err(Error::OrderMismatch {
            expected: n,
            found: cover.group_order(),
        });
    }
    if opts.trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    let strategy = registry.get(&opts.strategy)?;
    let nn = (n * n) as u64;

    let mut class_order: Vec<usize> = (0..cover.len()).collect();
    // Stable: equal densities keep input order.
    class_order.sort_by(|&a, &b| cover.classes()[b].len().cmp(&cover.classes()[a].len()));
    let sorted: Vec<ElementSet> = class_order
        .iter()
        .map(|&i| cover.classes()[i].clone())
        .collect();
    let densities: Vec<Rational> = sorted
        .iter()
        .map(|a| ratio(a.len() as u64, n as u64))
        .collect();
    let k = sorted.len();

    let mut attempts = Vec::new();
    let mut success = None;
    let mut product = from_int(1);
    for r in 1..=k {
        product *= &densities[r - 1];
        let tail: Rational = densities[r..].iter().sum();
        let min_pairs = ceil(&(&product * from_int(nn)));
        let min_pairs: usize = min_pairs.try_into().expect("bounded by n^2");
        let req = ShiftSearchRequest {
            group: g,
            classes: &sorted[..r],
            min_pairs,
            seed: opts.seed,
            trials: opts.trials,
        };
        let Some(found) = strategy.search(&req)? else {
            attempts.push(RAttempt {
                r,
                min_pairs,
                shifts: None,
                tried: opts.trials,
                intersection_size: 0,
                corners: 0,
                tail,
                accepted: false,
            });
            continue;
        };
        let by_z = corner_counts_by_z(g, &found.pairs);
        let total: u64 = by_z.iter().sum();
        let n3 = nn * n as u64;
        // Ŝ/3 ≥ tail  <=>  total ≥ 3·tail·n³
        let accepted = total > 0 && from_int(total) >= &tail * from_int(3 * n3);
        attempts.push(RAttempt {
            r,
            min_pairs,
            shifts: Some(found.shifts.clone()),
            tried: found.tried,
            intersection_size: found.pairs.len(),
            corners: total,
            tail,
            accepted,
        });
        if accepted {
            success = Some(extract(
                g,
                &sorted,
                &class_order,
                r,
                found.shifts,
                &found.pairs,
                &by_z,
            ));
            break;
        }
    }

    Ok(WitnessTranscript {
        order: n,
        densities,
        class_order,
        strategy: strategy.name().to_string(),
        attempts,
        success,
    })
}

fn extract(
    g: &GroupTable,
    sorted: &[ElementSet],
    class_order: &[usize],
    r: usize,
    shifts: Vec<usize>,
    pairs: &PairSet,
    by_z: &[u64],
) -> WitnessSuccess {
    let n = g.order();
    let n64 = n as u64;
    let total: u64 = by_z.iter().sum();
    // z ∈ Z  <=>  corners(z)/n² ≥ Ŝ/3  <=>  3·n·corners(z) ≥ total
    let z = ElementSet::from_indices(
        n,
        (0..n).filter(|&z| 3 * n64 as u128 * by_z[z] as u128 >= total as u128),
    );
    let mut z_star = z.clone();
    for a in &sorted[r..] {
        z_star.difference_with(a);
    }
    let (best, z_prime_size) = (0..r)
        .map(|i| (i, z_star.intersection_len(&sorted[i])))
        .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
    let z_prime = z_star.intersection(&sorted[best]);

    let fibre_bound = z_prime.iter().map(|z| by_z[z].div_ceil(n64)).sum();
    let s_measured = ratio(total, n64 * n64 * n64);
    let bound = ratio(
        BigInt::from(total) * BigInt::from(total),
        BigInt::from(9 * r as u64) * BigInt::from(n64).pow(4),
    );
    let quad_lower_bound = ceil(&bound).max(BigInt::zero());
    let (verified_quads, _) = count_quadruples(g, &sorted[best]);

    WitnessSuccess {
        r,
        shifts,
        intersection_density: pairs.density(),
        s_measured,
        z_size: z.len(),
        z_star_size: z_star.len(),
        chosen_class: best + 1,
        class_index: class_order[best],
        z_prime_size,
        quad_lower_bound,
        fibre_bound,
        verified_quads,
    }
}
