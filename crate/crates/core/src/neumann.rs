//! Explicit covers with no monochromatic non-commuting quadruple.
//!
//! Given `c(G) >= epsilon`, the construction runs as follows.
//!
//! 1. `X` is the set of elements whose conjugacy class has at most
//!    `1/eta` members, and `kappa = |X|/|G|`.
//! 2. `s` is the largest integer with `|X^s| >= (1 + (1-nu)(s-1))|X|`.
//! 3. `H` is a subgroup inside `X^(s+1)` with `|H| > nu|X|`. Its existence
//!    is guaranteed by Kemperman's theorem on product sets; here it is found
//!    by enumerating subgroups.
//! 4. `K` is the kernel of `G` acting on the left cosets of `H`; it is
//!    normal and every element has class size at most `eta^-(s+1)`.
//! 5. The cover is the nontrivial cosets of `K` together with the slices
//!    `{x in K : x is the i-th member of its class}`.
//!
//! A coset class `gK` cannot hold `x`, `y` and `xy` together, and two
//! elements `xy`, `yx` of one slice are conjugate with the same rank, hence
//! equal. So no class of the cover contains a non-commuting quadruple.

use num::bigint::{BigInt, BigUint};
use num::{One, Signed, ToPrimitive, Zero};

use crate::bitset::ElementSet;
use crate::colouring::{cover_avoids, Cover};
use crate::error::{Error, Result};
use crate::group::{ConjugacyData, GroupTable, Limits};
use crate::rational::{
    floor_micro, floor_rational_power, fmt_fraction, from_int, ratio, to_f64, Rational,
};
use crate::stats::commuting_probability;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeumannParams {
    pub epsilon: Rational,
    pub eta: Rational,
    pub nu: Rational,
}

impl NeumannParams {
    /// `nu = 1/2` and the default `eta` for this `epsilon`.
    pub fn for_epsilon(epsilon: Rational) -> Result<Self> {
        let eta = default_eta(&epsilon)?;
        let p = Self {
            epsilon,
            eta,
            nu: ratio(1, 2),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        if self.epsilon <= zero || self.epsilon > one {
            return Err(Error::InvalidParameter("epsilon must lie in (0, 1]".into()));
        }
        if self.nu <= zero || self.nu >= one {
            return Err(Error::InvalidParameter("nu must lie in (0, 1)".into()));
        }
        if self.eta <= zero || self.eta >= self.epsilon {
            return Err(Error::InvalidParameter(
                "eta must lie in (0, epsilon)".into(),
            ));
        }
        Ok(())
    }
}

/// `min(epsilon / ln(1/epsilon), epsilon / 2)`.
///
/// The logarithmic choice is irrational, so it is rounded down to a
/// multiple of `10^-6` first. For `epsilon >= 1/e` the minimum is always
/// `epsilon / 2`.
pub fn default_eta(epsilon: &Rational) -> Result<Rational> {
    if !epsilon.is_positive() || epsilon > &Rational::one() {
        return Err(Error::InvalidParameter("epsilon must lie in (0, 1]".into()));
    }
    let half = epsilon / from_int(2);
    let e = to_f64(epsilon);
    let log_inv = -e.ln();
    if log_inv <= 1.0 {
        return Ok(half);
    }
    let approx = floor_micro(e / log_inv);
    Ok(if approx.is_positive() && approx < half {
        approx
    } else {
        half
    })
}

/// `X = {x : |x^G| <= 1/eta}`.
pub fn small_class_set(conj: &ConjugacyData, eta: &Rational) -> ElementSet {
    let n = conj.class_id.len();
    ElementSet::from_indices(
        n,
        (0..n).filter(|&x| from_int(conj.class_size_of(x) as u64) * eta <= Rational::one()),
    )
}

/// Sizes `|X^1|, |X^2|, ...` and the largest `s` with
/// `|X^s| >= (1 + (1-nu)(s-1))|X|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    pub s: usize,
    /// `powers[i]` is `X^(i+1)`; the last entry is `X^(s+1)`.
    pub powers: Vec<ElementSet>,
}

impl Growth {
    pub fn product(&self, t: usize) -> &ElementSet {
        &self.powers[t - 1]
    }
}

fn growth_threshold(nu: &Rational, s: usize, x_len: usize) -> Rational {
    (Rational::one() + (Rational::one() - nu) * from_int(s as u64 - 1)) * from_int(x_len as u64)
}

pub fn growth_index(g: &GroupTable, x: &ElementSet, nu: &Rational) -> Growth {
    assert!(x.contains(g.identity()), "X must contain the identity");
    let n = g.order();
    let holds = |s: usize, size: usize| from_int(size as u64) >= growth_threshold(nu, s, x.len());
    let mut powers = vec![x.clone()];
    let mut s = 1;
    // Past this point the threshold exceeds |G| and can never hold again.
    let mut t = 1;
    while growth_threshold(nu, t + 1, x.len()) <= from_int(n as u64) {
        let next = g.product_set(&powers[t - 1], x);
        powers.push(next);
        t += 1;
        if holds(t, powers[t - 1].len()) {
            s = t;
        }
    }
    powers.truncate(s);
    let next = g.product_set(&powers[s - 1], x);
    powers.push(next);
    Growth { s, powers }
}

/// The largest subgroup inside `product` with more than `nu|X|` elements;
/// ties go to the lexicographically least member list.
pub fn find_subgroup_in_product(
    g: &GroupTable,
    x_len: usize,
    product: &ElementSet,
    nu: &Rational,
    limits: &Limits,
) -> Result<ElementSet> {
    let big_enough = |h: &ElementSet| from_int(h.len() as u64) > nu * from_int(x_len as u64);
    // A product set that is itself a subgroup is the unique largest candidate.
    if g.is_subgroup(product) && big_enough(product) {
        return Ok(product.clone());
    }
    let subgroups = g.subgroups_within(product, limits)?;
    subgroups
        .iter()
        .filter(|h| big_enough(h))
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.lex_cmp(a)))
        .cloned()
        .ok_or_else(|| {
            Error::Internal(format!(
                "no subgroup of size > {} inside a product set of size {} (|X| = {x_len}, {} subgroups inside)",
                fmt_fraction(&(nu * from_int(x_len as u64))),
                product.len(),
                subgroups.len()
            ))
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeumannArtifacts {
    pub params: NeumannParams,
    pub commuting_probability: Rational,
    pub x: ElementSet,
    pub kappa: Rational,
    pub s: usize,
    /// `|X^1|, ..., |X^(s+1)|`.
    pub product_sizes: Vec<usize>,
    pub product_set: ElementSet,
    pub h: ElementSet,
    pub k: ElementSet,
    /// `floor(eta^-((1/kappa + 1 - 2 nu) / (1 - nu)))`.
    pub r: BigInt,
    /// 1-based rank of each element within its conjugacy class.
    pub class_labels: Vec<usize>,
    pub cover: Cover,
    /// Number of leading cover classes that are cosets of `K`.
    pub coset_classes: usize,
    /// `floor(1/(nu kappa))! - 1 + R`.
    pub size_bound: BigInt,
}

impl NeumannArtifacts {
    /// `(1/kappa + 1 - 2nu) / (1 - nu)`.
    pub fn r_exponent(&self) -> Rational {
        r_exponent(&self.kappa, &self.params.nu)
    }

    /// `log|cover| / (eps^-1 log eps^-1)`, display only; `None` for `eps = 1`.
    pub fn exponent_ratio(&self) -> Option<f64> {
        let eps = to_f64(&self.params.epsilon);
        let denom = (1.0 / eps) * (1.0 / eps).ln();
        (denom > 0.0).then(|| (self.cover.len() as f64).ln() / denom)
    }

    /// Report lines in `key=value` form.
    pub fn transcript(&self) -> Vec<(&'static str, String)> {
        vec![
            ("epsilon", fmt_fraction(&self.params.epsilon)),
            ("eta", fmt_fraction(&self.params.eta)),
            ("nu", fmt_fraction(&self.params.nu)),
            ("c", fmt_fraction(&self.commuting_probability)),
            ("X", self.x.len().to_string()),
            ("kappa", fmt_fraction(&self.kappa)),
            ("s", self.s.to_string()),
            (
                "product_sizes",
                self.product_sizes
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            ("H", self.h.len().to_string()),
            ("K", self.k.len().to_string()),
            ("R", self.r.to_string()),
            ("coset_classes", self.coset_classes.to_string()),
            (
                "slice_classes",
                (self.cover.len() - self.coset_classes).to_string(),
            ),
            ("cover_size", self.cover.len().to_string()),
            ("size_bound", self.size_bound.to_string()),
            (
                "exponent_ratio",
                self.exponent_ratio()
                    .map_or_else(|| "n/a".to_string(), |r| format!("{r:.6}")),
            ),
        ]
    }
}

fn r_exponent(kappa: &Rational, nu: &Rational) -> Rational {
    let one = Rational::one();
    (kappa.recip() + &one - nu * from_int(2)) / (one - nu)
}

/// `floor(1/eta ^ exponent)`.
pub fn class_size_cap(eta: &Rational, exponent: &Rational) -> BigInt {
    floor_rational_power(&eta.recip(), exponent)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `floor(1/(nu kappa))! - 1 + R`.
pub fn cover_size_bound(kappa: &Rational, nu: &Rational, r: &BigInt) -> BigInt {
    let idx = (nu * kappa).recip().floor().to_integer();
    let f = factorial(idx.to_u64().expect("index bound fits in u64"));
    BigInt::from(f) - 1 + r
}

/// Runs the full construction and checks that the cover avoids
/// non-commuting quadruples.
pub fn build_cover(
    g: &GroupTable,
    params: &NeumannParams,
    limits: &Limits,
) -> Result<NeumannArtifacts> {
    params.validate()?;
    let c = commuting_probability(g).c;
    if params.epsilon > c {
        return Err(Error::EpsilonTooLarge {
            epsilon: fmt_fraction(&params.epsilon),
            c: fmt_fraction(&c),
        });
    }
    let n = g.order();
    let conj = g.conjugacy();
    let x = small_class_set(&conj, &params.eta);
    let kappa = ratio(x.len() as u64, n as u64);
    let growth = growth_index(g, &x, &params.nu);
    let s = growth.s;
    let product = growth.product(s + 1).clone();
    let h = find_subgroup_in_product(g, x.len(), &product, &params.nu, limits)?;
    let k = g.coset_action_kernel(&h)?;

    let class_labels: Vec<usize> = (0..n).map(|v| conj.rank_in_class(v)).collect();
    let mut classes: Vec<ElementSet> = g
        .left_cosets(&k)
        .into_iter()
        .filter(|coset| !coset.contains(g.identity()))
        .collect();
    let coset_classes = classes.len();
    let max_rank = k.iter().map(|v| class_labels[v]).max().unwrap_or(0);
    for rank in 1..=max_rank {
        classes.push(ElementSet::from_indices(
            n,
            k.iter().filter(|&v| class_labels[v] == rank),
        ));
    }
    let cover = Cover::new(classes, n)?;

    let r = class_size_cap(&params.eta, &r_exponent(&kappa, &params.nu));
    let size_bound = cover_size_bound(&kappa, &params.nu, &r);

    if let Some(w) = cover_avoids(g, &cover)? {
        return Err(Error::Internal(format!(
            "constructed cover has a non-commuting quadruple in class {} at ({}, {})",
            w.class, w.x, w.y
        )));
    }

    Ok(NeumannArtifacts {
        params: params.clone(),
        commuting_probability: c,
        kappa,
        s,
        product_sizes: growth.powers.iter().map(ElementSet::len).collect(),
        product_set: product,
        x,
        h,
        k,
        r,
        class_labels,
        cover,
        coset_classes,
        size_bound,
    })
}

/// [`build_cover`] with `epsilon = c(G)` and default `eta`, `nu`.
pub fn build_default_cover(g: &GroupTable, limits: &Limits) -> Result<NeumannArtifacts> {
    let params = NeumannParams::for_epsilon(commuting_probability(g).c)?;
    build_cover(g, &params, limits)
}
