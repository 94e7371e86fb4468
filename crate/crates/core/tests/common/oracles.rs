//! Brute-force reference implementations. Deliberately naive: every check
//! materialises tuples or scans definitions directly and shares no code
//! paths with the library beyond `GroupTable::mul`/`inv`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ncschur::{Cover, ElementSet, GroupTable, PairSet};

/// All quadruples `(x, y, xy, yx)` inside `a`, as a materialised list.
pub fn quadruples(g: &GroupTable, a: &[usize]) -> Vec<(usize, usize, usize, usize)> {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    let mut out = Vec::new();
    for &x in &set {
        for &y in &set {
            let xy = g.mul(x, y);
            let yx = g.mul(y, x);
            if set.contains(&xy) && set.contains(&yx) {
                out.push((x, y, xy, yx));
            }
        }
    }
    out
}

/// `(total, noncommuting)` quadruple counts by materialisation.
pub fn quad_counts(g: &GroupTable, a: &[usize]) -> (u64, u64) {
    let quads = quadruples(g, a);
    let nc = quads.iter().filter(|q| q.2 != q.3).count();
    (quads.len() as u64, nc as u64)
}

pub fn commuting_pairs(g: &GroupTable) -> u64 {
    let n = g.order();
    let mut c = 0;
    for x in 0..n {
        for y in 0..n {
            if g.mul(x, y) == g.mul(y, x) {
                c += 1;
            }
        }
    }
    c
}

/// Conjugacy classes as sorted vectors, ordered by least element.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Subgroup generated by `gens`, by repeated multiplication until stable.
pub fn closure(g: &GroupTable, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(g.identity());
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .chain(set.iter().copied())
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn is_subgroup(g: &GroupTable, h: &[usize]) -> bool {
    let set: BTreeSet<usize> = h.iter().copied().collect();
    set.contains(&g.identity())
        && set
            .iter()
            .all(|&a| set.contains(&g.inv(a)) && set.iter().all(|&b| set.contains(&g.mul(a, b))))
}

pub fn is_normal(g: &GroupTable, k: &[usize]) -> bool {
    let set: BTreeSet<usize> = k.iter().copied().collect();
    is_subgroup(g, k)
        && (0..g.order()).all(|h| {
            set.iter()
                .all(|&x| set.contains(&g.mul(g.mul(g.inv(h), x), h)))
        })
}

/// Largest normal subgroup inside `h`: `∩_g g H g⁻¹`.
pub fn normal_core(g: &GroupTable, h: &[usize]) -> BTreeSet<usize> {
    let set: BTreeSet<usize> = h.iter().copied().collect();
    set.iter()
        .copied()
        .filter(|&x| (0..g.order()).all(|t| set.contains(&g.mul(g.mul(g.inv(t), x), t))))
        .collect()
}

/// Whether some class of the cover holds a non-commuting quadruple.
pub fn has_violation(g: &GroupTable, classes: &[Vec<usize>]) -> bool {
    classes.iter().any(|c| quad_counts(g, c).1 > 0)
}

pub fn cover_classes(c: &Cover) -> Vec<Vec<usize>> {
    c.classes().iter().map(ElementSet::to_vec).collect()
}

/// Every colouring of `G` with at most `m` colours (all `m^n` label
/// vectors) has a monochromatic non-commuting quadruple.
pub fn every_colouring_violates(g: &GroupTable, m: usize) -> bool {
    let n = g.order();
    let mut labels = vec![0usize; n];
    loop {
        let classes: Vec<Vec<usize>> = (0..m)
            .map(|c| (0..n).filter(|&x| labels[x] == c).collect())
            .collect();
        if !has_violation(g, &classes) {
            return false;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            labels[i] += 1;
            if labels[i] < m {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// Corner count straight from the definition, with `z` outermost.
pub fn corners(g: &GroupTable, a: &PairSet) -> u64 {
    let n = g.order();
    let mut count = 0;
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                if a.contains(x, y) && a.contains(g.mul(z, x), y) && a.contains(x, g.mul(y, z)) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Triangles of the tripartite graph counted over all `(x, y, w)`.
pub fn triangles(g: &GroupTable, a: &PairSet) -> u64 {
    let n = g.order();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if !a.contains(x, y) {
                continue;
            }
            for w in 0..n {
                let e23 = a.contains(g.mul(g.inv(y), w), y);
                let e13 = a.contains(x, g.mul(w, g.inv(x)));
                if e23 && e13 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `Σ_s |{(x, y) : x s y ∈ A}|` over every single shift `s`.
pub fn shift_total(g: &GroupTable, a: &[usize]) -> u64 {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    let n = g.order();
    let mut total = 0;
    for s in 0..n {
        for x in 0..n {
            for y in 0..n {
                if set.contains(&g.mul(g.mul(x, s), y)) {
                    total += 1;
                }
            }
        }
    }
    total
}

/// Re-derives every invariant of a cover-construction run from scratch.
/// Returns the list of violated invariants (empty when all hold).
pub fn neumann_violations(g: &GroupTable, art: &ncschur::neumann::NeumannArtifacts) -> Vec<String> {
    use ncschur::rational::{from_int, ratio, Rational};

    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };
    let n = g.order();
    let one = from_int(1);
    let (eps, eta, nu) = (&art.params.epsilon, &art.params.eta, &art.params.nu);
    let classes = conjugacy_classes(g);
    let class_size = |x: usize| classes.iter().find(|c| c.contains(&x)).unwrap().len();

    // X and kappa.
    let x: BTreeSet<usize> = (0..n)
        .filter(|&v| from_int(class_size(v) as u64) * eta <= one)
        .collect();
    check(
        art.x.to_vec() == x.iter().copied().collect::<Vec<_>>(),
        "X = small-class set",
    );
    check(
        art.kappa == ratio(x.len() as u64, n as u64),
        "kappa = |X|/|G|",
    );
    check(art.kappa >= (eps - eta) / (&one - eta), "kappa bound");

    // Growth index: s holds, and no larger t does.
    let threshold =
        |t: usize| (&one + (&one - nu) * from_int(t as u64 - 1)) * from_int(x.len() as u64);
    let mut powers = vec![x.clone()];
    while powers.len() < 2 * n + 2 {
        let last = powers.last().unwrap();
        let next: BTreeSet<usize> = last
            .iter()
            .flat_map(|&a| x.iter().map(move |&b| g.mul(a, b)))
            .collect();
        powers.push(next);
    }
    let size = |t: usize| from_int(powers[t - 1].len() as u64);
    let s = art.s;
    check(
        s >= 1 && size(s) >= threshold(s),
        "growth display holds at s",
    );
    check(
        size(s + 1) < threshold(s + 1),
        "growth display fails at s+1",
    );
    check(
        (s + 1..powers.len()).all(|t| size(t) < threshold(t)),
        "s is maximal",
    );
    check(
        art.product_set.to_vec() == powers[s].iter().copied().collect::<Vec<_>>(),
        "product set = X^(s+1)",
    );

    // H.
    let h = art.h.to_vec();
    check(is_subgroup(g, &h), "H is a subgroup");
    check(h.iter().all(|v| powers[s].contains(v)), "H inside X^(s+1)");
    check(
        from_int(h.len() as u64) > nu * from_int(x.len() as u64),
        "|H| > nu|X|",
    );
    check(
        ratio(n as u64, h.len() as u64) < (nu * &art.kappa).recip(),
        "|G/H| < 1/(nu kappa)",
    );

    // K.
    let k = art.k.to_vec();
    check(
        k == normal_core(g, &h).into_iter().collect::<Vec<_>>(),
        "K = normal core of H",
    );
    check(is_normal(g, &k), "K normal");
    check(k.iter().all(|v| h.contains(v)), "K inside H");
    let index_h = (n / h.len()) as u64;
    let fact: u128 = (1..=index_h.min(30) as u128).product();
    check(
        index_h > 30 || (n / k.len()) as u128 <= fact,
        "|G/K| <= |G/H|!",
    );

    // R.
    let e = art.r_exponent();
    let (p, q) = (e.numer().clone(), e.denom().clone());
    let (p, q): (i32, i32) = (p.try_into().unwrap(), q.try_into().unwrap());
    let r = Rational::from_integer(art.r.clone());
    // R = floor(eta^-e)  <=>  R^q eta^p <= 1 < (R+1)^q eta^p
    check(r.pow(q) * eta.pow(p) <= one, "R <= eta^-e");
    check((&r + &one).pow(q) * eta.pow(p) > one, "R + 1 > eta^-e");
    let s1 = i32::try_from(s + 1).unwrap();
    for &v in &k {
        let cs = from_int(class_size(v) as u64);
        check(&cs * eta.pow(s1) <= one, "|x^G| <= eta^-(s+1) on K");
        check(cs <= r, "|x^G| <= R on K");
    }

    // Cover.
    let cover = cover_classes(&art.cover);
    let union: BTreeSet<usize> = cover.iter().flatten().copied().collect();
    check(union.len() == n, "cover covers G");
    check(!has_violation(g, &cover), "cover avoids");
    let slices = art.cover.len() - art.coset_classes;
    check(
        Rational::from_integer(slices.into()) <= r,
        "slice classes <= R",
    );
    let idx: u64 = (nu * &art.kappa)
        .recip()
        .floor()
        .to_integer()
        .try_into()
        .unwrap();
    let bound = Rational::from_integer((1..=idx).product::<u64>().into()) - &one + &r;
    check(
        Rational::from_integer(art.size_bound.clone()) == bound,
        "size bound formula",
    );
    check(
        from_int(art.cover.len() as u64) <= bound,
        "|cover| <= size bound",
    );
    bad
}
