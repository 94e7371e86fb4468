//! The built-in group families.

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits, Permutation};

/// A named, parameterised family of finite groups.
///
/// Families are registered in a [`super::Catalog`] and looked up by name
/// or by their short alias (`S3`, `D4`, `Q8`, ...).
pub trait GroupFamily: Send + Sync {
    fn name(&self) -> &'static str;

    /// Short prefix used in compact specs such as `D5`.
    fn alias(&self) -> &'static str;

    /// Whether the family is indexed by an integer parameter.
    fn takes_parameter(&self) -> bool {
        true
    }

    fn summary(&self) -> &'static str;

    /// Order of the member with the given parameter, if it is valid.
    fn order_of(&self, param: Option<u64>) -> Result<u64>;

    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable>;
}

fn bad(family: &str, detail: impl Into<String>) -> Error {
    Error::BadParameter {
        family: family.into(),
        detail: detail.into(),
    }
}

fn require(family: &str, param: Option<u64>) -> Result<u64> {
    param.ok_or_else(|| bad(family, "missing parameter"))
}

fn check_limit(order: u64, limits: &Limits) -> Result<usize> {
    if order > limits.max_order as u64 {
        return Err(Error::SizeLimit {
            limit: limits.max_order,
            partial: order.min(usize::MAX as u64) as usize,
        });
    }
    Ok(order as usize)
}

fn from_formula(
    n: usize,
    name: String,
    limits: &Limits,
    f: impl Fn(usize, usize) -> usize,
) -> Result<GroupTable> {
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(f(a, b) as u32);
        }
    }
    GroupTable::from_flat(mul, n, name, limits.associativity_bound)
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub struct Cyclic;

impl GroupFamily for Cyclic {
    fn name(&self) -> &'static str {
        "cyclic"
    }
    fn alias(&self) -> &'static str {
        "C"
    }
    fn summary(&self) -> &'static str {
        "cyclic group of order n"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        match require(self.name(), param)? {
            0 => Err(bad(self.name(), "n must be at least 1")),
            n => Ok(n),
        }
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        let n = check_limit(self.order_of(param)?, limits)?;
        from_formula(n, format!("C{n}"), limits, |a, b| (a + b) % n)
    }
}

/// Symmetries of the regular n-gon, order 2n. Element `r^i s^j` has index
/// `j * n + i`.
pub struct Dihedral;

impl GroupFamily for Dihedral {
    fn name(&self) -> &'static str {
        "dihedral"
    }
    fn alias(&self) -> &'static str {
        "D"
    }
    fn summary(&self) -> &'static str {
        "dihedral group of order 2n"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        match require(self.name(), param)? {
            0 => Err(bad(self.name(), "n must be at least 1")),
            n => n
                .checked_mul(2)
                .ok_or_else(|| bad(self.name(), "n too large")),
        }
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        let order = check_limit(self.order_of(param)?, limits)?;
        let n = order / 2;
        from_formula(order, format!("D{n}"), limits, |a, b| {
            let (i1, j1) = (a % n, a / n);
            let (i2, j2) = (b % n, b / n);
            let i = (if j1 == 0 { i1 + i2 } else { i1 + n - i2 }) % n;
            (j1 ^ j2) * n + i
        })
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn cycle(points: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (k, &p) in points.iter().enumerate() {
        images[p] = points[(k + 1) % points.len()];
    }
    Permutation::from_images(images).expect("cycle on distinct points")
}

pub struct Symmetric;

impl GroupFamily for Symmetric {
    fn name(&self) -> &'static str {
        "symmetric"
    }
    fn alias(&self) -> &'static str {
        "S"
    }
    fn summary(&self) -> &'static str {
        "symmetric group on n points (n <= 6)"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        match require(self.name(), param)? {
            n @ 1..=6 => Ok(factorial(n)),
            _ => Err(bad(self.name(), "n must be between 1 and 6")),
        }
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        check_limit(self.order_of(param)?, limits)?;
        let d = param.unwrap() as usize;
        let gens = if d >= 2 {
            vec![cycle(&[0, 1], d), cycle(&(0..d).collect::<Vec<_>>(), d)]
        } else {
            vec![]
        };
        GroupTable::from_permutations(&gens, d, format!("S{d}"), limits)
    }
}

pub struct Alternating;

impl GroupFamily for Alternating {
    fn name(&self) -> &'static str {
        "alternating"
    }
    fn alias(&self) -> &'static str {
        "A"
    }
    fn summary(&self) -> &'static str {
        "alternating group on n points (n <= 6)"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        match require(self.name(), param)? {
            1 | 2 => Ok(1),
            n @ 3..=6 => Ok(factorial(n) / 2),
            _ => Err(bad(self.name(), "n must be between 1 and 6")),
        }
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        check_limit(self.order_of(param)?, limits)?;
        let d = param.unwrap() as usize;
        let gens: Vec<_> = (0..d.saturating_sub(2))
            .map(|i| cycle(&[i, i + 1, i + 2], d))
            .collect();
        GroupTable::from_permutations(&gens, d, format!("A{d}"), limits)
    }
}

/// `{±1, ±i, ±j, ±k}`; index `2u + s` for unit `u` in `1, i, j, k` and sign
/// bit `s`.
pub struct Quaternion8;

impl GroupFamily for Quaternion8 {
    fn name(&self) -> &'static str {
        "quaternion8"
    }
    fn alias(&self) -> &'static str {
        "Q8"
    }
    fn takes_parameter(&self) -> bool {
        false
    }
    fn summary(&self) -> &'static str {
        "quaternion group of order 8"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        match param {
            None => Ok(8),
            Some(_) => Err(bad(self.name(), "takes no parameter")),
        }
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        self.order_of(param)?;
        // UNIT[u][v] = (sign, unit) of the product of basis units u and v.
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        from_formula(8, "Q8".into(), limits, |a, b| {
            let (sign, unit) = UNIT[a / 2][b / 2];
            2 * unit + (sign ^ (a % 2) ^ (b % 2))
        })
    }
}

/// Upper unitriangular 3x3 matrices over the field with p elements.
/// The matrix with entries `a, b` above the diagonal and `c` in the corner
/// has index `a p^2 + b p + c`.
pub struct Heisenberg;

impl GroupFamily for Heisenberg {
    fn name(&self) -> &'static str {
        "heisenberg"
    }
    fn alias(&self) -> &'static str {
        "H"
    }
    fn summary(&self) -> &'static str {
        "Heisenberg group mod a prime p, order p^3"
    }
    fn order_of(&self, param: Option<u64>) -> Result<u64> {
        let p = require(self.name(), param)?;
        if !is_prime(p) {
            return Err(bad(self.name(), format!("{p} is not prime")));
        }
        p.checked_pow(3)
            .ok_or_else(|| bad(self.name(), "p too large"))
    }
    fn build(&self, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        let n = check_limit(self.order_of(param)?, limits)?;
        let p = param.unwrap() as usize;
        from_formula(n, format!("H{p}"), limits, |x, y| {
            let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
            let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
            let a = (a1 + a2) % p;
            let b = (b1 + b2) % p;
            let c = (c1 + c2 + a1 * b2) % p;
            a * p * p + b * p + c
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let l = Limits::default();
        assert_eq!(Cyclic.build(Some(5), &l).unwrap().order(), 5);
        assert_eq!(Dihedral.build(Some(4), &l).unwrap().order(), 8);
        assert_eq!(Dihedral.build(Some(1), &l).unwrap().order(), 2);
        for (n, f) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120), (6, 720)] {
            assert_eq!(Symmetric.build(Some(n), &l).unwrap().order(), f);
        }
        for (n, f) in [(2, 1), (3, 3), (4, 12), (5, 60), (6, 360)] {
            assert_eq!(Alternating.build(Some(n), &l).unwrap().order(), f);
        }
        assert_eq!(Quaternion8.build(None, &l).unwrap().order(), 8);
        assert_eq!(Heisenberg.build(Some(3), &l).unwrap().order(), 27);
        assert_eq!(Heisenberg.build(Some(5), &l).unwrap().order(), 125);
    }

    #[test]
    fn rejects_bad_parameters() {
        let l = Limits::default();
        assert!(Symmetric.build(Some(7), &l).is_err());
        assert!(Heisenberg.build(Some(4), &l).is_err());
        assert!(Cyclic.build(Some(0), &l).is_err());
        assert!(Cyclic.build(None, &l).is_err());
        assert!(Quaternion8.build(Some(8), &l).is_err());
        let tight = Limits {
            max_order: 100,
            ..l
        };
        assert!(matches!(
            Heisenberg.build(Some(5), &tight),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn quaternion_relations() {
        let q = Quaternion8.build(None, &Limits::default()).unwrap();
        let (one, minus_one, i, j, k) = (0, 1, 2, 4, 6);
        assert_eq!(q.identity(), one);
        for x in [i, j, k] {
            assert_eq!(q.mul(x, x), minus_one);
        }
        assert_eq!(q.mul(q.mul(i, j), k), minus_one);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
    }
}
