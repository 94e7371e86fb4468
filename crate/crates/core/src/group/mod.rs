//! Finite groups as explicit Cayley tables.
//!
//! Every group in this crate is a [`GroupTable`]: elements are the indices
//! `0..n`, and the product of `a` and `b` is `mul(a, b)`. Constructors
//! discover the identity and inverses themselves and reject tables that
//! violate a group axiom.

mod conjugacy;
mod perm;
mod subgroups;

use std::fmt;

pub use conjugacy::ConjugacyData;
pub use perm::Permutation;
pub use subgroups::SubgroupList;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Size limits applied by constructors and enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order any constructor will build.
    pub max_order: usize,
    /// Associativity is checked exhaustively (O(n^3)) up to this order.
    pub associativity_bound: usize,
    /// Largest order for which subgroup lattices are enumerated.
    pub subgroup_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: 4096,
            associativity_bound: 512,
            subgroup_bound: 128,
        }
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Validates a Cayley table with the default [`Limits`].
    pub fn from_cayley_table(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self> {
        Self::from_cayley_table_with(table, name, &Limits::default())
    }

    pub fn from_cayley_table_with(
        table: Vec<Vec<usize>>,
        name: impl Into<String>,
        limits: &Limits,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable {
                n,
                detail: "empty table".into(),
            });
        }
        if n > limits.max_order {
            return Err(Error::SizeLimit {
                limit: limits.max_order,
                partial: n,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable {
                    n,
                    detail: format!("row {i} has {} entries", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable {
                        n,
                        detail: format!("entry ({i},{j}) = {v} out of range"),
                    });
                }
                mul.push(v as u32);
            }
        }
        Self::from_flat(mul, n, name.into(), limits.associativity_bound)
    }

    /// Builds from a row-major table whose entries are known to be in range.
    pub(crate) fn from_flat(
        mul: Vec<u32>,
        n: usize,
        name: String,
        associativity_bound: usize,
    ) -> Result<Self> {
        debug_assert_eq!(mul.len(), n * n);
        check_latin(&mul, n)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or(Error::NoIdentity)?;

        let mut inv = vec![0u32; n];
        for x in 0..n {
            // Latin rows guarantee a unique right inverse; it must also be a left inverse.
            let y = (0..n)
                .find(|&y| mul[x * n + y] as usize == identity)
                .ok_or(Error::NoInverse { element: x })?;
            if mul[y * n + x] as usize != identity {
                return Err(Error::NoInverse { element: x });
            }
            inv[x] = y as u32;
        }

        if n <= associativity_bound {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul[a * n + b] as usize;
                    for c in 0..n {
                        let bc = mul[b * n + c] as usize;
                        if mul[ab * n + c] != mul[a * n + bc] {
                            return Err(Error::NonAssociative { a, b, c });
                        }
                    }
                }
            }
        }

        Ok(Self {
            name,
            order: n,
            mul,
            inv,
            identity,
        })
    }

    /// The group generated by `generators` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order starting from
    /// the identity (index 0), right-multiplying by the generators in the
    /// order given. The product `p * q` applies `p` first, then `q`.
    pub fn from_permutations(
        generators: &[Permutation],
        degree: usize,
        name: impl Into<String>,
        limits: &Limits,
    ) -> Result<Self> {
        perm::closure_table(generators, degree, name.into(), limits)
    }

    /// Component-wise product; `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(&self, other: &GroupTable, limits: &Limits) -> Result<Self> {
        let (n1, n2) = (self.order, other.order);
        let n = n1
            .checked_mul(n2)
            .filter(|&n| n <= limits.max_order)
            .ok_or(Error::SizeLimit {
                limit: limits.max_order,
                partial: n1.saturating_mul(n2),
            })?;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..n {
                let (b1, b2) = (b / n2, b % n2);
                mul.push((self.mul(a1, b1) * n2 + other.mul(a2, b2)) as u32);
            }
        }
        let name = format!("{}*{}", self.name, other.name);
        // Both factors are associative, so the product is too.
        Self::from_flat(mul, n, name, 0)
    }

    pub fn trivial() -> Self {
        Self {
            name: "trivial".into(),
            order: 1,
            mul: vec![0],
            inv: vec![0],
            identity: 0,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    /// The table as nested rows, e.g. for serialisation.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    #[inline]
    pub fn commute(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// `{ab : a in A, b in B}`.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        let bs = b.to_vec();
        for x in a.iter() {
            let row = self.row(x);
            for &y in &bs {
                out.insert(row[y] as usize);
            }
        }
        out
    }

    /// `gAg^-1` (or `g^-1 A g` with `g` replaced by its inverse).
    pub fn conjugate_set(&self, a: &ElementSet, g: usize) -> ElementSet {
        let gi = self.inv(g);
        ElementSet::from_indices(self.order, a.iter().map(|x| self.mul(self.mul(g, x), gi)))
    }

    pub fn left_translate(&self, g: usize, a: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.mul(g, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn conjugacy(&self) -> ConjugacyData {
        ConjugacyData::compute(self)
    }

    pub fn all_subgroups(&self, limits: &Limits) -> Result<SubgroupList> {
        subgroups::all_subgroups(self, limits)
    }

    /// Every subgroup contained in `within`, in the same order as
    /// [`GroupTable::all_subgroups`].
    pub fn subgroups_within(&self, within: &ElementSet, limits: &Limits) -> Result<SubgroupList> {
        subgroups::subgroups_within(self, within, limits)
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        subgroups::closure(self, gens)
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        subgroups::check_subgroup(self, h).is_ok()
    }

    pub fn is_normal(&self, k: &ElementSet) -> bool {
        subgroups::check_normal(self, k).is_ok()
    }

    /// Quotient by a normal subgroup, with the projection onto coset indices.
    ///
    /// Cosets are numbered by their least element index.
    pub fn quotient(&self, k: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
        subgroups::quotient(self, k)
    }

    /// Kernel of the left-multiplication action on the cosets of `h`.
    pub fn coset_action_kernel(&self, h: &ElementSet) -> Result<ElementSet> {
        subgroups::coset_action_kernel(self, h)
    }

    /// The cosets `gK` of `k`, ordered by least element.
    pub fn left_cosets(&self, k: &ElementSet) -> Vec<ElementSet> {
        subgroups::left_cosets(self, k)
    }
}

fn check_latin(mul: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = mul[i * n + j] as usize;
            if seen[v] == i {
                return Err(Error::NotLatinSquare {
                    line: "row",
                    index: i,
                    element: v,
                });
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = mul[i * n + j] as usize;
            if seen[v] == j {
                return Err(Error::NotLatinSquare {
                    line: "column",
                    index: j,
                    element: v,
                });
            }
            seen[v] = j;
        }
    }
    Ok(())
}
