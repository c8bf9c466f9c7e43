//! Monomial ideals represented by their minimal exponent set (the cloud).
//!
//! A minimal generating set of a monomial ideal is unique, so two ideals are
//! equal exactly when their sorted clouds coincide. All constructors return
//! canonical (minimal, lexicographically sorted) clouds.

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::IntVec;

pub(crate) use parse::format_monomial;
pub use parse::{format_ideal, parse_ideal};

/// An exponent vector `a ∈ ℕⁿ` of a monomial `x^a`.
pub type ExponentVector = IntVec;

/// A monomial ideal in `K[x₁,…,x_n]`, given by its minimal cloud.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    n: usize,
    cloud: Vec<ExponentVector>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    cloud: Vec<Vec<i64>>,
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            n: ideal.n,
            cloud: ideal.cloud.into_iter().map(IntVec::into_entries).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        MonomialIdeal::minimalize(j.cloud.into_iter().map(IntVec::new), j.n)
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `points`, discarding every point that
    /// componentwise dominates another one.
    pub fn minimalize<I>(points: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut set = BTreeSet::new();
        for p in points {
            Error::check_dim(n, p.dim())?;
            if !p.is_nonnegative() {
                return Err(Error::input(format!(
                    "exponent vector {p} has a negative entry"
                )));
            }
            set.insert(p);
        }
        if set.is_empty() {
            return Err(Error::input("the zero ideal has no cloud"));
        }
        Ok(MonomialIdeal {
            n,
            cloud: minimal_antichain(set),
        })
    }

    /// The unit ideal `(1)`, with cloud `{0ⁿ}`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            cloud: vec![IntVec::zero(n)],
        }
    }

    /// The principal ideal `(x^a)`.
    pub fn principal(a: ExponentVector) -> Result<Self> {
        let n = a.dim();
        Self::minimalize([a], n)
    }

    /// `(x_i : i ∈ indices)` for 1-based indices.
    pub fn coordinate(n: usize, indices: &BTreeSet<usize>) -> Result<Self> {
        CoordinateCloud::new(n, indices.iter().copied())?.to_ideal()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn cloud(&self) -> &[ExponentVector] {
        &self.cloud
    }

    pub fn len(&self) -> usize {
        self.cloud.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cloud.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.cloud.len() == 1 && self.cloud[0].is_zero()
    }

    fn same_dim(&self, other: &MonomialIdeal) -> Result<()> {
        Error::check_dim(self.n, other.n)
    }

    /// `I·J`: the minimal part of the Minkowski sum of the clouds.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_dim(other)?;
        let mut sums = BTreeSet::new();
        for a in &self.cloud {
            for b in &other.cloud {
                sums.insert(a.checked_add(b)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            cloud: minimal_antichain(sums),
        })
    }

    /// `I ∩ J`: the minimal part of the pairwise componentwise maxima (lcms).
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_dim(other)?;
        let mut joins = BTreeSet::new();
        for a in &self.cloud {
            for b in &other.cloud {
                joins.insert(a.join(b)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            cloud: minimal_antichain(joins),
        })
    }

    /// `I + J`: the minimal part of the union of the clouds.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_dim(other)?;
        let union: BTreeSet<_> = self.cloud.iter().chain(&other.cloud).cloned().collect();
        Ok(MonomialIdeal {
            n: self.n,
            cloud: minimal_antichain(union),
        })
    }

    /// `I^k`, minimalizing after every factor. `k = 0` gives the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Product of a sequence of ideals of dimension `n`; the empty product
    /// is the unit ideal.
    pub fn product_all<'a, I>(n: usize, factors: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        factors
            .into_iter()
            .try_fold(MonomialIdeal::unit(n), |acc, f| acc.product(f))
    }

    /// `√I`: clip every cloud point to its 0/1 support indicator.
    pub fn radical(&self) -> MonomialIdeal {
        let clipped: BTreeSet<_> = self
            .cloud
            .iter()
            .map(|a| IntVec::new(a.iter().map(|&x| x.min(1)).collect()))
            .collect();
        MonomialIdeal {
            n: self.n,
            cloud: minimal_antichain(clipped),
        }
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self.cloud == other.cloud)
    }

    /// Is `x^c ∈ I`, i.e. does some cloud point divide `c`?
    pub fn support_contains(&self, c: &ExponentVector) -> Result<bool> {
        Error::check_dim(self.n, c.dim())?;
        Ok(c.is_nonnegative() && self.cloud.iter().any(|a| a.le(c)))
    }

    pub fn contains_cloud_point(&self, c: &ExponentVector) -> bool {
        self.cloud.binary_search(c).is_ok()
    }

    /// 1-based indices of the variables occurring in the cloud.
    pub fn variables(&self) -> BTreeSet<usize> {
        (0..self.n)
            .filter(|&i| self.cloud.iter().any(|a| a[i] > 0))
            .map(|i| i + 1)
            .collect()
    }

    /// The same ideal in `K[x₁,…,x_m]` for `m ≥ n` (trailing variables unused).
    pub fn embed(&self, m: usize) -> Result<MonomialIdeal> {
        if m < self.n {
            return Err(Error::Range(format!(
                "cannot embed a {}-variable ideal into {m} variables",
                self.n
            )));
        }
        let cloud = self
            .cloud
            .iter()
            .map(|a| {
                let mut e = a.entries().to_vec();
                e.resize(m, 0);
                IntVec::new(e)
            })
            .collect();
        Ok(MonomialIdeal { n: m, cloud })
    }
}

/// Keeps the points not dominating any other point, in lexicographic order.
fn minimal_antichain(points: BTreeSet<ExponentVector>) -> Vec<ExponentVector> {
    // a dominating point has strictly larger total degree than what it
    // dominates, so scanning by degree lets each point be tested only
    // against points already kept
    let mut by_degree: Vec<ExponentVector> = points.into_iter().collect();
    by_degree.sort_by_key(IntVec::norm);
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(by_degree.len());
    for p in by_degree {
        if !kept.iter().any(|k| k.le(&p)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ideal(self))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {})", self.n, format_ideal(self))
    }
}

/// A coordinate ideal `(x_i : i ∈ indices)`, identified with its index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateCloud {
    n: usize,
    indices: BTreeSet<usize>,
}

impl CoordinateCloud {
    /// `indices` are 1-based and must be a nonempty subset of `{1..n}`.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::input("a coordinate cloud needs at least one index"));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::Range(format!("index {bad} outside 1..={n}")));
        }
        Ok(CoordinateCloud { n, indices })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(
            self.indices.iter().map(|&i| IntVec::unit(self.n, i - 1)),
            self.n,
        )
    }

    /// The cloud of `I + J`, the union of the index sets.
    pub fn union(&self, other: &CoordinateCloud) -> Result<CoordinateCloud> {
        Error::check_dim(self.n, other.n)?;
        Ok(CoordinateCloud {
            n: self.n,
            indices: self.indices.union(&other.indices).copied().collect(),
        })
    }

    pub fn is_disjoint(&self, other: &CoordinateCloud) -> bool {
        self.indices.is_disjoint(&other.indices)
    }

    pub fn is_subset(&self, other: &CoordinateCloud) -> bool {
        self.indices.is_subset(&other.indices)
    }
}

impl fmt::Display for CoordinateCloud {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
