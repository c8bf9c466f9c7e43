//! Tameness of monomial ideals: the blowup of `𝔸ⁿ` in `I` is smooth iff the
//! ideal tangent cone at every vertex of the Newton polyhedron is simplicial.
//!
//! Besides the general criterion this module carries the combinatorial fast
//! paths for products of coordinate ideals. They are sufficient conditions
//! only; [`is_tame`] stays the ground truth.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cone::{classify_cone, tangent_cone, ChartClass};
use crate::error::{Error, Result};
use crate::exactmath::IntVec;
use crate::ideal::{CoordinateCloud, ExponentVector, MonomialIdeal};

/// Per-vertex chart classes and the global verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamenessReport {
    pub ideal: MonomialIdeal,
    pub vertices: Vec<ExponentVector>,
    /// One entry per vertex, in the order of `vertices`.
    pub charts: Vec<(ExponentVector, ChartClass)>,
    pub tame: bool,
    /// Lexicographically least vertex with a non-simplicial cone.
    pub witness: Option<ExponentVector>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    tame: bool,
    vertices: &'a [ExponentVector],
    witness: Option<&'a ExponentVector>,
    charts: Vec<ChartJson<'a>>,
}

#[derive(Serialize)]
struct ChartJson<'a> {
    vertex: &'a ExponentVector,
    class: &'static str,
    minimal_generators: Option<&'a [IntVec]>,
}

impl TamenessReport {
    pub fn witness_chart(&self) -> Option<&ChartClass> {
        let w = self.witness.as_ref()?;
        self.charts.iter().find(|(v, _)| v == w).map(|(_, c)| c)
    }

    /// Canonical JSON: `{"tame", "vertices", "witness", "charts"}`.
    pub fn to_json(&self) -> String {
        let view = ReportJson {
            tame: self.tame,
            vertices: &self.vertices,
            witness: self.witness.as_ref(),
            charts: self
                .charts
                .iter()
                .map(|(v, c)| ChartJson {
                    vertex: v,
                    class: c.name(),
                    minimal_generators: c.minimal_generators(),
                })
                .collect(),
        };
        serde_json::to_string(&view).expect("report serializes")
    }
}

/// Classifies the chart at every vertex of `N(I)`.
pub fn is_tame(ideal: &MonomialIdeal) -> Result<TamenessReport> {
    let mut vertices = Vec::new();
    let mut charts = Vec::new();
    for a in ideal.cloud() {
        let cone = tangent_cone(ideal, a)?;
        if !cone.is_pointed() {
            continue;
        }
        vertices.push(a.clone());
        charts.push((a.clone(), classify_cone(ideal, &cone)?));
    }
    let witness = charts
        .iter()
        .find(|(_, c)| !c.is_smooth())
        .map(|(v, _)| v.clone());
    Ok(TamenessReport {
        ideal: ideal.clone(),
        vertices,
        charts,
        tame: witness.is_none(),
        witness,
    })
}

/// Cross-checks `IT_a = T_a ∩ ℤⁿ` on a smooth chart by sampling lattice
/// points, half inside the cone by construction and half from a box.
///
/// A disagreement between real-cone and ℕ-span membership is reported as
/// [`Error::Invariant`].
pub fn verify_lattice_equality(
    ideal: &MonomialIdeal,
    vertex: &ExponentVector,
    samples: usize,
    seed: u64,
) -> Result<()> {
    let cone = tangent_cone(ideal, vertex)?;
    if !cone.is_simplicial()? {
        return Err(Error::input(format!("the chart at {vertex} is not smooth")));
    }
    let n = ideal.dim();
    let basis = cone.minimal_generators()?.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let v = if k % 2 == 0 {
            basis.iter().try_fold(IntVec::zero(n), |acc, g| {
                acc.checked_add(&g.checked_scale(rng.gen_range(0..4))?)
            })?
        } else {
            IntVec::new((0..n).map(|_| rng.gen_range(-4..=4)).collect())
        };
        let real = cone.real_cone_contains(&v)?;
        let lattice = cone.in_nspan(&v)?;
        if real != lattice {
            return Err(Error::invariant(format!(
                "at vertex {vertex}, {v} has real-cone membership {real} but lattice membership {lattice}"
            )));
        }
    }
    Ok(())
}

/// Verdict of a sufficient-condition criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriVerdict {
    Tame,
    NotTame,
    /// No criterion applies; run [`is_tame`] on the product.
    Unknown,
}

/// Do the two ideals involve disjoint sets of variables?
pub fn transverse(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    Error::check_dim(i.dim(), j.dim())?;
    Ok(i.variables().is_disjoint(&j.variables()))
}

pub fn transverse_clouds(i: &CoordinateCloud, j: &CoordinateCloud) -> Result<bool> {
    Error::check_dim(i.dim(), j.dim())?;
    Ok(i.is_disjoint(j))
}

/// A product of two coordinate ideals is tame iff the index sets are
/// disjoint or nested.
pub fn coord_pair_tame(i: &CoordinateCloud, j: &CoordinateCloud) -> bool {
    i.is_disjoint(j) || i.is_subset(j) || j.is_subset(i)
}

/// Sufficient conditions for the product of three coordinate ideals to be
/// tame, tried under every assignment of the clouds to the roles.
pub fn coord_triple_tame(
    i: &CoordinateCloud,
    j: &CoordinateCloud,
    k: &CoordinateCloud,
) -> TriVerdict {
    let s = [i.indices(), j.indices(), k.indices()];
    const ROLES: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let union = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| -> BTreeSet<usize> {
        a.union(b).copied().collect()
    };
    let matches = ROLES.iter().any(|&[p, q, r]| {
        let (a, b, c) = (s[p], s[q], s[r]);
        let disjoint = a.is_disjoint(b) && b.is_disjoint(c) && a.is_disjoint(c);
        let nested_then_apart = a.is_subset(b) && b.is_disjoint(c);
        let mutually_covered =
            a.is_subset(&union(b, c)) && b.is_subset(&union(c, a)) && c.is_subset(&union(a, b));
        let union_closed = *c == union(a, b);
        disjoint || nested_then_apart || mutually_covered || union_closed
    });
    if matches {
        TriVerdict::Tame
    } else {
        TriVerdict::Unknown
    }
}

/// `I` is tame iff `I^k` is; returns whether the verdicts agree.
pub fn check_power_invariance(ideal: &MonomialIdeal, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::Range(format!(
            "power invariance needs k ≥ 2, got {k}"
        )));
    }
    Ok(is_tame(ideal)?.tame == is_tame(&ideal.power(k)?)?.tame)
}

/// Checks that the product of pairwise transverse tame ideals is tame.
pub fn check_transverse_product(ideals: &[MonomialIdeal]) -> Result<bool> {
    let n = ideals
        .first()
        .map(MonomialIdeal::dim)
        .ok_or_else(|| Error::input("need at least one ideal"))?;
    for (p, a) in ideals.iter().enumerate() {
        for b in &ideals[p + 1..] {
            if !transverse(a, b)? {
                return Err(Error::input(format!("{a} and {b} are not transverse")));
            }
        }
        if !is_tame(a)?.tame {
            return Err(Error::input(format!("{a} is not tame")));
        }
    }
    Ok(is_tame(&MonomialIdeal::product_all(n, ideals)?)?.tame)
}
