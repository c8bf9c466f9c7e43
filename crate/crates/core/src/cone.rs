//! Ideal tangent cones of monomial ideals and the chart classification of
//! the blowup of affine space.
//!
//! For a cloud point `a` the ideal tangent cone is the monoid
//! `ℕ⟨a′ − a : a′ ∈ cloud⟩ + ℕ⟨e₁,…,e_n⟩`. The point is a vertex of the Newton
//! polyhedron exactly when this monoid is pointed, and the `a`-chart is
//! smooth exactly when the pointed monoid has `n` minimal generators.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactmath::{
    find_separating_functional, integer_scaling, nonneg_rational_solve, IntMatrix, IntVec, RatVec,
};
use crate::ideal::{ExponentVector, MonomialIdeal};

/// Result of the pointedness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pointedness {
    /// Pointed, with a functional `w` satisfying `w·g ≥ 1` on every generator.
    Pointed {
        witness: RatVec,
    },
    NotPointed,
}

/// A finitely generated submonoid of `ℤⁿ`, given by nonzero generators.
///
/// Pointedness and the minimal generators are computed on first use and
/// cached; the cone is otherwise immutable.
#[derive(Debug)]
pub struct LatticeCone {
    n: usize,
    generators: Vec<IntVec>,
    /// Every unit vector is a generator, so all of `ℕⁿ` lies in the cone.
    orthant: bool,
    pointed: OnceLock<Pointedness>,
    minimal: OnceLock<Vec<IntVec>>,
}

/// The ideal tangent cone `IT_a(I)`.
#[derive(Debug)]
pub struct IdealTangentCone {
    base: ExponentVector,
    cone: LatticeCone,
}

/// How the `a`-chart of the blowup looks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartClass {
    /// Vertex with simplicial cone; the minimal generators form a ℤ-basis and
    /// the chart is affine `n`-space.
    Smooth { basis: Vec<IntVec> },
    /// Vertex with more than `n` minimal generators.
    Singular { minimal_generators: Vec<IntVec> },
    /// Support point surrounded by support points in every lattice direction;
    /// the chart is the torus.
    Torus,
    /// Not a vertex; the chart is covered by the vertex charts.
    Covered,
}

impl ChartClass {
    pub fn name(&self) -> &'static str {
        match self {
            ChartClass::Smooth { .. } => "smooth",
            ChartClass::Singular { .. } => "singular",
            ChartClass::Torus => "torus",
            ChartClass::Covered => "covered",
        }
    }

    pub fn minimal_generators(&self) -> Option<&[IntVec]> {
        match self {
            ChartClass::Smooth { basis } => Some(basis),
            ChartClass::Singular { minimal_generators } => Some(minimal_generators),
            ChartClass::Torus | ChartClass::Covered => None,
        }
    }

    pub fn is_smooth(&self) -> bool {
        matches!(self, ChartClass::Smooth { .. })
    }
}

/// Builds `IT_a(I)` for a point `a` of the support of `I`.
pub fn tangent_cone(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<IdealTangentCone> {
    if !ideal.support_contains(a)? {
        return Err(Error::NotInSupport(a.to_string()));
    }
    let n = ideal.dim();
    let mut gens = BTreeSet::new();
    for p in ideal.cloud() {
        let d = p.checked_sub(a)?;
        if !d.is_zero() {
            gens.insert(d);
        }
    }
    for i in 0..n {
        gens.insert(IntVec::unit(n, i));
    }
    Ok(IdealTangentCone {
        base: a.clone(),
        cone: LatticeCone::new(n, gens.into_iter().collect())?,
    })
}

impl IdealTangentCone {
    pub fn dim(&self) -> usize {
        self.cone.n
    }

    pub fn base(&self) -> &ExponentVector {
        &self.base
    }

    /// The underlying monoid, without reference to the base point.
    pub fn cone(&self) -> &LatticeCone {
        &self.cone
    }

    /// All generators, deduplicated and sorted; always contains `e₁,…,e_n`.
    pub fn generators(&self) -> &[IntVec] {
        self.cone.generators()
    }

    pub fn pointedness(&self) -> Option<&Pointedness> {
        self.cone.pointedness()
    }

    pub fn is_pointed(&self) -> bool {
        self.cone.is_pointed()
    }

    pub fn witness(&self) -> Option<&RatVec> {
        self.cone.witness()
    }

    pub fn minimal_generators(&self) -> Result<&[IntVec]> {
        self.cone.minimal_generators()
    }

    pub fn in_nspan(&self, v: &IntVec) -> Result<bool> {
        self.cone.in_nspan(v)
    }

    /// See [`LatticeCone::is_simplicial`]; errors name the base point.
    pub fn is_simplicial(&self) -> Result<bool> {
        self.cone.is_simplicial().map_err(|e| match e {
            Error::Invariant(msg) => Error::invariant(format!("at {}: {msg}", self.base)),
            other => other,
        })
    }

    pub fn real_cone_contains(&self, v: &IntVec) -> Result<bool> {
        self.cone.real_cone_contains(v)
    }
}

impl LatticeCone {
    /// Deduplicates and sorts the generators; each must be nonzero of length `n`.
    pub fn new(n: usize, generators: Vec<IntVec>) -> Result<Self> {
        for g in &generators {
            Error::check_dim(n, g.dim())?;
            if g.is_zero() {
                return Err(Error::input("cone generators must be nonzero"));
            }
        }
        let generators: Vec<IntVec> = generators
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let orthant = (0..n).all(|i| generators.binary_search(&IntVec::unit(n, i)).is_ok());
        Ok(LatticeCone {
            n,
            generators,
            orthant,
            pointed: OnceLock::new(),
            minimal: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// All generators, deduplicated and sorted.
    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// The cached pointedness verdict, if already computed.
    pub fn pointedness(&self) -> Option<&Pointedness> {
        self.pointed.get()
    }

    fn pointed_state(&self) -> &Pointedness {
        self.pointed.get_or_init(|| {
            if self.generators.is_empty() {
                return Pointedness::Pointed {
                    witness: vec![crate::exactmath::rat(0); self.n],
                };
            }
            match find_separating_functional(&self.generators)
                .expect("cone generators are nonzero and of equal length")
            {
                Some(witness) => Pointedness::Pointed { witness },
                None => Pointedness::NotPointed,
            }
        })
    }

    /// Decides `C ∩ (−C) = {0}` by searching for a separating functional.
    pub fn is_pointed(&self) -> bool {
        matches!(self.pointed_state(), Pointedness::Pointed { .. })
    }

    /// The functional certifying pointedness, if the cone is pointed.
    pub fn witness(&self) -> Option<&RatVec> {
        match self.pointed_state() {
            Pointedness::Pointed { witness } => Some(witness),
            Pointedness::NotPointed => None,
        }
    }

    fn degree_functional(&self) -> Result<Vec<i64>> {
        let w = self.witness().ok_or(Error::NotPointed)?;
        crate::exactmath::to_i64_vec(&integer_scaling(w))
    }

    /// The unique minimal generating set of a pointed cone, sorted.
    pub fn minimal_generators(&self) -> Result<&[IntVec]> {
        if let Some(m) = self.minimal.get() {
            return Ok(m);
        }
        let w = self.degree_functional()?;
        let mut order: Vec<(i128, &IntVec)> =
            self.generators.iter().map(|g| (dot(&w, g), g)).collect();
        order.sort();
        // g is reducible iff it is an ℕ-combination of strictly lower-degree
        // generators, whose span is the span of the minimal ones kept so far
        let mut span = SpanOracle::new(w, Vec::new(), &self.generators, self.orthant);
        for (_, g) in order {
            if !span.contains(g) {
                span.push(g.clone());
            }
        }
        let mut minimal = span.into_generators();
        minimal.sort();
        Ok(self.minimal.get_or_init(|| minimal))
    }

    /// Decides `v ∈ C` for a pointed cone by memoized descent along the
    /// degree given by the pointedness witness.
    pub fn in_nspan(&self, v: &IntVec) -> Result<bool> {
        Error::check_dim(self.n, v.dim())?;
        let w = self.degree_functional()?;
        let minimal = self.minimal_generators()?;
        let mut span = SpanOracle::new(w, minimal.to_vec(), minimal, self.orthant);
        span.facets = facet_normals(self.n, minimal)?;
        Ok(span.contains(v))
    }

    /// True iff the cone is pointed with exactly `n` minimal generators.
    ///
    /// A simplicial cone must have unimodular, primitive minimal generators;
    /// a violation is reported as [`Error::Invariant`].
    pub fn is_simplicial(&self) -> Result<bool> {
        if !self.is_pointed() {
            return Ok(false);
        }
        let minimal = self.minimal_generators()?;
        if minimal.len() != self.n {
            return Ok(false);
        }
        if self.n == 0 {
            return Ok(true);
        }
        let det = IntMatrix::from_rows(minimal.to_vec())?.det()?;
        if !det.abs().is_one() {
            return Err(Error::invariant(format!(
                "simplicial cone has minimal generator determinant {det}"
            )));
        }
        if let Some(g) = minimal.iter().find(|g| !g.is_primitive()) {
            return Err(Error::invariant(format!(
                "simplicial cone has non-primitive minimal generator {g}"
            )));
        }
        Ok(true)
    }

    /// Is `v` a nonnegative real combination of the generators?
    ///
    /// When the minimal generators are known they are used instead of the
    /// full list; both span the same real cone.
    pub fn real_cone_contains(&self, v: &IntVec) -> Result<bool> {
        Error::check_dim(self.n, v.dim())?;
        if v.is_zero() {
            return Ok(true);
        }
        let gens = self.minimal.get().unwrap_or(&self.generators);
        if gens.is_empty() {
            return Ok(false);
        }
        Ok(nonneg_rational_solve(gens, v)?.is_some())
    }
}

/// Beyond this many candidate hyperplanes the facet prune is skipped.
const MAX_FACET_CANDIDATES: u128 = 4096;

/// Inward normals of the facets of the real cone spanned by `gens`, which
/// must be pointed and full-dimensional for the list to be complete.
///
/// Each candidate is the cofactor normal of `n − 1` generators; it is a
/// facet iff every generator lies weakly on one side. An empty list is
/// returned when the enumeration would be too large, which only weakens
/// pruning.
fn facet_normals(n: usize, gens: &[IntVec]) -> Result<Vec<Vec<i64>>> {
    if n < 2 || gens.len() < n - 1 || binomial(gens.len(), n - 1) > MAX_FACET_CANDIDATES {
        return Ok(Vec::new());
    }
    let mut found = BTreeSet::new();
    let mut pick: Vec<usize> = (0..n - 1).collect();
    loop {
        if let Some(f) = cofactor_normal(n, gens, &pick)? {
            let signs: Vec<i128> = gens.iter().map(|g| dot(&f, g).signum()).collect();
            if signs.iter().all(|&s| s >= 0) {
                found.insert(f);
            } else if signs.iter().all(|&s| s <= 0) {
                found.insert(f.iter().map(|x| -x).collect());
            }
        }
        let Some(i) = (0..n - 1)
            .rev()
            .find(|&i| pick[i] < gens.len() - (n - 1) + i)
        else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..n - 1 {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(found.into_iter().collect())
}

/// The primitive normal to `n − 1` lattice vectors, or `None` if they are
/// dependent or the normal overflows `i64`.
fn cofactor_normal(n: usize, gens: &[IntVec], pick: &[usize]) -> Result<Option<Vec<i64>>> {
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let rows = pick
            .iter()
            .map(|&r| IntVec::new((0..n).filter(|&c| c != skip).map(|c| gens[r][c]).collect()))
            .collect();
        let minor = IntMatrix::from_rows(rows)?.det()?;
        let Ok(m) = i64::try_from(minor) else {
            return Ok(None);
        };
        normal.push(if skip % 2 == 0 { m } else { -m });
    }
    let content = IntVec::new(normal.clone()).content();
    if content == 0 {
        return Ok(None);
    }
    Ok(Some(normal.into_iter().map(|x| x / content).collect()))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn dot(w: &[i64], v: &IntVec) -> i128 {
    w.iter()
        .zip(v.iter())
        .map(|(&a, &b)| a as i128 * b as i128)
        .sum()
}

/// Membership in the ℕ-span of a growing list of generators, all of positive
/// degree under `w`.
///
/// Callers add generators in order of increasing degree, so whenever a vector
/// of degree `d` is queried all minimal generators of degree `< d` are
/// already present. Under that discipline every residual met in the descent
/// lies in the span exactly when it lies in the whole cone, which lets known
/// cone elements (original generators, nonnegative vectors) end a search.
struct SpanOracle<'a> {
    w: Vec<i64>,
    gens: Vec<IntVec>,
    known: HashSet<&'a IntVec>,
    /// `ℕⁿ` lies in the cone.
    orthant: bool,
    min_degree: i128,
    /// Coordinates in which every element of the whole cone is nonnegative.
    nonneg: Vec<bool>,
    /// Inward facet normals of the real cone, when known.
    facets: Vec<Vec<i64>>,
    memo: HashMap<IntVec, bool>,
}

impl<'a> SpanOracle<'a> {
    fn new(w: Vec<i64>, gens: Vec<IntVec>, all_generators: &'a [IntVec], orthant: bool) -> Self {
        let n = w.len();
        let nonneg = (0..n)
            .map(|i| all_generators.iter().all(|g| g[i] >= 0))
            .collect();
        let min_degree = all_generators.iter().map(|g| dot(&w, g)).min().unwrap_or(1);
        SpanOracle {
            w,
            gens,
            known: all_generators.iter().collect(),
            orthant,
            min_degree,
            nonneg,
            facets: Vec::new(),
            memo: HashMap::new(),
        }
    }

    fn push(&mut self, g: IntVec) {
        self.gens.push(g);
        // negative answers may change with a new generator
        self.memo.retain(|_, known| *known);
    }

    fn into_generators(self) -> Vec<IntVec> {
        self.gens
    }

    fn admissible(&self, v: &IntVec) -> bool {
        dot(&self.w, v) >= self.min_degree
            && v.iter().zip(&self.nonneg).all(|(&x, &nn)| !nn || x >= 0)
            && self.facets.iter().all(|f| dot(f, v) >= 0)
    }

    /// Membership of a residual of lower degree than the current query.
    fn settled(&self, v: &IntVec) -> Option<bool> {
        if v.is_zero() || (self.orthant && v.is_nonnegative()) || self.known.contains(v) {
            Some(true)
        } else if !self.admissible(v) {
            Some(false)
        } else {
            self.memo.get(v).copied()
        }
    }

    fn residual(v: &IntVec, g: &IntVec) -> IntVec {
        IntVec::new(v.iter().zip(g.iter()).map(|(a, b)| a - b).collect())
    }

    fn contains(&mut self, v: &IntVec) -> bool {
        if v.is_zero() {
            return true;
        }
        if !self.admissible(v) {
            return false;
        }
        if let Some(&known) = self.memo.get(v) {
            return known;
        }
        // iterative depth-first search; degrees strictly decrease along a
        // path, so there are no cycles. Each node first looks for a residual
        // with a settled answer before descending into any of them.
        let mut stack: Vec<(IntVec, usize)> = vec![(v.clone(), 0)];
        loop {
            let Some((top, next)) = stack.last() else {
                return false;
            };
            if *next == 0 {
                let hit = self
                    .gens
                    .iter()
                    .any(|g| self.settled(&Self::residual(top, g)) == Some(true));
                if hit {
                    for (u, _) in stack.drain(..) {
                        self.memo.insert(u, true);
                    }
                    return true;
                }
            }
            let (top, next) = stack.last_mut().expect("nonempty stack");
            if *next == self.gens.len() {
                let (done, _) = stack.pop().expect("nonempty stack");
                self.memo.insert(done, false);
                continue;
            }
            let rest = Self::residual(top, &self.gens[*next]);
            *next += 1;
            if self.settled(&rest).is_none() {
                stack.push((rest, 0));
            }
        }
    }
}

/// The vertices of the Newton polyhedron, i.e. the cloud points with a
/// pointed ideal tangent cone, in lexicographic order.
pub fn vertices(ideal: &MonomialIdeal) -> Vec<ExponentVector> {
    ideal
        .cloud()
        .iter()
        .filter(|a| {
            tangent_cone(ideal, a)
                .expect("cloud points lie in the support")
                .is_pointed()
        })
        .cloned()
        .collect()
}

/// Classifies the `a`-chart of the blowup of `𝔸ⁿ` in `I`.
pub fn classify_chart(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<ChartClass> {
    let cone = tangent_cone(ideal, a)?;
    classify_cone(ideal, &cone)
}

pub(crate) fn classify_cone(ideal: &MonomialIdeal, cone: &IdealTangentCone) -> Result<ChartClass> {
    let a = cone.base();
    if cone.is_pointed() && ideal.contains_cloud_point(a) {
        let minimal = cone.minimal_generators()?.to_vec();
        return Ok(if cone.is_simplicial()? {
            ChartClass::Smooth { basis: minimal }
        } else {
            ChartClass::Singular {
                minimal_generators: minimal,
            }
        });
    }
    let n = ideal.dim();
    let surrounded = (0..n).all(|i| a[i] >= 1)
        && (0..n).all(|i| {
            let e = IntVec::unit(n, i);
            let up = a.checked_add(&e).expect("small exponents");
            let down = a.checked_sub(&e).expect("small exponents");
            ideal.support_contains(&up).unwrap_or(false)
                && ideal.support_contains(&down).unwrap_or(false)
        });
    Ok(if surrounded {
        ChartClass::Torus
    } else {
        ChartClass::Covered
    })
}
