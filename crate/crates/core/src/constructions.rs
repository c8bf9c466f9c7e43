//! Families of tame monomial ideals: the smoothing of the coordinate axes,
//! products over building sets, pairwise-sum smoothings and permutohedral
//! ideals.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exactmath::IntVec;
use crate::ideal::{CoordinateCloud, ExponentVector, MonomialIdeal};
use crate::tameness::is_tame;

type IndexSet = BTreeSet<usize>;

/// `m = (x₁,…,x_n)`.
pub fn maximal_ideal(n: usize) -> MonomialIdeal {
    MonomialIdeal::minimalize((0..n).map(|i| IntVec::unit(n, i)), n)
        .expect("n ≥ 1 gives a nonempty cloud")
}

fn check_axes_range(n: usize, s: usize) -> Result<()> {
    if 1 < s && s < n {
        Ok(())
    } else {
        Err(Error::Range(format!(
            "need 1 < s < n, got n = {n}, s = {s}"
        )))
    }
}

/// The reduced union of the first `s` coordinate axes together with the
/// remaining coordinate hyperplane directions: `⋂_{i ≤ s} (x_j : j ≠ i)`.
///
/// Built by iterated intersection and checked against the generators
/// `x_i x_j (i < j ≤ s)` and `x_i (i > s)`.
pub fn axes_ideal(n: usize, s: usize) -> Result<MonomialIdeal> {
    check_axes_range(n, s)?;
    let mut acc: Option<MonomialIdeal> = None;
    for i in 0..s {
        let hyperplane =
            MonomialIdeal::minimalize((0..n).filter(|&j| j != i).map(|j| IntVec::unit(n, j)), n)?;
        acc = Some(match acc {
            None => hyperplane,
            Some(a) => a.intersect(&hyperplane)?,
        });
    }
    let ideal = acc.expect("s ≥ 2");

    let mut closed = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            closed.push(IntVec::unit(n, i).checked_add(&IntVec::unit(n, j))?);
        }
    }
    closed.extend((s..n).map(|i| IntVec::unit(n, i)));
    if ideal != MonomialIdeal::minimalize(closed, n)? {
        return Err(Error::invariant(format!(
            "axes ideal for n = {n}, s = {s} disagrees with its generator list: {ideal}"
        )));
    }
    Ok(ideal)
}

/// `R = I ∩ m³` for the axes ideal `I`; tame with radical `I`.
pub fn rosenberg_ideal(n: usize, s: usize) -> Result<MonomialIdeal> {
    axes_ideal(n, s)?.intersect(&maximal_ideal(n).power(3)?)
}

/// `I ∩ m²`, which is not yet tame.
pub fn rosenberg_intermediate(n: usize, s: usize) -> Result<MonomialIdeal> {
    axes_ideal(n, s)?.intersect(&maximal_ideal(n).power(2)?)
}

/// `{2e_i + e_j : i ≤ s, j ≠ i} ∪ {3e_i : i > s}`, sorted.
pub fn rosenberg_expected_vertices(n: usize, s: usize) -> Result<Vec<ExponentVector>> {
    check_axes_range(n, s)?;
    let mut out = BTreeSet::new();
    for i in 0..s {
        for j in (0..n).filter(|&j| j != i) {
            let mut e = vec![0; n];
            e[i] = 2;
            e[j] = 1;
            out.insert(IntVec::new(e));
        }
    }
    for i in s..n {
        out.insert(IntVec::unit(n, i).checked_scale(3)?);
    }
    Ok(out.into_iter().collect())
}

/// A family of distinct nonempty subsets of `{1..n}`, each standing for a
/// coordinate ideal (equivalently a coordinate subspace).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingFamily {
    n: usize,
    sets: BTreeSet<IndexSet>,
}

impl BuildingFamily {
    pub fn new<S, I>(n: usize, sets: S) -> Result<Self>
    where
        S: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut out = BTreeSet::new();
        for s in sets {
            out.insert(CoordinateCloud::new(n, s)?.indices().clone());
        }
        if out.is_empty() {
            return Err(Error::input("a building family needs at least one set"));
        }
        Ok(BuildingFamily { n, sets: out })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &BTreeSet<IndexSet> {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &IndexSet) -> bool {
        self.sets.contains(s)
    }

    pub fn clouds(&self) -> Vec<CoordinateCloud> {
        self.sets
            .iter()
            .map(|s| CoordinateCloud::new(self.n, s.iter().copied()).expect("validated"))
            .collect()
    }
}

/// The arrangement generated by `f`: its closure under unions.
pub fn arrangement_closure(f: &BuildingFamily) -> BuildingFamily {
    let mut sets = f.sets.clone();
    let mut frontier: Vec<IndexSet> = sets.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        let fresh: Vec<IndexSet> = sets
            .iter()
            .map(|b| a.union(b).copied().collect::<IndexSet>())
            .filter(|u| !sets.contains(u))
            .collect();
        for u in fresh {
            if sets.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    BuildingFamily { n: f.n, sets }
}

/// Is `f` closed under unions of intersecting pairs?
///
/// The answer is cross-checked against two equivalent formulations: every
/// member of the arrangement is the disjoint union of the maximal members of
/// `f` inside it; and the irreducible members of the arrangement lie in `f`
/// together with the intersecting-union rule. Disagreement raises
/// [`Error::Invariant`].
pub fn is_building_set(f: &BuildingFamily) -> Result<bool> {
    let union_closed = intersecting_unions_closed(f);
    let closure = arrangement_closure(f);
    let by_maximal = closure.sets.iter().all(|c| splits_into_maximal(f, c));
    let by_irreducibles = union_closed
        && closure
            .sets
            .iter()
            .filter(|c| !f.contains(c))
            .all(|c| has_decomposition(&closure.sets, c));
    if union_closed != by_maximal || union_closed != by_irreducibles {
        return Err(Error::invariant(format!(
            "building-set tests disagree on {:?}: unions {union_closed}, maximal splitting {by_maximal}, irreducibles {by_irreducibles}",
            f.sets
        )));
    }
    Ok(union_closed)
}

fn intersecting_unions_closed(f: &BuildingFamily) -> bool {
    f.sets.iter().all(|a| {
        f.sets
            .iter()
            .filter(|b| !a.is_disjoint(b))
            .all(|b| f.contains(&a.union(b).copied().collect()))
    })
}

/// Do the inclusion-maximal members of `f` inside `c` partition `c`?
fn splits_into_maximal(f: &BuildingFamily, c: &IndexSet) -> bool {
    let inside: Vec<&IndexSet> = f.sets.iter().filter(|g| g.is_subset(c)).collect();
    let maximal: Vec<&IndexSet> = inside
        .iter()
        .filter(|g| !inside.iter().any(|h| h.len() > g.len() && g.is_subset(h)))
        .copied()
        .collect();
    let total: usize = maximal.iter().map(|g| g.len()).sum();
    let covered: IndexSet = maximal.iter().flat_map(|g| g.iter().copied()).collect();
    total == covered.len() && covered == *c
}

/// Does `u` split as `u₁ ⊔ … ⊔ u_k` (`k ≥ 2`, all in `arr`) such that every
/// member of `arr` inside `u` meets each block in a member of `arr` or not
/// at all?
fn has_decomposition(arr: &BTreeSet<IndexSet>, u: &IndexSet) -> bool {
    let inside: Vec<&IndexSet> = arr.iter().filter(|a| a.is_subset(u)).collect();
    let elems: Vec<usize> = u.iter().copied().collect();
    let mut found = false;
    for_each_partition(&elems, &mut |blocks| {
        if found || blocks.len() < 2 {
            return;
        }
        let ok = blocks.iter().all(|b| arr.contains(b))
            && inside.iter().all(|a| {
                blocks.iter().all(|b| {
                    let meet: IndexSet = a.intersection(b).copied().collect();
                    meet.is_empty() || arr.contains(&meet)
                })
            });
        found = ok;
    });
    found
}

/// Calls `visit` with every set partition of `elems`.
fn for_each_partition(elems: &[usize], visit: &mut dyn FnMut(&[IndexSet])) {
    fn go(elems: &[usize], blocks: &mut Vec<IndexSet>, visit: &mut dyn FnMut(&[IndexSet])) {
        let Some((&x, rest)) = elems.split_first() else {
            visit(blocks);
            return;
        };
        for i in 0..blocks.len() {
            blocks[i].insert(x);
            go(rest, blocks, visit);
            blocks[i].remove(&x);
        }
        blocks.push(IndexSet::from([x]));
        go(rest, blocks, visit);
        blocks.pop();
    }
    go(elems, &mut Vec::new(), visit);
}

/// `∏_{A ∈ f} (x_i : i ∈ A)`, tame whenever `f` is a building set.
pub fn building_product(f: &BuildingFamily) -> Result<MonomialIdeal> {
    if !is_building_set(f)? {
        return Err(Error::input(format!("{:?} is not a building set", f.sets)));
    }
    let factors = f
        .clouds()
        .iter()
        .map(CoordinateCloud::to_ideal)
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::product_all(f.n, &factors)
}

fn common_dim(clouds: &[CoordinateCloud]) -> Result<usize> {
    let n = clouds
        .first()
        .map(CoordinateCloud::dim)
        .ok_or_else(|| Error::input("need at least one coordinate cloud"))?;
    for c in clouds {
        Error::check_dim(n, c.dim())?;
    }
    Ok(n)
}

/// `∏_{i<j} (I_i + I_j)` for `N ≥ 2` coordinate ideals.
pub fn pairwise_sum_product(clouds: &[CoordinateCloud]) -> Result<MonomialIdeal> {
    let n = common_dim(clouds)?;
    if clouds.len() < 2 {
        return Err(Error::input(
            "the pairwise-sum product needs at least two ideals",
        ));
    }
    let mut acc = MonomialIdeal::unit(n);
    for (i, a) in clouds.iter().enumerate() {
        for b in &clouds[i + 1..] {
            acc = acc.product(&a.union(b)?.to_ideal()?)?;
        }
    }
    Ok(acc)
}

/// `∏ I_i · ∏_{i<j} (I_i + I_j)`: a tame ideal with the same zero set as
/// `∏ I_i`. Both properties are checked.
pub fn smooth_product(clouds: &[CoordinateCloud]) -> Result<MonomialIdeal> {
    let n = common_dim(clouds)?;
    let plain = MonomialIdeal::product_all(
        n,
        &clouds
            .iter()
            .map(CoordinateCloud::to_ideal)
            .collect::<Result<Vec<_>>>()?,
    )?;
    let result = if clouds.len() >= 2 {
        plain.product(&pairwise_sum_product(clouds)?)?
    } else {
        plain.clone()
    };
    if !is_tame(&result)?.tame {
        return Err(Error::invariant(format!(
            "smoothed product {result} is not tame"
        )));
    }
    if result.radical() != plain.radical() {
        return Err(Error::invariant(format!(
            "smoothed product {result} changed the radical of {plain}"
        )));
    }
    Ok(result)
}

/// Parameters of the permutohedral ideal `I_{n,k}`, `2 ≤ k ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermutohedronSpec {
    n: usize,
    k: usize,
}

/// Largest `n` built without an explicit override.
pub const PERMUTOHEDRAL_MAX_N: usize = 6;

impl PermutohedronSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if !(2 <= k && k <= n) {
            return Err(Error::Range(format!(
                "need 2 ≤ k ≤ n, got n = {n}, k = {k}"
            )));
        }
        Ok(PermutohedronSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(C(n−1,k−1), C(n−2,k−1), …, C(k−1,k−1), 0, …, 0)`.
    pub fn base(&self) -> Result<ExponentVector> {
        (0..self.n)
            .map(|i| {
                let b = binomial(self.n - 1 - i, self.k - 1);
                i64::try_from(b).map_err(|_| Error::Overflow("permutohedron base"))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVec::new)
    }

    /// `n!/(k−1)!`, the number of distinct permutations of the base.
    pub fn vertex_count(&self) -> u128 {
        (self.k..=self.n).map(|i| i as u128).product()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `k`-subsets of `{0..n}` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `I_{n,k} = ∏_{i₁<…<i_k} (x_{i₁},…,x_{i_k})`, refusing `n > 6`.
pub fn permutohedral_ideal(spec: PermutohedronSpec) -> Result<MonomialIdeal> {
    if spec.n > PERMUTOHEDRAL_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "permutohedral ideals are limited to n ≤ {PERMUTOHEDRAL_MAX_N}, got {}",
            spec.n
        )));
    }
    permutohedral_ideal_unguarded(spec)
}

/// [`permutohedral_ideal`] without the size guard.
pub fn permutohedral_ideal_unguarded(spec: PermutohedronSpec) -> Result<MonomialIdeal> {
    let n = spec.n;
    let mut acc = MonomialIdeal::unit(n);
    for s in subsets(n, spec.k) {
        let factor = MonomialIdeal::minimalize(s.iter().map(|&i| IntVec::unit(n, i)), n)?;
        acc = acc.product(&factor)?;
    }
    Ok(acc)
}

/// The distinct permutations of the base vector, sorted.
pub fn permutohedron_vertices(spec: PermutohedronSpec) -> Result<Vec<ExponentVector>> {
    let mut cur = spec.base()?.into_entries();
    cur.sort();
    let mut out = vec![IntVec::new(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(IntVec::new(cur.clone()));
    }
    Ok(out)
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Largest `n` accepted by the polynomial expansion.
pub const POLYNOMIAL_MAX_N: usize = 5;

/// Expands `∏_{i₁<…<i_k} (x_{i₁}+…+x_{i_k})` over the integers and returns
/// the exponents with coefficient exactly 1, sorted.
pub fn permutation_polynomial_maxvectors(spec: PermutohedronSpec) -> Result<Vec<ExponentVector>> {
    if spec.n > POLYNOMIAL_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "polynomial expansion is limited to n ≤ {POLYNOMIAL_MAX_N}, got {}",
            spec.n
        )));
    }
    let n = spec.n;
    let mut poly: HashMap<Vec<i64>, u128> = HashMap::from([(vec![0; n], 1)]);
    for s in subsets(n, spec.k) {
        let mut next: HashMap<Vec<i64>, u128> = HashMap::new();
        for (e, c) in &poly {
            for &i in &s {
                let mut f = e.clone();
                f[i] += 1;
                *next.entry(f).or_default() += c;
            }
        }
        poly = next;
    }
    let mut out: Vec<ExponentVector> = poly
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(e, _)| IntVec::new(e))
        .collect();
    out.sort();
    Ok(out)
}

/// Coefficient of `x^e` in the permutation polynomial (test helper for the
/// expansion above).
pub fn permutation_polynomial_coefficient(spec: PermutohedronSpec, e: &ExponentVector) -> u128 {
    // choose one variable per factor; count the choices hitting e
    fn count(factors: &[Vec<usize>], rest: &mut Vec<i64>) -> u128 {
        let Some((f, tail)) = factors.split_first() else {
            return u128::from(rest.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for &i in f {
            if rest[i] > 0 {
                rest[i] -= 1;
                total += count(tail, rest);
                rest[i] += 1;
            }
        }
        total
    }
    count(&subsets(spec.n, spec.k), &mut e.entries().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::vertices;
    use crate::ideal::parse_ideal;

    fn fam(n: usize, sets: &[&[usize]]) -> BuildingFamily {
        BuildingFamily::new(n, sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn cc(n: usize, idx: &[usize]) -> CoordinateCloud {
        CoordinateCloud::new(n, idx.iter().copied()).unwrap()
    }

    #[test]
    fn axes_closed_forms() {
        assert_eq!(
            axes_ideal(3, 2).unwrap(),
            parse_ideal("(x1*x2, x3)", None).unwrap()
        );
        assert_eq!(
            axes_ideal(4, 2).unwrap(),
            parse_ideal("(x1*x2, x3, x4)", None).unwrap()
        );
        assert_eq!(
            axes_ideal(4, 3).unwrap(),
            parse_ideal("(x1*x2, x1*x3, x2*x3, x4)", None).unwrap()
        );
        assert!(axes_ideal(3, 1).is_err());
        assert!(axes_ideal(3, 3).is_err());
    }

    #[test]
    fn rosenberg_small_case() {
        let r = rosenberg_ideal(3, 2).unwrap();
        let expected: Vec<IntVec> = [[2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [0, 0, 3]]
            .into_iter()
            .map(IntVec::from)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(rosenberg_expected_vertices(3, 2).unwrap(), expected);
        assert_eq!(vertices(&r), expected);
        assert!(is_tame(&r).unwrap().tame);
        assert_eq!(r.radical(), axes_ideal(3, 2).unwrap());
        assert!(
            !is_tame(&rosenberg_intermediate(3, 2).unwrap())
                .unwrap()
                .tame
        );
    }

    #[test]
    fn closure_examples() {
        let c = arrangement_closure(&fam(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(c, fam(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]));
        assert_eq!(
            arrangement_closure(&fam(2, &[&[1], &[2]])),
            fam(2, &[&[1], &[2], &[1, 2]])
        );
        assert_eq!(arrangement_closure(&c), c);
    }

    #[test]
    fn building_set_examples() {
        assert!(!is_building_set(&fam(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap());
        assert!(is_building_set(&fam(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])).unwrap());
        let mickey = fam(
            5,
            &[
                &[1, 2],
                &[2, 3, 4],
                &[4, 5],
                &[1, 2, 3, 4],
                &[2, 3, 4, 5],
                &[1, 2, 3, 4, 5],
            ],
        );
        assert!(is_building_set(&mickey).unwrap());
        assert!(is_tame(&building_product(&mickey).unwrap()).unwrap().tame);
        assert!(building_product(&fam(3, &[&[1, 2], &[1, 3]])).is_err());
    }

    #[test]
    fn building_products_tame() {
        for f in [fam(2, &[&[1], &[2], &[1, 2]]), fam(3, &[&[1, 2], &[3]])] {
            assert!(is_tame(&building_product(&f).unwrap()).unwrap().tame);
        }
    }

    #[test]
    fn irreducibles_in_a_coordinate_arrangement() {
        // {1},{2},{3} and their unions: only the singletons are irreducible
        let arr = arrangement_closure(&fam(3, &[&[1], &[2], &[3]]));
        let irreducible: Vec<&IndexSet> = arr
            .sets()
            .iter()
            .filter(|u| !has_decomposition(arr.sets(), u))
            .collect();
        assert_eq!(irreducible.len(), 3);
        assert!(irreducible.iter().all(|u| u.len() == 1));
    }

    #[test]
    fn pairwise_sums() {
        let singletons: Vec<_> = (1..=4).map(|i| cc(4, &[i])).collect();
        let spec = PermutohedronSpec::new(4, 2).unwrap();
        assert_eq!(
            pairwise_sum_product(&singletons).unwrap(),
            permutohedral_ideal(spec).unwrap()
        );
        let two = pairwise_sum_product(&[cc(3, &[1]), cc(3, &[2, 3])]).unwrap();
        assert_eq!(two, maximal_ideal(3));
        let tri = pairwise_sum_product(&[cc(3, &[1, 2]), cc(3, &[2, 3]), cc(3, &[1, 3])]).unwrap();
        assert!(is_tame(&tri).unwrap().tame);
        assert!(pairwise_sum_product(&[cc(3, &[1])]).is_err());
    }

    #[test]
    fn smooth_products() {
        let p = smooth_product(&[cc(3, &[1, 2]), cc(3, &[1, 3])]).unwrap();
        let expected = parse_ideal("(x1, x2)", None)
            .unwrap()
            .embed(3)
            .unwrap()
            .product(&parse_ideal("(x1, x3)", None).unwrap())
            .unwrap()
            .product(&maximal_ideal(3))
            .unwrap();
        assert_eq!(p, expected);
        assert_eq!(smooth_product(&[cc(2, &[1, 2])]).unwrap(), maximal_ideal(2));
        smooth_product(&[cc(4, &[1, 2]), cc(4, &[2, 3]), cc(4, &[3, 4])]).unwrap();
    }

    #[test]
    fn permutohedron_bases() {
        let s = PermutohedronSpec::new(3, 2).unwrap();
        assert_eq!(s.base().unwrap(), IntVec::from([2, 1, 0]));
        let s = PermutohedronSpec::new(5, 4).unwrap();
        assert_eq!(s.base().unwrap(), IntVec::from([4, 1, 0, 0, 0]));
        assert_eq!(s.vertex_count(), 20);
        assert_eq!(permutohedron_vertices(s).unwrap().len(), 20);
        let s = PermutohedronSpec::new(4, 4).unwrap();
        assert_eq!(s.base().unwrap(), IntVec::from([1, 0, 0, 0]));
        assert!(PermutohedronSpec::new(3, 1).is_err());
        assert!(PermutohedronSpec::new(3, 4).is_err());
    }

    #[test]
    fn small_permutohedral_ideal() {
        let s = PermutohedronSpec::new(3, 2).unwrap();
        let i = permutohedral_ideal(s).unwrap();
        let mut expected = permutohedron_vertices(s).unwrap();
        expected.push(IntVec::from([1, 1, 1]));
        expected.sort();
        assert_eq!(i.cloud(), expected);
        assert_eq!(vertices(&i), permutohedron_vertices(s).unwrap());
        assert_eq!(
            permutation_polynomial_maxvectors(s).unwrap(),
            permutohedron_vertices(s).unwrap()
        );
        assert_eq!(
            permutation_polynomial_coefficient(s, &IntVec::from([1, 1, 1])),
            2
        );
        assert_eq!(
            permutation_polynomial_coefficient(s, &IntVec::from([2, 1, 0])),
            1
        );
        let big = PermutohedronSpec::new(7, 2).unwrap();
        assert!(matches!(
            permutohedral_ideal(big),
            Err(Error::ResourceLimit(_))
        ));
        assert!(permutation_polynomial_maxvectors(PermutohedronSpec::new(6, 2).unwrap()).is_err());
    }
}
