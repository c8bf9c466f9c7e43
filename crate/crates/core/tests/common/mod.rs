//! Independent oracles and seeded generators shared by the integration tests.
//!
//! Nothing here calls into the simplex kernel: the hull oracle enumerates
//! basic solutions with its own Gaussian elimination, and the pointedness
//! oracle searches bounded ℕ-combinations directly.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tame_blowup::exactmath::IntVec;
use tame_blowup::ideal::{CoordinateCloud, ExponentVector, MonomialIdeal};

pub fn v(x: &[i64]) -> IntVec {
    IntVec::new(x.to_vec())
}

pub fn vs(xs: &[&[i64]]) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = xs.iter().map(|x| v(x)).collect();
    out.sort();
    out
}

/// A random ideal in `n` variables with up to `max_gens` generators whose
/// exponents are at most `max_exp`. The zero vector is never drawn.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_exp: i64,
    max_gens: usize,
) -> MonomialIdeal {
    let m = rng.gen_range(1..=max_gens);
    let mut points = Vec::with_capacity(m);
    while points.len() < m {
        let p = IntVec::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !p.is_zero() {
            points.push(p);
        }
    }
    MonomialIdeal::minimalize(points, n).expect("valid random cloud")
}

/// A random nonempty subset of `{1..n}`.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> BTreeSet<usize> {
    loop {
        let s: BTreeSet<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn random_cloud(rng: &mut ChaCha8Rng, n: usize) -> CoordinateCloud {
    CoordinateCloud::new(n, random_subset(rng, n)).expect("subset of 1..=n")
}

/// Is there a nonzero `λ ∈ {0..bound}^m` with `Σ λ_j g_j = 0`?
pub fn bounded_zero_combination(gens: &[IntVec], bound: i64) -> bool {
    fn go(gens: &[IntVec], bound: i64, acc: &mut Vec<i64>, used: bool) -> bool {
        let Some((g, rest)) = gens.split_first() else {
            return used && acc.iter().all(|&x| x == 0);
        };
        for c in 0..=bound {
            if go(rest, bound, acc, used || c > 0) {
                return true;
            }
            for (a, &x) in acc.iter_mut().zip(g.iter()) {
                *a += x;
            }
        }
        for (a, &x) in acc.iter_mut().zip(g.iter()) {
            *a -= (bound + 1) * x;
        }
        false
    }
    let n = gens.first().map_or(0, IntVec::dim);
    go(gens, bound, &mut vec![0; n], false)
}

type Q = BigRational;

fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

/// Solves the square system `A x = b` exactly; `None` if `A` is singular.
pub fn solve_square(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| row.iter().map(|&x| q(x)).chain([q(bi)]).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Q::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

fn for_each_subset(len: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        start: usize,
        len: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..len {
            cur.push(i);
            if go(i + 1, len, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, len, size, &mut Vec::new(), f)
}

/// Is `a` a vertex of the Newton polyhedron, decided by brute force?
///
/// `a` fails to be a vertex iff `a = Σ λ_j a_j + r` with the `a_j` other cloud
/// points, `λ` a probability vector and `r ≥ 0`. Feasibility of that system is
/// witnessed by a basic solution, so every nonsingular square subsystem over
/// the columns `(a_j − a, 1)` and `(e_i, 0)` is tried.
pub fn hull_vertex_oracle(ideal: &MonomialIdeal, a: &ExponentVector) -> bool {
    let n = ideal.dim();
    let others: Vec<&ExponentVector> = ideal.cloud().iter().filter(|p| *p != a).collect();
    if others.is_empty() {
        return true;
    }
    let mut columns: Vec<Vec<i64>> = others
        .iter()
        .map(|p| {
            p.iter()
                .zip(a.iter())
                .map(|(x, y)| x - y)
                .chain([1])
                .collect()
        })
        .collect();
    for i in 0..n {
        let mut e = vec![0; n + 1];
        e[i] = 1;
        columns.push(e);
    }
    let mut rhs = vec![0; n + 1];
    rhs[n] = 1;
    let feasible = for_each_subset(columns.len(), n + 1, &mut |pick| {
        let rows: Vec<Vec<i64>> = (0..=n)
            .map(|r| pick.iter().map(|&c| columns[c][r]).collect())
            .collect();
        solve_square(&rows, &rhs).is_some_and(|x| x.iter().all(|t| !t.is_negative()))
    });
    !feasible
}

/// Lexicographically sorted cloud points that pass [`hull_vertex_oracle`].
pub fn hull_vertices(ideal: &MonomialIdeal) -> Vec<ExponentVector> {
    ideal
        .cloud()
        .iter()
        .filter(|a| hull_vertex_oracle(ideal, a))
        .cloned()
        .collect()
}

/// The support of `I·J` inside the box `[0, bound]ⁿ` by its alternate
/// description: `c` is in it iff `c = p + q` with `p ∈ supp I`, `q ∈ supp J`.
pub fn product_support_in_box(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    bound: i64,
) -> BTreeSet<IntVec> {
    let n = i.dim();
    let in_support = |ideal: &MonomialIdeal, p: &[i64]| {
        ideal.cloud().iter().any(|a| (0..n).all(|k| a[k] <= p[k]))
    };
    box_points(n, bound)
        .into_iter()
        .filter(|c| {
            box_points(n, bound).iter().any(|p| {
                let q: Vec<i64> = (0..n).map(|k| c[k] - p[k]).collect();
                q.iter().all(|&x| x >= 0) && in_support(i, p.entries()) && in_support(j, &q)
            })
        })
        .collect()
}

pub fn box_points(n: usize, bound: i64) -> Vec<IntVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(IntVec::new).collect()
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

pub mod strategies {
    use proptest::prelude::*;

    use tame_blowup::exactmath::IntVec;
    use tame_blowup::ideal::MonomialIdeal;

    /// A cloud of `1..=max_gens` nonzero points of `[0, max_exp]ⁿ`.
    pub fn ideal_in(
        n: usize,
        max_exp: i64,
        max_gens: usize,
    ) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
            .prop_filter("some point is nonzero", |pts| {
                pts.iter().any(|p| p.iter().any(|&x| x != 0))
            })
            .prop_map(move |pts| {
                let pts = pts
                    .into_iter()
                    .filter(|p| p.iter().any(|&x| x != 0))
                    .map(IntVec::new);
                MonomialIdeal::minimalize(pts, n).expect("valid cloud")
            })
    }

    pub fn ideal(
        max_n: usize,
        max_exp: i64,
        max_gens: usize,
    ) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_n).prop_flat_map(move |n| ideal_in(n, max_exp, max_gens))
    }

    pub fn ideal_pair(
        max_n: usize,
        max_exp: i64,
        max_gens: usize,
    ) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
        (1..=max_n).prop_flat_map(move |n| {
            (
                ideal_in(n, max_exp, max_gens),
                ideal_in(n, max_exp, max_gens),
            )
        })
    }

    pub fn ideal_triple(
        max_n: usize,
        max_exp: i64,
        max_gens: usize,
    ) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
        (1..=max_n).prop_flat_map(move |n| {
            (
                ideal_in(n, max_exp, max_gens),
                ideal_in(n, max_exp, max_gens),
                ideal_in(n, max_exp, max_gens),
            )
        })
    }

    /// Nonzero vectors of `[−r, r]ⁿ`.
    pub fn generators(max_n: usize, r: i64, max_len: usize) -> impl Strategy<Value = Vec<IntVec>> {
        (1..=max_n).prop_flat_map(move |n| {
            prop::collection::vec(
                prop::collection::vec(-r..=r, n)
                    .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
                    .prop_map(IntVec::new),
                1..=max_len,
            )
        })
    }
}

/// Vectors reachable as ℕ-combinations of `gens` with total coefficient at
/// most `bound`.
pub fn bounded_nspan(gens: &[IntVec], bound: usize) -> std::collections::HashSet<IntVec> {
    let n = gens.first().map_or(0, IntVec::dim);
    let mut seen = std::collections::HashSet::new();
    seen.insert(IntVec::zero(n));
    let mut layer = vec![IntVec::zero(n)];
    for _ in 0..bound {
        let mut next = Vec::new();
        for u in &layer {
            for g in gens {
                let w = u.checked_add(g).expect("small entries");
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    seen
}
