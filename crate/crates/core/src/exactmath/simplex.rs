//! Exact phase-one simplex for feasibility problems `A x = b, x ≥ 0`.
//!
//! Pivoting uses Bland's rule (lowest eligible index for both the entering
//! column and ratio-test ties), so runs are deterministic and cannot cycle.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use super::{rat, IntVec, Rat, RatVec};
use crate::error::{Error, Result};

/// Exact field arithmetic that may refuse an operation on overflow.
///
/// The simplex runs first over `Ratio<i128>` and is replayed over
/// `BigRational` only if some intermediate does not fit. Both runs take the
/// same pivots, so the answer does not depend on which one finished.
trait Field: Clone + PartialOrd + Zero + One + Signed {
    fn from_i64(x: i64) -> Self;
    fn sub_(&self, o: &Self) -> Option<Self>;
    fn mul_(&self, o: &Self) -> Option<Self>;
    fn div_(&self, o: &Self) -> Option<Self>;
    fn to_rat(&self) -> Rat;
}

impl Field for Rat {
    fn from_i64(x: i64) -> Self {
        rat(x)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

type Small = Ratio<i128>;

impl Field for Small {
    fn from_i64(x: i64) -> Self {
        Small::from_integer(x as i128)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn to_rat(&self) -> Rat {
        Rat::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

struct PhaseOne {
    /// Optimal value of the artificial objective (0 iff feasible).
    infeasibility: Rat,
    /// Primal solution restricted to the structural columns.
    x: RatVec,
    /// Optimal dual vector `y`, with `yᵀA ≤ 0` and `yᵀb = infeasibility`.
    y: RatVec,
}

/// Solves `min 1ᵀr` subject to `A x + r = b`, `x, r ≥ 0`.
///
/// `columns` holds `A` column by column, each of length `b.len()`.
fn phase_one(columns: &[&IntVec], b: &[i64]) -> PhaseOne {
    phase_one_in::<Small>(columns, b)
        .or_else(|| phase_one_in::<Rat>(columns, b))
        .expect("arbitrary-precision arithmetic does not overflow")
}

fn phase_one_in<F: Field>(columns: &[&IntVec], b: &[i64]) -> Option<PhaseOne> {
    let m = b.len();
    let ncols = columns.len();
    let width = ncols + m;

    // Flip rows so that b ≥ 0; remember the flips to report duals for the
    // original system.
    let flip: Vec<bool> = b.iter().map(|&x| x < 0).collect();
    let mut tab: Vec<Vec<F>> = (0..m)
        .map(|i| {
            let sign = if flip[i] { -1 } else { 1 };
            let mut row = Vec::with_capacity(width + 1);
            for col in columns {
                row.push(F::from_i64(sign * col[i]));
            }
            for j in 0..m {
                row.push(if i == j { F::one() } else { F::zero() });
            }
            row.push(F::from_i64(sign * b[i]));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (ncols..width).collect();

    // reduced costs: c_j - c_Bᵀ B⁻¹ A_j, with the last entry holding -objective
    let mut cost: Vec<F> = vec![F::zero(); width + 1];
    for j in (0..ncols).chain(std::iter::once(width)) {
        let mut s = F::zero();
        for row in &tab {
            s = s.sub_(&row[j])?;
        }
        cost[j] = s;
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, F)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = row[width].div_(&row[enter])?;
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // the phase-one objective is bounded below by 0, so a pivot row exists
        let (r, _) = leave.expect("phase-one simplex is bounded");
        pivot(&mut tab, &mut cost, r, enter)?;
        basis[r] = enter;
    }

    let mut x = vec![Rat::zero(); ncols];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < ncols {
            x[bv] = tab[i][width].to_rat();
        }
    }
    // cost of artificial i is 1, so its reduced cost is 1 - y_i
    let y = (0..m)
        .map(|i| {
            let yi = Rat::one() - cost[ncols + i].to_rat();
            if flip[i] {
                -yi
            } else {
                yi
            }
        })
        .collect();
    Some(PhaseOne {
        infeasibility: -cost[width].to_rat(),
        x,
        y,
    })
}

fn pivot<F: Field>(tab: &mut [Vec<F>], cost: &mut [F], r: usize, c: usize) -> Option<()> {
    let p = tab[r][c].clone();
    if !p.is_one() {
        for v in tab[r].iter_mut() {
            *v = v.div_(&p)?;
        }
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v = v.sub_(&f.mul_(pv)?)?;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v = v.sub_(&f.mul_(pv)?)?;
            }
        }
    }
    Some(())
}

fn common_dim(gens: &[IntVec]) -> Result<usize> {
    let n = gens.first().map_or(0, IntVec::dim);
    for g in gens {
        Error::check_dim(n, g.dim())?;
    }
    Ok(n)
}

/// Finds a rational `w` with `w·g ≥ 1` for every generator, or `None` when
/// `0` lies in the convex hull of the generators (equivalently, when some
/// nontrivial nonnegative combination of them vanishes).
///
/// The search works on the dual problem `0 ∈ conv(S)` over a growing subset
/// `S` of the generators: each round either certifies `0 ∈ conv(S)` or yields
/// a functional that is checked against all generators, and the most violated
/// ones join `S`. The first `S` holds the shortest generators (by `ℓ¹` norm,
/// ties by position), which usually carry the certificate either way.
pub fn find_separating_functional(gens: &[IntVec]) -> Result<Option<RatVec>> {
    if gens.is_empty() {
        return Err(Error::input(
            "separating functional needs at least one generator",
        ));
    }
    let n = common_dim(gens)?;
    if let Some(z) = gens.iter().position(IntVec::is_zero) {
        return Err(Error::input(format!("generator {z} is the zero vector")));
    }

    // columns (g, 1) of the system Σ λ_g (g, 1) = (0, 1)
    let lifted: Vec<IntVec> = gens
        .iter()
        .map(|g| {
            let mut e = g.entries().to_vec();
            e.push(1);
            IntVec::new(e)
        })
        .collect();
    let batch = n + 1;
    let mut by_length: Vec<usize> = (0..gens.len()).collect();
    by_length.sort_by_key(|&i| (gens[i].iter().map(|x| x.unsigned_abs()).sum::<u64>(), i));
    let mut active: Vec<usize> = by_length.into_iter().take(2 * batch).collect();
    active.sort_unstable();
    let mut in_active = vec![false; gens.len()];
    for &i in &active {
        in_active[i] = true;
    }
    let mut b = vec![0; n + 1];
    b[n] = 1;

    loop {
        let columns: Vec<&IntVec> = active.iter().map(|&i| &lifted[i]).collect();
        let sol = phase_one(&columns, &b);
        if sol.infeasibility.is_zero() {
            return Ok(None);
        }
        let t = sol.y[n].clone();
        debug_assert!(t.is_positive());
        let w: RatVec = sol.y[..n].iter().map(|yi| -yi / &t).collect();

        let mut violated = violations(gens, &in_active, &w);
        if violated.is_empty() {
            return Ok(Some(w));
        }
        violated.sort();
        for &(_, i) in violated.iter().take(batch) {
            in_active[i] = true;
            active.push(i);
        }
        active.sort_unstable();
    }
}

/// Inactive generators with `w·g < 1`, keyed by `L·(w·g)` for the common
/// denominator `L` of `w`.
fn violations(gens: &[IntVec], in_active: &[bool], w: &[Rat]) -> Vec<(BigInt, usize)> {
    let (scale, w_int) = super::clear_denominators(w);
    let small: Option<(i128, Vec<i128>)> = i64::try_from(&scale).ok().and_then(|s| {
        let ws = w_int
            .iter()
            .map(|x| i64::try_from(x).ok().map(i128::from))
            .collect::<Option<Vec<_>>>()?;
        Some((i128::from(s), ws))
    });
    gens.iter()
        .enumerate()
        .filter(|(i, _)| !in_active[*i])
        .filter_map(|(i, g)| {
            let fast = small.as_ref().and_then(|(s, ws)| {
                let d = g.iter().zip(ws).try_fold(0i128, |acc, (&a, &b)| {
                    acc.checked_add(i128::from(a).checked_mul(b)?)
                })?;
                Some((d < *s).then(|| BigInt::from(d)))
            });
            let d = match fast {
                Some(d) => d,
                None => {
                    let d = g.dot_big(&w_int);
                    (d < scale).then_some(d)
                }
            };
            d.map(|d| (d, i))
        })
        .collect()
}

/// Finds nonnegative rational `λ` with `Σ λ_i g_i = target`, or `None`.
pub fn nonneg_rational_solve(gens: &[IntVec], target: &IntVec) -> Result<Option<RatVec>> {
    let n = target.dim();
    for g in gens {
        Error::check_dim(n, g.dim())?;
    }
    let columns: Vec<&IntVec> = gens.iter().collect();
    let sol = phase_one(&columns, target.entries());
    Ok(sol.infeasibility.is_zero().then_some(sol.x))
}
