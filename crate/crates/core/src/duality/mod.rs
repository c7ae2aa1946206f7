//! Langlands duality between type `B_n` and twisted type `A_{2n-1}`: the path
//! maps `F`, `F⁻¹`, `L`, `R`, `G`, the gap statistic, and the verifiers for the
//! dominance theorem, the branching rule and the twisted KR corollary.

mod branching;
mod dominance;
mod twisted;

use alloc::vec::Vec;

pub use branching::{
    branch_monomials, branch_snakes, branch_tuples, verify_branching, verify_branching_cached,
    verify_decomposition, verify_path_bijection, BranchSummand, BranchingReport,
    DecompositionReport, FiberMismatch, PathBijectionReport,
};
pub use dominance::{
    dual_monomial, gap0_twisted_qchar, verify_dominance, verify_gap0_bijection, DominanceReport,
    Gap0Report,
};
pub use twisted::{
    gkr_qchar, gkr_snakes, map_g, verify_g_nop, verify_g_weight, verify_gkr_dominance,
    verify_tensor_dominance, GNopReport, TwistedDominanceReport,
};

use crate::error::{Error, Result};
use crate::paths::{corners_a, Corner, Corners, EpsInt, PathA, PathB};

/// Shape data shared by `F` and the reconstruction from `(L, R)`.
fn assemble(n: usize, left: &[i64], right: &[i64]) -> Result<PathB> {
    // left: x'_0..x'_n on columns 0..n; right: x_n..x_2n on columns n..2n
    let mut ys: Vec<EpsInt> = left[..n].iter().map(|&x| EpsInt::int(2 * x)).collect();
    let (xl, xl_prev) = (left[n], left[n - 1]);
    ys.push(if xl > xl_prev {
        EpsInt::new(2 * xl - 1, 1)
    } else {
        EpsInt::new(2 * xl + 1, -1)
    });
    let mut zs: Vec<EpsInt> = (0..n).map(|j| EpsInt::int(2 * right[n - j] - 2)).collect();
    let (xr, xr_next) = (right[0], right[1]);
    zs.push(if xr > xr_next {
        EpsInt::new(2 * xr - 3, 1)
    } else {
        EpsInt::new(2 * xr - 1, -1)
    });
    PathB::from_branches(ys, zs)
}

/// `F : 𝒫ᴬ_{i,k} → 𝒫ᴮ_{i,2k}` for paths with `m = 2n` columns and `1 ≤ i ≤ n`.
pub fn map_f(p: &PathA) -> Result<PathB> {
    let m = p.m();
    if m % 2 != 0 || m < 4 {
        return Err(Error::InvalidPath("F needs a path with 2n columns, n >= 2"));
    }
    let n = m / 2;
    let (i, k) = (p.i(), p.k());
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 1,
            max: n as i64,
        });
    }
    if (k - (n + i + 1) as i64).rem_euclid(2) != 0 {
        return Err(Error::Parity {
            i: i as i64,
            k,
            rule: "k = n+i+1 (mod 2)",
        });
    }
    let x = p.ys();
    assemble(n, &x[..=n], &x[n..])
}

/// `½(⌊(y_n+1)/2⌋ - ⌊(z_n+3)/2⌋)`.
pub fn gap(p: &PathB) -> u64 {
    let a = p.yn().floor_half_plus(1);
    let b = p.zn().floor_half_plus(3);
    let d = a - b;
    debug_assert!(
        d >= 0 && d % 2 == 0,
        "gap numerator {d} must be even and nonnegative"
    );
    (d / 2) as u64
}

pub fn gap_tuple<'a, I: IntoIterator<Item = &'a PathB>>(tuple: I) -> u64 {
    tuple.into_iter().map(gap).sum()
}

/// The inverse of `F` on paths of gap 0.
pub fn map_f_inv(p: &PathB) -> Result<PathA> {
    let g = gap(p);
    if g != 0 {
        return Err(Error::NonzeroGap(g));
    }
    let n = p.n();
    let mut xs: Vec<i64> = (0..n).map(|j| p.y(j) / 2).collect();
    xs.push(p.yn().floor_half_plus(1));
    xs.extend((0..n).rev().map(|j| (p.z(j) + 2) / 2));
    PathA::new(2 * n, p.i(), p.k() / 2, xs)
}

/// The left branch as a path on columns `0..=n`.
pub fn map_l(p: &PathB) -> PathA {
    let n = p.n();
    let mut xs: Vec<i64> = (0..n).map(|j| p.y(j) / 2).collect();
    xs.push(p.yn().floor_half_plus(1));
    PathA::from_ys(xs).expect("left branch halves to a unit-step path")
}

/// The right branch as a path on columns `n..=2n`, stored from index 0.
pub fn map_r(p: &PathB) -> PathA {
    let n = p.n();
    let mut xs = alloc::vec![p.zn().floor_half_plus(3)];
    xs.extend((0..n).rev().map(|j| (p.z(j) + 2) / 2));
    PathA::from_ys(xs).expect("right branch halves to a unit-step path")
}

/// Rebuilds the type B path with the given images under `L` and `R`.
pub fn from_branches_lr(left: &PathA, right: &PathA) -> Result<PathB> {
    let n = left.m();
    if right.m() != n {
        return Err(Error::IncompatiblePaths);
    }
    assemble(n, left.ys(), right.ys())
}

/// Corners of `F(p)` predicted from the corners of `p`.
pub fn predicted_corners_of_f(p: &PathA) -> Result<Corners> {
    let m = p.m();
    if m % 2 != 0 {
        return Err(Error::InvalidPath("F needs a path with 2n columns"));
    }
    let n = m / 2;
    let f = |j: usize, l: i64| -> Corner {
        if j < n {
            Corner::new(j, 2 * l)
        } else {
            Corner::new(m - j, 2 * l - 2)
        }
    };
    let ca = corners_a(p);
    let mut out = Corners::default();
    for c in &ca.upper {
        if c.j == n {
            out.upper.push(Corner::new(n, 2 * c.level - 1));
            out.upper.push(Corner::new(n, 2 * c.level + 1));
        } else {
            out.upper.push(f(c.j, c.level));
        }
    }
    for c in &ca.lower {
        if c.j == n {
            out.lower.push(Corner::new(n, 2 * c.level - 1));
            out.lower.push(Corner::new(n, 2 * c.level - 3));
        } else {
            out.lower.push(f(c.j, c.level));
        }
    }
    let x = p.ys();
    let l = x[n];
    if x[n - 1] == l + 1 && x[n + 1] == l - 1 {
        out.lower.push(Corner::new(n, 2 * l - 3));
        out.upper.push(Corner::new(n, 2 * l + 1));
    }
    out.upper.sort();
    out.lower.sort();
    Ok(out)
}

/// True iff the corners of `F(p)` are the ones predicted from `p`.
pub fn verify_corner_transport(p: &PathA) -> Result<bool> {
    let image = map_f(p)?;
    Ok(crate::paths::corners_b(&image) == predicted_corners_of_f(p)?)
}
