//! Path sets `𝒫ᴬ_{i,k}` and `𝒫ᴮ_{i,k}`, their corners, monomials and weights.
//!
//! Vertical coordinates grow downwards: a path with smaller `y` values lies
//! above one with larger values.

mod eps;

use alloc::vec;
use alloc::vec::Vec;

pub use eps::EpsInt;

use crate::error::{Error, Result};
use crate::lattice::{Family, Weight};
use crate::monomial::{Var, YMonomial};

/// A point `(j, ℓ)` of the index set, recorded as a corner of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub j: usize,
    pub level: i64,
}

impl Corner {
    pub fn new(j: usize, level: i64) -> Self {
        Corner { j, level }
    }
}

/// Upper corners (`C⁺`) and lower corners (`C⁻`), each sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corners {
    pub upper: Vec<Corner>,
    pub lower: Vec<Corner>,
}

/// Behaviour shared by both path types.
pub trait LatticePath: Clone {
    /// The weight lattice receiving `weight_of_path`.
    fn family(&self) -> Family;

    fn corners(&self) -> Corners;

    /// True iff `self` lies strictly above `other` at every shared column.
    fn strictly_above(&self, other: &Self) -> Result<bool>;

    /// Two paths can only be compared when their shapes agree.
    fn same_shape(&self, other: &Self) -> bool;
}

/// `∏ Y_{j,q^ℓ}` over upper corners times `∏ Y_{j,q^ℓ}^{-1}` over lower corners.
pub fn monomial_of_path<P: LatticePath>(p: &P) -> YMonomial {
    let c = p.corners();
    let mut m = YMonomial::one();
    for u in &c.upper {
        m.mul_var(Var::plus(u.j, u.level), 1);
    }
    for l in &c.lower {
        m.mul_var(Var::plus(l.j, l.level), -1);
    }
    m
}

/// `Σ ω_j` over upper corners minus `Σ ω_j` over lower corners.
pub fn weight_of_path<P: LatticePath>(p: &P) -> Weight {
    let c = p.corners();
    let mut w = Weight::zero(p.family());
    for u in &c.upper {
        w.add_fundamental(u.j, 1);
    }
    for l in &c.lower {
        w.add_fundamental(l.j, -1);
    }
    w
}

pub fn strictly_above<P: LatticePath>(p: &P, q: &P) -> Result<bool> {
    p.strictly_above(q)
}

pub fn corners<P: LatticePath>(p: &P) -> Corners {
    p.corners()
}

/// A type A path: points `(x, ys[x])` for `x = 0..=m` with unit steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathA {
    m: usize,
    i: usize,
    k: i64,
    ys: Vec<i64>,
}

impl PathA {
    pub fn new(m: usize, i: usize, k: i64, ys: Vec<i64>) -> Result<Self> {
        let p = PathA::from_ys(ys)?;
        if p.m != m || p.i != i || p.k != k {
            return Err(Error::InvalidPath("endpoints do not match (m, i, k)"));
        }
        Ok(p)
    }

    /// Builds a path from its coordinates, deriving `m`, `i` and `k`.
    pub fn from_ys(ys: Vec<i64>) -> Result<Self> {
        if ys.len() < 3 {
            return Err(Error::InvalidPath(
                "type A paths need at least three columns",
            ));
        }
        if ys.windows(2).any(|w| (w[1] - w[0]).abs() != 1) {
            return Err(Error::InvalidPath("steps must be +1 or -1"));
        }
        let m = ys.len() - 1;
        let twice_i = ys[0] - ys[m] + m as i64;
        let i = (twice_i / 2) as usize;
        let k = ys[0] - i as i64;
        Ok(PathA { m, i, k, ys })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn ys(&self) -> &[i64] {
        &self.ys
    }

    pub fn y(&self, x: usize) -> i64 {
        self.ys[x]
    }

    pub fn into_ys(self) -> Vec<i64> {
        self.ys
    }
}

impl LatticePath for PathA {
    fn family(&self) -> Family {
        Family::A(self.m - 1)
    }

    fn corners(&self) -> Corners {
        corners_a(self)
    }

    fn strictly_above(&self, other: &Self) -> Result<bool> {
        if !self.same_shape(other) {
            return Err(Error::IncompatiblePaths);
        }
        Ok(self.ys.iter().zip(&other.ys).all(|(a, b)| a < b))
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

/// All paths from `(0, i+k)` to `(m, m-i+k)`, in lexicographic order.
pub fn enum_paths_a(m: usize, i: usize, k: i64) -> Result<Vec<PathA>> {
    if m < 2 {
        return Err(Error::RankTooSmall(m.saturating_sub(1)));
    }
    if i > m {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: m as i64,
        });
    }
    let start = i as i64 + k;
    let end = (m - i) as i64 + k;
    Ok(paths_between(m, start, end)
        .into_iter()
        .map(|ys| PathA { m, i, k, ys })
        .collect())
}

/// All unit-step sequences of length `m + 1` from `start` to `end`, lexicographically.
pub(crate) fn paths_between(m: usize, start: i64, end: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let span = (end - start).abs();
    if span > m as i64 || (span - m as i64) % 2 != 0 {
        return out;
    }
    let mut ys = vec![start];
    fill_paths(m, end, &mut ys, &mut out);
    out
}

fn fill_paths(m: usize, end: i64, ys: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let x = ys.len() - 1;
    if x == m {
        out.push(ys.clone());
        return;
    }
    let y = ys[x];
    let left = (m - x - 1) as i64;
    for next in [y - 1, y + 1] {
        if (end - next).abs() <= left {
            ys.push(next);
            fill_paths(m, end, ys, out);
            ys.pop();
        }
    }
}

/// Upper corners are interior local minima, lower corners interior local maxima.
pub fn corners_a(p: &PathA) -> Corners {
    let mut c = Corners::default();
    for r in 1..p.m {
        let (a, y, b) = (p.ys[r - 1], p.ys[r], p.ys[r + 1]);
        if a == y + 1 && b == y + 1 {
            c.upper.push(Corner::new(r, y));
        } else if a == y - 1 && b == y - 1 {
            c.lower.push(Corner::new(r, y));
        }
    }
    c
}

/// `+1` if the path descends into its last column, `-1` otherwise.
pub fn half_char_at_n(p: &PathA) -> i64 {
    if p.ys[p.m] == p.ys[p.m - 1] - 1 {
        1
    } else {
        -1
    }
}

/// True iff `(i, k)` lies in `𝒳ᴮ` for rank `n`, restricted to `1 ≤ i ≤ n`.
pub fn in_x_b(n: usize, i: usize, k: i64) -> bool {
    i >= 1 && i <= n && (k - 2 * n as i64 - 2 * i as i64 - 2).rem_euclid(4) == 0
}

pub(crate) fn check_x_b(n: usize, i: usize, k: i64) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 1,
            max: n as i64,
        });
    }
    if !in_x_b(n, i, k) {
        return Err(Error::Parity {
            i: i as i64,
            k,
            rule: "k = 2n+2i+2 (mod 4)",
        });
    }
    Ok(())
}

/// A type B path stored as its two branches.
///
/// `ys[j]` sits at `x = 2j` for `j < n` and `ys[n]` at `x = 2n-1`;
/// `zs[j]` sits at `x = 4n-2-2j` for `j < n` and `zs[n]` at `x = 2n-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathB {
    n: usize,
    i: usize,
    k: i64,
    ys: Vec<EpsInt>,
    zs: Vec<EpsInt>,
}

impl PathB {
    pub fn new(n: usize, i: usize, k: i64, ys: Vec<EpsInt>, zs: Vec<EpsInt>) -> Result<Self> {
        let p = PathB::from_branches(ys, zs)?;
        if p.n != n || p.i != i || p.k != k {
            return Err(Error::InvalidPath("endpoints do not match (n, i, k)"));
        }
        Ok(p)
    }

    /// Builds a path from its branches, deriving `n`, `i` and `k`.
    pub fn from_branches(ys: Vec<EpsInt>, zs: Vec<EpsInt>) -> Result<Self> {
        if ys.len() != zs.len() || ys.len() < 3 {
            return Err(Error::InvalidPath(
                "branches must have equal length n+1 with n >= 2",
            ));
        }
        let n = ys.len() - 1;
        for br in [&ys, &zs] {
            if !valid_branch(br) {
                return Err(Error::InvalidPath("branch steps must be +-2, then +-(1+e)"));
            }
        }
        let diff = ys[0].a - zs[0].a + 4 * n as i64 - 2;
        if diff.rem_euclid(4) != 0 {
            return Err(Error::InvalidPath("branch starts are inconsistent"));
        }
        let i = diff / 4;
        if i < 1 || i > n as i64 {
            return Err(Error::InvalidPath("index out of range"));
        }
        let i = i as usize;
        let k = ys[0].a - 2 * i as i64;
        check_x_b(n, i, k)
            .map_err(|_| Error::InvalidPath("start point is not in the index set"))?;
        if ys[n] <= zs[n] {
            return Err(Error::InvalidPath(
                "left branch must end below the right branch",
            ));
        }
        Ok(PathB { n, i, k, ys, zs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn ys(&self) -> &[EpsInt] {
        &self.ys
    }

    pub fn zs(&self) -> &[EpsInt] {
        &self.zs
    }

    /// `y_j` for `j < n`, as an integer.
    pub fn y(&self, j: usize) -> i64 {
        debug_assert!(j < self.n);
        self.ys[j].a
    }

    /// `z_j` for `j < n`, as an integer.
    pub fn z(&self, j: usize) -> i64 {
        debug_assert!(j < self.n);
        self.zs[j].a
    }

    pub fn yn(&self) -> EpsInt {
        self.ys[self.n]
    }

    pub fn zn(&self) -> EpsInt {
        self.zs[self.n]
    }

    /// The points in plane coordinates, from `x = 0` to `x = 4n-2`.
    pub fn points(&self) -> Vec<(i64, EpsInt)> {
        let n = self.n as i64;
        let mut pts: Vec<(i64, EpsInt)> = (0..self.n).map(|j| (2 * j as i64, self.ys[j])).collect();
        pts.push((2 * n - 1, self.ys[self.n]));
        pts.push((2 * n - 1, self.zs[self.n]));
        pts.extend(
            (0..self.n)
                .rev()
                .map(|j| (4 * n - 2 - 2 * j as i64, self.zs[j])),
        );
        pts
    }
}

fn valid_branch(br: &[EpsInt]) -> bool {
    let n = br.len() - 1;
    if br[..n].iter().any(|v| !v.is_integer()) {
        return false;
    }
    if br[..n].windows(2).any(|w| (w[1].a - w[0].a).abs() != 2) {
        return false;
    }
    let (prev, last) = (br[n - 1].a, br[n]);
    last == EpsInt::new(prev + 1, 1) || last == EpsInt::new(prev - 1, -1)
}

/// All branches of length `n + 1` from `start`, lexicographically.
fn branches(n: usize, start: i64) -> Vec<Vec<EpsInt>> {
    let mut out = Vec::with_capacity(1 << n);
    for bits in 0..(1u32 << n) {
        let mut br = Vec::with_capacity(n + 1);
        let mut y = start;
        br.push(EpsInt::int(y));
        for s in 0..n - 1 {
            y += if bits >> (n - 1 - s) & 1 == 1 { 2 } else { -2 };
            br.push(EpsInt::int(y));
        }
        br.push(if bits & 1 == 1 {
            EpsInt::new(y + 1, 1)
        } else {
            EpsInt::new(y - 1, -1)
        });
        out.push(br);
    }
    out
}

/// All paths of `𝒫ᴮ_{i,k}` ordered lexicographically by (left branch, right branch).
pub fn enum_paths_b(n: usize, i: usize, k: i64) -> Result<Vec<PathB>> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    check_x_b(n, i, k)?;
    let left = branches(n, 2 * i as i64 + k);
    let right = branches(n, 4 * n as i64 - 2 * i as i64 + k - 2);
    let mut out = Vec::new();
    for l in &left {
        for r in &right {
            if l[n] > r[n] {
                out.push(PathB {
                    n,
                    i,
                    k,
                    ys: l.clone(),
                    zs: r.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The embedding `τ` of `𝒳ᴮ` into plane coordinates.
pub fn tau(n: usize, j: usize, l: i64) -> Result<(i64, i64)> {
    let nn = n as i64;
    let jj = j as i64;
    if j > n {
        return Err(Error::IndexOutOfRange {
            index: jj,
            min: 0,
            max: nn,
        });
    }
    if j == n {
        if l.rem_euclid(2) != 1 {
            return Err(Error::Parity {
                i: jj,
                k: l,
                rule: "level must be odd at j = n",
            });
        }
        return Ok((2 * nn - 1, l));
    }
    match (l - 2 * nn - 2 * jj).rem_euclid(4) {
        2 => Ok((2 * jj, l)),
        0 => Ok((4 * nn - 2 - 2 * jj, l)),
        _ => Err(Error::Parity {
            i: jj,
            k: l,
            rule: "level must be even for j < n",
        }),
    }
}

/// The partial inverse of [`tau`].
pub fn tau_inv(n: usize, x: i64, y: i64) -> Result<(usize, i64)> {
    let nn = n as i64;
    let miss = Error::NotInTauImage { x, y };
    let j = if x == 2 * nn - 1 {
        nn
    } else if x >= 0 && x <= 2 * nn - 2 && x % 2 == 0 {
        x / 2
    } else if x >= 2 * nn && x <= 4 * nn - 2 && x % 2 == 0 {
        (4 * nn - 2 - x) / 2
    } else {
        return Err(miss);
    };
    match tau(n, j as usize, y) {
        Ok((x2, _)) if x2 == x => Ok((j as usize, y)),
        _ => Err(miss),
    }
}

/// Corners of a type B path.
///
/// Strict interior extrema of each branch give corners at the branch index;
/// the two points in column `2n-1` give corners at `j = n`.
pub fn corners_b(p: &PathB) -> Corners {
    let mut c = Corners::default();
    for br in [&p.ys, &p.zs] {
        for j in 1..p.n {
            let (a, y, b) = (br[j - 1], br[j], br[j + 1]);
            if a > y && b > y {
                c.upper.push(Corner::new(j, y.a));
            } else if a < y && b < y {
                c.lower.push(Corner::new(j, y.a));
            }
        }
    }
    let column = [p.ys[p.n], p.zs[p.n]];
    let has = |v: EpsInt| column.contains(&v);
    let mut levels: Vec<i64> = column.iter().map(|v| v.a).collect();
    levels.dedup();
    for l in levels {
        let plus = has(EpsInt::new(l, 1));
        let minus = has(EpsInt::new(l, -1));
        if plus && !minus {
            c.lower.push(Corner::new(p.n, l));
        } else if minus && !plus {
            c.upper.push(Corner::new(p.n, l));
        }
    }
    c.upper.sort();
    c.lower.sort();
    c
}

impl LatticePath for PathB {
    fn family(&self) -> Family {
        Family::B(self.n)
    }

    fn corners(&self) -> Corners {
        corners_b(self)
    }

    fn strictly_above(&self, other: &Self) -> Result<bool> {
        if !self.same_shape(other) {
            return Err(Error::IncompatiblePaths);
        }
        let n = self.n;
        let branches_below = (0..n).all(|j| self.ys[j] < other.ys[j] && self.zs[j] < other.zs[j]);
        Ok(branches_below && self.ys[n] < other.zs[n])
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn path_counts_are_binomial() {
        for m in 2..=8 {
            for i in 0..=m {
                let ps = enum_paths_a(m, i, 3).unwrap();
                assert_eq!(ps.len() as u64, binom(m as u64, i as u64));
                assert!(ps.windows(2).all(|w| w[0].ys < w[1].ys));
            }
        }
        assert!(enum_paths_a(4, 5, 0).is_err());
    }

    #[test]
    fn corners_a_examples() {
        let k = 7;
        let p = PathA::from_ys(vec![k + 1, k, k + 1, k + 2, k + 3]).unwrap();
        assert_eq!((p.i(), p.k()), (1, k));
        let c = corners_a(&p);
        assert_eq!(c.upper, vec![Corner::new(1, k)]);
        assert!(c.lower.is_empty());

        let p = PathA::from_ys(vec![k + 1, k + 2, k + 1, k + 2, k + 3]).unwrap();
        let c = corners_a(&p);
        assert_eq!(c.upper, vec![Corner::new(2, k + 1)]);
        assert_eq!(c.lower, vec![Corner::new(1, k + 2)]);
        let mut expected = YMonomial::var(Var::plus(1, k + 2), -1);
        expected.mul_var(Var::plus(2, k + 1), 1);
        assert_eq!(monomial_of_path(&p), expected);

        let flat = &enum_paths_a(4, 0, k).unwrap()[0];
        assert_eq!(corners_a(flat), Corners::default());
        assert!(monomial_of_path(flat).is_one());
        assert!(weight_of_path(flat).is_zero());
    }

    #[test]
    fn half_character() {
        assert_eq!(half_char_at_n(&PathA::from_ys(vec![0, 1, 2]).unwrap()), -1);
        assert_eq!(half_char_at_n(&PathA::from_ys(vec![0, 1, 0]).unwrap()), 1);
    }

    #[test]
    fn b_parity_is_enforced() {
        assert!(enum_paths_b(2, 1, 1).is_err());
        assert!(enum_paths_b(2, 1, 0).is_ok());
        assert!(enum_paths_b(2, 3, 0).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(3, 3, 5).unwrap(), (5, 5));
        assert_eq!(tau(3, 1, 2).unwrap(), (2, 2));
        assert_eq!(tau(3, 1, 0).unwrap(), (8, 0));
        assert!(tau(3, 1, 1).is_err());
        assert!(tau(3, 3, 4).is_err());
        assert!(tau_inv(3, 3, 0).is_err());
    }
}
