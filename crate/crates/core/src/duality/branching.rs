use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{
    char_sub, fold_char, fold_weight, pi_char, pi_weight, Character, Family, Weight,
};
use crate::limits::Limits;
use crate::monomial::{Var, ZMonomial};
use crate::paths::{paths_between, strictly_above, weight_of_path, PathA, PathB};
use crate::segments::{build_nop_set, NopSetSpec, Side};
use crate::snakes::{
    char_of_sets, char_snake, for_each_nop_tuple, CharCache, Snake, SnakeA, SnakeB,
};

use super::{gap_tuple, map_r};

/// Exclusive upper bounds `u_t` of the shift windows `0 ≤ s_t < u_t`.
fn windows(s: &SnakeB) -> Vec<u64> {
    let pts = s.points();
    let mut out = Vec::with_capacity(pts.len());
    for (t, &(i, k)) in pts.iter().enumerate() {
        let cap = i as i64 + 1;
        let u = if t == 0 {
            cap
        } else {
            let (ip, kp) = pts[t - 1];
            let num = 2 * i as i64 + k - 2 * ip as i64 - kp;
            debug_assert_eq!(num % 4, 0);
            (num / 4).min(cap)
        };
        out.push(u.max(0) as u64);
    }
    out
}

/// All shift tuples of the branching rule, in lexicographic order.
pub fn branch_tuples(s: &SnakeB) -> Vec<Vec<u64>> {
    let bounds = windows(s);
    if bounds.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; bounds.len()];
    loop {
        out.push(cur.clone());
        let mut pos = bounds.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < bounds[pos] {
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// Points `(i_t - s_t, k_t/2 - s_t)` with index-0 points removed.
fn shifted_points(s: &SnakeB, shifts: &[u64]) -> Vec<(usize, i64)> {
    s.points()
        .iter()
        .zip(shifts)
        .filter_map(|(&(i, k), &d)| {
            let j = i - d as usize;
            (j > 0).then_some((j, k / 2 - d as i64))
        })
        .collect()
}

/// The type `A_{2n-1}` snake of each branch tuple, `None` when every point drops out.
pub fn branch_snakes(s: &SnakeB) -> Result<Vec<Option<SnakeA>>> {
    branch_tuples(s)
        .iter()
        .map(|shifts| {
            let pts = shifted_points(s, shifts);
            if pts.is_empty() {
                Ok(None)
            } else {
                SnakeA::new(2 * s.n(), pts).map(Some)
            }
        })
        .collect()
}

/// `∏ Z_{i_t - s_t, q^{k_t/2 - s_t}}` for each branch tuple, with `Z_0` read as 1.
pub fn branch_monomials(s: &SnakeB) -> Vec<ZMonomial> {
    branch_tuples(s)
        .iter()
        .map(|shifts| {
            let mut m = ZMonomial::one(s.n());
            for (j, k) in shifted_points(s, shifts) {
                m.mul_var(Var::plus(j, k), 1)
                    .expect("shifted indices lie in 1..=n");
            }
            m
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSummand {
    pub shifts: Vec<u64>,
    pub monomial: ZMonomial,
    pub mass: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingReport {
    /// `Π(χ(L(m)))`.
    pub lhs: Character,
    /// `Σ χ^σ(L(branch monomial))`.
    pub rhs: Character,
    pub summands: Vec<BranchSummand>,
}

impl BranchingReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn difference(&self) -> Character {
        char_sub(&self.lhs, &self.rhs).expect("both sides live in the twisted lattice")
    }
}

pub fn verify_branching(s: &SnakeB, limits: &Limits) -> Result<BranchingReport> {
    verify_branching_cached(s, limits, &mut CharCache::new())
}

/// As [`verify_branching`], reusing characters of translated snakes across calls.
pub fn verify_branching_cached(
    s: &SnakeB,
    limits: &Limits,
    cache: &mut CharCache,
) -> Result<BranchingReport> {
    let n = s.n();
    let lhs = pi_char(&char_snake(s, limits)?)?;
    let mut rhs = Character::zero(Family::Twisted(n));
    let mut summands = Vec::new();
    let monomials = branch_monomials(s);
    for ((shifts, snake), monomial) in branch_tuples(s)
        .into_iter()
        .zip(branch_snakes(s)?)
        .zip(monomials)
    {
        let c = match snake {
            Some(a) => fold_char(&cache.char_snake(&a, limits)?)?,
            None => Character::one(Family::Twisted(n)),
        };
        rhs.add_assign_char(&c)?;
        summands.push(BranchSummand {
            shifts,
            monomial,
            mass: c.mass(),
        });
    }
    Ok(BranchingReport { lhs, rhs, summands })
}

type WeightCounts = BTreeMap<Vec<i64>, u64>;

fn bump(map: &mut WeightCounts, w: Weight) {
    *map.entry(w.into_coeffs()).or_insert(0) += 1;
}

/// A fiber `(q̄, M)` on which the B-side and the A-side disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberMismatch {
    /// The right branches `R(p_t)`, as coordinate vectors on columns `n..=2n`.
    pub right: Vec<Vec<i64>>,
    pub gap: u64,
    pub b_count: u64,
    pub s_count: u64,
    /// Every glued tuple is non-overlapping.
    pub glued_nop: bool,
    pub weights_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub fibers: usize,
    pub b_tuples: u64,
    pub s_tuples: u64,
    pub mismatches: Vec<FiberMismatch>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.b_tuples == self.s_tuples
    }
}

/// Checks, fiber by fiber over `(R(p̄), gap)`, that the B-tuples match the glued
/// type `A_{2n-1}` tuples with the same weights under `Π` and `ϖ`.
pub fn verify_decomposition(s: &SnakeB, limits: &Limits) -> Result<DecompositionReport> {
    let n = s.n();
    let sets = s.path_sets()?;
    let mut fibers: BTreeMap<(Vec<Vec<i64>>, u64), WeightCounts> = BTreeMap::new();
    let mut failure = None;
    let b_tuples = for_each_nop_tuple(&sets, limits, |tuple| {
        let paths: Vec<&PathB> = tuple
            .iter()
            .enumerate()
            .map(|(t, &idx)| &sets[t][idx])
            .collect();
        let right: Vec<Vec<i64>> = paths.iter().map(|p| map_r(p).into_ys()).collect();
        let g = gap_tuple(paths.iter().copied());
        let mut w = Weight::zero(Family::B(n));
        for p in &paths {
            w = &w + &weight_of_path(*p);
        }
        match pi_weight(&w) {
            Ok(v) => bump(fibers.entry((right, g)).or_default(), v),
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }

    let x0: Vec<i64> = s.points().iter().map(|&(i, k)| i as i64 + k / 2).collect();
    let mut s_tuples = 0;
    let mut mismatches = Vec::new();
    let fiber_count = fibers.len();
    for ((right, g), b_weights) in fibers {
        let xn: Vec<i64> = right.iter().map(|r| r[0]).collect();
        let spec = NopSetSpec::new(n, x0.clone(), xn, g, Side::A)?;
        let left_tuples = build_nop_set(&spec, limits)?;
        let mut s_weights = WeightCounts::new();
        let mut glued_nop = true;
        for left in &left_tuples {
            let mut glued = Vec::with_capacity(left.len());
            for (l, r) in left.iter().zip(&right) {
                let mut ys = l.ys().to_vec();
                ys.extend_from_slice(&r[1..]);
                glued.push(PathA::from_ys(ys)?);
            }
            for w in glued.windows(2) {
                glued_nop &= strictly_above(&w[0], &w[1])?;
            }
            let mut w = Weight::zero(Family::A(2 * n - 1));
            for p in &glued {
                w = &w + &weight_of_path(p);
            }
            bump(&mut s_weights, fold_weight(&w)?);
        }
        let b_count: u64 = b_weights.values().sum();
        let s_count = left_tuples.len() as u64;
        s_tuples += s_count;
        let weights_equal = b_weights == s_weights;
        if !(glued_nop && weights_equal && b_count == s_count) {
            mismatches.push(FiberMismatch {
                right,
                gap: g,
                b_count,
                s_count,
                glued_nop,
                weights_equal,
            });
        }
    }
    Ok(DecompositionReport {
        fibers: fiber_count,
        b_tuples,
        s_tuples,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBijectionReport {
    /// `Π(χ(L(m)))` from type B tuples.
    pub lhs: Character,
    /// `ϖ` of the character summed over the type `A_{2n-1}` tuples with moving left endpoints.
    pub rhs: Character,
    pub b_tuples: BigInt,
    pub s_tuples: BigInt,
}

impl PathBijectionReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares `Π(χ(L(m)))` with `ϖ` of the character of all `A_{2n-1}` NOP tuples
/// whose `t`-th path ends at `2n - i_t + k_t/2` and starts in `]x_{t-1}, x_t]`,
/// where `x_t = i_t + k_t/2`.
pub fn verify_path_bijection(s: &SnakeB, limits: &Limits) -> Result<PathBijectionReport> {
    let n = s.n();
    let m = 2 * n;
    let lhs = pi_char(&char_snake(s, limits)?)?;
    let pts = s.points();
    let mut sets: Vec<Vec<PathA>> = Vec::with_capacity(pts.len());
    for (t, &(i, k)) in pts.iter().enumerate() {
        let x0 = i as i64 + k / 2;
        let end = (m - i) as i64 + k / 2;
        let low = if t == 0 {
            end - m as i64 - 1
        } else {
            let (ip, kp) = pts[t - 1];
            ip as i64 + kp / 2
        };
        let mut set = Vec::new();
        for y0 in (low + 1)..=x0 {
            for ys in paths_between(m, y0, end) {
                set.push(PathA::from_ys(ys)?);
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidSpec(alloc::format!(
                "no path ends at ({m}, {end})"
            )));
        }
        sets.push(set);
    }
    let rhs = fold_char(&char_of_sets(Family::A(m - 1), &sets, limits)?)?;
    Ok(PathBijectionReport {
        b_tuples: lhs.mass(),
        s_tuples: rhs.mass(),
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snake(n: usize, pts: &[(usize, i64)]) -> SnakeB {
        SnakeB::new(n, pts.to_vec()).unwrap()
    }

    #[test]
    fn windows_match_examples() {
        let s = snake(2, &[(1, 4), (1, 8)]);
        assert_eq!(branch_tuples(&s), vec![vec![0, 0], vec![1, 0]]);
        let m = branch_monomials(&s);
        let z = |i, k| ZMonomial::var(2, Var::plus(i, k), 1).unwrap();
        assert_eq!(m[0], z(1, 2).mul(&z(1, 4)).unwrap());
        assert_eq!(m[1], z(1, 4));
        assert_eq!(branch_tuples(&snake(3, &[(1, 6)])), vec![vec![0], vec![1]]);
    }

    #[test]
    fn zero_tuple_gives_dual_monomial() {
        for s in [snake(2, &[(1, 4), (2, 10)]), snake(3, &[(3, 2), (1, 10)])] {
            assert_eq!(branch_monomials(&s)[0], super::super::dual_monomial(&s));
        }
    }

    #[test]
    fn kr_tuples() {
        for n in 2..=3usize {
            for i in 1..=n {
                let k0 = SnakeB::anchor(n, i);
                for t in 1..=3 {
                    let s = SnakeB::kirillov_reshetikhin(n, i, t, k0).unwrap();
                    let expected: Vec<Vec<u64>> = (0..=i as u64)
                        .map(|d| {
                            let mut v = vec![0; t];
                            v[0] = d;
                            v
                        })
                        .collect();
                    assert_eq!(branch_tuples(&s), expected);
                }
            }
        }
    }

    #[test]
    fn branching_small_cases() {
        let lim = Limits::default();
        for s in [
            snake(2, &[(1, 4)]),
            snake(2, &[(2, 6)]),
            snake(2, &[(1, 4), (1, 8)]),
            snake(3, &[(1, 6), (2, 16)]),
        ] {
            let r = verify_branching(&s, &lim).unwrap();
            assert!(r.equal(), "{s:?}: {}", r.difference());
        }
    }

    #[test]
    fn decomposition_and_bijection_small_cases() {
        let lim = Limits::default();
        for s in [
            snake(2, &[(1, 4)]),
            snake(2, &[(2, 6)]),
            snake(2, &[(1, 0), (2, 6)]),
            snake(3, &[(2, 4)]),
        ] {
            let d = verify_decomposition(&s, &lim).unwrap();
            assert!(d.holds(), "{s:?}: {d:?}");
            let b = verify_path_bijection(&s, &lim).unwrap();
            assert!(b.equal(), "{s:?}");
        }
    }
}
