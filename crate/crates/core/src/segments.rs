//! Multisegments of type `A_{n-1}`: the characters `W(l, r)`, the
//! determinant formula, the type A identity, and the NOP sets `A` and `B`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{char_add, char_mul, Character, Family};
use crate::limits::Limits;
use crate::paths::{half_char_at_n, paths_between, weight_of_path, PathA};
use crate::snakes::{enum_nop_tuples, CharCache, SnakeA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub l: i64,
    pub r: i64,
}

impl Segment {
    pub fn new(l: i64, r: i64) -> Self {
        Segment { l, r }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiSegment {
    pub n: usize,
    pub segs: Vec<Segment>,
}

impl MultiSegment {
    pub fn new(n: usize, segs: Vec<Segment>) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n.saturating_sub(1)));
        }
        if segs.is_empty() {
            return Err(Error::EmptySnake);
        }
        Ok(MultiSegment { n, segs })
    }

    pub fn from_pairs(n: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        MultiSegment::new(n, pairs.iter().map(|&(l, r)| Segment::new(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Increasing ends and every length in `0..=n`.
    pub fn is_snake(&self) -> bool {
        let n = self.n as i64;
        self.segs
            .windows(2)
            .all(|w| w[0].l < w[1].l && w[0].r < w[1].r)
            && self.segs.iter().all(|s| s.r - s.l >= 0 && s.r - s.l <= n)
    }

    /// The type `A_{n-1}` snake with points `(r_t - l_t, r_t + l_t)`.
    pub fn to_snake(&self) -> Result<SnakeA> {
        if !self.is_snake() {
            return Err(Error::InvalidSpec(format!(
                "multisegment {:?} is not a snake",
                self.segs
            )));
        }
        SnakeA::new(
            self.n,
            self.segs
                .iter()
                .map(|s| ((s.r - s.l) as usize, s.r + s.l))
                .collect(),
        )
    }

    fn family(&self) -> Family {
        Family::A(self.n - 1)
    }
}

/// `W(l, r)`: the character of the segment module, or zero when `r - l ∉ [0, n]`.
pub fn seg_char(n: usize, l: i64, r: i64) -> Result<Character> {
    let ms = MultiSegment::new(n, vec![Segment::new(l, r)])?;
    if !ms.is_snake() {
        return Ok(Character::zero(ms.family()));
    }
    crate::snakes::char_snake(&ms.to_snake()?, &Limits::unbounded())
}

/// `W(l, r) == W(l + m, r + m)`.
pub fn seg_char_shift_check(n: usize, l: i64, r: i64, m: i64) -> Result<bool> {
    Ok(seg_char(n, l, r)? == seg_char(n, l + m, r + m)?)
}

/// Visits every permutation of `0..t` with its sign.
fn for_each_permutation<F: FnMut(&[usize], i64)>(t: usize, mut f: F) {
    fn rec<F: FnMut(&[usize], i64)>(
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sign: i64,
        f: &mut F,
    ) {
        let t = used.len();
        if perm.len() == t {
            f(perm, sign);
            return;
        }
        for v in 0..t {
            if used[v] {
                continue;
            }
            // inversions added by placing v after the already placed values
            let inv = perm.iter().filter(|&&p| p > v).count();
            let s = if inv % 2 == 0 { sign } else { -sign };
            used[v] = true;
            perm.push(v);
            rec(perm, used, s, f);
            perm.pop();
            used[v] = false;
        }
    }
    rec(&mut Vec::with_capacity(t), &mut vec![false; t], 1, &mut f);
}

/// `det(W(l_s, r_t))` expanded as a Leibniz sum.
pub fn det_char(ms: &MultiSegment) -> Result<Character> {
    let t = ms.len();
    let family = ms.family();
    let mut cache: BTreeMap<i64, Character> = BTreeMap::new();
    let mut matrix = Vec::with_capacity(t);
    for a in &ms.segs {
        let mut row = Vec::with_capacity(t);
        for b in &ms.segs {
            let d = b.r - a.l;
            let c = match cache.get(&d) {
                Some(c) => c.clone(),
                None => {
                    let c = seg_char(ms.n, 0, d)?;
                    cache.insert(d, c.clone());
                    c
                }
            };
            row.push(c);
        }
        matrix.push(row);
    }
    let mut total = Character::zero(family);
    let mut failure = None;
    for_each_permutation(t, |perm, sign| {
        if failure.is_some()
            || perm
                .iter()
                .enumerate()
                .any(|(s, &p)| matrix[s][p].is_empty())
        {
            return;
        }
        let mut prod = Character::one(family);
        for (s, &p) in perm.iter().enumerate() {
            match char_mul(&prod, &matrix[s][p]) {
                Ok(c) => prod = c,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        let signed = if sign < 0 { prod.negated() } else { prod };
        match char_add(&total, &signed) {
            Ok(c) => total = c,
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// All vectors of `t` nonnegative integers summing to `total`, with `bound(s)`
/// as an inclusive upper limit for entry `s`, in lexicographic order.
fn compositions(t: usize, total: i64, bound: &dyn Fn(usize) -> i64) -> Vec<Vec<i64>> {
    fn rec(
        s: usize,
        left: i64,
        cur: &mut Vec<i64>,
        t: usize,
        bound: &dyn Fn(usize) -> i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if s == t {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left.min(bound(s)) {
            cur.push(v);
            rec(s + 1, left - v, cur, t, bound, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, total, &mut Vec::with_capacity(t), t, bound, &mut out);
    out
}

/// Both sides of the type A identity for `M`, each summand computed by path enumeration.
pub fn identity_sides(
    ms: &MultiSegment,
    big_m: u64,
    limits: &Limits,
) -> Result<(Character, Character)> {
    identity_sides_cached(ms, big_m, limits, &mut CharCache::new())
}

pub fn identity_sides_cached(
    ms: &MultiSegment,
    big_m: u64,
    limits: &Limits,
    cache: &mut CharCache,
) -> Result<(Character, Character)> {
    if !ms.is_snake() {
        return Err(Error::InvalidSpec(format!(
            "multisegment {:?} is not a snake",
            ms.segs
        )));
    }
    let t = ms.len();
    let segs = &ms.segs;
    let total = big_m as i64;
    let mut lhs = Character::zero(ms.family());
    let mut rhs = Character::zero(ms.family());

    // l'_t ranges over [l_t, l_{t+1}[
    let lbound = |s: usize| {
        if s + 1 < t {
            segs[s + 1].l - segs[s].l - 1
        } else {
            i64::MAX
        }
    };
    for a in compositions(t, total, &lbound) {
        let shifted = segs
            .iter()
            .zip(&a)
            .map(|(s, d)| Segment::new(s.l + d, s.r))
            .collect();
        let cand = MultiSegment {
            n: ms.n,
            segs: shifted,
        };
        if cand.is_snake() {
            lhs.add_assign_char(&cache.char_snake(&cand.to_snake()?, limits)?)?;
        }
    }
    // r'_t ranges over ]r_{t-1}, r_t]
    let rbound = |s: usize| {
        if s > 0 {
            segs[s].r - segs[s - 1].r - 1
        } else {
            i64::MAX
        }
    };
    for a in compositions(t, total, &rbound) {
        let shifted = segs
            .iter()
            .zip(&a)
            .map(|(s, d)| Segment::new(s.l, s.r - d))
            .collect();
        let cand = MultiSegment {
            n: ms.n,
            segs: shifted,
        };
        if cand.is_snake() {
            rhs.add_assign_char(&cache.char_snake(&cand.to_snake()?, limits)?)?;
        }
    }
    Ok((lhs, rhs))
}

/// The left-hand summands of the identity whose multisegment is not a snake,
/// paired with their determinant characters.
pub fn non_snake_summands(ms: &MultiSegment, big_m: u64) -> Result<Vec<(MultiSegment, Character)>> {
    let t = ms.len();
    let segs = &ms.segs;
    let lbound = |s: usize| {
        if s + 1 < t {
            segs[s + 1].l - segs[s].l - 1
        } else {
            i64::MAX
        }
    };
    let mut out = Vec::new();
    for a in compositions(t, big_m as i64, &lbound) {
        let shifted = segs
            .iter()
            .zip(&a)
            .map(|(s, d)| Segment::new(s.l + d, s.r))
            .collect();
        let cand = MultiSegment {
            n: ms.n,
            segs: shifted,
        };
        if !cand.is_snake() {
            let d = det_char(&cand)?;
            out.push((cand, d));
        }
    }
    Ok(out)
}

/// Which endpoint of each path is allowed to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Left endpoints move inside `]x0[t-1], x0[t]]`, right endpoints pinned.
    A,
    /// Left endpoints pinned, right endpoints move inside `[xn[t], xn[t+1][`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NopSetSpec {
    pub n: usize,
    pub x0: Vec<i64>,
    pub xn: Vec<i64>,
    pub m: u64,
    pub side: Side,
}

impl NopSetSpec {
    pub fn new(n: usize, x0: Vec<i64>, xn: Vec<i64>, m: u64, side: Side) -> Result<Self> {
        let spec = NopSetSpec { n, x0, xn, m, side };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(format!("{msg}: {self:?}")));
        if self.n < 2 {
            return bad("n must be at least 2");
        }
        if self.x0.is_empty() || self.x0.len() != self.xn.len() {
            return bad("x0 and xn must be nonempty and of equal length");
        }
        if self.x0.windows(2).any(|w| w[0] >= w[1]) || self.xn.windows(2).any(|w| w[0] >= w[1]) {
            return bad("anchors must be strictly increasing");
        }
        let n = self.n as i64;
        if self.x0.iter().zip(&self.xn).any(|(a, b)| (b - a).abs() > n) {
            return bad("each |xn[t] - x0[t]| must be at most n");
        }
        if self
            .x0
            .iter()
            .zip(&self.xn)
            .any(|(a, b)| (b - a - n).rem_euclid(2) != 0)
        {
            return bad("each xn[t] - x0[t] must have the parity of n");
        }
        Ok(())
    }

    pub fn with_side(&self, side: Side) -> NopSetSpec {
        NopSetSpec {
            side,
            ..self.clone()
        }
    }

    /// Anchors coming from the snake `[l, r]`: `x0 = 2r`, `xn = n + 2l`.
    pub fn from_multisegment(ms: &MultiSegment, m: u64, side: Side) -> Result<Self> {
        let n = ms.n as i64;
        NopSetSpec::new(
            ms.n,
            ms.segs.iter().map(|s| 2 * s.r).collect(),
            ms.segs.iter().map(|s| n + 2 * s.l).collect(),
            m,
            side,
        )
    }

    /// Candidate endpoint vectors `(starts, ends)` in lexicographic order of shifts.
    fn endpoint_choices(&self) -> Vec<(Vec<i64>, Vec<i64>)> {
        let t = self.x0.len();
        let n = self.n as i64;
        let total = 2 * self.m as i64;
        let mut out = Vec::new();
        match self.side {
            Side::A => {
                let bound = |s: usize| {
                    if s > 0 {
                        self.x0[s] - self.x0[s - 1] - 1
                    } else {
                        i64::MAX
                    }
                };
                for d in compositions(t, total, &bound) {
                    let starts: Vec<i64> = self.x0.iter().zip(&d).map(|(x, d)| x - d).collect();
                    if starts.iter().zip(&self.xn).all(|(a, b)| (b - a).abs() <= n) {
                        out.push((starts, self.xn.clone()));
                    }
                }
            }
            Side::B => {
                let bound = |s: usize| {
                    if s + 1 < t {
                        self.xn[s + 1] - self.xn[s] - 1
                    } else {
                        i64::MAX
                    }
                };
                for d in compositions(t, total, &bound) {
                    let ends: Vec<i64> = self.xn.iter().zip(&d).map(|(x, d)| x + d).collect();
                    if self.x0.iter().zip(&ends).all(|(a, b)| (b - a).abs() <= n) {
                        out.push((self.x0.clone(), ends));
                    }
                }
            }
        }
        out
    }
}

/// All NOP tuples of the set described by `spec`.
pub fn build_nop_set(spec: &NopSetSpec, limits: &Limits) -> Result<Vec<Vec<PathA>>> {
    spec.validate()?;
    let mut out: Vec<Vec<PathA>> = Vec::new();
    for (starts, ends) in spec.endpoint_choices() {
        let sets: Vec<Vec<PathA>> = starts
            .iter()
            .zip(&ends)
            .map(|(&a, &b)| {
                paths_between(spec.n, a, b)
                    .into_iter()
                    .map(|ys| PathA::from_ys(ys).expect("enumerated paths are valid"))
                    .collect()
            })
            .collect();
        if sets.iter().any(Vec::is_empty) {
            continue;
        }
        let remaining = Limits::new(limits.max_tuples.saturating_sub(out.len() as u64));
        for tuple in enum_nop_tuples(&sets, &remaining)? {
            out.push(
                tuple
                    .iter()
                    .enumerate()
                    .map(|(t, &idx)| sets[t][idx].clone())
                    .collect(),
            );
        }
    }
    Ok(out)
}

/// Multiset of (weight, half-character) over the tuples of a NOP set.
pub type AbStatistics = BTreeMap<(Vec<i64>, i64), u64>;

pub fn tuple_statistics(n: usize, tuples: &[Vec<PathA>]) -> AbStatistics {
    let mut stats = AbStatistics::new();
    for tuple in tuples {
        let mut w = vec![0i64; n - 1];
        let mut half = 0;
        for p in tuple {
            for (c, x) in w.iter_mut().zip(weight_of_path(p).coeffs()) {
                *c += x;
            }
            half += half_char_at_n(p);
        }
        *stats.entry((w, half)).or_insert(0) += 1;
    }
    stats
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbReport {
    pub a_count: usize,
    pub b_count: usize,
    pub a_stats: AbStatistics,
    pub b_stats: AbStatistics,
}

impl AbReport {
    pub fn equal(&self) -> bool {
        self.a_stats == self.b_stats
    }
}

/// Builds both sets for the anchors of `spec` (its `side` is ignored).
pub fn ab_statistics(spec: &NopSetSpec, limits: &Limits) -> Result<AbReport> {
    let a = build_nop_set(&spec.with_side(Side::A), limits)?;
    let b = build_nop_set(&spec.with_side(Side::B), limits)?;
    Ok(AbReport {
        a_count: a.len(),
        b_count: b.len(),
        a_stats: tuple_statistics(spec.n, &a),
        b_stats: tuple_statistics(spec.n, &b),
    })
}

pub fn ab_statistics_equal(spec: &NopSetSpec, limits: &Limits) -> Result<bool> {
    Ok(ab_statistics(spec, limits)?.equal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakes::char_snake;
    use num_bigint::BigInt;

    #[test]
    fn w_examples() {
        let w = seg_char(3, 4, 4).unwrap();
        assert_eq!(w, Character::one(Family::A(2)));
        assert!(seg_char(3, 0, 4).unwrap().is_empty());
        assert!(seg_char(3, 2, 1).unwrap().is_empty());
        let w = seg_char(3, 0, 1).unwrap();
        assert_eq!(w.len(), 3);
        for key in [[1, 0], [-1, 1], [0, -1]] {
            assert_eq!(w.multiplicity(&key), BigInt::from(1));
        }
        assert!(seg_char_shift_check(3, 0, 1, 5).unwrap());
        assert!(seg_char_shift_check(3, 0, 4, 1).unwrap());
    }

    #[test]
    fn determinant_examples() {
        let ms = MultiSegment::from_pairs(3, &[(0, 1)]).unwrap();
        assert_eq!(det_char(&ms).unwrap(), seg_char(3, 0, 1).unwrap());
        let ms = MultiSegment::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(det_char(&ms).unwrap().is_empty());
        let ms = MultiSegment::from_pairs(3, &[(0, 1), (1, 3)]).unwrap();
        let lim = Limits::default();
        assert_eq!(
            det_char(&ms).unwrap(),
            char_snake(&ms.to_snake().unwrap(), &lim).unwrap()
        );
    }

    #[test]
    fn permutation_signs() {
        let mut total = 0;
        let mut count = 0;
        for_each_permutation(4, |_, s| {
            total += s;
            count += 1;
        });
        assert_eq!((count, total), (24, 0));
        for_each_permutation(3, |p, s| {
            if p == [1, 0, 2] || p == [0, 2, 1] || p == [2, 1, 0] {
                assert_eq!(s, -1);
            } else {
                assert_eq!(s, 1);
            }
        });
    }

    #[test]
    fn identity_examples() {
        let lim = Limits::default();
        let ms = MultiSegment::from_pairs(3, &[(0, 1)]).unwrap();
        let (l, r) = identity_sides(&ms, 1, &lim).unwrap();
        assert_eq!(l, Character::one(Family::A(2)));
        assert_eq!(r, Character::one(Family::A(2)));

        let ms = MultiSegment::from_pairs(3, &[(0, 1), (2, 3)]).unwrap();
        let (l, r) = identity_sides(&ms, 0, &lim).unwrap();
        let direct = char_snake(&ms.to_snake().unwrap(), &lim).unwrap();
        assert_eq!((&l, &r), (&direct, &direct));
        let (l, r) = identity_sides(&ms, 1, &lim).unwrap();
        assert_eq!(l, r);
        assert!(!l.is_empty());
    }

    #[test]
    fn zero_shift_sets_coincide() {
        let spec = NopSetSpec::new(4, vec![0, 4], vec![2, 6], 0, Side::A).unwrap();
        let lim = Limits::default();
        let a = build_nop_set(&spec, &lim).unwrap();
        let b = build_nop_set(&spec.with_side(Side::B), &lim).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn spec_validation() {
        assert!(NopSetSpec::new(3, vec![0, 0], vec![1, 2], 0, Side::A).is_err());
        assert!(NopSetSpec::new(3, vec![0], vec![5], 0, Side::A).is_err());
        assert!(NopSetSpec::new(3, vec![0], vec![1, 2], 0, Side::A).is_err());
    }
}
