//! Snakes, non-overlapping path tuples, and the q-characters and usual
//! characters they produce.

mod nop;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

pub use nop::{count_nop_tuples, enum_nop_tuples, for_each_nop_tuple};

use crate::error::{Error, Result};
use crate::lattice::{fold_char, Character, Family};
use crate::limits::Limits;
pub use crate::monomial::{QCharacter, Sign, Var, YMonomial, ZMonomial};
use crate::paths::{
    enum_paths_a, enum_paths_b, in_x_b, monomial_of_path, weight_of_path, LatticePath, PathA, PathB,
};

/// Data shared by the snake types.
pub trait Snake {
    type Path: LatticePath;

    fn family(&self) -> Family;

    fn points(&self) -> &[(usize, i64)];

    /// One path set per point, in point order.
    fn path_sets(&self) -> Result<Vec<Vec<Self::Path>>>;

    /// The highest monomial of the snake module.
    fn highest_monomial(&self) -> YMonomial;
}

/// A type `A_{m-1}` snake.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SnakeA {
    m: usize,
    points: Vec<(usize, i64)>,
}

impl SnakeA {
    pub fn new(m: usize, points: Vec<(usize, i64)>) -> Result<Self> {
        if m < 2 {
            return Err(Error::RankTooSmall(m.saturating_sub(1)));
        }
        let (i1, k1) = *points.first().ok_or(Error::EmptySnake)?;
        for &(i, k) in &points {
            if i > m {
                return Err(Error::IndexOutOfRange {
                    index: i as i64,
                    min: 0,
                    max: m as i64,
                });
            }
            if (k - k1 - i as i64 + i1 as i64).rem_euclid(2) != 0 {
                return Err(Error::Parity {
                    i: i as i64,
                    k,
                    rule: "k - i must have one parity along the snake",
                });
            }
        }
        for w in points.windows(2) {
            let ((i0, k0), (i1, k1)) = (w[0], w[1]);
            if k1 - k0 < (i1 as i64 - i0 as i64).abs() + 2 {
                return Err(Error::NotSnakePosition {
                    i0: i0 as i64,
                    k0,
                    i1: i1 as i64,
                    k1,
                });
            }
        }
        Ok(SnakeA { m, points })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The same snake translated so that its first point has `k = 0`.
    pub fn normalized(&self) -> SnakeA {
        let k0 = self.points[0].1;
        SnakeA {
            m: self.m,
            points: self.points.iter().map(|&(i, k)| (i, k - k0)).collect(),
        }
    }
}

impl Snake for SnakeA {
    type Path = PathA;

    fn family(&self) -> Family {
        Family::A(self.m - 1)
    }

    fn points(&self) -> &[(usize, i64)] {
        &self.points
    }

    fn path_sets(&self) -> Result<Vec<Vec<PathA>>> {
        self.points
            .iter()
            .map(|&(i, k)| enum_paths_a(self.m, i, k))
            .collect()
    }

    fn highest_monomial(&self) -> YMonomial {
        let mut mono = YMonomial::one();
        for &(i, k) in &self.points {
            if i > 0 && i < self.m {
                mono.mul_var(Var::plus(i, k), 1);
            }
        }
        mono
    }
}

/// A shortened snake of type `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SnakeB {
    n: usize,
    points: Vec<(usize, i64)>,
}

impl SnakeB {
    pub fn new(n: usize, points: Vec<(usize, i64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if points.is_empty() {
            return Err(Error::EmptySnake);
        }
        for &(i, k) in &points {
            crate::paths::check_x_b(n, i, k)?;
        }
        for w in points.windows(2) {
            let ((i0, k0), (i1, k1)) = (w[0], w[1]);
            if k1 - k0 < 2 * (i1 as i64 - i0 as i64).abs() + 4 {
                return Err(Error::NotSnakePosition {
                    i0: i0 as i64,
                    k0,
                    i1: i1 as i64,
                    k1,
                });
            }
        }
        Ok(SnakeB { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The type `A_{2n-1}` snake `(i_t, k_t / 2)`.
    pub fn halved(&self) -> SnakeA {
        let points = self.points.iter().map(|&(i, k)| (i, k / 2)).collect();
        SnakeA::new(2 * self.n, points).expect("halving a B snake yields an A snake")
    }

    /// Kirillov-Reshetikhin snake `(i, k0), (i, k0+4), …` with `t` points.
    pub fn kirillov_reshetikhin(n: usize, i: usize, t: usize, k0: i64) -> Result<Self> {
        SnakeB::new(n, (0..t).map(|s| (i, k0 + 4 * s as i64)).collect())
    }

    /// Smallest nonnegative `k` with `(i, k)` in the index set.
    pub fn anchor(n: usize, i: usize) -> i64 {
        (0..4).find(|&k| in_x_b(n, i, k)).unwrap_or(0)
    }
}

impl Snake for SnakeB {
    type Path = PathB;

    fn family(&self) -> Family {
        Family::B(self.n)
    }

    fn points(&self) -> &[(usize, i64)] {
        &self.points
    }

    fn path_sets(&self) -> Result<Vec<Vec<PathB>>> {
        self.points
            .iter()
            .map(|&(i, k)| enum_paths_b(self.n, i, k))
            .collect()
    }

    fn highest_monomial(&self) -> YMonomial {
        let mut mono = YMonomial::one();
        for &(i, k) in &self.points {
            if i == self.n {
                mono.mul_var(Var::plus(i, k - 1), 1);
                mono.mul_var(Var::plus(i, k + 1), 1);
            } else {
                mono.mul_var(Var::plus(i, k), 1);
            }
        }
        mono
    }
}

pub fn snake_to_monomial<S: Snake>(s: &S) -> YMonomial {
    s.highest_monomial()
}

/// The q-character as the multiset of products of path monomials over NOP tuples.
pub fn qchar_snake<S: Snake>(s: &S, limits: &Limits) -> Result<QCharacter<YMonomial>> {
    let sets = s.path_sets()?;
    let monos: Vec<Vec<YMonomial>> = sets
        .iter()
        .map(|set| set.iter().map(monomial_of_path).collect())
        .collect();
    let mut out = QCharacter::new();
    for_each_nop_tuple(&sets, limits, |tuple| {
        let mut m = YMonomial::one();
        for (t, &idx) in tuple.iter().enumerate() {
            m = m.mul(&monos[t][idx]);
        }
        out.insert(m, 1);
    })?;
    Ok(out)
}

/// The usual character: one term `Σ_t m'(p_t)` per NOP tuple.
pub fn char_snake<S: Snake>(s: &S, limits: &Limits) -> Result<Character> {
    let sets = s.path_sets()?;
    char_of_sets(s.family(), &sets, limits)
}

pub(crate) fn char_of_sets<P: LatticePath>(
    family: Family,
    sets: &[Vec<P>],
    limits: &Limits,
) -> Result<Character> {
    let weights: Vec<Vec<Vec<i64>>> = sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|p| weight_of_path(p).into_coeffs())
                .collect()
        })
        .collect();
    let rank = family.rank();
    let mut counts: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut key = alloc::vec![0i64; rank];
    for_each_nop_tuple(sets, limits, |tuple| {
        key.iter_mut().for_each(|c| *c = 0);
        for (t, &idx) in tuple.iter().enumerate() {
            for (c, w) in key.iter_mut().zip(&weights[t][idx]) {
                *c += w;
            }
        }
        *counts.entry(key.clone()).or_insert(0) += 1;
    })?;
    let mut out = Character::zero(family);
    for (k, c) in counts {
        out.add_term(k, BigInt::from(c));
    }
    Ok(out)
}

/// Memoized characters of type A snakes, keyed by the translated snake.
#[derive(Debug, Clone, Default)]
pub struct CharCache {
    map: BTreeMap<SnakeA, Character>,
}

impl CharCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn char_snake(&mut self, s: &SnakeA, limits: &Limits) -> Result<Character> {
        let key = s.normalized();
        if let Some(c) = self.map.get(&key) {
            return Ok(c.clone());
        }
        let c = char_snake(&key, limits)?;
        self.map.insert(key, c.clone());
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// The folding `π`: `Y_{i,a} ↦ Z_{ī,a}` for `i ≤ n`, `Y_{i,a} ↦ Z_{2n-i,-a}` for `i > n`.
pub fn fold_monomial(m: &YMonomial, n: usize) -> Result<ZMonomial> {
    let mut out = ZMonomial::one(n);
    for (v, &e) in m.iter() {
        if v.index == 0 || v.index >= 2 * n {
            return Err(Error::IndexOutOfRange {
                index: v.index as i64,
                min: 1,
                max: 2 * n as i64 - 1,
            });
        }
        let image = if v.index <= n {
            *v
        } else {
            Var::new(2 * n - v.index, v.sign.flipped(), v.power)
        };
        out.mul_var(image, e)?;
    }
    Ok(out)
}

fn check_twisted(s: &SnakeA) -> Result<usize> {
    if s.m % 2 != 0 {
        return Err(Error::EvenRank(s.m - 1));
    }
    let n = s.m / 2;
    if let Some(&(i, _)) = s.points.iter().find(|&&(i, _)| i > n) {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: n as i64,
        });
    }
    Ok(n)
}

/// The twisted q-character of the snake module `L(∏ Z_{ī_t,q^{k_t}})`.
pub fn twisted_qchar_snake(s: &SnakeA, limits: &Limits) -> Result<QCharacter<ZMonomial>> {
    let n = check_twisted(s)?;
    qchar_snake(s, limits)?.try_map(|m| fold_monomial(m, n))
}

/// The twisted usual character, computed as `ϖ(χ(L))`.
pub fn twisted_char_snake(s: &SnakeA, limits: &Limits) -> Result<Character> {
    check_twisted(s)?;
    fold_char(&char_snake(s, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    #[test]
    fn highest_monomials() {
        let s = SnakeB::new(2, vec![(1, 4)]).unwrap();
        assert_eq!(snake_to_monomial(&s), YMonomial::var(Var::plus(1, 4), 1));
        let s = SnakeB::new(2, vec![(2, 6)]).unwrap();
        let mut m = YMonomial::var(Var::plus(2, 5), 1);
        m.mul_var(Var::plus(2, 7), 1);
        assert_eq!(snake_to_monomial(&s), m);
        let s = SnakeA::new(4, vec![(1, 0), (2, 3)]).unwrap();
        let mut m = YMonomial::var(Var::plus(1, 0), 1);
        m.mul_var(Var::plus(2, 3), 1);
        assert_eq!(snake_to_monomial(&s), m);
    }

    #[test]
    fn snake_validation() {
        assert!(SnakeA::new(4, vec![(1, 0), (1, 1)]).is_err());
        assert!(SnakeA::new(4, vec![(1, 0), (2, 2)]).is_err());
        assert!(SnakeA::new(4, vec![(1, 0), (2, 3)]).is_ok());
        assert!(SnakeB::new(2, vec![(1, 4), (1, 6)]).is_err());
        assert!(SnakeB::new(2, vec![(2, 4)]).is_err());
        assert!(SnakeB::new(3, vec![(1, 6), (2, 14)]).is_err());
        assert!(SnakeB::new(3, vec![(1, 6), (2, 16)]).is_ok());
        assert!(SnakeB::new(2, vec![]).is_err());
    }

    #[test]
    fn a1_fundamental() {
        let s = SnakeA::new(2, vec![(1, 5)]).unwrap();
        let q = qchar_snake(&s, &Limits::default()).unwrap();
        let mut expected = QCharacter::new();
        expected.insert(YMonomial::var(Var::plus(1, 5), 1), 1);
        expected.insert(YMonomial::var(Var::plus(1, 7), -1), 1);
        assert_eq!(q, expected);
        let c = char_snake(&s, &Limits::default()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.multiplicity(&[1]), BigInt::one());
        assert_eq!(c.multiplicity(&[-1]), BigInt::one());
    }

    #[test]
    fn folding_examples() {
        let m = YMonomial::var(Var::plus(3, 2), 1);
        assert_eq!(
            fold_monomial(&m, 2).unwrap(),
            ZMonomial::var(2, Var::new(1, Sign::Minus, 2), 1).unwrap()
        );
        let m = YMonomial::var(Var::new(2, Sign::Minus, 3), 1);
        assert_eq!(
            fold_monomial(&m, 2).unwrap(),
            ZMonomial::var(2, Var::plus(2, 3), 1).unwrap()
        );
        assert!(fold_monomial(&YMonomial::one(), 2).unwrap().is_one());
        assert!(fold_monomial(&YMonomial::var(Var::plus(4, 0), 1), 2).is_err());
    }

    #[test]
    fn twisted_fundamental() {
        let s = SnakeA::new(4, vec![(1, 3)]).unwrap();
        let q = twisted_qchar_snake(&s, &Limits::default()).unwrap();
        assert_eq!(q.mass(), 4);
        assert_eq!(
            q.multiplicity(&ZMonomial::var(2, Var::plus(1, 3), 1).unwrap()),
            1
        );
        assert!(
            twisted_qchar_snake(&SnakeA::new(4, vec![(3, 0)]).unwrap(), &Limits::default())
                .is_err()
        );
    }
}
