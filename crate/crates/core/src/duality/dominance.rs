use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Result;
use crate::lattice::{char_dominates, char_sub, pi_char, Character};
use crate::limits::Limits;
use crate::monomial::{QCharacter, Var, YMonomial, ZMonomial};
use crate::paths::{monomial_of_path, PathB};
use crate::snakes::{
    char_snake, enum_nop_tuples, fold_monomial, for_each_nop_tuple, twisted_char_snake,
    twisted_qchar_snake, Snake, SnakeB,
};

use super::{gap_tuple, map_f, map_f_inv};

/// `∏ Z_{ī_t, q^{k_t/2}}`.
pub fn dual_monomial(s: &SnakeB) -> ZMonomial {
    let mut m = ZMonomial::one(s.n());
    for &(i, k) in s.points() {
        m.mul_var(Var::plus(i, k / 2), 1)
            .expect("snake indices lie in 1..=n");
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    /// `Π(χ(L(m)))`.
    pub big: Character,
    /// `χ^σ(L(ᴸm))`.
    pub small: Character,
    pub dominates: bool,
    /// `big - small`.
    pub slack: Character,
    /// Number of NOP tuples of the snake with positive gap.
    pub gap_positive_tuples: u64,
}

/// Compares `Π(χ(L(m)))` with the twisted character of the dual snake module.
pub fn verify_dominance(s: &SnakeB, limits: &Limits) -> Result<DominanceReport> {
    let big = pi_char(&char_snake(s, limits)?)?;
    let small = twisted_char_snake(&s.halved(), limits)?;
    let dominates = char_dominates(&big, &small)?;
    let slack = char_sub(&big, &small)?;
    let sets = s.path_sets()?;
    let mut gap_positive_tuples = 0;
    for_each_nop_tuple(&sets, limits, |tuple| {
        if gap_tuple(tuple.iter().enumerate().map(|(t, &idx)| &sets[t][idx])) > 0 {
            gap_positive_tuples += 1;
        }
    })?;
    Ok(DominanceReport {
        big,
        small,
        dominates,
        slack,
        gap_positive_tuples,
    })
}

/// `Σ π(m(F⁻¹(p̄)))` over the gap-0 NOP tuples of `s`.
pub fn gap0_twisted_qchar(s: &SnakeB, limits: &Limits) -> Result<QCharacter<ZMonomial>> {
    let sets = s.path_sets()?;
    let n = s.n();
    let mut out = QCharacter::new();
    let mut failure = None;
    for_each_nop_tuple(&sets, limits, |tuple| {
        if failure.is_some() {
            return;
        }
        let paths: Vec<&PathB> = tuple
            .iter()
            .enumerate()
            .map(|(t, &idx)| &sets[t][idx])
            .collect();
        if gap_tuple(paths.iter().copied()) != 0 {
            return;
        }
        let mut m = YMonomial::one();
        for p in paths {
            match map_f_inv(p) {
                Ok(a) => m = m.mul(&monomial_of_path(&a)),
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        match fold_monomial(&m, n) {
            Ok(z) => out.insert(z, 1),
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap0Report {
    pub gap0_tuples: usize,
    pub a_tuples: usize,
    /// `F` maps every A-tuple of the halved snake to a NOP tuple.
    pub images_are_nop: bool,
    /// The image of `F` is exactly the set of gap-0 tuples.
    pub image_is_gap0: bool,
    /// `F⁻¹ ∘ F` and `F ∘ F⁻¹` are identities on the tuples involved.
    pub roundtrips: bool,
    /// The gap-0 q-character equals the twisted q-character of the halved snake.
    pub qchar_equal: bool,
}

impl Gap0Report {
    pub fn holds(&self) -> bool {
        self.images_are_nop && self.image_is_gap0 && self.roundtrips && self.qchar_equal
    }
}

pub fn verify_gap0_bijection(s: &SnakeB, limits: &Limits) -> Result<Gap0Report> {
    let b_sets = s.path_sets()?;
    let mut gap0: BTreeSet<Vec<PathB>> = BTreeSet::new();
    for tuple in enum_nop_tuples(&b_sets, limits)? {
        let paths: Vec<PathB> = tuple
            .iter()
            .enumerate()
            .map(|(t, &idx)| b_sets[t][idx].clone())
            .collect();
        if gap_tuple(&paths) == 0 {
            gap0.insert(paths);
        }
    }

    let halved = s.halved();
    let a_sets = halved.path_sets()?;
    let a_tuples = enum_nop_tuples(&a_sets, limits)?;
    let mut images: BTreeSet<Vec<PathB>> = BTreeSet::new();
    let mut images_are_nop = true;
    let mut roundtrips = true;
    for tuple in &a_tuples {
        let mut image = Vec::with_capacity(tuple.len());
        for (t, &idx) in tuple.iter().enumerate() {
            let a = &a_sets[t][idx];
            let b = map_f(a)?;
            roundtrips &= map_f_inv(&b).as_ref() == Ok(a);
            image.push(b);
        }
        for w in image.windows(2) {
            images_are_nop &= crate::paths::strictly_above(&w[0], &w[1])?;
        }
        images.insert(image);
    }
    for tuple in &gap0 {
        for p in tuple {
            roundtrips &= map_f(&map_f_inv(p)?).as_ref() == Ok(p);
        }
    }
    let image_is_gap0 = images == gap0 && images.len() == a_tuples.len();
    let qchar_equal = gap0_twisted_qchar(s, limits)? == twisted_qchar_snake(&halved, limits)?;
    Ok(Gap0Report {
        gap0_tuples: gap0.len(),
        a_tuples: a_tuples.len(),
        images_are_nop,
        image_is_gap0,
        roundtrips,
        qchar_equal,
    })
}
