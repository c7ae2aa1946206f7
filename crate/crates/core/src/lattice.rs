//! Weight lattices of types A, B and twisted A, the character ring, and the
//! lattice maps between them.
//!
//! Weights are stored in the fundamental-weight basis. For the twisted family
//! the basis vectors are the dual fundamental weights indexed `1̄ … n̄`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A lattice family together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A(usize),
    B(usize),
    Twisted(usize),
}

impl Family {
    pub fn rank(self) -> usize {
        match self {
            Family::A(r) | Family::B(r) | Family::Twisted(r) => r,
        }
    }

    /// Short tag used in serialized forms.
    pub fn tag(self) -> &'static str {
        match self {
            Family::A(_) => "A",
            Family::B(_) => "B",
            Family::Twisted(_) => "TW",
        }
    }

    fn check(self) -> Result<()> {
        if self.rank() == 0 {
            return Err(Error::RankTooSmall(0));
        }
        Ok(())
    }
}

fn same_family(a: Family, b: Family) -> Result<()> {
    if a != b {
        return Err(Error::FamilyMismatch { left: a, right: b });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    family: Family,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(family: Family, coeffs: Vec<i64>) -> Result<Self> {
        family.check()?;
        if coeffs.len() != family.rank() {
            return Err(Error::InvalidSpec(alloc::format!(
                "weight of rank {} given {} coefficients",
                family.rank(),
                coeffs.len()
            )));
        }
        Ok(Weight { family, coeffs })
    }

    pub fn zero(family: Family) -> Self {
        Weight {
            family,
            coeffs: vec![0; family.rank()],
        }
    }

    /// The fundamental weight with 1-based index `i`.
    pub fn fundamental(family: Family, i: usize) -> Result<Self> {
        let rank = family.rank();
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                min: 1,
                max: rank as i64,
            });
        }
        let mut w = Weight::zero(family);
        w.coeffs[i - 1] = 1;
        Ok(w)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    /// Coefficient at the 1-based index `i`.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Adds `mult * ω_i`; indices outside `1..=rank` are ignored.
    pub(crate) fn add_fundamental(&mut self, i: usize, mult: i64) {
        if i >= 1 && i <= self.coeffs.len() {
            self.coeffs[i - 1] += mult;
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        same_family(self.family, other.family)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Weight {
            family: self.family,
            coeffs,
        })
    }

    pub fn scaled(&self, factor: i64) -> Weight {
        Weight {
            family: self.family,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;

    /// Panics on family mismatch; use [`Weight::checked_add`] for a fallible sum.
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weight family mismatch")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.family.tag(), self.coeffs)
    }
}

/// True iff the B-family weight lies in `P'`, i.e. its `ω_n` coefficient is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPrimeMembership {
    pub weight: Weight,
    pub is_member: bool,
}

impl PPrimeMembership {
    pub fn of(weight: &Weight) -> Result<Self> {
        let n = match weight.family {
            Family::B(n) => n,
            other => {
                return Err(Error::FamilyMismatch {
                    left: other,
                    right: Family::B(weight.family.rank()),
                })
            }
        };
        Ok(PPrimeMembership {
            weight: weight.clone(),
            is_member: weight.coeff(n) % 2 == 0,
        })
    }
}

/// Folds an A-family weight of rank `2n-1` onto the twisted lattice of rank `n`.
pub fn fold_weight(w: &Weight) -> Result<Weight> {
    let rank = match w.family {
        Family::A(r) => r,
        other => {
            return Err(Error::FamilyMismatch {
                left: other,
                right: Family::A(other.rank()),
            })
        }
    };
    if rank % 2 == 0 {
        return Err(Error::EvenRank(rank));
    }
    let n = rank.div_ceil(2);
    let mut coeffs = vec![0; n];
    for i in 1..n {
        coeffs[i - 1] = w.coeff(i) + w.coeff(2 * n - i);
    }
    coeffs[n - 1] = w.coeff(n);
    Ok(Weight {
        family: Family::Twisted(n),
        coeffs,
    })
}

/// The map `Π : P' → ᴸP`.
pub fn pi_weight(w: &Weight) -> Result<Weight> {
    let n = match w.family {
        Family::B(n) => n,
        other => {
            return Err(Error::FamilyMismatch {
                left: other,
                right: Family::B(other.rank()),
            })
        }
    };
    let kn = w.coeff(n);
    if kn % 2 != 0 {
        return Err(Error::NotInPPrime(kn));
    }
    let mut coeffs = w.coeffs.clone();
    coeffs[n - 1] = kn / 2;
    Ok(Weight {
        family: Family::Twisted(n),
        coeffs,
    })
}

/// The surjection `ᴸΠ : ᴸP → P`, sending weights outside `ᴸP'` to zero.
pub fn lpi_weight(w: &Weight) -> Result<Weight> {
    let n = match w.family {
        Family::Twisted(n) => n,
        other => {
            return Err(Error::FamilyMismatch {
                left: other,
                right: Family::Twisted(other.rank()),
            })
        }
    };
    let family = Family::B(n);
    if w.coeffs[..n - 1].iter().any(|c| c % 2 != 0) {
        return Ok(Weight::zero(family));
    }
    let mut coeffs: Vec<i64> = w.coeffs[..n - 1].iter().map(|c| c / 2).collect();
    coeffs.push(w.coeff(n));
    Ok(Weight { family, coeffs })
}

/// An element of the character ring: a sparse map from weights to integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    family: Family,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Character {
    pub fn zero(family: Family) -> Self {
        Character {
            family,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `[0]`.
    pub fn one(family: Family) -> Self {
        Character::from_weight(&Weight::zero(family))
    }

    pub fn from_weight(w: &Weight) -> Self {
        let mut c = Character::zero(w.family);
        c.terms.insert(w.coeffs.clone(), BigInt::one());
        c
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, coeffs: &[i64]) -> BigInt {
        self.terms.get(coeffs).cloned().unwrap_or_default()
    }

    /// Sum of all multiplicities.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|m| !m.is_negative())
    }

    /// Adds `mult` copies of the weight with the given coefficients.
    pub fn add_term(&mut self, coeffs: Vec<i64>, mult: impl Into<BigInt>) {
        debug_assert_eq!(coeffs.len(), self.family.rank());
        let mult = mult.into();
        if mult.is_zero() {
            return;
        }
        match self.terms.entry(coeffs) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_weight(&mut self, w: &Weight, mult: impl Into<BigInt>) -> Result<()> {
        same_family(self.family, w.family)?;
        self.add_term(w.coeffs.clone(), mult);
        Ok(())
    }

    pub fn add_assign_char(&mut self, other: &Character) -> Result<()> {
        same_family(self.family, other.family)?;
        for (k, m) in &other.terms {
            self.add_term(k.clone(), m.clone());
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &BigInt) -> Character {
        let mut out = Character::zero(self.family);
        if factor.is_zero() {
            return out;
        }
        for (k, m) in &self.terms {
            out.terms.insert(k.clone(), m * factor);
        }
        out
    }

    pub fn negated(&self) -> Character {
        self.scaled(&BigInt::from(-1))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.family.tag())?;
        for (idx, (k, m)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}:{}", k, m)?;
        }
        write!(f, "}}")
    }
}

pub fn char_add(a: &Character, b: &Character) -> Result<Character> {
    let mut out = a.clone();
    out.add_assign_char(b)?;
    Ok(out)
}

pub fn char_sub(a: &Character, b: &Character) -> Result<Character> {
    char_add(a, &b.negated())
}

/// Convolution product in the group ring.
pub fn char_mul(a: &Character, b: &Character) -> Result<Character> {
    same_family(a.family, b.family)?;
    let mut out = Character::zero(a.family);
    for (u, mu) in &a.terms {
        for (v, mv) in &b.terms {
            let key = u.iter().zip(v).map(|(x, y)| x + y).collect();
            out.add_term(key, mu * mv);
        }
    }
    Ok(out)
}

/// Push-forward of `c` along the weight map `f`, summing colliding images.
pub fn map_char<F>(c: &Character, target: Family, f: F) -> Result<Character>
where
    F: Fn(&Weight) -> Result<Weight>,
{
    let mut out = Character::zero(target);
    for (k, m) in &c.terms {
        let w = Weight {
            family: c.family,
            coeffs: k.clone(),
        };
        let image = f(&w)?;
        out.add_weight(&image, m.clone())?;
    }
    Ok(out)
}

/// `ϖ` on characters: A of rank `2n-1` to twisted rank `n`.
pub fn fold_char(c: &Character) -> Result<Character> {
    let rank = c.family.rank();
    if !matches!(c.family, Family::A(_)) {
        return Err(Error::FamilyMismatch {
            left: c.family,
            right: Family::A(rank),
        });
    }
    if rank % 2 == 0 {
        return Err(Error::EvenRank(rank));
    }
    map_char(c, Family::Twisted(rank.div_ceil(2)), fold_weight)
}

/// `Π` on characters; every key must lie in `P'`.
pub fn pi_char(c: &Character) -> Result<Character> {
    match c.family {
        Family::B(n) => map_char(c, Family::Twisted(n), pi_weight),
        other => Err(Error::FamilyMismatch {
            left: other,
            right: Family::B(other.rank()),
        }),
    }
}

/// `ᴸΠ` on characters, collapsing keys outside `ᴸP'` onto the zero weight.
pub fn lpi_char(c: &Character) -> Result<Character> {
    match c.family {
        Family::Twisted(n) => map_char(c, Family::B(n), lpi_weight),
        other => Err(Error::FamilyMismatch {
            left: other,
            right: Family::Twisted(other.rank()),
        }),
    }
}

/// True iff every multiplicity of `small` is at most the one in `big`.
pub fn char_dominates(big: &Character, small: &Character) -> Result<bool> {
    same_family(big.family, small.family)?;
    let zero = BigInt::zero();
    let keys = big.terms.keys().chain(small.terms.keys());
    for k in keys {
        let b = big.terms.get(k).unwrap_or(&zero);
        let s = small.terms.get(k).unwrap_or(&zero);
        if s > b {
            return Ok(false);
        }
    }
    Ok(true)
}
