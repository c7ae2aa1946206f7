//! Laurent monomials in the variables `Y_{i,±q^k}` and `Z_{ī,±q^k}`, and
//! multisets of them.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Family, Weight};

/// Sign of a spectral parameter `±q^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn from_i8(s: i8) -> Option<Sign> {
        match s {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// A variable index together with its spectral parameter `sign · q^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub index: usize,
    pub sign: Sign,
    pub power: i64,
}

impl Var {
    pub fn new(index: usize, sign: Sign, power: i64) -> Self {
        Var { index, sign, power }
    }

    pub fn plus(index: usize, power: i64) -> Self {
        Var {
            index,
            sign: Sign::Plus,
            power,
        }
    }
}

/// Sparse exponent map shared by both monomial kinds.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Exponents(BTreeMap<Var, i64>);

impl Exponents {
    fn bump(&mut self, v: Var, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.0.entry(v).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&v);
        }
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        let mut out = self.clone();
        for (&v, &e) in &other.0 {
            out.bump(v, e);
        }
        out
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, letter: char, bar: bool) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            let s = if v.sign == Sign::Minus { "-" } else { "" };
            let b = if bar { "'" } else { "" };
            write!(f, "{letter}{}{b},{s}q^{}", v.index, v.power)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial in the `Y` variables of an untwisted algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial {
    exps: Exponents,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    pub fn var(v: Var, e: i64) -> Self {
        let mut m = YMonomial::one();
        m.exps.bump(v, e);
        m
    }

    pub fn mul_var(&mut self, v: Var, e: i64) {
        self.exps.bump(v, e);
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        YMonomial {
            exps: self.exps.mul(&other.exps),
        }
    }

    pub fn exponent(&self, v: &Var) -> i64 {
        self.exps.0.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &i64)> {
        self.exps.0.iter()
    }

    pub fn is_one(&self) -> bool {
        self.exps.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.exps.0.values().all(|&e| e > 0)
    }

    /// The weight `Σ e · ω_i` in the given family.
    pub fn weight(&self, family: Family) -> Weight {
        let mut w = Weight::zero(family);
        for (v, &e) in &self.exps.0 {
            w.add_fundamental(v.index, e);
        }
        w
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.exps.fmt_with(f, 'Y', false)
    }
}

/// A monomial in the `Z` variables of the twisted algebra of rank `n`.
///
/// Variables at `n̄` are stored with sign `+`, since `Z_{n̄,a} = Z_{n̄,-a}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZMonomial {
    n: usize,
    exps: Exponents,
}

impl ZMonomial {
    pub fn one(n: usize) -> Self {
        ZMonomial {
            n,
            exps: Exponents::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn normalize(&self, v: Var) -> Result<Var> {
        if v.index == 0 || v.index > self.n {
            return Err(Error::IndexOutOfRange {
                index: v.index as i64,
                min: 1,
                max: self.n as i64,
            });
        }
        Ok(if v.index == self.n {
            Var {
                sign: Sign::Plus,
                ..v
            }
        } else {
            v
        })
    }

    pub fn mul_var(&mut self, v: Var, e: i64) -> Result<()> {
        let v = self.normalize(v)?;
        self.exps.bump(v, e);
        Ok(())
    }

    pub fn var(n: usize, v: Var, e: i64) -> Result<Self> {
        let mut m = ZMonomial::one(n);
        m.mul_var(v, e)?;
        Ok(m)
    }

    pub fn mul(&self, other: &ZMonomial) -> Result<ZMonomial> {
        if self.n != other.n {
            return Err(Error::FamilyMismatch {
                left: Family::Twisted(self.n),
                right: Family::Twisted(other.n),
            });
        }
        Ok(ZMonomial {
            n: self.n,
            exps: self.exps.mul(&other.exps),
        })
    }

    pub fn exponent(&self, v: &Var) -> i64 {
        match self.normalize(*v) {
            Ok(v) => self.exps.0.get(&v).copied().unwrap_or(0),
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &i64)> {
        self.exps.0.iter()
    }

    pub fn is_one(&self) -> bool {
        self.exps.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.exps.0.values().all(|&e| e > 0)
    }

    /// The weight `Σ e · ω̌_ī` in the twisted lattice.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(Family::Twisted(self.n));
        for (v, &e) in &self.exps.0 {
            w.add_fundamental(v.index, e);
        }
        w
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.exps.fmt_with(f, 'Z', true)
    }
}

/// A multiset of monomials, i.e. a q-character with explicit multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter<M: Ord> {
    terms: BTreeMap<M, u64>,
}

impl<M: Ord> Default for QCharacter<M> {
    fn default() -> Self {
        QCharacter {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> QCharacter<M> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, m: M, mult: u64) {
        if mult > 0 {
            *self.terms.entry(m).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, m: &M) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Number of distinct monomials.
    pub fn distinct(&self) -> usize {
        self.terms.len()
    }

    /// Number of monomials counted with multiplicity.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &u64)> {
        self.terms.iter()
    }

    pub fn merge(&mut self, other: &QCharacter<M>) {
        for (m, &c) in &other.terms {
            self.insert(m.clone(), c);
        }
    }

    pub fn try_map<N: Ord + Clone, F>(&self, mut f: F) -> Result<QCharacter<N>>
    where
        F: FnMut(&M) -> Result<N>,
    {
        let mut out = QCharacter::new();
        for (m, &c) in &self.terms {
            out.insert(f(m)?, c);
        }
        Ok(out)
    }
}
