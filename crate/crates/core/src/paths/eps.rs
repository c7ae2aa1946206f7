use core::fmt;

/// An exact value `a + b·ε` with `b ∈ {-1, 0, 1}` and `0 < ε < 1/2`.
///
/// The derived ordering compares `a` first and then `b`, which is the true
/// order of the represented reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EpsInt {
    pub a: i64,
    pub b: i8,
}

impl EpsInt {
    pub const fn new(a: i64, b: i8) -> Self {
        assert!(b >= -1 && b <= 1, "epsilon coefficient must be -1, 0 or 1");
        EpsInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        EpsInt { a, b: 0 }
    }

    pub const fn is_integer(self) -> bool {
        self.b == 0
    }

    /// `⌊(self + c) / 2⌋`.
    pub fn floor_half_plus(self, c: i64) -> i64 {
        let s = self.a + c;
        if s.rem_euclid(2) == 0 {
            if self.b >= 0 {
                s / 2
            } else {
                s / 2 - 1
            }
        } else {
            (s - 1).div_euclid(2)
        }
    }

    pub const fn shifted(self, c: i64) -> Self {
        EpsInt {
            a: self.a + c,
            b: self.b,
        }
    }
}

impl From<i64> for EpsInt {
    fn from(a: i64) -> Self {
        EpsInt::int(a)
    }
}

impl fmt::Display for EpsInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            0 => write!(f, "{}", self.a),
            1 => write!(f, "{}+e", self.a),
            _ => write!(f, "{}-e", self.a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // floor((A + B·ε) / d) for |B| small, evaluated without the closed form
    fn floor_oracle(a: i64, b: i64, d: i64) -> i64 {
        if a.rem_euclid(d) == 0 {
            a / d - if b < 0 { 1 } else { 0 }
        } else {
            a.div_euclid(d)
        }
    }

    #[test]
    fn floor_matches_oracle() {
        for a in -15..=15 {
            for b in -1..=1i8 {
                for c in -4..=4 {
                    let x = EpsInt::new(a, b);
                    assert_eq!(
                        x.floor_half_plus(c),
                        floor_oracle(a + c, b as i64, 2),
                        "{x} + {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn ordering() {
        assert!(EpsInt::new(3, -1) < EpsInt::int(3));
        assert!(EpsInt::int(3) < EpsInt::new(3, 1));
        assert!(EpsInt::new(3, 1) < EpsInt::new(4, -1));
    }
}
