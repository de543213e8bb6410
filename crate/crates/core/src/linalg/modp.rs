//! Arithmetic modulo the Mersenne prime `2⁶¹ − 1`.
//!
//! Used to run large sampled systems exactly when rational coefficients
//! would grow too fast. Reducing a rational system mod `p` can only lower
//! its rank, so a null space dimension computed here bounds the rational
//! one from above.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::sparse::Field;
use super::Rational;

pub const MODULUS: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn mul_raw(a: u64, b: u64) -> u64 {
        let w = u128::from(a) * u128::from(b);
        let lo = (w as u64) & MODULUS;
        let hi = (w >> 61) as u64;
        let s = lo + hi;
        if s >= MODULUS {
            s - MODULUS
        } else {
            s
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self.0, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_raw(acc, base);
            }
            base = Self::mul_raw(base, base);
            e >>= 1;
        }
        Fp(acc)
    }

    pub fn inverse(self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(MODULUS - 2))
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(MODULUS));
        Fp(r.to_u64().expect("reduced"))
    }

    /// Image of `q` under `ℤ_(p) → F_p`; `None` if `p` divides the
    /// denominator.
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let den = Self::from_bigint(q.denom()).inverse()?;
        Some(Self::from_bigint(q.numer()).mul_ref(&den))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;

    fn add(self, o: Fp) -> Fp {
        self.add_ref(&o)
    }
}

impl Mul for Fp {
    type Output = Fp;

    fn mul(self, o: Fp) -> Fp {
        self.mul_ref(&o)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Field for Fp {
    fn add_ref(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Fp(Self::mul_raw(self.0, o.0))
    }

    fn neg_ref(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }

    fn div_ref(&self, o: &Self) -> Self {
        self.mul_ref(&o.inverse().expect("division by zero in F_p"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use proptest::prelude::*;

    #[test]
    fn reduction_of_rationals() {
        let half = Fp::from_rational(&frac(1, 2)).unwrap();
        assert_eq!(half.mul_ref(&Fp::new(2)), Fp::one());
        assert_eq!(
            Fp::from_rational(&frac(-3, 1)).unwrap(),
            Fp::new(MODULUS - 3)
        );
        assert_eq!(
            Fp::from_rational(&frac(1, 1 << 61).mul_ref(&frac(1, 1))).map(|_| ()),
            Some(())
        );
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_map(a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50) {
            let (x, y) = (frac(a, b), frac(c, d));
            let fx = Fp::from_rational(&x).unwrap();
            let fy = Fp::from_rational(&y).unwrap();
            prop_assert_eq!(Fp::from_rational(&(&x + &y)).unwrap(), fx.add_ref(&fy));
            prop_assert_eq!(Fp::from_rational(&(&x * &y)).unwrap(), fx.mul_ref(&fy));
            prop_assert_eq!(Fp::from_rational(&-&x).unwrap(), fx.neg_ref());
        }

        #[test]
        fn inverse_inverts(v in 1u64..MODULUS) {
            let x = Fp::new(v);
            prop_assert_eq!(x.mul_ref(&x.inverse().unwrap()), Fp::one());
        }
    }
}
