//! Coefficient domains for the basis engine. Certified computations run over
//! the integers (representing Q up to scale); a large-prime field is
//! available for fast non-certified pre-checks.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt::Debug;

pub trait Scalar: Clone + Eq + Debug + Send + Sync + 'static {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    /// (x, y) with x*a = y*b and x, y as small as the domain allows.
    fn cross(a: &Self, b: &Self) -> (Self, Self);
    /// Rescales the coefficients of one vector to canonical form (primitive
    /// with positive first coefficient over Z, monic over a field).
    fn normalize<'a, I: Iterator<Item = &'a mut Self>>(coeffs: I)
    where
        Self: 'a;
    /// Rough magnitude used to decide when to renormalize mid-computation.
    fn bit_size(&self) -> usize;
}

impl Scalar for BigInt {
    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn cross(a: &Self, b: &Self) -> (Self, Self) {
        let g = a.gcd(b);
        (b / &g, a / &g)
    }

    fn normalize<'a, I: Iterator<Item = &'a mut Self>>(coeffs: I) {
        let mut v: Vec<&'a mut Self> = coeffs.collect();
        if v.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for c in v.iter() {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return;
        }
        if v[0].is_negative() {
            g = -g;
        }
        if g.is_one() {
            return;
        }
        for c in v.iter_mut() {
            **c = &**c / &g;
        }
    }

    fn bit_size(&self) -> usize {
        self.bits() as usize
    }
}

/// The field Z/p for the Mersenne prime p = 2^61 - 1.
pub const FP_PRIME: u64 = (1u64 << 61) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(v: i64) -> Fp {
        let p = FP_PRIME as i128;
        Fp(((v as i128 % p + p) % p) as u64)
    }

    pub fn from_bigint(v: &BigInt) -> Fp {
        let p = BigInt::from(FP_PRIME);
        let m = ((v % &p) + &p) % &p;
        Fp(m.try_into().unwrap())
    }

    fn mul_raw(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % FP_PRIME as u128) as u64
    }

    pub fn inv(self) -> Fp {
        // Fermat: a^(p-2)
        let mut base = self.0;
        let mut e = FP_PRIME - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_raw(acc, base);
            }
            base = Self::mul_raw(base, base);
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Scalar for Fp {
    fn one() -> Self {
        Fp(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn neg(&self) -> Self {
        if self.0 == 0 {
            Fp(0)
        } else {
            Fp(FP_PRIME - self.0)
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Fp(Self::mul_raw(self.0, o.0))
    }

    fn sub(&self, o: &Self) -> Self {
        if self.0 >= o.0 {
            Fp(self.0 - o.0)
        } else {
            Fp(self.0 + FP_PRIME - o.0)
        }
    }

    fn cross(a: &Self, b: &Self) -> (Self, Self) {
        // x*a = y*b with x = 1, y = a/b
        (Fp(1), a.mul(&b.inv()))
    }

    fn normalize<'a, I: Iterator<Item = &'a mut Self>>(coeffs: I) {
        let mut v: Vec<&'a mut Self> = coeffs.collect();
        let Some(first) = v.first().map(|c| **c) else { return };
        if first.0 == 0 || first.0 == 1 {
            return;
        }
        let inv = first.inv();
        for c in v.iter_mut() {
            **c = c.mul(&inv);
        }
    }

    fn bit_size(&self) -> usize {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        let a = Fp::new(12345);
        assert_eq!(a.mul(&a.inv()), Fp(1));
        assert_eq!(Fp::new(-1), Fp(FP_PRIME - 1));
    }

    #[test]
    fn bigint_normalize_primitive() {
        let mut v = vec![BigInt::from(-6), BigInt::from(9), BigInt::from(-3)];
        BigInt::normalize(v.iter_mut());
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)]);
    }
}
