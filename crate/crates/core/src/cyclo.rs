//! Exact arithmetic in the 8th cyclotomic field Q(zeta_8) = Q(i, sqrt 2).
//!
//! Elements are stored as `c0 + c1*z + c2*z^2 + c3*z^3` with `z` a primitive
//! 8th root of unity, `z^4 = -1`. The semantic embedding is fixed once and
//! for all as `z = e^{i pi/4}`, so that `z^2 = i` and `z - z^3 = sqrt 2`.
//! Every sign convention downstream refers to this embedding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// An element of Q(zeta_8) in the canonical power basis 1, z, z^2, z^3.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclo8 {
    c: [Rat; 4],
}

impl Cyclo8 {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        Cyclo8 { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclo8 { c: [r, Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// z^k for any integer k, reduced via z^4 = -1.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let (idx, sign) = if k < 4 { (k, 1) } else { (k - 4, -1) };
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        c[idx] = rat_int(sign);
        Cyclo8 { c }
    }

    /// The imaginary unit i = z^2.
    pub fn i() -> Self {
        Self::zeta_pow(2)
    }

    /// sqrt(2) = z - z^3.
    pub fn sqrt2() -> Self {
        Cyclo8 { c: [Rat::zero(), Rat::one(), Rat::zero(), -Rat::one()] }
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.c[k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Galois map z -> z^k for odd k.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(k % 2 != 0);
        let mut out = Cyclo8::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let e = (j as i64) * k;
            let mut t = Cyclo8::zeta_pow(e);
            for x in t.c.iter_mut() {
                *x *= cj;
            }
            out += &t;
        }
        out
    }

    /// Complex conjugation, z -> z^7 = z^{-1}. Fixes the real subfield Q(sqrt 2).
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// True iff conj(x) = x, i.e. x lies in Q(sqrt 2).
    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && self.c[1] == -self.c[3].clone()
    }

    /// For real x, the pair (a, b) with x = a + b*sqrt(2).
    pub fn real_parts(&self) -> Option<(Rat, Rat)> {
        if self.is_real() {
            Some((self.c[0].clone(), self.c[1].clone()))
        } else {
            None
        }
    }

    /// Exact sign of a real element, via comparison of a^2 with 2 b^2.
    pub fn sign_real(&self) -> Result<i32> {
        let (a, b) = self
            .real_parts()
            .ok_or_else(|| Error::NonRealSign(format!("{self}")))?;
        let sa = rat_sign(&a);
        let sb = rat_sign(&b);
        Ok(match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // a and b*sqrt(2) compete: |a| vs |b|sqrt(2) <=> a^2 vs 2 b^2.
                let cmp = rat_sign(&(&a * &a - rat_int(2) * &b * &b));
                s * cmp
            }
        })
    }

    pub fn is_real_positive(&self) -> bool {
        self.sign_real().map(|s| s > 0).unwrap_or(false)
    }

    /// Multiplicative inverse via the product of Galois conjugates.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g3 = self.galois(3);
        let g5 = self.galois(5);
        let g7 = self.galois(7);
        let cofactor = &(&g3 * &g5) * &g7;
        let norm = self * &cofactor;
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .clone();
        debug_assert!(!n.is_zero());
        let ninv = n.recip();
        Ok(cofactor.scale(&ninv))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for x in out.c.iter_mut() {
            *x *= r;
        }
        out
    }

    /// Real and imaginary parts w.r.t. the fixed embedding: x = re + i*im
    /// with re, im in Q(sqrt 2).
    pub fn re_im(&self) -> (Cyclo8, Cyclo8) {
        let cj = self.conj();
        let two = rat_int(2);
        let re = (self + &cj).scale(&two.recip());
        let im_times_i = (self - &cj).scale(&two.recip());
        let im = &im_times_i * &Cyclo8::zeta_pow(-2);
        (re, im)
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{cj}")?,
                1 => write!(f, "{cj}*z")?,
                _ => write!(f, "{cj}*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> AddAssign<&'a Cyclo8> for Cyclo8 {
    fn add_assign(&mut self, rhs: &'a Cyclo8) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl<'a> SubAssign<&'a Cyclo8> for Cyclo8 {
    fn sub_assign(&mut self, rhs: &'a Cyclo8) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

impl<'a, 'b> Add<&'b Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn add(self, rhs: &'b Cyclo8) -> Cyclo8 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, 'b> Sub<&'b Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, rhs: &'b Cyclo8) -> Cyclo8 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, 'b> Mul<&'b Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, rhs: &'b Cyclo8) -> Cyclo8 {
        let mut acc = [
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        // Reduce z^k for k >= 4 via z^4 = -1.
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for (k, v) in acc.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if k < 4 {
                c[k] += v;
            } else {
                c[k - 4] -= v;
            }
        }
        Cyclo8 { c }
    }
}

impl<'a> MulAssign<&'a Cyclo8> for Cyclo8 {
    fn mul_assign(&mut self, rhs: &'a Cyclo8) {
        *self = &*self * rhs;
    }
}

impl Neg for &Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        let mut out = self.clone();
        for x in out.c.iter_mut() {
            *x = -x.clone();
        }
        out
    }
}

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        -&self
    }
}

impl Add for Cyclo8 {
    type Output = Cyclo8;
    fn add(self, rhs: Cyclo8) -> Cyclo8 {
        &self + &rhs
    }
}

impl Sub for Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, rhs: Cyclo8) -> Cyclo8 {
        &self - &rhs
    }
}

impl Mul for Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, rhs: Cyclo8) -> Cyclo8 {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> Cyclo8 {
        Cyclo8::zeta_pow(k)
    }

    #[test]
    fn zeta_relations() {
        assert_eq!(&z(1) * &z(3), Cyclo8::from_int(-1));
        assert_eq!(z(1).inv().unwrap(), -z(3));
        let a = &Cyclo8::one() + &z(2);
        let b = &Cyclo8::one() - &z(2);
        assert_eq!(&a * &b, Cyclo8::from_int(2));
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(2).conj(), -z(2));
        assert_eq!(Cyclo8::from_rat(rat(3, 2)).conj(), Cyclo8::from_rat(rat(3, 2)));
        let s2 = Cyclo8::sqrt2();
        assert_eq!(s2.conj(), s2);
        assert!(s2.is_real());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s2 = Cyclo8::sqrt2();
        assert_eq!(&s2 * &s2, Cyclo8::from_int(2));
    }

    #[test]
    fn sign_of_reals() {
        let one = Cyclo8::one();
        let s2 = Cyclo8::sqrt2();
        assert_eq!((&one - &s2).sign_real().unwrap(), -1);
        assert_eq!(Cyclo8::zero().sign_real().unwrap(), 0);
        // 3 - 2 sqrt2: 9 > 8 so positive.
        let x = &Cyclo8::from_int(3) - &s2.scale(&rat_int(2));
        assert_eq!(x.sign_real().unwrap(), 1);
        assert!(z(2).sign_real().is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let x = Cyclo8::new(rat(1, 2), rat(-2, 3), rat_int(5), rat(7, 4));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Cyclo8::one());
        assert!(Cyclo8::zero().inv().is_err());
    }

    #[test]
    fn re_im_split() {
        let x = Cyclo8::new(rat_int(1), rat_int(2), rat_int(3), rat_int(4));
        let (re, im) = x.re_im();
        assert!(re.is_real());
        assert!(im.is_real());
        let back = &re + &(&Cyclo8::i() * &im);
        assert_eq!(back, x);
    }
}
