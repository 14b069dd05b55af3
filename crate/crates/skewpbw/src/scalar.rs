//! Exact field scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rat` is kept canonical by `num_rational` (reduced, positive denominator,
//! zero is 0/1). `Gauss` is canonical whenever both parts are.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn rzero() -> Rat {
    num_traits::Zero::zero()
}

fn rone() -> Rat {
    num_traits::One::one()
}

fn ris_zero(r: &Rat) -> bool {
    num_traits::Zero::is_zero(r)
}

fn ris_one(r: &Rat) -> bool {
    num_traits::One::is_one(r)
}

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: Rat) -> Self {
        Gauss { re, im: rzero() }
    }

    pub fn i() -> Self {
        Gauss { re: rzero(), im: rone() }
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if ris_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        if ris_zero(&self.re) {
            if ris_one(&self.im) {
                return write!(f, "i");
            }
            if self.im == -rone() {
                return write!(f, "-i");
            }
            return write!(f, "{}*i", self.im);
        }
        write!(f, "{}", self.re)?;
        if ris_one(&self.im) {
            write!(f, "+i")
        } else if self.im == -rone() {
            write!(f, "-i")
        } else if self.im > rzero() {
            write!(f, "+{}*i", self.im)
        } else {
            write!(f, "{}*i", self.im)
        }
    }
}

/// The operations both base fields share. Conjugation is the identity on Q.
pub trait FieldScalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    /// Some(i) when the field contains the imaginary unit.
    fn imaginary_unit() -> Option<Self>;
}

impl FieldScalar for Rat {
    fn zero() -> Self {
        rzero()
    }
    fn one() -> Self {
        rone()
    }
    fn is_zero(&self) -> bool {
        ris_zero(self)
    }
    fn is_one(&self) -> bool {
        ris_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if ris_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn imaginary_unit() -> Option<Self> {
        None
    }
}

impl FieldScalar for Gauss {
    fn zero() -> Self {
        Gauss::real(rzero())
    }
    fn one() -> Self {
        Gauss::real(rone())
    }
    fn is_zero(&self) -> bool {
        ris_zero(&self.re) && ris_zero(&self.im)
    }
    fn is_one(&self) -> bool {
        ris_one(&self.re) && ris_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        Gauss::new(-self.re.clone(), -self.im.clone())
    }
    fn inv(&self) -> Option<Self> {
        if FieldScalar::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(Gauss::new(&self.re / &n, -(&self.im / &n)))
    }
    fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }
    fn from_rat(r: Rat) -> Self {
        Gauss::real(r)
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Gauss::i())
    }
}
