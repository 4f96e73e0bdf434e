//! Software-float complex numbers for precision-sensitive refinement.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_complex::Complex64;

use super::field::{complex_text, Field, Numeric, ScalarText};

pub type HpFloat = FBig<HalfEven, 2>;

fn hp_from_f64(x: f64, bits: usize) -> HpFloat {
    HpFloat::try_from(x)
        .expect("finite float")
        .with_precision(bits)
        .value()
}

#[derive(Clone, PartialEq)]
pub struct HpComplex {
    pub re: HpFloat,
    pub im: HpFloat,
    bits: usize,
}

impl HpComplex {
    pub fn from_c64(z: Complex64, bits: usize) -> Self {
        HpComplex {
            re: hp_from_f64(z.re, bits),
            im: hp_from_f64(z.im, bits),
            bits,
        }
    }

    pub fn precision_bits(&self) -> usize {
        self.bits
    }

    fn with(&self, re: HpFloat, im: HpFloat) -> Self {
        HpComplex {
            re,
            im,
            bits: self.bits,
        }
    }

    pub fn norm_sqr(&self) -> HpFloat {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
}

impl ScalarText for HpComplex {
    fn to_text(&self) -> String {
        complex_text(self.re.to_string(), self.im.to_string())
    }
}

impl fmt::Debug for HpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for HpComplex {
    type Output = HpComplex;
    fn add(self, o: Self) -> Self {
        let bits = self.bits.max(o.bits);
        HpComplex {
            re: self.re + o.re,
            im: self.im + o.im,
            bits,
        }
    }
}

impl Sub for HpComplex {
    type Output = HpComplex;
    fn sub(self, o: Self) -> Self {
        let bits = self.bits.max(o.bits);
        HpComplex {
            re: self.re - o.re,
            im: self.im - o.im,
            bits,
        }
    }
}

impl Mul for HpComplex {
    type Output = HpComplex;
    fn mul(self, o: Self) -> Self {
        let bits = self.bits.max(o.bits);
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        HpComplex { re, im, bits }
    }
}

impl Div for HpComplex {
    type Output = HpComplex;
    fn div(self, o: Self) -> Self {
        let bits = self.bits.max(o.bits);
        let d = o.norm_sqr();
        let re = (self.re.clone() * o.re.clone() + self.im.clone() * o.im.clone()) / d.clone();
        let im = (self.im * o.re - self.re * o.im) / d;
        HpComplex { re, im, bits }
    }
}

impl Neg for HpComplex {
    type Output = HpComplex;
    fn neg(self) -> Self {
        HpComplex {
            re: -self.re,
            im: -self.im,
            bits: self.bits,
        }
    }
}

impl Field for HpComplex {
    fn zero_like(&self) -> Self {
        self.with(hp_from_f64(0.0, self.bits), hp_from_f64(0.0, self.bits))
    }
    fn one_like(&self) -> Self {
        self.with(hp_from_f64(1.0, self.bits), hp_from_f64(0.0, self.bits))
    }
    fn from_i64_like(&self, v: i64) -> Self {
        let re = HpFloat::from(v).with_precision(self.bits).value();
        self.with(re, hp_from_f64(0.0, self.bits))
    }
    fn is_zero(&self) -> bool {
        self.re.repr().significand().is_zero() && self.im.repr().significand().is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }
    fn unit_roundoff(&self) -> f64 {
        (-(self.bits as f64)).exp2()
    }
}

impl Numeric for HpComplex {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().value(), self.im.to_f64().value())
    }
    fn from_c64_like(&self, z: Complex64) -> Self {
        HpComplex::from_c64(z, self.bits)
    }
    fn conj(&self) -> Self {
        self.with(self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_digits_beyond_double() {
        let third = HpComplex::from_c64(Complex64::new(1.0, 0.0), 128)
            / HpComplex::from_c64(Complex64::new(3.0, 0.0), 128);
        let back = third.clone() * HpComplex::from_c64(Complex64::new(3.0, 0.0), 128);
        let err = (back - third.one_like()).re.to_f64().value().abs();
        assert!(err < 1e-35, "residual {err}");
    }

    #[test]
    fn division_matches_hardware() {
        let a = Complex64::new(1.5, -2.0);
        let b = Complex64::new(0.25, 3.0);
        let q = HpComplex::from_c64(a, 192) / HpComplex::from_c64(b, 192);
        assert!((q.to_c64() - a / b).norm() < 1e-15);
    }
}
