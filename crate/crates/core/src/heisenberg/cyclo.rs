use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::{Field, Numeric, Rational};

fn rz(q: &Rational) -> bool {
    Zero::is_zero(q)
}

/// Element `re + im·ρ` of `ℚ(ρ)`, where `ρ² = −1 − ρ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloQ {
    pub re: Rational,
    pub im: Rational,
}

impl CycloQ {
    pub fn new(re: Rational, im: Rational) -> Self {
        CycloQ { re, im }
    }

    pub fn rational(q: Rational) -> Self {
        CycloQ {
            re: q,
            im: Rational::zero(),
        }
    }

    pub fn int(v: i64) -> Self {
        CycloQ::rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn rho() -> Self {
        CycloQ {
            re: Rational::zero(),
            im: Rational::from_integer(BigInt::from(1)),
        }
    }

    /// The Galois conjugate, which is complex conjugation: `ρ ↦ ρ² = −1 − ρ`.
    pub fn galois(&self) -> Self {
        CycloQ {
            re: &self.re - &self.im,
            im: -self.im.clone(),
        }
    }

    /// `N(a + bρ) = a² − ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.im + &self.im * &self.im
    }

    /// The rational value, if the `ρ` component vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        rz(&self.im).then(|| self.re.clone())
    }
}

impl fmt::Debug for CycloQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})ρ", self.re, self.im)
    }
}

impl Add for CycloQ {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CycloQ {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for CycloQ {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        CycloQ {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for CycloQ {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = &self.im * &o.im;
        CycloQ {
            re: &self.re * &o.re - &bd,
            im: &self.re * &o.im + &self.im * &o.re - bd,
        }
    }
}

impl Div for CycloQ {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!rz(&n), "division by zero in Q(rho)");
        let p = self * o.galois();
        CycloQ {
            re: p.re / &n,
            im: p.im / n,
        }
    }
}

impl Neg for CycloQ {
    type Output = Self;
    fn neg(self) -> Self {
        CycloQ {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Field for CycloQ {
    fn zero_like(&self) -> Self {
        CycloQ::int(0)
    }
    fn one_like(&self) -> Self {
        CycloQ::int(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        CycloQ::int(v)
    }
    fn is_zero(&self) -> bool {
        rz(&self.re) && rz(&self.im)
    }
    fn magnitude(&self) -> f64 {
        self.norm().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

impl Numeric for CycloQ {
    fn to_c64(&self) -> Complex64 {
        let rho = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        let re = self.re.to_f64().unwrap_or(f64::NAN);
        let im = self.im.to_f64().unwrap_or(f64::NAN);
        Complex64::new(re, 0.0) + rho * im
    }
    fn from_c64_like(&self, z: Complex64) -> Self {
        // z = a + bρ with ρ = −1/2 + i√3/2
        let b = z.im * 2.0 / 3f64.sqrt();
        let a = z.re + b / 2.0;
        let q = |x: f64| Rational::from_float(x).unwrap_or_else(Rational::zero);
        CycloQ { re: q(a), im: q(b) }
    }
    fn conj(&self) -> Self {
        self.galois()
    }
}
