use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::linalg::{Field, Numeric};

/// Forward-mode dual number `v + d·ε`, `ε² = 0`, used to differentiate the
/// group law for Newton steps.
#[derive(Debug, Clone, PartialEq)]
pub struct Dual<T> {
    pub v: T,
    pub d: T,
}

impl<T: Field> Dual<T> {
    pub fn constant(v: T) -> Self {
        let d = v.zero_like();
        Dual { v, d }
    }

    pub fn variable(v: T) -> Self {
        let d = v.one_like();
        Dual { v, d }
    }
}

impl<T: Field> Add for Dual<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Dual {
            v: self.v + o.v,
            d: self.d + o.d,
        }
    }
}

impl<T: Field> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Dual {
            v: self.v - o.v,
            d: self.d - o.d,
        }
    }
}

impl<T: Field> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Dual {
            d: self.v.clone() * o.d + self.d * o.v.clone(),
            v: self.v * o.v,
        }
    }
}

impl<T: Field> Div for Dual<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let v = self.v.clone() / o.v.clone();
        let d = (self.d - v.clone() * o.d) / o.v;
        Dual { v, d }
    }
}

impl<T: Field> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual {
            v: -self.v,
            d: -self.d,
        }
    }
}

impl<T: Field> Field for Dual<T> {
    fn zero_like(&self) -> Self {
        Dual::constant(self.v.zero_like())
    }
    fn one_like(&self) -> Self {
        Dual::constant(self.v.one_like())
    }
    fn from_i64_like(&self, x: i64) -> Self {
        Dual::constant(self.v.from_i64_like(x))
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero() && self.d.is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.v.magnitude()
    }
    fn unit_roundoff(&self) -> f64 {
        self.v.unit_roundoff()
    }
}

impl<T: Numeric> Numeric for Dual<T> {
    fn to_c64(&self) -> Complex64 {
        self.v.to_c64()
    }
    fn from_c64_like(&self, z: Complex64) -> Self {
        Dual::constant(self.v.from_c64_like(z))
    }
    fn conj(&self) -> Self {
        Dual {
            v: self.v.conj(),
            d: self.d.conj(),
        }
    }
}
