use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Arithmetic shared by every scalar kernel.
///
/// Constants are produced from an existing element (`zero_like`, `one_like`)
/// because some fields carry runtime data: the modulus of [`Fp`], the working
/// precision of an `HpComplex`.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, v: i64) -> Self;
    /// Exact zero test. For floating kernels this is `== 0`.
    fn is_zero(&self) -> bool;
    /// Approximate absolute value used for pivoting and normalization.
    fn magnitude(&self) -> f64;
    /// Relative rounding unit of the arithmetic; zero for exact fields.
    fn unit_roundoff(&self) -> f64 {
        0.0
    }

    fn inv(&self) -> Self {
        self.one_like() / self.clone()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Canonical representative of a projective triple.
    ///
    /// The default scales the coordinate of largest magnitude to one.
    fn normalize_triple(v: [Self; 3]) -> [Self; 3] {
        let (idx, mag) =
            v.iter()
                .enumerate()
                .map(|(i, c)| (i, c.magnitude()))
                .fold(
                    (0, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if mag <= 0.0 {
            return v;
        }
        let s = v[idx].inv();
        v.map(|c| c * s.clone())
    }
}

/// Fields that can be compared against hardware complex numbers.
pub trait Numeric: Field {
    fn to_c64(&self) -> Complex64;
    #[allow(clippy::wrong_self_convention)]
    fn from_c64_like(&self, z: Complex64) -> Self;
    fn conj(&self) -> Self;
}

/// Canonical text for reports: `p/q` for rationals, `re±im i` for complex
/// numbers at full precision.
pub trait ScalarText {
    fn to_text(&self) -> String;
}

pub(crate) fn complex_text(re: String, im: String) -> String {
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

impl ScalarText for Rational {
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl ScalarText for Complex64 {
    fn to_text(&self) -> String {
        // `+ 0.0` turns a signed zero into `0.0`
        complex_text(
            format!("{:?}", self.re + 0.0),
            format!("{:?}", self.im + 0.0),
        )
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    /// Clears denominators and common factors, keeping the overall sign.
    fn normalize_triple(v: [Self; 3]) -> [Self; 3] {
        if v.iter().all(Zero::is_zero) {
            return v;
        }
        let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut it = ints.into_iter().map(|c| Rational::from_integer(c / &gcd));
        [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
    }
}

impl Numeric for Rational {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_c64_like(&self, z: Complex64) -> Self {
        Rational::from_float(z.re).unwrap_or_else(Rational::zero)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Field for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn unit_roundoff(&self) -> f64 {
        f64::EPSILON
    }
}

impl Numeric for Complex64 {
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn from_c64_like(&self, z: Complex64) -> Self {
        z
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
}

/// Element of the prime field of order `p`, with `p < 2^62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i128, p: u64) -> Self {
        let r = v.rem_euclid(p as i128) as u64;
        Fp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a rational; `None` when the denominator vanishes mod `p`.
    pub fn from_rational(q: &Rational, p: u64) -> Option<Self> {
        let pb = BigInt::from(p);
        let num = q.numer().mod_floor(&pb).to_u64().unwrap();
        let den = q.denom().mod_floor(&pb).to_u64().unwrap();
        if den == 0 {
            return None;
        }
        Some(Fp { v: num, p } * Fp { v: den, p }.inv())
    }

    fn pow_u64(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp {
            v: 1 % self.p,
            p: self.p,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u128 + o.v as u128;
        Fp {
            v: (s % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u128 + self.p as u128 - o.v as u128;
        Fp {
            v: (s % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u128 * o.v as u128;
        Fp {
            v: (s % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Fp) -> Fp {
        assert!(o.v != 0, "division by zero in F_{}", self.p);
        self * o.pow_u64(self.p - 2)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp::new(v as i128, self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn magnitude(&self) -> f64 {
        if self.v == 0 {
            0.0
        } else {
            1.0
        }
    }
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero in F_{}", self.p);
        self.pow_u64(self.p - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let a = q(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
    }

    #[test]
    fn fp_inverse_roundtrip() {
        let p = 2_305_843_009_213_693_951; // 2^61 - 1
        let a = Fp::new(123_456_789, p);
        assert_eq!(a * a.inv(), a.one_like());
        assert_eq!(Fp::new(-1, p).value(), p - 1);
    }

    #[test]
    fn fp_from_rational_detects_bad_denominator() {
        assert!(Fp::from_rational(&q(1, 7), 7).is_none());
        let r = Fp::from_rational(&q(1, 3), 101).unwrap();
        assert_eq!(r * Fp::new(3, 101), Fp::new(1, 101));
    }

    #[test]
    fn rational_triples_clear_to_coprime_integers() {
        let t = Rational::normalize_triple([q(1, 2), q(-3, 4), q(0, 1)]);
        assert_eq!(t, [q(2, 1), q(-3, 1), q(0, 1)]);
        let t = Rational::normalize_triple([q(-38, 1), q(104, 1), q(-42, 1)]);
        assert_eq!(t, [q(-19, 1), q(52, 1), q(-21, 1)]);
    }

    #[test]
    fn complex_triples_scale_largest_to_one() {
        let t = Complex64::normalize_triple([
            Complex64::new(0.0, 2.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        assert!((t[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((t[1] - Complex64::new(0.0, -0.5)).norm() < 1e-15);
    }
}
