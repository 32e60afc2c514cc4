//! Dense univariate polynomials over exact coefficient rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`Poly`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// A polynomial stored densely, constant term first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `x + c`.
    pub fn linear(c: T) -> Self {
        Self::new(vec![c, T::one()])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &T) -> Self {
        // Taylor shift by repeated synthetic division, quadratic in the degree.
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = a[j + 1].clone() * c;
                a[j] = a[j].clone() + &t;
            }
        }
        Self::new(a)
    }

    /// `self(-x - c)`.
    pub fn reflect(&self, c: &T) -> Self {
        self.negate_x().shift(c)
    }

    /// `self(-x)`.
    pub fn negate_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * &T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b;
        }
        Poly::new(v)
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

/// A polynomial printed in a named variable.
pub struct Named<'a, T: Ring> {
    poly: &'a Poly<T>,
    var: &'a str,
}

impl<T: Ring> Poly<T> {
    /// Displays the polynomial with `var` as its variable.
    pub fn display_in<'a>(&'a self, var: &'a str) -> Named<'a, T> {
        Named { poly: self, var }
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Named<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var;
        let this = self.poly;
        if this.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in this.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = if body.contains('/') && i > 0 { format!("({body})") } else { body };
            match i {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    if i == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluation at a machine integer.
    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Positive gcd of the coefficients and the quotient by it.
    pub fn content_primitive(&self) -> Result<(BigInt, IntPoly)> {
        if self.is_zero() {
            return Err(Error::precondition("content of the zero polynomial"));
        }
        let c = content(&self.coeffs);
        Ok((c.clone(), Poly::new(self.coeffs.iter().map(|a| a / &c).collect())))
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let (_, p) = self.content_primitive().expect("nonzero");
        if p.lc().is_some_and(|c| c.is_negative()) {
            -p
        } else {
            p
        }
    }

    /// Quotient of an exact division; a nonzero remainder is an inconsistency.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_int(d)?;
        if !r.is_zero() {
            return Err(Error::inconsistency(format!("division by {d} leaves remainder {r}")));
        }
        Ok(q)
    }

    /// Long division over the integers; requires every step to divide exactly.
    fn div_rem_int(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let (q, r) = self.to_rat().div_rem(&d.to_rat())?;
        let q_int = q.to_int().ok_or_else(|| Error::inconsistency(format!("quotient by {d} is not integral")))?;
        let r_int = r.to_int().ok_or_else(|| Error::inconsistency(format!("remainder by {d} is not integral")))?;
        Ok((q_int, r_int))
    }

    /// Quotient by `x - r` when `r` is a root, by synthetic division.
    pub fn deflate(&self, r: &BigInt) -> Option<IntPoly> {
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - 1];
        let mut acc = BigInt::zero();
        for i in (0..n).rev() {
            acc = acc * r + &self.coeffs[i];
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        acc.is_zero().then(|| Poly::new(q))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl RatPoly {
    /// Division with remainder over the rationals.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let Some(dl) = d.lc() else {
            return Err(Error::precondition("division by the zero polynomial"));
        };
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / dl;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[i + j] = &r[i + j] - &(&c * b);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, d: &RatPoly) -> Result<RatPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> RatPoly {
        match self.lc() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// The integer polynomial when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Primitive integer polynomial with positive leading coefficient that
    /// is a positive rational multiple of `self` up to sign of the leading term.
    pub fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.denominator_lcm();
        let ints: IntPoly = Poly::new(self.coeffs.iter().map(|c| (c * &l).to_integer()).collect());
        ints.primitive_part()
    }

    /// Same as [`RatPoly::to_primitive_int`] but only scales by a positive factor.
    pub fn to_primitive_int_same_sign(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.denominator_lcm();
        let ints: IntPoly = Poly::new(self.coeffs.iter().map(|c| (c * &l).to_integer()).collect());
        ints.content_primitive().expect("nonzero").1
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

pub(crate) fn content(cs: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    cs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// `p_a(x) = x(x+1)...(x+a)`.
pub fn product_poly(a: usize) -> IntPoly {
    (0..=a).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::linear(BigInt::from(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn trimming_and_degree() {
        let z = ip(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.deg_i64(), -1);
        assert_eq!(ip(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn small_products() {
        let p2 = product_poly(2);
        assert_eq!(p2, ip(&[0, 2, 3, 1]));
        assert_eq!(p2.eval_i64(3), BigInt::from(60));
        assert_eq!(product_poly(4).eval_i64(1), BigInt::from(120));
    }

    #[test]
    fn shift_reflect_compose() {
        let p1 = product_poly(1);
        assert_eq!(p1.shift(&BigInt::from(2)), ip(&[6, 5, 1]));
        let p3 = product_poly(3);
        assert_eq!(p3, &p1 * &p1.shift(&BigInt::from(2)));
        assert_eq!(p3.reflect(&BigInt::from(3)), p3);
        assert_eq!(p1.compose(&ip(&[1, 1])), p1.shift(&BigInt::from(1)));
        assert_eq!(p3.derivative(), ip(&[6, 22, 18, 4]));
    }

    #[test]
    fn division() {
        let f = ip(&[-1, 0, 1]);
        assert_eq!(f.exact_div(&ip(&[-1, 1])).unwrap(), ip(&[1, 1]));
        assert!(matches!(f.exact_div(&ip(&[1, 2])), Err(Error::Inconsistency(_))));
        assert_eq!(f.deflate(&BigInt::from(1)), Some(ip(&[1, 1])));
        assert_eq!(f.deflate(&BigInt::from(2)), None);
    }

    #[test]
    fn content_and_primitive() {
        let (c, p) = ip(&[4, 2]).content_primitive().unwrap();
        assert_eq!((c, p), (BigInt::from(2), ip(&[2, 1])));
        let (c, p) = ip(&[0, 0, 100, 0, 20]).content_primitive().unwrap();
        assert_eq!((c, p), (BigInt::from(20), ip(&[0, 0, 5, 0, 1])));
        assert_eq!(ip(&[0, 1]).content_primitive().unwrap().0, BigInt::one());
        assert!(IntPoly::zero().content_primitive().is_err());
    }

    #[test]
    fn display_is_readable() {
        let q = RatPoly::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer((-3).into()),
            BigRational::one(),
        ]);
        assert_eq!(q.to_string(), "x^2 - 3*x + 1/2");
    }
}
