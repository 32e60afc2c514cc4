//! Gcd, square-free decomposition, resultants and discriminants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Monic gcd over the rationals.
pub fn rat_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("nonzero divisor");
        // Keeping the remainders primitive stops coefficient blow-up.
        a = b;
        b = r.to_primitive_int().to_rat();
    }
    a.monic()
}

/// Primitive gcd with positive leading coefficient.
pub fn poly_gcd(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::precondition("gcd of two zero polynomials"));
    }
    Ok(rat_gcd(&f.to_rat(), &g.to_rat()).to_primitive_int())
}

/// `f / gcd(f, f')`, primitive with positive leading coefficient.
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    let g = poly_gcd(f, &f.derivative()).expect("f nonzero");
    f.primitive_part().exact_div(&g).expect("gcd divides f").primitive_part()
}

/// Square-free decomposition `f = content * prod factor_i^mult_i`.
///
/// Factors are primitive, square-free, pairwise coprime and have positive
/// leading coefficients; the content carries the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn recompose(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (p, k)| &acc * &p.pow(*k))
    }
}

/// Yun's algorithm over the rationals, normalised to integer factors.
pub fn squarefree_decomposition(f: &IntPoly) -> Result<SquarefreeDecomposition> {
    if f.is_zero() {
        return Err(Error::precondition("square-free decomposition of zero"));
    }
    let mut factors = Vec::new();
    if f.degree() > Some(0) {
        let fr = f.to_rat();
        let d = fr.derivative();
        let a0 = rat_gcd(&fr, &d);
        let mut b = fr.div_rem(&a0)?.0;
        let c = d.div_rem(&a0)?.0;
        let mut dd = &c - &b.derivative();
        let mut i = 1u32;
        while b.degree() > Some(0) {
            let a = rat_gcd(&b, &dd);
            let nb = b.div_rem(&a)?.0;
            let nc = dd.div_rem(&a)?.0;
            dd = &nc - &nb.derivative();
            if a.degree() > Some(0) {
                factors.push((a.to_primitive_int(), i));
            }
            b = nb;
            i += 1;
        }
    }
    let prod = factors.iter().fold(IntPoly::one(), |acc, (p, k)| &acc * &p.pow(*k));
    let content = f.lc().expect("nonzero") / prod.lc().expect("nonzero");
    let out = SquarefreeDecomposition { content, factors };
    if out.recompose() != *f {
        return Err(Error::inconsistency("square-free decomposition does not recompose"));
    }
    Ok(out)
}

/// Resultant over the rationals by the Euclidean remainder sequence.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> BigRational {
    if f.is_zero() || g.is_zero() {
        return BigRational::zero();
    }
    let mut sign_acc = BigRational::one();
    let (mut a, mut b) = (f.clone(), g.clone());
    loop {
        let n = a.degree().expect("nonzero");
        let m = b.degree().expect("nonzero");
        let lb = b.lc().expect("nonzero").clone();
        if m == 0 {
            return sign_acc * num_traits::pow(lb, n);
        }
        let r = a.rem(&b).expect("nonzero divisor");
        if r.is_zero() {
            return BigRational::zero();
        }
        let dr = r.degree().expect("nonzero");
        if (n * m) % 2 == 1 {
            sign_acc = -sign_acc;
        }
        sign_acc *= num_traits::pow(lb, n - dr);
        a = b;
        b = r;
    }
}

/// `(-1)^(d(d-1)/2) res(f, f') / lc(f)`.
pub fn discriminant(f: &RatPoly) -> Result<BigRational> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::precondition("discriminant of a constant polynomial")),
    };
    let r = resultant(f, &f.derivative()) / f.lc().expect("nonzero");
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Discriminant of an integer polynomial.
pub fn discriminant_int(f: &IntPoly) -> Result<BigInt> {
    let d = discriminant(&f.to_rat())?;
    Ok(d.to_integer())
}

/// Whether `f` has a repeated complex root.
pub fn has_multiple_root(f: &IntPoly) -> bool {
    poly_gcd(f, &f.derivative()).map(|g| g.degree() > Some(0)).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::product_poly;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    fn rq(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&ip(&[-1, 0, 1]), &ip(&[-1, 1])).unwrap(), ip(&[-1, 1]));
        assert_eq!(poly_gcd(&ip(&[0, 1]), &ip(&[1, 1])).unwrap(), IntPoly::one());
        let g = &product_poly(3) + &(&product_poly(0) + &product_poly(1));
        assert_eq!(poly_gcd(&g, &g.derivative()).unwrap(), ip(&[4, 4, 1]));
        assert!(poly_gcd(&IntPoly::zero(), &IntPoly::zero()).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&ip(&[-1, 0, 1]).to_rat()).unwrap(), rq(4));
        assert_eq!(discriminant(&ip(&[0, 0, 1]).to_rat()).unwrap(), rq(0));
        let p3 = product_poly(3);
        let f = &p3 + &p3.shift(&BigInt::one());
        assert_eq!(discriminant(&f.to_rat()).unwrap(), rq(0));
        assert_eq!(discriminant(&ip(&[1, 3]).to_rat()).unwrap(), rq(1));
        assert!(discriminant(&ip(&[5]).to_rat()).is_err());
        // x^3 + x + 1 has discriminant -31.
        assert_eq!(discriminant(&ip(&[1, 1, 0, 1]).to_rat()).unwrap(), rq(-31));
    }

    #[test]
    fn squarefree_examples() {
        let x = ip(&[0, 1]);
        let x2 = ip(&[2, 1]);
        let f = &x * &x2.pow(3);
        let d = squarefree_decomposition(&f).unwrap();
        assert_eq!(d.factors, vec![(x.clone(), 1), (x2.clone(), 3)]);
        let d = squarefree_decomposition(&(&x * &x2.pow(2))).unwrap();
        assert_eq!(d.factors, vec![(x, 1), (x2, 2)]);
        let d = squarefree_decomposition(&ip(&[1, 0, 1])).unwrap();
        assert_eq!(d.factors, vec![(ip(&[1, 0, 1]), 1)]);
        let d = squarefree_decomposition(&ip(&[-12, 0, -3])).unwrap();
        assert_eq!(d.content, BigInt::from(-3));
        assert_eq!(d.recompose(), ip(&[-12, 0, -3]));
    }
}
