//! Exact integer, rational and univariate polynomial arithmetic.

mod algebra;
mod bounds;
mod int;
mod interval;
mod poly;
mod roots;
mod sturm;

pub use algebra::{
    discriminant, discriminant_int, has_multiple_root, poly_gcd, rat_gcd, resultant, squarefree_decomposition,
    squarefree_part, SquarefreeDecomposition,
};
pub use bounds::{positive_root_bound, root_bound_hull};
pub use int::{
    checked_pow_u128, int_nth_root, isqrt_u128, maximal_power, maybe_square, maybe_square_u128, nth_root_floor,
    nth_root_u128, perfect_power, perfect_power_test, power_roots,
};
pub use interval::IntInterval;
pub use poly::{product_poly, IntPoly, Named, Poly, RatPoly, Ring};
pub use roots::{integer_roots, rational_roots, RootMultiset};
pub use sturm::{cauchy_bound, real_root_hull, real_root_hull_rat, SturmChain};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an integer constant.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
