//! The closed-form functions bounding the bistable rank and the jump
//! threshold in terms of the pumpkin number.

use num_bigint::BigUint;
use num_rational::Ratio;

/// `f(k) = (k³ + k²)^(k² + 1) + 1`, the bistable rank ceiling.
pub fn bound_f(k: u32) -> BigUint {
    let k = BigUint::from(k);
    let base = k.pow(3) + k.pow(2);
    let exp = k.pow(2) + 1u32;
    let exp = u32::try_from(&exp).expect("exponent fits in 32 bits for any tractable k");
    base.pow(exp) + 1u32
}

/// `g1(k) = k / 2`, the jump threshold floor, kept as an exact fraction.
pub fn bound_g1(k: u64) -> Ratio<u64> {
    Ratio::new(k, 2)
}

/// `g2 = f`, the jump threshold ceiling.
pub fn bound_g2(k: u32) -> BigUint {
    bound_f(k)
}
