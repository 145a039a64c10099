//! Exact comparisons involving base-2 logarithms of integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rational bounds `lo <= log2(m) <= hi` with `hi - lo <= 2^-bits`.
///
/// Uses the square-and-halve digit recurrence on a fixed-point mantissa,
/// rounding the running value down for the lower bound and up for the upper.
pub fn log2_bounds(m: &BigUint, bits: u32) -> (BigRational, BigRational) {
    assert!(!m.is_zero(), "log2 of zero");
    let e = m.bits() - 1;
    let int_part = BigRational::from_integer(BigInt::from(e));
    if m.count_ones() == 1 {
        return (int_part.clone(), int_part);
    }
    let prec = bits as u64 + 64;
    let one = BigUint::one() << prec;
    let two = &one << 1u32;
    // mantissa in [1, 2) scaled by 2^prec, rounded both ways
    let scaled = m << prec;
    let divisor = BigUint::one() << e;
    let (q, r) = scaled.div_rem(&divisor);
    let mut lo = q.clone();
    let mut hi = if r.is_zero() { q } else { q + 1u32 };
    let mut lo_digits = BigUint::zero();
    let mut hi_digits = BigUint::zero();
    for _ in 0..bits {
        lo = (&lo * &lo) >> prec;
        let sq = &hi * &hi;
        hi = (&sq >> prec) + if (&sq % &one).is_zero() { 0u32 } else { 1u32 };
        lo_digits <<= 1u32;
        hi_digits <<= 1u32;
        if lo >= two {
            lo_digits += 1u32;
            lo >>= 1u32;
        }
        if hi >= two {
            hi_digits += 1u32;
            hi = (&hi + 1u32) >> 1u32;
        }
    }
    let denom = BigInt::one() << bits;
    let lo_frac = BigRational::new(BigInt::from(lo_digits), denom.clone());
    // every remaining digit could be 1
    let hi_frac = BigRational::new(BigInt::from(hi_digits) + 1, denom);
    (&int_part + lo_frac, int_part + hi_frac)
}

/// Decides `t <= c * log2(m)` exactly for rational `t` and positive integer
/// `c`, refining the logarithm until the answer is certain.
pub fn le_multiple_of_log2(t: &BigRational, c: u32, m: &BigUint) -> bool {
    if !t.is_positive() {
        return true;
    }
    let c = BigRational::from_integer(BigInt::from(c));
    let mut bits = 64;
    loop {
        let (lo, hi) = log2_bounds(m, bits);
        if *t <= &c * &lo {
            return true;
        }
        if *t > &c * &hi {
            return false;
        }
        if lo == hi {
            return *t <= c * lo;
        }
        // log2 of a non-power of two is irrational, so this terminates
        bits *= 2;
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

/// `log2(m)` as a float, accurate for integers of any size.
pub fn log2_f64(m: &BigUint) -> f64 {
    if m.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = m.bits();
    if bits <= 1000 {
        return m.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (m >> shift).to_f64().unwrap().log2() + shift as f64
}
