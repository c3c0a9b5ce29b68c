//! Exact nonnegative integer counts (group orders, indices).

pub use num_bigint::BigUint as BigCount;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// `n!`, exactly.
pub fn factorial(n: u64) -> BigCount {
    (2..=n).fold(BigCount::one(), |acc, k| acc * k)
}

/// Order of the alternating group on `n` points (`n!/2` for `n >= 2`).
pub fn alternating_order(n: u64) -> BigCount {
    if n < 2 {
        BigCount::one()
    } else {
        factorial(n) / 2u32
    }
}

pub fn lcm(a: &BigCount, b: &BigCount) -> BigCount {
    if a.is_zero() || b.is_zero() {
        return BigCount::zero();
    }
    a.lcm(b)
}

/// True for 1, 2, 4, 8, ...
pub fn is_power_of_two(c: &BigCount) -> bool {
    !c.is_zero() && c.count_ones() == 1
}

pub fn divides(d: &BigCount, n: &BigCount) -> bool {
    !d.is_zero() && (n % d).is_zero()
}

/// Converts to `usize` when the value fits.
pub fn to_usize(c: &BigCount) -> Option<usize> {
    c.to_usize()
}

/// Serde adapter writing counts as decimal strings.
pub mod decimal {
    use alloc::string::{String, ToString};

    use serde::{Deserialize, Deserializer, Serializer};

    use super::BigCount;

    pub fn serialize<S: Serializer>(c: &BigCount, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigCount, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
