//! Small exact-arithmetic helpers shared by the labeling and
//! verification code.

use num::{BigInt, Integer, One, Zero};

pub(crate) fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

pub(crate) fn pow_big(base: usize, exp: u64) -> BigInt {
    let mut result = BigInt::one();
    let mut base = BigInt::from(base);
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    result
}

/// Division that must be exact; used where divisibility is a theorem
/// (hook products divide factorials).
pub(crate) fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "internal invariant violation: {num} is not divisible by {den}"
    );
    q
}

/// Memoized powers of a fixed base, grown on demand.
pub(crate) struct PowerTable {
    base: BigInt,
    memo: Vec<BigInt>,
}

impl PowerTable {
    pub(crate) fn new(base: usize) -> Self {
        PowerTable {
            base: BigInt::from(base),
            memo: vec![BigInt::one()],
        }
    }

    pub(crate) fn get(&mut self, exp: usize) -> &BigInt {
        while self.memo.len() <= exp {
            let next = self.memo.last().unwrap() * &self.base;
            self.memo.push(next);
        }
        &self.memo[exp]
    }
}
