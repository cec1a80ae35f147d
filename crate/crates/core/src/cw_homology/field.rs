use crate::error::{Error, Result};

/// A prime `p < 2^16`, the characteristic of the coefficient field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);

    pub fn new(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && p < (1 << 16) && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if is_prime {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Arithmetic in `GF(p)` with a precomputed inverse table.
pub(crate) struct Field {
    p: u32,
    inv: Vec<u32>,
}

impl Field {
    pub(crate) fn new(p: Prime) -> Self {
        let p = p.get();
        let mut inv = vec![0; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| a * b % p == 1).expect("p is prime");
        }
        Field { p, inv }
    }

    pub(crate) fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub(crate) fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    /// `a + s * b`.
    pub(crate) fn add_scaled(&self, a: u32, s: u32, b: u32) -> u32 {
        (a + s * b) % self.p
    }
}
