//! The finite-field interface shared by the polynomial code.
//!
//! Fields are passed around as explicit context objects; elements are plain
//! `Copy` values that only make sense together with the context that made them.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::Result;

pub trait Field: Clone + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_u64(&self, v: u64) -> Self::Elem;

    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;

    fn sqr(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The prime `q`; every field here has prime characteristic.
    fn characteristic(&self) -> u128;

    /// Degree over the prime field, so the field has `q^degree` elements.
    fn degree(&self) -> u32;

    /// `a^q`.
    fn frobenius(&self, a: Self::Elem) -> Self::Elem;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree())
    }

    fn pow(&self, a: Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.sqr(acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    fn pow_u128(&self, a: Self::Elem, e: u128) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..(128 - e.leading_zeros())).rev() {
            acc = self.sqr(acc);
            if (e >> i) & 1 == 1 {
                acc = self.mul(acc, a);
            }
        }
        acc
    }
}
