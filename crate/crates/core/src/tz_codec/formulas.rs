//! Straight-line programs for the compressed coordinates and the relations
//! between them. `x` is the coordinate vector of an x-coordinate over F_q.

use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;

/// (s1, s2) = (3x0, 3x0² − 3μx1x2).
pub fn s_coords_n3(k: &PrimeField, mu: Fp, x: &[Fp]) -> [Fp; 2] {
    let three = k.elem(3);
    let x0sq = k.sqr(x[0]);
    let prod = k.mul(x[1], x[2]);
    [k.mul(three, x[0]), k.mul(three, k.sub(x0sq, k.mul(mu, prod)))]
}

/// (t1, t2) = (x0, x1x2).
pub fn t_coords_n3(k: &PrimeField, x: &[Fp]) -> [Fp; 2] {
    [x[0], k.mul(x[1], x[2])]
}

/// t3 = x1³ + μx2³.
pub fn t3_n3(k: &PrimeField, mu: Fp, x: &[Fp]) -> Fp {
    k.add(k.pow_u128(x[1], 3), k.mul(mu, k.pow_u128(x[2], 3)))
}

/// s3 solving g_3(s1, s2, s3) = 0: (s2(s2 − 2A) − 4Bs1 + A²) / (4s1).
pub fn s3_from_g3(k: &PrimeField, a: Fp, b: Fp, s1: Fp, s2: Fp) -> Option<Fp> {
    let den = k.mul(k.elem(4), s1);
    let inv = k.inv(den).ok()?;
    let num = k.add(k.sub(k.mul(s2, k.sub(s2, k.add(a, a))), k.mul(k.elem(4), k.mul(b, s1))), k.sqr(a));
    Some(k.mul(num, inv))
}

/// t3 = (−3t1⁴ + (18μt1² + 9μ²t2 + 6Aμ)t2 − 12Bt1 − 6At1² + A²) / (12μt1).
pub fn t3_from_g3(k: &PrimeField, a: Fp, b: Fp, mu: Fp, t1: Fp, t2: Fp) -> Option<Fp> {
    let inv = k.inv(k.mul(k.elem(12), k.mul(mu, t1))).ok()?;
    let t1sq = k.sqr(t1);
    let inner = k.add(k.add(k.mul(k.elem(18), k.mul(mu, t1sq)), k.mul(k.elem(9), k.mul(k.sqr(mu), t2))), k.mul(k.elem(6), k.mul(a, mu)));
    let mut num = k.neg(k.mul(k.elem(3), k.sqr(t1sq)));
    num = k.add(num, k.mul(inner, t2));
    num = k.sub(num, k.mul(k.elem(12), k.mul(b, t1)));
    num = k.sub(num, k.mul(k.elem(6), k.mul(a, t1sq)));
    num = k.add(num, k.sqr(a));
    Some(k.mul(num, inv))
}

/// s1, s2, s3 in terms of t1, t2, t3 for n = 3.
pub fn s_from_t_n3(k: &PrimeField, mu: Fp, t1: Fp, t2: Fp, t3: Fp) -> [Fp; 3] {
    let three = k.elem(3);
    let mt2 = k.mul(mu, t2);
    [k.mul(three, t1), k.mul(three, k.sub(k.sqr(t1), mt2)), k.add(k.sub(k.pow_u128(t1, 3), k.mul(three, k.mul(t1, mt2))), k.mul(mu, t3))]
}

struct Powers5 {
    p: [[Fp; 6]; 5],
}

impl Powers5 {
    fn new(k: &PrimeField, x: &[Fp]) -> Self {
        let mut p = [[k.one(); 6]; 5];
        for i in 0..5 {
            for e in 1..6 {
                p[i][e] = k.mul(p[i][e - 1], x[i]);
            }
        }
        Powers5 { p }
    }

    /// c · ∏ x_i^{e_i}
    fn term(&self, k: &PrimeField, c: Fp, e: [usize; 5]) -> Fp {
        let mut acc = c;
        for (i, &ei) in e.iter().enumerate() {
            if ei > 0 {
                acc = k.mul(acc, self.p[i][ei]);
            }
        }
        acc
    }

    fn sum(&self, k: &PrimeField, terms: &[(Fp, [usize; 5])]) -> Fp {
        terms.iter().fold(k.zero(), |acc, &(c, e)| k.add(acc, self.term(k, c, e)))
    }
}

/// Integer multiples of powers of μ: `m(c, j)` = c·μ^j.
fn scaled(k: &PrimeField, mu: Fp) -> impl Fn(i128, u32) -> Fp + '_ {
    move |c, j| k.mul(k.from_i128(c), k.pow_u128(mu, j as u128))
}

/// s1..s4 for n = 5.
pub fn s_coords_n5(k: &PrimeField, mu: Fp, x: &[Fp]) -> [Fp; 4] {
    let p = Powers5::new(k, x);
    let m = scaled(k, mu);
    let s1 = k.mul(k.elem(5), x[0]);
    let s2 = p.sum(k, &[(m(10, 0), [2, 0, 0, 0, 0]), (m(-5, 1), [0, 1, 0, 0, 1]), (m(-5, 1), [0, 0, 1, 1, 0])]);
    let s3 = p.sum(
        k,
        &[
            (m(10, 0), [3, 0, 0, 0, 0]),
            (m(5, 2), [0, 0, 0, 2, 1]),
            (m(5, 2), [0, 0, 1, 0, 2]),
            (m(5, 1), [0, 1, 2, 0, 0]),
            (m(5, 1), [0, 2, 0, 1, 0]),
            (m(-15, 1), [1, 1, 0, 0, 1]),
            (m(-15, 1), [1, 0, 1, 1, 0]),
        ],
    );
    let s4 = p.sum(
        k,
        &[
            (m(5, 0), [4, 0, 0, 0, 0]),
            (m(-15, 1), [2, 1, 0, 0, 1]),
            (m(-15, 1), [2, 0, 1, 1, 0]),
            (m(-5, 1), [0, 3, 1, 0, 0]),
            (m(-5, 2), [0, 1, 0, 3, 0]),
            (m(-5, 2), [0, 0, 3, 0, 1]),
            (m(-5, 3), [0, 0, 0, 1, 3]),
            (m(5, 2), [0, 0, 2, 2, 0]),
            (m(5, 2), [0, 2, 0, 0, 2]),
            (m(10, 1), [1, 2, 0, 1, 0]),
            (m(10, 1), [1, 1, 2, 0, 0]),
            (m(10, 2), [1, 0, 0, 2, 1]),
            (m(10, 2), [1, 0, 1, 0, 2]),
            (m(-5, 2), [0, 1, 1, 1, 1]),
        ],
    );
    [s1, s2, s3, s4]
}

/// t1..t4 for n = 5.
pub fn t_coords_n5(k: &PrimeField, mu: Fp, x: &[Fp]) -> [Fp; 4] {
    let p = Powers5::new(k, x);
    let m = scaled(k, mu);
    let t2 = p.sum(k, &[(m(1, 0), [0, 1, 0, 0, 1]), (m(1, 0), [0, 0, 1, 1, 0])]);
    let t3 = p.sum(k, &[(m(1, 0), [0, 2, 0, 1, 0]), (m(1, 0), [0, 1, 2, 0, 0]), (m(1, 1), [0, 0, 0, 2, 1]), (m(1, 1), [0, 0, 1, 0, 2])]);
    let t4 = p.sum(
        k,
        &[
            (m(1, 1), [0, 0, 2, 2, 0]),
            (m(1, 1), [0, 2, 0, 0, 2]),
            (m(-1, 1), [0, 1, 0, 3, 0]),
            (m(-1, 0), [0, 3, 1, 0, 0]),
            (m(-1, 1), [0, 0, 3, 0, 1]),
            (m(-1, 2), [0, 0, 0, 1, 3]),
            (m(-1, 1), [0, 1, 1, 1, 1]),
        ],
    );
    [x[0], t2, t3, t4]
}

/// t5 for n = 5.
pub fn t5_n5(k: &PrimeField, mu: Fp, x: &[Fp]) -> Fp {
    let p = Powers5::new(k, x);
    let m = scaled(k, mu);
    p.sum(
        k,
        &[
            (m(1, 0), [0, 5, 0, 0, 0]),
            (m(1, 1), [0, 0, 5, 0, 0]),
            (m(1, 2), [0, 0, 0, 5, 0]),
            (m(1, 3), [0, 0, 0, 0, 5]),
            (m(5, 1), [0, 2, 1, 2, 0]),
            (m(5, 1), [0, 2, 2, 0, 1]),
            (m(5, 2), [0, 0, 2, 1, 2]),
            (m(5, 2), [0, 1, 0, 2, 2]),
            (m(-5, 1), [0, 3, 0, 1, 1]),
            (m(-5, 2), [0, 0, 1, 3, 1]),
            (m(-5, 2), [0, 1, 1, 0, 3]),
            (m(-5, 1), [0, 1, 3, 1, 0]),
        ],
    )
}

/// s1..s4 from t1..t4 for n = 5.
pub fn s_from_t_n5(k: &PrimeField, mu: Fp, t: &[Fp]) -> [Fp; 4] {
    let m = scaled(k, mu);
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let t1_2 = k.sqr(t1);
    let t1_3 = k.mul(t1_2, t1);
    let s1 = k.mul(k.elem(5), t1);
    let s2 = k.add(k.mul(m(10, 0), t1_2), k.mul(m(-5, 1), t2));
    let s3 = k.add(k.add(k.mul(m(10, 0), t1_3), k.mul(m(-15, 1), k.mul(t1, t2))), k.mul(m(5, 1), t3));
    let s4 = k.add(
        k.add(k.mul(m(5, 0), k.sqr(t1_2)), k.mul(m(-15, 1), k.mul(t1_2, t2))),
        k.add(k.mul(m(10, 1), k.mul(t1, t3)), k.mul(m(5, 1), t4)),
    );
    [s1, s2, s3, s4]
}

/// s5 = t1⁵ − 5μt1³t2 + 5μt1²t3 + 5μt1t4 + μt5.
pub fn s5_from_t_n5(k: &PrimeField, mu: Fp, t: &[Fp], t5: Fp) -> Fp {
    let m = scaled(k, mu);
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let t1_2 = k.sqr(t1);
    let t1_3 = k.mul(t1_2, t1);
    let mut s = k.mul(t1_3, t1_2);
    s = k.add(s, k.mul(m(-5, 1), k.mul(t1_3, t2)));
    s = k.add(s, k.mul(m(5, 1), k.mul(t1_2, t3)));
    s = k.add(s, k.mul(m(5, 1), k.mul(t1, t4)));
    k.add(s, k.mul(mu, t5))
}
