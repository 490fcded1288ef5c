//! Summation polynomials f_3, f_4, f_5 and resultants over a polynomial ring.

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;

/// f_3(z1, z2, z3) = (z1 − z2)² z3² − 2((z1 + z2)(z1 z2 + A) + 2B) z3
///                   + (z1 z2 − A)² − 4B(z1 + z2).
pub fn f3(k: &PrimeField, a: Fp, b: Fp) -> MultiPoly<Fp> {
    MultiPoly::parse(
        k,
        &["z1", "z2", "z3"],
        &[("A", a), ("B", b)],
        "z1^2*z3^2 - 2*z1*z2*z3^2 + z2^2*z3^2 \
         - 2*z1^2*z2*z3 - 2*z1*z2^2*z3 - 2*A*z1*z3 - 2*A*z2*z3 - 4*B*z3 \
         + z1^2*z2^2 - 2*A*z1*z2 + A^2 - 4*B*z1 - 4*B*z2",
    )
    .expect("well-formed literal")
}

/// The m-th summation polynomial for y² = x³ + Ax + B, in m variables.
///
/// f_4 = Res_z(f_3(z1, z2, z), f_3(z3, z4, z)) and
/// f_5 = Res_z(f_4(z1, z2, z3, z), f_3(z4, z5, z)).
pub fn semaev(k: &PrimeField, m: usize, a: Fp, b: Fp) -> Result<MultiPoly<Fp>> {
    let disc = k.add(k.mul(k.elem(4), k.pow_u128(a, 3)), k.mul(k.elem(27), k.sqr(b)));
    if disc == Fp::ZERO {
        return Err(Error::InvalidCurve);
    }
    let base = f3(k, a, b);
    match m {
        3 => Ok(base),
        4 | 5 => {
            let prev = semaev(k, m - 1, a, b)?;
            // ring z1..zm, z
            let z = m;
            let left_map: Vec<usize> = (0..m - 2).chain([z]).collect();
            let left = prev.rename(k, m + 1, &left_map);
            let right = base.rename(k, m + 1, &[m - 2, m - 1, z]);
            let r = resultant_in(k, &left, &right, z)?;
            let keep: Vec<usize> = (0..m).chain([usize::MAX]).collect();
            Ok(r.rename(k, m, &keep))
        }
        _ => Err(Error::InvalidInput(format!("summation polynomial f_{m} is not supported (m must be 3, 4 or 5)"))),
    }
}

/// Resultant of `f` and `g` with respect to variable `var`, normalised like
/// [`crate::unipoly::resultant`]: `lc(g)^{deg f} ∏_{g(β)=0} f(β)`.
///
/// A quadratic `g` takes a closed form in the power sums of its roots; anything
/// else goes through a fraction-free Sylvester determinant.
pub fn resultant_in<F: Field>(k: &F, f: &MultiPoly<F::Elem>, g: &MultiPoly<F::Elem>, var: usize) -> Result<MultiPoly<F::Elem>> {
    let fc = f.coefficients_in(k, var);
    let gc = g.coefficients_in(k, var);
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(f.nvars()));
    }
    if gc.len() == 3 {
        return Ok(resultant_quadratic(k, &fc, &gc));
    }
    sylvester_bareiss(k, &fc, &gc)
}

/// a^m ∏ F(β_i) for G = a z² + b z + c with roots β_1, β_2 and deg F = m:
/// Σ F_i² a^{m−i} c^i + Σ_{i<j} F_i F_j a^{m−j} c^i P_{j−i}, where
/// P_k = a^k (β_1^k + β_2^k) obeys P_k = −b P_{k−1} − a c P_{k−2}.
fn resultant_quadratic<F: Field>(k: &F, fc: &[MultiPoly<F::Elem>], gc: &[MultiPoly<F::Elem>]) -> MultiPoly<F::Elem> {
    let nv = gc[0].nvars();
    let m = fc.len() - 1;
    let (c, b, a) = (&gc[0], &gc[1], &gc[2]);
    let one = MultiPoly::constant(k, nv, k.one());
    let powers = |p: &MultiPoly<F::Elem>| {
        let mut v = vec![one.clone()];
        for i in 0..m {
            v.push(v[i].mul(p, k));
        }
        v
    };
    let apow = powers(a);
    let cpow = powers(c);
    let ac = a.mul(c, k);
    let mut psum = vec![MultiPoly::constant(k, nv, k.from_u64(2)), b.neg(k)];
    for i in 2..=m {
        let next = b.mul(&psum[i - 1], k).add(&ac.mul(&psum[i - 2], k), k).neg(k);
        psum.push(next);
    }
    let mut acc = MultiPoly::zero(nv);
    for i in 0..=m {
        if fc[i].is_zero() {
            continue;
        }
        for j in i..=m {
            if fc[j].is_zero() {
                continue;
            }
            let w = if i == j { apow[m - i].mul(&cpow[i], k) } else { apow[m - j].mul(&cpow[i], k).mul(&psum[j - i], k) };
            acc = acc.add(&fc[i].mul(&fc[j], k).mul(&w, k), k);
        }
    }
    acc
}

/// Sylvester determinant with the rows of g first, by Bareiss elimination.
fn sylvester_bareiss<F: Field>(k: &F, fc: &[MultiPoly<F::Elem>], gc: &[MultiPoly<F::Elem>]) -> Result<MultiPoly<F::Elem>> {
    let nv = fc[0].nvars();
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(MultiPoly::constant(k, nv, k.one()));
    }
    let mut rows: Vec<Vec<MultiPoly<F::Elem>>> = Vec::with_capacity(size);
    for (coeffs, count) in [(gc, m), (fc, n)] {
        for r in 0..count {
            let mut row = vec![MultiPoly::zero(nv); size];
            for (i, c) in coeffs.iter().rev().enumerate() {
                row[r + i] = c.clone();
            }
            rows.push(row);
        }
    }
    let mut negate = false;
    let mut prev = MultiPoly::constant(k, nv, k.one());
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return Ok(MultiPoly::zero(nv));
        };
        if piv != col {
            rows.swap(piv, col);
            negate = !negate;
        }
        for r in col + 1..size {
            for c in col + 1..size {
                let t = rows[col][col].mul(&rows[r][c], k).sub(&rows[r][col].mul(&rows[col][c], k), k);
                rows[r][c] = t.div_exact(&prev, k)?;
            }
            rows[r][col] = MultiPoly::zero(nv);
        }
        prev = rows[col][col].clone();
    }
    Ok(if negate { prev.neg(k) } else { prev })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::{self, UniPoly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn f3_shape() {
        let k = PrimeField::new(101).unwrap();
        let f = f3(&k, k.elem(1), k.elem(1));
        assert!(f.is_symmetric(&k));
        assert_eq!(f.total_degree(), Some(4));
        assert!((0..3).all(|i| f.degree_in(i) == Some(2)));
        // z1 = z2 kills the z3² coefficient
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let z = k.random(&mut rng);
            let u = f.specialize(&k, &[z, z, k.zero()], 2);
            assert!(u.degree().is_none_or(|d| d < 2));
        }
    }

    #[test]
    fn rejects_singular_curve() {
        let k = PrimeField::new(101).unwrap();
        // 4·(−3)³ + 27·2² = 0
        assert_eq!(semaev(&k, 3, k.from_i128(-3), k.elem(2)), Err(Error::InvalidCurve));
        assert!(semaev(&k, 6, k.elem(1), k.elem(1)).is_err());
    }

    #[test]
    fn degrees_and_symmetry() {
        let k = PrimeField::new((1 << 61) - 1).unwrap();
        let (a, b) = (k.elem(1), k.elem(5));
        for (m, per_var) in [(3usize, 2u32), (4, 4), (5, 8)] {
            let f = semaev(&k, m, a, b).unwrap();
            assert!(f.is_symmetric(&k), "f_{m} not symmetric");
            assert_eq!(f.total_degree(), Some((m as u32 - 1) * per_var));
            for i in 0..m {
                assert_eq!(f.degree_in(i), Some(per_var));
            }
        }
    }

    #[test]
    fn bareiss_agrees_with_quadratic_closed_form() {
        let k = PrimeField::new(1_000_003).unwrap();
        let (a, b) = (k.elem(3), k.elem(7));
        let base = f3(&k, a, b);
        let left = base.rename(&k, 5, &[0, 1, 4]);
        let right = base.rename(&k, 5, &[2, 3, 4]);
        let fc = left.coefficients_in(&k, 4);
        let gc = right.coefficients_in(&k, 4);
        assert_eq!(resultant_quadratic(&k, &fc, &gc), sylvester_bareiss(&k, &fc, &gc).unwrap());
        // general path with the quadratic in the first slot
        let swapped = resultant_in(&k, &right, &left, 4).unwrap();
        assert_eq!(swapped, sylvester_bareiss(&k, &gc, &fc).unwrap());
        assert_eq!(swapped, resultant_quadratic(&k, &fc, &gc));
    }

    #[test]
    fn specialization_commutes_with_resultant() {
        // Res_z(f, g) evaluated at a point equals the univariate resultant of
        // the specialised polynomials whenever leading coefficients survive.
        let k = PrimeField::new(10007).unwrap();
        let (a, b) = (k.elem(2), k.elem(9));
        let base = f3(&k, a, b);
        let f4 = semaev(&k, 4, a, b).unwrap();
        let f5 = semaev(&k, 5, a, b).unwrap();
        let left = f4.rename(&k, 6, &[0, 1, 2, 5]);
        let right = base.rename(&k, 6, &[3, 4, 5]);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let pt: Vec<Fp> = (0..6).map(|_| k.random(&mut rng)).collect();
            let uf: UniPoly<Fp> = left.specialize(&k, &pt, 5);
            let ug: UniPoly<Fp> = right.specialize(&k, &pt, 5);
            assert_eq!(uf.degree(), Some(4));
            assert_eq!(ug.degree(), Some(2));
            assert_eq!(unipoly::resultant(&uf, &ug, &k), f5.eval(&k, &pt[..5]));
        }
    }
}
