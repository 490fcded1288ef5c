//! Weil restriction from F_{q^n} = F_q[ζ]/(ζ^n − μ) down to F_q.
//!
//! With x = Σ x_i ζ^i and x_i ∈ F_q, the conjugate x^{q^k} is the linear form
//! Σ φ^k(ζ^i) x_i. Substituting these forms into a polynomial in n variables,
//! reducing modulo x_i^q − x_i and splitting coefficients along 1, ζ, …, ζ^{n−1}
//! gives n polynomials over F_q.

use super::symmetric::elementary;
use super::MultiPoly;
use crate::error::{Error, Result};
use crate::ff_ext::ExtField;
use crate::ff_prime::Fp;
use crate::field::Field;

/// The ζ-components of f(x, x^q, …, x^{q^{n−1}}) in the variables x_0..x_{n−1}.
pub fn weil_restrict(ext: &ExtField, f: &MultiPoly<Fp>) -> Result<Vec<MultiPoly<Fp>>> {
    let n = ext.n();
    if f.nvars() != n {
        return Err(Error::InvalidInput(format!("expected a polynomial in {n} variables, got {}", f.nvars())));
    }
    let base = ext.base();
    let conj: Vec<MultiPoly<_>> = (0..n)
        .map(|k| {
            let terms = (0..n).map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                (super::pack(&e), ext.frobenius_pow(ext.monomial(i, base.one()), k))
            });
            MultiPoly::from_terms(ext, n, terms)
        })
        .collect();
    let lifted = f.map_coeffs(ext, |c| ext.from_base(c));
    let expanded = lifted.substitute(ext, n, &conj).reduce_exponents(ext, base.modulus());
    Ok((0..n).map(|j| expanded.map_coeffs(base, |c| c.coord(j))).collect())
}

/// The single F_q-equation coming from f_3 when n = 3.
pub fn weil_restrict_f3(ext: &ExtField, a: Fp, b: Fp) -> Result<MultiPoly<Fp>> {
    if ext.n() != 3 {
        return Err(Error::InvalidParams("the restriction of f_3 needs n = 3".into()));
    }
    let f = super::semaev::semaev(ext.base(), 3, a, b)?;
    rational_component(weil_restrict(ext, &f)?)
}

/// ẽ_1, …, ẽ_n: the Weil restrictions of e_i(x, x^q, …, x^{q^{n−1}}).
pub fn restricted_symmetric_functions(ext: &ExtField) -> Result<Vec<MultiPoly<Fp>>> {
    let n = ext.n();
    (1..=n).map(|i| rational_component(weil_restrict(ext, &elementary(ext.base(), n, i))?)).collect()
}

/// Component 0, after checking the others vanish.
fn rational_component(parts: Vec<MultiPoly<Fp>>) -> Result<MultiPoly<Fp>> {
    if parts[1..].iter().any(|p| !p.is_zero()) {
        return Err(Error::Internal("symmetric expression has a non-rational Weil component".into()));
    }
    Ok(parts.into_iter().next().expect("n ≥ 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff_prime::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn restricted_functions_match_conjugate_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (q, n) in [(7u128, 3usize), (31, 3), (11, 5), (31, 5), (13, 2)] {
            let ext = ExtField::with_default_mu(PrimeField::new(q).unwrap(), n).unwrap();
            let base = *ext.base();
            let es = restricted_symmetric_functions(&ext).unwrap();
            for (i, e) in es.iter().enumerate() {
                assert!(e.is_homogeneous());
                assert_eq!(e.total_degree(), Some(i as u32 + 1));
            }
            for _ in 0..50 {
                let x = ext.random(&mut rng);
                let conj = ext.conjugates(x);
                for (i, e) in es.iter().enumerate() {
                    let direct = elementary(&ext, n, i + 1).eval(&ext, &conj);
                    assert!(ext.is_base(direct));
                    assert_eq!(e.eval(&base, ext.coords(&x)), direct.coord(0));
                }
            }
        }
    }

    #[test]
    fn restriction_requires_matching_arity() {
        let ext = ExtField::with_default_mu(PrimeField::new(7).unwrap(), 3).unwrap();
        let f = elementary(ext.base(), 2, 1);
        assert!(weil_restrict(&ext, &f).is_err());
        let ext5 = ExtField::with_default_mu(PrimeField::new(11).unwrap(), 5).unwrap();
        assert!(weil_restrict_f3(&ext5, ext5.base().one(), ext5.base().one()).is_err());
    }
}
