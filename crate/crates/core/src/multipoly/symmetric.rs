//! Rewriting symmetric polynomials in the elementary symmetric polynomials.
//!
//! The elimination runs on coefficients of monomial symmetric functions m_λ,
//! i.e. on the sorted-exponent monomials only. Products of elementary
//! polynomials are expanded in that basis with the rule
//! `[m_μ](P · e_k) = Σ_{v ⊆ [n], |v| = k} [m_{sort(μ − v)}](P)`.

use std::collections::{BTreeMap, HashMap};

use super::{pack, unpack, Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::field::Field;

/// e_i(z_1, …, z_n) for 1 ≤ i ≤ n.
pub fn elementary<F: Field>(k: &F, n: usize, i: usize) -> MultiPoly<F::Elem> {
    assert!(i >= 1 && i <= n);
    let terms = subsets(n, i).into_iter().map(|v| (pack(&v), k.one()));
    MultiPoly::from_terms(k, n, terms)
}

/// g with f(z) = g(e_1(z), …, e_n(z)); variable i of g stands for e_{i+1}.
pub fn symmetrize<F: Field>(k: &F, f: &MultiPoly<F::Elem>) -> Result<MultiPoly<F::Elem>> {
    let n = f.nvars();
    if !f.is_symmetric(k) {
        return Err(Error::NotSymmetric);
    }
    let mut table: BTreeMap<Monomial, F::Elem> = f.terms().iter().filter(|&&(m, _)| is_sorted_desc(&unpack(m, n))).copied().collect();
    let subsets: Vec<Vec<Vec<u32>>> = (0..=n).map(|size| subsets(n, size)).collect();
    let mut cache: HashMap<Vec<u32>, HashMap<Monomial, F::Elem>> = HashMap::new();
    let mut out = Vec::new();
    while let Some((&lam, &c)) = table.iter().next_back() {
        let parts = unpack(lam, n);
        let beta: Vec<u32> = (0..n).map(|i| parts[i] - parts.get(i + 1).copied().unwrap_or(0)).collect();
        let expansion = expand(k, &beta, &subsets, &mut cache);
        for (&mu, &v) in expansion {
            let slot = table.entry(mu).or_insert_with(|| k.zero());
            *slot = k.sub(*slot, k.mul(c, v));
            if k.is_zero(*slot) {
                table.remove(&mu);
            }
        }
        if table.contains_key(&lam) {
            return Err(Error::Internal("symmetrization failed to cancel the leading term".into()));
        }
        out.push((pack(&beta), c));
    }
    Ok(MultiPoly::from_terms(k, n, out))
}

fn is_sorted_desc(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn sorted_desc(mut e: Vec<u32>) -> Vec<u32> {
    e.sort_unstable_by(|a, b| b.cmp(a));
    e
}

/// All 0/1 vectors of length n with `size` ones.
fn subsets(n: usize, size: usize) -> Vec<Vec<u32>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == size).map(|m| (0..n).map(|i| (m >> i) & 1).collect()).collect()
}

/// m-basis expansion of e_1^{β_1} ⋯ e_n^{β_n}, memoised on β.
fn expand<'a, F: Field>(
    k: &F,
    beta: &[u32],
    subsets: &[Vec<Vec<u32>>],
    cache: &'a mut HashMap<Vec<u32>, HashMap<Monomial, F::Elem>>,
) -> &'a HashMap<Monomial, F::Elem> {
    if !cache.contains_key(beta) {
        let value = match beta.iter().rposition(|&b| b > 0) {
            None => HashMap::from([(pack(&vec![0; beta.len()]), k.one())]),
            Some(i) => {
                let mut smaller = beta.to_vec();
                smaller[i] -= 1;
                let prev = expand(k, &smaller, subsets, cache).clone();
                multiply_by_elementary(k, &prev, &subsets[i + 1], beta.len())
            }
        };
        cache.insert(beta.to_vec(), value);
    }
    &cache[beta]
}

fn multiply_by_elementary<F: Field>(
    k: &F,
    prev: &HashMap<Monomial, F::Elem>,
    subsets: &[Vec<u32>],
    n: usize,
) -> HashMap<Monomial, F::Elem> {
    let mut targets: Vec<Vec<u32>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &lam in prev.keys() {
        let l = unpack(lam, n);
        for v in subsets {
            let mu = sorted_desc(l.iter().zip(v).map(|(a, b)| a + b).collect());
            if seen.insert(pack(&mu)) {
                targets.push(mu);
            }
        }
    }
    let mut out = HashMap::with_capacity(targets.len());
    for mu in targets {
        let mut acc = k.zero();
        for v in subsets {
            if mu.iter().zip(v).any(|(&a, &b)| a < b) {
                continue;
            }
            let lam = sorted_desc(mu.iter().zip(v).map(|(a, b)| a - b).collect());
            if let Some(&c) = prev.get(&pack(&lam)) {
                acc = k.add(acc, c);
            }
        }
        if !k.is_zero(acc) {
            out.insert(pack(&mu), acc);
        }
    }
    out
}
