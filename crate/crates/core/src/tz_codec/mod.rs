//! Compression of trace zero points to n − 1 elements of F_q, and recovery of
//! the class {±φ^i(P)} from the compressed form.

pub mod encoding;
pub mod formulas;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::ec::{Curve, CurvePoint, GroupOrders};
use crate::error::{Error, Result};
use crate::ff_ext::ExtElement;
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;
use crate::multipoly::{self, MultiPoly};
use crate::unipoly::{self, UniPoly};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Elementary symmetric functions of the conjugates of x.
    S,
    /// The equivalent coordinates with cheaper compression.
    T,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompressedPoint {
    variant: Variant,
    n: u8,
    coords: [Fp; 4],
}

impl CompressedPoint {
    /// `coords` must hold n − 1 elements for n ∈ {3, 5}.
    pub fn new(variant: Variant, coords: &[Fp]) -> Result<Self> {
        let n = match coords.len() {
            2 => 3,
            4 => 5,
            l => return Err(Error::InvalidInput(format!("a compressed point has 2 or 4 coordinates, got {l}"))),
        };
        let mut c = [Fp::ZERO; 4];
        c[..coords.len()].copy_from_slice(coords);
        Ok(CompressedPoint { variant, n, coords: c })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn coords(&self) -> &[Fp] {
        &self.coords[..self.n as usize - 1]
    }
}

/// The orbit {±φ^i(P)} of a point, sorted; the first member is canonical.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointClass {
    members: Vec<CurvePoint>,
}

impl PointClass {
    pub fn canonical(&self) -> CurvePoint {
        self.members[0]
    }

    pub fn members(&self) -> &[CurvePoint] {
        &self.members
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        self.members.binary_search(p).is_ok()
    }

    /// Distinct x-coordinates of the members, sorted.
    pub fn x_coords(&self) -> Vec<ExtElement> {
        let mut xs: Vec<_> = self.members.iter().filter_map(|p| p.x()).collect();
        xs.dedup();
        xs
    }
}

/// Time spent in root extraction during one decompression.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompressProfile {
    pub total: Duration,
    pub root_extraction: Duration,
}

#[derive(Clone, Debug)]
pub struct TzParams {
    curve: Curve,
    g: MultiPoly<Fp>,
    /// Coefficients of g_n in its last variable.
    by_last_table: CoefficientTable,
    exceptional: Vec<ExtElement>,
    orders: Option<GroupOrders>,
    mu_inv: Fp,
    third: Fp,
}

/// The coefficients of g_5 in s_5 as flat term lists over s_1..s_4, sharing
/// one table of powers when evaluated.
#[derive(Clone, Debug, Default)]
struct CoefficientTable {
    terms: Vec<Vec<(Fp, [u8; 4])>>,
    degree: usize,
}

impl CoefficientTable {
    fn new(polys: &[MultiPoly<Fp>]) -> Self {
        let mut degree = 0;
        let terms = polys
            .iter()
            .map(|g| {
                g.terms()
                    .iter()
                    .map(|&(m, c)| {
                        let e = [0, 1, 2, 3].map(|i| multipoly::exponent(m, i) as u8);
                        degree = degree.max(*e.iter().max().unwrap() as usize);
                        (c, e)
                    })
                    .collect()
            })
            .collect();
        CoefficientTable { terms, degree }
    }

    fn eval(&self, k: &PrimeField, s: &[Fp; 4]) -> Vec<Fp> {
        let mut powers = [[k.one(); 16]; 4];
        for (row, &v) in powers.iter_mut().zip(s) {
            for e in 1..=self.degree {
                row[e] = k.mul(row[e - 1], v);
            }
        }
        self.terms
            .iter()
            .map(|terms| {
                terms.iter().fold(k.zero(), |acc, &(c, e)| {
                    let mut t = c;
                    for (row, &ei) in powers.iter().zip(&e) {
                        if ei > 0 {
                            t = k.mul(t, row[ei as usize]);
                        }
                    }
                    k.add(acc, t)
                })
            })
            .collect()
    }
}

struct Stopwatch {
    spent: Option<Duration>,
}

impl Stopwatch {
    fn time<T>(&mut self, f: impl FnOnce() -> T) -> T {
        match self.spent.as_mut() {
            None => f(),
            Some(acc) => {
                let start = Instant::now();
                let out = f();
                *acc += start.elapsed();
                out
            }
        }
    }
}

impl TzParams {
    /// Builds f_n, its symmetrization g_n and, for n = 5, the exceptional set.
    pub fn new(curve: Curve) -> Result<Self> {
        let n = curve.n();
        if n != 3 && n != 5 {
            return Err(Error::InvalidParams(format!("compression needs n = 3 or n = 5, got {n}")));
        }
        let k = *curve.base();
        let f = multipoly::semaev(&k, n, curve.a(), curve.b())?;
        let g = multipoly::symmetrize(&k, &f)?;
        let expected_last = if n == 3 { 1 } else { 6 };
        if g.degree_in(n - 1) != Some(expected_last) {
            return Err(Error::Internal(format!(
                "g_{n} has degree {:?} in its last variable, expected {expected_last}",
                g.degree_in(n - 1)
            )));
        }
        let by_last_table = if n == 5 { CoefficientTable::new(&g.coefficients_in(&k, n - 1)) } else { CoefficientTable::default() };
        let exceptional = if n == 5 { curve.torsion_exceptional_set()? } else { Vec::new() };
        let mu_inv = k.inv(curve.ext().mu())?;
        let third = k.inv(k.elem(3))?;
        Ok(TzParams { curve, g, by_last_table, exceptional, orders: None, mu_inv, third })
    }

    pub fn with_orders(mut self, orders: GroupOrders) -> Self {
        self.orders = Some(orders);
        self
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn n(&self) -> usize {
        self.curve.n()
    }

    fn k(&self) -> &PrimeField {
        self.curve.base()
    }

    fn mu(&self) -> Fp {
        self.curve.ext().mu()
    }

    /// g_n in the variables s_1..s_n.
    pub fn symmetrized_equation(&self) -> &MultiPoly<Fp> {
        &self.g
    }

    /// The set L of exceptional x-coordinates (empty for n = 3).
    pub fn exceptional_set(&self) -> &[ExtElement] {
        &self.exceptional
    }

    pub fn orders(&self) -> Option<&GroupOrders> {
        self.orders.as_ref()
    }

    /// A random point of T_n other than O.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> CurvePoint {
        loop {
            let p = self.curve.random_trace_zero(rng);
            if !p.is_infinity() {
                return p;
            }
        }
    }

    /// Compresses after checking that P lies in T_n.
    pub fn compress(&self, p: &CurvePoint, variant: Variant) -> Result<CompressedPoint> {
        if !p.is_infinity() {
            if !self.curve.is_on_curve(p) {
                return Err(Error::NotOnCurve);
            }
            if !self.curve.in_trace_zero(p) {
                return Err(Error::NotTraceZero);
            }
        }
        self.compress_unchecked(p, variant)
    }

    /// Compresses without the membership check.
    pub fn compress_unchecked(&self, p: &CurvePoint, variant: Variant) -> Result<CompressedPoint> {
        let x = p.x().ok_or(Error::CannotCompressIdentity)?;
        let k = self.k();
        let xs = self.curve.ext().coords(&x);
        let mut c = [Fp::ZERO; 4];
        match (self.n(), variant) {
            (3, Variant::S) => c[..2].copy_from_slice(&formulas::s_coords_n3(k, self.mu(), xs)),
            (3, Variant::T) => c[..2].copy_from_slice(&formulas::t_coords_n3(k, xs)),
            (5, Variant::S) => c = formulas::s_coords_n5(k, self.mu(), xs),
            (5, Variant::T) => c = formulas::t_coords_n5(k, self.mu(), xs),
            _ => unreachable!("n is validated on construction"),
        }
        Ok(CompressedPoint { variant, n: self.n() as u8, coords: c })
    }

    /// All point classes of T_n \ {O} compressing to `c`, sorted by canonical member.
    pub fn decompress(&self, c: &CompressedPoint) -> Result<Vec<PointClass>> {
        self.decompress_inner(c, &mut Stopwatch { spent: None })
    }

    /// `decompress` plus the share of time spent extracting roots.
    pub fn decompress_profiled(&self, c: &CompressedPoint) -> Result<(Vec<PointClass>, DecompressProfile)> {
        let start = Instant::now();
        let mut sw = Stopwatch { spent: Some(Duration::ZERO) };
        let out = self.decompress_inner(c, &mut sw)?;
        let profile = DecompressProfile { total: start.elapsed(), root_extraction: sw.spent.unwrap_or_default() };
        Ok((out, profile))
    }

    fn decompress_inner(&self, c: &CompressedPoint, sw: &mut Stopwatch) -> Result<Vec<PointClass>> {
        if c.n() != self.n() {
            return Err(Error::InvalidInput(format!("compressed point is for n = {}, parameters have n = {}", c.n(), self.n())));
        }
        let xs = match self.n() {
            3 => self.candidates_n3(c, sw)?,
            _ => self.candidates_n5(c, sw)?,
        };
        self.classes_from_candidates(xs, sw)
    }

    /// x-coordinates solving the system for n = 3.
    fn candidates_n3(&self, c: &CompressedPoint, sw: &mut Stopwatch) -> Result<Vec<ExtElement>> {
        let k = self.k();
        let (a, b, mu) = (self.curve.a(), self.curve.b(), self.mu());
        let [c1, c2] = [c.coords[0], c.coords[1]];
        // x0, x1·x2 and the linear coefficient of u² − λu + μ(x1x2)³ with u = x1³
        let (x0, p, lambda, s) = match c.variant {
            Variant::S => {
                let Some(s3) = formulas::s3_from_g3(k, a, b, c1, c2) else {
                    return self.s1_zero_n3(c2);
                };
                let x0 = k.mul(c1, self.third);
                let p = k.mul(k.sub(k.mul(k.elem(3), k.sqr(x0)), c2), k.mul(self.third, self.mu_inv));
                // μx1³ + μ²x2³ = s3 − x0³ + 3μx0·p
                let r = k.add(k.sub(s3, k.pow_u128(x0, 3)), k.mul(k.elem(3), k.mul(mu, k.mul(x0, p))));
                (x0, p, k.mul(r, self.mu_inv), [c1, c2, s3])
            }
            Variant::T => {
                let Some(t3) = formulas::t3_from_g3(k, a, b, mu, c1, c2) else {
                    let s2 = k.neg(k.mul(k.elem(3), k.mul(mu, c2)));
                    return self.s1_zero_n3(s2);
                };
                (c1, c2, t3, formulas::s_from_t_n3(k, mu, c1, c2, t3))
            }
        };
        if p == Fp::ZERO {
            return sw.time(|| self.solve_by_factoring(&s));
        }
        let ext = self.curve.ext();
        let mu_p3 = k.mul(mu, k.pow_u128(p, 3));
        sw.time(|| {
            let disc = k.sub(k.sqr(lambda), k.mul(k.elem(4), mu_p3));
            let Some(r) = k.sqrt(disc) else {
                return Ok(Vec::new());
            };
            let half = k.inv(k.elem(2)).expect("q is odd");
            let mut out = Vec::new();
            for root in [r[0], k.neg(r[0])] {
                let u = k.mul(k.add(lambda, root), half);
                let cubes = k.cbrt_all(u);
                if cubes.is_empty() {
                    continue;
                }
                for x1 in cubes {
                    let x2 = k.mul(p, k.inv(x1)?);
                    out.push(ext.from_coords(&[x0, x1, x2])?);
                }
                // μ is not a cube, so at most one of the two values of u is
                break;
            }
            Ok(out)
        })
    }

    /// s1 = 0: g_3 reduces to (s2 − A)², so either every s3 solves it or none does.
    fn s1_zero_n3(&self, s2: Fp) -> Result<Vec<ExtElement>> {
        let k = self.k();
        if k.sub(s2, self.curve.a()) == Fp::ZERO {
            Err(Error::DegenerateInput)
        } else {
            Ok(Vec::new())
        }
    }

    fn candidates_n5(&self, c: &CompressedPoint, sw: &mut Stopwatch) -> Result<Vec<ExtElement>> {
        let k = self.k();
        let mu = self.mu();
        let s: [Fp; 4] = match c.variant {
            Variant::S => c.coords,
            Variant::T => formulas::s_from_t_n5(k, mu, &c.coords),
        };
        let coeffs = self.by_last_table.eval(k, &s);
        let uni = UniPoly::from_coeffs(k, coeffs);
        if uni.is_zero() {
            return Err(Error::DegenerateInput);
        }
        let roots = sw.time(|| unipoly::roots_in_field(&uni, k))?;
        let mut out = Vec::new();
        for s5 in roots {
            let full = [s[0], s[1], s[2], s[3], s5];
            out.extend(sw.time(|| self.solve_by_factoring(&full))?);
        }
        Ok(out)
    }

    /// The x ∈ F_{q^n} with e_i(x, x^q, …) = s_i for all i, as roots of
    /// X^n − s_1X^{n−1} + … ± s_n.
    ///
    /// Such an x either has an irreducible minimal polynomial of degree n, in
    /// which case the polynomial is that minimal polynomial, or lies in F_q and
    /// the polynomial is (X − x)^n. Irreducibility is decided over F_q first so
    /// the root search over F_{q^n} only runs when it can succeed.
    pub fn solve_by_factoring(&self, s: &[Fp]) -> Result<Vec<ExtElement>> {
        let k = self.k();
        let ext = self.curve.ext();
        let n = self.n();
        let mut coeffs = vec![k.zero(); n + 1];
        coeffs[n] = k.one();
        for (i, &si) in s.iter().enumerate() {
            let c = if i % 2 == 0 { k.neg(si) } else { si };
            coeffs[n - 1 - i] = c;
        }
        let f = UniPoly::from_coeffs(k, coeffs);
        let frob = unipoly::frobenius_powers_of_x(&f, n as u32, k);
        let x = UniPoly::x(k);
        let irreducible = frob[n - 1] == x && f.gcd(&frob[0].sub(&x, k), k)?.degree() == Some(0);
        if irreducible {
            return ext.roots_of_irreducible(&f).map_err(|e| Error::Internal(e.to_string()));
        }
        let mut out = Vec::new();
        for a in unipoly::roots_in_field(&f, k)? {
            let xa = ext.from_base(a);
            if self.symmetric_functions(xa) == s {
                out.push(xa);
            }
        }
        Ok(out)
    }

    /// s_1..s_n of x from the straight-line formulas.
    pub fn s_vector(&self, x: ExtElement) -> Vec<Fp> {
        let k = self.k();
        let mu = self.mu();
        let xs = self.curve.ext().coords(&x);
        if self.n() == 3 {
            let [t1, t2] = formulas::t_coords_n3(k, xs);
            formulas::s_from_t_n3(k, mu, t1, t2, formulas::t3_n3(k, mu, xs)).to_vec()
        } else {
            let t = formulas::t_coords_n5(k, mu, xs);
            let mut s = formulas::s_from_t_n5(k, mu, &t).to_vec();
            s.push(formulas::s5_from_t_n5(k, mu, &t, formulas::t5_n5(k, mu, xs)));
            s
        }
    }

    /// e_1..e_n of the conjugates of x.
    pub fn symmetric_functions(&self, x: ExtElement) -> Vec<Fp> {
        let ext = self.curve.ext();
        let n = self.n();
        // coefficients of ∏ (X − x^{q^i})
        let mut poly = vec![ext.one()];
        for xi in ext.conjugates(x) {
            let mut next = vec![ext.zero(); poly.len() + 1];
            for (j, &c) in poly.iter().enumerate() {
                next[j + 1] = ext.add(next[j + 1], c);
                next[j] = ext.sub(next[j], ext.mul(c, xi));
            }
            poly = next;
        }
        (1..=n)
            .map(|i| {
                let c = poly[n - i];
                let c = if i % 2 == 1 { ext.neg(c) } else { c };
                debug_assert!(ext.is_base(c));
                c.coord(0)
            })
            .collect()
    }

    fn classes_from_candidates(&self, mut xs: Vec<ExtElement>, sw: &mut Stopwatch) -> Result<Vec<PointClass>> {
        let ext = self.curve.ext();
        xs.sort();
        xs.dedup();
        let mut covered: BTreeSet<ExtElement> = BTreeSet::new();
        let mut classes = BTreeSet::new();
        for x in xs {
            if covered.contains(&x) || self.exceptional.binary_search(&x).is_ok() {
                continue;
            }
            covered.extend(ext.conjugates(x));
            let Some(p) = sw.time(|| self.curve.lift_x(x)) else {
                continue;
            };
            if !self.curve.in_trace_zero(&p) {
                return Err(Error::Internal(format!("recovered x = {} lifts to a point outside T_{}", ext.format(x), self.n())));
            }
            classes.insert(self.class_of(&p));
        }
        Ok(classes.into_iter().collect())
    }

    pub fn class_of(&self, p: &CurvePoint) -> PointClass {
        let mut members = Vec::with_capacity(2 * self.n());
        for i in 0..self.n() {
            let c = self.curve.frobenius_point(p, i);
            members.push(c);
            members.push(self.curve.neg(&c));
        }
        members.sort();
        members.dedup();
        PointClass { members }
    }

    pub fn classes_equal(&self, p: &CurvePoint, q: &CurvePoint) -> bool {
        self.class_of(p).contains(q)
    }
}

#[cfg(test)]
mod tests;
