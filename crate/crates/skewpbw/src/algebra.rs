//! Bijective skew PBW extensions and canonical-form arithmetic in A and A^m.
//!
//! Elements are stored with left coefficients on the PBW monomials
//! x_1^{a_1} ... x_n^{a_n}. Products are normalized by pushing coefficients
//! left through the commutation rules x_i r = sigma_i(r) x_i + delta_i(r)
//! and by rewriting out-of-order generator pairs with the quadratic
//! relations x_j x_i = c_{ij} x_i x_j + (affine tail), j > i.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::coeffring::{Ring, RingElem, RingEndo};
use crate::error::{Error, Result};

/// Multidegree of a PBW monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponent(pub Vec<u16>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn deg(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, o: &Exponent) -> Option<Exponent> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&o.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Exponent(out))
    }

    fn min_var(&self) -> Option<usize> {
        self.0.iter().position(|&x| x > 0)
    }

    fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x > 0)
    }
}

/// One quadratic relation x_hi x_lo = c * x_lo x_hi + tail_const + sum_k
/// tail_lin[k] * x_k, with all coefficients in R.
#[derive(Clone, PartialEq, Debug)]
pub struct Relation {
    pub c: RingElem,
    pub tail_const: RingElem,
    pub tail_lin: Vec<RingElem>,
}

/// Full description of a bijective skew PBW extension.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub name: String,
    pub ring: Ring,
    pub var_names: Vec<String>,
    pub sigma: Vec<RingEndo>,
    /// delta[i][g] = delta_i applied to ring generator g; extended to all of
    /// R by the sigma-Leibniz rule.
    pub delta: Vec<Vec<RingElem>>,
    /// Keyed by (lo, hi) with lo < hi; pairs without an entry commute.
    pub relations: BTreeMap<(usize, usize), Relation>,
}

/// Element of A in canonical form: left coefficients on distinct monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyA {
    pub n: usize,
    pub terms: BTreeMap<Exponent, RingElem>,
}

impl PolyA {
    pub fn zero(n: usize) -> Self {
        PolyA { n, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, e: Exponent, c: RingElem) -> Self {
        let mut p = Self::zero(n);
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.deg()).max()
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: RingElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c).expect("same coefficient ring");
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }
}

/// Element of the free module A^m, canonical form, 0-based component index.
#[derive(Clone, PartialEq, Debug)]
pub struct VecA {
    pub rank: usize,
    pub n: usize,
    pub terms: BTreeMap<(usize, Exponent), RingElem>,
}

impl VecA {
    pub fn zero(rank: usize, n: usize) -> Self {
        VecA { rank, n, terms: BTreeMap::new() }
    }

    pub fn from_components(comps: Vec<PolyA>) -> Self {
        let rank = comps.len();
        let n = comps.first().map(|p| p.n).unwrap_or(0);
        let mut v = Self::zero(rank, n);
        for (idx, p) in comps.into_iter().enumerate() {
            for (e, c) in p.terms {
                v.add_term(idx, e, c);
            }
        }
        v
    }

    pub fn component(&self, idx: usize) -> PolyA {
        let mut p = PolyA::zero(self.n);
        for ((j, e), c) in &self.terms {
            if *j == idx {
                p.add_term(e.clone(), c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, idx: usize, e: Exponent, c: RingElem) {
        debug_assert!(idx < self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(idx, e.clone())) {
            Some(old) => {
                let s = old.add(&c).expect("same coefficient ring");
                if s.is_zero() {
                    self.terms.remove(&(idx, e));
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert((idx, e), c);
            }
        }
    }
}

/// The multiplication engine. Wraps a validated spec together with caches
/// for the two monomial-level products; all operations are pure.
pub struct Algebra {
    spec: AlgebraSpec,
    mono_cache: Mutex<HashMap<(Exponent, Exponent), PolyA>>,
    var_cache: Mutex<HashMap<(usize, Exponent), PolyA>>,
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Result<Algebra> {
        let n = spec.var_names.len();
        if spec.sigma.len() != n || spec.delta.len() != n {
            return Err(Error::AlgebraInvalid(
                "sigma/delta tables must cover every extension variable".into(),
            ));
        }
        for endo in &spec.sigma {
            endo.validate(&spec.ring)?;
            if endo.inverse_images.is_none() {
                return Err(Error::MissingInverse);
            }
        }
        for d in &spec.delta {
            if d.len() != spec.ring.ngens() {
                return Err(Error::AlgebraInvalid(
                    "delta must give an image for every ring generator".into(),
                ));
            }
        }
        for ((lo, hi), rel) in &spec.relations {
            if lo >= hi || *hi >= n {
                return Err(Error::AlgebraInvalid(format!(
                    "relation pair ({lo},{hi}) out of range"
                )));
            }
            if !rel.c.is_invertible() {
                return Err(Error::AlgebraInvalid(format!(
                    "c_{{{lo},{hi}}} must be invertible"
                )));
            }
            if rel.tail_lin.len() != n {
                return Err(Error::AlgebraInvalid("relation tail has wrong arity".into()));
            }
        }
        Ok(Algebra {
            spec,
            mono_cache: Mutex::new(HashMap::new()),
            var_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.var_names.len()
    }

    pub fn ring(&self) -> &Ring {
        &self.spec.ring
    }

    pub fn relation(&self, lo: usize, hi: usize) -> Relation {
        debug_assert!(lo < hi);
        match self.spec.relations.get(&(lo, hi)) {
            Some(r) => r.clone(),
            None => Relation {
                c: self.spec.ring.one(),
                tail_const: self.spec.ring.zero(),
                tail_lin: vec![self.spec.ring.zero(); self.n()],
            },
        }
    }

    // ---- sigma, delta, psi -------------------------------------------------

    pub fn sigma_apply(&self, i: usize, r: &RingElem) -> Result<RingElem> {
        self.spec.sigma[i].apply(&self.spec.ring, r)
    }

    pub fn sigma_apply_inv(&self, i: usize, r: &RingElem) -> Result<RingElem> {
        self.spec.sigma[i].apply_inverse(&self.spec.ring, r)
    }

    /// sigma^a = sigma_1^{a_1} o ... o sigma_n^{a_n} (sigma_n acts first).
    pub fn sigma_pow(&self, a: &Exponent, r: &RingElem) -> Result<RingElem> {
        let mut out = r.clone();
        for i in (0..self.n()).rev() {
            for _ in 0..a.0[i] {
                out = self.sigma_apply(i, &out)?;
            }
        }
        Ok(out)
    }

    /// sigma^{-a} = sigma_n^{-a_n} o ... o sigma_1^{-a_1} (sigma_1 acts first).
    pub fn sigma_pow_inv(&self, a: &Exponent, r: &RingElem) -> Result<RingElem> {
        let mut out = r.clone();
        for i in 0..self.n() {
            for _ in 0..a.0[i] {
                out = self.sigma_apply_inv(i, &out)?;
            }
        }
        Ok(out)
    }

    /// psi_{t1,t2}(r) = sigma^{t1+t2}(sigma^{-t2}(r)).
    pub fn psi(&self, t1: &Exponent, t2: &Exponent, r: &RingElem) -> Result<RingElem> {
        self.sigma_pow(&t1.add(t2), &self.sigma_pow_inv(t2, r)?)
    }

    /// psi^{-1}_{t1,t2}(r) = sigma^{t2}(sigma^{-(t1+t2)}(r)).
    pub fn psi_inv(&self, t1: &Exponent, t2: &Exponent, r: &RingElem) -> Result<RingElem> {
        self.sigma_pow(t2, &self.sigma_pow_inv(&t1.add(t2), r)?)
    }

    /// delta_i extended to all of R by delta_i(ab) = sigma_i(a) delta_i(b) +
    /// delta_i(a) b; zero on base-field scalars.
    pub fn delta_apply(&self, i: usize, r: &RingElem) -> Result<RingElem> {
        let ring = &self.spec.ring;
        if self.spec.delta[i].iter().all(|d| d.is_zero()) {
            return Ok(ring.zero());
        }
        let mut out = ring.zero();
        for (scalar, word) in decompose(ring, r)? {
            let part = self.delta_word(i, &word)?;
            out = out.add(&self.spec.sigma[i].apply(ring, &scalar)?.mul(&part)?)?;
        }
        Ok(out)
    }

    fn delta_word(&self, i: usize, word: &[usize]) -> Result<RingElem> {
        let ring = &self.spec.ring;
        if word.is_empty() {
            return Ok(ring.zero());
        }
        let g = word[0];
        let rest = &word[1..];
        let mut rest_elem = ring.one();
        for &k in rest {
            rest_elem = rest_elem.mul(&ring.generator(k)?)?;
        }
        let first = self
            .sigma_apply(i, &ring.generator(g)?)?
            .mul(&self.delta_word(i, rest)?)?;
        let second = self.spec.delta[i][g].mul(&rest_elem)?;
        first.add(&second)
    }

    // ---- monomial-level products -------------------------------------------

    /// x^a * r as a canonical element; the leading part is sigma^a(r) x^a and
    /// everything else has degree < |a|.
    pub fn mono_times_coeff(&self, a: &Exponent, r: &RingElem) -> Result<PolyA> {
        let n = self.n();
        if r.is_zero() {
            return Ok(PolyA::zero(n));
        }
        let mut g = PolyA::monomial(n, Exponent::zero(n), r.clone());
        for i in (0..n).rev() {
            for _ in 0..a.0[i] {
                // every term of g is supported on variables >= i, so
                // prepending x_i never needs a relation rewrite
                let mut next = PolyA::zero(n);
                for (e, c) in &g.terms {
                    debug_assert!(e.min_var().map_or(true, |v| v >= i));
                    next.add_term(e.add(&Exponent::unit(n, i)), self.sigma_apply(i, c)?);
                    next.add_term(e.clone(), self.delta_apply(i, c)?);
                }
                g = next;
            }
        }
        Ok(g)
    }

    /// Splits x^a r = r_a x^a + p with r_a = sigma^a(r) and deg(p) < |a|.
    pub fn mul_mono_coeff(&self, a: &Exponent, r: &RingElem) -> Result<(RingElem, PolyA)> {
        let mut full = self.mono_times_coeff(a, r)?;
        let lead = full.terms.remove(a).unwrap_or_else(|| self.spec.ring.zero());
        debug_assert_eq!(lead, self.sigma_pow(a, r)?);
        Ok((lead, full))
    }

    /// x_i * x^b in canonical form.
    fn var_times_mono(&self, i: usize, b: &Exponent) -> Result<PolyA> {
        let n = self.n();
        if let Some(hit) = self.var_cache.lock().unwrap().get(&(i, b.clone())) {
            return Ok(hit.clone());
        }
        let result = match b.min_var() {
            None => PolyA::monomial(n, Exponent::unit(n, i), self.spec.ring.one()),
            Some(j) if i <= j => {
                PolyA::monomial(n, b.add(&Exponent::unit(n, i)), self.spec.ring.one())
            }
            Some(j) => {
                // x_i x_j = c x_j x_i + tail with j < i
                let rel = self.relation(j, i);
                let b_rest = b.checked_sub(&Exponent::unit(n, j)).unwrap();
                let inner = self.var_times_mono(i, &b_rest)?;
                let mut acc = self.scalar_mul_left(&rel.c, &self.var_times_poly(j, &inner)?)?;
                acc = self.poly_add(
                    &acc,
                    &PolyA::monomial(n, b_rest.clone(), rel.tail_const.clone()),
                )?;
                for (k, t) in rel.tail_lin.iter().enumerate() {
                    if t.is_zero() {
                        continue;
                    }
                    let piece = self.var_times_mono(k, &b_rest)?;
                    acc = self.poly_add(&acc, &self.scalar_mul_left(t, &piece)?)?;
                }
                acc
            }
        };
        self.var_cache
            .lock()
            .unwrap()
            .insert((i, b.clone()), result.clone());
        Ok(result)
    }

    /// x_i * f via x_i c = sigma_i(c) x_i + delta_i(c).
    fn var_times_poly(&self, i: usize, f: &PolyA) -> Result<PolyA> {
        let mut acc = PolyA::zero(self.n());
        for (e, c) in &f.terms {
            let sc = self.sigma_apply(i, c)?;
            if !sc.is_zero() {
                let shifted = self.var_times_mono(i, e)?;
                acc = self.poly_add(&acc, &self.scalar_mul_left(&sc, &shifted)?)?;
            }
            acc.add_term(e.clone(), self.delta_apply(i, c)?);
        }
        Ok(acc)
    }

    /// x^a * x^b in canonical form.
    pub fn mono_times_mono(&self, a: &Exponent, b: &Exponent) -> Result<PolyA> {
        let n = self.n();
        if a.is_zero() {
            return Ok(PolyA::monomial(n, b.clone(), self.spec.ring.one()));
        }
        if b.is_zero() {
            return Ok(PolyA::monomial(n, a.clone(), self.spec.ring.one()));
        }
        if a.max_var().unwrap() <= b.min_var().unwrap() {
            return Ok(PolyA::monomial(n, a.add(b), self.spec.ring.one()));
        }
        if let Some(hit) = self.mono_cache.lock().unwrap().get(&(a.clone(), b.clone())) {
            return Ok(hit.clone());
        }
        // peel the highest variable off the right end of x^a
        let i = a.max_var().unwrap();
        let a_rest = a.checked_sub(&Exponent::unit(n, i)).unwrap();
        let inner = self.var_times_mono(i, b)?;
        let result = self.mono_times_poly(&a_rest, &inner)?;
        self.mono_cache
            .lock()
            .unwrap()
            .insert((a.clone(), b.clone()), result.clone());
        Ok(result)
    }

    /// Splits x^a x^b = c_{a,b} x^{a+b} + p_{a,b}.
    pub fn mul_mono_mono(&self, a: &Exponent, b: &Exponent) -> Result<(RingElem, PolyA)> {
        let mut full = self.mono_times_mono(a, b)?;
        let c = full
            .terms
            .remove(&a.add(b))
            .unwrap_or_else(|| self.spec.ring.zero());
        Ok((c, full))
    }

    /// The constant c_{a,b}; invertible whenever the extension is bijective.
    pub fn c_constant(&self, a: &Exponent, b: &Exponent) -> Result<RingElem> {
        Ok(self.mul_mono_mono(a, b)?.0)
    }

    /// x^a * f.
    pub fn mono_times_poly(&self, a: &Exponent, f: &PolyA) -> Result<PolyA> {
        if a.is_zero() {
            return Ok(f.clone());
        }
        let mut acc = PolyA::zero(self.n());
        for (g, c) in &f.terms {
            let pushed = self.mono_times_coeff(a, c)?;
            for (gp, cp) in &pushed.terms {
                let prod = self.mono_times_mono(gp, g)?;
                acc = self.poly_add(&acc, &self.scalar_mul_left(cp, &prod)?)?;
            }
        }
        Ok(acc)
    }

    // ---- polynomial arithmetic ---------------------------------------------

    pub fn poly_add(&self, f: &PolyA, g: &PolyA) -> Result<PolyA> {
        if f.n != g.n {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = f.clone();
        for (e, c) in &g.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn poly_neg(&self, f: &PolyA) -> PolyA {
        let mut out = f.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn poly_sub(&self, f: &PolyA, g: &PolyA) -> Result<PolyA> {
        self.poly_add(f, &self.poly_neg(g))
    }

    /// r * f with the scalar placed on the left, the native coefficient side.
    pub fn scalar_mul_left(&self, r: &RingElem, f: &PolyA) -> Result<PolyA> {
        let mut out = PolyA::zero(f.n);
        for (e, c) in &f.terms {
            out.add_term(e.clone(), r.mul(c)?);
        }
        Ok(out)
    }

    /// f * r, normalized through x^a r = sigma^a(r) x^a + p.
    pub fn scalar_mul_right(&self, f: &PolyA, r: &RingElem) -> Result<PolyA> {
        let mut acc = PolyA::zero(f.n);
        for (e, c) in &f.terms {
            let pushed = self.mono_times_coeff(e, r)?;
            acc = self.poly_add(&acc, &self.scalar_mul_left(c, &pushed)?)?;
        }
        Ok(acc)
    }

    pub fn poly_mul(&self, f: &PolyA, g: &PolyA) -> Result<PolyA> {
        if f.n != g.n {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = PolyA::zero(f.n);
        for (e, c) in &f.terms {
            let part = self.mono_times_poly(e, g)?;
            acc = self.poly_add(&acc, &self.scalar_mul_left(c, &part)?)?;
        }
        Ok(acc)
    }

    pub fn poly_one(&self) -> PolyA {
        PolyA::monomial(self.n(), Exponent::zero(self.n()), self.spec.ring.one())
    }

    // ---- module arithmetic -------------------------------------------------

    pub fn vec_add(&self, v: &VecA, w: &VecA) -> Result<VecA> {
        if v.rank != w.rank || v.n != w.n {
            return Err(Error::RankMismatch);
        }
        let mut out = v.clone();
        for ((j, e), c) in &w.terms {
            out.add_term(*j, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn vec_neg(&self, v: &VecA) -> VecA {
        let mut out = v.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn vec_sub(&self, v: &VecA, w: &VecA) -> Result<VecA> {
        self.vec_add(v, &self.vec_neg(w))
    }

    /// Right action of A: (c x^g e_j) * q = c (x^g q) e_j, extended linearly.
    pub fn vec_right_mul(&self, v: &VecA, q: &PolyA) -> Result<VecA> {
        if v.n != q.n {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = VecA::zero(v.rank, v.n);
        for ((j, e), c) in &v.terms {
            let part = self.mono_times_poly(e, q)?;
            for (pe, pc) in &part.terms {
                out.add_term(*j, pe.clone(), c.mul(pc)?);
            }
        }
        Ok(out)
    }

    /// v * r for a ring scalar r.
    pub fn vec_scalar_right(&self, v: &VecA, r: &RingElem) -> Result<VecA> {
        let mut out = VecA::zero(v.rank, v.n);
        for ((j, e), c) in &v.terms {
            let pushed = self.mono_times_coeff(e, r)?;
            for (pe, pc) in &pushed.terms {
                out.add_term(*j, pe.clone(), c.mul(pc)?);
            }
        }
        Ok(out)
    }
}

/// Splits a ring element into (scalar, generator word) summands; the word
/// lists generator indices with multiplicity, in the ring's canonical order.
pub(crate) fn decompose(ring: &Ring, r: &RingElem) -> Result<Vec<(RingElem, Vec<usize>)>> {
    use crate::coeffring::Base;
    use crate::mpoly::MPoly;
    use crate::spoly::SPoly;
    let mut out = Vec::new();
    match (ring, r) {
        (Ring::Q, RingElem::Q(_)) | (Ring::Qi, RingElem::Qi(_)) => {
            out.push((r.clone(), Vec::new()));
        }
        (Ring::Poly { base: Base::Q, vars }, RingElem::PQ(p)) => {
            for (e, c) in &p.terms {
                let mut word = Vec::new();
                for (j, &k) in e.iter().enumerate() {
                    word.extend(std::iter::repeat(j).take(k as usize));
                }
                out.push((RingElem::PQ(MPoly::constant(vars.len(), c.clone())), word));
            }
        }
        (Ring::Poly { base: Base::Qi, vars }, RingElem::PQi(p)) => {
            for (e, c) in &p.terms {
                let mut word = Vec::new();
                for (j, &k) in e.iter().enumerate() {
                    word.extend(std::iter::repeat(j).take(k as usize));
                }
                out.push((RingElem::PQi(MPoly::constant(vars.len(), c.clone())), word));
            }
        }
        (Ring::Skew { base: Base::Q, .. }, RingElem::SQ(p)) => {
            for (d, c) in &p.coeffs {
                out.push((
                    RingElem::SQ(SPoly::constant(p.action, c.clone())),
                    vec![0; *d as usize],
                ));
            }
        }
        (Ring::Skew { base: Base::Qi, .. }, RingElem::SQi(p)) => {
            for (d, c) in &p.coeffs {
                out.push((
                    RingElem::SQi(SPoly::constant(p.action, c.clone())),
                    vec![0; *d as usize],
                ));
            }
        }
        _ => return Err(Error::RingMismatch),
    }
    Ok(out)
}
