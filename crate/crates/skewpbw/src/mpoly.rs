//! Commutative multivariate polynomials over an exact field, together with
//! the classical Buchberger machinery (division with quotients, traced basis
//! computation, Schreyer syzygies). This backs the polynomial coefficient
//! rings; the deglex order used here is internal to the coefficient ring and
//! independent of the order chosen on the extension monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::scalar::FieldScalar;

pub type Expo = Vec<u16>;

pub fn deglex(a: &Expo, b: &Expo) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn expo_divides(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn expo_sub(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

fn expo_add(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

fn expo_lcm(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<F: FieldScalar> {
    pub nvars: usize,
    pub terms: BTreeMap<Expo, F>,
}

impl<F: FieldScalar> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, F::one());
        p
    }

    pub fn monomial(nvars: usize, e: Expo, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            debug_assert_eq!(e.len(), nvars);
            p.terms.insert(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
    }

    /// Nonzero constant; the units of the polynomial ring over a field.
    pub fn as_unit(&self) -> Option<&F> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if e.iter().all(|&x| x == 0) {
            Some(c)
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Expo, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
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

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = c.neg();
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(expo_add(e1, e2), c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v.mul(c));
        }
        r
    }

    pub fn mul_term(&self, e: &Expo, c: &F) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            r.add_term(expo_add(e1, e), c1.mul(c));
        }
        r
    }

    /// Leading term under deglex, None for the zero polynomial.
    pub fn lt(&self) -> Option<(&Expo, &F)> {
        self.terms.iter().max_by(|a, b| deglex(a.0, b.0))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }
}

/// Multivariate division with full tail reduction: f = sum q_i d_i + r where
/// no term of r is divisible by any lm(d_i). Divisors are tried in order, so
/// the result is deterministic.
pub fn divide_full<F: FieldScalar>(
    f: &MPoly<F>,
    divisors: &[MPoly<F>],
) -> (Vec<MPoly<F>>, MPoly<F>) {
    let nv = f.nvars;
    let mut quot: Vec<MPoly<F>> = divisors.iter().map(|_| MPoly::zero(nv)).collect();
    let mut rem = MPoly::zero(nv);
    let mut h = f.clone();
    'outer: while let Some((e, c)) = h.lt().map(|(e, c)| (e.clone(), c.clone())) {
        for (i, d) in divisors.iter().enumerate() {
            if let Some((de, dc)) = d.lt() {
                if expo_divides(de, &e) {
                    let qe = expo_sub(&e, de);
                    let qc = c.mul(&dc.inv().expect("nonzero leading coefficient"));
                    quot[i].add_term(qe.clone(), qc.clone());
                    h = h.sub(&d.mul_term(&qe, &qc));
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the remainder
        rem.add_term(e.clone(), c.clone());
        h.terms.remove(&e);
    }
    (quot, rem)
}

/// Groebner basis carrying, for every basis element, its expression in the
/// original generators: `basis[j] = sum_i trace[j][i] * gens[i]`.
pub struct TracedGb<F: FieldScalar> {
    pub gens: Vec<MPoly<F>>,
    pub basis: Vec<MPoly<F>>,
    pub trace: Vec<Vec<MPoly<F>>>,
}

pub fn buchberger_traced<F: FieldScalar>(gens: &[MPoly<F>]) -> TracedGb<F> {
    let nv = gens.first().map(|g| g.nvars).unwrap_or(0);
    let m = gens.len();
    let mut basis: Vec<MPoly<F>> = Vec::new();
    let mut trace: Vec<Vec<MPoly<F>>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut t = vec![MPoly::zero(nv); m];
        t[i] = MPoly::one(nv);
        basis.push(g.clone());
        trace.push(t);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ei, ci) = {
            let (e, c) = basis[i].lt().unwrap();
            (e.clone(), c.clone())
        };
        let (ej, cj) = {
            let (e, c) = basis[j].lt().unwrap();
            (e.clone(), c.clone())
        };
        let l = expo_lcm(&ei, &ej);
        let mi = expo_sub(&l, &ei);
        let mj = expo_sub(&l, &ej);
        let inv_i = ci.inv().unwrap();
        let inv_j = cj.inv().unwrap();
        let s = basis[i]
            .mul_term(&mi, &inv_i)
            .sub(&basis[j].mul_term(&mj, &inv_j));
        let (q, r) = divide_full(&s, &basis);
        if r.is_zero() {
            continue;
        }
        // trace of r = trace(s) - sum q_l trace_l, then normalized monic
        let lc = r.lt().unwrap().1.clone();
        let lc_inv = lc.inv().unwrap();
        let mut tr = vec![MPoly::zero(nv); m];
        for k in 0..m {
            let mut acc = trace[i][k]
                .mul_term(&mi, &inv_i)
                .sub(&trace[j][k].mul_term(&mj, &inv_j));
            for (l_idx, ql) in q.iter().enumerate() {
                acc = acc.sub(&ql.mul(&trace[l_idx][k]));
            }
            tr[k] = acc.scale(&lc_inv);
        }
        let r = r.scale(&lc_inv);
        basis.push(r);
        trace.push(tr);
        let new = basis.len() - 1;
        for i in 0..new {
            pairs.push((i, new));
        }
    }
    TracedGb { gens: gens.to_vec(), basis, trace }
}

impl<F: FieldScalar> TracedGb<F> {
    /// Expresses `a` as a combination of the original generators, if it lies
    /// in the ideal they generate.
    pub fn lift(&self, a: &MPoly<F>) -> Option<Vec<MPoly<F>>> {
        let nv = a.nvars;
        if a.is_zero() {
            return Some(vec![MPoly::zero(nv); self.gens.len()]);
        }
        if self.basis.is_empty() {
            return None;
        }
        let (q, r) = divide_full(a, &self.basis);
        if !r.is_zero() {
            return None;
        }
        let m = self.gens.len();
        let mut out = vec![MPoly::zero(nv); m];
        for (j, qj) in q.iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            for k in 0..m {
                out[k] = out[k].add(&qj.mul(&self.trace[j][k]));
            }
        }
        Some(out)
    }

    /// Generators of the syzygy module of the original generators, using the
    /// Schreyer construction on the computed basis and lifting back.
    pub fn syzygies(&self) -> Vec<Vec<MPoly<F>>> {
        let m = self.gens.len();
        let nv = self
            .gens
            .first()
            .map(|g| g.nvars)
            .unwrap_or_else(|| self.basis.first().map(|g| g.nvars).unwrap_or(0));
        let mut out: Vec<Vec<MPoly<F>>> = Vec::new();
        // generators equal to zero contribute unit syzygies
        for (i, g) in self.gens.iter().enumerate() {
            if g.is_zero() {
                let mut s = vec![MPoly::zero(nv); m];
                s[i] = MPoly::one(nv);
                out.push(s);
            }
        }
        if self.basis.is_empty() {
            return out;
        }
        let t = self.basis.len();
        // S = division quotients expressing each generator in the basis
        let mut s_mat: Vec<Vec<MPoly<F>>> = Vec::new();
        for g in &self.gens {
            let (q, r) = divide_full(g, &self.basis);
            debug_assert!(r.is_zero(), "generator must reduce to zero by its own basis");
            s_mat.push(q);
        }
        // Schreyer syzygies of the basis, pushed through the trace matrix
        for i in 0..t {
            for j in (i + 1)..t {
                let (ei, ci) = {
                    let (e, c) = self.basis[i].lt().unwrap();
                    (e.clone(), c.clone())
                };
                let (ej, cj) = {
                    let (e, c) = self.basis[j].lt().unwrap();
                    (e.clone(), c.clone())
                };
                let l = expo_lcm(&ei, &ej);
                let mi = expo_sub(&l, &ei);
                let mj = expo_sub(&l, &ej);
                let s = self.basis[i]
                    .mul_term(&mi, &ci.inv().unwrap())
                    .sub(&self.basis[j].mul_term(&mj, &cj.inv().unwrap()));
                let (q, r) = divide_full(&s, &self.basis);
                debug_assert!(r.is_zero());
                // tau over the basis: mi/ci e_i - mj/cj e_j - q
                let mut tau = vec![MPoly::zero(nv); t];
                tau[i] = tau[i].add(&MPoly::monomial(nv, mi, ci.inv().unwrap()));
                tau[j] = tau[j].sub(&MPoly::monomial(nv, mj, cj.inv().unwrap()));
                for (k, qk) in q.iter().enumerate() {
                    tau[k] = tau[k].sub(qk);
                }
                // push to generators: sum_k tau_k trace[k]
                let mut sy = vec![MPoly::zero(nv); m];
                for k in 0..t {
                    if tau[k].is_zero() {
                        continue;
                    }
                    for c in 0..m {
                        sy[c] = sy[c].add(&tau[k].mul(&self.trace[k][c]));
                    }
                }
                if sy.iter().any(|p| !p.is_zero()) {
                    out.push(sy);
                }
            }
        }
        // rows of I - S T
        for i in 0..m {
            let mut row = vec![MPoly::zero(nv); m];
            row[i] = MPoly::one(nv);
            for j in 0..t {
                if s_mat[i][j].is_zero() {
                    continue;
                }
                for c in 0..m {
                    row[c] = row[c].sub(&s_mat[i][j].mul(&self.trace[j][c]));
                }
            }
            if row.iter().any(|p| !p.is_zero()) {
                out.push(row);
            }
        }
        out
    }
}
