//! Univariate skew polynomials K[w; phi] of endomorphism type: w * a =
//! phi(a) * w for scalars a. With phi an automorphism of the base field this
//! ring is right Euclidean, which yields exact right-ideal membership and
//! right syzygies through column reduction of the generator row.

use std::collections::BTreeMap;

use crate::scalar::FieldScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarAction {
    Id,
    Conj,
}

impl ScalarAction {
    pub fn apply<F: FieldScalar>(&self, a: &F) -> F {
        match self {
            ScalarAction::Id => a.clone(),
            ScalarAction::Conj => a.conj(),
        }
    }

    pub fn pow<F: FieldScalar>(&self, k: u32, a: &F) -> F {
        match self {
            ScalarAction::Id => a.clone(),
            // conjugation is an involution
            ScalarAction::Conj => {
                if k % 2 == 0 {
                    a.clone()
                } else {
                    a.conj()
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SPoly<F: FieldScalar> {
    pub action: ScalarAction,
    pub coeffs: BTreeMap<u32, F>,
}

impl<F: FieldScalar> SPoly<F> {
    pub fn zero(action: ScalarAction) -> Self {
        SPoly { action, coeffs: BTreeMap::new() }
    }

    pub fn constant(action: ScalarAction, c: F) -> Self {
        let mut p = Self::zero(action);
        if !c.is_zero() {
            p.coeffs.insert(0, c);
        }
        p
    }

    pub fn one(action: ScalarAction) -> Self {
        Self::constant(action, F::one())
    }

    pub fn var(action: ScalarAction) -> Self {
        let mut p = Self::zero(action);
        p.coeffs.insert(1, F::one());
        p
    }

    pub fn monomial(action: ScalarAction, d: u32, c: F) -> Self {
        let mut p = Self::zero(action);
        if !c.is_zero() {
            p.coeffs.insert(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.values().next_back()
    }

    pub fn as_unit(&self) -> Option<&F> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (d, c) = self.coeffs.iter().next().unwrap();
        if *d == 0 {
            Some(c)
        } else {
            None
        }
    }

    fn add_term(&mut self, d: u32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&d) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.coeffs.remove(&d);
                } else {
                    *old = s;
                }
            }
            None => {
                self.coeffs.insert(d, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.action, o.action);
        let mut r = self.clone();
        for (d, c) in &o.coeffs {
            r.add_term(*d, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.coeffs.values_mut() {
            *c = c.neg();
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// (a w^i)(b w^j) = a phi^i(b) w^(i+j)
    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.action, o.action);
        let mut r = Self::zero(self.action);
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                r.add_term(i + j, a.mul(&self.action.pow(*i, b)));
            }
        }
        r
    }

    pub fn scale_left(&self, c: &F) -> Self {
        let mut r = Self::zero(self.action);
        for (d, v) in &self.coeffs {
            r.add_term(*d, c.mul(v));
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.action);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Right division a = d * q + r with deg r < deg d. The divisor sits on
    /// the left, matching right-ideal generation d*R.
    pub fn right_divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "right division by zero");
        let mut q = Self::zero(self.action);
        let mut r = self.clone();
        let dd = d.degree().unwrap();
        let dl = d.lc().unwrap().clone();
        let dl_inv = dl.inv().expect("field leading coefficient");
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let k = rd - dd;
            // d * (c w^k) has leading coefficient lc(d) * phi^dd(c)
            let c = self.action.pow(dd, &dl_inv.mul(r.lc().unwrap()));
            // phi^-1 = phi for id and conj, so pow works for the inverse too
            let t = Self::monomial(self.action, k, c);
            q = q.add(&t);
            r = r.sub(&d.mul(&t));
        }
        (q, r)
    }
}

/// Column reduction of a generator row: returns (U, pivot) with U an
/// invertible matrix of column operations such that row * U has a single
/// nonzero entry g = gcld(row) at `pivot` (None when the row is zero).
/// Columns of U other than the pivot generate the right syzygy module.
pub fn column_reduce<F: FieldScalar>(
    row: &[SPoly<F>],
    action: ScalarAction,
) -> (Vec<Vec<SPoly<F>>>, Option<usize>) {
    let m = row.len();
    let mut u: Vec<Vec<SPoly<F>>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        SPoly::one(action)
                    } else {
                        SPoly::zero(action)
                    }
                })
                .collect()
        })
        .collect();
    let mut r: Vec<SPoly<F>> = row.to_vec();
    loop {
        let nz: Vec<usize> = (0..m).filter(|&j| !r[j].is_zero()).collect();
        if nz.len() <= 1 {
            return (u, nz.first().copied());
        }
        let p = *nz
            .iter()
            .min_by_key(|&&j| r[j].degree().unwrap())
            .unwrap();
        for &j in &nz {
            if j == p {
                continue;
            }
            let (q, rem) = r[j].right_divmod(&r[p]);
            if q.is_zero() {
                continue;
            }
            r[j] = rem;
            for i in 0..m {
                let upq = u[i][p].mul(&q);
                u[i][j] = u[i][j].sub(&upq);
            }
        }
    }
}
