//! Independent brute-force cross-checks: a single-step word normalizer used
//! as ground truth for the multiplication engine, and degree-bounded
//! linear-algebra decisions for membership and syzygy completeness.
//!
//! All linear systems run over Q. Gaussian-rational coefficients are split
//! into real and imaginary coordinates, because right multiplication by a
//! Q(i) scalar is only conjugate-linear once a conjugation twist is in play;
//! rational scalars stay central and untwisted.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Exponent, PolyA, VecA};
use crate::coeffring::{Ring, RingElem};
use crate::error::Result;
use crate::scalar::{FieldScalar, Rat};

#[derive(Clone, Debug)]
pub enum Letter {
    Coeff(RingElem),
    Gen(usize),
}

/// Normalizes an arbitrary word of coefficients and generators by repeated
/// single steps: merging adjacent coefficients, commuting a coefficient past
/// a generator with x_i r = sigma_i(r) x_i + delta_i(r), and rewriting one
/// out-of-order generator pair with the relation table. Each step shrinks
/// the (generator count, inversions, displaced coefficients, letters)
/// measure, so the loop terminates.
pub fn naive_normalize(alg: &Algebra, word: &[Letter]) -> Result<PolyA> {
    let n = alg.n();
    let mut result = PolyA::zero(n);
    let mut stack: Vec<Vec<Letter>> = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        match first_step(alg, &w)? {
            StepOutcome::Normal => {
                let mut coeff = alg.ring().one();
                let mut expo = Exponent::zero(n);
                for l in &w {
                    match l {
                        Letter::Coeff(c) => coeff = coeff.mul(c)?,
                        Letter::Gen(i) => expo.0[*i] += 1,
                    }
                }
                result.add_term(expo, coeff);
            }
            StepOutcome::Rewrite(parts) => {
                for p in parts {
                    if !dead(&p) {
                        stack.push(p);
                    }
                }
            }
        }
    }
    Ok(result)
}

enum StepOutcome {
    Normal,
    Rewrite(Vec<Vec<Letter>>),
}

fn dead(w: &[Letter]) -> bool {
    w.iter().any(|l| matches!(l, Letter::Coeff(c) if c.is_zero()))
}

fn first_step(alg: &Algebra, w: &[Letter]) -> Result<StepOutcome> {
    for k in 0..w.len().saturating_sub(1) {
        match (&w[k], &w[k + 1]) {
            (Letter::Coeff(a), Letter::Coeff(b)) => {
                let mut out = w.to_vec();
                out.splice(k..k + 2, [Letter::Coeff(a.mul(b)?)]);
                return Ok(StepOutcome::Rewrite(vec![out]));
            }
            (Letter::Gen(i), Letter::Coeff(r)) => {
                let mut moved = w.to_vec();
                moved.splice(
                    k..k + 2,
                    [Letter::Coeff(alg.sigma_apply(*i, r)?), Letter::Gen(*i)],
                );
                let mut dropped = w.to_vec();
                dropped.splice(k..k + 2, [Letter::Coeff(alg.delta_apply(*i, r)?)]);
                return Ok(StepOutcome::Rewrite(vec![moved, dropped]));
            }
            (Letter::Gen(j), Letter::Gen(i)) if j > i => {
                let rel = alg.relation(*i, *j);
                let mut parts = Vec::new();
                let mut swapped = w.to_vec();
                swapped.splice(
                    k..k + 2,
                    [Letter::Coeff(rel.c.clone()), Letter::Gen(*i), Letter::Gen(*j)],
                );
                parts.push(swapped);
                let mut constant = w.to_vec();
                constant.splice(k..k + 2, [Letter::Coeff(rel.tail_const.clone())]);
                parts.push(constant);
                for (g, t) in rel.tail_lin.iter().enumerate() {
                    if t.is_zero() {
                        continue;
                    }
                    let mut lin = w.to_vec();
                    lin.splice(k..k + 2, [Letter::Coeff(t.clone()), Letter::Gen(g)]);
                    parts.push(lin);
                }
                return Ok(StepOutcome::Rewrite(parts));
            }
            _ => {}
        }
    }
    Ok(StepOutcome::Normal)
}

// ---- Q-coordinates of ring elements ------------------------------------------

/// Coordinate key of one rational dimension of a coefficient: the ring
/// monomial plus the imaginary flag.
type RingKey = (Vec<u32>, bool);

/// Rational coordinates of a coefficient.
fn flatten_ring(e: &RingElem) -> Vec<(RingKey, Rat)> {
    let mut out = Vec::new();
    let mut push = |key: Vec<u32>, re: &Rat, im: Option<&Rat>| {
        if !FieldScalar::is_zero(re) {
            out.push(((key.clone(), false), re.clone()));
        }
        if let Some(im) = im {
            if !FieldScalar::is_zero(im) {
                out.push(((key, true), im.clone()));
            }
        }
    };
    match e {
        RingElem::Q(v) => push(Vec::new(), v, None),
        RingElem::Qi(v) => push(Vec::new(), &v.re, Some(&v.im)),
        RingElem::PQ(p) => {
            for (k, v) in &p.terms {
                push(k.iter().map(|&x| x as u32).collect(), v, None);
            }
        }
        RingElem::PQi(p) => {
            for (k, v) in &p.terms {
                push(k.iter().map(|&x| x as u32).collect(), &v.re, Some(&v.im));
            }
        }
        RingElem::SQ(p) => {
            for (d, v) in &p.coeffs {
                push(vec![*d], v, None);
            }
        }
        RingElem::SQi(p) => {
            for (d, v) in &p.coeffs {
                push(vec![*d], &v.re, Some(&v.im));
            }
        }
    }
    out
}

fn has_imaginary(ring: &Ring) -> bool {
    ring.imaginary().is_ok()
}

/// A Q-basis of the coefficient-ring elements of degree <= bound: the ring
/// monomials, with an i-multiple of each when the base field is Q(i).
fn ring_basis_elems(ring: &Ring, bound: u32) -> Vec<RingElem> {
    let mut keys: Vec<Vec<u32>> = Vec::new();
    match ring {
        Ring::Q | Ring::Qi => keys.push(Vec::new()),
        Ring::Poly { vars, .. } => {
            let mut exps: Vec<Exponent> = Vec::new();
            enumerate_exponents(vars.len(), bound as u16, &mut vec![0; vars.len()], 0, &mut exps);
            for e in exps {
                keys.push(e.0.iter().map(|&x| x as u32).collect());
            }
        }
        Ring::Skew { .. } => {
            for d in 0..=bound {
                keys.push(vec![d]);
            }
        }
    }
    let mut out = Vec::new();
    for key in keys {
        let m = ring_monomial(ring, &key);
        if has_imaginary(ring) {
            let i = ring.imaginary().unwrap();
            out.push(i.mul(&m).expect("same ring"));
        }
        out.push(m);
    }
    out
}

fn ring_monomial(ring: &Ring, key: &[u32]) -> RingElem {
    match ring {
        Ring::Q | Ring::Qi => ring.one(),
        Ring::Poly { .. } => {
            let mut acc = ring.one();
            for (g, &k) in key.iter().enumerate() {
                for _ in 0..k {
                    acc = acc.mul(&ring.generator(g).unwrap()).unwrap();
                }
            }
            acc
        }
        Ring::Skew { .. } => {
            let mut acc = ring.one();
            for _ in 0..key[0] {
                acc = acc.mul(&ring.generator(0).unwrap()).unwrap();
            }
            acc
        }
    }
}

fn enumerate_exponents(
    n: usize,
    budget: u16,
    cur: &mut Vec<u16>,
    pos: usize,
    out: &mut Vec<Exponent>,
) {
    if pos == n {
        out.push(Exponent(cur.clone()));
        return;
    }
    for v in 0..=budget {
        cur[pos] = v;
        enumerate_exponents(n, budget - v, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

#[derive(Clone, Copy, Debug)]
pub struct DegreeBound(pub u32);

#[derive(Debug)]
pub enum LinearMembership {
    /// In the module, with explicit bounded-degree quotients.
    Member(Vec<PolyA>),
    /// Certainly not expressible with quotients of combined degree <= bound.
    NotMemberUpToBound,
    /// The linear system exceeded the size guard.
    TooLarge,
}

/// Decides f in sum F_i * {q : deg q <= bound} by solving one rational
/// linear system, using the left R-basis of A and a Q-basis of R. The bound
/// caps the extension exponent and the coefficient monomial combined.
pub fn linear_membership(
    alg: &Algebra,
    f: &VecA,
    gens: &[VecA],
    bound: DegreeBound,
    guard: usize,
) -> Result<LinearMembership> {
    let ring = alg.ring();
    let n = alg.n();
    // quotient atoms: coefficient basis element times extension monomial
    let mut atoms: Vec<(RingElem, Exponent)> = Vec::new();
    let mut exps: Vec<Exponent> = Vec::new();
    enumerate_exponents(n, bound.0 as u16, &mut vec![0; n], 0, &mut exps);
    for e in &exps {
        let left = bound.0 - e.deg() as u32;
        for b in ring_basis_elems(ring, left) {
            atoms.push((b, e.clone()));
        }
    }
    let ncols = atoms.len() * gens.len();
    if ncols > guard {
        return Ok(LinearMembership::TooLarge);
    }
    type Key = (usize, Exponent, RingKey);
    let mut coords: BTreeMap<Key, usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(ncols);
    let keyed = |coords: &mut BTreeMap<Key, usize>, v: &VecA| -> Vec<(usize, Rat)> {
        let mut col = Vec::new();
        for ((j, e), c) in &v.terms {
            for (rk, s) in flatten_ring(c) {
                let key = (*j, e.clone(), rk);
                let next = coords.len();
                let row = *coords.entry(key).or_insert(next);
                col.push((row, s));
            }
        }
        col
    };
    for g in gens {
        for (b, e) in &atoms {
            let q = PolyA::monomial(n, e.clone(), b.clone());
            let prod = alg.vec_right_mul(g, &q)?;
            columns.push(keyed(&mut coords, &prod));
        }
    }
    let rhs_col = keyed(&mut coords, f);
    let nrows = coords.len();
    if nrows.saturating_mul(ncols) > guard.saturating_mul(400) {
        return Ok(LinearMembership::TooLarge);
    }
    let mut matrix: Vec<Vec<Rat>> = vec![vec![FieldScalar::zero(); ncols]; nrows];
    for (cidx, col) in columns.iter().enumerate() {
        for (r, s) in col {
            matrix[*r][cidx] = FieldScalar::add(&matrix[*r][cidx], s);
        }
    }
    let mut rhs: Vec<Rat> = vec![FieldScalar::zero(); nrows];
    for (r, s) in rhs_col {
        rhs[r] = FieldScalar::add(&rhs[r], &s);
    }
    match solve_linear(&mut matrix, &mut rhs) {
        None => Ok(LinearMembership::NotMemberUpToBound),
        Some(sol) => {
            let mut quotients = Vec::with_capacity(gens.len());
            for (i, _) in gens.iter().enumerate() {
                let mut q = PolyA::zero(n);
                for (a, (b, e)) in atoms.iter().enumerate() {
                    let lambda = &sol[i * atoms.len() + a];
                    if FieldScalar::is_zero(lambda) {
                        continue;
                    }
                    // rational scalars are central, either side works
                    let coeff = b.mul(&ring.from_rat(lambda.clone()))?;
                    q.add_term(e.clone(), coeff);
                }
                quotients.push(q);
            }
            Ok(LinearMembership::Member(quotients))
        }
    }
}

/// Basis of the degree-bounded kernel of b -> sum gens[i] b_i over the
/// coefficient ring: every returned tuple satisfies the equation exactly.
pub fn ring_kernel_bounded(ring: &Ring, gens: &[RingElem], bound: u32) -> Vec<Vec<RingElem>> {
    let atoms = ring_basis_elems(ring, bound);
    let mut coords: BTreeMap<RingKey, usize> = BTreeMap::new();
    let mut cols: Vec<Vec<(usize, Rat)>> = Vec::new();
    for g in gens {
        for a in &atoms {
            let prod = g.mul(a).expect("same ring");
            let mut col = Vec::new();
            for (rk, s) in flatten_ring(&prod) {
                let next = coords.len();
                let row = *coords.entry(rk).or_insert(next);
                col.push((row, s));
            }
            cols.push(col);
        }
    }
    let nrows = coords.len();
    let ncols = cols.len();
    let mut matrix = vec![vec![<Rat as FieldScalar>::zero(); ncols]; nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, s) in col {
            matrix[*r][c] = FieldScalar::add(&matrix[*r][c], s);
        }
    }
    let kernel = kernel_basis(&mut matrix);
    kernel
        .into_iter()
        .map(|v| {
            (0..gens.len())
                .map(|i| {
                    let mut acc = ring.zero();
                    for (a, atom) in atoms.iter().enumerate() {
                        let lambda = &v[i * atoms.len() + a];
                        if FieldScalar::is_zero(lambda) {
                            continue;
                        }
                        let t = atom.mul(&ring.from_rat(lambda.clone())).unwrap();
                        acc = acc.add(&t).unwrap();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Solves sum_k cols[k] * c_k = target over the coefficient ring with
/// c_k of degree <= bound; the tuples cols[k] and target share one length.
pub fn ring_module_solve_bounded(
    ring: &Ring,
    cols: &[Vec<RingElem>],
    target: &[RingElem],
    bound: u32,
) -> Option<Vec<RingElem>> {
    let atoms = ring_basis_elems(ring, bound);
    let m = target.len();
    let mut coords: BTreeMap<(usize, RingKey), usize> = BTreeMap::new();
    let mut sys_cols: Vec<Vec<(usize, Rat)>> = Vec::new();
    for tuple in cols {
        debug_assert_eq!(tuple.len(), m);
        for a in &atoms {
            let mut col = Vec::new();
            for (j, entry) in tuple.iter().enumerate() {
                let prod = entry.mul(a).expect("same ring");
                for (rk, s) in flatten_ring(&prod) {
                    let next = coords.len();
                    let row = *coords.entry((j, rk)).or_insert(next);
                    col.push((row, s));
                }
            }
            sys_cols.push(col);
        }
    }
    let mut rhs_entries = Vec::new();
    for (j, entry) in target.iter().enumerate() {
        for (rk, s) in flatten_ring(entry) {
            let next = coords.len();
            let row = *coords.entry((j, rk)).or_insert(next);
            rhs_entries.push((row, s));
        }
    }
    let nrows = coords.len();
    let ncols = sys_cols.len();
    let mut matrix = vec![vec![<Rat as FieldScalar>::zero(); ncols]; nrows];
    for (c, col) in sys_cols.iter().enumerate() {
        for (r, s) in col {
            matrix[*r][c] = FieldScalar::add(&matrix[*r][c], s);
        }
    }
    let mut rhs = vec![<Rat as FieldScalar>::zero(); nrows];
    for (r, s) in rhs_entries {
        rhs[r] = FieldScalar::add(&rhs[r], &s);
    }
    let sol = solve_linear(&mut matrix, &mut rhs)?;
    Some(
        (0..cols.len())
            .map(|k| {
                let mut acc = ring.zero();
                for (a, atom) in atoms.iter().enumerate() {
                    let lambda = &sol[k * atoms.len() + a];
                    if FieldScalar::is_zero(lambda) {
                        continue;
                    }
                    let t = atom.mul(&ring.from_rat(lambda.clone())).unwrap();
                    acc = acc.add(&t).unwrap();
                }
                acc
            })
            .collect(),
    )
}

/// Gaussian elimination over an exact field; consumes the inputs and returns
/// one solution of A x = b when the system is consistent.
pub fn solve_linear<F: FieldScalar>(a: &mut [Vec<F>], b: &mut [F]) -> Option<Vec<F>> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let piv = (row..nrows).find(|&r| !a[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        a.swap(row, piv);
        b.swap(row, piv);
        let inv = a[row][col].inv().unwrap();
        for c in col..ncols {
            a[row][c] = a[row][c].mul(&inv);
        }
        b[row] = b[row].mul(&inv);
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..ncols {
                    let delta = a[row][c].mul(&factor);
                    a[r][c] = a[r][c].sub(&delta);
                }
                let delta = b[row].mul(&factor);
                b[r] = b[r].sub(&delta);
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    for r in row..nrows {
        if !b[r].is_zero() {
            return None;
        }
    }
    let mut x = vec![F::zero(); ncols];
    for (col, piv) in pivot_of_col.iter().enumerate() {
        if let Some(r) = piv {
            x[col] = b[*r].clone();
        }
    }
    Some(x)
}

/// Basis of the kernel of A over an exact field.
pub fn kernel_basis<F: FieldScalar>(a: &mut [Vec<F>]) -> Vec<Vec<F>> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let piv = (row..nrows).find(|&r| !a[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        a.swap(row, piv);
        let inv = a[row][col].inv().unwrap();
        for c in col..ncols {
            a[row][c] = a[row][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..ncols {
                    let delta = a[row][c].mul(&factor);
                    a[r][c] = a[r][c].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (col, piv) in pivot_of_col.iter().enumerate() {
            if let Some(r) = piv {
                v[col] = a[*r][free].neg();
            }
        }
        basis.push(v);
    }
    basis
}
