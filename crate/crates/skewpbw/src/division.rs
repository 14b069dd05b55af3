//! The right reduction relation and the right division algorithm in A^m.
//!
//! One reduction step eliminates the leading term of f by a right
//! combination sum f_i r_i x^{a_i} of generators whose leading monomials
//! divide lm(f); the coefficient equation lc(f) = sum lc(f_i) c_{b_i,a_i} s_i
//! is solved in the coefficient ring and pulled back through psi^{-1}.

use crate::algebra::{Algebra, Exponent, PolyA, VecA};
use crate::coeffring::{solve_right_membership, RingElem};
use crate::error::{Error, Result};
use crate::order::{leading_vec, quotient_exponent, OrderSpec};

/// One recorded reduction step: after = before - sum f_i r_i x^{a_i}.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub participants: Vec<(usize, RingElem, Exponent)>,
    pub before: VecA,
    pub after: VecA,
}

#[derive(Clone, Debug)]
pub struct DivisionResult {
    pub quotients: Vec<PolyA>,
    pub remainder: VecA,
    pub steps: Vec<ReductionStep>,
}

impl DivisionResult {
    /// Replays sum f_i q_i + h for the exactness checks.
    pub fn recombine(&self, alg: &Algebra, gens: &[VecA]) -> Result<VecA> {
        let mut acc = self.remainder.clone();
        for (g, q) in gens.iter().zip(&self.quotients) {
            acc = alg.vec_add(&acc, &alg.vec_right_mul(g, q)?)?;
        }
        Ok(acc)
    }
}

/// Witness that one reduction step applies: the divisor set J, the exponent
/// shifts, the solved coefficients s_j and their psi-pullbacks r_j.
#[derive(Clone, Debug)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub alphas: Vec<Exponent>,
    pub betas: Vec<Exponent>,
    pub sols: Vec<RingElem>,
    pub rs: Vec<RingElem>,
}

fn check_inputs(alg: &Algebra, f: &VecA, gens: &[VecA]) -> Result<()> {
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if g.rank != f.rank || g.n != alg.n() {
            return Err(Error::RankMismatch);
        }
    }
    if f.n != alg.n() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// Finds a one-step reduction of f by gens, if any: J nonempty and the
/// leading-coefficient equation soluble.
pub fn is_reducible(
    alg: &Algebra,
    f: &VecA,
    gens: &[VecA],
    ord: OrderSpec,
) -> Result<Option<Witness>> {
    check_inputs(alg, f, gens)?;
    let ((f_exp, f_idx), f_lc) = match leading_vec(f, ord) {
        Some(l) => l,
        None => return Ok(None), // zero is reduced by definition
    };
    let mut indices = Vec::new();
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    let mut row = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let ((g_exp, g_idx), g_lc) = leading_vec(g, ord).expect("nonzero generator");
        if g_idx != f_idx || !crate::order::divides(g_exp, f_exp) {
            continue;
        }
        let alpha = quotient_exponent(g_exp, f_exp)?;
        let c = alg.c_constant(g_exp, &alpha)?;
        row.push(g_lc.mul(&c)?);
        indices.push(j);
        alphas.push(alpha);
        betas.push(g_exp.clone());
    }
    if indices.is_empty() {
        return Ok(None);
    }
    let sols = match solve_right_membership(f_lc, &row)? {
        Some(s) => s,
        None => return Ok(None),
    };
    let mut rs = Vec::with_capacity(sols.len());
    for (k, s) in sols.iter().enumerate() {
        rs.push(alg.psi_inv(&betas[k], &alphas[k], s)?);
    }
    Ok(Some(Witness { indices, alphas, betas, sols, rs }))
}

/// Applies one recorded reduction step.
pub fn reduce_once(
    alg: &Algebra,
    f: &VecA,
    gens: &[VecA],
    witness: &Witness,
) -> Result<(VecA, ReductionStep)> {
    let mut h = f.clone();
    let mut participants = Vec::new();
    for (k, &j) in witness.indices.iter().enumerate() {
        let r = &witness.rs[k];
        if r.is_zero() {
            continue;
        }
        let move_by = PolyA::monomial(alg.n(), witness.alphas[k].clone(), r.clone());
        h = alg.vec_sub(&h, &alg.vec_right_mul(&gens[j], &move_by)?)?;
        participants.push((j, r.clone(), witness.alphas[k].clone()));
    }
    let step = ReductionStep { participants, before: f.clone(), after: h.clone() };
    Ok((h, step))
}

/// The right division algorithm: f = sum f_i q_i + h with h reduced with
/// respect to the generators. When the leading-coefficient equation is
/// insoluble the loop stops with the current h.
pub fn divide(alg: &Algebra, f: &VecA, gens: &[VecA], ord: OrderSpec) -> Result<DivisionResult> {
    check_inputs(alg, f, gens)?;
    let mut quotients = vec![PolyA::zero(alg.n()); gens.len()];
    let mut h = f.clone();
    let mut steps = Vec::new();
    while let Some(witness) = is_reducible(alg, &h, gens, ord)? {
        let (next, step) = reduce_once(alg, &h, gens, &witness)?;
        for (j, r, a) in &step.participants {
            let q_term = PolyA::monomial(alg.n(), a.clone(), r.clone());
            quotients[*j] = alg.poly_add(&quotients[*j], &q_term)?;
        }
        steps.push(step);
        h = next;
    }
    Ok(DivisionResult { quotients, remainder: h, steps })
}
