//! Right Groebner bases for right submodules of A^m: syzygy sets of twisted
//! leading coefficients, S-vectors, the completion loop over subsets of the
//! current basis, the basis check, membership and trimming.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Exponent, PolyA, VecA};
use crate::coeffring::{right_syzygies, RingElem};
use crate::division::{divide, is_reducible, DivisionResult};
use crate::error::{Error, Result};
use crate::order::{lcm_vec, leading_vec, quotient_exponent, OrderSpec};

/// Data attached to a subset S of the basis: the least common multiple X_S
/// of the leading monomials (absent when indices differ) and the exponents
/// beta_i = exp(lm(g_i)), gamma_i with gamma_i + beta_i = exp(X_S).
#[derive(Clone, Debug)]
pub struct SubsetData {
    pub indices: Vec<usize>,
    pub lcm: Option<(Exponent, usize)>,
    pub betas: Vec<Exponent>,
    pub gammas: Vec<Exponent>,
}

pub fn subset_data(
    alg: &Algebra,
    basis: &[VecA],
    indices: &[usize],
    ord: OrderSpec,
) -> Result<SubsetData> {
    let _ = alg;
    let mut lcm: Option<(Exponent, usize)> = None;
    let mut betas = Vec::with_capacity(indices.len());
    let mut first = true;
    for &i in indices {
        let ((e, idx), _) = leading_vec(&basis[i], ord).ok_or(Error::ZeroGenerator)?;
        betas.push(e.clone());
        if first {
            lcm = Some((e.clone(), idx));
            first = false;
        } else if let Some((cur, cidx)) = &lcm {
            lcm = lcm_vec((cur, *cidx), (e, idx));
        }
    }
    let gammas = match &lcm {
        Some((x, _)) => {
            let mut gs = Vec::with_capacity(betas.len());
            for b in &betas {
                gs.push(quotient_exponent(b, x)?);
            }
            gs
        }
        None => Vec::new(),
    };
    Ok(SubsetData { indices: indices.to_vec(), lcm, betas, gammas })
}

/// Generators of Syz_R[ lc(g_1) c_{b_1,g_1} ... lc(g_s) c_{b_s,g_s} ].
pub fn b_set(alg: &Algebra, basis: &[VecA], data: &SubsetData, ord: OrderSpec) -> Result<Vec<Vec<RingElem>>> {
    debug_assert!(data.lcm.is_some());
    let mut row = Vec::with_capacity(data.indices.len());
    for (k, &i) in data.indices.iter().enumerate() {
        let (_, lc) = leading_vec(&basis[i], ord).ok_or(Error::ZeroGenerator)?;
        let c = alg.c_constant(&data.betas[k], &data.gammas[k])?;
        row.push(lc.mul(&c)?);
    }
    right_syzygies(&row)
}

/// The S-vector sum g_i psi^{-1}_{b_i,g_i}(b_i) x^{g_i}; its leading terms
/// cancel below X_S for every syzygy tuple b.
pub fn s_vector(
    alg: &Algebra,
    basis: &[VecA],
    data: &SubsetData,
    b: &[RingElem],
) -> Result<VecA> {
    let rank = basis[data.indices[0]].rank;
    let mut acc = VecA::zero(rank, alg.n());
    for (k, &i) in data.indices.iter().enumerate() {
        let r = alg.psi_inv(&data.betas[k], &data.gammas[k], &b[k])?;
        if r.is_zero() {
            continue;
        }
        let mover = PolyA::monomial(alg.n(), data.gammas[k].clone(), r);
        acc = alg.vec_add(&acc, &alg.vec_right_mul(&basis[i], &mover)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct Provenance {
    pub subset: Vec<usize>,
    pub syzygy: Vec<RingElem>,
    /// Right unit the remainder was scaled by during normalization.
    pub scaled_by: Option<RingElem>,
}

#[derive(Clone, Debug)]
pub struct GroebnerResult {
    pub basis: Vec<VecA>,
    /// None for original generators, the producing subset otherwise.
    pub provenance: Vec<Option<Provenance>>,
    pub order: OrderSpec,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GroebnerOptions {
    /// Hard cap on subset cardinality; exceeding it is an error, never a
    /// silently truncated basis.
    pub max_subset: Option<usize>,
}

/// Subsets of 0..len that contain at least one index >= first_new, by
/// increasing cardinality then lexicographic member order.
fn new_subsets(len: usize, first_new: usize, cap: Option<usize>) -> Result<Vec<Vec<usize>>> {
    if let Some(c) = cap {
        if len > c {
            return Err(Error::SubsetCapExceeded { cap: c, needed: len });
        }
    }
    let mut out = Vec::new();
    for size in 1..=len {
        let mut cur = Vec::with_capacity(size);
        collect_subsets(0, len, size, &mut cur, &mut out);
    }
    Ok(out
        .into_iter()
        .filter(|s| s.iter().any(|&i| i >= first_new))
        .collect())
}

fn collect_subsets(
    start: usize,
    len: usize,
    size: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in start..len {
        if len - i < size - cur.len() {
            break;
        }
        cur.push(i);
        collect_subsets(i + 1, len, size, cur, out);
        cur.pop();
    }
}

/// Makes the leading coefficient 1 by a right unit when possible.
fn normalize_monic(alg: &Algebra, v: &VecA, ord: OrderSpec) -> Result<(VecA, Option<RingElem>)> {
    let ((e, _), lc) = match leading_vec(v, ord) {
        Some(l) => l,
        None => return Ok((v.clone(), None)),
    };
    if lc.is_one() {
        return Ok((v.clone(), None));
    }
    if !lc.is_invertible() {
        return Ok((v.clone(), None));
    }
    // lc(v * u) = lc(v) * sigma^e(u), so u = sigma^{-e}(lc^{-1})
    let u = alg.sigma_pow_inv(e, &lc.inverse()?)?;
    let scaled = alg.vec_scalar_right(v, &u)?;
    Ok((scaled, Some(u)))
}

/// The right Buchberger completion: extends F until every S-vector over
/// every same-index subset reduces to zero.
pub fn groebner(
    alg: &Algebra,
    gens: &[VecA],
    ord: OrderSpec,
    opts: GroebnerOptions,
) -> Result<GroebnerResult> {
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    let mut basis: Vec<VecA> = gens.to_vec();
    let mut provenance: Vec<Option<Provenance>> = vec![None; gens.len()];
    let mut done_upto = 0; // P(G) = subsets of basis[..done_upto]
    loop {
        let len = basis.len();
        if done_upto == len {
            break;
        }
        let subsets = new_subsets(len, done_upto, opts.max_subset)?;
        done_upto = len;
        for subset in subsets {
            let data = subset_data(alg, &basis, &subset, ord)?;
            if data.lcm.is_none() {
                continue;
            }
            for b in b_set(alg, &basis, &data, ord)? {
                let s = s_vector(alg, &basis, &data, &b)?;
                if s.is_zero() {
                    continue;
                }
                let reduced = divide(alg, &s, &basis, ord)?;
                if reduced.remainder.is_zero() {
                    continue;
                }
                let (normalized, scaled_by) = normalize_monic(alg, &reduced.remainder, ord)?;
                if basis.iter().any(|g| *g == normalized) {
                    continue;
                }
                basis.push(normalized);
                provenance.push(Some(Provenance {
                    subset: subset.clone(),
                    syzygy: b.clone(),
                    scaled_by,
                }));
            }
        }
    }
    Ok(GroebnerResult { basis, provenance, order: ord })
}

/// A failed check: the subset, syzygy tuple and nonzero remainder found.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub subset: Vec<usize>,
    pub syzygy: Vec<RingElem>,
    pub remainder: VecA,
}

/// Checks the basis criterion directly: every S-vector over every
/// same-index subset must reduce to zero.
pub fn is_groebner(
    alg: &Algebra,
    basis: &[VecA],
    ord: OrderSpec,
    opts: GroebnerOptions,
) -> Result<std::result::Result<(), Counterexample>> {
    for g in basis {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    let subsets = new_subsets(basis.len(), 0, opts.max_subset)?;
    for subset in subsets {
        let data = subset_data(alg, basis, &subset, ord)?;
        if data.lcm.is_none() {
            continue;
        }
        for b in b_set(alg, basis, &data, ord)? {
            let s = s_vector(alg, basis, &data, &b)?;
            let reduced = divide(alg, &s, basis, ord)?;
            if !reduced.remainder.is_zero() {
                return Ok(Err(Counterexample {
                    subset,
                    syzygy: b,
                    remainder: reduced.remainder,
                }));
            }
        }
    }
    Ok(Ok(()))
}

#[derive(Clone, Debug)]
pub enum Membership {
    Member { quotients: Vec<PolyA> },
    NotMember { remainder: VecA },
}

/// Membership through reduction: correct whenever the basis is a Groebner
/// basis of the submodule it generates.
pub fn member(alg: &Algebra, f: &VecA, gb: &GroebnerResult) -> Result<(Membership, DivisionResult)> {
    let res = divide(alg, f, &gb.basis, gb.order)?;
    let m = if res.remainder.is_zero() {
        Membership::Member { quotients: res.quotients.clone() }
    } else {
        Membership::NotMember { remainder: res.remainder.clone() }
    };
    Ok((m, res))
}

/// Removes elements that are one-step reducible by the rest; the result is
/// still a Groebner basis of the same submodule. Surviving provenance
/// entries keep describing the completion run they came from, so their
/// subset indices refer to the untrimmed basis.
pub fn trim(alg: &Algebra, gb: &GroebnerResult) -> Result<GroebnerResult> {
    let mut basis = gb.basis.clone();
    let mut provenance = gb.provenance.clone();
    loop {
        let mut removed = false;
        for k in 0..basis.len() {
            let rest: Vec<VecA> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, g)| g.clone())
                .collect();
            if rest.is_empty() {
                break;
            }
            if is_reducible(alg, &basis[k], &rest, gb.order)?.is_some() {
                basis.remove(k);
                provenance.remove(k);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    Ok(GroebnerResult { basis, provenance, order: gb.order })
}

/// Replays every basis element as an exact right combination of the
/// original generators, walking the provenance chain. Valid on the direct
/// output of `groebner` (trimming renumbers the basis).
pub fn replay_combinations(
    alg: &Algebra,
    gens: &[VecA],
    gb: &GroebnerResult,
) -> Result<Vec<Vec<PolyA>>> {
    // combos[k][i]: basis[k] = sum gens[i] * combos[k][i]
    let mut combos: Vec<Vec<PolyA>> = Vec::with_capacity(gb.basis.len());
    let n = alg.n();
    for (k, prov) in gb.provenance.iter().enumerate() {
        match prov {
            None => {
                let mut row = vec![PolyA::zero(n); gens.len()];
                row[k] = alg.poly_one();
                combos.push(row);
            }
            Some(p) => {
                // s-vector of the producing subset, then subtract the
                // division part: remainder = s - sum basis[j] q_j
                let data = subset_data(alg, &gb.basis, &p.subset, gb.order)?;
                let s = s_vector(alg, &gb.basis, &data, &p.syzygy)?;
                let div = divide(alg, &s, &gb.basis[..k], gb.order)?;
                // row(s) = sum over subset of row(g_i) * (psi x^gamma term)
                let mut row = vec![PolyA::zero(n); gens.len()];
                for (t, &i) in data.indices.iter().enumerate() {
                    let r = alg.psi_inv(&data.betas[t], &data.gammas[t], &p.syzygy[t])?;
                    if r.is_zero() {
                        continue;
                    }
                    let mover = PolyA::monomial(n, data.gammas[t].clone(), r);
                    for (gi, base_combo) in combos[i].iter().enumerate() {
                        let add = alg.poly_mul(base_combo, &mover)?;
                        row[gi] = alg.poly_add(&row[gi], &add)?;
                    }
                }
                for (j, q) in div.quotients.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    for (gi, base_combo) in combos[j].iter().enumerate() {
                        let sub = alg.poly_mul(base_combo, q)?;
                        row[gi] = alg.poly_sub(&row[gi], &sub)?;
                    }
                }
                if let Some(u) = &p.scaled_by {
                    let unit = PolyA::monomial(n, Exponent::zero(n), u.clone());
                    for entry in row.iter_mut() {
                        *entry = alg.poly_mul(entry, &unit)?;
                    }
                }
                combos.push(row);
            }
        }
    }
    Ok(combos)
}

/// Convenience map from basis index to its leading data, used by callers
/// that report bases.
pub fn leading_table(
    alg: &Algebra,
    gb: &GroebnerResult,
) -> BTreeMap<usize, (Exponent, usize)> {
    let _ = alg;
    let mut out = BTreeMap::new();
    for (k, g) in gb.basis.iter().enumerate() {
        if let Some(((e, idx), _)) = leading_vec(g, gb.order) {
            out.insert(k, (e.clone(), idx));
        }
    }
    out
}
