//! Deterministic text rendering. Every printed element reparses to the same
//! canonical value: monomials use explicit `*` separators, composite
//! coefficients are parenthesized, terms are sorted descending under the
//! active order.

use crate::algebra::{Algebra, Exponent, PolyA, VecA};
use crate::coeffring::{Ring, RingElem};
use crate::mpoly::{deglex, MPoly};
use crate::order::{sorted_terms_poly, BaseOrder};
use crate::scalar::{Gauss, Rat};
use crate::spoly::SPoly;

fn is_composite_gauss(g: &Gauss) -> bool {
    !num_traits::Zero::is_zero(&g.re) && !num_traits::Zero::is_zero(&g.im)
}

fn scalar_str_rat(c: &Rat) -> String {
    format!("{c}")
}

fn scalar_str_gauss(c: &Gauss) -> String {
    format!("{c}")
}

fn mono_str(names: &[String], e: &[u16]) -> String {
    let mut parts = Vec::new();
    for (name, &k) in names.iter().zip(e) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

/// scalar * monomial with the conventional 1/-1 elisions. A composite
/// scalar needs parentheses only in multiplication position; constant terms
/// join a sum as they are.
fn term_str(scalar: String, composite: bool, mono: String) -> String {
    if mono.is_empty() {
        return scalar;
    }
    if composite {
        return format!("({scalar})*{mono}");
    }
    if scalar == "1" {
        mono
    } else if scalar == "-1" {
        format!("-{mono}")
    } else {
        format!("{scalar}*{mono}")
    }
}

fn join_terms(pieces: Vec<String>) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, p) in pieces.iter().enumerate() {
        if k == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

fn format_mpoly_rat(vars: &[String], p: &MPoly<Rat>) -> String {
    let mut terms: Vec<_> = p.terms.iter().collect();
    terms.sort_by(|a, b| deglex(b.0, a.0));
    join_terms(
        terms
            .into_iter()
            .map(|(e, c)| term_str(scalar_str_rat(c), false, mono_str(vars, e)))
            .collect(),
    )
}

fn format_mpoly_gauss(vars: &[String], p: &MPoly<Gauss>) -> String {
    let mut terms: Vec<_> = p.terms.iter().collect();
    terms.sort_by(|a, b| deglex(b.0, a.0));
    join_terms(
        terms
            .into_iter()
            .map(|(e, c)| term_str(scalar_str_gauss(c), is_composite_gauss(c), mono_str(vars, e)))
            .collect(),
    )
}

fn format_spoly_rat(var: &str, p: &SPoly<Rat>) -> String {
    join_terms(
        p.coeffs
            .iter()
            .rev()
            .map(|(d, c)| {
                term_str(
                    scalar_str_rat(c),
                    false,
                    mono_str(&[var.to_string()], &[*d as u16]),
                )
            })
            .collect(),
    )
}

fn format_spoly_gauss(var: &str, p: &SPoly<Gauss>) -> String {
    join_terms(
        p.coeffs
            .iter()
            .rev()
            .map(|(d, c)| {
                term_str(
                    scalar_str_gauss(c),
                    is_composite_gauss(c),
                    mono_str(&[var.to_string()], &[*d as u16]),
                )
            })
            .collect(),
    )
}

pub fn format_ring_elem(ring: &Ring, e: &RingElem) -> String {
    match (ring, e) {
        (_, RingElem::Q(c)) => scalar_str_rat(c),
        (_, RingElem::Qi(c)) => scalar_str_gauss(c),
        (Ring::Poly { vars, .. }, RingElem::PQ(p)) => format_mpoly_rat(vars, p),
        (Ring::Poly { vars, .. }, RingElem::PQi(p)) => format_mpoly_gauss(vars, p),
        (Ring::Skew { var, .. }, RingElem::SQ(p)) => format_spoly_rat(var, p),
        (Ring::Skew { var, .. }, RingElem::SQi(p)) => format_spoly_gauss(var, p),
        _ => "<ring mismatch>".into(),
    }
}

/// Whether the rendered coefficient needs parentheses in term position.
/// Single-term coefficients with a composite scalar on a nonempty monomial
/// are already protected by the inner rendering.
fn coeff_is_composite(ring: &Ring, e: &RingElem) -> bool {
    match (ring, e) {
        (_, RingElem::Q(_)) => false,
        (_, RingElem::Qi(c)) => is_composite_gauss(c),
        (_, RingElem::PQ(p)) => p.terms.len() > 1,
        (_, RingElem::PQi(p)) => match p.terms.len() {
            0 | 1 => p
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.iter().all(|&k| k == 0) && is_composite_gauss(c))
                .unwrap_or(false),
            _ => true,
        },
        (_, RingElem::SQ(p)) => p.coeffs.len() > 1,
        (_, RingElem::SQi(p)) => match p.coeffs.len() {
            0 | 1 => p
                .coeffs
                .iter()
                .next()
                .map(|(d, c)| *d == 0 && is_composite_gauss(c))
                .unwrap_or(false),
            _ => true,
        },
    }
}

pub fn format_poly(alg: &Algebra, f: &PolyA, base: BaseOrder) -> String {
    let names = &alg.spec().var_names;
    let ring = alg.ring();
    let pieces = sorted_terms_poly(f, base)
        .into_iter()
        .map(|(e, c)| {
            term_str(
                format_ring_elem(ring, c),
                coeff_is_composite(ring, c),
                mono_str(names, &e.0),
            )
        })
        .collect();
    join_terms(pieces)
}

pub fn format_vec(alg: &Algebra, v: &VecA, base: BaseOrder) -> String {
    let comps: Vec<String> = (0..v.rank)
        .map(|j| format_poly(alg, &v.component(j), base))
        .collect();
    format!("[{}]", comps.join(", "))
}

pub fn format_exponent(alg: &Algebra, e: &Exponent) -> String {
    let s = mono_str(&alg.spec().var_names, &e.0);
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}
