//! Monomial orders on Mon(A) and Mon(A^m), divisibility and leading data.
//! Both shipped base orders are degree compatible, which the right division
//! algorithm needs; the module orders break ties by component index.

use std::cmp::Ordering;

use crate::algebra::{Exponent, PolyA, VecA};
use crate::coeffring::RingElem;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseOrder {
    DegLex,
    DegRevLex,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleOrder {
    Top,
    TopRev,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderSpec {
    pub base: BaseOrder,
    pub module: ModuleOrder,
}

impl OrderSpec {
    pub fn new(base: BaseOrder, module: ModuleOrder) -> Self {
        OrderSpec { base, module }
    }
}

impl BaseOrder {
    /// Accepted names: deglex|gradlex and degrevlex|gradlexrev, any case.
    pub fn parse(s: &str) -> Option<BaseOrder> {
        match s.to_ascii_lowercase().as_str() {
            "deglex" | "gradlex" => Some(BaseOrder::DegLex),
            "degrevlex" | "gradlexrev" => Some(BaseOrder::DegRevLex),
            _ => None,
        }
    }
}

impl ModuleOrder {
    pub fn parse(s: &str) -> Option<ModuleOrder> {
        match s.to_ascii_lowercase().as_str() {
            "top" => Some(ModuleOrder::Top),
            "toprev" => Some(ModuleOrder::TopRev),
            _ => None,
        }
    }
}

pub fn cmp_mono(a: &Exponent, b: &Exponent, base: BaseOrder) -> Ordering {
    debug_assert_eq!(a.arity(), b.arity());
    let by_degree = a.deg().cmp(&b.deg());
    if by_degree != Ordering::Equal {
        return by_degree;
    }
    match base {
        BaseOrder::DegLex => {
            // leftmost differing coordinate, larger wins
            for (x, y) in a.0.iter().zip(&b.0) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        }
        BaseOrder::DegRevLex => {
            // rightmost differing coordinate, smaller wins
            for (x, y) in a.0.iter().zip(&b.0).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        }
    }
}

/// Compare module monomials (exponent, 0-based component index).
pub fn cmp_vec_mono(
    a: (&Exponent, usize),
    b: (&Exponent, usize),
    spec: OrderSpec,
) -> Ordering {
    let by_mono = cmp_mono(a.0, b.0, spec.base);
    if by_mono != Ordering::Equal {
        return by_mono;
    }
    match spec.module {
        ModuleOrder::Top => a.1.cmp(&b.1),
        ModuleOrder::TopRev => a.1.cmp(&b.1).reverse(),
    }
}

/// Componentwise divisibility; order-independent by degree compatibility.
pub fn divides(a: &Exponent, b: &Exponent) -> bool {
    a.arity() == b.arity() && a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

/// The unique theta with b = theta + a; errors when a does not divide b.
pub fn quotient_exponent(a: &Exponent, b: &Exponent) -> Result<Exponent> {
    b.checked_sub(a).ok_or(Error::ArityMismatch)
}

pub fn lcm_mono(a: &Exponent, b: &Exponent) -> Exponent {
    Exponent(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect())
}

/// Least common multiple in Mon(A^m): absent (the zero vector) when the
/// component indices differ.
pub fn lcm_vec(a: (&Exponent, usize), b: (&Exponent, usize)) -> Option<(Exponent, usize)> {
    if a.1 != b.1 {
        return None;
    }
    Some((lcm_mono(a.0, b.0), a.1))
}

/// Leading monomial and coefficient of f, None for the zero polynomial
/// (the designated bottom element).
pub fn leading_poly<'a>(f: &'a PolyA, base: BaseOrder) -> Option<(&'a Exponent, &'a RingElem)> {
    f.terms
        .iter()
        .max_by(|x, y| cmp_mono(x.0, y.0, base))
}

/// Leading data of a module element: ((exponent, index), coefficient).
pub fn leading_vec<'a>(
    v: &'a VecA,
    spec: OrderSpec,
) -> Option<((&'a Exponent, usize), &'a RingElem)> {
    v.terms
        .iter()
        .max_by(|x, y| cmp_vec_mono((&(x.0).1, (x.0).0), (&(y.0).1, (y.0).0), spec))
        .map(|((idx, e), c)| ((e, *idx), c))
}

/// Terms of f sorted descending; used by printers and the division loop.
pub fn sorted_terms_poly<'a>(f: &'a PolyA, base: BaseOrder) -> Vec<(&'a Exponent, &'a RingElem)> {
    let mut v: Vec<_> = f.terms.iter().collect();
    v.sort_by(|x, y| cmp_mono(y.0, x.0, base));
    v
}

pub fn sorted_terms_vec<'a>(
    v: &'a VecA,
    spec: OrderSpec,
) -> Vec<((&'a Exponent, usize), &'a RingElem)> {
    let mut out: Vec<_> = v.terms.iter().map(|((j, e), c)| ((e, *j), c)).collect();
    out.sort_by(|x, y| cmp_vec_mono((y.0 .0, y.0 .1), (x.0 .0, x.0 .1), spec));
    out
}
