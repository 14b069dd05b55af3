//! Shared helpers for the integration suites: seeded random elements over
//! the shipped algebras and a few contract checkers.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewpbw::algebra::{Algebra, AlgebraSpec, Exponent, PolyA, Relation, VecA};
use skewpbw::coeffring::{Ring, RingElem, RingEndo};
use skewpbw::division::DivisionResult;
use skewpbw::order::{cmp_vec_mono, leading_poly, leading_vec, OrderSpec};
use skewpbw::samples;
use skewpbw::scalar::{rat, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn shipped() -> Vec<Algebra> {
    vec![samples::diffusion(), samples::iterated_skew(), samples::weyl()]
}

pub fn rand_rat<R: Rng>(r: &mut R) -> Rat {
    rat(r.gen_range(-5..=5), r.gen_range(1..=4))
}

pub fn rand_rat_nonzero<R: Rng>(r: &mut R) -> Rat {
    let mut v = rand_rat(r);
    while v == rat(0, 1) {
        v = rand_rat(r);
    }
    v
}

pub fn rand_exponent<R: Rng>(r: &mut R, n: usize, maxdeg: u16) -> Exponent {
    let mut e = Exponent::zero(n);
    let deg = r.gen_range(0..=maxdeg);
    for _ in 0..deg {
        e.0[r.gen_range(0..n)] += 1;
    }
    e
}

pub fn rand_scalar<R: Rng>(r: &mut R, ring: &Ring) -> RingElem {
    let q = rand_rat(r);
    match ring {
        Ring::Qi | Ring::Poly { base: skewpbw::coeffring::Base::Qi, .. }
        | Ring::Skew { base: skewpbw::coeffring::Base::Qi, .. } => {
            let re = ring.from_rat(q);
            let im = ring
                .imaginary()
                .unwrap()
                .mul(&ring.from_rat(rand_rat(r)))
                .unwrap();
            re.add(&im).unwrap()
        }
        _ => ring.from_rat(q),
    }
}

/// Random coefficient of bounded degree; may be zero.
pub fn rand_ring_elem<R: Rng>(r: &mut R, ring: &Ring, maxdeg: u16, maxterms: usize) -> RingElem {
    let mut acc = ring.zero();
    let terms = r.gen_range(0..=maxterms);
    for _ in 0..terms {
        let mut t = rand_scalar(r, ring);
        for g in 0..ring.ngens() {
            let k = r.gen_range(0..=maxdeg);
            for _ in 0..k {
                t = t.mul(&ring.generator(g).unwrap()).unwrap();
            }
        }
        acc = acc.add(&t).unwrap();
    }
    acc
}

pub fn rand_ring_elem_nonzero<R: Rng>(
    r: &mut R,
    ring: &Ring,
    maxdeg: u16,
    maxterms: usize,
) -> RingElem {
    loop {
        let e = rand_ring_elem(r, ring, maxdeg, maxterms.max(1));
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn rand_poly<R: Rng>(r: &mut R, alg: &Algebra, maxdeg: u16, maxterms: usize) -> PolyA {
    let n = alg.n();
    let mut acc = PolyA::zero(n);
    for _ in 0..r.gen_range(0..=maxterms) {
        let e = rand_exponent(r, n, maxdeg);
        let c = rand_ring_elem(r, alg.ring(), 1, 2);
        let term = PolyA::monomial(n, e, c);
        acc = alg.poly_add(&acc, &term).unwrap();
    }
    acc
}

pub fn rand_poly_nonzero<R: Rng>(r: &mut R, alg: &Algebra, maxdeg: u16, maxterms: usize) -> PolyA {
    loop {
        let p = rand_poly(r, alg, maxdeg, maxterms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rand_vec<R: Rng>(
    r: &mut R,
    alg: &Algebra,
    rank: usize,
    maxdeg: u16,
    maxterms: usize,
) -> VecA {
    let mut v = VecA::zero(rank, alg.n());
    for _ in 0..r.gen_range(0..=maxterms) {
        let idx = r.gen_range(0..rank);
        let e = rand_exponent(r, alg.n(), maxdeg);
        let c = rand_ring_elem(r, alg.ring(), 1, 2);
        let t = VecA::from_components(
            (0..rank)
                .map(|j| {
                    if j == idx {
                        PolyA::monomial(alg.n(), e.clone(), c.clone())
                    } else {
                        PolyA::zero(alg.n())
                    }
                })
                .collect(),
        );
        v = alg.vec_add(&v, &t).unwrap();
    }
    v
}

pub fn rand_vec_nonzero<R: Rng>(
    r: &mut R,
    alg: &Algebra,
    rank: usize,
    maxdeg: u16,
    maxterms: usize,
) -> VecA {
    loop {
        let v = rand_vec(r, alg, rank, maxdeg, maxterms.max(1));
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random extension of Q by two variables with one relation
/// v2 v1 = c v1 v2 + affine tail; always a consistent presentation.
pub fn rand_algebra_q2<R: Rng>(r: &mut R) -> Algebra {
    let ring = Ring::Q;
    let id = RingEndo::identity(&ring).unwrap();
    let c = ring.from_rat(rand_rat_nonzero(r));
    let tail_const = ring.from_rat(rand_rat(r));
    let tail_lin = vec![ring.from_rat(rand_rat(r)), ring.from_rat(rand_rat(r))];
    let mut relations = BTreeMap::new();
    relations.insert((0, 1), Relation { c, tail_const, tail_lin });
    Algebra::new(AlgebraSpec {
        name: "random-q2".into(),
        ring,
        var_names: vec!["v1".into(), "v2".into()],
        sigma: vec![id.clone(), id],
        delta: vec![Vec::new(), Vec::new()],
        relations,
    })
    .unwrap()
}

/// Checks the division output contract of the right division algorithm:
/// exactness, a reduced remainder, and the leading-monomial equality.
pub fn check_division_contract(
    alg: &Algebra,
    f: &VecA,
    gens: &[VecA],
    res: &DivisionResult,
    ord: OrderSpec,
) {
    // exactness
    assert_eq!(&res.recombine(alg, gens).unwrap(), f, "division identity broken");
    // reduced remainder
    assert!(
        skewpbw::division::is_reducible(alg, &res.remainder, gens, ord)
            .unwrap()
            .is_none(),
        "remainder still reducible"
    );
    // lm(f) = max(lm(lm(f_i) lm(q_i)), lm(h))
    let mut best: Option<(Exponent, usize)> =
        leading_vec(&res.remainder, ord).map(|((e, i), _)| (e.clone(), i));
    for (g, q) in gens.iter().zip(&res.quotients) {
        if q.is_zero() {
            continue;
        }
        let ((ge, gi), _) = leading_vec(g, ord).unwrap();
        let (qe, _) = leading_poly(q, ord.base).unwrap();
        let cand = (ge.add(qe), gi);
        best = Some(match best {
            None => cand,
            Some(cur) => {
                if cmp_vec_mono((&cand.0, cand.1), (&cur.0, cur.1), ord).is_gt() {
                    cand
                } else {
                    cur
                }
            }
        });
    }
    let f_lead = leading_vec(f, ord).map(|((e, i), _)| (e.clone(), i));
    assert_eq!(f_lead, best, "leading monomial contract broken");
    // strict descent across the recorded trace
    for step in &res.steps {
        let before = leading_vec(&step.before, ord).expect("nonzero before");
        match leading_vec(&step.after, ord) {
            None => {}
            Some(after) => {
                assert!(
                    cmp_vec_mono(
                        ((before.0).0, (before.0).1),
                        ((after.0).0, (after.0).1),
                        ord
                    )
                    .is_gt(),
                    "leading monomial did not strictly decrease"
                );
            }
        }
    }
}
