//! Ready-made algebras used by the worked examples, the CLI fixtures and the
//! test suites.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, AlgebraSpec, Relation};
use crate::coeffring::{Base, Ring, RingEndo};
use crate::scalar::{rat, rat_int};
use crate::spoly::ScalarAction;

/// The diffusion algebra over Q[x1, x2] with central x's and
/// D2 D1 = 2 D1 D2 + x2 D1 - x1 D2.
pub fn diffusion() -> Algebra {
    let ring = Ring::Poly { base: Base::Q, vars: vec!["x1".into(), "x2".into()] };
    let x1 = ring.generator(0).unwrap();
    let x2 = ring.generator(1).unwrap();
    let id = RingEndo::identity(&ring).unwrap();
    let zero_delta = vec![ring.zero(); ring.ngens()];
    let mut relations = BTreeMap::new();
    relations.insert(
        (0, 1),
        Relation {
            c: ring.from_rat(rat_int(2)),
            tail_const: ring.zero(),
            tail_lin: vec![x2, x1.neg()],
        },
    );
    Algebra::new(AlgebraSpec {
        name: "diffusion".into(),
        ring,
        var_names: vec!["D1".into(), "D2".into()],
        sigma: vec![id.clone(), id],
        delta: vec![zero_delta.clone(), zero_delta],
        relations,
    })
    .unwrap()
}

/// The iterated extension of Q(i)[w; conj] by x, y, z with
/// yx = 2xy, zx = 4xz - x, zy = 4yz - y and sigma(w) = 2w, 3w, w.
pub fn iterated_skew() -> Algebra {
    let ring = Ring::Skew { base: Base::Qi, var: "w".into(), action: ScalarAction::Conj };
    let w = ring.generator(0).unwrap();
    let scaled_sigma = |num: i64, den: i64| {
        let img = ring.from_rat(rat(num, 1)).mul(&w).unwrap();
        let inv = ring.from_rat(rat(den, num)).mul(&w).unwrap();
        RingEndo {
            action: ScalarAction::Id,
            images: vec![img],
            inverse_images: Some(vec![inv]),
        }
    };
    let zero_delta = vec![ring.zero(); ring.ngens()];
    let minus_one = ring.from_rat(rat_int(-1));
    let mut relations = BTreeMap::new();
    relations.insert(
        (0, 1),
        Relation {
            c: ring.from_rat(rat_int(2)),
            tail_const: ring.zero(),
            tail_lin: vec![ring.zero(); 3],
        },
    );
    relations.insert(
        (0, 2),
        Relation {
            c: ring.from_rat(rat_int(4)),
            tail_const: ring.zero(),
            tail_lin: vec![minus_one.clone(), ring.zero(), ring.zero()],
        },
    );
    relations.insert(
        (1, 2),
        Relation {
            c: ring.from_rat(rat_int(4)),
            tail_const: ring.zero(),
            tail_lin: vec![ring.zero(), minus_one, ring.zero()],
        },
    );
    let sigma = vec![scaled_sigma(2, 1), scaled_sigma(3, 1), scaled_sigma(1, 1)];
    Algebra::new(AlgebraSpec {
        name: "iterated".into(),
        ring,
        var_names: vec!["x".into(), "y".into(), "z".into()],
        sigma,
        delta: vec![zero_delta.clone(), zero_delta.clone(), zero_delta],
        relations,
    })
    .unwrap()
}

/// The first Weyl algebra as an extension of Q[t]: d t = t d + 1.
pub fn weyl() -> Algebra {
    let ring = Ring::Poly { base: Base::Q, vars: vec!["t".into()] };
    let id = RingEndo::identity(&ring).unwrap();
    Algebra::new(AlgebraSpec {
        name: "weyl".into(),
        ring: ring.clone(),
        var_names: vec!["d".into()],
        sigma: vec![id],
        delta: vec![vec![ring.one()]],
        relations: BTreeMap::new(),
    })
    .unwrap()
}

/// Commutative specialization: sigma = id, delta = 0, c = 1 over the field Q.
pub fn commutative(nvars: usize) -> Algebra {
    let ring = Ring::Q;
    let id = RingEndo::identity(&ring).unwrap();
    let names = (1..=nvars).map(|i| format!("x{i}")).collect();
    Algebra::new(AlgebraSpec {
        name: "commutative".into(),
        ring,
        var_names: names,
        sigma: vec![id; nvars],
        delta: vec![Vec::new(); nvars],
        relations: BTreeMap::new(),
    })
    .unwrap()
}
