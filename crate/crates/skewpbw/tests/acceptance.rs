//! Acceptance suite. Each test prints one PASS/FAIL line for its criterion
//! (run with `cargo test --test acceptance -- --nocapture` to see them all)
//! and asserts the criterion as stated; every tolerance here is exact
//! arithmetic equality.

mod common;

use common::*;
use rand::Rng;

use skewpbw::algebra::{Algebra, Exponent, PolyA, VecA};
use skewpbw::buchberger::{
    groebner, is_groebner, member, GroebnerOptions, GroebnerResult, Membership,
};
use skewpbw::coeffring::RingElem;
use skewpbw::division::{divide, is_reducible};
use skewpbw::mpoly::{buchberger_traced, divide_full, MPoly};
use skewpbw::oracle::{linear_membership, naive_normalize, DegreeBound, Letter, LinearMembership};
use skewpbw::order::{leading_vec, BaseOrder, ModuleOrder, OrderSpec};
use skewpbw::parse::{parse_poly, parse_vec};
use skewpbw::samples;
use skewpbw::scalar::Rat;

fn criterion<F: FnOnce() -> Result<String, String>>(n: u32, desc: &str, body: F) {
    match body() {
        Ok(detail) => {
            if detail.is_empty() {
                println!("ACCEPTANCE criterion {n}: PASS - {desc}");
            } else {
                println!("ACCEPTANCE criterion {n}: PASS - {desc} ({detail})");
            }
        }
        Err(msg) => {
            println!("ACCEPTANCE criterion {n}: FAIL - {desc}: {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn deglex_top() -> OrderSpec {
    OrderSpec::new(BaseOrder::DegLex, ModuleOrder::Top)
}

// ---- shared example data -----------------------------------------------------

fn iterated_gens(alg: &Algebra) -> Vec<VecA> {
    vec![
        parse_vec(alg, "[-y^2, -w*y+y, y, w*x-x*y]").unwrap(),
        parse_vec(alg, "[-w*y-y, x*y+y^2-w, w^2, w^2+w*x+w*y]").unwrap(),
        parse_vec(alg, "[-x+1, -w*y+x^2+x*y, w^2+w*x+w, x]").unwrap(),
        parse_vec(alg, "[y^2+x, w*x+1, 0, w^2+w*y-y^2]").unwrap(),
    ]
}

fn iterated_v(alg: &Algebra, gens: &[VecA]) -> VecA {
    let p = [
        parse_poly(alg, "76*x+95*z").unwrap(),
        parse_poly(alg, "x*z").unwrap(),
        parse_poly(alg, "w-i*y").unwrap(),
        parse_poly(alg, "i*z").unwrap(),
    ];
    let mut v = alg.vec_right_mul(&gens[0], &p[0]).unwrap();
    for (g, pi) in gens.iter().zip(&p).skip(1) {
        v = alg.vec_add(&v, &alg.vec_right_mul(g, pi).unwrap()).unwrap();
    }
    v
}

fn printed_h5_to_h8(alg: &Algebra) -> Vec<VecA> {
    [
        include_str!("fixtures/e62_h5.expr"),
        include_str!("fixtures/e62_h6.expr"),
        include_str!("fixtures/e62_h7.expr"),
        include_str!("fixtures/e62_h8.expr"),
    ]
    .iter()
    .map(|t| parse_vec(alg, t).unwrap())
    .collect()
}

// ---- criterion 1 --------------------------------------------------------------

/// Example 6.1 with the inputs exactly as printed. The division must return
/// h = 0 and quotients matching g1..g3 up to the q2/q3 split.
#[test]
fn criterion_01_example_6_1_as_stated() {
    criterion(1, "example 6.1 reproduction with the printed inputs", || {
        let alg = samples::diffusion();
        let f = parse_vec(&alg, "x1*x2^2*D1^2*D2 + x1^2*x2*D2").unwrap();
        let f1 = parse_vec(&alg, "x1^2*x2*D1*D2").unwrap();
        let f2 = parse_vec(&alg, "x2*D1").unwrap();
        let gens = vec![f1, f2.clone(), f2];
        let res = divide(&alg, &f, &gens, deglex_top()).unwrap();
        if res.recombine(&alg, &gens).unwrap() != f {
            return Err("division identity broken".into());
        }
        if !res.remainder.is_zero() {
            return Err(format!(
                "remainder is nonzero; the printed instance is inconsistent \
                 (the monomial D2 of f cannot occur in the right module: every \
                 right multiple of the printed generators keeps a positive \
                 D1-exponent), remainder = {}",
                skewpbw::display::format_vec(&alg, &res.remainder, BaseOrder::DegLex)
            ));
        }
        let g1 = parse_poly(&alg, "1/2*x2*D1 + 1/2*x1*x2").unwrap();
        if res.quotients[0] != g1 {
            return Err("q1 differs from the published g1".into());
        }
        let q23 = alg.poly_add(&res.quotients[1], &res.quotients[2]).unwrap();
        let g23 = parse_poly(&alg, "-1/2*x1*x2^2*D1 + x1*x2").unwrap();
        if q23 != g23 {
            return Err("q2 + q3 differs from the published g2 + g3".into());
        }
        Ok(String::new())
    });
}

/// The same run with the single-superscript correction f1 = x1 x2 D1 D2:
/// every published figure is reproduced.
#[test]
fn criterion_01_example_6_1_corrected_f1() {
    criterion(1, "example 6.1 with corrected f1 = x1*x2*D1*D2", || {
        let alg = samples::diffusion();
        let f = parse_vec(&alg, "x1*x2^2*D1^2*D2 + x1*x2^2*D1").unwrap();
        let f1 = parse_vec(&alg, "x1*x2*D1*D2").unwrap();
        let f2 = parse_vec(&alg, "x2*D1").unwrap();
        let gens = vec![f1, f2.clone(), f2];
        let res = divide(&alg, &f, &gens, deglex_top()).unwrap();
        if !res.remainder.is_zero() {
            return Err("remainder must vanish".into());
        }
        if res.recombine(&alg, &gens).unwrap() != f {
            return Err("division identity broken".into());
        }
        let g1 = parse_poly(&alg, "1/2*x2*D1 + 1/2*x1*x2").unwrap();
        if res.quotients[0] != g1 {
            return Err("q1 differs from the published g1".into());
        }
        let q23 = alg.poly_add(&res.quotients[1], &res.quotients[2]).unwrap();
        let g23 = parse_poly(&alg, "-1/2*x1*x2^2*D1 + x1*x2").unwrap();
        if q23 != g23 {
            return Err("q2 + q3 differs from the published g2 + g3".into());
        }
        Ok("corrected variant reproduces g1, g2+g3, h = 0".into())
    });
}

// ---- criterion 2 --------------------------------------------------------------

#[test]
fn criterion_02_example_6_2_division() {
    criterion(2, "example 6.2 division of v under deglex/TOP", || {
        let alg = samples::iterated_skew();
        let gens = iterated_gens(&alg);
        let v = iterated_v(&alg, &gens);
        let res = divide(&alg, &v, &gens, deglex_top()).unwrap();
        if res.recombine(&alg, &gens).unwrap() != v {
            return Err("division identity broken".into());
        }
        if is_reducible(&alg, &res.remainder, &gens, deglex_top())
            .unwrap()
            .is_some()
        {
            return Err("remainder is not reduced".into());
        }
        if res.quotients[0] != parse_poly(&alg, "76*x + 95*z").unwrap() {
            return Err("q1 must equal 76x + 95z".into());
        }
        let printed_q2 = parse_poly(&alg, "x*z - 1/2*i*x + i*y").unwrap();
        let printed_h = parse_vec(
            &alg,
            "[i*y^2*z + i*w*x*y + i*x*z + (-i*w+i)*y^2 - 2*w*x - i*y + w,
              -i*y^3 + 4*w*x^2 + 6*w*x*y - i*w*x*z - i*w*y^2 + 1/2*i*w*x + (-3*w^2-i*w)*y + i*z,
              i*w*x*y + (2+1/2*i)*w^2*x + (-2*i*w^2+i*w)*y + w^3 + w^2,
              -i*y^2*z - 1/2*i*w*x^2 - i*x*y + i*w*y^2 - i*w*y*z + (1/2*i*w^2+2*w)*x - i*w^2*y + i*w^2*z]",
        )
        .unwrap();
        let q2_match = res.quotients[1] == printed_q2;
        let h_match = res.remainder == printed_h;
        if q2_match && h_match {
            Ok("printed q2 and h matched exactly".into())
        } else {
            // divergence is permitted only with a membership certificate
            // for v - h
            let diff = alg.vec_sub(&v, &res.remainder).unwrap();
            let gb = groebner(&alg, &gens, deglex_top(), GroebnerOptions::default()).unwrap();
            match member(&alg, &diff, &gb).unwrap().0 {
                Membership::Member { .. } => Ok(format!(
                    "recorded divergence from print (q2 match: {q2_match}, h match: {h_match}); v - h certified in the module"
                )),
                Membership::NotMember { .. } => {
                    Err("diverged from print and v - h failed certification".into())
                }
            }
        }
    });
}

// ---- criterion 3 --------------------------------------------------------------

/// If g = h * u for a base-field unit u, returns u.
fn unit_multiple(alg: &Algebra, g: &VecA, h: &VecA) -> Option<RingElem> {
    let ord = deglex_top();
    let ((ge, gi), g_lc) = leading_vec(g, ord)?;
    let ((he, hi), h_lc) = leading_vec(h, ord)?;
    if ge != he || gi != hi {
        return None;
    }
    // lc(h * u) = lc(h) sigma^e(u); try the rational or Gaussian ratio of
    // the first coordinates, then verify exactly
    let ratio = ratio_of(g_lc, h_lc)?;
    let u = alg.sigma_pow_inv(ge, &ratio).ok()?;
    let scaled = alg.vec_scalar_right(h, &u).ok()?;
    if &scaled == g {
        Some(u)
    } else {
        None
    }
}

/// Candidate scalar c with a = b * c, read off the leading coordinates.
fn ratio_of(a: &RingElem, b: &RingElem) -> Option<RingElem> {
    use skewpbw::coeffring::RingElem as E;
    match (a, b) {
        (E::SQi(pa), E::SQi(pb)) => {
            let (da, ca) = pa.coeffs.iter().next_back()?;
            let (db, cb) = pb.coeffs.iter().next_back()?;
            if da != db {
                return None;
            }
            let inv = skewpbw::scalar::FieldScalar::inv(cb)?;
            // c sits to the right of w^d: lc(b c) = cb phi^d(c)
            let target = skewpbw::scalar::FieldScalar::mul(&inv, ca);
            let c = pa.action.pow(*da, &target);
            Some(E::SQi(skewpbw::spoly::SPoly::constant(pa.action, c)))
        }
        _ => None,
    }
}

#[test]
fn criterion_03_example_6_2_buchberger() {
    criterion(3, "example 6.2 completion, check, and membership of v", || {
        let alg = samples::iterated_skew();
        let gens = iterated_gens(&alg);
        let ord = deglex_top();
        let gb = groebner(&alg, &gens, ord, GroebnerOptions::default()).unwrap();
        if is_groebner(&alg, &gb.basis, ord, GroebnerOptions::default())
            .unwrap()
            .is_err()
        {
            return Err("computed basis fails the criterion check".into());
        }
        for (k, h) in printed_h5_to_h8(&alg).iter().enumerate() {
            let res = divide(&alg, h, &gb.basis, ord).unwrap();
            if !res.remainder.is_zero() {
                return Err(format!("published element h{} does not reduce to zero", k + 5));
            }
        }
        let v = iterated_v(&alg, &gens);
        let (m, _) = member(&alg, &v, &gb).unwrap();
        let quotients = match m {
            Membership::Member { quotients } => quotients,
            Membership::NotMember { .. } => return Err("v must be a member".into()),
        };
        let mut acc = VecA::zero(4, alg.n());
        for (g, q) in gb.basis.iter().zip(&quotients) {
            acc = alg.vec_add(&acc, &alg.vec_right_mul(g, q).unwrap()).unwrap();
        }
        if acc != v {
            return Err("membership certificate does not recombine to v".into());
        }
        // reported, not required: syntactic equality with the published
        // 8-element basis up to right units
        let mut report = format!("basis size {} vs published 8", gb.basis.len());
        if gb.basis.len() == 8 {
            let mut printed = gens.clone();
            printed.extend(printed_h5_to_h8(&alg));
            let matched = printed
                .iter()
                .filter(|h| gb.basis.iter().any(|g| g == *h || unit_multiple(&alg, g, h).is_some()))
                .count();
            report = format!("{report}; {matched}/8 published elements matched up to right units");
        }
        Ok(report)
    });
}

// ---- criterion 4 --------------------------------------------------------------

#[test]
fn criterion_04_identity_suite() {
    criterion(4, "twisting identities on 1000 random samples per algebra", || {
        let mut r = rng(41);
        for alg in shipped() {
            let n = alg.n();
            let ring = alg.ring();
            for _ in 0..1000 {
                let theta = rand_exponent(&mut r, n, 3);
                let gamma = rand_exponent(&mut r, n, 3);
                let beta = rand_exponent(&mut r, n, 3);
                let alpha = rand_exponent(&mut r, n, 3);
                let c = rand_ring_elem(&mut r, ring, 2, 2);
                let rr = rand_ring_elem(&mut r, ring, 2, 2);

                // sigma^t(c_{g,b}) c_{t,g+b} = c_{t,g} c_{t+g,b}
                let lhs = alg
                    .sigma_pow(&theta, &alg.c_constant(&gamma, &beta).unwrap())
                    .unwrap()
                    .mul(&alg.c_constant(&theta, &gamma.add(&beta)).unwrap())
                    .unwrap();
                let rhs = alg
                    .c_constant(&theta, &gamma)
                    .unwrap()
                    .mul(&alg.c_constant(&theta.add(&gamma), &beta).unwrap())
                    .unwrap();
                if lhs != rhs {
                    return Err("coefficient cocycle identity failed".into());
                }

                // sigma^t(sigma^g(c)) c_{t,g} = c_{t,g} sigma^{t+g}(c)
                let lhs = alg
                    .sigma_pow(&theta, &alg.sigma_pow(&gamma, &c).unwrap())
                    .unwrap()
                    .mul(&alg.c_constant(&theta, &gamma).unwrap())
                    .unwrap();
                let rhs = alg
                    .c_constant(&theta, &gamma)
                    .unwrap()
                    .mul(&alg.sigma_pow(&theta.add(&gamma), &c).unwrap())
                    .unwrap();
                if lhs != rhs {
                    return Err("endomorphism twisting identity failed".into());
                }

                // sigma^b(r) c_{b,a} = c_{b,a} psi_{b,a}(r)
                let c_ba = alg.c_constant(&beta, &alpha).unwrap();
                let lhs = alg.sigma_pow(&beta, &rr).unwrap().mul(&c_ba).unwrap();
                let rhs = c_ba.mul(&alg.psi(&beta, &alpha, &rr).unwrap()).unwrap();
                if lhs != rhs {
                    return Err("psi transport identity failed".into());
                }

                // c_{b,a} r = sigma^b(psi^{-1}_{b,a}(r)) c_{b,a}
                let lhs = c_ba.mul(&rr).unwrap();
                let rhs = alg
                    .sigma_pow(&beta, &alg.psi_inv(&beta, &alpha, &rr).unwrap())
                    .unwrap()
                    .mul(&c_ba)
                    .unwrap();
                if lhs != rhs {
                    return Err("psi inverse transport identity failed".into());
                }

                // c_{b,a} r c_{b+a,g} = c_{b,a+g} psi_{b,a+g}(psi^{-1}_{b,a}(r) c_{a,g})
                let lhs = c_ba
                    .mul(&rr)
                    .unwrap()
                    .mul(&alg.c_constant(&beta.add(&alpha), &gamma).unwrap())
                    .unwrap();
                let inner = alg
                    .psi_inv(&beta, &alpha, &rr)
                    .unwrap()
                    .mul(&alg.c_constant(&alpha, &gamma).unwrap())
                    .unwrap();
                let rhs = alg
                    .c_constant(&beta, &alpha.add(&gamma))
                    .unwrap()
                    .mul(&alg.psi(&beta, &alpha.add(&gamma), &inner).unwrap())
                    .unwrap();
                if lhs != rhs {
                    return Err("three-factor transport identity failed".into());
                }
            }
        }
        Ok("5 identities x 1000 samples x 3 algebras".into())
    });
}

// ---- criterion 5 --------------------------------------------------------------

fn word_via_engine(alg: &Algebra, word: &[Letter]) -> PolyA {
    let mut acc = alg.poly_one();
    for l in word {
        match l {
            Letter::Gen(i) => {
                let v = PolyA::monomial(alg.n(), Exponent::unit(alg.n(), *i), alg.ring().one());
                acc = alg.poly_mul(&acc, &v).unwrap();
            }
            Letter::Coeff(c) => {
                acc = alg.scalar_mul_right(&acc, c).unwrap();
            }
        }
    }
    acc
}

#[test]
fn criterion_05_engine_vs_oracle() {
    criterion(5, "engine products agree with the single-step normalizer", || {
        let mut r = rng(51);
        for alg in shipped() {
            let n = alg.n();
            let mut cases = 0usize;
            // all pure generator words of length <= 5, salted with a random
            // leading coefficient
            let mut words: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..5 {
                let mut next = Vec::new();
                for w in &words {
                    for g in 0..n {
                        let mut w2 = w.clone();
                        w2.push(g);
                        next.push(w2);
                    }
                }
                for w in next {
                    let mut letters = vec![Letter::Coeff(rand_ring_elem_nonzero(&mut r, alg.ring(), 1, 1))];
                    letters.extend(w.iter().map(|&g| Letter::Gen(g)));
                    let via_oracle = naive_normalize(&alg, &letters).unwrap();
                    let via_engine = word_via_engine(&alg, &letters);
                    if via_oracle != via_engine {
                        return Err("engine and oracle disagree on a generator word".into());
                    }
                    cases += 1;
                    words.push(letters
                        .iter()
                        .filter_map(|l| match l {
                            Letter::Gen(g) => Some(*g),
                            _ => None,
                        })
                        .collect());
                }
                words.dedup();
            }
            // random words with interleaved coefficients up to >= 500 cases
            while cases < 500 {
                let len = r.gen_range(0..=5);
                let mut letters = Vec::new();
                for _ in 0..len {
                    if r.gen_bool(0.3) {
                        letters.push(Letter::Coeff(rand_ring_elem(&mut r, alg.ring(), 2, 2)));
                    } else {
                        letters.push(Letter::Gen(r.gen_range(0..n)));
                    }
                }
                let via_oracle = naive_normalize(&alg, &letters).unwrap();
                let via_engine = word_via_engine(&alg, &letters);
                if via_oracle != via_engine {
                    return Err("engine and oracle disagree on a mixed word".into());
                }
                cases += 1;
            }
        }
        Ok(">= 500 cases per algebra, all generator words to length 5".into())
    });
}

// ---- criterion 6 --------------------------------------------------------------

#[test]
fn criterion_06_division_contracts() {
    criterion(6, "division contract on 300 random instances", || {
        let mut r = rng(61);
        let algs = shipped();
        let orders = [
            OrderSpec::new(BaseOrder::DegLex, ModuleOrder::Top),
            OrderSpec::new(BaseOrder::DegLex, ModuleOrder::TopRev),
            OrderSpec::new(BaseOrder::DegRevLex, ModuleOrder::Top),
            OrderSpec::new(BaseOrder::DegRevLex, ModuleOrder::TopRev),
        ];
        for case in 0..300 {
            let alg = &algs[case % algs.len()];
            let ord = orders[case % orders.len()];
            let rank = r.gen_range(1..=4);
            let count = r.gen_range(1..=4);
            let gens: Vec<VecA> = (0..count)
                .map(|_| rand_vec_nonzero(&mut r, alg, rank, 3, 3))
                .collect();
            let f = rand_vec(&mut r, alg, rank, 3, 4);
            let res = divide(alg, &f, &gens, ord).unwrap();
            check_division_contract(alg, &f, &gens, &res, ord);
        }
        Ok("exactness, reducedness, max-lm equality, strict descent under all four orders".into())
    });
}

// ---- criterion 7 --------------------------------------------------------------

#[test]
fn criterion_07_gb_vs_linear_membership() {
    criterion(7, "membership by reduction agrees with the linear oracle", || {
        let mut r = rng(71);
        for _case in 0..50 {
            let alg = rand_algebra_q2(&mut r);
            let rank = r.gen_range(1..=2);
            let count = r.gen_range(1..=2);
            let gens: Vec<VecA> = (0..count)
                .map(|_| rand_vec_nonzero(&mut r, &alg, rank, 2, 2))
                .collect();
            let ord = deglex_top();
            let gb = groebner(&alg, &gens, ord, GroebnerOptions::default()).unwrap();
            if is_groebner(&alg, &gb.basis, ord, GroebnerOptions::default())
                .unwrap()
                .is_err()
            {
                return Err("completion output fails its own check".into());
            }
            for _probe in 0..10 {
                // half the probes are certain members
                let f = if r.gen_bool(0.5) {
                    let mut acc = VecA::zero(rank, alg.n());
                    for g in &gens {
                        let q = rand_poly(&mut r, &alg, 1, 2);
                        acc = alg.vec_add(&acc, &alg.vec_right_mul(g, &q).unwrap()).unwrap();
                    }
                    acc
                } else {
                    rand_vec(&mut r, &alg, rank, 2, 2)
                };
                let (m, _) = member(&alg, &f, &gb).unwrap();
                match m {
                    Membership::Member { quotients } => {
                        // a big enough bound must re-discover membership
                        let mut bound = 0u64;
                        for q in &quotients {
                            for (e, c) in &q.terms {
                                let cd = coeff_degree(c);
                                bound = bound.max(e.deg() + cd);
                            }
                        }
                        match linear_membership(
                            &alg,
                            &f,
                            &gb.basis,
                            DegreeBound(bound as u32 + 1),
                            20_000,
                        )
                        .unwrap()
                        {
                            LinearMembership::Member(qs) => {
                                let mut acc = VecA::zero(rank, alg.n());
                                for (g, q) in gb.basis.iter().zip(&qs) {
                                    acc = alg
                                        .vec_add(&acc, &alg.vec_right_mul(g, q).unwrap())
                                        .unwrap();
                                }
                                if acc != f {
                                    return Err("linear oracle produced a bad witness".into());
                                }
                            }
                            LinearMembership::NotMemberUpToBound => {
                                return Err(
                                    "reduction says member, linear oracle says no at an adequate bound"
                                        .into(),
                                )
                            }
                            LinearMembership::TooLarge => {}
                        }
                    }
                    Membership::NotMember { .. } => {
                        // a true non-member can never be found by the oracle
                        if let LinearMembership::Member(_) =
                            linear_membership(&alg, &f, &gb.basis, DegreeBound(3), 20_000).unwrap()
                        {
                            return Err(
                                "reduction says non-member, linear oracle found a witness".into()
                            );
                        }
                    }
                }
            }
            // idempotence: re-running completion on the basis adds nothing
            let again = groebner(&alg, &gb.basis, ord, GroebnerOptions::default()).unwrap();
            if again.basis.len() != gb.basis.len() {
                return Err("completion is not idempotent on its own output".into());
            }
            // order invariance of membership decisions
            let revord = OrderSpec::new(BaseOrder::DegRevLex, ModuleOrder::Top);
            let gb_rev = groebner(&alg, &gens, revord, GroebnerOptions::default()).unwrap();
            for _probe in 0..4 {
                let f = if r.gen_bool(0.5) {
                    let mut acc = VecA::zero(rank, alg.n());
                    for g in &gens {
                        let q = rand_poly(&mut r, &alg, 1, 2);
                        acc = alg.vec_add(&acc, &alg.vec_right_mul(g, &q).unwrap()).unwrap();
                    }
                    acc
                } else {
                    rand_vec(&mut r, &alg, rank, 2, 2)
                };
                let (m1, _) = member(&alg, &f, &gb).unwrap();
                let (m2, _) = member(&alg, &f, &gb_rev).unwrap();
                let same = matches!(
                    (&m1, &m2),
                    (Membership::Member { .. }, Membership::Member { .. })
                        | (Membership::NotMember { .. }, Membership::NotMember { .. })
                );
                if !same {
                    return Err("membership decision depends on the base order".into());
                }
            }
        }
        Ok("50 instances, 10 probes each, idempotence and order invariance".into())
    });
}

fn coeff_degree(c: &RingElem) -> u64 {
    match c {
        RingElem::Q(_) | RingElem::Qi(_) => 0,
        RingElem::PQ(p) => p.total_degree().unwrap_or(0),
        RingElem::PQi(p) => p.total_degree().unwrap_or(0),
        RingElem::SQ(p) => p.degree().unwrap_or(0) as u64,
        RingElem::SQi(p) => p.degree().unwrap_or(0) as u64,
    }
}

// ---- criterion 8 --------------------------------------------------------------

fn poly_to_mpoly(p: &PolyA) -> MPoly<Rat> {
    let mut out = MPoly::zero(p.n);
    for (e, c) in &p.terms {
        match c {
            RingElem::Q(q) => {
                out = out.add(&MPoly::monomial(p.n, e.0.clone(), q.clone()));
            }
            _ => panic!("commutative specialization must live over Q"),
        }
    }
    out
}

fn mpoly_to_poly(alg: &Algebra, p: &MPoly<Rat>) -> PolyA {
    let mut out = PolyA::zero(p.nvars);
    for (e, c) in &p.terms {
        out = alg
            .poly_add(
                &out,
                &PolyA::monomial(p.nvars, Exponent(e.clone()), RingElem::Q(c.clone())),
            )
            .unwrap();
    }
    out
}

#[test]
fn criterion_08_commutative_oracle_equivalence() {
    criterion(8, "commutative specialization matches classical bases", || {
        let mut r = rng(81);
        for case in 0..30 {
            let n = 1 + case % 3;
            let alg = samples::commutative(n);
            let count = r.gen_range(1..=3);
            let gens: Vec<VecA> = (0..count)
                .map(|_| rand_vec_nonzero(&mut r, &alg, 1, 3, 3))
                .collect();
            let ord = deglex_top();
            let gb = groebner(&alg, &gens, ord, GroebnerOptions::default()).unwrap();
            // classical side on the same ideal
            let classical_inputs: Vec<MPoly<Rat>> = gens
                .iter()
                .map(|g| poly_to_mpoly(&g.component(0)))
                .collect();
            let classical = buchberger_traced(&classical_inputs);
            // ours reduce to zero classically
            for g in &gb.basis {
                let (_, rem) = divide_full(&poly_to_mpoly(&g.component(0)), &classical.basis);
                if !rem.is_zero() {
                    return Err("our basis element escapes the classical ideal".into());
                }
            }
            // classical basis reduces to zero by ours
            for c in &classical.basis {
                let f = VecA::from_components(vec![mpoly_to_poly(&alg, c)]);
                let res = divide(&alg, &f, &gb.basis, ord).unwrap();
                if !res.remainder.is_zero() {
                    return Err("classical basis element escapes our module".into());
                }
            }
        }
        Ok("30 specializations mutually reduce to zero".into())
    });
}

// ---- criterion 9 --------------------------------------------------------------

#[test]
fn criterion_09_shifted_reduction_steps() {
    criterion(9, "recorded steps survive right shifts constructively", || {
        let mut r = rng(91);
        let algs = shipped();
        let ord = deglex_top();
        let mut checked = 0usize;
        'outer: for case in 0..400 {
            let alg = &algs[case % algs.len()];
            let rank = r.gen_range(1..=2);
            let count = r.gen_range(1..=3);
            let gens: Vec<VecA> = (0..count)
                .map(|_| rand_vec_nonzero(&mut r, alg, rank, 2, 2))
                .collect();
            let f = rand_vec(&mut r, alg, rank, 3, 3);
            let res = divide(alg, &f, &gens, ord).unwrap();
            for step in &res.steps {
                let theta = rand_exponent(&mut r, alg.n(), 2);
                let shift = PolyA::monomial(alg.n(), theta.clone(), alg.ring().one());
                // p = sum (-f_i) r_i p_{a_i, theta}
                let mut p = VecA::zero(rank, alg.n());
                for (i, rr, a) in &step.participants {
                    let (_, tail) = alg.mul_mono_mono(a, &theta).unwrap();
                    if tail.is_zero() {
                        continue;
                    }
                    let mover = alg
                        .poly_mul(
                            &PolyA::monomial(alg.n(), Exponent::zero(alg.n()), rr.clone()),
                            &tail,
                        )
                        .unwrap();
                    let part = alg.vec_right_mul(&gens[*i], &mover).unwrap();
                    p = alg.vec_sub(&p, &part).unwrap();
                }
                let candidate = alg
                    .vec_add(&alg.vec_right_mul(&step.before, &shift).unwrap(), &p)
                    .unwrap();
                let target = alg.vec_right_mul(&step.after, &shift).unwrap();
                // one step with r_i' = r_i c_{a_i, theta} at exponent a_i + theta
                let mut h = candidate.clone();
                for (i, rr, a) in &step.participants {
                    let c = alg.c_constant(a, &theta).unwrap();
                    let r_shift = rr.mul(&c).unwrap();
                    let mover = PolyA::monomial(alg.n(), a.add(&theta), r_shift);
                    h = alg.vec_sub(&h, &alg.vec_right_mul(&gens[*i], &mover).unwrap()).unwrap();
                }
                if h != target {
                    return Err("shifted step failed to land on h x^theta".into());
                }
                // and it is a legal step: the leading term really cancels
                if let (Some(((ce, ci), _)), Some(((te, ti), _))) =
                    (leading_vec(&candidate, ord), leading_vec(&target, ord))
                {
                    use skewpbw::order::cmp_vec_mono;
                    if !cmp_vec_mono((ce, ci), (te, ti), ord).is_gt() {
                        return Err("shifted step does not decrease the leading monomial".into());
                    }
                }
                checked += 1;
                if checked >= 100 {
                    break 'outer;
                }
            }
        }
        if checked < 100 {
            return Err(format!("only {checked} recorded steps available"));
        }
        Ok(format!("{checked} shifted steps verified"))
    });
}

// ---- criterion 10 -------------------------------------------------------------

#[test]
fn criterion_10_trim_preserves_everything() {
    criterion(10, "trimming keeps the basis property and decisions", || {
        use skewpbw::buchberger::trim;
        let ord = deglex_top();
        // the example basis
        let alg = samples::iterated_skew();
        let gens = iterated_gens(&alg);
        let gb = groebner(&alg, &gens, ord, GroebnerOptions::default()).unwrap();
        let trimmed = trim(&alg, &gb).unwrap();
        if is_groebner(&alg, &trimmed.basis, ord, GroebnerOptions::default())
            .unwrap()
            .is_err()
        {
            return Err("trimmed example basis fails the check".into());
        }
        let v = iterated_v(&alg, &gens);
        if !matches!(member(&alg, &v, &trimmed).unwrap().0, Membership::Member { .. }) {
            return Err("trim changed the decision for v".into());
        }
        // an artificially padded basis drops the redundant element
        let padded = {
            let mut basis = gb.basis.clone();
            let extra = alg
                .vec_right_mul(&basis[0], &parse_poly(&alg, "x").unwrap())
                .unwrap();
            basis.push(extra);
            GroebnerResult { basis, provenance: vec![None; gb.basis.len() + 1], order: ord }
        };
        let trimmed_padded = trim(&alg, &padded).unwrap();
        if trimmed_padded.basis.len() > gb.basis.len() {
            return Err("trim kept a reducible element".into());
        }
        // random field-coefficient bases
        let mut r = rng(101);
        for _ in 0..10 {
            let alg = rand_algebra_q2(&mut r);
            let gens: Vec<VecA> = (0..r.gen_range(1..=2))
                .map(|_| rand_vec_nonzero(&mut r, &alg, 2, 2, 2))
                .collect();
            let gb = groebner(&alg, &gens, ord, GroebnerOptions::default()).unwrap();
            let trimmed = trim(&alg, &gb).unwrap();
            if is_groebner(&alg, &trimmed.basis, ord, GroebnerOptions::default())
                .unwrap()
                .is_err()
            {
                return Err("trimmed random basis fails the check".into());
            }
            for _ in 0..6 {
                let f = if r.gen_bool(0.5) {
                    let mut acc = VecA::zero(2, alg.n());
                    for g in &gens {
                        let q = rand_poly(&mut r, &alg, 1, 2);
                        acc = alg.vec_add(&acc, &alg.vec_right_mul(g, &q).unwrap()).unwrap();
                    }
                    acc
                } else {
                    rand_vec(&mut r, &alg, 2, 2, 2)
                };
                let (m1, _) = member(&alg, &f, &gb).unwrap();
                let (m2, _) = member(&alg, &f, &trimmed).unwrap();
                let same = matches!(
                    (&m1, &m2),
                    (Membership::Member { .. }, Membership::Member { .. })
                        | (Membership::NotMember { .. }, Membership::NotMember { .. })
                );
                if !same {
                    return Err("trim changed a membership decision".into());
                }
            }
        }
        Ok(String::new())
    });
}
