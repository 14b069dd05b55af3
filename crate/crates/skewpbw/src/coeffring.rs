//! The pluggable coefficient rings: Q, Q(i), commutative polynomial rings
//! over either field, and skew polynomial rings K[w; phi]. Each supplies
//! exact arithmetic, endomorphism application, right-ideal membership with
//! witnesses, and generators of right syzygy modules.

use crate::error::{Error, Result};
use crate::mpoly::{buchberger_traced, MPoly};
use crate::scalar::{FieldScalar, Gauss, Rat};
use crate::spoly::{column_reduce, SPoly, ScalarAction};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    Q,
    Qi,
}

/// Descriptor of a concrete coefficient ring instance. Variable names live
/// here; elements carry only what is needed to detect instance mixing.
#[derive(Clone, PartialEq, Debug)]
pub enum Ring {
    Q,
    Qi,
    Poly { base: Base, vars: Vec<String> },
    Skew { base: Base, var: String, action: ScalarAction },
}

impl Ring {
    pub fn zero(&self) -> RingElem {
        match self {
            Ring::Q => RingElem::Q(Rat::zero()),
            Ring::Qi => RingElem::Qi(Gauss::zero()),
            Ring::Poly { base: Base::Q, vars } => RingElem::PQ(MPoly::zero(vars.len())),
            Ring::Poly { base: Base::Qi, vars } => RingElem::PQi(MPoly::zero(vars.len())),
            Ring::Skew { base: Base::Q, action, .. } => RingElem::SQ(SPoly::zero(*action)),
            Ring::Skew { base: Base::Qi, action, .. } => RingElem::SQi(SPoly::zero(*action)),
        }
    }

    pub fn one(&self) -> RingElem {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, r: Rat) -> RingElem {
        match self {
            Ring::Q => RingElem::Q(r),
            Ring::Qi => RingElem::Qi(Gauss::from_rat(r)),
            Ring::Poly { base: Base::Q, vars } => RingElem::PQ(MPoly::constant(vars.len(), r)),
            Ring::Poly { base: Base::Qi, vars } => {
                RingElem::PQi(MPoly::constant(vars.len(), Gauss::from_rat(r)))
            }
            Ring::Skew { base: Base::Q, action, .. } => {
                RingElem::SQ(SPoly::constant(*action, r))
            }
            Ring::Skew { base: Base::Qi, action, .. } => {
                RingElem::SQi(SPoly::constant(*action, Gauss::from_rat(r)))
            }
        }
    }

    pub fn imaginary(&self) -> Result<RingElem> {
        match self {
            Ring::Qi => Ok(RingElem::Qi(Gauss::i())),
            Ring::Poly { base: Base::Qi, vars } => {
                Ok(RingElem::PQi(MPoly::constant(vars.len(), Gauss::i())))
            }
            Ring::Skew { base: Base::Qi, action, .. } => {
                Ok(RingElem::SQi(SPoly::constant(*action, Gauss::i())))
            }
            _ => Err(Error::ImaginaryUnitUnavailable),
        }
    }

    /// Names of the ring generators over the base field.
    pub fn generator_names(&self) -> Vec<String> {
        match self {
            Ring::Q | Ring::Qi => Vec::new(),
            Ring::Poly { vars, .. } => vars.clone(),
            Ring::Skew { var, .. } => vec![var.clone()],
        }
    }

    pub fn ngens(&self) -> usize {
        self.generator_names().len()
    }

    pub fn generator(&self, idx: usize) -> Result<RingElem> {
        match self {
            Ring::Poly { base, vars } => {
                if idx >= vars.len() {
                    return Err(Error::MissingGeneratorImage);
                }
                Ok(match base {
                    Base::Q => RingElem::PQ(MPoly::var(vars.len(), idx)),
                    Base::Qi => RingElem::PQi(MPoly::var(vars.len(), idx)),
                })
            }
            Ring::Skew { base, action, .. } => {
                if idx != 0 {
                    return Err(Error::MissingGeneratorImage);
                }
                Ok(match base {
                    Base::Q => RingElem::SQ(SPoly::var(*action)),
                    Base::Qi => RingElem::SQi(SPoly::var(*action)),
                })
            }
            _ => Err(Error::MissingGeneratorImage),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum RingElem {
    Q(Rat),
    Qi(Gauss),
    PQ(MPoly<Rat>),
    PQi(MPoly<Gauss>),
    SQ(SPoly<Rat>),
    SQi(SPoly<Gauss>),
}

macro_rules! binop {
    ($name:ident) => {
        pub fn $name(&self, o: &RingElem) -> Result<RingElem> {
            match (self, o) {
                (RingElem::Q(a), RingElem::Q(b)) => Ok(RingElem::Q(FieldScalar::$name(a, b))),
                (RingElem::Qi(a), RingElem::Qi(b)) => Ok(RingElem::Qi(FieldScalar::$name(a, b))),
                (RingElem::PQ(a), RingElem::PQ(b)) if a.nvars == b.nvars => {
                    Ok(RingElem::PQ(a.$name(b)))
                }
                (RingElem::PQi(a), RingElem::PQi(b)) if a.nvars == b.nvars => {
                    Ok(RingElem::PQi(a.$name(b)))
                }
                (RingElem::SQ(a), RingElem::SQ(b)) if a.action == b.action => {
                    Ok(RingElem::SQ(a.$name(b)))
                }
                (RingElem::SQi(a), RingElem::SQi(b)) if a.action == b.action => {
                    Ok(RingElem::SQi(a.$name(b)))
                }
                _ => Err(Error::RingMismatch),
            }
        }
    };
}

impl RingElem {
    binop!(add);
    binop!(sub);
    binop!(mul);

    pub fn neg(&self) -> RingElem {
        match self {
            RingElem::Q(a) => RingElem::Q(FieldScalar::neg(a)),
            RingElem::Qi(a) => RingElem::Qi(a.neg()),
            RingElem::PQ(a) => RingElem::PQ(a.neg()),
            RingElem::PQi(a) => RingElem::PQi(a.neg()),
            RingElem::SQ(a) => RingElem::SQ(a.neg()),
            RingElem::SQi(a) => RingElem::SQi(a.neg()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Q(a) => FieldScalar::is_zero(a),
            RingElem::Qi(a) => FieldScalar::is_zero(a),
            RingElem::PQ(a) => a.is_zero(),
            RingElem::PQi(a) => a.is_zero(),
            RingElem::SQ(a) => a.is_zero(),
            RingElem::SQi(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Q(a) => FieldScalar::is_one(a),
            RingElem::Qi(a) => FieldScalar::is_one(a),
            RingElem::PQ(a) => a.as_unit().map(|c| c.is_one()).unwrap_or(false),
            RingElem::PQi(a) => a.as_unit().map(|c| c.is_one()).unwrap_or(false),
            RingElem::SQ(a) => a.as_unit().map(|c| c.is_one()).unwrap_or(false),
            RingElem::SQi(a) => a.as_unit().map(|c| c.is_one()).unwrap_or(false),
        }
    }

    /// Invertibility in the ring: nonzero field elements, degree-zero units
    /// of the polynomial and skew polynomial rings.
    pub fn is_invertible(&self) -> bool {
        match self {
            RingElem::Q(a) => !FieldScalar::is_zero(a),
            RingElem::Qi(a) => !FieldScalar::is_zero(a),
            RingElem::PQ(a) => a.as_unit().is_some(),
            RingElem::PQi(a) => a.as_unit().is_some(),
            RingElem::SQ(a) => a.as_unit().is_some(),
            RingElem::SQi(a) => a.as_unit().is_some(),
        }
    }

    pub fn inverse(&self) -> Result<RingElem> {
        match self {
            RingElem::Q(a) => FieldScalar::inv(a).map(RingElem::Q).ok_or(Error::NotInvertible),
            RingElem::Qi(a) => a.inv().map(RingElem::Qi).ok_or(Error::NotInvertible),
            RingElem::PQ(a) => a
                .as_unit()
                .and_then(|c| c.inv())
                .map(|c| RingElem::PQ(MPoly::constant(a.nvars, c)))
                .ok_or(Error::NotInvertible),
            RingElem::PQi(a) => a
                .as_unit()
                .and_then(|c| c.inv())
                .map(|c| RingElem::PQi(MPoly::constant(a.nvars, c)))
                .ok_or(Error::NotInvertible),
            RingElem::SQ(a) => a
                .as_unit()
                .and_then(|c| c.inv())
                .map(|c| RingElem::SQ(SPoly::constant(a.action, c)))
                .ok_or(Error::NotInvertible),
            RingElem::SQi(a) => a
                .as_unit()
                .and_then(|c| c.inv())
                .map(|c| RingElem::SQi(SPoly::constant(a.action, c)))
                .ok_or(Error::NotInvertible),
        }
    }

    pub fn zero_like(&self) -> RingElem {
        match self {
            RingElem::Q(_) => RingElem::Q(Rat::zero()),
            RingElem::Qi(_) => RingElem::Qi(Gauss::zero()),
            RingElem::PQ(a) => RingElem::PQ(MPoly::zero(a.nvars)),
            RingElem::PQi(a) => RingElem::PQi(MPoly::zero(a.nvars)),
            RingElem::SQ(a) => RingElem::SQ(SPoly::zero(a.action)),
            RingElem::SQi(a) => RingElem::SQi(SPoly::zero(a.action)),
        }
    }

    pub fn one_like(&self) -> RingElem {
        match self {
            RingElem::Q(_) => RingElem::Q(Rat::one()),
            RingElem::Qi(_) => RingElem::Qi(Gauss::one()),
            RingElem::PQ(a) => RingElem::PQ(MPoly::one(a.nvars)),
            RingElem::PQi(a) => RingElem::PQi(MPoly::one(a.nvars)),
            RingElem::SQ(a) => RingElem::SQ(SPoly::one(a.action)),
            RingElem::SQi(a) => RingElem::SQi(SPoly::one(a.action)),
        }
    }
}

/// A ring endomorphism given by its action on base-field scalars and the
/// images of the ring generators. A declared inverse makes it usable where
/// bijectivity is required.
#[derive(Clone, PartialEq, Debug)]
pub struct RingEndo {
    pub action: ScalarAction,
    pub images: Vec<RingElem>,
    pub inverse_images: Option<Vec<RingElem>>,
}

impl RingEndo {
    pub fn identity(ring: &Ring) -> Result<RingEndo> {
        let gens: Result<Vec<_>> = (0..ring.ngens()).map(|i| ring.generator(i)).collect();
        let gens = gens?;
        Ok(RingEndo {
            action: ScalarAction::Id,
            images: gens.clone(),
            inverse_images: Some(gens),
        })
    }

    pub fn apply(&self, ring: &Ring, a: &RingElem) -> Result<RingElem> {
        apply_images(ring, self.action, &self.images, a)
    }

    pub fn apply_inverse(&self, ring: &Ring, a: &RingElem) -> Result<RingElem> {
        let inv = self.inverse_images.as_ref().ok_or(Error::MissingInverse)?;
        apply_images(ring, self.action, inv, a)
    }

    /// Verifies that the generator images define a ring endomorphism (the
    /// skew commutation rule must be preserved) and that the declared inverse
    /// composes to the identity on every generator, both ways.
    pub fn validate(&self, ring: &Ring) -> Result<()> {
        if self.images.len() != ring.ngens() {
            return Err(Error::MissingGeneratorImage);
        }
        if let Ring::Skew { base: Base::Qi, .. } = ring {
            // w * i = -i * w must be preserved: sigma(w) * s(i) = s(-i) * sigma(w)
            let i = ring.imaginary()?;
            let si = match self.action {
                ScalarAction::Id => i.clone(),
                ScalarAction::Conj => i.neg(),
            };
            let img = &self.images[0];
            let lhs = img.mul(&si)?;
            let rhs = si.neg().mul(img)?;
            if lhs != rhs {
                return Err(Error::EndoCheckFailed(
                    "generator image breaks the skew commutation rule".into(),
                ));
            }
        }
        if let Some(inv) = &self.inverse_images {
            if inv.len() != ring.ngens() {
                return Err(Error::MissingGeneratorImage);
            }
            for idx in 0..ring.ngens() {
                let g = ring.generator(idx)?;
                let forward = apply_images(ring, self.action, &self.images, &inv[idx])?;
                if forward != g {
                    return Err(Error::EndoCheckFailed(format!(
                        "inverse image of generator {idx} does not compose to the identity"
                    )));
                }
                let backward = apply_images(ring, self.action, inv, &self.images[idx])?;
                if backward != g {
                    return Err(Error::EndoCheckFailed(format!(
                        "image of generator {idx} is not undone by the declared inverse"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn apply_images(
    ring: &Ring,
    action: ScalarAction,
    images: &[RingElem],
    a: &RingElem,
) -> Result<RingElem> {
    match a {
        RingElem::Q(v) => Ok(RingElem::Q(action.apply(v))),
        RingElem::Qi(v) => Ok(RingElem::Qi(action.apply(v))),
        RingElem::PQ(p) => apply_images_poly(ring, action, images, p, RingElem::PQ),
        RingElem::PQi(p) => apply_images_poly(ring, action, images, p, RingElem::PQi),
        RingElem::SQ(p) => apply_images_skew(ring, action, images, p, RingElem::SQ),
        RingElem::SQi(p) => apply_images_skew(ring, action, images, p, RingElem::SQi),
    }
}

fn apply_images_poly<F: FieldScalar>(
    ring: &Ring,
    action: ScalarAction,
    images: &[RingElem],
    p: &MPoly<F>,
    wrap: fn(MPoly<F>) -> RingElem,
) -> Result<RingElem> {
    if images.len() != p.nvars {
        return Err(Error::MissingGeneratorImage);
    }
    let mut acc = ring.zero();
    for (e, c) in &p.terms {
        let mut term = wrap(MPoly::constant(p.nvars, action.apply(c)));
        for (j, &k) in e.iter().enumerate() {
            for _ in 0..k {
                term = term.mul(&images[j])?;
            }
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

fn apply_images_skew<F: FieldScalar>(
    ring: &Ring,
    action: ScalarAction,
    images: &[RingElem],
    p: &SPoly<F>,
    wrap: fn(SPoly<F>) -> RingElem,
) -> Result<RingElem> {
    if images.len() != 1 {
        return Err(Error::MissingGeneratorImage);
    }
    let mut acc = ring.zero();
    for (d, c) in &p.coeffs {
        let mut term = wrap(SPoly::constant(p.action, action.apply(c)));
        for _ in 0..*d {
            term = term.mul(&images[0])?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Decides whether `a` lies in the right ideal generated by `gens` and, if
/// so, produces b with a = sum gens[i] * b[i].
pub fn solve_right_membership(a: &RingElem, gens: &[RingElem]) -> Result<Option<Vec<RingElem>>> {
    if a.is_zero() {
        return Ok(Some(gens.iter().map(|g| g.zero_like()).collect()));
    }
    if gens.is_empty() {
        return Ok(None);
    }
    for g in gens {
        compat(a, g)?;
    }
    match a {
        RingElem::Q(_) | RingElem::Qi(_) => field_membership(a, gens),
        RingElem::PQ(p) => {
            let gp: Vec<MPoly<Rat>> = gens.iter().map(|g| as_pq(g).clone()).collect();
            Ok(poly_membership(p, &gp).map(|v| v.into_iter().map(RingElem::PQ).collect()))
        }
        RingElem::PQi(p) => {
            let gp: Vec<MPoly<Gauss>> = gens.iter().map(|g| as_pqi(g).clone()).collect();
            Ok(poly_membership(p, &gp).map(|v| v.into_iter().map(RingElem::PQi).collect()))
        }
        RingElem::SQ(p) => {
            let gp: Vec<SPoly<Rat>> = gens.iter().map(|g| as_sq(g).clone()).collect();
            Ok(skew_membership(p, &gp).map(|v| v.into_iter().map(RingElem::SQ).collect()))
        }
        RingElem::SQi(p) => {
            let gp: Vec<SPoly<Gauss>> = gens.iter().map(|g| as_sqi(g).clone()).collect();
            Ok(skew_membership(p, &gp).map(|v| v.into_iter().map(RingElem::SQi).collect()))
        }
    }
}

/// A finite generating set of the right syzygy module
/// {(b_1..b_m) : sum gens[i] * b_i = 0}.
pub fn right_syzygies(gens: &[RingElem]) -> Result<Vec<Vec<RingElem>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    for g in gens {
        compat(&gens[0], g)?;
    }
    match &gens[0] {
        RingElem::Q(_) | RingElem::Qi(_) => field_syzygies(gens),
        RingElem::PQ(_) => {
            let gp: Vec<MPoly<Rat>> = gens.iter().map(|g| as_pq(g).clone()).collect();
            Ok(poly_syzygies(&gp)
                .into_iter()
                .map(|row| row.into_iter().map(RingElem::PQ).collect())
                .collect())
        }
        RingElem::PQi(_) => {
            let gp: Vec<MPoly<Gauss>> = gens.iter().map(|g| as_pqi(g).clone()).collect();
            Ok(poly_syzygies(&gp)
                .into_iter()
                .map(|row| row.into_iter().map(RingElem::PQi).collect())
                .collect())
        }
        RingElem::SQ(_) => {
            let gp: Vec<SPoly<Rat>> = gens.iter().map(|g| as_sq(g).clone()).collect();
            Ok(skew_syzygies(&gp)
                .into_iter()
                .map(|row| row.into_iter().map(RingElem::SQ).collect())
                .collect())
        }
        RingElem::SQi(_) => {
            let gp: Vec<SPoly<Gauss>> = gens.iter().map(|g| as_sqi(g).clone()).collect();
            Ok(skew_syzygies(&gp)
                .into_iter()
                .map(|row| row.into_iter().map(RingElem::SQi).collect())
                .collect())
        }
    }
}

fn compat(a: &RingElem, b: &RingElem) -> Result<()> {
    let ok = matches!(
        (a, b),
        (RingElem::Q(_), RingElem::Q(_)) | (RingElem::Qi(_), RingElem::Qi(_))
    ) || matches!((a, b), (RingElem::PQ(x), RingElem::PQ(y)) if x.nvars == y.nvars)
        || matches!((a, b), (RingElem::PQi(x), RingElem::PQi(y)) if x.nvars == y.nvars)
        || matches!((a, b), (RingElem::SQ(x), RingElem::SQ(y)) if x.action == y.action)
        || matches!((a, b), (RingElem::SQi(x), RingElem::SQi(y)) if x.action == y.action);
    if ok {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

fn as_pq(e: &RingElem) -> &MPoly<Rat> {
    match e {
        RingElem::PQ(p) => p,
        _ => unreachable!(),
    }
}
fn as_pqi(e: &RingElem) -> &MPoly<Gauss> {
    match e {
        RingElem::PQi(p) => p,
        _ => unreachable!(),
    }
}
fn as_sq(e: &RingElem) -> &SPoly<Rat> {
    match e {
        RingElem::SQ(p) => p,
        _ => unreachable!(),
    }
}
fn as_sqi(e: &RingElem) -> &SPoly<Gauss> {
    match e {
        RingElem::SQi(p) => p,
        _ => unreachable!(),
    }
}

/// Field case: lowest-index nonzero pivot.
fn field_membership(a: &RingElem, gens: &[RingElem]) -> Result<Option<Vec<RingElem>>> {
    let p = match gens.iter().position(|g| !g.is_zero()) {
        Some(p) => p,
        None => return Ok(None),
    };
    let mut out: Vec<RingElem> = gens.iter().map(|g| g.zero_like()).collect();
    out[p] = gens[p].inverse()?.mul(a)?;
    Ok(Some(out))
}

fn field_syzygies(gens: &[RingElem]) -> Result<Vec<Vec<RingElem>>> {
    let m = gens.len();
    let zero = gens[0].zero_like();
    let one = gens[0].one_like();
    let mut out = Vec::new();
    let pivot = gens.iter().position(|g| !g.is_zero());
    for j in 0..m {
        if gens[j].is_zero() {
            let mut row = vec![zero.clone(); m];
            row[j] = one.clone();
            out.push(row);
        } else if let Some(p) = pivot {
            if j != p {
                let mut row = vec![zero.clone(); m];
                row[j] = one.clone();
                row[p] = gens[p].inverse()?.mul(&gens[j])?.neg();
                out.push(row);
            }
        }
    }
    Ok(out)
}

fn poly_membership<F: FieldScalar>(a: &MPoly<F>, gens: &[MPoly<F>]) -> Option<Vec<MPoly<F>>> {
    let gb = buchberger_traced(gens);
    gb.lift(a)
}

fn poly_syzygies<F: FieldScalar>(gens: &[MPoly<F>]) -> Vec<Vec<MPoly<F>>> {
    let gb = buchberger_traced(gens);
    gb.syzygies()
}

fn skew_membership<F: FieldScalar>(a: &SPoly<F>, gens: &[SPoly<F>]) -> Option<Vec<SPoly<F>>> {
    let action = gens[0].action;
    let (u, pivot) = column_reduce(gens, action);
    let p = pivot?;
    // gcld of the row
    let mut g = SPoly::zero(action);
    for (i, gen) in gens.iter().enumerate() {
        g = g.add(&gen.mul(&u[i][p]));
    }
    let (q, rem) = a.right_divmod(&g);
    if !rem.is_zero() {
        return None;
    }
    Some((0..gens.len()).map(|i| u[i][p].mul(&q)).collect())
}

fn skew_syzygies<F: FieldScalar>(gens: &[SPoly<F>]) -> Vec<Vec<SPoly<F>>> {
    let action = gens[0].action;
    let m = gens.len();
    let (u, pivot) = column_reduce(gens, action);
    let mut out = Vec::new();
    for j in 0..m {
        if Some(j) == pivot {
            continue;
        }
        let col: Vec<SPoly<F>> = (0..m).map(|i| u[i][j].clone()).collect();
        if col.iter().any(|c| !c.is_zero()) {
            out.push(col);
        }
    }
    out
}
