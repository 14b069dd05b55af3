//! Command implementations behind the `spbw` binary: load an algebra, parse
//! vector inputs, run divide / groebner / member, and render byte-stable
//! output. Exit codes: 0 success, 2 parse or validation failure, 3 subset
//! cap exceeded.

use crate::algebra::{Algebra, VecA};
use crate::buchberger::{groebner, member, trim, GroebnerOptions, Membership};
use crate::display::{format_poly, format_vec};
use crate::division::divide;
use crate::error::{Error, Result};
use crate::order::{BaseOrder, ModuleOrder, OrderSpec};
use crate::parse::{parse_algebra, parse_vec};

pub struct Request {
    pub algebra_text: String,
    pub order: String,
    pub module_order: String,
    pub max_subset: Option<usize>,
    pub trim: bool,
    /// Expression texts: the first is the dividend / membership candidate
    /// where applicable, the rest are generators.
    pub inputs: Vec<String>,
}

fn order_spec(req: &Request) -> Result<OrderSpec> {
    let base = BaseOrder::parse(&req.order).ok_or_else(|| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("unknown order '{}'", req.order),
    })?;
    let module = ModuleOrder::parse(&req.module_order).ok_or_else(|| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("unknown module order '{}'", req.module_order),
    })?;
    Ok(OrderSpec::new(base, module))
}

fn load(req: &Request) -> Result<(Algebra, OrderSpec, Vec<VecA>)> {
    let alg = parse_algebra(&req.algebra_text)?;
    let ord = order_spec(req)?;
    let mut vecs = Vec::with_capacity(req.inputs.len());
    for text in &req.inputs {
        vecs.push(parse_vec(&alg, text)?);
    }
    if let Some(first) = vecs.first() {
        for v in &vecs {
            if v.rank != first.rank {
                return Err(Error::RankMismatch);
            }
        }
    }
    Ok((alg, ord, vecs))
}

pub fn cmd_divide(req: &Request) -> Result<String> {
    let (alg, ord, vecs) = load(req)?;
    if vecs.len() < 2 {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: "divide needs a dividend and at least one generator".into(),
        });
    }
    let f = &vecs[0];
    let gens = &vecs[1..];
    let res = divide(&alg, f, gens, ord)?;
    let mut out = String::new();
    for (k, q) in res.quotients.iter().enumerate() {
        out.push_str(&format!("q{} = {}\n", k + 1, format_poly(&alg, q, ord.base)));
    }
    out.push_str(&format!("h = {}\n", format_vec(&alg, &res.remainder, ord.base)));
    Ok(out)
}

pub fn cmd_groebner(req: &Request) -> Result<String> {
    let (alg, ord, vecs) = load(req)?;
    if vecs.is_empty() {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: "groebner needs at least one generator".into(),
        });
    }
    let opts = GroebnerOptions { max_subset: req.max_subset };
    let mut gb = groebner(&alg, &vecs, ord, opts)?;
    if req.trim {
        gb = trim(&alg, &gb)?;
    }
    let mut out = String::new();
    for (k, g) in gb.basis.iter().enumerate() {
        out.push_str(&format!("g{} = {}\n", k + 1, format_vec(&alg, g, ord.base)));
    }
    Ok(out)
}

pub fn cmd_member(req: &Request) -> Result<String> {
    let (alg, ord, vecs) = load(req)?;
    if vecs.len() < 2 {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: "member needs a candidate and at least one generator".into(),
        });
    }
    let f = &vecs[0];
    let gens = &vecs[1..];
    let opts = GroebnerOptions { max_subset: req.max_subset };
    let mut gb = groebner(&alg, gens, ord, opts)?;
    if req.trim {
        gb = trim(&alg, &gb)?;
    }
    let mut out = String::new();
    for (k, g) in gb.basis.iter().enumerate() {
        out.push_str(&format!("g{} = {}\n", k + 1, format_vec(&alg, g, ord.base)));
    }
    let (m, _) = member(&alg, f, &gb)?;
    match m {
        Membership::Member { quotients } => {
            out.push_str("member\n");
            for (k, q) in quotients.iter().enumerate() {
                out.push_str(&format!("q{} = {}\n", k + 1, format_poly(&alg, q, ord.base)));
            }
        }
        Membership::NotMember { remainder } => {
            out.push_str("not member\n");
            out.push_str(&format!("h = {}\n", format_vec(&alg, &remainder, ord.base)));
        }
    }
    Ok(out)
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SubsetCapExceeded { .. } => 3,
        _ => 2,
    }
}
