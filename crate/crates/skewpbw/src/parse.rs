//! Parsing of polynomial/vector expressions and of the line-oriented algebra
//! definition format.
//!
//! Expression grammar: sums of signed products; factors are rational
//! literals, the imaginary unit `i`, declared names, parenthesized
//! subexpressions and `^` powers; `*` between factors is optional. Vectors
//! are bracketed comma-separated expression lists.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{Algebra, AlgebraSpec, PolyA, Relation, VecA};
use crate::coeffring::{Base, Ring, RingElem, RingEndo};
use crate::error::{Error, Result};
use crate::scalar::Rat;
use crate::spoly::ScalarAction;

// ---- lexer -----------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Num(Rat),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer {
    toks: Vec<(Tok, usize)>, // token, column (1-based)
    pos: usize,
    line: usize,
}

fn lex(text: &str, line: usize) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let col = k + 1;
        let c = chars[k];
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                k += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                k += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                k += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                k += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                k += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                k += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                k += 1;
            }
            '[' => {
                toks.push((Tok::LBracket, col));
                k += 1;
            }
            ']' => {
                toks.push((Tok::RBracket, col));
                k += 1;
            }
            ',' => {
                toks.push((Tok::Comma, col));
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let num: String = chars[start..k].iter().collect();
                let numerator: BigInt = num.parse().unwrap();
                // a slash directly after a number continues the rational literal
                if k < chars.len() && chars[k] == '/' {
                    let dstart = k + 1;
                    let mut dk = dstart;
                    while dk < chars.len() && chars[dk].is_ascii_digit() {
                        dk += 1;
                    }
                    if dk == dstart {
                        return Err(Error::Parse {
                            line,
                            col: k + 1,
                            msg: "expected digits after '/'".into(),
                        });
                    }
                    let den: String = chars[dstart..dk].iter().collect();
                    let denominator: BigInt = den.parse().unwrap();
                    if denominator == BigInt::from(0) {
                        return Err(Error::Parse {
                            line,
                            col: dstart,
                            msg: "zero denominator".into(),
                        });
                    }
                    toks.push((Tok::Num(Rat::new(numerator, denominator)), col));
                    k = dk;
                } else {
                    toks.push((Tok::Num(Rat::from_integer(numerator)), col));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                toks.push((Tok::Name(chars[start..k].iter().collect()), col));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(Lexer { toks, pos: 0, line })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse { line: self.line, col: self.col(), msg }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

// ---- expression AST ----------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Vector(Vec<Expr>),
}

fn parse_expr_toks(lx: &mut Lexer) -> Result<Expr> {
    if lx.peek() == Some(&Tok::LBracket) {
        lx.next();
        let mut comps = vec![parse_sum(lx)?];
        while lx.peek() == Some(&Tok::Comma) {
            lx.next();
            comps.push(parse_sum(lx)?);
        }
        lx.expect(&Tok::RBracket, "']'")?;
        return Ok(Expr::Vector(comps));
    }
    parse_sum(lx)
}

fn parse_sum(lx: &mut Lexer) -> Result<Expr> {
    let mut negate = false;
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
            }
            Some(Tok::Minus) => {
                negate = !negate;
                lx.next();
            }
            _ => break,
        }
    }
    let mut acc = parse_product(lx)?;
    if negate {
        acc = Expr::Neg(Box::new(acc));
    }
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                let rhs = parse_product(lx)?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            }
            Some(Tok::Minus) => {
                lx.next();
                let rhs = parse_product(lx)?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_product(lx: &mut Lexer) -> Result<Expr> {
    let mut acc = parse_power(lx)?;
    loop {
        match lx.peek() {
            Some(Tok::Star) => {
                lx.next();
                let rhs = parse_power(lx)?;
                acc = Expr::Mul(Box::new(acc), Box::new(rhs));
            }
            // juxtaposition: a factor can start right after the previous one
            Some(Tok::Name(_)) | Some(Tok::Num(_)) | Some(Tok::LParen) => {
                let rhs = parse_power(lx)?;
                acc = Expr::Mul(Box::new(acc), Box::new(rhs));
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_power(lx: &mut Lexer) -> Result<Expr> {
    let base = parse_atom(lx)?;
    if lx.peek() == Some(&Tok::Caret) {
        lx.next();
        match lx.next() {
            Some(Tok::Num(r)) if r.is_integer() && r >= Rat::from_integer(0.into()) => {
                let k: u32 = r
                    .to_integer()
                    .try_into()
                    .map_err(|_| lx.err("exponent too large".into()))?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => Err(lx.err("expected a natural number exponent".into())),
        }
    } else {
        Ok(base)
    }
}

fn parse_atom(lx: &mut Lexer) -> Result<Expr> {
    match lx.next() {
        Some(Tok::Num(r)) => Ok(Expr::Num(r)),
        Some(Tok::Name(s)) => Ok(Expr::Sym(s)),
        Some(Tok::LParen) => {
            let inner = parse_sum(lx)?;
            lx.expect(&Tok::RParen, "')'")?;
            Ok(inner)
        }
        Some(Tok::Minus) => {
            let inner = parse_atom(lx)?;
            Ok(Expr::Neg(Box::new(inner)))
        }
        _ => Err(lx.err("expected a number, name or '('".into())),
    }
}

/// Parses a standalone expression string into an AST.
pub fn parse_expression(text: &str) -> Result<Expr> {
    parse_expression_at(text, 1)
}

fn parse_expression_at(text: &str, line: usize) -> Result<Expr> {
    let mut lx = lex(text, line)?;
    let e = parse_expr_toks(&mut lx)?;
    if !lx.at_end() {
        return Err(lx.err("trailing input after expression".into()));
    }
    Ok(e)
}

// ---- evaluation --------------------------------------------------------------

pub enum ParsedInput {
    Poly(PolyA),
    Vector(VecA),
}

/// Evaluates an expression in the algebra: names resolve to extension
/// variables first, then to coefficient-ring generators, then to the
/// imaginary unit; products in any symbol order are normalized by the engine.
pub fn eval_input(alg: &Algebra, e: &Expr) -> Result<ParsedInput> {
    match e {
        Expr::Vector(comps) => {
            let polys: Result<Vec<PolyA>> = comps.iter().map(|c| eval_poly(alg, c)).collect();
            Ok(ParsedInput::Vector(VecA::from_components(polys?)))
        }
        other => Ok(ParsedInput::Poly(eval_poly(alg, other)?)),
    }
}

pub fn eval_poly(alg: &Algebra, e: &Expr) -> Result<PolyA> {
    let n = alg.n();
    match e {
        Expr::Num(r) => Ok(PolyA::monomial(
            n,
            crate::algebra::Exponent::zero(n),
            alg.ring().from_rat(r.clone()),
        )),
        Expr::Sym(s) => {
            if let Some(idx) = alg.spec().var_names.iter().position(|v| v == s) {
                return Ok(PolyA::monomial(
                    n,
                    crate::algebra::Exponent::unit(n, idx),
                    alg.ring().one(),
                ));
            }
            if let Some(c) = resolve_ring_symbol(alg.ring(), s)? {
                return Ok(PolyA::monomial(n, crate::algebra::Exponent::zero(n), c));
            }
            Err(Error::UnknownSymbol(s.clone()))
        }
        Expr::Neg(a) => Ok(alg.poly_neg(&eval_poly(alg, a)?)),
        Expr::Add(a, b) => alg.poly_add(&eval_poly(alg, a)?, &eval_poly(alg, b)?),
        Expr::Sub(a, b) => alg.poly_sub(&eval_poly(alg, a)?, &eval_poly(alg, b)?),
        Expr::Mul(a, b) => alg.poly_mul(&eval_poly(alg, a)?, &eval_poly(alg, b)?),
        Expr::Pow(a, k) => {
            let base = eval_poly(alg, a)?;
            let mut acc = alg.poly_one();
            for _ in 0..*k {
                acc = alg.poly_mul(&acc, &base)?;
            }
            Ok(acc)
        }
        Expr::Vector(_) => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "vector literal where a polynomial was expected".into(),
        }),
    }
}

fn resolve_ring_symbol(ring: &Ring, s: &str) -> Result<Option<RingElem>> {
    let names = ring.generator_names();
    if let Some(idx) = names.iter().position(|v| v == s) {
        return Ok(Some(ring.generator(idx)?));
    }
    if s == "i" || s == "I" {
        return ring.imaginary().map(Some);
    }
    Ok(None)
}

/// Evaluates an expression inside the coefficient ring only.
pub fn eval_ring(ring: &Ring, e: &Expr) -> Result<RingElem> {
    match e {
        Expr::Num(r) => Ok(ring.from_rat(r.clone())),
        Expr::Sym(s) => {
            resolve_ring_symbol(ring, s)?.ok_or_else(|| Error::UnknownSymbol(s.clone()))
        }
        Expr::Neg(a) => Ok(eval_ring(ring, a)?.neg()),
        Expr::Add(a, b) => eval_ring(ring, a)?.add(&eval_ring(ring, b)?),
        Expr::Sub(a, b) => eval_ring(ring, a)?.sub(&eval_ring(ring, b)?),
        Expr::Mul(a, b) => eval_ring(ring, a)?.mul(&eval_ring(ring, b)?),
        Expr::Pow(a, k) => {
            let base = eval_ring(ring, a)?;
            let mut acc = ring.one();
            for _ in 0..*k {
                acc = acc.mul(&base)?;
            }
            Ok(acc)
        }
        Expr::Vector(_) => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "vector literal inside a coefficient".into(),
        }),
    }
}

/// Parses an expression string and evaluates it in the algebra.
pub fn parse_input(alg: &Algebra, text: &str) -> Result<ParsedInput> {
    eval_input(alg, &parse_expression(text)?)
}

pub fn parse_poly(alg: &Algebra, text: &str) -> Result<PolyA> {
    eval_poly(alg, &parse_expression(text)?)
}

pub fn parse_vec(alg: &Algebra, text: &str) -> Result<VecA> {
    match parse_input(alg, text)? {
        ParsedInput::Vector(v) => Ok(v),
        ParsedInput::Poly(p) => {
            // a bare polynomial is the rank-1 module element
            Ok(VecA::from_components(vec![p]))
        }
    }
}

// ---- algebra files -----------------------------------------------------------

struct PendingEndo {
    images: BTreeMap<usize, Expr>,
    inverse_images: BTreeMap<usize, Expr>,
}

/// Parses the line-oriented algebra format:
///
/// ```text
/// algebra  := header coeff vars rel* sigma* delta*
/// header   := "algebra" NAME
/// coeff    := "coeff" ( "Q" | "Qi" | "cpoly" ("Q"|"Qi") NAME+
///            | "skewpoly" ("Q"|"Qi") NAME ("id"|"conj") )
/// vars     := "vars" NAME+
/// rel      := "rel" NAME "*" NAME "=" EXPR
/// sigma    := "sigma" NAME ":" NAME "->" EXPR ("," NAME "->" EXPR)*
/// delta    := "delta" NAME ":" NAME "->" EXPR ("," NAME "->" EXPR)*
/// ```
///
/// `sigmainv` lines declare inverse images explicitly; for linear images
/// a*gen they are derived automatically. Missing rel lines mean commuting
/// variables, missing sigma the identity, missing delta zero.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut name: Option<String> = None;
    let mut ring: Option<Ring> = None;
    let mut var_names: Option<Vec<String>> = None;
    let mut rels: Vec<(usize, String, String, String)> = Vec::new(); // line, hi, lo, rhs
    let mut sigmas: BTreeMap<usize, PendingEndo> = BTreeMap::new();
    let mut deltas: BTreeMap<usize, BTreeMap<usize, Expr>> = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        match keyword {
            "algebra" => {
                if rest.is_empty() {
                    return Err(perr(line, "algebra needs a name"));
                }
                name = Some(rest.to_string());
            }
            "coeff" => {
                ring = Some(parse_coeff_line(rest, line)?);
            }
            "vars" => {
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(perr(line, "vars needs at least one name"));
                }
                var_names = Some(names);
            }
            "rel" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "rel needs '='"))?;
                let (a, b) = lhs
                    .split_once('*')
                    .ok_or_else(|| perr(line, "rel left side must be NAME*NAME"))?;
                rels.push((
                    line,
                    a.trim().to_string(),
                    b.trim().to_string(),
                    rhs.trim().to_string(),
                ));
            }
            "sigma" | "sigmainv" | "delta" => {
                let vars = var_names
                    .as_ref()
                    .ok_or_else(|| perr(line, "vars must come before sigma/delta"))?;
                let r = ring
                    .as_ref()
                    .ok_or_else(|| perr(line, "coeff must come before sigma/delta"))?;
                let (var, maps) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(line, "expected 'NAME: gen -> expr, ...'"))?;
                let var = var.trim();
                let vidx = vars
                    .iter()
                    .position(|v| v == var)
                    .ok_or_else(|| perr(line, &format!("unknown variable '{var}'")))?;
                let gen_names = r.generator_names();
                for part in maps.split(',') {
                    let (g, img) = part
                        .split_once("->")
                        .ok_or_else(|| perr(line, "expected 'gen -> expr'"))?;
                    let g = g.trim();
                    let gidx = gen_names
                        .iter()
                        .position(|v| v == g)
                        .ok_or_else(|| perr(line, &format!("unknown ring generator '{g}'")))?;
                    let expr = parse_expression_at(img.trim(), line)?;
                    match keyword {
                        "sigma" => {
                            sigmas
                                .entry(vidx)
                                .or_insert_with(|| PendingEndo {
                                    images: BTreeMap::new(),
                                    inverse_images: BTreeMap::new(),
                                })
                                .images
                                .insert(gidx, expr);
                        }
                        "sigmainv" => {
                            sigmas
                                .entry(vidx)
                                .or_insert_with(|| PendingEndo {
                                    images: BTreeMap::new(),
                                    inverse_images: BTreeMap::new(),
                                })
                                .inverse_images
                                .insert(gidx, expr);
                        }
                        _ => {
                            deltas.entry(vidx).or_default().insert(gidx, expr);
                        }
                    }
                }
            }
            other => {
                return Err(perr(line, &format!("unknown directive '{other}'")));
            }
        }
    }

    let name = name.ok_or_else(|| perr(1, "missing 'algebra' header"))?;
    let ring = ring.ok_or_else(|| perr(1, "missing 'coeff' line"))?;
    let var_names = var_names.ok_or_else(|| perr(1, "missing 'vars' line"))?;
    let n = var_names.len();
    let ngens = ring.ngens();

    // endomorphisms: identity by default, declared images otherwise
    let mut sigma = Vec::with_capacity(n);
    for vidx in 0..n {
        match sigmas.get(&vidx) {
            None => sigma.push(RingEndo::identity(&ring).map_err(|e| e)?),
            Some(pending) => {
                let mut images = Vec::with_capacity(ngens);
                for g in 0..ngens {
                    match pending.images.get(&g) {
                        Some(expr) => images.push(eval_ring(&ring, expr)?),
                        None => images.push(ring.generator(g)?),
                    }
                }
                let inverse_images = if pending.inverse_images.is_empty() {
                    derive_inverse_images(&ring, &images)
                } else {
                    let mut inv = Vec::with_capacity(ngens);
                    for g in 0..ngens {
                        match pending.inverse_images.get(&g) {
                            Some(expr) => inv.push(eval_ring(&ring, expr)?),
                            None => inv.push(ring.generator(g)?),
                        }
                    }
                    Some(inv)
                };
                sigma.push(RingEndo { action: ScalarAction::Id, images, inverse_images });
            }
        }
    }

    let mut delta = Vec::with_capacity(n);
    for vidx in 0..n {
        let mut images = vec![ring.zero(); ngens];
        if let Some(map) = deltas.get(&vidx) {
            for (g, expr) in map {
                images[*g] = eval_ring(&ring, expr)?;
            }
        }
        delta.push(images);
    }

    // relations are normalized with the table built so far, so products on a
    // rel right-hand side may use earlier rel lines
    let mut relations: BTreeMap<(usize, usize), Relation> = BTreeMap::new();
    for (line, hi_name, lo_name, rhs) in rels {
        let hi = var_names
            .iter()
            .position(|v| *v == hi_name)
            .ok_or_else(|| perr(line, &format!("unknown variable '{hi_name}'")))?;
        let lo = var_names
            .iter()
            .position(|v| *v == lo_name)
            .ok_or_else(|| perr(line, &format!("unknown variable '{lo_name}'")))?;
        if hi <= lo {
            return Err(perr(
                line,
                "rel left side must be 'later*earlier' in vars order",
            ));
        }
        let provisional = Algebra::new(AlgebraSpec {
            name: name.clone(),
            ring: ring.clone(),
            var_names: var_names.clone(),
            sigma: sigma.clone(),
            delta: delta.clone(),
            relations: relations.clone(),
        })?;
        let rhs_poly = eval_poly(&provisional, &parse_expression_at(&rhs, line)?)?;
        let rel = extract_relation(&provisional, lo, hi, &rhs_poly)
            .map_err(|msg| perr(line, &msg))?;
        relations.insert((lo, hi), rel);
    }

    Algebra::new(AlgebraSpec { name, ring, var_names, sigma, delta, relations })
}

fn perr(line: usize, msg: &str) -> Error {
    Error::Parse { line, col: 1, msg: msg.to_string() }
}

fn parse_coeff_line(rest: &str, line: usize) -> Result<Ring> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    match parts.as_slice() {
        ["Q"] => Ok(Ring::Q),
        ["Qi"] => Ok(Ring::Qi),
        ["cpoly", base, names @ ..] if !names.is_empty() => Ok(Ring::Poly {
            base: parse_base(base, line)?,
            vars: names.iter().map(|s| s.to_string()).collect(),
        }),
        ["skewpoly", base, var, action] => Ok(Ring::Skew {
            base: parse_base(base, line)?,
            var: var.to_string(),
            action: match *action {
                "id" => ScalarAction::Id,
                "conj" => ScalarAction::Conj,
                _ => return Err(perr(line, "scalar action must be 'id' or 'conj'")),
            },
        }),
        _ => Err(perr(line, "malformed coeff line")),
    }
}

fn parse_base(s: &str, line: usize) -> Result<Base> {
    match s {
        "Q" => Ok(Base::Q),
        "Qi" => Ok(Base::Qi),
        _ => Err(perr(line, "base field must be Q or Qi")),
    }
}

/// Derives inverse images when every generator maps to a scalar multiple of
/// itself; anything else requires explicit sigmainv lines.
fn derive_inverse_images(ring: &Ring, images: &[RingElem]) -> Option<Vec<RingElem>> {
    let mut out = Vec::with_capacity(images.len());
    for (g, img) in images.iter().enumerate() {
        let gen = ring.generator(g).ok()?;
        // img = a * gen with a an invertible constant?
        let a = scalar_multiple_of(ring, img, g)?;
        let a_inv = a.inverse().ok()?;
        out.push(a_inv.mul(&gen).ok()?);
    }
    Some(out)
}

/// If e = a * gen_idx with a a base-field constant, returns a.
fn scalar_multiple_of(ring: &Ring, e: &RingElem, gen_idx: usize) -> Option<RingElem> {
    use crate::mpoly::MPoly;
    use crate::spoly::SPoly;
    match (ring, e) {
        (Ring::Poly { vars, .. }, RingElem::PQ(p)) => {
            if p.terms.len() != 1 {
                return None;
            }
            let (expo, c) = p.terms.iter().next().unwrap();
            let mut want = vec![0u16; vars.len()];
            want[gen_idx] = 1;
            if *expo == want {
                Some(RingElem::PQ(MPoly::constant(vars.len(), c.clone())))
            } else {
                None
            }
        }
        (Ring::Poly { vars, .. }, RingElem::PQi(p)) => {
            if p.terms.len() != 1 {
                return None;
            }
            let (expo, c) = p.terms.iter().next().unwrap();
            let mut want = vec![0u16; vars.len()];
            want[gen_idx] = 1;
            if *expo == want {
                Some(RingElem::PQi(MPoly::constant(vars.len(), c.clone())))
            } else {
                None
            }
        }
        (Ring::Skew { .. }, RingElem::SQ(p)) => {
            if p.coeffs.len() != 1 {
                return None;
            }
            let (d, c) = p.coeffs.iter().next().unwrap();
            if *d == 1 {
                Some(RingElem::SQ(SPoly::constant(p.action, c.clone())))
            } else {
                None
            }
        }
        (Ring::Skew { .. }, RingElem::SQi(p)) => {
            if p.coeffs.len() != 1 {
                return None;
            }
            let (d, c) = p.coeffs.iter().next().unwrap();
            if *d == 1 {
                Some(RingElem::SQi(SPoly::constant(p.action, c.clone())))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Reads c and the affine tail off a normalized relation right-hand side
/// x_hi x_lo = c x_lo x_hi + tail.
fn extract_relation(
    alg: &Algebra,
    lo: usize,
    hi: usize,
    rhs: &PolyA,
) -> std::result::Result<Relation, String> {
    use crate::algebra::Exponent;
    let n = alg.n();
    let ring = alg.ring();
    let lead = Exponent::unit(n, lo).add(&Exponent::unit(n, hi));
    let mut c = ring.zero();
    let mut tail_const = ring.zero();
    let mut tail_lin = vec![ring.zero(); n];
    for (e, coeff) in &rhs.terms {
        if *e == lead {
            c = coeff.clone();
        } else if e.is_zero() {
            tail_const = coeff.clone();
        } else if e.deg() == 1 {
            let idx = e.0.iter().position(|&k| k == 1).unwrap();
            tail_lin[idx] = coeff.clone();
        } else {
            return Err("relation right side must be c*x_lo*x_hi plus an affine tail".into());
        }
    }
    if c.is_zero() {
        return Err("relation right side lacks the x_lo*x_hi term".into());
    }
    if !c.is_invertible() {
        return Err("relation constant must be invertible".into());
    }
    Ok(Relation { c, tail_const, tail_lin })
}
