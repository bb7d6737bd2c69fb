//! Sparse multivariate polynomials over an exact field, with the text
//! grammar used by presentation files and the CLI.
//!
//! Terms are keyed by monomial in degrevlex order, so the leading term is the
//! last map entry. Homogeneity is enforced where the public contracts demand
//! it; the Groebner engine is free to hold mixed-degree polynomials (the
//! radical-membership construction needs them). The zero polynomial carries a
//! nominal degree so degree bookkeeping stays total.

use crate::monomial::{monomial_basis, Monomial, VariableContext};
use crate::scalar::{Field, Scalar};
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
    #[error("polynomial is not homogeneous (saw degrees {0} and {1})")]
    NotHomogeneous(u32, u32),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands have different variable counts ({0} vs {1})")]
    ArityMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    nominal_degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field, degree: u32) -> Self {
        Polynomial {
            nvars,
            field,
            nominal_degree: degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(nvars: usize, field: Field, degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut poly = Polynomial::zero(nvars, field, degree);
        for (m, c) in terms {
            poly.add_term(m, c);
        }
        poly
    }

    pub fn constant(nvars: usize, field: Field, c: Scalar) -> Self {
        Polynomial::from_terms(nvars, field, 0, [(Monomial::one(nvars), c)])
    }

    pub fn variable(i: usize, nvars: usize, field: Field) -> Self {
        let one = field.one();
        Polynomial::from_terms(nvars, field, 1, [(Monomial::var(i, nvars), one)])
    }

    pub fn monomial(m: Monomial, field: Field) -> Self {
        let nvars = m.nvars();
        let d = m.degree();
        let one = field.one();
        Polynomial::from_terms(nvars, field, d, [(m, one)])
    }

    /// Add a single term, combining and dropping zeros.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.field.add(&old, &c);
                if !self.field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the nominal degree for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .unwrap_or(self.nominal_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Terms from the largest monomial down.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading term in degrevlex, if nonzero.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn check_compat(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compat(other).expect("incompatible operands");
        let mut out = self.clone();
        out.nominal_degree = self.nominal_degree.max(other.nominal_degree);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if self.field.is_zero(c) {
            return Polynomial::zero(self.nvars, self.field, self.nominal_degree);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.field.mul(v, c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compat(other).expect("incompatible operands");
        let mut out = Polynomial::zero(
            self.nvars,
            self.field,
            self.nominal_degree + other.nominal_degree,
        );
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, self.field, self.field.one());
        out.nominal_degree = self.nominal_degree * e;
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to variable i.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.field, self.nominal_degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                let factor = self.field.from_i64(e as i64);
                out.add_term(m.div_var(i), self.field.mul(c, &factor));
            }
        }
        out
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = self.field.mul(&t, &point[i]);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Substitute scalars for a subset of variables and renumber the rest.
    /// `assign[i] = Some(c)` fixes variable i to c; `None` keeps it. The
    /// result lives in as many variables as there are `None` entries.
    pub fn specialize(&self, assign: &[Option<Scalar>]) -> Polynomial {
        debug_assert_eq!(assign.len(), self.nvars);
        let kept: Vec<usize> = (0..self.nvars).filter(|&i| assign[i].is_none()).collect();
        let mut out = Polynomial::zero(kept.len(), self.field, self.nominal_degree);
        'term: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; kept.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &assign[i] {
                    None => {
                        let pos = kept.iter().position(|&k| k == i).unwrap();
                        exps[pos] = e;
                    }
                    Some(v) => {
                        if self.field.is_zero(v) {
                            continue 'term;
                        }
                        for _ in 0..e {
                            coeff = self.field.mul(&coeff, v);
                        }
                    }
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Substitute a polynomial for each variable (all in the same target
    /// ring). Used for linear changes of variables and slice restrictions.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        debug_assert_eq!(images.len(), self.nvars);
        let target_vars = images
            .first()
            .map(|p| p.nvars())
            .unwrap_or(self.nvars);
        let mut out = Polynomial::zero(target_vars, self.field, self.nominal_degree);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_vars, self.field, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Lift into a ring with extra trailing variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars, self.field, self.nominal_degree);
        for (m, c) in &self.terms {
            out.add_term(m.extend(nvars), c.clone());
        }
        out
    }

    /// Dense coefficient row over the canonical descending monomial basis of
    /// the polynomial's top degree (homogeneous polynomials only).
    pub fn dense_row(&self, basis_index: &std::collections::HashMap<Monomial, usize>, len: usize) -> Vec<Scalar> {
        let mut row = vec![self.field.zero(); len];
        for (m, c) in &self.terms {
            let idx = *basis_index.get(m).expect("monomial outside basis");
            row[idx] = c.clone();
        }
        row
    }

    pub fn format(&self, ctx: &VariableContext) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let cs = self.field.format(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let ms = ctx.format_monomial(m);
            if m.degree() == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&ms);
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&ms);
            }
        }
        out
    }
}

/// The public product operation with the field-compatibility contract.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    p.check_compat(q)?;
    Ok(p.mul(q))
}

/// Parse a polynomial in the term grammar and verify homogeneity.
///
/// Grammar: terms separated by `+`/`-`; a term is `*`-separated factors,
/// each an integer (or `p/q` rational), or a variable with optional `^e`.
/// Whitespace is ignored.
pub fn parse_poly(text: &str, ctx: &VariableContext, field: Field) -> Result<Polynomial, PolyError> {
    let parsed = parse_terms(text, ctx, field)?;
    let mut degree_seen: Option<u32> = None;
    for (m, _) in &parsed {
        match degree_seen {
            None => degree_seen = Some(m.degree()),
            Some(d) => {
                if m.degree() != d {
                    return Err(PolyError::NotHomogeneous(d, m.degree()));
                }
            }
        }
    }
    let degree = degree_seen.unwrap_or(0);
    Ok(Polynomial::from_terms(ctx.nvars(), field, degree, parsed))
}

/// Parse without the homogeneity requirement (ideal generators after
/// dehomogenization, CLI inputs for affine data).
pub fn parse_poly_affine(
    text: &str,
    ctx: &VariableContext,
    field: Field,
) -> Result<Polynomial, PolyError> {
    let parsed = parse_terms(text, ctx, field)?;
    Ok(Polynomial::from_terms(ctx.nvars(), field, 0, parsed))
}

fn parse_terms(
    text: &str,
    ctx: &VariableContext,
    field: Field,
) -> Result<Vec<(Monomial, Scalar)>, PolyError> {
    let tokens = lex(text)?;
    let mut out = Vec::new();
    let mut pos = 0usize;
    let mut sign_next = 1i64;
    // leading sign
    if let Some(Token::Op(c, _)) = tokens.get(pos) {
        if *c == '+' || *c == '-' {
            if *c == '-' {
                sign_next = -1;
            }
            pos += 1;
        }
    }
    loop {
        let (m, c, next) = parse_one_term(&tokens, pos, ctx, field)?;
        let c = if sign_next < 0 { field.neg(&c) } else { c };
        out.push((m, c));
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some(Token::Op('+', _)) => {
                sign_next = 1;
                pos += 1;
            }
            Some(Token::Op('-', _)) => {
                sign_next = -1;
                pos += 1;
            }
            Some(tok) => {
                return Err(PolyError::Parse {
                    at: tok.at(),
                    message: format!("expected '+' or '-', found {}", tok.describe()),
                })
            }
        }
    }
    Ok(out)
}

fn parse_one_term(
    tokens: &[Token],
    mut pos: usize,
    ctx: &VariableContext,
    field: Field,
) -> Result<(Monomial, Scalar, usize), PolyError> {
    let mut coeff = field.one();
    let mut exps = vec![0u32; ctx.nvars()];
    let mut saw_factor;
    loop {
        match tokens.get(pos) {
            Some(Token::Int(v, _)) => {
                pos += 1;
                // optional rational p/q
                let mut value = field.from_bigint(v);
                if let (Some(Token::Op('/', _)), Some(Token::Int(q, qat))) =
                    (tokens.get(pos), tokens.get(pos + 1))
                {
                    let denom = field.from_bigint(q);
                    value = field.div(&value, &denom).map_err(|_| PolyError::Parse {
                        at: *qat,
                        message: "zero denominator".to_string(),
                    })?;
                    pos += 2;
                }
                coeff = field.mul(&coeff, &value);
                saw_factor = true;
            }
            Some(Token::Ident(name, at)) => {
                let idx = ctx.index_of(name).ok_or_else(|| PolyError::Parse {
                    at: *at,
                    message: format!("unknown variable '{name}'"),
                })?;
                pos += 1;
                let mut e: u32 = 1;
                if let Some(Token::Op('^', _)) = tokens.get(pos) {
                    match tokens.get(pos + 1) {
                        Some(Token::Int(v, at2)) => {
                            e = num_traits::ToPrimitive::to_u32(v).ok_or(PolyError::Parse {
                                at: *at2,
                                message: "exponent out of range".to_string(),
                            })?;
                            pos += 2;
                        }
                        other => {
                            return Err(PolyError::Parse {
                                at: other.map(|t| t.at()).unwrap_or(usize::MAX),
                                message: "expected integer exponent after '^'".to_string(),
                            })
                        }
                    }
                }
                exps[idx] += e;
                saw_factor = true;
            }
            other => {
                return Err(PolyError::Parse {
                    at: other.map(|t| t.at()).unwrap_or(usize::MAX),
                    message: "expected a coefficient or variable".to_string(),
                })
            }
        }
        if let Some(Token::Op('*', _)) = tokens.get(pos) {
            pos += 1;
            continue;
        }
        break;
    }
    if !saw_factor {
        return Err(PolyError::Parse {
            at: usize::MAX,
            message: "empty term".to_string(),
        });
    }
    Ok((Monomial::new(exps), coeff, pos))
}

enum Token {
    Int(BigInt, usize),
    Ident(String, usize),
    Op(char, usize),
}

impl Token {
    fn at(&self) -> usize {
        match self {
            Token::Int(_, a) | Token::Ident(_, a) | Token::Op(_, a) => *a,
        }
    }
    fn describe(&self) -> String {
        match self {
            Token::Int(v, _) => format!("integer {v}"),
            Token::Ident(s, _) => format!("identifier '{s}'"),
            Token::Op(c, _) => format!("'{c}'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Token>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' | b'-' | b'*' | b'^' | b'/' => {
                out.push(Token::Op(b as char, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digit run parses");
                out.push(Token::Int(v, start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token::Ident(text[start..i].to_string(), start));
            }
            _ => {
                return Err(PolyError::Parse {
                    at: i,
                    message: format!("unexpected byte '{}'", b as char),
                })
            }
        }
    }
    Ok(out)
}

/// Index map for the canonical descending basis of one degree.
pub fn basis_index(basis: &[Monomial]) -> std::collections::HashMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

/// Convenience: canonical basis plus its index map.
pub fn degree_basis(n: usize, d: u32) -> (Vec<Monomial>, std::collections::HashMap<Monomial, usize>) {
    let b = monomial_basis(n, d);
    let idx = basis_index(&b);
    (b, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn ctx4() -> VariableContext {
        VariableContext::ring(3)
    }

    #[test]
    fn parse_ex5_generator() {
        let f = Field::rationals();
        let p = parse_poly("x3^2 + 2*x0*x1", &ctx4(), f).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.degree(), 2);
        assert!(p.is_homogeneous());
    }

    #[test]
    fn parse_cancellation_gives_canonical_zero() {
        let f = Field::rationals();
        let p = parse_poly("x0^3 - x0^3", &ctx4(), f).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), 3);
    }

    #[test]
    fn parse_rejects_mixed_degrees() {
        let f = Field::rationals();
        let e = parse_poly("x0 + x1^2", &ctx4(), f).unwrap_err();
        assert!(matches!(e, PolyError::NotHomogeneous(_, _)));
    }

    #[test]
    fn parse_rejects_junk() {
        let f = Field::rationals();
        assert!(parse_poly("x0 $ x1", &ctx4(), f).is_err());
        assert!(parse_poly("y0^2", &ctx4(), f).is_err());
        assert!(parse_poly("x0 + ", &ctx4(), f).is_err());
    }

    #[test]
    fn product_examples() {
        let f = Field::rationals();
        let c = ctx4();
        let x0 = parse_poly("x0", &c, f).unwrap();
        assert_eq!(x0.mul(&x0), parse_poly("x0^2", &c, f).unwrap());
        let p = parse_poly("x0 + x1", &c, f).unwrap();
        let q = parse_poly("x0 - x1", &c, f).unwrap();
        assert_eq!(p.mul(&q), parse_poly("x0^2 - x1^2", &c, f).unwrap());
        let s = parse_poly("x0 + x1 + x2", &c, f).unwrap();
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 6);
        assert_eq!(
            sq,
            parse_poly("x0^2 + 2*x0*x1 + 2*x0*x2 + x1^2 + 2*x1*x2 + x2^2", &c, f).unwrap()
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let c = ctx4();
        let p = parse_poly("x0", &c, Field::rationals()).unwrap();
        let q = parse_poly("x0", &c, Field::prime(9973).unwrap()).unwrap();
        assert!(matches!(poly_mul(&p, &q), Err(PolyError::FieldMismatch)));
    }

    #[test]
    fn derivatives() {
        let f = Field::rationals();
        let c = ctx4();
        let p = parse_poly("x0^3", &c, f).unwrap();
        assert_eq!(p.partial_derivative(0), parse_poly("3*x0^2", &c, f).unwrap());
        let ex2 = parse_poly("x0^3+x1^3+x2^3+x3^3+6*x0*x1*x2", &c, f).unwrap();
        assert_eq!(ex2.partial_derivative(3), parse_poly("3*x3^2", &c, f).unwrap());
        assert!(parse_poly("x2^3", &c, f).unwrap().partial_derivative(1).is_zero());
    }

    #[test]
    fn format_round_trip() {
        let f = Field::rationals();
        let c = ctx4();
        for text in [
            "x0^3 + x1^3 + 6*x0*x1*x2",
            "-x0^2 + 2*x1*x2 - 3*x3^2",
            "1/2*x0*x1 - x2^2",
        ] {
            let p = parse_poly(text, &c, f).unwrap();
            let shown = p.format(&c);
            let q = parse_poly(&shown, &c, f).unwrap();
            assert_eq!(p, q, "round trip failed for {text} -> {shown}");
        }
        assert_eq!(Polynomial::zero(4, f, 2).format(&c), "0");
    }

    #[test]
    fn ring_axioms_on_random_inputs() {
        // commutativity, associativity, distributivity at n <= 3, degree <= 4
        let f = Field::prime(9973).unwrap();
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..100 {
            let n = (next() % 3 + 1) as usize; // 1..=3
            let d = (next() % 3 + 1) as u32;
            let rand_poly = |next: &mut dyn FnMut() -> u64| {
                let basis = monomial_basis(n, d);
                let mut p = Polynomial::zero(n + 1, f, d);
                for m in basis {
                    let c = next() % 7;
                    p.add_term(m, f.from_i64(c as i64 - 3));
                }
                p
            };
            let p = rand_poly(&mut next);
            let q = rand_poly(&mut next);
            let r = rand_poly(&mut next);
            assert_eq!(p.mul(&q), q.mul(&p), "commutativity, trial {trial}");
            assert_eq!(
                p.mul(&q).mul(&r),
                p.mul(&q.mul(&r)),
                "associativity, trial {trial}"
            );
            assert_eq!(
                p.mul(&q.add(&r)),
                p.mul(&q).add(&p.mul(&r)),
                "distributivity, trial {trial}"
            );
        }
    }

    #[test]
    fn specialize_and_substitute() {
        let f = Field::rationals();
        let c = ctx4();
        let p = parse_poly("x0^2 + x1*x2 + x3^2", &c, f).unwrap();
        // set x0 = 1, x1 = 0; keep x2, x3
        let s = p.specialize(&[
            Some(f.one()),
            Some(f.zero()),
            None,
            None,
        ]);
        assert_eq!(s.nvars(), 2);
        let c2 = VariableContext::new(1, vec!["x2".into(), "x3".into()]).unwrap();
        assert_eq!(s.format(&c2), "x3^2 + 1");

        // linear change of variables: x0 -> y0 + y1, others -> y_i
        let cy = VariableContext::ring(3);
        let images: Vec<Polynomial> = vec![
            parse_poly("x0 + x1", &cy, f).unwrap(),
            parse_poly("x1", &cy, f).unwrap(),
            parse_poly("x2", &cy, f).unwrap(),
            parse_poly("x3", &cy, f).unwrap(),
        ];
        let t = p.substitute(&images);
        assert_eq!(
            t,
            parse_poly("x0^2 + 2*x0*x1 + x1^2 + x1*x2 + x3^2", &cy, f).unwrap()
        );
    }

    #[test]
    fn evaluation() {
        let f = Field::prime(101).unwrap();
        let c = ctx4();
        let p = parse_poly("x0^2 + 3*x1*x3", &c, f).unwrap();
        let v = p.eval(&[f.from_i64(2), f.from_i64(1), f.zero(), f.from_i64(5)]);
        assert_eq!(v, f.from_i64(19));
    }
}
