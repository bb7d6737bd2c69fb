//! Minimal Buchberger engine over exact fields: reduced Gröbner bases in
//! degrevlex, ideal and radical membership, combinatorial Krull dimension,
//! and degrees of zero-dimensional quotients.
//!
//! The engine exists to answer variety-level questions about loci ideals at
//! desk scale; it deliberately omits modern S-pair machinery beyond the two
//! classical pruning criteria and runs under explicit pair/degree budgets.

use crate::matrix::Mat;
use crate::monomial::{Monomial, VariableContext};
use crate::poly::{parse_poly_affine, PolyError, Polynomial};
use crate::scalar::{Field, Scalar};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GroebnerError {
    #[error("invalid ideal: {0}")]
    Invalid(String),
    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("ideal is not zero-dimensional (affine dimension {0})")]
    NotZeroDimensional(i64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Pair and degree caps for a Buchberger run.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs popped from the queue.
    pub max_pairs: usize,
    /// Maximum degree of any basis element produced.
    pub max_degree: u32,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 200_000,
            max_degree: 64,
        }
    }
}

/// A finitely generated ideal in the polynomial ring of `ctx`. Generators
/// need not be homogeneous.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: VariableContext,
    field: Field,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(
        ctx: VariableContext,
        field: Field,
        generators: Vec<Polynomial>,
    ) -> Result<Self, GroebnerError> {
        if generators.is_empty() {
            return Err(GroebnerError::Invalid("empty generator list".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != ctx.nvars() {
                return Err(GroebnerError::Invalid(format!(
                    "generator {} has {} variables, context has {}",
                    i,
                    g.nvars(),
                    ctx.nvars()
                )));
            }
            if g.field() != &field {
                return Err(GroebnerError::Invalid(format!(
                    "generator {} is over a different field",
                    i
                )));
            }
        }
        Ok(Ideal {
            ctx,
            field,
            generators,
        })
    }

    pub fn from_strings(
        ctx: &VariableContext,
        field: Field,
        gens: &[&str],
    ) -> Result<Self, GroebnerError> {
        let ps = gens
            .iter()
            .map(|s| parse_poly_affine(s, ctx, field))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ctx.clone(), field, ps)
    }

    pub fn ctx(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> Result<GroebnerBasis, GroebnerError> {
        buchberger(self, &GroebnerConfig::default())
    }
}

/// A reduced Gröbner basis w.r.t. degrevlex, sorted by ascending leading
/// monomial; unique for the ideal, so structurally comparable.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: VariableContext,
    field: Field,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ctx(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// The ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].degree() == 0 && !self.basis[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Full reduction of f by the (monic) divisors: returns the remainder,
/// reducing every term. Deterministic: always the first divisor whose
/// leading monomial divides.
fn reduce_full(f: &Polynomial, divisors: &[Polynomial], field: &Field) -> Polynomial {
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(nvars, *field, f.degree());
    let lms: Vec<Option<(&Monomial, &Scalar)>> = divisors.iter().map(|g| g.leading()).collect();
    while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut hit = false;
        for (g, lead) in divisors.iter().zip(&lms) {
            let (glm, glc) = match lead {
                Some(x) => *x,
                None => continue,
            };
            if let Some(q) = lm.try_div(glm) {
                let coef = field
                    .div(&lc, glc)
                    .expect("leading coefficients are nonzero");
                let factor = Polynomial::monomial(q, *field).scale(&coef);
                p = p.sub(&g.mul(&factor));
                hit = true;
                break;
            }
        }
        if !hit {
            rem.add_term(lm.clone(), lc.clone());
            p.add_term(lm, field.neg(&lc));
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, field: &Field) -> Polynomial {
    let (fl, fc) = f.leading().expect("nonzero");
    let (gl, gc) = g.leading().expect("nonzero");
    let l = fl.lcm(gl);
    let mf = Polynomial::monomial(l.try_div(fl).unwrap(), *field)
        .scale(&field.inv(fc).expect("nonzero lead"));
    let mg = Polynomial::monomial(l.try_div(gl).unwrap(), *field)
        .scale(&field.inv(gc).expect("nonzero lead"));
    f.mul(&mf).sub(&g.mul(&mg))
}

/// Buchberger's algorithm with the coprime-leading-term and chain pruning
/// criteria, followed by reduction to the unique reduced basis.
pub fn buchberger(ideal: &Ideal, config: &GroebnerConfig) -> Result<GroebnerBasis, GroebnerError> {
    let field = *ideal.field();
    let mut basis: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();

    type Key = Reverse<(u32, Monomial, usize, usize)>;
    let mut queue: BinaryHeap<Key> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |queue: &mut BinaryHeap<Key>,
                      pending: &mut HashSet<(usize, usize)>,
                      basis: &[Polynomial],
                      j: usize| {
        let lj = basis[j].leading().expect("basis is nonzero").0;
        for (i, gi) in basis.iter().enumerate().take(j) {
            let li = gi.leading().expect("basis is nonzero").0;
            let l = li.lcm(lj);
            queue.push(Reverse((l.degree(), l, i, j)));
            pending.insert((i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &mut pending, &basis, j);
    }

    let mut processed = 0usize;
    while let Some(Reverse((_, lcm, i, j))) = queue.pop() {
        if !pending.remove(&(i, j)) {
            continue; // stale duplicate
        }
        processed += 1;
        if processed > config.max_pairs {
            return Err(GroebnerError::BudgetExceeded(format!(
                "more than {} S-pairs",
                config.max_pairs
            )));
        }
        let li = basis[i].leading().unwrap().0;
        let lj = basis[j].leading().unwrap().0;
        // coprime criterion
        if li.is_coprime(lj) {
            continue;
        }
        // chain criterion: some other leading monomial divides the lcm and
        // both companion pairs were already treated
        let mut skip = false;
        for (k, gk) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lk = gk.leading().unwrap().0;
            if lk.divides(&lcm) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if !pending.contains(&p1) && !pending.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &field);
        let r = reduce_full(&s, &basis, &field);
        if r.is_zero() {
            continue;
        }
        if r.degree() > config.max_degree {
            return Err(GroebnerError::BudgetExceeded(format!(
                "basis element of degree {} exceeds cap {}",
                r.degree(),
                config.max_degree
            )));
        }
        basis.push(r.monic());
        push_pairs(&mut queue, &mut pending, &basis, basis.len() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let li = basis[i].leading().unwrap().0.clone();
        for (j, g) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = g.leading().unwrap().0;
            if lj.divides(&li) && (lj != &li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // inter-reduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let r = reduce_full(&minimal[i], &others, &field).monic();
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    let leading = minimal
        .iter()
        .map(|g| g.leading().unwrap().0.clone())
        .collect();
    Ok(GroebnerBasis {
        ctx: ideal.ctx().clone(),
        field,
        basis: minimal,
        leading,
    })
}

/// Ideal membership by division: contained iff the remainder vanishes.
pub fn member(f: &Polynomial, gb: &GroebnerBasis) -> (bool, Polynomial) {
    let rem = reduce_full(f, &gb.basis, &gb.field);
    (rem.is_zero(), rem)
}

/// Radical membership: f ∈ √I iff 1 ∈ I + (1 − t·f) in one extra variable.
pub fn radical_membership(
    f: &Polynomial,
    ideal: &Ideal,
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    let mut extra = "t".to_string();
    while ideal.ctx().index_of(&extra).is_some() {
        extra.push('_');
    }
    let ectx = ideal
        .ctx()
        .with_extra(&extra)
        .map_err(|e| GroebnerError::Invalid(e.to_string()))?;
    let nv = ectx.nvars();
    let field = *ideal.field();
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.extend_vars(nv))
        .collect();
    let t = Polynomial::variable(nv - 1, nv, field);
    let one = Polynomial::constant(nv, field, field.one());
    gens.push(one.sub(&t.mul(&f.extend_vars(nv))));
    let eideal = Ideal::new(ectx, field, gens)?;
    let gb = buchberger(&eideal, config)?;
    Ok(gb.is_unit())
}

/// Affine Krull dimension from the leading monomials: the largest number
/// of variables no leading monomial is supported on. −1 for the unit
/// ideal. Callers working with homogeneous cones subtract one for the
/// projective dimension.
pub fn krull_dimension(gb: &GroebnerBasis) -> i64 {
    if gb.is_unit() {
        return -1;
    }
    let v = gb.ctx.nvars();
    let masks: Vec<u64> = gb
        .leading
        .iter()
        .map(|m| {
            m.support()
                .into_iter()
                .fold(0u64, |acc, i| acc | (1 << i))
        })
        .collect();
    let mut best = 0u32;
    for subset in 0u64..(1 << v) {
        if subset.count_ones() <= best {
            continue;
        }
        if masks.iter().all(|m| m & !subset != 0) {
            best = subset.count_ones();
        }
    }
    best as i64
}

/// The monomials outside the leading-term ideal, ascending degrevlex.
/// Finite exactly when the ideal is zero-dimensional.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>, GroebnerError> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let dim = krull_dimension(gb);
    if dim != 0 {
        return Err(GroebnerError::NotZeroDimensional(dim));
    }
    let v = gb.ctx.nvars();
    // a pure power of every variable appears among the leading monomials
    let mut caps = vec![0u32; v];
    for (i, cap) in caps.iter_mut().enumerate() {
        *cap = gb
            .leading
            .iter()
            .filter(|m| m.support() == [i])
            .map(|m| m.exp(i))
            .min()
            .expect("zero-dimensional ideal has a pure power per variable");
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; v];
    loop {
        let m = Monomial::new(exps.clone());
        if !gb.leading.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box bounded by the caps
        let mut i = 0;
        loop {
            if i == v {
                out.sort();
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < caps[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Vector-space dimension of K[vars]/I for a zero-dimensional ideal:
/// the number of points of V(I) counted with multiplicity. The unit ideal
/// has degree 0.
pub fn zero_dim_degree(gb: &GroebnerBasis) -> Result<usize, GroebnerError> {
    Ok(quotient_basis(gb)?.len())
}

/// Matrix of multiplication by the variable `var` on the quotient basis of
/// a zero-dimensional ideal (column j = coordinates of x_var·b_j).
pub fn multiplication_matrix(gb: &GroebnerBasis, var: usize) -> Result<Mat, GroebnerError> {
    let qb = quotient_basis(gb)?;
    let field = gb.field;
    let index: std::collections::HashMap<&Monomial, usize> =
        qb.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = qb.len();
    let mut out = Mat::zero(&field, dim, dim);
    let xv = Monomial::var(var, gb.ctx.nvars());
    for (j, b) in qb.iter().enumerate() {
        let shifted = Polynomial::monomial(b.mul(&xv), field);
        let rem = reduce_full(&shifted, &gb.basis, &field);
        for (m, c) in rem.terms() {
            let r = *index
                .get(m)
                .expect("remainder is supported on the quotient basis");
            out.set(r, j, c.clone());
        }
    }
    Ok(out)
}
