//! Graded Artinian Gorenstein quotients R = S/I where I is generated by a
//! regular sequence of n+1 quadrics in n+1 variables.
//!
//! The ring is built degree by degree in the dual: the space of functionals
//! on S^k annihilating I_k is propagated from degree k−1 by exact
//! elimination. Matching the dimensions against the forced Hilbert series
//! (1+t)^{n+1} certifies regularity, and inverting the dual evaluation on
//! the standard monomials yields the normal-form map of every degree.

use crate::matrix::{DMat, Elim, Eliminator, Mat, QCtx};
use crate::monomial::{binomial, monomial_basis, Monomial, VariableContext};
use crate::poly::{basis_index, parse_poly, PolyError, Polynomial};
use crate::scalar::{Field, FieldError, Scalar};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("generators are not a regular sequence (Hilbert function deviates in degree {degree})")]
    NotRegularSequence { degree: u32 },
    #[error("degree {degree} is outside the built range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("the element is not annihilated by any nonzero linear form")]
    NotAnnihilated,
    #[error("expected a homogeneous polynomial")]
    NotHomogeneous,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// n+1 quadrics in the ring variables x0..xn. Zero generators are accepted
/// structurally (they arise from degenerate constructions) and are rejected
/// arithmetically by the regularity check in [`build_algebra`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricPresentation {
    ctx: VariableContext,
    field: Field,
    generators: Vec<Polynomial>,
}

impl QuadricPresentation {
    pub fn new(
        ctx: VariableContext,
        field: Field,
        generators: Vec<Polynomial>,
    ) -> Result<Self, AlgebraError> {
        let n = ctx.n();
        if generators.len() != n + 1 {
            return Err(AlgebraError::Presentation(format!(
                "expected {} generators, got {}",
                n + 1,
                generators.len()
            )));
        }
        let mut gens = Vec::with_capacity(n + 1);
        for (i, g) in generators.into_iter().enumerate() {
            if g.nvars() != n + 1 {
                return Err(AlgebraError::Presentation(format!(
                    "generator {} has {} variables, expected {}",
                    i,
                    g.nvars(),
                    n + 1
                )));
            }
            if g.field() != &field {
                return Err(AlgebraError::Presentation(format!(
                    "generator {} is over a different field",
                    i
                )));
            }
            if g.is_zero() {
                gens.push(Polynomial::zero(n + 1, field, 2));
            } else if g.is_homogeneous() && g.degree() == 2 {
                gens.push(g);
            } else {
                return Err(AlgebraError::Presentation(format!(
                    "generator {} is not homogeneous of degree 2",
                    i
                )));
            }
        }
        Ok(QuadricPresentation {
            ctx,
            field,
            generators: gens,
        })
    }

    /// Convenience constructor from polynomial strings in x0..xn.
    pub fn from_strings(n: usize, field: Field, gens: &[&str]) -> Result<Self, AlgebraError> {
        let ctx = VariableContext::ring(n);
        let mut ps = Vec::with_capacity(gens.len());
        for g in gens {
            ps.push(parse_poly(g, &ctx, field)?);
        }
        QuadricPresentation::new(ctx, field, ps)
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
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

    /// Serialize: header `n=<int> field=<Q|Fp:p>`, then one generator per line.
    pub fn format(&self) -> String {
        let mut out = format!("n={} field={}\n", self.n(), self.field.descriptor());
        for g in &self.generators {
            out.push_str(&g.format(&self.ctx));
            out.push('\n');
        }
        out
    }
}

/// Parse a presentation file: a header line `n=<int> field=<Q|Fp:p>`
/// followed by n+1 polynomial lines. Blank lines and lines starting with
/// `#` are ignored.
pub fn parse_presentation(text: &str) -> Result<QuadricPresentation, AlgebraError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| AlgebraError::Presentation("empty presentation file".into()))?;
    let mut n_val: Option<usize> = None;
    let mut field_val: Option<Field> = None;
    for tok in header.split_whitespace() {
        if let Some(v) = tok.strip_prefix("n=") {
            n_val = Some(v.parse::<usize>().map_err(|_| {
                AlgebraError::Presentation(format!("bad n value {:?}", v))
            })?);
        } else if let Some(v) = tok.strip_prefix("field=") {
            field_val = Some(Field::parse_descriptor(v)?);
        } else {
            return Err(AlgebraError::Presentation(format!(
                "unexpected header token {:?}",
                tok
            )));
        }
    }
    let n = n_val.ok_or_else(|| AlgebraError::Presentation("header missing n=".into()))?;
    let field =
        field_val.ok_or_else(|| AlgebraError::Presentation("header missing field=".into()))?;
    if n == 0 {
        return Err(AlgebraError::Presentation("n must be at least 1".into()));
    }
    let ctx = VariableContext::ring(n);
    let mut gens = Vec::with_capacity(n + 1);
    for line in lines {
        gens.push(parse_poly(line, &ctx, field)?);
    }
    QuadricPresentation::new(ctx, field, gens)
}

/// Per-degree data of a built algebra.
#[derive(Debug, Clone)]
pub struct DegreeData {
    /// All monomials of this degree, descending degrevlex.
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Positions (into `monomials`) of the standard monomials, ascending
    /// position order, i.e. descending monomial order.
    pub std_indices: Vec<usize>,
    /// The standard monomials themselves, descending degrevlex.
    pub std_monomials: Vec<Monomial>,
    /// Normal-form map: dim × monomials.len(); column m holds the
    /// coordinates of the class of monomial m in the standard basis.
    pub nf: Mat,
    pub dim: usize,
}

impl DegreeData {
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// An element of R^k in coordinates over the standard monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    degree: u32,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(degree: u32, coords: Vec<Scalar>) -> Self {
        AlgebraElement { degree, coords }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// The graded ring R = S/I with normal forms for every degree up to
/// `max_degree` (always at least n+2, so the regularity certificate and the
/// zero space above the socle are both available).
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    presentation: QuadricPresentation,
    max_degree: u32,
    degrees: Vec<DegreeData>,
    socle_degree: u32,
}

struct RawDegree<E> {
    std_indices: Vec<usize>,
    nf_rows: Vec<Vec<E>>,
}

/// Dual propagation over one scalar backend. `gen_rows` are the dense
/// degree-2 coefficient rows of the generators. Returns per-degree standard
/// monomials and normal-form rows, or the first degree where the Hilbert
/// function deviates from (1+t)^{n+1}.
fn build_tables<F: Elim>(
    f: &F,
    nvars: usize,
    gen_rows: Vec<Vec<F::E>>,
    bases: &[Vec<Monomial>],
    idxs: &[HashMap<Monomial, usize>],
    maxd: usize,
) -> Result<Vec<RawDegree<F::E>>, u32> {
    let expected = |k: usize| -> usize {
        if k < bases.len() && k <= nvars {
            binomial(nvars as u64, k as u64) as usize
        } else {
            0
        }
    };
    let mut out: Vec<RawDegree<F::E>> = Vec::with_capacity(maxd + 1);

    // degree 0: R^0 = span(1)
    let mut vals: Vec<Vec<F::E>> = vec![vec![f.e_one()]];
    out.push(finish_degree(f, &vals, 1));

    // degree 1: I_1 = 0
    if maxd >= 1 {
        vals = (0..nvars)
            .map(|i| {
                let mut row = vec![f.e_zero(); nvars];
                row[i] = f.e_one();
                row
            })
            .collect();
        out.push(finish_degree(f, &vals, nvars));
    }

    // degree 2: annihilator of the generator span
    if maxd >= 2 {
        let m2 = bases[2].len();
        let mut elim = Eliminator::new(f, m2);
        for row in gen_rows {
            elim.offer(row);
        }
        vals = elim.nullspace();
        if vals.len() != expected(2) {
            return Err(2);
        }
        out.push(finish_degree(f, &vals, m2));
    }

    for k in 3..=maxd {
        let r_prev = vals.len();
        let mk = bases[k].len();
        let want = expected(k);
        if r_prev == 0 {
            if want != 0 {
                return Err(k as u32);
            }
            vals = Vec::new();
            out.push(RawDegree {
                std_indices: Vec::new(),
                nf_rows: Vec::new(),
            });
            continue;
        }
        // A functional φ on S^k annihilates I_k iff each directional
        // restriction x_j ∘ φ lies in the degree k−1 space. Unknowns: the
        // coordinates μ_{j,t} of x_j ∘ φ in the previous dual basis;
        // constraints: the restrictions agree on every monomial.
        let cols = nvars * r_prev;
        let mut elim = Eliminator::new(f, cols);
        'rows: for m in &bases[k] {
            let sup = m.support();
            let j0 = sup[0];
            let i0 = idxs[k - 1][&m.div_var(j0)];
            for &i in &sup[1..] {
                let ii = idxs[k - 1][&m.div_var(i)];
                let mut row = vec![f.e_zero(); cols];
                for t in 0..r_prev {
                    row[i * r_prev + t] = vals[t][ii].clone();
                    row[j0 * r_prev + t] = f.e_neg(&vals[t][i0]);
                }
                elim.offer(row);
                if want == 0 && elim.rank() == cols {
                    break 'rows;
                }
            }
        }
        let r_k = cols - elim.rank();
        if r_k != want {
            return Err(k as u32);
        }
        let mus = elim.nullspace();
        let mut new_vals = vec![vec![f.e_zero(); mk]; r_k];
        for (mi, m) in bases[k].iter().enumerate() {
            let j0 = m.support()[0];
            let ip = idxs[k - 1][&m.div_var(j0)];
            for (s, mu) in mus.iter().enumerate() {
                let mut acc = f.e_zero();
                for t in 0..r_prev {
                    let c = &mu[j0 * r_prev + t];
                    if !f.e_is_zero(c) && !f.e_is_zero(&vals[t][ip]) {
                        acc = f.e_add(&acc, &f.e_mul(c, &vals[t][ip]));
                    }
                }
                new_vals[s][mi] = acc;
            }
        }
        vals = new_vals;
        out.push(finish_degree(f, &vals, mk));
    }
    Ok(out)
}

/// From the dual value table of one degree, find the standard monomials
/// (scanning upward from the smallest monomial, keeping those whose
/// evaluation vector is new) and assemble the normal-form rows.
fn finish_degree<F: Elim>(f: &F, vals: &[Vec<F::E>], m_count: usize) -> RawDegree<F::E> {
    let r = vals.len();
    if r == 0 {
        return RawDegree {
            std_indices: Vec::new(),
            nf_rows: Vec::new(),
        };
    }
    let mut elim = Eliminator::new(f, r);
    let mut kept: Vec<usize> = Vec::with_capacity(r);
    for mi in (0..m_count).rev() {
        let col: Vec<F::E> = (0..r).map(|t| vals[t][mi].clone()).collect();
        if elim.offer(col) {
            kept.push(mi);
            if kept.len() == r {
                break;
            }
        }
    }
    assert_eq!(kept.len(), r, "dual basis has full column rank");
    kept.reverse();
    let mut e_std = DMat::zero(f, r, r);
    for (j, &mi) in kept.iter().enumerate() {
        for t in 0..r {
            e_std.set(t, j, vals[t][mi].clone());
        }
    }
    let e_inv = e_std.inverse(f).expect("standard columns are independent");
    let vmat = DMat {
        rows: r,
        cols: m_count,
        data: vals.iter().flat_map(|row| row.iter().cloned()).collect(),
    };
    let nf = e_inv.mul(f, &vmat);
    let nf_rows = (0..r).map(|i| nf.row(i).to_vec()).collect();
    RawDegree {
        std_indices: kept,
        nf_rows,
    }
}

/// Build the graded algebra. Degrees 0..=max(max_degree, n+2) are
/// populated; the top stored degree certifies that the quotient vanishes
/// above the socle.
pub fn build_algebra(
    pres: QuadricPresentation,
    max_degree: u32,
) -> Result<GradedAlgebra, AlgebraError> {
    let n = pres.n();
    let nvars = n + 1;
    let maxd = (max_degree as usize).max(nvars + 1);
    let mut bases: Vec<Vec<Monomial>> = Vec::with_capacity(maxd + 1);
    let mut idxs: Vec<HashMap<Monomial, usize>> = Vec::with_capacity(maxd + 1);
    for k in 0..=maxd {
        let b = monomial_basis(n, k as u32);
        idxs.push(basis_index(&b));
        bases.push(b);
    }
    let field = *pres.field();
    fn run<F: Elim>(
        f: &F,
        pres: &QuadricPresentation,
        nvars: usize,
        bases: &[Vec<Monomial>],
        idxs: &[HashMap<Monomial, usize>],
        maxd: usize,
    ) -> Result<Vec<(Vec<usize>, Mat)>, u32> {
        let rows = pres
            .generators()
            .iter()
            .map(|g| {
                g.dense_row(&idxs[2], bases[2].len())
                    .iter()
                    .map(|s| f.e_from_scalar(s))
                    .collect()
            })
            .collect();
        let raw = build_tables(f, nvars, rows, bases, idxs, maxd)?;
        Ok(raw
            .into_iter()
            .enumerate()
            .map(|(k, rd)| {
                let dim = rd.std_indices.len();
                let mat = Mat {
                    rows: dim,
                    cols: bases[k].len(),
                    data: rd
                        .nf_rows
                        .iter()
                        .flat_map(|r| r.iter().map(|e| f.e_to_scalar(e)))
                        .collect(),
                };
                (rd.std_indices, mat)
            })
            .collect())
    }
    let raw = match &field {
        Field::Prime(ctx) => run(ctx, &pres, nvars, &bases, &idxs, maxd),
        Field::Rationals => run(&QCtx, &pres, nvars, &bases, &idxs, maxd),
    }
    .map_err(|degree| AlgebraError::NotRegularSequence { degree })?;

    let mut degrees = Vec::with_capacity(maxd + 1);
    for (k, (std_indices, nf)) in raw.into_iter().enumerate() {
        let monomials = std::mem::take(&mut bases[k]);
        let index = std::mem::take(&mut idxs[k]);
        let std_monomials: Vec<Monomial> =
            std_indices.iter().map(|&i| monomials[i].clone()).collect();
        let dim = std_indices.len();
        degrees.push(DegreeData {
            monomials,
            index,
            std_indices,
            std_monomials,
            nf,
            dim,
        });
    }
    Ok(GradedAlgebra {
        presentation: pres,
        max_degree: maxd as u32,
        degrees,
        socle_degree: nvars as u32,
    })
}

impl GradedAlgebra {
    pub fn presentation(&self) -> &QuadricPresentation {
        &self.presentation
    }

    pub fn n(&self) -> usize {
        self.presentation.n()
    }

    pub fn nvars(&self) -> usize {
        self.presentation.nvars()
    }

    pub fn field(&self) -> &Field {
        self.presentation.field()
    }

    pub fn ctx(&self) -> &VariableContext {
        self.presentation.ctx()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    /// dim R^k; zero above the stored range (the ring vanishes there).
    pub fn dim(&self, k: u32) -> usize {
        self.degrees.get(k as usize).map_or(0, |d| d.dim)
    }

    /// Hilbert function over 0..=socle_degree.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.socle_degree).map(|k| self.dim(k)).collect()
    }

    pub fn degree_data(&self, k: u32) -> Option<&DegreeData> {
        self.degrees.get(k as usize)
    }

    fn data(&self, k: u32) -> Result<&DegreeData, AlgebraError> {
        self.degrees
            .get(k as usize)
            .ok_or(AlgebraError::DegreeOutOfRange {
                degree: k,
                max: self.max_degree,
            })
    }

    pub fn std_monomials(&self, k: u32) -> Result<&[Monomial], AlgebraError> {
        Ok(&self.data(k)?.std_monomials)
    }

    pub fn zero_element(&self, k: u32) -> Result<AlgebraElement, AlgebraError> {
        let d = self.data(k)?;
        Ok(AlgebraElement::new(k, vec![self.field().zero(); d.dim]))
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::new(0, vec![self.field().one()])
    }

    /// The class of x_i.
    pub fn var(&self, i: usize) -> AlgebraElement {
        assert!(i < self.nvars());
        let mut coords = vec![self.field().zero(); self.nvars()];
        coords[i] = self.field().one();
        AlgebraElement::new(1, coords)
    }

    /// Degree-1 element with coefficient vector c (c_i on x_i).
    pub fn linear_element(&self, coeffs: &[Scalar]) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.nvars());
        AlgebraElement::new(1, coeffs.to_vec())
    }

    pub fn element(&self, k: u32, coords: Vec<Scalar>) -> Result<AlgebraElement, AlgebraError> {
        let d = self.data(k)?;
        if coords.len() != d.dim {
            return Err(AlgebraError::Presentation(format!(
                "coordinate vector of length {} for dim {}",
                coords.len(),
                d.dim
            )));
        }
        Ok(AlgebraElement::new(k, coords))
    }

    /// Normal form of a homogeneous polynomial: its class in R^deg.
    pub fn normal_form(&self, p: &Polynomial) -> Result<AlgebraElement, AlgebraError> {
        if p.nvars() != self.nvars() {
            return Err(AlgebraError::Poly(PolyError::ArityMismatch(
                p.nvars(),
                self.nvars(),
            )));
        }
        if p.field() != self.field() {
            return Err(AlgebraError::Poly(PolyError::FieldMismatch));
        }
        if !p.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let k = p.degree();
        let d = self.data(k)?;
        let field = self.field();
        let mut coords = vec![field.zero(); d.dim];
        for (m, c) in p.terms() {
            let col = d.index_of(m).expect("monomial of matching degree");
            for (r, coord) in coords.iter_mut().enumerate() {
                let e = d.nf.get(r, col);
                if !e.is_zero() {
                    *coord = field.add(coord, &field.mul(c, e));
                }
            }
        }
        Ok(AlgebraElement::new(k, coords))
    }

    /// Canonical polynomial representative: the combination of standard
    /// monomials with the element's coordinates.
    pub fn lift(&self, a: &AlgebraElement) -> Polynomial {
        let d = &self.degrees[a.degree as usize];
        Polynomial::from_terms(
            self.nvars(),
            *self.field(),
            a.degree,
            d.std_monomials
                .iter()
                .cloned()
                .zip(a.coords.iter().cloned()),
        )
    }

    pub fn format_element(&self, a: &AlgebraElement) -> String {
        self.lift(a).format(self.ctx())
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        assert_eq!(a.degree, b.degree);
        let f = self.field();
        AlgebraElement::new(
            a.degree,
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| f.add(x, y))
                .collect(),
        )
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        assert_eq!(a.degree, b.degree);
        let f = self.field();
        AlgebraElement::new(
            a.degree,
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| f.sub(x, y))
                .collect(),
        )
    }

    pub fn scale(&self, a: &AlgebraElement, c: &Scalar) -> AlgebraElement {
        let f = self.field();
        AlgebraElement::new(a.degree, a.coords.iter().map(|x| f.mul(x, c)).collect())
    }

    pub fn multiply(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let k = a.degree + b.degree;
        if k > self.max_degree {
            return Err(AlgebraError::DegreeOutOfRange {
                degree: k,
                max: self.max_degree,
            });
        }
        let prod = self.lift(a).mul(&self.lift(b));
        self.normal_form(&prod)
    }

    /// a^k by repeated reduced multiplication; a^0 = 1.
    pub fn power(&self, a: &AlgebraElement, k: u32) -> Result<AlgebraElement, AlgebraError> {
        let target = a.degree * k;
        if target > self.max_degree {
            return Err(AlgebraError::DegreeOutOfRange {
                degree: target,
                max: self.max_degree,
            });
        }
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by q: R^a → R^{a+s}, columns indexed by the
    /// standard basis of R^a.
    pub fn mult_map_matrix(&self, q: &AlgebraElement, a: u32) -> Result<Mat, AlgebraError> {
        let s = q.degree;
        let target = a + s;
        if target > self.max_degree {
            return Err(AlgebraError::DegreeOutOfRange {
                degree: target,
                max: self.max_degree,
            });
        }
        let src = self.data(a)?;
        let dst = self.data(target)?;
        let field = self.field();
        let qlift = self.lift(q);
        let mut out = Mat::zero(field, dst.dim, src.dim);
        for (j, mj) in src.std_monomials.iter().enumerate() {
            for (m, c) in qlift.terms() {
                let col = dst
                    .index_of(&m.mul(mj))
                    .expect("product monomial in target degree");
                for r in 0..dst.dim {
                    let e = dst.nf.get(r, col);
                    if !e.is_zero() {
                        let cur = out.get(r, j);
                        let v = field.add(cur, &field.mul(c, e));
                        out.set(r, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Echelonized basis of K^a_q = ker(q·: R^a → R^{a+deg q}).
    pub fn kernel(&self, q: &AlgebraElement, a: u32) -> Result<Vec<AlgebraElement>, AlgebraError> {
        let m = self.mult_map_matrix(q, a)?;
        Ok(m.nullspace(self.field())
            .into_iter()
            .map(|v| AlgebraElement::new(a, v))
            .collect())
    }

    /// Socle coordinate of a top-degree element.
    pub fn socle_coord(&self, a: &AlgebraElement) -> Scalar {
        assert_eq!(a.degree, self.socle_degree);
        a.coords[0].clone()
    }

    /// The pairing matrix R^j × R^{N−j} → R^N ≅ F on standard bases; full
    /// rank is the Gorenstein duality certificate.
    pub fn socle_pairing_matrix(&self, j: u32) -> Result<Mat, AlgebraError> {
        let nn = self.socle_degree;
        if j > nn {
            return Err(AlgebraError::DegreeOutOfRange {
                degree: j,
                max: nn,
            });
        }
        let left = self.data(j)?;
        let right = self.data(nn - j)?;
        let top = self.data(nn)?;
        let field = self.field();
        let mut out = Mat::zero(field, left.dim, right.dim);
        for (u, mu) in left.std_monomials.iter().enumerate() {
            for (v, mv) in right.std_monomials.iter().enumerate() {
                let col = top
                    .index_of(&mu.mul(mv))
                    .expect("product lands in socle degree");
                out.set(u, v, top.nf.get(0, col).clone());
            }
        }
        Ok(out)
    }

    /// Quotient by a degree-1 element z admitting a nonzero annihilator
    /// w ∈ R¹. Performs the linear change of variables sending z to the
    /// last coordinate, drops a generator accounting for z·w, and rebuilds
    /// on one variable fewer. Also reports the kernel dimension identity
    /// dim K^s_w = dim R^{s−1} − dim K^{s−1}_z for s = 1..=N.
    pub fn quotient_by_linear(&self, z: &AlgebraElement) -> Result<QuotientResult, AlgebraError> {
        assert_eq!(z.degree, 1);
        let field = *self.field();
        if z.is_zero() {
            return Err(AlgebraError::NotAnnihilated);
        }
        let ann = self.kernel(z, 1)?;
        if ann.is_empty() {
            return Err(AlgebraError::NotAnnihilated);
        }
        let w = ann[0].clone();

        // Express z·w over the generators and drop one that carries it.
        let d2 = self.data(2)?;
        let zw = self.lift(&z.clone()).mul(&self.lift(&w));
        let gmat = Mat::from_rows(
            self.presentation
                .generators()
                .iter()
                .map(|g| g.dense_row(&d2.index, d2.monomials.len()))
                .collect(),
            d2.monomials.len(),
        )
        .transpose();
        let zw_dense = zw.dense_row(&d2.index, d2.monomials.len());
        let combo = gmat
            .solve(&field, &zw_dense)
            .expect("z·w vanishes in R, so it lies in the generator span");
        let dropped = combo
            .iter()
            .position(|c| !c.is_zero())
            .expect("z and w are nonzero, so z·w is a nonzero quadric");

        // Change of variables: x_pivot is eliminated along z, the other
        // variables map to y_0..y_{n-1} in order; z itself becomes the
        // removed coordinate, set to zero.
        let n = self.n();
        let pivot = z
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero element");
        let zinv = field.inv(&z.coords[pivot])?;
        let mut images: Vec<Polynomial> = Vec::with_capacity(n + 1);
        let mut fresh = 0usize;
        let mut pivot_image = Polynomial::zero(n, field, 1);
        for i in 0..=n {
            if i == pivot {
                images.push(Polynomial::zero(n, field, 1)); // patched below
            } else {
                let y = Polynomial::variable(fresh, n, field);
                let c = field.neg(&field.mul(&z.coords[i], &zinv));
                pivot_image = pivot_image.add(&y.scale(&c));
                images.push(y);
                fresh += 1;
            }
        }
        images[pivot] = pivot_image;

        let mut new_gens = Vec::with_capacity(n);
        for (t, g) in self.presentation.generators().iter().enumerate() {
            if t == dropped {
                continue;
            }
            let img = g.substitute(&images);
            new_gens.push(if img.is_zero() {
                Polynomial::zero(n, field, 2)
            } else {
                img
            });
        }
        let qpres = QuadricPresentation::new(VariableContext::ring(n - 1), field, new_gens)?;
        let algebra = build_algebra(qpres, n as u32 + 1)?;

        let mut identity = Vec::new();
        let mut identity_holds = true;
        for s in 1..=self.socle_degree {
            let dim_ker_w = self.kernel(&w, s)?.len();
            let dim_prev = self.dim(s - 1);
            let dim_ker_z = self.kernel(z, s - 1)?.len();
            let holds = dim_ker_w == dim_prev - dim_ker_z;
            identity_holds &= holds;
            identity.push(QuotientIdentityRow {
                s,
                dim_ker_w,
                dim_prev,
                dim_ker_z,
                holds,
            });
        }
        Ok(QuotientResult {
            algebra,
            w,
            dropped_generator: dropped,
            identity,
            identity_holds,
        })
    }
}

/// One row of the quotient dimension identity
/// dim K^s_w = dim R^{s−1} − dim K^{s−1}_z.
#[derive(Debug, Clone)]
pub struct QuotientIdentityRow {
    pub s: u32,
    pub dim_ker_w: usize,
    pub dim_prev: usize,
    pub dim_ker_z: usize,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub algebra: GradedAlgebra,
    pub w: AlgebraElement,
    pub dropped_generator: usize,
    pub identity: Vec<QuotientIdentityRow>,
    pub identity_holds: bool,
}

/// The Fermat-type presentation {x0², …, xn²}.
pub fn fermat_presentation(n: usize, field: Field) -> QuadricPresentation {
    let ctx = VariableContext::ring(n);
    let gens = (0..=n)
        .map(|i| {
            Polynomial::monomial(
                Monomial::new({
                    let mut e = vec![0u32; n + 1];
                    e[i] = 2;
                    e
                }),
                field,
            )
        })
        .collect();
    QuadricPresentation::new(ctx, field, gens).expect("square generators are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn build(n: usize, field: Field, gens: &[&str]) -> GradedAlgebra {
        let pres = QuadricPresentation::from_strings(n, field, gens).unwrap();
        build_algebra(pres, n as u32 + 2).unwrap()
    }

    fn fermat3() -> GradedAlgebra {
        build_algebra(fermat_presentation(3, q()), 5).unwrap()
    }

    fn ex5() -> GradedAlgebra {
        build(3, q(), &["x0^2", "x1^2", "x2^2", "x3^2 + 2*x0*x1"])
    }

    fn nf(alg: &GradedAlgebra, text: &str) -> AlgebraElement {
        let p = parse_poly(text, alg.ctx(), *alg.field()).unwrap();
        alg.normal_form(&p).unwrap()
    }

    #[test]
    fn fermat_dims_and_socle() {
        let a = fermat3();
        assert_eq!(a.dims(), vec![1, 4, 6, 4, 1]);
        assert_eq!(a.dim(5), 0);
        assert_eq!(a.socle_degree(), 4);
        // socle generator survives reduction
        let s = nf(&a, "x0*x1*x2*x3");
        assert_eq!(a.format_element(&s), "x0*x1*x2*x3");
        // generators reduce to zero
        assert!(nf(&a, "x0^2").is_zero());
    }

    #[test]
    fn ex5_normal_forms() {
        let a = ex5();
        assert_eq!(a.dims(), vec![1, 4, 6, 4, 1]);
        // x3^2 and -2 x0x1 are the same class, supported on one standard monomial
        let lhs = nf(&a, "x3^2");
        let rhs = nf(&a, "-2*x0*x1");
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.coords().iter().filter(|c| !c.is_zero()).count(), 1);
        // and via multiplication
        let x3 = a.var(3);
        assert_eq!(a.multiply(&x3, &x3).unwrap(), rhs);
    }

    #[test]
    fn non_regular_sequences_detected() {
        let pres =
            QuadricPresentation::from_strings(3, q(), &["x0^2", "x0*x1", "x1^2", "x2^2"]).unwrap();
        match build_algebra(pres, 5) {
            Err(AlgebraError::NotRegularSequence { degree }) => assert_eq!(degree, 3),
            other => panic!("expected non-regular failure, got {:?}", other.map(|_| ())),
        }
        // a zero generator fails already in degree 2
        let ctx = VariableContext::ring(3);
        let gens = vec![
            parse_poly("3*x0^2", &ctx, q()).unwrap(),
            Polynomial::zero(4, q(), 2),
            Polynomial::zero(4, q(), 2),
            Polynomial::zero(4, q(), 2),
        ];
        let pres = QuadricPresentation::new(ctx, q(), gens).unwrap();
        match build_algebra(pres, 5) {
            Err(AlgebraError::NotRegularSequence { degree }) => assert_eq!(degree, 2),
            other => panic!("expected degree-2 failure, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn products_and_powers() {
        let a = fermat3();
        // squares vanish, cross terms survive
        let e = nf(&a, "x0 + x1");
        let sq = a.multiply(&e, &e).unwrap();
        assert_eq!(sq, nf(&a, "2*x0*x1"));
        // x0 * x0x1x2 = 0
        let p = a.multiply(&a.var(0), &nf(&a, "x0*x1*x2")).unwrap();
        assert!(p.is_zero());
        // (x0+x1+x2+x3)^4 = 24 * socle
        let l = nf(&a, "x0 + x1 + x2 + x3");
        let p4 = a.power(&l, 4).unwrap();
        assert_eq!(a.socle_coord(&p4), q().from_i64(24));
        // degree range guard
        let c = nf(&a, "x0*x1*x2");
        assert!(matches!(
            a.multiply(&c, &c),
            Err(AlgebraError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn mult_maps_and_kernels() {
        let a = fermat3();
        let m = a.mult_map_matrix(&a.var(0), 1).unwrap();
        assert_eq!((m.rows, m.cols), (6, 4));
        assert_eq!(m.rank(a.field()), 3);
        let k1 = a.kernel(&a.var(0), 1).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0], a.var(0));
        let k2 = a.kernel(&a.var(0), 2).unwrap();
        assert_eq!(k2.len(), 3);
        for v in &k2 {
            assert!(a.multiply(&a.var(0), v).unwrap().is_zero());
        }
        // multiplication by 1 is the identity
        let id = a.mult_map_matrix(&a.one(), 2).unwrap();
        assert_eq!(id, Mat::identity(a.field(), 6));
        // multiplication by the socle generator lands in the zero space
        let s = nf(&a, "x0*x1*x2*x3");
        let z = a.mult_map_matrix(&s, 1).unwrap();
        assert_eq!((z.rows, z.cols), (0, 4));
        let kz = a.kernel(&s, 1).unwrap();
        assert_eq!(kz.len(), 4);
    }

    #[test]
    fn socle_pairing_full_rank() {
        let a = fermat3();
        let p1 = a.socle_pairing_matrix(1).unwrap();
        assert_eq!((p1.rows, p1.cols), (4, 4));
        // x_i pairs with the complementary square-free monomial: every row
        // and column has exactly one nonzero entry
        for i in 0..4 {
            assert_eq!(p1.row(i).iter().filter(|c| !c.is_zero()).count(), 1);
            assert_eq!(p1.col(i).iter().filter(|c| !c.is_zero()).count(), 1);
        }
        for j in 0..=4 {
            let m = a.socle_pairing_matrix(j).unwrap();
            assert_eq!(m.rank(a.field()), m.rows.min(m.cols));
            assert_eq!(m.rows, a.dim(j));
        }
        let b = ex5();
        for j in 0..=4 {
            let m = b.socle_pairing_matrix(j).unwrap();
            assert_eq!(m.rank(b.field()), m.rows.min(m.cols));
        }
    }

    #[test]
    fn quotient_by_linear_ex5_and_fermat() {
        let a = ex5();
        // x0^2 = 0, so z = x0 is annihilated by w = x0
        let res = a.quotient_by_linear(&a.var(0)).unwrap();
        assert_eq!(res.algebra.dims(), vec![1, 3, 3, 1]);
        assert!(res.identity_holds);
        let row1 = &res.identity[0];
        assert_eq!((row1.s, row1.dim_ker_w, row1.dim_prev, row1.dim_ker_z), (1, 1, 1, 0));

        let f = fermat3();
        let res = f.quotient_by_linear(&f.var(0)).unwrap();
        assert_eq!(res.algebra.dims(), vec![1, 3, 3, 1]);
        assert!(res.identity_holds);
        // the quotient is Fermat on three variables
        let expect = fermat_presentation(2, q());
        assert_eq!(res.algebra.presentation(), &expect);

        // a weak Lefschetz direction has no annihilator in degree 1
        let l = nf(&f, "x0 + x1 + x2 + x3");
        assert!(matches!(
            f.quotient_by_linear(&l),
            Err(AlgebraError::NotAnnihilated)
        ));
    }

    #[test]
    fn presentation_file_round_trip() {
        let a = ex5();
        let text = a.presentation().format();
        let back = parse_presentation(&text).unwrap();
        assert_eq!(&back, a.presentation());
        let fp = Field::prime(9973).unwrap();
        let pres = QuadricPresentation::from_strings(
            2,
            fp,
            &["x0^2 + 3*x1*x2", "x1^2", "x2^2 + x0*x1"],
        )
        .unwrap();
        let back = parse_presentation(&pres.format()).unwrap();
        assert_eq!(back, pres);

        assert!(parse_presentation("").is_err());
        assert!(parse_presentation("n=3\nx0^2").is_err());
        assert!(parse_presentation("n=3 field=Q\nx0^2\nx1^2\nx2^2").is_err());
        assert!(
            parse_presentation("n=1 field=Q\nx0^2 + x0\nx1^2").is_err(),
            "inhomogeneous generator must be rejected"
        );
    }

    // Independent check of normal forms: reduce the dense coefficient
    // vector against row-echelon form of the primal spanning set
    // {m·g_i : deg m = k−2} and compare with the lift of the class.
    fn oracle_check(alg: &GradedAlgebra, p: &Polynomial) {
        use crate::matrix::Eliminator;
        let k = p.degree();
        let d = alg.degree_data(k).unwrap();
        let field = alg.field();
        let len = d.monomials.len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        if k >= 2 {
            for m in monomial_basis(alg.n(), k - 2) {
                for g in alg.presentation().generators() {
                    let shifted = g.mul(&Polynomial::monomial(m.clone(), *field));
                    rows.push(shifted.dense_row(&basis_index(&d.monomials), len));
                }
            }
        }
        let target = p.dense_row(&basis_index(&d.monomials), len);
        let reduced: Vec<Scalar> = match field {
            Field::Prime(ctx) => {
                let mut e = Eliminator::new(ctx, len);
                for r in rows {
                    e.offer(r.iter().map(|s| ctx.e_from_scalar(s)).collect());
                }
                let mut t: Vec<u64> = target.iter().map(|s| ctx.e_from_scalar(s)).collect();
                e.reduce(&mut t);
                t.iter().map(|v| ctx.e_to_scalar(v)).collect()
            }
            Field::Rationals => {
                let mut e = Eliminator::new(&QCtx, len);
                for r in rows {
                    e.offer(r.iter().map(|s| QCtx.e_from_scalar(s)).collect());
                }
                let mut t: Vec<_> = target.iter().map(|s| QCtx.e_from_scalar(s)).collect();
                e.reduce(&mut t);
                t.iter().map(|v| QCtx.e_to_scalar(v)).collect()
            }
        };
        let class = alg.normal_form(p).unwrap();
        let lifted = alg.lift(&class).dense_row(&basis_index(&d.monomials), len);
        assert_eq!(lifted, reduced);
        // idempotence
        assert_eq!(alg.normal_form(&alg.lift(&class)).unwrap(), class);
    }

    #[test]
    fn normal_form_matches_primal_oracle() {
        let mut state = 0x5eed_cafe_1234_5678u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for field in [q(), Field::prime(9973).unwrap()] {
            for alg in [
                build_algebra(fermat_presentation(2, field), 4).unwrap(),
                build_algebra(
                    QuadricPresentation::from_strings(
                        3,
                        field,
                        &["x0^2", "x1^2", "x2^2", "x3^2 + 2*x0*x1"],
                    )
                    .unwrap(),
                    5,
                )
                .unwrap(),
            ] {
                for deg in 1..=4u32 {
                    for _ in 0..8 {
                        let basis = monomial_basis(alg.n(), deg);
                        let p = Polynomial::from_terms(
                            alg.nvars(),
                            field,
                            deg,
                            basis.iter().map(|m| {
                                (m.clone(), field.from_i64((rng() % 19) as i64 - 9))
                            }),
                        );
                        oracle_check(&alg, &p);
                    }
                }
            }
        }
    }
}
