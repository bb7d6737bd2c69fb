//! Monomials in n+1 variables and the graded reverse lexicographic order
//! (x0 > x1 > ... > xn) that fixes every basis downstream.

use std::cmp::Ordering;

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            let exps = self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect();
            Some(Monomial {
                exps,
                degree: self.degree - other.degree,
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Smallest variable index dividing the monomial, if any.
    pub fn min_divisor(&self) -> Option<usize> {
        (0..self.exps.len()).find(|&i| self.exps[i] > 0)
    }

    /// Quotient by one power of variable i (caller ensures divisibility).
    pub fn div_var(&self, i: usize) -> Monomial {
        debug_assert!(self.exps[i] > 0);
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Monomial {
            exps,
            degree: self.degree - 1,
        }
    }

    /// Lift to a ring with more variables (new variables get exponent 0).
    pub fn extend(&self, nvars: usize) -> Monomial {
        debug_assert!(nvars >= self.exps.len());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic: higher total degree is larger; on a tie
    /// the monomial with the *smaller* exponent at the last differing
    /// variable is larger.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {
                for i in (0..self.exps.len()).rev() {
                    if self.exps[i] != other.exps[i] {
                        return other.exps[i].cmp(&self.exps[i]);
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree d in n+1 variables, largest first.
pub fn monomial_basis(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binomial(n as u64 + d as u64, d as u64) as usize);
    let mut exps = vec![0u32; n + 1];
    enumerate(&mut exps, 0, d, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn enumerate(exps: &mut Vec<u32>, i: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[i] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[i] = e;
        enumerate(exps, i + 1, remaining - e, out);
    }
    exps[i] = 0;
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact multinomial coefficient k! / prod(alpha_i!), for k <= 20.
pub fn multinomial(exps: &[u32]) -> u64 {
    let mut acc: u64 = 1;
    let mut seen: u64 = 0;
    for &e in exps {
        for j in 1..=e as u64 {
            seen += 1;
            acc = acc * seen / j;
        }
    }
    acc
}

/// Names and arity of the working polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    n: usize,
    names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    #[error("need n >= 1 (got n = {0})")]
    TooFewVariables(usize),
    #[error("variable names are not pairwise distinct")]
    DuplicateNames,
    #[error("name count {got} does not match n+1 = {want}")]
    WrongNameCount { got: usize, want: usize },
}

impl VariableContext {
    pub fn new(n: usize, names: Vec<String>) -> Result<Self, ContextError> {
        if n < 1 {
            return Err(ContextError::TooFewVariables(n));
        }
        if names.len() != n + 1 {
            return Err(ContextError::WrongNameCount {
                got: names.len(),
                want: n + 1,
            });
        }
        for (i, a) in names.iter().enumerate() {
            if names[i + 1..].contains(a) {
                return Err(ContextError::DuplicateNames);
            }
        }
        Ok(VariableContext { n, names })
    }

    /// Ring-side variables x0..xn.
    pub fn ring(n: usize) -> Self {
        VariableContext::new(n, (0..=n).map(|i| format!("x{i}")).collect())
            .expect("generated names are distinct")
    }

    /// Dual-side variables w0..wn.
    pub fn dual(n: usize) -> Self {
        VariableContext::new(n, (0..=n).map(|i| format!("w{i}")).collect())
            .expect("generated names are distinct")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Extend by one auxiliary variable (used by radical membership).
    pub fn with_extra(&self, extra: &str) -> Result<Self, ContextError> {
        let mut names = self.names.clone();
        names.push(extra.to_string());
        VariableContext::new(self.n + 1, names)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.degree() == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}
