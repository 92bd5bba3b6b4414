//! Homogeneous symmetric functions of a fixed degree as exact coefficient
//! vectors in one of the monomial, elementary, complete homogeneous or Schur
//! bases.
//!
//! The monomial basis is the hub: each of `e_λ`, `h_λ`, `s_λ` is expanded
//! into monomials once per degree (in exactly `d` variables, which determines
//! a degree-`d` symmetric function), and every conversion is an exact solve
//! against those expansions. Tables are built on first use and shared.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partitions::{partitions_of, Cell, Partition};
use crate::tableaux;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 4] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Complete,
        Basis::Schur,
    ];

    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Complete => 'h',
            Basis::Schur => 's',
        }
    }

    fn slot(self) -> Option<usize> {
        match self {
            Basis::Monomial => None,
            Basis::Elementary => Some(0),
            Basis::Complete => Some(1),
            Basis::Schur => Some(2),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Complete),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown basis {other:?}; expected one of m, e, h, s"),
            }),
        }
    }
}

/// Per-degree data shared by every function of that degree.
pub struct DegreeTables {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row `λ` of `expansions[b]` is the monomial expansion of `b_λ`.
    expansions: [RatMatrix; 3],
    inverses: [RatMatrix; 3],
}

impl DegreeTables {
    fn build(d: usize) -> Result<Self> {
        let partitions = partitions_of(d);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect::<HashMap<_, _>>();
        let expansion = |basis: Basis| {
            let n = partitions.len();
            let mut m = RatMatrix::zeros(n, n);
            for (i, lambda) in partitions.iter().enumerate() {
                for (j, c) in monomial_coefficients(basis, lambda, &partitions).into_iter().enumerate() {
                    m[(i, j)] = BigRational::from_integer(BigInt::from(c));
                }
            }
            m
        };
        let expansions = [
            expansion(Basis::Elementary),
            expansion(Basis::Complete),
            expansion(Basis::Schur),
        ];
        let invert = |m: &RatMatrix| m.inverse().ok_or(Error::Singular(d));
        let inverses = [
            invert(&expansions[0])?,
            invert(&expansions[1])?,
            invert(&expansions[2])?,
        ];
        Ok(DegreeTables {
            degree: d,
            partitions,
            index,
            expansions,
            inverses,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Monomial expansion matrix of a non-monomial basis.
    pub fn expansion(&self, basis: Basis) -> Option<&RatMatrix> {
        basis.slot().map(|s| &self.expansions[s])
    }
}

/// Shared tables for degree `d`, built on first request.
pub fn tables(d: usize) -> Result<Arc<DegreeTables>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("table cache poisoned").get(&d) {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(DegreeTables::build(d)?);
    let mut w = cache.write().expect("table cache poisoned");
    Ok(Arc::clone(w.entry(d).or_insert(built)))
}

/// Coefficients of `m_μ`, μ over `targets`, in the named basis element.
fn monomial_coefficients(basis: Basis, lambda: &Partition, targets: &[Partition]) -> Vec<u64> {
    match basis {
        Basis::Monomial => targets.iter().map(|mu| u64::from(mu == lambda)).collect(),
        Basis::Elementary | Basis::Complete => {
            let d = lambda.size();
            let mut poly = Poly::one(d);
            for &k in lambda.parts() {
                let factor = if basis == Basis::Elementary {
                    Poly::elementary(d, k)
                } else {
                    Poly::complete(d, k)
                };
                poly = poly.mul(&factor);
            }
            targets.iter().map(|mu| poly.coefficient_of(mu)).collect()
        }
        Basis::Schur => targets
            .iter()
            .map(|mu| semistandard_fillings_with_content(lambda, mu.parts()))
            .collect(),
    }
}

/// Polynomial with nonnegative integer coefficients in a fixed number of variables.
struct Poly {
    vars: usize,
    terms: HashMap<Vec<u8>, u64>,
}

impl Poly {
    fn one(vars: usize) -> Self {
        Poly {
            vars,
            terms: HashMap::from([(vec![0; vars], 1)]),
        }
    }

    /// `e_k(x_1..x_vars)`: one term per k-subset.
    fn elementary(vars: usize, k: usize) -> Self {
        let mut terms = HashMap::new();
        for mask in 0u32..(1 << vars) {
            if mask.count_ones() as usize == k {
                let exp = (0..vars).map(|i| ((mask >> i) & 1) as u8).collect();
                terms.insert(exp, 1);
            }
        }
        Poly { vars, terms }
    }

    /// `h_k(x_1..x_vars)`: one term per k-multiset.
    fn complete(vars: usize, k: usize) -> Self {
        fn rec(i: usize, rest: usize, cur: &mut Vec<u8>, out: &mut HashMap<Vec<u8>, u64>) {
            if i + 1 == cur.len() {
                cur[i] = rest as u8;
                out.insert(cur.clone(), 1);
                return;
            }
            for e in 0..=rest {
                cur[i] = e as u8;
                rec(i + 1, rest - e, cur, out);
            }
        }
        let mut terms = HashMap::new();
        if vars == 0 {
            if k == 0 {
                terms.insert(Vec::new(), 1);
            }
        } else {
            rec(0, k, &mut vec![0; vars], &mut terms);
        }
        Poly { vars, terms }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut terms: HashMap<Vec<u8>, u64> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exp: Vec<u8> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(exp).or_insert(0) += ca * cb;
            }
        }
        Poly {
            vars: self.vars,
            terms,
        }
    }

    /// Coefficient of `x^μ`, i.e. of `m_μ` for a symmetric polynomial.
    fn coefficient_of(&self, mu: &Partition) -> u64 {
        if mu.len() > self.vars {
            return 0;
        }
        let mut exp = vec![0u8; self.vars];
        for (e, &p) in exp.iter_mut().zip(mu.parts()) {
            *e = p as u8;
        }
        self.terms.get(&exp).copied().unwrap_or(0)
    }
}

/// Cell-by-cell count of semistandard fillings of `shape` whose content is
/// exactly `content` (entry `v` used `content[v-1]` times).
fn semistandard_fillings_with_content(shape: &Partition, content: &[usize]) -> u64 {
    fn rec(
        cells: &[Cell],
        pos: usize,
        filling: &mut HashMap<Cell, usize>,
        budget: &mut [usize],
    ) -> u64 {
        let Some(&cell) = cells.get(pos) else {
            return 1;
        };
        let left = (cell.col > 1).then(|| filling[&Cell::new(cell.row, cell.col - 1)]);
        let above = (cell.row > 1).then(|| filling[&Cell::new(cell.row - 1, cell.col)]);
        let lo = left.unwrap_or(1).max(above.map_or(1, |a| a + 1));
        let mut total = 0;
        for v in lo..=budget.len() {
            if budget[v - 1] == 0 {
                continue;
            }
            budget[v - 1] -= 1;
            filling.insert(cell, v);
            total += rec(cells, pos + 1, filling, budget);
            filling.remove(&cell);
            budget[v - 1] += 1;
        }
        total
    }
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<Cell> = shape.cells().collect();
    rec(&cells, 0, &mut HashMap::new(), &mut content.to_vec())
}

/// Kostka number `K_{μ,ν}`: semistandard tableaux of shape `μ` and content
/// `ν`, where `ν` may be any composition. Counted by adding one horizontal
/// strip per entry value.
pub fn kostka(shape: &Partition, content: &[usize]) -> Result<u64> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: total,
        });
    }
    fn strips(shape: &[usize], inner: &mut Vec<usize>, content: &[usize]) -> u64 {
        let Some((&k, rest)) = content.split_first() else {
            return 1;
        };
        // choose the new row lengths row by row, top to bottom
        fn place(
            shape: &[usize],
            old: &[usize],
            row: usize,
            left: usize,
            next: &mut Vec<usize>,
            rest: &[usize],
        ) -> u64 {
            if row == shape.len() {
                if left != 0 {
                    return 0;
                }
                let mut inner = next.clone();
                return strips(shape, &mut inner, rest);
            }
            let cap = if row == 0 { shape[0] } else { shape[row].min(old[row - 1]) };
            let mut total = 0;
            let lo = old[row];
            for new in lo..=cap.max(lo) {
                let added = new - lo;
                if added > left {
                    break;
                }
                next[row] = new;
                total += place(shape, old, row + 1, left - added, next, rest);
            }
            next[row] = old[row];
            total
        }
        let old = inner.clone();
        place(shape, &old, 0, k, inner, rest)
    }
    if shape.is_empty() {
        return Ok(1);
    }
    let mut inner = vec![0; shape.len()];
    Ok(strips(shape.parts(), &mut inner, content))
}

/// `K[μ][ν] = kostka(μ, ν)` over partitions of `d` in canonical order.
pub fn kostka_matrix(d: usize) -> Vec<Vec<i64>> {
    let ps = partitions_of(d);
    ps.iter()
        .map(|mu| {
            ps.iter()
                .map(|nu| kostka(mu, nu.parts()).expect("same size") as i64)
                .collect()
        })
        .collect()
}

/// `K⁻¹_{λ,μ}` as the signed number of special rim hook tabloids of shape
/// `μ` and type `λ`.
pub fn inverse_kostka(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            found: lambda.size(),
        });
    }
    Ok(tableaux::enumerate_srht(mu, Some(lambda))
        .iter()
        .map(|t| t.sign())
        .sum())
}

/// `[K⁻¹_{λ,μ}]` from tabloid enumeration, rows λ, columns μ.
pub fn inverse_kostka_matrix(d: usize) -> Vec<Vec<i64>> {
    let ps = partitions_of(d);
    let mut out = vec![vec![0i64; ps.len()]; ps.len()];
    for (j, mu) in ps.iter().enumerate() {
        for t in tableaux::enumerate_srht(mu, None) {
            let i = ps.iter().position(|p| *p == t.type_partition()).expect("type is a partition of d");
            out[i][j] += t.sign();
        }
    }
    out
}

/// `[K⁻¹_{λ,μ}]` by exact inversion of the Kostka matrix.
pub fn inverse_kostka_matrix_algebraic(d: usize) -> Result<Vec<Vec<i64>>> {
    let k = RatMatrix::from_integers(&kostka_matrix(d));
    let inv = k.inverse().ok_or(Error::Singular(d))?;
    inv.to_integers()
        .ok_or_else(|| Error::NonInteger(format!("inverse Kostka matrix of degree {d}")))
}

/// A homogeneous symmetric function of degree `degree`, as a dense coefficient
/// vector over the partitions of `degree` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: Vec<BigRational>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Result<Self> {
        let n = tables(degree)?.partitions().len();
        Ok(SymFunc {
            degree,
            basis,
            coeffs: vec![BigRational::zero(); n],
        })
    }

    pub fn from_terms<I, C>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigRational>,
    {
        let mut f = SymFunc::zero(degree, basis)?;
        for (p, c) in terms {
            f.add_term(&p, c.into())?;
        }
        Ok(f)
    }

    /// Basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Result<Self> {
        SymFunc::from_terms(lambda.size(), basis, [(lambda.clone(), BigRational::one())])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> BigRational {
        tables(self.degree)
            .ok()
            .and_then(|t| t.index_of(p))
            .map_or_else(BigRational::zero, |i| self.coeffs[i].clone())
    }

    pub fn add_term(&mut self, p: &Partition, c: BigRational) -> Result<()> {
        let t = tables(self.degree)?;
        let i = t.index_of(p).ok_or(Error::SizeMismatch {
            expected: self.degree,
            found: p.size(),
        })?;
        self.coeffs[i] += c;
        Ok(())
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> Vec<(Partition, BigRational)> {
        let t = tables(self.degree).expect("tables exist for a constructed function");
        t.partitions()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Integer coefficients in canonical order; errors on any fraction.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonInteger(c.to_string()))
                }
            })
            .collect()
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree || self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        Ok(SymFunc {
            degree: self.degree,
            basis: self.basis,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// The same function expressed in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let t = tables(self.degree)?;
        let monomial = match self.basis.slot() {
            None => self.coeffs.clone(),
            Some(s) => t.expansions[s].left_apply(&self.coeffs),
        };
        let coeffs = match target.slot() {
            None => monomial,
            // y · B = v  ⇔  y = v · B⁻¹
            Some(s) => t.inverses[s].left_apply(&monomial),
        };
        Ok(SymFunc {
            degree: self.degree,
            basis: target,
            coeffs,
        })
    }

    /// The involution `ω`: `e_λ ↔ h_λ`, `s_λ ↦ s_{λ'}`.
    pub fn omega(&self) -> Result<SymFunc> {
        match self.basis {
            Basis::Elementary => Ok(self.relabel(Basis::Complete)),
            Basis::Complete => Ok(self.relabel(Basis::Elementary)),
            Basis::Schur => {
                let t = tables(self.degree)?;
                let mut coeffs = vec![BigRational::zero(); self.coeffs.len()];
                for (p, c) in t.partitions().iter().zip(&self.coeffs) {
                    let j = t.index_of(&p.conjugate()).expect("conjugate has the same size");
                    coeffs[j] = c.clone();
                }
                Ok(SymFunc {
                    degree: self.degree,
                    basis: Basis::Schur,
                    coeffs,
                })
            }
            Basis::Monomial => self.convert(Basis::Schur)?.omega()?.convert(Basis::Monomial),
        }
    }

    fn relabel(&self, basis: Basis) -> SymFunc {
        SymFunc {
            basis,
            ..self.clone()
        }
    }

    /// Value at `x_1 = … = x_n = 1`, all other variables 0.
    pub fn specialize_ones(&self, n: usize) -> Result<BigRational> {
        let m = self.convert(Basis::Monomial)?;
        let t = tables(self.degree)?;
        let mut total = BigRational::zero();
        for (p, c) in t.partitions().iter().zip(&m.coeffs) {
            if !c.is_zero() {
                total += c * BigRational::from_integer(monomial_at_ones(p, n));
            }
        }
        Ok(total)
    }

    pub fn to_json(&self) -> SymFuncJson {
        let t = tables(self.degree).expect("tables exist for a constructed function");
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            coeffs: t
                .partitions()
                .iter()
                .zip(&self.coeffs)
                .map(|(p, c)| TermJson {
                    partition: p.to_string(),
                    num: ExactInt(c.numer().clone()),
                    den: ExactInt(c.denom().clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SymFuncJson) -> Result<SymFunc> {
        let mut f = SymFunc::zero(j.degree, j.basis)?;
        for term in &j.coeffs {
            let p: Partition = term.partition.parse()?;
            if term.den.0.is_zero() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("zero denominator at {p}"),
                });
            }
            f.add_term(&p, BigRational::new(term.num.0.clone(), term.den.0.clone()))?;
        }
        Ok(f)
    }

    /// One `coefficient·b_{partition}` term per line.
    /// Every coefficient, zeros included, in canonical order.
    pub fn coeffs_by_partition(&self) -> Vec<(Partition, BigRational)> {
        partitions_of(self.degree).into_iter().zip(self.coeffs.iter().cloned()).collect()
    }

    pub fn terms_per_line(&self) -> String {
        self.terms()
            .iter()
            .map(|(p, c)| format!("{}·{}_{{{}}}\n", c, self.basis, p))
            .collect()
    }
}

/// `m_λ(1^n) = n! / ((n-ℓ)! ∏ r_i!)`, zero when `n < ℓ(λ)`.
fn monomial_at_ones(p: &Partition, n: usize) -> BigInt {
    let l = p.len();
    if n < l {
        return BigInt::zero();
    }
    let falling: BigInt = ((n - l + 1)..=n).map(BigInt::from).product();
    let denom: BigInt = p.multiplicities().iter().map(|&(_, r)| factorial(r)).product();
    falling / denom
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in terms.iter().enumerate() {
            let (sep, mag) = match (i, c.is_negative()) {
                (0, false) => ("", c.clone()),
                (0, true) => ("-", -c),
                (_, false) => (" + ", c.clone()),
                (_, true) => (" - ", -c),
            };
            write!(f, "{sep}{mag}·{}_{{{p}}}", self.basis)?;
        }
        Ok(())
    }
}

/// Serialized form: `{degree, basis, coeffs: [{partition, num, den}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub degree: usize,
    pub basis: Basis,
    pub coeffs: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: String,
    pub num: ExactInt,
    pub den: ExactInt,
}

/// Arbitrary-precision integer that serializes as a JSON number when it fits
/// in 64 bits and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInt(pub BigInt);

impl Serialize for ExactInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExactInt(BigInt::from(v))),
            Raw::Str(s) => s
                .parse::<BigInt>()
                .map(ExactInt)
                .map_err(serde::de::Error::custom),
        }
    }
}
