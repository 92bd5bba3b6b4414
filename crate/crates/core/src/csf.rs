//! The chromatic symmetric function `X_G` and its coefficient families.
//!
//! * `a_λ`: coefficients of `X_G` in the elementary basis.
//! * `f_λ`: coefficients of `ωX_G` in the Schur basis, read off the Schur
//!   expansion of `X_G` at the conjugate index.
//! * `c_ℓ`: the sum of `a_λ` over partitions with `ℓ` parts.
//!
//! For the incomparability graph of a (3+1)-free poset, `a_λ` is also the
//! signed count of special rim hook P-tableaux of type `λ`; that route is
//! [`a_coefficient_via_tableaux`].

use std::collections::HashMap;
use std::fmt::Write as _;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orderstruct::{acyclic_orientation_sink_counts, bits, Graph, Poset};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{factorial, Basis, SymFunc, SymFuncJson};
use crate::tableaux::enumerate_srhpt;

/// Largest vertex count accepted by [`chromatic_symmetric_function`].
pub const MAX_VERTICES: usize = 9;

/// `X_G` in the monomial basis.
///
/// Each partition of the vertex set into independent sets with block sizes
/// `λ` contributes `∏ r_i(λ)!` to the coefficient of `m_λ`: the blocks of
/// equal size can be matched to the distinct colours of a monomial in that
/// many ways.
pub fn chromatic_symmetric_function(graph: &Graph) -> Result<SymFunc> {
    let n = graph.len();
    if n > MAX_VERTICES {
        return Err(Error::Guard {
            what: "chromatic symmetric function vertex count",
            size: n,
            limit: MAX_VERTICES,
        });
    }
    let mut by_type: HashMap<Partition, u64> = HashMap::new();
    let mut blocks: Vec<u32> = Vec::with_capacity(n);
    stable_partitions(graph, 0, &mut blocks, &mut |blocks| {
        let sizes: Vec<usize> = blocks.iter().map(|b| b.count_ones() as usize).collect();
        *by_type.entry(Partition::from_composition(&sizes)).or_insert(0) += 1;
    });
    let terms = by_type.into_iter().map(|(lambda, count)| {
        let weight: BigInt = lambda.multiplicities().iter().map(|&(_, r)| factorial(r)).product();
        (lambda, BigRational::from_integer(weight * BigInt::from(count)))
    });
    SymFunc::from_terms(n, Basis::Monomial, terms)
}

/// Set partitions of the vertices into independent sets, vertex by vertex.
fn stable_partitions(graph: &Graph, v: usize, blocks: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if v == graph.len() {
        visit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i] & graph.neighbors(v) == 0 {
            blocks[i] |= 1 << v;
            stable_partitions(graph, v + 1, blocks, visit);
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    stable_partitions(graph, v + 1, blocks, visit);
    blocks.pop();
}

/// Proper colourings with colours `1..=palette`, counted directly.
pub fn proper_coloring_count(graph: &Graph, palette: usize) -> u64 {
    fn rec(graph: &Graph, v: usize, colors: &mut Vec<usize>, palette: usize) -> u64 {
        if v == graph.len() {
            return 1;
        }
        (0..palette)
            .map(|c| {
                if bits(graph.neighbors(v)).any(|u| u < v && colors[u] == c) {
                    return 0;
                }
                colors[v] = c;
                rec(graph, v + 1, colors, palette)
            })
            .sum()
    }
    rec(graph, 0, &mut vec![0; graph.len()], palette)
}

/// Coefficients of the chromatic polynomial (constant term first), by
/// interpolating `X_G(1^k)` at `k = 0..=n`.
pub fn chromatic_polynomial(graph: &Graph) -> Result<Vec<BigRational>> {
    let x = chromatic_symmetric_function(graph)?;
    let n = graph.len();
    let values = (0..=n).map(|k| x.specialize_ones(k)).collect::<Result<Vec<_>>>()?;
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (i, y) in values.iter().enumerate() {
        // Lagrange basis polynomial for node i over nodes 0..=n
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in (0..=n).filter(|&j| j != i) {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
        }
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += y * b / &denom;
        }
    }
    Ok(coeffs)
}

pub fn evaluate(poly: &[BigRational], x: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(x));
    poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// A coefficient indexed by a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub partition: Partition,
    pub value: i64,
}

fn to_i64(x: &BigRational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::NonInteger(x.to_string()));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonInteger(format!("{x} does not fit in 64 bits")))
}

fn indexed(f: &SymFunc, index: impl Fn(&Partition) -> Partition) -> Result<Vec<Coefficient>> {
    partitions_of(f.degree())
        .into_iter()
        .map(|p| {
            let value = to_i64(&f.coeff(&index(&p)))?;
            Ok(Coefficient { partition: p, value })
        })
        .collect()
}

/// `a_λ` for every `λ ⊢ |V|`, canonical order.
pub fn a_coefficients(graph: &Graph) -> Result<Vec<Coefficient>> {
    let x = chromatic_symmetric_function(graph)?;
    indexed(&x.convert(Basis::Elementary)?, Partition::clone)
}

/// `f_λ` for every `λ ⊢ |V|`, canonical order.
pub fn f_coefficients(graph: &Graph) -> Result<Vec<Coefficient>> {
    let x = chromatic_symmetric_function(graph)?;
    indexed(&x.convert(Basis::Schur)?, Partition::conjugate)
}

/// `[c_1, …, c_n]` from the `a` coefficients.
pub fn c_by_length(a: &[Coefficient], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n];
    for coeff in a {
        if let Some(slot) = coeff.partition.len().checked_sub(1) {
            c[slot] += coeff.value;
        }
    }
    c
}

/// `a_λ` as the signed number of special rim hook P-tableaux of type `λ`.
/// Refuses posets that are not (3+1)-free.
pub fn a_coefficient_via_tableaux(poset: &Poset, lambda: &Partition) -> Result<i64> {
    if let Some(witness) = poset.find_three_plus_one() {
        return Err(Error::NotThreePlusOneFree(witness));
    }
    Ok(enumerate_srhpt(poset, lambda)?.iter().map(|t| t.sign()).sum())
}

/// Everything computed for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsfReport {
    pub graph_id: String,
    pub degree: usize,
    pub x_monomial: SymFuncJson,
    pub a: Vec<Coefficient>,
    pub f: Vec<Coefficient>,
    /// `c_ℓ` for `ℓ = 1..=degree`
    pub c_by_length: Vec<i64>,
    /// `κ_ℓ` for `ℓ = 1..=degree`
    pub kappa_by_sinks: Vec<u64>,
}

impl CsfReport {
    pub fn new(graph_id: impl Into<String>, graph: &Graph) -> Result<CsfReport> {
        let x = chromatic_symmetric_function(graph)?;
        let n = graph.len();
        let a = indexed(&x.convert(Basis::Elementary)?, Partition::clone)?;
        let f = indexed(&x.convert(Basis::Schur)?, Partition::conjugate)?;
        Ok(CsfReport {
            graph_id: graph_id.into(),
            degree: n,
            x_monomial: x.to_json(),
            c_by_length: c_by_length(&a, n),
            kappa_by_sinks: acyclic_orientation_sink_counts(graph)?.to_vec(n),
            a,
            f,
        })
    }

    pub fn x(&self) -> Result<SymFunc> {
        SymFunc::from_json(&self.x_monomial)
    }

    /// One row per partition: partition, length, X_G in m, a, f.
    pub fn to_tsv(&self) -> String {
        let x = self.x().expect("report holds a well-formed function");
        let mut out = String::from("partition\tlength\tx_m\ta\tf\n");
        for (a, f) in self.a.iter().zip(&self.f) {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                a.partition,
                a.partition.len(),
                x.coeff(&a.partition),
                a.value,
                f.value
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let x = self.x().expect("report holds a well-formed function");
        let _ = writeln!(out, "graph: {}", self.graph_id);
        let _ = writeln!(out, "degree: {}", self.degree);
        let _ = writeln!(out, "X (m): {x}");
        let join = |v: &[Coefficient]| {
            v.iter()
                .map(|c| format!("{}:{}", c.partition, c.value))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "a (e-coefficients): {}", join(&self.a));
        let _ = writeln!(out, "f (Schur coefficients of omega X): {}", join(&self.f));
        let list = |v: Vec<String>| v.join(" ");
        let _ = writeln!(
            out,
            "c by length: {}",
            list(self.c_by_length.iter().map(i64::to_string).collect())
        );
        let _ = writeln!(
            out,
            "kappa by sinks: {}",
            list(self.kappa_by_sinks.iter().map(u64::to_string).collect())
        );
        out
    }
}
