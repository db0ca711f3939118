//! Littlewood-Richardson coefficients by rectification fibers over skew
//! shapes, by fibers over `μ ∗ ν`, and by Schur polynomial products.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jdt::{rectify, rectify_with, CornerPolicy};
use crate::poly::Polynomial;
use crate::serde_util;
use crate::shapes::{star_shape, Cell, Diagram, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, enumerate_ssyt_with_content, SsytEntries, Tableau};

/// The tableau of shape `nu` whose row `i` is filled with `i`.
pub fn superstandard(nu: &Partition) -> Tableau<u32> {
    Tableau::from_rows(
        nu.parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![Some(i as u32 + 1); len])
            .collect(),
    )
}

fn content_of(t: &Tableau<u32>) -> Vec<u32> {
    t.values().copied().collect()
}

/// Number of semistandard tableaux of shape `d` rectifying to `target`.
fn fiber_size(d: &Diagram, target: &Tableau<u32>) -> BigUint {
    let count = enumerate_ssyt_with_content(d, &content_of(target))
        .filter(|l| {
            rectify_with(l, CornerPolicy::default())
                .map(|r| &r.rectified == target)
                .unwrap_or(false)
        })
        .count();
    BigUint::from(count)
}

/// `c^λ_{μν}` as the number of tableaux of shape `λ/μ` rectifying to the
/// superstandard tableau of shape `ν`.
pub fn lr_coeff_rect(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    if shape.size() != nu.weight() {
        return Ok(BigUint::zero());
    }
    Ok(fiber_size(&shape.diagram(), &superstandard(nu)))
}

/// `c^λ_{μν}` as the number of tableaux of shape `μ ∗ ν` rectifying to the
/// superstandard tableau of shape `λ`.
pub fn lr_coeff_star(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.weight() != mu.weight() + nu.weight() {
        return BigUint::zero();
    }
    fiber_size(&star_shape(mu, nu).diagram(), &superstandard(lambda))
}

/// The skew Schur polynomial `s_{λ/μ}(x_1, …, x_k)`.
pub fn schur_poly(shape: &SkewShape, k: usize) -> Polynomial {
    let mut p = Polynomial::zero(k);
    for vals in SsytEntries::new(&shape.diagram(), k as u32) {
        let mut e = vec![0u32; k];
        for v in vals {
            e[v as usize - 1] += 1;
        }
        p.add_term(e, BigInt::from(1));
    }
    p
}

/// Expands a symmetric polynomial in Schur polynomials of the same number
/// of variables by repeatedly removing the lexicographically leading
/// dominant monomial.
pub fn schur_expand(f: &Polynomial) -> BTreeMap<Partition, BigInt> {
    let k = f.nvars();
    let mut rest = f.dominant_part();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.leading() {
        let lambda = Partition::new(lead.iter().map(|&x| x as usize).collect())
            .expect("dominant exponent vectors are partitions");
        let c = c.clone();
        let s = schur_poly(&SkewShape::normal(lambda.clone()), k).dominant_part();
        rest = &rest - &s.scale(&c);
        out.insert(lambda, c);
    }
    out
}

/// Coefficients of `s_μ s_ν` in the Schur basis, computed in
/// `l(μ) + l(ν)` variables.
pub fn product_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, BigUint> {
    let k = (mu.length() + nu.length()).max(1);
    let a = schur_poly(&SkewShape::normal(mu.clone()), k);
    let b = schur_poly(&SkewShape::normal(nu.clone()), k);
    schur_expand(&a.mul_dominant(&b))
        .into_iter()
        .map(|(l, c)| (l, c.to_biguint().expect("Schur products are Schur positive")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaCoeff {
    pub lambda: Partition,
    #[serde(serialize_with = "serde_util::biguint")]
    pub coeff: BigUint,
}

/// The non-zero coefficients `c^λ_{μν}` of a product `s_μ s_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LRTable {
    pub mu: Partition,
    pub nu: Partition,
    pub entries: Vec<LambdaCoeff>,
}

impl LRTable {
    pub fn coeff(&self, lambda: &Partition) -> BigUint {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda)
            .map(|e| e.coeff.clone())
            .unwrap_or_default()
    }
}

/// The product table of `s_μ s_ν`, coefficient by coefficient through
/// skew rectification fibers.
pub fn lr_table(mu: &Partition, nu: &Partition) -> LRTable {
    let entries = Partition::all_of(mu.weight() + nu.weight())
        .into_iter()
        .filter(|l| l.contains(mu) && l.contains(nu))
        .filter_map(|lambda| {
            let coeff = lr_coeff_rect(&lambda, mu, nu).expect("μ ⊆ λ was checked");
            (!coeff.is_zero()).then_some(LambdaCoeff { lambda, coeff })
        })
        .collect();
    LRTable {
        mu: mu.clone(),
        nu: nu.clone(),
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuCoeff {
    pub nu: Partition,
    #[serde(serialize_with = "serde_util::biguint")]
    pub coeff: BigUint,
}

/// The non-zero coefficients of `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewExpansion {
    pub lambda: Partition,
    pub mu: Partition,
    pub entries: Vec<NuCoeff>,
}

impl SkewExpansion {
    pub fn coeff(&self, nu: &Partition) -> BigUint {
        self.entries
            .iter()
            .find(|e| &e.nu == nu)
            .map(|e| e.coeff.clone())
            .unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter().map(|e| &e.nu)
    }
}

/// All `ν` with `c^λ_{μν} > 0` for the skew shape `λ/μ`.
pub fn lr_expand(shape: &SkewShape) -> SkewExpansion {
    let lambda = shape.outer();
    let entries = Partition::all_of(shape.size())
        .into_iter()
        .filter(|nu| lambda.contains(nu))
        .filter_map(|nu| {
            let coeff = lr_coeff_rect(lambda, shape.inner(), &nu).expect("shape is valid");
            (!coeff.is_zero()).then_some(NuCoeff { nu, coeff })
        })
        .collect();
    SkewExpansion {
        lambda: lambda.clone(),
        mu: shape.inner().clone(),
        entries,
    }
}

/// The placement `ν cell -> source cell` recorded by the rectification of
/// `l`, i.e. the inverse of its cell bijection.
fn placement_of(l: &Tableau<u32>) -> Result<(Partition, Tableau<Cell>)> {
    let r = rectify(l)?;
    let nu = r.shape();
    let placement = Tableau::from_cells(r.rho.iter().map(|(&src, &dst)| (dst, src)))?;
    Ok((nu, placement))
}

/// Every distinct placement `ν cell -> source cell` arising from a tableau
/// of shape `λ/μ` that rectifies to shape `ν`. Each tableau has the same
/// cell bijection as its standardization, so standard fillings suffice.
pub fn u_placements(shape: &SkewShape, nu: &Partition) -> Result<Vec<Tableau<Cell>>> {
    let n = shape.size() as u32;
    let content: Vec<u32> = (1..=n).collect();
    let mut out = BTreeSet::new();
    for l in enumerate_ssyt_with_content(&shape.diagram(), &content) {
        let (shape_nu, placement) = placement_of(&l)?;
        if &shape_nu == nu {
            out.insert(placement);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyFiber(nu.to_string()));
    }
    Ok(out.into_iter().collect())
}

/// The placement of the first tableau, in enumeration order, among those
/// with superstandard content of shape `ν` that rectify to shape `ν`.
pub fn default_placement(shape: &SkewShape, nu: &Partition) -> Result<Tableau<Cell>> {
    let content = content_of(&superstandard(nu));
    for l in enumerate_ssyt_with_content(&shape.diagram(), &content) {
        let (shape_nu, placement) = placement_of(&l)?;
        if &shape_nu == nu {
            return Ok(placement);
        }
    }
    Err(Error::EmptyFiber(nu.to_string()))
}

/// Applies a placement to an exponent tableau on the source shape.
pub fn apply_placement<E: Clone>(v: &Tableau<E>, placement: &Tableau<Cell>) -> Result<Tableau<E>> {
    let entries = placement
        .iter()
        .map(|(dst, src)| {
            v.get(*src).cloned().map(|e| (dst, e)).ok_or_else(|| {
                Error::ShapeMismatch(format!("placement refers to ({}, {}) outside the tableau", src.0, src.1))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::from_cells(entries)
}

/// The set `U_ν(v)` of transported exponent tableaux, one per distinct
/// placement.
pub fn u_set<E: Clone>(v: &Tableau<E>, shape: &SkewShape, nu: &Partition) -> Result<Vec<Tableau<E>>> {
    if v.diagram().cell_set() != shape.diagram().cell_set() {
        return Err(Error::ShapeMismatch("exponent tableau does not fill the shape".into()));
    }
    u_placements(shape, nu)?
        .iter()
        .map(|p| apply_placement(v, p))
        .collect()
}

/// Number of semistandard tableaux of a shape with entries at most `k`.
pub fn count_ssyt(d: &Diagram, k: u32) -> u64 {
    enumerate_ssyt(d, k).count() as u64
}
