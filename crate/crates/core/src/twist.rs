//! Cobrackets `δ = dρ` and the twist conditions for `δ' = δ + ds`.
//!
//! `(δ ⊗ id)(s)` places `δ(s')` in legs 1–2 and `s''` in leg 3.

use crate::algebra::{LieAlgebra, LieElement, Subspace};
use crate::dualnum::{DualElement, DualSubspace};
use crate::error::{Error, Result};
use crate::tensor::{ad_action2, alt3, contract_first_leg, cyb, is_invariant, mixed_bracket, Tensor2, Tensor3};

/// `δ(e_i)` for each basis vector `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    images: Vec<Tensor2>,
    /// Whether the defining `ρ` satisfies `CYB(ρ) = 0`.
    pub from_cybe_solution: bool,
}

impl Cobracket {
    /// `δ(a) = [a ⊗ 1 + 1 ⊗ a, ρ]`; requires `ρ + ρ^{21}` to be invariant.
    pub fn from_r(g: &LieAlgebra, rho: &Tensor2) -> Result<Self> {
        rho.check_ambient(g)?;
        if !is_invariant(g, &rho.symmetric_part(), &Subspace::full(g.dim()))? {
            return Err(Error::Precondition("ρ + ρ^21 is not g-invariant".into()));
        }
        let images = (0..g.dim()).map(|i| ad_action2(g, &LieElement::basis(i), rho)).collect::<Result<_>>()?;
        Ok(Cobracket { images, from_cybe_solution: cyb(g, rho)?.is_zero() })
    }

    pub fn zero(g: &LieAlgebra) -> Self {
        Cobracket { images: vec![Tensor2::zero(g.dim()); g.dim()], from_cybe_solution: true }
    }

    pub fn image(&self, i: usize) -> &Tensor2 {
        &self.images[i]
    }

    pub fn apply(&self, x: &LieElement) -> Tensor2 {
        let mut out = Tensor2::zero(self.images.len());
        for (i, c) in x.iter() {
            out.axpy(c, &self.images[i]);
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        self.images.iter().all(Tensor2::is_skew)
    }

    /// `δ([x, y]) = x·δ(y) − y·δ(x)` on basis pairs.
    pub fn is_cocycle(&self, g: &LieAlgebra) -> Result<bool> {
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let (x, y) = (LieElement::basis(i), LieElement::basis(j));
                let lhs = self.apply(g.bracket_basis(i, j));
                let rhs = ad_action2(g, &x, &self.images[j])?.sub(&ad_action2(g, &y, &self.images[i])?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn check_skew(g: &LieAlgebra, s: &Tensor2) -> Result<()> {
    s.check_ambient(g)?;
    if !s.is_skew() {
        return Err(Error::Domain("twist s is not skew".into()));
    }
    Ok(())
}

/// `Σ_{ij} s_ij δ(e_i) ⊗ e_j`
pub fn delta_tensor_id(delta: &Cobracket, s: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero(s.dim());
    for ((i, j), c) in s.iter() {
        for ((a, b), d) in delta.image(i).iter() {
            out.add_term((a, b, j), &(c * d));
        }
    }
    out
}

/// `CYB(s) − Alt(δ ⊗ id)(s)`
pub fn general_residual(g: &LieAlgebra, delta: &Cobracket, s: &Tensor2) -> Result<Tensor3> {
    check_skew(g, s)?;
    Ok(cyb(g, s)?.sub(&alt3(&delta_tensor_id(delta, s))))
}

pub fn twist_condition_general(g: &LieAlgebra, delta: &Cobracket, s: &Tensor2) -> Result<bool> {
    Ok(general_residual(g, delta, s)?.is_zero())
}

/// `CYB(s) + [[ρ, s]] + [[s, ρ]]`
pub fn triangular_residual(g: &LieAlgebra, rho: &Tensor2, s: &Tensor2) -> Result<Tensor3> {
    check_skew(g, s)?;
    rho.check_ambient(g)?;
    Ok(cyb(g, s)?.add(&mixed_bracket(g, rho, s)?).add(&mixed_bracket(g, s, rho)?))
}

pub fn twist_condition_triangular(g: &LieAlgebra, rho: &Tensor2, s: &Tensor2) -> Result<bool> {
    Ok(triangular_residual(g, rho, s)?.is_zero())
}

/// Result of a successful twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twisted {
    pub r: Tensor2,
    /// `CYB(ρ + s) = 0`.
    pub cyb_zero: bool,
}

/// `ρ + s`, after checking the triangular twist condition.
pub fn apply_twist(g: &LieAlgebra, rho: &Tensor2, s: &Tensor2) -> Result<Twisted> {
    let residual = triangular_residual(g, rho, s)?;
    if !residual.is_zero() {
        return Err(Error::TwistConditionFailed { terms: residual.nnz(), residual });
    }
    let r = rho.add(s);
    let cyb_zero = cyb(g, &r)?.is_zero();
    // CYB(ρ + s) = CYB(ρ) + residual.
    if cyb_zero != cyb(g, rho)?.is_zero() {
        return Err(Error::InvariantFailure("CYB(ρ + s) differs from CYB(ρ) under the twist condition".into()));
    }
    Ok(Twisted { r, cyb_zero })
}

/// `{S(c) + cε : c ∈ g}` with `S(c) = Σ ⟨c, s'⟩ s''`.
pub fn s_graph(g: &LieAlgebra, s: &Tensor2) -> Result<DualSubspace> {
    check_skew(g, s)?;
    let elems: Vec<DualElement> = (0..g.dim())
        .map(|i| {
            let c = LieElement::basis(i);
            DualElement::new(contract_first_leg(g, &c, s), c)
        })
        .collect();
    Ok(DualSubspace::span(g.dim(), &elems))
}

/// Known skew solutions of `CYB(r) = 0` used as twist bases.
pub fn standard_solutions(g: &LieAlgebra) -> Vec<Tensor2> {
    let dim = g.dim();
    let h1 = LieElement::basis(0);
    let mut out = Vec::new();
    // Candidates: H_1∧E_{±α_1} and, from rank 2, E_12∧E_13 (commuting root
    // vectors). Only those with CYB = 0 are kept.
    for r in [0, g.neg_root(0)] {
        out.push(Tensor2::wedge(dim, &h1, &g.root_vector(r)));
    }
    if g.rank() >= 2 {
        let a12 = (0..g.num_roots()).find(|&r| g.root(r).ij() == (0, 2)).expect("rank ≥ 2");
        out.push(Tensor2::wedge(dim, &g.root_vector(0), &g.root_vector(a12)));
    }
    out.retain(|t| cyb(g, t).map(|c| c.is_zero()).unwrap_or(false));
    out
}
