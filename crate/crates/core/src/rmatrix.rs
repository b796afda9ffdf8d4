//! Classification of the moduli set `M_Ω` for `u = h ⊕ ⊕_{α∈U} g_α` at `Ω = 0`.
//!
//! Every membership question is answered twice: once structurally, from the
//! coefficient function `α ↦ x_α` of a diagonal-form tensor
//! `Σ x_α E_α ⊗ E_{-α}`, and once at the tensor level (skewness, support,
//! `ad(u)`-invariance, and the leg projection of `CYB(x)` onto `m⊗m⊗m` along
//! `u`). The two must agree; a disagreement is reported as
//! [`Error::OracleDisagreement`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, Projection, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::reductive::{
    complement_from_subset, is_reductive, reductivity_violation, regularity_violation, subalgebra_from_subset,
    CartanElement, RootSubset,
};
use crate::tensor::{cyb, is_invariant, project_legs3, Tensor2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub n: RootSubset,
    pub h: CartanElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixCandidate {
    pub tensor: Tensor2,
    pub u: RootSubset,
    /// Symmetric invariant part; zero in the triangular case.
    pub omega: Tensor2,
    pub provenance: Option<Provenance>,
}

impl RMatrixCandidate {
    pub fn triangular(tensor: Tensor2, u: RootSubset) -> Self {
        let omega = Tensor2::zero(tensor.dim());
        RMatrixCandidate { tensor, u, omega, provenance: None }
    }
}

/// `α ↦ x_α` on `R ∖ U`; absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientFunction {
    values: BTreeMap<usize, Rational>,
}

impl CoefficientFunction {
    pub fn new(values: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        CoefficientFunction { values: values.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn get(&self, r: usize) -> Rational {
        self.values.get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(&r, v)| (r, v))
    }

    /// `Σ x_α E_α ⊗ E_{-α}`
    pub fn to_tensor(&self, g: &LieAlgebra) -> Tensor2 {
        let mut t = Tensor2::zero(g.dim());
        for (&r, v) in &self.values {
            t.add_term((g.root_basis_index(r), g.root_basis_index(g.neg_root(r))), v);
        }
        t
    }

    /// Reads off `x_α` when `t` has the diagonal form `Σ x_α E_α ⊗ E_{-α}`
    /// with `α ∈ R ∖ U`; `None` for any other support.
    pub fn from_tensor(g: &LieAlgebra, t: &Tensor2, u: &RootSubset) -> Option<Self> {
        let mut values = BTreeMap::new();
        for ((i, j), v) in t.iter() {
            let a = g.basis_root(i)?;
            let b = g.basis_root(j)?;
            if g.neg_root(a) != b || u.contains(a) {
                return None;
            }
            values.insert(a, v.clone());
        }
        Some(CoefficientFunction { values })
    }
}

/// `x_{N,h} = Σ_{α∈N∖U} 1/α(h) E_α ⊗ E_{-α}`
pub fn build_x(g: &LieAlgebra, n: &RootSubset, h: &CartanElement, u: &RootSubset) -> Result<RMatrixCandidate> {
    for (s, name) in [(u, "U"), (n, "N")] {
        if !is_reductive(g, s) {
            return Err(Error::Precondition(format!("{name} = {} is not reductive", s.display(g))));
        }
    }
    if !u.is_subset_of(n) {
        return Err(Error::Precondition("U is not contained in N".into()));
    }
    if let Some(bad) = regularity_violation(g, h, n, u) {
        return Err(Error::RegularityViolated(g.root(bad).to_string()));
    }
    let f = CoefficientFunction::new(n.minus(u).into_iter().map(|a| (a, h.value(g, a).recip())));
    Ok(RMatrixCandidate {
        tensor: f.to_tensor(g),
        u: u.clone(),
        omega: Tensor2::zero(g.dim()),
        provenance: Some(Provenance { n: n.clone(), h: h.clone() }),
    })
}

/// Which of conditions (d), (e), (f) fails, with witnessing roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Coefficient on a root of `U`, or a tensor not in diagonal form.
    OutsideDomain(usize),
    /// (d): `x_{-α} ≠ -x_α`.
    NotSkew(usize),
    /// (e): `α, β ∈ R∖U`, `γ ∈ U`, `α+β+γ = 0`, `x_α + x_β ≠ 0`.
    NotInvariant(usize, usize, usize),
    /// `U ∪ supp(x)` is not reductive.
    SupportNotReductive(String),
    /// (f): `x_α x_β + x_β x_γ + x_γ x_α ≠ 0`.
    QuadraticViolated(usize, usize, usize),
    /// (f), seen through the linear system `α(h) = 1/x_α`.
    NoCartanSolution,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::OutsideDomain(a) => write!(f, "coefficient outside R∖U at root #{a}"),
            Rejection::NotSkew(a) => write!(f, "condition (d) fails at root #{a}"),
            Rejection::NotInvariant(a, b, c) => write!(f, "condition (e) fails on roots #{a}, #{b} with #{c} in U"),
            Rejection::SupportNotReductive(w) => write!(f, "support ∪ U is not reductive: {w}"),
            Rejection::QuadraticViolated(a, b, c) => write!(f, "condition (f) fails on roots #{a}, #{b}, #{c}"),
            Rejection::NoCartanSolution => write!(f, "condition (f): no Cartan element with α(h) = 1/x_α"),
        }
    }
}

fn complement_roots(g: &LieAlgebra, u: &RootSubset) -> Vec<usize> {
    (0..g.num_roots()).filter(|&r| !u.contains(r)).collect()
}

fn check_d(g: &LieAlgebra, f: &CoefficientFunction, u: &RootSubset) -> Option<Rejection> {
    if let Some(a) = f.support().find(|&a| u.contains(a)) {
        return Some(Rejection::OutsideDomain(a));
    }
    complement_roots(g, u).into_iter().find(|&a| f.get(g.neg_root(a)) != -f.get(a)).map(Rejection::NotSkew)
}

fn check_e(g: &LieAlgebra, f: &CoefficientFunction, u: &RootSubset) -> Option<Rejection> {
    let m = complement_roots(g, u);
    for &a in &m {
        for &b in &m {
            for &c in u.roots() {
                if g.sums_to_zero(a, b, c) && !(f.get(a) + f.get(b)).is_zero() {
                    return Some(Rejection::NotInvariant(a, b, c));
                }
            }
        }
    }
    None
}

fn check_f(g: &LieAlgebra, f: &CoefficientFunction, u: &RootSubset) -> Option<Rejection> {
    let m = complement_roots(g, u);
    for &a in &m {
        for &b in &m {
            let Some(s) = g.root_sum(a, b) else { continue };
            let c = g.neg_root(s);
            if u.contains(c) {
                continue;
            }
            let (xa, xb, xc) = (f.get(a), f.get(b), f.get(c));
            if !(&xa * &xb + &xb * &xc + &xc * &xa).is_zero() {
                return Some(Rejection::QuadraticViolated(a, b, c));
            }
        }
    }
    None
}

/// Structural test of `t ∈ (∧²m)^u`: diagonal form plus (d) and (e).
pub fn wedge2m_u_structural(g: &LieAlgebra, t: &Tensor2, u: &RootSubset) -> bool {
    match CoefficientFunction::from_tensor(g, t, u) {
        Some(f) => check_d(g, &f, u).is_none() && check_e(g, &f, u).is_none(),
        None => false,
    }
}

/// Tensor-level test of `t ∈ (∧²m)^u`: skew, both legs in `m`, `ad(u)`-invariant.
pub fn wedge2m_u_tensor(g: &LieAlgebra, t: &Tensor2, u: &RootSubset) -> Result<bool> {
    t.check_ambient(g)?;
    let us = subalgebra_from_subset(g, u)?;
    let ms = complement_from_subset(g, u)?;
    Ok(t.is_skew() && t.supported_on(&ms) && is_invariant(g, t, &us)?)
}

pub fn is_in_wedge2m_u(g: &LieAlgebra, t: &Tensor2, u: &RootSubset) -> Result<bool> {
    let s = wedge2m_u_structural(g, t, u);
    let l = wedge2m_u_tensor(g, t, u)?;
    if s != l {
        return Err(Error::OracleDisagreement(format!("(∧²m)^u membership: structural {s}, tensor-level {l}")));
    }
    Ok(s)
}

/// Both verdicts for `x ∈ M_Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomegaReport {
    /// Coefficient conditions (d), (e), (f); `None` when `Ω ≠ 0`.
    pub structural: Option<bool>,
    pub tensor_level: bool,
    /// `Ω ≠ 0`: the quotient `g^{⊗3} → ∧³(g/u)` is read as leg projection,
    /// which is only known to be the right notion at `Ω = 0`.
    pub omega_flagged: bool,
}

pub fn momega_structural(g: &LieAlgebra, t: &Tensor2, u: &RootSubset) -> bool {
    match CoefficientFunction::from_tensor(g, t, u) {
        Some(f) => check_d(g, &f, u).is_none() && check_e(g, &f, u).is_none() && check_f(g, &f, u).is_none(),
        None => false,
    }
}

/// `x - Ω/2 ∈ (∧²m)^u` and the projection of `CYB(x)` to `m⊗m⊗m` along `u`
/// vanishes.
pub fn momega_tensor(g: &LieAlgebra, c: &RMatrixCandidate) -> Result<bool> {
    let half = Rational::new(1.into(), 2.into());
    let skew = c.tensor.sub(&c.omega.scaled(&half));
    if !wedge2m_u_tensor(g, &skew, &c.u)? {
        return Ok(false);
    }
    let us = subalgebra_from_subset(g, &c.u)?;
    let ms = complement_from_subset(g, &c.u)?;
    let p = Projection::new(&ms, &us)?;
    Ok(project_legs3(&cyb(g, &c.tensor)?, &p).is_zero())
}

pub fn momega_report(g: &LieAlgebra, c: &RMatrixCandidate) -> Result<MomegaReport> {
    let omega_flagged = !c.omega.is_zero();
    let structural = (!omega_flagged).then(|| momega_structural(g, &c.tensor, &c.u));
    Ok(MomegaReport { structural, tensor_level: momega_tensor(g, c)?, omega_flagged })
}

/// `x ∈ M_Ω`, with the structural and tensor-level verdicts cross-checked.
pub fn is_in_momega(g: &LieAlgebra, c: &RMatrixCandidate) -> Result<bool> {
    let r = momega_report(g, c)?;
    match r.structural {
        Some(s) if s != r.tensor_level => {
            Err(Error::OracleDisagreement(format!("M_Ω membership: structural {s}, tensor-level {}", r.tensor_level)))
        }
        _ => Ok(r.tensor_level),
    }
}

/// Recovers `(N, h)` with `x_α = 1/α(h)` on `N ∖ U` and `x_α = 0` off `N`.
///
/// Outer error: `U` not reductive. Inner error: which condition fails.
pub fn classify_coefficients(
    g: &LieAlgebra,
    f: &CoefficientFunction,
    u: &RootSubset,
) -> Result<std::result::Result<(RootSubset, CartanElement), Rejection>> {
    if !is_reductive(g, u) {
        return Err(Error::Precondition(format!("U = {} is not reductive", u.display(g))));
    }
    if let Some(r) = check_d(g, f, u).or_else(|| check_e(g, f, u)) {
        return Ok(Err(r));
    }
    let n = RootSubset::new(g, u.roots().iter().copied().chain(f.support()))?;
    if let Some(v) = reductivity_violation(g, &n) {
        return Ok(Err(Rejection::SupportNotReductive(v.to_string())));
    }
    if let Some(r) = check_f(g, f, u) {
        return Ok(Err(r));
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &a in u.roots() {
        rows.push(g.root_functional(a));
        rhs.push(Rational::zero());
    }
    for (a, v) in f.iter() {
        rows.push(g.root_functional(a));
        rhs.push(v.recip());
    }
    let Some(coords) = linalg::solve(&rows, &rhs, g.rank()) else {
        return Ok(Err(Rejection::NoCartanSolution));
    };
    let h = CartanElement::from_coords(&coords);
    if let Some(bad) = regularity_violation(g, &h, &n, u) {
        return Err(Error::InvariantFailure(format!("recovered h is not regular at {}", g.root(bad))));
    }
    Ok(Ok((n, h)))
}

/// `α ↦ α(h)` on `N ∖ U`.
pub fn alpha_values(g: &LieAlgebra, n: &RootSubset, h: &CartanElement, u: &RootSubset) -> BTreeMap<usize, Rational> {
    n.minus(u).into_iter().map(|a| (a, h.value(g, a))).collect()
}

/// The grid used by the exhaustive desk-scale checks.
pub fn coefficient_grid() -> Vec<Rational> {
    let half = Rational::new(1.into(), 2.into());
    vec![-Rational::one(), -half.clone(), Rational::zero(), half, Rational::one()]
}

/// All diagonal-form skew coefficient functions on `R ∖ U` with one value per
/// positive root from `values`.
pub fn diagonal_family(g: &LieAlgebra, u: &RootSubset, values: &[Rational]) -> Vec<CoefficientFunction> {
    let pos: Vec<usize> = g.positive_roots().filter(|&r| !u.contains(r)).collect();
    let total = values.len().pow(pos.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut entries = Vec::new();
            for &r in &pos {
                let v = values[code % values.len()].clone();
                code /= values.len();
                entries.push((g.neg_root(r), -v.clone()));
                entries.push((r, v));
            }
            CoefficientFunction::new(entries)
        })
        .collect()
}
