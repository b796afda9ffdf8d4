//! The dual-number double `g[ε] = g ⊕ gε`, `ε² = 0`.
//!
//! `g*` is identified with `gε` through the invariant form, so the pairing is
//! `⟨a + bε, c + dε⟩ = ⟨a, d⟩ + ⟨b, c⟩`. Lagrangian subalgebras of `g[ε]`
//! correspond to pairs `(n, B)` of a subalgebra and a skew 2-cocycle.
//!
//! Sign dictionary, fixed by RREF comparison in the tests:
//!
//! * `pair_to_lagrangian` of the coboundary `B(x, y) = ⟨h, [x, y]⟩` on
//!   `h ⊕ g_N` contains `(1 + α(h)ε) E_α`, i.e. `build_lnb(.., +1)`.
//! * `lagrangian_from_bivector(U, x_{N,h})` contains `(1 − α(h)ε) E_α`, i.e.
//!   `build_lnb(.., −1)`, i.e. the coboundary of `−h`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, LieElement, Rational, Subspace};
use crate::error::{Error, Result};
use crate::linalg;
use crate::reductive::{
    complement_from_subset, is_reductive, regularity_violation, root_subspace, subalgebra_from_subset, CartanElement,
    RootSubset,
};
use crate::tensor::{contract_first_leg, Tensor2};

/// `a + bε`
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualElement {
    pub a: LieElement,
    pub b: LieElement,
}

impl DualElement {
    pub fn new(a: LieElement, b: LieElement) -> Self {
        DualElement { a, b }
    }

    pub fn pure(a: LieElement) -> Self {
        DualElement { a, b: LieElement::zero() }
    }

    pub fn eps(b: LieElement) -> Self {
        DualElement { a: LieElement::zero(), b }
    }

    /// Coordinates in the `2·dim` ambient, `g` first.
    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = self.a.to_dense(dim);
        v.extend(self.b.to_dense(dim));
        v
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        let dim = v.len() / 2;
        DualElement { a: LieElement::from_dense(&v[..dim]), b: LieElement::from_dense(&v[dim..]) }
    }

    fn check(&self, g: &LieAlgebra) -> Result<()> {
        g.check_element(&self.a)?;
        g.check_element(&self.b)
    }
}

pub fn dual_form(g: &LieAlgebra, x: &DualElement, y: &DualElement) -> Result<Rational> {
    x.check(g)?;
    y.check(g)?;
    Ok(dual_form_unchecked(g, x, y))
}

fn dual_form_unchecked(g: &LieAlgebra, x: &DualElement, y: &DualElement) -> Rational {
    g.form_unchecked(&x.a, &y.b) + g.form_unchecked(&x.b, &y.a)
}

/// `[a + bε, c + dε] = [a, c] + ([a, d] + [b, c])ε`
pub fn dual_bracket(g: &LieAlgebra, x: &DualElement, y: &DualElement) -> Result<DualElement> {
    x.check(g)?;
    y.check(g)?;
    Ok(dual_bracket_unchecked(g, x, y))
}

fn dual_bracket_unchecked(g: &LieAlgebra, x: &DualElement, y: &DualElement) -> DualElement {
    let a = g.bracket_unchecked(&x.a, &y.a);
    let b = g.bracket_unchecked(&x.a, &y.b).add(&g.bracket_unchecked(&x.b, &y.a));
    DualElement { a, b }
}

/// A subspace of `g[ε]` in canonical RREF, `g` columns before `ε` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSubspace {
    dim: usize,
    space: Subspace,
}

impl DualSubspace {
    pub fn span(dim: usize, elements: &[DualElement]) -> Self {
        let rows = elements.iter().map(|e| e.to_dense(dim)).collect();
        let space = Subspace::from_rows(2 * dim, rows).expect("dense rows have ambient width");
        DualSubspace { dim, space }
    }

    pub fn from_rows(dim: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Ok(DualSubspace { dim, space: Subspace::from_rows(2 * dim, rows)? })
    }

    /// `s ⊂ g` embedded with zero `ε`-part.
    pub fn from_g(s: &Subspace) -> Self {
        let dim = s.ambient_dim();
        DualSubspace::span(dim, &s.basis().into_iter().map(DualElement::pure).collect::<Vec<_>>())
    }

    /// `sε`
    pub fn from_eps(s: &Subspace) -> Self {
        let dim = s.ambient_dim();
        DualSubspace::span(dim, &s.basis().into_iter().map(DualElement::eps).collect::<Vec<_>>())
    }

    pub fn sum(&self, other: &DualSubspace) -> Result<Self> {
        Ok(DualSubspace { dim: self.dim, space: self.space.sum(&other.space)? })
    }

    /// Dimension of `g`; the ambient has twice this.
    pub fn g_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        self.space.rows()
    }

    pub fn basis(&self) -> Vec<DualElement> {
        self.space.rows().iter().map(|r| DualElement::from_dense(r)).collect()
    }

    pub fn contains(&self, x: &DualElement) -> bool {
        let ok = |e: &LieElement| e.max_index().is_none_or(|m| m < self.dim);
        ok(&x.a) && ok(&x.b) && self.space.contains(&x.to_dense(self.dim))
    }

    /// Image under `a + bε ↦ a`.
    pub fn g_projection(&self) -> Subspace {
        let rows = self.space.rows().iter().map(|r| r[..self.dim].to_vec()).collect();
        Subspace::from_rows(self.dim, rows).expect("width checked")
    }

    /// `l ∩ g`, as a subspace of `g`.
    pub fn g_intersection(&self) -> Subspace {
        let g = DualSubspace::from_g(&Subspace::full(self.dim));
        let both = self.space.intersect(&g.space).expect("same ambient");
        Subspace::from_rows(self.dim, both.rows().iter().map(|r| r[..self.dim].to_vec()).collect())
            .expect("width checked")
    }

    /// `{b : bε ∈ l}`
    pub fn eps_intersection(&self) -> Subspace {
        // RREF puts every row with an ε-pivot after the rows with g-pivots,
        // and those rows span exactly l ∩ gε.
        let rows = self
            .space
            .rows()
            .iter()
            .zip(self.space.pivots())
            .filter(|(_, &p)| p >= self.dim)
            .map(|(r, _)| r[self.dim..].to_vec())
            .collect();
        Subspace::from_rows(self.dim, rows).expect("width checked")
    }
}

/// The three independent ingredients of "Lagrangian subalgebra".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LagrangianVerdict {
    pub isotropic: bool,
    pub dimension_ok: bool,
    pub subalgebra: bool,
}

impl LagrangianVerdict {
    pub fn is_lagrangian(&self) -> bool {
        self.isotropic && self.dimension_ok
    }

    pub fn all(&self) -> bool {
        self.isotropic && self.dimension_ok && self.subalgebra
    }
}

pub fn is_lagrangian_subalgebra(g: &LieAlgebra, l: &DualSubspace) -> Result<LagrangianVerdict> {
    if l.dim != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: l.dim });
    }
    let basis = l.basis();
    let mut isotropic = true;
    let mut subalgebra = true;
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            if isotropic && !dual_form_unchecked(g, x, y).is_zero() {
                isotropic = false;
            }
            if subalgebra && !l.contains(&dual_bracket_unchecked(g, x, y)) {
                subalgebra = false;
            }
        }
    }
    Ok(LagrangianVerdict { isotropic, dimension_ok: l.dim() == g.dim(), subalgebra })
}

/// `(n, B)` with `B` given on the RREF basis of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraPair {
    n: Subspace,
    b: Vec<Vec<Rational>>,
}

impl SubalgebraPair {
    /// Validates closure of `n`, skewness of `B`, and the cocycle identity.
    pub fn new(g: &LieAlgebra, n: Subspace, b: Vec<Vec<Rational>>) -> Result<Self> {
        let k = n.dim();
        if b.len() != k || b.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, got: b.len() });
        }
        if !n.is_subalgebra(g)? {
            return Err(Error::Precondition("n is not a subalgebra".into()));
        }
        for i in 0..k {
            for j in 0..=i {
                if b[i][j] != -b[j][i].clone() {
                    return Err(Error::Precondition(format!("B is not skew at ({i}, {j})")));
                }
            }
        }
        let p = SubalgebraPair { n, b };
        if let Some((i, j, l)) = p.cocycle_violation(g) {
            return Err(Error::Precondition(format!("B is not a 2-cocycle on basis triple ({i}, {j}, {l})")));
        }
        Ok(p)
    }

    /// `B(x, y) = ⟨h, [x, y]⟩`; `h` may be any element of `g`.
    pub fn coboundary(g: &LieAlgebra, n: Subspace, h: &LieElement) -> Result<Self> {
        g.check_element(h)?;
        let basis = n.basis();
        let b = basis
            .iter()
            .map(|x| basis.iter().map(|y| g.form_unchecked(h, &g.bracket_unchecked(x, y))).collect())
            .collect();
        Self::new(g, n, b)
    }

    pub fn zero(g: &LieAlgebra, n: Subspace) -> Result<Self> {
        let k = n.dim();
        Self::new(g, n, vec![vec![Rational::zero(); k]; k])
    }

    pub fn n(&self) -> &Subspace {
        &self.n
    }

    /// The ordered basis `B` refers to.
    pub fn basis(&self) -> Vec<LieElement> {
        self.n.basis()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.b
    }

    /// `B(x, y)` for `x, y ∈ n`; `None` if either lies outside `n`.
    pub fn eval(&self, g: &LieAlgebra, x: &LieElement, y: &LieElement) -> Option<Rational> {
        let cx = self.n.coordinates(&x.to_dense(g.dim()))?;
        let cy = self.n.coordinates(&y.to_dense(g.dim()))?;
        Some(self.eval_coords(&cx, &cy))
    }

    fn eval_coords(&self, cx: &[Rational], cy: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, xi) in cx.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            s += xi * linalg::dot(&self.b[i], cy);
        }
        s
    }

    /// `B([x,y],z) + B([y,z],x) + B([z,x],y)` on basis triples.
    fn cocycle_violation(&self, g: &LieAlgebra) -> Option<(usize, usize, usize)> {
        let basis = self.n.basis();
        let k = basis.len();
        let unit = |i: usize| -> Vec<Rational> {
            (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
        };
        let coords = |x: &LieElement| self.n.coordinates(&x.to_dense(g.dim())).expect("n is closed");
        let br: Vec<Vec<Vec<Rational>>> =
            (0..k).map(|i| (0..k).map(|j| coords(&g.bracket_unchecked(&basis[i], &basis[j]))).collect()).collect();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    let s = self.eval_coords(&br[i][j], &unit(l))
                        + self.eval_coords(&br[j][l], &unit(i))
                        + self.eval_coords(&br[l][i], &unit(j));
                    if !s.is_zero() {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }

    /// `Ker B = {x ∈ n : B(x, ·) = 0}`
    pub fn kernel(&self, g: &LieAlgebra) -> Subspace {
        let basis = self.n.basis();
        let rows = linalg::nullspace(&self.b, self.b.len())
            .into_iter()
            .map(|c| {
                let mut x = LieElement::zero();
                for (ci, e) in c.iter().zip(&basis) {
                    x.axpy(ci, e);
                }
                x
            })
            .collect::<Vec<_>>();
        Subspace::span(g.dim(), &rows)
    }
}

/// `l(n, B) = {a + bε : a ∈ n, ⟨b, y⟩ = B(a, y) ∀y ∈ n}`.
///
/// Each `b_i` is the solution with free variables zero; other choices differ
/// by `n^⊥` and give the same `l`.
pub fn pair_to_lagrangian(g: &LieAlgebra, p: &SubalgebraPair) -> Result<DualSubspace> {
    let dim = g.dim();
    let basis = p.basis();
    // Row j: the functional b ↦ ⟨b, a_j⟩.
    let system: Vec<Vec<Rational>> =
        basis.iter().map(|a| (0..dim).map(|k| g.form_unchecked(&LieElement::basis(k), a)).collect()).collect();
    let mut elems = Vec::with_capacity(dim);
    for (i, a) in basis.iter().enumerate() {
        let b = linalg::solve(&system, &p.b[i], dim)
            .ok_or_else(|| Error::Precondition("graph system has no solution".into()))?;
        elems.push(DualElement::new(a.clone(), LieElement::from_dense(&b)));
    }
    elems.extend(p.n.perp(g)?.basis().into_iter().map(DualElement::eps));
    Ok(DualSubspace::span(dim, &elems))
}

/// Inverse of [`pair_to_lagrangian`]; verifies the round trip.
pub fn lagrangian_to_pair(g: &LieAlgebra, l: &DualSubspace) -> Result<SubalgebraPair> {
    let v = is_lagrangian_subalgebra(g, l)?;
    if !v.all() {
        return Err(Error::Precondition(format!("not a Lagrangian subalgebra: {v:?}")));
    }
    let dim = g.dim();
    let n = l.g_projection();
    if l.eps_intersection() != n.perp(g)? {
        return Err(Error::InvariantFailure("l ∩ gε differs from n^⊥ε".into()));
    }
    // Rows with a g-pivot restrict to the RREF basis of n.
    let graph: Vec<DualElement> = l
        .rows()
        .iter()
        .zip(l.space.pivots())
        .filter(|(_, &piv)| piv < dim)
        .map(|(r, _)| DualElement::from_dense(r))
        .collect();
    debug_assert!(graph.iter().zip(n.basis()).all(|(x, a)| x.a == a));
    let b = graph.iter().map(|x| graph.iter().map(|y| g.form_unchecked(&x.b, &y.a)).collect()).collect();
    let p = SubalgebraPair::new(g, n, b)?;
    if &pair_to_lagrangian(g, &p)? != l {
        return Err(Error::InvariantFailure("pair_to_lagrangian does not invert lagrangian_to_pair".into()));
    }
    Ok(p)
}

/// Why a pair is not of the form `(h ⊕ g_N, ⟨h, [·,·]⟩)` with `h` regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairRejection {
    /// `n` is not spanned by the Cartan subalgebra and root vectors.
    NotRootGraded,
    /// `N` is not symmetric and closed.
    NotReductive(String),
    /// `U ⊄ N`.
    UNotInN,
    /// `B(E_α, E_β) ≠ 0` although `α + β ≠ 0`.
    RootPairNonzero(usize, usize),
    /// `B` has a component outside the coboundaries.
    NotCoboundary,
    /// The recovered `h` is not `(N, U)`-regular at this root.
    NotRegular(usize),
    /// `Ker B ≠ u`.
    KernelMismatch,
}

impl fmt::Display for PairRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairRejection::NotRootGraded => write!(f, "n is not a sum of the Cartan and root spaces"),
            PairRejection::NotReductive(w) => write!(f, "N is not reductive: {w}"),
            PairRejection::UNotInN => write!(f, "U is not contained in N"),
            PairRejection::RootPairNonzero(a, b) => write!(f, "B(E_#{a}, E_#{b}) is nonzero with α+β ≠ 0"),
            PairRejection::NotCoboundary => write!(f, "B is not a coboundary ⟨h, [x, y]⟩"),
            PairRejection::NotRegular(a) => write!(f, "h is not (N,U)-regular at root #{a}"),
            PairRejection::KernelMismatch => write!(f, "Ker B differs from u"),
        }
    }
}

/// Recovers `(N, h)` from a pair whose `n` contains the Cartan subalgebra.
///
/// `h` is normalized to be orthogonal to `z(n) = {h : α(h) = 0, α ∈ N}`,
/// since `B` only sees `h` modulo `z(n)`.
pub fn classify_pair(
    g: &LieAlgebra,
    p: &SubalgebraPair,
    u: &RootSubset,
) -> Result<std::result::Result<(RootSubset, CartanElement), PairRejection>> {
    if !is_reductive(g, u) {
        return Err(Error::Precondition(format!("U = {} is not reductive", u.display(g))));
    }
    if !g.cartan().is_subspace_of(p.n()) {
        return Err(Error::Precondition("n does not contain the Cartan subalgebra".into()));
    }
    let n_roots = RootSubset::new(g, (0..g.num_roots()).filter(|&r| p.n().contains_element(&g.root_vector(r))))?;
    if &root_subspace(g, &n_roots, true) != p.n() {
        return Ok(Err(PairRejection::NotRootGraded));
    }
    if let Some(v) = crate::reductive::reductivity_violation(g, &n_roots) {
        return Ok(Err(PairRejection::NotReductive(v.to_string())));
    }
    if !u.is_subset_of(&n_roots) {
        return Ok(Err(PairRejection::UNotInN));
    }
    for &a in n_roots.roots() {
        for &b in n_roots.roots() {
            if a < b && b != g.neg_root(a) {
                let v = p.eval(g, &g.root_vector(a), &g.root_vector(b)).expect("root vectors lie in n");
                if !v.is_zero() {
                    return Ok(Err(PairRejection::RootPairNonzero(a, b)));
                }
            }
        }
    }
    let rank = g.rank();
    let basis = p.basis();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let br = g.bracket_unchecked(&basis[i], &basis[j]);
            rows.push((0..rank).map(|k| g.form_unchecked(&LieElement::basis(k), &br)).collect());
            rhs.push(p.b[i][j].clone());
        }
    }
    let functionals: Vec<Vec<Rational>> = n_roots.roots().iter().map(|&a| g.root_functional(a)).collect();
    for z in linalg::nullspace(&functionals, rank) {
        let z = LieElement::from_dense(&z);
        rows.push((0..rank).map(|k| g.form_unchecked(&LieElement::basis(k), &z)).collect());
        rhs.push(Rational::zero());
    }
    let Some(coords) = linalg::solve(&rows, &rhs, rank) else {
        return Ok(Err(PairRejection::NotCoboundary));
    };
    let h = CartanElement::from_coords(&coords);
    if let Some(bad) = regularity_violation(g, &h, &n_roots, u) {
        return Ok(Err(PairRejection::NotRegular(bad)));
    }
    if p.kernel(g) != subalgebra_from_subset(g, u)? {
        return Ok(Err(PairRejection::KernelMismatch));
    }
    Ok(Ok((n_roots, h)))
}

/// `u ⊕ (⊕_{α∉N} εg_α) ⊕ (⊕_{α∈N∖U} (1 + sign·α(h)ε) g_α)`
pub fn build_lnb(g: &LieAlgebra, n: &RootSubset, h: &CartanElement, u: &RootSubset, sign: i8) -> Result<DualSubspace> {
    if sign != 1 && sign != -1 {
        return Err(Error::Domain(format!("sign must be ±1, got {sign}")));
    }
    if !is_reductive(g, n) {
        return Err(Error::Precondition(format!("N = {} is not reductive", n.display(g))));
    }
    if !u.is_subset_of(n) {
        return Err(Error::Precondition("U is not contained in N".into()));
    }
    let us = subalgebra_from_subset(g, u)?;
    if let Some(bad) = regularity_violation(g, h, n, u) {
        return Err(Error::RegularityViolated(g.root(bad).to_string()));
    }
    let s = Rational::from_integer(sign.into());
    let mut elems: Vec<DualElement> = us.basis().into_iter().map(DualElement::pure).collect();
    for r in 0..g.num_roots() {
        let e = g.root_vector(r);
        if !n.contains(r) {
            elems.push(DualElement::eps(e));
        } else if !u.contains(r) {
            let c = &s * h.value(g, r);
            elems.push(DualElement::new(e.clone(), e.scaled(&c)));
        }
    }
    Ok(DualSubspace::span(g.dim(), &elems))
}

/// Drinfeld's subspace at the base point: `u + span{(E_α ⊗ 1)(b) + E_α ε : α ∈ R ∖ U}`.
pub fn lagrangian_from_bivector(g: &LieAlgebra, u: &RootSubset, b: &Tensor2) -> Result<DualSubspace> {
    b.check_ambient(g)?;
    let ms = complement_from_subset(g, u)?;
    if !b.is_skew() {
        return Err(Error::Domain("bivector is not skew".into()));
    }
    if !b.supported_on(&ms) {
        return Err(Error::Domain("bivector is not supported on m⊗m".into()));
    }
    let mut elems: Vec<DualElement> =
        subalgebra_from_subset(g, u)?.basis().into_iter().map(DualElement::pure).collect();
    for r in (0..g.num_roots()).filter(|&r| !u.contains(r)) {
        let e = g.root_vector(r);
        elems.push(DualElement::new(contract_first_leg(g, &e, b), e));
    }
    Ok(DualSubspace::span(g.dim(), &elems))
}

pub fn is_poisson_homogeneous(g: &LieAlgebra, u: &RootSubset, b: &Tensor2) -> Result<bool> {
    let l = lagrangian_from_bivector(g, u, b)?;
    Ok(is_lagrangian_subalgebra(g, &l)?.subalgebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qf};
    use crate::reductive::{enumerate_reductive, regular_element};
    use crate::rmatrix::{build_x, CoefficientFunction};

    fn a(rank: usize) -> LieAlgebra {
        LieAlgebra::build("A", rank).unwrap()
    }

    #[test]
    fn form_and_bracket() {
        let g = a(1);
        let (h, e, f) = (LieElement::basis(0), g.root_vector(0), g.root_vector(1));
        assert!(dual_form(&g, &DualElement::pure(e.clone()), &DualElement::pure(f.clone())).unwrap().is_zero());
        assert_eq!(dual_form(&g, &DualElement::pure(e.clone()), &DualElement::eps(f.clone())).unwrap(), q(1));
        assert!(dual_bracket(&g, &DualElement::eps(h.clone()), &DualElement::eps(e.clone())).unwrap().a.is_zero());
        assert!(dual_bracket(&g, &DualElement::eps(h.clone()), &DualElement::eps(e.clone())).unwrap().b.is_zero());
        let x = dual_bracket(&g, &DualElement::pure(h), &DualElement::eps(e.clone())).unwrap();
        assert_eq!(x, DualElement::eps(e.scaled(&q(2))));
        assert!(dual_form(&g, &DualElement::pure(LieElement::basis(7)), &DualElement::pure(e)).is_err());
    }

    #[test]
    fn trivial_lagrangians() {
        let g = a(2);
        let full = Subspace::full(g.dim());
        for l in [DualSubspace::from_g(&full), DualSubspace::from_eps(&full)] {
            assert!(is_lagrangian_subalgebra(&g, &l).unwrap().all());
        }
        let p = lagrangian_to_pair(&g, &DualSubspace::from_g(&full)).unwrap();
        assert_eq!(p.n(), &full);
        assert!(p.matrix().iter().flatten().all(|v| v.is_zero()));
        let p = lagrangian_to_pair(&g, &DualSubspace::from_eps(&full)).unwrap();
        assert_eq!(p.n().dim(), 0);
    }

    #[test]
    fn mixed_span_verdict() {
        let g = a(1);
        let (h, e) = (LieElement::basis(0), g.root_vector(0));
        let l =
            DualSubspace::span(3, &[DualElement::pure(e.clone()), DualElement::eps(e.clone()), DualElement::pure(h)]);
        let v = is_lagrangian_subalgebra(&g, &l).unwrap();
        // ⟨E, Eε⟩ = ⟨H, Eε⟩ = 0; [H, E] = 2E, [H, Eε] = 2Eε.
        assert_eq!(v, LagrangianVerdict { isotropic: true, dimension_ok: true, subalgebra: true });
    }

    #[test]
    fn pair_examples_sl2() {
        let g = a(1);
        let full = Subspace::full(3);
        assert_eq!(
            pair_to_lagrangian(&g, &SubalgebraPair::zero(&g, full.clone()).unwrap()).unwrap(),
            DualSubspace::from_g(&full)
        );

        let cartan = g.cartan();
        let l = pair_to_lagrangian(&g, &SubalgebraPair::zero(&g, cartan.clone()).unwrap()).unwrap();
        let expect = DualSubspace::from_g(&cartan).sum(&DualSubspace::from_eps(&cartan.perp(&g).unwrap())).unwrap();
        assert_eq!(l, expect);

        let h0 = CartanElement::from_diagonal(&g, &[q(1), q(-1)]).unwrap();
        let p = SubalgebraPair::coboundary(&g, full, h0.element()).unwrap();
        let l = pair_to_lagrangian(&g, &p).unwrap();
        let (e, f) = (g.root_vector(0), g.root_vector(1));
        let hand = DualSubspace::span(
            3,
            &[
                DualElement::pure(LieElement::basis(0)),
                DualElement::new(e.clone(), e.scaled(&q(2))),
                DualElement::new(f.clone(), f.scaled(&q(-2))),
            ],
        );
        assert_eq!(l, hand);
        let all = RootSubset::all(&g);
        assert_eq!(l, build_lnb(&g, &all, &h0, &RootSubset::empty(), 1).unwrap());
        assert_eq!(l.g_intersection(), g.cartan());

        let (n, h) = classify_pair(&g, &p, &RootSubset::empty()).unwrap().unwrap();
        assert_eq!(n, all);
        assert_eq!(h.value(&g, 0), q(2));
        assert_eq!(p.kernel(&g), g.cartan());
        let (n, h) =
            classify_pair(&g, &SubalgebraPair::zero(&g, g.cartan()).unwrap(), &RootSubset::empty()).unwrap().unwrap();
        assert!(n.is_empty());
        assert_eq!(h, CartanElement::zero());
    }

    #[test]
    fn perp_shift_does_not_change_l() {
        let g = a(2);
        let n = root_subspace(&g, &RootSubset::symmetric(&g, [0]).unwrap(), true);
        let h = CartanElement::from_diagonal(&g, &[q(1), q(0), q(-1)]).unwrap();
        let p = SubalgebraPair::coboundary(&g, n.clone(), h.element()).unwrap();
        let l = pair_to_lagrangian(&g, &p).unwrap();
        let perp = n.perp(&g).unwrap().basis();
        let shifted: Vec<DualElement> = l
            .basis()
            .into_iter()
            .enumerate()
            .map(|(i, x)| DualElement::new(x.a.clone(), x.b.add(&perp[i % perp.len()])))
            .collect();
        assert_eq!(DualSubspace::span(g.dim(), &shifted), l);
    }

    #[test]
    fn pair_validation() {
        let g = a(1);
        let full = Subspace::full(3);
        let not_skew = vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(0)], vec![q(0), q(0), q(0)]];
        assert!(SubalgebraPair::new(&g, full.clone(), not_skew).is_err());
        let borel_plus_f = Subspace::span(3, &[g.root_vector(0), g.root_vector(1)]);
        assert!(SubalgebraPair::zero(&g, borel_plus_f).is_err());
        let b = vec![vec![q(0), q(1), q(0)], vec![q(-1), q(0), q(0)], vec![q(0), q(0), q(0)]];
        // [H,E]=2E, [E,F]=H, [F,H]=2F: B(2E,F) + B(H,H) + B(2F,E) = 0 + 0 + 0.
        assert!(SubalgebraPair::new(&g, full, b).is_ok());
    }

    #[test]
    fn classify_rejects_root_pair_value() {
        let g = a(2);
        let full = Subspace::full(8);
        let h = CartanElement::from_diagonal(&g, &[q(2), q(0), q(-2)]).unwrap();
        // Adding ⟨E_{-α-β}, [x, y]⟩ gives B(E_α, E_β) ≠ 0 with α+β ≠ 0.
        let a12 = g.root_index(&crate::algebra::Root::from_simple_coords(&[1, 1]).unwrap()).unwrap();
        let z = h.element().add(&g.root_vector(g.neg_root(a12)));
        let p = SubalgebraPair::coboundary(&g, full, &z).unwrap();
        let r = classify_pair(&g, &p, &RootSubset::empty()).unwrap().unwrap_err();
        assert!(matches!(r, PairRejection::RootPairNonzero(..)), "{r}");
        let borel = Subspace::span(8, &[g.root_vector(0)]).sum(&g.cartan()).unwrap();
        let p = SubalgebraPair::zero(&g, borel).unwrap();
        assert!(matches!(classify_pair(&g, &p, &RootSubset::empty()).unwrap(), Err(PairRejection::NotReductive(_))));
        let p = SubalgebraPair::zero(&g, Subspace::span(8, &[g.root_vector(0)])).unwrap();
        assert!(classify_pair(&g, &p, &RootSubset::empty()).is_err());
    }

    #[test]
    fn sign_dictionary() {
        for rank in [1, 2] {
            let g = a(rank);
            for u in enumerate_reductive(&g, &RootSubset::empty()).unwrap() {
                for n in enumerate_reductive(&g, &u).unwrap() {
                    let h = regular_element(&g, &n, &u).unwrap().unwrap();
                    let x = build_x(&g, &n, &h, &u).unwrap();
                    let lb = lagrangian_from_bivector(&g, &u, &x.tensor).unwrap();
                    let lm = build_lnb(&g, &n, &h, &u, -1).unwrap();
                    let lp = build_lnb(&g, &n, &h.neg(), &u, 1).unwrap();
                    let pair = SubalgebraPair::coboundary(&g, root_subspace(&g, &n, true), h.neg().element()).unwrap();
                    let lc = pair_to_lagrangian(&g, &pair).unwrap();
                    assert_eq!(lb, lm);
                    assert_eq!(lm, lp);
                    assert_eq!(lm, lc);
                    assert!(is_lagrangian_subalgebra(&g, &lm).unwrap().all());
                    assert_eq!(lm.g_intersection(), subalgebra_from_subset(&g, &u).unwrap());
                    let (n2, h2) = classify_pair(&g, &pair, &u).unwrap().unwrap();
                    assert_eq!(n2, n);
                    for r in n.minus(&u) {
                        assert_eq!(h2.value(&g, r), -h.value(&g, r));
                    }
                }
            }
        }
    }

    #[test]
    fn bivector_examples() {
        let g = a(2);
        let u = RootSubset::empty();
        let zero = Tensor2::zero(8);
        let l = lagrangian_from_bivector(&g, &u, &zero).unwrap();
        let expect =
            DualSubspace::from_g(&g.cartan()).sum(&DualSubspace::from_eps(&g.cartan().perp(&g).unwrap())).unwrap();
        assert_eq!(l, expect);
        assert!(is_poisson_homogeneous(&g, &u, &zero).unwrap());

        let bad = CoefficientFunction::new(
            g.positive_roots().flat_map(|r| [(r, q(1)), (g.neg_root(r), q(-1))]).collect::<Vec<_>>(),
        );
        let lb = lagrangian_from_bivector(&g, &u, &bad.to_tensor(&g)).unwrap();
        let v = is_lagrangian_subalgebra(&g, &lb).unwrap();
        assert_eq!(v, LagrangianVerdict { isotropic: true, dimension_ok: true, subalgebra: false });
        assert!(!is_poisson_homogeneous(&g, &u, &bad.to_tensor(&g)).unwrap());

        let sym = Tensor2::from_entries(8, [((3, 6), qf(1, 2)), ((6, 3), qf(1, 2))]).unwrap();
        assert!(matches!(lagrangian_from_bivector(&g, &u, &sym), Err(Error::Domain(_))));
        let cartan_leg = Tensor2::wedge(8, &LieElement::basis(0), &g.root_vector(0));
        assert!(matches!(lagrangian_from_bivector(&g, &u, &cartan_leg), Err(Error::Domain(_))));
    }

    #[test]
    fn build_lnb_trivial_middle() {
        let g = a(2);
        let h = CartanElement::from_diagonal(&g, &[q(5), q(-1), q(-4)]).unwrap();
        let u = RootSubset::empty();
        let l = build_lnb(&g, &u, &CartanElement::zero(), &u, 1).unwrap();
        let expect =
            DualSubspace::from_g(&g.cartan()).sum(&DualSubspace::from_eps(&g.cartan().perp(&g).unwrap())).unwrap();
        assert_eq!(l, expect);
        assert_eq!(build_lnb(&g, &u, &h, &u, 1).unwrap(), expect);
        let all = RootSubset::all(&g);
        assert!(build_lnb(&g, &all, &h, &u, 1).is_ok());
        let flat = CartanElement::from_diagonal(&g, &[q(1), q(1), q(-2)]).unwrap();
        assert!(matches!(build_lnb(&g, &all, &flat, &u, 1), Err(Error::RegularityViolated(_))));
        assert!(build_lnb(&g, &u, &CartanElement::zero(), &u, 0).is_err());
    }
}
