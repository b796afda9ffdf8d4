//! Reductive root subsets and `(N, U)`-regular Cartan elements.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, LieElement, Rational, Root, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{self, q};

/// A set of roots, stored as sorted root indices of the ambient algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset {
    roots: Vec<usize>,
}

impl RootSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(g: &LieAlgebra, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut roots: Vec<usize> = roots.into_iter().collect();
        if let Some(&bad) = roots.iter().find(|&&r| r >= g.num_roots()) {
            return Err(Error::Domain(format!("root index {bad} out of range for {}", g.id())));
        }
        roots.sort_unstable();
        roots.dedup();
        Ok(RootSubset { roots })
    }

    pub fn all(g: &LieAlgebra) -> Self {
        RootSubset { roots: (0..g.num_roots()).collect() }
    }

    /// The given roots together with their negatives.
    pub fn symmetric(g: &LieAlgebra, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let base = Self::new(g, roots)?;
        Self::new(g, base.roots.iter().flat_map(|&r| [r, g.neg_root(r)]))
    }

    /// Parses roots given in simple-root coordinates.
    pub fn from_simple_coords(g: &LieAlgebra, coords: &[Vec<i64>]) -> Result<Self> {
        let mut idx = Vec::new();
        for (pos, c) in coords.iter().enumerate() {
            let r = (c.len() == g.rank())
                .then(|| Root::from_simple_coords(c))
                .flatten()
                .and_then(|r| g.root_index(&r))
                .ok_or_else(|| Error::Parse(format!("entry {pos}: {c:?} is not a root of {}", g.id())))?;
            idx.push(r);
        }
        Self::new(g, idx)
    }

    pub fn to_simple_coords(&self, g: &LieAlgebra) -> Vec<Vec<i64>> {
        self.roots.iter().map(|&r| g.root(r).simple_coords()).collect()
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn is_subset_of(&self, other: &RootSubset) -> bool {
        self.roots.iter().all(|&r| other.contains(r))
    }

    /// Roots of `self` not in `other`.
    pub fn minus(&self, other: &RootSubset) -> Vec<usize> {
        self.roots.iter().copied().filter(|&r| !other.contains(r)).collect()
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        let parts: Vec<String> = self.roots.iter().map(|&r| g.root(r).to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Why a subset fails to be reductive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotReductive {
    /// `α ∈ S` but `-α ∉ S`.
    NotSymmetric(usize),
    /// `α, β ∈ S`, `α + β ∈ R ∖ S`.
    NotClosed(usize, usize),
}

pub fn reductivity_violation(g: &LieAlgebra, s: &RootSubset) -> Option<NotReductive> {
    for &a in &s.roots {
        if !s.contains(g.neg_root(a)) {
            return Some(NotReductive::NotSymmetric(a));
        }
    }
    for &a in &s.roots {
        for &b in &s.roots {
            if let Some(c) = g.root_sum(a, b) {
                if !s.contains(c) {
                    return Some(NotReductive::NotClosed(a, b));
                }
            }
        }
    }
    None
}

/// `(S + S) ∩ R ⊂ S` and `-S = S`.
pub fn is_reductive(g: &LieAlgebra, s: &RootSubset) -> bool {
    reductivity_violation(g, s).is_none()
}

/// All reductive `N` with `contains ⊆ N ⊆ R`, ordered by size and then by
/// root indices.
///
/// Backtracks over the pairs `±α`; a branch is cut as soon as two included
/// roots sum to a root whose pair has been excluded.
pub fn enumerate_reductive(g: &LieAlgebra, contains: &RootSubset) -> Result<Vec<RootSubset>> {
    if !is_reductive(g, contains) {
        return Err(Error::Precondition(format!("{} is not reductive", contains.display(g))));
    }
    let npos = g.num_roots() / 2;
    let pair_of = |r: usize| if r < npos { r } else { g.neg_root(r) };
    // sums[p][q]: pairs reached by ±p ± q.
    let mut sums = vec![vec![Vec::new(); npos]; npos];
    for p in 0..npos {
        for qq in 0..npos {
            for a in [p, g.neg_root(p)] {
                for b in [qq, g.neg_root(qq)] {
                    if let Some(c) = g.root_sum(a, b) {
                        sums[p][qq].push(pair_of(c));
                    }
                }
            }
        }
    }

    let mut state: Vec<Option<bool>> = (0..npos).map(|p| contains.contains(p).then_some(true)).collect();
    let free: Vec<usize> = (0..npos).filter(|&p| state[p].is_none()).collect();
    let mut out = Vec::new();

    fn consistent(p: usize, include: bool, state: &[Option<bool>], sums: &[Vec<Vec<usize>>]) -> bool {
        let npos = state.len();
        if include {
            // p + included q must not land in an excluded pair.
            (0..npos)
                .filter(|&q| q == p || state[q] == Some(true))
                .all(|q| sums[p][q].iter().all(|&r| state[r] != Some(false)))
        } else {
            (0..npos)
                .filter(|&a| state[a] == Some(true))
                .all(|a| (a..npos).filter(|&b| state[b] == Some(true)).all(|b| !sums[a][b].contains(&p)))
        }
    }

    fn go(
        k: usize,
        free: &[usize],
        state: &mut Vec<Option<bool>>,
        sums: &[Vec<Vec<usize>>],
        g: &LieAlgebra,
        out: &mut Vec<RootSubset>,
    ) {
        if k == free.len() {
            let roots = (0..state.len()).filter(|&p| state[p] == Some(true)).flat_map(|p| [p, g.neg_root(p)]);
            let n = RootSubset::new(g, roots).expect("indices in range");
            debug_assert!(is_reductive(g, &n));
            out.push(n);
            return;
        }
        let p = free[k];
        for include in [false, true] {
            if consistent(p, include, state, sums) {
                state[p] = Some(include);
                go(k + 1, free, state, sums, g, out);
                state[p] = None;
            }
        }
    }

    go(0, &free, &mut state, &sums, g, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.roots.cmp(&b.roots)));
    Ok(out)
}

/// An element of the Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanElement(LieElement);

impl CartanElement {
    pub fn zero() -> Self {
        CartanElement(LieElement::zero())
    }

    pub fn from_element(g: &LieAlgebra, x: LieElement) -> Result<Self> {
        if x.iter().any(|(i, _)| !g.is_cartan_index(i)) {
            return Err(Error::Domain("element has non-Cartan components".into()));
        }
        Ok(CartanElement(x))
    }

    pub fn from_coords(coords: &[Rational]) -> Self {
        CartanElement(LieElement::from_dense(coords))
    }

    pub fn from_diagonal(g: &LieAlgebra, d: &[Rational]) -> Result<Self> {
        Ok(CartanElement(g.cartan_from_diagonal(d)?))
    }

    pub fn element(&self) -> &LieElement {
        &self.0
    }

    pub fn coords(&self, g: &LieAlgebra) -> Vec<Rational> {
        (0..g.rank()).map(|k| self.0.coeff(k)).collect()
    }

    pub fn diagonal(&self, g: &LieAlgebra) -> Vec<Rational> {
        g.diagonal_of(&self.0)
    }

    /// `α(h)`
    pub fn value(&self, g: &LieAlgebra, r: usize) -> Rational {
        g.root_value(r, &self.0)
    }

    pub fn neg(&self) -> Self {
        CartanElement(self.0.scaled(&-Rational::one()))
    }
}

/// First root witnessing that `h` is not `(N, U)`-regular.
pub fn regularity_violation(g: &LieAlgebra, h: &CartanElement, n: &RootSubset, u: &RootSubset) -> Option<usize> {
    u.roots()
        .iter()
        .copied()
        .find(|&a| !h.value(g, a).is_zero())
        .or_else(|| n.minus(u).into_iter().find(|&a| h.value(g, a).is_zero()))
}

fn check_pair(g: &LieAlgebra, n: &RootSubset, u: &RootSubset) -> Result<()> {
    if !is_reductive(g, u) {
        return Err(Error::Precondition(format!("U = {} is not reductive", u.display(g))));
    }
    if !is_reductive(g, n) {
        return Err(Error::Precondition(format!("N = {} is not reductive", n.display(g))));
    }
    if !u.is_subset_of(n) {
        return Err(Error::Precondition("U is not contained in N".into()));
    }
    Ok(())
}

/// A deterministic `(N, U)`-regular element, or `None` when some root of
/// `N ∖ U` vanishes on the whole common kernel of `U`.
///
/// With `v_1..v_k` a basis of `{h : α(h) = 0, α ∈ U}`, tries
/// `h = Σ t^{j-1} v_j` for `t = 1, 2, ...`.
pub fn regular_element(g: &LieAlgebra, n: &RootSubset, u: &RootSubset) -> Result<Option<CartanElement>> {
    check_pair(g, n, u)?;
    let rank = g.rank();
    let constraints: Vec<Vec<Rational>> = u.roots().iter().map(|&a| g.root_functional(a)).collect();
    let kernel = linalg::nullspace(&constraints, rank);
    let targets: Vec<Vec<Rational>> = n.minus(u).into_iter().map(|a| g.root_functional(a)).collect();
    if targets.iter().any(|f| kernel.iter().all(|v| linalg::dot(f, v).is_zero())) {
        return Ok(None);
    }
    // Each target is a nonzero polynomial of degree < k in t, so at most
    // (k - 1) * |targets| values of t fail.
    let bound = (kernel.len().max(1) * targets.len().max(1) + 2) as i64;
    for t in 1..=bound {
        let mut h = vec![Rational::zero(); rank];
        let mut pow = Rational::one();
        for v in &kernel {
            for (x, y) in h.iter_mut().zip(v) {
                *x += &pow * y;
            }
            pow *= q(t);
        }
        if targets.iter().all(|f| !linalg::dot(f, &h).is_zero()) {
            return Ok(Some(CartanElement::from_coords(&h)));
        }
    }
    unreachable!("polynomial root bound exceeded")
}

/// `u = h ⊕ ⊕_{α∈U} g_α`
pub fn subalgebra_from_subset(g: &LieAlgebra, u: &RootSubset) -> Result<Subspace> {
    if !is_reductive(g, u) {
        return Err(Error::Precondition(format!("{} is not reductive", u.display(g))));
    }
    Ok(root_subspace(g, u, true))
}

/// `m = ⊕_{α∈R∖U} g_α`
pub fn complement_from_subset(g: &LieAlgebra, u: &RootSubset) -> Result<Subspace> {
    if !is_reductive(g, u) {
        return Err(Error::Precondition(format!("{} is not reductive", u.display(g))));
    }
    let rest = RootSubset::new(g, (0..g.num_roots()).filter(|&r| !u.contains(r)))?;
    Ok(root_subspace(g, &rest, false))
}

/// Span of the root vectors of `s`, plus the Cartan subalgebra if requested.
/// No reductivity check.
pub fn root_subspace(g: &LieAlgebra, s: &RootSubset, with_cartan: bool) -> Subspace {
    let cartan = if with_cartan { 0..g.rank() } else { 0..0 };
    let elems: Vec<LieElement> =
        cartan.map(LieElement::basis).chain(s.roots().iter().map(|&r| g.root_vector(r))).collect();
    Subspace::span(g.dim(), &elems)
}

impl fmt::Display for NotReductive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotReductive::NotSymmetric(a) => write!(f, "root #{a} present without its negative"),
            NotReductive::NotClosed(a, b) => write!(f, "roots #{a} and #{b} sum to a missing root"),
        }
    }
}
