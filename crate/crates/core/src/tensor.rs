//! Sparse exact tensors on `g⊗g` and `g⊗g⊗g`.
//!
//! Wedge convention: `a∧b = a⊗b - b⊗a` (no factor 1/2).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, LieElement, Matrix, Projection, Rational, Subspace};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    coeffs: BTreeMap<(usize, usize, usize), Rational>,
}

macro_rules! sparse_common {
    ($t:ty, $key:ty) => {
        impl $t {
            pub fn zero(dim: usize) -> Self {
                Self { dim, coeffs: BTreeMap::new() }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn get(&self, k: $key) -> Rational {
                self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
            }

            pub fn iter(&self) -> impl Iterator<Item = ($key, &Rational)> {
                self.coeffs.iter().map(|(&k, c)| (k, c))
            }

            pub fn nnz(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn add_term(&mut self, k: $key, c: &Rational) {
                if c.is_zero() {
                    return;
                }
                let e = self.coeffs.entry(k).or_insert_with(Rational::zero);
                *e += c;
                if e.is_zero() {
                    self.coeffs.remove(&k);
                }
            }

            /// `self += c * other`
            pub fn axpy(&mut self, c: &Rational, other: &Self) {
                for (&k, v) in &other.coeffs {
                    self.add_term(k, &(c * v));
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut r = self.clone();
                r.axpy(&Rational::one(), other);
                r
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut r = self.clone();
                r.axpy(&-Rational::one(), other);
                r
            }

            pub fn scaled(&self, c: &Rational) -> Self {
                let mut r = Self::zero(self.dim);
                r.axpy(c, self);
                r
            }

            pub fn check_ambient(&self, g: &LieAlgebra) -> Result<()> {
                if self.dim != g.dim() {
                    return Err(Error::DimensionMismatch { expected: g.dim(), got: self.dim });
                }
                Ok(())
            }
        }
    };
}

sparse_common!(Tensor2, (usize, usize));
sparse_common!(Tensor3, (usize, usize, usize));

impl Tensor2 {
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = ((usize, usize), Rational)>) -> Result<Self> {
        let mut t = Self::zero(dim);
        for ((i, j), c) in entries {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i.max(j) + 1 });
            }
            t.add_term((i, j), &c);
        }
        Ok(t)
    }

    /// `a ⊗ b`
    pub fn tensor(dim: usize, a: &LieElement, b: &LieElement) -> Self {
        let mut t = Self::zero(dim);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                t.add_term((i, j), &(x * y));
            }
        }
        t
    }

    /// `a ∧ b = a⊗b - b⊗a`
    pub fn wedge(dim: usize, a: &LieElement, b: &LieElement) -> Self {
        Self::tensor(dim, a, b).sub(&Self::tensor(dim, b, a))
    }

    /// `t^{21}`
    pub fn flip(&self) -> Self {
        Self { dim: self.dim, coeffs: self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn is_skew(&self) -> bool {
        self.add(&self.flip()).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub(&self.flip()).is_zero()
    }

    /// `(t + t^{21}) / 2` and `(t - t^{21}) / 2`.
    pub fn symmetric_part(&self) -> Self {
        self.add(&self.flip()).scaled(&Rational::new(1.into(), 2.into()))
    }

    pub fn skew_part(&self) -> Self {
        self.sub(&self.flip()).scaled(&Rational::new(1.into(), 2.into()))
    }

    /// True when every leg lies in `s`.
    pub fn supported_on(&self, s: &Subspace) -> bool {
        let mut firsts = BTreeMap::<usize, LieElement>::new();
        let mut seconds = BTreeMap::<usize, LieElement>::new();
        for (&(i, j), c) in &self.coeffs {
            firsts.entry(j).or_default().add_term(i, c);
            seconds.entry(i).or_default().add_term(j, c);
        }
        firsts.values().chain(seconds.values()).all(|e| s.contains_element(e))
    }
}

impl Tensor3 {
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = ((usize, usize, usize), Rational)>,
    ) -> Result<Self> {
        let mut t = Self::zero(dim);
        for ((i, j, k), c) in entries {
            if i.max(j).max(k) >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i.max(j).max(k) + 1 });
            }
            t.add_term((i, j, k), &c);
        }
        Ok(t)
    }

    /// Adds `c · a⊗b⊗c3` for sparse factors.
    fn add_product(&mut self, c: &Rational, a: &LieElement, b: &LieElement, d: &LieElement) {
        for (i, x) in a.iter() {
            let cx = c * x;
            for (j, y) in b.iter() {
                let cxy = &cx * y;
                for (k, z) in d.iter() {
                    self.add_term((i, j, k), &(&cxy * z));
                }
            }
        }
    }

    /// Moves leg `k` of every term to position `sigma[k]`.
    pub fn permute_legs(&self, sigma: [usize; 3]) -> Self {
        let mut sorted = sigma;
        sorted.sort_unstable();
        assert_eq!(sorted, [0, 1, 2], "not a permutation of three legs");
        let mut out = Self::zero(self.dim);
        for (&(a, b, c), v) in &self.coeffs {
            let mut idx = [0; 3];
            idx[sigma[0]] = a;
            idx[sigma[1]] = b;
            idx[sigma[2]] = c;
            out.add_term((idx[0], idx[1], idx[2]), v);
        }
        out
    }

    /// Total antisymmetry under all six leg permutations.
    pub fn is_totally_antisymmetric(&self) -> bool {
        let transpositions = [[1, 0, 2], [0, 2, 1], [2, 1, 0]];
        transpositions.iter().all(|&s| self.add(&self.permute_legs(s)).is_zero())
    }
}

/// The 3-cycles used by `Alt`: `x^{231}` puts leg 1 in slot 2, leg 2 in slot 3
/// and leg 3 in slot 1; `x^{312}` is its inverse.
pub const CYCLE_231: [usize; 3] = [1, 2, 0];
pub const CYCLE_312: [usize; 3] = [2, 0, 1];

/// `Alt(x) = x^{123} + x^{231} + x^{312}`
pub fn alt3(t: &Tensor3) -> Tensor3 {
    t.add(&t.permute_legs(CYCLE_231)).add(&t.permute_legs(CYCLE_312))
}

/// `CYB(r) = [r^{12}, r^{13}] + [r^{12}, r^{23}] + [r^{13}, r^{23}]`
pub fn cyb(g: &LieAlgebra, r: &Tensor2) -> Result<Tensor3> {
    r.check_ambient(g)?;
    let d = g.dim();
    let mut out = Tensor3::zero(d);
    let entries: Vec<_> = r.iter().collect();
    for &((i, j), x) in &entries {
        for &((k, l), y) in &entries {
            let c = x * y;
            let e_ik = g.bracket_basis(i, k);
            for (m, v) in e_ik.iter() {
                out.add_term((m, j, l), &(&c * v));
            }
            let e_jk = g.bracket_basis(j, k);
            for (m, v) in e_jk.iter() {
                out.add_term((i, m, l), &(&c * v));
            }
            let e_jl = g.bracket_basis(j, l);
            for (m, v) in e_jl.iter() {
                out.add_term((i, k, m), &(&c * v));
            }
        }
    }
    Ok(out)
}

/// `[[a, b]] = [a^{12}, b^{13}] + [a^{12}, b^{23}] + [a^{13}, b^{23}]`
pub fn mixed_bracket(g: &LieAlgebra, a: &Tensor2, b: &Tensor2) -> Result<Tensor3> {
    a.check_ambient(g)?;
    b.check_ambient(g)?;
    let d = g.dim();
    let mut t12_13 = Tensor3::zero(d);
    let mut t12_23 = Tensor3::zero(d);
    let mut t13_23 = Tensor3::zero(d);
    for ((i, j), x) in a.iter() {
        for ((k, l), y) in b.iter() {
            let c = x * y;
            let ei = LieElement::basis(i);
            let ej = LieElement::basis(j);
            let ek = LieElement::basis(k);
            let el = LieElement::basis(l);
            t12_13.add_product(&c, g.bracket_basis(i, k), &ej, &el);
            t12_23.add_product(&c, &ei, g.bracket_basis(j, k), &el);
            t13_23.add_product(&c, &ei, &ek, g.bracket_basis(j, l));
        }
    }
    Ok(t12_13.add(&t12_23).add(&t13_23))
}

/// `[a⊗1 + 1⊗a, t]`
pub fn ad_action2(g: &LieAlgebra, a: &LieElement, t: &Tensor2) -> Result<Tensor2> {
    t.check_ambient(g)?;
    g.check_element(a)?;
    let mut out = Tensor2::zero(g.dim());
    for ((i, j), c) in t.iter() {
        let ai = g.bracket_unchecked(a, &LieElement::basis(i));
        for (m, v) in ai.iter() {
            out.add_term((m, j), &(c * v));
        }
        let aj = g.bracket_unchecked(a, &LieElement::basis(j));
        for (m, v) in aj.iter() {
            out.add_term((i, m), &(c * v));
        }
    }
    Ok(out)
}

/// `t` is annihilated by `ad(b)` for every basis vector `b` of `s`.
pub fn is_invariant(g: &LieAlgebra, t: &Tensor2, s: &Subspace) -> Result<bool> {
    for b in s.basis() {
        if !ad_action2(g, &b, t)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(c⊗1)(t) = Σ <c, t'_i> t''_i`
pub fn contract_first_leg(g: &LieAlgebra, c: &LieElement, t: &Tensor2) -> LieElement {
    let mut out = LieElement::zero();
    for ((i, j), v) in t.iter() {
        let w = g.form_unchecked(c, &LieElement::basis(i));
        if !w.is_zero() {
            out.add_term(j, &(w * v));
        }
    }
    out
}

pub fn project_legs2(t: &Tensor2, p: &Projection) -> Tensor2 {
    let mut out = Tensor2::zero(t.dim());
    for ((i, j), c) in t.iter() {
        for (a, x) in p.image(i).iter() {
            for (b, y) in p.image(j).iter() {
                out.add_term((a, b), &(c * x * y));
            }
        }
    }
    out
}

pub fn project_legs3(t: &Tensor3, p: &Projection) -> Tensor3 {
    let mut out = Tensor3::zero(t.dim());
    for ((i, j, k), c) in t.iter() {
        out.add_product(c, p.image(i), p.image(j), p.image(k));
    }
    out
}

/// Applies the projection onto `complement` along `along` to every leg.
/// Errors when the two subspaces do not decompose the ambient space.
pub fn project_legs(t: &Tensor2, complement: &Subspace, along: &Subspace) -> Result<Tensor2> {
    Ok(project_legs2(t, &Projection::new(complement, along)?))
}

pub fn project_legs_3(t: &Tensor3, complement: &Subspace, along: &Subspace) -> Result<Tensor3> {
    Ok(project_legs3(t, &Projection::new(complement, along)?))
}

/// Direction of [`conjugate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// `x ↦ m x m⁻¹`
    Forward,
    /// `x ↦ m⁻¹ x m`
    Inverse,
}

/// Conjugates both legs of `t` by the invertible matrix `m`.
pub fn conjugate(g: &LieAlgebra, t: &Tensor2, m: &Matrix, dir: Conjugation) -> Result<Tensor2> {
    t.check_ambient(g)?;
    if m.size() != g.matrix_size() {
        return Err(Error::DimensionMismatch { expected: g.matrix_size(), got: m.size() });
    }
    let inv = m.inverse().map_err(|_| Error::Domain("conjugating matrix is singular".into()))?;
    let (left, right) = match dir {
        Conjugation::Forward => (m, &inv),
        Conjugation::Inverse => (&inv, m),
    };
    let mut images: BTreeMap<usize, LieElement> = BTreeMap::new();
    let mut image = |i: usize| -> Result<LieElement> {
        if let Some(e) = images.get(&i) {
            return Ok(e.clone());
        }
        let e = g.from_matrix(&left.mul(&g.basis_matrix(i)).mul(right))?;
        images.insert(i, e.clone());
        Ok(e)
    };
    let mut out = Tensor2::zero(g.dim());
    for ((i, j), c) in t.iter() {
        let a = image(i)?;
        let b = image(j)?;
        out.axpy(c, &Tensor2::tensor(g.dim(), &a, &b));
    }
    Ok(out)
}
