//! From the value at zero of a dynamical r-matrix to a constant r-matrix on
//! a complementary subalgebra `v` with `g = u ⊕ v`.
//!
//! The dynamical equation is never evaluated. Its only consequence used here
//! is that `CYB(r0)` vanishes modulo tensors with a leg in `u`.

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, LieElement, Matrix, Projection, Rational, Subspace};
use crate::error::{Error, Result};
use crate::linalg::fmt_rational;
use crate::tensor::{conjugate, cyb, is_invariant, project_legs2, project_legs3, Conjugation, Tensor2};

/// `g = u ⊕ v` with both summands subalgebras.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub u: Subspace,
    pub v: Subspace,
    onto_u: Projection,
    onto_v: Projection,
}

impl Decomposition {
    pub fn new(g: &LieAlgebra, u: Subspace, v: Subspace) -> Result<Self> {
        for (s, name) in [(&u, "u"), (&v, "v")] {
            if !s.is_subalgebra(g)? {
                return Err(Error::Precondition(format!("{name} is not a subalgebra")));
            }
        }
        if !u.is_direct_sum_of_ambient(&v)? {
            return Err(Error::Precondition("g is not the direct sum u ⊕ v".into()));
        }
        let onto_u = Projection::new(&u, &v)?;
        let onto_v = Projection::new(&v, &u)?;
        Ok(Decomposition { u, v, onto_u, onto_v })
    }

    pub fn onto_v(&self) -> &Projection {
        &self.onto_v
    }
}

fn project_pair(t: &Tensor2, first: &Projection, second: &Projection) -> Tensor2 {
    let mut out = Tensor2::zero(t.dim());
    for ((i, j), c) in t.iter() {
        for (a, x) in first.image(i).iter() {
            let cx = c * x;
            for (b, y) in second.image(j).iter() {
                out.add_term((a, b), &(&cx * y));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreconditionVerdict {
    /// `r0 + r0^{21} ∈ (u ⊗ u) ⊕ (v ⊗ v)`.
    pub omega_split: bool,
    pub u_invariant: bool,
    /// `CYB(r0)` projects to zero in `v ⊗ v ⊗ v` along `u`.
    pub cyb_mod_u: bool,
}

impl PreconditionVerdict {
    pub fn all(&self) -> bool {
        self.omega_split && self.u_invariant && self.cyb_mod_u
    }

    fn first_failure(&self) -> Option<&'static str> {
        if !self.omega_split {
            Some("r0 + r0^21 is not in (u⊗u) ⊕ (v⊗v)")
        } else if !self.u_invariant {
            Some("r0 is not u-invariant")
        } else if !self.cyb_mod_u {
            Some("CYB(r0) does not vanish modulo u")
        } else {
            None
        }
    }
}

pub fn check_preconditions(g: &LieAlgebra, r0: &Tensor2, d: &Decomposition) -> Result<PreconditionVerdict> {
    r0.check_ambient(g)?;
    let omega = r0.add(&r0.flip());
    let omega_split =
        project_pair(&omega, &d.onto_u, &d.onto_v).is_zero() && project_pair(&omega, &d.onto_v, &d.onto_u).is_zero();
    let u_invariant = is_invariant(g, r0, &d.u)?;
    let cyb_mod_u = project_legs3(&cyb(g, r0)?, &d.onto_v).is_zero();
    Ok(PreconditionVerdict { omega_split, u_invariant, cyb_mod_u })
}

/// Projection onto `v ⊗ v` along `g ⊗ u + u ⊗ g`, with `CYB(result) = 0`
/// verified.
pub fn project_to_v(g: &LieAlgebra, r0: &Tensor2, d: &Decomposition) -> Result<Tensor2> {
    if let Some(why) = check_preconditions(g, r0, d)?.first_failure() {
        return Err(Error::Precondition(why.into()));
    }
    let v = project_to_v_unchecked(r0, d);
    if !cyb(g, &v)?.is_zero() {
        return Err(Error::InvariantFailure("CYB of the projection is nonzero".into()));
    }
    Ok(v)
}

/// The bare leg projection, without precondition or postcondition checks.
pub fn project_to_v_unchecked(r0: &Tensor2, d: &Decomposition) -> Tensor2 {
    project_legs2(r0, &d.onto_v)
}

/// The `sl(n)` instance with `u` the Cartan subalgebra and `v = g p g^{-1}`.
#[derive(Clone, Debug)]
pub struct ExampleInstance {
    pub n: usize,
    pub hvals: Vec<Rational>,
    pub algebra: LieAlgebra,
    /// Traceless matrices whose last column vanishes above the corner.
    pub p: Subspace,
    /// `id − E_{1n} − … − E_{n−1,n}`
    pub conjugator: Matrix,
    pub decomposition: Decomposition,
    /// `Σ_{i<j} 1/(h_i − h_j) E_ij ∧ E_ji`
    pub r0: Tensor2,
    /// The closed form for `g^{-1} p(r0) g`.
    pub expected_v: Tensor2,
    pub closed_form: ClosedForm,
}

/// Reading of `D_i` in the closed form for `v`.
///
/// As printed, `D_i = (1/n) id − E_ii`, and the resulting tensor is not a
/// solution of `CYB = 0` for any `n` checked. With the opposite sign,
/// `D_i = E_ii − (1/n) id`, it equals the projection pipeline exactly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosedForm {
    #[default]
    AsPrinted,
    SignCorrected,
}

fn unit(g: &LieAlgebra, i: usize, j: usize) -> LieElement {
    let n = g.matrix_size();
    g.from_matrix(&Matrix::unit(n, i, j)).expect("off-diagonal units are traceless")
}

/// `D_i = (1/n) id − E_ii`, negated for [`ClosedForm::SignCorrected`].
fn d_elem(g: &LieAlgebra, i: usize, form: ClosedForm) -> LieElement {
    let n = g.matrix_size();
    let m = Matrix::identity(n).scaled(&Rational::new(1.into(), (n as i64).into())).sub(&Matrix::unit(n, i, i));
    let d = g.from_matrix(&m).expect("D_i is traceless");
    match form {
        ClosedForm::AsPrinted => d,
        ClosedForm::SignCorrected => d.scaled(&-Rational::one()),
    }
}

/// `Σ_{i<j<n} 1/(h_i − h_j) (E_ij − D_i) ∧ (E_ji − D_j) + Σ_{i<n} 1/(h_i − h_n) D_i ∧ Σ_{k≠i} E_ki`
pub fn closed_form_v(g: &LieAlgebra, hvals: &[Rational], form: ClosedForm) -> Tensor2 {
    let dim = g.dim();
    let n = g.matrix_size();
    let last = n - 1;
    let mut v = Tensor2::zero(dim);
    for i in 0..last {
        for j in i + 1..last {
            let c = (&hvals[i] - &hvals[j]).recip();
            let a = unit(g, i, j).sub(&d_elem(g, i, form));
            let b = unit(g, j, i).sub(&d_elem(g, j, form));
            v.axpy(&c, &Tensor2::wedge(dim, &a, &b));
        }
    }
    for i in 0..last {
        let c = (&hvals[i] - &hvals[last]).recip();
        let mut col = LieElement::zero();
        for k in (0..n).filter(|&k| k != i) {
            col = col.add(&unit(g, k, i));
        }
        v.axpy(&c, &Tensor2::wedge(dim, &d_elem(g, i, form), &col));
    }
    v
}

pub fn build_example(n: usize, hvals: &[Rational]) -> Result<ExampleInstance> {
    build_example_with(n, hvals, ClosedForm::AsPrinted)
}

pub fn build_example_with(n: usize, hvals: &[Rational], closed_form: ClosedForm) -> Result<ExampleInstance> {
    if n < 3 {
        return Err(Error::Precondition(format!("n must be at least 3, got {n}")));
    }
    if hvals.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: hvals.len() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if hvals[i] == hvals[j] {
                return Err(Error::Precondition(format!("h_{} = h_{} = {}", i + 1, j + 1, fmt_rational(&hvals[i]))));
            }
        }
    }
    let total: Rational = hvals.iter().sum();
    if !total.is_zero() {
        return Err(Error::Precondition(format!("h values sum to {}, not 0", fmt_rational(&total))));
    }
    let g = LieAlgebra::build("A", n - 1)?;
    let dim = g.dim();
    let last = n - 1;

    let p_basis: Vec<LieElement> = (0..dim)
        .filter(|&k| match g.basis_root(k) {
            Some(r) => {
                let (i, j) = g.root(r).ij();
                !(j == last && i < last)
            }
            None => true,
        })
        .map(LieElement::basis)
        .collect();
    let p = Subspace::span(dim, &p_basis);

    let mut conj = Matrix::identity(n);
    for i in 0..last {
        conj.set(i, last, -Rational::one());
    }
    let conj_inv = conj.inverse()?;
    let v_basis =
        p_basis.iter().map(|x| g.from_matrix(&conj.mul(&g.to_matrix(x)).mul(&conj_inv))).collect::<Result<Vec<_>>>()?;
    let v = Subspace::span(dim, &v_basis);
    let decomposition = Decomposition::new(&g, g.cartan(), v)?;

    let mut r0 = Tensor2::zero(dim);
    for i in 0..n {
        for j in i + 1..n {
            let c = (&hvals[i] - &hvals[j]).recip();
            r0.axpy(&c, &Tensor2::wedge(dim, &unit(&g, i, j), &unit(&g, j, i)));
        }
    }

    let expected_v = closed_form_v(&g, hvals, closed_form);

    Ok(ExampleInstance {
        n,
        hvals: hvals.to_vec(),
        algebra: g,
        p,
        conjugator: conj,
        decomposition,
        r0,
        expected_v,
        closed_form,
    })
}

/// `(1 - n)/2, …, (n - 1)/2` scaled to integers when `n` is odd; always
/// distinct and summing to zero.
pub fn symmetric_progression(n: usize) -> Vec<Rational> {
    let n = n as i64;
    (0..n).map(|k| Rational::from_integer((n - 1 - 2 * k).into())).collect()
}

/// One named check of the example pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Nonzero terms of the failing difference, as `(indices, value)` strings.
    pub residual: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub checks: Vec<Check>,
    pub projected: Tensor2,
    pub v: Tensor2,
}

impl ExampleReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn residual_terms<K: std::fmt::Debug>(terms: impl Iterator<Item = (K, Rational)>) -> Vec<String> {
    terms.map(|(k, v)| format!("{k:?} = {}", fmt_rational(&v))).collect()
}

/// Preconditions, projection with `CYB = 0`, conjugation back, equality with
/// the closed form, and `CYB` of the closed form.
pub fn verify_example(e: &ExampleInstance) -> Result<ExampleReport> {
    let g = &e.algebra;
    let d = &e.decomposition;
    let pre = check_preconditions(g, &e.r0, d)?;
    let mut checks = vec![Check { name: "preconditions", pass: pre.all(), residual: vec![] }];

    let projected = project_to_v_unchecked(&e.r0, d);
    let cyb_p = cyb(g, &projected)?;
    checks.push(Check {
        name: "cyb_projection",
        pass: cyb_p.is_zero(),
        residual: residual_terms(cyb_p.iter().map(|(k, v)| (k, v.clone()))),
    });

    let v = conjugate(g, &projected, &e.conjugator, Conjugation::Inverse)?;
    let in_p = v.supported_on(&e.p);
    checks.push(Check { name: "conjugate_into_p", pass: in_p, residual: vec![] });

    let diff = v.sub(&e.expected_v);
    checks.push(Check {
        name: "matches_closed_form",
        pass: diff.is_zero(),
        residual: residual_terms(diff.iter().map(|(k, v)| (k, v.clone()))),
    });

    let cyb_e = cyb(g, &e.expected_v)?;
    checks.push(Check {
        name: "cyb_closed_form",
        pass: cyb_e.is_zero() && e.expected_v.is_skew(),
        residual: residual_terms(cyb_e.iter().map(|(k, v)| (k, v.clone()))),
    });
    Ok(ExampleReport { checks, projected, v })
}
