//! Independent oracles shared by the integration tests. Nothing here calls
//! the crate's bracket table or tensor calculus; brackets are matrix
//! commutators.

#![allow(dead_code)]

use dynr::{LieAlgebra, LieElement, Rational, Tensor2, Tensor3};
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `[e_i, e_j]` via the commutator of the defining matrices.
pub fn matrix_bracket(g: &LieAlgebra, i: usize, j: usize) -> LieElement {
    let c = g.basis_matrix(i).commutator(&g.basis_matrix(j));
    g.from_matrix(&c).expect("commutator is traceless")
}

/// Brute-force `CYB(r)` on the matrix realization.
pub fn cyb_by_matrices(g: &LieAlgebra, r: &Tensor2) -> Tensor3 {
    let d = g.dim();
    let mut acc = vec![Rational::from_integer(0.into()); d * d * d];
    let mut put = |a: usize, b: usize, c: usize, v: Rational| acc[(a * d + b) * d + c] += v;
    let table: Vec<Vec<LieElement>> = (0..d).map(|i| (0..d).map(|j| matrix_bracket(g, i, j)).collect()).collect();
    let terms: Vec<((usize, usize), Rational)> = r.iter().map(|(k, v)| (k, v.clone())).collect();
    for ((i, j), x) in &terms {
        for ((k, l), y) in &terms {
            let c = x * y;
            for (m, v) in table[*i][*k].iter() {
                put(m, *j, *l, &c * v);
            }
            for (m, v) in table[*j][*k].iter() {
                put(*i, m, *l, &c * v);
            }
            for (m, v) in table[*j][*l].iter() {
                put(*i, *k, m, &c * v);
            }
        }
    }
    let entries = acc.into_iter().enumerate().map(|(n, v)| ((n / (d * d), (n / d) % d, n % d), v));
    Tensor3::from_entries(d, entries).expect("indices in range")
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    qf(rng.gen_range(-3..=3), [1, 2, 3][rng.gen_range(0..3)])
}

pub fn random_tensor<R: Rng>(rng: &mut R, g: &LieAlgebra, terms: usize) -> Tensor2 {
    let d = g.dim();
    let entries: Vec<_> =
        (0..terms).map(|_| ((rng.gen_range(0..d), rng.gen_range(0..d)), small_rational(rng))).collect();
    let mut t = Tensor2::zero(d);
    for (k, v) in entries {
        t.add_term(k, &v);
    }
    t
}

pub fn random_skew<R: Rng>(rng: &mut R, g: &LieAlgebra, terms: usize) -> Tensor2 {
    let t = random_tensor(rng, g, terms);
    t.sub(&t.flip())
}

pub fn random_element<R: Rng>(rng: &mut R, g: &LieAlgebra, terms: usize) -> LieElement {
    let mut x = LieElement::zero();
    for _ in 0..terms {
        x.add_term(rng.gen_range(0..g.dim()), &small_rational(rng));
    }
    x
}

pub fn algebras(ranks: std::ops::RangeInclusive<usize>) -> Vec<LieAlgebra> {
    ranks.map(|r| LieAlgebra::build("A", r).unwrap()).collect()
}
