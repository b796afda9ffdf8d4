//! Seeded random inputs for property drivers. Never used by catalogs.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use dynr::dualnum::SubalgebraPair;
use dynr::reductive::root_subspace;
use dynr::{LieAlgebra, LieElement, Rational, Result, RootSubset, Tensor2};

/// Closure of `s` under root addition.
pub fn additive_closure(g: &LieAlgebra, s: &[usize]) -> RootSubset {
    let mut inside = vec![false; g.num_roots()];
    for &r in s {
        inside[r] = true;
    }
    loop {
        let mut grew = false;
        for a in 0..g.num_roots() {
            for b in 0..g.num_roots() {
                if inside[a] && inside[b] {
                    if let Some(c) = g.root_sum(a, b) {
                        if !inside[c] {
                            inside[c] = true;
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    RootSubset::new(g, (0..g.num_roots()).filter(|&r| inside[r])).expect("indices in range")
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-3..=3);
    let den = [1, 1, 2, 3][rng.gen_range(0..4)];
    Rational::new(num.into(), den.into())
}

pub fn random_element<R: Rng>(rng: &mut R, g: &LieAlgebra, terms: usize) -> LieElement {
    let mut x = LieElement::zero();
    for _ in 0..terms {
        x.add_term(rng.gen_range(0..g.dim()), &small_rational(rng));
    }
    x
}

/// A subalgebra `n`: the Cartan part (kept with probability 3/4) plus the
/// root spaces of an additively closed set, which is itself closed under
/// brackets. `B` is the coboundary of a random element of `g`.
pub fn random_pair<R: Rng>(rng: &mut R, g: &LieAlgebra) -> Result<SubalgebraPair> {
    let mut roots: Vec<usize> = (0..g.num_roots()).collect();
    roots.shuffle(rng);
    let k = rng.gen_range(0..=g.num_roots());
    let s = additive_closure(g, &roots[..k]);
    let with_cartan = rng.gen_range(0..4) != 0;
    let n = if with_cartan || s.roots().iter().any(|&r| s.contains(g.neg_root(r))) {
        root_subspace(g, &s, true)
    } else {
        root_subspace(g, &s, false)
    };
    let z = random_element(rng, g, 1 + g.rank());
    SubalgebraPair::coboundary(g, n, &z)
}

/// A skew tensor with a few random wedge terms.
pub fn random_skew<R: Rng>(rng: &mut R, g: &LieAlgebra, terms: usize) -> Tensor2 {
    let dim = g.dim();
    let mut s = Tensor2::zero(dim);
    for _ in 0..terms {
        let (i, j) = (rng.gen_range(0..dim), rng.gen_range(0..dim));
        let c = small_rational(rng);
        if i != j && !c.is_zero() {
            s.axpy(&c, &Tensor2::wedge(dim, &LieElement::basis(i), &LieElement::basis(j)));
        }
    }
    s
}
