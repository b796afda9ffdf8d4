mod common;

use common::{algebras, matrix_bracket, q};
use dynr::reductive::{enumerate_reductive, is_reductive, regular_element, subalgebra_from_subset};
use dynr::{LieAlgebra, LieElement, RootSubset};

fn basis(i: usize) -> LieElement {
    LieElement::basis(i)
}

#[test]
fn bracket_table_matches_matrix_commutators() {
    for g in algebras(1..=3) {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                assert_eq!(g.bracket(&basis(i), &basis(j)).unwrap(), matrix_bracket(&g, i, j), "{} [{i},{j}]", g.id());
            }
        }
    }
}

#[test]
fn jacobi_on_all_basis_triples() {
    for g in algebras(1..=3) {
        let br = |x: &LieElement, y: &LieElement| g.bracket(x, y).unwrap();
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                for k in 0..g.dim() {
                    let (x, y, z) = (basis(i), basis(j), basis(k));
                    let s = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).add(&br(&z, &br(&x, &y)));
                    assert!(s.is_zero(), "{} ({i},{j},{k})", g.id());
                }
            }
        }
    }
}

#[test]
fn form_is_invariant_on_all_basis_triples() {
    for g in algebras(1..=3) {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let xy = g.bracket(&basis(i), &basis(j)).unwrap();
                for k in 0..g.dim() {
                    let yz = g.bracket(&basis(j), &basis(k)).unwrap();
                    assert_eq!(g.form(&xy, &basis(k)).unwrap(), g.form(&basis(i), &yz).unwrap());
                }
            }
        }
    }
}

#[test]
fn form_is_the_trace_form() {
    for g in algebras(1..=3) {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let tr = g.basis_matrix(i).mul(&g.basis_matrix(j)).trace();
                assert_eq!(g.form(&basis(i), &basis(j)).unwrap(), tr);
            }
        }
        for a in 0..g.num_roots() {
            let ea = g.root_vector(a);
            for b in 0..g.num_roots() {
                let expect = if b == g.neg_root(a) { q(1) } else { q(0) };
                assert_eq!(g.form(&ea, &g.root_vector(b)).unwrap(), expect);
            }
            for k in 0..g.rank() {
                assert_eq!(g.form(&ea, &basis(k)).unwrap(), q(0));
            }
        }
    }
}

/// `c_{αγ} + c_{βγ} = 0` whenever `α + β + γ = 0`.
#[test]
fn structure_constant_identity_exhaustive() {
    let mut triples = 0;
    for g in algebras(2..=4) {
        let nr = g.num_roots();
        for a in 0..nr {
            for b in 0..nr {
                for c in 0..nr {
                    if !g.sums_to_zero(a, b, c) {
                        continue;
                    }
                    let sum = g.structure_constant(a, c).unwrap() + g.structure_constant(b, c).unwrap();
                    assert_eq!(sum, q(0), "{} ({a},{b},{c})", g.id());
                    triples += 1;
                }
            }
        }
    }
    // A2: 12, A3: 48, A4: 120 ordered triples.
    assert_eq!(triples, 12 + 48 + 120);
}

fn brute_force_reductive(g: &LieAlgebra, contains: &RootSubset) -> Vec<RootSubset> {
    let nr = g.num_roots();
    let mut out = Vec::new();
    for mask in 0u32..(1 << nr) {
        let inside = |r: usize| mask & (1 << r) != 0;
        if !contains.roots().iter().all(|&r| inside(r)) {
            continue;
        }
        let symmetric = (0..nr).all(|a| !inside(a) || inside(g.neg_root(a)));
        let closed = (0..nr).all(|a| (0..nr).all(|b| !(inside(a) && inside(b)) || g.root_sum(a, b).is_none_or(inside)));
        if symmetric && closed {
            out.push(RootSubset::new(g, (0..nr).filter(|&r| inside(r))).unwrap());
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for g in algebras(1..=3) {
        let mut seeds = vec![RootSubset::empty()];
        seeds.extend(
            (0..g.num_roots()).filter(|&r| g.root(r).is_positive()).map(|r| RootSubset::symmetric(&g, [r]).unwrap()),
        );
        for seed in seeds {
            let mut fast = enumerate_reductive(&g, &seed).unwrap();
            let mut slow = brute_force_reductive(&g, &seed);
            fast.sort_by(|a, b| a.roots().cmp(b.roots()));
            slow.sort_by(|a, b| a.roots().cmp(b.roots()));
            assert_eq!(fast, slow, "{} ⊇ {}", g.id(), seed.display(&g));
        }
    }
    let a2 = LieAlgebra::from_id("A2").unwrap();
    assert_eq!(brute_force_reductive(&a2, &RootSubset::empty()).len(), 5);
    // A3: ∅, six A1's, four A2's, three A1×A1's, and R.
    let a3 = LieAlgebra::from_id("A3").unwrap();
    assert_eq!(brute_force_reductive(&a3, &RootSubset::empty()).len(), 15);
}

#[test]
fn root_subalgebra_iff_reductive_on_symmetric_subsets() {
    let g = LieAlgebra::from_id("A2").unwrap();
    let pos: Vec<usize> = g.positive_roots().collect();
    for mask in 0..(1u32 << pos.len()) {
        let s =
            RootSubset::symmetric(&g, pos.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &r)| r))
                .unwrap();
        let sub = subalgebra_from_subset(&g, &s).map(|v| v.is_subalgebra(&g).unwrap());
        assert_eq!(sub.unwrap_or(false), is_reductive(&g, &s), "{}", s.display(&g));
    }
}

#[test]
fn regular_elements_pass_an_independent_check() {
    for g in algebras(1..=3) {
        let all = enumerate_reductive(&g, &RootSubset::empty()).unwrap();
        for u in &all {
            for n in all.iter().filter(|n| u.is_subset_of(n)) {
                let h = regular_element(&g, n, u).unwrap().expect("type A always has one");
                let m = g.to_matrix(h.element());
                for r in 0..g.num_roots() {
                    let (i, j) = g.root(r).ij();
                    let value = m.get(i, i) - m.get(j, j);
                    if u.contains(r) {
                        assert_eq!(value, q(0));
                    } else if n.contains(r) {
                        assert_ne!(value, q(0));
                    }
                }
            }
        }
    }
}
