mod common;

use common::{algebras, q, random_element};
use dynr::dualnum::{
    build_lnb, classify_pair, is_lagrangian_subalgebra, is_poisson_homogeneous, lagrangian_from_bivector,
    lagrangian_to_pair, pair_to_lagrangian, SubalgebraPair,
};
use dynr::reductive::{enumerate_reductive, regular_element, root_subspace, subalgebra_from_subset};
use dynr::rmatrix::{
    alpha_values, build_x, classify_coefficients, coefficient_grid, diagonal_family, is_in_momega, momega_tensor,
    RMatrixCandidate,
};
use dynr::{LieAlgebra, RootSubset};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn reductive_all(g: &LieAlgebra) -> Vec<RootSubset> {
    enumerate_reductive(g, &RootSubset::empty()).unwrap()
}

/// Every `(U, N, h)` with `U ⊆ N` reductive and `h` the deterministic witness.
fn structures(g: &LieAlgebra) -> Vec<(RootSubset, RootSubset, dynr::CartanElement)> {
    let mut out = Vec::new();
    for u in reductive_all(g) {
        for n in enumerate_reductive(g, &u).unwrap() {
            let h = regular_element(g, &n, &u).unwrap().unwrap();
            out.push((u.clone(), n, h));
        }
    }
    out
}

#[test]
fn grid_membership_iff_classified() {
    for g in algebras(1..=2) {
        for u in reductive_all(&g) {
            let mut accepted = 0;
            for f in diagonal_family(&g, &u, &coefficient_grid()) {
                let c = RMatrixCandidate::triangular(f.to_tensor(&g), u.clone());
                let tensor_level = momega_tensor(&g, &c).unwrap();
                match classify_coefficients(&g, &f, &u).unwrap() {
                    Ok((n, h)) => {
                        assert!(tensor_level, "{} U={}: classified but not in M_Ω", g.id(), u.display(&g));
                        accepted += 1;
                        let x = build_x(&g, &n, &h, &u).unwrap();
                        assert_eq!(x.tensor, c.tensor, "build_x ∘ classify is not the identity");
                        for (r, a) in alpha_values(&g, &n, &h, &u) {
                            assert_eq!(f.get(r) * a, q(1), "x_α = 1/α(h)");
                        }
                    }
                    Err(why) => assert!(!tensor_level, "{} U={}: in M_Ω but rejected ({why})", g.id(), u.display(&g)),
                }
            }
            assert!(accepted >= 1);
        }
    }
}

#[test]
fn every_built_x_is_in_momega_and_reclassifies() {
    for g in algebras(1..=3) {
        for (u, n, h) in structures(&g) {
            let x = build_x(&g, &n, &h, &u).unwrap();
            assert!(x.tensor.add(&x.tensor.flip()).is_zero());
            assert!(is_in_momega(&g, &x).unwrap());
            let f = dynr::rmatrix::CoefficientFunction::from_tensor(&g, &x.tensor, &u).unwrap();
            let (n2, h2) = classify_coefficients(&g, &f, &u).unwrap().unwrap();
            assert_eq!(n2, n);
            assert_eq!(alpha_values(&g, &n2, &h2, &u), alpha_values(&g, &n, &h, &u));
        }
    }
}

#[test]
fn three_constructions_agree() {
    for g in algebras(1..=3) {
        for (u, n, h) in structures(&g) {
            let x = build_x(&g, &n, &h, &u).unwrap();
            let from_b = lagrangian_from_bivector(&g, &u, &x.tensor).unwrap();
            let lnb = build_lnb(&g, &n, &h, &u, -1).unwrap();
            let pair = SubalgebraPair::coboundary(&g, root_subspace(&g, &n, true), h.neg().element()).unwrap();
            let from_pair = pair_to_lagrangian(&g, &pair).unwrap();
            assert_eq!(from_b, lnb);
            assert_eq!(from_b, from_pair);
            assert!(is_lagrangian_subalgebra(&g, &lnb).unwrap().all());
            assert_eq!(lnb.g_intersection(), subalgebra_from_subset(&g, &u).unwrap());
            // The opposite sign is the construction for -h.
            assert_eq!(build_lnb(&g, &n, &h, &u, 1).unwrap(), build_lnb(&g, &n, &h.neg(), &u, -1).unwrap());
            let (n2, h2) = classify_pair(&g, &pair, &u).unwrap().unwrap();
            assert_eq!(n2, n);
            assert_eq!(alpha_values(&g, &n, &h2.neg(), &u), alpha_values(&g, &n, &h, &u));
        }
    }
}

#[test]
fn poisson_homogeneous_iff_momega_on_grid() {
    for g in algebras(1..=2) {
        for u in reductive_all(&g) {
            let mut yes = 0;
            let mut no = 0;
            for f in diagonal_family(&g, &u, &coefficient_grid()) {
                let t = f.to_tensor(&g);
                let ph = is_poisson_homogeneous(&g, &u, &t).unwrap();
                assert_eq!(ph, is_in_momega(&g, &RMatrixCandidate::triangular(t, u.clone())).unwrap());
                if ph {
                    yes += 1
                } else {
                    no += 1
                }
            }
            assert!(yes > 0);
            if g.rank() == 2 && u.is_empty() {
                assert!(no > 0);
            }
        }
    }
}

fn closure(g: &LieAlgebra, seed: &[usize]) -> RootSubset {
    let mut s: Vec<usize> = seed.to_vec();
    loop {
        let extra: Vec<usize> = s
            .iter()
            .flat_map(|&a| s.iter().filter_map(move |&b| g.root_sum(a, b)))
            .filter(|c| !s.contains(c))
            .collect();
        if extra.is_empty() {
            break;
        }
        s.extend(extra);
        s.sort_unstable();
        s.dedup();
    }
    RootSubset::new(g, s).unwrap()
}

fn random_pair(rng: &mut StdRng, g: &LieAlgebra) -> SubalgebraPair {
    let k = rng.gen_range(0..=g.num_roots());
    let seed: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.num_roots())).collect();
    let s = closure(g, &seed);
    // [E_α, E_{-α}] lands in the Cartan subalgebra.
    let has_pair = s.roots().iter().any(|&r| s.contains(g.neg_root(r)));
    let n = root_subspace(g, &s, has_pair || rng.gen_bool(0.75));
    if n.dim() == 0 {
        return SubalgebraPair::zero(g, n).unwrap();
    }
    SubalgebraPair::coboundary(g, n, &random_element(rng, g, 4)).unwrap()
}

#[test]
fn pair_lagrangian_roundtrip() {
    let mut rng = StdRng::seed_from_u64(11);
    for g in algebras(1..=3) {
        for _ in 0..20 {
            let p = random_pair(&mut rng, &g);
            let l = pair_to_lagrangian(&g, &p).unwrap();
            assert!(is_lagrangian_subalgebra(&g, &l).unwrap().all());
            assert_eq!(lagrangian_to_pair(&g, &l).unwrap(), p);
            assert_eq!(pair_to_lagrangian(&g, &lagrangian_to_pair(&g, &l).unwrap()).unwrap(), l);
        }
    }
}

#[test]
fn non_coboundary_cocycle_on_abelian_n() {
    let g = LieAlgebra::from_id("A2").unwrap();
    let n = g.cartan();
    let p = SubalgebraPair::new(&g, n.clone(), vec![vec![q(0), q(1)], vec![q(-1), q(0)]]).unwrap();
    let l = pair_to_lagrangian(&g, &p).unwrap();
    assert!(is_lagrangian_subalgebra(&g, &l).unwrap().all());
    assert_eq!(lagrangian_to_pair(&g, &l).unwrap(), p);
    // On the Borel subalgebra, B(H1, E12) = 1 alone violates the cocycle
    // identity on (H1, H2, E12).
    let borel = root_subspace(&g, &RootSubset::new(&g, g.positive_roots()).unwrap(), true);
    assert_eq!(borel.dim(), 5);
    let mut b = vec![vec![q(0); 5]; 5];
    b[0][2] = q(1);
    b[2][0] = q(-1);
    assert!(SubalgebraPair::new(&g, borel.clone(), b).is_err());
    assert!(SubalgebraPair::zero(&g, borel).is_ok());
}

#[test]
fn tensor_determines_n_and_alpha_values() {
    let g = LieAlgebra::from_id("A2").unwrap();
    let u = RootSubset::empty();
    let diagonals = [[q(1), q(0), q(-1)], [q(2), q(0), q(-2)], [q(1), q(1), q(-2)], [q(2), q(1), q(-3)]];
    let mut seen: Vec<(RootSubset, Vec<(usize, dynr::Rational)>, dynr::Tensor2)> = Vec::new();
    for n in enumerate_reductive(&g, &u).unwrap() {
        for d in &diagonals {
            let h = dynr::CartanElement::from_diagonal(&g, d).unwrap();
            let Ok(x) = build_x(&g, &n, &h, &u) else { continue };
            let key: Vec<_> = alpha_values(&g, &n, &h, &u).into_iter().collect();
            for (n2, key2, t2) in &seen {
                assert_eq!(&x.tensor == t2, n2 == &n && key2 == &key);
            }
            seen.push((n.clone(), key, x.tensor));
        }
    }
    assert!(seen.len() > 10);
}
