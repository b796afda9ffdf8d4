mod common;

use common::{cyb_by_matrices, q, qf, random_skew};
use dynr::dualnum::is_lagrangian_subalgebra;
use dynr::dynconst::{
    build_example_with, closed_form_v, project_to_v, symmetric_progression, verify_example, ClosedForm,
};
use dynr::twist::{s_graph, standard_solutions, twist_condition_general, twist_condition_triangular, Cobracket};
use dynr::{LieAlgebra, Tensor2};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn general_and_triangular_twist_conditions_agree() {
    let mut rng = StdRng::seed_from_u64(5);
    for rank in 1..=2 {
        let g = LieAlgebra::build("A", rank).unwrap();
        let sols = standard_solutions(&g);
        assert!(sols.len() >= 2);
        for rho in &sols {
            assert!(cyb_by_matrices(&g, rho).is_zero());
            let delta = Cobracket::from_r(&g, rho).unwrap();
            let mut candidates: Vec<Tensor2> = (0..30).map(|_| random_skew(&mut rng, &g, 2)).collect();
            candidates.extend(sols.iter().cloned());
            candidates.push(rho.scaled(&q(-1)));
            candidates.push(rho.scaled(&qf(1, 2)));
            for s in &candidates {
                assert_eq!(
                    twist_condition_general(&g, &delta, s).unwrap(),
                    twist_condition_triangular(&g, rho, s).unwrap(),
                );
            }
            assert!(twist_condition_general(&g, &delta, &rho.scaled(&q(-1))).unwrap());
        }
    }
}

/// Skew tensors on `sl(2)` with coefficients in {-1, 0, 1} on each basis pair.
fn sl2_skew_grid(g: &LieAlgebra) -> Vec<Tensor2> {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    (0..27)
        .map(|mut code| {
            let mut t = Tensor2::zero(g.dim());
            for &(i, j) in &pairs {
                let c = q(code % 3 - 1);
                code /= 3;
                t.add_term((i, j), &c);
                t.add_term((j, i), &-c);
            }
            t
        })
        .collect()
}

#[test]
fn graph_is_subalgebra_iff_cyb_vanishes() {
    let g = LieAlgebra::from_id("A1").unwrap();
    let mut solutions = 0;
    for s in sl2_skew_grid(&g) {
        let v = is_lagrangian_subalgebra(&g, &s_graph(&g, &s).unwrap()).unwrap();
        assert!(v.is_lagrangian());
        let cyb_zero = cyb_by_matrices(&g, &s).is_zero();
        assert_eq!(v.subalgebra, cyb_zero, "{s:?}");
        solutions += cyb_zero as usize;
    }
    // 0, ±H∧E, ±H∧F.
    assert_eq!(solutions, 5);
}

#[test]
fn printed_closed_form_fails_cyb_on_matrices() {
    for n in 3..=5 {
        let hv = symmetric_progression(n);
        let printed = closed_form_v(&LieAlgebra::build("A", n - 1).unwrap(), &hv, ClosedForm::AsPrinted);
        let g = LieAlgebra::build("A", n - 1).unwrap();
        assert!(!cyb_by_matrices(&g, &printed).is_zero(), "n = {n}");
        let corrected = closed_form_v(&g, &hv, ClosedForm::SignCorrected);
        assert!(cyb_by_matrices(&g, &corrected).is_zero(), "n = {n}");
    }
}

#[test]
fn projection_pipeline_reproduced_independently() {
    for n in 3..=5 {
        let hv = symmetric_progression(n);
        let e = build_example_with(n, &hv, ClosedForm::SignCorrected).unwrap();
        let g = &e.algebra;
        let projected = project_to_v(g, &e.r0, &e.decomposition).unwrap();
        assert!(cyb_by_matrices(g, &projected).is_zero());
        // g⁻¹ p(r0) g by explicit matrix products on each leg.
        let m = &e.conjugator;
        let minv = m.inverse().unwrap();
        let mut v = Tensor2::zero(g.dim());
        for ((i, j), c) in projected.iter() {
            let a = g.from_matrix(&minv.mul(&g.basis_matrix(i)).mul(m)).unwrap();
            let b = g.from_matrix(&minv.mul(&g.basis_matrix(j)).mul(m)).unwrap();
            for (k, x) in a.iter() {
                for (l, y) in b.iter() {
                    v.add_term((k, l), &(c * x * y));
                }
            }
        }
        let report = verify_example(&e).unwrap();
        assert_eq!(report.v, v);
        assert_eq!(v, e.expected_v);
        assert!(report.pass());
    }
}

#[test]
fn other_progressions_behave_the_same() {
    let hv = vec![q(5), q(1), q(-2), q(-4)];
    let printed = verify_example(&build_example_with(4, &hv, ClosedForm::AsPrinted).unwrap()).unwrap();
    let corrected = verify_example(&build_example_with(4, &hv, ClosedForm::SignCorrected).unwrap()).unwrap();
    assert!(corrected.pass());
    let verdicts: Vec<(&str, bool)> = printed.checks.iter().map(|c| (c.name, c.pass)).collect();
    assert_eq!(
        verdicts,
        [
            ("preconditions", true),
            ("cyb_projection", true),
            ("conjugate_into_p", true),
            ("matches_closed_form", false),
            ("cyb_closed_form", false)
        ]
    );
}
