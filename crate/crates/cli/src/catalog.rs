//! Catalogs of classified structures for a fixed `(g, U)`.

use std::collections::BTreeMap;

use dynr::dualnum::{
    build_lnb, classify_pair, is_lagrangian_subalgebra, is_poisson_homogeneous, lagrangian_from_bivector,
    lagrangian_to_pair, pair_to_lagrangian, SubalgebraPair,
};
use dynr::json::{
    tensor2_from_json, tensor2_to_json, CartanJson, CatalogDoc, CatalogEntryJson, DualSubspaceJson, PairJson,
};
use dynr::reductive::{enumerate_reductive, regular_element, root_subspace, subalgebra_from_subset};
use dynr::rmatrix::{alpha_values, build_x, classify_coefficients, is_in_momega, is_in_wedge2m_u, CoefficientFunction};
use dynr::{CartanElement, Error, LieAlgebra, Result, RootSubset};

/// Every oracle verdict for one `(N, h)`, keyed by a stable name.
pub fn digest(g: &LieAlgebra, u: &RootSubset, n: &RootSubset, h: &CartanElement) -> Result<BTreeMap<String, bool>> {
    let x = build_x(g, n, h, u)?;
    let mut d = BTreeMap::new();
    d.insert("wedge2m_u".to_string(), is_in_wedge2m_u(g, &x.tensor, u)?);
    d.insert("momega".to_string(), is_in_momega(g, &x)?);
    let f = CoefficientFunction::from_tensor(g, &x.tensor, u).expect("x has diagonal form");
    let classified = match classify_coefficients(g, &f, u)? {
        Ok((n2, h2)) => &n2 == n && alpha_values(g, &n2, &h2, u) == alpha_values(g, n, h, u),
        Err(_) => false,
    };
    d.insert("classify_roundtrip".to_string(), classified);
    let lb = lagrangian_from_bivector(g, u, &x.tensor)?;
    let verdict = is_lagrangian_subalgebra(g, &lb)?;
    d.insert("lagrangian_subalgebra".to_string(), verdict.all());
    d.insert("g_intersection_is_u".to_string(), lb.g_intersection() == subalgebra_from_subset(g, u)?);
    d.insert("lnb_matches".to_string(), build_lnb(g, n, h, u, -1)? == lb);
    let pair = SubalgebraPair::coboundary(g, root_subspace(g, n, true), h.neg().element())?;
    d.insert("pair_matches".to_string(), pair_to_lagrangian(g, &pair)? == lb);
    let pair_classified = match classify_pair(g, &pair, u)? {
        Ok((n2, h2)) => &n2 == n && alpha_values(g, n, &h2.neg(), u) == alpha_values(g, n, h, u),
        Err(_) => false,
    };
    d.insert("pair_classified".to_string(), pair_classified);
    d.insert("poisson_homogeneous".to_string(), is_poisson_homogeneous(g, u, &x.tensor)?);
    Ok(d)
}

/// One entry per reductive `N ⊇ U`, with the deterministic regular `h`.
pub fn build_catalog(g: &LieAlgebra, u: &RootSubset) -> Result<CatalogDoc> {
    let mut entries = Vec::new();
    for n in enumerate_reductive(g, u)? {
        let h = regular_element(g, &n, u)?
            .ok_or_else(|| Error::InvariantFailure(format!("no regular element for N = {}", n.display(g))))?;
        let x = build_x(g, &n, &h, u)?;
        let l = lagrangian_from_bivector(g, u, &x.tensor)?;
        let pair = lagrangian_to_pair(g, &l)?;
        entries.push(CatalogEntryJson {
            n: n.to_simple_coords(g),
            h: CartanJson::from_cartan(g, &h),
            tensor: tensor2_to_json(&x.tensor),
            lagrangian: DualSubspaceJson::from_dual(&l),
            pair: PairJson::from_pair(&pair),
            digest: digest(g, u, &n, &h)?,
        });
    }
    Ok(CatalogDoc { kind: CatalogDoc::KIND.into(), algebra: g.id(), u: u.to_simple_coords(g), entries })
}

/// Recomputes an entry from its `(N, h)` and lists every mismatch or
/// failing oracle.
pub fn verify_entry(g: &LieAlgebra, u: &RootSubset, e: &CatalogEntryJson) -> Result<Vec<String>> {
    let n = RootSubset::from_simple_coords(g, &e.n)?;
    let h = e.h.to_cartan(g)?;
    let mut problems = Vec::new();
    let x = build_x(g, &n, &h, u)?;
    if tensor2_from_json(g, &e.tensor)? != x.tensor {
        problems.push("tensor differs from x_{N,h}".to_string());
    }
    let l = lagrangian_from_bivector(g, u, &x.tensor)?;
    if e.lagrangian.to_dual()? != l {
        problems.push("lagrangian differs from the bivector construction".to_string());
    }
    match e.pair.to_pair(g) {
        Ok(p) if p == lagrangian_to_pair(g, &l)? => {}
        Ok(_) => problems.push("pair differs from lagrangian_to_pair".to_string()),
        Err(err) => problems.push(format!("pair is invalid: {err}")),
    }
    let fresh = digest(g, u, &n, &h)?;
    for (k, v) in &fresh {
        if !v {
            problems.push(format!("oracle {k} fails"));
        }
    }
    if fresh != e.digest {
        problems.push("stored digest differs from recomputed digest".to_string());
    }
    Ok(problems)
}
