use std::io::Write;
use std::path::{Path, PathBuf};

use rand::rngs::StdRng;
use rand::SeedableRng;

use dynr::dualnum::{
    build_lnb, classify_pair, is_lagrangian_subalgebra, lagrangian_from_bivector, lagrangian_to_pair,
    pair_to_lagrangian,
};
use dynr::dynconst::{build_example_with, symmetric_progression, verify_example, ClosedForm};
use dynr::json::{self, tensor3_to_json, CatalogDoc, LagrangianDoc, PairDoc, RMatrixDoc, TensorDoc};
use dynr::linalg::fmt_rational;
use dynr::reductive::{enumerate_reductive, is_reductive, reductivity_violation, regular_element};
use dynr::rmatrix::{build_x, classify_coefficients, is_in_wedge2m_u, momega_report, CoefficientFunction};
use dynr::tensor::cyb;
use dynr::twist::{general_residual, standard_solutions, triangular_residual, Cobracket};
use dynr::{CartanElement, Error, LieAlgebra, Rational, Result, RootSubset};

use crate::catalog::{build_catalog, verify_entry};
use crate::gen::{random_pair, random_skew};
use crate::{
    ClosedFormArg, Command, ExampleCmd, LagrangianCmd, OutArg, RmatrixCmd, Sign, StructureArgs, TwistCmd, EXIT_OK,
    EXIT_VERIFY, OUT_DIR_ENV,
};

type Out<'a> = &'a mut dyn Write;

pub(crate) fn dispatch(cmd: Command, out: Out) -> Result<i32> {
    match cmd {
        Command::Info(a) => info(&a.algebra, out),
        Command::Reductive(a) => reductive(&a.algebra, &a.contains, out),
        Command::Rmatrix(RmatrixCmd::Build { s, out: o }) => rmatrix_build(&s, &o, out),
        Command::Rmatrix(RmatrixCmd::Verify(f)) => rmatrix_verify(&read(&f.file)?, out),
        Command::Lagrangian(c) => lagrangian(c, out),
        Command::Twist(TwistCmd::Check { rho, s }) => twist_check(&rho, &s, out),
        Command::Example(ExampleCmd::AppendixB { n, h, closed_form, dump }) => {
            example(n, h.as_deref(), closed_form, dump.as_deref(), out)
        }
        Command::Catalog(a) => catalog(&a.algebra, &a.u, &a.out, out),
        Command::Verify(f) => verify(&read(&f.file)?, out),
        Command::Selftest(a) => selftest(a.seed, a.cases, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn resolve(p: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
}

fn emit(text: &str, o: &OutArg, out: Out) -> Result<()> {
    match &o.out {
        Some(p) => {
            let p = resolve(p);
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(io)?;
            }
            std::fs::write(&p, text).map_err(io)?;
            writeln!(out, "wrote {}", p.display()).map_err(io)
        }
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn line(out: Out, pass: bool, name: &str, detail: &str) -> Result<()> {
    let tag = if pass { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        writeln!(out, "{tag}  {name}").map_err(io)
    } else {
        writeln!(out, "{tag}  {name}: {detail}").map_err(io)
    }
}

fn verdict(all: bool) -> i32 {
    if all {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

/// Simple-coordinate root list, closed under negation, required reductive.
fn parse_roots(g: &LieAlgebra, text: &str, name: &str) -> Result<RootSubset> {
    let coords: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}: expected [[..],..]: {e}")))?;
    let s = RootSubset::from_simple_coords(g, &coords).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
    let s = RootSubset::symmetric(g, s.roots().iter().copied())?;
    if let Some(v) = reductivity_violation(g, &s) {
        return Err(Error::Precondition(format!("{name} = {} is not reductive: {v}", s.display(g))));
    }
    Ok(s)
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .enumerate()
        .map(|(i, t)| json::rational(t.trim()).map_err(|e| Error::Parse(format!("h entry {i}: {e}"))))
        .collect()
}

fn parse_h(g: &LieAlgebra, text: &str, n: &RootSubset, u: &RootSubset) -> Result<CartanElement> {
    if text.trim() == "auto" {
        return regular_element(g, n, u)?.ok_or_else(|| Error::Precondition("no (N,U)-regular element exists".into()));
    }
    CartanElement::from_diagonal(g, &parse_rationals(text)?)
}

fn structure(s: &StructureArgs) -> Result<(LieAlgebra, RootSubset, RootSubset, CartanElement)> {
    let g = LieAlgebra::from_id(&s.algebra)?;
    let u = parse_roots(&g, &s.u, "U")?;
    let n = parse_roots(&g, &s.n, "N")?;
    let h = parse_h(&g, &s.h, &n, &u)?;
    Ok((g, u, n, h))
}

fn info(id: &str, out: Out) -> Result<i32> {
    let g = LieAlgebra::from_id(id)?;
    writeln!(out, "algebra {} = sl({})", g.id(), g.matrix_size()).map_err(io)?;
    writeln!(out, "rank {}  dim {}  roots {}", g.rank(), g.dim(), g.num_roots()).map_err(io)?;
    let labels: Vec<String> = (0..g.dim()).map(|i| g.basis_label(i)).collect();
    writeln!(out, "basis {}", labels.join(" ")).map_err(io)?;
    writeln!(out, "roots (index, simple coordinates, root vector):").map_err(io)?;
    for r in 0..g.num_roots() {
        let c: Vec<String> = g.root(r).simple_coords().iter().map(|x| x.to_string()).collect();
        writeln!(out, "  {r:>3}  [{}]  {}", c.join(","), g.basis_label(g.root_basis_index(r))).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn reductive(id: &str, contains: &str, out: Out) -> Result<i32> {
    let g = LieAlgebra::from_id(id)?;
    let c = parse_roots(&g, contains, "contains")?;
    let all = enumerate_reductive(&g, &c)?;
    writeln!(out, "reductive subsets of {} containing {}: {}", g.id(), c.display(&g), all.len()).map_err(io)?;
    for s in &all {
        writeln!(out, "  {}", serde_json::to_string(&s.to_simple_coords(&g)).expect("ints serialize")).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn rmatrix_build(s: &StructureArgs, o: &OutArg, out: Out) -> Result<i32> {
    let (g, u, n, h) = structure(s)?;
    let c = build_x(&g, &n, &h, &u)?;
    emit(&json::to_string(&RMatrixDoc::from_candidate(&g, &c)), o, out)?;
    Ok(EXIT_OK)
}

fn rmatrix_verify(text: &str, out: Out) -> Result<i32> {
    let (g, c) = json::parse::<RMatrixDoc>(text)?.to_candidate()?;
    let mut ok = true;
    if !is_reductive(&g, &c.u) {
        return Err(Error::Precondition(format!("U = {} is not reductive", c.u.display(&g))));
    }
    let half = Rational::new(1.into(), 2.into());
    let skew = c.tensor.sub(&c.omega.scaled(&half));
    match is_in_wedge2m_u(&g, &skew, &c.u) {
        Ok(b) => {
            line(out, b, "wedge2m_u", "x − Ω/2 ∈ (∧²m)^u, structural and tensor-level agree")?;
            ok &= b;
        }
        Err(e) => {
            line(out, false, "wedge2m_u", &e.to_string())?;
            ok = false;
        }
    }
    let r = momega_report(&g, &c)?;
    let agree = r.structural.is_none_or(|s| s == r.tensor_level);
    let detail = match r.structural {
        Some(s) => format!("structural {s}, tensor-level {}", r.tensor_level),
        None => format!("tensor-level {} (Ω ≠ 0: structural test not applicable, flagged)", r.tensor_level),
    };
    line(out, r.tensor_level && agree, "momega", &detail)?;
    ok &= r.tensor_level && agree;
    if let Some(p) = &c.provenance {
        let same = build_x(&g, &p.n, &p.h, &c.u).map(|x| x.tensor == c.tensor);
        match &same {
            Ok(b) => {
                line(out, *b, "provenance", if *b { "tensor equals x_{N,h}" } else { "tensor differs from x_{N,h}" })?
            }
            Err(e) => line(out, false, "provenance", &e.to_string())?,
        }
        ok &= matches!(same, Ok(true));
    }
    if c.omega.is_zero() {
        match CoefficientFunction::from_tensor(&g, &c.tensor, &c.u) {
            Some(f) => match classify_coefficients(&g, &f, &c.u)? {
                Ok((n, h)) => {
                    let d: Vec<String> = h.diagonal(&g).iter().map(fmt_rational).collect();
                    writeln!(out, "info  classified: N = {}, h = diag({})", n.display(&g), d.join(", ")).map_err(io)?;
                }
                Err(rej) => writeln!(out, "info  rejected: {rej}").map_err(io)?,
            },
            None => writeln!(out, "info  not in diagonal form; no coefficient classification").map_err(io)?,
        }
    }
    Ok(verdict(ok))
}

fn lagrangian(cmd: LagrangianCmd, out: Out) -> Result<i32> {
    match cmd {
        LagrangianCmd::BuildFromPair { file, out: o } => {
            let (g, p) = json::parse::<PairDoc>(&read(&file)?)?.read()?;
            let l = pair_to_lagrangian(&g, &p)?;
            emit(&json::to_string(&LagrangianDoc::new(&g, &l)), &o, out)?;
            Ok(EXIT_OK)
        }
        LagrangianCmd::BuildLnb { s, sign, out: o } => {
            let (g, u, n, h) = structure(&s)?;
            let sign = match sign {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
            let l = build_lnb(&g, &n, &h, &u, sign)?;
            emit(&json::to_string(&LagrangianDoc::new(&g, &l)), &o, out)?;
            Ok(EXIT_OK)
        }
        LagrangianCmd::FromBivector { file, u, out: o } => {
            let text = read(&file)?;
            let (g, b, file_u) = match json::kind_of(&text)?.as_str() {
                RMatrixDoc::KIND => {
                    let (g, c) = json::parse::<RMatrixDoc>(&text)?.to_candidate()?;
                    (g, c.tensor, Some(c.u))
                }
                _ => {
                    let (g, t) = json::read_tensor(&text)?;
                    (g, t, None)
                }
            };
            let u = match (u, file_u) {
                (Some(t), _) => parse_roots(&g, &t, "U")?,
                (None, Some(u)) => u,
                (None, None) => return Err(Error::Parse("--U is required for a bare tensor".into())),
            };
            let l = lagrangian_from_bivector(&g, &u, &b)?;
            emit(&json::to_string(&LagrangianDoc::new(&g, &l)), &o, out)?;
            Ok(EXIT_OK)
        }
        LagrangianCmd::ToPair { file, out: o } => {
            let (g, l) = json::parse::<LagrangianDoc>(&read(&file)?)?.read()?;
            match lagrangian_to_pair(&g, &l) {
                Ok(p) => {
                    emit(&json::to_string(&PairDoc::new(&g, &p)), &o, out)?;
                    Ok(EXIT_OK)
                }
                Err(e @ (Error::Precondition(_) | Error::InvariantFailure(_))) => {
                    line(out, false, "to_pair", &e.to_string())?;
                    Ok(EXIT_VERIFY)
                }
                Err(e) => Err(e),
            }
        }
        LagrangianCmd::Verify(f) => lagrangian_verify(&read(&f.file)?, out),
    }
}

fn lagrangian_verify(text: &str, out: Out) -> Result<i32> {
    let (g, l) = json::parse::<LagrangianDoc>(text)?.read()?;
    let v = is_lagrangian_subalgebra(&g, &l)?;
    line(out, v.isotropic, "isotropic", "")?;
    line(out, v.dimension_ok, "dimension", &format!("dim l = {}, dim g = {}", l.dim(), g.dim()))?;
    line(out, v.subalgebra, "subalgebra", "")?;
    if !v.all() {
        return Ok(EXIT_VERIFY);
    }
    let p = match lagrangian_to_pair(&g, &l) {
        Ok(p) => p,
        Err(e) => {
            line(out, false, "pair_roundtrip", &e.to_string())?;
            return Ok(EXIT_VERIFY);
        }
    };
    line(out, true, "pair_roundtrip", &format!("dim n = {}, dim l ∩ g = {}", p.n().dim(), l.g_intersection().dim()))?;
    Ok(EXIT_OK)
}

fn pair_verify(text: &str, out: Out) -> Result<i32> {
    let doc: PairDoc = json::parse(text)?;
    if doc.kind != PairDoc::KIND {
        return Err(Error::Parse(format!("expected kind \"pair\", got {:?}", doc.kind)));
    }
    let g = LieAlgebra::from_id(&doc.algebra)?;
    let p = match doc.pair.to_pair(&g) {
        Ok(p) => p,
        Err(e @ Error::Precondition(_)) => {
            line(out, false, "pair", &e.to_string())?;
            return Ok(EXIT_VERIFY);
        }
        Err(e) => return Err(e),
    };
    line(out, true, "pair", "n is a subalgebra, B is a skew 2-cocycle")?;
    let l = pair_to_lagrangian(&g, &p)?;
    let v = is_lagrangian_subalgebra(&g, &l)?;
    line(out, v.all(), "lagrangian", &format!("{v:?}"))?;
    let back = lagrangian_to_pair(&g, &l).map(|q| q == p).unwrap_or(false);
    line(out, back, "roundtrip", "")?;
    if g.cartan().is_subspace_of(p.n()) {
        let kernel = p.kernel(&g);
        let u = RootSubset::new(&g, (0..g.num_roots()).filter(|&r| kernel.contains_element(&g.root_vector(r))))?;
        if is_reductive(&g, &u) {
            match classify_pair(&g, &p, &u)? {
                Ok((n, h)) => {
                    let d: Vec<String> = h.diagonal(&g).iter().map(fmt_rational).collect();
                    writeln!(
                        out,
                        "info  classified with U = {}: N = {}, h = diag({})",
                        u.display(&g),
                        n.display(&g),
                        d.join(", ")
                    )
                    .map_err(io)?;
                }
                Err(r) => writeln!(out, "info  not classified: {r}").map_err(io)?,
            }
        }
    }
    Ok(verdict(v.all() && back))
}

fn twist_check(rho: &Path, s: &Path, out: Out) -> Result<i32> {
    let (g, rho) = json::read_tensor(&read(rho)?)?;
    let (g2, s) = json::read_tensor(&read(s)?)?;
    if g.id() != g2.id() {
        return Err(Error::Parse(format!("ρ is over {} but s is over {}", g.id(), g2.id())));
    }
    let delta = Cobracket::from_r(&g, &rho)?;
    writeln!(out, "info  CYB(ρ) = 0: {}", delta.from_cybe_solution).map_err(io)?;
    let general = general_residual(&g, &delta, &s)?;
    let triangular = triangular_residual(&g, &rho, &s)?;
    line(out, general.is_zero(), "general", "CYB(s) = Alt(δ⊗id)(s)")?;
    line(out, triangular.is_zero(), "triangular", "CYB(s) + [[ρ,s]] + [[s,ρ]] = 0")?;
    let agree = general.is_zero() == triangular.is_zero();
    line(out, agree, "agreement", "")?;
    if !triangular.is_zero() {
        writeln!(out, "residual {}", serde_json::to_string(&tensor3_to_json(&triangular)).expect("serialize"))
            .map_err(io)?;
    }
    Ok(verdict(general.is_zero() && triangular.is_zero() && agree))
}

fn example(n: usize, h: Option<&str>, form: ClosedFormArg, dump: Option<&Path>, out: Out) -> Result<i32> {
    let hvals = match h {
        Some(t) => parse_rationals(t)?,
        None => symmetric_progression(n),
    };
    let form = match form {
        ClosedFormArg::Printed => ClosedForm::AsPrinted,
        ClosedFormArg::Corrected => ClosedForm::SignCorrected,
    };
    let e = build_example_with(n, &hvals, form)?;
    let report = verify_example(&e)?;
    let hs: Vec<String> = hvals.iter().map(fmt_rational).collect();
    writeln!(out, "sl({n}), h = ({}), closed form: {form:?}", hs.join(", ")).map_err(io)?;
    for c in &report.checks {
        line(out, c.pass, c.name, &format!("{} residual terms", c.residual.len()))?;
        for r in &c.residual {
            writeln!(out, "        {r}").map_err(io)?;
        }
    }
    if let Some(dir) = dump {
        let dir = resolve(dir);
        std::fs::create_dir_all(&dir).map_err(io)?;
        let g = &e.algebra;
        for (name, t) in
            [("r0", &e.r0), ("projected", &report.projected), ("v", &report.v), ("expected_v", &e.expected_v)]
        {
            let p = dir.join(format!("{name}.json"));
            std::fs::write(&p, json::to_string(&TensorDoc::new(g, t))).map_err(io)?;
            writeln!(out, "wrote {}", p.display()).map_err(io)?;
        }
    }
    Ok(verdict(report.pass()))
}

fn catalog(id: &str, u: &str, o: &OutArg, out: Out) -> Result<i32> {
    let g = LieAlgebra::from_id(id)?;
    let u = parse_roots(&g, u, "U")?;
    let doc = build_catalog(&g, &u)?;
    let all = doc.entries.iter().all(|e| e.digest.values().all(|&b| b));
    emit(&json::to_string(&doc), o, out)?;
    Ok(verdict(all))
}

fn catalog_verify(text: &str, out: Out) -> Result<i32> {
    let doc: CatalogDoc = json::parse(text)?;
    let g = LieAlgebra::from_id(&doc.algebra)?;
    let u = RootSubset::from_simple_coords(&g, &doc.u)?;
    let expected: Vec<Vec<Vec<i64>>> = enumerate_reductive(&g, &u)?.iter().map(|n| n.to_simple_coords(&g)).collect();
    let listed: Vec<Vec<Vec<i64>>> = doc.entries.iter().map(|e| e.n.clone()).collect();
    let complete = expected == listed;
    line(out, complete, "complete", &format!("{} entries, {} reductive N ⊇ U", listed.len(), expected.len()))?;
    let mut ok = complete;
    for (k, e) in doc.entries.iter().enumerate() {
        let problems = verify_entry(&g, &u, e)?;
        let n = serde_json::to_string(&e.n).expect("serialize");
        line(out, problems.is_empty(), &format!("entry {k} N = {n}"), &problems.join("; "))?;
        ok &= problems.is_empty();
    }
    Ok(verdict(ok))
}

fn verify(text: &str, out: Out) -> Result<i32> {
    match json::kind_of(text)?.as_str() {
        RMatrixDoc::KIND => rmatrix_verify(text, out),
        LagrangianDoc::KIND => lagrangian_verify(text, out),
        PairDoc::KIND => pair_verify(text, out),
        CatalogDoc::KIND => catalog_verify(text, out),
        other => Err(Error::Parse(format!("nothing to verify for kind {other:?}"))),
    }
}

fn selftest(seed: u64, cases: usize, out: Out) -> Result<i32> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ok = true;
    for rank in 1..=3 {
        let g = LieAlgebra::build("A", rank)?;
        let mut good = 0;
        for _ in 0..cases {
            let p = random_pair(&mut rng, &g)?;
            let l = pair_to_lagrangian(&g, &p)?;
            if lagrangian_to_pair(&g, &l).map(|q| q == p).unwrap_or(false) {
                good += 1;
            }
        }
        line(out, good == cases, &format!("pair roundtrip {}", g.id()), &format!("{good}/{cases}"))?;
        ok &= good == cases;
    }
    for rank in 1..=2 {
        let g = LieAlgebra::build("A", rank)?;
        let mut good = 0;
        let mut total = 0;
        for rho in standard_solutions(&g) {
            debug_assert!(cyb(&g, &rho)?.is_zero());
            let delta = Cobracket::from_r(&g, &rho)?;
            for _ in 0..cases {
                let s = random_skew(&mut rng, &g, 3);
                total += 1;
                if general_residual(&g, &delta, &s)?.is_zero() == triangular_residual(&g, &rho, &s)?.is_zero() {
                    good += 1;
                }
            }
        }
        line(out, good == total, &format!("twist equivalence {}", g.id()), &format!("{good}/{total}"))?;
        ok &= good == total;
    }
    Ok(verdict(ok))
}
