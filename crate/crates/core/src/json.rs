//! JSON documents exchanged by the command-line tool.
//!
//! Rationals are strings `"p/q"` (or `"p"`). Tensors are lists of basis-index
//! tuples followed by a coefficient, sorted by index. Root lists use simple
//! coordinates. Every document carries `kind` and `algebra`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{LieAlgebra, Rational, Subspace};
use crate::dualnum::{DualSubspace, SubalgebraPair};
use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, parse_rational};
use crate::reductive::{CartanElement, RootSubset};
use crate::rmatrix::{Provenance, RMatrixCandidate};
use crate::tensor::{Tensor2, Tensor3};

pub type Tensor2Json = Vec<(usize, usize, String)>;
pub type Tensor3Json = Vec<(usize, usize, usize, String)>;

pub fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse(format!("not a rational: {s:?}")))
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| rational(s)).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

pub fn tensor2_to_json(t: &Tensor2) -> Tensor2Json {
    t.iter().map(|((i, j), c)| (i, j, fmt_rational(c))).collect()
}

pub fn tensor2_from_json(g: &LieAlgebra, entries: &Tensor2Json) -> Result<Tensor2> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for (pos, (i, j, c)) in entries.iter().enumerate() {
        if !seen.insert((*i, *j)) {
            return Err(Error::Parse(format!("entry {pos}: duplicate index ({i}, {j})")));
        }
        out.push(((*i, *j), rational(c).map_err(|e| Error::Parse(format!("entry {pos}: {e}")))?));
    }
    Tensor2::from_entries(g.dim(), out)
}

pub fn tensor3_to_json(t: &Tensor3) -> Tensor3Json {
    t.iter().map(|((i, j, k), c)| (i, j, k, fmt_rational(c))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub rows: Vec<Vec<String>>,
}

impl SubspaceJson {
    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceJson { ambient_dim: s.ambient_dim(), rows: s.rows().iter().map(|r| strings(r)).collect() }
    }

    pub fn to_subspace(&self) -> Result<Subspace> {
        let rows = self.rows.iter().map(|r| rationals(r)).collect::<Result<_>>()?;
        Subspace::from_rows(self.ambient_dim, rows)
    }
}

/// RREF rows of width `2·g_dim`; the first `g_dim` columns are the `g`-part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSubspaceJson {
    pub g_dim: usize,
    pub layout: String,
    pub rows: Vec<Vec<String>>,
}

const DUAL_LAYOUT: &str = "g|eps";

impl DualSubspaceJson {
    pub fn from_dual(l: &DualSubspace) -> Self {
        DualSubspaceJson {
            g_dim: l.g_dim(),
            layout: DUAL_LAYOUT.into(),
            rows: l.rows().iter().map(|r| strings(r)).collect(),
        }
    }

    pub fn to_dual(&self) -> Result<DualSubspace> {
        if self.layout != DUAL_LAYOUT {
            return Err(Error::Parse(format!("unknown layout {:?}, expected {DUAL_LAYOUT:?}", self.layout)));
        }
        let rows = self.rows.iter().map(|r| rationals(r)).collect::<Result<_>>()?;
        DualSubspace::from_rows(self.g_dim, rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub diagonal: Vec<String>,
}

impl CartanJson {
    pub fn from_cartan(g: &LieAlgebra, h: &CartanElement) -> Self {
        CartanJson { diagonal: strings(&h.diagonal(g)) }
    }

    pub fn to_cartan(&self, g: &LieAlgebra) -> Result<CartanElement> {
        CartanElement::from_diagonal(g, &rationals(&self.diagonal)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    #[serde(rename = "N")]
    pub n: Vec<Vec<i64>>,
    pub h: CartanJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixDoc {
    pub kind: String,
    pub algebra: String,
    #[serde(rename = "U")]
    pub u: Vec<Vec<i64>>,
    pub tensor: Tensor2Json,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Tensor2Json,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceJson>,
}

impl RMatrixDoc {
    pub const KIND: &'static str = "rmatrix";

    pub fn from_candidate(g: &LieAlgebra, c: &RMatrixCandidate) -> Self {
        RMatrixDoc {
            kind: Self::KIND.into(),
            algebra: g.id(),
            u: c.u.to_simple_coords(g),
            tensor: tensor2_to_json(&c.tensor),
            omega: tensor2_to_json(&c.omega),
            provenance: c
                .provenance
                .as_ref()
                .map(|p| ProvenanceJson { n: p.n.to_simple_coords(g), h: CartanJson::from_cartan(g, &p.h) }),
        }
    }

    pub fn to_candidate(&self) -> Result<(LieAlgebra, RMatrixCandidate)> {
        expect_kind(&self.kind, Self::KIND)?;
        let g = LieAlgebra::from_id(&self.algebra)?;
        let u = RootSubset::from_simple_coords(&g, &self.u)?;
        let tensor = tensor2_from_json(&g, &self.tensor)?;
        let omega = tensor2_from_json(&g, &self.omega)?;
        let provenance = match &self.provenance {
            Some(p) => Some(Provenance { n: RootSubset::from_simple_coords(&g, &p.n)?, h: p.h.to_cartan(&g)? }),
            None => None,
        };
        Ok((g, RMatrixCandidate { tensor, u, omega, provenance }))
    }
}

/// A bare tensor, e.g. a twist `s` or base `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDoc {
    pub kind: String,
    pub algebra: String,
    pub tensor: Tensor2Json,
}

impl TensorDoc {
    pub const KIND: &'static str = "tensor";

    pub fn new(g: &LieAlgebra, t: &Tensor2) -> Self {
        TensorDoc { kind: Self::KIND.into(), algebra: g.id(), tensor: tensor2_to_json(t) }
    }
}

/// Reads a `tensor` or `rmatrix` document as a plain tensor.
pub fn read_tensor(text: &str) -> Result<(LieAlgebra, Tensor2)> {
    match kind_of(text)?.as_str() {
        RMatrixDoc::KIND => {
            let (g, c) = parse::<RMatrixDoc>(text)?.to_candidate()?;
            Ok((g, c.tensor))
        }
        TensorDoc::KIND => {
            let d: TensorDoc = parse(text)?;
            let g = LieAlgebra::from_id(&d.algebra)?;
            let t = tensor2_from_json(&g, &d.tensor)?;
            Ok((g, t))
        }
        other => Err(Error::Parse(format!("expected a tensor or rmatrix document, got kind {other:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub n: SubspaceJson,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

impl PairJson {
    pub fn from_pair(p: &SubalgebraPair) -> Self {
        PairJson { n: SubspaceJson::from_subspace(p.n()), b: p.matrix().iter().map(|r| strings(r)).collect() }
    }

    pub fn to_pair(&self, g: &LieAlgebra) -> Result<SubalgebraPair> {
        let n = self.n.to_subspace()?;
        if n.ambient_dim() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: n.ambient_dim() });
        }
        let b = self.b.iter().map(|r| rationals(r)).collect::<Result<_>>()?;
        SubalgebraPair::new(g, n, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub kind: String,
    pub algebra: String,
    #[serde(flatten)]
    pub pair: PairJson,
}

impl PairDoc {
    pub const KIND: &'static str = "pair";

    pub fn new(g: &LieAlgebra, p: &SubalgebraPair) -> Self {
        PairDoc { kind: Self::KIND.into(), algebra: g.id(), pair: PairJson::from_pair(p) }
    }

    pub fn read(&self) -> Result<(LieAlgebra, SubalgebraPair)> {
        expect_kind(&self.kind, Self::KIND)?;
        let g = LieAlgebra::from_id(&self.algebra)?;
        let p = self.pair.to_pair(&g)?;
        Ok((g, p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LagrangianDoc {
    pub kind: String,
    pub algebra: String,
    pub lagrangian: DualSubspaceJson,
}

impl LagrangianDoc {
    pub const KIND: &'static str = "lagrangian";

    pub fn new(g: &LieAlgebra, l: &DualSubspace) -> Self {
        LagrangianDoc { kind: Self::KIND.into(), algebra: g.id(), lagrangian: DualSubspaceJson::from_dual(l) }
    }

    pub fn read(&self) -> Result<(LieAlgebra, DualSubspace)> {
        expect_kind(&self.kind, Self::KIND)?;
        let g = LieAlgebra::from_id(&self.algebra)?;
        let l = self.lagrangian.to_dual()?;
        if l.g_dim() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: l.g_dim() });
        }
        Ok((g, l))
    }
}

/// One classified structure: `(N, h)` with its three representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    #[serde(rename = "N")]
    pub n: Vec<Vec<i64>>,
    pub h: CartanJson,
    pub tensor: Tensor2Json,
    pub lagrangian: DualSubspaceJson,
    pub pair: PairJson,
    pub digest: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub kind: String,
    pub algebra: String,
    #[serde(rename = "U")]
    pub u: Vec<Vec<i64>>,
    pub entries: Vec<CatalogEntryJson>,
}

impl CatalogDoc {
    pub const KIND: &'static str = "catalog";
}

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

pub fn kind_of(text: &str) -> Result<String> {
    Ok(parse::<KindOnly>(text)?.kind)
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn expect_kind(got: &str, want: &str) -> Result<()> {
    if got != want {
        return Err(Error::Parse(format!("expected kind {want:?}, got {got:?}")));
    }
    Ok(())
}
