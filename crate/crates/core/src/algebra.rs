//! Type-A simple Lie algebras `sl(n)` in their matrix realization.
//!
//! The basis is ordered as `H_1..H_{n-1}` (with `H_k = E_kk - E_{k+1,k+1}`),
//! then the positive root vectors `E_ij` (`i < j`, sorted by `(i, j)`), then the
//! negative root vectors `E_ji` in the same order. Structure constants come
//! from actual matrix commutators and the invariant form is the trace form, so
//! `<E_a, E_-a> = 1` holds for every root without rescaling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q};

pub use crate::linalg::Rational;

/// Default rank ceiling for [`LieAlgebra::build`].
pub const DEFAULT_MAX_RANK: usize = 6;

/// A root `e_i - e_j` of `A_{n-1}`, stored as its integer coordinate vector of
/// length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    /// `e_i - e_j` in an ambient of size `n` (0-based indices).
    pub fn e(n: usize, i: usize, j: usize) -> Root {
        assert!(i != j && i < n && j < n);
        let mut coords = vec![0; n];
        coords[i] = 1;
        coords[j] = -1;
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `(i, j)` with `self = e_i - e_j`.
    pub fn ij(&self) -> (usize, usize) {
        let i = self.coords.iter().position(|&c| c == 1).expect("root has a +1");
        let j = self.coords.iter().position(|&c| c == -1).expect("root has a -1");
        (i, j)
    }

    pub fn is_positive(&self) -> bool {
        let (i, j) = self.ij();
        i < j
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Coordinates in the basis of simple roots `e_k - e_{k+1}`.
    pub fn simple_coords(&self) -> Vec<i64> {
        let mut acc = 0;
        self.coords[..self.coords.len() - 1]
            .iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect()
    }

    /// Inverse of [`Root::simple_coords`]. Returns `None` when the vector is
    /// not a root of `A_{len}`.
    pub fn from_simple_coords(c: &[i64]) -> Option<Root> {
        let n = c.len() + 1;
        let mut coords = vec![0; n];
        let mut prev = 0;
        for (k, &ck) in c.iter().enumerate() {
            coords[k] = ck - prev;
            prev = ck;
        }
        coords[n - 1] = -prev;
        let ones = coords.iter().filter(|&&x| x == 1).count();
        let minus = coords.iter().filter(|&&x| x == -1).count();
        let zeros = coords.iter().filter(|&&x| x == 0).count();
        (ones == 1 && minus == 1 && zeros == n - 2).then_some(Root { coords })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.simple_coords().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Sparse element of `g`: basis index -> coefficient, zeros never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: BTreeMap<usize, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, Rational::one());
        LieElement { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Self::zero();
        for (i, c) in pairs {
            e.add_term(i, &c);
        }
        e
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        Self::from_pairs(v.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rational, other: &LieElement) {
        if c.is_zero() {
            return;
        }
        for (&i, v) in &other.coeffs {
            self.add_term(i, &(c * v));
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut r = self.clone();
        r.axpy(&Rational::one(), other);
        r
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut r = self.clone();
        r.axpy(&-Rational::one(), other);
        r
    }

    pub fn scaled(&self, c: &Rational) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        LieElement { coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * c)).collect() }
    }
}

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zero(n: usize) -> Matrix {
        Matrix { rows: vec![vec![Rational::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        m.rows[i][j] = Rational::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.len() });
        }
        Ok(Matrix { rows })
    }

    pub fn diag(d: &[Rational]) -> Matrix {
        let mut m = Matrix::zero(d.len());
        for (i, x) in d.iter().enumerate() {
            m.rows[i][i] = x.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.rows[i][j] = v;
    }

    pub fn trace(&self) -> Rational {
        (0..self.size()).fold(Rational::zero(), |acc, i| acc + &self.rows[i][i])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size();
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let rows =
            self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        Matrix { rows }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        linalg::invert(&self.rows).map(|rows| Matrix { rows }).ok_or(Error::Singular)
    }
}

/// `sl(rank+1)` with its bracket table, form Gram matrix and root data.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rank: usize,
    roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    neg: Vec<usize>,
    bracket: Vec<Vec<LieElement>>,
    gram: Vec<Vec<Rational>>,
    form_scale: Rational,
}

impl LieAlgebra {
    /// Builds the algebra of the given series and rank. Only series `"A"` is
    /// supported; rank must lie in `1..=DEFAULT_MAX_RANK`.
    pub fn build(series: &str, rank: usize) -> Result<LieAlgebra> {
        Self::build_with_max_rank(series, rank, DEFAULT_MAX_RANK)
    }

    pub fn build_with_max_rank(series: &str, rank: usize, max_rank: usize) -> Result<LieAlgebra> {
        if series != "A" {
            return Err(Error::UnsupportedSeries(series.to_string()));
        }
        if rank == 0 || rank > max_rank {
            return Err(Error::RankOutOfRange { rank, max: max_rank });
        }
        Ok(Self::type_a(rank))
    }

    /// Parses identifiers like `"A2"`.
    pub fn from_id(id: &str) -> Result<LieAlgebra> {
        let id = id.trim();
        let split = id.find(|c: char| c.is_ascii_digit()).unwrap_or(id.len());
        let (series, rank) = id.split_at(split);
        let rank: usize = rank.parse().map_err(|_| Error::Parse(format!("bad algebra identifier {id:?}")))?;
        Self::build(series, rank)
    }

    fn type_a(rank: usize) -> LieAlgebra {
        let n = rank + 1;
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                roots.push(Root::e(n, i, j));
            }
        }
        let npos = roots.len();
        for k in 0..npos {
            let r = roots[k].neg();
            roots.push(r);
        }
        let root_index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg = roots.iter().map(|r| root_index[&r.neg()]).collect();
        let dim = rank + roots.len();

        // Sparse integer matrix units for each basis element.
        let mut units: Vec<Vec<(usize, usize, i64)>> = (0..rank).map(|k| vec![(k, k, 1), (k + 1, k + 1, -1)]).collect();
        units.extend(roots.iter().map(|r| {
            let (i, j) = r.ij();
            vec![(i, j, 1)]
        }));

        let decompose = |m: &BTreeMap<(usize, usize), i64>| -> LieElement {
            let mut e = LieElement::zero();
            let mut partial = 0;
            for k in 0..rank {
                partial += m.get(&(k, k)).copied().unwrap_or(0);
                e.add_term(k, &q(partial));
            }
            for (&(i, j), &v) in m {
                if i != j {
                    e.add_term(rank + root_index[&Root::e(n, i, j)], &q(v));
                }
            }
            e
        };

        let product = |a: &[(usize, usize, i64)],
                       b: &[(usize, usize, i64)],
                       sign: i64,
                       acc: &mut BTreeMap<(usize, usize), i64>| {
            for &(i, k, x) in a {
                for &(k2, j, y) in b {
                    if k == k2 {
                        *acc.entry((i, j)).or_insert(0) += sign * x * y;
                    }
                }
            }
        };

        let mut bracket = vec![vec![LieElement::zero(); dim]; dim];
        let mut gram = vec![vec![Rational::zero(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let mut acc = BTreeMap::new();
                product(&units[a], &units[b], 1, &mut acc);
                let tr: i64 = acc.iter().filter(|((i, j), _)| i == j).map(|(_, v)| v).sum();
                gram[a][b] = q(tr);
                product(&units[b], &units[a], -1, &mut acc);
                acc.retain(|_, v| *v != 0);
                bracket[a][b] = decompose(&acc);
            }
        }

        LieAlgebra { rank, roots, root_index, neg, bracket, gram, form_scale: Rational::one() }
    }

    /// Same algebra with the invariant form multiplied by `factor`.
    pub fn with_scaled_form(&self, factor: &Rational) -> LieAlgebra {
        assert!(!factor.is_zero(), "form must stay nondegenerate");
        let mut g = self.clone();
        for row in &mut g.gram {
            for x in row.iter_mut() {
                *x *= factor;
            }
        }
        g.form_scale *= factor;
        g
    }

    pub fn form_scale(&self) -> &Rational {
        &self.form_scale
    }

    pub fn id(&self) -> String {
        format!("A{}", self.rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size `n` of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.rank + 1
    }

    pub fn dim(&self) -> usize {
        self.rank + self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.roots.len() / 2
    }

    pub fn root(&self, r: usize) -> &Root {
        &self.roots[r]
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// Index of `-α`.
    pub fn neg_root(&self, r: usize) -> usize {
        self.neg[r]
    }

    /// Index of `α + β` when it is a root.
    pub fn root_sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].coords.iter().zip(&self.roots[b].coords).map(|(x, y)| x + y).collect();
        self.root_index.get(&Root { coords: s }).copied()
    }

    /// `α + β + γ = 0`
    pub fn sums_to_zero(&self, a: usize, b: usize, c: usize) -> bool {
        self.root_sum(a, b) == Some(self.neg[c])
    }

    pub fn root_basis_index(&self, r: usize) -> usize {
        self.rank + r
    }

    pub fn basis_root(&self, i: usize) -> Option<usize> {
        (i >= self.rank).then(|| i - self.rank)
    }

    pub fn is_cartan_index(&self, i: usize) -> bool {
        i < self.rank
    }

    pub fn root_vector(&self, r: usize) -> LieElement {
        LieElement::basis(self.root_basis_index(r))
    }

    pub fn basis_label(&self, i: usize) -> String {
        match self.basis_root(i) {
            None => format!("H{}", i + 1),
            Some(r) => {
                let (a, b) = self.roots[r].ij();
                format!("E{}{}", a + 1, b + 1)
            }
        }
    }

    /// `[e_i, e_j]` for basis indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &LieElement {
        &self.bracket[i][j]
    }

    pub fn gram(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    pub fn check_element(&self, x: &LieElement) -> Result<()> {
        match x.max_index() {
            Some(m) if m >= self.dim() => Err(Error::DimensionMismatch { expected: self.dim(), got: m + 1 }),
            _ => Ok(()),
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let e = &self.bracket[i][j];
                if !e.is_zero() {
                    out.axpy(&(a * b), e);
                }
            }
        }
        out
    }

    pub fn form(&self, x: &LieElement, y: &LieElement) -> Result<Rational> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.form_unchecked(x, y))
    }

    pub(crate) fn form_unchecked(&self, x: &LieElement, y: &LieElement) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let g = &self.gram[i][j];
                if !g.is_zero() {
                    acc += a * b * g;
                }
            }
        }
        acc
    }

    /// `c_{αβ}` with `[E_α, E_β] = c_{αβ} E_{α+β}`.
    pub fn structure_constant(&self, a: usize, b: usize) -> Result<Rational> {
        let s = self
            .root_sum(a, b)
            .ok_or_else(|| Error::Domain(format!("{} + {} is not a root", self.roots[a], self.roots[b])))?;
        let e = &self.bracket[self.root_basis_index(a)][self.root_basis_index(b)];
        Ok(e.coeff(self.root_basis_index(s)))
    }

    /// Coefficients of the linear functional `h ↦ α(h)` on Cartan coordinates.
    /// `α_{ij}(diag t) = t_i - t_j` and `H_k = diag(.., 1 at k, -1 at k+1, ..)`.
    pub fn root_functional(&self, r: usize) -> Vec<Rational> {
        let (i, j) = self.roots[r].ij();
        (0..self.rank)
            .map(|k| {
                let t = |m: usize| -> i64 { (m == k) as i64 - (m == k + 1) as i64 };
                q(t(i) - t(j))
            })
            .collect()
    }

    /// `α(h)`; only the Cartan coordinates of `h` are read.
    pub fn root_value(&self, r: usize, h: &LieElement) -> Rational {
        self.root_functional(r)
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero())
            .fold(Rational::zero(), |acc, (k, f)| acc + f * h.coeff(k))
    }

    /// Cartan element with the given diagonal (entries must sum to zero).
    pub fn cartan_from_diagonal(&self, d: &[Rational]) -> Result<LieElement> {
        if d.len() != self.matrix_size() {
            return Err(Error::DimensionMismatch { expected: self.matrix_size(), got: d.len() });
        }
        self.from_matrix(&Matrix::diag(d))
    }

    pub fn diagonal_of(&self, h: &LieElement) -> Vec<Rational> {
        let n = self.matrix_size();
        (0..n)
            .map(|m| {
                let up = if m < self.rank { h.coeff(m) } else { Rational::zero() };
                let down = if m > 0 { h.coeff(m - 1) } else { Rational::zero() };
                up - down
            })
            .collect()
    }

    pub fn basis_matrix(&self, i: usize) -> Matrix {
        let n = self.matrix_size();
        match self.basis_root(i) {
            None => {
                let mut m = Matrix::zero(n);
                m.set(i, i, Rational::one());
                m.set(i + 1, i + 1, -Rational::one());
                m
            }
            Some(r) => {
                let (a, b) = self.roots[r].ij();
                Matrix::unit(n, a, b)
            }
        }
    }

    pub fn to_matrix(&self, x: &LieElement) -> Matrix {
        let n = self.matrix_size();
        let mut m = Matrix::zero(n);
        for (i, c) in x.iter() {
            match self.basis_root(i) {
                None => {
                    m.rows[i][i] += c;
                    m.rows[i + 1][i + 1] -= c;
                }
                Some(r) => {
                    let (a, b) = self.roots[r].ij();
                    m.rows[a][b] += c;
                }
            }
        }
        m
    }

    /// Coordinates of a traceless matrix in the fixed basis.
    pub fn from_matrix(&self, m: &Matrix) -> Result<LieElement> {
        let n = self.matrix_size();
        if m.size() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.size() });
        }
        if !m.trace().is_zero() {
            return Err(Error::Domain("matrix is not traceless".into()));
        }
        let mut e = LieElement::zero();
        let mut partial = Rational::zero();
        for k in 0..self.rank {
            partial += &m.rows[k][k];
            e.add_term(k, &partial);
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !m.rows[i][j].is_zero() {
                    let r = self.root_index[&Root::e(n, i, j)];
                    e.add_term(self.root_basis_index(r), &m.rows[i][j]);
                }
            }
        }
        Ok(e)
    }

    /// Cartan subalgebra as a subspace.
    pub fn cartan(&self) -> Subspace {
        Subspace::span(self.dim(), &(0..self.rank).map(LieElement::basis).collect::<Vec<_>>())
    }
}

/// A linear subspace of a `dim`-dimensional coordinate space, stored as a
/// matrix in reduced row echelon form. Equality is equality of stored
/// matrices, which is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Subspace> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, got: bad.len() });
        }
        let (rows, pivots) = linalg::rref(rows, ambient);
        Ok(Subspace { ambient, rows, pivots })
    }

    pub fn span(ambient: usize, elements: &[LieElement]) -> Subspace {
        let rows = elements.iter().map(|e| e.to_dense(ambient)).collect();
        Self::from_rows(ambient, rows).expect("dense rows have ambient width")
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, rows: vec![], pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Subspace {
        Self::span(ambient, &(0..ambient).map(LieElement::basis).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<LieElement> {
        self.rows.iter().map(|r| LieElement::from_dense(r)).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    /// Coordinates of `v` relative to the stored RREF rows, `None` if `v` is
    /// not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= ci * y;
                }
            }
        }
        linalg::is_zero_vec(&rest).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_element(&self, x: &LieElement) -> bool {
        x.max_index().is_none_or(|m| m < self.ambient) && self.contains(&x.to_dense(self.ambient))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_rows(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let p = self.dim();
        let k = p + other.dim();
        // Columns are the basis vectors of self and the negated basis of other.
        let system: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|c| self.rows.iter().map(|r| r[c].clone()).chain(other.rows.iter().map(|r| -r[c].clone())).collect())
            .collect();
        let rows = linalg::nullspace(&system, k)
            .into_iter()
            .map(|coef| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (c, row) in coef[..p].iter().zip(&self.rows) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect();
        Self::from_rows(self.ambient, rows)
    }

    /// Orthogonal complement with respect to the invariant form of `g`.
    pub fn perp(&self, g: &LieAlgebra) -> Result<Subspace> {
        if self.ambient != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: self.ambient });
        }
        let system: Vec<Vec<Rational>> =
            self.rows.iter().map(|r| g.gram.iter().map(|col| linalg::dot(r, col)).collect()).collect();
        Self::from_rows(self.ambient, linalg::nullspace(&system, self.ambient))
    }

    /// `[S, S] ⊆ S` on basis pairs.
    pub fn is_subalgebra(&self, g: &LieAlgebra) -> Result<bool> {
        if self.ambient != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: self.ambient });
        }
        let basis = self.basis();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                if !self.contains_element(&g.bracket_unchecked(x, y)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `S ⊕ T` equals the whole ambient space.
    pub fn is_direct_sum_of_ambient(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self.dim() + other.dim() == self.ambient && self.sum(other)?.dim() == self.ambient)
    }
}

/// Linear projection onto one summand of a direct-sum decomposition.
#[derive(Clone, Debug)]
pub struct Projection {
    images: Vec<LieElement>,
}

impl Projection {
    /// Projection onto `onto` along `along`; errors unless `onto ⊕ along` is the
    /// whole ambient space.
    pub fn new(onto: &Subspace, along: &Subspace) -> Result<Projection> {
        if !onto.is_direct_sum_of_ambient(along)? {
            return Err(Error::Domain("subspaces do not form a direct-sum decomposition".into()));
        }
        let d = onto.ambient;
        // Columns of `m` are the combined basis vectors.
        let basis: Vec<&Vec<Rational>> = onto.rows.iter().chain(&along.rows).collect();
        let m: Vec<Vec<Rational>> = (0..d).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
        let inv = linalg::invert(&m).ok_or(Error::Singular)?;
        let images = (0..d)
            .map(|k| {
                let mut img = LieElement::zero();
                for (i, row) in onto.rows.iter().enumerate() {
                    let c = &inv[i][k];
                    if !c.is_zero() {
                        img.axpy(c, &LieElement::from_dense(row));
                    }
                }
                img
            })
            .collect();
        Ok(Projection { images })
    }

    /// Image of basis vector `k`.
    pub fn image(&self, k: usize) -> &LieElement {
        &self.images[k]
    }

    pub fn apply(&self, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, c) in x.iter() {
            out.axpy(c, &self.images[i]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qf;

    fn a(rank: usize) -> LieAlgebra {
        LieAlgebra::build("A", rank).unwrap()
    }

    fn e(g: &LieAlgebra, i: usize, j: usize) -> LieElement {
        let r = g.root_index(&Root::e(g.matrix_size(), i, j)).unwrap();
        g.root_vector(r)
    }

    #[test]
    fn dimensions() {
        for (rank, dim, nroots) in [(1, 3, 2), (2, 8, 6), (3, 15, 12)] {
            let g = a(rank);
            assert_eq!(g.dim(), dim);
            assert_eq!(g.num_roots(), nroots);
        }
    }

    #[test]
    fn unsupported_series_and_rank() {
        assert_eq!(LieAlgebra::build("B", 2).unwrap_err(), Error::UnsupportedSeries("B".into()));
        assert!(LieAlgebra::build("B", 2).unwrap_err().to_string().contains("\"B\""));
        assert!(matches!(LieAlgebra::build("A", 7), Err(Error::RankOutOfRange { .. })));
        assert!(LieAlgebra::build_with_max_rank("A", 7, 7).is_ok());
        assert!(LieAlgebra::from_id("A3").is_ok());
        assert!(LieAlgebra::from_id("Ax").is_err());
    }

    #[test]
    fn sl2_bracket_and_form() {
        let g = a(1);
        let ef = g.bracket(&e(&g, 0, 1), &e(&g, 1, 0)).unwrap();
        assert_eq!(ef, LieElement::basis(0));
        assert_eq!(g.form(&e(&g, 0, 1), &e(&g, 1, 0)).unwrap(), q(1));
        assert!(g.bracket(&LieElement::basis(3), &LieElement::basis(0)).is_err());
    }

    #[test]
    fn structure_constant_examples() {
        let g = a(2);
        let a1 = g.root_index(&Root::e(3, 0, 1)).unwrap();
        let a2 = g.root_index(&Root::e(3, 1, 2)).unwrap();
        assert_eq!(g.structure_constant(a1, a2).unwrap(), q(1));
        assert!(matches!(g.structure_constant(a1, a1), Err(Error::Domain(_))));
    }

    #[test]
    fn root_order_is_positive_then_negative() {
        let g = a(2);
        let simple: Vec<Vec<i64>> = g.roots().iter().map(|r| r.simple_coords()).collect();
        assert_eq!(simple, vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, 0], vec![-1, -1], vec![0, -1]]);
        for r in g.roots() {
            assert_eq!(Root::from_simple_coords(&r.simple_coords()).as_ref(), Some(r));
        }
        assert!(Root::from_simple_coords(&[1, -1]).is_none());
        assert!(Root::from_simple_coords(&[2, 0]).is_none());
    }

    #[test]
    fn root_value_matches_adjoint_action() {
        let g = a(3);
        let h = g.cartan_from_diagonal(&[q(3), qf(1, 2), q(-1), qf(-5, 2)]).unwrap();
        assert_eq!(g.diagonal_of(&h), vec![q(3), qf(1, 2), q(-1), qf(-5, 2)]);
        for r in 0..g.num_roots() {
            let ad = g.bracket(&h, &g.root_vector(r)).unwrap();
            assert_eq!(ad, g.root_vector(r).scaled(&g.root_value(r, &h)));
        }
    }

    #[test]
    fn matrix_roundtrip() {
        let g = a(2);
        let x = LieElement::from_pairs([(0, qf(1, 3)), (1, q(-2)), (4, q(5)), (7, qf(-1, 7))]);
        assert_eq!(g.from_matrix(&g.to_matrix(&x)).unwrap(), x);
        assert!(g.from_matrix(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn perp_of_cartan_in_sl2() {
        let g = a(1);
        let h = g.cartan();
        assert_eq!(h.perp(&g).unwrap(), Subspace::span(3, &[e(&g, 0, 1), e(&g, 1, 0)]));
        assert!(h.is_subalgebra(&g).unwrap());
    }

    #[test]
    fn intersection_example() {
        let g = a(1);
        let s = Subspace::span(3, &[LieElement::basis(0), e(&g, 0, 1)]);
        let t = Subspace::span(3, &[e(&g, 0, 1), e(&g, 1, 0)]);
        assert_eq!(s.intersect(&t).unwrap(), Subspace::span(3, &[e(&g, 0, 1)]));
    }

    #[test]
    fn span_is_canonical_under_rescaling_and_permutation() {
        let g = a(2);
        let x = LieElement::from_pairs([(0, q(1)), (3, q(2))]);
        let y = LieElement::from_pairs([(5, qf(1, 2)), (3, q(-1))]);
        let s1 = Subspace::span(g.dim(), &[x.clone(), y.clone()]);
        let s2 = Subspace::span(g.dim(), &[y.scaled(&q(-4)), x.add(&y)]);
        assert_eq!(s1, s2);
    }

    #[test]
    fn direct_sum_and_projection() {
        let g = a(2);
        let h = g.cartan();
        let m = Subspace::span(g.dim(), &(0..6).map(|r| g.root_vector(r)).collect::<Vec<_>>());
        assert!(h.is_direct_sum_of_ambient(&m).unwrap());
        assert!(!h.is_direct_sum_of_ambient(&h).unwrap());
        let p = Projection::new(&m, &h).unwrap();
        let x = LieElement::from_pairs([(0, q(1)), (3, q(2))]);
        assert_eq!(p.apply(&x), LieElement::from_pairs([(3, q(2))]));
        assert!(Projection::new(&h, &h).is_err());
    }
}
