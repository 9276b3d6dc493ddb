//! Structure-constant tables.
//!
//! A table stores an ordered basis together with every nonzero product of two
//! basis elements. The kernel-built tables are monoid-like (each product is a
//! scalar multiple of a single basis element), but the container supports
//! general sparse product vectors so quotients, corners and subalgebras fit
//! the same type. Building a table sweeps all composable basis pairs, which
//! runs on rayon under the `parallel` feature; `build_table_seq` is the
//! sequential path used as the fallback and as the benchmark baseline.

use std::collections::HashMap;

use serde::Serialize;

use crate::composition::Composition;
use crate::error::SchurError;
use crate::linalg::SparseVector;
use crate::matrix::{enumerate_basis, OrbitMatrix};
use crate::product::{ProductKind, ScaledOrbit};
use crate::rational::format_rational;
use crate::DEFAULT_MAX_DIM;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Basis labels: concrete orbit matrices for the kernel algebras, opaque tags
/// for generic echelon bases of subalgebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    Matrix(OrbitMatrix),
    Tagged(String),
}

impl BasisLabel {
    pub fn matrix(&self) -> Option<&OrbitMatrix> {
        match self {
            BasisLabel::Matrix(m) => Some(m),
            BasisLabel::Tagged(_) => None,
        }
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Matrix(m) => write!(f, "{m}"),
            BasisLabel::Tagged(s) => write!(f, "{s}"),
        }
    }
}

/// A finite-dimensional algebra presented by its basis and all nonzero
/// structure constants.
#[derive(Debug, Clone)]
pub struct StructureTable {
    name: String,
    n: usize,
    r: u32,
    product: ProductKind,
    basis: Vec<BasisLabel>,
    index_of: HashMap<OrbitMatrix, usize>,
    /// rows[i] holds (j, e_i * e_j) sorted by j; missing pairs multiply to zero.
    rows: Vec<Vec<(usize, SparseVector)>>,
    unit: SparseVector,
}

impl StructureTable {
    pub(crate) fn from_parts(
        name: String,
        n: usize,
        r: u32,
        product: ProductKind,
        basis: Vec<BasisLabel>,
        mut entries: Vec<(usize, usize, SparseVector)>,
        unit: SparseVector,
    ) -> Self {
        let mut rows = vec![Vec::new(); basis.len()];
        entries.sort_by_key(|(i, j, _)| (*i, *j));
        for (i, j, v) in entries {
            if !v.is_zero() {
                rows[i].push((j, v));
            }
        }
        let mut index_of = HashMap::new();
        for (i, label) in basis.iter().enumerate() {
            if let BasisLabel::Matrix(m) = label {
                index_of.insert(m.clone(), i);
            }
        }
        StructureTable { name, n, r, product, basis, index_of, rows, unit }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn product_kind(&self) -> &ProductKind {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.basis[i]
    }

    pub fn basis_matrix(&self, i: usize) -> Option<&OrbitMatrix> {
        self.basis[i].matrix()
    }

    pub fn index_of_matrix(&self, m: &OrbitMatrix) -> Option<usize> {
        self.index_of.get(m).copied()
    }

    /// The two-sided identity of the algebra.
    pub fn unit(&self) -> &SparseVector {
        &self.unit
    }

    /// e_i * e_j, or None when the product is zero.
    pub fn product(&self, i: usize, j: usize) -> Option<&SparseVector> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(k, _)| *k)
            .ok()
            .map(|pos| &row[pos].1)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVector {
        self.product(i, j).cloned().unwrap_or_default()
    }

    /// (Σ c_m e_m) * e_j.
    pub fn mul_vector_basis(&self, v: &SparseVector, j: usize) -> SparseVector {
        let mut acc = SparseVector::zero();
        for (m, c) in v.iter() {
            if let Some(p) = self.product(m, j) {
                acc = acc.axpy(c, p);
            }
        }
        acc
    }

    /// e_i * (Σ c_m e_m).
    pub fn mul_basis_vector(&self, i: usize, v: &SparseVector) -> SparseVector {
        let mut acc = SparseVector::zero();
        for (m, c) in v.iter() {
            if let Some(p) = self.product(i, m) {
                acc = acc.axpy(c, p);
            }
        }
        acc
    }

    pub fn mul_vectors(&self, u: &SparseVector, v: &SparseVector) -> SparseVector {
        let mut acc = SparseVector::zero();
        for (i, c) in u.iter() {
            let partial = self.mul_basis_vector(i, v);
            acc = acc.axpy(c, &partial);
        }
        acc
    }

    pub fn is_idempotent_vector(&self, v: &SparseVector) -> bool {
        self.mul_vectors(v, v) == *v
    }

    pub fn is_two_sided_unit(&self, v: &SparseVector) -> bool {
        (0..self.dim()).all(|i| {
            let e = SparseVector::unit(i);
            self.mul_vectors(v, &e) == e && self.mul_vectors(&e, v) == e
        })
    }

    /// Iterate all stored products as (i, j, vector).
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &SparseVector)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn assoc_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let left = self.product(i, j);
        let right = self.product(j, k);
        if left.is_none() && right.is_none() {
            return true;
        }
        let lhs = left.map(|v| self.mul_vector_basis(v, k)).unwrap_or_default();
        let rhs = right.map(|v| self.mul_basis_vector(i, v)).unwrap_or_default();
        lhs == rhs
    }

    /// (ab)c = a(bc) for every basis triple.
    pub fn check_associativity(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            let dim = self.dim();
            (0..dim).into_par_iter().all(|i| {
                (0..dim).all(|j| (0..dim).all(|k| self.assoc_triple(i, j, k)))
            })
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.check_associativity_seq()
        }
    }

    /// Sequential scan over all triples.
    pub fn check_associativity_seq(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (0..dim).all(|j| (0..dim).all(|k| self.assoc_triple(i, j, k))))
    }

    /// Clone with the first stored structure constant negated. Regression
    /// fixture for the associativity oracle and the verify harness self-test.
    pub fn corrupted_clone(&self) -> StructureTable {
        let mut out = self.clone();
        'outer: for row in out.rows.iter_mut() {
            for (_, v) in row.iter_mut() {
                let first = v.iter().next().map(|(i, c)| (i, c.clone()));
                if let Some((idx, c)) = first {
                    v.add_term(idx, -(c.clone() + c));
                    break 'outer;
                }
            }
        }
        out
    }

    /// Serialize to the export schema. Fails when the basis carries opaque
    /// labels instead of matrices.
    pub fn to_json_value(&self) -> Result<serde_json::Value, SchurError> {
        #[derive(Serialize)]
        struct TableJson {
            name: String,
            n: usize,
            r: u32,
            product: String,
            basis: Vec<Vec<u32>>,
            entries: Vec<(usize, usize, usize, String)>,
        }
        let basis = self
            .basis
            .iter()
            .map(|label| match label {
                BasisLabel::Matrix(m) => Ok(m.entries().to_vec()),
                BasisLabel::Tagged(tag) => Err(SchurError::Unserializable(format!(
                    "basis element {tag:?} has no matrix form"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut entries = Vec::new();
        for (i, j, v) in self.nonzero_products() {
            for (k, c) in v.iter() {
                entries.push((i, j, k, format_rational(c)));
            }
        }
        entries.sort();
        let doc = TableJson {
            name: self.name.clone(),
            n: self.n,
            r: self.r,
            product: self.product.tag(),
            basis,
            entries,
        };
        Ok(serde_json::to_value(doc).expect("table serialization is infallible"))
    }

    pub fn to_json_string(&self) -> Result<String, SchurError> {
        Ok(self.to_json_value()?.to_string())
    }
}

fn table_name(kind: &ProductKind, n: usize, r: u32) -> String {
    match kind {
        ProductKind::S0 => format!("S0({n},{r})"),
        ProductKind::Star => format!("DS0({n},{r})"),
        ProductKind::T(_) => format!("Dt({n},{r})"),
    }
}

struct TableSkeleton {
    basis: Vec<OrbitMatrix>,
    by_ro: HashMap<Composition, Vec<usize>>,
    unit: SparseVector,
}

fn skeleton(n: usize, r: u32, cap: usize) -> Result<TableSkeleton, SchurError> {
    let basis = enumerate_basis(n, r)?;
    if basis.len() > cap {
        return Err(SchurError::SizeGuard(format!(
            "table over Xi({n},{r}) needs {} basis elements, cap is {cap}",
            basis.len()
        )));
    }
    let mut by_ro: HashMap<Composition, Vec<usize>> = HashMap::new();
    let mut unit = SparseVector::zero();
    for (i, a) in basis.iter().enumerate() {
        by_ro.entry(a.ro()).or_default().push(i);
        if a.is_diagonal() {
            unit.add_term(i, crate::rational::rat_int(1));
        }
    }
    Ok(TableSkeleton { basis, by_ro, unit })
}

fn row_products(
    skel: &TableSkeleton,
    index_of: &HashMap<OrbitMatrix, usize>,
    kind: &ProductKind,
    i: usize,
) -> Vec<(usize, SparseVector)> {
    let a = &skel.basis[i];
    let mut row = Vec::new();
    if let Some(group) = skel.by_ro.get(&a.co()) {
        for &j in group {
            match kind
                .multiply(a, &skel.basis[j])
                .expect("basis elements share shape")
            {
                ScaledOrbit::Zero => {}
                ScaledOrbit::Orbit(c, m) => {
                    let k = index_of[&m];
                    row.push((j, SparseVector::term(k, c)));
                }
            }
        }
    }
    row
}

fn assemble(skel: TableSkeleton, rows: Vec<Vec<(usize, SparseVector)>>, kind: ProductKind, n: usize, r: u32) -> StructureTable {
    let mut index_of = HashMap::new();
    for (i, m) in skel.basis.iter().enumerate() {
        index_of.insert(m.clone(), i);
    }
    StructureTable {
        name: table_name(&kind, n, r),
        n,
        r,
        product: kind,
        basis: skel.basis.into_iter().map(BasisLabel::Matrix).collect(),
        index_of,
        rows,
        unit: skel.unit,
    }
}

/// Build the full multiplication table of the chosen product over Ξ(n,r),
/// capped at [`DEFAULT_MAX_DIM`] basis elements.
pub fn build_table(n: usize, r: u32, kind: &ProductKind) -> Result<StructureTable, SchurError> {
    build_table_with_cap(n, r, kind, DEFAULT_MAX_DIM)
}

pub fn build_table_with_cap(
    n: usize,
    r: u32,
    kind: &ProductKind,
    cap: usize,
) -> Result<StructureTable, SchurError> {
    #[cfg(feature = "parallel")]
    {
        let skel = skeleton(n, r, cap)?;
        let mut index_of = HashMap::new();
        for (i, m) in skel.basis.iter().enumerate() {
            index_of.insert(m.clone(), i);
        }
        let rows: Vec<_> = (0..skel.basis.len())
            .into_par_iter()
            .map(|i| row_products(&skel, &index_of, kind, i))
            .collect();
        Ok(assemble(skel, rows, kind.clone(), n, r))
    }
    #[cfg(not(feature = "parallel"))]
    {
        build_table_seq_with_cap(n, r, kind, cap)
    }
}

/// Sequential table construction; identical output to [`build_table`].
pub fn build_table_seq(n: usize, r: u32, kind: &ProductKind) -> Result<StructureTable, SchurError> {
    build_table_seq_with_cap(n, r, kind, DEFAULT_MAX_DIM)
}

pub fn build_table_seq_with_cap(
    n: usize,
    r: u32,
    kind: &ProductKind,
    cap: usize,
) -> Result<StructureTable, SchurError> {
    let skel = skeleton(n, r, cap)?;
    let mut index_of = HashMap::new();
    for (i, m) in skel.basis.iter().enumerate() {
        index_of.insert(m.clone(), i);
    }
    let rows: Vec<_> = (0..skel.basis.len())
        .map(|i| row_products(&skel, &index_of, kind, i))
        .collect();
    Ok(assemble(skel, rows, kind.clone(), n, r))
}
