//! Two-sided ideals, quotients, corners and subalgebras of a structure table,
//! plus structure-constant transport along a basis bijection.

use std::collections::HashSet;

use num_traits::Zero;

use crate::error::SchurError;
use crate::linalg::{solve_coordinates, SparseVector, Subspace};
use crate::matrix::{enumerate_basis, OrbitMatrix};
use crate::rational::Rational;
use crate::table::{BasisLabel, StructureTable};

/// A two-sided ideal, stored as an echelonized subspace of the table's span.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    pub subspace: Subspace,
}

impl IdealBasis {
    pub fn rank(&self) -> usize {
        self.subspace.rank()
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.subspace.contains(v)
    }
}

/// Least subspace containing the generators and closed under left and right
/// multiplication by every basis element. Fixed-point iteration on a frontier
/// of newly added vectors; termination is bounded by the ambient dimension.
pub fn ideal_closure(table: &StructureTable, generators: &[SparseVector]) -> IdealBasis {
    let mut span = Subspace::empty();
    let mut frontier: Vec<SparseVector> = Vec::new();
    for g in generators {
        if span.insert(g) {
            frontier.push(g.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for b in 0..table.dim() {
            for w in [table.mul_basis_vector(b, &v), table.mul_vector_basis(&v, b)] {
                if !w.is_zero() && span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
    }
    IdealBasis { subspace: span }
}

/// Is the subspace closed under multiplication by every basis element?
pub fn is_two_sided_ideal(table: &StructureTable, ideal: &IdealBasis) -> bool {
    ideal.subspace.rows().iter().all(|v| {
        (0..table.dim()).all(|b| {
            ideal.contains(&table.mul_basis_vector(b, v))
                && ideal.contains(&table.mul_vector_basis(v, b))
        })
    })
}

/// All basis matrices with at least one zero diagonal entry, in canonical
/// order. These span the ideal generated by the boundary idempotents.
pub fn boundary_ideal_basis(n: usize, r: u32) -> Result<Vec<OrbitMatrix>, SchurError> {
    Ok(enumerate_basis(n, r)?
        .into_iter()
        .filter(|a| a.min_diagonal() == 0)
        .collect())
}

/// The quotient algebra. The coset classes of the basis elements outside the
/// ideal's pivot set form the quotient basis; products are reduced modulo the
/// ideal. Errors when the subspace is not actually a two-sided ideal.
pub fn quotient_algebra(table: &StructureTable, ideal: &IdealBasis) -> Result<StructureTable, SchurError> {
    if !is_two_sided_ideal(table, ideal) {
        return Err(SchurError::NotAnIdeal(format!(
            "rank-{} subspace of {} is not closed under multiplication",
            ideal.rank(),
            table.name()
        )));
    }
    let pivots: HashSet<usize> = ideal.subspace.pivots().collect();
    let complement: Vec<usize> = (0..table.dim()).filter(|i| !pivots.contains(i)).collect();
    let mut new_index = vec![usize::MAX; table.dim()];
    for (new, &old) in complement.iter().enumerate() {
        new_index[old] = new;
    }
    let reindex = |v: &SparseVector| -> SparseVector {
        let reduced = ideal.subspace.reduce(v);
        SparseVector::from_terms(reduced.iter().map(|(i, c)| (new_index[i], c.clone())))
    };
    let mut entries = Vec::new();
    for (qa, &a) in complement.iter().enumerate() {
        for (qb, &b) in complement.iter().enumerate() {
            if let Some(p) = table.product(a, b) {
                let v = reindex(p);
                if !v.is_zero() {
                    entries.push((qa, qb, v));
                }
            }
        }
    }
    let basis: Vec<BasisLabel> = complement.iter().map(|&i| table.label(i).clone()).collect();
    let unit = reindex(table.unit());
    Ok(StructureTable::from_parts(
        format!("{}/I", table.name()),
        table.n(),
        table.r(),
        table.product_kind().clone(),
        basis,
        entries,
        unit,
    ))
}

/// Build the table of a subspace of `table` spanned by `kept` vectors that
/// are known to be independent and multiplicatively closed.
fn span_table(
    table: &StructureTable,
    name: String,
    kept: Vec<SparseVector>,
    unit: SparseVector,
) -> Result<StructureTable, SchurError> {
    let labels: Vec<BasisLabel> = kept
        .iter()
        .enumerate()
        .map(|(idx, v)| match v.as_unit() {
            Some(orig) => table.label(orig).clone(),
            None => BasisLabel::Tagged(format!("b{idx}")),
        })
        .collect();
    let coords_of = |v: &SparseVector| -> Result<SparseVector, SchurError> {
        let coords = solve_coordinates(&kept, v).ok_or_else(|| {
            SchurError::CheckFailed("span is not multiplicatively closed".into())
        })?;
        Ok(SparseVector::from_terms(
            coords.into_iter().enumerate().map(|(i, c)| (i, c)),
        ))
    };
    let mut entries = Vec::new();
    for a in 0..kept.len() {
        for b in 0..kept.len() {
            let p = table.mul_vectors(&kept[a], &kept[b]);
            if !p.is_zero() {
                entries.push((a, b, coords_of(&p)?));
            }
        }
    }
    let unit = coords_of(&unit)?;
    Ok(StructureTable::from_parts(
        name,
        table.n(),
        table.r(),
        table.product_kind().clone(),
        labels,
        entries,
        unit,
    ))
}

/// The corner algebra idem·T·idem with unit `idem`. Errors when `idem` is
/// not idempotent.
pub fn corner_algebra(table: &StructureTable, idem: &SparseVector) -> Result<StructureTable, SchurError> {
    if !table.is_idempotent_vector(idem) {
        return Err(SchurError::NotIdempotent);
    }
    let mut span = Subspace::empty();
    let mut kept = Vec::new();
    for i in 0..table.dim() {
        let v = table.mul_vectors(&table.mul_vector_basis(idem, i), idem);
        if !v.is_zero() && span.insert(&v) {
            kept.push(v);
        }
    }
    span_table(table, format!("corner({})", table.name()), kept, idem.clone())
}

/// Least multiplicatively closed subspace containing `unit` and the
/// generators, returned as its own table with `unit` as identity.
pub fn subalgebra_closure(
    table: &StructureTable,
    generators: &[SparseVector],
    unit: &SparseVector,
) -> Result<StructureTable, SchurError> {
    let mut span = Subspace::empty();
    let mut kept: Vec<SparseVector> = Vec::new();
    for v in std::iter::once(unit).chain(generators) {
        if !v.is_zero() && span.insert(v) {
            kept.push(v.clone());
        }
    }
    let mut frontier: Vec<SparseVector> = kept.clone();
    while let Some(v) = frontier.pop() {
        let snapshot = kept.clone();
        for w in &snapshot {
            for p in [table.mul_vectors(&v, w), table.mul_vectors(w, &v)] {
                if !p.is_zero() && span.insert(&p) {
                    kept.push(p.clone());
                    frontier.push(p);
                }
            }
        }
    }
    span_table(table, format!("sub({})", table.name()), kept, unit.clone())
}

/// Check that a (optionally scaled) basis bijection transports every
/// structure constant of `t1` onto `t2` exactly. `bij[i]` is the index in
/// `t2` of the image of basis element i of `t1`; `scale`, when given, holds
/// the nonzero scalar attached to each t1 basis element.
pub fn verify_iso_by_bijection(
    t1: &StructureTable,
    t2: &StructureTable,
    bij: &[usize],
    scale: Option<&[Rational]>,
) -> Result<bool, SchurError> {
    if t1.dim() != t2.dim() || bij.len() != t1.dim() {
        return Err(SchurError::NonBijective(format!(
            "dimensions {} vs {} with {} images",
            t1.dim(),
            t2.dim(),
            bij.len()
        )));
    }
    let mut seen = vec![false; t2.dim()];
    for &img in bij {
        if img >= t2.dim() || seen[img] {
            return Err(SchurError::NonBijective(format!("image index {img} repeated or out of range")));
        }
        seen[img] = true;
    }
    if let Some(s) = scale {
        if s.len() != t1.dim() {
            return Err(SchurError::NonBijective("scale vector has wrong length".into()));
        }
        if s.iter().any(|c| c.is_zero()) {
            return Err(SchurError::NonBijective("scale factors must be nonzero".into()));
        }
    }
    let factor = |i: usize| -> Rational {
        scale.map_or_else(|| Rational::from_integer(1.into()), |s| s[i].clone())
    };
    for i in 0..t1.dim() {
        for j in 0..t1.dim() {
            // φ(e_i e_j) with φ(e_k) = s_k e'_{bij(k)}
            let mapped = match t1.product(i, j) {
                Some(v) => SparseVector::from_terms(
                    v.iter().map(|(k, c)| (bij[k], c * factor(k))),
                ),
                None => SparseVector::zero(),
            };
            // φ(e_i) φ(e_j)
            let direct = t2.mul_basis(bij[i], bij[j]).scale(&(factor(i) * factor(j)));
            if mapped != direct {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
