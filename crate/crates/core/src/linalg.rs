//! Exact sparse linear algebra over the rationals.
//!
//! Used for spans, ranks, ideal and subalgebra closures, and isomorphism
//! checks. Vectors are sparse maps from basis indices to nonzero rational
//! coefficients; subspaces are kept in reduced row-echelon form with pivot
//! columns strictly increasing, so membership tests and reductions are exact
//! and deterministic.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

/// Sparse vector over an indexed basis. Entries are sorted by index and never
/// store a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero() -> Self {
        SparseVector { entries: Vec::new() }
    }

    /// Unit vector at `index`.
    pub fn unit(index: usize) -> Self {
        SparseVector {
            entries: vec![(index, Rational::from_integer(1.into()))],
        }
    }

    pub fn term(index: usize, coeff: Rational) -> Self {
        let mut v = SparseVector::zero();
        v.add_term(index, coeff);
        v
    }

    /// Collapse an arbitrary list of terms, dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in terms {
            let slot = acc.entry(i).or_insert_with(Rational::zero);
            *slot += c;
        }
        SparseVector {
            entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Index and coefficient of the lowest-index entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, index: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => {
                self.entries[pos].1 += coeff;
                if self.entries[pos].1.is_zero() {
                    self.entries.remove(pos);
                }
            }
            Err(pos) => self.entries.insert(pos, (index, coeff)),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero();
        }
        SparseVector {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// self + c * other, merging sorted entry lists.
    pub fn axpy(&self, c: &Rational, other: &SparseVector) -> SparseVector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => {
                    let (i, x) = a.next().unwrap();
                    out.push((*i, x.clone()));
                }
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, y) = b.next().unwrap();
                    out.push((*i, c * y));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + c * y;
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                }
                (Some(_), None) => {
                    let (i, x) = a.next().unwrap();
                    out.push((*i, x.clone()));
                }
                (None, Some(_)) => {
                    let (i, y) = b.next().unwrap();
                    out.push((*i, c * y));
                }
                (None, None) => break,
            }
        }
        SparseVector { entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        self.axpy(&Rational::from_integer(1.into()), other)
    }

    pub fn sub(&self, other: &SparseVector) -> SparseVector {
        self.axpy(&Rational::from_integer((-1).into()), other)
    }

    /// If the vector is a single term with coefficient one, return its index.
    pub fn as_unit(&self) -> Option<usize> {
        match self.entries.as_slice() {
            [(i, c)] if *c == Rational::from_integer(1.into()) => Some(*i),
            _ => None,
        }
    }
}

/// A subspace in reduced row-echelon form: rows have unit leading
/// coefficients, pivot columns strictly increase, and every pivot column is
/// zero in all other rows.
#[derive(Debug, Clone, Default)]
pub struct Subspace {
    rows: Vec<SparseVector>,
}

impl Subspace {
    pub fn empty() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("rref row is nonzero").0)
    }

    /// Reduce `v` against the echelon rows; the result has no support on any
    /// pivot column.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        let mut acc = v.clone();
        for row in &self.rows {
            let (pivot, _) = row.leading().expect("rref row is nonzero");
            if let Some(c) = acc.get(pivot) {
                let c = -c.clone();
                acc = acc.axpy(&c, row);
            }
        }
        acc
    }

    /// Insert `v` into the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let mut rem = self.reduce(v);
        let Some((pivot, lead)) = rem.leading().map(|(i, c)| (i, c.clone())) else {
            return false;
        };
        let inv = Rational::from_integer(1.into()) / lead;
        rem = rem.scale(&inv);
        // Clear the new pivot column from the existing rows to stay reduced.
        for row in &mut self.rows {
            if let Some(c) = row.get(pivot) {
                let c = -c.clone();
                *row = row.axpy(&c, &rem);
            }
        }
        let pos = self
            .rows
            .partition_point(|r| r.leading().expect("nonzero").0 < pivot);
        self.rows.insert(pos, rem);
        true
    }

    /// Exact membership test.
    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.rank() == other.rank() && self.contains_subspace(other)
    }
}

/// Echelonize a spanning set. Deterministic: pivots are chosen by ascending
/// basis index and rows end up sorted by pivot column.
pub fn rref(vectors: &[SparseVector]) -> Subspace {
    let mut s = Subspace::empty();
    for v in vectors {
        s.insert(v);
    }
    s
}

/// Express `target` as a linear combination of `vectors`, if possible.
/// Returns the coefficient list in the order of `vectors`.
pub fn solve_coordinates(vectors: &[SparseVector], target: &SparseVector) -> Option<Vec<Rational>> {
    // Run the insertion echelonization while tracking coordinates: each
    // working row is (reduced vector, expression in the input vectors).
    let mut rows: Vec<(SparseVector, Vec<Rational>)> = Vec::new();
    let m = vectors.len();
    for (k, v) in vectors.iter().enumerate() {
        let mut rem = v.clone();
        let mut coord = vec![Rational::zero(); m];
        coord[k] = Rational::from_integer(1.into());
        for (row, rc) in &rows {
            let (pivot, _) = row.leading().expect("nonzero");
            if let Some(c) = rem.get(pivot) {
                let c = -c.clone();
                rem = rem.axpy(&c, row);
                for (slot, x) in coord.iter_mut().zip(rc) {
                    *slot += &c * x;
                }
            }
        }
        if let Some((_, lead)) = rem.leading().map(|(i, c)| (i, c.clone())) {
            let inv = Rational::from_integer(1.into()) / lead;
            rem = rem.scale(&inv);
            for slot in coord.iter_mut() {
                *slot *= &inv;
            }
            let pos = rows.partition_point(|(r, _)| r.leading().expect("nonzero").0 < rem.leading().expect("nonzero").0);
            rows.insert(pos, (rem, coord));
        }
    }
    let mut rem = target.clone();
    let mut coord = vec![Rational::zero(); m];
    for (row, rc) in &rows {
        let (pivot, _) = row.leading().expect("nonzero");
        if let Some(c) = rem.get(pivot) {
            let c = c.clone();
            let neg = -c.clone();
            rem = rem.axpy(&neg, row);
            for (slot, x) in coord.iter_mut().zip(rc) {
                *slot += &c * x;
            }
        }
    }
    rem.is_zero().then_some(coord)
}
