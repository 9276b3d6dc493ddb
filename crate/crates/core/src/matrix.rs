//! Orbit matrices: the basis labels of every algebra in the kernel.
//!
//! An element of Ξ(n,r) is an n-by-n matrix of nonnegative integers with
//! total entry sum r. Diagonal matrices give the idempotents, and the
//! canonical basis order is lexicographic on the row-major flattening.

use std::fmt;

use crate::composition::Composition;
use crate::error::SchurError;
use crate::MAX_WEIGHT;

/// An n-by-n nonnegative integer matrix with total sum r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl OrbitMatrix {
    /// Build from a row-major flattening.
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self, SchurError> {
        if n == 0 {
            return Err(SchurError::ShapeMismatch("matrix size n must be >= 1".into()));
        }
        if entries.len() != n * n {
            return Err(SchurError::ShapeMismatch(format!(
                "expected {} entries for an {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let r: u32 = entries.iter().sum();
        if r > MAX_WEIGHT {
            return Err(SchurError::SizeGuard(format!(
                "matrix weight {r} exceeds the supported maximum {MAX_WEIGHT}"
            )));
        }
        Ok(OrbitMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, SchurError> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(SchurError::ShapeMismatch("matrix must be square".into()));
        }
        OrbitMatrix::new(n, rows.concat())
    }

    /// diag(λ), the matrix of the idempotent labeled by λ.
    pub fn diagonal(lambda: &Composition) -> Self {
        let n = lambda.n();
        let mut entries = vec![0u32; n * n];
        for (i, &p) in lambda.parts().iter().enumerate() {
            entries[i * n + i] = p;
        }
        OrbitMatrix { n, entries }
    }

    /// The identity pattern: diag(1, ..., 1), weight n.
    pub fn identity(n: usize) -> Self {
        OrbitMatrix::diagonal(&Composition::all_ones(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Row-sum vector ro(A).
    pub fn ro(&self) -> Composition {
        let parts = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect();
        Composition::new(parts).expect("row sums of a valid matrix form a composition")
    }

    /// Column-sum vector co(A).
    pub fn co(&self) -> Composition {
        let parts = (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect();
        Composition::new(parts).expect("column sums of a valid matrix form a composition")
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0))
    }

    /// Minimum over the diagonal entries.
    pub fn min_diagonal(&self) -> u32 {
        (0..self.n).map(|i| self.get(i, i)).min().expect("n >= 1")
    }

    pub fn is_permutation(&self) -> bool {
        self.weight() == self.n as u32
            && self.ro().parts().iter().all(|&p| p == 1)
            && self.co().parts().iter().all(|&p| p == 1)
    }

    /// A ± E_{row,col} moves (0-based positions); panics on underflow, which
    /// the multiplication rules rule out.
    pub(crate) fn bump(&self, row: usize, col: usize, delta: i32) -> OrbitMatrix {
        let mut entries = self.entries.clone();
        let slot = &mut entries[row * self.n + col];
        *slot = slot
            .checked_add_signed(delta)
            .expect("fundamental rule never drives an entry negative");
        OrbitMatrix { n: self.n, entries }
    }

    /// Entrywise sum; used by the main-theorem embedding A ↦ A + I.
    pub fn plus(&self, other: &OrbitMatrix) -> Result<OrbitMatrix, SchurError> {
        if self.n != other.n {
            return Err(SchurError::ShapeMismatch("matrix sizes differ".into()));
        }
        OrbitMatrix::new(
            self.n,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for OrbitMatrix {
    /// Row-major with `,` between entries and `;` between rows, the same
    /// literal syntax the command line accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for OrbitMatrix {
    type Err = SchurError;

    fn from_str(s: &str) -> Result<Self, SchurError> {
        let rows: Vec<Vec<u32>> = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| SchurError::Parse(format!("bad matrix entry {:?}", e.trim())))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        OrbitMatrix::from_rows(&rows)
    }
}

/// All of Ξ(n,r) exactly once, ascending lexicographic on the row-major
/// flattening. The count is C(n² + r − 1, r).
pub fn enumerate_basis(n: usize, r: u32) -> Result<Vec<OrbitMatrix>, SchurError> {
    if n == 0 {
        return Err(SchurError::ShapeMismatch("matrix size n must be >= 1".into()));
    }
    if r > MAX_WEIGHT {
        return Err(SchurError::SizeGuard(format!(
            "weight {r} exceeds the supported maximum {MAX_WEIGHT}"
        )));
    }
    let cells = n * n;
    let mut out = Vec::new();
    let mut entries = vec![0u32; cells];
    fn rec(out: &mut Vec<OrbitMatrix>, entries: &mut Vec<u32>, n: usize, pos: usize, remaining: u32) {
        if pos + 1 == entries.len() {
            entries[pos] = remaining;
            out.push(OrbitMatrix { n, entries: entries.clone() });
            entries[pos] = 0;
            return;
        }
        for v in 0..=remaining {
            entries[pos] = v;
            rec(out, entries, n, pos + 1, remaining - v);
            entries[pos] = 0;
        }
    }
    rec(&mut out, &mut entries, n, 0, r);
    Ok(out)
}
