//! Compositions of r into n parts: the vertex set of the quiver and the
//! labels of the diagonal idempotents.

use std::fmt;

use crate::error::SchurError;
use crate::MAX_WEIGHT;

/// A vector of n nonnegative integers summing to r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SchurError> {
        if parts.is_empty() {
            return Err(SchurError::ShapeMismatch("composition needs n >= 1 parts".into()));
        }
        let r: u32 = parts.iter().sum();
        if r > MAX_WEIGHT {
            return Err(SchurError::SizeGuard(format!(
                "weight {r} exceeds the supported maximum {MAX_WEIGHT}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    /// All-ones composition (1, ..., 1) of Lambda(r, r).
    pub fn all_ones(r: usize) -> Self {
        Composition { parts: vec![1; r] }
    }

    /// λ + α_i with 1-based i; the simple root α_i adds 1 at position i and
    /// subtracts 1 at position i+1. None when the result leaves Λ(n,r).
    pub fn add_alpha(&self, i: usize) -> Option<Composition> {
        if i == 0 || i >= self.n() || self.parts[i] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i - 1] += 1;
        parts[i] -= 1;
        Some(Composition { parts })
    }

    /// λ − α_i with 1-based i.
    pub fn sub_alpha(&self, i: usize) -> Option<Composition> {
        if i == 0 || i >= self.n() || self.parts[i - 1] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        parts[i] += 1;
        Some(Composition { parts })
    }

    /// λ lies on the boundary of the composition simplex: some part is zero.
    pub fn is_boundary(&self) -> bool {
        self.parts.iter().any(|&p| p == 0)
    }

    /// Number of nonzero parts.
    pub fn support_size(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// Swap parts i and i+1 (1-based i).
    pub fn swap_adjacent(&self, i: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All of Λ(n,r) in ascending lexicographic order on the part vector.
pub fn enumerate_compositions(n: usize, r: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = vec![0u32; n];
    fill(&mut out, &mut parts, 0, r);
    out
}

fn fill(out: &mut Vec<Composition>, parts: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == parts.len() {
        parts[pos] = remaining;
        out.push(Composition { parts: parts.clone() });
        parts[pos] = 0;
        return;
    }
    for v in 0..=remaining {
        parts[pos] = v;
        fill(out, parts, pos + 1, remaining - v);
        parts[pos] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..k.min(n - k) {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn counts_match_binomial() {
        for n in 1..=4usize {
            for r in 0..=6u32 {
                let all = enumerate_compositions(n, r);
                assert_eq!(all.len() as u64, binom((n as u64) + (r as u64) - 1, r as u64));
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let all = enumerate_compositions(3, 4);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn alpha_moves() {
        let lam = Composition::new(vec![1, 2, 0]).unwrap();
        assert_eq!(lam.add_alpha(1).unwrap().parts(), &[2, 1, 0]);
        assert_eq!(lam.add_alpha(2), None);
        assert_eq!(lam.sub_alpha(1).unwrap().parts(), &[0, 3, 0]);
        assert_eq!(lam.sub_alpha(2).unwrap().parts(), &[1, 1, 1]);
    }

    #[test]
    fn boundary_detection() {
        assert!(Composition::new(vec![0, 3]).unwrap().is_boundary());
        assert!(!Composition::new(vec![1, 1, 1]).unwrap().is_boundary());
        assert_eq!(Composition::all_ones(4).parts(), &[1, 1, 1, 1]);
    }
}
