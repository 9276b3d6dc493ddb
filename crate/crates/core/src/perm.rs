//! Symmetric-group word combinatorics.

use std::fmt;

use crate::error::SchurError;
use crate::matrix::OrbitMatrix;

/// Guard for routines that enumerate all of S_r or all reduced words.
pub const MAX_PERM_DEGREE: usize = 7;

/// A permutation of {1, ..., r}, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// images[k] = w(k+1) − 1, i.e. 0-based images.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r).collect() }
    }

    /// From 1-based image list; must be a bijection of 1..=r.
    pub fn from_one_based(images: Vec<usize>) -> Result<Self, SchurError> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &v in &images {
            if v == 0 || v > r || seen[v - 1] {
                return Err(SchurError::Parse(format!("not a permutation of 1..={r}: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|v| v - 1).collect() })
    }

    /// The adjacent transposition s_i for 1-based 1 ≤ i ≤ r−1.
    pub fn transposition(r: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..r).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// w(k) for 1-based k.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Composition (self ∘ other): apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let r = self.images.len();
        let mut count = 0;
        for a in 0..r {
            for b in a + 1..r {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Left descents: 1-based i with ℓ(s_i w) < ℓ(w).
    pub fn left_descents(&self) -> Vec<usize> {
        let r = self.images.len();
        let inv = self.inverse();
        (1..r).filter(|&i| inv.images[i - 1] > inv.images[i]).collect()
    }

    /// Evaluate a word of 1-based transposition indices, leftmost applied last.
    pub fn from_word(r: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(r);
        for &i in word.iter().rev() {
            w = Permutation::transposition(r, i).compose(&w);
        }
        w
    }

    /// The permutation matrix with entry 1 at (w(k), k) for each column k.
    pub fn matrix(&self) -> OrbitMatrix {
        let r = self.images.len();
        let mut entries = vec![0u32; r * r];
        for (k, &v) in self.images.iter().enumerate() {
            entries[v * r + k] = 1;
        }
        OrbitMatrix::new(r, entries).expect("permutation matrices are valid")
    }

    /// Read a permutation off a 0/1 matrix with one entry per row and column.
    pub fn from_matrix(m: &OrbitMatrix) -> Result<Permutation, SchurError> {
        if !m.is_permutation() {
            return Err(SchurError::NotPermutation);
        }
        let r = m.n();
        let mut images = vec![0; r];
        for k in 0..r {
            let row = (0..r).find(|&row| m.get(row, k) == 1).expect("permutation column");
            images[k] = row;
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, &v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// Every permutation of S_r, in no particular order beyond determinism.
pub fn all_permutations(r: usize) -> Result<Vec<Permutation>, SchurError> {
    if r > MAX_PERM_DEGREE {
        return Err(SchurError::SizeGuard(format!(
            "S_{r} enumeration exceeds the factorial guard r <= {MAX_PERM_DEGREE}"
        )));
    }
    let mut out = vec![Permutation::identity(r)];
    for k in 2..=r {
        let mut next = Vec::with_capacity(out.len() * k);
        for w in &out {
            for pos in 0..k {
                let mut images: Vec<usize> = w.images[..k - 1].to_vec();
                images.insert(pos, k - 1);
                next.push(Permutation { images });
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// All reduced expressions of w, as 1-based letter sequences.
pub fn reduced_words(w: &Permutation) -> Result<Vec<Vec<usize>>, SchurError> {
    if w.degree() > MAX_PERM_DEGREE {
        return Err(SchurError::SizeGuard(format!(
            "reduced-word enumeration exceeds the guard r <= {MAX_PERM_DEGREE}"
        )));
    }
    fn rec(w: &Permutation) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in w.left_descents() {
            let shorter = Permutation::transposition(w.degree(), i).compose(w);
            for mut tail in rec(&shorter) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }
    Ok(rec(w))
}

/// One deterministic reduced word (lexicographically smallest descent first).
pub fn one_reduced_word(w: &Permutation) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while let Some(&i) = cur.left_descents().first() {
        out.push(i);
        cur = Permutation::transposition(cur.degree(), i).compose(&cur);
    }
    out
}

/// Does any reduced expression contain s_i s_j s_i with |i − j| = 1?
pub fn has_braid_subword(w: &Permutation) -> Result<bool, SchurError> {
    let words = reduced_words(w)?;
    Ok(words.iter().any(|word| {
        word.windows(3)
            .any(|win| win[0] == win[2] && win[0].abs_diff(win[1]) == 1)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn identity_has_one_word() {
        let w = Permutation::identity(4);
        assert_eq!(reduced_words(&w).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(w.length(), 0);
    }

    #[test]
    fn longest_element_of_s3() {
        let w0 = Permutation::from_one_based(vec![3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 3);
        let mut words = reduced_words(&w0).unwrap();
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }

    #[test]
    fn reduced_words_match_brute_force_in_s4() {
        // Oracle: enumerate all words of length ℓ(w) and keep those evaluating to w.
        for w in all_permutations(4).unwrap() {
            let len = w.length();
            let expected: HashSet<Vec<usize>> = if len == 0 {
                std::iter::once(Vec::new()).collect()
            } else {
                let mut found = HashSet::new();
                let count = 3usize.pow(len as u32);
                for mut code in 0..count {
                    let mut word = Vec::with_capacity(len);
                    for _ in 0..len {
                        word.push(code % 3 + 1);
                        code /= 3;
                    }
                    if Permutation::from_word(4, &word) == w {
                        found.insert(word);
                    }
                }
                found
            };
            let got: HashSet<Vec<usize>> = reduced_words(&w).unwrap().into_iter().collect();
            assert_eq!(got, expected, "reduced words of {w}");
        }
    }

    #[test]
    fn words_evaluate_back() {
        for w in all_permutations(4).unwrap() {
            let word = one_reduced_word(&w);
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
    }

    #[test]
    fn matrix_roundtrip() {
        for w in all_permutations(4).unwrap() {
            let m = w.matrix();
            assert!(m.is_permutation());
            assert_eq!(Permutation::from_matrix(&m).unwrap(), w);
        }
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_one_based(vec![2, 3, 1]).unwrap();
        let b = a.inverse();
        assert!(a.compose(&b).is_identity());
        let s1 = Permutation::transposition(3, 1);
        let s2 = Permutation::transposition(3, 2);
        // s1 s2 sends 1 -> 2? Apply s2 first: 1 -> 1, then s1: 1 -> 2.
        assert_eq!(s1.compose(&s2).image(1), 2);
    }

    #[test]
    fn braid_subword_detection() {
        let w0 = Permutation::from_one_based(vec![3, 2, 1]).unwrap();
        assert!(has_braid_subword(&w0).unwrap());
        let s1 = Permutation::transposition(3, 1);
        assert!(!has_braid_subword(&s1).unwrap());
    }

    #[test]
    fn guard_rejects_large_degree() {
        let w = Permutation::identity(8);
        assert!(reduced_words(&w).is_err());
        assert!(all_permutations(8).is_err());
    }
}
