//! Generator words and reduced-path decompositions.
//!
//! Every basis element factors as a word in the generators e_i, f_i followed
//! by an idempotent. Two normal forms are provided: the monomial form, which
//! empties whole rows at a time, and the PBW-style form built from the
//! interval products e(i,j) and f(j,i). Words evaluate on basis elements by
//! replaying the fundamental multiplication rules right to left.

use std::fmt;

use crate::composition::Composition;
use crate::error::SchurError;
use crate::matrix::OrbitMatrix;
use crate::product::{left_apply_e, left_apply_f, ScaledOrbit};

/// Letter counts of any reduced word for a basis element: e_deg[i-1] is the
/// strict upper-triangular mass crossing index i, f_deg[i-1] the lower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    pub e_deg: Vec<u32>,
    pub f_deg: Vec<u32>,
}

impl DegreeVector {
    pub fn total(&self) -> u32 {
        self.e_deg.iter().sum::<u32>() + self.f_deg.iter().sum::<u32>()
    }

    pub fn is_zero(&self) -> bool {
        self.e_deg.iter().all(|&d| d == 0) && self.f_deg.iter().all(|&d| d == 0)
    }
}

/// E(e_A)_i = Σ_{l ≤ i < m} a_{l,m} and F(e_A)_i = Σ_{m ≤ i < l} a_{l,m}.
pub fn degree_vectors(a: &OrbitMatrix) -> DegreeVector {
    let n = a.n();
    let mut e_deg = vec![0u32; n.saturating_sub(1)];
    let mut f_deg = vec![0u32; n.saturating_sub(1)];
    for l in 0..n {
        for m in 0..n {
            let v = a.get(l, m);
            if v == 0 {
                continue;
            }
            if l < m {
                // crosses every index i with l+1 <= i <= m (1-based)
                for slot in &mut e_deg[l..m] {
                    *slot += v;
                }
            } else if m < l {
                for slot in &mut f_deg[m..l] {
                    *slot += v;
                }
            }
        }
    }
    DegreeVector { e_deg, f_deg }
}

/// A single symbol of a generator word. Indices are 1-based: 1 ≤ i ≤ n−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    E(usize),
    F(usize),
    K(Composition),
}

/// A word over {e_i, f_i, k_λ}, applied to basis elements right to left.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The E/F letters only, idempotent framing stripped.
    pub fn generator_letters(&self) -> Vec<Letter> {
        self.letters
            .iter()
            .filter(|l| !matches!(l, Letter::K(_)))
            .cloned()
            .collect()
    }

    pub fn generator_len(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| !matches!(l, Letter::K(_)))
            .count()
    }

    fn push_run(&mut self, letter: Letter, times: u32) {
        for _ in 0..times {
            self.letters.push(letter.clone());
        }
    }
}

impl fmt::Display for GeneratorWord {
    /// Run-length form, e.g. `e1^2 e2^6 e1 f2^5 f1^8 f2^6 k(8,7,6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.letters.len() {
            let mut run = 1;
            while idx + run < self.letters.len() && self.letters[idx + run] == self.letters[idx] {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match &self.letters[idx] {
                Letter::E(i) => write!(f, "e{i}")?,
                Letter::F(i) => write!(f, "f{i}")?,
                Letter::K(lam) => write!(f, "k{lam}")?,
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            idx += run;
        }
        Ok(())
    }
}

/// Monomial normal form: e-powers filling the upper triangle column by
/// column, then f-powers filling the lower triangle, then k_{co(A)}. Each
/// power empties the remaining mass of one row.
pub fn decompose_monomial(a: &OrbitMatrix) -> GeneratorWord {
    let n = a.n();
    let mut word = GeneratorWord::default();
    // 1-based indices throughout; entries read 0-based.
    for s in (1..n).rev() {
        for l in 1..=s {
            let count: u32 = (1..=l).map(|p| a.get(p - 1, s)).sum();
            word.push_run(Letter::E(l), count);
        }
    }
    for s in 1..n {
        for l in (s..n).rev() {
            let count: u32 = (l + 1..=n).map(|p| a.get(p - 1, s - 1)).sum();
            word.push_run(Letter::F(l), count);
        }
    }
    word.letters.push(Letter::K(a.co()));
    word
}

/// PBW-style normal form built from interval blocks e(i,j) = e_i e_{i+1} ... e_j
/// and f(j,i) = f_j ... f_{i+1} f_i, one matrix entry per block power.
pub fn decompose_pbw(a: &OrbitMatrix) -> GeneratorWord {
    let n = a.n();
    let mut word = GeneratorWord::default();
    for j in (2..=n).rev() {
        for i in (1..j).rev() {
            let power = a.get(i - 1, j - 1);
            for _ in 0..power {
                for l in i..j {
                    word.letters.push(Letter::E(l));
                }
            }
        }
    }
    for j in 1..n {
        for i in j + 1..=n {
            let power = a.get(i - 1, j - 1);
            for _ in 0..power {
                for l in (j..i).rev() {
                    word.letters.push(Letter::F(l));
                }
            }
        }
    }
    word.letters.push(Letter::K(a.co()));
    word
}

/// Evaluate a word on a starting basis element, applying letters right to
/// left through the fundamental rules. A k_λ letter is the identity when
/// λ matches the current row vector and kills the product otherwise.
pub fn evaluate_word(word: &GeneratorWord, start: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    evaluate_word_letters(word.letters(), start)
}

pub(crate) fn evaluate_word_letters(
    letters: &[Letter],
    start: &OrbitMatrix,
) -> Result<ScaledOrbit, SchurError> {
    let mut cur = start.clone();
    for letter in letters.iter().rev() {
        let next = match letter {
            Letter::E(i) => left_apply_e(*i, &cur)?,
            Letter::F(i) => left_apply_f(*i, &cur)?,
            Letter::K(lam) => {
                if lam.n() != cur.n() {
                    return Err(SchurError::MalformedWord(format!(
                        "idempotent letter k{lam} does not fit {}x{} matrices",
                        cur.n(),
                        cur.n()
                    )));
                }
                if *lam == cur.ro() {
                    continue;
                }
                return Ok(ScaledOrbit::Zero);
            }
        };
        match next {
            ScaledOrbit::Zero => return Ok(ScaledOrbit::Zero),
            ScaledOrbit::Orbit(_, m) => cur = m,
        }
    }
    Ok(ScaledOrbit::of(cur))
}

/// The reduced word witnessing e_A, in PBW form. Its generator length equals
/// the total degree of A.
pub fn reduced_word_for(a: &OrbitMatrix) -> GeneratorWord {
    let word = decompose_pbw(a);
    debug_assert_eq!(
        word.generator_len() as u32,
        degree_vectors(a).total(),
        "reduced word length must match the degree of {a}"
    );
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use crate::matrix::enumerate_basis;

    fn m(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    fn paper_example() -> OrbitMatrix {
        m("0,1,2;3,0,4;5,6,0")
    }

    #[test]
    fn degree_vectors_of_worked_example() {
        let d = degree_vectors(&paper_example());
        assert_eq!(d.e_deg, vec![3, 6]);
        assert_eq!(d.f_deg, vec![8, 11]);
    }

    #[test]
    fn degree_vectors_trivial_cases() {
        let diag = OrbitMatrix::diagonal(&Composition::new(vec![2, 0, 3]).unwrap());
        let d = degree_vectors(&diag);
        assert!(d.is_zero());

        let top = m("0,4;0,0");
        let d = degree_vectors(&top);
        assert_eq!(d.e_deg, vec![4]);
        assert_eq!(d.f_deg, vec![0]);
    }

    #[test]
    fn monomial_word_matches_display() {
        let w = decompose_monomial(&paper_example());
        assert_eq!(w.to_string(), "e1^2 e2^6 e1 f2^5 f1^8 f2^6 k(8,7,6)");
    }

    #[test]
    fn pbw_word_matches_display() {
        let w = decompose_pbw(&paper_example());
        // e(2,2)^4 e(1,2)^2 e(1,1) f(1,1)^3 f(2,1)^5 f(2,2)^6 k(8,7,6)
        assert_eq!(
            w.to_string(),
            "e2^4 e1 e2 e1 e2 e1 f1^3 f2 f1 f2 f1 f2 f1 f2 f1 f2 f1 f2^6 k(8,7,6)"
        );
    }

    #[test]
    fn diagonal_decomposes_to_idempotent() {
        let lam = Composition::new(vec![1, 2]).unwrap();
        let d = OrbitMatrix::diagonal(&lam);
        let w = decompose_monomial(&d);
        assert_eq!(w.generator_len(), 0);
        assert_eq!(w.letters(), &[Letter::K(lam.clone())]);
        assert_eq!(decompose_pbw(&d).letters(), &[Letter::K(lam)]);
    }

    #[test]
    fn letter_counts_match_degrees() {
        for a in enumerate_basis(3, 4).unwrap() {
            let d = degree_vectors(&a);
            for w in [decompose_monomial(&a), decompose_pbw(&a)] {
                for i in 1..3 {
                    let e_count = w
                        .letters()
                        .iter()
                        .filter(|l| matches!(l, Letter::E(j) if *j == i))
                        .count() as u32;
                    let f_count = w
                        .letters()
                        .iter()
                        .filter(|l| matches!(l, Letter::F(j) if *j == i))
                        .count() as u32;
                    assert_eq!(e_count, d.e_deg[i - 1], "e{i} count for {a}");
                    assert_eq!(f_count, d.f_deg[i - 1], "f{i} count for {a}");
                }
            }
        }
    }

    #[test]
    fn idempotent_letter_acts_per_row_vector() {
        let lam = Composition::new(vec![2, 1]).unwrap();
        let mu = Composition::new(vec![1, 2]).unwrap();
        let d = OrbitMatrix::diagonal(&lam);
        let keep = GeneratorWord::new(vec![Letter::K(lam)]);
        let kill = GeneratorWord::new(vec![Letter::K(mu)]);
        assert_eq!(evaluate_word(&keep, &d).unwrap().matrix().unwrap(), &d);
        assert!(evaluate_word(&kill, &d).unwrap().is_zero());
    }

    #[test]
    fn decompositions_evaluate_back_to_the_element() {
        for a in enumerate_basis(2, 4).unwrap() {
            let start = OrbitMatrix::diagonal(&a.co());
            let out = evaluate_word(&decompose_monomial(&a), &start).unwrap();
            assert_eq!(out, ScaledOrbit::of(a.clone()), "monomial word for {a}");
        }
        for a in enumerate_basis(3, 3).unwrap() {
            let start = OrbitMatrix::diagonal(&a.co());
            let mono = evaluate_word(&decompose_monomial(&a), &start).unwrap();
            let pbw = evaluate_word(&decompose_pbw(&a), &start).unwrap();
            assert_eq!(mono, pbw, "decompositions disagree for {a}");
            assert_eq!(mono, ScaledOrbit::of(a.clone()));
        }
    }

    #[test]
    fn reduced_word_length() {
        let w = reduced_word_for(&paper_example());
        assert_eq!(w.generator_len(), 28);
        let d = OrbitMatrix::diagonal(&Composition::new(vec![0, 3]).unwrap());
        assert_eq!(reduced_word_for(&d).generator_len(), 0);
    }

    #[test]
    fn reduced_words_are_minimal_for_small_cases() {
        // Exhaustive word search: nothing shorter reaches A from diag(co(A)).
        for a in enumerate_basis(2, 2).unwrap() {
            let target_len = reduced_word_for(&a).generator_len();
            let start = OrbitMatrix::diagonal(&a.co());
            for len in 0..target_len {
                let count = 2usize.pow(len as u32);
                for mask in 0..count {
                    let letters: Vec<Letter> = (0..len)
                        .map(|b| if mask >> b & 1 == 0 { Letter::E(1) } else { Letter::F(1) })
                        .collect();
                    let out = evaluate_word_letters(&letters, &start).unwrap();
                    assert_ne!(
                        out,
                        ScaledOrbit::of(a.clone()),
                        "word of length {len} reaches {a}"
                    );
                }
            }
        }
    }
}
