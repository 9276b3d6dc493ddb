//! The defining relation families and their semantic verification.
//!
//! Relations are checked inside constructed tables rather than by abstract
//! rewriting: each generator letter is interpreted as the summed element
//! e_i = Σ_λ e_{i,λ} of the table, framed by the idempotents that pin the
//! intended component, and a relation holds when its alternating sum of word
//! evaluations is the zero vector.

use serde::Serialize;

use crate::composition::{enumerate_compositions, Composition};
use crate::error::SchurError;
use crate::linalg::SparseVector;
use crate::matrix::OrbitMatrix;
use crate::product::ParamTuple;
use crate::quiver::{build_quiver, Quiver};
use crate::rational::{rat_int, Rational};
use crate::table::StructureTable;
use crate::word::{GeneratorWord, Letter};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationFamily {
    /// Serre relations among the e_i.
    P,
    /// Serre relations among the f_i.
    N,
    /// Commutator / idempotent relations between e_i and f_j.
    C,
}

impl RelationFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            RelationFamily::P => "P",
            RelationFamily::N => "N",
            RelationFamily::C => "C",
        }
    }
}

/// One framed relation: an alternating sum of words sharing source vertex
/// `lambda` and a common target.
#[derive(Debug, Clone)]
pub struct RelationElement {
    pub family: RelationFamily,
    pub i: usize,
    pub j: usize,
    pub lambda: Composition,
    pub terms: Vec<(Rational, GeneratorWord)>,
}

fn framed(target: Option<Composition>, letters: Vec<Letter>, lambda: &Composition) -> GeneratorWord {
    let mut all = Vec::with_capacity(letters.len() + 2);
    if let Some(mu) = target {
        all.push(Letter::K(mu));
    }
    all.extend(letters);
    all.push(Letter::K(lambda.clone()));
    GeneratorWord::new(all)
}

/// Walk the quiver right to left; true when every arrow along the word
/// exists and every idempotent letter matches the current vertex.
fn word_is_live(quiver: &Quiver, word: &GeneratorWord) -> bool {
    let mut current: Option<Composition> = None;
    for letter in word.letters().iter().rev() {
        match letter {
            Letter::K(lam) => match &current {
                None => current = Some(lam.clone()),
                Some(cur) => {
                    if cur != lam {
                        return false;
                    }
                }
            },
            Letter::E(i) => match current.take() {
                Some(cur) if quiver.has_e_arrow(*i, &cur) => {
                    current = cur.add_alpha(*i);
                }
                _ => return false,
            },
            Letter::F(i) => match current.take() {
                Some(cur) if quiver.has_f_arrow(*i, &cur) => {
                    current = cur.sub_alpha(*i);
                }
                _ => return false,
            },
        }
    }
    true
}

/// λ plus a signed combination of simple roots, or None when the result
/// leaves the composition cone.
fn shifted(lambda: &Composition, moves: &[(usize, i32)]) -> Option<Composition> {
    let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    for &(i, by) in moves {
        parts[i - 1] += by as i64;
        parts[i] -= by as i64;
    }
    if parts.iter().any(|&p| p < 0) {
        return None;
    }
    Composition::new(parts.into_iter().map(|p| p as u32).collect()).ok()
}

/// All relations P_{ij,λ}, N_{ij,λ} and C_{ij,λ}(t) whose constituent words
/// exist in the quiver. The C relation with λ_i = λ_{i+1} = 0 is empty and
/// omitted.
pub fn relation_set(n: usize, r: u32, t: &ParamTuple) -> Vec<RelationElement> {
    let quiver = build_quiver(n, r);
    let mut out = Vec::new();
    let one = rat_int(1);
    let neg = rat_int(-1);
    for lambda in enumerate_compositions(n, r) {
        // Serre relations, i ≠ j.
        for i in 1..n {
            for j in 1..n {
                if i == j {
                    continue;
                }
                let (p_words, degree): (Vec<(Rational, Vec<Letter>)>, i32) = if i + 1 == j {
                    (
                        vec![
                            (one.clone(), vec![Letter::E(i), Letter::E(i), Letter::E(j)]),
                            (neg.clone(), vec![Letter::E(i), Letter::E(j), Letter::E(i)]),
                        ],
                        2,
                    )
                } else if i == j + 1 {
                    (
                        vec![
                            (neg.clone(), vec![Letter::E(i), Letter::E(j), Letter::E(i)]),
                            (one.clone(), vec![Letter::E(j), Letter::E(i), Letter::E(i)]),
                        ],
                        2,
                    )
                } else {
                    (
                        vec![
                            (one.clone(), vec![Letter::E(i), Letter::E(j)]),
                            (neg.clone(), vec![Letter::E(j), Letter::E(i)]),
                        ],
                        1,
                    )
                };
                let target = shifted(&lambda, &[(i, degree), (j, 1)]);
                let terms: Vec<(Rational, GeneratorWord)> = p_words
                    .into_iter()
                    .map(|(c, letters)| (c, framed(target.clone(), letters, &lambda)))
                    .collect();
                if terms.iter().any(|(_, w)| word_is_live(&quiver, w)) {
                    out.push(RelationElement {
                        family: RelationFamily::P,
                        i,
                        j,
                        lambda: lambda.clone(),
                        terms,
                    });
                }

                let (n_words, degree): (Vec<(Rational, Vec<Letter>)>, i32) = if i + 1 == j {
                    (
                        vec![
                            (neg.clone(), vec![Letter::F(i), Letter::F(j), Letter::F(i)]),
                            (one.clone(), vec![Letter::F(j), Letter::F(i), Letter::F(i)]),
                        ],
                        2,
                    )
                } else if i == j + 1 {
                    (
                        vec![
                            (one.clone(), vec![Letter::F(i), Letter::F(i), Letter::F(j)]),
                            (neg.clone(), vec![Letter::F(i), Letter::F(j), Letter::F(i)]),
                        ],
                        2,
                    )
                } else {
                    (
                        vec![
                            (one.clone(), vec![Letter::F(i), Letter::F(j)]),
                            (neg.clone(), vec![Letter::F(j), Letter::F(i)]),
                        ],
                        1,
                    )
                };
                let target = shifted(&lambda, &[(i, -degree), (j, -1)]);
                let terms: Vec<(Rational, GeneratorWord)> = n_words
                    .into_iter()
                    .map(|(c, letters)| (c, framed(target.clone(), letters, &lambda)))
                    .collect();
                if terms.iter().any(|(_, w)| word_is_live(&quiver, w)) {
                    out.push(RelationElement {
                        family: RelationFamily::N,
                        i,
                        j,
                        lambda: lambda.clone(),
                        terms,
                    });
                }
            }
        }
        // Commutator / idempotent relations.
        for i in 1..n {
            for j in 1..n {
                if i != j {
                    let target = shifted(&lambda, &[(i, 1), (j, -1)]);
                    let terms = vec![
                        (one.clone(), framed(target.clone(), vec![Letter::E(i), Letter::F(j)], &lambda)),
                        (neg.clone(), framed(target.clone(), vec![Letter::F(j), Letter::E(i)], &lambda)),
                    ];
                    if terms.iter().any(|(_, w)| word_is_live(&quiver, w)) {
                        out.push(RelationElement {
                            family: RelationFamily::C,
                            i,
                            j,
                            lambda: lambda.clone(),
                            terms,
                        });
                    }
                    continue;
                }
                let lam_i = lambda.part(i - 1);
                let lam_next = lambda.part(i);
                let target = Some(lambda.clone());
                let terms = if lam_i > 0 && lam_next > 0 {
                    vec![
                        (one.clone(), framed(target.clone(), vec![Letter::E(i), Letter::F(i)], &lambda)),
                        (neg.clone(), framed(target, vec![Letter::F(i), Letter::E(i)], &lambda)),
                    ]
                } else if lam_next == 0 && lam_i > 0 {
                    vec![
                        (one.clone(), framed(target, vec![Letter::E(i), Letter::F(i)], &lambda)),
                        (-t.value(i).clone(), framed(None, vec![], &lambda)),
                    ]
                } else if lam_i == 0 && lam_next > 0 {
                    vec![
                        (t.value(i).clone(), framed(None, vec![], &lambda)),
                        (neg.clone(), framed(target, vec![Letter::F(i), Letter::E(i)], &lambda)),
                    ]
                } else {
                    continue; // empty relation
                };
                out.push(RelationElement {
                    family: RelationFamily::C,
                    i,
                    j,
                    lambda: lambda.clone(),
                    terms,
                });
            }
        }
    }
    out
}

/// The table element of a single letter: an idempotent unit vector, or the
/// sum of all basis elements of arrow shape for the given index.
fn letter_element(table: &StructureTable, letter: &Letter) -> Result<SparseVector, SchurError> {
    let n = table.n();
    match letter {
        Letter::K(lam) => {
            let idx = table
                .index_of_matrix(&OrbitMatrix::diagonal(lam))
                .ok_or_else(|| SchurError::ShapeMismatch(format!("idempotent k{lam} not in table")))?;
            Ok(SparseVector::unit(idx))
        }
        Letter::E(i) => {
            let mut acc = SparseVector::zero();
            for lam in enumerate_compositions(n, table.r()) {
                if lam.part(*i) == 0 {
                    continue;
                }
                // column vector λ, single off-diagonal 1 at (i, i+1)
                let m = OrbitMatrix::diagonal(&lam).bump(*i, *i, -1).bump(i - 1, *i, 1);
                let idx = table.index_of_matrix(&m).ok_or_else(|| {
                    SchurError::ShapeMismatch(format!("generator matrix {m} not in table"))
                })?;
                acc.add_term(idx, rat_int(1));
            }
            Ok(acc)
        }
        Letter::F(j) => {
            let mut acc = SparseVector::zero();
            for lam in enumerate_compositions(n, table.r()) {
                if lam.part(j - 1) == 0 {
                    continue;
                }
                // column vector λ, single off-diagonal 1 at (j+1, j)
                let m = OrbitMatrix::diagonal(&lam).bump(j - 1, j - 1, -1).bump(*j, j - 1, 1);
                let idx = table.index_of_matrix(&m).ok_or_else(|| {
                    SchurError::ShapeMismatch(format!("generator matrix {m} not in table"))
                })?;
                acc.add_term(idx, rat_int(1));
            }
            Ok(acc)
        }
    }
}

/// Evaluate one relation inside a table. The zero vector means it holds.
pub fn evaluate_relation(rel: &RelationElement, table: &StructureTable) -> Result<SparseVector, SchurError> {
    let mut acc = SparseVector::zero();
    for (coeff, word) in &rel.terms {
        let mut value: Option<SparseVector> = None;
        for letter in word.letters().iter().rev() {
            let elem = letter_element(table, letter)?;
            value = Some(match value {
                None => elem,
                Some(acc) => table.mul_vectors(&elem, &acc),
            });
        }
        let value = value.unwrap_or_else(|| table.unit().clone());
        acc = acc.axpy(coeff, &value);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFailure {
    pub family: String,
    pub i: usize,
    pub j: usize,
    pub lambda: Vec<u32>,
    pub residual: String,
}

/// Verification report for one table: how many relations were evaluated and
/// which ones failed to vanish.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub relations_checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

fn render_residual(table: &StructureTable, v: &SparseVector) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(idx, c)| format!("{}*[{}]", crate::rational::format_rational(c), table.label(idx)))
        .collect();
    parts.join(" + ")
}

/// Evaluate every relation of the matching parameter tuple in `table`.
pub fn check_relations(table: &StructureTable, t: &ParamTuple) -> Result<RelationReport, SchurError> {
    let rels = relation_set(table.n(), table.r(), t);
    let evaluate = |rel: &RelationElement| -> Result<Option<RelationFailure>, SchurError> {
        let residual = evaluate_relation(rel, table)?;
        Ok((!residual.is_zero()).then(|| RelationFailure {
            family: rel.family.tag().to_string(),
            i: rel.i,
            j: rel.j,
            lambda: rel.lambda.parts().to_vec(),
            residual: render_residual(table, &residual),
        }))
    };
    #[cfg(feature = "parallel")]
    let results: Result<Vec<_>, SchurError> = rels.par_iter().map(evaluate).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Result<Vec<_>, SchurError> = rels.iter().map(evaluate).collect();
    Ok(RelationReport {
        relations_checked: rels.len(),
        failures: results?.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::enumerate_basis;
    use crate::product::ProductKind;
    use crate::rational::rat;
    use crate::table::build_table;
    use crate::word::{degree_vectors, evaluate_word};

    #[test]
    fn commutator_relation_in_the_interior() {
        let t = ParamTuple::ones(2);
        let rels = relation_set(2, 2, &t);
        let lam = Composition::new(vec![1, 1]).unwrap();
        let c11 = rels
            .iter()
            .find(|r| r.family == RelationFamily::C && r.i == 1 && r.j == 1 && r.lambda == lam)
            .expect("interior commutator relation");
        // Pure commutator: two words, both of generator length 2.
        assert_eq!(c11.terms.len(), 2);
        assert!(c11.terms.iter().all(|(_, w)| w.generator_len() == 2));
    }

    #[test]
    fn idempotent_relation_on_the_boundary() {
        let t = ParamTuple::ones(2);
        let rels = relation_set(2, 2, &t);
        let lam = Composition::new(vec![2, 0]).unwrap();
        let c = rels
            .iter()
            .find(|r| r.family == RelationFamily::C && r.i == 1 && r.lambda == lam)
            .expect("boundary relation at (2,0)");
        // e1 f1 - t k: one two-letter word and one bare idempotent term.
        let lens: Vec<usize> = c.terms.iter().map(|(_, w)| w.generator_len()).collect();
        assert_eq!(lens, vec![2, 0]);
        assert_eq!(c.terms[1].0, rat(-1, 1));
    }

    #[test]
    fn no_serre_relations_for_n_two() {
        let rels = relation_set(2, 3, &ParamTuple::ones(2));
        assert!(rels
            .iter()
            .all(|r| !matches!(r.family, RelationFamily::P | RelationFamily::N)));
    }

    #[test]
    fn empty_relation_omitted() {
        // λ = (2,0,0): at i = 2 both λ_2 and λ_3 vanish, so no C relation.
        let rels = relation_set(3, 2, &ParamTuple::ones(3));
        let lam = Composition::new(vec![2, 0, 0]).unwrap();
        assert!(!rels
            .iter()
            .any(|r| r.family == RelationFamily::C && r.i == 2 && r.j == 2 && r.lambda == lam));
    }

    #[test]
    fn relations_vanish_in_matching_tables() {
        for (n, r) in [(2usize, 3u32), (3, 2)] {
            let s0 = build_table(n, r, &ProductKind::S0).unwrap();
            let report = check_relations(&s0, &ParamTuple::ones(n)).unwrap();
            assert!(report.all_hold(), "s0 relations fail at ({n},{r}): {:?}", report.failures);
            assert!(report.relations_checked > 0);

            let star = build_table(n, r, &ProductKind::Star).unwrap();
            let report = check_relations(&star, &ParamTuple::zeros(n)).unwrap();
            assert!(report.all_hold(), "star relations fail at ({n},{r})");
        }

        let t = ParamTuple::new(vec![rat(1, 2), rat(1, 3)]);
        let dt = build_table(3, 2, &ProductKind::T(t.clone())).unwrap();
        let report = check_relations(&dt, &t).unwrap();
        assert!(report.all_hold(), "t relations fail: {:?}", report.failures);
    }

    #[test]
    fn wrong_parameter_is_detected() {
        // The s0 table does not satisfy the t = 0 relations.
        let s0 = build_table(2, 2, &ProductKind::S0).unwrap();
        let report = check_relations(&s0, &ParamTuple::zeros(2)).unwrap();
        assert!(!report.all_hold());
    }

    #[test]
    fn serre_word_pairs_agree_pointwise() {
        // The two words of a P/N relation are rewrites of each other: they
        // replay to the same element on every compatible basis element, so
        // in particular their evaluations have equal length.
        for (n, r) in [(3usize, 2u32), (3, 3)] {
            let basis = enumerate_basis(n, r).unwrap();
            for rel in relation_set(n, r, &ParamTuple::ones(n)) {
                if rel.family == RelationFamily::C {
                    continue;
                }
                let [(_, first), (_, second)] = rel.terms.as_slice() else {
                    panic!("Serre relations have two words");
                };
                for b in basis.iter().filter(|b| b.ro() == rel.lambda) {
                    let left = evaluate_word(first, b).unwrap();
                    let right = evaluate_word(second, b).unwrap();
                    assert_eq!(left, right, "{first} vs {second} on {b}");
                    if let (Some(x), Some(y)) = (left.matrix(), right.matrix()) {
                        assert_eq!(degree_vectors(x).total(), degree_vectors(y).total());
                    }
                }
            }
        }
    }
}
