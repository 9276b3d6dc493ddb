//! Fundamental multiplication rules and the three products.
//!
//! Generators act on basis elements by moving one unit between adjacent rows
//! (left action) or adjacent columns (right action) at an extremal nonzero
//! position. Iterating these rules along a decomposition word of the left
//! factor computes the monoid product; the star and parameterized products
//! only rescale or kill the outcome depending on the degree bookkeeping.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::SchurError;
use crate::matrix::OrbitMatrix;
use crate::rational::{pow_u32, Rational};
use crate::word::{decompose_monomial, degree_vectors, evaluate_word_letters};

/// A scalar multiple of a basis element, or zero. Products of basis elements
/// never produce more than one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaledOrbit {
    Zero,
    Orbit(Rational, OrbitMatrix),
}

impl ScaledOrbit {
    /// Coefficient-one wrapper.
    pub fn of(matrix: OrbitMatrix) -> Self {
        ScaledOrbit::Orbit(Rational::one(), matrix)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ScaledOrbit::Zero)
    }

    pub fn matrix(&self) -> Option<&OrbitMatrix> {
        match self {
            ScaledOrbit::Zero => None,
            ScaledOrbit::Orbit(_, m) => Some(m),
        }
    }

    pub fn coeff(&self) -> Option<&Rational> {
        match self {
            ScaledOrbit::Zero => None,
            ScaledOrbit::Orbit(c, _) => Some(c),
        }
    }

    pub fn rescale(self, c: &Rational) -> ScaledOrbit {
        match self {
            ScaledOrbit::Zero => ScaledOrbit::Zero,
            ScaledOrbit::Orbit(_, _) if c.is_zero() => ScaledOrbit::Zero,
            ScaledOrbit::Orbit(c0, m) => ScaledOrbit::Orbit(c0 * c, m),
        }
    }
}

impl fmt::Display for ScaledOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaledOrbit::Zero => write!(f, "0"),
            ScaledOrbit::Orbit(c, m) => {
                if c.is_one() {
                    write!(f, "{m}")
                } else {
                    write!(f, "{} * {m}", crate::rational::format_rational(c))
                }
            }
        }
    }
}

/// One deformation parameter per generator index, constant across vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamTuple {
    values: Vec<Rational>,
}

impl ParamTuple {
    /// Expects n − 1 values for size-n matrices.
    pub fn new(values: Vec<Rational>) -> Self {
        ParamTuple { values }
    }

    pub fn ones(n: usize) -> Self {
        ParamTuple { values: vec![Rational::one(); n.saturating_sub(1)] }
    }

    pub fn zeros(n: usize) -> Self {
        ParamTuple { values: vec![Rational::zero(); n.saturating_sub(1)] }
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        ParamTuple { values: vec![value; n.saturating_sub(1)] }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Parameter t_i for 1-based generator index i.
    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Which of the three products a table is built with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductKind {
    S0,
    Star,
    T(ParamTuple),
}

impl ProductKind {
    pub fn multiply(&self, a: &OrbitMatrix, b: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
        match self {
            ProductKind::S0 => s0_multiply(a, b),
            ProductKind::Star => star_multiply(a, b),
            ProductKind::T(t) => t_multiply(t, a, b),
        }
    }

    /// Short tag used in table names and serialized output.
    pub fn tag(&self) -> String {
        match self {
            ProductKind::S0 => "s0".into(),
            ProductKind::Star => "star".into(),
            ProductKind::T(t) => {
                let vals: Vec<String> = t.values().iter().map(crate::rational::format_rational).collect();
                format!("t:{}", vals.join(","))
            }
        }
    }
}

fn check_index(i: usize, n: usize) -> Result<(), SchurError> {
    if i == 0 || i >= n {
        return Err(SchurError::IndexOutOfRange { i, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// e_i · e_A. Moves one unit from row i+1 to row i in the rightmost nonzero
/// column of row i+1; zero when row i+1 is empty.
pub fn left_apply_e(i: usize, a: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    let n = a.n();
    check_index(i, n)?;
    let row = i; // 0-based row i+1
    let Some(p) = (0..n).rev().find(|&j| a.get(row, j) > 0) else {
        return Ok(ScaledOrbit::Zero);
    };
    Ok(ScaledOrbit::of(a.bump(row, p, -1).bump(row - 1, p, 1)))
}

/// f_i · e_A. Moves one unit from row i to row i+1 in the leftmost nonzero
/// column of row i; zero when row i is empty.
pub fn left_apply_f(i: usize, a: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    let n = a.n();
    check_index(i, n)?;
    let row = i - 1; // 0-based row i
    let Some(p) = (0..n).find(|&j| a.get(row, j) > 0) else {
        return Ok(ScaledOrbit::Zero);
    };
    Ok(ScaledOrbit::of(a.bump(row, p, -1).bump(row + 1, p, 1)))
}

/// e_A · f_i. Moves one unit from column i+1 to column i in the lowest
/// nonzero row of column i+1; zero when column i+1 is empty.
pub fn right_apply_f(i: usize, a: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    let n = a.n();
    check_index(i, n)?;
    let col = i; // 0-based column i+1
    let Some(p) = (0..n).rev().find(|&j| a.get(j, col) > 0) else {
        return Ok(ScaledOrbit::Zero);
    };
    Ok(ScaledOrbit::of(a.bump(p, col, -1).bump(p, col - 1, 1)))
}

/// e_A · e_i. Moves one unit from column i to column i+1 in the highest
/// nonzero row of column i; zero when column i is empty.
pub fn right_apply_e(i: usize, a: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    let n = a.n();
    check_index(i, n)?;
    let col = i - 1; // 0-based column i
    let Some(p) = (0..n).find(|&j| a.get(j, col) > 0) else {
        return Ok(ScaledOrbit::Zero);
    };
    Ok(ScaledOrbit::of(a.bump(p, col, -1).bump(p, col + 1, 1)))
}

fn check_same_shape(a: &OrbitMatrix, b: &OrbitMatrix) -> Result<(), SchurError> {
    if a.n() != b.n() || a.weight() != b.weight() {
        return Err(SchurError::ShapeMismatch(format!(
            "left factor is {}x{} of weight {}, right factor is {}x{} of weight {}",
            a.n(),
            a.n(),
            a.weight(),
            b.n(),
            b.n(),
            b.weight()
        )));
    }
    Ok(())
}

/// The monoid product e_A · e_B: zero unless co(A) = ro(B), otherwise the
/// single basis element obtained by replaying the generator word of A on B.
pub fn s0_multiply(a: &OrbitMatrix, b: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    check_same_shape(a, b)?;
    if a.co() != b.ro() {
        return Ok(ScaledOrbit::Zero);
    }
    let word = decompose_monomial(a);
    let result = evaluate_word_letters(&word.generator_letters(), b)?;
    debug_assert!(!result.is_zero(), "monoid product with matching shapes cannot die");
    Ok(result)
}

/// The associated-graded product: the monoid product when the degree vectors
/// add exactly, zero otherwise.
pub fn star_multiply(a: &OrbitMatrix, b: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    check_same_shape(a, b)?;
    match s0_multiply(a, b)? {
        ScaledOrbit::Zero => Ok(ScaledOrbit::Zero),
        ScaledOrbit::Orbit(c, m) => {
            let (da, db, dm) = (degree_vectors(a), degree_vectors(b), degree_vectors(&m));
            let e_adds = da
                .e_deg
                .iter()
                .zip(&db.e_deg)
                .zip(&dm.e_deg)
                .all(|((x, y), z)| x + y == *z);
            let f_adds = da
                .f_deg
                .iter()
                .zip(&db.f_deg)
                .zip(&dm.f_deg)
                .all(|((x, y), z)| x + y == *z);
            debug_assert_eq!(e_adds, f_adds, "E- and F-defects must agree");
            Ok(if e_adds { ScaledOrbit::Orbit(c, m) } else { ScaledOrbit::Zero })
        }
    }
}

/// The deformed product: the monoid product scaled by ∏ t_i^{d_i}, where d_i
/// is the degree defect at index i. All d_i are nonnegative; 0^0 = 1, and a
/// vanishing coefficient collapses the result to zero.
pub fn t_multiply(t: &ParamTuple, a: &OrbitMatrix, b: &OrbitMatrix) -> Result<ScaledOrbit, SchurError> {
    check_same_shape(a, b)?;
    if t.len() + 1 != a.n() {
        return Err(SchurError::ShapeMismatch(format!(
            "parameter tuple has {} entries, need {}",
            t.len(),
            a.n() - 1
        )));
    }
    match s0_multiply(a, b)? {
        ScaledOrbit::Zero => Ok(ScaledOrbit::Zero),
        ScaledOrbit::Orbit(c, m) => {
            let (da, db, dm) = (degree_vectors(a), degree_vectors(b), degree_vectors(&m));
            let mut coeff = c;
            for i in 1..a.n() {
                let defect = da.e_deg[i - 1] + db.e_deg[i - 1] - dm.e_deg[i - 1];
                coeff *= pow_u32(t.value(i), defect);
                if coeff.is_zero() {
                    return Ok(ScaledOrbit::Zero);
                }
            }
            Ok(ScaledOrbit::Orbit(coeff, m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use crate::matrix::enumerate_basis;
    use crate::rational::rat;

    fn m(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    fn apply_times<F>(f: F, i: usize, a: &OrbitMatrix, times: usize) -> ScaledOrbit
    where
        F: Fn(usize, &OrbitMatrix) -> Result<ScaledOrbit, SchurError>,
    {
        let mut cur = ScaledOrbit::of(a.clone());
        for _ in 0..times {
            cur = match cur {
                ScaledOrbit::Zero => return ScaledOrbit::Zero,
                ScaledOrbit::Orbit(c, m) => f(i, &m).unwrap().rescale(&c),
            };
        }
        cur
    }

    #[test]
    fn left_e_repeated() {
        // Six applications of e_2 fill the (2,3) slot from row 3.
        let a = m("0,1,0;3,0,0;5,6,6");
        let out = apply_times(left_apply_e, 2, &a, 6);
        assert_eq!(out.matrix().unwrap(), &m("0,1,0;3,0,6;5,6,0"));
    }

    #[test]
    fn left_e_single() {
        let a = m("0,1,1;3,0,5;5,6,0");
        let out = left_apply_e(1, &a).unwrap();
        assert_eq!(out.matrix().unwrap(), &m("0,1,2;3,0,4;5,6,0"));
    }

    #[test]
    fn left_e_dies_on_empty_row() {
        let a = m("4,0;0,0");
        assert!(left_apply_e(1, &a).unwrap().is_zero());
        assert!(left_apply_e(2, &a).is_err());
    }

    #[test]
    fn left_f_repeated() {
        let a = m("8,0,0;0,1,0;0,6,6");
        let out = apply_times(left_apply_f, 1, &a, 8);
        assert_eq!(out.matrix().unwrap(), &m("0,0,0;8,1,0;0,6,6"));

        let d = OrbitMatrix::diagonal(&Composition::new(vec![8, 7, 6]).unwrap());
        let out = apply_times(left_apply_f, 2, &d, 6);
        assert_eq!(out.matrix().unwrap(), &m("8,0,0;0,1,0;0,6,6"));
    }

    #[test]
    fn left_f_dies_on_empty_row() {
        let a = m("0,0;1,3");
        assert!(left_apply_f(1, &a).unwrap().is_zero());
    }

    #[test]
    fn right_f_on_diagonal_shifts_one_column() {
        let d = OrbitMatrix::diagonal(&Composition::new(vec![2, 3]).unwrap());
        let out = right_apply_f(1, &d).unwrap();
        assert_eq!(out.matrix().unwrap(), &m("2,0;1,2"));
    }

    #[test]
    fn right_e_dies_on_empty_column() {
        let a = m("0,4;0,0");
        assert!(right_apply_e(1, &a).unwrap().is_zero());
    }

    #[test]
    fn left_right_rules_commute() {
        // Left action of e_1 and right action of f_2 commute wherever both live.
        for a in enumerate_basis(3, 3).unwrap() {
            let lr = match right_apply_f(2, &a).unwrap() {
                ScaledOrbit::Zero => ScaledOrbit::Zero,
                ScaledOrbit::Orbit(_, x) => left_apply_e(1, &x).unwrap(),
            };
            let rl = match left_apply_e(1, &a).unwrap() {
                ScaledOrbit::Zero => ScaledOrbit::Zero,
                ScaledOrbit::Orbit(_, x) => right_apply_f(2, &x).unwrap(),
            };
            if !lr.is_zero() && !rl.is_zero() {
                assert_eq!(lr, rl, "mismatch at {a}");
            }
        }
    }

    #[test]
    fn ro_shifts_by_alpha_under_left_e() {
        for a in enumerate_basis(3, 2).unwrap() {
            for i in 1..3 {
                if let ScaledOrbit::Orbit(_, x) = left_apply_e(i, &a).unwrap() {
                    assert_eq!(x.co(), a.co());
                    assert_eq!(Some(x.ro()), a.ro().add_alpha(i));
                }
            }
        }
    }

    #[test]
    fn s0_product_worked_pair() {
        let a = m("2,2;0,1");
        let b = m("2,0;2,1");
        let out = s0_multiply(&a, &b).unwrap();
        assert_eq!(out.matrix().unwrap(), &m("3,1;1,0"));
        assert_eq!(out.coeff().unwrap(), &rat(1, 1));
    }

    #[test]
    fn s0_identity_idempotents() {
        let b = m("1,2;0,3");
        let left = OrbitMatrix::diagonal(&b.ro());
        let right = OrbitMatrix::diagonal(&b.co());
        assert_eq!(s0_multiply(&left, &b).unwrap().matrix().unwrap(), &b);
        assert_eq!(s0_multiply(&b, &right).unwrap().matrix().unwrap(), &b);
    }

    #[test]
    fn s0_zero_when_shapes_disagree() {
        let a = m("2,2;0,1"); // co = (2,3)
        let b = m("0,0;2,3"); // ro = (0,5)
        assert!(s0_multiply(&a, &b).unwrap().is_zero());
        assert!(s0_multiply(&a, &m("1,0;0,0")).is_err());
    }

    #[test]
    fn star_kills_degree_dropping_product() {
        let a = m("2,2;0,1");
        let b = m("2,0;2,1");
        assert!(star_multiply(&a, &b).unwrap().is_zero());

        let d = OrbitMatrix::diagonal(&b.ro());
        assert_eq!(star_multiply(&d, &b).unwrap().matrix().unwrap(), &b);
    }

    #[test]
    fn t_product_interpolates() {
        let basis = enumerate_basis(2, 3).unwrap();
        let ones = ParamTuple::ones(2);
        let zeros = ParamTuple::zeros(2);
        for a in &basis {
            for b in &basis {
                assert_eq!(t_multiply(&ones, a, b).unwrap(), s0_multiply(a, b).unwrap());
                assert_eq!(t_multiply(&zeros, a, b).unwrap(), star_multiply(a, b).unwrap());
            }
        }
    }

    #[test]
    fn t_product_tracks_defect() {
        let t = ParamTuple::constant(2, rat(1, 2));
        let a = m("2,2;0,1");
        let b = m("2,0;2,1");
        let c = m("3,1;1,0");
        let d = degree_vectors(&a).e_deg[0] + degree_vectors(&b).e_deg[0] - degree_vectors(&c).e_deg[0];
        assert!(d >= 1);
        let out = t_multiply(&t, &a, &b).unwrap();
        assert_eq!(out.matrix().unwrap(), &c);
        assert_eq!(out.coeff().unwrap(), &pow_u32(&rat(1, 2), d));
    }
}
