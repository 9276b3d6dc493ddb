//! Centralizer algebras at the all-ones idempotent: the 0-Hecke corner of the
//! monoid algebra, its graded image, and the nil-Temperley-Lieb subalgebra
//! with the peak-set parametrization.
//!
//! The corner at k_α of the weight-r algebras has the r! permutation matrices
//! as basis, so these builders generate products from that basis directly and
//! never materialize the full weight-r table.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::SchurError;
use crate::linalg::SparseVector;
use crate::matrix::OrbitMatrix;
use crate::perm::{all_permutations, one_reduced_word, reduced_words, Permutation};
use crate::product::{left_apply_e, left_apply_f, ProductKind, ScaledOrbit};
use crate::table::{BasisLabel, StructureTable};

/// Corner builds enumerate all of S_r.
pub const MAX_CORNER_DEGREE: usize = 5;
/// The nil-Temperley-Lieb closure only tracks Catalan-many elements.
pub const MAX_NTL_DEGREE: usize = 7;

/// A corner table together with the permutation attached to each basis
/// element by evaluating its reduced word.
#[derive(Debug, Clone)]
pub struct CentralizerTable {
    pub table: StructureTable,
    perms: Vec<Permutation>,
}

impl CentralizerTable {
    pub fn perm_of(&self, idx: usize) -> &Permutation {
        &self.perms[idx]
    }

    pub fn index_of_perm(&self, w: &Permutation) -> Option<usize> {
        self.perms.iter().position(|p| p == w)
    }
}

/// The generator x_i = k_α f_i e_i k_α, computed from the fundamental rules.
pub fn corner_generator(r: usize, i: usize) -> Result<OrbitMatrix, SchurError> {
    let id = OrbitMatrix::identity(r);
    let up = match left_apply_e(i, &id)? {
        ScaledOrbit::Orbit(_, m) => m,
        ScaledOrbit::Zero => {
            return Err(SchurError::CheckFailed(format!("e_{i} dies on the identity pattern")))
        }
    };
    let down = match left_apply_f(i, &up)? {
        ScaledOrbit::Orbit(_, m) => m,
        ScaledOrbit::Zero => {
            return Err(SchurError::CheckFailed(format!("f_{i} e_{i} dies on the identity pattern")))
        }
    };
    let alpha = crate::composition::Composition::all_ones(r);
    if down.ro() != alpha || down.co() != alpha {
        return Err(SchurError::CheckFailed(format!(
            "k_a f_{i} e_{i} k_a left the corner: {down}"
        )));
    }
    Ok(down)
}

fn corner_guard(r: usize) -> Result<(), SchurError> {
    if r == 0 || r > MAX_CORNER_DEGREE {
        return Err(SchurError::SizeGuard(format!(
            "corner construction supports 1 <= r <= {MAX_CORNER_DEGREE}, got {r}"
        )));
    }
    Ok(())
}

fn multiply_matrices(
    kind: &ProductKind,
    a: &OrbitMatrix,
    b: &OrbitMatrix,
) -> Result<Option<OrbitMatrix>, SchurError> {
    match kind.multiply(a, b)? {
        ScaledOrbit::Zero => Ok(None),
        ScaledOrbit::Orbit(_, m) => Ok(Some(m)),
    }
}

/// e_{word} evaluated through the chosen product, right to left from k_α.
/// None encodes zero, which the graded product can produce.
fn evaluate_t_word(
    kind: &ProductKind,
    r: usize,
    word: &[usize],
) -> Result<Option<OrbitMatrix>, SchurError> {
    let mut cur = OrbitMatrix::identity(r);
    for &i in word.iter().rev() {
        let gen = corner_generator(r, i)?;
        match multiply_matrices(kind, &gen, &cur)? {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// Shared scaffolding: the permutation-matrix basis, the product table over
/// it, and the w ↦ basis-index labeling obtained by evaluating one reduced
/// word of each w through the monoid product.
fn corner_table(r: usize, kind: ProductKind, name: String) -> Result<CentralizerTable, SchurError> {
    corner_guard(r)?;
    let perms_raw = all_permutations(r)?;
    let mut labeled: Vec<(OrbitMatrix, Permutation)> = perms_raw
        .iter()
        .map(|w| {
            let m = evaluate_t_word(&ProductKind::S0, r, &one_reduced_word(w))?
                .expect("monoid word evaluation cannot die");
            Ok((m, w.clone()))
        })
        .collect::<Result<_, SchurError>>()?;
    labeled.sort_by(|(a, _), (b, _)| a.cmp(b));
    let dim = labeled.len();
    let distinct: BTreeSet<&OrbitMatrix> = labeled.iter().map(|(m, _)| m).collect();
    if distinct.len() != dim || labeled.iter().any(|(m, _)| !m.is_permutation()) {
        return Err(SchurError::CheckFailed(
            "T_w evaluation is not a bijection onto the permutation matrices".into(),
        ));
    }

    let index_of = |m: &OrbitMatrix| -> usize {
        labeled
            .binary_search_by(|(k, _)| k.cmp(m))
            .expect("product of corner elements stays in the corner")
    };
    let mut entries = Vec::new();
    for (a, (ma, _)) in labeled.iter().enumerate() {
        for (b, (mb, _)) in labeled.iter().enumerate() {
            if let Some(m) = multiply_matrices(&kind, ma, mb)? {
                entries.push((a, b, SparseVector::unit(index_of(&m))));
            }
        }
    }
    let unit = SparseVector::unit(index_of(&OrbitMatrix::identity(r)));
    let basis: Vec<BasisLabel> = labeled.iter().map(|(m, _)| BasisLabel::Matrix(m.clone())).collect();
    let perms: Vec<Permutation> = labeled.into_iter().map(|(_, w)| w).collect();
    let table = StructureTable::from_parts(name, r, r as u32, kind, basis, entries, unit);
    Ok(CentralizerTable { table, perms })
}

/// The 0-Hecke algebra as the monoid-product corner at k_α: basis {T_w},
/// dimension r!. Asserts the defining relations and the product law
/// T_i T_w = T_{s_i w} when the length goes up, T_w otherwise.
pub fn hecke0_build(r: usize) -> Result<CentralizerTable, SchurError> {
    let corner = corner_table(r, ProductKind::S0, format!("H0({r})"))?;
    let fact: usize = (1..=r).product();
    if corner.table.dim() != fact {
        return Err(SchurError::CheckFailed(format!(
            "0-Hecke corner has dimension {}, expected {r}! = {fact}",
            corner.table.dim()
        )));
    }
    let gens: Vec<OrbitMatrix> = (1..r).map(|i| corner_generator(r, i)).collect::<Result<_, _>>()?;

    // T_i^2 = T_i, distant commutation, braid.
    for (iu, u) in gens.iter().enumerate() {
        let uu = multiply_matrices(&ProductKind::S0, u, u)?;
        if uu.as_ref() != Some(u) {
            return Err(SchurError::CheckFailed(format!("T_{}^2 != T_{}", iu + 1, iu + 1)));
        }
        for (iv, v) in gens.iter().enumerate() {
            if iu.abs_diff(iv) > 1 {
                let uv = multiply_matrices(&ProductKind::S0, u, v)?;
                let vu = multiply_matrices(&ProductKind::S0, v, u)?;
                if uv != vu {
                    return Err(SchurError::CheckFailed("distant T_i fail to commute".into()));
                }
            }
            if iv == iu + 1 {
                let uvu = chain_s0(&[u, v, u])?;
                let vuv = chain_s0(&[v, u, v])?;
                if uvu != vuv {
                    return Err(SchurError::CheckFailed("braid relation fails in H0".into()));
                }
            }
        }
    }

    // Well-definedness: every reduced word of w evaluates to the same matrix.
    if r <= 4 {
        for (idx, w) in corner.perms.iter().enumerate() {
            let expected = corner.table.basis_matrix(idx).expect("matrix basis");
            for word in reduced_words(w)? {
                let m = evaluate_t_word(&ProductKind::S0, r, &word)?;
                if m.as_ref() != Some(expected) {
                    return Err(SchurError::CheckFailed(format!("T_{w} depends on the reduced word")));
                }
            }
        }
    }

    // T_i T_w against the length oracle.
    for (i, gen) in gens.iter().enumerate() {
        let s_i = Permutation::transposition(r, i + 1);
        for (idx, w) in corner.perms.iter().enumerate() {
            let m_w = corner.table.basis_matrix(idx).expect("matrix basis");
            let got = multiply_matrices(&ProductKind::S0, gen, m_w)?;
            let target = if s_i.compose(w).length() == w.length() + 1 {
                s_i.compose(w)
            } else {
                w.clone()
            };
            let expect_idx = corner.index_of_perm(&target).expect("all of S_r is labeled");
            if got.as_ref() != corner.table.basis_matrix(expect_idx) {
                return Err(SchurError::CheckFailed(format!(
                    "0-Hecke product law fails at T_{} T_{w}",
                    i + 1
                )));
            }
        }
    }
    Ok(corner)
}

fn chain_s0(ms: &[&OrbitMatrix]) -> Result<Option<OrbitMatrix>, SchurError> {
    let mut cur: Option<OrbitMatrix> = None;
    for m in ms.iter().rev() {
        cur = match cur {
            None => Some((*m).clone()),
            Some(c) => multiply_matrices(&ProductKind::S0, m, &c)?,
        };
    }
    Ok(cur)
}

fn chain_star(ms: &[&OrbitMatrix]) -> Result<Option<OrbitMatrix>, SchurError> {
    let mut cur: Option<OrbitMatrix> = None;
    for m in ms.iter().rev() {
        cur = match cur {
            None => Some((*m).clone()),
            Some(c) => match multiply_matrices(&ProductKind::Star, m, &c)? {
                Some(next) => Some(next),
                None => return Ok(None),
            },
        };
    }
    Ok(cur)
}

/// The graded corner at k_α: same permutation-matrix basis, graded product.
/// Asserts T_i² = 0, the braid and commutation relations, and the nil-Hecke
/// product law on the graded images T_w (evaluated through the graded
/// product, where T_w itself may vanish): T_{w1} T_{w2} = T_{w1 w2} when
/// lengths add and 0 otherwise. On bare basis matrices survival is governed
/// by the degree bookkeeping, not by Coxeter lengths; what lengths do
/// characterize is whether a surviving product lands on the composed
/// permutation.
pub fn nilhecke_graded_build(r: usize) -> Result<CentralizerTable, SchurError> {
    let corner = corner_table(r, ProductKind::Star, format!("grH0({r})"))?;
    let gens: Vec<OrbitMatrix> = (1..r).map(|i| corner_generator(r, i)).collect::<Result<_, _>>()?;

    for (iu, u) in gens.iter().enumerate() {
        if multiply_matrices(&ProductKind::Star, u, u)?.is_some() {
            return Err(SchurError::CheckFailed(format!("T_{}^2 != 0 in the graded corner", iu + 1)));
        }
        for (iv, v) in gens.iter().enumerate() {
            if iu.abs_diff(iv) > 1 {
                let uv = multiply_matrices(&ProductKind::Star, u, v)?;
                let vu = multiply_matrices(&ProductKind::Star, v, u)?;
                if uv != vu {
                    return Err(SchurError::CheckFailed("distant T_i fail to commute".into()));
                }
            }
            if iv == iu + 1 {
                if chain_star(&[u, v, u])? != chain_star(&[v, u, v])? {
                    return Err(SchurError::CheckFailed("braid relation fails in the graded corner".into()));
                }
            }
        }
    }

    // Graded images: T_w is word-independent (possibly zero).
    let mut graded: BTreeMap<Permutation, Option<OrbitMatrix>> = BTreeMap::new();
    for w in all_permutations(r)? {
        let value = evaluate_t_word(&ProductKind::Star, r, &one_reduced_word(&w))?;
        if r <= 4 {
            for word in reduced_words(&w)? {
                if evaluate_t_word(&ProductKind::Star, r, &word)? != value {
                    return Err(SchurError::CheckFailed(format!(
                        "graded T_{w} depends on the reduced word"
                    )));
                }
            }
        }
        graded.insert(w, value);
    }

    // Nil-Hecke law on graded images.
    for (w1, t1) in &graded {
        for (w2, t2) in &graded {
            let got = match (t1, t2) {
                (Some(a), Some(b)) => multiply_matrices(&ProductKind::Star, a, b)?,
                _ => None,
            };
            let lengths_add = w1.compose(w2).length() == w1.length() + w2.length();
            let expect = if lengths_add {
                graded[&w1.compose(w2)].clone()
            } else {
                None
            };
            if got != expect {
                return Err(SchurError::CheckFailed(format!(
                    "nil-Hecke product law fails at T_{w1} T_{w2}"
                )));
            }
        }
    }

    // Basis-level direction: a surviving product equals the composed
    // permutation exactly when Coxeter lengths add.
    for (a, wa) in corner.perms.iter().enumerate() {
        for (b, wb) in corner.perms.iter().enumerate() {
            if let Some(p) = corner.table.product(a, b) {
                let k = p.as_unit().expect("corner products are single basis elements");
                let composed = wa.compose(wb);
                let lengths_add = composed.length() == wa.length() + wb.length();
                if (corner.perms[k] == composed) != lengths_add {
                    return Err(SchurError::CheckFailed(format!(
                        "surviving product T_{wa} T_{wb} contradicts the length criterion"
                    )));
                }
            }
        }
    }
    Ok(corner)
}

fn catalan(r: usize) -> usize {
    // C(2r, r) / (r + 1), exact in u128 for the supported range.
    let mut binom: u128 = 1;
    for k in 0..r {
        binom = binom * (2 * r - k) as u128 / (k + 1) as u128;
    }
    (binom / (r as u128 + 1)) as usize
}

/// The subalgebra of the graded corner generated by the x_i: basis built by
/// closing {k_α} under left multiplication by generators, dimension the r-th
/// Catalan number. Asserts the nil-Temperley-Lieb relations.
pub fn ntl_build(r: usize) -> Result<StructureTable, SchurError> {
    if r == 0 || r > MAX_NTL_DEGREE {
        return Err(SchurError::SizeGuard(format!(
            "nil-Temperley-Lieb construction supports 1 <= r <= {MAX_NTL_DEGREE}, got {r}"
        )));
    }
    let gens: Vec<OrbitMatrix> = (1..r).map(|i| corner_generator(r, i)).collect::<Result<_, _>>()?;

    // x_i^2 = 0, distant commutation, x_i x_{i±1} x_i = 0.
    for (iu, u) in gens.iter().enumerate() {
        if multiply_matrices(&ProductKind::Star, u, u)?.is_some() {
            return Err(SchurError::CheckFailed(format!("x_{}^2 != 0", iu + 1)));
        }
        for (iv, v) in gens.iter().enumerate() {
            if iu.abs_diff(iv) > 1 {
                if multiply_matrices(&ProductKind::Star, u, v)?
                    != multiply_matrices(&ProductKind::Star, v, u)?
                {
                    return Err(SchurError::CheckFailed("distant x_i fail to commute".into()));
                }
            }
            if iu.abs_diff(iv) == 1 && chain_star(&[u, v, u])?.is_some() {
                return Err(SchurError::CheckFailed(format!(
                    "x_{} x_{} x_{} != 0",
                    iu + 1,
                    iv + 1,
                    iu + 1
                )));
            }
        }
    }

    // Close {k_α} under left multiplication by the generators; every word in
    // the x_i is reached this way.
    let mut seen: BTreeSet<OrbitMatrix> = BTreeSet::new();
    let mut frontier = vec![OrbitMatrix::identity(r)];
    seen.insert(OrbitMatrix::identity(r));
    while let Some(m) = frontier.pop() {
        for g in &gens {
            if let Some(next) = multiply_matrices(&ProductKind::Star, g, &m)? {
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    let basis: Vec<OrbitMatrix> = seen.into_iter().collect();
    if basis.len() != catalan(r) {
        return Err(SchurError::CheckFailed(format!(
            "nil-Temperley-Lieb dimension {} differs from the Catalan number {}",
            basis.len(),
            catalan(r)
        )));
    }
    let index_of = |m: &OrbitMatrix| basis.binary_search(m);
    let mut entries = Vec::new();
    for (a, ma) in basis.iter().enumerate() {
        for (b, mb) in basis.iter().enumerate() {
            if let Some(m) = multiply_matrices(&ProductKind::Star, ma, mb)? {
                let k = index_of(&m).map_err(|_| {
                    SchurError::CheckFailed("monomial closure is not multiplicatively closed".into())
                })?;
                entries.push((a, b, SparseVector::unit(k)));
            }
        }
    }
    let unit = SparseVector::unit(index_of(&OrbitMatrix::identity(r)).expect("identity is a monomial"));
    Ok(StructureTable::from_parts(
        format!("NTL({r})"),
        r,
        r as u32,
        ProductKind::Star,
        basis.into_iter().map(BasisLabel::Matrix).collect(),
        entries,
        unit,
    ))
}

/// Peak entries of a nil-Temperley-Lieb basis matrix: below-diagonal
/// positions (i, j), strictly increasing in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakSet {
    peaks: Vec<(usize, usize)>,
}

impl PeakSet {
    pub fn empty() -> Self {
        PeakSet { peaks: Vec::new() }
    }

    /// Validates j < i within each peak and strict interleaving monotonicity.
    pub fn new(mut peaks: Vec<(usize, usize)>) -> Result<Self, SchurError> {
        peaks.sort();
        for &(i, j) in &peaks {
            if j == 0 || j >= i {
                return Err(SchurError::InvalidPeaks(format!("peak ({i},{j}) needs 0 < j < i")));
            }
        }
        for win in peaks.windows(2) {
            let ((i1, j1), (i2, j2)) = (win[0], win[1]);
            if i2 <= i1 || j2 <= j1 {
                return Err(SchurError::InvalidPeaks(format!(
                    "peaks ({i1},{j1}) and ({i2},{j2}) must increase in both coordinates"
                )));
            }
        }
        Ok(PeakSet { peaks })
    }

    pub fn peaks(&self) -> &[(usize, usize)] {
        &self.peaks
    }

    pub fn len(&self) -> usize {
        self.peaks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.peaks.is_empty()
    }
}

/// The nonzero basis element x^{(1)} ... x^{(s)} k_α determined by a peak
/// set, where x^{(l)} = x_{i_l − 1} ... x_{j_l + 1} x_{j_l}.
pub fn peaks_to_element(r: usize, peaks: &PeakSet) -> Result<OrbitMatrix, SchurError> {
    if r == 0 || r > MAX_NTL_DEGREE {
        return Err(SchurError::SizeGuard(format!(
            "peak construction supports 1 <= r <= {MAX_NTL_DEGREE}, got {r}"
        )));
    }
    if let Some(&(i, _)) = peaks.peaks().last() {
        if i > r {
            return Err(SchurError::InvalidPeaks(format!("peak row {i} exceeds r = {r}")));
        }
    }
    let mut cur = OrbitMatrix::identity(r);
    for &(i, j) in peaks.peaks().iter().rev() {
        for idx in j..i {
            let gen = corner_generator(r, idx)?;
            cur = match multiply_matrices(&ProductKind::Star, &gen, &cur)? {
                Some(next) => next,
                None => {
                    return Err(SchurError::CheckFailed(format!(
                        "peak word died at x_{idx}, contradicting the construction"
                    )))
                }
            };
        }
    }
    Ok(cur)
}

/// Read the peak set off a permutation matrix: the below-diagonal nonzero
/// positions. Errors when the matrix is not a permutation matrix or the
/// peaks violate the interleaving invariants.
pub fn element_to_peaks(m: &OrbitMatrix) -> Result<PeakSet, SchurError> {
    if !m.is_permutation() {
        return Err(SchurError::NotPermutation);
    }
    let mut peaks = Vec::new();
    for i in 0..m.n() {
        for j in 0..i {
            if m.get(i, j) == 1 {
                peaks.push((i + 1, j + 1));
            }
        }
    }
    PeakSet::new(peaks)
}

/// ASCII triangle of the lower-triangular part: `1`/`.` on the diagonal,
/// `x` for a peak entry, `.` elsewhere.
pub fn peak_picture(m: &OrbitMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.n() {
        if i > 0 {
            out.push('\n');
        }
        for j in 0..=i {
            if j > 0 {
                out.push(' ');
            }
            let c = if m.get(i, j) == 0 {
                '.'
            } else if i == j {
                '1'
            } else {
                'x'
            };
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{corner_algebra, subalgebra_closure};
    use crate::table::build_table;

    fn m3(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn generators_are_adjacent_transpositions() {
        for r in 2..=4 {
            for i in 1..r {
                let x = corner_generator(r, i).unwrap();
                assert_eq!(x, Permutation::transposition(r, i).matrix());
            }
        }
    }

    #[test]
    fn hecke_two() {
        let h = hecke0_build(2).unwrap();
        assert_eq!(h.table.dim(), 2);
        let t1 = h.table.index_of_matrix(&m3("0,1;1,0")).unwrap();
        let sq = h.table.product(t1, t1).unwrap();
        assert_eq!(sq.as_unit(), Some(t1));
    }

    #[test]
    fn hecke_three_has_braid() {
        let h = hecke0_build(3).unwrap();
        assert_eq!(h.table.dim(), 6);
        // builder already asserts the braid relation; spot-check T1 T2 T1 = T2 T1 T2
        let t1 = corner_generator(3, 1).unwrap();
        let t2 = corner_generator(3, 2).unwrap();
        let left = chain_s0(&[&t1, &t2, &t1]).unwrap();
        let right = chain_s0(&[&t2, &t1, &t2]).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.unwrap(), m3("0,0,1;0,1,0;1,0,0"));
    }

    #[test]
    fn hecke_four_builds() {
        let h = hecke0_build(4).unwrap();
        assert_eq!(h.table.dim(), 24);
        assert!(h.table.check_associativity());
    }

    #[test]
    fn graded_corner_kills_squares() {
        let g = nilhecke_graded_build(2).unwrap();
        assert_eq!(g.table.dim(), 2);
        let t1 = g.table.index_of_matrix(&m3("0,1;1,0")).unwrap();
        assert!(g.table.product(t1, t1).is_none());
    }

    #[test]
    fn graded_corner_three() {
        let g = nilhecke_graded_build(3).unwrap();
        assert_eq!(g.table.dim(), 6);
        // All six permutation matrices appear, the five NTL ones plus the
        // antidiagonal.
        assert!(g.table.index_of_matrix(&m3("0,0,1;0,1,0;1,0,0")).is_some());
    }

    #[test]
    fn graded_basis_products_can_die_despite_additive_lengths() {
        // ℓ(s1 · s2 s1) = 3 = 1 + 2, yet the graded product vanishes: the
        // degree of the antidiagonal matrix is lower than the sum. This is
        // why the nil-Hecke law lives on graded images rather than on bare
        // basis matrices.
        let x1 = corner_generator(3, 1).unwrap();
        let m_s2s1 = chain_star(&[&corner_generator(3, 2).unwrap(), &x1]).unwrap().unwrap();
        assert_eq!(m_s2s1, m3("0,1,0;0,0,1;1,0,0"));
        assert!(multiply_matrices(&ProductKind::Star, &x1, &m_s2s1).unwrap().is_none());
        let w1 = Permutation::transposition(3, 1);
        let w2 = Permutation::from_matrix(&m_s2s1).unwrap();
        assert_eq!(w1.compose(&w2).length(), w1.length() + w2.length());
    }

    #[test]
    fn graded_basis_products_can_survive_without_additive_lengths() {
        // The converse failure at r = 4: crossing degrees add for this pair
        // although Coxeter lengths do not (3 + 3 vs 4), so the graded product
        // survives and lands on the Demazure product rather than the
        // composition.
        let ma = m3("0,0,1,0;0,1,0,0;1,0,0,0;0,0,0,1");
        let mb = m3("1,0,0,0;0,0,0,1;0,0,1,0;0,1,0,0");
        let out = multiply_matrices(&ProductKind::Star, &ma, &mb).unwrap().unwrap();
        assert_eq!(out, m3("0,0,0,1;0,0,1,0;1,0,0,0;0,1,0,0"));
        let (wa, wb) = (
            Permutation::from_matrix(&ma).unwrap(),
            Permutation::from_matrix(&mb).unwrap(),
        );
        assert!(wa.compose(&wb).length() < wa.length() + wb.length());
        assert_ne!(Permutation::from_matrix(&out).unwrap(), wa.compose(&wb));
    }

    #[test]
    fn ntl_dimensions() {
        assert_eq!(ntl_build(2).unwrap().dim(), 2);
        assert_eq!(ntl_build(3).unwrap().dim(), 5);
        assert_eq!(ntl_build(4).unwrap().dim(), 14);
    }

    #[test]
    fn ntl_three_basis_is_the_printed_one() {
        let t = ntl_build(3).unwrap();
        let expected = [
            "1,0,0;0,1,0;0,0,1",
            "1,0,0;0,0,1;0,1,0",
            "0,0,1;1,0,0;0,1,0",
            "0,1,0;1,0,0;0,0,1",
            "0,1,0;0,0,1;1,0,0",
        ];
        let mut want: Vec<OrbitMatrix> = expected.iter().map(|s| m3(s)).collect();
        want.sort();
        let got: Vec<OrbitMatrix> = (0..t.dim())
            .map(|i| t.basis_matrix(i).unwrap().clone())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn ntl_agrees_with_generic_subalgebra_closure() {
        // Same algebra through the generic route: corner of the full graded
        // table, then closure of the x_i.
        let full = build_table(3, 3, &ProductKind::Star).unwrap();
        let alpha = crate::composition::Composition::all_ones(3);
        let k = SparseVector::unit(full.index_of_matrix(&OrbitMatrix::diagonal(&alpha)).unwrap());
        let corner = corner_algebra(&full, &k).unwrap();
        assert_eq!(corner.dim(), 6);
        let gens: Vec<SparseVector> = (1..3)
            .map(|i| {
                let m = corner_generator(3, i).unwrap();
                SparseVector::unit(corner.index_of_matrix(&m).unwrap())
            })
            .collect();
        let sub = subalgebra_closure(&corner, &gens, corner.unit()).unwrap();
        assert_eq!(sub.dim(), 5);

        // And the monoid corner closure of the T_i recovers the whole 0-Hecke corner.
        let full_s0 = build_table(3, 3, &ProductKind::S0).unwrap();
        let k0 = SparseVector::unit(full_s0.index_of_matrix(&OrbitMatrix::diagonal(&alpha)).unwrap());
        let corner_s0 = corner_algebra(&full_s0, &k0).unwrap();
        assert_eq!(corner_s0.dim(), 6);
        let gens_s0: Vec<SparseVector> = (1..3)
            .map(|i| {
                let m = corner_generator(3, i).unwrap();
                SparseVector::unit(corner_s0.index_of_matrix(&m).unwrap())
            })
            .collect();
        let sub_s0 = subalgebra_closure(&corner_s0, &gens_s0, corner_s0.unit()).unwrap();
        assert_eq!(sub_s0.dim(), 6);
    }

    #[test]
    fn peak_example_from_two_peaks() {
        let peaks = PeakSet::new(vec![(2, 1), (3, 2)]).unwrap();
        // x^{(2)} = x_2 alone gives the first displayed matrix.
        let first = peaks_to_element(3, &PeakSet::new(vec![(3, 2)]).unwrap()).unwrap();
        assert_eq!(first, m3("1,0,0;0,0,1;0,1,0"));
        let full = peaks_to_element(3, &peaks).unwrap();
        assert_eq!(full, m3("0,0,1;1,0,0;0,1,0"));
    }

    #[test]
    fn empty_peaks_give_identity() {
        assert_eq!(peaks_to_element(4, &PeakSet::empty()).unwrap(), OrbitMatrix::identity(4));
        assert!(element_to_peaks(&OrbitMatrix::identity(4)).unwrap().is_empty());
    }

    #[test]
    fn single_peaks_are_transpositions() {
        for r in 2..=4 {
            for i in 1..r {
                let p = PeakSet::new(vec![(i + 1, i)]).unwrap();
                assert_eq!(
                    peaks_to_element(r, &p).unwrap(),
                    Permutation::transposition(r, i).matrix()
                );
            }
        }
    }

    #[test]
    fn peaks_roundtrip_over_ntl_basis() {
        let t = ntl_build(4).unwrap();
        for i in 0..t.dim() {
            let m = t.basis_matrix(i).unwrap();
            let peaks = element_to_peaks(m).unwrap();
            assert_eq!(&peaks_to_element(4, &peaks).unwrap(), m);
        }
    }

    #[test]
    fn peak_set_validation() {
        assert!(PeakSet::new(vec![(2, 2)]).is_err());
        assert!(PeakSet::new(vec![(3, 1), (4, 1)]).is_err());
        assert!(PeakSet::new(vec![(2, 1), (3, 2)]).is_ok());
        assert!(element_to_peaks(&m3("2,0;0,0")).is_err());
    }

    #[test]
    fn picture_shows_peaks() {
        let pic = peak_picture(&m3("0,0,1;1,0,0;0,1,0"));
        assert_eq!(pic, ".\nx .\n. x .");
    }
}
