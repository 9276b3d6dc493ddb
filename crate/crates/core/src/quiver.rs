//! The quiver whose vertices are compositions and whose arrows are the
//! generator moves between adjacent vertices.

use crate::composition::{enumerate_compositions, Composition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    E,
    F,
}

/// One arrow: an E-arrow (i, λ) goes λ → λ + α_i and exists iff λ_{i+1} > 0;
/// the opposite F-arrow (i, λ + α_i) goes back down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub i: usize,
    pub source: Composition,
    pub target: Composition,
}

#[derive(Debug, Clone)]
pub struct Quiver {
    pub n: usize,
    pub r: u32,
    pub vertices: Vec<Composition>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn has_e_arrow(&self, i: usize, source: &Composition) -> bool {
        i >= 1 && i < self.n && source.part(i) > 0
    }

    pub fn has_f_arrow(&self, i: usize, source: &Composition) -> bool {
        i >= 1 && i < self.n && source.part(i - 1) > 0
    }
}

/// Vertices are all of Λ(n,r); arrows come in opposite pairs, one pair for
/// every vertex λ and index i with λ_{i+1} > 0.
pub fn build_quiver(n: usize, r: u32) -> Quiver {
    let vertices = enumerate_compositions(n, r);
    let mut arrows = Vec::new();
    for lam in &vertices {
        for i in 1..n {
            if let Some(up) = lam.add_alpha(i) {
                arrows.push(Arrow {
                    kind: ArrowKind::E,
                    i,
                    source: lam.clone(),
                    target: up.clone(),
                });
                arrows.push(Arrow {
                    kind: ArrowKind::F,
                    i,
                    source: up,
                    target: lam.clone(),
                });
            }
        }
    }
    Quiver { n, r, vertices, arrows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::enumerate_basis;
    use crate::product::{left_apply_e, left_apply_f};

    #[test]
    fn two_by_two_quiver() {
        let q = build_quiver(2, 2);
        assert_eq!(q.vertices.len(), 3);
        assert_eq!(q.arrows.len(), 4);
        let e_arrows = q.arrows.iter().filter(|a| a.kind == ArrowKind::E).count();
        assert_eq!(e_arrows, 2);
    }

    #[test]
    fn vertex_counts() {
        // C(n + r − 1, r) vertices; the (3,5) quiver has 21.
        assert_eq!(build_quiver(3, 5).vertices.len(), 21);
        let q = build_quiver(1, 3);
        assert_eq!(q.vertices.len(), 1);
        assert!(q.arrows.is_empty());
    }

    #[test]
    fn arrow_existence_matches_rule_zero_cases() {
        let q = build_quiver(3, 3);
        for a in enumerate_basis(3, 3).unwrap() {
            let lam = a.ro();
            for i in 1..3 {
                let e_alive = !left_apply_e(i, &a).unwrap().is_zero();
                assert_eq!(q.has_e_arrow(i, &lam), e_alive, "e{i} at {lam}");
                let f_alive = !left_apply_f(i, &a).unwrap().is_zero();
                assert_eq!(q.has_f_arrow(i, &lam), f_alive, "f{i} at {lam}");
            }
        }
    }
}
