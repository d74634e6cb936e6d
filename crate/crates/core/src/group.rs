//! Group elements of the reflection group: exact orthogonal matrices paired
//! with the signed permutation they induce on the positive roots, plus the
//! dihedral model for I2(m).
//!
//! All products in factorizations follow one fixed convention: `uv` acts by
//! applying `v` first, then `u`. Covering labels downstream are `u⁻¹v` under
//! this convention.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Matrix, Vector};
use crate::roots::RootSystem;

/// Canonical identity of a group element, used for equality, hashing and
/// deterministic ordering. For geometric types this is the signed
/// permutation of positive-root indices (1-based, negative for sign flips);
/// for the dihedral model it is the rotation/reflection index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKey {
    Perm(Vec<i32>),
    Rotation(usize),
    Reflection(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Geometric { matrix: Matrix, perm: Vec<i32> },
    Dihedral { m: usize, kind: DihedralKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DihedralKind {
    /// `γ^j`, the rotation by `2jπ/m`.
    Rotation(usize),
    /// The reflection whose root line sits at angle `kπ/m`.
    Reflection(usize),
}

/// An element of the reflection group. Immutable; equality is by canonical
/// key, which coincides with matrix equality because the action on roots is
/// faithful.
#[derive(Debug, Clone)]
pub struct Element {
    repr: Repr,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Element {}

fn encode(idx: usize, negated: bool) -> i32 {
    let v = (idx + 1) as i32;
    if negated {
        -v
    } else {
        v
    }
}

fn decode(v: i32) -> (usize, bool) {
    ((v.unsigned_abs() as usize) - 1, v < 0)
}

impl Element {
    /// The identity of the group carrying `rs`.
    pub fn identity(rs: &RootSystem) -> Element {
        match rs.dihedral() {
            Some(d) => Element {
                repr: Repr::Dihedral {
                    m: d.m,
                    kind: DihedralKind::Rotation(0),
                },
            },
            None => {
                let n = rs.ambient_dim();
                let perm = (0..rs.num_reflections())
                    .map(|i| encode(i, false))
                    .collect();
                Element {
                    repr: Repr::Geometric {
                        matrix: Matrix::identity(n),
                        perm,
                    },
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.repr {
            Repr::Geometric { perm, .. } => {
                perm.iter().enumerate().all(|(i, &v)| v == encode(i, false))
            }
            Repr::Dihedral { kind, .. } => matches!(kind, DihedralKind::Rotation(0)),
        }
    }

    pub fn key(&self) -> ElementKey {
        match &self.repr {
            Repr::Geometric { perm, .. } => ElementKey::Perm(perm.clone()),
            Repr::Dihedral { kind, .. } => match kind {
                DihedralKind::Rotation(j) => ElementKey::Rotation(*j),
                DihedralKind::Reflection(k) => ElementKey::Reflection(*k),
            },
        }
    }

    /// The matrix of a geometric element.
    pub fn matrix(&self) -> Option<&Matrix> {
        match &self.repr {
            Repr::Geometric { matrix, .. } => Some(matrix),
            Repr::Dihedral { .. } => None,
        }
    }

    /// Image of a positive root under the element: `(index, negated)`.
    /// Dihedral root lines carry no sign.
    pub fn apply_root(&self, i: usize) -> (usize, bool) {
        match &self.repr {
            Repr::Geometric { perm, .. } => decode(perm[i]),
            Repr::Dihedral { m, kind } => match kind {
                DihedralKind::Rotation(j) => ((i + 2 * j) % m, false),
                DihedralKind::Reflection(a) => ((2 * a + 2 * m - i) % m, false),
            },
        }
    }

    /// `self · other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Element) -> Element {
        match (&self.repr, &other.repr) {
            (
                Repr::Geometric { matrix: m1, perm: p1 },
                Repr::Geometric { matrix: m2, perm: p2 },
            ) => {
                debug_assert_eq!(p1.len(), p2.len());
                let perm = p2
                    .iter()
                    .map(|&v| {
                        let (idx, neg) = decode(v);
                        let (idx2, neg2) = decode(p1[idx]);
                        encode(idx2, neg ^ neg2)
                    })
                    .collect();
                Element {
                    repr: Repr::Geometric {
                        matrix: m1 * m2,
                        perm,
                    },
                }
            }
            (Repr::Dihedral { m, kind: k1 }, Repr::Dihedral { m: m2, kind: k2 }) => {
                debug_assert_eq!(m, m2);
                let m = *m;
                use DihedralKind::*;
                // apply-right-first composition table, indices mod m
                let kind = match (*k1, *k2) {
                    (Rotation(a), Rotation(b)) => Rotation((a + b) % m),
                    (Reflection(a), Reflection(b)) => Rotation((a + m - b) % m),
                    (Reflection(a), Rotation(b)) => Reflection((a + m - b) % m),
                    (Rotation(a), Reflection(b)) => Reflection((a + b) % m),
                };
                Element {
                    repr: Repr::Dihedral { m, kind },
                }
            }
            _ => panic!("composing elements of different groups"),
        }
    }

    pub fn inverse(&self) -> Element {
        match &self.repr {
            Repr::Geometric { matrix, perm } => {
                // orthogonal, so the inverse is the transpose
                let mut inv = vec![0i32; perm.len()];
                for (i, &v) in perm.iter().enumerate() {
                    let (idx, neg) = decode(v);
                    inv[idx] = encode(i, neg);
                }
                Element {
                    repr: Repr::Geometric {
                        matrix: matrix.transpose(),
                        perm: inv,
                    },
                }
            }
            Repr::Dihedral { m, kind } => {
                let kind = match kind {
                    DihedralKind::Rotation(j) => DihedralKind::Rotation((m - j) % m),
                    DihedralKind::Reflection(k) => DihedralKind::Reflection(*k),
                };
                Element {
                    repr: Repr::Dihedral { m: *m, kind },
                }
            }
        }
    }

    /// Multiplicative order, for sanity checks against the Coxeter number.
    pub fn order(&self, rs: &RootSystem) -> usize {
        let mut acc = self.clone();
        for n in 1..=2 * rs.coxeter_number().max(1) {
            if acc.is_identity() {
                return n;
            }
            acc = acc.compose(self);
        }
        panic!("element order exceeds 2h");
    }
}

/// The reflection `t_α` for the positive root (or dihedral index) `r`.
pub fn reflection_element(rs: &RootSystem, r: usize) -> Element {
    match rs.dihedral() {
        Some(d) => {
            assert!(r < d.m);
            Element {
                repr: Repr::Dihedral {
                    m: d.m,
                    kind: DihedralKind::Reflection(r),
                },
            }
        }
        None => {
            let alpha = rs.root(r);
            let matrix = Matrix::reflection_across(alpha);
            let perm = (0..rs.num_reflections())
                .map(|i| {
                    let image = matrix.apply(rs.root(i));
                    let (idx, neg) = rs
                        .root_lookup(&image)
                        .expect("reflection image is not a root");
                    encode(idx, neg)
                })
                .collect();
            Element {
                repr: Repr::Geometric { matrix, perm },
            }
        }
    }
}

/// Identity element; free-function spelling of [`Element::identity`].
pub fn identity(rs: &RootSystem) -> Element {
    Element::identity(rs)
}

/// Dimension of the fixed space `F(w)` inside the essential (rank-
/// dimensional) representation. For embeddings with a globally fixed
/// complement, such as type A in n coordinates, that complement is
/// subtracted.
pub fn fixed_space_dim(rs: &RootSystem, w: &Element) -> usize {
    match &w.repr {
        Repr::Geometric { matrix, .. } => {
            let ambient_fixed = matrix.minus_identity().kernel_dim();
            ambient_fixed - (rs.ambient_dim() - rs.rank())
        }
        Repr::Dihedral { kind, .. } => match kind {
            DihedralKind::Rotation(0) => 2,
            DihedralKind::Rotation(_) => 0,
            DihedralKind::Reflection(_) => 1,
        },
    }
}

/// Reflection length `l_T(w) = ℓ − dim F(w)`.
pub fn reflection_length(rs: &RootSystem, w: &Element) -> usize {
    rs.rank() - fixed_space_dim(rs, w)
}

/// Absolute order: `u ⪯ v` iff `l_T(u) + l_T(u⁻¹v) = l_T(v)`.
pub fn absolute_le(rs: &RootSystem, u: &Element, v: &Element) -> bool {
    let quot = u.inverse().compose(v);
    reflection_length(rs, u) + reflection_length(rs, &quot) == reflection_length(rs, v)
}

/// `t_α ⪯ w` via the fixed-space criterion `F(w) ⊆ H_α`.
pub fn reflection_below(rs: &RootSystem, r: usize, w: &Element) -> bool {
    match &w.repr {
        Repr::Geometric { matrix, .. } => {
            let alpha = rs.root(r);
            matrix
                .minus_identity()
                .kernel_basis()
                .iter()
                .all(|b| b.inner(alpha).is_zero())
        }
        Repr::Dihedral { kind, .. } => match kind {
            DihedralKind::Rotation(0) => false,
            DihedralKind::Rotation(_) => true,
            DihedralKind::Reflection(k) => *k == r,
        },
    }
}

/// Product of the simple reflections in the given order (a permutation of
/// positions into the simple system).
pub fn coxeter_element(rs: &RootSystem, order: &[usize]) -> Element {
    let simples = rs.simple_indices();
    assert_eq!(order.len(), simples.len(), "order must cover Δ");
    let mut seen = vec![false; simples.len()];
    for &p in order {
        assert!(!seen[p], "order must be a permutation of Δ");
        seen[p] = true;
    }
    let mut acc = Element::identity(rs);
    for &p in order {
        acc = acc.compose(&reflection_element(rs, simples[p]));
    }
    acc
}

/// The bipartite Coxeter element: both blocks of the 2-coloring multiplied
/// in block order.
pub fn bipartite_coxeter_element(rs: &RootSystem) -> Element {
    let (b1, b2) = rs.bipartition();
    let mut acc = Element::identity(rs);
    for &r in b1.iter().chain(b2) {
        acc = acc.compose(&reflection_element(rs, r));
    }
    acc
}

/// Index of the reflection `s t s` given the element of `s`; conjugation
/// maps the root of `t` by `s`.
pub fn conjugate_reflection(s: &Element, t: usize) -> usize {
    s.apply_root(t).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use crate::roots::{build_root_system, CoxeterType};

    fn rs(name: &str) -> RootSystem {
        build_root_system(name.parse().unwrap())
    }

    fn root_of(sys: &RootSystem, coords: &[i64]) -> usize {
        sys.root_lookup(&Vector::from_ints(coords)).unwrap().0
    }

    #[test]
    fn reflection_matrices_match_the_standard_formula() {
        let a2 = rs("A2");
        let t12 = reflection_element(&a2, root_of(&a2, &[1, -1, 0]));
        let m = t12.matrix().unwrap();
        // transposition of coordinates 1, 2
        assert_eq!(m.apply(&Vector::unit(3, 0)), Vector::unit(3, 1));
        assert_eq!(m.apply(&Vector::unit(3, 2)), Vector::unit(3, 2));

        let b3 = rs("B3");
        let te1 = reflection_element(&b3, root_of(&b3, &[1, 0, 0]));
        assert_eq!(
            te1.matrix().unwrap().apply(&Vector::unit(3, 0)),
            -&Vector::unit(3, 0)
        );

        for r in 0..b3.num_reflections() {
            let t = reflection_element(&b3, r);
            assert!(t.compose(&t).is_identity());
            let m = t.matrix().unwrap();
            assert!((&m.transpose() * m).is_identity());
        }
    }

    #[test]
    fn composition_convention_in_the_dihedral_model() {
        let i25 = rs("I2:5");
        let t1 = reflection_element(&i25, 0);
        let t5 = reflection_element(&i25, 4);
        let gamma = t1.compose(&t5);
        // γ = t_1 t_m = t_2 t_1 = … = t_m t_{m−1}
        for k in 1..5 {
            let a = reflection_element(&i25, k);
            let b = reflection_element(&i25, k - 1);
            assert_eq!(a.compose(&b), gamma);
        }
        assert_eq!(gamma.order(&i25), 5);
        let u = reflection_element(&i25, 2);
        assert_eq!(u.compose(&Element::identity(&i25)), u);
    }

    #[test]
    fn fixed_space_and_length() {
        for name in ["A2", "A3", "B3", "D4", "H3", "I2:7"] {
            let sys = rs(name);
            let ell = sys.rank();
            assert_eq!(fixed_space_dim(&sys, &Element::identity(&sys)), ell);
            assert_eq!(reflection_length(&sys, &Element::identity(&sys)), 0);
            let t = reflection_element(&sys, 0);
            assert_eq!(fixed_space_dim(&sys, &t), ell - 1);
            assert_eq!(reflection_length(&sys, &t), 1);
            let gamma = bipartite_coxeter_element(&sys);
            assert_eq!(fixed_space_dim(&sys, &gamma), 0);
            assert_eq!(reflection_length(&sys, &gamma), ell);
            assert_eq!(gamma.order(&sys), sys.coxeter_number());
        }
    }

    #[test]
    fn coxeter_elements_have_order_h() {
        let a2 = rs("A2");
        let c = coxeter_element(&a2, &[0, 1]);
        assert_eq!(c.order(&a2), 3);
        let b2 = rs("B2");
        assert_eq!(bipartite_coxeter_element(&b2).order(&b2), 4);
        let f4 = rs("F4");
        assert_eq!(coxeter_element(&f4, &[3, 1, 0, 2]).order(&f4), 12);
    }

    #[test]
    fn absolute_order_basics() {
        let b3 = rs("B3");
        let gamma = bipartite_coxeter_element(&b3);
        let id = Element::identity(&b3);
        assert!(absolute_le(&b3, &id, &gamma));
        for r in 0..b3.num_reflections() {
            let t = reflection_element(&b3, r);
            assert!(absolute_le(&b3, &t, &gamma));
            assert!(!absolute_le(&b3, &gamma, &t));
            // the two membership criteria agree
            assert!(reflection_below(&b3, r, &gamma));
            assert!(reflection_below(&b3, r, &t));
        }
    }

    #[test]
    fn reflection_below_uses_the_fixed_hyperplane() {
        let a3 = rs("A3");
        let t12 = root_of(&a3, &[1, -1, 0, 0]);
        let t34 = root_of(&a3, &[0, 0, 1, -1]);
        let w = reflection_element(&a3, t34);
        assert!(!reflection_below(&a3, t12, &w));
        // exhaustive agreement with the length criterion over pairs
        for r in 0..a3.num_reflections() {
            for s in 0..a3.num_reflections() {
                let w = reflection_element(&a3, s);
                let t = reflection_element(&a3, r);
                assert_eq!(
                    reflection_below(&a3, r, &w),
                    absolute_le(&a3, &t, &w),
                    "criteria disagree at ({r}, {s})"
                );
            }
        }
    }

    #[test]
    fn conjugation_closure() {
        for name in ["A3", "B3", "H3", "I2:6"] {
            let sys = rs(name);
            let n = sys.num_reflections();
            for s in 0..n {
                let s_el = reflection_element(&sys, s);
                for t in 0..n {
                    let c = conjugate_reflection(&s_el, t);
                    assert!(c < n);
                    // s t s as an element equals the reflection at the image root
                    let t_el = reflection_element(&sys, t);
                    let sts = s_el.compose(&t_el).compose(&s_el);
                    assert_eq!(sts, reflection_element(&sys, c));
                }
            }
        }
    }

    #[test]
    fn keys_are_faithful() {
        let b2 = rs("B2");
        let mut seen = alloc::collections::BTreeSet::new();
        // all 8 elements of W(B2) via products of reflections
        let mut frontier = vec![Element::identity(&b2)];
        while let Some(e) = frontier.pop() {
            if !seen.insert(e.key()) {
                continue;
            }
            for r in 0..4 {
                frontier.push(e.compose(&reflection_element(&b2, r)));
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn type_a_length_matches_cycle_structure() {
        // l_T of a permutation is n minus its number of cycles; the ambient
        // fixed line is discounted by the essential-rank adjustment
        let a3 = rs("A3");
        let gamma = coxeter_element(&a3, &[0, 1, 2]);
        assert_eq!(reflection_length(&a3, &gamma), 3); // 4-cycle
        let t = reflection_element(&a3, root_of(&a3, &[1, -1, 0, 0]));
        let u = reflection_element(&a3, root_of(&a3, &[0, 0, 1, -1]));
        assert_eq!(reflection_length(&a3, &t.compose(&u)), 2); // (12)(34)
        let _ = CoxeterType::a(3).unwrap();
        let _ = Scalar::one();
    }
}
