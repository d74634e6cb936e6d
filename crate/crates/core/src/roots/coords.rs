//! Root coordinate tables: the full (positive and negative) root list for
//! each geometric family, in the coordinates the classical descriptions use.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Scalar, Vector};

fn e(dim: usize, i: usize) -> Vector {
    Vector::unit(dim, i)
}

fn with_negatives(mut roots: Vec<Vector>) -> Vec<Vector> {
    let negs: Vec<Vector> = roots.iter().map(|r| -r).collect();
    roots.extend(negs);
    roots
}

/// Type A of rank `n`: `e_i − e_j` in ambient dimension `n + 1`.
pub fn type_a(rank: usize) -> Vec<Vector> {
    let dim = rank + 1;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                roots.push(&e(dim, i) - &e(dim, j));
            }
        }
    }
    roots
}

/// Type B of rank `n`: `±e_i` and `±e_i ± e_j`.
pub fn type_b(rank: usize) -> Vec<Vector> {
    let mut roots = Vec::new();
    for i in 0..rank {
        roots.push(e(rank, i));
        for j in i + 1..rank {
            roots.push(&e(rank, i) - &e(rank, j));
            roots.push(&e(rank, i) + &e(rank, j));
        }
    }
    with_negatives(roots)
}

/// Type D of rank `n`: `±e_i ± e_j`.
pub fn type_d(rank: usize) -> Vec<Vector> {
    let mut roots = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            roots.push(&e(rank, i) - &e(rank, j));
            roots.push(&e(rank, i) + &e(rank, j));
        }
    }
    with_negatives(roots)
}

/// F4: `±e_i`, `±e_i ± e_j` and all half-sums `(±e1 ±e2 ±e3 ±e4)/2`.
pub fn f4() -> Vec<Vector> {
    let mut roots = type_b(4);
    let half = Scalar::from_fraction(1, 2);
    for mask in 0..16u32 {
        let coords = (0..4)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        roots.push(Vector::new(coords));
    }
    roots
}

/// G2 in the three-dimensional integer model: `e_i − e_j` together with
/// `±(2e_i − e_j − e_k)`. The rank-2 span is the plane of coordinate sum 0.
pub fn g2() -> Vec<Vector> {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(&e(3, i) - &e(3, j));
            }
        }
    }
    for i in 0..3 {
        let mut coords = [-1i64; 3];
        coords[i] = 2;
        let v = Vector::from_ints(&coords);
        roots.push(-&v);
        roots.push(v);
    }
    roots
}

/// E8 in the even coordinate system: `±e_i ± e_j` plus all half-integer
/// vectors `(±1, …, ±1)/2` with an even number of minus signs.
pub fn e8() -> Vec<Vector> {
    let mut roots = type_d(8);
    let half = Scalar::from_fraction(1, 2);
    for mask in 0..256u32 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let coords = (0..8)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        roots.push(Vector::new(coords));
    }
    roots
}

fn perm_parity(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Vectors obtained from `template` by the given coordinate arrangements and
/// all sign patterns on the nonzero entries.
fn signed_arrangements(template: &[Scalar], perms: &[Vec<usize>]) -> Vec<Vector> {
    let n = template.len();
    let nonzero: Vec<usize> = (0..n).filter(|&i| !template[i].is_zero()).collect();
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << nonzero.len()) {
            let mut coords = vec![Scalar::zero(); n];
            for (slot, &src) in p.iter().enumerate() {
                coords[slot] = template[src].clone();
            }
            // apply signs to the arranged vector
            let mut v: Vec<Scalar> = coords;
            let mut bit = 0;
            for c in v.iter_mut() {
                if !c.is_zero() {
                    if mask & (1 << bit) != 0 {
                        *c = -&*c;
                    }
                    bit += 1;
                }
            }
            out.push(Vector::new(v));
        }
    }
    out
}

/// H4 as the vertex set of the 600-cell, scaled to squared length 4:
/// permutations of `(±2, 0, 0, 0)`, all `(±1, ±1, ±1, ±1)`, and even
/// coordinate arrangements of `(±τ, ±1, ±1/τ, 0)`.
pub fn h4() -> Vec<Vector> {
    let mut roots = Vec::new();
    for i in 0..4 {
        let v = e(4, i).scale(&Scalar::from_int(2));
        roots.push(-&v);
        roots.push(v);
    }
    for mask in 0..16u32 {
        let coords = (0..4)
            .map(|i| Scalar::from_int(if mask & (1 << i) != 0 { -1 } else { 1 }))
            .collect();
        roots.push(Vector::new(coords));
    }
    let template = [
        Scalar::golden(),
        Scalar::one(),
        Scalar::golden_inverse(),
        Scalar::zero(),
    ];
    let even: Vec<Vec<usize>> = permutations(4).into_iter().filter(|p| perm_parity(p)).collect();
    roots.extend(signed_arrangements(&template, &even));
    roots
}

/// H3: the icosahedral system, `±2e_i` plus cyclic arrangements of
/// `(±τ, ±1, ±1/τ)`. This is the slice of [`h4`] by the last coordinate.
pub fn h3() -> Vec<Vector> {
    let mut roots = Vec::new();
    for i in 0..3 {
        let v = e(3, i).scale(&Scalar::from_int(2));
        roots.push(-&v);
        roots.push(v);
    }
    let template = [Scalar::golden(), Scalar::one(), Scalar::golden_inverse()];
    let cyclic = vec![vec![0usize, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
    roots.extend(signed_arrangements(&template, &cyclic));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn assert_root_set(roots: &[Vector], expected: usize) {
        assert_eq!(roots.len(), expected);
        let set: BTreeSet<&Vector> = roots.iter().collect();
        assert_eq!(set.len(), expected, "duplicate roots");
        for r in roots {
            assert!(set.contains(&-r), "not closed under negation: {r}");
        }
    }

    #[test]
    fn root_counts() {
        assert_root_set(&type_a(2), 6);
        assert_root_set(&type_a(3), 12);
        assert_root_set(&type_b(3), 18);
        assert_root_set(&type_d(4), 24);
        assert_root_set(&f4(), 48);
        assert_root_set(&g2(), 12);
        assert_root_set(&e8(), 240);
        assert_root_set(&h3(), 30);
        assert_root_set(&h4(), 120);
    }

    #[test]
    fn h_families_have_equal_norms() {
        for r in h4() {
            assert_eq!(r.norm_sq(), Scalar::from_int(4));
        }
        for r in h3() {
            assert_eq!(r.norm_sq(), Scalar::from_int(4));
        }
    }
}
