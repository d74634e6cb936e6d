//! The noncrossing partition lattice `NC_W(γ)`: the interval `[1, γ]` in
//! absolute order, with the natural edge labeling `λ(u, v) = u⁻¹v`.
//!
//! Elements are discovered by downward search from `γ`: `u = v·t` joins the
//! poset when its reflection length drops by exactly one, which makes
//! membership `u ⪯ γ` hold by construction. Indexing is deterministic:
//! elements are sorted by `(rank, canonical key)`, so exports are stable
//! across runs.

mod bitset;

pub use bitset::BitSet;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{reflection_element, reflection_length, Element, ElementKey};
use crate::roots::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    /// The chosen top is not of full reflection length.
    NotFullLength { length: usize, rank: usize },
    /// Interval endpoints are incomparable.
    Incomparable { lo: usize, hi: usize },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::NotFullLength { length, rank } => write!(
                f,
                "top element has reflection length {length}, expected the full rank {rank}"
            ),
            PosetError::Incomparable { lo, hi } => {
                write!(f, "elements {lo} and {hi} are incomparable")
            }
        }
    }
}

impl core::error::Error for PosetError {}

/// A cover relation `lo ⋖ hi` labeled by the reflection `lo⁻¹·hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cover {
    pub lo: usize,
    pub hi: usize,
    pub label: usize,
}

/// An unrefinable chain: element indices plus the label sequence `λ(c)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    pub elements: Vec<usize>,
    pub labels: Vec<usize>,
}

/// A closed interval `[bottom, top]` of the poset, materialized as its
/// member set.
#[derive(Debug, Clone)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
    /// Members in ascending index order (a linear extension).
    pub members: Vec<usize>,
    set: BitSet,
    pub length: usize,
}

impl Interval {
    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_singleton(&self) -> bool {
        self.bottom == self.top
    }
}

/// The graded interval `[1, γ]` with labeled covers and the materialized
/// order relation. Immutable after build.
pub struct NcPoset {
    rs: Arc<RootSystem>,
    reflections: Vec<Element>,
    elements: Vec<Element>,
    key_index: BTreeMap<ElementKey, usize>,
    rank_of: Vec<usize>,
    covers: Vec<Cover>,
    cover_label: BTreeMap<(usize, usize), usize>,
    /// Up-edges per element as `(hi, label)`, sorted by label index.
    up: Vec<Vec<(usize, usize)>>,
    down: Vec<Vec<(usize, usize)>>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
    bottom: usize,
    top: usize,
}

impl NcPoset {
    /// Builds `[1, γ]` by downward BFS from `γ`.
    pub fn build(rs: &Arc<RootSystem>, gamma: &Element) -> Result<NcPoset, PosetError> {
        let ell = rs.rank();
        let n_refl = rs.num_reflections();
        let reflections: Vec<Element> = (0..n_refl).map(|r| reflection_element(rs, r)).collect();

        let gamma_len = reflection_length(rs, gamma);
        if gamma_len != ell {
            return Err(PosetError::NotFullLength {
                length: gamma_len,
                rank: ell,
            });
        }

        let mut store: Vec<Element> = vec![gamma.clone()];
        let mut ranks: Vec<usize> = vec![ell];
        let mut index: BTreeMap<ElementKey, usize> = BTreeMap::new();
        index.insert(gamma.key(), 0);
        let mut length_memo: BTreeMap<ElementKey, usize> = BTreeMap::new();
        let mut covers_raw: Vec<(usize, usize, usize)> = Vec::new();

        let mut frontier: Vec<usize> = vec![0];
        for r in (1..=ell).rev() {
            let mut next = Vec::new();
            for &v_idx in &frontier {
                let v = store[v_idx].clone();
                for (t, t_el) in reflections.iter().enumerate() {
                    let u = v.compose(t_el);
                    let key = u.key();
                    let len = *length_memo
                        .entry(key.clone())
                        .or_insert_with(|| reflection_length(rs, &u));
                    if len != r - 1 {
                        continue;
                    }
                    let u_idx = match index.get(&key) {
                        Some(&i) => i,
                        None => {
                            let i = store.len();
                            store.push(u);
                            ranks.push(r - 1);
                            index.insert(key, i);
                            next.push(i);
                            i
                        }
                    };
                    covers_raw.push((u_idx, v_idx, t));
                }
            }
            frontier = next;
        }
        assert_eq!(frontier.len(), 1, "unique bottom element");
        assert!(store[frontier[0]].is_identity(), "bottom is the identity");

        // deterministic indexing by (rank, canonical key)
        let mut order: Vec<usize> = (0..store.len()).collect();
        order.sort_by_key(|&i| (ranks[i], store[i].key()));
        let mut remap = vec![0usize; store.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let mut elements: Vec<Element> = vec![Element::identity(rs); store.len()];
        let mut rank_of = vec![0usize; store.len()];
        for (old, el) in store.into_iter().enumerate() {
            rank_of[remap[old]] = ranks[old];
            elements[remap[old]] = el;
        }
        let key_index: BTreeMap<ElementKey, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key(), i))
            .collect();

        let mut covers: Vec<Cover> = covers_raw
            .into_iter()
            .map(|(lo, hi, label)| Cover {
                lo: remap[lo],
                hi: remap[hi],
                label,
            })
            .collect();
        covers.sort_by_key(|c| (c.lo, c.hi));
        covers.dedup();

        let n = elements.len();
        let mut up: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut down: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut cover_label = BTreeMap::new();
        for c in &covers {
            up[c.lo].push((c.hi, c.label));
            down[c.hi].push((c.lo, c.label));
            cover_label.insert((c.lo, c.hi), c.label);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_by_key(|&(_, label)| label);
        }

        // reachability by rank sweep; index order is a linear extension
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            below[i].insert(i);
            let lows: Vec<usize> = down[i].iter().map(|&(lo, _)| lo).collect();
            for lo in lows {
                let (a, b) = below.split_at_mut(i);
                b[0].union_with(&a[lo]);
            }
        }
        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in (0..n).rev() {
            above[i].insert(i);
            let his: Vec<usize> = up[i].iter().map(|&(hi, _)| hi).collect();
            for hi in his {
                let (a, b) = above.split_at_mut(hi);
                a[i].union_with(&b[0]);
            }
        }

        let bottom = 0;
        let top = n - 1;
        debug_assert_eq!(rank_of[bottom], 0);
        debug_assert_eq!(rank_of[top], ell);

        Ok(NcPoset {
            rs: Arc::clone(rs),
            reflections,
            elements,
            key_index,
            rank_of,
            covers,
            cover_label,
            up,
            down,
            below,
            above,
            bottom,
            top,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn num_elements(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank_of[self.top]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank_of[i]
    }

    pub fn index_of_key(&self, key: &ElementKey) -> Option<usize> {
        self.key_index.get(key).copied()
    }

    /// The reflection `t_r` as a group element.
    pub fn reflection(&self, r: usize) -> &Element {
        &self.reflections[r]
    }

    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn up_edges(&self, x: usize) -> &[(usize, usize)] {
        &self.up[x]
    }

    pub fn down_edges(&self, x: usize) -> &[(usize, usize)] {
        &self.down[x]
    }

    pub fn cover_label(&self, lo: usize, hi: usize) -> Option<usize> {
        self.cover_label.get(&(lo, hi)).copied()
    }

    /// `u ⪯ v` in the materialized order.
    pub fn le(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    /// The atoms together with their reflection indices.
    pub fn atoms(&self) -> Vec<(usize, usize)> {
        (0..self.num_elements())
            .filter(|&i| self.rank_of[i] == 1)
            .map(|i| {
                let r = self
                    .reflections
                    .iter()
                    .position(|t| t.key() == self.elements[i].key())
                    .expect("atom is a reflection");
                (i, r)
            })
            .collect()
    }

    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.rank() + 1];
        for &r in &self.rank_of {
            counts[r] += 1;
        }
        counts
    }

    /// Index of `u⁻¹v` when that quotient lies in the poset.
    pub fn quotient_index(&self, u: usize, v: usize) -> Option<usize> {
        let q = self.elements[u].inverse().compose(&self.elements[v]);
        self.index_of_key(&q.key())
    }

    pub fn interval(&self, u: usize, v: usize) -> Result<Interval, PosetError> {
        if !self.le(u, v) {
            return Err(PosetError::Incomparable { lo: u, hi: v });
        }
        let set = self.above[u].intersection(&self.below[v]);
        let members: Vec<usize> = set.iter().collect();
        Ok(Interval {
            bottom: u,
            top: v,
            members,
            set,
            length: self.rank_of[v] - self.rank_of[u],
        })
    }

    pub fn full_interval(&self) -> Interval {
        self.interval(self.bottom, self.top).expect("1 ⪯ γ")
    }

    /// Depth-first enumeration of the maximal chains of an interval, taking
    /// up-edges in label-index order. The callback borrows a scratch chain.
    pub fn visit_maximal_chains<F: FnMut(&Chain)>(&self, iv: &Interval, f: &mut F) {
        let mut chain = Chain {
            elements: vec![iv.bottom],
            labels: Vec::new(),
        };
        self.chain_dfs(iv, iv.bottom, &mut chain, f);
    }

    fn chain_dfs<F: FnMut(&Chain)>(&self, iv: &Interval, x: usize, chain: &mut Chain, f: &mut F) {
        if x == iv.top {
            f(chain);
            return;
        }
        for &(hi, label) in &self.up[x] {
            if iv.contains(hi) {
                chain.elements.push(hi);
                chain.labels.push(label);
                self.chain_dfs(iv, hi, chain, f);
                chain.elements.pop();
                chain.labels.pop();
            }
        }
    }

    pub fn maximal_chains(&self, iv: &Interval) -> Vec<Chain> {
        let mut out = Vec::new();
        self.visit_maximal_chains(iv, &mut |c| out.push(c.clone()));
        out
    }

    pub fn count_maximal_chains(&self, iv: &Interval) -> u64 {
        let mut n = 0;
        self.visit_maximal_chains(iv, &mut |_| n += 1);
        n
    }

    /// Checks that `x ↦ ux` is a label-preserving poset isomorphism from
    /// `[1, u⁻¹v]` onto `[u, v]`.
    pub fn interval_translate_check(&self, u: usize, v: usize) -> bool {
        let Some(w) = self.quotient_index(u, v) else {
            return false;
        };
        let Ok(iv_w) = self.interval(self.bottom, w) else {
            return false;
        };
        let Ok(iv_uv) = self.interval(u, v) else {
            return false;
        };
        if iv_w.members.len() != iv_uv.members.len() {
            return false;
        }
        let u_el = &self.elements[u];
        let mut image = BTreeMap::new();
        for &x in &iv_w.members {
            let fx = u_el.compose(&self.elements[x]);
            match self.index_of_key(&fx.key()) {
                Some(i) if iv_uv.contains(i) => {
                    image.insert(x, i);
                }
                _ => return false,
            }
        }
        {
            let mut seen = BitSet::new(self.num_elements());
            for &i in image.values() {
                seen.insert(i);
            }
            if seen.count() != iv_uv.members.len() {
                return false;
            }
        }
        for &x in &iv_w.members {
            for &(y, label) in &self.up[x] {
                if !iv_w.contains(y) {
                    continue;
                }
                if self.cover_label(image[&x], image[&y]) != Some(label) {
                    return false;
                }
            }
        }
        true
    }

    /// Unique minimal upper bounds and maximal lower bounds for every pair.
    pub fn is_lattice(&self) -> bool {
        lattice_check(&self.below, &self.above)
    }

    /// Checks that `w ↦ w⁻¹γ` is an order-reversing bijection.
    pub fn self_duality_check(&self) -> bool {
        let gamma = &self.elements[self.top];
        let n = self.num_elements();
        let mut dual = vec![0usize; n];
        let mut seen = BitSet::new(n);
        for i in 0..n {
            let d = self.elements[i].inverse().compose(gamma);
            match self.index_of_key(&d.key()) {
                Some(j) => {
                    dual[i] = j;
                    seen.insert(j);
                }
                None => return false,
            }
        }
        if seen.count() != n {
            return false;
        }
        self.covers
            .iter()
            .all(|c| self.cover_label.contains_key(&(dual[c.hi], dual[c.lo])))
    }

    /// Möbius function of an interval by the standard recursion, memoized
    /// over the members. Serves as the oracle side of the falling-chain
    /// identity.
    pub fn mobius(&self, iv: &Interval) -> i64 {
        let mut mu: BTreeMap<usize, i64> = BTreeMap::new();
        for &x in &iv.members {
            let value = if x == iv.bottom {
                1
            } else {
                let mut acc = 0i64;
                for (&z, &m) in &mu {
                    if self.le(z, x) {
                        acc += m;
                    }
                }
                -acc
            };
            mu.insert(x, value);
        }
        mu[&iv.top]
    }
}

/// Unique-minimal-upper-bound and unique-maximal-lower-bound check over a
/// materialized order relation. Separated from [`NcPoset`] so synthetic
/// posets can exercise it.
pub(crate) fn lattice_check(below: &[BitSet], above: &[BitSet]) -> bool {
    let n = below.len();
    for x in 0..n {
        for y in x + 1..n {
            let uppers = above[x].intersection(&above[y]);
            let minimal = uppers
                .iter()
                .filter(|&z| uppers.intersection(&below[z]).count() == 1)
                .count();
            if minimal != 1 {
                return false;
            }
            let lowers = below[x].intersection(&below[y]);
            let maximal = lowers
                .iter()
                .filter(|&z| lowers.intersection(&above[z]).count() == 1)
                .count();
            if maximal != 1 {
                return false;
            }
        }
    }
    true
}

/// Reachability closure of an explicit cover list; test scaffolding for the
/// generic poset algorithms. Cover lists must be topologically sorted by
/// index.
#[cfg(test)]
pub(crate) fn reachability(n: usize, covers: &[(usize, usize)]) -> (Vec<BitSet>, Vec<BitSet>) {
    let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    for i in 0..n {
        below[i].insert(i);
        for &(lo, hi) in covers {
            if hi == i {
                let (a, b) = below.split_at_mut(i);
                b[0].union_with(&a[lo]);
            }
        }
    }
    let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    for i in (0..n).rev() {
        above[i].insert(i);
        for &(lo, hi) in covers {
            if lo == i {
                let (a, b) = above.split_at_mut(hi);
                a[i].union_with(&b[0]);
            }
        }
    }
    (below, above)
}
