//! Root systems for the supported Coxeter types: positive systems, simple
//! systems, bipartitions, rank-2 induced subsystems and lattice predicates.
//!
//! Geometric families (A, B, D, F4, G2, E6–E8, H3, H4) are realized with
//! exact coordinates; the dihedral family I2(m) is handled combinatorially
//! for every m, with reflections indexed `0..m` standing for
//! `t_{k+1} = t_α (t_β t_α)^k`.

mod coords;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::exact::{Matrix, Rational, Scalar, Vector};

/// The Cartan–Killing families supported by the builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    F4,
    G2,
    E6,
    E7,
    E8,
}

/// A validated Coxeter type: a family plus its rank (A/B/D) or `m` (I2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxeterType {
    family: Family,
    param: usize,
}

/// Errors from type validation and the lattice predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootsError {
    UnsupportedParameter { family: Family, param: usize },
    UnknownType(String),
    NotCrystallographic(CoxeterType),
    DegeneratePair { i: usize, j: usize },
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::UnsupportedParameter { family, param } => {
                write!(f, "unsupported parameter {param} for family {family:?}")
            }
            RootsError::UnknownType(s) => write!(f, "unknown Coxeter type {s:?}"),
            RootsError::NotCrystallographic(t) => {
                write!(f, "{t} is not crystallographic")
            }
            RootsError::DegeneratePair { i, j } => {
                write!(f, "roots {i} and {j} do not span a plane")
            }
        }
    }
}

impl core::error::Error for RootsError {}

impl CoxeterType {
    pub fn new(family: Family, param: usize) -> Result<Self, RootsError> {
        let ok = match family {
            Family::A => param >= 1,
            Family::B => param >= 2,
            Family::D => param >= 3, // D3 permitted, aliased to A3 geometry
            Family::I2 => param >= 2,
            _ => param == 0,
        };
        if ok {
            Ok(CoxeterType { family, param })
        } else {
            Err(RootsError::UnsupportedParameter { family, param })
        }
    }

    pub fn a(rank: usize) -> Result<Self, RootsError> {
        Self::new(Family::A, rank)
    }

    pub fn b(rank: usize) -> Result<Self, RootsError> {
        Self::new(Family::B, rank)
    }

    pub fn d(rank: usize) -> Result<Self, RootsError> {
        Self::new(Family::D, rank)
    }

    pub fn i2(m: usize) -> Result<Self, RootsError> {
        Self::new(Family::I2, m)
    }

    pub fn h3() -> Self {
        CoxeterType { family: Family::H3, param: 0 }
    }

    pub fn h4() -> Self {
        CoxeterType { family: Family::H4, param: 0 }
    }

    pub fn f4() -> Self {
        CoxeterType { family: Family::F4, param: 0 }
    }

    pub fn g2() -> Self {
        CoxeterType { family: Family::G2, param: 0 }
    }

    pub fn e6() -> Self {
        CoxeterType { family: Family::E6, param: 0 }
    }

    pub fn e7() -> Self {
        CoxeterType { family: Family::E7, param: 0 }
    }

    pub fn e8() -> Self {
        CoxeterType { family: Family::E8, param: 0 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> usize {
        self.param
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A | Family::B | Family::D => self.param,
            Family::I2 | Family::G2 => 2,
            Family::H3 => 3,
            Family::H4 | Family::F4 => 4,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::A => self.param + 1,
            Family::B => 2 * self.param,
            Family::D => 2 * self.param - 2,
            Family::I2 => self.param,
            Family::H3 => 10,
            Family::H4 => 30,
            Family::F4 => 12,
            Family::G2 => 6,
            Family::E6 => 12,
            Family::E7 => 18,
            Family::E8 => 30,
        }
    }

    /// The fundamental degrees `d_1 ≤ … ≤ d_ℓ`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = match self.family {
            Family::A => (2..=self.param + 1).collect(),
            Family::B => (1..=self.param).map(|i| 2 * i).collect(),
            Family::D => {
                let mut v: Vec<usize> = (1..self.param).map(|i| 2 * i).collect();
                v.push(self.param);
                v
            }
            Family::I2 => vec![2, self.param],
            Family::H3 => vec![2, 6, 10],
            Family::H4 => vec![2, 12, 20, 30],
            Family::F4 => vec![2, 6, 8, 12],
            Family::G2 => vec![2, 6],
            Family::E6 => vec![2, 5, 6, 8, 9, 12],
            Family::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            Family::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        };
        d.sort_unstable();
        d
    }

    pub fn num_reflections(&self) -> usize {
        self.rank() * self.coxeter_number() / 2
    }

    pub fn is_crystallographic(&self) -> bool {
        matches!(
            self.family,
            Family::A
                | Family::B
                | Family::D
                | Family::F4
                | Family::G2
                | Family::E6
                | Family::E7
                | Family::E8
        )
    }

    pub fn is_dihedral_model(&self) -> bool {
        self.family == Family::I2
    }

    fn degree_product(&self, shift: usize) -> u128 {
        let h = self.coxeter_number();
        let mut acc = Rational::one();
        for d in self.degrees() {
            acc = acc * Rational::new(BigInt::from(d + h - shift), BigInt::from(d));
        }
        assert!(acc.denom().is_one(), "degree product is not an integer");
        acc.numer().to_u128().expect("degree product overflows u128")
    }

    /// `Π (d_i + h)/d_i`, the number of elements of the noncrossing
    /// partition lattice.
    pub fn catalan_number(&self) -> u128 {
        self.degree_product(0)
    }

    /// `Π (d_i + h − 2)/d_i`, the falling-chain / Möbius anchor.
    pub fn positive_cluster_number(&self) -> u128 {
        self.degree_product(2)
    }

    /// Filesystem-friendly name, e.g. `A3` or `I2_7`.
    pub fn slug(&self) -> String {
        match self.family {
            Family::A => format!("A{}", self.param),
            Family::B => format!("B{}", self.param),
            Family::D => format!("D{}", self.param),
            Family::I2 => format!("I2_{}", self.param),
            f => format!("{f:?}"),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.param),
            Family::B => write!(f, "B{}", self.param),
            Family::D => write!(f, "D{}", self.param),
            Family::I2 => write!(f, "I2({})", self.param),
            fam => write!(f, "{fam:?}"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = RootsError;

    /// Accepts `A3`, `B4`, `D4`, `I2:7`, `I2(7)`, `I2_7`, `H3`, `H4`, `F4`,
    /// `G2`, `E6`, `E7`, `E8`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let unknown = || RootsError::UnknownType(t.to_string());
        let parse_param = |txt: &str| txt.parse::<usize>().map_err(|_| unknown());
        match t {
            "H3" => return Ok(CoxeterType::h3()),
            "H4" => return Ok(CoxeterType::h4()),
            "F4" => return Ok(CoxeterType::f4()),
            "G2" => return Ok(CoxeterType::g2()),
            "E6" => return Ok(CoxeterType::e6()),
            "E7" => return Ok(CoxeterType::e7()),
            "E8" => return Ok(CoxeterType::e8()),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("I2") {
            let digits = rest
                .trim_start_matches([':', '(', '_'])
                .trim_end_matches(')');
            return CoxeterType::i2(parse_param(digits)?);
        }
        let (family, rest) = match t.split_at_checked(1) {
            Some(("A", r)) => (Family::A, r),
            Some(("B", r)) => (Family::B, r),
            Some(("D", r)) => (Family::D, r),
            _ => return Err(unknown()),
        };
        CoxeterType::new(family, parse_param(rest)?)
    }
}

/// The combinatorial model of the dihedral group I2(m): `m` reflections
/// `t_1, …, t_m` with `t_1 = t_α`, `t_m = t_β`, the reflection with index
/// `k` sitting at angle `kπ/m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralModel {
    pub m: usize,
}

impl DihedralModel {
    /// Image of the root line `k` under the reflection with root line `a`.
    pub fn reflect_root(&self, a: usize, k: usize) -> usize {
        (2 * a + self.m - (k % self.m)) % self.m
    }

    /// Image of the root line `k` under the rotation `γ^j`.
    pub fn rotate_root(&self, j: usize, k: usize) -> usize {
        (k + 2 * j) % self.m
    }
}

/// A rank-2 induced subsystem: all positive roots in the span of two
/// linearly independent roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Subsystem {
    /// Member root indices in rotational order `t_1, …, t_k`: the angular
    /// sweep from one simple root of the subsystem to the other.
    pub members: Vec<usize>,
    /// At least three members.
    pub irreducible: bool,
    /// The two indecomposable positive roots, i.e. the ends of `members`.
    pub simple_pair: (usize, usize),
}

/// A root system with its positive system, simple system, bipartition and
/// rank-2 subsystem index. Immutable after construction.
pub struct RootSystem {
    ctype: CoxeterType,
    rank: usize,
    ambient: usize,
    positive: Vec<Vector>,
    index_map: BTreeMap<Vector, usize>,
    /// Expansion of each positive root in the simple basis.
    expansions: Vec<Vec<Scalar>>,
    simple: Vec<usize>,
    bipartition: (Vec<usize>, Vec<usize>),
    rank2: Vec<Rank2Subsystem>,
    rank2_by_span: BTreeMap<Vec<Scalar>, usize>,
    dihedral: Option<DihedralModel>,
}

/// Builds the root system for a validated type. See [`RootSystem`].
pub fn build_root_system(t: CoxeterType) -> RootSystem {
    RootSystem::build(t)
}

impl RootSystem {
    pub fn build(ctype: CoxeterType) -> Self {
        if ctype.family == Family::I2 {
            return Self::build_dihedral(ctype);
        }
        let all = match ctype.family {
            Family::A => coords::type_a(ctype.param),
            Family::B => coords::type_b(ctype.param),
            Family::D => coords::type_d(ctype.param),
            Family::F4 => coords::f4(),
            Family::G2 => coords::g2(),
            Family::H3 => coords::h3(),
            Family::H4 => coords::h4(),
            Family::E8 => coords::e8(),
            Family::E6 | Family::E7 => e_subsystem(ctype.rank()),
            Family::I2 => unreachable!(),
        };
        Self::build_geometric(ctype, all)
    }

    fn build_dihedral(ctype: CoxeterType) -> Self {
        let m = ctype.param;
        let members: Vec<usize> = (0..m).collect();
        let rank2 = Rank2Subsystem {
            irreducible: m >= 3,
            simple_pair: (0, m - 1),
            members,
        };
        let bipartition = if m == 1 {
            (vec![0], vec![])
        } else {
            (vec![0], vec![m - 1])
        };
        RootSystem {
            ctype,
            rank: 2,
            ambient: 0,
            positive: Vec::new(),
            index_map: BTreeMap::new(),
            expansions: Vec::new(),
            simple: if m == 1 { vec![0] } else { vec![0, m - 1] },
            bipartition,
            rank2: vec![rank2],
            rank2_by_span: BTreeMap::new(),
            dihedral: Some(DihedralModel { m }),
        }
    }

    fn build_geometric(ctype: CoxeterType, all: Vec<Vector>) -> Self {
        let rank = ctype.rank();
        let positive = positive_half(&all);
        let ambient = positive[0].dim();
        let (rank2, rank2_by_span) = build_rank2_index(&positive);
        let simple = simple_indices_of(&positive, &rank2, rank, ctype.is_crystallographic());

        let mut index_map = BTreeMap::new();
        for (i, r) in positive.iter().enumerate() {
            index_map.insert(r.clone(), i);
        }

        // expansions in the simple basis, with the nonnegativity invariant
        let simple_roots: Vec<&Vector> = simple.iter().map(|&i| &positive[i]).collect();
        let basis = Matrix::from_columns(&simple_roots);
        let mut expansions = Vec::with_capacity(positive.len());
        for r in &positive {
            let x = basis
                .solve(r)
                .expect("positive root outside the simple span");
            for c in &x {
                assert_ne!(
                    c.sign(),
                    Ordering::Less,
                    "negative simple coefficient for a positive root"
                );
                if ctype.is_crystallographic() {
                    assert!(
                        c.is_rational() && c.rational_part().denom().is_one(),
                        "non-integer simple coefficient in a crystallographic type"
                    );
                }
            }
            expansions.push(x);
        }

        // closure sanity: simple reflections permute the root set
        for &s in &simple {
            let alpha = &positive[s];
            let norm = alpha.norm_sq();
            for r in &positive {
                let factor = &(&Scalar::from_int(2) * &r.inner(alpha)) / &norm;
                let image = r - &alpha.scale(&factor);
                let found = index_map.contains_key(&image) || index_map.contains_key(&-&image);
                assert!(found, "simple reflection does not preserve the root set");
            }
        }

        let bipartition = bipartition_of(&positive, &simple);
        for block in [&bipartition.0, &bipartition.1] {
            for (a, &i) in block.iter().enumerate() {
                for &j in &block[a + 1..] {
                    assert!(
                        positive[i].inner(&positive[j]).is_zero(),
                        "bipartition block is not orthogonal"
                    );
                }
            }
        }

        // counting invariants
        let h = ctype.coxeter_number();
        assert_eq!(positive.len(), rank * h / 2, "|Φ⁺| = ℓh/2 fails for {ctype}");
        let degree_sum: usize = ctype.degrees().iter().map(|d| d - 1).sum();
        assert_eq!(degree_sum, positive.len(), "Σ(d_i − 1) = |Φ⁺| fails");

        RootSystem {
            ctype,
            rank,
            ambient,
            positive,
            index_map,
            expansions,
            simple,
            bipartition,
            rank2,
            rank2_by_span,
            dihedral: None,
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Ambient coordinate dimension; 0 for the dihedral model.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_reflections(&self) -> usize {
        match &self.dihedral {
            Some(d) => d.m,
            None => self.positive.len(),
        }
    }

    pub fn dihedral(&self) -> Option<&DihedralModel> {
        self.dihedral.as_ref()
    }

    pub fn is_crystallographic(&self) -> bool {
        self.ctype.is_crystallographic()
    }

    /// Positive root by index. Panics for the dihedral model.
    pub fn root(&self, i: usize) -> &Vector {
        &self.positive[i]
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    /// Index of `v` or of `−v` in the positive system; the flag is true
    /// when the match was the negative.
    pub fn root_lookup(&self, v: &Vector) -> Option<(usize, bool)> {
        if let Some(&i) = self.index_map.get(v) {
            return Some((i, false));
        }
        self.index_map.get(&-v).map(|&i| (i, true))
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_simple(&self, i: usize) -> bool {
        self.simple.contains(&i)
    }

    pub fn bipartition(&self) -> (&[usize], &[usize]) {
        (&self.bipartition.0, &self.bipartition.1)
    }

    pub fn coxeter_number(&self) -> usize {
        self.ctype.coxeter_number()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.ctype.degrees()
    }

    /// Expansion of a positive root in the simple basis.
    pub fn expansion_in_simple(&self, i: usize) -> &[Scalar] {
        &self.expansions[i]
    }

    /// All distinct rank-2 induced subsystems.
    pub fn rank2_subsystems(&self) -> &[Rank2Subsystem] {
        &self.rank2
    }

    /// The rank-2 induced subsystem spanned by two positive roots.
    pub fn rank2_subsystem(&self, i: usize, j: usize) -> Result<&Rank2Subsystem, RootsError> {
        if i == j {
            return Err(RootsError::DegeneratePair { i, j });
        }
        if let Some(d) = &self.dihedral {
            assert!(i < d.m && j < d.m);
            return Ok(&self.rank2[0]);
        }
        let key = span_key(&self.positive[i], &self.positive[j]);
        let idx = self.rank2_by_span.get(&key).copied();
        idx.map(|k| &self.rank2[k])
            .ok_or(RootsError::DegeneratePair { i, j })
    }

    /// The members of a rank-2 subsystem restricted to a root subset, in
    /// rotational order. Used for parabolic restrictions.
    pub fn rank2_restricted(&self, sub: &Rank2Subsystem, subset: &BTreeSet<usize>) -> Vec<usize> {
        sub.members
            .iter()
            .copied()
            .filter(|r| subset.contains(r))
            .collect()
    }

    /// Integer-matrix determinant test: do the given roots form a Z-basis
    /// of the root lattice? Crystallographic types only.
    pub fn zbasis_check(&self, roots: &[usize]) -> Result<bool, RootsError> {
        if !self.is_crystallographic() {
            return Err(RootsError::NotCrystallographic(self.ctype));
        }
        assert_eq!(roots.len(), self.rank, "need exactly ℓ roots");
        let mut m = Matrix::zero(self.rank, self.rank);
        for (j, &r) in roots.iter().enumerate() {
            for (i, c) in self.expansions[r].iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        let det = m.det();
        Ok(det == Scalar::from_int(1) || det == Scalar::from_int(-1))
    }

    /// Certificate for "these ℓ positive roots are the simple system": a
    /// Z-basis of the root lattice with no pairwise difference in Φ. The
    /// verdict is cross-checked against literal set equality with Δ; any
    /// discrepancy would falsify the certificate lemma and panics.
    pub fn is_simple_system_certificate(&self, roots: &[usize]) -> Result<bool, RootsError> {
        let zb = self.zbasis_check(roots)?;
        let no_diff = self.no_pairwise_difference_in_roots(roots);
        let certified = zb && no_diff;
        let mut sorted: Vec<usize> = roots.to_vec();
        sorted.sort_unstable();
        let mut delta = self.simple.clone();
        delta.sort_unstable();
        assert_eq!(
            certified,
            sorted == delta,
            "simple-system certificate disagrees with Δ for {:?}",
            roots
        );
        Ok(certified)
    }

    fn no_pairwise_difference_in_roots(&self, roots: &[usize]) -> bool {
        for (a, &i) in roots.iter().enumerate() {
            for &j in &roots[a + 1..] {
                let diff = &self.positive[i] - &self.positive[j];
                if self.root_lookup(&diff).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Simple system of the subsystem spanned by `subset` (positive root
    /// indices, closed under the span): the indecomposable members.
    pub fn simple_system_of_subset(&self, subset: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        subset
            .iter()
            .copied()
            .filter(|&p| {
                !set.iter().any(|&q| {
                    if q == p {
                        return false;
                    }
                    let diff = &self.positive[p] - &self.positive[q];
                    match self.root_lookup(&diff) {
                        Some((r, false)) => set.contains(&r),
                        _ => false,
                    }
                })
            })
            .collect()
    }

    /// The simple-system certificate relative to the parabolic subsystem
    /// `subset`: `candidate` must be a Z-basis of the sublattice spanned by
    /// `subset` with no pairwise difference in Φ. Verdict cross-checked
    /// against the subsystem's computed simple system, as in
    /// [`Self::is_simple_system_certificate`].
    pub fn certificate_within(
        &self,
        subset: &[usize],
        candidate: &[usize],
    ) -> Result<bool, RootsError> {
        if !self.is_crystallographic() {
            return Err(RootsError::NotCrystallographic(self.ctype));
        }
        let delta_w = self.simple_system_of_subset(subset);
        assert_eq!(candidate.len(), delta_w.len(), "candidate has wrong arity");
        let cols: Vec<&Vector> = delta_w.iter().map(|&i| &self.positive[i]).collect();
        let basis = Matrix::from_columns(&cols);
        let k = delta_w.len();
        let mut m = Matrix::zero(k, k);
        let mut integral = true;
        'outer: for (j, &r) in candidate.iter().enumerate() {
            let Some(x) = basis.solve(&self.positive[r]) else {
                integral = false;
                break;
            };
            for (i, c) in x.into_iter().enumerate() {
                if !(c.is_rational() && c.rational_part().denom().is_one()) {
                    integral = false;
                    break 'outer;
                }
                m.set(i, j, c);
            }
        }
        let unimodular = integral && {
            let det = m.det();
            det == Scalar::from_int(1) || det == Scalar::from_int(-1)
        };
        let certified = unimodular && self.no_pairwise_difference_in_roots(candidate);
        let mut sorted: Vec<usize> = candidate.to_vec();
        sorted.sort_unstable();
        let mut delta_sorted = delta_w;
        delta_sorted.sort_unstable();
        assert_eq!(
            certified,
            sorted == delta_sorted,
            "parabolic simple-system certificate disagrees with Δ_w"
        );
        Ok(certified)
    }

    /// Human-readable name of a reflection: cycle notation for the classical
    /// families, `t{k}` elsewhere.
    pub fn reflection_name(&self, r: usize) -> String {
        if self.dihedral.is_some() {
            return format!("t{}", r + 1);
        }
        match self.ctype.family {
            Family::A => {
                let v = &self.positive[r];
                let mut plus = None;
                let mut minus = None;
                for (i, c) in v.coords().iter().enumerate() {
                    match c.sign() {
                        Ordering::Greater => plus = Some(i + 1),
                        Ordering::Less => minus = Some(i + 1),
                        Ordering::Equal => {}
                    }
                }
                format!("({},{})", plus.unwrap(), minus.unwrap())
            }
            Family::B | Family::D => {
                let v = &self.positive[r];
                let support: Vec<(usize, Ordering)> = v
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i + 1, c.sign()))
                    .collect();
                match support.as_slice() {
                    [(i, _)] => format!("[{i}]"),
                    [(i, _), (j, Ordering::Less)] => format!("(({i},{j}))"),
                    [(i, _), (j, Ordering::Greater)] => format!("(({i},-{j}))"),
                    _ => format!("t{r}"),
                }
            }
            _ => format!("t{r}"),
        }
    }
}

/// The lex-positive half of a (negation-closed) root list, sorted by the
/// deterministic coordinate order.
fn positive_half(all: &[Vector]) -> Vec<Vector> {
    let mut positive: Vec<Vector> = all
        .iter()
        .filter(|v| v.is_lex_positive())
        .cloned()
        .collect();
    assert_eq!(positive.len() * 2, all.len(), "root set not symmetric");
    positive.sort();
    positive
}

/// Indices of the indecomposable positive roots.
///
/// In a crystallographic system a decomposable positive root is a sum of two
/// positive roots, so a subtraction sweep suffices. Elsewhere (H3, H4)
/// decompositions carry irrational coefficients; there a root is
/// decomposable exactly when it sits strictly inside some rank-2 subsystem,
/// i.e. is a non-extreme member in the rank-2 index.
fn simple_indices_of(
    positive: &[Vector],
    rank2: &[Rank2Subsystem],
    rank: usize,
    crystallographic: bool,
) -> Vec<usize> {
    let decomposable: Vec<bool> = if crystallographic {
        let set: BTreeSet<&Vector> = positive.iter().collect();
        positive
            .iter()
            .map(|p| positive.iter().any(|q| q != p && set.contains(&(p - q))))
            .collect()
    } else {
        let mut marked = vec![false; positive.len()];
        for sub in rank2 {
            for &mid in &sub.members[1..sub.members.len().saturating_sub(1)] {
                marked[mid] = true;
            }
        }
        marked
    };
    let simple: Vec<usize> = (0..positive.len()).filter(|&i| !decomposable[i]).collect();
    assert_eq!(simple.len(), rank, "indecomposable count differs from rank");
    simple
}

/// E6/E7 as sub-span systems of E8: take the simple system of E8, locate the
/// branch node of its Coxeter graph, trim the long arm, and keep the roots
/// inside the span of the remaining simples.
fn e_subsystem(sub_rank: usize) -> Vec<Vector> {
    let all = coords::e8();
    let positive = positive_half(&all);
    let simple = simple_indices_of(&positive, &[], 8, true);

    let adj: Vec<Vec<usize>> = simple
        .iter()
        .map(|&i| {
            simple
                .iter()
                .enumerate()
                .filter(|(_, &j)| j != i && !positive[i].inner(&positive[j]).is_zero())
                .map(|(slot, _)| slot)
                .collect()
        })
        .collect();
    let center = (0..simple.len())
        .find(|&i| adj[i].len() == 3)
        .expect("E8 diagram has a branch node");
    let mut arms: Vec<Vec<usize>> = adj[center]
        .iter()
        .map(|&start| {
            let mut arm = vec![start];
            let mut prev = center;
            loop {
                let cur = *arm.last().unwrap();
                match adj[cur].iter().find(|&&n| n != prev) {
                    Some(&next) => {
                        prev = cur;
                        arm.push(next);
                    }
                    None => break,
                }
            }
            arm
        })
        .collect();
    arms.sort_by_key(Vec::len);
    assert_eq!(
        arms.iter().map(Vec::len).collect::<Vec<_>>(),
        vec![1, 2, 4],
        "unexpected E8 arm profile"
    );
    let drop = 8 - sub_rank; // nodes removed from the end of the long arm
    let long = &arms[2];
    let removed: BTreeSet<usize> = long[long.len() - drop..].iter().copied().collect();
    let kept: Vec<&Vector> = (0..simple.len())
        .filter(|slot| !removed.contains(slot))
        .map(|slot| &positive[simple[slot]])
        .collect();
    assert_eq!(kept.len(), sub_rank);

    let span = Matrix::from_columns(&kept);
    all.into_iter()
        .filter(|r| span.solve(r).is_some())
        .collect()
}

/// 2-coloring of the Coxeter graph on the simple roots. The block holding
/// the lexicographically smallest simple root comes first.
fn bipartition_of(positive: &[Vector], simple: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = simple.len();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0u8);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for next in 0..n {
                if next == cur
                    || positive[simple[cur]]
                        .inner(&positive[simple[next]])
                        .is_zero()
                {
                    continue;
                }
                let want = 1 - color[cur].unwrap();
                match color[next] {
                    None => {
                        color[next] = Some(want);
                        queue.push_back(next);
                    }
                    Some(c) => assert_eq!(c, want, "Coxeter graph is not bipartite"),
                }
            }
        }
    }
    let block = |c: u8| -> Vec<usize> {
        (0..n)
            .filter(|&i| color[i] == Some(c))
            .map(|i| simple[i])
            .collect()
    };
    // simple[0] is the lexicographically smallest simple root and was
    // colored 0, so block 0 leads.
    (block(0), block(1))
}

/// Canonical key for the plane spanned by two roots: the reduced row
/// echelon form of the 2×n matrix of their coordinates.
fn span_key(u: &Vector, v: &Vector) -> Vec<Scalar> {
    let dim = u.dim();
    let mut m = Matrix::zero(2, dim);
    for j in 0..dim {
        m.set(0, j, u.coord(j).clone());
        m.set(1, j, v.coord(j).clone());
    }
    let (r, pivots) = m.reduced_row_echelon();
    assert_eq!(pivots.len(), 2, "span key of dependent roots");
    r.entries().to_vec()
}

/// Builds the rank-2 subsystem index. Any two members of a plane span it,
/// so grouping the root pairs by span key recovers each subsystem's member
/// set without scanning the whole root list per plane.
fn build_rank2_index(
    positive: &[Vector],
) -> (Vec<Rank2Subsystem>, BTreeMap<Vec<Scalar>, usize>) {
    let mut groups: BTreeMap<Vec<Scalar>, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..positive.len() {
        for j in i + 1..positive.len() {
            let key = span_key(&positive[i], &positive[j]);
            let set = groups.entry(key).or_default();
            set.insert(i);
            set.insert(j);
        }
    }
    let mut subsystems = Vec::new();
    let mut by_span = BTreeMap::new();
    for (key, set) in groups {
        let members: Vec<usize> = set.into_iter().collect();
        by_span.insert(key, subsystems.len());
        subsystems.push(rank2_from_members(positive, &members));
    }
    (subsystems, by_span)
}

fn rank2_from_members(positive: &[Vector], member_set: &[usize]) -> Rank2Subsystem {
    let (i, j) = (member_set[0], member_set[1]);
    let basis = Matrix::from_columns(&[&positive[i], &positive[j]]);
    let mut members: Vec<(usize, Scalar, Scalar)> = member_set
        .iter()
        .map(|&k| {
            let x = basis.solve(&positive[k]).expect("member outside the span");
            let mut it = x.into_iter();
            (k, it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    // angular order in the plane: all members lie in a cone of angle < π,
    // so the cross-product comparator is a strict total order
    members.sort_by(|a, b| {
        let cross = &(&a.1 * &b.2) - &(&a.2 * &b.1);
        match cross.sign() {
            Ordering::Greater => Ordering::Less,
            Ordering::Less => Ordering::Greater,
            Ordering::Equal => panic!("proportional positive roots"),
        }
    });
    let mut order: Vec<usize> = members.iter().map(|m| m.0).collect();
    if order[0] > *order.last().unwrap() {
        order.reverse();
    }
    let first = order[0];
    let last = *order.last().unwrap();

    // every member must sit in the nonnegative cone of the extremes
    let cone = Matrix::from_columns(&[&positive[first], &positive[last]]);
    for &k in &order {
        let x = cone
            .solve(&positive[k])
            .expect("member outside extreme span");
        for c in x {
            assert_ne!(c.sign(), Ordering::Less, "member outside the simple cone");
        }
    }

    Rank2Subsystem {
        irreducible: order.len() >= 3,
        simple_pair: (first, last),
        members: order,
    }
}
