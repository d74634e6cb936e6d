use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use super::{ArithmeticError, Scalar};

/// A vector of exact scalars; elements of the ambient Euclidean space.
///
/// The ordering is the support-lexicographic one used for deterministic
/// root indexing: first by the position of the leading nonzero coordinate,
/// then coordinatewise by exact scalar comparison. On type-A roots this
/// reproduces the `(i, j) < (i, k) < (j, k)` reading order of transposition
/// names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Ord for Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        let lead = |v: &Vector| v.coords.iter().position(|c| !c.is_zero());
        lead(self)
            .cmp(&lead(other))
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: (0..dim).map(|_| Scalar::zero()).collect(),
        }
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| Scalar::from_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// True when the first nonzero coordinate is positive. Lexicographic
    /// positivity is compatible with sums and positive scaling, so it cuts
    /// any root system into a valid positive/negative half.
    pub fn is_lex_positive(&self) -> bool {
        for c in &self.coords {
            match c.sign() {
                Ordering::Greater => return true,
                Ordering::Less => return false,
                Ordering::Equal => {}
            }
        }
        false
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Standard Euclidean inner product.
    pub fn try_inner(&self, other: &Vector) -> Result<Scalar, ArithmeticError> {
        if self.dim() != other.dim() {
            return Err(ArithmeticError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let mut acc = Scalar::zero();
        for (u, v) in self.coords.iter().zip(&other.coords) {
            acc = acc + u * v;
        }
        Ok(acc)
    }

    /// Inner product; panics on a dimension mismatch.
    pub fn inner(&self, other: &Vector) -> Scalar {
        self.try_inner(other).expect("inner product dimensions")
    }

    pub fn norm_sq(&self) -> Scalar {
        self.inner(self)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(u, v)| u + v)
                .collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(u, v)| u - v)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
