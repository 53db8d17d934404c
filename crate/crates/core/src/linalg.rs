//! Sparse graded vectors and exact subspace arithmetic.
//!
//! A `GradedVector` is a finite linear combination over an ordered,
//! parity-graded, weight-graded basis-key space. A `WeightSubspace` is the
//! reduced row echelon form of a subspace of a single finite-dimensional
//! weight space; membership, intersection, sum and quotient dimension are all
//! exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::{Parity, Weight};
use crate::scalar::{format_scalar, Scalar};

/// A basis key: totally ordered, with parity and weight as pure functions.
pub trait BasisKey: Clone + Ord + fmt::Debug + fmt::Display {
    fn parity(&self) -> Parity;
    fn weight(&self) -> Weight;
}

/// Finite map from basis keys to nonzero scalars. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVector<K: BasisKey> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: BasisKey> Default for GradedVector<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: BasisKey> GradedVector<K> {
    pub fn zero() -> Self {
        GradedVector { terms: BTreeMap::new() }
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn unit(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, x) in other.iter() {
            self.add_term(k.clone(), c * x);
        }
    }

    /// `self + c * other` with zero terms pruned.
    pub fn combine(&self, c: &Scalar, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(c, other);
        out
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedVector {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), c * x)).collect(),
        }
    }

    pub fn map_keys<L: BasisKey>(&self, f: impl Fn(&K) -> L) -> GradedVector<L> {
        let mut out = GradedVector::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Parity when homogeneous. The zero vector is parity-polymorphic and
    /// reports `None`; a genuinely mixed vector is an error.
    pub fn homogeneous_parity(&self) -> Result<Option<Parity>> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Ok(None),
            Some(k) => k.parity(),
        };
        for k in it {
            if k.parity() != first {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Some(first))
    }

    /// Weight when homogeneous; zero vectors are weight-polymorphic.
    pub fn homogeneous_weight(&self) -> Result<Option<Weight>> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Ok(None),
            Some(k) => k.weight(),
        };
        for k in it {
            if k.weight() != first {
                return Err(Error::MixedWeight(format!("{} vs {}", k.weight(), first)));
            }
        }
        Ok(Some(first))
    }
}

impl<K: BasisKey> Add for GradedVector<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&Scalar::one(), &rhs)
    }
}

impl<K: BasisKey> Sub for GradedVector<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&-Scalar::one(), &rhs)
    }
}

impl<K: BasisKey> Neg for GradedVector<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(&-Scalar::one())
    }
}

impl<K: BasisKey> fmt::Display for GradedVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", format_scalar(c), k)?;
        }
        Ok(())
    }
}

/// Reduce `rows` in place to reduced row echelon form with leading-1 pivots.
/// Zero rows are dropped. Returns the pivot column of each surviving row.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(src) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, src);
        let inv = rows[next_row][col].recip();
        for x in rows[next_row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    rows.truncate(next_row);
    pivots
}

/// Basis of the null space `{x : M x = 0}` of the matrix whose rows are the
/// given equations. Deterministic: one vector per free column, ascending.
pub fn kernel_basis(matrix: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Scalar>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let pivot_of_col: BTreeMap<usize, usize> =
        pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_of_col.contains_key(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (&pc, &pr) in &pivot_of_col {
            v[pc] = -rows[pr][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Row-reduced exact basis of a subspace of one finite-dimensional weight
/// space. The ambient is an ordered key list sharing a single weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSubspace<K: BasisKey> {
    ambient: Vec<K>,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl<K: BasisKey> WeightSubspace<K> {
    fn check_ambient(ambient: &[K]) -> Result<()> {
        if let Some(first) = ambient.first() {
            let w = first.weight();
            for k in &ambient[1..] {
                if k.weight() != w {
                    return Err(Error::MixedWeight(format!(
                        "ambient keys {} and {} differ in weight",
                        first, k
                    )));
                }
            }
        }
        Ok(())
    }

    /// The zero subspace of the given ambient.
    pub fn empty(mut ambient: Vec<K>) -> Self {
        ambient.sort();
        ambient.dedup();
        WeightSubspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given vectors inside an explicit ambient. Errors if a
    /// vector uses a key outside the ambient or if weights are mixed.
    pub fn span(ambient: Vec<K>, vectors: &[GradedVector<K>]) -> Result<Self> {
        let mut s = Self::empty(ambient);
        Self::check_ambient(&s.ambient)?;
        let index: BTreeMap<&K, usize> =
            s.ambient.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let mut row = vec![Scalar::zero(); s.ambient.len()];
            for (k, c) in v.iter() {
                let Some(&i) = index.get(k) else {
                    return Err(Error::MixedWeight(format!("key {} outside ambient", k)));
                };
                row[i] = c.clone();
            }
            rows.push(row);
        }
        s.pivots = rref(&mut rows);
        s.rows = rows;
        Ok(s)
    }

    /// Span with the ambient derived from the union of the vectors' keys.
    pub fn span_auto(vectors: &[GradedVector<K>]) -> Result<Self> {
        let mut ambient: Vec<K> = Vec::new();
        for v in vectors {
            ambient.extend(v.keys().cloned());
        }
        Self::span(ambient, vectors)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> &[K] {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    /// The common weight of the ambient keys, `None` for an empty ambient.
    pub fn weight(&self) -> Option<Weight> {
        self.ambient.first().map(BasisKey::weight)
    }

    fn to_row(&self, v: &GradedVector<K>) -> Result<Option<Vec<Scalar>>> {
        if v.is_zero() {
            return Ok(Some(vec![Scalar::zero(); self.ambient.len()]));
        }
        if let Some(w) = self.weight() {
            match v.homogeneous_weight()? {
                Some(vw) if vw == w => {}
                Some(vw) => {
                    return Err(Error::MixedWeight(format!(
                        "vector weight {} vs subspace weight {}",
                        vw, w
                    )))
                }
                None => {}
            }
        }
        let index: BTreeMap<&K, usize> =
            self.ambient.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut row = vec![Scalar::zero(); self.ambient.len()];
        for (k, c) in v.iter() {
            match index.get(k) {
                Some(&i) => row[i] = c.clone(),
                // same weight but not an ambient key: cannot lie in the span
                None => return Ok(None),
            }
        }
        Ok(Some(row))
    }

    fn reduce_row(&self, row: &mut [Scalar]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (x, b) in row.iter_mut().zip(&self.rows[r]) {
                    *x -= &factor * b;
                }
            }
        }
    }

    /// True iff `v` reduces to zero against the echelon rows.
    pub fn contains(&self, v: &GradedVector<K>) -> Result<bool> {
        match self.to_row(v)? {
            None => Ok(false),
            Some(mut row) => {
                self.reduce_row(&mut row);
                Ok(row.iter().all(Zero::is_zero))
            }
        }
    }

    /// The residual of `v` after reduction against the subspace basis.
    pub fn reduce(&self, v: &GradedVector<K>) -> Result<GradedVector<K>> {
        match self.to_row(v)? {
            None => Ok(v.clone()),
            Some(mut row) => {
                self.reduce_row(&mut row);
                let mut out = GradedVector::zero();
                for (i, c) in row.into_iter().enumerate() {
                    out.add_term(self.ambient[i].clone(), c);
                }
                Ok(out)
            }
        }
    }

    pub fn basis_vectors(&self) -> Vec<GradedVector<K>> {
        self.rows
            .iter()
            .map(|row| {
                let mut v = GradedVector::zero();
                for (i, c) in row.iter().enumerate() {
                    v.add_term(self.ambient[i].clone(), c.clone());
                }
                v
            })
            .collect()
    }

    fn require_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Span of the union of the two bases.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.require_same_ambient(other)?;
        let mut rows: Vec<Vec<Scalar>> = self.rows.iter().chain(other.rows.iter()).cloned().collect();
        let pivots = rref(&mut rows);
        Ok(WeightSubspace { ambient: self.ambient.clone(), rows, pivots })
    }

    /// Exact intersection, computed from the kernel of the stacked bases.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.require_same_ambient(other)?;
        let dim = self.ambient.len();
        let (r1, r2) = (self.rank(), other.rank());
        if r1 == 0 || r2 == 0 {
            return Ok(Self::empty(self.ambient.clone()));
        }
        // columns: coefficients on self's basis then other's basis;
        // one equation per ambient coordinate
        let mut eqs = vec![vec![Scalar::zero(); r1 + r2]; dim];
        for (j, row) in self.rows.iter().enumerate() {
            for (i, x) in row.iter().enumerate() {
                eqs[i][j] = x.clone();
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for (i, x) in row.iter().enumerate() {
                eqs[i][r1 + j] = x.clone();
            }
        }
        let mut rows = Vec::new();
        for combo in kernel_basis(&eqs) {
            let mut vec_row = vec![Scalar::zero(); dim];
            for (j, c) in combo[..r1].iter().enumerate() {
                for (x, b) in vec_row.iter_mut().zip(&self.rows[j]) {
                    *x += c * b;
                }
            }
            rows.push(vec_row);
        }
        let pivots = rref(&mut rows);
        Ok(WeightSubspace { ambient: self.ambient.clone(), rows, pivots })
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.require_same_ambient(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.rank() == other.rank() && self.is_subspace_of(other)?)
    }

    /// `dim(self / sub)`; errors unless `sub` is a subspace of `self`.
    pub fn quotient_dim(&self, sub: &Self) -> Result<usize> {
        if !sub.is_subspace_of(self)? {
            return Err(Error::NotASubspace);
        }
        Ok(self.rank() - sub.rank())
    }
}
