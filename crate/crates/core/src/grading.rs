//! Z_2-parity, weights and small index sets.

use std::fmt;
use std::ops::Add;

use num_traits::Zero;

use crate::scalar::{format_scalar, int, Scalar};

/// Parity in Z_2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn flipped_if(self, cond: bool) -> Self {
        if cond {
            self.flip()
        } else {
            self
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{|self|}`.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Koszul sign `(-1)^{|a||b|}` picked up when two homogeneous objects swap.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// An H-weight: the eigenvalue vector under the commuting diagonal family,
/// even coordinates first, then odd coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Scalar>);

impl Weight {
    pub fn zeros(len: usize) -> Self {
        Weight(vec![Scalar::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn shifted(&self, coord: usize, by: i64) -> Weight {
        let mut w = self.clone();
        w.0[coord] += int(by);
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_scalar(x))?;
        }
        write!(f, ")")
    }
}

/// A subset of `{1, ..., k}` stored as a bitmask, used for exterior factors
/// `xi_I`, derivation sets and wedge index sets. All sign bookkeeping for
/// reordering anticommuting generators lives here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OddSet(pub u32);

impl FromIterator<usize> for OddSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = OddSet(0);
        for i in it {
            assert!((1..=32).contains(&i));
            s.0 |= 1 << (i - 1);
        }
        s
    }
}

impl OddSet {
    pub fn empty() -> Self {
        OddSet(0)
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.len())
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=32).filter(move |&i| self.contains(i))
    }

    pub fn count_below(&self, i: usize) -> usize {
        (self.0 & ((1u32 << (i - 1)) - 1)).count_ones() as usize
    }

    pub fn count_above(&self, i: usize) -> usize {
        self.len() - self.count_below(i) - usize::from(self.contains(i))
    }

    /// Indicator vector of length `k`.
    pub fn indicator(&self, k: usize) -> Vec<Scalar> {
        (1..=k)
            .map(|i| if self.contains(i) { int(1) } else { int(0) })
            .collect()
    }

    /// Left multiplication by the `i`-th generator:
    /// `g_i g_A = sign * g_{A + i}`, zero when `i` already occurs.
    pub fn insert_front(&self, i: usize) -> Option<(i64, OddSet)> {
        if self.contains(i) {
            return None;
        }
        let sign = if self.count_below(i).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, OddSet(self.0 | 1 << (i - 1))))
    }

    /// Left interior product by the `i`-th odd derivation:
    /// `d_i g_A = sign * g_{A - i}`, zero when `i` is absent.
    pub fn remove_front(&self, i: usize) -> Option<(i64, OddSet)> {
        if !self.contains(i) {
            return None;
        }
        let sign = if self.count_below(i).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, OddSet(self.0 & !(1 << (i - 1)))))
    }

    /// Removal counted from the right end: `sign = (-1)^{#{a in A : a > i}}`.
    pub fn remove_back(&self, i: usize) -> Option<(i64, OddSet)> {
        if !self.contains(i) {
            return None;
        }
        let sign = if self.count_above(i).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, OddSet(self.0 & !(1 << (i - 1)))))
    }

    /// Insertion counted from the right end: `sign = (-1)^{#{a in A : a > i}}`.
    pub fn insert_back(&self, i: usize) -> Option<(i64, OddSet)> {
        if self.contains(i) {
            return None;
        }
        let sign = if self.count_above(i).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, OddSet(self.0 | 1 << (i - 1))))
    }

    /// Product `g_A g_B = sign * g_{A | B}`, zero when the sets meet.
    /// The sign counts the inversions `(a, b), a in A, b in B, a > b`.
    pub fn merge(&self, other: &OddSet) -> Option<(i64, OddSet)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0;
        for b in other.iter() {
            inversions += self.count_above(b);
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((sign, OddSet(self.0 | other.0)))
    }
}

impl fmt::Display for OddSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
