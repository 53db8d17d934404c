//! The general linear Lie superalgebra `gl(m,n)` of matrix units.

use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{koszul, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::scalar::{int, Scalar};

/// The matrix unit `E_{row,col}`, indices `1..m+n`; odd iff exactly one index
/// lies in the odd block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlGenerator {
    pub row: usize,
    pub col: usize,
    m: u8,
    n: u8,
}

impl GlGenerator {
    pub fn new(row: usize, col: usize, m: usize, n: usize) -> Result<Self> {
        if row < 1 || col < 1 || row > m + n || col > m + n {
            return Err(Error::ShapeMismatch(format!(
                "E[{row},{col}] out of range for gl({m},{n})"
            )));
        }
        Ok(GlGenerator { row, col, m: m as u8, n: n as u8 })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m as usize, self.n as usize)
    }

    fn odd_index(&self, i: usize) -> bool {
        i > self.m as usize
    }

    /// Z-grade under the short grading: -1 for `E_{m+j,i}`, +1 for
    /// `E_{i,m+j}`, 0 on the even part.
    pub fn z_grade(&self) -> i8 {
        match (self.odd_index(self.row), self.odd_index(self.col)) {
            (true, false) => -1,
            (false, true) => 1,
            _ => 0,
        }
    }
}

impl BasisKey for GlGenerator {
    fn parity(&self) -> Parity {
        if self.z_grade() == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The root `eps_row - eps_col`.
    fn weight(&self) -> Weight {
        let total = (self.m + self.n) as usize;
        let mut w = vec![int(0); total];
        w[self.row - 1] += int(1);
        w[self.col - 1] -= int(1);
        Weight(w)
    }
}

impl fmt::Display for GlGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.row, self.col)
    }
}

/// Super-commutator of matrix units:
/// `[E_{a,b}, E_{c,d}] = delta_{b,c} E_{a,d} - (-1)^{|x||y|} delta_{a,d} E_{c,b}`.
pub fn gl_bracket(x: &GlGenerator, y: &GlGenerator) -> Result<GradedVector<GlGenerator>> {
    if (x.m, x.n) != (y.m, y.n) {
        return Err(Error::ShapeMismatch("gl generators differ in (m,n)".into()));
    }
    let mut out = GradedVector::zero();
    if x.col == y.row {
        out.add_term(GlGenerator { row: x.row, col: y.col, m: x.m, n: x.n }, int(1));
    }
    if x.row == y.col {
        let sign = koszul(x.parity(), y.parity());
        out.add_term(
            GlGenerator { row: y.row, col: x.col, m: x.m, n: x.n },
            int(-sign),
        );
    }
    Ok(out)
}

/// All matrix units of `gl(m,n)` in a stable order.
pub fn gl_basis(m: usize, n: usize) -> Vec<GlGenerator> {
    let mut out = Vec::new();
    for row in 1..=m + n {
        for col in 1..=m + n {
            out.push(GlGenerator { row, col, m: m as u8, n: n as u8 });
        }
    }
    out
}

/// `c * E` as a one-term vector; convenience for building brackets.
pub fn gl_term(e: GlGenerator, c: Scalar) -> GradedVector<GlGenerator> {
    GradedVector::term(e, c)
}
