//! Super Weyl algebras `K_{m,n}^+` and `K_{m,n}`.
//!
//! Elements are linear combinations of normal-ordered monomials
//! `t^a xi_I dt^b dxi_J`. Multiplication reorders products back into normal
//! form using `dt_i t_i = t_i dt_i + 1`, `dxi_j xi_j = 1 - xi_j dxi_j` and
//! supercommutativity of disjoint factors with Koszul signs.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::{OddSet, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::scalar::{falling_factorial, int, Scalar};

/// Whether the even variables are polynomial (`+` algebras) or Laurent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Polynomial,
    Laurent,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Polynomial => write!(f, "plus"),
            Variant::Laurent => write!(f, "laurent"),
        }
    }
}

/// Numbers of even and odd variables, plus the variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraShape {
    pub m: usize,
    pub n: usize,
    pub variant: Variant,
}

impl AlgebraShape {
    pub fn new(m: usize, n: usize, variant: Variant) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidDescriptor("need m + n >= 1".into()));
        }
        if n > 32 {
            return Err(Error::InvalidDescriptor("at most 32 odd variables".into()));
        }
        Ok(AlgebraShape { m, n, variant })
    }

    pub fn plus(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Variant::Polynomial)
    }

    pub fn laurent(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Variant::Laurent)
    }

    /// A legal even exponent vector for this variant?
    pub fn admits_t_exp(&self, alpha: &[i64]) -> bool {
        alpha.len() == self.m
            && (self.variant == Variant::Laurent || alpha.iter().all(|&a| a >= 0))
    }
}

/// A normal-ordered monomial `t^a xi_I dt^b dxi_J`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub t_exp: Vec<i64>,
    pub xi: OddSet,
    pub dt_exp: Vec<u64>,
    pub dxi: OddSet,
    n_odd: u8,
}

impl WeylMonomial {
    pub fn new(t_exp: Vec<i64>, xi: OddSet, dt_exp: Vec<u64>, dxi: OddSet, n: usize) -> Self {
        debug_assert_eq!(t_exp.len(), dt_exp.len());
        WeylMonomial { t_exp, xi, dt_exp, dxi, n_odd: n as u8 }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::new(vec![0; m], OddSet::empty(), vec![0; m], OddSet::empty(), n)
    }

    pub fn t(i: usize, m: usize, n: usize) -> Self {
        let mut mono = Self::one(m, n);
        mono.t_exp[i - 1] = 1;
        mono
    }

    pub fn xi(j: usize, m: usize, n: usize) -> Self {
        let mut mono = Self::one(m, n);
        mono.xi = OddSet::from_iter([j]);
        mono
    }

    pub fn dt(i: usize, m: usize, n: usize) -> Self {
        let mut mono = Self::one(m, n);
        mono.dt_exp[i - 1] = 1;
        mono
    }

    pub fn dxi(j: usize, m: usize, n: usize) -> Self {
        let mut mono = Self::one(m, n);
        mono.dxi = OddSet::from_iter([j]);
        mono
    }

    pub fn num_even(&self) -> usize {
        self.t_exp.len()
    }

    pub fn num_odd(&self) -> usize {
        self.n_odd as usize
    }

    fn same_dims(&self, other: &Self) -> Result<()> {
        if self.num_even() != other.num_even() || self.n_odd != other.n_odd {
            return Err(Error::ShapeMismatch(format!(
                "({},{}) vs ({},{})",
                self.num_even(),
                self.n_odd,
                other.num_even(),
                other.n_odd
            )));
        }
        Ok(())
    }
}

impl BasisKey for WeylMonomial {
    fn parity(&self) -> Parity {
        Parity::from_count(self.xi.len() + self.dxi.len())
    }

    fn weight(&self) -> Weight {
        let n = self.num_odd();
        let mut w: Vec<Scalar> = self
            .t_exp
            .iter()
            .zip(&self.dt_exp)
            .map(|(&a, &b)| int(a - b as i64))
            .collect();
        for j in 1..=n {
            let x = i64::from(self.xi.contains(j)) - i64::from(self.dxi.contains(j));
            w.push(int(x));
        }
        Weight(w)
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, &a) in self.t_exp.iter().enumerate() {
            if a == 1 {
                parts.push(format!("t{}", i + 1));
            } else if a != 0 {
                parts.push(format!("t{}^{}", i + 1, a));
            }
        }
        for j in self.xi.iter() {
            parts.push(format!("xi{j}"));
        }
        for (i, &b) in self.dt_exp.iter().enumerate() {
            if b == 1 {
                parts.push(format!("d/dt{}", i + 1));
            } else if b != 0 {
                parts.push(format!("(d/dt{})^{}", i + 1, b));
            }
        }
        for j in self.dxi.iter() {
            parts.push(format!("d/dxi{j}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finite linear combination of normal-ordered monomials.
pub type WeylElement = GradedVector<WeylMonomial>;

/// Right-multiply a monomial by `t_i^c`, renormalizing past `dt_i^b` via
/// `dt^b t^c = sum_k C(b,k) (c)_k t^{c-k} dt^{b-k}` (falling factorial, valid
/// for negative `c` in the Laurent algebra).
fn append_t_power(mono: &WeylMonomial, i: usize, c: i64, out: &mut WeylElement, scale: &Scalar) {
    if c == 0 {
        out.add_term(mono.clone(), scale.clone());
        return;
    }
    let b = mono.dt_exp[i - 1];
    for k in 0..=b {
        let coeff = crate::scalar::binom(&int(b as i64), k) * falling_factorial(&int(c), k);
        if coeff.is_zero() {
            continue;
        }
        let mut next = mono.clone();
        next.t_exp[i - 1] += c - k as i64;
        next.dt_exp[i - 1] = b - k;
        out.add_term(next, scale * coeff);
    }
}

/// Right-multiply a monomial by `xi_l`:
/// `dxi_J xi_l = (-1)^{|J|} xi_l dxi_J + [l in J] (-1)^{#{j in J: j > l}} dxi_{J - l}`.
fn append_xi(mono: &WeylMonomial, l: usize, out: &mut WeylElement, scale: &Scalar) {
    if let Some((s1, xi)) = mono.xi.merge(&OddSet::from_iter([l])) {
        let sign = s1 * mono.dxi.parity().sign();
        let mut next = mono.clone();
        next.xi = xi;
        out.add_term(next, scale * int(sign));
    }
    if let Some((s2, dxi)) = mono.dxi.remove_back(l) {
        let mut next = mono.clone();
        next.dxi = dxi;
        out.add_term(next, scale * int(s2));
    }
}

fn append_dxi(mono: &WeylMonomial, l: usize, out: &mut WeylElement, scale: &Scalar) {
    if let Some((s, dxi)) = mono.dxi.insert_back(l) {
        let mut next = mono.clone();
        next.dxi = dxi;
        out.add_term(next, scale * int(s));
    }
}

/// Normal-ordered product of two monomials.
pub fn weyl_mono_multiply(a: &WeylMonomial, b: &WeylMonomial) -> Result<WeylElement> {
    a.same_dims(b)?;
    let mut acc = WeylElement::term(a.clone(), Scalar::one());
    // append b's factors in normal order: t^c, xi_K, dt^d, dxi_L
    for (i, &c) in b.t_exp.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut next = WeylElement::zero();
        for (mono, coeff) in acc.iter() {
            append_t_power(mono, i + 1, c, &mut next, coeff);
        }
        acc = next;
    }
    for l in b.xi.iter() {
        let mut next = WeylElement::zero();
        for (mono, coeff) in acc.iter() {
            append_xi(mono, l, &mut next, coeff);
        }
        acc = next;
    }
    if b.dt_exp.iter().any(|&d| d != 0) {
        let mut next = WeylElement::zero();
        for (mono, coeff) in acc.iter() {
            let mut m2 = mono.clone();
            for (i, &d) in b.dt_exp.iter().enumerate() {
                m2.dt_exp[i] += d;
            }
            next.add_term(m2, coeff.clone());
        }
        acc = next;
    }
    for l in b.dxi.iter() {
        let mut next = WeylElement::zero();
        for (mono, coeff) in acc.iter() {
            append_dxi(mono, l, &mut next, coeff);
        }
        acc = next;
    }
    Ok(acc)
}

/// Bilinear extension of the monomial product.
pub fn weyl_multiply(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    let mut out = WeylElement::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let prod = weyl_mono_multiply(ma, mb)?;
            out.add_scaled(&(ca * cb), &prod);
        }
    }
    Ok(out)
}
