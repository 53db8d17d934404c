//! Witt superalgebras `W_{m,n}^+` and `W_{m,n}`.
//!
//! The standard basis consists of the superderivations `t^a xi_I d` with
//! `d` one of `d/dt_i`, `d/dxi_j`; `a` ranges over `Z_+^m` in the polynomial
//! variant and `Z^m` in the Laurent variant. The bracket is
//!
//! `[t^a xi_I d, t^b xi_J d'] = t^a xi_I d(t^b xi_J) d'
//!    - (-1)^{(|I|+|d|)(|J|+|d'|)} t^b xi_J d'(t^a xi_I) d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{koszul, OddSet, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::scalar::{int, Scalar};
use crate::weyl::{AlgebraShape, Variant, WeylMonomial};

/// The derivation tail of a Witt basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Der {
    /// `d/dt_i`, 1-based.
    T(usize),
    /// `d/dxi_j`, 1-based.
    Xi(usize),
}

impl Der {
    pub fn parity(&self) -> Parity {
        match self {
            Der::T(_) => Parity::Even,
            Der::Xi(_) => Parity::Odd,
        }
    }
}

/// A standard basis element `t^a xi_I d` of the Witt superalgebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WittGenerator {
    pub t_exp: Vec<i64>,
    pub xi: OddSet,
    pub der: Der,
    n_odd: u8,
}

impl WittGenerator {
    pub fn new(t_exp: Vec<i64>, xi: OddSet, der: Der, shape: &AlgebraShape) -> Result<Self> {
        if t_exp.len() != shape.m || !shape.admits_t_exp(&t_exp) {
            return Err(Error::ShapeMismatch(format!(
                "exponent {:?} illegal for m={} {}",
                t_exp, shape.m, shape.variant
            )));
        }
        match der {
            Der::T(i) if !(1..=shape.m).contains(&i) => {
                return Err(Error::ShapeMismatch(format!("d/dt{i} out of range")))
            }
            Der::Xi(j) if !(1..=shape.n).contains(&j) => {
                return Err(Error::ShapeMismatch(format!("d/dxi{j} out of range")))
            }
            _ => {}
        }
        if xi.iter().any(|j| j > shape.n) {
            return Err(Error::ShapeMismatch("xi index out of range".into()));
        }
        Ok(WittGenerator { t_exp, xi, der, n_odd: shape.n as u8 })
    }

    pub fn num_even(&self) -> usize {
        self.t_exp.len()
    }

    pub fn num_odd(&self) -> usize {
        self.n_odd as usize
    }

    /// Total degree `|a|_1 + |I|`, the measure used for bounded enumeration.
    pub fn degree(&self) -> i64 {
        self.t_exp.iter().map(|a| a.abs()).sum::<i64>() + self.xi.len() as i64
    }

    /// The underlying Weyl monomial (same symbol viewed inside `K_{m,n}`).
    pub fn as_weyl(&self) -> WeylMonomial {
        let m = self.num_even();
        let n = self.num_odd();
        let mut dt = vec![0u64; m];
        let mut dxi = OddSet::empty();
        match self.der {
            Der::T(i) => dt[i - 1] = 1,
            Der::Xi(j) => dxi = OddSet::from_iter([j]),
        }
        WeylMonomial::new(self.t_exp.clone(), self.xi, dt, dxi, n)
    }

    fn same_dims(&self, other: &Self) -> Result<()> {
        if self.num_even() != other.num_even() || self.n_odd != other.n_odd {
            return Err(Error::ShapeMismatch("bracket operands differ in (m,n)".into()));
        }
        Ok(())
    }
}

impl BasisKey for WittGenerator {
    fn parity(&self) -> Parity {
        self.xi.parity() + self.der.parity()
    }

    fn weight(&self) -> Weight {
        let m = self.num_even();
        let n = self.num_odd();
        let mut w: Vec<Scalar> = self.t_exp.iter().map(|&a| int(a)).collect();
        for j in 1..=n {
            w.push(int(i64::from(self.xi.contains(j))));
        }
        match self.der {
            Der::T(i) => w[i - 1] -= int(1),
            Der::Xi(j) => w[m + j - 1] -= int(1),
        }
        Weight(w)
    }
}

impl fmt::Display for WittGenerator {
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
        match self.der {
            Der::T(i) => parts.push(format!("d/dt{i}")),
            Der::Xi(j) => parts.push(format!("d/dxi{j}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// `t^a xi_I d` applied to the algebra element `t^b xi_J`, expanded as a sum
/// of plain monomials `(coeff, t_exp, xi)`.
fn derive_monomial(
    t_exp: &[i64],
    xi: &OddSet,
    der: Der,
    b_exp: &[i64],
    b_xi: &OddSet,
) -> Option<(Scalar, Vec<i64>, OddSet)> {
    match der {
        Der::T(i) => {
            let c = b_exp[i - 1];
            if c == 0 {
                return None;
            }
            let mut exp: Vec<i64> = t_exp.iter().zip(b_exp).map(|(a, b)| a + b).collect();
            exp[i - 1] -= 1;
            let (sign, xs) = xi.merge(b_xi)?;
            Some((int(c) * int(sign), exp, xs))
        }
        Der::Xi(j) => {
            let (s1, rest) = b_xi.remove_front(j)?;
            let (s2, xs) = xi.merge(&rest)?;
            let exp: Vec<i64> = t_exp.iter().zip(b_exp).map(|(a, b)| a + b).collect();
            Some((int(s1 * s2), exp, xs))
        }
    }
}

/// The Lie superbracket of two standard basis elements, expanded exactly in
/// the standard basis.
pub fn witt_bracket(
    x: &WittGenerator,
    y: &WittGenerator,
) -> Result<GradedVector<WittGenerator>> {
    x.same_dims(y)?;
    let n = x.num_odd();
    let mut out = GradedVector::zero();
    if let Some((c, exp, xs)) = derive_monomial(&x.t_exp, &x.xi, x.der, &y.t_exp, &y.xi) {
        out.add_term(
            WittGenerator { t_exp: exp, xi: xs, der: y.der, n_odd: n as u8 },
            c,
        );
    }
    let sign = koszul(x.parity(), y.parity());
    if let Some((c, exp, xs)) = derive_monomial(&y.t_exp, &y.xi, y.der, &x.t_exp, &x.xi) {
        out.add_term(
            WittGenerator { t_exp: exp, xi: xs, der: x.der, n_odd: n as u8 },
            c * int(-sign),
        );
    }
    Ok(out)
}

/// Bilinear extension of the bracket to linear combinations.
pub fn witt_bracket_elem(
    x: &GradedVector<WittGenerator>,
    y: &GradedVector<WittGenerator>,
) -> Result<GradedVector<WittGenerator>> {
    let mut out = GradedVector::zero();
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            let b = witt_bracket(kx, ky)?;
            out.add_scaled(&(cx * cy), &b);
        }
    }
    Ok(out)
}

fn exponents_up_to(m: usize, deg: i64, variant: Variant) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for partial in &out {
            let used: i64 = partial.iter().map(|a: &i64| a.abs()).sum();
            let room = deg - used;
            let lo = if variant == Variant::Laurent { -room } else { 0 };
            for a in lo..=room {
                let mut e = partial.clone();
                e.push(a);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// All standard basis elements of total degree `<= deg`, in a stable order.
pub fn witt_basis_up_to_degree(shape: &AlgebraShape, deg: i64) -> Vec<WittGenerator> {
    let mut out = Vec::new();
    for t_exp in exponents_up_to(shape.m, deg, shape.variant) {
        let t_deg: i64 = t_exp.iter().map(|a| a.abs()).sum();
        for mask in 0..(1u32 << shape.n) {
            let xi = OddSet(mask);
            if t_deg + xi.len() as i64 > deg {
                continue;
            }
            for i in 1..=shape.m {
                out.push(WittGenerator {
                    t_exp: t_exp.clone(),
                    xi,
                    der: Der::T(i),
                    n_odd: shape.n as u8,
                });
            }
            for j in 1..=shape.n {
                out.push(WittGenerator {
                    t_exp: t_exp.clone(),
                    xi,
                    der: Der::Xi(j),
                    n_odd: shape.n as u8,
                });
            }
        }
    }
    out.sort();
    out
}

/// Parse the CLI generator syntax, e.g. `t1^2*xi1*d/dt1`.
pub fn parse_witt_generator(s: &str, shape: &AlgebraShape) -> Result<WittGenerator> {
    let mut t_exp = vec![0i64; shape.m];
    let mut xi = OddSet::empty();
    let mut der: Option<Der> = None;
    let bad = |msg: &str| Error::Parse(format!("`{s}`: {msg}"));
    for factor in s.split('*').map(str::trim) {
        if der.is_some() {
            return Err(bad("factors after the derivation"));
        }
        if let Some(rest) = factor.strip_prefix("d/dt") {
            let i: usize = rest.parse().map_err(|_| bad("bad d/dt index"))?;
            der = Some(Der::T(i));
        } else if let Some(rest) = factor.strip_prefix("d/dxi") {
            let j: usize = rest.parse().map_err(|_| bad("bad d/dxi index"))?;
            der = Some(Der::Xi(j));
        } else if let Some(rest) = factor.strip_prefix("xi") {
            let j: usize = rest.parse().map_err(|_| bad("bad xi index"))?;
            if j < 1 || j > shape.n || xi.contains(j) {
                return Err(bad("xi index out of range or repeated"));
            }
            xi = OddSet::from_iter(xi.iter().chain([j]));
        } else if let Some(rest) = factor.strip_prefix('t') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                None => (rest, 1),
            };
            let i: usize = idx.parse().map_err(|_| bad("bad t index"))?;
            if i < 1 || i > shape.m {
                return Err(bad("t index out of range"));
            }
            t_exp[i - 1] += exp;
        } else {
            return Err(bad("unrecognized factor"));
        }
    }
    let der = der.ok_or_else(|| bad("missing derivation d/dt<i> or d/dxi<j>"))?;
    WittGenerator::new(t_exp, xi, der, shape)
}

/// Render a bracket expansion for the CLI.
pub fn format_witt_element(v: &GradedVector<WittGenerator>) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, c) in v.iter() {
        let c_str = crate::scalar::format_scalar(c);
        if c_str == "1" {
            parts.push(format!("{k}"));
        } else if c_str == "-1" {
            parts.push(format!("-{k}"));
        } else {
            parts.push(format!("{c_str}*{k}"));
        }
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize) -> AlgebraShape {
        AlgebraShape::plus(m, n).unwrap()
    }

    fn gen(s: &str, shape: &AlgebraShape) -> WittGenerator {
        parse_witt_generator(s, shape).unwrap()
    }

    #[test]
    fn bracket_even_even() {
        // [t1 d/dt1, t1^2 d/dt1] = t1^2 d/dt1, coefficient 2 - 1
        let sh = shape(1, 1);
        let x = gen("t1*d/dt1", &sh);
        let y = gen("t1^2*d/dt1", &sh);
        let b = witt_bracket(&x, &y).unwrap();
        assert_eq!(b, GradedVector::unit(y.clone()));
    }

    #[test]
    fn bracket_odd_odd() {
        // [xi1 d/dt1, t1 d/dxi1] = xi1 d/dxi1 + t1 d/dt1
        let sh = shape(1, 1);
        let x = gen("xi1*d/dt1", &sh);
        let y = gen("t1*d/dxi1", &sh);
        let b = witt_bracket(&x, &y).unwrap();
        let mut expect = GradedVector::zero();
        expect.add_term(gen("xi1*d/dxi1", &sh), int(1));
        expect.add_term(gen("t1*d/dt1", &sh), int(1));
        assert_eq!(b, expect);
    }

    #[test]
    fn cartan_acts_by_weight() {
        // [d_i, x] = weight_i(x) * x for every basis element
        let sh = shape(2, 2);
        let d1 = gen("t1*d/dt1", &sh);
        let delta2 = gen("xi2*d/dxi2", &sh);
        for x in witt_basis_up_to_degree(&sh, 2) {
            let w = x.weight();
            let b1 = witt_bracket(&d1, &x).unwrap();
            assert_eq!(b1, GradedVector::term(x.clone(), w.0[0].clone()));
            let b2 = witt_bracket(&delta2, &x).unwrap();
            assert_eq!(b2, GradedVector::term(x.clone(), w.0[3].clone()));
        }
    }

    #[test]
    fn weight_example() {
        // t1^2 xi1 d/dt1 for m = n = 1 has weight (1, 1)
        let sh = shape(1, 1);
        let x = gen("t1^2*xi1*d/dt1", &sh);
        assert_eq!(x.weight(), Weight(vec![int(1), int(1)]));
        assert_eq!(x.parity(), Parity::Odd);
        let d1 = gen("t1*d/dt1", &sh);
        assert_eq!(d1.weight(), Weight(vec![int(0), int(0)]));
    }

    #[test]
    fn super_antisymmetry_exhaustive() {
        // all pairs: degree <= 4 on small shapes, degree <= 2 up to (3,3)
        let shapes = [
            (AlgebraShape::plus(1, 1).unwrap(), 4),
            (AlgebraShape::laurent(1, 2).unwrap(), 2),
            (AlgebraShape::plus(3, 3).unwrap(), 2),
        ];
        for (sh, deg) in shapes {
            let basis = witt_basis_up_to_degree(&sh, deg);
            for x in &basis {
                for y in &basis {
                    let xy = witt_bracket(x, y).unwrap();
                    let yx = witt_bracket(y, x).unwrap();
                    let sign = koszul(x.parity(), y.parity());
                    assert!(
                        xy.combine(&int(sign), &yx).is_zero(),
                        "antisymmetry fails for {x}, {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn super_jacobi_spot() {
        let sh = shape(2, 1);
        let x = gen("t1*xi1*d/dt2", &sh);
        let y = gen("t2*d/dxi1", &sh);
        let z = gen("xi1*d/dt1", &sh);
        let jac = |a: &WittGenerator, b: &WittGenerator, c: &WittGenerator| {
            witt_bracket_elem(&witt_bracket(a, b).unwrap(), &GradedVector::unit(c.clone()))
                .unwrap()
                .scaled(&int(koszul(a.parity(), c.parity())))
        };
        let total = jac(&x, &y, &z) + jac(&y, &z, &x) + jac(&z, &x, &y);
        assert!(total.is_zero());
    }

    #[test]
    fn polynomial_variant_rejects_negative_exponents() {
        let sh = shape(1, 0);
        assert!(WittGenerator::new(vec![-1], OddSet::empty(), Der::T(1), &sh).is_err());
        let lsh = AlgebraShape::laurent(1, 0).unwrap();
        assert!(WittGenerator::new(vec![-1], OddSet::empty(), Der::T(1), &lsh).is_ok());
    }

    #[test]
    fn parse_display_round_trip() {
        let sh = shape(2, 2);
        for s in ["t1^2*xi1*d/dt1", "d/dxi2", "t2*xi1*xi2*d/dxi1"] {
            let g = gen(s, &sh);
            assert_eq!(format!("{g}"), s);
        }
        assert!(parse_witt_generator("t1", &sh).is_err());
        assert!(parse_witt_generator("t9*d/dt1", &sh).is_err());
    }

    #[test]
    fn enumeration_respects_degree_and_variant() {
        let sh = shape(1, 1);
        let basis = witt_basis_up_to_degree(&sh, 2);
        assert!(basis.iter().all(|g| g.degree() <= 2));
        assert!(basis.iter().all(|g| g.t_exp[0] >= 0));
        let lsh = AlgebraShape::laurent(1, 1).unwrap();
        let lbasis = witt_basis_up_to_degree(&lsh, 2);
        assert!(lbasis.iter().any(|g| g.t_exp[0] < 0));
        assert!(lbasis.len() > basis.len());
    }
}
