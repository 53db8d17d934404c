//! Simple weight modules `P` over the super Weyl algebras.
//!
//! Every simple weight `K_{m,n}^+`- or `K_{m,n}`-module factors as
//! `P = P_1 (x) Lambda(n)` with `P_1` a tensor product of one weight line per
//! even variable. A weight line is one of the simple weight modules of the
//! rank-one Weyl algebra: `t^c C[t^{±1}]` with `c` non-integral, `C[t]`,
//! `C[t^{±1}]/C[t]`, or — in the Laurent algebra — `t^c C[t^{±1}]` for any
//! `c`. Basis vectors are `y(c') (x) xi_I` indexed by a support point and an
//! odd subset; the even action is `t_j y(c') = y(c'+e_j)`,
//! `dt_j y(c') = c'_j y(c'-e_j)` with off-support targets equal to zero.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grading::{OddSet, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::scalar::{
    falling_factorial, format_scalar, format_scalar_vec, is_neg_int, is_nonneg_int, Scalar,
};
use crate::weyl::{AlgebraShape, Variant, WeylElement, WeylMonomial};

/// One simple weight module over the rank-one (super) Weyl algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightLine {
    /// `t^c C[t^{±1}]`, `c` not an integer; support `c + Z`.
    ShiftedLaurent(Scalar),
    /// `C[t]`; support `Z_+`. Polynomial variant only.
    PolyLine,
    /// `C[t^{±1}] / C[t]`; support `-N`. Polynomial variant only.
    QuotientLine,
    /// `t^c C[t^{±1}]` for arbitrary `c`; Laurent variant only.
    FullLaurent(Scalar),
}

impl WeightLine {
    /// The simple weight line whose support contains the given point; this is
    /// the support rule for `W(lambda)` factors.
    pub fn canonical_for(point: &Scalar) -> WeightLine {
        if !point.is_integer() {
            WeightLine::ShiftedLaurent(point.clone())
        } else if is_nonneg_int(point) {
            WeightLine::PolyLine
        } else {
            WeightLine::QuotientLine
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match self {
            WeightLine::ShiftedLaurent(c) | WeightLine::FullLaurent(c) => (x - c).is_integer(),
            WeightLine::PolyLine => is_nonneg_int(x),
            WeightLine::QuotientLine => is_neg_int(x),
        }
    }

    /// A canonical support point, used to anchor weight windows.
    pub fn base_point(&self) -> Scalar {
        match self {
            WeightLine::ShiftedLaurent(c) | WeightLine::FullLaurent(c) => c.clone(),
            WeightLine::PolyLine => Scalar::zero(),
            WeightLine::QuotientLine => -Scalar::from_integer(1.into()),
        }
    }

    fn validate(&self, variant: Variant) -> Result<()> {
        match self {
            WeightLine::ShiftedLaurent(c) => {
                if c.is_integer() {
                    return Err(Error::InvalidDescriptor(format!(
                        "shifted Laurent line requires a non-integer shift, got {}",
                        format_scalar(c)
                    )));
                }
            }
            WeightLine::PolyLine | WeightLine::QuotientLine => {
                if variant == Variant::Laurent {
                    return Err(Error::InvalidDescriptor(
                        "polynomial-type line in a Laurent algebra".into(),
                    ));
                }
            }
            WeightLine::FullLaurent(_) => {
                if variant == Variant::Polynomial {
                    return Err(Error::InvalidDescriptor(
                        "full Laurent line in a polynomial algebra".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for WeightLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightLine::ShiftedLaurent(c) => write!(f, "shift:{}", format_scalar(c)),
            WeightLine::PolyLine => write!(f, "poly"),
            WeightLine::QuotientLine => write!(f, "quot"),
            WeightLine::FullLaurent(c) => write!(f, "laurent:{}", format_scalar(c)),
        }
    }
}

/// A basis vector `y(c') (x) xi_I` of `P`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PKey {
    pub lam: Vec<Scalar>,
    pub xi: OddSet,
    n_odd: u8,
    parity: Parity,
}

impl BasisKey for PKey {
    fn parity(&self) -> Parity {
        self.parity
    }

    fn weight(&self) -> Weight {
        let mut w = self.lam.clone();
        w.extend(self.xi.indicator(self.n_odd as usize));
        Weight(w)
    }
}

impl fmt::Display for PKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in self.xi.iter() {
            write!(f, "xi{j}")?;
        }
        if self.xi.is_empty() && self.lam.is_empty() {
            return write!(f, "1");
        }
        if !self.lam.is_empty() {
            write!(f, "y({})", format_scalar_vec(&self.lam))?;
        }
        Ok(())
    }
}

/// Finite data determining a simple weight module `P`, with the optional
/// parity change `Pi` and the sign twist that multiplies odd operators
/// by `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PModule {
    pub shape: AlgebraShape,
    pub lines: Vec<WeightLine>,
    pub parity_shift: bool,
    pub sign_twist: bool,
}

impl PModule {
    pub fn new(shape: AlgebraShape, lines: Vec<WeightLine>) -> Result<Self> {
        if lines.len() != shape.m {
            return Err(Error::InvalidDescriptor(format!(
                "expected {} weight lines, got {}",
                shape.m,
                lines.len()
            )));
        }
        for line in &lines {
            line.validate(shape.variant)?;
        }
        Ok(PModule { shape, lines, parity_shift: false, sign_twist: false })
    }

    /// The natural module `A_{m,n}^+` (all lines polynomial) or `A_{m,n}`
    /// (all lines Laurent through 0).
    pub fn natural(shape: AlgebraShape) -> Result<Self> {
        let line = match shape.variant {
            Variant::Polynomial => WeightLine::PolyLine,
            Variant::Laurent => WeightLine::FullLaurent(Scalar::zero()),
        };
        Self::new(shape, vec![line; shape.m])
    }

    pub fn parity_changed(&self) -> Self {
        let mut p = self.clone();
        p.parity_shift = !p.parity_shift;
        p
    }

    pub fn sign_twisted(&self) -> Self {
        let mut p = self.clone();
        p.sign_twist = !p.sign_twist;
        p
    }

    /// Is this the natural module up to parity change? (The simplicity
    /// dichotomy for `F(P, L(V(0) (x) C)) = P` hinges on exactly this.)
    pub fn is_natural(&self) -> bool {
        self.lines.iter().all(|l| match l {
            WeightLine::PolyLine => true,
            WeightLine::FullLaurent(c) => c.is_integer(),
            _ => false,
        }) && !self.sign_twist
    }

    pub fn key(&self, lam: Vec<Scalar>, xi: OddSet) -> Option<PKey> {
        debug_assert_eq!(lam.len(), self.shape.m);
        if !self.in_support(&lam) {
            return None;
        }
        let parity = xi.parity().flipped_if(self.parity_shift);
        Some(PKey { lam, xi, n_odd: self.shape.n as u8, parity })
    }

    pub fn in_support(&self, lam: &[Scalar]) -> bool {
        lam.iter().zip(&self.lines).all(|(x, line)| line.contains(x))
    }

    /// A canonical support point, anchoring weight windows.
    pub fn base_point(&self) -> Vec<Scalar> {
        self.lines.iter().map(WeightLine::base_point).collect()
    }

    /// All keys with even part within `|delta|_1 <= radius` of the base
    /// point, every odd subset.
    pub fn window_keys(&self, radius: i64) -> Vec<PKey> {
        let base = self.base_point();
        let mut out = Vec::new();
        for delta in crate::mlambda::integer_vectors_up_to(self.shape.m, radius) {
            let lam: Vec<Scalar> = base
                .iter()
                .zip(&delta)
                .map(|(x, &d)| x + Scalar::from_integer(d.into()))
                .collect();
            if !self.in_support(&lam) {
                continue;
            }
            for mask in 0..(1u32 << self.shape.n) {
                if let Some(k) = self.key(lam.clone(), OddSet(mask)) {
                    out.push(k);
                }
            }
        }
        out.sort();
        out
    }

    /// The basis keys of `P` with the given weight: at most one, since the
    /// odd coordinates pin down `xi_I` and the even coordinates pin `y(c')`.
    pub fn weight_basis(&self, weight: &Weight) -> Vec<PKey> {
        let (m, n) = (self.shape.m, self.shape.n);
        if weight.len() != m + n {
            return Vec::new();
        }
        let mut xi = OddSet::empty();
        for j in 1..=n {
            let c = &weight.0[m + j - 1];
            if c.is_zero() {
                continue;
            } else if *c == Scalar::from_integer(1.into()) {
                xi = OddSet(xi.0 | 1 << (j - 1));
            } else {
                return Vec::new();
            }
        }
        let lam: Vec<Scalar> = weight.0[..m].to_vec();
        self.key(lam, xi).into_iter().collect()
    }

    fn check_shape(&self, x: &WeylMonomial) -> Result<()> {
        if x.num_even() != self.shape.m || x.num_odd() != self.shape.n {
            return Err(Error::ShapeMismatch("operator dims differ from module".into()));
        }
        if !self.shape.admits_t_exp(&x.t_exp) {
            return Err(Error::ShapeMismatch(
                "negative even exponent in polynomial variant".into(),
            ));
        }
        Ok(())
    }

    /// Apply one normal-ordered monomial to one basis key.
    fn act_mono_key(&self, x: &WeylMonomial, key: &PKey) -> Option<(Scalar, PKey)> {
        // dxi_L then xi_K on the exterior factor; descending order, since the
        // rightmost factor of the normal-ordered monomial acts first
        let mut sign = 1i64;
        let mut xi = key.xi;
        let mut dxi_desc: Vec<usize> = x.dxi.iter().collect();
        dxi_desc.reverse();
        for l in dxi_desc {
            let (s, rest) = xi.remove_front(l)?;
            sign *= s;
            xi = rest;
        }
        let mut xi_desc: Vec<usize> = x.xi.iter().collect();
        xi_desc.reverse();
        for k in xi_desc {
            let (s, bigger) = xi.insert_front(k)?;
            sign *= s;
            xi = bigger;
        }
        // dt^b then t^a on the even factor; the falling factorial absorbs the
        // support truncation on the way down, the final membership test the
        // one on the way up
        let mut coeff = Scalar::from_integer(sign.into());
        let mut lam = key.lam.clone();
        for ((c, &b), &a) in lam.iter_mut().zip(&x.dt_exp).zip(&x.t_exp) {
            if b > 0 {
                coeff *= falling_factorial(c, b);
                if coeff.is_zero() {
                    return None;
                }
                *c -= Scalar::from_integer(b.into());
            }
            if a != 0 {
                *c += Scalar::from_integer(a.into());
            }
        }
        if self.sign_twist && x.parity().is_odd() {
            coeff = -coeff;
        }
        let key = self.key(lam, xi)?;
        Some((coeff, key))
    }

    /// Exact image of a vector under a Weyl algebra element.
    pub fn act(&self, x: &WeylElement, u: &GradedVector<PKey>) -> Result<GradedVector<PKey>> {
        let mut out = GradedVector::zero();
        for (mono, c) in x.iter() {
            self.check_shape(mono)?;
            for (key, d) in u.iter() {
                if let Some((coeff, image)) = self.act_mono_key(mono, key) {
                    out.add_term(image, coeff * c * d);
                }
            }
        }
        Ok(out)
    }

    pub fn act_mono(
        &self,
        x: &WeylMonomial,
        u: &GradedVector<PKey>,
    ) -> Result<GradedVector<PKey>> {
        self.act(&WeylElement::unit(x.clone()), u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn poly_shape(m: usize, n: usize) -> AlgebraShape {
        AlgebraShape::plus(m, n).unwrap()
    }

    fn single(p: &PModule, lam: Vec<Scalar>, xi: OddSet) -> GradedVector<PKey> {
        GradedVector::unit(p.key(lam, xi).unwrap())
    }

    #[test]
    fn poly_line_kills_constants() {
        // dt1 y(0) = 0 in C[t]
        let p = PModule::new(poly_shape(1, 1), vec![WeightLine::PolyLine]).unwrap();
        let u = single(&p, vec![int(0)], OddSet::empty());
        let img = p.act_mono(&WeylMonomial::dt(1, 1, 1), &u).unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn quotient_line_top_vector_dies_upward() {
        // t1 y(-1) = 0 in C[t^{±1}]/C[t]
        let p = PModule::new(poly_shape(1, 0), vec![WeightLine::QuotientLine]).unwrap();
        let u = single(&p, vec![int(-1)], OddSet::empty());
        let img = p.act_mono(&WeylMonomial::t(1, 1, 0), &u).unwrap();
        assert!(img.is_zero());
        // dt1 y(-1) = -y(-2)
        let img = p.act_mono(&WeylMonomial::dt(1, 1, 0), &u).unwrap();
        assert_eq!(img, single(&p, vec![int(-2)], OddSet::empty()).scaled(&int(-1)));
    }

    #[test]
    fn shifted_line_action() {
        // dt1 y(1/2) = (1/2) y(-1/2)
        let p =
            PModule::new(poly_shape(1, 0), vec![WeightLine::ShiftedLaurent(frac(1, 2))]).unwrap();
        let u = single(&p, vec![frac(1, 2)], OddSet::empty());
        let img = p.act_mono(&WeylMonomial::dt(1, 1, 0), &u).unwrap();
        assert_eq!(img, single(&p, vec![frac(-1, 2)], OddSet::empty()).scaled(&frac(1, 2)));
    }

    #[test]
    fn weight_basis_lookup() {
        // polyLine m=1, n=1: weight (2, 1) -> y(2) xi1
        let p = PModule::new(poly_shape(1, 1), vec![WeightLine::PolyLine]).unwrap();
        let keys = p.weight_basis(&Weight(vec![int(2), int(1)]));
        assert_eq!(keys.len(), 1);
        assert_eq!(keys[0].lam, vec![int(2)]);
        assert!(keys[0].xi.contains(1));
        // shiftedLaurent(1/2): weight (0, 0) is off-support
        let p =
            PModule::new(poly_shape(1, 1), vec![WeightLine::ShiftedLaurent(frac(1, 2))]).unwrap();
        assert!(p.weight_basis(&Weight(vec![int(0), int(0)])).is_empty());
        // quotientLine: weight (0,) is off-support
        let p = PModule::new(poly_shape(1, 0), vec![WeightLine::QuotientLine]).unwrap();
        assert!(p.weight_basis(&Weight(vec![int(0)])).is_empty());
    }

    #[test]
    fn module_axiom_against_multiplication() {
        // p_act(a*b, u) == p_act(a, p_act(b, u)) on a mixed example
        let shape = poly_shape(2, 2);
        let p = PModule::new(
            shape,
            vec![WeightLine::PolyLine, WeightLine::ShiftedLaurent(frac(1, 3))],
        )
        .unwrap();
        let u0 = single(&p, vec![int(2), frac(1, 3)], OddSet::from_iter([2]));
        let mut a = WeylMonomial::one(2, 2);
        a.t_exp[0] = 1;
        a.dxi = OddSet::from_iter([2]);
        let mut b = WeylMonomial::one(2, 2);
        b.dt_exp[0] = 2;
        b.t_exp[1] = 1;
        b.xi = OddSet::from_iter([1]);
        let ab = crate::weyl::weyl_mono_multiply(&a, &b).unwrap();
        let lhs = p.act(&ab, &u0).unwrap();
        let rhs = p.act_mono(&a, &p.act_mono(&b, &u0).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn weight_additivity_under_action() {
        let p = PModule::new(poly_shape(1, 2), vec![WeightLine::PolyLine]).unwrap();
        let u = single(&p, vec![int(1)], OddSet::from_iter([1]));
        let mut x = WeylMonomial::one(1, 2);
        x.t_exp[0] = 2;
        x.dt_exp[0] = 1;
        x.xi = OddSet::from_iter([2]);
        x.dxi = OddSet::from_iter([1]);
        let img = p.act_mono(&x, &u).unwrap();
        assert!(!img.is_zero());
        let expect = u
            .homogeneous_weight()
            .unwrap()
            .unwrap()
            .add(&x.weight());
        assert_eq!(img.homogeneous_weight().unwrap().unwrap(), expect);
    }

    #[test]
    fn sign_twist_scales_odd_operators() {
        let p = PModule::new(poly_shape(1, 2), vec![WeightLine::PolyLine]).unwrap();
        let pt = p.sign_twisted();
        let u = single(&p, vec![int(1)], OddSet::from_iter([1, 2]));
        let odd = WeylMonomial::dxi(2, 1, 2);
        let even = WeylMonomial::t(1, 1, 2);
        assert_eq!(
            pt.act_mono(&odd, &u).unwrap(),
            p.act_mono(&odd, &u).unwrap().scaled(&int(-1))
        );
        assert_eq!(pt.act_mono(&even, &u).unwrap(), p.act_mono(&even, &u).unwrap());
    }

    #[test]
    fn parity_change_flips_keys_only() {
        let p = PModule::new(poly_shape(1, 1), vec![WeightLine::PolyLine]).unwrap();
        let pi = p.parity_changed();
        let k = p.key(vec![int(0)], OddSet::from_iter([1])).unwrap();
        let k_pi = pi.key(vec![int(0)], OddSet::from_iter([1])).unwrap();
        assert_eq!(k.parity(), Parity::Odd);
        assert_eq!(k_pi.parity(), Parity::Even);
        assert_eq!(k.weight(), k_pi.weight());
    }

    #[test]
    fn descriptor_validation() {
        assert!(PModule::new(
            poly_shape(1, 0),
            vec![WeightLine::ShiftedLaurent(int(2))]
        )
        .is_err());
        assert!(PModule::new(poly_shape(1, 0), vec![WeightLine::FullLaurent(int(0))]).is_err());
        let lsh = AlgebraShape::laurent(1, 0).unwrap();
        assert!(PModule::new(lsh, vec![WeightLine::QuotientLine]).is_err());
        assert!(PModule::new(lsh, vec![WeightLine::FullLaurent(int(0))]).is_ok());
    }
}
