//! `gl_n` weight modules inside `W(lambda)`: the simple submodule
//! `N(lambda)`, the quadratic condition that characterizes it, the
//! one-dimensional twist `C v_b`, and the `gl_2`-isomorphism `tau` from
//! `N(lambda) (x) C v_b` onto `N((-lam_2 - 1, -lam_1 - 1))`.
//!
//! Here `gl_n` sits inside the rank-`n` Weyl algebra via `E_{l,j} = t_l dt_j`,
//! so `E_{l,j} y(lam') = lam'_j y(lam' - e_j + e_l)` with off-support targets
//! equal to zero.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::{Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::mlambda::integer_vectors_up_to;
use crate::pmod::WeightLine;
use crate::scalar::{binom, format_scalar, format_scalar_vec, int, Scalar};

/// A basis vector `y(lam')` of a `gl_n` weight module realized in
/// `W(lambda)`, possibly tensored with a one-dimensional twist.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlnKey {
    pub lam_prime: Vec<Scalar>,
    /// `b/n`, the diagonal shift contributed by the `C v_b` factor.
    pub diag_shift: Scalar,
}

impl BasisKey for GlnKey {
    fn parity(&self) -> Parity {
        Parity::Even
    }

    fn weight(&self) -> Weight {
        Weight(
            self.lam_prime
                .iter()
                .map(|x| x + &self.diag_shift)
                .collect(),
        )
    }
}

impl fmt::Display for GlnKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y({})", format_scalar_vec(&self.lam_prime))?;
        if !self.diag_shift.is_zero() {
            write!(f, "(x)v[{}]", format_scalar(&self.diag_shift))?;
        }
        Ok(())
    }
}

/// The one-dimensional `gl_n`-module on which `sl_n` acts by zero and the
/// identity acts by `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimTwist {
    pub b: Scalar,
}

/// `N(lambda) (x) C v_b` for a `gl_n`; plain `N(lambda)` is `b = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NLambda {
    pub lam: Vec<Scalar>,
    pub twist: OneDimTwist,
    lines: Vec<WeightLine>,
}

impl NLambda {
    pub fn new(lam: Vec<Scalar>) -> Self {
        Self::twisted(lam, OneDimTwist { b: Scalar::zero() })
    }

    pub fn twisted(lam: Vec<Scalar>, twist: OneDimTwist) -> Self {
        let lines = lam.iter().map(WeightLine::canonical_for).collect();
        NLambda { lam, twist, lines }
    }

    pub fn n(&self) -> usize {
        self.lam.len()
    }

    fn diag_shift(&self) -> Scalar {
        &self.twist.b / int(self.n() as i64)
    }

    /// `|lam|`, the common coordinate sum of every support point.
    pub fn level(&self) -> Scalar {
        let mut s = Scalar::zero();
        for x in &self.lam {
            s += x;
        }
        s
    }

    pub fn in_support(&self, lam_prime: &[Scalar]) -> bool {
        if lam_prime.len() != self.n()
            || !lam_prime.iter().zip(&self.lines).all(|(x, l)| l.contains(x))
        {
            return false;
        }
        let mut s = Scalar::zero();
        for x in lam_prime {
            s += x;
        }
        s == self.level()
    }

    pub fn key(&self, lam_prime: Vec<Scalar>) -> Option<GlnKey> {
        if !self.in_support(&lam_prime) {
            return None;
        }
        Some(GlnKey { lam_prime, diag_shift: self.diag_shift() })
    }

    /// Window basis: support points within `|delta|_1 <= radius` of `lam`.
    pub fn window_keys(&self, radius: i64) -> Vec<GlnKey> {
        let mut out = Vec::new();
        for delta in integer_vectors_up_to(self.n(), radius) {
            if delta.iter().sum::<i64>() != 0 {
                continue;
            }
            let lp: Vec<Scalar> = self
                .lam
                .iter()
                .zip(&delta)
                .map(|(x, &d)| x + int(d))
                .collect();
            if let Some(k) = self.key(lp) {
                out.push(k);
            }
        }
        out.sort();
        out
    }

    /// `E_{l,j}` acting through `t_l dt_j` plus the diagonal twist.
    pub fn act(
        &self,
        l: usize,
        j: usize,
        v: &GradedVector<GlnKey>,
    ) -> Result<GradedVector<GlnKey>> {
        if l < 1 || j < 1 || l > self.n() || j > self.n() {
            return Err(Error::ShapeMismatch(format!("E[{l},{j}] out of range")));
        }
        let mut out = GradedVector::zero();
        for (key, c) in v.iter() {
            let coeff = key.lam_prime[j - 1].clone();
            if !coeff.is_zero() {
                let mut lp = key.lam_prime.clone();
                lp[j - 1] -= Scalar::one();
                lp[l - 1] += Scalar::one();
                if self.in_support(&lp) {
                    out.add_term(GlnKey { lam_prime: lp, diag_shift: key.diag_shift.clone() }, coeff * c);
                }
            }
            if l == j {
                out.add_term(key.clone(), &self.diag_shift() * c);
            }
        }
        Ok(out)
    }
}

/// Exhaustively verify `(E_{l,l} - E_{l,j} E_{j,l} + E_{j,j} E_{l,l}) v = 0`
/// for all `l != j` over a support window of the given radius; the identity
/// characterizes the modules `N(lambda)` among simple weight `gl_n`-modules.
pub fn check_n_condition(lam: &[Scalar], radius: i64) -> Result<crate::mlambda::IdentityReport> {
    let n = lam.len();
    if n < 2 {
        return Err(Error::InvalidDescriptor("the condition needs n >= 2".into()));
    }
    let module = NLambda::new(lam.to_vec());
    let keys = module.window_keys(radius);
    let mut cases = 0;
    for l in 1..=n {
        for j in 1..=n {
            if l == j {
                continue;
            }
            for key in &keys {
                cases += 1;
                let v = GradedVector::unit(key.clone());
                let ell = module.act(l, l, &v)?;
                let inner = module.act(j, l, &v)?;
                let elj_ejl = module.act(l, j, &inner)?;
                let ejj_ell = module.act(j, j, &ell)?;
                let defect = ell.combine(&int(-1), &elj_ejl) + ejj_ell;
                if !defect.is_zero() {
                    return Ok(crate::mlambda::IdentityReport {
                        name: "N-condition".into(),
                        cases,
                        violation: Some(format!("l={l}, j={j} on {key}: {defect}")),
                    });
                }
            }
        }
    }
    Ok(crate::mlambda::IdentityReport { name: "N-condition".into(), cases, violation: None })
}

/// The `gl_2`-isomorphism `tau : N(lambda) (x) C v_b -> N((-lam_2-1, -lam_1-1))`
/// for `b = -2|lam| - 2`, with coefficients built from generalized binomials.
#[derive(Debug, Clone)]
pub struct TauMap {
    pub lam: [Scalar; 2],
}

impl TauMap {
    pub fn new(lam: [Scalar; 2]) -> Self {
        TauMap { lam }
    }

    /// The forced twist parameter `b = -2 |lam| - 2`.
    pub fn b(&self) -> Scalar {
        -(int(2) * (&self.lam[0] + &self.lam[1])) - int(2)
    }

    pub fn source(&self) -> NLambda {
        NLambda::twisted(self.lam.to_vec(), OneDimTwist { b: self.b() })
    }

    pub fn target(&self) -> NLambda {
        NLambda::new(vec![
            -&self.lam[1] - Scalar::one(),
            -&self.lam[0] - Scalar::one(),
        ])
    }

    /// Coefficient and target point for the source key at offset `s`
    /// (`lam' = (lam_1 + s, lam_2 - s)`).
    ///
    /// Branches: for `s >= 0` the coefficient is
    /// `(-1)^s binom(lam_1 + s, s) / binom(lam_2, s)`, mirrored for `s < 0`.
    /// Errors with `SingularParameter` when the denominator binomial
    /// vanishes.
    pub fn coefficient(&self, s: i64) -> Result<Scalar> {
        let k = s.unsigned_abs();
        let (top, bottom) = if s >= 0 {
            (&self.lam[0] + int(s), self.lam[1].clone())
        } else {
            (&self.lam[1] + int(-s), self.lam[0].clone())
        };
        let denom = binom(&bottom, k);
        if denom.is_zero() {
            return Err(Error::SingularParameter(format!(
                "binom({}, {k}) = 0 in tau at s = {s}",
                format_scalar(&bottom)
            )));
        }
        let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
        Ok(sign * binom(&top, k) / denom)
    }

    fn source_point(&self, s: i64) -> Vec<Scalar> {
        vec![&self.lam[0] + int(s), &self.lam[1] - int(s)]
    }

    fn target_point(&self, s: i64) -> Vec<Scalar> {
        vec![
            -&self.lam[1] + int(s) - Scalar::one(),
            -&self.lam[0] - int(s) - Scalar::one(),
        ]
    }

    /// Image of the source basis vector at offset `s`.
    pub fn apply(&self, s: i64) -> Result<GradedVector<GlnKey>> {
        let source = self.source();
        let target = self.target();
        if source.key(self.source_point(s)).is_none() {
            return Ok(GradedVector::zero());
        }
        let c = self.coefficient(s)?;
        let key = target.key(self.target_point(s)).ok_or_else(|| {
            Error::InvalidDescriptor(format!("tau target off-support at s = {s}"))
        })?;
        Ok(GradedVector::term(key, c))
    }

    /// Image of a source vector expressed on window keys.
    pub fn apply_vec(&self, v: &GradedVector<GlnKey>) -> Result<GradedVector<GlnKey>> {
        let mut out = GradedVector::zero();
        for (key, c) in v.iter() {
            // recover the offset s from the first coordinate
            let s_scalar = &key.lam_prime[0] - &self.lam[0];
            debug_assert!(s_scalar.is_integer());
            let s = i64::try_from(s_scalar.to_integer()).map_err(|_| {
                Error::InvalidDescriptor("tau offset out of range".into())
            })?;
            out.add_scaled(c, &self.apply(s)?);
        }
        Ok(out)
    }

    /// Check `tau(E w) = E tau(w)` for all four `gl_2` matrix units on
    /// offsets `|s| <= bound`. Returns the first violation.
    pub fn check_intertwines(&self, bound: i64) -> Result<crate::mlambda::IdentityReport> {
        let source = self.source();
        let target = self.target();
        let mut cases = 0;
        for s in -bound..=bound {
            let Some(key) = source.key(self.source_point(s)) else {
                continue;
            };
            let w = GradedVector::unit(key.clone());
            for l in 1..=2usize {
                for j in 1..=2usize {
                    cases += 1;
                    let lhs = self.apply_vec(&source.act(l, j, &w)?)?;
                    let rhs = target.act(l, j, &self.apply(s)?)?;
                    if lhs != rhs {
                        return Ok(crate::mlambda::IdentityReport {
                            name: "tau-intertwines".into(),
                            cases,
                            violation: Some(format!(
                                "E[{l},{j}] at s = {s}: tau(Ew) = {lhs} but E tau(w) = {rhs}"
                            )),
                        });
                    }
                }
            }
        }
        Ok(crate::mlambda::IdentityReport {
            name: "tau-intertwines".into(),
            cases,
            violation: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn n_lambda_window_is_level_cut() {
        let n = NLambda::new(vec![frac(1, 2), frac(1, 3)]);
        let keys = n.window_keys(3);
        assert!(!keys.is_empty());
        for k in &keys {
            let sum: Scalar = k.lam_prime.iter().sum();
            assert_eq!(sum, n.level());
        }
    }

    #[test]
    fn n_condition_generic_and_finite_dimensional() {
        // generic rational lambda
        let rep = check_n_condition(&[frac(1, 2), frac(1, 3)], 3).unwrap();
        assert!(rep.holds(), "{:?}", rep.violation);
        // the finite-dimensional highest-weight branch (1, 0)
        let rep = check_n_condition(&[int(1), int(0)], 3).unwrap();
        assert!(rep.holds(), "{:?}", rep.violation);
        // n = 3 window
        let rep = check_n_condition(&[frac(1, 2), frac(1, 3), int(0)], 2).unwrap();
        assert!(rep.holds(), "{:?}", rep.violation);
        assert!(check_n_condition(&[int(0)], 2).is_err());
    }

    #[test]
    fn n_condition_holds_pointwise_off_the_level_cut() {
        // the identity is weight-local: on any support point of W(lambda)
        // with non-truncating lines the eigenvalue computation gives
        // lp_l - lp_l (lp_j + 1) + lp_j lp_l = 0 identically
        let lam = [frac(1, 2), frac(1, 3)];
        for delta in [[1i64, 0], [0, 1], [-1, 2]] {
            let lp: Vec<Scalar> = lam.iter().zip(delta).map(|(x, d)| x + int(d)).collect();
            for l in 1..=2usize {
                for j in 1..=2usize {
                    if l == j {
                        continue;
                    }
                    let e_ll = lp[l - 1].clone();
                    let e_lj_jl = &lp[l - 1] * (&lp[j - 1] + int(1));
                    let e_jj_ll = &lp[j - 1] * &lp[l - 1];
                    assert_eq!(e_ll - e_lj_jl + e_jj_ll, Scalar::zero());
                }
            }
        }
    }

    #[test]
    fn tau_s_zero_has_coefficient_one() {
        let tau = TauMap::new([frac(1, 3), frac(1, 4)]);
        assert_eq!(tau.coefficient(0).unwrap(), int(1));
        let img = tau.apply(0).unwrap();
        let target = tau.target();
        let expect = target
            .key(vec![frac(-5, 4), frac(-4, 3)])
            .map(GradedVector::unit)
            .unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn tau_first_branch_coefficient() {
        // lam = (1/3, 1/4), s = 1: -binom(4/3,1)/binom(1/4,1) = -16/3
        let tau = TauMap::new([frac(1, 3), frac(1, 4)]);
        assert_eq!(tau.coefficient(1).unwrap(), frac(-16, 3));
    }

    #[test]
    fn tau_intertwines_window() {
        let tau = TauMap::new([frac(1, 3), frac(1, 4)]);
        let rep = tau.check_intertwines(4).unwrap();
        assert!(rep.holds(), "{:?}", rep.violation);
        assert!(rep.cases > 0);
    }

    #[test]
    fn tau_singular_parameter_refused() {
        // lam_2 = 2 in Z_+ makes binom(2, 3) vanish
        let tau = TauMap::new([frac(1, 2), int(2)]);
        assert!(matches!(tau.coefficient(3), Err(Error::SingularParameter(_))));
    }

    #[test]
    fn twist_shifts_diagonal_eigenvalues() {
        let lam = vec![frac(1, 3), frac(1, 4)];
        let b = frac(-19, 6); // -2|lam| - 2
        let n = NLambda::twisted(lam.clone(), OneDimTwist { b: b.clone() });
        let key = n.key(lam.clone()).unwrap();
        let v = GradedVector::unit(key.clone());
        let img = n.act(1, 1, &v).unwrap();
        let expect = &lam[0] + &b / int(2);
        assert_eq!(img, v.scaled(&expect));
        // sl_2 generators are untouched by the twist
        let img12 = n.act(1, 2, &v).unwrap();
        let plain = NLambda::new(lam.clone());
        let img12_plain = plain.act(1, 2, &GradedVector::unit(plain.key(lam).unwrap())).unwrap();
        assert_eq!(
            img12.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>(),
            img12_plain.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>()
        );
    }
}
