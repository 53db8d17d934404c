//! Tensor modules `F(P, M) = P (x) M` over the Witt superalgebras.
//!
//! The action is pulled back along the superalgebra homomorphism into
//! `K_{m,n} (x) U(gl(m,n))`:
//!
//! `t^a xi_I dt_i |-> t^a xi_I dt_i (x) 1 + sum_s dt_s(t^a xi_I) (x) E_{s,i}
//!   + (-1)^{|I|-1} sum_l dxi_l(t^a xi_I) (x) E_{m+l,i}`
//!
//! and the `dxi_j` analogue with the last column shifted into the odd block.
//! Evaluating a summand `w (x) E` on `u (x) v` costs the Koszul factor
//! `(-1)^{|E||u|}`.
//!
//! The module `M` is `M(lambda)` or the simple span `L(V(r) (x) N(lambda))`
//! sitting inside it. Both weights and actions are exact; weight windows
//! bound only which weight spaces get enumerated.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gl::GlGenerator;
use crate::grading::{koszul, OddSet, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::mlambda::{integer_vectors_up_to, LSubmodule, MLambdaKey, MLambdaModule};
use crate::pmod::{PKey, PModule};
use crate::scalar::{int, Scalar};
use crate::signs::Signs;
use crate::weyl::WeylMonomial;
use crate::witt::{witt_bracket, Der, WittGenerator};

/// A pure tensor `u (x) v` of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FKey {
    pub p: PKey,
    pub m: MLambdaKey,
}

impl BasisKey for FKey {
    fn parity(&self) -> Parity {
        self.p.parity() + self.m.parity()
    }

    fn weight(&self) -> Weight {
        self.p.weight().add(&self.m.weight())
    }
}

impl fmt::Display for FKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x){}", self.p, self.m)
    }
}

/// Which subspace of `M(lambda)` the tensor factor ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MSide {
    /// All of `M(lambda)`.
    Full,
    /// The simple span with `|S| + |lam'| = r + |lam|`.
    LSub(LSubmodule),
}

/// Descriptor of a tensor module `F(P, M)`.
#[derive(Debug, Clone)]
pub struct TensorModule {
    pub p: PModule,
    pub mmod: MLambdaModule,
    pub restrict: MSide,
}

impl TensorModule {
    pub fn new(p: PModule, mmod: MLambdaModule, restrict: MSide) -> Result<Self> {
        if p.shape.m != mmod.m || p.shape.n != mmod.n() {
            return Err(Error::ShapeMismatch(format!(
                "P has (m,n) = ({},{}) but M(lambda) has ({},{})",
                p.shape.m,
                p.shape.n,
                mmod.m,
                mmod.n()
            )));
        }
        if let MSide::LSub(l) = &restrict {
            LSubmodule::new(l.r, l.lam.clone(), mmod.m)?;
            if l.lam != mmod.lam {
                return Err(Error::InvalidDescriptor(
                    "L-restriction lambda differs from M(lambda)".into(),
                ));
            }
        }
        Ok(TensorModule { p, mmod, restrict })
    }

    pub fn full(p: PModule, lam: Vec<Scalar>) -> Result<Self> {
        let m = p.shape.m;
        Self::new(p, MLambdaModule::new(m, lam), MSide::Full)
    }

    pub fn l_restricted(p: PModule, r: usize, lam: Vec<Scalar>) -> Result<Self> {
        let m = p.shape.m;
        let l = LSubmodule::new(r, lam.clone(), m)?;
        Self::new(p, MLambdaModule::new(m, lam), MSide::LSub(l))
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.p.shape.m, self.p.shape.n)
    }

    fn key_allowed(&self, key: &FKey) -> bool {
        match &self.restrict {
            MSide::Full => true,
            MSide::LSub(l) => l.contains_key(&key.m),
        }
    }

    /// Basis of the weight space of `F(P, M(lambda))` at `w` — the ambient in
    /// which restricted subspaces and images live. Dimension is at most
    /// `2^{m+n}`.
    pub fn ambient_keys_at_weight(&self, w: &Weight) -> Vec<FKey> {
        let (m, n) = self.dims();
        if w.len() != m + n {
            return Vec::new();
        }
        let mut out = Vec::new();
        for s_mask in 0..(1u32 << m) {
            let wedge = OddSet(s_mask);
            let p_lam: Vec<Scalar> = (0..m)
                .map(|i| &w.0[i] - int(i64::from(wedge.contains(i + 1))))
                .collect();
            if !self.p.in_support(&p_lam) {
                continue;
            }
            for i_mask in 0..(1u32 << n) {
                let xi = OddSet(i_mask);
                let m_lam: Vec<Scalar> = (0..n)
                    .map(|j| &w.0[m + j] - int(i64::from(xi.contains(j + 1))))
                    .collect();
                let Some(p_key) = self.p.key(p_lam.clone(), xi) else {
                    continue;
                };
                let Some(m_key) = self.mmod.key(wedge, m_lam) else {
                    continue;
                };
                out.push(FKey { p: p_key, m: m_key });
            }
        }
        out.sort();
        out
    }

    /// Basis keys at `w` of the module itself (the L-restriction applied).
    pub fn keys_at_weight(&self, w: &Weight) -> Vec<FKey> {
        self.ambient_keys_at_weight(w)
            .into_iter()
            .filter(|k| self.key_allowed(k))
            .collect()
    }

    /// A canonical weight hit by the module, anchoring weight windows.
    pub fn anchor_weight(&self) -> Weight {
        let (m, n) = self.dims();
        let mut w: Vec<Scalar> = self.p.base_point();
        w.extend(vec![Scalar::zero(); n]);
        let m_anchor = match &self.restrict {
            MSide::Full => {
                let mut v = vec![Scalar::zero(); m];
                v.extend(self.mmod.lam.iter().cloned());
                v
            }
            MSide::LSub(l) => {
                let mut v: Vec<Scalar> =
                    (1..=m).map(|i| int(i64::from(i <= l.r))).collect();
                v.extend(self.mmod.lam.iter().cloned());
                v
            }
        };
        Weight(w).add(&Weight(m_anchor))
    }

    /// `{anchor + delta : |delta|_1 <= radius}`, sorted.
    pub fn weight_window(&self, radius: i64) -> Vec<Weight> {
        let anchor = self.anchor_weight();
        let mut out: Vec<Weight> = integer_vectors_up_to(anchor.len(), radius)
            .into_iter()
            .map(|delta| {
                Weight(
                    anchor
                        .0
                        .iter()
                        .zip(&delta)
                        .map(|(x, &d)| x + int(d))
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All module basis keys over a weight window.
    pub fn window_keys(&self, radius: i64) -> Vec<FKey> {
        let mut out = Vec::new();
        for w in self.weight_window(radius) {
            out.extend(self.keys_at_weight(&w));
        }
        out.sort();
        out.dedup();
        out
    }

    /// Exact dimension of each weight space over the window.
    pub fn support_character(&self, radius: i64) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in self.weight_window(radius) {
            let d = self.keys_at_weight(&w).len();
            if d > 0 {
                out.insert(w, d);
            }
        }
        out
    }

    fn apply_summand(
        &self,
        weyl: &WeylMonomial,
        gl: Option<&GlGenerator>,
        key: &FKey,
        signs: &Signs,
        out: &mut GradedVector<FKey>,
        scale: &Scalar,
    ) -> Result<()> {
        let u = GradedVector::unit(key.p.clone());
        let pu = self.p.act_mono(weyl, &u)?;
        if pu.is_zero() {
            return Ok(());
        }
        match gl {
            None => {
                for (pk, c) in pu.iter() {
                    out.add_term(FKey { p: pk.clone(), m: key.m.clone() }, c * scale);
                }
            }
            Some(e) => {
                let koszul_sign = if e.parity().is_odd() {
                    signs.pi_koszul_odd_gl(key.p.parity())
                } else {
                    1
                };
                let mv = self
                    .mmod
                    .act_with(e, &GradedVector::unit(key.m.clone()), signs)?;
                if mv.is_zero() {
                    return Ok(());
                }
                for (pk, c) in pu.iter() {
                    for (mk, d) in mv.iter() {
                        out.add_term(
                            FKey { p: pk.clone(), m: mk.clone() },
                            c * d * scale * int(koszul_sign),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// The Witt superalgebra action on `F(P, M)`.
    pub fn act_with(
        &self,
        x: &WittGenerator,
        w: &GradedVector<FKey>,
        signs: &Signs,
    ) -> Result<GradedVector<FKey>> {
        let (m, n) = self.dims();
        if x.num_even() != m || x.num_odd() != n {
            return Err(Error::ShapeMismatch("generator dims differ from module".into()));
        }
        let col = match x.der {
            Der::T(i) => i,
            Der::Xi(j) => m + j,
        };
        let mut out = GradedVector::zero();
        for (key, c) in w.iter() {
            // t^a xi_I d (x) 1
            self.apply_summand(&x.as_weyl(), None, key, signs, &mut out, c)?;
            // sum_s dt_s(t^a xi_I) (x) E_{s,col}
            for s in 1..=m {
                let a_s = x.t_exp[s - 1];
                if a_s == 0 {
                    continue;
                }
                let mut t_exp = x.t_exp.clone();
                t_exp[s - 1] -= 1;
                let weyl = WeylMonomial::new(
                    t_exp,
                    x.xi,
                    vec![0; m],
                    OddSet::empty(),
                    n,
                );
                let e = GlGenerator::new(s, col, m, n)?;
                let scale = c * int(a_s);
                self.apply_summand(&weyl, Some(&e), key, signs, &mut out, &scale)?;
            }
            // (-1)^{|I|-1} sum_l dxi_l(t^a xi_I) (x) E_{m+l,col}
            if !x.xi.is_empty() {
                let prefactor = signs.pi_odd_prefactor(x.xi.len());
                for l in x.xi.iter() {
                    let (s_rm, rest) = x.xi.remove_front(l).expect("member");
                    let weyl = WeylMonomial::new(
                        x.t_exp.clone(),
                        rest,
                        vec![0; m],
                        OddSet::empty(),
                        n,
                    );
                    let e = GlGenerator::new(m + l, col, m, n)?;
                    let scale = c * int(prefactor * s_rm);
                    self.apply_summand(&weyl, Some(&e), key, signs, &mut out, &scale)?;
                }
            }
        }
        Ok(out)
    }

    pub fn act(&self, x: &WittGenerator, w: &GradedVector<FKey>) -> Result<GradedVector<FKey>> {
        self.act_with(x, w, &Signs::standard())
    }

    /// Linear extension over bracket expansions.
    pub fn act_elem_with(
        &self,
        x: &GradedVector<WittGenerator>,
        w: &GradedVector<FKey>,
        signs: &Signs,
    ) -> Result<GradedVector<FKey>> {
        let mut out = GradedVector::zero();
        for (g, c) in x.iter() {
            out.add_scaled(c, &self.act_with(g, w, signs)?);
        }
        Ok(out)
    }

    /// `e_i ^` on the tensor factor `M(lambda)`.
    fn wedge_raise(&self, i: usize, key: &MLambdaKey) -> Option<(Scalar, MLambdaKey)> {
        let (sign, wedge) = key.wedge.insert_front(i)?;
        let k = self.mmod.key(wedge, key.lam_prime.clone())?;
        Some((int(sign), k))
    }

    /// `t_l ^` on the tensor factor: shift `lam' -> lam' + e_l` with the
    /// sign `(-1)^r`.
    fn shift_raise(
        &self,
        l: usize,
        key: &MLambdaKey,
        signs: &Signs,
    ) -> Option<(Scalar, MLambdaKey)> {
        let mut lp = key.lam_prime.clone();
        lp[l - 1] += int(1);
        let k = self.mmod.key(key.wedge, lp)?;
        Some((int(signs.sigma_shift(key.wedge_len())), k))
    }

    /// The weight-preserving intertwiner
    /// `u (x) v |-> sum_s dt_s u (x) e_s ^ v
    ///            + (-1)^{|u|-1} sum_l dxi_l u (x) t_l ^ v`.
    pub fn sigma_with(
        &self,
        w: &GradedVector<FKey>,
        signs: &Signs,
    ) -> Result<GradedVector<FKey>> {
        let (m, n) = self.dims();
        let mut out = GradedVector::zero();
        for (key, c) in w.iter() {
            for s in 1..=m {
                let du = self
                    .p
                    .act_mono(&WeylMonomial::dt(s, m, n), &GradedVector::unit(key.p.clone()))?;
                if du.is_zero() {
                    continue;
                }
                let Some((sign, mk)) = self.wedge_raise(s, &key.m) else {
                    continue;
                };
                for (pk, d) in du.iter() {
                    out.add_term(FKey { p: pk.clone(), m: mk.clone() }, c * d * &sign);
                }
            }
            let prefactor = signs.sigma_odd_prefactor(key.p.parity());
            for l in 1..=n {
                let du = self
                    .p
                    .act_mono(&WeylMonomial::dxi(l, m, n), &GradedVector::unit(key.p.clone()))?;
                if du.is_zero() {
                    continue;
                }
                let Some((sign, mk)) = self.shift_raise(l, &key.m, signs) else {
                    continue;
                };
                for (pk, d) in du.iter() {
                    out.add_term(
                        FKey { p: pk.clone(), m: mk.clone() },
                        c * d * &sign * int(prefactor),
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn sigma(&self, w: &GradedVector<FKey>) -> Result<GradedVector<FKey>> {
        self.sigma_with(w, &Signs::standard())
    }

    /// `[x,y] w - x (y w) + (-1)^{|x||y|} y (x w)`; zero iff the bracket
    /// compatibility holds at this input.
    pub fn module_axiom_defect(
        &self,
        x: &WittGenerator,
        y: &WittGenerator,
        w: &GradedVector<FKey>,
        signs: &Signs,
    ) -> Result<GradedVector<FKey>> {
        let bracket = witt_bracket(x, y)?;
        let via_bracket = self.act_elem_with(&bracket, w, signs)?;
        let xy = self.act_with(x, &self.act_with(y, w, signs)?, signs)?;
        let yx = self.act_with(y, &self.act_with(x, w, signs)?, signs)?;
        let sign = koszul(x.parity(), y.parity());
        Ok(via_bracket - xy.combine(&int(-sign), &yx))
    }

    /// `sigma(x w) - x sigma(w)`; zero iff `sigma` intertwines `x` at `w`.
    pub fn sigma_intertwine_defect(
        &self,
        x: &WittGenerator,
        w: &GradedVector<FKey>,
        signs: &Signs,
    ) -> Result<GradedVector<FKey>> {
        let lhs = self.sigma_with(&self.act_with(x, w, signs)?, signs)?;
        let rhs = self.act_with(x, &self.sigma_with(w, signs)?, signs)?;
        Ok(lhs - rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmod::WeightLine;
    use crate::scalar::frac;
    use crate::weyl::AlgebraShape;
    use crate::witt::parse_witt_generator;

    fn poly_p(m: usize, n: usize, lines: Vec<WeightLine>) -> PModule {
        PModule::new(AlgebraShape::plus(m, n).unwrap(), lines).unwrap()
    }

    /// `F(Lambda(1), C v)` for m = 0, n = 1: the worked example with
    /// `xi1 dxi1 (1 (x) v) = lam_1 (1 (x) v)` and friends.
    fn lambda1_module(lam1: Scalar) -> TensorModule {
        let p = poly_p(0, 1, vec![]);
        TensorModule::l_restricted(p, 0, vec![lam1]).unwrap()
    }

    fn fkey(tm: &TensorModule, xi: &[usize], wedge: &[usize], lp: Vec<Scalar>) -> FKey {
        let p_lam = tm.p.base_point();
        FKey {
            p: tm.p.key(p_lam, OddSet::from_iter(xi.iter().copied())).unwrap(),
            m: tm
                .mmod
                .key(OddSet::from_iter(wedge.iter().copied()), lp)
                .unwrap(),
        }
    }

    #[test]
    fn w01_action_on_trivial_line() {
        let lam1 = frac(1, 2);
        let tm = lambda1_module(lam1.clone());
        let sh = AlgebraShape::plus(0, 1).unwrap();
        let one_v = GradedVector::unit(fkey(&tm, &[], &[], vec![lam1.clone()]));
        let xi_v = GradedVector::unit(fkey(&tm, &[1], &[], vec![lam1.clone()]));
        let dxi = parse_witt_generator("d/dxi1", &sh).unwrap();
        let xidxi = parse_witt_generator("xi1*d/dxi1", &sh).unwrap();
        // dxi1 (1 (x) v) = 0
        assert!(tm.act(&dxi, &one_v).unwrap().is_zero());
        // xi1 dxi1 (1 (x) v) = lam_1 (1 (x) v)
        assert_eq!(tm.act(&xidxi, &one_v).unwrap(), one_v.scaled(&lam1));
        // dxi1 (xi1 (x) v) = 1 (x) v
        assert_eq!(tm.act(&dxi, &xi_v).unwrap(), one_v);
        // xi1 dxi1 (xi1 (x) v) = (1 + lam_1)(xi1 (x) v)
        assert_eq!(
            tm.act(&xidxi, &xi_v).unwrap(),
            xi_v.scaled(&(int(1) + lam1))
        );
    }

    #[test]
    fn plain_derivations_act_on_the_first_factor_only() {
        // dt_i (u (x) v) = dt_i u (x) v
        let p = poly_p(1, 1, vec![WeightLine::PolyLine]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let sh = AlgebraShape::plus(1, 1).unwrap();
        let dt = parse_witt_generator("d/dt1", &sh).unwrap();
        let mut key = fkey(&tm, &[1], &[], vec![frac(1, 2)]);
        key.p = tm.p.key(vec![int(2)], OddSet::from_iter([1])).unwrap();
        let img = tm.act(&dt, &GradedVector::unit(key.clone())).unwrap();
        let mut expect_key = key.clone();
        expect_key.p = tm.p.key(vec![int(1)], OddSet::from_iter([1])).unwrap();
        assert_eq!(img, GradedVector::term(expect_key, int(2)));
    }

    #[test]
    fn mixed_generator_expands_into_three_summands() {
        // t1 xi1 dt1 on u (x) v for m = n = 1, all three summands live
        let p = poly_p(1, 1, vec![WeightLine::PolyLine]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let sh = AlgebraShape::plus(1, 1).unwrap();
        let x = parse_witt_generator("t1*xi1*d/dt1", &sh).unwrap();
        let mut key = fkey(&tm, &[], &[1], vec![frac(1, 2)]);
        key.p = tm.p.key(vec![int(1)], OddSet::empty()).unwrap();
        let img = tm.act(&x, &GradedVector::unit(key)).unwrap();
        // t1 xi1 dt1 u (x) v + xi1 u (x) E11 v + t1 u (x) E21 v
        // with u = y(1), v = e1 y(1/2); E11 v = v, E21 v = y(3/2)
        let k1 = FKey {
            p: tm.p.key(vec![int(1)], OddSet::from_iter([1])).unwrap(),
            m: tm.mmod.key(OddSet::from_iter([1]), vec![frac(1, 2)]).unwrap(),
        };
        let k2 = FKey {
            p: tm.p.key(vec![int(1)], OddSet::from_iter([1])).unwrap(),
            m: tm.mmod.key(OddSet::from_iter([1]), vec![frac(1, 2)]).unwrap(),
        };
        let k3 = FKey {
            p: tm.p.key(vec![int(2)], OddSet::empty()).unwrap(),
            m: tm.mmod.key(OddSet::empty(), vec![frac(3, 2)]).unwrap(),
        };
        let mut expect = GradedVector::zero();
        expect.add_term(k1, int(1)); // first summand
        expect.add_term(k2, int(1)); // second summand, same key here
        expect.add_term(k3, int(1)); // third summand, prefactor (+1), |u| even
        assert_eq!(img, expect);
    }

    #[test]
    fn module_axiom_holds_on_samples() {
        let p = poly_p(1, 1, vec![WeightLine::ShiftedLaurent(frac(1, 3))]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let sh = AlgebraShape::plus(1, 1).unwrap();
        let signs = Signs::standard();
        let gens = crate::witt::witt_basis_up_to_degree(&sh, 2);
        let keys = tm.window_keys(1);
        assert!(!keys.is_empty());
        for x in gens.iter().step_by(3) {
            for y in gens.iter().step_by(4) {
                for k in keys.iter().step_by(2) {
                    let defect = tm
                        .module_axiom_defect(x, y, &GradedVector::unit(k.clone()), &signs)
                        .unwrap();
                    assert!(defect.is_zero(), "axiom fails for {x}, {y} at {k}");
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        // m = 0, n = 1: sigma(1 (x) y) = 0, sigma(xi1 (x) y) = 1 (x) y(l+1)
        let p = poly_p(0, 1, vec![]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let one = GradedVector::unit(fkey(&tm, &[], &[], vec![frac(1, 2)]));
        let xi = GradedVector::unit(fkey(&tm, &[1], &[], vec![frac(1, 2)]));
        assert!(tm.sigma(&one).unwrap().is_zero());
        let raised = GradedVector::unit(fkey(&tm, &[], &[], vec![frac(3, 2)]));
        assert_eq!(tm.sigma(&xi).unwrap(), raised);
    }

    #[test]
    fn sigma_squares_to_zero_and_preserves_grading() {
        let p = poly_p(2, 1, vec![WeightLine::PolyLine, WeightLine::QuotientLine]);
        let tm = TensorModule::full(p, vec![int(0)]).unwrap();
        for key in tm.window_keys(2) {
            let v = GradedVector::unit(key.clone());
            let sv = tm.sigma(&v).unwrap();
            assert!(tm.sigma(&sv).unwrap().is_zero(), "sigma^2 != 0 at {key}");
            if !sv.is_zero() {
                assert_eq!(sv.homogeneous_weight().unwrap().unwrap(), key.weight());
                assert_eq!(sv.homogeneous_parity().unwrap().unwrap(), key.parity());
            }
        }
    }

    #[test]
    fn sigma_intertwines_generators() {
        let p = poly_p(1, 1, vec![WeightLine::PolyLine]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let sh = AlgebraShape::plus(1, 1).unwrap();
        let signs = Signs::standard();
        for x in crate::witt::witt_basis_up_to_degree(&sh, 3) {
            for key in tm.window_keys(1) {
                let defect = tm
                    .sigma_intertwine_defect(&x, &GradedVector::unit(key.clone()), &signs)
                    .unwrap();
                assert!(defect.is_zero(), "sigma fails to intertwine {x} at {key}");
            }
        }
    }

    #[test]
    fn corrupted_signs_break_identities() {
        use crate::signs::SignSite;
        let p = poly_p(1, 1, vec![WeightLine::PolyLine]);
        let tm = TensorModule::full(p, vec![frac(1, 2)]).unwrap();
        let sh = AlgebraShape::plus(1, 1).unwrap();
        let gens = crate::witt::witt_basis_up_to_degree(&sh, 3);
        let keys = tm.window_keys(2);
        let broken = |signs: &Signs| -> bool {
            for x in &gens {
                for key in &keys {
                    let w = GradedVector::unit(key.clone());
                    for y in &gens {
                        if !tm.module_axiom_defect(x, y, &w, signs).unwrap().is_zero() {
                            return true;
                        }
                    }
                    if !tm.sigma_intertwine_defect(x, &w, signs).unwrap().is_zero() {
                        return true;
                    }
                }
            }
            false
        };
        assert!(!broken(&Signs::standard()));
        for site in [
            SignSite::PiOddPrefactor,
            SignSite::PiKoszulOddGl,
            SignSite::SigmaOddPrefactor,
            SignSite::SigmaShiftSign,
        ] {
            assert!(broken(&Signs::mutated(site)), "mutation {site:?} went unnoticed");
        }
    }

    #[test]
    fn laurent_variant_module_axiom() {
        let shape = AlgebraShape::laurent(1, 1).unwrap();
        let p = PModule::new(shape, vec![WeightLine::FullLaurent(frac(1, 2))]).unwrap();
        let tm = TensorModule::full(p, vec![int(-1)]).unwrap();
        let gens = crate::witt::witt_basis_up_to_degree(&shape, 2);
        let keys = tm.window_keys(1);
        let signs = Signs::standard();
        for x in gens.iter().step_by(2) {
            for y in gens.iter().step_by(3) {
                for k in keys.iter().step_by(3) {
                    let defect = tm
                        .module_axiom_defect(x, y, &GradedVector::unit(k.clone()), &signs)
                        .unwrap();
                    assert!(defect.is_zero(), "axiom fails for {x}, {y} at {k}");
                }
            }
        }
    }

    #[test]
    fn weight_spaces_are_small_and_exact() {
        let p = poly_p(1, 1, vec![WeightLine::PolyLine]);
        let tm = TensorModule::full(p, vec![int(0)]).unwrap();
        let character = tm.support_character(2);
        assert!(!character.is_empty());
        for (w, d) in &character {
            assert_eq!(tm.keys_at_weight(w).len(), *d);
            assert!(*d <= 4);
        }
        // parity change leaves the character untouched
        let mut flipped = tm.clone();
        flipped.p = flipped.p.parity_changed();
        assert_eq!(flipped.support_character(2), character);
    }
}
