//! The `gl(m,n)`-module `M(lambda)` and its distinguished submodules.
//!
//! `M(lambda)` is `Lambda(C^m) (x) W(lambda)` as a `gl(m,n)_0`-module: basis
//! vectors `e_{i_1} ^ ... ^ e_{i_r} y(lam')` indexed by a strictly increasing
//! wedge subset and a support point of `W(lambda)`. The odd part acts by
//!
//! `E_{i,m+j} . e_S y(lam') = (-1)^r e_i ^ e_S dt_j(y(lam'))`
//!
//! and `E_{m+j,i}` removes `e_i` with sign `(-1)^{r-s}` while shifting
//! `lam' -> lam' + e_j`. Parity of a basis vector is `|lam - lam'| mod 2`.
//!
//! For `r + |lam|` fixed, the keys with `|S| + |lam'| = r + |lam|` span the
//! simple submodule realized inside `M(lambda)`; those spans are the
//! `L(V(r) (x) N(lambda))` used throughout.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gl::{gl_basis, gl_bracket, GlGenerator};
use crate::grading::{koszul, OddSet, Parity, Weight};
use crate::linalg::{BasisKey, GradedVector};
use crate::pmod::WeightLine;
use crate::scalar::{format_scalar_vec, int, Scalar};
use crate::signs::Signs;

/// A basis vector `e_S y(lam')` of `M(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MLambdaKey {
    pub wedge: OddSet,
    pub lam_prime: Vec<Scalar>,
    m: u8,
    parity: Parity,
}

impl MLambdaKey {
    pub fn wedge_len(&self) -> usize {
        self.wedge.len()
    }

    /// `|S| + |lam'|`, the grading that cuts out the simple submodules.
    pub fn level(&self) -> Scalar {
        let mut s = int(self.wedge.len() as i64);
        for x in &self.lam_prime {
            s += x;
        }
        s
    }
}

impl BasisKey for MLambdaKey {
    fn parity(&self) -> Parity {
        self.parity
    }

    fn weight(&self) -> Weight {
        let mut w = self.wedge.indicator(self.m as usize);
        w.extend(self.lam_prime.iter().cloned());
        Weight(w)
    }
}

impl fmt::Display for MLambdaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.wedge.is_empty() {
            write!(f, "e{}", self.wedge)?;
        }
        write!(f, "y({})", format_scalar_vec(&self.lam_prime))
    }
}

/// Descriptor of `M(lambda)` for `gl(m,n)`, with optional parity change and
/// sign twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MLambdaModule {
    pub m: usize,
    pub lam: Vec<Scalar>,
    pub parity_shift: bool,
    pub sign_twist: bool,
    lines: Vec<WeightLine>,
}

impl MLambdaModule {
    pub fn new(m: usize, lam: Vec<Scalar>) -> Self {
        let lines = lam.iter().map(WeightLine::canonical_for).collect();
        MLambdaModule { m, lam, parity_shift: false, sign_twist: false, lines }
    }

    pub fn n(&self) -> usize {
        self.lam.len()
    }

    pub fn parity_changed(&self) -> Self {
        let mut m = self.clone();
        m.parity_shift = !m.parity_shift;
        m
    }

    pub fn sign_twisted(&self) -> Self {
        let mut m = self.clone();
        m.sign_twist = !m.sign_twist;
        m
    }

    pub fn in_support(&self, lam_prime: &[Scalar]) -> bool {
        lam_prime.len() == self.n()
            && lam_prime.iter().zip(&self.lines).all(|(x, l)| l.contains(x))
    }

    /// Build a key, normalizing parity; `None` off support.
    pub fn key(&self, wedge: OddSet, lam_prime: Vec<Scalar>) -> Option<MLambdaKey> {
        if !self.in_support(&lam_prime) || wedge.iter().any(|i| i > self.m) {
            return None;
        }
        let mut diff = Scalar::zero();
        for (a, b) in self.lam.iter().zip(&lam_prime) {
            diff += a - b;
        }
        debug_assert!(diff.is_integer());
        let parity = Parity::from_count(diff.to_integer().magnitude().bit(0) as usize)
            .flipped_if(self.parity_shift);
        Some(MLambdaKey { wedge, lam_prime, m: self.m as u8, parity })
    }

    /// All keys of the given weight: the even coordinates must be an
    /// indicator vector and the odd coordinates a support point.
    pub fn keys_at_weight(&self, weight: &Weight) -> Vec<MLambdaKey> {
        let (m, n) = (self.m, self.n());
        if weight.len() != m + n {
            return Vec::new();
        }
        let mut wedge = OddSet::empty();
        for i in 1..=m {
            let c = &weight.0[i - 1];
            if c.is_zero() {
                continue;
            } else if *c == int(1) {
                wedge = OddSet(wedge.0 | 1 << (i - 1));
            } else {
                return Vec::new();
            }
        }
        let lam_prime: Vec<Scalar> = weight.0[m..].to_vec();
        self.key(wedge, lam_prime).into_iter().collect()
    }

    /// The action of one matrix unit on one basis vector.
    fn act_key(
        &self,
        e: &GlGenerator,
        key: &MLambdaKey,
        signs: &Signs,
    ) -> Option<(Scalar, MLambdaKey)> {
        let m = self.m;
        let (row, col) = (e.row, e.col);
        let r = key.wedge_len();
        let twist = if self.sign_twist && e.parity().is_odd() { -1i64 } else { 1 };
        if row <= m && col <= m {
            // natural action on the wedge factor
            let (s1, removed) = key.wedge.remove_front(col)?;
            let (s2, replaced) = removed.insert_front(row)?;
            let k = self.key(replaced, key.lam_prime.clone())?;
            Some((int(s1 * s2), k))
        } else if row > m && col > m {
            // t_l dt_j on the W(lambda) factor
            let (l, j) = (row - m, col - m);
            let c = key.lam_prime[j - 1].clone();
            if c.is_zero() {
                return None;
            }
            let mut lp = key.lam_prime.clone();
            lp[j - 1] -= int(1);
            lp[l - 1] += int(1);
            let k = self.key(key.wedge, lp)?;
            Some((c, k))
        } else if row <= m {
            // raising: E_{i,m+j} = (-1)^r (e_i ^) dt_j
            let (i, j) = (row, col - m);
            let c = key.lam_prime[j - 1].clone();
            if c.is_zero() {
                return None;
            }
            let (ins, wedge) = key.wedge.insert_front(i)?;
            let mut lp = key.lam_prime.clone();
            lp[j - 1] -= int(1);
            let k = self.key(wedge, lp)?;
            Some((c * int(signs.wedge_raise(r) * ins * twist), k))
        } else {
            // lowering: E_{m+j,i} removes e_i with sign (-1)^{r-s}
            let (j, i) = (row - m, col);
            if !key.wedge.contains(i) {
                return None;
            }
            let above = key.wedge.count_above(i);
            let wedge = OddSet(key.wedge.0 & !(1 << (i - 1)));
            let mut lp = key.lam_prime.clone();
            lp[j - 1] += int(1);
            let k = self.key(wedge, lp)?;
            Some((int(signs.wedge_lower(above) * twist), k))
        }
    }

    pub fn act_with(
        &self,
        e: &GlGenerator,
        v: &GradedVector<MLambdaKey>,
        signs: &Signs,
    ) -> Result<GradedVector<MLambdaKey>> {
        let (gm, gn) = e.dims();
        if gm != self.m || gn != self.n() {
            return Err(Error::ShapeMismatch(format!(
                "gl({gm},{gn}) generator on M(lambda) with (m,n)=({},{})",
                self.m,
                self.n()
            )));
        }
        let mut out = GradedVector::zero();
        for (key, c) in v.iter() {
            if let Some((coeff, image)) = self.act_key(e, key, signs) {
                out.add_term(image, coeff * c);
            }
        }
        Ok(out)
    }

    pub fn act(
        &self,
        e: &GlGenerator,
        v: &GradedVector<MLambdaKey>,
    ) -> Result<GradedVector<MLambdaKey>> {
        self.act_with(e, v, &Signs::standard())
    }

    /// Linear extension over a combination of matrix units.
    pub fn act_elem_with(
        &self,
        x: &GradedVector<GlGenerator>,
        v: &GradedVector<MLambdaKey>,
        signs: &Signs,
    ) -> Result<GradedVector<MLambdaKey>> {
        let mut out = GradedVector::zero();
        for (e, c) in x.iter() {
            out.add_scaled(c, &self.act_with(e, v, signs)?);
        }
        Ok(out)
    }

    /// `{lam + delta : |delta|_1 <= radius} ∩ Supp(W(lambda))`, ordered.
    pub fn support_window(&self, radius: i64) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for delta in integer_vectors_up_to(self.n(), radius) {
            let lp: Vec<Scalar> = self
                .lam
                .iter()
                .zip(&delta)
                .map(|(x, &d)| x + int(d))
                .collect();
            if self.in_support(&lp) {
                out.push(lp);
            }
        }
        out.sort();
        out
    }

    /// All keys with `lam'` in the radius window (every wedge subset).
    pub fn window_keys(&self, radius: i64) -> Vec<MLambdaKey> {
        let mut out = Vec::new();
        for lp in self.support_window(radius) {
            for mask in 0..(1u32 << self.m) {
                if let Some(k) = self.key(OddSet(mask), lp.clone()) {
                    out.push(k);
                }
            }
        }
        out.sort();
        out
    }
}

/// Integer vectors of length `len` with `|delta|_1 <= radius`.
pub fn integer_vectors_up_to(len: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for partial in &out {
            let used: i64 = partial.iter().map(|d: &i64| d.abs()).sum();
            for d in -(radius - used)..=(radius - used) {
                let mut e = partial.clone();
                e.push(d);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// Descriptor of the simple submodule span inside `M(lambda)`: keys with
/// `|S| + |lam'| = r + |lam|`. Requires `lam = 0` when `r != m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSubmodule {
    pub r: usize,
    pub lam: Vec<Scalar>,
}

impl LSubmodule {
    pub fn new(r: usize, lam: Vec<Scalar>, m: usize) -> Result<Self> {
        if r > m {
            return Err(Error::InvalidDescriptor(format!("r = {r} exceeds m = {m}")));
        }
        if r != m && lam.iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidDescriptor(
                "lambda must be 0 when r != m".into(),
            ));
        }
        Ok(LSubmodule { r, lam })
    }

    /// The grading value `r + |lam|` shared by all keys of the span.
    pub fn level(&self) -> Scalar {
        let mut s = int(self.r as i64);
        for x in &self.lam {
            s += x;
        }
        s
    }

    pub fn contains_key(&self, key: &MLambdaKey) -> bool {
        key.level() == self.level()
    }

    /// Basis keys of the span at a given weight.
    pub fn basis_at_weight(&self, module: &MLambdaModule, weight: &Weight) -> Vec<MLambdaKey> {
        module
            .keys_at_weight(weight)
            .into_iter()
            .filter(|k| self.contains_key(k))
            .collect()
    }
}

/// Outcome of one exhaustively checked identity family.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub name: String,
    pub cases: usize,
    pub violation: Option<String>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// The super-commutation relation `x y -/+ y x - [x,y]` evaluated on one key.
fn relation_defect(
    module: &MLambdaModule,
    x: &GlGenerator,
    y: &GlGenerator,
    key: &MLambdaKey,
    signs: &Signs,
) -> Result<GradedVector<MLambdaKey>> {
    let v = GradedVector::unit(key.clone());
    let xy = module.act_with(x, &module.act_with(y, &v, signs)?, signs)?;
    let yx = module.act_with(y, &module.act_with(x, &v, signs)?, signs)?;
    let sign = koszul(x.parity(), y.parity());
    let bracket = gl_bracket(x, y)?;
    let via_bracket = module.act_elem_with(&bracket, &v, signs)?;
    Ok(xy.combine(&int(-sign), &yx) - via_bracket)
}

/// Exhaustively verify the seven odd-part compatibility relations over a set
/// of keys and all applicable index tuples; reports the first violation per
/// relation.
pub fn check_appendix_relations(
    module: &MLambdaModule,
    keys: &[MLambdaKey],
    signs: &Signs,
) -> Result<Vec<IdentityReport>> {
    let (m, n) = (module.m, module.n());
    let e = |row, col| GlGenerator::new(row, col, m, n).unwrap();
    // (name, generator pair family) for each of the seven relations
    type PairIter = Vec<(GlGenerator, GlGenerator)>;
    let even_even: Vec<(usize, usize)> =
        (1..=m).flat_map(|i| (1..=m).map(move |k| (i, k))).collect();
    let odd_odd: Vec<(usize, usize)> =
        (1..=n).flat_map(|j| (1..=n).map(move |l| (j, l))).collect();
    let mut families: Vec<(String, PairIter)> = Vec::new();
    // A1: [E_{i,k}, E_{m+j,i'}]
    families.push((
        "A1".into(),
        even_even
            .iter()
            .flat_map(|&(i, k)| {
                (1..=n).flat_map(move |j| (1..=m).map(move |ip| (e(i, k), e(m + j, ip))))
            })
            .collect(),
    ));
    // A2: [E_{i,k}, E_{i',m+j}]
    families.push((
        "A2".into(),
        even_even
            .iter()
            .flat_map(|&(i, k)| {
                (1..=n).flat_map(move |j| (1..=m).map(move |ip| (e(i, k), e(ip, m + j))))
            })
            .collect(),
    ));
    // A3: [E_{i,m+j}, E_{m+j',i'}]
    families.push((
        "A3".into(),
        (1..=m)
            .flat_map(|i| {
                (1..=n).flat_map(move |j| {
                    (1..=n).flat_map(move |jp| {
                        (1..=m).map(move |ip| (e(i, m + j), e(m + jp, ip)))
                    })
                })
            })
            .collect(),
    ));
    // A4: [E_{i,m+j}, E_{i',m+j'}]
    families.push((
        "A4".into(),
        (1..=m)
            .flat_map(|i| {
                (1..=n).flat_map(move |j| {
                    (1..=m).flat_map(move |ip| {
                        (1..=n).map(move |jp| (e(i, m + j), e(ip, m + jp)))
                    })
                })
            })
            .collect(),
    ));
    // A5: [E_{m+j,i}, E_{m+j',i'}]
    families.push((
        "A5".into(),
        (1..=n)
            .flat_map(|j| {
                (1..=m).flat_map(move |i| {
                    (1..=n).flat_map(move |jp| {
                        (1..=m).map(move |ip| (e(m + j, i), e(m + jp, ip)))
                    })
                })
            })
            .collect(),
    ));
    // A6: [E_{m+l,m+j'}, E_{m+j,i'}]
    families.push((
        "A6".into(),
        odd_odd
            .iter()
            .flat_map(|&(l, jp)| {
                (1..=n).flat_map(move |j| {
                    (1..=m).map(move |ip| (e(m + l, m + jp), e(m + j, ip)))
                })
            })
            .collect(),
    ));
    // A7: [E_{m+l,m+j'}, E_{i',m+j}]
    families.push((
        "A7".into(),
        odd_odd
            .iter()
            .flat_map(|&(l, jp)| {
                (1..=m).flat_map(move |ip| {
                    (1..=n).map(move |j| (e(m + l, m + jp), e(ip, m + j)))
                })
            })
            .collect(),
    ));

    let mut reports = Vec::new();
    for (name, pairs) in families {
        let mut cases = 0;
        let mut violation = None;
        'outer: for (x, y) in &pairs {
            for key in keys {
                cases += 1;
                let defect = relation_defect(module, x, y, key, signs)?;
                if !defect.is_zero() {
                    violation = Some(format!("{x}, {y} on {key}: defect {defect}"));
                    break 'outer;
                }
            }
        }
        reports.push(IdentityReport { name, cases, violation });
    }
    Ok(reports)
}

/// The full module axiom `[x,y] v = x(yv) - (-1)^{|x||y|} y(xv)` over all
/// generator pairs and the given keys; subsumes the seven named relations.
pub fn check_gl_module_axiom(
    module: &MLambdaModule,
    keys: &[MLambdaKey],
    signs: &Signs,
) -> Result<IdentityReport> {
    let basis = gl_basis(module.m, module.n());
    let mut cases = 0;
    for x in &basis {
        for y in &basis {
            for key in keys {
                cases += 1;
                let defect = relation_defect(module, x, y, key, signs)?;
                if !defect.is_zero() {
                    return Ok(IdentityReport {
                        name: "gl-module-axiom".into(),
                        cases,
                        violation: Some(format!("{x}, {y} on {key}: defect {defect}")),
                    });
                }
            }
        }
    }
    Ok(IdentityReport { name: "gl-module-axiom".into(), cases, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn module_11(lam: i64) -> MLambdaModule {
        MLambdaModule::new(1, vec![int(lam)])
    }

    #[test]
    fn lowering_example() {
        // E_{m+1,1} e1 y(lam') = y(lam' + e1), r = 1, s = 1
        let m = MLambdaModule::new(1, vec![frac(1, 2)]);
        let v = GradedVector::unit(m.key(OddSet::from_iter([1]), vec![frac(1, 2)]).unwrap());
        let e = GlGenerator::new(2, 1, 1, 1).unwrap();
        let img = m.act(&e, &v).unwrap();
        assert_eq!(
            img,
            GradedVector::unit(m.key(OddSet::empty(), vec![frac(3, 2)]).unwrap())
        );
    }

    #[test]
    fn raising_into_occupied_slot_vanishes() {
        // E_{1,m+1} e1 y(lam') = 0
        let m = MLambdaModule::new(1, vec![frac(1, 2)]);
        let v = GradedVector::unit(m.key(OddSet::from_iter([1]), vec![frac(1, 2)]).unwrap());
        let e = GlGenerator::new(1, 2, 1, 1).unwrap();
        assert!(m.act(&e, &v).unwrap().is_zero());
    }

    #[test]
    fn raising_from_empty_wedge() {
        // E_{1,m+1} y(lam') = lam'_1 e1 y(lam' - e1)
        let m = MLambdaModule::new(1, vec![frac(1, 2)]);
        let v = GradedVector::unit(m.key(OddSet::empty(), vec![frac(1, 2)]).unwrap());
        let e = GlGenerator::new(1, 2, 1, 1).unwrap();
        let img = m.act(&e, &v).unwrap();
        assert_eq!(
            img,
            GradedVector::term(
                m.key(OddSet::from_iter([1]), vec![frac(-1, 2)]).unwrap(),
                frac(1, 2)
            )
        );
    }

    #[test]
    fn parity_follows_support_offset() {
        let m = module_11(0);
        let k0 = m.key(OddSet::empty(), vec![int(0)]).unwrap();
        let k1 = m.key(OddSet::empty(), vec![int(1)]).unwrap();
        let k2 = m.key(OddSet::from_iter([1]), vec![int(2)]).unwrap();
        assert_eq!(k0.parity(), Parity::Even);
        assert_eq!(k1.parity(), Parity::Odd);
        assert_eq!(k2.parity(), Parity::Even);
        // weight: even coordinate is the wedge indicator, odd is lam'
        assert_eq!(k2.weight(), Weight(vec![int(1), int(2)]));
    }

    #[test]
    fn appendix_relations_hold_on_windows() {
        for (m, lam) in [
            (1usize, vec![int(0)]),
            (2, vec![frac(1, 2), frac(1, 3)]),
            (2, vec![int(-1), int(-1)]),
        ] {
            let module = MLambdaModule::new(m, lam);
            let keys = module.window_keys(2);
            assert!(!keys.is_empty());
            for rep in check_appendix_relations(&module, &keys, &Signs::standard()).unwrap() {
                assert!(rep.holds(), "{} violated: {:?}", rep.name, rep.violation);
            }
        }
    }

    #[test]
    fn corrupted_wedge_signs_are_caught() {
        let module = MLambdaModule::new(2, vec![int(0)]);
        let keys = module.window_keys(2);
        for site in [
            crate::signs::SignSite::WedgeLowerSign,
            crate::signs::SignSite::WedgeRaiseSign,
        ] {
            let reports =
                check_appendix_relations(&module, &keys, &Signs::mutated(site)).unwrap();
            assert!(
                reports.iter().any(|r| !r.holds()),
                "no appendix relation caught the flipped sign at {site:?}"
            );
        }
    }

    #[test]
    fn full_module_axiom_on_a_window() {
        let module = MLambdaModule::new(2, vec![frac(1, 2)]);
        let keys = module.window_keys(1);
        let rep = check_gl_module_axiom(&module, &keys, &Signs::standard()).unwrap();
        assert!(rep.holds(), "{:?}", rep.violation);
    }

    #[test]
    fn l_span_examples() {
        // r = m, lam = (-1,...,-1): single key S = {1..m}, lam' = lam
        let module = MLambdaModule::new(2, vec![int(-1), int(-1)]);
        let l = LSubmodule::new(2, vec![int(-1), int(-1)], 2).unwrap();
        let keys: Vec<_> = module
            .window_keys(3)
            .into_iter()
            .filter(|k| l.contains_key(k))
            .collect();
        assert_eq!(keys.len(), 1);
        assert_eq!(keys[0].wedge, OddSet::from_iter([1, 2]));
        assert_eq!(keys[0].lam_prime, vec![int(-1), int(-1)]);

        // r = 0, lam = 0: single key at the bottom
        let module = MLambdaModule::new(2, vec![int(0)]);
        let l = LSubmodule::new(0, vec![int(0)], 2).unwrap();
        let keys: Vec<_> = module
            .window_keys(0)
            .into_iter()
            .filter(|k| l.contains_key(k))
            .collect();
        assert_eq!(keys.len(), 1);
        assert!(keys[0].wedge.is_empty());

        // r = 1, lam = 0, m = 2, n = 1: {e1 y(0), e2 y(0), y(1)}
        let module = MLambdaModule::new(2, vec![int(0)]);
        let l = LSubmodule::new(1, vec![int(0)], 2).unwrap();
        let keys: Vec<_> = module
            .window_keys(2)
            .into_iter()
            .filter(|k| l.contains_key(k))
            .collect();
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn l_descriptor_validation() {
        assert!(LSubmodule::new(1, vec![frac(1, 2)], 2).is_err());
        assert!(LSubmodule::new(2, vec![frac(1, 2)], 2).is_ok());
        assert!(LSubmodule::new(3, vec![int(0)], 2).is_err());
    }

    #[test]
    fn l_span_closed_under_action() {
        let module = MLambdaModule::new(2, vec![frac(1, 2)]);
        let l = LSubmodule::new(2, vec![frac(1, 2)], 2).unwrap();
        let keys: Vec<_> = module
            .window_keys(2)
            .into_iter()
            .filter(|k| l.contains_key(k))
            .collect();
        assert!(!keys.is_empty());
        for e in gl_basis(2, 1) {
            for k in &keys {
                let img = module.act(&e, &GradedVector::unit(k.clone())).unwrap();
                for (kk, _) in img.iter() {
                    assert!(l.contains_key(kk), "{e} maps {k} out of the span: {kk}");
                }
            }
        }
    }

    #[test]
    fn eigenvalue_dichotomy_on_wedge() {
        // (E_{i,i} - 1) E_{i,i} kills every key; delta_{r,i} E_{r,k} - E_{r,i} E_{r,k} too
        let module = MLambdaModule::new(2, vec![int(0)]);
        let keys = module.window_keys(2);
        for i in 1..=2usize {
            let eii = GlGenerator::new(i, i, 2, 1).unwrap();
            for k in &keys {
                let v = GradedVector::unit(k.clone());
                let ev = module.act(&eii, &v).unwrap();
                let twice = module.act(&eii, &ev).unwrap();
                assert_eq!(twice, ev, "E[{i},{i}] eigenvalues other than 0,1");
            }
        }
        for r in 1..=2usize {
            for i in 1..=2usize {
                for kk in 1..=2usize {
                    let erk = GlGenerator::new(r, kk, 2, 1).unwrap();
                    let eri = GlGenerator::new(r, i, 2, 1).unwrap();
                    for key in &keys {
                        let v = GradedVector::unit(key.clone());
                        let first = module.act(&erk, &v).unwrap();
                        let composed = module.act(&eri, &first, ).unwrap();
                        let delta = if r == i { first } else { GradedVector::zero() };
                        assert!(
                            (delta - composed).is_zero(),
                            "quadratic wedge identity fails at r={r}, i={i}, k={kk}, {key}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sign_twist_and_parity_change() {
        let module = MLambdaModule::new(1, vec![frac(1, 2)]);
        let twisted = module.sign_twisted();
        let shifted = module.parity_changed();
        let v = GradedVector::unit(module.key(OddSet::empty(), vec![frac(1, 2)]).unwrap());
        let raise = GlGenerator::new(1, 2, 1, 1).unwrap();
        let diag = GlGenerator::new(2, 2, 1, 1).unwrap();
        assert_eq!(
            twisted.act(&raise, &v).unwrap(),
            module.act(&raise, &v).unwrap().scaled(&int(-1))
        );
        assert_eq!(twisted.act(&diag, &v).unwrap(), module.act(&diag, &v).unwrap());
        // T . T = identity
        assert_eq!(
            twisted.sign_twisted().act(&raise, &v).unwrap(),
            module.act(&raise, &v).unwrap()
        );
        let k = module.key(OddSet::empty(), vec![frac(3, 2)]).unwrap();
        let ks = shifted.key(OddSet::empty(), vec![frac(3, 2)]).unwrap();
        assert_eq!(k.parity().flip(), ks.parity());
        assert_eq!(k.weight(), ks.weight());
    }
}
