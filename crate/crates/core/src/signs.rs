//! Centralized sign bookkeeping for the tensor-module actions.
//!
//! Every hard-coded sign of the superderivation action, the odd `gl(m,n)`
//! action and the intertwiner lives behind one of the methods below, so that
//! a test harness can flip any single one and watch the verification suites
//! catch it.

use crate::grading::Parity;

/// One flippable sign site.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignSite {
    /// The `(-1)^{|I|-1}` prefactor on the odd summands of the superalgebra
    /// homomorphism into `K (x) U(gl)`.
    PiOddPrefactor,
    /// The Koszul factor `(-1)^{|u|}` picked up when an odd matrix unit
    /// passes the tensor factor `u`.
    PiKoszulOddGl,
    /// The `(-1)^r` in the raising action `E_{i,m+j}` on wedge vectors.
    WedgeRaiseSign,
    /// The `(-1)^{r-s}` in the lowering action `E_{m+j,i}`.
    WedgeLowerSign,
    /// The `(-1)^{|u|-1}` prefactor on the odd summand of the intertwiner.
    SigmaOddPrefactor,
    /// The `(-1)^r` carried by the shift operator `t_j ^` on wedge vectors.
    SigmaShiftSign,
}

pub const ALL_SIGN_SITES: [SignSite; 6] = [
    SignSite::PiOddPrefactor,
    SignSite::PiKoszulOddGl,
    SignSite::WedgeRaiseSign,
    SignSite::WedgeLowerSign,
    SignSite::SigmaOddPrefactor,
    SignSite::SigmaShiftSign,
];

/// Sign provider; `standard()` in production, `mutated(site)` in the
/// sensitivity harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Signs {
    mutated: Option<SignSite>,
}

impl Signs {
    pub fn standard() -> Self {
        Signs { mutated: None }
    }

    pub fn mutated(site: SignSite) -> Self {
        Signs { mutated: Some(site) }
    }

    fn apply(&self, site: SignSite, sign: i64) -> i64 {
        if self.mutated == Some(site) {
            -sign
        } else {
            sign
        }
    }

    /// `(-1)^{|I|-1}`.
    pub fn pi_odd_prefactor(&self, i_len: usize) -> i64 {
        let sign = if i_len % 2 == 1 { 1 } else { -1 };
        self.apply(SignSite::PiOddPrefactor, sign)
    }

    /// `(-1)^{|u|}` for an odd matrix unit passing `u`.
    pub fn pi_koszul_odd_gl(&self, u: Parity) -> i64 {
        self.apply(SignSite::PiKoszulOddGl, u.sign())
    }

    /// `(-1)^r`.
    pub fn wedge_raise(&self, r: usize) -> i64 {
        let sign = if r.is_multiple_of(2) { 1 } else { -1 };
        self.apply(SignSite::WedgeRaiseSign, sign)
    }

    /// `(-1)^{r-s}`, given the count of wedge indices above the removed one.
    pub fn wedge_lower(&self, above: usize) -> i64 {
        let sign = if above.is_multiple_of(2) { 1 } else { -1 };
        self.apply(SignSite::WedgeLowerSign, sign)
    }

    /// `(-1)^{|u|-1}`.
    pub fn sigma_odd_prefactor(&self, u: Parity) -> i64 {
        self.apply(SignSite::SigmaOddPrefactor, -u.sign())
    }

    /// `(-1)^r` in `t_j ^`.
    pub fn sigma_shift(&self, r: usize) -> i64 {
        let sign = if r.is_multiple_of(2) { 1 } else { -1 };
        self.apply(SignSite::SigmaShiftSign, sign)
    }
}
