//! Named verification suites with seeded randomness and deterministic
//! reports.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evidence::{window_simplicity_evidence, WeightLocalSubmodule};
use crate::gln::{check_n_condition, TauMap};
use crate::grading::{koszul, OddSet};
use crate::linalg::{BasisKey, GradedVector, WeightSubspace};
use crate::mlambda::{check_appendix_relations, check_gl_module_axiom, MLambdaModule};
use crate::pmod::{PModule, WeightLine};
use crate::report::{Check, Report};
use crate::scalar::{format_scalar, frac, int, parse_rational, Scalar};
use crate::signs::Signs;
use crate::subquotient::{
    check_f_operator_closed, check_trivial_quotient_at_exceptional, is_sigma_exceptional,
    is_zero_exceptional, lemma45_defect, rank_table, sigma_kills_l, SubquotientCtx,
};
use crate::tensor::{MSide, TensorModule};
use crate::weyl::{weyl_mono_multiply, weyl_multiply, AlgebraShape, Variant, WeylElement, WeylMonomial};
use crate::witt::{witt_basis_up_to_degree, witt_bracket, witt_bracket_elem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Jacobi,
    WeylAssoc,
    ModuleAxiom,
    AppendixA,
    NCondition,
    Tau,
    SigmaNilpotent,
    SigmaIntertwine,
    Dichotomy,
    Lemma45,
    SubquotientRanks,
    FtildeStabilize,
    SimplicityEvidence,
    Character,
}

pub const ALL_SUITES: [SuiteName; 14] = [
    SuiteName::Jacobi,
    SuiteName::WeylAssoc,
    SuiteName::ModuleAxiom,
    SuiteName::AppendixA,
    SuiteName::NCondition,
    SuiteName::Tau,
    SuiteName::SigmaNilpotent,
    SuiteName::SigmaIntertwine,
    SuiteName::Dichotomy,
    SuiteName::Lemma45,
    SuiteName::SubquotientRanks,
    SuiteName::FtildeStabilize,
    SuiteName::SimplicityEvidence,
    SuiteName::Character,
];

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Jacobi => "jacobi",
            SuiteName::WeylAssoc => "weyl-assoc",
            SuiteName::ModuleAxiom => "module-axiom",
            SuiteName::AppendixA => "appendix-A",
            SuiteName::NCondition => "N-condition",
            SuiteName::Tau => "tau",
            SuiteName::SigmaNilpotent => "sigma-nilpotent",
            SuiteName::SigmaIntertwine => "sigma-intertwine",
            SuiteName::Dichotomy => "dichotomy",
            SuiteName::Lemma45 => "lemma45",
            SuiteName::SubquotientRanks => "subquotient-ranks",
            SuiteName::FtildeStabilize => "ftilde-stabilize",
            SuiteName::SimplicityEvidence => "simplicity-evidence",
            SuiteName::Character => "character",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_SUITES
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

/// Parameters of one suite run. All parameters are validated before any
/// computation starts.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub m: usize,
    pub n: usize,
    pub variant: Variant,
    pub p_factors: Vec<WeightLine>,
    pub p_parity_shift: bool,
    pub p_sign_twist: bool,
    pub lambda: Vec<Scalar>,
    pub r: Option<usize>,
    pub weight_radius: i64,
    pub op_degree: i64,
    pub samples: u32,
    pub seed: u64,
    pub out_path: Option<PathBuf>,
}

impl SuiteConfig {
    /// A config with defaulted parameters: polynomial natural `P`, zero
    /// `lambda`, radius 3, degree 3, 200 samples.
    pub fn new(suite: SuiteName, m: usize, n: usize, variant: Variant) -> Self {
        let line = match variant {
            Variant::Polynomial => WeightLine::PolyLine,
            Variant::Laurent => WeightLine::FullLaurent(frac(1, 2)),
        };
        SuiteConfig {
            suite,
            m,
            n,
            variant,
            p_factors: vec![line; m],
            p_parity_shift: false,
            p_sign_twist: false,
            lambda: vec![Scalar::from_integer(0.into()); n],
            r: None,
            weight_radius: 3,
            op_degree: 3,
            samples: 200,
            seed: 0,
            out_path: None,
        }
    }

    pub fn with_lambda(mut self, lambda: Vec<Scalar>) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_p_factors(mut self, p: Vec<WeightLine>) -> Self {
        self.p_factors = p;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_radius(mut self, radius: i64) -> Self {
        self.weight_radius = radius;
        self
    }

    pub fn with_degree(mut self, degree: i64) -> Self {
        self.op_degree = degree;
        self
    }

    pub fn with_samples(mut self, samples: u32) -> Self {
        self.samples = samples;
        self
    }

    fn shape(&self) -> Result<AlgebraShape> {
        AlgebraShape::new(self.m, self.n, self.variant).map_err(config_err)
    }

    fn p_module(&self) -> Result<PModule> {
        let mut p = PModule::new(self.shape()?, self.p_factors.clone()).map_err(config_err)?;
        p.parity_shift = self.p_parity_shift;
        p.sign_twist = self.p_sign_twist;
        Ok(p)
    }

    fn validate_common(&self) -> Result<()> {
        self.shape()?;
        if self.lambda.len() != self.n {
            return Err(Error::Config(format!(
                "lambda has {} coordinates but n = {}",
                self.lambda.len(),
                self.n
            )));
        }
        if self.p_factors.len() != self.m {
            return Err(Error::Config(format!(
                "{} P factors given but m = {}",
                self.p_factors.len(),
                self.m
            )));
        }
        if self.weight_radius < 0 || self.op_degree < 1 {
            return Err(Error::Config("need weight_radius >= 0 and op_degree >= 1".into()));
        }
        self.p_module()?;
        Ok(())
    }

    /// Effective submodule parameter: `r` defaults to `m`.
    fn effective_r(&self) -> usize {
        self.r.unwrap_or(self.m)
    }

    fn l_tensor_module(&self) -> Result<TensorModule> {
        TensorModule::l_restricted(self.p_module()?, self.effective_r(), self.lambda.clone())
            .map_err(config_err)
    }

    fn full_tensor_module(&self) -> Result<TensorModule> {
        TensorModule::full(self.p_module()?, self.lambda.clone()).map_err(config_err)
    }

    /// Deterministic JSON echo of the configuration (out_path excluded).
    pub fn to_value(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.as_str(),
            "m": self.m,
            "n": self.n,
            "variant": self.variant.to_string(),
            "p_factors": self.p_factors.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "p_parity_shift": self.p_parity_shift,
            "p_sign_twist": self.p_sign_twist,
            "lambda": self.lambda.iter().map(format_scalar).collect::<Vec<_>>(),
            "r": self.r,
            "weight_radius": self.weight_radius,
            "op_degree": self.op_degree,
            "samples": self.samples,
            "seed": self.seed,
        })
    }
}

fn config_err(e: Error) -> Error {
    match e {
        Error::InvalidDescriptor(msg) | Error::ShapeMismatch(msg) => Error::Config(msg),
        other => other,
    }
}

/// Parse the CLI grammar for `P` factors: comma-separated
/// `poly | quot | shift:<rat> | laurent:<rat>`.
pub fn parse_p_factors(s: &str) -> Result<Vec<WeightLine>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok == "poly" {
                Ok(WeightLine::PolyLine)
            } else if tok == "quot" {
                Ok(WeightLine::QuotientLine)
            } else if let Some(c) = tok.strip_prefix("shift:") {
                Ok(WeightLine::ShiftedLaurent(parse_rational(c)?))
            } else if let Some(c) = tok.strip_prefix("laurent:") {
                Ok(WeightLine::FullLaurent(parse_rational(c)?))
            } else {
                Err(Error::Config(format!("unknown P factor `{tok}`")))
            }
        })
        .collect()
}

fn sample<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

fn random_weyl_monomial(rng: &mut ChaCha8Rng, shape: &AlgebraShape) -> WeylMonomial {
    let lo = if shape.variant == Variant::Laurent { -2i64 } else { 0 };
    let t_exp: Vec<i64> = (0..shape.m).map(|_| rng.random_range(lo..=2)).collect();
    let dt_exp: Vec<u64> = (0..shape.m).map(|_| rng.random_range(0..=2)).collect();
    let xi = OddSet(rng.random_range(0..(1u32 << shape.n)));
    let dxi = OddSet(rng.random_range(0..(1u32 << shape.n)));
    WeylMonomial::new(t_exp, xi, dt_exp, dxi, shape.n)
}

/// Run one suite and assemble its report. `Err` means the configuration was
/// rejected before any computation.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    run_suite_with_signs(config, &Signs::standard())
}

/// Same, with an injected sign table (used by the mutation harness).
pub fn run_suite_with_signs(config: &SuiteConfig, signs: &Signs) -> Result<Report> {
    config.validate_common()?;
    let started = Instant::now();
    let checks = match config.suite {
        SuiteName::Jacobi => jacobi_checks(config)?,
        SuiteName::WeylAssoc => weyl_assoc_checks(config)?,
        SuiteName::ModuleAxiom => module_axiom_checks(config, signs)?,
        SuiteName::AppendixA => appendix_checks(config, signs)?,
        SuiteName::NCondition => n_condition_checks(config)?,
        SuiteName::Tau => tau_checks(config)?,
        SuiteName::SigmaNilpotent => sigma_nilpotent_checks(config, signs)?,
        SuiteName::SigmaIntertwine => sigma_intertwine_checks(config, signs)?,
        SuiteName::Dichotomy => dichotomy_checks(config, signs)?,
        SuiteName::Lemma45 => lemma45_checks(config, signs)?,
        SuiteName::SubquotientRanks => subquotient_rank_checks(config, signs)?,
        SuiteName::FtildeStabilize => ftilde_checks(config, signs)?,
        SuiteName::SimplicityEvidence => simplicity_checks(config, signs)?,
        SuiteName::Character => character_checks(config)?,
    };
    Ok(Report {
        suite: config.suite.to_string(),
        config: config.to_value(),
        checks,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn jacobi_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let shape = config.shape()?;
    let basis = witt_basis_up_to_degree(&shape, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();

    let mut anti_violation = None;
    let mut grading_violation = None;
    for _ in 0..config.samples {
        let x = sample(&mut rng, &basis);
        let y = sample(&mut rng, &basis);
        let xy = witt_bracket(x, y)?;
        let yx = witt_bracket(y, x)?;
        let sign = koszul(x.parity(), y.parity());
        if anti_violation.is_none() && !xy.combine(&int(sign), &yx).is_zero() {
            anti_violation = Some(format!("[{x},{y}] + sign [{y},{x}] != 0"));
        }
        if grading_violation.is_none() && !xy.is_zero() {
            let expect_w = x.weight().add(&y.weight());
            let expect_p = x.parity() + y.parity();
            for (k, _) in xy.iter() {
                if k.weight() != expect_w || k.parity() != expect_p {
                    grading_violation = Some(format!("[{x},{y}] has a term {k} off grade"));
                    break;
                }
            }
        }
    }
    checks.push(Check::outcome("super-antisymmetry", anti_violation));
    checks.push(Check::outcome("bracket-grading-additive", grading_violation));

    let mut jacobi_violation = None;
    for _ in 0..config.samples {
        let x = sample(&mut rng, &basis);
        let y = sample(&mut rng, &basis);
        let z = sample(&mut rng, &basis);
        let mut total = GradedVector::zero();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            let inner = witt_bracket(a, b)?;
            let term = witt_bracket_elem(&inner, &GradedVector::unit(c.clone()))?;
            total.add_scaled(&int(koszul(a.parity(), c.parity())), &term);
        }
        if !total.is_zero() {
            jacobi_violation = Some(format!("triple ({x}, {y}, {z})"));
            break;
        }
    }
    checks.push(Check::outcome("super-jacobi", jacobi_violation));
    Ok(checks)
}

fn weyl_assoc_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let shape = config.shape()?;
    let p = config.p_module()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();

    let mut assoc_violation = None;
    let mut grading_violation = None;
    for _ in 0..config.samples {
        let a = random_weyl_monomial(&mut rng, &shape);
        let b = random_weyl_monomial(&mut rng, &shape);
        let c = random_weyl_monomial(&mut rng, &shape);
        let ab = weyl_mono_multiply(&a, &b)?;
        let bc = weyl_mono_multiply(&b, &c)?;
        let lhs = weyl_multiply(&ab, &WeylElement::unit(c.clone()))?;
        let rhs = weyl_multiply(&WeylElement::unit(a.clone()), &bc)?;
        if assoc_violation.is_none() && lhs != rhs {
            assoc_violation = Some(format!("({a})({b})({c})"));
        }
        if grading_violation.is_none() && !ab.is_zero() {
            let expect_w = a.weight().add(&b.weight());
            let expect_p = a.parity() + b.parity();
            for (k, _) in ab.iter() {
                if k.weight() != expect_w || k.parity() != expect_p {
                    grading_violation = Some(format!("({a})({b}) has a term {k} off grade"));
                    break;
                }
            }
        }
    }
    checks.push(Check::outcome("weyl-associative", assoc_violation));
    checks.push(Check::outcome("weyl-grading-additive", grading_violation));

    // the P action is a genuine module action for the multiplication
    let p_keys = p.window_keys(config.weight_radius);
    let mut compat_violation = None;
    let mut weight_violation = None;
    let mut twist_violation = None;
    if p_keys.is_empty() {
        return Err(Error::Config("P has no keys near its anchor".into()));
    }
    let twisted = p.sign_twisted();
    for _ in 0..config.samples {
        let a = random_weyl_monomial(&mut rng, &shape);
        let b = random_weyl_monomial(&mut rng, &shape);
        let u = GradedVector::unit(sample(&mut rng, &p_keys).clone());
        let ab = weyl_mono_multiply(&a, &b)?;
        let lhs = p.act(&ab, &u)?;
        let rhs = p.act_mono(&a, &p.act_mono(&b, &u)?)?;
        if compat_violation.is_none() && lhs != rhs {
            compat_violation = Some(format!("({a})({b}) on {u}"));
        }
        let bu = p.act_mono(&b, &u)?;
        if weight_violation.is_none() && !bu.is_zero() {
            let expect = u.homogeneous_weight()?.expect("unit").add(&b.weight());
            if bu.homogeneous_weight()? != Some(expect) {
                weight_violation = Some(format!("({b}) on {u}"));
            }
        }
        if twist_violation.is_none() {
            let plain = p.act_mono(&b, &u)?;
            let tw = twisted.act_mono(&b, &u)?;
            let expected = plain.scaled(&int(b.parity().sign()));
            if tw != expected {
                twist_violation = Some(format!("({b}) on {u}"));
            }
        }
    }
    checks.push(Check::outcome("p-action-compatible", compat_violation));
    checks.push(Check::outcome("p-action-weight-additive", weight_violation));
    checks.push(Check::outcome("p-sign-twist-scales-odd", twist_violation));
    Ok(checks)
}

fn module_axiom_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let shape = config.shape()?;
    let gens = witt_basis_up_to_degree(&shape, config.op_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();

    let mut targets: Vec<(String, TensorModule)> =
        vec![("M(lambda)".into(), config.full_tensor_module()?)];
    match config.l_tensor_module() {
        Ok(tm) => targets.push((format!("L(V({}),N(lambda))", config.effective_r()), tm)),
        Err(Error::Config(_)) => {}
        Err(e) => return Err(e),
    }

    for (label, tm) in targets {
        let keys = tm.window_keys(config.weight_radius);
        if keys.is_empty() {
            checks.push(Check::skipped(
                format!("bracket-compat@{label}"),
                "no keys in window",
            ));
            continue;
        }
        let mut violation = None;
        for _ in 0..config.samples {
            let x = sample(&mut rng, &gens);
            let y = sample(&mut rng, &gens);
            let w = GradedVector::unit(sample(&mut rng, &keys).clone());
            let defect = tm.module_axiom_defect(x, y, &w, signs)?;
            if !defect.is_zero() {
                violation = Some(format!("x = {x}, y = {y}, w = {w}"));
                break;
            }
        }
        checks.push(Check::outcome(format!("bracket-compat@{label}"), violation));
    }
    Ok(checks)
}

fn appendix_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    if config.m == 0 {
        return Ok(vec![Check::skipped(
            "appendix-relations",
            "no even indices at m = 0",
        )]);
    }
    let mmod = MLambdaModule::new(config.m, config.lambda.clone());
    let keys = mmod.window_keys(config.weight_radius);
    let mut checks = Vec::new();
    for rep in check_appendix_relations(&mmod, &keys, signs)? {
        checks.push(Check::outcome(rep.name.clone(), rep.violation.clone()));
    }
    let axiom = check_gl_module_axiom(&mmod, &keys, signs)?;
    checks.push(Check::outcome(axiom.name.clone(), axiom.violation));
    Ok(checks)
}

fn n_condition_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    if config.n < 2 {
        return Ok(vec![Check::skipped("N-condition", "needs n >= 2")]);
    }
    let rep = check_n_condition(&config.lambda, config.weight_radius)?;
    Ok(vec![Check::outcome(rep.name.clone(), rep.violation)])
}

fn tau_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    if config.n != 2 {
        return Ok(vec![Check::skipped("tau-intertwines", "needs n = 2")]);
    }
    let tau = TauMap::new([config.lambda[0].clone(), config.lambda[1].clone()]);
    // refuse singular parameters over the window up front
    for s in -(config.weight_radius + 1)..=(config.weight_radius + 1) {
        if let Err(Error::SingularParameter(msg)) = tau.coefficient(s) {
            return Err(Error::Config(msg));
        }
    }
    let mut checks =
        vec![Check::pass_with("tau-twist-parameter", format!("b = {}", format_scalar(&tau.b())))];
    let rep = tau.check_intertwines(config.weight_radius)?;
    checks.push(Check::outcome(rep.name.clone(), rep.violation));
    Ok(checks)
}

fn sigma_nilpotent_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.full_tensor_module()?;
    let mut square = None;
    let mut weight = None;
    let mut parity = None;
    for key in tm.window_keys(config.weight_radius) {
        let v = GradedVector::unit(key.clone());
        let sv = tm.sigma_with(&v, signs)?;
        if square.is_none() && !tm.sigma_with(&sv, signs)?.is_zero() {
            square = Some(format!("sigma^2 != 0 at {key}"));
        }
        if sv.is_zero() {
            continue;
        }
        if weight.is_none() && sv.homogeneous_weight()? != Some(key.weight()) {
            weight = Some(format!("weight moved at {key}"));
        }
        if parity.is_none() && sv.homogeneous_parity()? != Some(key.parity()) {
            parity = Some(format!("parity moved at {key}"));
        }
    }
    Ok(vec![
        Check::outcome("sigma-squared-zero", square),
        Check::outcome("sigma-preserves-weight", weight),
        Check::outcome("sigma-preserves-parity", parity),
    ])
}

fn sigma_intertwine_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.full_tensor_module()?;
    let shape = config.shape()?;
    let gens = witt_basis_up_to_degree(&shape, config.op_degree);
    let keys = tm.window_keys(config.weight_radius);
    if keys.is_empty() {
        return Err(Error::Config("no keys in window".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut violation = None;
    for _ in 0..config.samples {
        let x = sample(&mut rng, &gens);
        let w = GradedVector::unit(sample(&mut rng, &keys).clone());
        let defect = tm.sigma_intertwine_defect(x, &w, signs)?;
        if !defect.is_zero() {
            violation = Some(format!("x = {x}, w = {w}, defect = {defect}"));
            break;
        }
    }
    Ok(vec![Check::outcome("sigma-intertwines", violation)])
}

fn dichotomy_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.l_tensor_module()?;
    let l = match &tm.restrict {
        MSide::LSub(l) => l.clone(),
        MSide::Full => unreachable!(),
    };
    let (kills, witness) = sigma_kills_l(&tm, config.weight_radius, signs)?;
    let expected = is_sigma_exceptional(&l, config.m);
    let witness_str = match &witness {
        Some(k) => format!("sigma survives on {k}"),
        None => "sigma kills every window vector".to_string(),
    };
    let check = if kills == expected {
        Check::pass_with("dichotomy-matches-predicate", witness_str)
    } else {
        Check::fail(
            "dichotomy-matches-predicate",
            format!("kills = {kills}, predicate = {expected}; {witness_str}"),
        )
    };
    Ok(vec![check])
}

fn lemma45_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.l_tensor_module()?;
    let mut ctx = SubquotientCtx::new(&tm, *signs)?;
    let shape = config.shape()?;
    let gens = witt_basis_up_to_degree(&shape, config.op_degree);
    let keys = tm.window_keys(config.weight_radius.min(2));
    if keys.is_empty() {
        return Err(Error::Config("no keys in window".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut violation = None;
    for _ in 0..config.samples {
        let x = sample(&mut rng, &gens);
        let key = sample(&mut rng, &keys);
        let (ok, target) = lemma45_defect(&mut ctx, x, key)?;
        if !ok {
            violation = Some(format!("x = {x}, w = {key}, defect outside F at {target}"));
            break;
        }
    }
    Ok(vec![Check::outcome("lemma45-congruence", violation)])
}

fn subquotient_rank_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.l_tensor_module()?;
    let l = match &tm.restrict {
        MSide::LSub(l) => l.clone(),
        MSide::Full => unreachable!(),
    };
    let mut ctx = SubquotientCtx::new(&tm, *signs)?;
    let mut checks = Vec::new();

    let table = rank_table(&mut ctx, config.weight_radius)?;
    let table_str = table
        .rows
        .iter()
        .map(|(w, f, d)| format!("{w}:{f}/{d}"))
        .collect::<Vec<_>>()
        .join(" ");
    checks.push(Check::pass_with("rank-table", table_str));

    let closure_radius = config.weight_radius.min(2);
    let closure_degree = config.op_degree.min(2);
    checks.push(Check::outcome(
        "f-operator-closed",
        check_f_operator_closed(&mut ctx, closure_radius, closure_degree)?,
    ));

    if is_zero_exceptional(&l) {
        let zero = table.rows.iter().all(|(_, f, _)| *f == 0);
        checks.push(if zero {
            Check::pass("f-zero-at-zero-pair")
        } else {
            Check::fail("f-zero-at-zero-pair", "F(P,0,0) != 0")
        });
    } else if is_sigma_exceptional(&l, config.m) {
        checks.push(Check::outcome(
            "generators-map-into-f",
            check_trivial_quotient_at_exceptional(&mut ctx, closure_radius, closure_degree)?,
        ));
        let mut quotient_total = 0;
        for w in tm.weight_window(config.weight_radius) {
            let f = ctx.f_sub(&w)?;
            let lsp = ctx.l_space(&w)?;
            quotient_total += lsp.quotient_dim(&f)?;
        }
        checks.push(Check::pass_with(
            "trivial-quotient-dimension",
            quotient_total.to_string(),
        ));
    } else {
        checks.push(if table.some_nonzero {
            Check::pass("f-nonzero")
        } else {
            Check::fail("f-nonzero", "F(P,r,lambda) = 0 on the whole window")
        });
        checks.push(if table.some_proper {
            Check::pass("f-proper")
        } else {
            Check::fail("f-proper", "F(P,r,lambda) exhausts every weight space")
        });
    }
    Ok(checks)
}

fn ftilde_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.l_tensor_module()?;
    let l = match &tm.restrict {
        MSide::LSub(l) => l.clone(),
        MSide::Full => unreachable!(),
    };
    let mut ctx = SubquotientCtx::new(&tm, *signs)?;
    let degrees = [config.op_degree - 1, config.op_degree, config.op_degree + 1];
    let exceptional = is_sigma_exceptional(&l, config.m);

    let mut monotone = None;
    let mut stabilized = true;
    let mut contains_f = None;
    let mut kernel_match = None;
    let mut full_at_exceptional = None;
    let mut rank_rows = Vec::new();
    for w in tm.weight_window(config.weight_radius) {
        if tm.keys_at_weight(&w).is_empty() {
            continue;
        }
        let spaces: Vec<WeightSubspace<_>> = degrees
            .iter()
            .map(|&d| ctx.f_tilde(&w, d))
            .collect::<Result<_>>()?;
        for pair in spaces.windows(2) {
            if monotone.is_none() && !pair[1].is_subspace_of(&pair[0])? {
                monotone = Some(format!("F~ grew with the degree at {w}"));
            }
        }
        if spaces[1].rank() != spaces[2].rank() {
            stabilized = false;
        }
        rank_rows.push(format!(
            "{w}:{}",
            spaces.iter().map(|s| s.rank().to_string()).collect::<Vec<_>>().join(">")
        ));
        let f = ctx.f_sub(&w)?;
        if contains_f.is_none() && !f.is_subspace_of(&spaces[2])? {
            contains_f = Some(format!("F not inside F~ at {w}"));
        }
        if exceptional {
            if full_at_exceptional.is_none()
                && spaces[2].rank() != tm.keys_at_weight(&w).len()
            {
                full_at_exceptional = Some(format!("F~ proper at {w}"));
            }
        } else if kernel_match.is_none() {
            let ker = ctx.ker_sigma_in_l(&w)?;
            if !spaces[2].equals(&ker)? {
                kernel_match = Some(format!(
                    "F~ rank {} vs ker sigma rank {} at {w}",
                    spaces[2].rank(),
                    ker.rank()
                ));
            }
        }
    }
    let mut checks = vec![
        Check::outcome("ftilde-monotone", monotone),
        Check::evidence(
            "ftilde-stabilized",
            stabilized,
            Some(rank_rows.join(" ")),
        ),
        Check::outcome("ftilde-contains-f", contains_f),
    ];
    if exceptional {
        checks.push(Check::outcome("ftilde-full-at-exceptional", full_at_exceptional));
        checks.push(Check::skipped("ftilde-equals-ker-sigma", "exceptional pair"));
    } else {
        checks.push(Check::outcome("ftilde-equals-ker-sigma", kernel_match));
    }
    Ok(checks)
}

fn simplicity_checks(config: &SuiteConfig, signs: &Signs) -> Result<Vec<Check>> {
    let tm = config.l_tensor_module()?;
    let l = match &tm.restrict {
        MSide::LSub(l) => l.clone(),
        MSide::Full => unreachable!(),
    };
    let inner = tm.weight_window(config.weight_radius.min(1));
    let outer = tm.weight_window(config.weight_radius);
    let module = WeightLocalSubmodule::full_module(&tm, &outer)?;
    let mut checks = Vec::new();

    if is_zero_exceptional(&l) && tm.p.is_natural() {
        // the natural module: the constants span an invariant line
        let outcome =
            window_simplicity_evidence(&tm, &module, None, &inner, &outer, config.op_degree, signs)?;
        let constant_failed = outcome.seeds.iter().any(|s| !s.covered);
        checks.push(Check::evidence(
            "natural-detects-invariant-line",
            constant_failed,
            Some(format!(
                "{} of {} seeds regenerate the window",
                outcome.seeds.iter().filter(|s| s.covered).count(),
                outcome.seeds.len()
            )),
        ));
        // quotient by the constants is simple on the window
        let zero_w = tm.anchor_weight();
        let ambient0 = tm.ambient_keys_at_weight(&zero_w);
        let constant_keys = tm.keys_at_weight(&zero_w);
        let constants = WeightSubspace::span(
            ambient0,
            &constant_keys.into_iter().map(GradedVector::unit).collect::<Vec<_>>(),
        )?;
        let mut sub = WeightLocalSubmodule::empty();
        sub.per_weight.insert(zero_w, constants);
        let outcome = window_simplicity_evidence(
            &tm,
            &module,
            Some(&sub),
            &inner,
            &outer,
            config.op_degree,
            signs,
        )?;
        checks.push(Check::evidence(
            "natural-quotient-simple-evidence",
            outcome.all_covered(),
            first_missed(&outcome),
        ));
        return Ok(checks);
    }

    // quotient by F~ (simple away from the exceptional pair)
    let mut ctx = SubquotientCtx::new(&tm, *signs)?;
    let mut ftilde = WeightLocalSubmodule::empty();
    let mut f_family = WeightLocalSubmodule::empty();
    for w in &outer {
        if tm.keys_at_weight(w).is_empty() {
            continue;
        }
        ftilde.per_weight.insert(w.clone(), ctx.f_tilde(w, config.op_degree)?);
        f_family.per_weight.insert(w.clone(), ctx.f_sub(w)?);
    }
    if is_sigma_exceptional(&l, config.m) {
        checks.push(Check::skipped(
            "quotient-by-ftilde-simple-evidence",
            "exceptional pair: the quotient is zero or trivial",
        ));
    } else if module
        .per_weight
        .iter()
        .all(|(w, s)| ftilde.rank_at(w) == s.rank())
    {
        checks.push(Check::skipped(
            "quotient-by-ftilde-simple-evidence",
            "F~ exhausts the window",
        ));
    } else {
        let outcome = window_simplicity_evidence(
            &tm,
            &module,
            Some(&ftilde),
            &inner,
            &outer,
            config.op_degree,
            signs,
        )?;
        checks.push(Check::evidence(
            "quotient-by-ftilde-simple-evidence",
            outcome.all_covered(),
            first_missed(&outcome),
        ));
    }

    if f_family.total_rank() == 0 {
        checks.push(Check::skipped("f-sub-simple-evidence", "F(P,r,lambda) = 0"));
    } else {
        let outcome = window_simplicity_evidence(
            &tm,
            &f_family,
            None,
            &inner,
            &outer,
            config.op_degree,
            signs,
        )?;
        checks.push(Check::evidence(
            "f-sub-simple-evidence",
            outcome.all_covered(),
            first_missed(&outcome),
        ));
    }
    Ok(checks)
}

fn first_missed(outcome: &crate::evidence::EvidenceOutcome) -> Option<String> {
    outcome
        .seeds
        .iter()
        .find(|s| !s.covered)
        .map(|s| {
            let missed = s.missed.as_ref().map_or(String::new(), |w| w.to_string());
            format!("seed {} at {} misses {missed}", s.seed, s.weight)
        })
        .or_else(|| Some(format!("{} seeds, all covered", outcome.seeds.len())))
}

fn character_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let tm = match config.l_tensor_module() {
        Ok(tm) => tm,
        Err(Error::Config(_)) => config.full_tensor_module()?,
        Err(e) => return Err(e),
    };
    let character = tm.support_character(config.weight_radius);
    let table = character
        .iter()
        .map(|(w, d)| format!("{w}:{d}"))
        .collect::<Vec<_>>()
        .join(" ");
    let mut checks = vec![Check::pass_with("character-table", table)];

    let mut flipped = tm.clone();
    flipped.p = flipped.p.parity_changed();
    let violation = if flipped.support_character(config.weight_radius) != character {
        Some("parity change moved dimensions".to_string())
    } else {
        let w = tm.anchor_weight();
        let before: Vec<_> = tm.keys_at_weight(&w).iter().map(|k| k.parity()).collect();
        let after: Vec<_> = flipped.keys_at_weight(&w).iter().map(|k| k.parity()).collect();
        if before.iter().zip(&after).all(|(a, b)| a.flip() == *b) {
            None
        } else {
            Some("parities did not flip".to_string())
        }
    };
    checks.push(Check::outcome("parity-change-preserves-character", violation));
    Ok(checks)
}

/// The default verification grid: every suite that applies, over
/// `(m, n)` in `{(1,1),(2,1),(1,2),(2,2),(0,1),(0,2)}`, both variants where
/// they differ, and `lambda` in `{0, (-1,..,-1), generic}`.
pub fn default_grid(seed: u64) -> Vec<SuiteConfig> {
    let mut configs = Vec::new();
    let generic = [frac(1, 2), frac(1, 3), frac(1, 5)];
    for &(m, n) in &[(1usize, 1usize), (2, 1), (1, 2), (2, 2), (0, 1), (0, 2)] {
        let variants: &[Variant] = if m == 0 {
            &[Variant::Polynomial]
        } else {
            &[Variant::Polynomial, Variant::Laurent]
        };
        for &variant in variants {
            let lambdas: Vec<Vec<Scalar>> = vec![
                vec![int(0); n],
                vec![int(-1); n],
                generic[..n].to_vec(),
            ];
            for lambda in lambdas {
                for suite in ALL_SUITES {
                    // tau needs non-integer lambda: integer coordinates make
                    // a denominator binomial vanish inside the window
                    if suite == SuiteName::Tau && lambda.iter().any(|x| x.is_integer()) {
                        continue;
                    }
                    // keep the heavy window computations on smaller windows
                    let heavy = matches!(
                        suite,
                        SuiteName::SubquotientRanks
                            | SuiteName::FtildeStabilize
                            | SuiteName::SimplicityEvidence
                            | SuiteName::Lemma45
                    );
                    let radius = if heavy {
                        if m + n >= 4 {
                            1
                        } else {
                            2
                        }
                    } else {
                        3
                    };
                    let samples = if heavy { 50 } else { 200 };
                    let cfg = SuiteConfig::new(suite, m, n, variant)
                        .with_lambda(lambda.clone())
                        .with_r(m)
                        .with_seed(seed)
                        .with_radius(radius)
                        .with_samples(samples);
                    configs.push(cfg);
                }
            }
        }
    }
    configs
}
