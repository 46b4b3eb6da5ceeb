//! Executable checks for the structural results on combined matrices of
//! sign-regular matrices.
//!
//! Each check evaluates its own hypothesis. A check that does not apply
//! reports [`Status::PreconditionNotMet`]; [`Status::Fails`] is reserved for
//! inputs that satisfy the hypothesis but violate the conclusion.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{
    classify, is_assr, is_irreducible, is_signed_diagonal_dn, signature_of_conjugated_inverse, signature_of_pna,
    sr_signature, AssrOutcome, ClassifyError, ClassifyOptions, Signature, SignRegularity, Witness,
    DEFAULT_MAX_ORDER,
};
use crate::combined::{combined_with, row_col_sums};
use crate::exact::rational::serde_exact;
use crate::exact::{alternating_sign, backward_identity, checkerboard_conjugate, flip_rows, MatrixError, RMatrix, Rational};
use crate::gen::{random_permutation, random_signed_diagonal, trial_rng};
use crate::par::{self, Execution};
use crate::patterns::{checkerboard_class, zero_pattern, Checkerboard, StaircaseType};

/// Default number of random transformations per matrix in
/// [`check_lemma_invariances`].
pub const DEFAULT_TRIALS: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Registry of checks, in the order [`run_all_checks`] executes them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    ZeroPatternEquivalence,
    StaircasePreservation,
    SrCombinedEquivalence,
    LemmaInvariances,
    SignatureLaws,
    Checkerboard,
    RowColSums,
    AbsCombined,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::ZeroPatternEquivalence,
        CheckId::StaircasePreservation,
        CheckId::SrCombinedEquivalence,
        CheckId::LemmaInvariances,
        CheckId::SignatureLaws,
        CheckId::Checkerboard,
        CheckId::RowColSums,
        CheckId::AbsCombined,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::ZeroPatternEquivalence => "zero_pattern_equivalence",
            CheckId::StaircasePreservation => "staircase_preservation",
            CheckId::SrCombinedEquivalence => "sr_combined_equivalence",
            CheckId::LemmaInvariances => "lemma_invariances",
            CheckId::SignatureLaws => "signature_laws",
            CheckId::Checkerboard => "checkerboard",
            CheckId::RowColSums => "row_col_sums",
            CheckId::AbsCombined => "abs_combined",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    PreconditionNotMet,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::PreconditionNotMet => "precondition_not_met",
        })
    }
}

/// Supporting data attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// First position where `a_ij != 0` and `c_ij != 0` disagree.
    PatternMismatch {
        row: usize,
        col: usize,
        #[serde(with = "serde_exact")]
        a: Rational,
        #[serde(with = "serde_exact")]
        c: Rational,
    },
    Staircase { matrix: StaircaseType, combined: StaircaseType },
    /// The four conditions of the SR/combined equivalence.
    Conditions { combined_sr: bool, combined_nonnegative: bool, signed_monomial: bool, identity_or_flip: bool },
    /// A transformation identity that did not hold.
    Transform { trial: Option<usize>, identity: String },
    Signature { law: String, predicted: Option<Signature>, found: Option<Signature> },
    Checkerboard { class: Checkerboard },
    Sums {
        #[serde(with = "serde_exact_vec")]
        rows: Vec<Rational>,
        #[serde(with = "serde_exact_vec")]
        cols: Vec<Rational>,
    },
    AbsCombined {
        is_sr: bool,
        is_ssr: bool,
        is_assr: bool,
        staircase: StaircaseType,
        signature: Option<Signature>,
        assr_signature: Option<Signature>,
        /// Why `|C(A)|` is not SR, if it is not.
        witness: Option<Witness>,
        /// `|C(A)| = S_n C(A) S_n`.
        equals_checkerboard_conjugate: bool,
    },
}

mod serde_exact_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub evidence: Option<Evidence>,
    pub note: Option<String>,
}

impl Verdict {
    fn holds(evidence: Option<Evidence>) -> Self {
        Verdict { status: Status::Holds, evidence, note: None }
    }

    fn fails(evidence: Evidence, note: impl Into<String>) -> Self {
        Verdict { status: Status::Fails, evidence: Some(evidence), note: Some(note.into()) }
    }

    fn not_met(reason: impl Into<String>, evidence: Option<Evidence>) -> Self {
        Verdict { status: Status::PreconditionNotMet, evidence, note: Some(reason.into()) }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fails
    }
}

/// Facts about the input that the checks relied on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputFacts {
    pub order: usize,
    pub nonsingular: bool,
    pub is_sr: bool,
    pub is_assr: bool,
    pub staircase: StaircaseType,
    pub signature: Option<Signature>,
    pub assr_signature: Option<Signature>,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub verdict: Verdict,
    pub facts: InputFacts,
    /// Seed of randomized checks.
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_order: usize,
    pub exec: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { trials: DEFAULT_TRIALS, seed: 0, max_order: DEFAULT_MAX_ORDER, exec: Execution::default() }
    }
}

impl CheckConfig {
    fn classify_options(&self) -> ClassifyOptions {
        ClassifyOptions { max_order: self.max_order, exec: self.exec }
    }
}

/// Classification of one input and its combined matrix, shared by all
/// checks.
#[derive(Clone, Debug)]
pub struct Analysis {
    a: RMatrix,
    config: CheckConfig,
    sr: SignRegularity,
    assr: AssrOutcome,
    irreducible: bool,
    combined: Option<RMatrix>,
}

impl Analysis {
    pub fn new(a: &RMatrix, config: &CheckConfig) -> Result<Self, TheoremError> {
        let opts = config.classify_options();
        let sr = sr_signature(a, &opts)?;
        let assr = is_assr(a, &opts)?;
        let combined = match combined_with(a, config.exec) {
            Ok(r) => Some(r.c),
            Err(MatrixError::Singular) => None,
            Err(e) => return Err(e.into()),
        };
        Ok(Analysis { a: a.clone(), config: *config, sr, assr, irreducible: is_irreducible(a), combined })
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.a
    }

    pub fn combined(&self) -> Option<&RMatrix> {
        self.combined.as_ref()
    }

    pub fn facts(&self) -> InputFacts {
        InputFacts {
            order: self.a.order(),
            nonsingular: self.combined.is_some(),
            is_sr: self.sr.is_sr,
            is_assr: self.assr.is_assr,
            staircase: self.assr.staircase,
            signature: self.sr.signature.clone(),
            assr_signature: self.assr.signature.clone(),
            irreducible: self.irreducible,
        }
    }

    fn report(&self, check_id: CheckId, verdict: Verdict) -> CheckReport {
        let seed = (check_id == CheckId::LemmaInvariances).then_some(self.config.seed);
        CheckReport { check_id, verdict, facts: self.facts(), seed }
    }

    fn opts(&self) -> ClassifyOptions {
        self.config.classify_options()
    }

    pub fn run(&self, id: CheckId) -> Result<CheckReport, TheoremError> {
        match id {
            CheckId::ZeroPatternEquivalence => Ok(self.zero_pattern_equivalence()),
            CheckId::StaircasePreservation => Ok(self.staircase_preservation()),
            CheckId::SrCombinedEquivalence => self.sr_combined_equivalence(),
            CheckId::LemmaInvariances => self.lemma_invariances(),
            CheckId::SignatureLaws => self.signature_laws(),
            CheckId::Checkerboard => Ok(self.checkerboard()),
            CheckId::RowColSums => Ok(self.row_col_sums()),
            CheckId::AbsCombined => self.abs_combined(),
        }
    }

    pub fn zero_pattern_equivalence(&self) -> CheckReport {
        let id = CheckId::ZeroPatternEquivalence;
        let Some(c) = &self.combined else {
            return self.report(id, Verdict::not_met("matrix is singular", None));
        };
        let mismatch = first_pattern_mismatch(&self.a, c);
        if !self.assr.is_assr {
            return self.report(id, Verdict::not_met("matrix is not ASSR", mismatch));
        }
        let st = self.assr.staircase;
        let type_i_branch = st.has_type_i() && self.irreducible;
        let type_ii_branch = st.has_type_ii() && is_irreducible(&flip_rows(&self.a));
        if !(type_i_branch || type_ii_branch) {
            let reason = match st {
                StaircaseType::TypeII => "type-II staircase with P_n A reducible",
                _ => "type-I staircase and reducible",
            };
            return self.report(id, Verdict::not_met(reason, mismatch));
        }
        let verdict = match mismatch {
            None => Verdict::holds(None),
            Some(ev) => Verdict::fails(ev, "zero pattern of C(A) differs from that of A"),
        };
        self.report(id, verdict)
    }

    pub fn staircase_preservation(&self) -> CheckReport {
        let id = CheckId::StaircasePreservation;
        let Some(c) = &self.combined else {
            return self.report(id, Verdict::not_met("matrix is singular", None));
        };
        let found = zero_pattern(c).staircase_type();
        let evidence = Evidence::Staircase { matrix: self.assr.staircase, combined: found };
        if !self.assr.is_assr {
            return self.report(id, Verdict::not_met("matrix is not ASSR", Some(evidence)));
        }
        let st = self.assr.staircase;
        let ok = (!st.has_type_i() || found.has_type_i()) && (!st.has_type_ii() || found.has_type_ii());
        let verdict = if ok {
            Verdict::holds(Some(evidence))
        } else {
            Verdict::fails(evidence, "C(A) lost the staircase shape of A")
        };
        self.report(id, verdict)
    }

    pub fn sr_combined_equivalence(&self) -> Result<CheckReport, TheoremError> {
        let id = CheckId::SrCombinedEquivalence;
        let Some(c) = &self.combined else {
            return Ok(self.report(id, Verdict::not_met("matrix is singular", None)));
        };
        let n = self.a.order();
        let flip = backward_identity(n);
        let combined_sr = sr_signature(c, &self.opts())?.is_sr;
        let combined_nonnegative = c.is_nonnegative();
        let signed_monomial = is_signed_diagonal_dn(&self.a) || is_signed_diagonal_dn(&flip_rows(&self.a));
        let identity_or_flip = *c == RMatrix::identity(n) || *c == flip;
        let evidence = Evidence::Conditions { combined_sr, combined_nonnegative, signed_monomial, identity_or_flip };
        if !self.sr.is_sr {
            return Ok(self.report(id, Verdict::not_met("matrix is not SR", Some(evidence))));
        }
        let flags = [combined_sr, combined_nonnegative, signed_monomial, identity_or_flip];
        let verdict = if flags.iter().all(|&f| f == flags[0]) {
            Verdict::holds(Some(evidence))
        } else {
            Verdict::fails(evidence, "the four conditions disagree")
        };
        Ok(self.report(id, verdict))
    }

    pub fn lemma_invariances(&self) -> Result<CheckReport, TheoremError> {
        let id = CheckId::LemmaInvariances;
        let c = self.combined.as_ref().ok_or(MatrixError::Singular)?;
        let n = self.a.order();
        let combined_of = |m: &RMatrix| combined_with(m, Execution::Sequential).map(|r| r.c);
        let mut failure: Option<Evidence> = None;
        let fixed_fail = |identity: &str| Evidence::Transform { trial: None, identity: identity.to_string() };

        if !c.has_positive_entry() {
            failure = Some(fixed_fail("C(A) has a positive entry"));
        }
        let s = alternating_sign(n);
        let p = backward_identity(n);
        let fixed: [(&str, RMatrix, RMatrix); 6] = [
            ("C(-A) = C(A)", self.a.neg(), c.clone()),
            ("C(S A S) = C(A)", checkerboard_conjugate(&self.a), c.clone()),
            ("C(S A) = C(A)", &s * &self.a, c.clone()),
            ("C(A S) = C(A)", &self.a * &s, c.clone()),
            ("C(P A) = P C(A)", &p * &self.a, &p * c),
            ("C(A P) = C(A) P", &self.a * &p, c * &p),
        ];
        for (identity, input, expected) in &fixed {
            if failure.is_some() {
                break;
            }
            let got = combined_of(input)?;
            if got != *expected || !got.has_positive_entry() {
                failure = Some(fixed_fail(identity));
            }
        }

        if failure.is_none() {
            let seed = self.config.seed;
            let outcomes = par::map_range(self.config.exec, self.config.trials, |t| {
                let mut rng = trial_rng(seed, t as u64);
                let d = random_signed_diagonal(&mut rng, n);
                let e = random_signed_diagonal(&mut rng, n);
                let pm = random_permutation(&mut rng, n);
                let qm = random_permutation(&mut rng, n);
                let scaled = combined_of(&(&(&d * &self.a) * &e))?;
                if scaled != *c || !scaled.has_positive_entry() {
                    return Ok(Some("C(D A E) = C(A)"));
                }
                let permuted = combined_of(&(&(&pm * &self.a) * &qm))?;
                if permuted != &(&pm * c) * &qm || !permuted.has_positive_entry() {
                    return Ok(Some("C(P A Q) = P C(A) Q"));
                }
                Ok(None)
            });
            for (t, outcome) in outcomes.into_iter().enumerate() {
                if let Some(identity) = outcome.map_err(TheoremError::Matrix)? {
                    failure = Some(Evidence::Transform { trial: Some(t), identity: identity.to_string() });
                    break;
                }
            }
        }

        let verdict = match failure {
            None => Verdict::holds(None),
            Some(ev) => Verdict::fails(ev, "transformation identity violated"),
        };
        Ok(self.report(id, verdict))
    }

    pub fn signature_laws(&self) -> Result<CheckReport, TheoremError> {
        let id = CheckId::SignatureLaws;
        let opts = self.opts();
        let flipped = is_assr(&flip_rows(&self.a), &opts)?;

        // A is ASSR iff P_n A is, with the row-reversal signature.
        let (predicted, found) = match &self.assr.signature {
            Some(sig) => (Some(signature_of_pna(sig)?), flipped.signature.clone()),
            None => (None, flipped.signature.clone()),
        };
        if predicted != found || self.assr.is_assr != flipped.is_assr {
            let ev = Evidence::Signature { law: "P_n A".into(), predicted, found };
            return Ok(self.report(id, Verdict::fails(ev, "P_n A signature differs from prediction")));
        }

        let inverse_applies = self.sr.is_sr && self.combined.is_some();
        if inverse_applies {
            let sig = self.sr.signature.as_ref().expect("SR has a signature");
            let predicted = signature_of_conjugated_inverse(sig)?;
            let conj = checkerboard_conjugate(&self.a.inverse()?);
            let found = sr_signature(&conj, &opts)?.signature;
            if found.as_ref() != Some(&predicted) {
                let ev = Evidence::Signature { law: "S_n A^-1 S_n".into(), predicted: Some(predicted), found };
                return Ok(self.report(id, Verdict::fails(ev, "inverse signature differs from prediction")));
            }
        }
        let verdict = if self.assr.is_assr || inverse_applies {
            Verdict::holds(None)
        } else {
            Verdict::not_met("matrix is neither ASSR nor nonsingular SR", None)
        };
        Ok(self.report(id, verdict))
    }

    pub fn checkerboard(&self) -> CheckReport {
        let id = CheckId::Checkerboard;
        let Some(c) = &self.combined else {
            return self.report(id, Verdict::not_met("matrix is singular", None));
        };
        let class = checkerboard_class(c);
        let evidence = Evidence::Checkerboard { class };
        let verdict = if !self.sr.is_sr {
            Verdict::not_met("matrix is not SR", Some(evidence))
        } else if class.is_checkerboard() {
            Verdict::holds(Some(evidence))
        } else {
            Verdict::fails(evidence, "neither C(A) nor -C(A) is checkerboard")
        };
        self.report(id, verdict)
    }

    pub fn row_col_sums(&self) -> CheckReport {
        let id = CheckId::RowColSums;
        let Some(c) = &self.combined else {
            return self.report(id, Verdict::not_met("matrix is singular", None));
        };
        let (rows, cols) = row_col_sums(c);
        let one = Rational::from_integer(1.into());
        let verdict = if rows.iter().chain(&cols).all(|s| *s == one) {
            Verdict::holds(None)
        } else {
            Verdict::fails(Evidence::Sums { rows, cols }, "a row or column sum differs from 1")
        };
        self.report(id, verdict)
    }

    /// Informational: classifies `|C(A)|`; never fails.
    pub fn abs_combined(&self) -> Result<CheckReport, TheoremError> {
        let c = self.combined.as_ref().ok_or(MatrixError::Singular)?;
        let abs = c.abs();
        let cl = classify(&abs, &self.opts())?;
        let evidence = Evidence::AbsCombined {
            is_sr: cl.is_sr,
            is_ssr: cl.is_ssr,
            is_assr: cl.is_assr,
            staircase: cl.staircase,
            signature: cl.signature,
            assr_signature: cl.assr_signature,
            witness: cl.witnesses.sr,
            equals_checkerboard_conjugate: checkerboard_conjugate(c) == abs,
        };
        Ok(self.report(CheckId::AbsCombined, Verdict::holds(Some(evidence))))
    }
}

fn first_pattern_mismatch(a: &RMatrix, c: &RMatrix) -> Option<Evidence> {
    let n = a.order();
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| a.get(i, j).is_zero() != c.get(i, j).is_zero())
        .map(|(row, col)| Evidence::PatternMismatch { row, col, a: a.get(row, col).clone(), c: c.get(row, col).clone() })
}

fn single(a: &RMatrix, config: &CheckConfig, id: CheckId) -> Result<CheckReport, TheoremError> {
    Analysis::new(a, config)?.run(id)
}

pub fn check_zero_pattern_equivalence(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::ZeroPatternEquivalence)
}

pub fn check_staircase_preservation(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::StaircasePreservation)
}

pub fn check_sr_combined_equivalence(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::SrCombinedEquivalence)
}

/// Errors with [`MatrixError::Singular`] on singular input.
pub fn check_lemma_invariances(a: &RMatrix, trials: usize, seed: u64) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig { trials, seed, ..CheckConfig::default() }, CheckId::LemmaInvariances)
}

pub fn check_signature_laws(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::SignatureLaws)
}

pub fn check_checkerboard(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::Checkerboard)
}

pub fn check_row_col_sums(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::RowColSums)
}

/// Errors with [`MatrixError::Singular`] on singular input.
pub fn explore_abs_combined(a: &RMatrix) -> Result<CheckReport, TheoremError> {
    single(a, &CheckConfig::default(), CheckId::AbsCombined)
}

/// Runs every check in [`CheckId::ALL`] order. Checks that need a
/// nonsingular matrix report `PreconditionNotMet` on singular input; only
/// the order cap is an error.
pub fn run_all_checks(a: &RMatrix, config: &CheckConfig) -> Result<Vec<CheckReport>, TheoremError> {
    let analysis = Analysis::new(a, config)?;
    CheckId::ALL
        .into_iter()
        .map(|id| match analysis.run(id) {
            Err(TheoremError::Matrix(MatrixError::Singular)) => {
                Ok(analysis.report(id, Verdict::not_met("matrix is singular", None)))
            }
            other => other,
        })
        .collect()
}

/// `run_all_checks` over a batch, fanned out per matrix. Each matrix uses
/// sequential inner work; output order follows input order.
pub fn run_batch(inputs: &[RMatrix], config: &CheckConfig) -> Vec<Result<Vec<CheckReport>, TheoremError>> {
    let inner = CheckConfig { exec: Execution::Sequential, ..*config };
    par::map_slice(config.exec, inputs, |a| run_all_checks(a, &inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::gen::{a1, a2, a3, a4, a5, a6};

    fn status(r: Result<CheckReport, TheoremError>) -> Status {
        r.unwrap().verdict.status
    }

    #[test]
    fn zero_pattern_examples() {
        assert_eq!(status(check_zero_pattern_equivalence(&a2())), Status::Holds);
        assert_eq!(status(check_zero_pattern_equivalence(&a5())), Status::Holds);
        let r = check_zero_pattern_equivalence(&a3()).unwrap();
        assert_eq!(r.verdict.status, Status::PreconditionNotMet);
        assert!(matches!(r.verdict.evidence, Some(Evidence::PatternMismatch { .. })));
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(status(check_staircase_preservation(&a3())), Status::Holds);
        assert_eq!(status(check_staircase_preservation(&a6())), Status::Holds);
        let r = check_staircase_preservation(&a4()).unwrap();
        assert_eq!(r.verdict.status, Status::PreconditionNotMet);
        assert!(matches!(
            r.verdict.evidence,
            Some(Evidence::Staircase { combined: StaircaseType::Neither | StaircaseType::TypeII, .. })
        ));
    }

    #[test]
    fn sr_combined_examples() {
        let d = RMatrix::diagonal(vec![int(2), int(3), int(5)]);
        let r = check_sr_combined_equivalence(&d).unwrap();
        assert_eq!(r.verdict.status, Status::Holds);
        assert_eq!(
            r.verdict.evidence,
            Some(Evidence::Conditions {
                combined_sr: true,
                combined_nonnegative: true,
                signed_monomial: true,
                identity_or_flip: true
            })
        );
        let pd = &backward_identity(3) * &RMatrix::diagonal(vec![int(-1), int(-2), int(-4)]);
        assert_eq!(status(check_sr_combined_equivalence(&pd)), Status::Holds);
        let r = check_sr_combined_equivalence(&a1()).unwrap();
        assert_eq!(r.verdict.status, Status::Holds);
        assert!(matches!(r.verdict.evidence, Some(Evidence::Conditions { combined_sr: false, .. })));
    }

    #[test]
    fn triangular_sr_counterexample_is_reported() {
        let t = RMatrix::from_integers(&[[1, 1], [0, 1]]).unwrap();
        let r = check_sr_combined_equivalence(&t).unwrap();
        assert_eq!(r.verdict.status, Status::Fails);
        assert_eq!(
            r.verdict.evidence,
            Some(Evidence::Conditions {
                combined_sr: true,
                combined_nonnegative: true,
                signed_monomial: false,
                identity_or_flip: true
            })
        );
    }

    #[test]
    fn lemma_and_signature_examples() {
        assert_eq!(status(check_lemma_invariances(&a1(), 20, 3)), Status::Holds);
        assert_eq!(status(check_lemma_invariances(&RMatrix::identity(4), 5, 0)), Status::Holds);
        let singular = RMatrix::from_integers(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(
            check_lemma_invariances(&singular, 1, 0),
            Err(TheoremError::Matrix(MatrixError::Singular))
        );
        assert_eq!(status(check_signature_laws(&a2())), Status::Holds);
        assert_eq!(status(check_signature_laws(&a1())), Status::Holds);
        assert_eq!(status(check_signature_laws(&RMatrix::identity(3))), Status::Holds);
    }

    #[test]
    fn abs_combined_examples() {
        let r = explore_abs_combined(&a5()).unwrap();
        assert!(matches!(
            r.verdict.evidence,
            Some(Evidence::AbsCombined { is_assr: true, is_sr: true, equals_checkerboard_conjugate: true, .. })
        ));
        let r = explore_abs_combined(&a6()).unwrap();
        match r.verdict.evidence {
            Some(Evidence::AbsCombined { is_sr: false, witness: Some(Witness::SignConflict { first, conflicting }), .. }) => {
                assert_eq!(first.order, 2);
                assert_eq!(first.rows.as_slice(), &[1, 2]);
                assert_eq!(conflicting.rows.as_slice(), &[1, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn run_all_has_no_failures_on_fixtures() {
        for a in [a1(), a2(), a3(), a4(), a5(), a6(), RMatrix::identity(5)] {
            let reports = run_all_checks(&a, &CheckConfig { trials: 5, ..Default::default() }).unwrap();
            assert_eq!(reports.iter().map(|r| r.check_id).collect::<Vec<_>>(), CheckId::ALL.to_vec());
            assert!(reports.iter().all(|r| !r.verdict.is_fail()), "{a}");
        }
        let singular = RMatrix::zeros(2);
        let reports = run_all_checks(&singular, &CheckConfig::default()).unwrap();
        assert!(reports.iter().all(|r| !r.verdict.is_fail()));
    }

    #[test]
    fn batch_is_mode_independent() {
        let inputs = vec![a1(), a3(), a5()];
        let cfg = CheckConfig { trials: 4, seed: 9, ..Default::default() };
        let seq = run_batch(&inputs, &CheckConfig { exec: Execution::Sequential, ..cfg });
        let par = run_batch(&inputs, &CheckConfig { exec: Execution::Parallel, ..cfg });
        assert_eq!(seq, par);
    }
}
