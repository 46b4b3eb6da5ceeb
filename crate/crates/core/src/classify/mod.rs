//! Sign-regularity classification (SR, SSR, ASSR) with signature
//! extraction, and irreducibility tests.
//!
//! Minors are scanned order by order; within an order the pairs
//! `(rows, cols)` are visited in lexicographic order with `rows` major. A
//! reported witness is always the lexicographically first violation, whether
//! the signs were computed sequentially or in parallel.

mod irreducible;
mod signature;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::rational::serde_exact;
use crate::exact::{IndexSet, Minors, RMatrix, Rational, Sign};
use crate::par::{self, Execution};
use crate::patterns::{zero_pattern, IndexSets, NontrivialRule, StaircaseType, ZeroPattern};

pub use irreducible::{
    brute_force_reducibility, irreducible_by_off_diagonals, is_irreducible, pattern_brute_force_reducibility,
    pattern_is_irreducible, pattern_reducibility_witness, reducibility_witness, BRUTE_FORCE_MAX_ORDER,
};
pub use signature::{signature_of_conjugated_inverse, signature_of_pna, Signature, SignatureEntry};

/// Default cap on the order accepted by minor enumeration.
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("order {n} exceeds the configured cap {max}")]
    OrderCap { n: usize, max: usize },
    #[error("signature has indeterminate entries")]
    IndeterminateSignature,
    #[error("precondition not met: {0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub max_order: usize,
    pub exec: Execution,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { max_order: DEFAULT_MAX_ORDER, exec: Execution::default() }
    }
}

impl ClassifyOptions {
    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    fn check_cap(&self, n: usize) -> Result<(), ClassifyError> {
        if n > self.max_order {
            Err(ClassifyError::OrderCap { n, max: self.max_order })
        } else {
            Ok(())
        }
    }
}

/// A single minor `det A[rows|cols]` of order `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub order: usize,
    pub rows: IndexSet,
    pub cols: IndexSet,
    #[serde(with = "serde_exact")]
    pub value: Rational,
}

/// Why a classification flag is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two minors of one order with opposite strict signs.
    SignConflict { first: MinorWitness, conflicting: MinorWitness },
    /// A minor that must be nonzero but vanishes.
    VanishingMinor { minor: MinorWitness },
    /// Neither staircase shape holds.
    NotStaircase,
    /// No nontrivial submatrix of this order exists.
    NoNontrivialMinor { order: usize },
    /// `A[rows|cols] = 0` where `rows` and `cols` partition `1..=n`.
    Reducible { rows: IndexSet, cols: IndexSet },
}

/// Outcome of the SR / SSR scan over all minors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRegularity {
    pub is_sr: bool,
    pub is_ssr: bool,
    /// Present when the matrix is SR.
    pub signature: Option<Signature>,
    /// Why the matrix is not SR.
    pub witness: Option<Witness>,
    /// Why the matrix is not SSR.
    pub ssr_witness: Option<Witness>,
}

/// Outcome of the ASSR test over nontrivial minors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssrOutcome {
    pub is_assr: bool,
    pub staircase: StaircaseType,
    /// Nontrivial-minor rule that was applied, if the matrix is staircase.
    pub rule: Option<NontrivialRule>,
    pub signature: Option<Signature>,
    pub witness: Option<Witness>,
}

/// All witnesses collected by [`classify`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub sr: Option<Witness>,
    pub ssr: Option<Witness>,
    pub assr: Option<Witness>,
    pub reducible: Option<Witness>,
}

/// Full structural classification of a square matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub order: usize,
    #[serde(with = "serde_exact")]
    pub det: Rational,
    pub nonsingular: bool,
    pub is_sr: bool,
    pub is_ssr: bool,
    pub is_assr: bool,
    /// SR signature; present iff `is_sr`.
    pub signature: Option<Signature>,
    /// Signature over nontrivial minors; present iff `is_assr`.
    pub assr_signature: Option<Signature>,
    pub staircase: StaircaseType,
    pub assr_rule: Option<NontrivialRule>,
    pub irreducible: bool,
    pub witnesses: Witnesses,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strictness {
    /// Zero minors allowed (SR).
    Weak,
    /// Zero minors are violations (SSR, ASSR).
    Strict,
}

type Pair = (usize, usize);

enum Violation {
    Conflict { first: Pair, at: Pair },
    Vanishing(Pair),
}

#[derive(Default)]
struct OrderScan {
    sign: Option<Sign>,
    first_zero: Option<Pair>,
    violation: Option<Violation>,
}

impl OrderScan {
    /// Feeds one minor sign; returns `false` once a violation is found.
    fn push(&mut self, pair: Pair, sign: Sign, strict: Strictness, first: &mut Option<Pair>) -> bool {
        if sign.is_zero() {
            if strict == Strictness::Strict {
                self.violation = Some(Violation::Vanishing(pair));
                return false;
            }
            self.first_zero.get_or_insert(pair);
            return true;
        }
        match self.sign {
            None => {
                self.sign = Some(sign);
                *first = Some(pair);
            }
            Some(s) if s != sign => {
                self.violation = Some(Violation::Conflict { first: first.expect("set with sign"), at: pair });
                return false;
            }
            Some(_) => {}
        }
        true
    }
}

struct Scanner<'a> {
    minors: &'a Minors,
    filter: Option<(&'a ZeroPattern, NontrivialRule)>,
    exec: Execution,
}

impl Scanner<'_> {
    fn sets(&self, m: usize) -> Vec<Vec<usize>> {
        IndexSets::new(m, self.minors.order())
            .expect("1 <= m <= n")
            .map(|s| s.zero_based())
            .collect()
    }

    fn eval(&self, rows: &[usize], cols: &[usize]) -> Option<Sign> {
        if let Some((pattern, rule)) = self.filter {
            if !pattern.is_nontrivial0(rows, cols, rule) {
                return None;
            }
        }
        Some(self.minors.sign0(rows, cols))
    }

    fn scan(&self, m: usize, strict: Strictness) -> (OrderScan, Vec<Vec<usize>>) {
        let sets = self.sets(m);
        let mut out = OrderScan::default();
        let mut first = None;
        if self.exec.is_parallel() {
            let signs: Vec<Vec<Option<Sign>>> = par::map_slice(self.exec, &sets, |rows| {
                sets.iter().map(|cols| self.eval(rows, cols)).collect()
            });
            'outer: for (a, row) in signs.iter().enumerate() {
                for (b, s) in row.iter().enumerate() {
                    if let Some(s) = s {
                        if !out.push((a, b), *s, strict, &mut first) {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            'seq: for (a, rows) in sets.iter().enumerate() {
                for (b, cols) in sets.iter().enumerate() {
                    if let Some(s) = self.eval(rows, cols) {
                        if !out.push((a, b), s, strict, &mut first) {
                            break 'seq;
                        }
                    }
                }
            }
        }
        (out, sets)
    }

    fn minor_witness(&self, sets: &[Vec<usize>], m: usize, (a, b): Pair) -> MinorWitness {
        let one_based = |v: &[usize]| IndexSet::from_sorted(v.iter().map(|i| i + 1).collect());
        MinorWitness {
            order: m,
            rows: one_based(&sets[a]),
            cols: one_based(&sets[b]),
            value: self.minors.value0(&sets[a], &sets[b]),
        }
    }

    fn witness(&self, sets: &[Vec<usize>], m: usize, v: &Violation) -> Witness {
        match *v {
            Violation::Conflict { first, at } => Witness::SignConflict {
                first: self.minor_witness(sets, m, first),
                conflicting: self.minor_witness(sets, m, at),
            },
            Violation::Vanishing(pair) => Witness::VanishingMinor { minor: self.minor_witness(sets, m, pair) },
        }
    }
}

/// SR test with signature extraction over all minors; also decides SSR.
pub fn sr_signature(a: &RMatrix, opts: &ClassifyOptions) -> Result<SignRegularity, ClassifyError> {
    let n = a.order();
    opts.check_cap(n)?;
    let minors = Minors::new(a);
    let scanner = Scanner { minors: &minors, filter: None, exec: opts.exec };
    let mut entries = Vec::with_capacity(n);
    let mut ssr_witness = None;
    for m in 1..=n {
        let (scan, sets) = scanner.scan(m, Strictness::Weak);
        if ssr_witness.is_none() {
            if let Some(pair) = scan.first_zero {
                ssr_witness = Some(scanner.witness(&sets, m, &Violation::Vanishing(pair)));
            }
        }
        if let Some(v) = &scan.violation {
            let witness = scanner.witness(&sets, m, v);
            return Ok(SignRegularity {
                is_sr: false,
                is_ssr: false,
                signature: None,
                ssr_witness: ssr_witness.or_else(|| Some(witness.clone())),
                witness: Some(witness),
            });
        }
        entries.push(scan.sign.map_or(SignatureEntry::Indeterminate, SignatureEntry::from_sign));
    }
    Ok(SignRegularity {
        is_sr: true,
        is_ssr: ssr_witness.is_none(),
        signature: Some(Signature::new(entries)),
        witness: None,
        ssr_witness,
    })
}

/// SSR test: every minor nonzero with one strict sign per order. The
/// returned record carries the SR fields as well.
pub fn is_ssr(a: &RMatrix, opts: &ClassifyOptions) -> Result<SignRegularity, ClassifyError> {
    sr_signature(a, opts)
}

/// ASSR test: the matrix must be staircase, and every nontrivial minor of
/// order `m` must have strict sign `eps_m`.
pub fn is_assr(a: &RMatrix, opts: &ClassifyOptions) -> Result<AssrOutcome, ClassifyError> {
    let n = a.order();
    opts.check_cap(n)?;
    let pattern = zero_pattern(a);
    let staircase = pattern.staircase_type();
    let Some(rule) = staircase.nontrivial_rule() else {
        return Ok(AssrOutcome {
            is_assr: false,
            staircase,
            rule: None,
            signature: None,
            witness: Some(Witness::NotStaircase),
        });
    };
    let minors = Minors::new(a);
    let scanner = Scanner { minors: &minors, filter: Some((&pattern, rule)), exec: opts.exec };
    let mut entries = Vec::with_capacity(n);
    for m in 1..=n {
        let (scan, sets) = scanner.scan(m, Strictness::Strict);
        let failure = match (&scan.violation, scan.sign) {
            (Some(v), _) => Some(scanner.witness(&sets, m, v)),
            (None, None) => Some(Witness::NoNontrivialMinor { order: m }),
            (None, Some(sign)) => {
                entries.push(SignatureEntry::from_sign(sign));
                None
            }
        };
        if let Some(witness) = failure {
            return Ok(AssrOutcome { is_assr: false, staircase, rule: Some(rule), signature: None, witness: Some(witness) });
        }
    }
    Ok(AssrOutcome {
        is_assr: true,
        staircase,
        rule: Some(rule),
        signature: Some(Signature::new(entries)),
        witness: None,
    })
}

pub fn classify(a: &RMatrix, opts: &ClassifyOptions) -> Result<Classification, ClassifyError> {
    opts.check_cap(a.order())?;
    let det = a.det();
    let sr = sr_signature(a, opts)?;
    let assr = is_assr(a, opts)?;
    let reducible = reducibility_witness(a);
    Ok(Classification {
        order: a.order(),
        nonsingular: !det.is_zero(),
        det,
        is_sr: sr.is_sr,
        is_ssr: sr.is_ssr,
        is_assr: assr.is_assr,
        signature: sr.signature,
        assr_signature: assr.signature,
        staircase: assr.staircase,
        assr_rule: assr.rule,
        irreducible: reducible.is_none(),
        witnesses: Witnesses { sr: sr.witness, ssr: sr.ssr_witness, assr: assr.witness, reducible },
    })
}

/// Exactly one nonzero entry in each row and each column.
pub fn is_monomial(a: &RMatrix) -> bool {
    let n = a.order();
    let rows_ok = a.rows().all(|row| row.iter().filter(|v| !v.is_zero()).count() == 1);
    let cols_ok = (1..=n).all(|j| (1..=n).filter(|&i| !a.get(i, j).is_zero()).count() == 1);
    rows_ok && cols_ok
}

/// Diagonal with every pair of diagonal entries having a positive product.
pub fn is_signed_diagonal_dn(a: &RMatrix) -> bool {
    if !a.is_diagonal() {
        return false;
    }
    let n = a.order();
    let diag: Vec<&Rational> = (1..=n).map(|k| a.get(k, k)).collect();
    diag.iter().all(|d| d.is_positive()) || diag.iter().all(|d| d.is_negative())
}
