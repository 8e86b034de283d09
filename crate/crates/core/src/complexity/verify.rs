use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::bounds::BoundTable;
use super::OperationKind;
use crate::automaton::{determinize_with_cap, Automaton, Dfa, DEFAULT_SUBSET_CAP};
use crate::error::{Error, Result};
use crate::minimize::minimize_refine;
use crate::ops::{boolean_product, concatenate, concatenate_nfa, star, BoolOp};
use crate::witness::{build_witness, WitnessSpec};

/// Minimal sizes for the unreversed witnesses of the two-reversal lemma at
/// `m = n = 4`, where they fall short of the general bounds.
pub const LEMMA_EXCEPTION_BOOL: u64 = 202;
pub const LEMMA_EXCEPTION_SYMDIFF: u64 = 116;
/// Reachable states of the direct product in that exceptional case.
pub const LEMMA_EXCEPTION_REACHABLE: usize = 232;

/// The witnesses for `kind` at sizes `(m, n)`; unary kinds return one spec.
///
/// For boolean operations without reversal the identical binary streams are
/// used when `m != n`; at `m == n` the pair switches to `U_m(a,b,c)` and its
/// permutational equivalent `U_n(b,a,c)`.
pub fn default_witnesses(
    kind: OperationKind,
    m: usize,
    n: usize,
) -> Result<(WitnessSpec, Option<WitnessSpec>)> {
    if !kind.is_unary() && m < 3 {
        return Err(Error::ParameterTooSmall {
            name: "m",
            value: m,
        });
    }
    if n < 3 {
        return Err(Error::ParameterTooSmall {
            name: "n",
            value: n,
        });
    }
    let u = WitnessSpec::u;
    let pair = |k, l| Ok((k, Some(l)));
    match kind {
        OperationKind::Bool(_) if m != n => pair(u(m, "ab"), u(n, "ab")),
        OperationKind::Bool(_) => pair(u(m, "abc"), u(n, "bac")),
        OperationKind::BoolRevRight(_)
        | OperationKind::RevRightMinusLeft
        | OperationKind::CatRevRight
        | OperationKind::Cat => pair(u(m, "abc"), u(n, "abc")),
        OperationKind::BoolRevBoth(_) => {
            let right = if n == 3 {
                u(3, "bac").with_finals([1])
            } else {
                u(n, "bac").with_finals([1, 3])
            };
            pair(u(m, "abc").with_finals([0, 2]), right)
        }
        OperationKind::CatRevLeft => pair(WitnessSpec::v(m, "abcd"), WitnessSpec::v(n, "dcba")),
        OperationKind::CatRevOuter => pair(u(n, "dcba"), u(m, "abcd")),
        OperationKind::StarRev => Ok((u(n, "abc").with_finals([0]), None)),
        OperationKind::Star => Ok((u(n, "ab"), None)),
        OperationKind::Rev => Ok((u(n, "abc"), None)),
    }
}

/// `U_m(a,b,c)` and `U_n(b,a,c)` with their default final states.
pub fn lemma_witnesses(m: usize, n: usize) -> (WitnessSpec, WitnessSpec) {
    (WitnessSpec::u(m, "abc"), WitnessSpec::u(n, "bac"))
}

fn second(right: Option<&Dfa>) -> Result<&Dfa> {
    right.ok_or_else(|| Error::InvalidWitness("operation needs two operands".into()))
}

/// Builds the automaton for `kind` applied to the operands, before any
/// minimization. Reversed DFA arguments of boolean operations are
/// determinized under `cap`; concatenation and star results are NFAs.
pub fn construct(
    kind: OperationKind,
    left: &Dfa,
    right: Option<&Dfa>,
    cap: usize,
) -> Result<Automaton> {
    let reversed = |d: &Dfa| -> Result<Dfa> { Ok(determinize_with_cap(&d.reverse(), cap)?.dfa) };
    Ok(match kind {
        OperationKind::Bool(op) => boolean_product(left, second(right)?, op)?.dfa.into(),
        OperationKind::BoolRevRight(op) => boolean_product(left, &reversed(second(right)?)?, op)?
            .dfa
            .into(),
        OperationKind::RevRightMinusLeft => {
            boolean_product(&reversed(second(right)?)?, left, BoolOp::Difference)?
                .dfa
                .into()
        }
        OperationKind::BoolRevBoth(op) => {
            boolean_product(&reversed(left)?, &reversed(second(right)?)?, op)?
                .dfa
                .into()
        }
        OperationKind::CatRevRight => concatenate(left, &second(right)?.reverse())?.into(),
        OperationKind::CatRevLeft => {
            concatenate_nfa(&left.reverse(), &second(right)?.to_nfa())?.into()
        }
        OperationKind::CatRevOuter => {
            concatenate_nfa(&left.reverse(), &second(right)?.reverse())?.into()
        }
        OperationKind::StarRev => star(left).reverse().into(),
        OperationKind::Cat => concatenate(left, &second(right)?.to_nfa())?.into(),
        OperationKind::Star => star(left).into(),
        OperationKind::Rev => left.reverse().into(),
    })
}

/// Minimal size of a constructed language and the size of the complete DFA
/// it was minimized from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Measurement {
    pub measured: usize,
    pub reachable_raw: usize,
}

/// Builds `kind` on the operands, determinizes if needed and minimizes.
pub fn measure(
    kind: OperationKind,
    left: &Dfa,
    right: Option<&Dfa>,
    cap: usize,
) -> Result<Measurement> {
    let raw = construct(kind, left, right, cap)?.into_dfa(cap)?;
    Ok(Measurement {
        measured: minimize_refine(&raw).n(),
        reachable_raw: raw.n(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip(String),
}

/// Outcome of one `(kind, m, n)` check.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub kind: OperationKind,
    /// `None` for unary kinds.
    pub m: Option<usize>,
    pub n: usize,
    pub witnesses: Vec<WitnessSpec>,
    pub measured: Option<usize>,
    pub expected: u64,
    pub reachable_raw: Option<usize>,
    pub status: Status,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn skipped(&self) -> bool {
        matches!(self.status, Status::Skip(_))
    }
}

/// Ordered case results.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub cases: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.iter().filter(|c| c.failed()).count()
    }

    pub fn skipped(&self) -> usize {
        self.cases.iter().filter(|c| c.skipped()).count()
    }

    /// True when no case failed; skipped cases do not count as failures.
    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
    }
}

/// Verification settings: the bound catalogue and the subset-construction cap.
#[derive(Clone, Debug)]
pub struct Verifier {
    pub bounds: BoundTable,
    pub subset_cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            bounds: BoundTable::builtin(),
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }
}

struct Case {
    kind: OperationKind,
    m: Option<usize>,
    n: usize,
    witnesses: (WitnessSpec, Option<WitnessSpec>),
    expected: u64,
    note: Option<String>,
}

impl Verifier {
    fn run(&self, case: Case) -> CaseResult {
        let start = Instant::now();
        let specs: Vec<WitnessSpec> = std::iter::once(case.witnesses.0.clone())
            .chain(case.witnesses.1.clone())
            .collect();
        let outcome = (|| {
            let left = build_witness(&case.witnesses.0)?;
            let right = case.witnesses.1.as_ref().map(build_witness).transpose()?;
            measure(case.kind, &left, right.as_ref(), self.subset_cap)
        })();
        let (measured, reachable_raw, status) = match outcome {
            Ok(m) => {
                let status = if m.measured as u64 == case.expected {
                    Status::Pass
                } else {
                    Status::Fail
                };
                (Some(m.measured), Some(m.reachable_raw), status)
            }
            Err(e) => (None, None, Status::Skip(e.to_string())),
        };
        CaseResult {
            kind: case.kind,
            m: case.m,
            n: case.n,
            witnesses: specs,
            measured,
            expected: case.expected,
            reachable_raw,
            status,
            note: case.note,
            elapsed: start.elapsed(),
        }
    }

    fn plan(&self, kind: OperationKind, m: usize, n: usize) -> Result<Case> {
        let witnesses = default_witnesses(kind, m, n)?;
        let note = match kind {
            OperationKind::Bool(_) if m == n => {
                Some("m = n: permutationally equivalent pair".into())
            }
            OperationKind::BoolRevBoth(_) if n == 3 => Some("n = 3: right final set {1}".into()),
            _ => None,
        };
        Ok(Case {
            kind,
            m: (!kind.is_unary()).then_some(m),
            n,
            witnesses,
            expected: self.bounds.expected(kind, m, n)?,
            note,
        })
    }

    fn skipped(kind: OperationKind, m: usize, n: usize, reason: String) -> CaseResult {
        CaseResult {
            kind,
            m: (!kind.is_unary()).then_some(m),
            n,
            witnesses: Vec::new(),
            measured: None,
            expected: 0,
            reachable_raw: None,
            status: Status::Skip(reason),
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    /// Checks one kind at one size pair against the catalogue.
    pub fn verify_case(&self, kind: OperationKind, m: usize, n: usize) -> CaseResult {
        match self.plan(kind, m, n) {
            Ok(case) => self.run(case),
            Err(e) => Self::skipped(kind, m, n, e.to_string()),
        }
    }

    /// Checks every kind over the given ranges, evaluating cases in parallel.
    /// Unary kinds only range over `n`. Results are ordered by `(kind, m, n)`.
    pub fn verify_sweep(
        &self,
        kinds: &[OperationKind],
        m_range: RangeInclusive<usize>,
        n_range: RangeInclusive<usize>,
    ) -> VerificationReport {
        let mut kinds = kinds.to_vec();
        kinds.sort();
        kinds.dedup();
        let mut grid = Vec::new();
        for kind in kinds {
            let ms: Vec<usize> = if kind.is_unary() {
                vec![0]
            } else {
                m_range.clone().collect()
            };
            for m in ms {
                for n in n_range.clone() {
                    grid.push((kind, m, n));
                }
            }
        }
        let cases = grid
            .into_par_iter()
            .map(|(kind, m, n)| self.verify_case(kind, m, n))
            .collect();
        VerificationReport { cases }
    }

    /// Checks the boolean operations on two reversed arguments with the
    /// unmodified witnesses `U_m(a,b,c)`, `U_n(b,a,c)`: the general bounds
    /// everywhere except `m = n = 4`, where 202 and 116 are expected.
    pub fn verify_lemma_witnesses(
        &self,
        m_range: RangeInclusive<usize>,
        n_range: RangeInclusive<usize>,
    ) -> VerificationReport {
        let mut grid = Vec::new();
        for op in BoolOp::ALL {
            for m in m_range.clone() {
                for n in n_range.clone() {
                    grid.push((op, m, n));
                }
            }
        }
        let cases = grid
            .into_par_iter()
            .map(|(op, m, n)| {
                let kind = OperationKind::BoolRevBoth(op);
                let (k, l) = lemma_witnesses(m, n);
                let (expected, note) = if m == 4 && n == 4 {
                    let value = match op {
                        BoolOp::SymmetricDifference => LEMMA_EXCEPTION_SYMDIFF,
                        _ => LEMMA_EXCEPTION_BOOL,
                    };
                    (Ok(value), Some("lemma exception".to_string()))
                } else {
                    (
                        self.bounds.expected(kind, m, n),
                        Some("lemma witnesses".to_string()),
                    )
                };
                match expected {
                    Ok(expected) => self.run(Case {
                        kind,
                        m: Some(m),
                        n,
                        witnesses: (k, Some(l)),
                        expected,
                        note,
                    }),
                    Err(e) => Self::skipped(kind, m, n, e.to_string()),
                }
            })
            .collect();
        VerificationReport { cases }
    }
}

/// [`Verifier::verify_case`] with the builtin catalogue and default cap.
pub fn verify_case(kind: OperationKind, m: usize, n: usize) -> CaseResult {
    Verifier::default().verify_case(kind, m, n)
}

/// [`Verifier::verify_sweep`] with the builtin catalogue and default cap.
pub fn verify_sweep(
    kinds: &[OperationKind],
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
) -> VerificationReport {
    Verifier::default().verify_sweep(kinds, m_range, n_range)
}
