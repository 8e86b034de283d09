//! Bound catalogue and verification harness.
//!
//! Each [`OperationKind`] names one language operation, possibly with
//! reversed arguments. For every kind there is a closed-form bound (see
//! [`bounds`]), a default pair of witnesses, and a construction that is
//! measured by minimization (see [`verify`]).

pub mod bounds;
pub mod report;
pub mod sampling;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use crate::ops::BoolOp;

pub use bounds::{expected_bound, BoundFormula, BoundId, BoundTable, Term};
pub use verify::{
    construct, default_witnesses, lemma_witnesses, measure, verify_case, verify_sweep, CaseResult,
    Measurement, Status, VerificationReport, Verifier, LEMMA_EXCEPTION_BOOL,
    LEMMA_EXCEPTION_REACHABLE, LEMMA_EXCEPTION_SYMDIFF,
};

/// The operations whose state complexity is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationKind {
    /// `K ∘ L`
    Bool(BoolOp),
    /// `K ∘ L^R`
    BoolRevRight(BoolOp),
    /// `L^R \ K`
    RevRightMinusLeft,
    /// `K^R ∘ L^R`
    BoolRevBoth(BoolOp),
    /// `K L^R`
    CatRevRight,
    /// `K^R L`
    CatRevLeft,
    /// `(K L)^R`, built as `L^R K^R`
    CatRevOuter,
    /// `(L^*)^R`
    StarRev,
    /// `K L`
    Cat,
    /// `L^*`
    Star,
    /// `L^R`
    Rev,
}

impl OperationKind {
    /// Every kind, in report order.
    pub fn all() -> Vec<OperationKind> {
        let mut out = Vec::new();
        out.extend(BoolOp::ALL.map(OperationKind::Bool));
        out.extend(BoolOp::ALL.map(OperationKind::BoolRevRight));
        out.push(OperationKind::RevRightMinusLeft);
        out.extend(BoolOp::ALL.map(OperationKind::BoolRevBoth));
        out.extend([
            OperationKind::CatRevRight,
            OperationKind::CatRevLeft,
            OperationKind::CatRevOuter,
            OperationKind::StarRev,
            OperationKind::Cat,
            OperationKind::Star,
            OperationKind::Rev,
        ]);
        out
    }

    /// Kinds that take a single operand (sized `n`).
    pub fn is_unary(self) -> bool {
        matches!(
            self,
            OperationKind::StarRev | OperationKind::Star | OperationKind::Rev
        )
    }

    /// Whether the measured size grows like `2^(m+n)`.
    pub fn is_doubly_exponential_in_size(self) -> bool {
        matches!(
            self,
            OperationKind::BoolRevBoth(_) | OperationKind::CatRevLeft | OperationKind::CatRevOuter
        )
    }

    /// The family name used for CLI groups and the `kind` report column.
    pub fn group(self) -> &'static str {
        match self {
            OperationKind::Bool(_) => "bool",
            OperationKind::BoolRevRight(_) | OperationKind::RevRightMinusLeft => "bool_r_right",
            OperationKind::BoolRevBoth(_) => "bool_r_both",
            OperationKind::CatRevRight => "cat_r_right",
            OperationKind::CatRevLeft => "cat_r_left",
            OperationKind::CatRevOuter => "cat_r_outer",
            OperationKind::StarRev => "star_r",
            OperationKind::Cat => "cat",
            OperationKind::Star => "star",
            OperationKind::Rev => "rev",
        }
    }

    /// The `op` report column.
    pub fn op_label(self) -> &'static str {
        match self {
            OperationKind::Bool(op)
            | OperationKind::BoolRevRight(op)
            | OperationKind::BoolRevBoth(op) => op.name(),
            OperationKind::RevRightMinusLeft => "rdifference",
            _ => "-",
        }
    }

    /// Unique name, e.g. `union`, `symdiff_r_right`, `cat_r_left`.
    pub fn name(self) -> String {
        match self {
            OperationKind::Bool(op) => op.name().to_string(),
            OperationKind::BoolRevRight(op) => format!("{}_r_right", op.name()),
            OperationKind::RevRightMinusLeft => "rdifference_r_right".to_string(),
            OperationKind::BoolRevBoth(op) => format!("{}_r_both", op.name()),
            other => other.group().to_string(),
        }
    }

    /// The language in conventional notation.
    pub fn formula(self) -> String {
        match self {
            OperationKind::Bool(op) => format!("K {} L", op.symbol()),
            OperationKind::BoolRevRight(op) => format!("K {} L^R", op.symbol()),
            OperationKind::RevRightMinusLeft => "L^R \\ K".to_string(),
            OperationKind::BoolRevBoth(op) => format!("K^R {} L^R", op.symbol()),
            OperationKind::CatRevRight => "K L^R".to_string(),
            OperationKind::CatRevLeft => "K^R L".to_string(),
            OperationKind::CatRevOuter => "(K L)^R".to_string(),
            OperationKind::StarRev => "(L^*)^R".to_string(),
            OperationKind::Cat => "K L".to_string(),
            OperationKind::Star => "L^*".to_string(),
            OperationKind::Rev => "L^R".to_string(),
        }
    }

    /// Parses a comma-separated list of kind names, group names or `all`.
    /// Duplicates are removed and the result is in report order.
    pub fn parse_list(text: &str) -> Result<Vec<OperationKind>, String> {
        let all = Self::all();
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let matched: Vec<OperationKind> = if item == "all" {
                all.clone()
            } else {
                all.iter()
                    .copied()
                    .filter(|k| k.name() == item || k.group() == item)
                    .collect()
            };
            if matched.is_empty() {
                return Err(format!("unknown operation kind '{item}'"));
            }
            out.extend(matched);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for OperationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::all()
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown operation kind '{s}'"))
    }
}
