//! Closed-form state-complexity bounds.
//!
//! A bound is a sum of terms `coef · m^m_deg · n^n_deg · 2^(exp_m·m + exp_n·n + exp_c)`.
//! That shape covers every formula in the catalogue and lets a table be read
//! from (or written to) TOML, keyed by [`BoundId`] name:
//!
//! ```toml
//! [cat_r_left]
//! text = "3*2^(m+n-2)"
//! terms = [{ coef = 3, exp_m = 1, exp_n = 1, exp_c = -2 }]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::OperationKind;
use crate::error::{Error, Result};
use crate::ops::BoolOp;

/// One product term of a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub coef: i64,
    #[serde(default, skip_serializing_if = "is_zero_u")]
    pub m_deg: u32,
    #[serde(default, skip_serializing_if = "is_zero_u")]
    pub n_deg: u32,
    #[serde(default, skip_serializing_if = "is_zero_i")]
    pub exp_m: i32,
    #[serde(default, skip_serializing_if = "is_zero_i")]
    pub exp_n: i32,
    #[serde(default, skip_serializing_if = "is_zero_i")]
    pub exp_c: i32,
}

fn one() -> i64 {
    1
}

fn is_one(v: &i64) -> bool {
    *v == 1
}

fn is_zero_u(v: &u32) -> bool {
    *v == 0
}

fn is_zero_i(v: &i32) -> bool {
    *v == 0
}

impl Term {
    const fn new(coef: i64) -> Self {
        Term {
            coef,
            m_deg: 0,
            n_deg: 0,
            exp_m: 0,
            exp_n: 0,
            exp_c: 0,
        }
    }

    const fn times_m(mut self) -> Self {
        self.m_deg += 1;
        self
    }

    const fn times_n(mut self) -> Self {
        self.n_deg += 1;
        self
    }

    const fn pow2(mut self, exp_m: i32, exp_n: i32, exp_c: i32) -> Self {
        self.exp_m = exp_m;
        self.exp_n = exp_n;
        self.exp_c = exp_c;
        self
    }

    fn eval(&self, m: usize, n: usize) -> Result<i128> {
        let (mi, ni) = (m as i128, n as i128);
        let exponent = self.exp_m as i128 * mi + self.exp_n as i128 * ni + self.exp_c as i128;
        if !(0..=100).contains(&exponent) {
            return Err(Error::InvalidBound(format!(
                "power of two 2^{exponent} is outside the supported range at m={m}, n={n}"
            )));
        }
        let value =
            self.coef as i128 * mi.pow(self.m_deg) * ni.pow(self.n_deg) * (1i128 << exponent);
        Ok(value)
    }
}

/// A closed-form bound as a sum of [`Term`]s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundFormula {
    #[serde(default)]
    pub text: String,
    pub terms: Vec<Term>,
}

impl BoundFormula {
    fn new(text: &str, terms: Vec<Term>) -> Self {
        BoundFormula {
            text: text.to_string(),
            terms,
        }
    }

    /// Evaluates the formula; negative or oversized totals are errors.
    pub fn eval(&self, m: usize, n: usize) -> Result<u64> {
        let mut total: i128 = 0;
        for term in &self.terms {
            total += term.eval(m, n)?;
        }
        u64::try_from(total)
            .map_err(|_| Error::InvalidBound(format!("bound evaluates to {total} at m={m}, n={n}")))
    }
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Which formula a kind is checked against; several kinds share one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Bool,
    BoolRevRight,
    SymDiffRevRight,
    BoolRevBoth,
    SymDiffRevBoth,
    CatRevRight,
    CatRevLeft,
    CatRevOuter,
    StarRev,
    Cat,
    Star,
    Rev,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::Bool,
        BoundId::BoolRevRight,
        BoundId::SymDiffRevRight,
        BoundId::BoolRevBoth,
        BoundId::SymDiffRevBoth,
        BoundId::CatRevRight,
        BoundId::CatRevLeft,
        BoundId::CatRevOuter,
        BoundId::StarRev,
        BoundId::Cat,
        BoundId::Star,
        BoundId::Rev,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Bool => "bool",
            BoundId::BoolRevRight => "bool_r_right",
            BoundId::SymDiffRevRight => "symdiff_r_right",
            BoundId::BoolRevBoth => "bool_r_both",
            BoundId::SymDiffRevBoth => "symdiff_r_both",
            BoundId::CatRevRight => "cat_r_right",
            BoundId::CatRevLeft => "cat_r_left",
            BoundId::CatRevOuter => "cat_r_outer",
            BoundId::StarRev => "star_r",
            BoundId::Cat => "cat",
            BoundId::Star => "star",
            BoundId::Rev => "rev",
        }
    }

    pub fn of(kind: OperationKind) -> BoundId {
        match kind {
            OperationKind::Bool(_) => BoundId::Bool,
            OperationKind::BoolRevRight(BoolOp::SymmetricDifference) => BoundId::SymDiffRevRight,
            OperationKind::BoolRevRight(_) | OperationKind::RevRightMinusLeft => {
                BoundId::BoolRevRight
            }
            OperationKind::BoolRevBoth(BoolOp::SymmetricDifference) => BoundId::SymDiffRevBoth,
            OperationKind::BoolRevBoth(_) => BoundId::BoolRevBoth,
            OperationKind::CatRevRight => BoundId::CatRevRight,
            OperationKind::CatRevLeft => BoundId::CatRevLeft,
            OperationKind::CatRevOuter => BoundId::CatRevOuter,
            OperationKind::StarRev => BoundId::StarRev,
            OperationKind::Cat => BoundId::Cat,
            OperationKind::Star => BoundId::Star,
            OperationKind::Rev => BoundId::Rev,
        }
    }
}

/// The formula for every [`BoundId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    formulas: BTreeMap<BoundId, BoundFormula>,
}

impl Default for BoundTable {
    fn default() -> Self {
        Self::builtin()
    }
}

impl BoundTable {
    /// The catalogue of tight bounds.
    pub fn builtin() -> Self {
        let m_2n = Term::new(1).times_m().pow2(0, 1, 0);
        let two_n = Term::new(1).pow2(0, 1, 0);
        let two_n_1 = Term::new(1).pow2(0, 1, -1);
        let two_n_2 = Term::new(1).pow2(0, 1, -2);
        let three_2mn_2 = Term::new(3).pow2(1, 1, -2);
        let formulas = BTreeMap::from([
            (
                BoundId::Bool,
                BoundFormula::new("m*n", vec![Term::new(1).times_m().times_n()]),
            ),
            (
                BoundId::BoolRevRight,
                BoundFormula::new(
                    "m*2^n-(m-1)",
                    vec![m_2n.clone(), Term::new(-1).times_m(), Term::new(1)],
                ),
            ),
            (
                BoundId::SymDiffRevRight,
                BoundFormula::new("m*2^n", vec![m_2n.clone()]),
            ),
            (
                BoundId::BoolRevBoth,
                BoundFormula::new(
                    "(2^m-1)(2^n-1)+1",
                    vec![
                        Term::new(1).pow2(1, 1, 0),
                        Term::new(-1).pow2(1, 0, 0),
                        Term::new(-1).pow2(0, 1, 0),
                        Term::new(2),
                    ],
                ),
            ),
            (
                BoundId::SymDiffRevBoth,
                BoundFormula::new("2^(m+n-1)", vec![Term::new(1).pow2(1, 1, -1)]),
            ),
            (
                BoundId::CatRevRight,
                BoundFormula::new(
                    "(m-1)2^n+2^(n-1)-(m-1)",
                    vec![
                        m_2n.clone(),
                        Term::new(-1).pow2(0, 1, 0),
                        two_n_1.clone(),
                        Term::new(-1).times_m(),
                        Term::new(1),
                    ],
                ),
            ),
            (
                BoundId::CatRevLeft,
                BoundFormula::new("3*2^(m+n-2)", vec![three_2mn_2.clone()]),
            ),
            (
                BoundId::CatRevOuter,
                BoundFormula::new(
                    "3*2^(m+n-2)-2^n+1",
                    vec![three_2mn_2, Term::new(-1).pow2(0, 1, 0), Term::new(1)],
                ),
            ),
            (
                BoundId::StarRev,
                BoundFormula::new("2^n", vec![two_n.clone()]),
            ),
            (
                BoundId::Cat,
                BoundFormula::new(
                    "(m-1)2^n+2^(n-1)",
                    vec![m_2n, Term::new(-1).pow2(0, 1, 0), two_n_1.clone()],
                ),
            ),
            (
                BoundId::Star,
                BoundFormula::new("2^(n-1)+2^(n-2)", vec![two_n_1, two_n_2]),
            ),
            (BoundId::Rev, BoundFormula::new("2^n", vec![two_n])),
        ]);
        BoundTable { formulas }
    }

    pub fn formula(&self, id: BoundId) -> &BoundFormula {
        &self.formulas[&id]
    }

    pub fn set(&mut self, id: BoundId, formula: BoundFormula) {
        self.formulas.insert(id, formula);
    }

    /// The builtin table with the formulas listed in `text` replaced.
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, BoundFormula> =
            toml::from_str(text).map_err(|e| Error::InvalidBound(e.to_string()))?;
        let mut table = Self::builtin();
        for (name, formula) in raw {
            let id = BoundId::ALL
                .into_iter()
                .find(|id| id.name() == name)
                .ok_or_else(|| Error::InvalidBound(format!("unknown bound '{name}'")))?;
            table.set(id, formula);
        }
        Ok(table)
    }

    pub fn to_toml(&self) -> String {
        let raw: BTreeMap<&str, &BoundFormula> =
            self.formulas.iter().map(|(id, f)| (id.name(), f)).collect();
        toml::to_string(&raw).expect("bound table serialization cannot fail")
    }

    /// Expected minimal size for `kind` at sizes `(m, n)`; unary kinds ignore `m`.
    pub fn expected(&self, kind: OperationKind, m: usize, n: usize) -> Result<u64> {
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
        self.formula(BoundId::of(kind)).eval(m, n)
    }
}

/// Expected minimal size under the builtin catalogue.
pub fn expected_bound(kind: OperationKind, m: usize, n: usize) -> Result<u64> {
    BoundTable::builtin().expected(kind, m, n)
}
