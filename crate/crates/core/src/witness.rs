//! The universal witness DFAs `U_n`, their quaternary variant `V_n`,
//! permutational equivalents, dialects, and transition-monoid diagnostics.
//!
//! A witness is described by a [`WitnessSpec`]. Its `letters` are positional:
//! the first letter acts as the cycle, the second as the transposition, the
//! third (if present) as the singular map and the fourth (if present) as the
//! identity. So `U_n(b,a,c)` is `letters = "bac"`: `b` is the cycle and `a`
//! swaps two states.
//!
//! Specs have a compact text form used by the CLI:
//!
//! ```text
//! spec   := family '[' field (';' field)* ']'
//! family := 'U' | 'V'
//! field  := 'n=' INT                     size, at least 3 (required)
//!         | 'letters=' CHAR{2,4}         role letters in order (required; V needs 4)
//!         | 'finals=' INT (',' INT)*     final states (default n-1)
//!         | 'swap=' INT ',' INT          transposed pair (default 0,1 for U; n-2,n-1 for V)
//!         | 'send=' INT ',' INT          singular map r -> s (default n-1,0 for U; n-1,n-2 for V)
//! ```
//!
//! For example `U[n=4;letters=abc;finals=0,2]` or `V[n=5;letters=dcba]`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::automaton::{check_distinct, Dfa, Letter};
use crate::error::{Error, Result};

/// What a letter does to the states of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Cycle,
    Transposition,
    Singular,
    Identity,
}

impl Role {
    /// Roles in the positional order of [`WitnessSpec::letters`].
    pub const ORDER: [Role; 4] = [
        Role::Cycle,
        Role::Transposition,
        Role::Singular,
        Role::Identity,
    ];
}

/// A total map on `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&t| t >= n) {
            return Err(Error::StateOutOfRange { state: bad, n });
        }
        Ok(Transformation(images))
    }

    pub fn identity(n: usize) -> Self {
        Transformation((0..n).collect())
    }

    /// `i -> i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Transformation((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn transposition(n: usize, p: usize, q: usize) -> Result<Self> {
        check_in_range(n, &[p, q])?;
        if p == q {
            return Err(Error::InvalidWitness(format!(
                "transposition ({p},{q}) must swap two distinct states"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(p, q);
        Ok(Transformation(images))
    }

    /// Sends `r` to `s` and fixes every other state.
    pub fn singular(n: usize, r: usize, s: usize) -> Result<Self> {
        check_in_range(n, &[r, s])?;
        if r == s {
            return Err(Error::InvalidWitness(format!(
                "singular map {r} -> {s} must move its state"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images[r] = s;
        Ok(Transformation(images))
    }

    pub fn apply(&self, state: usize) -> usize {
        self.0[state]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&i| then.0[i]).collect())
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }
}

fn check_in_range(n: usize, states: &[usize]) -> Result<()> {
    match states.iter().find(|&&s| s >= n) {
        Some(&state) => Err(Error::StateOutOfRange { state, n }),
        None => Ok(()),
    }
}

/// Witness families, distinguished by alphabet size and dialect defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    UBinary,
    UTernary,
    UQuaternary,
    VQuaternary,
}

impl Family {
    pub fn letter_count(self) -> usize {
        match self {
            Family::UBinary => 2,
            Family::UTernary => 3,
            Family::UQuaternary | Family::VQuaternary => 4,
        }
    }

    pub fn is_v(self) -> bool {
        self == Family::VQuaternary
    }

    fn tag(self) -> char {
        if self.is_v() {
            'V'
        } else {
            'U'
        }
    }
}

/// Parameters of the transposition `(p,q)` and the singular map `r -> s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dialect {
    pub swap: (usize, usize),
    pub send: (usize, usize),
}

impl Dialect {
    /// `b:(0,1)`, `c: n-1 -> 0`.
    pub fn u_default(n: usize) -> Self {
        Dialect {
            swap: (0, 1),
            send: (n - 1, 0),
        }
    }

    /// `b:(n-2,n-1)`, `c: n-1 -> n-2`.
    pub fn v_default(n: usize) -> Self {
        Dialect {
            swap: (n - 2, n - 1),
            send: (n - 1, n - 2),
        }
    }

    pub fn default_for(family: Family, n: usize) -> Self {
        if family.is_v() {
            Self::v_default(n)
        } else {
            Self::u_default(n)
        }
    }
}

/// The transformation performed by a letter playing `role` in an `n`-state witness.
pub fn letter_action(role: Role, n: usize, dialect: &Dialect) -> Result<Transformation> {
    match role {
        Role::Cycle => Ok(Transformation::cycle(n)),
        Role::Transposition => Transformation::transposition(n, dialect.swap.0, dialect.swap.1),
        Role::Singular => Transformation::singular(n, dialect.send.0, dialect.send.1),
        Role::Identity => Ok(Transformation::identity(n)),
    }
}

/// Full description of one witness DFA.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessSpec {
    pub family: Family,
    pub n: usize,
    /// Letters in role order: cycle, transposition, singular, identity.
    pub letters: Vec<Letter>,
    /// Sorted, duplicate-free.
    pub finals: Vec<usize>,
    pub dialect: Dialect,
}

impl WitnessSpec {
    /// `U_n(letters)` with final state `n-1`; 2, 3 or 4 letters.
    pub fn u(n: usize, letters: &str) -> Self {
        let letters: Vec<Letter> = letters.chars().map(Letter).collect();
        let family = match letters.len() {
            2 => Family::UBinary,
            4 => Family::UQuaternary,
            _ => Family::UTernary,
        };
        Self::with_family(family, n, letters)
    }

    /// `V_n(letters)` with final state `n-1`.
    pub fn v(n: usize, letters: &str) -> Self {
        Self::with_family(
            Family::VQuaternary,
            n,
            letters.chars().map(Letter).collect(),
        )
    }

    fn with_family(family: Family, n: usize, letters: Vec<Letter>) -> Self {
        WitnessSpec {
            family,
            n,
            letters,
            finals: vec![n.saturating_sub(1)],
            dialect: Dialect::default_for(family, n.max(2)),
        }
    }

    pub fn with_finals(mut self, finals: impl IntoIterator<Item = usize>) -> Self {
        let mut finals: Vec<usize> = finals.into_iter().collect();
        finals.sort_unstable();
        finals.dedup();
        self.finals = finals;
        self
    }

    pub fn with_dialect(mut self, dialect: Dialect) -> Self {
        self.dialect = dialect;
        self
    }

    /// The letter playing `role`, if the family has one.
    pub fn letter_for(&self, role: Role) -> Option<Letter> {
        Role::ORDER
            .iter()
            .position(|r| *r == role)
            .and_then(|i| self.letters.get(i).copied())
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidWitness(msg));
        if self.n < 3 {
            return invalid(format!("n = {} but witnesses need n >= 3", self.n));
        }
        if self.letters.len() != self.family.letter_count() {
            return invalid(format!(
                "{} letters given, family needs {}",
                self.letters.len(),
                self.family.letter_count()
            ));
        }
        check_distinct(&self.letters)?;
        if self.finals.is_empty() {
            return invalid("final-state set is empty".into());
        }
        if let Some(&bad) = self.finals.iter().find(|&&f| f >= self.n) {
            return invalid(format!(
                "final state {bad} is out of range for n = {}",
                self.n
            ));
        }
        if self.finals.len() == self.n {
            return invalid("every state is final".into());
        }
        for role in &Role::ORDER[..self.letters.len()] {
            letter_action(*role, self.n, &self.dialect)?;
        }
        Ok(())
    }
}

impl fmt::Display for WitnessSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={};letters=", self.family.tag(), self.n)?;
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        f.write_str(";finals=")?;
        for (i, q) in self.finals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        if self.n >= 2 {
            let default = Dialect::default_for(self.family, self.n);
            if self.dialect.swap != default.swap {
                write!(f, ";swap={},{}", self.dialect.swap.0, self.dialect.swap.1)?;
            }
            if self.dialect.send != default.send {
                write!(f, ";send={},{}", self.dialect.send.0, self.dialect.send.1)?;
            }
        }
        f.write_str("]")
    }
}

/// Syntax error in a witness spec string, with a 0-based byte position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at position {position}: {message}")]
pub struct SpecParseError {
    pub position: usize,
    pub message: String,
}

fn parse_error<T>(position: usize, message: impl Into<String>) -> Result<T, SpecParseError> {
    Err(SpecParseError {
        position,
        message: message.into(),
    })
}

fn parse_int(text: &str, at: usize) -> Result<usize, SpecParseError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return parse_error(
            at,
            format!("expected a non-negative integer, found '{text}'"),
        );
    }
    text.parse()
        .or_else(|_| parse_error(at, format!("integer '{text}' is too large")))
}

fn parse_int_list(text: &str, at: usize) -> Result<Vec<usize>, SpecParseError> {
    let mut out = Vec::new();
    let mut offset = at;
    for piece in text.split(',') {
        out.push(parse_int(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn parse_pair(text: &str, at: usize) -> Result<(usize, usize), SpecParseError> {
    match parse_int_list(text, at)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => parse_error(at, "expected two comma-separated integers"),
    }
}

impl FromStr for WitnessSpec {
    type Err = SpecParseError;

    /// Parses the compact form; the result is syntactically complete but not
    /// yet validated (see [`WitnessSpec::validate`]).
    fn from_str(s: &str) -> Result<Self, SpecParseError> {
        let family_v = match s.chars().next() {
            Some('U') => false,
            Some('V') => true,
            _ => return parse_error(0, "expected family 'U' or 'V'"),
        };
        if !s[1..].starts_with('[') {
            return parse_error(1, "expected '['");
        }
        if !s.ends_with(']') || s.len() < 3 {
            return parse_error(s.len(), "expected closing ']'");
        }
        let body = &s[2..s.len() - 1];
        let mut n = None;
        let mut letters: Option<Vec<Letter>> = None;
        let mut finals = None;
        let mut swap = None;
        let mut send = None;
        let mut offset = 2;
        for field in body.split(';') {
            let Some(eq) = field.find('=') else {
                return parse_error(offset, format!("expected 'key=value', found '{field}'"));
            };
            let (key, value) = (&field[..eq], &field[eq + 1..]);
            let at = offset + eq + 1;
            let duplicate = match key {
                "n" => n.replace(parse_int(value, at)?).is_some(),
                "letters" => {
                    if value.is_empty() {
                        return parse_error(at, "letters must not be empty");
                    }
                    letters
                        .replace(value.chars().map(Letter).collect())
                        .is_some()
                }
                "finals" => finals.replace(parse_int_list(value, at)?).is_some(),
                "swap" => swap.replace(parse_pair(value, at)?).is_some(),
                "send" => send.replace(parse_pair(value, at)?).is_some(),
                _ => return parse_error(offset, format!("unknown field '{key}'")),
            };
            if duplicate {
                return parse_error(offset, format!("field '{key}' given twice"));
            }
            offset += field.len() + 1;
        }
        let Some(n) = n else {
            return parse_error(2, "missing field 'n'");
        };
        let Some(letters) = letters else {
            return parse_error(2, "missing field 'letters'");
        };
        let family = match (family_v, letters.len()) {
            (true, 4) => Family::VQuaternary,
            (true, k) => return parse_error(2, format!("V witnesses need 4 letters, found {k}")),
            (false, 2) => Family::UBinary,
            (false, 3) => Family::UTernary,
            (false, 4) => Family::UQuaternary,
            (false, k) => {
                return parse_error(2, format!("U witnesses need 2 to 4 letters, found {k}"))
            }
        };
        let mut spec = WitnessSpec::with_family(family, n, letters);
        if let Some(finals) = finals {
            spec = spec.with_finals(finals);
        }
        if let Some(swap) = swap {
            spec.dialect.swap = swap;
        }
        if let Some(send) = send {
            spec.dialect.send = send;
        }
        Ok(spec)
    }
}

/// Builds the witness DFA: states `0..n`, initial state 0, alphabet sorted,
/// and each letter acting by the transformation of its role.
pub fn build_witness(spec: &WitnessSpec) -> Result<Dfa> {
    spec.validate()?;
    let mut alphabet = spec.letters.clone();
    alphabet.sort();
    let actions: Vec<Transformation> = alphabet
        .iter()
        .map(|letter| {
            let slot = spec.letters.iter().position(|l| l == letter).unwrap();
            letter_action(Role::ORDER[slot], spec.n, &spec.dialect)
        })
        .collect::<Result<_>>()?;
    let delta = (0..spec.n)
        .map(|q| actions.iter().map(|t| t.apply(q)).collect())
        .collect();
    Dfa::new(spec.n, alphabet, delta, 0, spec.finals.iter().copied())
}

/// Renames letters: the new automaton moves on `mapping(x)` exactly as `d`
/// moves on `x`. Letters absent from `mapping` map to themselves; the
/// alphabet order is kept.
pub fn permute_letters(d: &Dfa, mapping: &[(Letter, Letter)]) -> Result<Dfa> {
    let alphabet = d.alphabet();
    let mut image: Vec<Letter> = alphabet.to_vec();
    for &(from, to) in mapping {
        let i = d.letter_index(from)?;
        if !alphabet.contains(&to) {
            return Err(Error::NotBijective(format!(
                "'{to}' is not in the alphabet"
            )));
        }
        image[i] = to;
    }
    if check_distinct(&image).is_err() {
        return Err(Error::NotBijective(format!(
            "two letters map to the same image ({})",
            image.iter().map(|l| l.0).collect::<String>()
        )));
    }
    // column for letter image[x] is the old column x
    let mut source = vec![0; alphabet.len()];
    for (x, to) in image.iter().enumerate() {
        source[d.letter_index(*to)?] = x;
    }
    let delta = (0..d.n())
        .map(|q| source.iter().map(|&x| d.next(q, x)).collect())
        .collect();
    Dfa::new(d.n(), alphabet.to_vec(), delta, d.initial(), d.finals())
}

/// Size of the transition monoid of `d`: all state transformations induced by
/// words, the empty word included. Fails once more than `cap` are found.
pub fn transition_monoid_size(d: &Dfa, cap: usize) -> Result<usize> {
    let generators: Vec<Transformation> = (0..d.alphabet().len())
        .map(|x| Transformation((0..d.n()).map(|q| d.next(q, x)).collect()))
        .collect();
    let identity = Transformation::identity(d.n());
    let mut seen: HashSet<Transformation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(t) = queue.pop_front() {
        for g in &generators {
            let next = t.then(g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::MonoidCapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}
