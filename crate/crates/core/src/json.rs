//! JSON interchange format.
//!
//! ```text
//! {"n":3,"alphabet":["a","b"],"delta":[[1,0],[2,0],[0,2]],"initial":0,"finals":[2]}
//! {"n":2,"alphabet":["a"],"delta":[[[0,1]],[[]]],"initials":[0],"finals":[1]}
//! ```
//!
//! A DFA carries `initial` and a table of states; an NFA carries `initials`
//! and a table of state lists. Field order is fixed, so serializing the same
//! automaton always yields the same bytes.

use serde::{Deserialize, Serialize};

use crate::automaton::{Automaton, Dfa, Letter, Nfa};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaJson {
    n: usize,
    alphabet: Vec<String>,
    delta: Vec<Vec<usize>>,
    initial: usize,
    finals: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NfaJson {
    n: usize,
    alphabet: Vec<String>,
    delta: Vec<Vec<Vec<usize>>>,
    initials: Vec<usize>,
    finals: Vec<usize>,
}

fn letters_out(alphabet: &[Letter]) -> Vec<String> {
    alphabet.iter().map(|l| l.0.to_string()).collect()
}

fn letters_in(names: Vec<String>) -> Result<Vec<Letter>> {
    names
        .into_iter()
        .map(|name| {
            let mut chars = name.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(Letter(c)),
                _ => Err(Error::Json(format!(
                    "letter \"{name}\" is not a single character"
                ))),
            }
        })
        .collect()
}

pub fn dfa_to_json(d: &Dfa) -> String {
    serde_json::to_string(&DfaJson {
        n: d.n(),
        alphabet: letters_out(d.alphabet()),
        delta: d.delta(),
        initial: d.initial(),
        finals: d.finals().collect(),
    })
    .expect("DFA serialization cannot fail")
}

pub fn nfa_to_json(nf: &Nfa) -> String {
    serde_json::to_string(&NfaJson {
        n: nf.n(),
        alphabet: letters_out(nf.alphabet()),
        delta: nf.delta(),
        initials: nf.initials().to_vec(),
        finals: nf.finals().collect(),
    })
    .expect("NFA serialization cannot fail")
}

pub fn to_json(a: &Automaton) -> String {
    match a {
        Automaton::Dfa(d) => dfa_to_json(d),
        Automaton::Nfa(nf) => nfa_to_json(nf),
    }
}

/// Parses either kind of automaton; the presence of `initials` selects NFA.
pub fn from_json(text: &str) -> Result<Automaton> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let is_nfa = value.get("initials").is_some();
    if is_nfa {
        let raw: NfaJson = serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
        Ok(Automaton::Nfa(Nfa::new(
            raw.n,
            letters_in(raw.alphabet)?,
            raw.delta,
            raw.initials,
            raw.finals,
        )?))
    } else {
        let raw: DfaJson = serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
        Ok(Automaton::Dfa(Dfa::new(
            raw.n,
            letters_in(raw.alphabet)?,
            raw.delta,
            raw.initial,
            raw.finals,
        )?))
    }
}

/// Parses a DFA, rejecting NFA documents.
pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    match from_json(text)? {
        Automaton::Dfa(d) => Ok(d),
        Automaton::Nfa(_) => Err(Error::Json("expected a DFA, found an NFA".into())),
    }
}
