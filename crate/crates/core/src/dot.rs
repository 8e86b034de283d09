//! Graphviz export. States are circles, final states double circles, and each
//! initial state gets an unlabeled arrow from an invisible point. Parallel
//! edges are merged into one edge with a comma-separated label.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::automaton::{Automaton, Dfa, Letter, Nfa};

fn render(
    n: usize,
    initials: &[usize],
    is_final: impl Fn(usize) -> bool,
    edges: BTreeMap<(usize, usize), Vec<Letter>>,
) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..n {
        let shape = if is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    for (i, q) in initials.iter().enumerate() {
        writeln!(out, "  start{i} [shape=point];").unwrap();
        writeln!(out, "  start{i} -> {q};").unwrap();
    }
    for ((p, q), letters) in edges {
        let label: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
        writeln!(out, "  {p} -> {q} [label=\"{}\"];", label.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(d: &Dfa) -> String {
    let mut edges: BTreeMap<(usize, usize), Vec<Letter>> = BTreeMap::new();
    for p in 0..d.n() {
        for (x, &letter) in d.alphabet().iter().enumerate() {
            edges.entry((p, d.next(p, x))).or_default().push(letter);
        }
    }
    render(d.n(), &[d.initial()], |q| d.is_final(q), edges)
}

pub fn nfa_to_dot(nf: &Nfa) -> String {
    let mut edges: BTreeMap<(usize, usize), Vec<Letter>> = BTreeMap::new();
    for p in 0..nf.n() {
        for (x, &letter) in nf.alphabet().iter().enumerate() {
            for &q in nf.successors(p, x) {
                edges.entry((p, q)).or_default().push(letter);
            }
        }
    }
    render(nf.n(), nf.initials(), |q| nf.is_final(q), edges)
}

pub fn to_dot(a: &Automaton) -> String {
    match a {
        Automaton::Dfa(d) => dfa_to_dot(d),
        Automaton::Nfa(nf) => nfa_to_dot(nf),
    }
}
