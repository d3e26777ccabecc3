//! JSON and DOT serialization.
//!
//! Documents look like
//!
//! ```json
//! {
//!   "kind": "dfa",
//!   "alphabet": ["a", "b"],
//!   "states": 2,
//!   "initial": 0,
//!   "finals": [1],
//!   "transitions": {"a": [1, 0], "b": [0, 0]}
//! }
//! ```
//!
//! An NFA document has `"initials"` instead of `"initial"`, lists of
//! targets per state, and an optional `"epsilon"` list of `[from, to]`.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::alphabet::{Alphabet, Symbol};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Dfa(d) => d.alphabet(),
            Automaton::Nfa(n) => n.alphabet(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Automaton::Dfa(d) => d.state_count(),
            Automaton::Nfa(n) => n.state_count(),
        }
    }

    /// The DFA itself, or the subset construction of the NFA.
    pub fn into_dfa(self) -> Dfa {
        match self {
            Automaton::Dfa(d) => d,
            Automaton::Nfa(n) => n.determinize_dfa(),
        }
    }
}

impl From<Dfa> for Automaton {
    fn from(d: Dfa) -> Self {
        Automaton::Dfa(d)
    }
}

impl From<Nfa> for Automaton {
    fn from(n: Nfa) -> Self {
        Automaton::Nfa(n)
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::doc(key, "missing field"))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::doc(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::doc(path, "expected an array"))
}

fn state_in_range(q: usize, states: usize, path: &str) -> Result<State> {
    if q < states {
        Ok(q)
    } else {
        Err(Error::doc(
            path,
            format!("state {q} out of range 0..{states}"),
        ))
    }
}

fn state_list(v: &Value, states: usize, path: &str) -> Result<Vec<State>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{path}[{i}]");
            state_in_range(as_index(x, &p)?, states, &p)
        })
        .collect()
}

fn parse_alphabet(v: &Value) -> Result<Alphabet> {
    let mut chars = Vec::new();
    for (i, x) in as_array(v, "alphabet")?.iter().enumerate() {
        let path = format!("alphabet[{i}]");
        let s = x
            .as_str()
            .ok_or_else(|| Error::doc(&path, "expected a string"))?;
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => chars.push(c),
            _ => return Err(Error::doc(&path, "symbols must be single characters")),
        }
    }
    Alphabet::new(chars).map_err(|e| Error::doc("alphabet", e.to_string()))
}

/// Transition rows per symbol, checked against the alphabet.
fn transitions<'a>(
    obj: &'a Map<String, Value>,
    alphabet: &Alphabet,
    states: usize,
) -> Result<Vec<&'a Vec<Value>>> {
    let map = field(obj, "transitions")?
        .as_object()
        .ok_or_else(|| Error::doc("transitions", "expected an object"))?;
    for key in map.keys() {
        let mut it = key.chars();
        let ok = matches!((it.next(), it.next()), (Some(c), None) if alphabet.symbol(c).is_ok());
        if !ok {
            return Err(Error::doc(
                format!("transitions.{key}"),
                "symbol not in alphabet",
            ));
        }
    }
    alphabet
        .chars()
        .iter()
        .map(|c| {
            let path = format!("transitions.{c}");
            let rows = map
                .get(&c.to_string())
                .ok_or_else(|| Error::doc(&path, "missing symbol"))?;
            let rows = as_array(rows, &path)?;
            if rows.len() != states {
                return Err(Error::doc(
                    &path,
                    format!("expected {states} entries, found {}", rows.len()),
                ));
            }
            Ok(rows)
        })
        .collect()
}

/// Parses an automaton document. Errors name the offending field.
pub fn parse_document(text: &str) -> Result<Automaton> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::doc("$", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::doc("$", "expected an object"))?;
    let kind = field(obj, "kind")?
        .as_str()
        .ok_or_else(|| Error::doc("kind", "expected a string"))?;
    let alphabet = parse_alphabet(field(obj, "alphabet")?)?;
    let states = as_index(field(obj, "states")?, "states")?;
    if states == 0 {
        return Err(Error::doc("states", "must be positive"));
    }
    let finals = state_list(field(obj, "finals")?, states, "finals")?;
    let rows = transitions(obj, &alphabet, states)?;
    match kind {
        "dfa" => {
            for key in ["initials", "epsilon"] {
                if obj.contains_key(key) {
                    return Err(Error::doc(key, "not allowed in a dfa document"));
                }
            }
            let initial = state_in_range(
                as_index(field(obj, "initial")?, "initial")?,
                states,
                "initial",
            )?;
            let mut table = vec![Vec::with_capacity(alphabet.len()); states];
            for (c, col) in alphabet.chars().iter().zip(&rows) {
                for (q, t) in col.iter().enumerate() {
                    let path = format!("transitions.{c}[{q}]");
                    table[q].push(state_in_range(as_index(t, &path)?, states, &path)?);
                }
            }
            Ok(Automaton::Dfa(Dfa::new(alphabet, table, initial, finals)?))
        }
        "nfa" => {
            if obj.contains_key("initial") {
                return Err(Error::doc("initial", "nfa documents use \"initials\""));
            }
            let initials = state_list(field(obj, "initials")?, states, "initials")?;
            let mut edges = Vec::new();
            for (a, (c, col)) in alphabet.chars().iter().zip(&rows).enumerate() {
                for (q, ts) in col.iter().enumerate() {
                    let path = format!("transitions.{c}[{q}]");
                    for t in state_list(ts, states, &path)? {
                        edges.push((q, Symbol(a), t));
                    }
                }
            }
            let mut epsilon = Vec::new();
            if let Some(eps) = obj.get("epsilon") {
                for (i, pair) in as_array(eps, "epsilon")?.iter().enumerate() {
                    let path = format!("epsilon[{i}]");
                    let pair = state_list(pair, states, &path)?;
                    if pair.len() != 2 {
                        return Err(Error::doc(path, "expected [from, to]"));
                    }
                    epsilon.push((pair[0], pair[1]));
                }
            }
            Ok(Automaton::Nfa(Nfa::new(
                alphabet, states, initials, finals, edges, epsilon,
            )?))
        }
        other => Err(Error::doc("kind", format!("unknown kind {other:?}"))),
    }
}

fn alphabet_json(alphabet: &Alphabet) -> Value {
    Value::Array(
        alphabet
            .chars()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn to_value(a: &Automaton) -> Map<String, Value> {
    let mut doc = Map::new();
    match a {
        Automaton::Dfa(d) => {
            doc.insert("kind".into(), json!("dfa"));
            doc.insert("alphabet".into(), alphabet_json(d.alphabet()));
            doc.insert("states".into(), json!(d.state_count()));
            doc.insert("initial".into(), json!(d.initial()));
            doc.insert("finals".into(), json!(d.finals().collect::<Vec<_>>()));
            let mut t = Map::new();
            for s in d.alphabet().symbols() {
                let col: Vec<State> = (0..d.state_count()).map(|q| d.next(q, s)).collect();
                t.insert(d.alphabet().char_of(s).to_string(), json!(col));
            }
            doc.insert("transitions".into(), Value::Object(t));
        }
        Automaton::Nfa(n) => {
            doc.insert("kind".into(), json!("nfa"));
            doc.insert("alphabet".into(), alphabet_json(n.alphabet()));
            doc.insert("states".into(), json!(n.state_count()));
            doc.insert("initials".into(), json!(n.initials()));
            doc.insert("finals".into(), json!(n.finals().collect::<Vec<_>>()));
            let mut t = Map::new();
            for s in n.alphabet().symbols() {
                let col: Vec<&[State]> = (0..n.state_count()).map(|q| n.targets(q, s)).collect();
                t.insert(n.alphabet().char_of(s).to_string(), json!(col));
            }
            doc.insert("transitions".into(), Value::Object(t));
            if !n.epsilon_edges().is_empty() {
                let eps: Vec<[State; 2]> = n.epsilon_edges().iter().map(|&(p, q)| [p, q]).collect();
                doc.insert("epsilon".into(), json!(eps));
            }
        }
    }
    doc
}

/// Canonical document text: fixed key order, one field per line, each
/// transition row on a single line.
pub fn emit_document(a: &Automaton) -> String {
    let doc = to_value(a);
    let mut out = String::from("{\n");
    let last = doc.len() - 1;
    for (i, (key, value)) in doc.iter().enumerate() {
        let sep = if i == last { "" } else { "," };
        if let ("transitions", Value::Object(map)) = (key.as_str(), value) {
            out.push_str("  \"transitions\": {\n");
            let inner_last = map.len().saturating_sub(1);
            for (j, (sym, row)) in map.iter().enumerate() {
                let inner_sep = if j == inner_last { "" } else { "," };
                let _ = writeln!(
                    out,
                    "    {}: {}{inner_sep}",
                    Value::String(sym.clone()),
                    row
                );
            }
            let _ = writeln!(out, "  }}{sep}");
        } else {
            let _ = writeln!(out, "  \"{key}\": {value}{sep}");
        }
    }
    out.push_str("}\n");
    out
}

pub fn emit_dfa(d: &Dfa) -> String {
    emit_document(&Automaton::Dfa(d.clone()))
}

fn dot_label(chars: &[char]) -> String {
    chars
        .iter()
        .map(|c| match c {
            '"' | '\\' => format!("\\{c}"),
            _ => c.to_string(),
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Graphviz text: one edge per transition, finals drawn as double circles,
/// and an arrow from an invisible point into each initial state.
pub fn emit_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    let n = a.state_count();
    let (initials, finals): (Vec<State>, Vec<bool>) = match a {
        Automaton::Dfa(d) => (vec![d.initial()], (0..n).map(|q| d.is_final(q)).collect()),
        Automaton::Nfa(x) => (
            x.initials().to_vec(),
            (0..n).map(|q| x.is_final(q)).collect(),
        ),
    };
    for (q, &f) in finals.iter().enumerate() {
        let shape = if f { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {q} [shape={shape}];");
    }
    for q in &initials {
        let _ = writeln!(out, "  start{q} [shape=point];");
        let _ = writeln!(out, "  start{q} -> {q};");
    }
    let alphabet = a.alphabet();
    match a {
        Automaton::Dfa(d) => {
            for q in 0..n {
                for s in alphabet.symbols() {
                    let label = dot_label(&[alphabet.char_of(s)]);
                    let _ = writeln!(out, "  {q} -> {} [label=\"{label}\"];", d.next(q, s));
                }
            }
        }
        Automaton::Nfa(x) => {
            for (p, s, q) in x.edges() {
                let label = dot_label(&[alphabet.char_of(s)]);
                let _ = writeln!(out, "  {p} -> {q} [label=\"{label}\"];");
            }
            for &(p, q) in x.epsilon_edges() {
                let _ = writeln!(out, "  {p} -> {q} [label=\"ε\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}
