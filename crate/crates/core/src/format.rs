//! Text and JSON renderings of results.
//!
//! Element JSON: `{"terms":[{"coeff":{"terms":[{"eq":0,"c":"1"}]},"t":0,"l":[[3,1]],"w":[]}]}`.
//! `"ep"` appears only for two-variable output. Tensors carry a two-element
//! `"slots"` array of `{t, l, w}` objects in place of the word fields.

use serde_json::{json, Map, Value};

use crate::algebra::{Element, NormalWord, NumericElement};
use crate::coeff::{LaurentPoly, Rational, Vars};
use crate::hopf::TensorElement;
use crate::oscrep::ModuleVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Text,
    Json,
}

/// Anything the CLI can print.
pub enum Output {
    Element(Element),
    Numeric(NumericElement),
    Tensor(TensorElement),
    Scalar(LaurentPoly),
    Module(ModuleVector),
}

pub fn poly_json(c: &LaurentPoly, vars: Vars) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .map(|((eq, ep), k)| {
            let mut m = Map::new();
            m.insert("eq".into(), eq.into());
            if vars == Vars::Two {
                m.insert("ep".into(), ep.into());
            }
            m.insert("c".into(), k.to_string().into());
            Value::Object(m)
        })
        .collect();
    json!({ "terms": terms })
}

fn rational_json(c: &Rational) -> Value {
    Value::String(c.to_string())
}

fn blocks(b: &[(i64, u32)]) -> Value {
    b.iter().map(|&(i, k)| json!([i, k])).collect()
}

fn word_fields(w: &NormalWord, m: &mut Map<String, Value>) {
    m.insert("t".into(), w.t_exp().into());
    m.insert("l".into(), blocks(w.l_block()));
    m.insert("w".into(), blocks(w.w_block()));
}

fn word_json(w: &NormalWord) -> Value {
    let mut m = Map::new();
    word_fields(w, &mut m);
    Value::Object(m)
}

pub fn element_json(x: &Element, vars: Vars) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let mut m = Map::new();
            m.insert("coeff".into(), poly_json(c, vars));
            word_fields(w, &mut m);
            Value::Object(m)
        })
        .collect();
    json!({ "terms": terms })
}

pub fn numeric_json(x: &NumericElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let mut m = Map::new();
            m.insert("coeff".into(), rational_json(c));
            word_fields(w, &mut m);
            Value::Object(m)
        })
        .collect();
    json!({ "terms": terms })
}

pub fn tensor_json(x: &TensorElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(a, b, c)| {
            json!({
                "coeff": poly_json(c, Vars::One),
                "slots": [word_json(a), word_json(b)],
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn module_json(v: &ModuleVector) -> Value {
    let vars = if v.terms().any(|(_, c)| c.uses_p()) {
        Vars::Two
    } else {
        Vars::One
    };
    let terms: Vec<Value> = v
        .terms()
        .map(|(s, c)| json!({ "coeff": poly_json(c, vars), "k": s.k, "eps": u8::from(s.occupied) }))
        .collect();
    json!({ "terms": terms })
}

/// Renders a result; `vars` decides whether `"ep"` fields are emitted.
pub fn format_output(out: &Output, mode: Mode, vars: Vars) -> String {
    match mode {
        Mode::Text => match out {
            Output::Element(x) => x.to_string(),
            Output::Numeric(x) => x.to_string(),
            Output::Tensor(x) => x.to_string(),
            Output::Scalar(x) => x.to_string(),
            Output::Module(x) => x.to_string(),
        },
        Mode::Json => {
            let v = match out {
                Output::Element(x) => element_json(x, vars),
                Output::Numeric(x) => numeric_json(x),
                Output::Tensor(x) => tensor_json(x),
                Output::Scalar(x) => poly_json(x, vars),
                Output::Module(x) => module_json(x),
            };
            v.to_string()
        }
    }
}
