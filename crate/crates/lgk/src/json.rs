//! Canonical JSON for the data types crossing the CLI boundary.
//!
//! Emission is hand-rolled so the byte layout is stable: fixed field
//! order, no whitespace, no floating point, rationals as "p/q" strings.
//! Parsing goes through serde_json and re-validates everything.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::error::{LgkError, Result};
use crate::galcoh::CohomologyTarget;
use crate::param::{EndoscopicDatum, GeneratorSpec, ParamDatum, TorusElement};
use crate::rootdata::{BasedRootDatum, SublatticeSpec};
use crate::zlat::ratlin::RatVec;
use crate::zlat::{FinAbGroup, FiniteGroup, GammaModule, IntMatrix};

// ---------- emission ----------

fn push_int_list<T: std::fmt::Display>(out: &mut String, items: impl Iterator<Item = T>) {
    out.push('[');
    let mut first = true;
    for x in items {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&x.to_string());
    }
    out.push(']');
}

fn push_vec(out: &mut String, v: &[BigInt]) {
    push_int_list(out, v.iter());
}

fn push_matrix_rows(out: &mut String, m: &IntMatrix) {
    out.push('[');
    for i in 0..m.rows {
        if i > 0 {
            out.push(',');
        }
        push_vec(out, &m.row(i));
    }
    out.push(']');
}

pub fn rational_str(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn push_rat_vec(out: &mut String, v: &[BigRational]) {
    out.push('[');
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('"');
        out.push_str(&rational_str(x));
        out.push('"');
    }
    out.push(']');
}

/// Canonical based-root-datum JSON (`"brd_schema": 1`).
pub fn emit_brd(b: &BasedRootDatum) -> String {
    let mut s = String::new();
    s.push_str("{\"brd_schema\":1,\"rank\":");
    s.push_str(&b.rank().to_string());
    s.push_str(",\"roots\":[");
    for (i, r) in b.roots.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        push_vec(&mut s, r);
    }
    s.push_str("],\"coroots\":[");
    for (i, c) in b.coroots.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        push_vec(&mut s, c);
    }
    s.push_str("],\"simple\":");
    push_int_list(&mut s, b.simple.iter());
    s.push_str(",\"galois\":{\"order\":");
    s.push_str(&b.x.group.order.to_string());
    s.push_str(",\"mult_table\":");
    push_int_list(&mut s, b.x.group.mult_table.iter());
    s.push_str(",\"action\":[");
    for (i, m) in b.x.action.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        push_matrix_rows(&mut s, m);
    }
    s.push_str("]}}");
    s
}

pub fn emit_group(g: &FinAbGroup) -> String {
    let mut s = String::new();
    s.push_str("{\"free_rank\":");
    s.push_str(&g.free_rank.to_string());
    s.push_str(",\"invariant_factors\":");
    push_int_list(&mut s, g.invariant_factors.iter());
    s.push('}');
    s
}

pub fn emit_target(t: &CohomologyTarget) -> String {
    let mut s = String::new();
    s.push_str("{\"free_rank\":");
    s.push_str(&t.group.free_rank.to_string());
    s.push_str(",\"invariant_factors\":");
    push_int_list(&mut s, t.group.invariant_factors.iter());
    s.push_str(",\"kind\":\"");
    s.push_str(t.kind.as_str());
    s.push_str("\",\"caveats\":[");
    for (i, c) in t.caveats.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push('"');
        s.push_str(c);
        s.push('"');
    }
    s.push_str("]}");
    s
}

pub fn emit_rat_vec(v: &[BigRational]) -> String {
    let mut s = String::new();
    push_rat_vec(&mut s, v);
    s
}

pub fn emit_endoscopic(e: &EndoscopicDatum) -> String {
    let mut s = String::new();
    s.push_str("{\"h_brd\":");
    s.push_str(&emit_brd(&e.h_brd));
    s.push_str(",\"s\":{\"circle\":");
    push_rat_vec(&mut s, &e.s.circle);
    s.push_str(",\"radial\":");
    push_rat_vec(&mut s, &e.s.radial);
    s.push_str("},\"kernel_roots\":");
    push_int_list(&mut s, e.kernel_roots.iter());
    s.push('}');
    s
}

// ---------- parsing ----------

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a serde_json::Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| LgkError::Parse(format!("expected an object for {what}")))
}

fn field<'a>(m: &'a serde_json::Map<String, Value>, name: &str) -> Result<&'a Value> {
    m.get(name)
        .ok_or_else(|| LgkError::Parse(format!("missing field `{name}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be a nonnegative integer")))
}

fn as_bigint(v: &Value, what: &str) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse()
            .map_err(|_| LgkError::Parse(format!("field `{what}`: bad integer `{s}`")));
    }
    Err(LgkError::Parse(format!("field `{what}` must be an integer")))
}

fn as_int_vec(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be an array")))?
        .iter()
        .map(|x| as_bigint(x, what))
        .collect()
}

fn as_usize_vec(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be an array")))?
        .iter()
        .map(|x| as_usize(x, what))
        .collect()
}

/// Rational from an integer or a "p/q" string.
pub fn parse_rational(v: &Value, what: &str) -> Result<BigRational> {
    if let Some(i) = v.as_i64() {
        return Ok(BigRational::from(BigInt::from(i)));
    }
    let s = v
        .as_str()
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be \"p/q\"")))?;
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = p
        .trim()
        .parse()
        .map_err(|_| LgkError::Parse(format!("field `{what}`: bad numerator `{p}`")))?;
    let den: BigInt = q
        .trim()
        .parse()
        .map_err(|_| LgkError::Parse(format!("field `{what}`: bad denominator `{q}`")))?;
    if den == BigInt::from(0) {
        return Err(LgkError::Parse(format!("field `{what}`: zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

fn as_rat_vec(v: &Value, what: &str) -> Result<RatVec> {
    v.as_array()
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be an array")))?
        .iter()
        .map(|x| parse_rational(x, what))
        .collect()
}

fn as_matrix(v: &Value, rank: usize, what: &str) -> Result<IntMatrix> {
    let rows_json = v
        .as_array()
        .ok_or_else(|| LgkError::Parse(format!("field `{what}` must be a matrix")))?;
    let rows: Vec<Vec<BigInt>> = rows_json
        .iter()
        .map(|r| as_int_vec(r, what))
        .collect::<Result<_>>()?;
    for r in &rows {
        if r.len() != rank {
            return Err(LgkError::Parse(format!(
                "field `{what}`: expected rows of length {rank}"
            )));
        }
    }
    Ok(IntMatrix::from_rows(rank, &rows))
}

pub fn parse_brd(text: &str) -> Result<BasedRootDatum> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| LgkError::Parse(format!("malformed JSON: {e}")))?;
    let m = obj(&v, "based root datum")?;
    let schema = as_usize(field(m, "brd_schema")?, "brd_schema")?;
    if schema != 1 {
        return Err(LgkError::Parse(format!("unsupported brd_schema {schema}")));
    }
    let rank = as_usize(field(m, "rank")?, "rank")?;
    let roots: Vec<Vec<BigInt>> = field(m, "roots")?
        .as_array()
        .ok_or_else(|| LgkError::Parse("field `roots` must be an array".into()))?
        .iter()
        .map(|r| as_int_vec(r, "roots"))
        .collect::<Result<_>>()?;
    let coroots: Vec<Vec<BigInt>> = field(m, "coroots")?
        .as_array()
        .ok_or_else(|| LgkError::Parse("field `coroots` must be an array".into()))?
        .iter()
        .map(|r| as_int_vec(r, "coroots"))
        .collect::<Result<_>>()?;
    let simple = as_usize_vec(field(m, "simple")?, "simple")?;
    let g = obj(field(m, "galois")?, "galois")?;
    let order = as_usize(field(g, "order")?, "galois.order")?;
    let mult_table = as_usize_vec(field(g, "mult_table")?, "galois.mult_table")?;
    let group = FiniteGroup::new(order, mult_table)?;
    let action: Vec<IntMatrix> = field(g, "action")?
        .as_array()
        .ok_or_else(|| LgkError::Parse("field `galois.action` must be an array".into()))?
        .iter()
        .map(|a| as_matrix(a, rank, "galois.action"))
        .collect::<Result<_>>()?;
    let x = GammaModule::new(rank, group, action)?;
    BasedRootDatum { x, roots, coroots, simple }.expect_valid("parsed datum")
}

pub fn parse_sublattice(text: &str, rank: usize) -> Result<SublatticeSpec> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| LgkError::Parse(format!("malformed JSON: {e}")))?;
    let m = obj(&v, "sublattice")?;
    let basis = as_matrix(field(m, "basis")?, rank, "basis")?;
    Ok(SublatticeSpec { basis })
}

/// Parameter input (`"param_schema": 1`): source group table, projection
/// to the Galois quotient, generator images, sl2 cocharacter. The first
/// generator is the Frobenius-like element.
pub fn parse_param(text: &str, b: &BasedRootDatum) -> Result<ParamDatum> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| LgkError::Parse(format!("malformed JSON: {e}")))?;
    let m = obj(&v, "parameter")?;
    let schema = as_usize(field(m, "param_schema")?, "param_schema")?;
    if schema != 1 {
        return Err(LgkError::Parse(format!("unsupported param_schema {schema}")));
    }
    let src = obj(field(m, "source")?, "source")?;
    let order = as_usize(field(src, "order")?, "source.order")?;
    let mult_table = as_usize_vec(field(src, "mult_table")?, "source.mult_table")?;
    let source = FiniteGroup::new(order, mult_table)?;
    let to_q = as_usize_vec(field(m, "to_q")?, "to_q")?;
    let mut gens = Vec::new();
    for (i, gv) in field(m, "generators")?
        .as_array()
        .ok_or_else(|| LgkError::Parse("field `generators` must be an array".into()))?
        .iter()
        .enumerate()
    {
        let g = obj(gv, "generator")?;
        let what = format!("generators[{i}]");
        gens.push(GeneratorSpec {
            element: as_usize(field(g, "element")?, &what)?,
            t: TorusElement::new(
                as_rat_vec(field(g, "circle")?, &what)?,
                as_rat_vec(field(g, "radial")?, &what)?,
            ),
            weyl_word: as_usize_vec(field(g, "weyl")?, &what)?,
        });
    }
    let sl2 = as_rat_vec(field(m, "sl2")?, "sl2")?;
    ParamDatum::from_generators(b, source, to_q, &gens, sl2)
}

/// Human-readable one-line group description, e.g. "Z^2 + Z/2 + Z/6".
pub fn group_display(g: &FinAbGroup) -> String {
    if g.is_trivial() {
        return "trivial".into();
    }
    let mut parts = Vec::new();
    match g.free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        k => parts.push(format!("Z^{k}")),
    }
    for d in &g.invariant_factors {
        parts.push(format!("Z/{d}"));
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galcoh;
    use crate::rootdata::presets;

    #[test]
    fn brd_round_trip_presets() {
        for name in ["SL2", "SL4", "GL3", "PGL3", "Sp4", "SO5", "SO8", "SU3", "ResSL2"] {
            let b = presets::preset_by_compact_name(name).unwrap();
            let text = emit_brd(&b);
            let back = parse_brd(&text).unwrap();
            assert_eq!(back, b, "round trip for {name}");
            // canonical: emission is byte-stable across the round trip
            assert_eq!(emit_brd(&back), text);
        }
    }

    #[test]
    fn brd_parse_rejects_garbage() {
        assert!(parse_brd("{").is_err());
        assert!(parse_brd("{\"brd_schema\":2}").is_err());
        // schema-valid but axiom-violating datum must fail
        let b = presets::sl(2).unwrap();
        let broken = emit_brd(&b).replace("[[1]]", "[[3]]");
        assert!(parse_brd(&broken).is_err());
    }

    #[test]
    fn target_emission() {
        let t = galcoh::alpha_target(&presets::pgl(3).unwrap());
        assert_eq!(
            emit_target(&t),
            "{\"free_rank\":0,\"invariant_factors\":[3],\"kind\":\"alpha\",\"caveats\":[]}"
        );
    }

    #[test]
    fn param_parse_and_rationals() {
        let b = presets::sl(2).unwrap().dual();
        let text = r#"{
            "param_schema": 1,
            "source": {"order": 2, "mult_table": [0, 1, 1, 0]},
            "to_q": [0, 0],
            "generators": [
                {"element": 1, "circle": ["1/2"], "radial": [0], "weyl": []}
            ],
            "sl2": [0]
        }"#;
        let p = parse_param(text, &b).unwrap();
        assert_eq!(p.frobenius, 1);
        assert_eq!(
            p.images[1].t.circle[0],
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        assert!(parse_param("{}", &b).is_err());
        // malformed rational
        let bad = text.replace("\"1/2\"", "\"1/0\"");
        assert!(parse_param(&bad, &b).is_err());
    }

    #[test]
    fn group_display_strings() {
        assert_eq!(group_display(&FinAbGroup::trivial()), "trivial");
        assert_eq!(group_display(&FinAbGroup::free(1)), "Z");
        assert_eq!(
            group_display(&FinAbGroup::from_factors(2, &[2, 6])),
            "Z^2 + Z/2 + Z/6"
        );
    }
}
