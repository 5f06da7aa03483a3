//! Versioned JSON reports. Rationals are written as strings `"p/q"` (or `"p"`) so
//! that no value passes through floating point.

use serde::Serialize;
use serde_json::{json, Value};

use crate::binform::Form;
use crate::curves::QsaResult;
use crate::exactlin::{LinearSubspace, Scalar};
use crate::rankengine::{DecompositionSample, RankProfile, WqResult};
use crate::veronese::{A43Instance, A43Report, H1Report, Witness};

pub const SCHEMA: u32 = 1;

/// The statement a report checks: an identifier and the claim as a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub statement: &'static str,
    pub claim: &'static str,
}

/// Anchor for a suite name or CLI command.
pub fn anchor(name: &str) -> Option<Anchor> {
    let (statement, claim) = match name {
        "a3" | "wq" => ("a3", "W_q = {q} whenever 2 <= b_X(q) < d + 2 - b_X(q)"),
        "a2" => ("a2", "c_X(q) + r_X(q) = d + 2; dim S(X,q) = d + 3 - 2b; <Z> ∩ <S> = {q}; <S> ∩ <S'> = {q} for generic q, d even"),
        "rank-profile" => ("a2", "c_X(q) + r_X(q) = d + 2 when r_X(q) > b_X(q)"),
        "q1" => ("q1", "S(X, x^d + y^d, t) is empty for 3 <= t <= d - 1"),
        "q2" => ("q2", "S(X, q, d) is nonempty for generic q"),
        "q3" => ("q3", "W_{q,t} = {q} for generic q and floor((d+2)/2) <= t <= d"),
        "a45" | "h1" => ("a45", "for |S| <= 4d - 5: h^1(I_S(d)) > 0 iff S has d + 2 points on a line, 2d + 2 on a conic, 3d on a cubic complete intersection or 3d + 1 on a plane cubic"),
        "a43" => ("a43", "W_q = <nu_d(U) ∪ {q'}>"),
        "i1" | "qsa" => ("i1", "{q} = <S> ∩ <A_S> with S and A_S irredundant"),
        _ => return None,
    };
    Some(Anchor { statement, claim })
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub anchor: Anchor,
    pub seed: u64,
    pub inputs: Value,
    pub outputs: Value,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl Report {
    /// `anchor_key` is a suite or command name understood by [`anchor`].
    pub fn new(command: &str, anchor_key: &str, seed: u64, inputs: Value, outputs: Value, pass: bool, elapsed_ms: u64) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            anchor: anchor(anchor_key).unwrap_or(Anchor { statement: "-", claim: "-" }),
            seed,
            inputs,
            outputs,
            pass,
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with `elapsed_ms` zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Report {
        Report { elapsed_ms: 0, ..self.clone() }
    }
}

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn form<V>(f: &Form<V>) -> Value {
    Value::String(f.to_string())
}

pub fn subspace(s: &LinearSubspace) -> Value {
    json!({
        "proj_dim": s.proj_dim(),
        "basis": s.basis().iter().map(|b| vector(b)).collect::<Vec<_>>(),
    })
}

pub fn rank_profile(p: &RankProfile) -> Value {
    json!({
        "d": p.d,
        "border_rank": p.border_rank,
        "cactus_rank": p.cactus_rank,
        "rank": p.rank,
        "min_generator": form(&p.min_generator),
        "z_unique": p.z_unique,
        "on_curve": p.on_curve(),
    })
}

pub fn sample(s: &DecompositionSample) -> Value {
    json!({
        "t": s.t,
        "g": form(&s.g),
        "span_proj_dim": s.span.proj_dim(),
        "irredundant": s.irredundant,
    })
}

pub fn wq(w: &WqResult) -> Value {
    json!({
        "t": w.t,
        "subspace": subspace(&w.subspace),
        "samples_used": w.samples_used,
        "draws": w.draws,
        "stabilized": w.stabilized,
        "certified_point": w.certified_point,
        "family_exhausted": w.family_exhausted,
        "samples": w.samples.iter().map(sample).collect::<Vec<_>>(),
    })
}

pub fn witness(w: &Witness) -> Value {
    json!({
        "kind": w.kind.name(),
        "points": w.points,
        "support": subspace(&w.support),
        "equation": vector(&w.equation),
        "reducible": w.reducible,
        "h1": w.h1,
    })
}

pub fn h1(r: &H1Report) -> Value {
    json!({
        "n": r.n,
        "t": r.t,
        "size": r.size,
        "h0": r.h0,
        "h1": r.h1,
        "searched": r.searched,
        "witness": r.witness.as_ref().map(witness),
    })
}

pub fn a43_instance(inst: &A43Instance) -> Value {
    json!({
        "n": inst.n,
        "d": inst.d,
        "b": inst.b,
        "k": inst.k,
        "qprime": form(&inst.qprime),
        "e_form": form(&inst.e_form),
        "u": inst.u.points().iter().map(|p| vector(p)).collect::<Vec<_>>(),
        "mixing": vector(&inst.mixing),
        "q": vector(&inst.q),
    })
}

pub fn a43_report(r: &A43Report) -> Value {
    json!({
        "u_size": r.u_size,
        "samples_requested": r.samples_requested,
        "samples_used": r.samples_used,
        "containment": r.containment,
        "part2_asserted": r.part2_asserted,
        "intersection_dim": r.intersection_dim,
        "expected_dim": r.expected_dim,
        "intersection_matches": r.intersection_matches,
        "qprime_recovered": r.qprime_recovered,
        "u_span_recovered": r.u_span_recovered,
        "rank_certified": r.rank_certified,
        "note": r.note,
        "pass": r.pass,
    })
}

pub fn qsa(r: &QsaResult) -> Value {
    json!({
        "q": vector(&r.q),
        "span_s": subspace(&r.span_s),
        "span_a": subspace(&r.span_a),
        "s_irredundant": r.s_irredundant,
        "a_irredundant": r.a_irredundant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::ratio;
    use crate::BinaryForm;

    #[test]
    fn rationals_are_strings() {
        assert_eq!(scalar(&ratio(-3, 6)), json!("-1/2"));
        assert_eq!(vector(&[ratio(4, 2)]), json!(["2"]));
        assert_eq!(form(&BinaryForm::from_i64(&[1, 0, 1])), json!("2:1,0,1"));
    }

    #[test]
    fn every_suite_and_command_has_an_anchor() {
        for name in ["a3", "a2", "q1", "q2", "q3", "a45", "a43", "i1", "rank-profile", "wq", "h1", "qsa"] {
            assert!(anchor(name).is_some(), "{name}");
        }
        assert!(anchor("nope").is_none());
    }

    #[test]
    fn timing_is_the_only_nondeterministic_field() {
        let a = Report::new("verify", "a3", 7, json!({}), json!({"x": "1/2"}), true, 12);
        let b = Report::new("verify", "a3", 7, json!({}), json!({"x": "1/2"}), true, 99);
        assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
        let v: Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["anchor"]["statement"], "a3");
    }
}
