//! Canonical JSON for verdicts and witnesses. Objects are `serde_json`
//! maps, which keep keys sorted, and every number is an integer.

use ctrlab_core::hibi::{SegreFactor, SegreReport, Tri};
use ctrlab_core::perfect::CliqueStats;
use ctrlab_core::schubert::{SchubertIndex, SchubertTraceCertificate};
use ctrlab_core::verdict::RadicalEvidence;
use ctrlab_core::{Basis, DecompositionWitness, LatticePoint, ScanBounds, Verdict, VerdictKind, Witness};
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

pub fn kind_name(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Gorenstein => "gorenstein",
        VerdictKind::CtrNotGorenstein => "ctr_not_gorenstein",
        VerdictKind::NotCtr => "not_ctr",
        VerdictKind::InconclusiveAtBound => "inconclusive_at_bound",
    }
}

pub fn bounds(b: ScanBounds) -> Value {
    json!({ "degree_bound": b.degree_bound, "power_bound": b.power_bound })
}

pub fn verdict(v: &Verdict) -> Value {
    let basis = match v.basis {
        Basis::Proven => "proven",
        Basis::AtBound(_) => "at_bound",
    };
    json!({ "kind": kind_name(v.kind), "basis": basis })
}

pub fn point(p: &LatticePoint) -> Value {
    json!({ "degree": p.degree(), "values": p.values() })
}

pub fn decomposition(w: &DecompositionWitness) -> Value {
    json!({ "eta": point(&w.eta), "zeta": point(&w.zeta), "power": w.power })
}

fn schubert_index(g: &SchubertIndex) -> Value {
    json!({ "m": g.m(), "n": g.n(), "gamma": g.entries() })
}

fn cliques(c: &CliqueStats) -> Value {
    json!({ "type": "cliques", "k": c.k, "k_prime": c.k_prime, "cliques": c.cliques })
}

fn trace_certificate(c: &SchubertTraceCertificate) -> Value {
    let sigmas: Vec<Value> = c.sigmas.iter().map(|(i, s)| json!({ "i": i, "sigma": s.entries() })).collect();
    json!({
        "type": "schubert_trace",
        "gamma": schubert_index(&c.gamma),
        "kappa": c.kappa,
        "i1": c.index_sets.i1,
        "i2": c.index_sets.i2,
        "i_prime": c.index_sets.i_prime,
        "i_dprime": c.index_sets.i_dprime,
        "sigmas": sigmas,
    })
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::UnitDecomposes(d) => json!({ "type": "unit_decomposes", "decomposition": decomposition(d) }),
        Witness::PolynomialRing => json!({ "type": "polynomial_ring" }),
        Witness::NonRadicalMonomial { mu, evidence } => {
            let evidence = match evidence {
                RadicalEvidence::Power(d) => json!({ "type": "power", "decomposition": decomposition(d) }),
                RadicalEvidence::MinimalPrimes { power } => json!({
                    "type": "minimal_primes",
                    "decomposition": power.as_ref().map_or(Value::Null, decomposition),
                }),
            };
            json!({ "type": "non_radical_monomial", "mu": point(mu), "evidence": evidence })
        }
        Witness::MemberScan { degree_bound, candidates, radical_members, decomposed, unit_decomposes } => json!({
            "type": "member_scan",
            "degree_bound": degree_bound,
            "candidates": candidates,
            "radical_members": radical_members,
            "decomposed": decomposed,
            "unit_decomposes": unit_decomposes,
        }),
        Witness::Cliques(c) => cliques(c),
        Witness::SchubertKappa { gamma, kappa } => {
            json!({ "type": "schubert_kappa", "gamma": schubert_index(gamma), "kappa": kappa })
        }
        Witness::SchubertTrace(c) => trace_certificate(c),
        Witness::SchubertPower { gamma, kappa, generator_degree } => json!({
            "type": "schubert_power",
            "gamma": schubert_index(gamma),
            "kappa": kappa,
            "generator_degree": generator_degree,
        }),
        Witness::Determinantal { m, n, t, trace_exponent } => {
            json!({ "type": "determinantal", "m": m, "n": n, "t": t, "trace_exponent": trace_exponent })
        }
    }
}

fn tri(t: Tri) -> &'static str {
    match t {
        Tri::Yes => "yes",
        Tri::No => "no",
        Tri::Unknown => "unknown",
    }
}

fn segre_factor(f: &SegreFactor) -> Value {
    json!({
        "a": f.a,
        "b": f.b,
        "level": tri(f.level),
        "anticanonical_level": tri(f.anticanonical_level),
        "dim_lower_bound": f.dim_lower_bound,
        "ctr": tri(f.ctr),
    })
}

pub fn segre(r: &SegreReport) -> Value {
    json!({
        "factors": r.factors.iter().map(segre_factor).collect::<Vec<_>>(),
        "hypothesis_ok": r.hypothesis_ok,
        "predicted_a": r.predicted_a,
        "predicted_b": r.predicted_b,
        "reorder_hint": r.reorder_hint,
        "assumed": r.assumed,
        "window": r.window,
    })
}

// Decoding, for `verify`.

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| CliError::Report(format!("missing field `{key}`")))
}

pub fn get_i64(v: &Value, key: &str) -> Result<i64> {
    field(v, key)?.as_i64().ok_or_else(|| CliError::Report(format!("`{key}` is not an integer")))
}

pub fn get_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| CliError::Report(format!("`{key}` is not a string")))
}

pub fn point_from(v: &Value) -> Result<LatticePoint> {
    let degree = get_i64(v, "degree")?;
    let values: &Map<String, Value> =
        field(v, "values")?.as_object().ok_or_else(|| CliError::Report("`values` is not an object".into()))?;
    let mut pairs = Vec::with_capacity(values.len());
    for (id, x) in values {
        let x = x.as_i64().ok_or_else(|| CliError::Report(format!("value of `{id}` is not an integer")))?;
        pairs.push((id.clone(), x));
    }
    Ok(LatticePoint::from_pairs(pairs, degree))
}

pub fn decomposition_from(v: &Value) -> Result<DecompositionWitness> {
    let power = u32::try_from(get_i64(v, "power")?).map_err(|_| CliError::Report("`power` out of range".into()))?;
    Ok(DecompositionWitness { eta: point_from(field(v, "eta")?)?, zeta: point_from(field(v, "zeta")?)?, power })
}
