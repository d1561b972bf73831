use std::fmt::Write as _;

use ctrlab_core::hibi::SegreReport;
use ctrlab_core::schubert::{block_decomposition, SchubertIndex};
use ctrlab_core::verdict::RadicalEvidence;
use ctrlab_core::{Basis, DecompositionWitness, Engine, LatticePoint, ScanBounds, Verdict, Witness};
use serde_json::{json, Value};

use crate::encode;
use crate::request::Request;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Verdict(Verdict),
    Segre(SegreReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub request: Request,
    pub bounds: ScanBounds,
    pub engine: Engine,
    /// Hypotheses taken on trust, e.g. that a raw graph is perfect.
    pub assumptions: Vec<&'static str>,
    pub body: Body,
    pub timing_ms: Option<u64>,
}

pub fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Pruned => "pruned",
        Engine::Exhaustive => "exhaustive",
    }
}

impl Report {
    /// 0 for a settled verdict, 3 when any part only holds up to the bounds.
    pub fn exit_code(&self) -> i32 {
        match &self.body {
            Body::Verdict(v) if matches!(v.basis, Basis::AtBound(_)) => 3,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "family": self.request.family(),
            "input": self.request.input_json(),
            "bounds": encode::bounds(self.bounds),
            "engine": engine_name(self.engine),
            "assumptions": self.assumptions,
        });
        let obj = out.as_object_mut().expect("object");
        match &self.body {
            Body::Verdict(v) => {
                obj.insert("verdict".into(), encode::verdict(v));
                obj.insert("witness".into(), encode::witness(&v.witness));
            }
            Body::Segre(r) => {
                obj.insert("segre".into(), encode::segre(r));
            }
        }
        if let Some(ms) = self.timing_ms {
            obj.insert("timing_ms".into(), json!(ms));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "family      {}", self.request.family());
        let _ = writeln!(s, "input       {}", self.request.summary());
        match &self.body {
            Body::Verdict(v) => {
                let basis = match v.basis {
                    Basis::Proven => "proven".to_string(),
                    Basis::AtBound(b) => {
                        format!("at bound: degree <= {}, power <= {}", b.degree_bound, b.power_bound)
                    }
                };
                let _ = writeln!(s, "verdict     {} ({basis})", encode::kind_name(v.kind));
                for a in &self.assumptions {
                    let _ = writeln!(s, "assumes     {a}");
                }
                write_witness(&mut s, &v.witness);
            }
            Body::Segre(r) => write_segre(&mut s, r),
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "time        {ms} ms");
        }
        s
    }
}

fn write_witness(s: &mut String, w: &Witness) {
    let tag = encode::witness(w)["type"].as_str().unwrap_or_default().to_string();
    let _ = writeln!(s, "witness     {tag}");
    match w {
        Witness::UnitDecomposes(d) => {
            let zero = LatticePoint::from_pairs(d.eta.values().keys().map(|k| (k.clone(), 0)), 0);
            write_points(s, &zero, d);
        }
        Witness::PolynomialRing => {}
        Witness::NonRadicalMonomial { mu, evidence } => {
            let power = match evidence {
                RadicalEvidence::Power(d) => Some(d),
                RadicalEvidence::MinimalPrimes { power } => {
                    let _ = writeln!(s, "            mu lies in every minimal prime of the trace");
                    power.as_ref()
                }
            };
            match power {
                Some(d) => write_points(s, mu, d),
                None => {
                    write_table(s, &[("mu", mu)]);
                    let _ = writeln!(s, "            no power found in the trace within the bound");
                }
            }
        }
        Witness::MemberScan { degree_bound, candidates, radical_members, decomposed, .. } => {
            let _ = writeln!(s, "            ring monomials of degree 1..={degree_bound}: {candidates}");
            let _ = writeln!(s, "            in the radical: {radical_members}, in the trace: {decomposed}");
        }
        Witness::Cliques(c) => {
            let _ = writeln!(s, "            k = {}, k' = {}", c.k, c.k_prime);
            for clique in &c.cliques {
                let _ = writeln!(s, "            {{{}}}", clique.join(", "));
            }
        }
        Witness::SchubertKappa { gamma, .. } | Witness::SchubertPower { gamma, .. } => kappa_table(s, gamma),
        Witness::SchubertTrace(c) => {
            kappa_table(s, &c.gamma);
            let sets = &c.index_sets;
            let _ = writeln!(
                s,
                "            I1 = {:?}, I2 = {:?}, I' = {:?}, I'' = {:?}",
                sets.i1, sets.i2, sets.i_prime, sets.i_dprime
            );
            for (i, sigma) in &c.sigmas {
                let _ = writeln!(s, "            sigma_{i} = {sigma}");
            }
        }
        Witness::Determinantal { t, trace_exponent, .. } => {
            let _ = writeln!(s, "            trace = I_{}(X)^{trace_exponent}", t - 1);
        }
    }
}

fn write_points(s: &mut String, mu: &LatticePoint, d: &DecompositionWitness) {
    let label = if d.power == 1 { "mu".to_string() } else { format!("{}*mu", d.power) };
    let scaled = mu.scaled(i64::from(d.power)).unwrap_or_else(|_| mu.clone());
    let mut rows = vec![("mu", mu)];
    if d.power != 1 {
        rows.push((label.as_str(), &scaled));
    }
    rows.push(("eta", &d.eta));
    rows.push(("zeta", &d.zeta));
    write_table(s, &rows);
}

/// Right-aligned columns: degree first, then the ground elements.
fn write_table(s: &mut String, rows: &[(&str, &LatticePoint)]) {
    let Some((_, first)) = rows.first() else { return };
    let mut header = vec!["deg".to_string()];
    header.extend(first.values().keys().cloned());
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(_, p)| {
            let mut row = vec![p.degree().to_string()];
            row.extend(p.values().values().map(i64::to_string));
            row
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|j| cells.iter().map(|r| r.get(j).map_or(0, String::len)).chain([header[j].len()]).max().unwrap_or(0))
        .collect();
    let line = |label: &str, row: &[String]| {
        let body: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("  {label:<9} {}\n", body.join(" "))
    };
    s.push_str(&line("", &header));
    for ((label, _), row) in rows.iter().zip(&cells) {
        s.push_str(&line(label, row));
    }
}

fn kappa_table(s: &mut String, gamma: &SchubertIndex) {
    let Ok(d) = block_decomposition(gamma) else { return };
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let _ = writeln!(s, "  {:>3}  {:<14} {:<14} {:>5}", "i", "block", "gap", "kappa");
    for i in 0..=d.t() {
        let _ = writeln!(s, "  {i:>3}  {:<14} {:<14} {:>5}", join(&d.blocks()[i]), join(&d.gaps()[i]), d.kappa()[i]);
    }
    let last = &d.blocks()[d.t() + 1];
    let _ = writeln!(s, "  last block     {}", if last.is_empty() { "-".to_string() } else { join(last) });
    let _ = writeln!(s, "  kappa - kappa' = {}", d.kappa_max() - d.kappa_min());
}

fn write_segre(s: &mut String, r: &SegreReport) {
    let _ = writeln!(s, "hypotheses  {}", if r.hypothesis_ok { "hold" } else { "fail" });
    let _ = writeln!(s, "predicted   a = {}, b = {}", r.predicted_a, r.predicted_b);
    if let Some(i) = r.reorder_hint {
        let _ = writeln!(s, "reorder     move factor {i} to the front");
    }
    let _ = writeln!(s, "  {:>3} {:>5} {:>5} {:>7} {:>7} {:>5} {:>7}", "#", "a", "b", "level", "anti", "dim", "ctr");
    for (i, f) in r.factors.iter().enumerate() {
        let t = |x| format!("{x:?}").to_lowercase();
        let _ = writeln!(
            s,
            "  {i:>3} {:>5} {:>5} {:>7} {:>7} {:>5} {:>7}",
            f.a,
            f.b,
            t(f.level),
            t(f.anticanonical_level),
            f.dim_lower_bound,
            t(f.ctr)
        );
    }
    let _ = writeln!(s, "assumes     {}", r.assumed.join(", "));
}
