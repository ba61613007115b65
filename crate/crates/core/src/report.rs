//! Flat `key=value` reports, one fact per line.

use std::fmt;

use crate::decide::{BuchsbaumReport, DecisionReport, Outcome, ShimodaReport};
use crate::error::{Error, Result};
use crate::invariants::InvariantReport;
use crate::kernel::{Field, Poly, PolyRing};
use crate::rees::OracleVerdict;
use crate::s2::{HypothesisProfile, S2Analysis};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        let value = value.to_string().replace('\n', " ");
        self.entries.push((key.into(), value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Reads a report back; blank lines and `#` comments are skipped.
pub fn parse_report(text: &str) -> Result<Report> {
    let mut r = Report::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse { line: i + 1, col: 1, msg: "expected key=value".into() })?;
        if k.is_empty() || k.contains(char::is_whitespace) {
            return Err(Error::Parse { line: i + 1, col: 1, msg: format!("bad key `{k}`") });
        }
        r.push(k, v);
    }
    Ok(r)
}

fn list<F: Field>(r: &PolyRing<F>, ps: &[Poly<F>]) -> String {
    ps.iter().map(|p| r.format(p)).collect::<Vec<_>>().join(", ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "none".to_string(), T::to_string)
}

pub fn invariants_report(rep: &mut Report, inv: &InvariantReport) {
    rep.push("invariants.nvars", inv.nvars);
    rep.push("invariants.dim", inv.dim);
    rep.push("invariants.depth", inv.depth);
    rep.push("invariants.pd", inv.pd);
    rep.push("invariants.cm", inv.cm);
    rep.push("invariants.type", inv.type_);
    rep.push("invariants.betti", inv.betti.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
}

pub fn profile_report<F: Field>(rep: &mut Report, profile: &HypothesisProfile<F>) {
    for e in &profile.entries {
        let k = format!("profile.h{}", e.i);
        rep.push(format!("{k}.vanishes"), e.vanishes);
        if !e.vanishes {
            rep.push(format!("{k}.length"), opt(&e.length));
        }
    }
    rep.push("profile.verdict", profile.verdict);
}

pub fn s2_report<F: Field>(rep: &mut Report, r: &PolyRing<F>, an: &S2Analysis<F>) {
    profile_report(rep, &an.profile);
    let data = &an.data;
    rep.push("s2.pair", list(r, &[data.a.clone(), data.b.clone()]));
    rep.push("s2.colon", data.colon.format_canonical());
    rep.push("s2.numerators", list(r, &data.numerators));
    rep.push("s2.h1_length", data.h1_length);
    rep.push("s2.h1_socle", data.h1_socle_direct);
    rep.push("s2.conductor", data.conductor.format_canonical());
    rep.push("s2.conductor_dual", an.conductor_dual.format_canonical());
    rep.push("s2.colon_pd", data.colon_pd);
}

pub fn oracle_report(rep: &mut Report, power: u32, v: &OracleVerdict) {
    rep.push("oracle.power", power);
    rep.push("oracle.nvars", v.nvars);
    rep.push("oracle.dim", v.dim);
    rep.push("oracle.codim", v.codim);
    rep.push("oracle.pd", v.pd);
    rep.push("oracle.cm", v.cm);
    rep.push("oracle.last_betti", v.last_betti);
    rep.push("oracle.betti", v.betti.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    rep.push("oracle.gorenstein", v.gorenstein);
}

pub fn shimoda_report(rep: &mut Report, s: &ShimodaReport) {
    rep.push("shimoda.a_regular", s.a_regular);
    rep.push("shimoda.b_regular", s.b_regular);
    rep.push("shimoda.colon_intersection", s.colon_intersection);
    rep.push("shimoda.socle", s.socle);
    rep.push("shimoda.verdict", s.verdict);
}

pub fn buchsbaum_report(rep: &mut Report, b: &BuchsbaumReport) {
    rep.push("buchsbaum.e_m", b.e_m);
    rep.push("buchsbaum.reduction_number", opt(&b.reduction_number));
    rep.push("buchsbaum.len_b", b.len_b);
    rep.push("buchsbaum.e_q", opt(&b.e_q));
    rep.push("buchsbaum.asserted", b.buchsbaum_asserted);
    rep.push("buchsbaum.verdict", b.verdict);
}

pub fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Gorenstein => "gorenstein",
        Outcome::NotGorenstein => "not_gorenstein",
        Outcome::HypothesisUnmet => "hypothesis_unmet",
    }
}

pub fn decision_report<F: Field>(rep: &mut Report, d: &DecisionReport<F>) {
    let r = d.ring.ambient();
    rep.push("d", d.d);
    invariants_report(rep, &d.invariants);
    profile_report(rep, &d.profile);
    rep.push("standard", d.standard);
    rep.push("pair", list(r, &[d.pair.0.clone(), d.pair.1.clone()]));
    rep.push("h1_length", d.h1_length);
    rep.push("h1_socle", opt(&d.h1_socle));
    rep.push("conductor", d.conductor.format_canonical());
    rep.push("sigma", d.sigma.format_canonical());
    let c2 = &d.cond2;
    rep.push("cond2.h1_nonzero", c2.h1_nonzero);
    rep.push("cond2.socle_is_1", c2.socle_is_1);
    rep.push("cond2.c_equals_sigma", c2.c_equals_sigma);
    rep.push("cond2.verdict", c2.verdict);
    let c3 = &d.cond3;
    rep.push("cond3.depth_is_1", c3.depth_is_1);
    rep.push("cond3.type_is_1", c3.type_is_1);
    rep.push("cond3.e_c", c3.e_c);
    rep.push("cond3.len_a_mod_c", c3.len_a_mod_c);
    rep.push("cond3.multiplicity_equation", c3.multiplicity_equation);
    rep.push("cond3.reduction_number", opt(&c3.reduction_number));
    rep.push("cond3.verdict", c3.verdict);
    if let Some(c) = &d.consequences {
        rep.push("consequences.c_equals_q_atilde", c.c_equals_q_atilde);
        rep.push("consequences.len_atilde_mod_c_equals_2len", c.len_atilde_mod_c_equals_2len);
        rep.push("consequences.artinian_quotient_gorenstein", c.artinian_quotient_gorenstein);
        rep.push("consequences.atilde_cm", c.atilde_cm);
        rep.push("consequences.pair_independent", c.pair_independent);
    }
    if let Some(o) = &d.oracle {
        oracle_report(rep, d.d as u32, o);
    }
    rep.push("verdict", d.verdict);
    rep.push("outcome", outcome_name(d.outcome()));
    rep.push("narrative", narrative(d));
}

fn narrative<F: Field>(d: &DecisionReport<F>) -> String {
    let n = d.d;
    let oracle = match &d.oracle {
        Some(o) => format!(" The resolution of R(q^{n}) agrees (pd {}, last Betti number {}).", o.pd, o.last_betti),
        None => String::new(),
    };
    match d.outcome() {
        Outcome::Gorenstein => format!(
            "R(q^{n}) is Gorenstein by the local cohomology criterion: H^1 has length {} with one-dimensional socle and the conductor equals the colon sum. The numerical criterion agrees (e_c = {} = 2 l(A/c), reduction number {}).{oracle}",
            d.h1_length,
            d.cond3.e_c,
            opt(&d.cond3.reduction_number)
        ),
        Outcome::HypothesisUnmet => "H^1 vanishes, so A has depth at least 2 and the criteria do not apply; run the oracle to decide.".to_string(),
        Outcome::NotGorenstein if d.h1_length == 0 => format!("H^1 vanishes and the criteria do not apply; the oracle decides that R(q^{n}) is not Gorenstein.{oracle}"),
        Outcome::NotGorenstein => {
            let mut why = Vec::new();
            if !d.cond2.socle_is_1 {
                why.push(format!("the socle of H^1 has dimension {}", opt(&d.h1_socle)));
            }
            if !d.cond2.c_equals_sigma {
                why.push("the conductor differs from the colon sum".to_string());
            }
            format!("R(q^{n}) is not Gorenstein by the local cohomology criterion: {}. The numerical criterion agrees.{oracle}", why.join(" and "))
        }
    }
}
