//! The structured result of one invocation, and its text rendering.

use std::fmt::{self, Write};

use indigenous_core::graphs::Length;
use indigenous_core::theorems::Claim;
use indigenous_core::Elem;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violated,
    BoundExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::BoundExceeded => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimLine {
    pub name: String,
    pub pass: bool,
    pub tag: String,
}

impl ClaimLine {
    pub fn new(tag: &str, name: impl Into<String>, pass: bool) -> Self {
        ClaimLine { name: name.into(), pass, tag: tag.to_string() }
    }
}

impl From<&Claim> for ClaimLine {
    fn from(c: &Claim) -> Self {
        ClaimLine::new(c.tag, c.name.clone(), c.holds)
    }
}

/// `Length` as JSON: a number, or the string `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Distance {
    Finite(u32),
    Infinite(Unbounded),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Unbounded {
    #[serde(rename = "infinite")]
    Infinite,
}

impl From<Length> for Distance {
    fn from(l: Length) -> Self {
        match l {
            Length::Finite(n) => Distance::Finite(n),
            Length::Infinite => Distance::Infinite(Unbounded::Infinite),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(n) => write!(f, "{n}"),
            Distance::Infinite(_) => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawLine {
    pub law: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalLine {
    pub ideal: Vec<Elem>,
    pub radical: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub k: u32,
    pub claims: usize,
    pub failed: usize,
    pub skipped: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Elem {
        k: u32,
        value: Elem,
        unit: bool,
        idempotent: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        sum: Option<Elem>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        product: Option<Elem>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        power: Option<Elem>,
    },
    Tables {
        k: u32,
        elements: Vec<Elem>,
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Elem>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        warning: Option<String>,
    },
    Laws {
        k: u32,
        laws: Vec<LawLine>,
    },
    Graph {
        k: u32,
        vertices: usize,
        edges: usize,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        diameter: Option<Distance>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        girth: Option<Distance>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        clique_number: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        maximum_clique: Option<Vec<Elem>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        chromatic_number: Option<u32>,
    },
    Ideals {
        k: u32,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        count: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        ideals: Option<Vec<Vec<Elem>>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        primes: Option<Vec<Vec<Elem>>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        radical: Option<RadicalLine>,
    },
    Spectrum {
        k: u32,
        points: Vec<Vec<Elem>>,
        closed_sets: Vec<Vec<usize>>,
        sierpinski: bool,
    },
    Localization {
        k: u32,
        units: Vec<Elem>,
        classes: Vec<Vec<(Elem, Elem)>>,
        boolean: bool,
        entire: bool,
        zerosumfree: bool,
        isomorphic_to_base: bool,
    },
    Poly {
        k: u32,
        f: String,
        degree: String,
        unit: bool,
        idempotent: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        g: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        sum: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        product: Option<String>,
    },
    Series {
        k: u32,
        depth: usize,
        series: String,
        support: Vec<usize>,
        unit: bool,
        idempotent: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        inverse: Option<String>,
    },
    Irreducible {
        k: u32,
        alpha: Elem,
        beta: Elem,
        irreducible: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        factors: Option<(String, String)>,
    },
    VerifyAll {
        k_max: u32,
        orders: Vec<OrderSummary>,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub payload: Payload,
    pub claims: Vec<ClaimLine>,
}

impl Report {
    /// `violated` exactly when some claim fails.
    pub fn from_claims(payload: Payload, claims: Vec<ClaimLine>) -> Self {
        let status = if claims.iter().all(|c| c.pass) { Status::Ok } else { Status::Violated };
        Report { status, payload, claims }
    }

    pub fn bound_exceeded(message: impl Into<String>) -> Self {
        Report {
            status: Status::BoundExceeded,
            payload: Payload::Error { message: message.into() },
            claims: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render_payload(&mut out, &self.payload).expect("writing to a String cannot fail");
        for c in &self.claims {
            let mark = if c.pass { "pass" } else { "FAIL" };
            writeln!(out, "[{mark}] {}: {}", c.tag, c.name).unwrap();
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::Violated => "violated",
            Status::BoundExceeded => "bound-exceeded",
        };
        writeln!(out, "status: {status}").unwrap();
        out
    }
}

fn set(elems: &[Elem]) -> String {
    let inner: Vec<String> = elems.iter().map(Elem::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_table(out: &mut String, op: &str, elements: &[Elem], table: &[Vec<Elem>]) -> fmt::Result {
    let width = elements.iter().map(|e| e.to_string().len()).max().unwrap_or(1);
    write!(out, "{op:>width$} |")?;
    for e in elements {
        write!(out, " {:>width$}", e.to_string())?;
    }
    writeln!(out)?;
    writeln!(out, "{}-+{}", "-".repeat(width), "-".repeat((width + 1) * elements.len()))?;
    for (a, row) in elements.iter().zip(table) {
        write!(out, "{:>width$} |", a.to_string())?;
        for c in row {
            write!(out, " {:>width$}", c.to_string())?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn render_payload(out: &mut String, payload: &Payload) -> fmt::Result {
    match payload {
        Payload::Elem { k, value, unit, idempotent, sum, product, power } => {
            writeln!(out, "k={k} element {value}")?;
            writeln!(out, "unit={} idempotent={}", yes(*unit), yes(*idempotent))?;
            if let Some(s) = sum {
                writeln!(out, "sum={s}")?;
            }
            if let Some(p) = product {
                writeln!(out, "product={p}")?;
            }
            if let Some(p) = power {
                writeln!(out, "power={p}")?;
            }
        }
        Payload::Tables { k, elements, add, mul, warning } => {
            if let Some(w) = warning {
                writeln!(out, "warning: {w}")?;
            }
            writeln!(out, "k={k}")?;
            render_table(out, "+", elements, add)?;
            writeln!(out)?;
            render_table(out, "*", elements, mul)?;
        }
        Payload::Laws { k, laws } => {
            writeln!(out, "k={k}")?;
            for l in laws {
                write!(out, "{} {}", l.law, if l.holds { "holds" } else { "fails" })?;
                if let Some(c) = &l.counterexample {
                    write!(out, " at {c}")?;
                }
                writeln!(out)?;
            }
        }
        Payload::Graph { k, vertices, edges, diameter, girth, clique_number, maximum_clique, chromatic_number } => {
            writeln!(out, "k={k} vertices={vertices} edges={edges}")?;
            if let Some(d) = diameter {
                writeln!(out, "diameter={d}")?;
            }
            if let Some(g) = girth {
                writeln!(out, "girth={g}")?;
            }
            if let Some(c) = clique_number {
                writeln!(out, "clique_number={c}")?;
            }
            if let Some(c) = maximum_clique {
                writeln!(out, "maximum_clique={}", set(c))?;
            }
            if let Some(c) = chromatic_number {
                writeln!(out, "chromatic_number={c}")?;
            }
        }
        Payload::Ideals { k, count, ideals, primes, radical } => {
            writeln!(out, "k={k}")?;
            if let Some(c) = count {
                writeln!(out, "count={c}")?;
            }
            if let Some(list) = ideals {
                for i in list {
                    writeln!(out, "{}", set(i))?;
                }
            }
            if let Some(ps) = primes {
                for p in ps {
                    writeln!(out, "prime {}", set(p))?;
                }
            }
            if let Some(r) = radical {
                writeln!(out, "radical of {} = {}", set(&r.ideal), set(&r.radical))?;
            }
        }
        Payload::Spectrum { k, points, closed_sets, sierpinski } => {
            writeln!(out, "k={k}")?;
            for (i, p) in points.iter().enumerate() {
                writeln!(out, "point {i}: {}", set(p))?;
            }
            writeln!(out, "points={}", points.len())?;
            writeln!(out, "closed={}", closed_sets.len())?;
            writeln!(out, "sierpinski={}", yes(*sierpinski))?;
        }
        Payload::Localization { k, units, classes, boolean, entire, zerosumfree, isomorphic_to_base } => {
            writeln!(out, "k={k} U={}", set(units))?;
            for (i, c) in classes.iter().enumerate() {
                let fractions: Vec<String> = c.iter().map(|(a, u)| format!("{a}/{u}")).collect();
                writeln!(out, "class {i}: {}", fractions.join(" "))?;
            }
            writeln!(out, "classes={}", classes.len())?;
            writeln!(out, "boolean={} entire={} zerosumfree={}", yes(*boolean), yes(*entire), yes(*zerosumfree))?;
            writeln!(out, "isomorphic_to_base={}", yes(*isomorphic_to_base))?;
        }
        Payload::Poly { k, f, degree, unit, idempotent, g, sum, product } => {
            writeln!(out, "k={k} f = {f}")?;
            writeln!(out, "degree={degree} unit={} idempotent={}", yes(*unit), yes(*idempotent))?;
            if let Some(g) = g {
                writeln!(out, "g = {g}")?;
            }
            if let Some(s) = sum {
                writeln!(out, "f + g = {s}")?;
            }
            if let Some(p) = product {
                writeln!(out, "f * g = {p}")?;
            }
        }
        Payload::Series { k, depth, series, support, unit, idempotent, inverse } => {
            writeln!(out, "k={k} depth={depth}")?;
            writeln!(out, "f = {series}")?;
            let support: Vec<String> = support.iter().map(usize::to_string).collect();
            writeln!(out, "support={{{}}}", support.join(", "))?;
            writeln!(out, "unit={} idempotent={}", yes(*unit), yes(*idempotent))?;
            if let Some(inv) = inverse {
                writeln!(out, "inverse = {inv}")?;
            }
        }
        Payload::Irreducible { k, alpha, beta, irreducible, factors } => {
            writeln!(out, "k={k} f = {alpha} X^2 + {beta}")?;
            writeln!(out, "irreducible={}", yes(*irreducible))?;
            if let Some((g, h)) = factors {
                writeln!(out, "f = ({g}) * ({h})")?;
            }
        }
        Payload::VerifyAll { k_max, orders } => {
            writeln!(out, "k=1..{k_max}")?;
            for o in orders {
                writeln!(out, "k={}: {} claims, {} failed, {} skipped", o.k, o.claims, o.failed, o.skipped.len())?;
            }
        }
        Payload::Error { message } => writeln!(out, "error: {message}")?,
    }
    Ok(())
}
