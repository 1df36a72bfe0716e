use indigenous_core::graphs::{clique_lower_bound, IndigenousGraph};
use indigenous_core::ideals::{
    enumerate_ideals_within, ideal_generated, primes, Ideal, LocalizedSemiring, SpectrumView,
};
use indigenous_core::laws::{verify_laws_within, Counterexample};
use indigenous_core::series::{
    factorization_oracle_within, idempotent_series_from_generators, quadratic_irreducible, Degree, Poly, TruncSeries,
};
use indigenous_core::theorems::{sweep, ClaimLimits};
use indigenous_core::{limits, Elem, Error, Result, SemiringCtx};

use crate::report::{ClaimLine, LawLine, OrderSummary, Payload, RadicalLine, Report};

/// Tables above this order are still rendered, with a warning.
const READABLE_TABLE: u32 = 32;

fn limit(default: u32, unsafe_bound: bool) -> u32 {
    if unsafe_bound {
        u32::MAX
    } else {
        default
    }
}

fn elems(ctx: &SemiringCtx, list: &str) -> Result<Vec<Elem>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| ctx.parse(s)).collect()
}

pub fn elem(ctx: &SemiringCtx, a: &str, add: Option<&str>, mul: Option<&str>, pow: Option<u32>) -> Result<Report> {
    let a = ctx.parse(a)?;
    let sum = add.map(|b| ctx.parse(b).and_then(|b| ctx.add(a, b))).transpose()?;
    let product = mul.map(|b| ctx.parse(b).and_then(|b| ctx.mul(a, b))).transpose()?;
    let power = pow.map(|n| ctx.pow(a, n)).transpose()?;
    let payload = Payload::Elem {
        k: ctx.k(),
        value: a,
        unit: ctx.is_unit(a)?,
        idempotent: ctx.is_idempotent(a)?,
        sum,
        product,
        power,
    };
    Ok(Report::from_claims(payload, Vec::new()))
}

pub fn table(ctx: &SemiringCtx) -> Report {
    let elements: Vec<Elem> = ctx.elements().collect();
    let grid = |op: &dyn Fn(Elem, Elem) -> Result<Elem>| -> Vec<Vec<Elem>> {
        elements.iter().map(|&a| elements.iter().map(|&b| op(a, b).expect("carrier elements")).collect()).collect()
    };
    let warning = (ctx.k() > READABLE_TABLE)
        .then(|| format!("k = {} exceeds {READABLE_TABLE}; the tables will not be readable", ctx.k()));
    let payload = Payload::Tables {
        k: ctx.k(),
        add: grid(&|a, b| ctx.add(a, b)),
        mul: grid(&|a, b| ctx.mul(a, b)),
        elements,
        warning,
    };
    Report::from_claims(payload, Vec::new())
}

pub fn laws(ctx: &SemiringCtx, unsafe_bound: bool) -> Result<Report> {
    let reports = verify_laws_within(ctx, limit(limits::LAWS, unsafe_bound))?;
    let claims = reports.iter().map(|r| ClaimLine::new("semiring", r.law.name(), r.holds)).collect();
    let laws = reports
        .iter()
        .map(|r| LawLine {
            law: r.law.name().to_string(),
            holds: r.holds,
            counterexample: r.counterexample.as_ref().map(|c| match c {
                Counterexample::Elems(t) => t.iter().map(Elem::to_string).collect::<Vec<_>>().join(","),
                Counterexample::Naturals(x, y) => format!("naturals {x},{y}"),
            }),
        })
        .collect();
    Ok(Report::from_claims(Payload::Laws { k: ctx.k(), laws }, claims))
}

#[derive(Debug, Clone, Copy)]
pub struct GraphSelection {
    pub diameter: bool,
    pub girth: bool,
    pub clique: bool,
    pub chromatic: bool,
}

pub fn graph(ctx: &SemiringCtx, pick: GraphSelection, unsafe_bound: bool) -> Result<Report> {
    const TAG: &str = "graph";
    let g = IndigenousGraph::from_ctx(ctx);
    let exact = limit(limits::GRAPH_EXACT, unsafe_bound);
    let mut claims = Vec::new();
    let maximum_clique = if pick.clique || pick.chromatic { Some(g.maximum_clique_within(exact)?) } else { None };
    let clique_number = maximum_clique.as_ref().map(|c| c.len() as u32);
    if let Some(w) = clique_number.filter(|_| pick.clique) {
        claims.push(ClaimLine::new(
            TAG,
            format!("clique number >= {}", clique_lower_bound(ctx.k())),
            w >= clique_lower_bound(ctx.k()),
        ));
    }
    let chromatic_number = if pick.chromatic { Some(g.chromatic_number_within(exact)?) } else { None };
    if let (Some(chi), Some(w)) = (chromatic_number, clique_number) {
        claims.push(ClaimLine::new(TAG, "chromatic number >= clique number", chi >= w));
    }
    let payload = Payload::Graph {
        k: ctx.k(),
        vertices: g.vertex_count(),
        edges: g.edges().len(),
        diameter: pick.diameter.then(|| g.diameter().into()),
        girth: pick.girth.then(|| g.girth().into()),
        clique_number: clique_number.filter(|_| pick.clique),
        maximum_clique: maximum_clique.filter(|_| pick.clique),
        chromatic_number,
    };
    Ok(Report::from_claims(payload, claims))
}

#[derive(Debug, Clone, Copy)]
pub struct IdealSelection {
    pub count: bool,
    pub list: bool,
    pub primes: bool,
}

pub fn ideals(ctx: &SemiringCtx, pick: IdealSelection, radical: Option<&str>, unsafe_bound: bool) -> Result<Report> {
    let all = enumerate_ideals_within(ctx, limit(limits::IDEALS, unsafe_bound))?;
    let mut claims = Vec::new();
    let prime_list = pick.primes.then(|| primes(&all));
    if let Some(ps) = &prime_list {
        claims.push(ClaimLine::new("ideals", "exactly two prime ideals", ps.len() == 2));
    }
    let radical = radical
        .map(|gens| -> Result<RadicalLine> {
            let ideal = ideal_generated(ctx, &elems(ctx, gens)?)?;
            Ok(RadicalLine { ideal: ideal.members(), radical: ideal.radical().members() })
        })
        .transpose()?;
    let payload = Payload::Ideals {
        k: ctx.k(),
        count: pick.count.then_some(all.len()),
        ideals: pick.list.then(|| all.iter().map(Ideal::members).collect()),
        primes: prime_list.map(|ps| ps.iter().map(Ideal::members).collect()),
        radical,
    };
    Ok(Report::from_claims(payload, claims))
}

pub fn spectrum(ctx: &SemiringCtx, unsafe_bound: bool) -> Result<Report> {
    let view = SpectrumView::within(ctx, limit(limits::IDEALS, unsafe_bound))?;
    let sierpinski = view.is_sierpinski();
    let payload = Payload::Spectrum {
        k: ctx.k(),
        points: view.points.iter().map(Ideal::members).collect(),
        closed_sets: view.closed_sets,
        sierpinski,
    };
    Ok(Report::from_claims(payload, vec![ClaimLine::new("spectrum", "Sierpinski space", sierpinski)]))
}

pub fn localize(ctx: &SemiringCtx, units: &str, unsafe_bound: bool) -> Result<Report> {
    let l = limit(limits::LOCALIZATION, unsafe_bound);
    if ctx.k() > l {
        return Err(Error::BoundExceeded { what: "localization", k: ctx.k(), limit: l });
    }
    let local = LocalizedSemiring::new(ctx, &elems(ctx, units)?)?;
    let (entire, zerosumfree, boolean) = (local.is_entire(), local.is_zerosumfree(), local.is_boolean());
    let mut claims = vec![ClaimLine::new("localization", "information algebra", entire && zerosumfree)];
    if local.has_finite_nonunit() {
        claims.push(ClaimLine::new("localization", "Boolean quotient", boolean));
    }
    let payload = Payload::Localization {
        k: ctx.k(),
        units: local.units().to_vec(),
        classes: local.classes.clone(),
        boolean,
        entire,
        zerosumfree,
        isomorphic_to_base: local.is_isomorphic_to_base(),
    };
    Ok(Report::from_claims(payload, claims))
}

pub fn poly(ctx: &SemiringCtx, f: &str, g: Option<&str>) -> Result<Report> {
    const TAG: &str = "series";
    let f = Poly::parse(ctx, f)?;
    let g = g.map(|g| Poly::parse(ctx, g)).transpose()?;
    let mut claims = vec![ClaimLine::new(
        TAG,
        "closed-form idempotency agrees with squaring",
        f.is_idempotent() == f.squares_to_itself(),
    )];
    let mut sum = None;
    let mut product = None;
    if let Some(g) = &g {
        let s = f.checked_add(g)?;
        let p = f.checked_mul(g)?;
        claims.push(ClaimLine::new(TAG, "deg(f + g) = max(deg f, deg g)", s.degree() == f.degree().max(g.degree())));
        claims.push(ClaimLine::new(TAG, "deg(f g) = deg f + deg g", p.degree() == f.degree() + g.degree()));
        sum = Some(s.to_string());
        product = Some(p.to_string());
    }
    let degree = match f.degree() {
        Degree::NegInfinity => "-inf".to_string(),
        Degree::Finite(d) => d.to_string(),
    };
    let payload = Payload::Poly {
        k: ctx.k(),
        f: f.to_string(),
        degree,
        unit: f.is_unit(),
        idempotent: f.is_idempotent(),
        g: g.map(|g| g.to_string()),
        sum,
        product,
    };
    Ok(Report::from_claims(payload, claims))
}

pub fn series(ctx: &SemiringCtx, f: Option<&str>, depth: usize, gens: Option<&str>, a0: &str) -> Result<Report> {
    let window = match (f, gens) {
        (Some(f), _) => TruncSeries::parse(ctx, depth, f)?,
        (None, Some(gens)) => {
            let gens = gens
                .split(',')
                .map(|g| g.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidArgument("generators must be positive integers"))?;
            idempotent_series_from_generators(ctx, ctx.parse(a0)?, &gens, depth)?
        }
        (None, None) => return Err(Error::InvalidArgument("give a series or --gens")),
    };
    let idempotent = window.is_idempotent_window();
    let claims = vec![ClaimLine::new(
        "series",
        "structural idempotency agrees with squaring",
        idempotent == window.squares_to_itself(),
    )];
    let payload = Payload::Series {
        k: ctx.k(),
        depth,
        series: window.to_string(),
        support: window.support(),
        unit: window.is_unit(),
        idempotent,
        inverse: window.find_inverse().map(|i| i.to_string()),
    };
    Ok(Report::from_claims(payload, claims))
}

pub fn irreducible(ctx: &SemiringCtx, alpha: &str, beta: &str, unsafe_bound: bool) -> Result<Report> {
    let (alpha, beta) = (ctx.parse(alpha)?, ctx.parse(beta)?);
    let closed = quadratic_irreducible(ctx, alpha, beta)?;
    let f = Poly::new(ctx, &[beta, Elem::Zero, alpha])?;
    let l = limit(limits::FACTOR_ORACLE, unsafe_bound);
    let mut claims = Vec::new();
    let mut factors = None;
    if ctx.k() <= l {
        let witness = factorization_oracle_within(&f, l)?;
        claims.push(ClaimLine::new(
            "irreducibility",
            "closed form agrees with the factorization oracle",
            closed == witness.is_none(),
        ));
        factors = witness.map(|(g, h)| (g.to_string(), h.to_string()));
    }
    let payload = Payload::Irreducible { k: ctx.k(), alpha, beta, irreducible: closed, factors };
    Ok(Report::from_claims(payload, claims))
}

/// Every claim for `k = 1 ..= k_max`, with each order's semiring built by `make`.
pub fn verify_all(k_max: u32, make: impl Fn(u32) -> Result<SemiringCtx>) -> Result<Report> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("--k-max must be at least 1"));
    }
    let result = sweep(k_max, &ClaimLimits::default(), make)?;
    let mut claims = Vec::new();
    let mut orders = Vec::new();
    for (k, set) in &result.orders {
        claims.extend(set.claims.iter().map(|c| {
            let mut line = ClaimLine::from(c);
            line.name = format!("k={k} {}", line.name);
            line
        }));
        orders.push(OrderSummary {
            k: *k,
            claims: set.claims.len(),
            failed: set.failures().count(),
            skipped: set.skipped.iter().map(|s| format!("{}: {}", s.tag, s.reason)).collect(),
        });
    }
    Ok(Report::from_claims(Payload::VerifyAll { k_max, orders }, claims))
}
