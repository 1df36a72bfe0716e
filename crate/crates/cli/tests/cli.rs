use std::process::Command;

use indigenous_cli::{run, Distance, Payload, Report, Status};
use indigenous_core::Elem;

fn cli(args: &str) -> (i32, String) {
    let outcome = run(std::iter::once("indigenous").chain(args.split_whitespace()));
    (outcome.code, outcome.output)
}

fn json(args: &str) -> (i32, Report) {
    let (code, out) = cli(&format!("{args} --json"));
    let report: Report = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args}: {e}\n{out}"));
    (code, report)
}

#[test]
fn clique_of_ig4() {
    let (code, report) = json("graph 4 --clique");
    assert_eq!(code, 0);
    assert_eq!(report.status, Status::Ok);
    match report.payload {
        Payload::Graph { clique_number, diameter, .. } => {
            assert_eq!(clique_number, Some(4));
            assert_eq!(diameter, None);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn graph_without_selectors_reports_everything() {
    let (_, report) = json("graph 1");
    match report.payload {
        Payload::Graph { diameter, girth, clique_number, chromatic_number, .. } => {
            assert_eq!(diameter, Some(Distance::Finite(1)));
            assert_eq!(girth.map(|g| g.to_string()).as_deref(), Some("infinite"));
            assert_eq!(clique_number, Some(2));
            assert_eq!(chromatic_number, Some(2));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn ideal_count_at_two() {
    let (code, out) = cli("ideals 2 --count");
    assert_eq!(code, 0);
    assert!(out.contains("count=4"), "{out}");
    let (_, report) = json("ideals 2 --count");
    assert!(matches!(report.payload, Payload::Ideals { count: Some(4), ideals: None, .. }));
}

#[test]
fn radical_of_a_nonzero_proper_ideal() {
    let (_, report) = json("ideals 5 --radical 3");
    match report.payload {
        Payload::Ideals { radical: Some(r), count: None, .. } => {
            let expected: Vec<Elem> =
                [Elem::Zero].into_iter().chain((2..=5).map(Elem::Fin)).chain([Elem::Many]).collect();
            assert_eq!(r.radical, expected);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn spectrum_of_s7() {
    let (code, out) = cli("spec 7");
    assert_eq!(code, 0);
    for line in ["points=2", "closed=3", "sierpinski=yes"] {
        assert!(out.lines().any(|l| l == line), "{out}");
    }
}

#[test]
fn tables() {
    let (_, report) = json("table 1");
    match report.payload {
        Payload::Tables { add, warning, .. } => {
            assert_eq!(add.len(), 3);
            assert_eq!(add[2][2], Elem::Many);
            assert_eq!(warning, None);
        }
        other => panic!("{other:?}"),
    }
    let (_, report) = json("table 2");
    match report.payload {
        Payload::Tables { add, mul, .. } => {
            assert_eq!(add[1][1], Elem::Fin(2));
            assert_eq!(mul[2][2], Elem::Many);
        }
        other => panic!("{other:?}"),
    }
    let (code, out) = cli("table 33");
    assert_eq!(code, 0);
    assert!(out.starts_with("warning:"), "{}", &out[..80]);
}

#[test]
fn elem_arithmetic() {
    let (_, report) = json("elem 4 2 --add 3 --mul 2 --pow 3");
    assert_eq!(
        report.payload,
        Payload::Elem {
            k: 4,
            value: Elem::Fin(2),
            unit: false,
            idempotent: false,
            sum: Some(Elem::Many),
            product: Some(Elem::Fin(4)),
            power: Some(Elem::Many),
        }
    );
}

#[test]
fn localization_reports() {
    let (code, report) = json("localize 5 --u 1,2,4,m");
    assert_eq!(code, 0);
    assert!(matches!(report.payload, Payload::Localization { boolean: true, ref classes, .. } if classes.len() == 2));
    let (_, report) = json("localize 5 --u 1");
    assert!(matches!(report.payload, Payload::Localization { isomorphic_to_base: true, .. }));
    // not multiplicatively closed
    assert_eq!(cli("localize 5 --u 1,2").0, 2);
}

#[test]
fn irreducibility() {
    let (_, report) = json("irreducible 6 --alpha 2 --beta 3");
    assert!(matches!(report.payload, Payload::Irreducible { irreducible: true, factors: None, .. }));
    let (_, report) = json("irreducible 6 --alpha 2 --beta 4");
    assert!(matches!(report.payload, Payload::Irreducible { irreducible: false, factors: Some(_), .. }));
    assert!(report.claims.iter().all(|c| c.pass));
    // beyond the oracle only the closed form runs
    let (_, report) = json("irreducible 20 --alpha m --beta 1");
    assert!(report.claims.is_empty());
    assert_eq!(cli("irreducible 6 --alpha 0 --beta 1").0, 2);
}

#[test]
fn series_from_generators() {
    let (_, report) = json("series 3 --gens 3,5 --depth 10");
    match report.payload {
        Payload::Series { support, idempotent, .. } => {
            assert_eq!(support, [3, 5, 6, 8, 9, 10]);
            assert!(idempotent);
        }
        other => panic!("{other:?}"),
    }
    let (_, report) = json("series 3 1+X --depth 4");
    assert!(matches!(report.payload, Payload::Series { unit: false, idempotent: false, inverse: None, .. }));
}

#[test]
fn polynomial_degrees() {
    let (code, report) = json("poly 4 1+2X mX^2");
    assert_eq!(code, 0);
    assert_eq!(report.claims.len(), 3);
    assert!(matches!(report.payload, Payload::Poly { ref degree, .. } if degree == "1"));
}

#[test]
fn laws_hold() {
    let (code, report) = json("laws 10");
    assert_eq!(code, 0);
    assert!(report.claims.len() >= 18 && report.claims.iter().all(|c| c.pass));
}

#[test]
fn exit_codes() {
    assert_eq!(cli("graph 30 --clique").0, 3);
    assert_eq!(json("graph 30 --clique").1.status, Status::BoundExceeded);
    assert_eq!(cli("graph 25 --girth").0, 0);
    assert_eq!(cli("graph 25 --clique --unsafe-bound").0, 0);
    assert_eq!(cli("laws 65").0, 3);
    assert_eq!(cli("ideals 17").0, 3);
    assert_eq!(cli("localize 11 --u 1").0, 3);
    assert_eq!(cli("nonsense 3").0, 2);
    assert_eq!(cli("graph").0, 2);
    assert_eq!(cli("graph 0").0, 2);
    assert_eq!(cli("elem 3 4").0, 2);
    assert_eq!(cli("spec 3 --clique").0, 2);
    assert_eq!(cli("verify-all --k-max 0").0, 2);
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let invocations = [
        "elem 3 m --add 1",
        "table 3",
        "laws 4",
        "graph 6",
        "ideals 4",
        "ideals 4 --primes --radical 2",
        "spec 5",
        "localize 4 --u 1,m",
        "poly 3 m+X 2X^2",
        "series 2 1+mX^2 --depth 5",
        "irreducible 4 --alpha m --beta 1",
        "verify-all --k-max 3",
        "graph 40 --chromatic",
    ];
    for args in invocations {
        let (_, first) = cli(&format!("{args} --json"));
        let (_, second) = cli(&format!("{args} --json"));
        assert_eq!(first, second, "{args}");
        let report: Report = serde_json::from_str(&first).unwrap();
        assert_eq!(report.to_json(), first, "{args}");
        let reparsed: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(reparsed, report);
        assert_eq!(cli(args), cli(args), "{args}");
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_indigenous");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["spec", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("sierpinski=yes"));
    let usage = status(&["spec"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(!usage.stderr.is_empty());
    assert_eq!(status(&["ideals", "20"]).status.code(), Some(3));
}
