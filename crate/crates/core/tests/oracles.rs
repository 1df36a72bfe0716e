//! Cross-checks against brute-force oracles written independently of the
//! library's algorithms.

use std::collections::{BTreeSet, VecDeque};

use indigenous_core::graphs::{IndigenousGraph, Length};
use indigenous_core::ideals::{enumerate_ideals, principal, Ideal};
use indigenous_core::series::numerical_semigroup;
use indigenous_core::{Elem, SemiringCtx};

fn s(k: u32) -> SemiringCtx {
    SemiringCtx::new(k).unwrap()
}

/// Integer model: `m` is `u64::MAX`, every result above `k` is clamped to it.
fn model(e: Elem) -> u64 {
    match e {
        Elem::Zero => 0,
        Elem::Fin(n) => u64::from(n),
        Elem::Many => u64::MAX,
    }
}

fn clamp(k: u32, v: u64) -> u64 {
    if v > u64::from(k) {
        u64::MAX
    } else {
        v
    }
}

#[test]
fn arithmetic_matches_clamped_integer_model() {
    for k in 1..=64 {
        let ctx = s(k);
        for a in ctx.elements() {
            for b in ctx.elements() {
                let sum = clamp(k, model(a).saturating_add(model(b)));
                let prod = clamp(k, model(a).saturating_mul(model(b)));
                assert_eq!(model(ctx.add(a, b).unwrap()), sum, "k={k} {a}+{b}");
                assert_eq!(model(ctx.mul(a, b).unwrap()), prod, "k={k} {a}*{b}");
            }
        }
    }
}

/// Every ideal is a finite sum of principal ideals; explore sums breadth-first.
fn ideals_by_principal_sums(ctx: &SemiringCtx) -> BTreeSet<Vec<Elem>> {
    let close = |mut set: BTreeSet<Elem>| {
        set.insert(Elem::Zero);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for s in ctx.elements() {
                    next.insert(ctx.mul(s, a).unwrap());
                }
                for &b in &set {
                    next.insert(ctx.add(a, b).unwrap());
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    };
    let principals: Vec<BTreeSet<Elem>> = ctx.elements().map(|a| close(BTreeSet::from([a]))).collect();
    let zero = close(BTreeSet::new());
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(j) = queue.pop_front() {
        for p in &principals {
            let sum = close(j.iter().flat_map(|&x| p.iter().map(move |&y| ctx.add(x, y).unwrap())).collect());
            if seen.insert(sum.clone()) {
                queue.push_back(sum);
            }
        }
    }
    seen.into_iter().map(|set| set.into_iter().collect()).collect()
}

#[test]
fn ideal_enumeration_matches_principal_sum_oracle() {
    for k in 1..=12 {
        let ctx = s(k);
        let enumerated: BTreeSet<Vec<Elem>> = enumerate_ideals(&ctx).unwrap().iter().map(Ideal::members).collect();
        assert_eq!(enumerated, ideals_by_principal_sums(&ctx), "k={k}");
    }
}

#[test]
fn frozen_ideal_counts() {
    // computed by the principal-sum oracle above
    let counts: Vec<usize> = (1..=8).map(|k| enumerate_ideals(&s(k)).unwrap().len()).collect();
    let oracle: Vec<usize> = (1..=8).map(|k| ideals_by_principal_sums(&s(k)).len()).collect();
    assert_eq!(counts, oracle);
    assert_eq!(&counts[..2], &[3, 4]);
}

#[test]
fn principal_two_in_s3() {
    assert_eq!(principal(&s(3), Elem::Fin(2)).unwrap().members(), [Elem::Zero, Elem::Fin(2), Elem::Many]);
}

/// Adjacency by the integer rule, without going through the semiring.
fn oracle_adjacency(k: u32) -> Vec<Vec<bool>> {
    let value = |i: usize| if i == k as usize { None } else { Some(i as u64 + 1) };
    let n = k as usize + 1;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    i != j
                        && match (value(i), value(j)) {
                            (Some(a), Some(b)) => a * b > u64::from(k),
                            _ => true,
                        }
                })
                .collect()
        })
        .collect()
}

fn oracle_clique_number(adj: &[Vec<bool>]) -> u32 {
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&set| (0..n).all(|i| set & (1 << i) == 0 || (i + 1..n).all(|j| set & (1 << j) == 0 || adj[i][j])))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0)
}

/// Minimum cover by independent sets, by dynamic programming over subsets.
fn oracle_chromatic_number(adj: &[Vec<bool>]) -> u32 {
    let n = adj.len();
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|set| (0..n).all(|i| set & (1 << i) == 0 || (0..n).all(|j| set & (1 << j) == 0 || !adj[i][j])))
        .collect();
    let mut best = vec![u32::MAX; full + 1];
    best[0] = 0;
    for set in 1..=full {
        let low = set & set.wrapping_neg();
        let rest = set & !low;
        // independent subsets containing the lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if independent[part] && best[set & !part] != u32::MAX {
                best[set] = best[set].min(best[set & !part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

fn floyd(adj: &[Vec<bool>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let inf = u32::MAX / 4;
    let mut d: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        0
                    } else if adj[i][j] {
                        1
                    } else {
                        inf
                    }
                })
                .collect()
        })
        .collect();
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][m] + d[m][j]);
            }
        }
    }
    d
}

fn oracle_diameter(adj: &[Vec<bool>]) -> Length {
    let d = floyd(adj);
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    if worst >= u32::MAX / 4 {
        Length::Infinite
    } else {
        Length::Finite(worst)
    }
}

/// Shortest cycle through an edge `uv` is `1 + d(u, v)` with that edge removed.
fn oracle_girth(adj: &[Vec<bool>]) -> Length {
    let n = adj.len();
    let mut best = Length::Infinite;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                let mut cut = adj.to_vec();
                cut[u][v] = false;
                cut[v][u] = false;
                let d = floyd(&cut)[u][v];
                if d < u32::MAX / 4 {
                    best = best.min(Length::Finite(d + 1));
                }
            }
        }
    }
    best
}

#[test]
fn graph_matches_integer_adjacency() {
    for k in 1..=40 {
        let g = IndigenousGraph::new(k).unwrap();
        let adj = oracle_adjacency(k);
        for (i, &u) in g.vertices().iter().enumerate() {
            for (j, &v) in g.vertices().iter().enumerate() {
                assert_eq!(g.adjacent(u, v), adj[i][j], "k={k} {u} {v}");
            }
        }
    }
}

#[test]
fn graph_invariants_match_brute_force() {
    for k in 1..=12 {
        let g = IndigenousGraph::new(k).unwrap();
        let adj = oracle_adjacency(k);
        assert_eq!(g.diameter(), oracle_diameter(&adj), "diameter k={k}");
        assert_eq!(g.girth(), oracle_girth(&adj), "girth k={k}");
        assert_eq!(g.clique_number().unwrap(), oracle_clique_number(&adj), "clique k={k}");
        assert_eq!(g.chromatic_number().unwrap(), oracle_chromatic_number(&adj), "chromatic k={k}");
    }
}

/// Exact clique numbers of `IG_1 … IG_24`, computed (not quoted): brute-force
/// subset search for k <= 14, and for all k by maximising over the smallest
/// finite member `c` of a clique the count of `c' > c` with `c·c' > k`.
const COMPUTED_CLIQUE_NUMBERS: [u32; 24] =
    [2, 2, 3, 4, 5, 5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 14, 15, 16, 17, 17, 18, 19, 20, 21];

#[test]
fn frozen_clique_numbers() {
    for k in 1..=24u32 {
        let g = IndigenousGraph::new(k).unwrap();
        let omega = g.clique_number().unwrap();
        assert_eq!(omega, COMPUTED_CLIQUE_NUMBERS[k as usize - 1], "k={k}");
        let clique = g.maximum_clique_within(24).unwrap();
        assert!(g.is_clique(&clique));
        // IG_k is a threshold graph, hence perfect
        assert_eq!(g.chromatic_number().unwrap(), omega, "k={k}");
    }
    assert!(COMPUTED_CLIQUE_NUMBERS[9] >= 6);
}

#[test]
fn clique_bound_is_tight_only_at_two() {
    for k in 1..=24u32 {
        let omega = COMPUTED_CLIQUE_NUMBERS[k as usize - 1];
        assert!(omega > k / 2);
        assert_eq!(omega == k / 2 + 1, k == 2, "k={k}");
    }
}

/// Additive closure by repeated pairwise sums.
fn oracle_semigroup(gens: &[usize], depth: usize) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().filter(|&g| g <= depth).collect();
    loop {
        let sums: BTreeSet<usize> =
            set.iter().flat_map(|&a| set.iter().map(move |&b| a + b)).filter(|&s| s <= depth).collect();
        let before = set.len();
        set.extend(sums);
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

#[test]
fn numerical_semigroups_match_closure() {
    assert_eq!(numerical_semigroup(&[3, 5], 10), [3, 5, 6, 8, 9, 10]);
    for gens in [vec![1], vec![2], vec![3, 5], vec![4, 6, 9], vec![7, 11, 13], vec![30], vec![5, 5]] {
        for depth in 0..=40 {
            assert_eq!(numerical_semigroup(&gens, depth), oracle_semigroup(&gens, depth), "{gens:?} {depth}");
        }
    }
}
