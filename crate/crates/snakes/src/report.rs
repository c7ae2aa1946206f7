//! Uniform verification reports built from the library verifiers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use snakes_core::duality::{
    map_g, verify_branching, verify_corner_transport, verify_decomposition, verify_dominance,
    verify_g_weight, verify_gap0_bijection, verify_gkr_dominance, verify_path_bijection,
    verify_tensor_dominance,
};
use snakes_core::lattice::char_sub;
use snakes_core::paths::{enum_paths_a, enum_paths_b};
use snakes_core::segments::{ab_statistics, det_char, identity_sides, MultiSegment, NopSetSpec};
use snakes_core::snakes::{char_snake, Snake};
use snakes_core::{Character, Limits, Result, SnakeB};

use crate::json;

/// The outcome of one theorem check.
///
/// `holds` is the verdict driving the exit code. `equal` records whether the
/// two compared quantities coincide exactly; for dominance statements it is
/// usually false while `holds` is true.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub theorem: &'static str,
    pub params: Value,
    pub holds: bool,
    pub equal: bool,
    pub lhs_mass: Value,
    pub rhs_mass: Value,
    /// `lhs - rhs` as `[[coeffs], mult]` terms, empty when not applicable.
    pub difference: Vec<Value>,
    pub details: Value,
}

fn terms(c: &Character) -> Vec<Value> {
    c.iter().map(|(k, m)| json!([k, json::big(m)])).collect()
}

fn count(n: impl Into<BigInt>) -> Value {
    json::big(&n.into())
}

fn compare(
    theorem: &'static str,
    params: Value,
    holds: bool,
    lhs: &Character,
    rhs: &Character,
    details: Value,
) -> Result<Report> {
    Ok(Report {
        theorem,
        params,
        holds,
        equal: lhs == rhs,
        lhs_mass: json::big(&lhs.mass()),
        rhs_mass: json::big(&rhs.mass()),
        difference: terms(&char_sub(lhs, rhs)?),
        details,
    })
}

fn counts(
    theorem: &'static str,
    params: Value,
    holds: bool,
    lhs: u64,
    rhs: u64,
    details: Value,
) -> Report {
    Report {
        theorem,
        params,
        holds,
        equal: lhs == rhs,
        lhs_mass: count(lhs),
        rhs_mass: count(rhs),
        difference: Vec::new(),
        details,
    }
}

fn snake_params(s: &SnakeB) -> Value {
    json!({ "n": s.n(), "snake": json::points(s.points()) })
}

fn segment_params(ms: &MultiSegment) -> Value {
    let segs: Vec<Value> = ms.segs.iter().map(|s| json!([s.l, s.r])).collect();
    json!({ "n": ms.n, "segments": segs })
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

/// `|𝒫ᴬ(m, i, k)| = C(m, i)`.
pub fn path_count(m: usize, i: usize, k: i64) -> Result<Report> {
    let found = enum_paths_a(m, i, k)?.len() as u64;
    let expected = binomial(m as u64, i as u64);
    Ok(counts(
        "path-count",
        json!({ "m": m, "i": i, "k": k }),
        found == expected,
        found,
        expected,
        json!({}),
    ))
}

/// `Π(χ(L(m))) ≽ χ^σ(L(ᴸm))`, with slack mass equal to the number of positive-gap tuples.
pub fn dominance(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_dominance(s, limits)?;
    let slack_ok = r.slack.mass() == BigInt::from(r.gap_positive_tuples);
    let details = json!({
        "dominates": r.dominates,
        "slack_mass": json::big(&r.slack.mass()),
        "gap_positive_tuples": r.gap_positive_tuples,
    });
    compare(
        "dominance",
        snake_params(s),
        r.dominates && slack_ok,
        &r.big,
        &r.small,
        details,
    )
}

pub fn branching(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_branching(s, limits)?;
    let details = json!({ "summands": r.summands.len() });
    compare(
        "branching",
        snake_params(s),
        r.equal(),
        &r.lhs,
        &r.rhs,
        details,
    )
}

pub fn decomposition(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_decomposition(s, limits)?;
    let details = json!({ "fibers": r.fibers, "mismatched_fibers": r.mismatches.len() });
    Ok(counts(
        "decomposition",
        snake_params(s),
        r.holds(),
        r.b_tuples,
        r.s_tuples,
        details,
    ))
}

pub fn bijection(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_path_bijection(s, limits)?;
    let details = json!({ "b_tuples": json::big(&r.b_tuples), "s_tuples": json::big(&r.s_tuples) });
    compare(
        "bijection",
        snake_params(s),
        r.equal(),
        &r.lhs,
        &r.rhs,
        details,
    )
}

pub fn gap0(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_gap0_bijection(s, limits)?;
    let details = json!({
        "images_are_nop": r.images_are_nop,
        "image_is_gap0": r.image_is_gap0,
        "roundtrips": r.roundtrips,
        "qchar_equal": r.qchar_equal,
    });
    Ok(counts(
        "gap0",
        snake_params(s),
        r.holds(),
        r.gap0_tuples as u64,
        r.a_tuples as u64,
        details,
    ))
}

pub fn tensor(s: &SnakeB, limits: &Limits) -> Result<Report> {
    let r = verify_tensor_dominance(s, limits)?;
    compare(
        "tensor",
        snake_params(s),
        r.dominates,
        &r.big,
        &r.small,
        json!({}),
    )
}

/// `G` on every path of `𝒫ᴮ_{i,k}`: weight preserved and images pairwise distinct.
pub fn g_weight(n: usize, i: usize, k: i64) -> Result<Report> {
    let paths = enum_paths_b(n, i, k)?;
    let mut images = BTreeSet::new();
    let mut weight_ok = 0u64;
    for p in &paths {
        weight_ok += u64::from(verify_g_weight(p)?);
        images.insert(map_g(p)?);
    }
    let total = paths.len() as u64;
    let injective = images.len() == paths.len();
    let details = json!({ "weight_preserved": weight_ok, "distinct_images": images.len() });
    Ok(counts(
        "g-weight",
        json!({ "n": n, "i": i, "k": k }),
        injective && weight_ok == total,
        total,
        weight_ok,
        details,
    ))
}

/// The generalized Kirillov-Reshetikhin dominance; `k` is the type A spectral shift.
pub fn gkr(n: usize, i: usize, t: usize, k: i64, limits: &Limits) -> Result<Report> {
    let r = verify_gkr_dominance(n, i, t, k, limits)?;
    compare(
        "gkr",
        json!({ "n": n, "i": i, "t": t, "k": k }),
        r.dominates,
        &r.big,
        &r.small,
        json!({}),
    )
}

/// Corner transport of `F` on every path of `𝒫ᴬ(2n, i, k)`.
pub fn corners(n: usize, i: usize, k: i64) -> Result<Report> {
    let paths = enum_paths_a(2 * n, i, k)?;
    let mut ok = 0u64;
    for p in &paths {
        ok += u64::from(verify_corner_transport(p)?);
    }
    let total = paths.len() as u64;
    Ok(counts(
        "corners",
        json!({ "n": n, "i": i, "k": k }),
        ok == total,
        total,
        ok,
        json!({}),
    ))
}

pub fn det(ms: &MultiSegment, limits: &Limits) -> Result<Report> {
    let lhs = det_char(ms)?;
    let rhs = char_snake(&ms.to_snake()?, limits)?;
    let holds = lhs == rhs;
    compare("det", segment_params(ms), holds, &lhs, &rhs, json!({}))
}

pub fn identity(ms: &MultiSegment, big_m: u64, limits: &Limits) -> Result<Report> {
    let (lhs, rhs) = identity_sides(ms, big_m, limits)?;
    let mut params = segment_params(ms);
    params["M"] = json!(big_m);
    compare("identity", params, lhs == rhs, &lhs, &rhs, json!({}))
}

pub fn ab(spec: &NopSetSpec, limits: &Limits) -> Result<Report> {
    let r = ab_statistics(spec, limits)?;
    let params = json!({ "n": spec.n, "x0": spec.x0, "xn": spec.xn, "M": spec.m });
    let details = json!({ "distinct_statistics": r.a_stats.len().max(r.b_stats.len()) });
    Ok(counts(
        "ab",
        params,
        r.equal(),
        r.a_count as u64,
        r.b_count as u64,
        details,
    ))
}
