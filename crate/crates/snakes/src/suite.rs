//! The fixed sweeps behind `verify suite`, run in parallel with a
//! deterministic result order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use snakes_core::paths::in_x_b;
use snakes_core::segments::{MultiSegment, NopSetSpec, Side};
use snakes_core::{Limits, Result, SnakeB};

use crate::report::{self, Report};

#[derive(Debug, Clone)]
pub enum Job {
    PathCount {
        m: usize,
        i: usize,
    },
    Det(MultiSegment),
    Identity(MultiSegment, u64),
    Dominance(SnakeB),
    Branching(SnakeB),
    Gap0(SnakeB),
    GWeight {
        n: usize,
        i: usize,
        k: i64,
    },
    Gkr {
        n: usize,
        i: usize,
        t: usize,
        k: i64,
    },
    Corners {
        n: usize,
        i: usize,
        k: i64,
    },
    Ab(NopSetSpec),
}

impl Job {
    pub fn run(&self, limits: &Limits) -> Result<Report> {
        match self {
            Job::PathCount { m, i } => report::path_count(*m, *i, 0),
            Job::Det(ms) => report::det(ms, limits),
            Job::Identity(ms, big_m) => report::identity(ms, *big_m, limits),
            Job::Dominance(s) => report::dominance(s, limits),
            Job::Branching(s) => report::branching(s, limits),
            Job::Gap0(s) => report::gap0(s, limits),
            Job::GWeight { n, i, k } => report::g_weight(*n, *i, *k),
            Job::Gkr { n, i, t, k } => report::gkr(*n, *i, *t, *k, limits),
            Job::Corners { n, i, k } => report::corners(*n, *i, *k),
            Job::Ab(spec) => report::ab(spec, limits),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub jobs: Vec<Job>,
}

/// Every type B snake of rank `n` with at most `t_max` points, the first at
/// its anchor, and total spectral span at most `span`.
pub fn snakes_b(n: usize, t_max: usize, span: i64) -> Vec<SnakeB> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<(usize, i64)>> =
        (1..=n).map(|i| vec![(i, SnakeB::anchor(n, i))]).collect();
    while let Some(points) = stack.pop() {
        out.push(SnakeB::new(n, points.clone()).expect("generated points form a snake"));
        if points.len() == t_max {
            continue;
        }
        let (i0, k0) = *points.last().expect("nonempty");
        let k_first = points[0].1;
        for i in 1..=n {
            let mut k = k0 + 2 * (i as i64 - i0 as i64).abs() + 4;
            while k - k_first <= span {
                if in_x_b(n, i, k) {
                    let mut next = points.clone();
                    next.push((i, k));
                    stack.push(next);
                }
                k += 1;
            }
        }
    }
    out.sort();
    out
}

/// Every snake multisegment of `A_{n-1}` with `t` segments and ends in `[0, hi]`.
pub fn snake_segments(n: usize, t: usize, hi: i64) -> Vec<MultiSegment> {
    let mut all: Vec<Vec<(i64, i64)>> = vec![vec![]];
    for _ in 0..t {
        let mut next = Vec::new();
        for prefix in &all {
            for l in 0..=hi {
                for r in l..=(l + n as i64).min(hi) {
                    if prefix.last().map_or(true, |&(pl, pr)| l > pl && r > pr) {
                        let mut v = prefix.clone();
                        v.push((l, r));
                        next.push(v);
                    }
                }
            }
        }
        all = next;
    }
    all.iter()
        .map(|p| MultiSegment::from_pairs(n, p).expect("rank is at least 2"))
        .collect()
}

/// `count` valid anchor specifications with `n ≤ 4`, `T ≤ 3`, `M ≤ 2`.
pub fn random_specs(seed: u64, count: usize) -> Vec<NopSetSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=4usize);
        let t = rng.gen_range(1..=3usize);
        let m = rng.gen_range(0..=2u64);
        let mut x0 = vec![rng.gen_range(-4..=4i64)];
        for _ in 1..t {
            let last = *x0.last().expect("nonempty");
            x0.push(last + rng.gen_range(1..=4));
        }
        let xn: Vec<i64> = x0
            .iter()
            .map(|a| a - n as i64 + 2 * rng.gen_range(0..=n as i64))
            .collect();
        if let Ok(spec) = NopSetSpec::new(n, x0, xn, m, Side::A) {
            out.push(spec);
        }
    }
    out
}

/// The acceptance sweeps, numbered as in the README.
pub fn criteria(seed: u64) -> Vec<Criterion> {
    let sweep: Vec<SnakeB> = [2, 3].iter().flat_map(|&n| snakes_b(n, 2, 24)).collect();
    let lattice: Vec<MultiSegment> = (2..=4)
        .flat_map(|n| (1..=3).flat_map(move |t| snake_segments(n, t, 12)))
        .collect();

    let mut branching: Vec<SnakeB> = sweep.clone();
    for n in 2..=3 {
        for i in 1..=n {
            for t in 1..=2 {
                let kr = SnakeB::kirillov_reshetikhin(n, i, t, SnakeB::anchor(n, i))
                    .expect("anchored KR snake");
                if !branching.contains(&kr) {
                    branching.push(kr);
                }
            }
        }
    }

    let mut g_suite = Vec::new();
    for n in 2..=3usize {
        for i in 1..=n {
            let k = SnakeB::anchor(n, i);
            g_suite.extend([k - 4, k, k + 4].map(|k| Job::GWeight { n, i, k }));
        }
    }
    for i in 1..=2usize {
        for t in 1..=2 {
            let k = ((2 + i + 1) % 2) as i64;
            g_suite.extend([k, k + 2].map(|k| Job::Gkr { n: 2, i, t, k }));
        }
    }

    let mut corners = Vec::new();
    for n in 2..=3usize {
        for i in 1..=n {
            for k in -3..=3i64 {
                if (k - (n + i + 1) as i64).rem_euclid(2) == 0 {
                    corners.push(Job::Corners { n, i, k });
                }
            }
        }
    }

    vec![
        Criterion {
            id: 1,
            title: "type A path counts are binomial, m <= 8",
            jobs: (2..=8).flat_map(|m| (0..=m).map(move |i| Job::PathCount { m, i })).collect(),
        },
        Criterion {
            id: 2,
            title: "determinant formula equals path character, n <= 4, T <= 3, ends in [0,12]",
            jobs: lattice.iter().cloned().map(Job::Det).collect(),
        },
        Criterion {
            id: 3,
            title: "type A identity on the same lattice, M <= 3",
            jobs: lattice.iter().flat_map(|ms| (0..=3).map(move |m| Job::Identity(ms.clone(), m))).collect(),
        },
        Criterion {
            id: 4,
            title: "Langlands dual dominance with slack = positive-gap tuples, n in {2,3}, T <= 2, span <= 24",
            jobs: sweep.iter().cloned().map(Job::Dominance).collect(),
        },
        Criterion {
            id: 5,
            title: "Langlands branching rule, n in {2,3}, T <= 2, KR snakes T in {1,2}",
            jobs: branching.into_iter().map(Job::Branching).collect(),
        },
        Criterion {
            id: 6,
            title: "gap-0 tuples are the image of F, n <= 3, T <= 2",
            jobs: sweep.iter().cloned().map(Job::Gap0).collect(),
        },
        Criterion { id: 7, title: "G is injective and weight-preserving; generalized KR dominance", jobs: g_suite },
        Criterion { id: 8, title: "corner transport of F, n <= 3", jobs: corners },
        Criterion {
            id: 9,
            title: "sets A and B share weight and half-character statistics, 200 seeded specs",
            jobs: random_specs(seed, 200).into_iter().map(Job::Ab).collect(),
        },
    ]
}

/// The deterministic part of a report, as listed in suite output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub theorem: &'static str,
    pub params: Value,
    pub holds: bool,
    pub equal: bool,
    pub lhs_mass: Value,
    pub rhs_mass: Value,
}

impl From<Report> for Record {
    fn from(r: Report) -> Self {
        Record {
            theorem: r.theorem,
            params: r.params,
            holds: r.holds,
            equal: r.equal,
            lhs_mass: r.lhs_mass,
            rhs_mass: r.rhs_mass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub checks: usize,
    pub passed: usize,
    pub holds: bool,
    pub records: Vec<Record>,
}

/// Runs the jobs in parallel on the current rayon pool, keeping job order.
pub fn run_jobs(jobs: &[Job], limits: &Limits) -> Result<Vec<Report>> {
    jobs.par_iter().map(|j| j.run(limits)).collect()
}

pub fn run_criterion(c: &Criterion, limits: &Limits) -> Result<CriterionResult> {
    let reports = run_jobs(&c.jobs, limits)?;
    let passed = reports.iter().filter(|r| r.holds).count();
    Ok(CriterionResult {
        id: c.id,
        title: c.title,
        checks: reports.len(),
        passed,
        holds: passed == reports.len(),
        records: reports.into_iter().map(Record::from).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use snakes_core::snakes::Snake;

    #[test]
    fn sweep_sizes() {
        assert_eq!(snakes_b(2, 2, 24).len(), 24);
        assert_eq!(snakes_b(3, 2, 24).len(), 51);
        assert!(snakes_b(2, 1, 0).iter().all(|s| s.points().len() == 1));
    }

    #[test]
    fn random_specs_are_reproducible_and_valid() {
        let a = random_specs(7, 50);
        assert_eq!(a, random_specs(7, 50));
        assert_ne!(a, random_specs(8, 50));
        assert!(a
            .iter()
            .all(|s| s.validate().is_ok() && s.n <= 4 && s.x0.len() <= 3 && s.m <= 2));
    }

    #[test]
    fn segment_lattice_has_only_snakes() {
        let all = snake_segments(3, 2, 4);
        assert!(all.iter().all(|ms| ms.is_snake() && ms.len() == 2));
        // pairs of snake segments over {0..4} with lengths 0..=3
        assert!(!all.is_empty());
    }
}
