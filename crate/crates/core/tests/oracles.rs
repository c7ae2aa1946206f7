//! Checks against independent brute-force recomputations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use snakes_core::duality::{gap, map_f, map_f_inv, verify_corner_transport};
use snakes_core::lattice::{char_mul, fold_char, pi_char, Character};
use snakes_core::paths::{
    corners_b, enum_paths_a, enum_paths_b, half_char_at_n, in_x_b, strictly_above, tau, tau_inv,
    weight_of_path,
};
use snakes_core::segments::{det_char, identity_sides, seg_char, MultiSegment};
use snakes_core::snakes::{
    char_snake, enum_nop_tuples, qchar_snake, twisted_char_snake, twisted_qchar_snake, Snake,
};
use snakes_core::{EpsInt, Family, Limits, PathA, PathB, SnakeA, SnakeB};

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

#[test]
fn a_path_counts_are_binomial() {
    for m in 2..=8usize {
        for i in 0..=m {
            let paths = enum_paths_a(m, i, 3).unwrap();
            assert_eq!(paths.len() as u64, binomial(m as u64, i as u64));
            assert!(paths.windows(2).all(|w| w[0].ys() < w[1].ys()));
        }
    }
}

/// Every sign pattern of both branches, filtered by `y_n > z_n`.
fn brute_b(n: usize, i: usize, k: i64) -> Vec<PathB> {
    let branch = |start: i64, bits: u32| -> Vec<EpsInt> {
        let mut v = vec![EpsInt::int(start)];
        let mut y = start;
        for r in 0..n - 1 {
            y += if bits >> r & 1 == 1 { 2 } else { -2 };
            v.push(EpsInt::int(y));
        }
        let up = bits >> (n - 1) & 1 == 1;
        v.push(if up {
            EpsInt::new(y + 1, 1)
        } else {
            EpsInt::new(y - 1, -1)
        });
        v
    };
    let mut out = Vec::new();
    for a in 0..1u32 << n {
        for b in 0..1u32 << n {
            let ys = branch(2 * i as i64 + k, a);
            let zs = branch((4 * n - 2 * i) as i64 + k - 2, b);
            if ys[n] > zs[n] {
                out.push(PathB::new(n, i, k, ys, zs).unwrap());
            }
        }
    }
    out.sort();
    out
}

#[test]
fn b_paths_match_exhaustive_generation() {
    for n in 2..=4usize {
        for i in 1..=n {
            for k in -4..=4 {
                if !in_x_b(n, i, k) {
                    assert!(enum_paths_b(n, i, k).is_err());
                    continue;
                }
                let mut fast = enum_paths_b(n, i, k).unwrap();
                fast.sort();
                assert_eq!(fast, brute_b(n, i, k), "n={n} i={i} k={k}");
            }
        }
    }
}

#[test]
fn tau_roundtrip_and_corner_parity() {
    for n in 2..=4usize {
        for j in 0..=n {
            for l in -20..=20 {
                if let Ok((x, y)) = tau(n, j, l) {
                    assert_eq!(tau_inv(n, x, y).unwrap(), (j, l));
                }
            }
        }
        for i in 1..=n {
            let k = SnakeB::anchor(n, i);
            for p in enum_paths_b(n, i, k).unwrap() {
                let c = corners_b(&p);
                for corner in c.upper.iter().chain(&c.lower) {
                    assert!(
                        tau(n, corner.j, corner.level).is_ok(),
                        "{corner:?} in {p:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn strictly_above_is_a_strict_order() {
    for n in 2..=3usize {
        let mut paths = Vec::new();
        for i in 1..=n {
            let k0 = SnakeB::anchor(n, i);
            for k in [k0, k0 + 4] {
                paths.extend(enum_paths_b(n, i, k).unwrap());
            }
        }
        for p in &paths {
            assert!(!strictly_above(p, p).unwrap());
            for q in &paths {
                if !strictly_above(p, q).unwrap() {
                    continue;
                }
                assert!(!strictly_above(q, p).unwrap());
                for r in &paths {
                    if strictly_above(q, r).unwrap() {
                        assert!(strictly_above(p, r).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn half_character_identity() {
    for m in 2..=5usize {
        for i in 0..=m {
            for p in enum_paths_a(m, i, 0).unwrap() {
                let w = weight_of_path(&p);
                let lhs = p.ys()[0] - p.ys()[m];
                let rhs: i64 = (1..m).map(|j| 2 * j as i64 * w.coeff(j)).sum::<i64>()
                    + m as i64 * half_char_at_n(&p);
                assert_eq!(lhs, rhs, "{p:?}");
            }
        }
    }
}

#[test]
fn gap_agrees_with_quarter_difference() {
    for n in 2..=3usize {
        for i in 1..=n {
            for k in [SnakeB::anchor(n, i), SnakeB::anchor(n, i) + 8] {
                for p in enum_paths_b(n, i, k).unwrap() {
                    // ⌊(y_n - z_n)/4⌋ with y_n - z_n = d + (b_y - b_z)ε, 0 < ε < 1/2
                    let (y, z) = (p.yn(), p.zn());
                    let d = y.a - z.a;
                    let e = i64::from(y.b - z.b);
                    let quarter = if e >= 0 {
                        d.div_euclid(4)
                    } else {
                        (d - 1).div_euclid(4)
                    };
                    assert_eq!(gap(&p) as i64, quarter, "{p:?}");
                }
            }
        }
    }
}

#[test]
fn f_roundtrips_and_transports_corners() {
    for n in 2..=3usize {
        for i in 1..=n {
            for k in -3..=3i64 {
                if (k - (n + i + 1) as i64).rem_euclid(2) != 0 {
                    continue;
                }
                let image: Vec<PathB> = enum_paths_a(2 * n, i, k)
                    .unwrap()
                    .iter()
                    .map(|p| map_f(p).unwrap())
                    .collect();
                for (p, q) in enum_paths_a(2 * n, i, k).unwrap().iter().zip(&image) {
                    assert_eq!(&map_f_inv(q).unwrap(), p);
                    assert!(verify_corner_transport(p).unwrap());
                }
                for q in enum_paths_b(n, i, 2 * k).unwrap() {
                    if gap(&q) == 0 {
                        assert_eq!(map_f(&map_f_inv(&q).unwrap()).unwrap(), q);
                        assert!(image.contains(&q));
                    } else {
                        assert!(!image.contains(&q));
                    }
                }
            }
        }
    }
}

#[test]
fn f_preserves_weight() {
    use snakes_core::lattice::{fold_weight, pi_weight};
    for n in 2..=3usize {
        for i in 1..=n {
            for k in -10..=10i64 {
                if (k - (n + i + 1) as i64).rem_euclid(2) != 0 {
                    continue;
                }
                for p in enum_paths_a(2 * n, i, k).unwrap() {
                    let lhs = fold_weight(&weight_of_path(&p)).unwrap();
                    let rhs = pi_weight(&weight_of_path(&map_f(&p).unwrap())).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn nop_tuples_match_product_filter() {
    let lim = Limits::default();
    let s = SnakeA::new(4, vec![(1, 0), (1, 2)]).unwrap();
    let sets = s.path_sets().unwrap();
    let mut brute = 0;
    for p in &sets[0] {
        for q in &sets[1] {
            brute += usize::from(strictly_above(p, q).unwrap());
        }
    }
    assert_eq!(enum_nop_tuples(&sets, &lim).unwrap().len(), brute);

    let s = SnakeB::new(2, vec![(1, 0), (2, 6)]).unwrap();
    let sets = s.path_sets().unwrap();
    let mut brute = 0;
    for p in &sets[0] {
        for q in &sets[1] {
            brute += usize::from(strictly_above(p, q).unwrap());
        }
    }
    assert_eq!(enum_nop_tuples(&sets, &lim).unwrap().len(), brute);
}

#[test]
fn qchar_projects_to_char() {
    let lim = Limits::default();
    let check = |family: Family, q: Vec<(snakes_core::YMonomial, u64)>, c: Character| {
        let mut proj = Character::zero(family);
        for (m, mult) in q {
            proj.add_weight(&m.weight(family), mult).unwrap();
        }
        assert_eq!(proj, c);
    };
    for s in [
        SnakeA::new(4, vec![(1, 0), (2, 3)]).unwrap(),
        SnakeA::new(6, vec![(3, 0), (1, 4)]).unwrap(),
    ] {
        let q = qchar_snake(&s, &lim).unwrap();
        assert_eq!(q.multiplicity(&s.highest_monomial()), 1);
        assert_eq!(q.iter().filter(|(m, _)| m.is_dominant()).count(), 1);
        check(
            s.family(),
            q.iter().map(|(m, &c)| (m.clone(), c)).collect(),
            char_snake(&s, &lim).unwrap(),
        );
    }
    for s in [
        SnakeB::new(2, vec![(1, 0), (2, 6)]).unwrap(),
        SnakeB::new(3, vec![(3, 2), (1, 10)]).unwrap(),
    ] {
        let q = qchar_snake(&s, &lim).unwrap();
        assert_eq!(q.multiplicity(&s.highest_monomial()), 1);
        assert_eq!(q.iter().filter(|(m, _)| m.is_dominant()).count(), 1);
        check(
            s.family(),
            q.iter().map(|(m, &c)| (m.clone(), c)).collect(),
            char_snake(&s, &lim).unwrap(),
        );
    }
}

#[test]
fn folding_two_routes() {
    let lim = Limits::default();
    for n in 2..=3usize {
        for i1 in 1..=n {
            for i2 in 1..=n {
                for dk in 2..=8 {
                    let Ok(s) = SnakeA::new(2 * n, vec![(i1, 0), (i2, dk)]) else {
                        continue;
                    };
                    let q = twisted_qchar_snake(&s, &lim).unwrap();
                    let mut via_q = Character::zero(Family::Twisted(n));
                    for (m, &c) in q.iter() {
                        via_q.add_weight(&m.weight(), c).unwrap();
                    }
                    assert_eq!(via_q, twisted_char_snake(&s, &lim).unwrap());
                }
            }
        }
    }
}

#[test]
fn b_characters_lie_in_p_prime() {
    let lim = Limits::default();
    for s in [
        SnakeB::new(2, vec![(2, 2), (1, 8)]).unwrap(),
        SnakeB::new(3, vec![(3, 2)]).unwrap(),
    ] {
        let c = char_snake(&s, &lim).unwrap();
        assert!(c.iter().all(|(w, _)| w[s.n() - 1] % 2 == 0));
        assert_eq!(pi_char(&c).unwrap().mass(), c.mass());
    }
}

fn snake_segments(n: usize, t: usize, hi: i64) -> Vec<MultiSegment> {
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
        .map(|p| MultiSegment::from_pairs(n, p).unwrap())
        .collect()
}

#[test]
fn determinant_matches_paths_on_small_lattice() {
    let lim = Limits::default();
    for n in 2..=3usize {
        for t in 1..=2 {
            for ms in snake_segments(n, t, 6) {
                let direct = char_snake(&ms.to_snake().unwrap(), &lim).unwrap();
                assert_eq!(det_char(&ms).unwrap(), direct, "{ms:?}");
                assert!(direct.is_nonnegative());
            }
        }
    }
}

#[test]
fn identity_sides_on_small_lattice() {
    let lim = Limits::default();
    for ms in snake_segments(3, 2, 5) {
        for m in 0..=2 {
            let (l, r) = identity_sides(&ms, m, &lim).unwrap();
            assert_eq!(l, r, "{ms:?} M={m}");
        }
    }
}

#[test]
fn segment_characters() {
    let w = seg_char(3, 0, 1).unwrap();
    let expect: BTreeMap<Vec<i64>, BigInt> = [(vec![1, 0], 1), (vec![-1, 1], 1), (vec![0, -1], 1)]
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect();
    assert_eq!(w.terms(), &expect);
    let sq = char_mul(&seg_char(3, 0, 0).unwrap(), &w).unwrap();
    assert_eq!(sq, w);
}

#[test]
fn twisted_character_of_fundamental() {
    let lim = Limits::default();
    let s = SnakeA::new(4, vec![(1, 0)]).unwrap();
    let folded = fold_char(&char_snake(&s, &lim).unwrap()).unwrap();
    assert_eq!(folded.mass(), BigInt::from(4));
    assert_eq!(twisted_qchar_snake(&s, &lim).unwrap().mass(), 4);
    let _ = PathA::from_ys(vec![0, 1, 2]).unwrap();
}
