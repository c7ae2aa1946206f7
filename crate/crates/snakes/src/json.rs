//! JSON forms of weights, characters, monomials and paths.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use snakes_core::monomial::{QCharacter, Var};
use snakes_core::{Character, EpsInt, PathA, PathB, Weight, YMonomial, ZMonomial};

/// An exact integer as a JSON number, whatever its size.
pub fn big(n: &BigInt) -> Value {
    Value::Number(
        Number::from_str(&n.to_string()).expect("decimal integers are valid JSON numbers"),
    )
}

pub fn weight(w: &Weight) -> Value {
    json!({ "family": w.family().tag(), "coeffs": w.coeffs() })
}

/// `{"family", "rank", "terms": [[coeffs, mult], …]}` in key order.
pub fn character(c: &Character) -> Value {
    let terms: Vec<Value> = c.iter().map(|(k, m)| json!([k, big(m)])).collect();
    json!({ "family": c.family().tag(), "rank": c.family().rank(), "terms": terms })
}

fn var(v: &Var, e: i64) -> Value {
    json!([v.index, v.sign.as_i8(), v.power, e])
}

pub fn y_monomial(m: &YMonomial) -> Value {
    Value::Array(m.iter().map(|(v, &e)| var(v, e)).collect())
}

pub fn z_monomial(m: &ZMonomial) -> Value {
    Value::Array(m.iter().map(|(v, &e)| var(v, e)).collect())
}

pub fn y_qchar(family: &str, rank: usize, q: &QCharacter<YMonomial>) -> Value {
    let terms: Vec<Value> = q.iter().map(|(m, &c)| json!([y_monomial(m), c])).collect();
    json!({ "family": family, "rank": rank, "terms": terms })
}

pub fn z_qchar(rank: usize, q: &QCharacter<ZMonomial>) -> Value {
    let terms: Vec<Value> = q.iter().map(|(m, &c)| json!([z_monomial(m), c])).collect();
    json!({ "family": "TW", "rank": rank, "terms": terms })
}

pub fn path_a(p: &PathA) -> Value {
    json!({ "m": p.m(), "i": p.i(), "k": p.k(), "ys": p.ys() })
}

fn branch(xs: &[EpsInt]) -> Value {
    let n = xs.len() - 1;
    let mut out: Vec<Value> = xs[..n].iter().map(|x| json!(x.a)).collect();
    out.push(json!([xs[n].a, xs[n].b]));
    Value::Array(out)
}

pub fn path_b(p: &PathB) -> Value {
    json!({ "n": p.n(), "i": p.i(), "k": p.k(), "ys": branch(p.ys()), "zs": branch(p.zs()) })
}

pub fn points(points: &[(usize, i64)]) -> Value {
    Value::Array(points.iter().map(|&(i, k)| json!([i, k])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use snakes_core::Family;

    #[test]
    fn big_numbers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            serde_json::to_string(&big(&n)).unwrap(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn character_terms_are_sorted() {
        let mut c = Character::zero(Family::B(2));
        c.add_term(vec![1, 0], 2);
        c.add_term(vec![-1, 2], 1);
        let s = serde_json::to_string(&character(&c)).unwrap();
        assert_eq!(
            s,
            r#"{"family":"B","rank":2,"terms":[[[-1,2],1],[[1,0],2]]}"#
        );
    }

    #[test]
    fn b_path_last_entry_is_a_pair() {
        let p = snakes_core::paths::enum_paths_b(2, 1, 0).unwrap().remove(0);
        let v = path_b(&p);
        assert!(v["ys"][2].is_array());
        assert!(v["zs"][1].is_i64());
    }
}
