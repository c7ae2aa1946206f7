use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::paths::LatticePath;

/// For each path of set `t`, the indices of paths of set `t + 1` strictly below it.
fn successors<P: LatticePath>(sets: &[Vec<P>]) -> Result<Vec<Vec<Vec<usize>>>> {
    let first = sets.iter().find_map(|s| s.first());
    if let Some(f) = first {
        if sets.iter().flatten().any(|p| !f.same_shape(p)) {
            return Err(Error::IncompatiblePaths);
        }
    }
    let mut out = Vec::with_capacity(sets.len().saturating_sub(1));
    for pair in sets.windows(2) {
        let mut level = Vec::with_capacity(pair[0].len());
        for p in &pair[0] {
            let mut below = Vec::new();
            for (b, q) in pair[1].iter().enumerate() {
                if p.strictly_above(q)? {
                    below.push(b);
                }
            }
            level.push(below);
        }
        out.push(level);
    }
    Ok(out)
}

fn count_with(sets_len: &[usize], succ: &[Vec<Vec<usize>>]) -> u128 {
    let t = sets_len.len();
    if t == 0 {
        return 0;
    }
    let mut counts: Vec<u128> = vec![1; sets_len[t - 1]];
    for level in succ.iter().rev() {
        counts = level
            .iter()
            .map(|below| {
                below
                    .iter()
                    .fold(0u128, |acc, &b| acc.saturating_add(counts[b]))
            })
            .collect();
    }
    counts.iter().fold(0u128, |acc, &c| acc.saturating_add(c))
}

/// Number of tuples `p₁ ≻ p₂ ≻ … ≻ p_T` with `p_t` drawn from `sets[t]`.
pub fn count_nop_tuples<P: LatticePath>(sets: &[Vec<P>]) -> Result<u128> {
    let succ = successors(sets)?;
    let lens: Vec<usize> = sets.iter().map(Vec::len).collect();
    Ok(count_with(&lens, &succ))
}

/// Calls `visit` with the index tuple of every NOP tuple, in lexicographic order.
///
/// Fails with [`Error::LimitExceeded`] before visiting anything when the
/// number of tuples is above the cap. Returns the number of tuples visited.
pub fn for_each_nop_tuple<P, F>(sets: &[Vec<P>], limits: &Limits, mut visit: F) -> Result<u64>
where
    P: LatticePath,
    F: FnMut(&[usize]),
{
    if sets.is_empty() {
        return Ok(0);
    }
    let succ = successors(sets)?;
    let lens: Vec<usize> = sets.iter().map(Vec::len).collect();
    let total = count_with(&lens, &succ);
    if total > limits.max_tuples as u128 {
        return Err(Error::LimitExceeded {
            count: total,
            limit: limits.max_tuples,
        });
    }
    let t = sets.len();
    let mut tuple = Vec::with_capacity(t);
    let mut visited = 0u64;
    // Each frame holds the candidate list for the next position and a cursor into it.
    let roots: Vec<usize> = (0..lens[0]).collect();
    let mut stack: Vec<(&[usize], usize)> = vec![(&roots, 0)];
    while let Some(frame) = stack.last_mut() {
        let (cands, pos) = (frame.0, frame.1);
        if pos == cands.len() {
            stack.pop();
            tuple.pop();
            continue;
        }
        frame.1 += 1;
        let idx = cands[pos];
        let depth = stack.len() - 1;
        tuple.truncate(depth);
        tuple.push(idx);
        if depth + 1 == t {
            visit(&tuple);
            visited += 1;
        } else {
            stack.push((&succ[depth][idx], 0));
        }
    }
    Ok(visited)
}

/// Materializes all NOP tuples as index vectors into the given sets.
pub fn enum_nop_tuples<P: LatticePath>(
    sets: &[Vec<P>],
    limits: &Limits,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_nop_tuple(sets, limits, |t| out.push(t.to_vec()))?;
    Ok(out)
}
