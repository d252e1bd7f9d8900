//! Order-isomorphism testing by backtracking over invariant-compatible
//! candidates.

use crate::error::{LatticeError, Result};
use crate::lattice::FiniteLattice;

/// Default cap on the size of lattices accepted by [`are_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 64;

/// Per-element invariant preserved by any order isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    height: usize,
    depth: usize,
    up_covers: usize,
    down_covers: usize,
    downset: usize,
    upset: usize,
}

fn signatures(l: &FiniteLattice) -> Vec<Signature> {
    let n = l.len();
    let mut depth = vec![0usize; n];
    for a in (0..n).rev() {
        for &b in l.upper_covers(a) {
            depth[a] = depth[a].max(depth[b] + 1);
        }
    }
    (0..n)
        .map(|a| Signature {
            height: l.height(a),
            depth: depth[a],
            up_covers: l.upper_covers(a).len(),
            down_covers: l.lower_covers(a).len(),
            downset: (0..n).filter(|&b| l.leq(b, a)).count(),
            upset: (0..n).filter(|&b| l.leq(a, b)).count(),
        })
        .collect()
}

/// Tests whether two lattices are order-isomorphic, with the default size cap.
///
/// Returns a witness `map` with `map[i]` the image in `l2` of element `i` of
/// `l1`, or `None` when the lattices are not isomorphic.
pub fn are_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> Result<Option<Vec<usize>>> {
    are_isomorphic_capped(l1, l2, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_capped(
    l1: &FiniteLattice,
    l2: &FiniteLattice,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let size = l1.len().max(l2.len());
    if size > cap {
        return Err(LatticeError::TooLarge { size, cap });
    }
    if l1.len() != l2.len() {
        return Ok(None);
    }
    let n = l1.len();
    let sig1 = signatures(l1);
    let sig2 = signatures(l2);
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(None);
    }

    // Candidate sets per element, most constrained first.
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| sig1[a] == sig2[b]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| candidates[a].len());

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(l1, l2, &candidates, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn assign(
    l1: &FiniteLattice,
    l2: &FiniteLattice,
    candidates: &[Vec<usize>],
    order: &[usize],
    pos: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let a = order[pos];
    for &b in &candidates[a] {
        if used[b] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&x| {
            l1.leq(a, x) == l2.leq(b, map[x]) && l1.leq(x, a) == l2.leq(map[x], b)
        });
        if consistent {
            map[a] = b;
            used[b] = true;
            if assign(l1, l2, candidates, order, pos + 1, map, used) {
                return true;
            }
            used[b] = false;
            map[a] = usize::MAX;
        }
    }
    false
}
