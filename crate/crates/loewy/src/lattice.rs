//! Finite bounded lattices with dense order and meet/join tables.
//!
//! A [`FiniteLattice`] is immutable after construction. The element order is
//! always a linear extension of the lattice order (topological, ties broken
//! lexicographically by identifier), so the same abstract lattice built from
//! any cover ordering serializes identically.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{LatticeError, Result};

/// Default cap on lattice sizes accepted by `product` and the generators.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Size cap, overridable through the `LATTICE_MAX_N` environment variable.
pub fn size_cap() -> usize {
    std::env::var("LATTICE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

// Bitset rows over element indices.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn bit_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn highest_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate().rev() {
        if word != 0 {
            return Some(w * 64 + 63 - word.leading_zeros() as usize);
        }
    }
    None
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

/// An immutable finite bounded lattice.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    name: String,
    elements: Vec<String>,
    index: HashMap<String, usize>,
    /// up[a] = bitset of b with a <= b.
    up: Vec<Vec<u64>>,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    /// Longest cover path from the bottom element.
    height: Vec<usize>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.covers == other.covers
    }
}
impl Eq for FiniteLattice {}

impl FiniteLattice {
    /// Builds a lattice from element identifiers and an irredundant cover list.
    ///
    /// The order is the reflexive-transitive closure of `covers`. Fails if any
    /// lattice invariant is violated: duplicated identifiers, cycles, declared
    /// pairs that are not genuine covers, no unique bottom/top, or a pair of
    /// elements without a meet or join.
    pub fn build_from_covers<S1, S2>(name: &str, elements: &[S1], covers: &[(S2, S2)]) -> Result<Self>
    where
        S1: AsRef<str>,
        S2: AsRef<str>,
    {
        let raw: Vec<String> = elements.iter().map(|e| e.as_ref().to_owned()).collect();
        if raw.is_empty() {
            return Err(LatticeError::NoBound("bottom"));
        }
        let mut index = HashMap::new();
        for (i, e) in raw.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(e.clone()));
            }
        }
        let mut edges = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            let a = *index
                .get(lo.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(lo.as_ref().to_owned()))?;
            let b = *index
                .get(hi.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(hi.as_ref().to_owned()))?;
            if a == b {
                return Err(LatticeError::NotACover {
                    lower: raw[a].clone(),
                    upper: raw[b].clone(),
                    reason: "an element does not cover itself",
                });
            }
            edges.push((a, b));
        }

        let n = raw.len();
        let perm = topo_lex_order(&raw, &edges, n)?;
        // perm[new] = old; reindex elements and covers into canonical order.
        let mut old_to_new = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            old_to_new[old] = new;
        }
        let elements: Vec<String> = perm.iter().map(|&o| raw[o].clone()).collect();
        let mut covers: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (old_to_new[a], old_to_new[b]))
            .collect();
        covers.sort_unstable();
        if covers.windows(2).any(|w| w[0] == w[1]) {
            let (a, b) = covers.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(LatticeError::NotACover {
                lower: elements[a].clone(),
                upper: elements[b].clone(),
                reason: "declared twice",
            });
        }
        Self::finish(name, elements, covers)
    }

    /// Assembles closure, bounds and operation tables for a canonically
    /// ordered element list. `covers` must use the final indices, which must
    /// already be a linear extension.
    fn finish(name: &str, elements: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = elements.len();
        let w = words_for(n);
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for &(a, b) in &covers {
            debug_assert!(a < b, "cover indices must respect the linear extension");
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }

        // Reachability closure, highest index first.
        let mut up = vec![vec![0u64; w]; n];
        for a in (0..n).rev() {
            bit_set(&mut up[a], a);
            for &b in &upper_covers[a] {
                let (lo, hi) = up.split_at_mut(b);
                for k in 0..w {
                    lo[a][k] |= hi[0][k];
                }
            }
        }
        let mut down = vec![vec![0u64; w]; n];
        for (a, up_a) in up.iter().enumerate() {
            for (b, down_b) in down.iter_mut().enumerate() {
                if bit_get(up_a, b) {
                    bit_set(down_b, a);
                }
            }
        }

        // Genuine-cover check: nothing strictly between a declared pair.
        for &(a, b) in &covers {
            for k in 0..w {
                let mut between = up[a][k] & down[b][k];
                if k == a / 64 {
                    between &= !(1u64 << (a % 64));
                }
                if k == b / 64 {
                    between &= !(1u64 << (b % 64));
                }
                if between != 0 {
                    return Err(LatticeError::NotACover {
                        lower: elements[a].clone(),
                        upper: elements[b].clone(),
                        reason: "transitively implied",
                    });
                }
            }
        }

        let full: Vec<u64> = (0..w)
            .map(|k| {
                let lo = k * 64;
                if n - lo >= 64 {
                    u64::MAX
                } else {
                    (1u64 << (n - lo)) - 1
                }
            })
            .collect();
        let bottom = (0..n)
            .find(|&a| up[a] == full)
            .ok_or(LatticeError::NoBound("bottom"))?;
        let top = (0..n)
            .find(|&a| down[a] == full)
            .ok_or(LatticeError::NoBound("top"))?;

        let mut height = vec![0usize; n];
        for b in 0..n {
            for &a in &lower_covers[b] {
                height[b] = height[b].max(height[a] + 1);
            }
        }

        // Meet/join tables. With a linear extension, the greatest common lower
        // bound (if any) is the highest-index common lower bound, and dually.
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        let mut buf = vec![0u64; w];
        for a in 0..n {
            for b in a..n {
                for k in 0..w {
                    buf[k] = down[a][k] & down[b][k];
                }
                let g = highest_bit(&buf).expect("bottom is a common lower bound");
                if buf != down[g] {
                    return Err(LatticeError::NotALattice {
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                        kind: "meet",
                    });
                }
                meet[a * n + b] = g as u32;
                meet[b * n + a] = g as u32;
                for k in 0..w {
                    buf[k] = up[a][k] & up[b][k];
                }
                let g = lowest_bit(&buf).expect("top is a common upper bound");
                if buf != up[g] {
                    return Err(LatticeError::NotALattice {
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                        kind: "join",
                    });
                }
                join[a * n + b] = g as u32;
                join[b * n + a] = g as u32;
            }
        }

        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(FiniteLattice {
            name: name.to_owned(),
            elements,
            index,
            up,
            covers,
            upper_covers,
            lower_covers,
            meet,
            join,
            bottom,
            top,
            height,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Cover pairs (lower, upper), sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// Longest cover path from bottom to `a`.
    pub fn height(&self, a: usize) -> usize {
        self.height[a]
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a < self.len() {
            Ok(())
        } else {
            Err(LatticeError::IndexOutOfRange {
                index: a,
                size: self.len(),
            })
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        bit_get(&self.up[a], b)
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.meet[a * self.len() + b] as usize)
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.join[a * self.len() + b] as usize)
    }

    /// The induced lattice on `{x : a <= x <= b}` together with the embedding
    /// back into `self`: `embedding[i]` is the parent index of element `i`.
    pub fn interval(&self, a: usize, b: usize) -> Result<(FiniteLattice, Vec<usize>)> {
        self.check_index(a)?;
        self.check_index(b)?;
        if !self.leq(a, b) {
            return Err(LatticeError::NotComparable {
                a: self.elements[a].clone(),
                b: self.elements[b].clone(),
            });
        }
        let members: Vec<usize> = (0..self.len())
            .filter(|&x| self.leq(a, x) && self.leq(x, b))
            .collect();
        let in_interval: Vec<bool> = {
            let mut v = vec![false; self.len()];
            for &m in &members {
                v[m] = true;
            }
            v
        };
        let names: Vec<&str> = members.iter().map(|&m| self.elements[m].as_str()).collect();
        // Covers restrict: anything between two interval members is itself in
        // the interval.
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .filter(|&&(x, y)| in_interval[x] && in_interval[y])
            .map(|&(x, y)| (self.elements[x].as_str(), self.elements[y].as_str()))
            .collect();
        let name = format!(
            "{}[{},{}]",
            self.name, self.elements[a], self.elements[b]
        );
        let sub = FiniteLattice::build_from_covers(&name, &names, &covers)?;
        let embedding = sub
            .elements
            .iter()
            .map(|e| self.index_of(e).expect("interval element"))
            .collect();
        Ok((sub, embedding))
    }

    /// Componentwise-ordered product; element identifiers are `(x,y)` pairs.
    pub fn product(&self, other: &FiniteLattice) -> Result<FiniteLattice> {
        self.product_capped(other, size_cap())
    }

    pub fn product_capped(&self, other: &FiniteLattice, cap: usize) -> Result<FiniteLattice> {
        let size = self.len() * other.len();
        if size > cap {
            return Err(LatticeError::TooLarge { size, cap });
        }
        let pair = |x: usize, y: usize| format!("({},{})", self.elements[x], other.elements[y]);
        let mut elements = Vec::with_capacity(size);
        let mut covers = Vec::new();
        for x in 0..self.len() {
            for y in 0..other.len() {
                elements.push(pair(x, y));
                for &x2 in self.upper_covers(x) {
                    covers.push((pair(x, y), pair(x2, y)));
                }
                for &y2 in other.upper_covers(y) {
                    covers.push((pair(x, y), pair(x, y2)));
                }
            }
        }
        let covers: Vec<(&str, &str)> =
            covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let name = format!("{}x{}", self.name, other.name);
        FiniteLattice::build_from_covers(&name, &elements, &covers)
    }

    /// Same elements with the order reversed; bottom and top swap.
    pub fn dual(&self) -> FiniteLattice {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[b].as_str(), self.elements[a].as_str()))
            .collect();
        let names: Vec<&str> = self.elements.iter().map(|e| e.as_str()).collect();
        let name = format!("dual({})", self.name);
        FiniteLattice::build_from_covers(&name, &names, &covers)
            .expect("dual of a lattice is a lattice")
    }

    /// Resolves indices to element names, preserving order.
    pub fn names(&self, ixs: &[usize]) -> Vec<String> {
        ixs.iter().map(|&i| self.elements[i].clone()).collect()
    }
}

/// Topological order of the cover digraph with lexicographic tie-breaking.
/// Fails with `Cycle` if the closure would not be antisymmetric.
fn topo_lex_order(names: &[String], edges: &[(usize, usize)], n: usize) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(a, b) in edges {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut heap: BinaryHeap<Reverse<(&str, usize)>> = (0..n)
        .filter(|&i| indeg[i] == 0)
        .map(|i| Reverse((names[i].as_str(), i)))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, a))) = heap.pop() {
        order.push(a);
        for &b in &out[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                heap.push(Reverse((names[b].as_str(), b)));
            }
        }
    }
    if order.len() != n {
        let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
        return Err(LatticeError::Cycle(names[stuck].clone()));
    }
    Ok(order)
}
