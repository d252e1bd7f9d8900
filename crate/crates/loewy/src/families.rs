//! Deterministic generators for the lattice families used by the theorem
//! suites, plus the worked examples as named fixtures.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{LatticeError, Result};
use crate::lattice::{size_cap, FiniteLattice};

/// Total order with `n + 1` elements labeled `0..n`.
pub fn chain(n: usize) -> Result<FiniteLattice> {
    if n + 1 > size_cap() {
        return Err(LatticeError::Range(format!("chain({n}) exceeds size cap")));
    }
    let elements: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (0..n).map(|i| (i.to_string(), (i + 1).to_string())).collect();
    FiniteLattice::build_from_covers(&format!("chain({n})"), &elements, &covers)
}

/// Lattice of subsets of a `k`-set ordered by inclusion. Elements are labeled
/// `s` followed by the characteristic bit string, lowest ground element first.
pub fn boolean_cube(k: usize) -> Result<FiniteLattice> {
    if k > 16 {
        return Err(LatticeError::Range(format!("boolean_cube({k}): k must be <= 16")));
    }
    if 1usize << k > size_cap() {
        return Err(LatticeError::Range(format!("boolean_cube({k}) exceeds size cap")));
    }
    let label = |mask: usize| {
        let mut s = String::from("s");
        for i in 0..k {
            s.push(if mask >> i & 1 == 1 { '1' } else { '0' });
        }
        s
    };
    let elements: Vec<String> = (0..1usize << k).map(label).collect();
    let mut covers = Vec::new();
    for mask in 0..1usize << k {
        for i in 0..k {
            if mask >> i & 1 == 0 {
                covers.push((label(mask), label(mask | 1 << i)));
            }
        }
    }
    FiniteLattice::build_from_covers(&format!("cube({k})"), &elements, &covers)
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

pub(crate) fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Divisors of `n` ordered by divisibility; meet is gcd and join is lcm.
/// Element identifiers are the decimal numerals of the divisors.
pub fn divisor_lattice(n: u64) -> Result<FiniteLattice> {
    if !(1..=1_000_000_000).contains(&n) {
        return Err(LatticeError::Range(format!("divisor_lattice({n}): n must be in 1..=10^9")));
    }
    let divs = divisors(n);
    if divs.len() > size_cap() {
        return Err(LatticeError::Range(format!(
            "divisor_lattice({n}): {} divisors exceed the size cap",
            divs.len()
        )));
    }
    let primes: Vec<u64> = prime_factorization(n).into_iter().map(|(p, _)| p).collect();
    let elements: Vec<String> = divs.iter().map(|d| d.to_string()).collect();
    let mut covers = Vec::new();
    for &d in &divs {
        for &p in &primes {
            let e = d * p;
            if n.is_multiple_of(e) {
                covers.push((d.to_string(), e.to_string()));
            }
        }
    }
    FiniteLattice::build_from_covers(&format!("D{n}"), &elements, &covers)
}

/// Product of chains. `grid([a])` is `chain(a)`; labels are coordinate tuples.
pub fn grid(dims: &[usize]) -> Result<FiniteLattice> {
    if dims.is_empty() {
        return Err(LatticeError::Range("grid: at least one dimension".into()));
    }
    let mut size = 1usize;
    for &d in dims {
        if d < 1 {
            return Err(LatticeError::Range("grid: dimensions must be >= 1".into()));
        }
        size = size
            .checked_mul(d + 1)
            .ok_or_else(|| LatticeError::Range("grid: size overflow".into()))?;
    }
    if size > size_cap() {
        return Err(LatticeError::Range(format!("grid{dims:?} exceeds size cap")));
    }
    if dims.len() == 1 {
        return chain(dims[0]);
    }
    let label = |v: &[usize]| {
        let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        format!("({})", coords.join(","))
    };
    let mut points = vec![vec![0usize; dims.len()]];
    for (i, &d) in dims.iter().enumerate() {
        let mut next = Vec::new();
        for p in &points {
            for c in 0..=d {
                let mut q = p.clone();
                q[i] = c;
                next.push(q);
            }
        }
        points = next;
    }
    let elements: Vec<String> = points.iter().map(|p| label(p)).collect();
    let mut covers = Vec::new();
    for p in &points {
        for (i, &d) in dims.iter().enumerate() {
            if p[i] < d {
                let mut q = p.clone();
                q[i] += 1;
                covers.push((label(p), label(&q)));
            }
        }
    }
    let dim_list: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    FiniteLattice::build_from_covers(&format!("grid({})", dim_list.join(",")), &elements, &covers)
}

/// Bottom, `k` incomparable atoms and top (the lattice M_k).
pub fn diamond(k: usize) -> Result<FiniteLattice> {
    if k < 3 {
        return Err(LatticeError::Range(format!("diamond({k}): k must be >= 3")));
    }
    if k + 2 > size_cap() {
        return Err(LatticeError::Range(format!("diamond({k}) exceeds size cap")));
    }
    let mut elements = vec!["bot".to_string()];
    let mut covers = Vec::new();
    for i in 1..=k {
        let a = format!("a{i}");
        covers.push(("bot".to_string(), a.clone()));
        covers.push((a.clone(), "top".to_string()));
        elements.push(a);
    }
    elements.push("top".to_string());
    FiniteLattice::build_from_covers(&format!("M{k}"), &elements, &covers)
}

/// The 5-element lattice N5, the canonical non-modular fixture.
pub fn pentagon() -> Result<FiniteLattice> {
    FiniteLattice::build_from_covers(
        "N5",
        &["bot", "a", "b", "c", "top"],
        &[
            ("bot", "a"),
            ("a", "b"),
            ("b", "top"),
            ("bot", "c"),
            ("c", "top"),
        ],
    )
}

/// Subgroups of `Z/nZ` ordered by inclusion, labeled `H<index>`.
///
/// Built by enumerating cyclic subgroups as residue sets, independently of
/// [`divisor_lattice`], so the isomorphism between the two is a real test.
pub fn subgroup_lattice_cyclic(n: u64) -> Result<FiniteLattice> {
    if !(1..=10_000).contains(&n) {
        return Err(LatticeError::Range(format!(
            "subgroup_lattice_cyclic({n}): n must be in 1..=10^4"
        )));
    }
    // subgroup generated by g, as a sorted residue set
    let gen_subgroup = |g: u64| -> Vec<u64> {
        let mut members = Vec::new();
        let mut x = 0u64;
        loop {
            members.push(x);
            x = (x + g) % n;
            if x == 0 {
                break;
            }
        }
        members.sort_unstable();
        members
    };
    let mut subgroups: Vec<Vec<u64>> = Vec::new();
    for g in 0..n {
        let h = gen_subgroup(g);
        if !subgroups.contains(&h) {
            subgroups.push(h);
        }
    }
    if subgroups.len() > size_cap() {
        return Err(LatticeError::Range(format!(
            "subgroup_lattice_cyclic({n}) exceeds size cap"
        )));
    }
    let contains = |big: &Vec<u64>, small: &Vec<u64>| small.iter().all(|x| big.binary_search(x).is_ok());
    let label = |h: &Vec<u64>| format!("H{}", n / h.len() as u64);
    let elements: Vec<String> = subgroups.iter().map(label).collect();
    let mut covers = Vec::new();
    for a in &subgroups {
        for b in &subgroups {
            if a.len() < b.len() && contains(b, a) {
                // cover iff nothing strictly between
                let between = subgroups.iter().any(|c| {
                    c.len() > a.len() && c.len() < b.len() && contains(c, a) && contains(b, c)
                });
                if !between {
                    covers.push((label(a), label(b)));
                }
            }
        }
    }
    FiniteLattice::build_from_covers(&format!("Sub(Z/{n})"), &elements, &covers)
}

// Arithmetic tables for the fields of order 2, 3, 4 and 5. GF(4) is
// {0, 1, t, t+1} with t^2 = t + 1; the prime fields are integers mod q.
fn field_mul(q: usize, a: usize, b: usize) -> usize {
    if q == 4 {
        const MUL4: [[usize; 4]; 4] = [
            [0, 0, 0, 0],
            [0, 1, 2, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
        ];
        MUL4[a][b]
    } else {
        a * b % q
    }
}

fn field_add(q: usize, a: usize, b: usize) -> usize {
    if q == 4 {
        a ^ b
    } else {
        (a + b) % q
    }
}

/// Lattice of subspaces of a `d`-dimensional space over the `q`-element field.
pub fn subspace_lattice(q: usize, d: usize) -> Result<FiniteLattice> {
    if !matches!(q, 2..=5) {
        return Err(LatticeError::Range(format!("subspace_lattice: q={q} not in {{2,3,4,5}}")));
    }
    if !matches!(d, 1 | 2) {
        return Err(LatticeError::Range(format!("subspace_lattice: d={d} not in {{1,2}}")));
    }
    let name = format!("Sub(F{q}^{d})");
    if d == 1 {
        return FiniteLattice::build_from_covers(&name, &["0", "V"], &[("0", "V")]);
    }
    // lines through the origin in F_q^2: spans of nonzero vectors
    let mut lines: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            if (a, b) == (0, 0) {
                continue;
            }
            let mut span: Vec<(usize, usize)> = (0..q)
                .map(|c| (field_mul(q, c, a), field_mul(q, c, b)))
                .collect();
            span.sort_unstable();
            span.dedup();
            if !lines.contains(&span) {
                lines.push(span);
            }
        }
    }
    debug_assert_eq!(lines.len(), q + 1);
    // sanity: each line is additively closed
    debug_assert!(lines.iter().all(|l| l
        .iter()
        .all(|&(a1, b1)| l.iter().all(|&(a2, b2)| l
            .contains(&(field_add(q, a1, a2), field_add(q, b1, b2)))))));
    let mut elements = vec!["0".to_string(), "V".to_string()];
    let mut covers = Vec::new();
    for i in 0..lines.len() {
        let l = format!("l{i}");
        covers.push(("0".to_string(), l.clone()));
        covers.push((l.clone(), "V".to_string()));
        elements.push(l);
    }
    FiniteLattice::build_from_covers(&name, &elements, &covers)
}

/// The worked examples as explicit fixtures, with their original element
/// names. Valid names: `ex8_41`, `ex8_7_1`, `ex8_7_3`, `ex8_81`.
pub fn paper_example(name: &str) -> Result<FiniteLattice> {
    match name {
        "ex8_41" => FiniteLattice::build_from_covers(
            name,
            &["k", "k1", "k2", "k3", "L"],
            &[
                ("k", "k1"),
                ("k", "k2"),
                ("k", "k3"),
                ("k1", "L"),
                ("k2", "L"),
                ("k3", "L"),
            ],
        ),
        "ex8_7_1" => FiniteLattice::build_from_covers(
            name,
            &["k", "L2", "L3", "L4", "L6", "L"],
            &[
                ("k", "L2"),
                ("k", "L3"),
                ("L2", "L4"),
                ("L2", "L6"),
                ("L3", "L6"),
                ("L4", "L"),
                ("L6", "L"),
            ],
        ),
        "ex8_7_3" => FiniteLattice::build_from_covers(
            name,
            &["R", "T", "T1", "T2", "S"],
            &[
                ("R", "T"),
                ("T", "T1"),
                ("T", "T2"),
                ("T1", "S"),
                ("T2", "S"),
            ],
        ),
        "ex8_81" => FiniteLattice::build_from_covers(
            name,
            &["R", "R1", "R2", "R1R2", "R3", "S"],
            &[
                ("R", "R1"),
                ("R", "R2"),
                ("R1", "R1R2"),
                ("R2", "R1R2"),
                ("R2", "R3"),
                ("R1R2", "S"),
                ("R3", "S"),
            ],
        ),
        _ => Err(LatticeError::UnknownName(name.to_owned())),
    }
}

pub const PAPER_EXAMPLE_NAMES: [&str; 4] = ["ex8_41", "ex8_7_1", "ex8_7_3", "ex8_81"];

/// Deterministic pseudo-random distributive lattice with at most `max_size`
/// elements.
///
/// Draws from families that are distributive by construction: a random grid,
/// a random divisor lattice, or a random interval of either. The generator is
/// a ChaCha8 stream keyed by `seed`, so identical inputs reproduce identical
/// lattices.
pub fn random_distributive(seed: u64, max_size: usize) -> Result<FiniteLattice> {
    if max_size < 2 {
        return Err(LatticeError::Range(format!(
            "random_distributive: max_size {max_size} must be >= 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = match rng.gen_range(0..2) {
        0 => {
            // grid with random dimensions, product of (d_i + 1) <= max_size
            let mut dims = Vec::new();
            let mut size = 1usize;
            let k = rng.gen_range(1..=4);
            for _ in 0..k {
                let room = max_size / size;
                if room < 2 {
                    break;
                }
                let d = rng.gen_range(1..=(room - 1).min(6));
                dims.push(d);
                size *= d + 1;
            }
            if dims.is_empty() {
                dims.push(1);
            }
            grid(&dims)?
        }
        _ => {
            // divisor lattice with divisor count <= max_size
            loop {
                let n = rng.gen_range(2..=20_000u64);
                if divisors(n).len() <= max_size {
                    break divisor_lattice(n)?;
                }
            }
        }
    };
    if rng.gen_bool(0.5) {
        // random interval
        let a = rng.gen_range(0..base.len());
        let above: Vec<usize> = (0..base.len()).filter(|&b| base.leq(a, b)).collect();
        let b = above[rng.gen_range(0..above.len())];
        let (sub, _) = base.interval(a, b)?;
        Ok(sub)
    } else {
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis;
    use crate::iso::are_isomorphic;

    #[test]
    fn chain_basics() {
        let c = chain(0).unwrap();
        assert_eq!(c.len(), 1);
        let c = chain(5).unwrap();
        assert_eq!(analysis::lattice_length(&c), 5);
        let c3 = chain(3).unwrap();
        let s = analysis::loewy_series(&c3).unwrap();
        assert_eq!(c3.names(&s.chain), ["0", "1", "2", "3"]);
    }

    #[test]
    fn cube_basics() {
        assert_eq!(boolean_cube(3).unwrap().len(), 8);
        assert_eq!(boolean_cube(0).unwrap().len(), 1);
        for k in 1..5 {
            let b = boolean_cube(k).unwrap();
            assert_eq!(analysis::atoms(&b).len(), k);
            assert_eq!(analysis::loewy_series(&b).unwrap().length(), 1);
        }
        assert!(boolean_cube(17).is_err());
    }

    #[test]
    fn divisor_lattice_basics() {
        let l = divisor_lattice(12).unwrap();
        assert_eq!(l.elements(), &["1", "2", "3", "4", "6", "12"]);
        for p in [2u64, 3, 5, 97] {
            let lp = divisor_lattice(p).unwrap();
            assert!(are_isomorphic(&lp, &chain(1).unwrap()).unwrap().is_some());
        }
        let l = divisor_lattice(360).unwrap();
        let s = analysis::loewy_series(&l).unwrap();
        assert_eq!(l.names(&s.chain), ["1", "30", "180", "360"]);
        assert!(divisor_lattice(0).is_err());
    }

    #[test]
    fn divisor_lattice_atoms_are_primes() {
        for n in [12u64, 30, 360, 97, 1024] {
            let l = divisor_lattice(n).unwrap();
            let atom_names: Vec<String> = l.names(&analysis::atoms(&l));
            let primes: Vec<String> = prime_factorization(n)
                .iter()
                .map(|(p, _)| p.to_string())
                .collect();
            assert_eq!(atom_names, primes);
            // socle is the product of the distinct primes
            let rad: u64 = prime_factorization(n).iter().map(|(p, _)| p).product();
            assert_eq!(l.element(analysis::socle(&l)), rad.to_string());
        }
    }

    #[test]
    fn grid_basics() {
        let g = grid(&[1, 2]).unwrap();
        let ex = paper_example("ex8_81").unwrap();
        assert!(are_isomorphic(&g, &ex).unwrap().is_some());
        let g = grid(&[1, 1, 1]).unwrap();
        assert!(are_isomorphic(&g, &boolean_cube(3).unwrap()).unwrap().is_some());
        assert_eq!(grid(&[4]).unwrap(), chain(4).unwrap());
        assert!(grid(&[]).is_err());
        for dims in [&[2usize, 3][..], &[1, 1, 2], &[4]] {
            let g = grid(dims).unwrap();
            assert!(analysis::is_distributive(&g).unwrap());
            assert!(analysis::is_catenarian(&g));
        }
    }

    #[test]
    fn diamond_and_pentagon() {
        let d = diamond(3).unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(analysis::atoms(&d).len(), 3);
        assert!(diamond(2).is_err());
        for k in 3..6 {
            assert!(!analysis::is_distributive(&diamond(k).unwrap()).unwrap());
        }
        let p = pentagon().unwrap();
        assert_eq!(analysis::loewy_series(&p).unwrap().length(), 1);
    }

    #[test]
    fn subgroup_lattices() {
        for n in [2u64, 3, 5, 13] {
            let l = subgroup_lattice_cyclic(n).unwrap();
            assert!(are_isomorphic(&l, &chain(1).unwrap()).unwrap().is_some());
        }
        for n in [4u64, 6, 12, 30, 36] {
            let l = subgroup_lattice_cyclic(n).unwrap();
            assert!(analysis::is_distributive(&l).unwrap());
            assert!(are_isomorphic(&l, &divisor_lattice(n).unwrap())
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn subspace_lattices() {
        let s = subspace_lattice(2, 2).unwrap();
        assert!(are_isomorphic(&s, &diamond(3).unwrap()).unwrap().is_some());
        for q in [2, 3, 4, 5] {
            let s = subspace_lattice(q, 2).unwrap();
            assert_eq!(analysis::atoms(&s).len(), q + 1);
            assert_eq!(analysis::loewy_series(&s).unwrap().length(), 1);
            let line = subspace_lattice(q, 1).unwrap();
            assert!(are_isomorphic(&line, &chain(1).unwrap()).unwrap().is_some());
        }
        assert!(subspace_lattice(7, 2).is_err());
        assert!(subspace_lattice(2, 3).is_err());
    }

    #[test]
    fn paper_examples() {
        let ex = paper_example("ex8_7_3").unwrap();
        assert_eq!(ex.len(), 5);
        assert!(are_isomorphic(&paper_example("ex8_41").unwrap(), &diamond(3).unwrap())
            .unwrap()
            .is_some());
        assert!(are_isomorphic(
            &paper_example("ex8_7_1").unwrap(),
            &divisor_lattice(12).unwrap()
        )
        .unwrap()
        .is_some());
        assert!(matches!(
            paper_example("nope"),
            Err(LatticeError::UnknownName(_))
        ));
    }

    #[test]
    fn random_distributive_is_deterministic_and_distributive() {
        for seed in 0..20 {
            let a = random_distributive(seed, 60).unwrap();
            let b = random_distributive(seed, 60).unwrap();
            assert_eq!(a, b);
            assert!(a.len() <= 60);
            assert!(analysis::is_distributive(&a).unwrap(), "seed {seed}");
        }
        assert!(random_distributive(0, 1).is_err());
    }
}
