//! Invariants of a finite bounded lattice: atoms, socle, radical, essential
//! elements, Loewy series, length, irreducibles and property flags.

use serde::Serialize;

use crate::error::{LatticeError, Result};
use crate::lattice::FiniteLattice;

/// Default cap on the exhaustive triple scans (distributivity, modularity).
pub const DEFAULT_SCAN_CAP: usize = 512;

/// Atoms: the upper covers of bottom. Empty only on the 1-element lattice.
pub fn atoms(l: &FiniteLattice) -> Vec<usize> {
    l.upper_covers(l.bottom()).to_vec()
}

/// Co-atoms: the lower covers of top.
pub fn coatoms(l: &FiniteLattice) -> Vec<usize> {
    let mut v = l.lower_covers(l.top()).to_vec();
    v.sort_unstable();
    v
}

/// Join of all atoms; bottom on the 1-element lattice.
pub fn socle(l: &FiniteLattice) -> usize {
    atoms(l)
        .into_iter()
        .fold(l.bottom(), |acc, a| l.join(acc, a).expect("valid index"))
}

/// Meet of all co-atoms; top on the 1-element lattice.
pub fn radical(l: &FiniteLattice) -> usize {
    coatoms(l)
        .into_iter()
        .fold(l.top(), |acc, a| l.meet(acc, a).expect("valid index"))
}

/// Elements `x != bottom` whose meet with every non-bottom element is
/// non-bottom. Undefined on the 1-element lattice.
pub fn essential_elements(l: &FiniteLattice) -> Result<Vec<usize>> {
    if l.bottom() == l.top() {
        return Err(LatticeError::Degenerate);
    }
    let bot = l.bottom();
    Ok((0..l.len())
        .filter(|&x| {
            x != bot
                && (0..l.len())
                    .all(|u| u == bot || l.meet(x, u).expect("valid index") != bot)
        })
        .collect())
}

/// The Loewy series: the chain from bottom obtained by repeatedly joining the
/// atoms of the interval up to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoewySeries {
    pub chain: Vec<usize>,
}

impl LoewySeries {
    /// Number of steps (the Loewy length).
    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }
}

pub fn loewy_series(l: &FiniteLattice) -> Result<LoewySeries> {
    let mut chain = vec![l.bottom()];
    let mut cur = l.bottom();
    while cur != l.top() {
        // atoms of [cur, top] are exactly the upper covers of cur
        let next = l
            .upper_covers(cur)
            .iter()
            .fold(cur, |acc, &a| l.join(acc, a).expect("valid index"));
        if next == cur {
            return Err(LatticeError::Stall);
        }
        chain.push(next);
        cur = next;
    }
    Ok(LoewySeries { chain })
}

/// Maximum number of cover steps along a maximal chain bottom -> top.
pub fn lattice_length(l: &FiniteLattice) -> usize {
    l.height(l.top())
}

/// Elements with exactly one lower cover (bottom excluded).
pub fn join_irreducibles(l: &FiniteLattice) -> Vec<usize> {
    (0..l.len()).filter(|&x| l.lower_covers(x).len() == 1).collect()
}

/// Elements with exactly one upper cover (top excluded).
pub fn meet_irreducibles(l: &FiniteLattice) -> Vec<usize> {
    (0..l.len()).filter(|&x| l.upper_covers(x).len() == 1).collect()
}

pub fn is_chain(l: &FiniteLattice) -> bool {
    (0..l.len()).all(|a| (0..l.len()).all(|b| l.leq(a, b) || l.leq(b, a)))
}

pub fn is_distributive(l: &FiniteLattice) -> Result<bool> {
    is_distributive_capped(l, DEFAULT_SCAN_CAP)
}

/// Exhaustive check of `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)` over all triples.
pub fn is_distributive_capped(l: &FiniteLattice, cap: usize) -> Result<bool> {
    if l.len() > cap {
        return Err(LatticeError::TooLarge { size: l.len(), cap });
    }
    let n = l.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = l.meet(x, l.join(y, z)?)?;
                let rhs = l.join(l.meet(x, y)?, l.meet(x, z)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_modular(l: &FiniteLattice) -> Result<bool> {
    is_modular_capped(l, DEFAULT_SCAN_CAP)
}

/// Exhaustive check of `x \/ (y /\ z) = (x \/ y) /\ z` over all `x <= z`.
pub fn is_modular_capped(l: &FiniteLattice, cap: usize) -> Result<bool> {
    if l.len() > cap {
        return Err(LatticeError::TooLarge { size: l.len(), cap });
    }
    let n = l.len();
    for x in 0..n {
        for z in 0..n {
            if !l.leq(x, z) {
                continue;
            }
            for y in 0..n {
                if l.join(x, l.meet(y, z)?)? != l.meet(l.join(x, y)?, z)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All `y` with `x /\ y = bottom` and `x \/ y = top`.
pub fn complement_of(l: &FiniteLattice, x: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for y in 0..l.len() {
        if l.meet(x, y)? == l.bottom() && l.join(x, y)? == l.top() {
            out.push(y);
        }
    }
    Ok(out)
}

/// Distributive and every element has a complement.
pub fn is_boolean(l: &FiniteLattice) -> Result<bool> {
    is_boolean_capped(l, DEFAULT_SCAN_CAP)
}

pub fn is_boolean_capped(l: &FiniteLattice, cap: usize) -> Result<bool> {
    if !is_distributive_capped(l, cap)? {
        return Ok(false);
    }
    for x in 0..l.len() {
        if complement_of(l, x)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graded: some rank function increases by exactly 1 along every cover.
/// Equivalent, on finite bounded lattices, to all maximal chains between two
/// comparable elements having the same length.
pub fn is_catenarian(l: &FiniteLattice) -> bool {
    l.covers().iter().all(|&(a, b)| l.height(b) == l.height(a) + 1)
}

/// True iff every element lies in some Loewy layer `[S_i, S_{i+1}]`.
pub fn is_p_extension(l: &FiniteLattice) -> Result<bool> {
    let series = loewy_series(l)?;
    if series.length() == 0 {
        return Ok(true);
    }
    Ok((0..l.len()).all(|x| {
        series
            .chain
            .windows(2)
            .any(|w| l.leq(w[0], x) && l.leq(x, w[1]))
    }))
}

/// Witnesses for a failed P-property: elements outside every layer.
pub fn p_extension_violations(l: &FiniteLattice) -> Result<Vec<usize>> {
    let series = loewy_series(l)?;
    Ok((0..l.len())
        .filter(|&x| {
            !series
                .chain
                .windows(2)
                .any(|w| l.leq(w[0], x) && l.leq(x, w[1]))
                && series.length() > 0
        })
        .collect())
}

/// All computed invariants and property flags for one lattice.
///
/// Flags that would need a scan beyond the configured cap are `None`
/// ("skipped") rather than failing the whole report.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub cardinality: usize,
    pub bottom: String,
    pub top: String,
    pub atoms: Vec<String>,
    pub coatoms: Vec<String>,
    pub essentials: Option<Vec<String>>,
    pub socle: String,
    pub radical: String,
    pub loewy_series: Vec<String>,
    pub loewy_length: usize,
    pub lattice_length: usize,
    pub layer_sizes: Vec<usize>,
    pub join_irreducibles: Vec<String>,
    pub meet_irreducibles: Vec<String>,
    pub is_chain: bool,
    pub is_distributive: Option<bool>,
    pub is_modular: Option<bool>,
    pub is_boolean: Option<bool>,
    pub is_catenarian: bool,
    pub is_p_extension: bool,
}

fn skippable(r: Result<bool>) -> Result<Option<bool>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(LatticeError::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn analyze(l: &FiniteLattice) -> Result<AnalysisReport> {
    analyze_capped(l, DEFAULT_SCAN_CAP)
}

pub fn analyze_capped(l: &FiniteLattice, cap: usize) -> Result<AnalysisReport> {
    let series = loewy_series(l)?;
    let essentials = match essential_elements(l) {
        Ok(v) => Some(l.names(&v)),
        Err(LatticeError::Degenerate) => None,
        Err(e) => return Err(e),
    };
    let layer_sizes = series
        .chain
        .windows(2)
        .map(|w| {
            (0..l.len())
                .filter(|&x| l.leq(w[0], x) && l.leq(x, w[1]))
                .count()
        })
        .collect();
    Ok(AnalysisReport {
        name: l.name().to_owned(),
        cardinality: l.len(),
        bottom: l.element(l.bottom()).to_owned(),
        top: l.element(l.top()).to_owned(),
        atoms: l.names(&atoms(l)),
        coatoms: l.names(&coatoms(l)),
        essentials,
        socle: l.element(socle(l)).to_owned(),
        radical: l.element(radical(l)).to_owned(),
        loewy_series: l.names(&series.chain),
        loewy_length: series.length(),
        lattice_length: lattice_length(l),
        layer_sizes,
        join_irreducibles: l.names(&join_irreducibles(l)),
        meet_irreducibles: l.names(&meet_irreducibles(l)),
        is_chain: is_chain(l),
        is_distributive: skippable(is_distributive_capped(l, cap))?,
        is_modular: skippable(is_modular_capped(l, cap))?,
        is_boolean: skippable(is_boolean_capped(l, cap))?,
        is_catenarian: is_catenarian(l),
        is_p_extension: is_p_extension(l)?,
    })
}
