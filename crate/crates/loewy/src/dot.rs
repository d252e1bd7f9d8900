//! DOT export of the cover relation, drawn bottom-up with height-based ranks.
//!
//! Loewy-series membership is shown by node styling (double border) and a
//! highlighted chain, not by ranks: elements of a non-P lattice may sit in no
//! layer interval, but every element has a height.

use crate::analysis;
use crate::error::Result;
use crate::lattice::FiniteLattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(l: &FiniteLattice, with_loewy: bool) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", quote(l.name())));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");

    let series = if with_loewy {
        analysis::loewy_series(l)?.chain
    } else {
        Vec::new()
    };

    for (i, e) in l.elements().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{} (h={})\"", e.replace('"', "\\\""), l.height(i))];
        if with_loewy && series.contains(&i) {
            attrs.push("peripheries=2".to_owned());
        }
        out.push_str(&format!("  {} [{}];\n", quote(e), attrs.join(", ")));
    }

    let max_h = l.height(l.top());
    for h in 0..=max_h {
        let level: Vec<usize> = (0..l.len()).filter(|&i| l.height(i) == h).collect();
        let names: Vec<String> = level.iter().map(|&i| quote(l.element(i))).collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", names.join("; ")));
    }

    for &(a, b) in l.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(l.element(a)), quote(l.element(b))));
    }

    if with_loewy {
        for w in series.windows(2) {
            out.push_str(&format!(
                "  {} -> {} [style=bold, color=red, constraint=false];\n",
                quote(l.element(w[0])),
                quote(l.element(w[1]))
            ));
        }
    }

    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn chain_has_expected_edges() {
        let dot = export_dot(&families::chain(2).unwrap(), false).unwrap();
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("rankdir=BT"));
    }

    #[test]
    fn loewy_styling_marks_series_nodes() {
        let l = families::divisor_lattice(12).unwrap();
        let dot = export_dot(&l, true).unwrap();
        for marked in ["\"1\" [label=\"1 (h=0)\", peripheries=2]",
                       "\"6\" [label=\"6 (h=2)\", peripheries=2]",
                       "\"12\" [label=\"12 (h=3)\", peripheries=2]"] {
            assert!(dot.contains(marked), "missing {marked} in:\n{dot}");
        }
        assert!(!dot.contains("\"4\" [label=\"4 (h=2)\", peripheries=2]"));
        // highlighted chain edges, even where not covers
        assert!(dot.contains("\"1\" -> \"6\" [style=bold"));
        assert!(dot.contains("\"6\" -> \"12\" [style=bold"));
    }

    #[test]
    fn deterministic_output() {
        let l = families::paper_example("ex8_81").unwrap();
        assert_eq!(export_dot(&l, true).unwrap(), export_dot(&l, true).unwrap());
    }
}
