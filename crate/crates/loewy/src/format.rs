//! Canonical plain-text lattice format.
//!
//! ```text
//! # optional comments
//! lattice <name>
//! elem <id>
//! ...
//! cover <lower> <upper>
//! ...
//! end
//! ```
//!
//! Identifiers are nonempty ASCII tokens without whitespace. Canonical files
//! (elements in canonical order, covers sorted lexicographically by name
//! pair) round-trip bit-exactly through parse -> write.

use crate::error::{LatticeError, Result};
use crate::lattice::FiniteLattice;

fn syntax(line: usize, message: impl Into<String>) -> LatticeError {
    LatticeError::Syntax {
        line,
        message: message.into(),
    }
}

fn valid_token(t: &str) -> bool {
    !t.is_empty() && t.is_ascii() && !t.contains(char::is_whitespace)
}

/// Parses the text format; structural checks are delegated to
/// [`FiniteLattice::build_from_covers`].
pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    let mut name: Option<String> = None;
    let mut elements: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut ended = false;
    let mut end_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if ended {
            return Err(syntax(lineno, "content after `end`"));
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        match keyword {
            "lattice" => {
                if name.is_some() {
                    return Err(syntax(lineno, "duplicate `lattice` header"));
                }
                if !elements.is_empty() || !covers.is_empty() {
                    return Err(syntax(lineno, "`lattice` header must come first"));
                }
                let n = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected a name after `lattice`"))?;
                if !valid_token(n) {
                    return Err(syntax(lineno, format!("invalid name `{n}`")));
                }
                name = Some(n.to_owned());
            }
            "elem" => {
                if name.is_none() {
                    return Err(syntax(lineno, "`elem` before `lattice` header"));
                }
                let id = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected an identifier after `elem`"))?;
                if !valid_token(id) {
                    return Err(syntax(lineno, format!("invalid identifier `{id}`")));
                }
                elements.push(id.to_owned());
            }
            "cover" => {
                if name.is_none() {
                    return Err(syntax(lineno, "`cover` before `lattice` header"));
                }
                let lo = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected two identifiers after `cover`"))?;
                let hi = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected two identifiers after `cover`"))?;
                if !valid_token(lo) || !valid_token(hi) {
                    return Err(syntax(lineno, "invalid identifier in `cover`"));
                }
                covers.push((lo.to_owned(), hi.to_owned()));
            }
            "end" => {
                ended = true;
                end_line = lineno;
            }
            other => {
                return Err(syntax(
                    lineno,
                    format!("expected `lattice`, `elem`, `cover` or `end`, got `{other}`"),
                ));
            }
        }
        if let Some(extra) = tokens.next() {
            return Err(syntax(lineno, format!("unexpected trailing token `{extra}`")));
        }
    }

    let name = name.ok_or_else(|| syntax(1, "missing `lattice` header"))?;
    if !ended {
        return Err(syntax(text.lines().count().max(1), "missing `end`"));
    }
    if elements.is_empty() {
        return Err(syntax(end_line, "lattice has no elements"));
    }
    FiniteLattice::build_from_covers(&name, &elements, &covers)
}

/// Emits the canonical file: elements in canonical order, covers sorted
/// lexicographically by (lower, upper) name.
pub fn write_lattice(l: &FiniteLattice) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice {}\n", l.name()));
    for e in l.elements() {
        out.push_str(&format!("elem {e}\n"));
    }
    let mut covers: Vec<(&str, &str)> = l
        .covers()
        .iter()
        .map(|&(a, b)| (l.element(a), l.element(b)))
        .collect();
    covers.sort_unstable();
    for (a, b) in covers {
        out.push_str(&format!("cover {a} {b}\n"));
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    const EX8_81: &str = "\
lattice ex8_81
elem R
elem R1
elem R2
elem R1R2
elem R3
elem S
cover R R1
cover R R2
cover R1 R1R2
cover R1R2 S
cover R2 R1R2
cover R2 R3
cover R3 S
end
";

    #[test]
    fn parses_example_file() {
        let l = parse_lattice(EX8_81).unwrap();
        assert_eq!(l, families::paper_example("ex8_81").unwrap());
    }

    #[test]
    fn canonical_round_trip_is_bit_exact() {
        for l in crate::suites::fixtures() {
            let text = write_lattice(&l);
            let back = parse_lattice(&text).unwrap();
            assert_eq!(back, l, "{}", l.name());
            assert_eq!(write_lattice(&back), text, "{}", l.name());
        }
        assert_eq!(write_lattice(&parse_lattice(EX8_81).unwrap()), EX8_81);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a comment\n\nlattice c\n# another\nelem x\nend\n";
        let l = parse_lattice(text).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_lattice("lattice a\nelem x\nwat x\nend\n").unwrap_err();
        assert_eq!(
            err,
            LatticeError::Syntax {
                line: 3,
                message: "expected `lattice`, `elem`, `cover` or `end`, got `wat`".into()
            }
        );
        assert!(matches!(parse_lattice(""), Err(LatticeError::Syntax { .. })));
        assert!(matches!(
            parse_lattice("lattice a\nend\n"),
            Err(LatticeError::Syntax { .. })
        ));
        assert!(matches!(
            parse_lattice("lattice a\nelem x\n"),
            Err(LatticeError::Syntax { .. })
        ));
        assert!(matches!(
            parse_lattice("lattice a\nelem x\nend\nelem y\n"),
            Err(LatticeError::Syntax { .. })
        ));
    }

    #[test]
    fn structural_errors_come_from_the_builder() {
        let err = parse_lattice("lattice a\nelem x\nelem x\nend\n").unwrap_err();
        assert_eq!(err, LatticeError::DuplicateElement("x".into()));
        let err = parse_lattice("lattice a\nelem x\nelem y\ncover x z\nend\n").unwrap_err();
        assert_eq!(err, LatticeError::UnknownElement("z".into()));
    }
}
