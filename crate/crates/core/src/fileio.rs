//! The matroid file format.
//!
//! ```text
//! matroid U_2_4
//! elements a b c d
//! bases ab ac ad bc bd cd
//! ```
//!
//! or, for GF(2) representations (with optional relaxed sets):
//!
//! ```text
//! matroid D4
//! elements e1 e2 e3 e4 e5 e6 e7 e8
//! gf2 4 8
//! 10001011
//! ...
//! relax e2e3e4e5
//! ```
//!
//! Basis and relax words are concatenations of element labels. Emission is
//! canonical: basis words sorted, one section per line; `#` lines and blank
//! lines are ignored on input.

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;
use crate::ground::{GroundSet, Subset};
use crate::matroid::Matroid;
use crate::relaxed::RelaxedBinaryMatroid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidValue {
    Explicit(Matroid),
    Lazy(RelaxedBinaryMatroid),
}

impl MatroidValue {
    pub fn size(&self) -> usize {
        match self {
            MatroidValue::Explicit(m) => m.size(),
            MatroidValue::Lazy(l) => l.size(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        match self {
            MatroidValue::Explicit(m) => m.ground(),
            MatroidValue::Lazy(l) => l.base().ground(),
        }
    }

    /// Explicit view, materializing a lazy value when it fits.
    pub fn explicit(&self) -> Result<Matroid> {
        match self {
            MatroidValue::Explicit(m) => Ok(m.clone()),
            MatroidValue::Lazy(l) => l.materialize(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidFile {
    pub name: String,
    pub value: MatroidValue,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<MatroidFile> {
    // meaningful lines with their 1-based numbers
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut it = lines.into_iter();

    let (ln, header) = it.next().ok_or_else(|| syntax(0, "empty file"))?;
    let name = header
        .strip_prefix("matroid")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| syntax(ln, "expected `matroid <name>`"))?
        .to_string();
    if name.split_whitespace().count() != 1 {
        return Err(syntax(ln, "matroid name must be a single token"));
    }

    let (ln, elems) = it
        .next()
        .ok_or_else(|| syntax(ln, "expected `elements <labels…>`"))?;
    let labels = elems
        .strip_prefix("elements")
        .ok_or_else(|| syntax(ln, "expected `elements <labels…>`"))?;
    let ground = GroundSet::new(labels.split_whitespace().collect::<Vec<_>>())
        .map_err(|e| syntax(ln, e.to_string()))?;

    let (ln, body) = it
        .next()
        .ok_or_else(|| syntax(ln, "expected `bases …` or `gf2 <r> <n>`"))?;
    if let Some(words) = body.strip_prefix("bases") {
        if it.next().is_some() {
            return Err(syntax(ln + 1, "unexpected content after `bases`"));
        }
        let mut bases = Vec::new();
        for w in words.split_whitespace() {
            bases.push(parse_word_at(&ground, w, ln)?);
        }
        let m = Matroid::validate(ground, bases)
            .map_err(|e| Error::ValidationError(e.to_string()))?;
        return Ok(MatroidFile {
            name,
            value: MatroidValue::Explicit(m),
        });
    }
    let dims = body
        .strip_prefix("gf2")
        .ok_or_else(|| syntax(ln, "expected `bases …` or `gf2 <r> <n>`"))?;
    let dims: Vec<&str> = dims.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(syntax(ln, "expected `gf2 <rows> <cols>`"));
    }
    let rows: usize = dims[0].parse().map_err(|_| syntax(ln, "bad row count"))?;
    let cols: usize = dims[1].parse().map_err(|_| syntax(ln, "bad column count"))?;
    if cols != ground.len() {
        return Err(syntax(ln, "column count does not match the element list"));
    }
    let mut row_entries: Vec<Vec<u8>> = Vec::with_capacity(rows);
    let mut last_ln = ln;
    for _ in 0..rows {
        let (ln, row) = it
            .next()
            .ok_or_else(|| syntax(last_ln, "missing matrix row"))?;
        last_ln = ln;
        let digits: Vec<u8> = row
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(syntax(ln, format!("bad matrix character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        if digits.len() != cols {
            return Err(syntax(ln, "matrix row has the wrong length"));
        }
        row_entries.push(digits);
    }
    let base = BinaryMatrix::from_rows(ground.clone(), &row_entries)
        .map_err(|e| Error::ValidationError(e.to_string()))?;
    let mut relaxed: Vec<Subset> = Vec::new();
    for (ln, line) in it {
        let word = line
            .strip_prefix("relax")
            .map(str::trim)
            .ok_or_else(|| syntax(ln, "expected `relax <word>`"))?;
        relaxed.push(parse_word_at(&ground, word, ln)?);
    }
    let lazy = RelaxedBinaryMatroid::new(base, relaxed)
        .map_err(|e| Error::ValidationError(e.to_string()))?;
    Ok(MatroidFile {
        name,
        value: MatroidValue::Lazy(lazy),
    })
}

fn parse_word_at(ground: &GroundSet, word: &str, line: usize) -> Result<Subset> {
    ground.parse_word(word).map_err(|e| match e {
        Error::SyntaxError { msg, .. } => Error::SyntaxError { line, msg },
        other => syntax(line, other.to_string()),
    })
}

pub fn emit(file: &MatroidFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("matroid {}\n", file.name));
    let ground = file.value.ground();
    out.push_str(&format!("elements {}\n", ground.labels().join(" ")));
    match &file.value {
        MatroidValue::Explicit(m) => {
            let words: Vec<String> = m.bases().iter().map(|&b| ground.word(b)).collect();
            out.push_str(&format!("bases {}\n", words.join(" ")));
        }
        MatroidValue::Lazy(l) => {
            let base = l.base();
            out.push_str(&format!("gf2 {} {}\n", base.rows(), base.cols()));
            for i in 0..base.rows() {
                let row: String = (0..base.cols())
                    .map(|j| if base.get(i, j) == 1 { '1' } else { '0' })
                    .collect();
                out.push_str(&row);
                out.push('\n');
            }
            for &x in l.relaxed_sets() {
                out.push_str(&format!("relax {}\n", ground.word(x)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn parse_u24() {
        let text = "matroid U_2_4\nelements a b c d\nbases ab ac ad bc bd cd\n";
        let f = parse(text).unwrap();
        assert_eq!(f.name, "U_2_4");
        match &f.value {
            MatroidValue::Explicit(m) => assert_eq!(m.as_uniform(), Some((2, 4))),
            _ => panic!("expected explicit"),
        }
        // emission is canonical (words ordered by subset value) and stable
        let canonical = emit(&f);
        assert_eq!(
            canonical,
            "matroid U_2_4\nelements a b c d\nbases ab ac bc ad bd cd\n"
        );
        assert_eq!(parse(&canonical).unwrap(), f);
        assert_eq!(emit(&parse(&canonical).unwrap()), canonical);
    }

    #[test]
    fn parse_gf2_spike_with_relaxations() {
        let f = MatroidFile {
            name: "D4".to_string(),
            value: MatroidValue::Lazy(catalog::doubly_relaxed_spike(4).unwrap()),
        };
        let text = emit(&f);
        let back = parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert!(matches!(
            parse("matroid x\nelements a b\nbases az\n"),
            Err(Error::SyntaxError { line: 3, .. })
        ));
        assert!(matches!(
            parse("nonsense\n"),
            Err(Error::SyntaxError { line: 1, .. })
        ));
        assert!(matches!(
            parse("matroid x\nelements a b c d\ngf2 2\n"),
            Err(Error::SyntaxError { line: 3, .. })
        ));
    }

    #[test]
    fn axiom_failures_are_validation_errors() {
        let text = "matroid bad\nelements a b c d\nbases ab cd\n";
        assert!(matches!(parse(text), Err(Error::ValidationError(_))));
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# header\nmatroid U_1_2\n\nelements a b\n# middle\nbases a b\n";
        let f = parse(text).unwrap();
        assert_eq!(f.value.explicit().unwrap().as_uniform(), Some((1, 2)));
    }

    #[test]
    fn canonical_round_trip_for_catalog() {
        for name in ["MK4", "W3", "Q6", "P6", "R6", "K", "F7", "M4"] {
            let m = catalog::named(name).unwrap();
            let f = MatroidFile {
                name: name.to_string(),
                value: MatroidValue::Explicit(m),
            };
            let text = emit(&f);
            let back = parse(&text).unwrap();
            assert_eq!(back, f, "{name}");
        }
    }
}
