//! The OEIS b-file format: one `index value` pair per line, `#` comments.

use num_bigint::BigInt;

use crate::error::{OeisError, Result};

/// Parses a b-file into its offset and terms. Indices must be consecutive.
pub fn parse(text: &str) -> Result<(i64, Vec<BigInt>)> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| OeisError::Parse { line: line_no, message };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected \"index value\", got {line:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
        let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
        let start = *offset.get_or_insert(idx);
        let want = start + terms.len() as i64;
        if idx != want {
            return Err(err(format!("index {idx} out of sequence, expected {want}")));
        }
        terms.push(val);
    }
    if terms.is_empty() {
        return Err(OeisError::Parse {
            line: 0,
            message: "no terms".into(),
        });
    }
    Ok((offset.unwrap(), terms))
}

/// Writes terms back in canonical b-file form.
pub fn render(offset: i64, terms: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        out.push_str(&format!("{} {}\n", offset + i as i64, t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn comments_and_blank_lines() {
        let (off, t) = parse("# A000108\n\n0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(off, 0);
        assert_eq!(t, vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, OeisError::Parse { line: 2, .. }), "{e}");
        let e = parse("0 1\n2 5\n").unwrap_err();
        assert!(matches!(e, OeisError::Parse { line: 2, .. }));
        let e = parse("# nothing\n").unwrap_err();
        assert!(matches!(e, OeisError::Parse { line: 0, .. }));
        assert!(parse("1 2 3\n").is_err());
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(offset in -5i64..5, vals in prop::collection::vec(any::<i64>(), 1..40)) {
            let terms: Vec<BigInt> = vals.into_iter().map(BigInt::from).collect();
            let text = render(offset, &terms);
            prop_assert_eq!(parse(&text).unwrap(), (offset, terms));
        }
    }
}
