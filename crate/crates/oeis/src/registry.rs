//! Internal sequences registered against OEIS entries, each with its index
//! alignment stated explicitly.

use num_bigint::BigInt;
use trigpoly_core::combinatorics::{a014963, catalan, moebius, pyramidal, totient};
use trigpoly_core::fourier::super_catalan;
use trigpoly_core::CheckReport;

use crate::client::{AId, Client, Transport};
use crate::error::{OeisError, Result};

pub struct Generator {
    pub id: AId,
    pub description: &'static str,
    /// OEIS index matched by the generator's first term.
    pub first_index: i64,
    /// The first `count` terms.
    pub terms: fn(usize) -> Vec<BigInt>,
}

fn pyramidal_row(i: u32, count: usize) -> Vec<BigInt> {
    (0..count as i64).map(|j| pyramidal(i, j)).collect()
}

/// Super Catalan numbers `(2k)!(2n)!/(k! n! (n+k)!)` read by rows `n ≥ 0`, `0 ≤ k ≤ n`.
fn super_catalan_triangle(count: usize) -> Vec<BigInt> {
    (0u64..)
        .flat_map(|n| (0..=n).map(move |k| super_catalan(k, n)))
        .take(count)
        .collect()
}

pub const GENERATORS: &[Generator] = &[
    Generator {
        id: AId(5408),
        description: "pyramidal row i = 1 (odd numbers)",
        first_index: 0,
        terms: |c| pyramidal_row(1, c),
    },
    Generator {
        id: AId(290),
        description: "pyramidal row i = 2 (squares), p_j = a(j+1)",
        first_index: 1,
        terms: |c| pyramidal_row(2, c),
    },
    Generator {
        id: AId(330),
        description: "pyramidal row i = 3 (square pyramidal), p_j = a(j+1)",
        first_index: 1,
        terms: |c| pyramidal_row(3, c),
    },
    Generator {
        id: AId(2415),
        description: "pyramidal row i = 4, p_j = a(j+2)",
        first_index: 2,
        terms: |c| pyramidal_row(4, c),
    },
    Generator {
        id: AId(5585),
        description: "pyramidal row i = 5",
        first_index: 0,
        terms: |c| pyramidal_row(5, c),
    },
    Generator {
        id: AId(14963),
        description: "exp(Λ(n)), the constant terms ψ_d(0)",
        first_index: 1,
        terms: |c| (1..=c as u64).map(|n| BigInt::from(a014963(n))).collect(),
    },
    Generator {
        id: AId(53139),
        description: "φ(d) − μ(d), the pyramidal column guess (no bundled fixture)",
        first_index: 1,
        terms: |c| (1..=c as u64).map(|d| BigInt::from(totient(d) as i64 - moebius(d))).collect(),
    },
    Generator {
        id: AId(182411),
        description: "super Catalan triangle (entries of M) by rows",
        first_index: 0,
        terms: super_catalan_triangle,
    },
    Generator {
        id: AId(108),
        description: "Catalan numbers",
        first_index: 0,
        terms: |c| (0..c as u64).map(catalan).collect(),
    },
];

pub fn generator(id: AId) -> Option<&'static Generator> {
    GENERATORS.iter().find(|g| g.id == id)
}

/// Compares the first `count` generated terms with the OEIS terms starting at
/// the generator's declared index.
pub fn crosscheck<T: Transport>(client: &Client<T>, id: AId, count: usize) -> Result<CheckReport> {
    let gen = generator(id).ok_or_else(|| OeisError::UnknownGenerator(id.to_string()))?;
    let fixture = client.fetch_sequence(id, usize::MAX)?;
    let skip = gen.first_index - fixture.offset;
    let available = if skip < 0 { 0 } else { fixture.terms.len().saturating_sub(skip as usize) };
    if available < count {
        return Err(OeisError::TooFewTerms {
            id: id.to_string(),
            from: gen.first_index,
            needed: count,
            available,
        });
    }
    let ours = (gen.terms)(count);
    for (k, (want, got)) in fixture.terms[skip as usize..].iter().zip(&ours).enumerate() {
        if want != got {
            return Err(OeisError::Mismatch {
                id: id.to_string(),
                index: gen.first_index + k as i64,
                expected: want.to_string(),
                got: got.to_string(),
            });
        }
    }
    Ok(CheckReport::new(format!("{id} vs {}", gen.description), count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let t = |id: u32, c| (generator(AId(id)).unwrap().terms)(c);
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(t(330, 6), ints(&[1, 5, 14, 30, 55, 91]));
        assert_eq!(t(290, 5), ints(&[1, 4, 9, 16, 25]));
        assert_eq!(t(5585, 6), ints(&[1, 7, 27, 77, 182, 378]));
        assert_eq!(t(182411, 6), ints(&[1, 2, 2, 6, 4, 6]));
        assert_eq!(t(53139, 5), ints(&[0, 2, 3, 2, 5]));
    }
}
