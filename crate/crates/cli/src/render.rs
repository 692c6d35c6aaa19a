//! Table output in the three supported formats.

use serde_json::{json, Value};
use trigpoly_core::exact::{IntPoly, Integer, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

pub struct Grid<'a> {
    pub name: &'a str,
    pub matrix: &'a Matrix<Integer>,
    /// Leave zero entries blank in plain output.
    pub blank_zeros: bool,
}

pub fn grid(g: &Grid, format: Format) -> String {
    let m = g.matrix;
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(Integer::to_string).collect()).collect();
    match format {
        Format::Plain => {
            let width: Vec<usize> = (0..m.cols())
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for (i, row) in cells.iter().enumerate() {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        let c = if g.blank_zeros && m.get(i, j) == &Integer::from(0) { "" } else { c };
                        format!("{c:>w$}", w = width[j])
                    })
                    .collect();
                out.push_str(line.join(" ").trim_end());
                out.push('\n');
            }
            out
        }
        Format::Csv => cells.iter().map(|r| r.join(",") + "\n").collect(),
        Format::Json => {
            let v = json!({ "object": g.name, "rows": m.rows(), "cols": m.cols(), "entries": cells });
            serde_json::to_string(&v).unwrap() + "\n"
        }
    }
}

fn coeffs_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

const SUBSCRIPT: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

pub fn subscript(n: u64) -> String {
    n.to_string().bytes().map(|b| SUBSCRIPT[(b - b'0') as usize]).collect()
}

/// Rows `(d, Φ_d, ψ_d)`.
pub fn phi_table(rows: &[(u64, &IntPoly, Option<&IntPoly>)], format: Format) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|(d, phi, psi)| match psi {
                Some(psi) => format!("Φ{} = ({psi})^2\n", subscript(*d)),
                None => format!("Φ{} = {phi}\n", subscript(*d)),
            })
            .collect(),
        Format::Csv => rows
            .iter()
            .map(|(d, phi, psi)| {
                let join = |p: &IntPoly| p.coeffs().iter().map(Integer::to_string).collect::<Vec<_>>().join(" ");
                format!("{d},{},{}\n", join(phi), psi.map(join).unwrap_or_default())
            })
            .collect(),
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(d, phi, psi)| json!({ "d": d, "phi": coeffs_json(phi), "psi": psi.map(coeffs_json) }))
                .collect();
            serde_json::to_string(&json!({ "object": "phi-table", "entries": entries })).unwrap() + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_blanks_zeros_and_right_aligns() {
        let m = Matrix::from_rows(vec![
            vec![Integer::from(1), Integer::from(0), Integer::from(-1)],
            vec![Integer::from(0), Integer::from(10), Integer::from(0)],
        ]);
        let g = Grid { name: "x", matrix: &m, blank_zeros: true };
        assert_eq!(grid(&g, Format::Plain), "1    -1\n  10\n");
        assert_eq!(grid(&g, Format::Csv), "1,0,-1\n0,10,0\n");
    }

    #[test]
    fn subscripts() {
        assert_eq!(subscript(16), "₁₆");
    }
}
