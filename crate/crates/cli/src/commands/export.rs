use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use qgf_core::{to_matrix, Convention, GateId, PermutationMatrix};
use serde_json::{json, Value};

use crate::args::{Format, Global};
use crate::envelope::Report;
use crate::error::{CliError, EXIT_OK};
use crate::register;

pub fn run(
    global: &Global,
    gate: &GateId,
    convention: Convention,
    format: Format,
    output: Option<&Path>,
) -> Result<Report, CliError> {
    let d = register::require_d(global)?;
    let n = register::width(global, d, [gate]);
    let system = register::system(global, d, n)?;
    let perm = gate.realize(&system)?;
    let matrix = to_matrix(&perm, convention);

    let (text, written) = match output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::io(format!("cannot create {}", path.display()), e))?;
            let mut w = BufWriter::new(file);
            write_matrix(&matrix, format, &mut w)
                .and_then(|()| w.flush())
                .map_err(|e| CliError::io(format!("cannot write {}", path.display()), e))?;
            eprintln!("wrote {} matrix to {}", format.as_str(), path.display());
            (String::new(), Value::Null)
        }
        None => {
            let mut buf = Vec::new();
            write_matrix(&matrix, format, &mut buf).expect("in-memory write");
            let text = String::from_utf8(buf).expect("ascii csv");
            (text.clone(), Value::String(text))
        }
    };

    Ok(Report {
        inputs: json!({
            "gate": gate.to_string(),
            "d": d,
            "n": n,
            "convention": convention.as_str(),
            "format": format.as_str(),
            "output": output.map(|p| p.display().to_string()),
            "point_ceiling": global.point_ceiling,
        }),
        result: json!({
            "points": system.point_count(),
            "nonzeros": perm.degree(),
            "determinant": matrix.determinant_sign().as_i8(),
            "matrix": written,
        }),
        text,
        exit: EXIT_OK,
    })
}

/// Dense rows of `0`/`1`, or sparse `row,col` pairs sorted by row.
pub fn write_matrix(
    matrix: &PermutationMatrix<'_>,
    format: Format,
    w: impl Write,
) -> io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    let size = matrix.degree();
    match format {
        Format::Dense => {
            let mut row = vec!["0"; size];
            for r in 0..size {
                for (c, cell) in row.iter_mut().enumerate() {
                    *cell = if matrix.entry(r, c) == 1 { "1" } else { "0" };
                }
                csv.write_record(&row)?;
            }
        }
        Format::Sparse => {
            for (r, c) in matrix.nonzeros() {
                csv.write_record([r.to_string(), c.to_string()])?;
            }
        }
    }
    csv.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgf_core::cnot1;

    #[test]
    fn qubit_cnot_sparse() {
        let p = cnot1(2).unwrap();
        let mut out = Vec::new();
        write_matrix(
            &to_matrix(&p, Convention::ColumnIsInput),
            Format::Sparse,
            &mut out,
        )
        .unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0,0\n1,1\n2,3\n3,2\n");
    }

    #[test]
    fn qubit_cnot_dense() {
        let p = cnot1(2).unwrap();
        let mut out = Vec::new();
        write_matrix(
            &to_matrix(&p, Convention::RowIsInput),
            Format::Dense,
            &mut out,
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "1,0,0,0\n0,1,0,0\n0,0,0,1\n0,0,1,0\n"
        );
    }
}
