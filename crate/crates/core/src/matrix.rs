//! Dense tropical vectors and matrices.
//!
//! Storage is dense and immutable after construction; target sizes are small
//! (the characteristic-polynomial enumeration dominates long before storage
//! does). Indices are 0-based in the API and 1-based in user-facing output.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::semiring::Scalar;

/// A column vector over ℝ_max, length ≥ 1.
///
/// A vector is "nonzero" when at least one entry is finite, and "scaled"
/// when its max-norm is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropVector {
    entries: Vec<Scalar>,
}

impl TropVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch("vector must have at least one entry".into()));
        }
        Ok(TropVector { entries })
    }

    /// Unit vector e_i: 0 at `index`, ε elsewhere.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(Error::DimensionMismatch(format!(
                "unit index {index} out of range for length {len}"
            )));
        }
        let mut entries = vec![Scalar::Epsilon; len];
        entries[index] = Scalar::from_int(0);
        TropVector::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entry(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// True when at least one entry is finite.
    pub fn is_nonzero(&self) -> bool {
        self.entries.iter().any(Scalar::is_finite)
    }

    /// Indices of the finite entries.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_finite())
            .map(|(i, _)| i)
            .collect()
    }

    /// Max-norm ‖x‖ = max_i x_i of a nonzero vector.
    pub fn max_norm(&self) -> Result<Scalar> {
        let max = self.entries.iter().max().expect("nonempty");
        if max.is_epsilon() {
            return Err(Error::ZeroVector);
        }
        Ok(max.clone())
    }

    /// x^T ⊗ x = 2‖x‖; ε for the zero vector.
    pub fn self_inner(&self) -> Scalar {
        self.entries.iter().max().expect("nonempty").tpow(2)
    }

    /// The scaled form (‖x‖)^⊗-1 ⊗ x, whose max-norm is 0. Idempotent.
    pub fn scale(&self) -> Result<TropVector> {
        let norm = self.max_norm()?;
        let inv = norm.tinv().expect("norm is finite");
        Ok(self.scalar_mul(&inv))
    }

    /// c ⊗ x entrywise.
    pub fn scalar_mul(&self, c: &Scalar) -> TropVector {
        TropVector {
            entries: self.entries.iter().map(|e| c.tmul(e)).collect(),
        }
    }

    /// Entrywise maximum.
    pub fn tadd(&self, other: &TropVector) -> Result<TropVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {} differ",
                self.len(),
                other.len()
            )));
        }
        Ok(TropVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.tadd(b))
                .collect(),
        })
    }

    /// Parses a comma-separated list of scalar tokens.
    pub fn parse_tokens(s: &str) -> Result<TropVector> {
        let entries = s
            .split(',')
            .map(|t| t.parse::<Scalar>())
            .collect::<Result<Vec<_>>>()?;
        TropVector::new(entries)
    }

    /// The n×1 column matrix with the same entries.
    pub fn to_column(&self) -> TropMatrix {
        TropMatrix {
            rows: self.len(),
            cols: 1,
            data: self.entries.clone(),
        }
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense matrix over ℝ_max, dimensions fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl TropMatrix {
    /// Builds a matrix from its rows; they must be nonempty and rectangular.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::DimensionMismatch("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("matrix rows have unequal lengths".into()));
        }
        let n = rows.len();
        Ok(TropMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses every token of a rectangular token grid.
    pub fn from_tokens(rows: &[Vec<&str>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|t| t.parse::<Scalar>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        TropMatrix::from_rows(parsed)
    }

    /// Tropical identity: 0 on the diagonal, ε elsewhere.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix must be nonempty".into()));
        }
        let mut m = TropMatrix {
            rows: n,
            cols: n,
            data: vec![Scalar::Epsilon; n * n],
        };
        for i in 0..n {
            m.data[i * n + i] = Scalar::from_int(0);
        }
        Ok(m)
    }

    pub fn filled(rows: usize, cols: usize, value: Scalar) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix must be nonempty".into()));
        }
        Ok(TropMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "operation needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.entry(i, j).clone());
            }
        }
        TropMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Tropical matrix product C = A ⊗ B with C_ij = max_k (A_ik + B_kj).
    pub fn matmul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::Epsilon;
                for k in 0..self.cols {
                    let term = self.entry(i, k).tmul(other.entry(k, j));
                    acc = acc.tadd(&term);
                }
                data.push(acc);
            }
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Entrywise maximum A ⊕ B.
    pub fn tadd(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.tadd(b))
                .collect(),
        })
    }

    /// c ⊗ A entrywise.
    pub fn scalar_mul(&self, c: &Scalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| c.tmul(e)).collect(),
        }
    }

    /// A ⊗ x for a column vector x.
    pub fn apply(&self, x: &TropVector) -> Result<TropVector> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut entries = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Scalar::Epsilon;
            for k in 0..self.cols {
                acc = acc.tadd(&self.entry(i, k).tmul(x.entry(k)));
            }
            entries.push(acc);
        }
        TropVector::new(entries)
    }

    /// The quadratic form x^T ⊗ A ⊗ x = max_{i,j} x_i + a_ij + x_j; ε when no
    /// term is finite (in particular for the zero vector).
    pub fn quadratic_form(&self, x: &TropVector) -> Result<Scalar> {
        self.require_square()?;
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} does not match matrix size {}",
                x.len(),
                self.rows
            )));
        }
        let support = x.support();
        let mut acc = Scalar::Epsilon;
        for &i in &support {
            for &j in &support {
                let term = x.entry(i).tmul(self.entry(i, j)).tmul(x.entry(j));
                acc = acc.tadd(&term);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

// Textual ingestion and emission. JSON carries {"n": rows, "m": cols,
// "rows": [[token, ...], ...]}; CSV is one row per line. A scalar token is a
// number, a string "p/q" / decimal / "-inf", or (in JSON) null for ε.
// Emission always uses canonical string tokens so output re-ingests
// bit-exactly.
impl TropMatrix {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("matrix JSON must be an object".into()))?;
        let n = json_dim(obj.get("n"), "n")?;
        let m = json_dim(obj.get("m"), "m")?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("matrix JSON needs a \"rows\" array".into()))?;
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "declared n = {n} but \"rows\" has {} rows",
                rows.len()
            )));
        }
        let mut parsed = Vec::with_capacity(n);
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse("each matrix row must be an array".into()))?;
            if cells.len() != m {
                return Err(Error::Parse(format!(
                    "declared m = {m} but a row has {} entries",
                    cells.len()
                )));
            }
            parsed.push(cells.iter().map(scalar_from_json).collect::<Result<Vec<_>>>()?);
        }
        TropMatrix::from_rows(parsed)
    }

    pub fn to_json_string(&self) -> String {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|s| s.to_string()).collect())
            .collect();
        json!({
            "n": self.rows,
            "m": self.cols,
            "rows": rows,
        })
        .to_string()
    }

    pub fn from_csv_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|t| t.parse::<Scalar>())
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        TropMatrix::from_rows(rows)
    }

    pub fn to_csv_string(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }
}

fn json_dim(v: Option<&Value>, name: &str) -> Result<usize> {
    v.and_then(Value::as_u64)
        .map(|d| d as usize)
        .ok_or_else(|| Error::Parse(format!("matrix JSON needs an integer \"{name}\"")))
}

fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::Null => Ok(Scalar::Epsilon),
        Value::String(s) => s.parse(),
        // serde_json's arbitrary_precision keeps the literal digits, so
        // decimals convert exactly instead of through f64.
        Value::Number(n) => n.to_string().parse(),
        other => Err(Error::Parse(format!("invalid scalar token {other}"))),
    }
}
