use std::io::{Read, Write};

use super::{RadialGrid, RadialSolution, TodaError};

impl RadialSolution {
    /// Writes the solution as CSV with header `r,w0,…,wn` and values
    /// printed to 17 significant digits (lossless for f64).
    pub fn to_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        let mut header = vec!["r".to_string()];
        for i in 0..=self.rank() {
            header.push(format!("w{i}"));
        }
        writer.write_record(&header)?;
        for (j, &r) in self.grid().nodes().iter().enumerate() {
            let mut record = vec![format!("{r:.16e}")];
            for row in self.values() {
                record.push(format!("{:.16e}", row[j]));
            }
            writer.write_record(&record)?;
        }
        writer.flush()
    }

    /// Strict reader for the CSV schema written by
    /// [`RadialSolution::to_csv`]. The header must be exactly
    /// `r,w0,…,wn`, every field must parse as a finite float, radii must
    /// be positive and strictly increasing, and the antisymmetry
    /// invariant `w_i + w_{n-i} = 0` must hold to 1e-10. The boundary
    /// data `m` is not part of the schema and comes back as `None`.
    pub fn from_csv<R: Read>(input: R) -> Result<Self, TodaError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(false)
            .from_reader(input);
        let header = reader
            .headers()
            .map_err(|e| TodaError::Csv(e.to_string()))?;
        if header.len() < 2 || &header[0] != "r" {
            return Err(TodaError::Csv(format!(
                "header must start with 'r,w0,…', got {header:?}"
            )));
        }
        let n = header.len() - 2;
        for i in 0..=n {
            if &header[i + 1] != format!("w{i}").as_str() {
                return Err(TodaError::Csv(format!(
                    "column {} must be named w{i}",
                    i + 1
                )));
            }
        }
        let mut nodes: Vec<f64> = Vec::new();
        let mut w = vec![Vec::new(); n + 1];
        for record in reader.records() {
            let record = record.map_err(|e| TodaError::Csv(e.to_string()))?;
            if record.len() != n + 2 {
                return Err(TodaError::Csv(format!(
                    "row {} has {} fields, expected {}",
                    nodes.len() + 1,
                    record.len(),
                    n + 2
                )));
            }
            let parse = |field: &str| -> Result<f64, TodaError> {
                let value: f64 = field
                    .trim()
                    .parse()
                    .map_err(|_| TodaError::Csv(format!("bad float {field:?}")))?;
                if !value.is_finite() {
                    return Err(TodaError::Csv(format!("non-finite value {field:?}")));
                }
                Ok(value)
            };
            nodes.push(parse(&record[0])?);
            for i in 0..=n {
                w[i].push(parse(&record[i + 1])?);
            }
        }
        let grid = RadialGrid::from_nodes(nodes)?;
        RadialSolution::new(n, grid, w, None)
    }
}
