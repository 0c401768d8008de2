use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::HarnessError;

/// Hex SHA-256 of a header line.
pub fn schema_checksum(header: &str) -> String {
    hex::encode(Sha256::digest(header.as_bytes()))
}

/// A CSV table whose files start with `# schema-sha256=<checksum>` and then the header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvTable {
    pub header: String,
    pub rows: Vec<String>,
}

impl CsvTable {
    pub fn new(header: &str) -> Self {
        CsvTable {
            header: header.to_string(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: String) {
        self.rows.push(row);
    }

    fn preamble(&self) -> String {
        format!(
            "# schema-sha256={}\n{}\n",
            schema_checksum(&self.header),
            self.header
        )
    }

    pub fn render(&self) -> String {
        let mut s = self.preamble();
        for r in &self.rows {
            s.push_str(r);
            s.push('\n');
        }
        s
    }

    pub fn write(&self, path: &Path) -> Result<(), HarnessError> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, self.render())?;
        Ok(())
    }

    /// Appends rows to `path`, creating it if needed; an existing file must carry the same schema.
    pub fn append_to(&self, path: &Path) -> Result<(), HarnessError> {
        if !path.exists() {
            return self.write(path);
        }
        let mut lines = BufReader::new(std::fs::File::open(path)?).lines();
        let first = lines.next().transpose()?.unwrap_or_default();
        let second = lines.next().transpose()?.unwrap_or_default();
        let expected = format!("# schema-sha256={}", schema_checksum(&self.header));
        if first != expected || second != self.header {
            return Err(HarnessError::Schema(format!(
                "{} has a different header",
                path.display()
            )));
        }
        let mut f = std::fs::OpenOptions::new().append(true).open(path)?;
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }

    /// Parses a file written by [`CsvTable::render`], verifying the checksum.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut lines = text.lines();
        let first = lines.next().unwrap_or_default();
        let header = lines.next().unwrap_or_default();
        let sum = first
            .strip_prefix("# schema-sha256=")
            .ok_or_else(|| HarnessError::Schema("missing checksum line".into()))?;
        if sum != schema_checksum(header) {
            return Err(HarnessError::Schema(
                "checksum does not match header".into(),
            ));
        }
        Ok(CsvTable {
            header: header.to_string(),
            rows: lines.map(str::to_string).collect(),
        })
    }
}
