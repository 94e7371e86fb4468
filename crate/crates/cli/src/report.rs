use std::io::{self, Write};

/// Output of one command: machine-readable `key=value` fields plus the
/// human-readable lines built from the same values.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, String)>,
    human: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.human.push(text.into());
        self
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn write(&self, porcelain: bool, out: &mut dyn Write) -> io::Result<()> {
        if porcelain {
            for (k, v) in &self.fields {
                writeln!(out, "{k}={v}")?;
            }
        } else {
            for l in &self.human {
                writeln!(out, "{l}")?;
            }
        }
        Ok(())
    }
}
