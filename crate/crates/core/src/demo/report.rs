use std::fmt;

/// Summary of a demo run, printed as `key=value` lines.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DemoReport {
    pub nx: usize,
    pub ny: usize,
    pub basis: String,
    pub dimension: usize,
    pub iterations: usize,
    pub errors: Vec<(String, f64)>,
}

impl DemoReport {
    pub fn error(&self, name: &str) -> Option<f64> {
        self.errors.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mesh={}x{}", self.nx, self.ny)?;
        writeln!(f, "basis={}", self.basis)?;
        writeln!(f, "dimension={}", self.dimension)?;
        writeln!(f, "iterations={}", self.iterations)?;
        for (name, value) in &self.errors {
            writeln!(f, "{name}={value:e}")?;
        }
        Ok(())
    }
}
