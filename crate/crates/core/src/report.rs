use std::fmt;

/// Outcome of a verification suite: failures are collected, not raised.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.checked += 1;
        self.failures.push(what.into());
    }

    pub fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(
            other
                .failures
                .into_iter()
                .map(|f| format!("{}: {f}", other.name)),
        );
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} ({} checks, {} failures)",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for x in &self.failures {
            writeln!(f, "  failed: {x}")?;
        }
        Ok(())
    }
}
