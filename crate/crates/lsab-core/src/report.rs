//! Verdicts of identity checks, with every violating index tuple listed.

use std::fmt;

use crate::scalar::Scalar;

/// One violating index tuple together with the exact residual at that tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Basis indices at which the identity fails.
    pub indices: Vec<usize>,
    /// LHS minus RHS, as a coordinate vector (or a flattened matrix/tensor).
    pub residual: Vec<Scalar>,
    /// Which sub-identity failed, for aggregate checks.
    pub note: Option<String>,
}

/// Outcome of a single identity check. The verdict is `pass` exactly when the
/// violation list is empty; `notes` carry informational findings that do not
/// affect the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(identity: impl Into<String>) -> Self {
        CheckReport {
            identity: identity.into(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation unless the residual is exactly zero.
    pub fn check_zero(&mut self, indices: &[usize], residual: Vec<Scalar>) {
        if !residual.iter().all(Scalar::is_zero) {
            self.violations.push(Violation {
                indices: indices.to_vec(),
                residual,
                note: None,
            });
        }
    }

    /// Like `check_zero`, tagging the violation with a sub-identity label.
    pub fn check_zero_noted(&mut self, note: &str, indices: &[usize], residual: Vec<Scalar>) {
        if !residual.iter().all(Scalar::is_zero) {
            self.violations.push(Violation {
                indices: indices.to_vec(),
                residual,
                note: Some(note.to_owned()),
            });
        }
    }

    pub fn push_violation(&mut self, v: Violation) {
        self.violations.push(v);
    }

    /// Records a named failure that has no meaningful index tuple.
    pub fn fail_note(&mut self, note: &str) {
        self.violations.push(Violation {
            indices: Vec::new(),
            residual: Vec::new(),
            note: Some(note.to_owned()),
        });
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Absorbs a sub-check, tagging its violations with its identity.
    pub fn absorb(&mut self, sub: CheckReport) {
        for mut v in sub.violations {
            v.note = Some(match v.note {
                Some(n) => format!("{}: {}", sub.identity, n),
                None => sub.identity.clone(),
            });
            self.violations.push(v);
        }
        for n in sub.notes {
            self.notes.push(format!("{}: {}", sub.identity, n));
        }
    }

    /// Sorts violations lexicographically by index tuple then note, so the
    /// machine-readable rendering is byte-stable.
    pub fn sorted(mut self) -> Self {
        self.violations
            .sort_by(|a, b| a.indices.cmp(&b.indices).then_with(|| a.note.cmp(&b.note)));
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            self.identity,
            if self.passes() { "pass" } else { "fail" }
        )?;
        for v in &self.violations {
            write!(f, "\n  at ({:?})", v.indices)?;
            if let Some(n) = &v.note {
                write!(f, " [{n}]")?;
            }
            if !v.residual.is_empty() {
                let parts: Vec<String> = v.residual.iter().map(|s| s.to_string()).collect();
                write!(f, " residual = [{}]", parts.join(", "))?;
            }
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
