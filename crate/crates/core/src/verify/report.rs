use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedCapacity,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedCapacity => "SKIP",
        })
    }
}

/// Result of one identity at one `n`. On failure `lhs` and `rhs` carry the
/// canonical texts of the first two routes that disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub n: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub runtime_ms: f64,
}

impl VerifyReport {
    pub fn pass(id: &str, n: u32) -> Self {
        Self {
            id: id.to_string(),
            n,
            status: Status::Pass,
            lhs: None,
            rhs: None,
            detail: None,
            runtime_ms: 0.0,
        }
    }

    pub fn fail(id: &str, n: u32, lhs: String, rhs: String, detail: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
            detail: Some(detail.into()),
            ..Self::pass(id, n)
        }
    }

    pub fn skipped(id: &str, n: u32, detail: impl Into<String>) -> Self {
        Self {
            status: Status::SkippedCapacity,
            detail: Some(detail.into()),
            ..Self::pass(id, n)
        }
    }

    /// Compares named routes pairwise against the first one.
    pub fn compare<T: PartialEq + fmt::Display>(id: &str, n: u32, routes: &[(&str, T)]) -> Self {
        let Some((name0, first)) = routes.first() else {
            return Self::pass(id, n);
        };
        for (name, value) in &routes[1..] {
            if value != first {
                return Self::fail(
                    id,
                    n,
                    first.to_string(),
                    value.to_string(),
                    format!("{name0} != {name}"),
                );
            }
        }
        Self::pass(id, n)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One human-readable line; runtime is left out so output is stable.
    pub fn line(&self) -> String {
        let mut s = format!("{} {} n={}", self.status, self.id, self.n);
        if let Some(d) = &self.detail {
            s.push_str(&format!(" ({d})"));
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            s.push_str(&format!("\n  lhs: {l}\n  rhs: {r}"));
        }
        s
    }
}
