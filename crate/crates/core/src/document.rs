//! JSON interchange documents. Vertices and set indices are 1-based.

use serde::{Deserialize, Serialize};

use crate::cycle::Vertex;
use crate::error::Result;
use crate::oracle::{ScanFailure, ScanReport};
use crate::solver::{Instance, RainbowCertificate, Rejection};

/// `{"t": 5, "sets": [[2,4],[3,5]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub t: usize,
    pub sets: Vec<Vec<i64>>,
}

impl InstanceDocument {
    pub fn to_instance(&self) -> Result<Instance> {
        Instance::from_labels(self.t, &self.sets)
    }
}

impl From<&Instance> for InstanceDocument {
    fn from(inst: &Instance) -> Self {
        Self {
            t: inst.context().order(),
            sets: inst
                .labels()
                .into_iter()
                .map(|s| s.into_iter().map(|v| v as i64).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub rho: i64,
    /// 1-based family index at each normalized position.
    pub permutation: Vec<usize>,
    pub k: i64,
    pub case: u8,
    pub r: usize,
    pub window_start: usize,
}

/// `{"assignment": [[set, vertex], ...], "trace": {...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub assignment: Vec<(usize, usize)>,
    /// Ignored by verification; may be absent in hand-written certificates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDocument>,
}

impl From<&RainbowCertificate> for CertificateDocument {
    fn from(cert: &RainbowCertificate) -> Self {
        let trace = &cert.trace;
        Self {
            assignment: cert
                .assignment
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1, v.label()))
                .collect(),
            trace: Some(TraceDocument {
                rho: trace.rotation,
                permutation: trace.permutation.iter().map(|p| p + 1).collect(),
                k: trace.k,
                case: trace.case.number(),
                r: trace.r,
                window_start: trace.window_start.label(),
            }),
        }
    }
}

impl CertificateDocument {
    /// Converts to 0-based pairs for `inst`, rejecting indices and vertices
    /// that cannot name anything in it.
    pub fn pairs(&self, inst: &Instance) -> std::result::Result<Vec<(usize, Vertex)>, Rejection> {
        let ctx = inst.context();
        self.assignment
            .iter()
            .map(|&(set, label)| {
                if set == 0 || set > inst.size() {
                    return Err(Rejection::Index {
                        index: set.wrapping_sub(1),
                    });
                }
                ctx.vertex_from_label(label as i64)
                    .map(|v| (set - 1, v))
                    .map_err(|_| Rejection::OutOfRange {
                        index: set - 1,
                        label,
                    })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDocument {
    pub sets: Vec<Vec<usize>>,
    pub reason: String,
}

/// Run metadata that varies between machines and runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDocument {
    pub workers: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReportDocument {
    pub kind: String,
    pub t: usize,
    pub s: usize,
    pub families: u64,
    pub failures: usize,
    pub failing_families: Vec<FailureDocument>,
    pub run: RunDocument,
}

impl From<&ScanReport> for ScanReportDocument {
    fn from(report: &ScanReport) -> Self {
        Self {
            kind: report.kind.name().to_string(),
            t: report.t,
            s: report.s,
            families: report.families,
            failures: report.failures.len(),
            failing_families: report
                .failures
                .iter()
                .map(|ScanFailure { sets, reason }| FailureDocument {
                    sets: sets.clone(),
                    reason: reason.clone(),
                })
                .collect(),
            run: RunDocument {
                workers: report.workers,
                elapsed_ms: report.elapsed.as_millis(),
            },
        }
    }
}
