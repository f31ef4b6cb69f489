//! Persistent record of a positivity scan: what was checked, with which
//! tool version, and every violation found. Replaying the recorded
//! parameters must reproduce the payload exactly, timestamp aside.

use chrono::{SecondsFormat, Utc};
use fano_chern::coefficients::PositivityReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub violations: Vec<ViolationRecord>,
    pub verified: VerifiedRange,
    pub tool_version: String,
    pub timestamp: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifiedRange {
    pub i_lo: u32,
    pub i_hi: u32,
    pub j_list: Vec<u32>,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub value: String,
}

impl Certificate {
    pub fn from_report(report: &PositivityReport) -> Self {
        let mut parameters = BTreeMap::new();
        parameters.insert("i_lo".to_owned(), report.i_lo.to_string());
        parameters.insert("i_max".to_owned(), report.i_hi.to_string());
        let j_text: Vec<String> = report.j_list.iter().map(u32::to_string).collect();
        parameters.insert("j".to_owned(), j_text.join(","));
        parameters.insert("strict".to_owned(), report.strict.to_string());
        Certificate {
            schema_version: SCHEMA_VERSION.to_owned(),
            command: "verify".to_owned(),
            parameters,
            violations: report
                .violations
                .iter()
                .map(|violation| ViolationRecord {
                    i: violation.index.i(),
                    j: violation.index.j(),
                    k: violation.index.k(),
                    value: violation.value.to_string(),
                })
                .collect(),
            verified: VerifiedRange {
                i_lo: report.i_lo,
                i_hi: report.i_hi,
                j_list: report.j_list.clone(),
                strict: report.strict,
            },
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
