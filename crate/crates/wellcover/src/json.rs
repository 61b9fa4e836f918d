//! JSON shapes of partitions, verdicts, claims and RBDS instances.
//!
//! Vertex indices are 0-based throughout.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wellcover_core::gadgets::{Claim, ClaimReport};
use wellcover_core::{Error, RbdsInstance, RlPartition, VertexSet, WcVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub independents: Vec<Vec<usize>>,
    pub cliques: Vec<Vec<usize>>,
}

impl PartitionJson {
    pub fn from_partition(p: &RlPartition) -> Self {
        PartitionJson {
            independents: p.independents.iter().map(VertexSet::to_vec).collect(),
            cliques: p.cliques.iter().map(VertexSet::to_vec).collect(),
        }
    }

    pub fn to_partition(&self, n: usize) -> Result<RlPartition, Error> {
        RlPartition::from_lists(n, &self.independents, &self.cliques)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub well_covered: bool,
    pub min: usize,
    pub max: usize,
    pub witness_min: Vec<usize>,
    pub witness_max: Vec<usize>,
    pub method: String,
    /// Whether every maximal independent set has exactly `k` vertices, when
    /// `k` was asked for.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_well_covered: Option<bool>,
}

impl VerdictJson {
    pub fn new(v: &WcVerdict, method: &str) -> Self {
        VerdictJson {
            well_covered: v.well_covered,
            min: v.min_size,
            max: v.max_size,
            witness_min: v.witness_min.to_vec(),
            witness_max: v.witness_max.to_vec(),
            method: method.to_string(),
            k_well_covered: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizeJson {
    pub r: usize,
    pub l: usize,
    pub is_rl: bool,
    pub is_wc: bool,
    pub is_rl_wc: bool,
    pub partition: Option<PartitionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimJson {
    pub gadget: String,
    pub statement: String,
    pub params: BTreeMap<String, usize>,
}

impl ClaimJson {
    pub fn new(c: &Claim) -> Self {
        ClaimJson {
            gadget: c.kind.name().to_string(),
            statement: c.kind.statement().to_string(),
            params: c.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbdsJson {
    pub red: usize,
    pub blue: usize,
    pub edges: Vec<[usize; 2]>,
    pub k: usize,
}

impl RbdsJson {
    pub fn to_instance(&self) -> Result<RbdsInstance, Error> {
        RbdsInstance::new(
            self.red,
            self.blue,
            self.edges.iter().map(|&[r, b]| (r, b)).collect(),
            self.k,
        )
    }

    pub fn from_instance(inst: &RbdsInstance) -> Self {
        RbdsJson {
            red: inst.red,
            blue: inst.blue,
            edges: inst.edges.iter().map(|&(r, b)| [r, b]).collect(),
            k: inst.k,
        }
    }
}

/// Outcome of one sweep instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub instance: String,
    /// `pass`, `fail` or `rejected` (precondition of the gadget not met).
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl InstanceJson {
    pub fn from_report(instance: String, r: &ClaimReport) -> Self {
        let mut notes = r.violations.clone();
        notes.extend(r.skipped.iter().map(|s| format!("skipped: {s}")));
        InstanceJson {
            instance,
            status: if r.holds { "pass" } else { "fail" }.to_string(),
            left: Some(r.left),
            right: Some(r.right),
            notes,
        }
    }

    pub fn rejected(instance: String, why: String) -> Self {
        InstanceJson {
            instance,
            status: "rejected".to_string(),
            left: None,
            right: None,
            notes: vec![why],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub gadget: String,
    pub statement: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub rejected: usize,
    pub instances: Vec<InstanceJson>,
}

impl SweepJson {
    pub fn new(gadget: &str, statement: &str, instances: Vec<InstanceJson>) -> Self {
        let count = |s: &str| instances.iter().filter(|i| i.status == s).count();
        SweepJson {
            gadget: gadget.to_string(),
            statement: statement.to_string(),
            total: instances.len(),
            passed: count("pass"),
            failed: count("fail"),
            rejected: count("rejected"),
            instances,
        }
    }
}
