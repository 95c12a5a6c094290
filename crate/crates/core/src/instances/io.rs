use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::rational;

/// On-disk instance schema (`version` 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub version: u32,
    pub n: usize,
    pub k: usize,
    pub directed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    pub weights: Vec<Vec<Vec<u64>>>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceFile {
            version: 1,
            n: inst.n(),
            k: inst.k(),
            directed: inst.directed(),
            gamma: inst.gamma().map(|g| rational::to_string(&g)),
            weights: (0..inst.k()).map(|c| inst.matrix(c)).collect(),
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        if self.version != 1 {
            return Err(Error::MalformedInput(format!(
                "field version: unsupported value {}",
                self.version
            )));
        }
        if self.weights.len() != self.k {
            return Err(Error::MalformedInput(format!(
                "field weights: expected {} matrices (k), found {}",
                self.k,
                self.weights.len()
            )));
        }
        for (c, m) in self.weights.iter().enumerate() {
            if m.len() != self.n {
                return Err(Error::MalformedInput(format!(
                    "field weights[{c}]: expected {} rows, found {}",
                    self.n,
                    m.len()
                )));
            }
        }
        let gamma = self
            .gamma
            .as_deref()
            .map(rational::parse)
            .transpose()
            .map_err(|e| Error::MalformedInput(format!("field gamma: {e}")))?;
        Instance::new(self.n, self.directed, gamma, &self.weights)
    }
}

/// Serializes with one matrix row per line.
pub fn to_json_string(inst: &Instance) -> String {
    let file = InstanceFile::from_instance(inst);
    let mut s = String::new();
    s.push_str("{\n");
    let _ = writeln!(s, "  \"version\": {},", file.version);
    let _ = writeln!(s, "  \"n\": {},", file.n);
    let _ = writeln!(s, "  \"k\": {},", file.k);
    let _ = writeln!(s, "  \"directed\": {},", file.directed);
    if let Some(g) = &file.gamma {
        let _ = writeln!(s, "  \"gamma\": {},", serde_json::to_string(g).unwrap());
    }
    s.push_str("  \"weights\": [\n");
    for (c, m) in file.weights.iter().enumerate() {
        s.push_str("    [\n");
        for (u, row) in m.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            let _ = write!(s, "      [{}]", cells.join(", "));
            s.push_str(if u + 1 < m.len() { ",\n" } else { "\n" });
        }
        s.push_str(if c + 1 < file.weights.len() { "    ],\n" } else { "    ]\n" });
    }
    s.push_str("  ]\n}\n");
    s
}

pub fn from_json_str(s: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(s)
        .map_err(|e| Error::MalformedInput(format!("instance file: {e}")))?;
    file.into_instance()
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json_string(inst))?;
    Ok(())
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let s = std::fs::read_to_string(path)?;
    from_json_str(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{generate, GenSpec, Variant};
    use crate::rational::ratio;

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("inst.json");
        let spec = GenSpec::new(Variant::GammaMetricUndirected, 6, 3, 9).with_gamma(ratio(7, 10));
        let inst = generate(&spec).unwrap();
        write_instance(&inst, &path).unwrap();
        let back = read_instance(&path).unwrap();
        assert_eq!(back, inst);
        assert_eq!(to_json_string(&back), std::fs::read_to_string(&path).unwrap());
    }

    #[test]
    fn missing_pair_is_named() {
        let s = r#"{"version":1,"n":3,"k":1,"directed":false,
            "weights":[[[0,1,1],[1,0],[1,1,0]]]}"#;
        let msg = from_json_str(s).unwrap_err().to_string();
        assert!(msg.contains("pair (1, 2)"), "{msg}");
    }

    #[test]
    fn asymmetric_undirected_rejected() {
        let s = r#"{"version":1,"n":3,"k":1,"directed":false,
            "weights":[[[0,1,2],[1,0,1],[1,1,0]]]}"#;
        let msg = from_json_str(s).unwrap_err().to_string();
        assert!(msg.contains("(0, 2)"), "{msg}");
    }

    #[test]
    fn schema_diagnostics() {
        let s = r#"{"version":2,"n":3,"k":1,"directed":false,"weights":[[[0,1,1],[1,0,1],[1,1,0]]]}"#;
        assert!(from_json_str(s).unwrap_err().to_string().contains("version"));
        let s = r#"{"version":1,"n":3,"k":2,"directed":false,"weights":[[[0,1,1],[1,0,1],[1,1,0]]]}"#;
        assert!(from_json_str(s).unwrap_err().to_string().contains("weights"));
        let s = r#"{"version":1,"n":3,"k":1,"directed":false,"gamma":"x/y","weights":[[[0,1,1],[1,0,1],[1,1,0]]]}"#;
        assert!(from_json_str(s).unwrap_err().to_string().contains("gamma"));
        let s = "{\"version\":1,\n\"n\":3,\n\"k\":1 \"directed\":false}";
        assert!(from_json_str(s).unwrap_err().to_string().contains("line 3"));
    }
}
