//! JSON configuration documents.
//!
//! Angles are plain radians as decimal doubles; serde_json prints the
//! shortest representation that parses back to the identical bits, so
//! documents round-trip exactly.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use shortcut_core::{Angle, Configuration, Shortcut};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChordEndpoints {
    pub u: f64,
    pub v: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub shortcuts: Vec<ChordEndpoints>,
}

impl ConfigDocument {
    pub fn from_config(config: &Configuration) -> Self {
        ConfigDocument {
            version: FORMAT_VERSION,
            label: if config.label().is_empty() {
                None
            } else {
                Some(config.label().to_string())
            },
            shortcuts: config
                .shortcuts()
                .iter()
                .map(|s| ChordEndpoints {
                    u: s.u().radians(),
                    v: s.v().radians(),
                })
                .collect(),
        }
    }

    pub fn to_config(&self) -> Result<Configuration> {
        if self.version != FORMAT_VERSION {
            bail!(
                "unsupported document version {} (expected {FORMAT_VERSION})",
                self.version
            );
        }
        let shortcuts = self
            .shortcuts
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Shortcut::new(Angle::new(c.u), Angle::new(c.v))
                    .with_context(|| format!("shortcut #{i} ({}, {})", c.u, c.v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Configuration::new(
            shortcuts,
            self.label.clone().unwrap_or_default(),
        ))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

pub fn load_config(path: &Path) -> Result<Configuration> {
    ConfigDocument::read(path)?.to_config()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_bit_exact() {
        // Endpoints survive JSON bit-exactly; derived quantities are
        // recomputed and may move by an ulp.
        let cfg = shortcut_core::uniform_config(3).unwrap();
        let doc = ConfigDocument::from_config(&cfg);
        let json = doc.to_json();
        let back: ConfigDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(json, back.to_json());
        let cfg2 = back.to_config().unwrap();
        for (a, b) in cfg.shortcuts().iter().zip(cfg2.shortcuts()) {
            assert_eq!(a.u().radians().to_bits(), b.u().radians().to_bits());
            assert_eq!(a.v().radians().to_bits(), b.v().radians().to_bits());
            assert!((a.chord() - b.chord()).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_unknown_version() {
        let doc = ConfigDocument {
            version: 99,
            label: None,
            shortcuts: vec![],
        };
        assert!(doc.to_config().is_err());
    }

    #[test]
    fn rejects_degenerate_chord() {
        let doc = ConfigDocument {
            version: 1,
            label: None,
            shortcuts: vec![ChordEndpoints { u: 1.0, v: 1.0 }],
        };
        assert!(doc.to_config().is_err());
    }
}
