//! The JSON instance description consumed by the CLI.
//!
//! ```json
//! {"carrier": 5, "f": [0, 3, 4, 0, 0], "window": 7, "tau3": {"x0": 0, "k": 2}}
//! ```
//!
//! `carrier` is either a size or an array of distinct labels; `window`
//! and `tau3` are optional. Validation is strict: map entries must be in
//! range, and a `tau3` section is only accepted for a one-to-one map.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::endo::EndoFunction;
use crate::error::{Error, Result};
use crate::fuzzy::Carrier;
use crate::spaces::default_window;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CarrierSpec {
    Size(usize),
    Labels(Vec<String>),
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Tau3Params {
    pub x0: usize,
    pub k: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    pub carrier: CarrierSpec,
    pub f: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau3: Option<Tau3Params>,
}

impl InstanceFile {
    pub fn from_json(bytes: &[u8]) -> Result<InstanceFile> {
        let file: InstanceFile = serde_json::from_slice(bytes)?;
        Ok(file)
    }

    pub fn carrier(&self) -> Result<Arc<Carrier>> {
        match &self.carrier {
            CarrierSpec::Size(n) => Carrier::of_size(*n),
            CarrierSpec::Labels(labels) => Carrier::with_labels(labels.clone()),
        }
    }

    /// Builds and validates the map; checks the `tau3` section when present.
    pub fn endofunction(&self) -> Result<EndoFunction> {
        let carrier = self.carrier()?;
        let f = EndoFunction::new(carrier, self.f.clone())?;
        if let Some(t3) = &self.tau3 {
            if t3.x0 >= f.carrier().size() {
                return Err(Error::BasePointOutOfRange {
                    x0: t3.x0,
                    size: f.carrier().size(),
                });
            }
            if t3.k == 0 {
                return Err(Error::ZeroK);
            }
            if let Some((a, b, image)) = f.injectivity_witness() {
                return Err(Error::NotInjective { a, b, image });
            }
        }
        Ok(f)
    }

    /// The window to materialize chains with: the explicit one, or
    /// carrier size + 2.
    pub fn effective_window(&self) -> Result<u32> {
        if let Some(w) = self.window {
            if w == 0 {
                return Err(Error::ZeroWindow);
            }
            return Ok(w);
        }
        Ok(default_window(self.carrier()?.size()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_size_form() {
        let file =
            InstanceFile::from_json(br#"{"carrier": 5, "f": [0, 3, 4, 0, 0]}"#).unwrap();
        let f = file.endofunction().unwrap();
        assert_eq!(f.carrier().size(), 5);
        assert_eq!(file.effective_window().unwrap(), 7);
    }

    #[test]
    fn parses_label_form_with_tau3() {
        let file = InstanceFile::from_json(
            br#"{"carrier": ["a", "b", "c"], "f": [1, 2, 0], "window": 5, "tau3": {"x0": 0, "k": 2}}"#,
        )
        .unwrap();
        let f = file.endofunction().unwrap();
        assert_eq!(f.carrier().label(1), "b");
        assert_eq!(file.effective_window().unwrap(), 5);
    }

    #[test]
    fn rejects_bad_inputs() {
        // out-of-range map entry
        let file = InstanceFile::from_json(br#"{"carrier": 2, "f": [0, 5]}"#).unwrap();
        assert!(matches!(
            file.endofunction(),
            Err(Error::MapOutOfRange { .. })
        ));
        // length mismatch
        let file = InstanceFile::from_json(br#"{"carrier": 3, "f": [0]}"#).unwrap();
        assert!(matches!(
            file.endofunction(),
            Err(Error::MapLengthMismatch { .. })
        ));
        // duplicate labels
        let file =
            InstanceFile::from_json(br#"{"carrier": ["a", "a"], "f": [0, 1]}"#).unwrap();
        assert!(matches!(file.endofunction(), Err(Error::BadLabels)));
        // tau3 on a non-injective map
        let file = InstanceFile::from_json(
            br#"{"carrier": 2, "f": [0, 0], "tau3": {"x0": 0, "k": 1}}"#,
        )
        .unwrap();
        assert!(matches!(
            file.endofunction(),
            Err(Error::NotInjective { .. })
        ));
        // zero k
        let file = InstanceFile::from_json(
            br#"{"carrier": 2, "f": [1, 0], "tau3": {"x0": 0, "k": 0}}"#,
        )
        .unwrap();
        assert!(matches!(file.endofunction(), Err(Error::ZeroK)));
        // malformed JSON
        assert!(InstanceFile::from_json(br#"{"carrier":"#).is_err());
        // empty carrier
        let file = InstanceFile::from_json(br#"{"carrier": 0, "f": []}"#).unwrap();
        assert!(matches!(file.endofunction(), Err(Error::EmptyCarrier)));
    }

    #[test]
    fn json_round_trip_preserves_content() {
        let raw = br#"{"carrier": ["a", "b"], "f": [1, 0], "window": 4, "tau3": {"x0": 1, "k": 3}}"#;
        let file = InstanceFile::from_json(raw).unwrap();
        let back = serde_json::to_vec(&file).unwrap();
        let file2 = InstanceFile::from_json(&back).unwrap();
        assert_eq!(
            serde_json::to_value(&file).unwrap(),
            serde_json::to_value(&file2).unwrap()
        );
    }
}
