//! The serializable stability report.
//!
//! Field names and enum tags are part of the output contract: reports
//! round-trip through JSON byte-identically (serialize, parse, serialize).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Stable,
    TriviallyUnstable,
    NontriviallyUnstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrivialityReason {
    Disconnected,
    Bipartite,
    HasTwins,
}

/// One Wilson-type hit with its defining parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum WilsonHit {
    C1 {
        h: usize,
        /// The even part was empty, so the translation condition held with
        /// nothing to check.
        vacuous: bool,
    },
    C2 {
        h: usize,
        /// The odd part was empty, so its translation condition held with
        /// nothing to check.
        vacuous: bool,
    },
    C3 {
        /// Generator of the accepted subgroup H.
        subgroup: usize,
        /// The residues of S whose H-coset escapes S.
        r: Vec<usize>,
        /// gcd of R and n.
        d: usize,
    },
    C4 {
        m: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NewConditionHit {
    GeneralizedHk {
        variant: u8,
        /// Generator of H.
        h: usize,
        /// Generator of K.
        k: usize,
    },
    IsoTranslate {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multiplier: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        map: Option<Vec<usize>>,
    },
    XeC4 {
        m: usize,
    },
    XeGeneral {
        /// Generator of the displacement subgroup H.
        subgroup: usize,
        /// Image lists over even-vertex indices (index k stands for vertex 2k).
        alpha: Vec<usize>,
        beta: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessJson {
    PermPair { alpha: Vec<usize>, beta: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityReport {
    /// The connection set literal, `n:s1,s2,...`.
    pub set: String,
    pub order: usize,
    pub verdict: Verdict,
    pub triviality_reasons: Vec<TrivialityReason>,
    /// |Aut X| in decimal.
    pub aut_x: String,
    /// |Aut BX| in decimal.
    #[serde(rename = "autBX")]
    pub aut_bx: String,
    pub wilson_types: Vec<WilsonHit>,
    pub new_conditions: Vec<NewConditionHit>,
    pub witnesses: Vec<WitnessJson>,
    /// Unstable for no reason any implemented condition can name.
    pub unexplained: bool,
}

impl StabilityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<StabilityReport, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> StabilityReport {
        StabilityReport {
            set: "10:1,2,8,9".into(),
            order: 10,
            verdict: Verdict::NontriviallyUnstable,
            triviality_reasons: vec![],
            aut_x: "20".into(),
            aut_bx: "80".into(),
            wilson_types: vec![WilsonHit::C4 { m: 3 }],
            new_conditions: vec![
                NewConditionHit::GeneralizedHk { variant: 2, h: 5, k: 2 },
                NewConditionHit::IsoTranslate { multiplier: Some(3), map: None },
            ],
            witnesses: vec![WitnessJson::PermPair {
                alpha: vec![0, 3, 6, 9, 2, 5, 8, 1, 4, 7],
                beta: vec![5, 8, 1, 4, 7, 0, 3, 6, 9, 2],
            }],
            unexplained: false,
        }
    }

    #[test]
    fn fixed_field_names_and_tags() {
        let json = sample().to_json();
        for needle in [
            "\"set\":",
            "\"order\":",
            "\"verdict\":\"nontrivially-unstable\"",
            "\"trivialityReasons\":[]",
            "\"autX\":\"20\"",
            "\"autBX\":\"80\"",
            "\"wilsonTypes\":[{\"type\":\"C4\",\"m\":3}]",
            "\"kind\":\"generalized-hk\"",
            "\"kind\":\"iso-translate\"",
            "\"multiplier\":3",
            "\"kind\":\"perm-pair\"",
            "\"unexplained\":false",
        ] {
            assert!(json.contains(needle), "missing {needle} in {json}");
        }
        assert!(!json.contains("map"), "absent optional fields stay unserialized");
    }

    #[test]
    fn verdict_and_reason_tokens() {
        assert_eq!(serde_json::to_string(&Verdict::Stable).unwrap(), "\"stable\"");
        assert_eq!(
            serde_json::to_string(&Verdict::TriviallyUnstable).unwrap(),
            "\"trivially-unstable\""
        );
        assert_eq!(
            serde_json::to_string(&TrivialityReason::HasTwins).unwrap(),
            "\"has-twins\""
        );
        let xe = NewConditionHit::XeC4 { m: 3 };
        assert_eq!(serde_json::to_string(&xe).unwrap(), "{\"kind\":\"xe-c4\",\"m\":3}");
        let xg = NewConditionHit::XeGeneral { subgroup: 4, alpha: vec![0], beta: vec![0] };
        assert!(serde_json::to_string(&xg).unwrap().starts_with("{\"kind\":\"xe-general\""));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let json = sample().to_json();
        let parsed = StabilityReport::from_json(&json).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(parsed.to_json(), json);
    }
}
