//! Exhaustive claim evaluation over every small instance.
//!
//! The sweep enumerates every map on carriers of size `1..=max_size`, and
//! for one-to-one maps every base point and every k, then evaluates every
//! applicable registry claim on every instance. Enumeration is in
//! lexicographic instance order, so the first disagreement recorded per
//! claim is the minimal counterexample; the output is deterministic and
//! byte-identical across runs with the same parameters.

use serde::Serialize;

use crate::endo::EndoFunction;
use crate::error::{Error, Result};
use crate::fuzzy::Carrier;
use crate::registry::{
    check_claim, theorem_registry, Direction, Expectation, Instance, SpaceSelector,
};

/// Sweep parameters.
#[derive(Clone, Debug, Serialize)]
pub struct SweepParams {
    pub max_size: usize,
    pub k_values: Vec<u32>,
    pub window: u32,
}

impl SweepParams {
    pub fn new(max_size: usize, mut k_values: Vec<u32>, window: u32) -> SweepParams {
        k_values.sort_unstable();
        k_values.dedup();
        SweepParams {
            max_size,
            k_values,
            window,
        }
    }

    /// Rough instance count, used by the cost guard's error message.
    pub fn estimated_instances(&self) -> u64 {
        let mut total = 0u64;
        for size in 1..=self.max_size {
            let maps = (size as u64).pow(size as u32);
            total += maps * 2;
            let bijections = (1..=size as u64).product::<u64>();
            total += bijections * size as u64 * self.k_values.len() as u64;
        }
        total
    }

    fn validate(&self) -> Result<()> {
        if self.max_size > 6 {
            return Err(Error::SweepTooLarge {
                max_size: self.max_size,
                estimate: self.estimated_instances(),
            });
        }
        let required = self.max_size as u32 + 2;
        if self.window < required {
            return Err(Error::SweepWindowTooSmall {
                window: self.window,
                required,
            });
        }
        Ok(())
    }
}

/// Serializable identity of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceDesc {
    pub size: usize,
    pub f: Vec<usize>,
    pub space: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub window: u32,
}

impl InstanceDesc {
    pub fn of(instance: &Instance) -> InstanceDesc {
        let (x0, k) = match instance.selector {
            SpaceSelector::Tau3 { x0, k } => (Some(x0), Some(k)),
            _ => (None, None),
        };
        InstanceDesc {
            size: instance.f.carrier().size(),
            f: instance.f.map().to_vec(),
            space: instance.selector.name().to_string(),
            x0,
            k,
            window: instance.window,
        }
    }
}

/// The minimal disagreeing instance for a claim, with both predicate
/// values and a human-readable restatement.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub instance: InstanceDesc,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub detail: String,
}

/// Per-claim tallies for one sweep.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub direction: Direction,
    pub expectation: Expectation,
    pub instances: u64,
    pub hypothesis_true: u64,
    pub agreements: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "str::is_empty")]
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub params: SweepParams,
    pub claims: Vec<ClaimReport>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Asserted claims that disagreed somewhere.
    pub fn asserted_failures(&self) -> Vec<&ClaimReport> {
        self.claims
            .iter()
            .filter(|c| c.expectation == Expectation::Asserted && c.counterexample.is_some())
            .collect()
    }

    /// Report-only claims that disagreed somewhere (the findings).
    pub fn report_only_findings(&self) -> Vec<&ClaimReport> {
        self.claims
            .iter()
            .filter(|c| c.expectation == Expectation::ReportOnly && c.counterexample.is_some())
            .collect()
    }
}

/// Every map on `0..size`, in lexicographic order of the map vector.
pub fn each_map_lex(size: usize, mut visit: impl FnMut(&[usize])) {
    let mut map = vec![0usize; size];
    loop {
        visit(&map);
        // odometer increment with the last position least significant
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < size {
                break;
            }
            map[i] = 0;
        }
    }
}

/// All sweep instances, in the canonical lexicographic order.
pub fn enumerate_instances(params: &SweepParams) -> Result<Vec<Instance>> {
    params.validate()?;
    let mut out = Vec::new();
    for size in 1..=params.max_size {
        let carrier = Carrier::of_size(size)?;
        each_map_lex(size, |map| {
            let f = EndoFunction::new(std::sync::Arc::clone(&carrier), map.to_vec())
                .expect("enumerated map is total");
            out.push(Instance {
                f: f.clone(),
                selector: SpaceSelector::Tau1,
                window: params.window,
            });
            out.push(Instance {
                f: f.clone(),
                selector: SpaceSelector::Tau2,
                window: params.window,
            });
            if f.profile().injective {
                for x0 in 0..size {
                    for &k in &params.k_values {
                        out.push(Instance {
                            f: f.clone(),
                            selector: SpaceSelector::Tau3 { x0, k },
                            window: params.window,
                        });
                    }
                }
            }
        });
    }
    // enumeration order is already the canonical order; keep it explicit
    debug_assert!(out.windows(2).all(|w| w[0].order_key() <= w[1].order_key()));
    Ok(out)
}

/// Runs the full sweep.
pub fn sweep(params: &SweepParams) -> Result<SweepReport> {
    let instances = enumerate_instances(params)?;
    let registry = theorem_registry();
    let mut reports: Vec<ClaimReport> = registry
        .iter()
        .map(|c| ClaimReport {
            id: c.id.to_string(),
            description: c.description.to_string(),
            direction: c.direction,
            expectation: c.expectation,
            instances: 0,
            hypothesis_true: 0,
            agreements: 0,
            counterexample: None,
            note: c.note,
        })
        .collect();

    for instance in &instances {
        for (claim, report) in registry.iter().zip(reports.iter_mut()) {
            let Some(verdict) = check_claim(claim, instance)? else {
                continue;
            };
            report.instances += 1;
            if verdict.hypothesis {
                report.hypothesis_true += 1;
            }
            if verdict.agrees {
                report.agreements += 1;
            } else if report.counterexample.is_none() {
                report.counterexample = Some(Counterexample {
                    instance: InstanceDesc::of(instance),
                    hypothesis: verdict.hypothesis,
                    conclusion: verdict.conclusion,
                    detail: format!(
                        "{}: hypothesis {} but conclusion {} under direction {:?}",
                        claim.id, verdict.hypothesis, verdict.conclusion, claim.direction
                    ),
                });
            }
        }
    }

    Ok(SweepReport {
        params: params.clone(),
        claims: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_counts_at_size_two() {
        let params = SweepParams::new(2, vec![1, 2], 4);
        let instances = enumerate_instances(&params).unwrap();
        // sizes 1 and 2: (1 + 4) maps, two chain instances each;
        // bijections: 1 map of size 1 (1 base point) + 2 of size 2
        // (2 base points), times two k values
        let chains = (1 + 4) * 2;
        let orbits = (1 + 2 * 2) * 2;
        assert_eq!(instances.len(), chains + orbits);
    }

    #[test]
    fn cost_guard_and_window_guard() {
        assert!(matches!(
            enumerate_instances(&SweepParams::new(7, vec![1], 9)),
            Err(Error::SweepTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_instances(&SweepParams::new(3, vec![1], 4)),
            Err(Error::SweepWindowTooSmall { .. })
        ));
    }

    #[test]
    fn map_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        each_map_lex(2, |m| seen.push(m.to_vec()));
        assert_eq!(
            seen,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn small_sweep_finds_the_expected_minimal_counterexamples() {
        let params = SweepParams::new(2, vec![1, 2, 3], 8);
        let report = sweep(&params).unwrap();

        // the chain-equality converse fails first on the constant pair map
        let c = report.claim("Thm4.1-converse").unwrap();
        let ce = c.counterexample.as_ref().unwrap();
        assert_eq!(ce.instance.size, 2);
        assert_eq!(ce.instance.f, vec![0, 0]);
        assert!(ce.hypothesis && !ce.conclusion);

        // the never-equal claim fails already on the singleton
        let c = report.claim("Thm4.2").unwrap();
        let ce = c.counterexample.as_ref().unwrap();
        assert_eq!(ce.instance.size, 1);
        assert_eq!(ce.instance.k, Some(1));

        // the crisp-grades lemma fails on the singleton with k = 2
        let c = report.claim("Lemma2.6.2").unwrap();
        let ce = c.counterexample.as_ref().unwrap();
        assert_eq!(ce.instance.size, 1);
        assert_eq!(ce.instance.k, Some(2));

        // normality of the orbit space fails on the 2-cycle with k = 2
        let c = report.claim("Prop3.16").unwrap();
        let ce = c.counterexample.as_ref().unwrap();
        assert_eq!(ce.instance.f, vec![1, 0]);
        assert_eq!(ce.instance.k, Some(2));

        // the k = 1 regularity finding
        let c = report.claim("Prop3.15").unwrap();
        let ce = c.counterexample.as_ref().unwrap();
        assert_eq!(ce.instance.k, Some(1));
    }

    #[test]
    fn sweep_is_reproducible_byte_for_byte() {
        let params = SweepParams::new(2, vec![1, 2], 4);
        let a = sweep(&params).unwrap().to_json();
        let b = sweep(&params).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn counterexamples_reevaluate_to_the_same_verdict_and_are_minimal() {
        let params = SweepParams::new(2, vec![1, 2], 4);
        let report = sweep(&params).unwrap();
        let instances = enumerate_instances(&params).unwrap();
        let registry = theorem_registry();
        for (claim, cr) in registry.iter().zip(&report.claims) {
            let Some(ce) = &cr.counterexample else {
                continue;
            };
            // independent rescan: the first disagreeing instance in
            // canonical order must be the recorded one
            let mut first: Option<(InstanceDesc, bool, bool)> = None;
            for i in &instances {
                if let Some(v) = check_claim(claim, i).unwrap() {
                    if !v.agrees {
                        first = Some((InstanceDesc::of(i), v.hypothesis, v.conclusion));
                        break;
                    }
                }
            }
            let (desc, h, c) = first.expect("recorded counterexample must reappear");
            assert_eq!(desc, ce.instance, "claim {}", cr.id);
            assert_eq!(h, ce.hypothesis);
            assert_eq!(c, ce.conclusion);
        }
    }

    #[test]
    fn tallies_are_consistent() {
        let params = SweepParams::new(2, vec![1], 4);
        let report = sweep(&params).unwrap();
        for c in &report.claims {
            assert!(c.agreements <= c.instances);
            assert!(c.hypothesis_true <= c.instances);
            if c.counterexample.is_none() {
                assert_eq!(c.agreements, c.instances, "claim {}", c.id);
            } else {
                assert!(c.agreements < c.instances);
            }
        }
    }
}
