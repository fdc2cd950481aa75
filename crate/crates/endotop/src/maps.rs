//! The Zadeh extension of a self-map to fuzzy sets, and the open-map /
//! continuity deciders.
//!
//! For chain spaces the deciders run twice: once symbolically (the image
//! or preimage of each chain member is classified against the closed-form
//! grade rule) and once against the materialized family. The two verdicts
//! must agree; a mismatch is an internal error, never silently resolved.

use serde::Serialize;

use crate::endo::EndoFunction;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzySet;
use crate::grade::Grade;
use crate::spaces::{ExplicitTopology, Space};

/// Image under the extension principle: the grade of `y` is the sup of
/// the grades of its preimages (0 when there are none).
pub fn zadeh_image(f: &EndoFunction, a: &FuzzySet) -> Result<FuzzySet> {
    if f.carrier() != a.carrier() {
        return Err(Error::CarrierMismatch {
            left: f.carrier().size(),
            right: a.carrier().size(),
        });
    }
    let mut grades = vec![Grade::ZERO; f.carrier().size()];
    for x in f.carrier().elements() {
        let y = f.apply(x);
        grades[y] = grades[y].max(a.grade(x));
    }
    FuzzySet::new(std::sync::Arc::clone(f.carrier()), grades)
}

/// Preimage under the extension principle: the grade of `x` is the grade
/// of `f(x)`.
pub fn zadeh_preimage(f: &EndoFunction, a: &FuzzySet) -> Result<FuzzySet> {
    if f.carrier() != a.carrier() {
        return Err(Error::CarrierMismatch {
            left: f.carrier().size(),
            right: a.carrier().size(),
        });
    }
    let grades = f.carrier().elements().map(|x| a.grade(f.apply(x))).collect();
    FuzzySet::new(std::sync::Arc::clone(f.carrier()), grades)
}

/// A failed openness or continuity check: the open set and its image or
/// preimage that falls outside the topology.
#[derive(Clone, Debug, Serialize)]
pub struct MapWitness {
    pub open: FuzzySet,
    pub result: FuzzySet,
}

/// Open-map and continuity verdicts with re-checkable witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct MapReport {
    pub open_map: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_open_witness: Option<MapWitness>,
    pub continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_continuous_witness: Option<MapWitness>,
}

fn check_explicit(
    f: &EndoFunction,
    topology: &ExplicitTopology,
    forward: bool,
) -> Result<(bool, Option<MapWitness>)> {
    for open in topology.opens() {
        let result = if forward {
            zadeh_image(f, open)?
        } else {
            zadeh_preimage(f, open)?
        };
        if !topology.contains(&result) {
            return Ok((
                false,
                Some(MapWitness {
                    open: open.clone(),
                    result,
                }),
            ));
        }
    }
    Ok((true, None))
}

fn check_chain_symbolic(f: &EndoFunction, space: &Space, forward: bool) -> Result<bool> {
    let Space::Chain { family, window } = space else {
        unreachable!("symbolic route is only invoked on chains");
    };
    // ∅ maps to ∅ both ways; X is handled as the final candidate below.
    let mut candidates: Vec<FuzzySet> = (1..=*window).map(|n| family.member(n)).collect();
    candidates.push(FuzzySet::whole(std::sync::Arc::clone(family.carrier())));
    for open in candidates {
        let result = if forward {
            zadeh_image(f, &open)?
        } else {
            zadeh_preimage(f, &open)?
        };
        if !space.is_open(&result)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn decide(f: &EndoFunction, space: &Space, forward: bool) -> Result<(bool, Option<MapWitness>)> {
    let materialized = space.materialize()?;
    let (verdict, witness) = check_explicit(f, &materialized, forward)?;
    if let Space::Chain { .. } = space {
        let symbolic = check_chain_symbolic(f, space, forward)?;
        if symbolic != verdict {
            return Err(Error::RepresentationDisagreement {
                context: format!(
                    "{} of the map",
                    if forward { "openness" } else { "continuity" }
                ),
                symbolic,
                materialized: verdict,
            });
        }
    }
    Ok((verdict, witness))
}

/// Is the Zadeh image of every open set open?
pub fn is_open_map(f: &EndoFunction, space: &Space) -> Result<(bool, Option<MapWitness>)> {
    decide(f, space, true)
}

/// Is the Zadeh preimage of every open set open?
pub fn is_continuous(f: &EndoFunction, space: &Space) -> Result<(bool, Option<MapWitness>)> {
    decide(f, space, false)
}

pub fn map_report(f: &EndoFunction, space: &Space) -> Result<MapReport> {
    let (open_map, not_open_witness) = is_open_map(f, space)?;
    let (continuous, not_continuous_witness) = is_continuous(f, space)?;
    Ok(MapReport {
        open_map,
        not_open_witness,
        continuous,
        not_continuous_witness,
    })
}
