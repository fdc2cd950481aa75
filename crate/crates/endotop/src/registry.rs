//! A machine-checkable registry of claims about the induced spaces.
//!
//! Each claim is a (hypothesis, conclusion, direction) triple evaluated
//! per instance. Claims carry an expectation: `asserted` claims are
//! required to hold on the whole sweep, `report_only` claims are
//! evaluated and their counterexamples reported, because their truth is
//! known to hinge on membership conventions or on degenerate instances.
//! Nothing is silently reclassified: when an asserted claim fails, the
//! sweep reports the minimal counterexample and downstream checks go red
//! with it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::endo::{EndoFunction, FunctionProfile, OrbitData};
use crate::error::Result;
use crate::maps::{map_report, zadeh_preimage, MapReport};
use crate::properties::{property_report, topologies_equal, PropertyReport};
use crate::spaces::{tau3_basis, OrbitBasis, Space};

/// Whether the claim is a biconditional or a one-way implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Iff,
    Implies,
}

/// How the sweep treats the claim's failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Must hold on every applicable instance.
    Asserted,
    /// Evaluated and reported; failures are expected findings.
    ReportOnly,
}

/// Which space an instance carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpaceSelector {
    Tau1,
    Tau2,
    Tau3 { x0: usize, k: u32 },
}

impl SpaceSelector {
    pub fn name(&self) -> &'static str {
        match self {
            SpaceSelector::Tau1 => "tau1",
            SpaceSelector::Tau2 => "tau2",
            SpaceSelector::Tau3 { .. } => "tau3",
        }
    }
}

/// One point of the sweep: a map, a space selector and the
/// materialization window.
#[derive(Clone, Debug)]
pub struct Instance {
    pub f: EndoFunction,
    pub selector: SpaceSelector,
    pub window: u32,
}

impl Instance {
    /// Lexicographic key: size, then map, then space, then parameters.
    pub fn order_key(&self) -> (usize, Vec<usize>, u8, usize, u32) {
        let (rank, x0, k) = match self.selector {
            SpaceSelector::Tau1 => (0, 0, 0),
            SpaceSelector::Tau2 => (1, 0, 0),
            SpaceSelector::Tau3 { x0, k } => (2, x0, k),
        };
        (
            self.f.carrier().size(),
            self.f.map().to_vec(),
            rank,
            x0,
            k,
        )
    }
}

/// Memoized per-instance evaluation state shared by all claim predicates.
pub struct EvalCtx<'a> {
    pub instance: &'a Instance,
    profile: Option<FunctionProfile>,
    orbit: Option<OrbitData>,
    basis: Option<OrbitBasis>,
    own_space: Option<Space>,
    tau1_space: Option<Space>,
    tau2_space: Option<Space>,
    properties: Option<PropertyReport>,
    map_rep: Option<MapReport>,
}

impl<'a> EvalCtx<'a> {
    pub fn new(instance: &'a Instance) -> EvalCtx<'a> {
        EvalCtx {
            instance,
            profile: None,
            orbit: None,
            basis: None,
            own_space: None,
            tau1_space: None,
            tau2_space: None,
            properties: None,
            map_rep: None,
        }
    }

    fn f(&self) -> &EndoFunction {
        &self.instance.f
    }

    pub fn profile(&mut self) -> &FunctionProfile {
        if self.profile.is_none() {
            self.profile = Some(self.f().profile());
        }
        self.profile.as_ref().unwrap()
    }

    pub fn size(&self) -> usize {
        self.f().carrier().size()
    }

    pub fn is_constant(&self) -> bool {
        self.f().map().windows(2).all(|w| w[0] == w[1])
    }

    fn tau3_params(&self) -> (usize, u32) {
        match self.instance.selector {
            SpaceSelector::Tau3 { x0, k } => (x0, k),
            _ => unreachable!("orbit data requested on a chain instance"),
        }
    }

    pub fn orbit(&mut self) -> Result<&OrbitData> {
        if self.orbit.is_none() {
            let (x0, k) = self.tau3_params();
            self.orbit = Some(self.f().orbit(x0, k)?);
        }
        Ok(self.orbit.as_ref().unwrap())
    }

    pub fn basis(&mut self) -> Result<&OrbitBasis> {
        if self.basis.is_none() {
            let b = tau3_basis(self.orbit()?);
            self.basis = Some(b);
        }
        Ok(self.basis.as_ref().unwrap())
    }

    pub fn own_space(&mut self) -> Result<&Space> {
        if self.own_space.is_none() {
            let w = self.instance.window;
            let space = match self.instance.selector {
                SpaceSelector::Tau1 => Space::tau1(self.f(), w),
                SpaceSelector::Tau2 => Space::tau2(self.f(), w),
                SpaceSelector::Tau3 { x0, k } => Space::tau3(self.f(), x0, k)?,
            };
            self.own_space = Some(space);
        }
        Ok(self.own_space.as_ref().unwrap())
    }

    pub fn tau1_space(&mut self) -> &Space {
        if self.tau1_space.is_none() {
            self.tau1_space = Some(Space::tau1(self.f(), self.instance.window));
        }
        self.tau1_space.as_ref().unwrap()
    }

    pub fn tau2_space(&mut self) -> &Space {
        if self.tau2_space.is_none() {
            self.tau2_space = Some(Space::tau2(self.f(), self.instance.window));
        }
        self.tau2_space.as_ref().unwrap()
    }

    pub fn properties(&mut self) -> Result<&PropertyReport> {
        if self.properties.is_none() {
            let space = self.own_space()?.clone();
            self.properties = Some(property_report(&space)?);
        }
        Ok(self.properties.as_ref().unwrap())
    }

    pub fn map_rep(&mut self) -> Result<&MapReport> {
        if self.map_rep.is_none() {
            let space = self.own_space()?.clone();
            let f = self.f().clone();
            self.map_rep = Some(map_report(&f, &space)?);
        }
        Ok(self.map_rep.as_ref().unwrap())
    }

    /// All grades of the instance's own topology lie in {0, 1}.
    pub fn own_space_is_crisp(&mut self) -> Result<bool> {
        let t = self.own_space()?.materialize()?;
        Ok(t.opens().iter().all(|o| o.is_crisp()))
    }
}

type Predicate = fn(&mut EvalCtx) -> Result<bool>;

/// One registered claim.
pub struct TheoremClaim {
    pub id: &'static str,
    pub description: &'static str,
    pub direction: Direction,
    pub expectation: Expectation,
    /// Why the claim sits where it does, plus known caveats.
    pub note: &'static str,
    pub applies: fn(&Instance) -> bool,
    pub hypothesis: Predicate,
    pub conclusion: Predicate,
}

/// Per-instance outcome of a claim.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClaimVerdict {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub agrees: bool,
}

/// Evaluates a claim on an instance; `None` when the instance is outside
/// the claim's scope.
pub fn check_claim(claim: &TheoremClaim, instance: &Instance) -> Result<Option<ClaimVerdict>> {
    if !(claim.applies)(instance) {
        return Ok(None);
    }
    let mut ctx = EvalCtx::new(instance);
    let hypothesis = (claim.hypothesis)(&mut ctx)?;
    let conclusion = (claim.conclusion)(&mut ctx)?;
    let agrees = match claim.direction {
        Direction::Iff => hypothesis == conclusion,
        Direction::Implies => !hypothesis || conclusion,
    };
    Ok(Some(ClaimVerdict {
        hypothesis,
        conclusion,
        agrees,
    }))
}

fn on_tau1(i: &Instance) -> bool {
    i.selector == SpaceSelector::Tau1
}
fn on_tau1_pairs(i: &Instance) -> bool {
    i.selector == SpaceSelector::Tau1 && i.f.carrier().size() >= 2
}
fn on_tau2(i: &Instance) -> bool {
    i.selector == SpaceSelector::Tau2
}
fn on_tau2_pairs(i: &Instance) -> bool {
    i.selector == SpaceSelector::Tau2 && i.f.carrier().size() >= 2
}
fn on_tau3(i: &Instance) -> bool {
    matches!(i.selector, SpaceSelector::Tau3 { .. })
}
fn everywhere(_: &Instance) -> bool {
    true
}

fn always(_: &mut EvalCtx) -> Result<bool> {
    Ok(true)
}
fn onto(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.profile().onto)
}
fn injective(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.profile().injective)
}
fn all_periodic(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.profile().all_periodic)
}
fn open_map(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.map_rep()?.open_map)
}
fn continuous(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.map_rep()?.continuous)
}
fn compact(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.compact)
}
fn connected(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.connected)
}
fn not_t0_equal_degree_pairs(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(!ctx.properties()?.t0_paper_fuzzy_pair.holds)
}
fn t0_equal_degree_pairs(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.t0_paper_fuzzy_pair.holds)
}
fn regular(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.regular)
}
fn normal(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.normal)
}
fn lindelof(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.properties()?.lindelof)
}
fn no_periodic_points(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.profile().periodic.is_empty())
}
fn constant_on_pair(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.is_constant() && ctx.size() >= 2)
}
fn k_is_one(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.orbit()?.k == 1)
}
fn off_orbit_empty(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.basis()?.off_orbit.is_empty())
}
fn orbit_covers(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.orbit()?.covers_carrier())
}
fn own_space_crisp(ctx: &mut EvalCtx) -> Result<bool> {
    ctx.own_space_is_crisp()
}
fn preimage_fixes_off_orbit(ctx: &mut EvalCtx) -> Result<bool> {
    let c = ctx.basis()?.off_orbit.clone();
    Ok(zadeh_preimage(&ctx.instance.f, &c)? == c)
}
fn complement_family_covers(ctx: &mut EvalCtx) -> Result<bool> {
    // sup over n of (1 - grade of x in member n): a periodic element has
    // complement grade 0 in every member, otherwise the grades (n-1)/n
    // approach 1; so the sup is 1 everywhere exactly when no element is
    // periodic
    let periodic = ctx.profile().periodic.clone();
    Ok(ctx
        .instance
        .f
        .carrier()
        .elements()
        .all(|x| !periodic.contains(&x)))
}
fn chains_equal(ctx: &mut EvalCtx) -> Result<bool> {
    let a = ctx.tau1_space().clone();
    let b = ctx.tau2_space().clone();
    Ok(topologies_equal(&a, &b)?.equal)
}
fn tau1_differs_from_tau3(ctx: &mut EvalCtx) -> Result<bool> {
    let a = ctx.tau1_space().clone();
    let b = ctx.own_space()?.clone();
    Ok(!topologies_equal(&a, &b)?.equal)
}
fn tau2_equals_tau3(ctx: &mut EvalCtx) -> Result<bool> {
    let a = ctx.tau2_space().clone();
    let b = ctx.own_space()?.clone();
    Ok(topologies_equal(&a, &b)?.equal)
}
fn onto_full_orbit_k_one(ctx: &mut EvalCtx) -> Result<bool> {
    let covers = ctx.orbit()?.covers_carrier();
    let k = ctx.orbit()?.k;
    Ok(ctx.profile().onto && covers && k == 1)
}
fn off_orbit_at_most_singleton_and_fixed_base(ctx: &mut EvalCtx) -> Result<bool> {
    let support = ctx.basis()?.off_orbit.support().len();
    let fixed = ctx.orbit()?.len() == 1;
    Ok(support <= 1 && fixed)
}
fn base_point_fixed(ctx: &mut EvalCtx) -> Result<bool> {
    Ok(ctx.orbit()?.len() == 1)
}

/// The full registry, in source order.
pub fn theorem_registry() -> Vec<TheoremClaim> {
    vec![
        TheoremClaim {
            id: "Prop2.2",
            description: "if every element is periodic, the complements of the periodic-point \
                          chain form a base (their sup covers the carrier)",
            direction: Direction::Implies,
            expectation: Expectation::ReportOnly,
            note: "statement and computation disagree: with every element periodic each \
                   complement member is empty and the family cannot cover; the computation \
                   behind it presumes no periodic points, which no finite carrier satisfies. \
                   The uniform (n-1)/n family itself is exercised symbolically in the \
                   construction tests.",
            applies: on_tau1,
            hypothesis: all_periodic,
            conclusion: complement_family_covers,
        },
        TheoremClaim {
            id: "Lemma2.4",
            description: "an onto map makes the image-shell space indiscrete",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: onto,
            conclusion: |ctx| Ok(ctx.own_space()?.materialize()?.len() == 2),
        },
        TheoremClaim {
            id: "Lemma2.6.1",
            description: "the off-orbit open is empty iff the orbit covers the carrier",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau3,
            hypothesis: off_orbit_empty,
            conclusion: orbit_covers,
        },
        TheoremClaim {
            id: "Lemma2.6.2",
            description: "every grade of the orbit topology is 0 or 1 iff k = 1",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "holds whenever the orbit has at least two points; on a fixed-point \
                   orbit the 1/k branch of the membership rule is vacuous and the \
                   topology is crisp for every k, so the sweep finds counterexamples \
                   there.",
            applies: on_tau3,
            hypothesis: own_space_crisp,
            conclusion: k_is_one,
        },
        TheoremClaim {
            id: "Thm2.7",
            description: "on the periodic-point space, f is onto iff f is open",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau1,
            hypothesis: onto,
            conclusion: open_map,
        },
        TheoremClaim {
            id: "Thm2.8",
            description: "on the periodic-point space, a one-to-one f is continuous",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau1,
            hypothesis: injective,
            conclusion: continuous,
        },
        TheoremClaim {
            id: "Ex2.9",
            description: "a constant map on two or more points is continuous on the \
                          periodic-point space without being one-to-one",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "constructive existence: continuity does not require injectivity.",
            applies: on_tau1,
            hypothesis: constant_on_pair,
            conclusion: |ctx| Ok(ctx.map_rep()?.continuous && !ctx.profile().injective),
        },
        TheoremClaim {
            id: "Thm2.10",
            description: "on the image-shell space, f is open iff f is onto",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: open_map,
            conclusion: onto,
        },
        TheoremClaim {
            id: "Thm2.11",
            description: "on the image-shell space, an onto f is continuous",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: onto,
            conclusion: continuous,
        },
        TheoremClaim {
            id: "Ex2.12",
            description: "a constant map on two or more points is continuous on the \
                          image-shell space without being onto",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "constructive existence: continuity does not require surjectivity.",
            applies: on_tau2,
            hypothesis: constant_on_pair,
            conclusion: |ctx| Ok(ctx.map_rep()?.continuous && !ctx.profile().onto),
        },
        TheoremClaim {
            id: "Thm2.13",
            description: "on the orbit space, f is open iff f is onto",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "orbit spaces require a one-to-one f, which on a finite carrier is \
                   onto; the image of each basis set is the successor basis set.",
            applies: on_tau3,
            hypothesis: onto,
            conclusion: open_map,
        },
        TheoremClaim {
            id: "Lemma2.14",
            description: "the preimage of the off-orbit open is itself",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau3,
            hypothesis: always,
            conclusion: preimage_fixes_off_orbit,
        },
        TheoremClaim {
            id: "Thm2.15",
            description: "on the orbit space, k = 1 makes f continuous",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau3,
            hypothesis: k_is_one,
            conclusion: continuous,
        },
        TheoremClaim {
            id: "Thm2.15-converse",
            description: "on the orbit space, a continuous f forces k = 1",
            direction: Direction::Implies,
            expectation: Expectation::ReportOnly,
            note: "expected to fail: every one-to-one instance is continuous (preimages \
                   rotate the basis), so any orbit instance with k >= 2 is a one-to-one \
                   counterexample, stronger than the usual non-injective one.",
            applies: on_tau3,
            hypothesis: continuous,
            conclusion: k_is_one,
        },
        TheoremClaim {
            id: "Prop3.1",
            description: "the periodic-point space is compact",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau1,
            hypothesis: always,
            conclusion: compact,
        },
        TheoremClaim {
            id: "Prop3.2",
            description: "the periodic-point space is connected",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau1,
            hypothesis: always,
            conclusion: connected,
        },
        TheoremClaim {
            id: "Prop3.3",
            description: "the periodic-point space is not T0 (equal-degree pairs)",
            direction: Direction::Implies,
            expectation: Expectation::ReportOnly,
            note: "needs at least two elements, hence the restriction. Convention-bound: \
                   with thresholds below the least positive grade of the window no pair \
                   separates, so the claim holds here; over the unwindowed chain a \
                   carrier with exactly one periodic and one non-periodic element would \
                   separate every pair. The stable core of the argument (same-class \
                   pairs never separate) is tested directly.",
            applies: on_tau1_pairs,
            hypothesis: always,
            conclusion: not_t0_equal_degree_pairs,
        },
        TheoremClaim {
            id: "Prop3.4",
            description: "the periodic-point space is regular iff no element is periodic",
            direction: Direction::Iff,
            expectation: Expectation::ReportOnly,
            note: "vacuously broken on finite carriers: some element is always periodic, \
                   yet a bijection makes the space indiscrete and thus regular. The \
                   regular direction of the argument is exercised on the symbolic \
                   complement chain instead.",
            applies: on_tau1,
            hypothesis: regular,
            conclusion: no_periodic_points,
        },
        TheoremClaim {
            id: "Remark3.5",
            description: "the periodic-point space is normal",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau1,
            hypothesis: always,
            conclusion: normal,
        },
        TheoremClaim {
            id: "Prop3.6",
            description: "each induced space is Lindelöf",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "the base is countable in every construction.",
            applies: everywhere,
            hypothesis: always,
            conclusion: lindelof,
        },
        TheoremClaim {
            id: "Prop3.7",
            description: "the image-shell space is connected",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: always,
            conclusion: connected,
        },
        TheoremClaim {
            id: "Prop3.8",
            description: "the image-shell space is compact",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: always,
            conclusion: compact,
        },
        TheoremClaim {
            id: "Prop3.9",
            description: "the image-shell space is not T0 (equal-degree pairs)",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "needs at least two elements, hence the restriction; every basic open \
                   holds every element at positive grade.",
            applies: on_tau2_pairs,
            hypothesis: always,
            conclusion: not_t0_equal_degree_pairs,
        },
        TheoremClaim {
            id: "Prop3.10",
            description: "the image-shell space is regular iff f is onto",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: regular,
            conclusion: onto,
        },
        TheoremClaim {
            id: "Prop3.11",
            description: "the image-shell space is normal",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau2,
            hypothesis: always,
            conclusion: normal,
        },
        TheoremClaim {
            id: "Prop3.12",
            description: "the orbit space is connected iff the off-orbit open is empty",
            direction: Direction::Iff,
            expectation: Expectation::Asserted,
            note: "",
            applies: on_tau3,
            hypothesis: connected,
            conclusion: off_orbit_empty,
        },
        TheoremClaim {
            id: "Prop3.13",
            description: "the orbit space with finitely many distinct basis sets is compact",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "finite branch only: on a finite carrier the residue set is always \
                   finite, so the non-compact branch is unreachable here and recorded \
                   as such rather than dropped.",
            applies: on_tau3,
            hypothesis: always,
            conclusion: compact,
        },
        TheoremClaim {
            id: "Prop3.14",
            description: "the orbit space is T0 (equal-degree pairs) iff the off-orbit set \
                          has at most one element and the base point is fixed",
            direction: Direction::Iff,
            expectation: Expectation::ReportOnly,
            note: "holds under the equal-degree-pair convention; the all-pairs convention \
                   can reject the two-point space the forward direction builds, so the \
                   claim is convention-bound.",
            applies: on_tau3,
            hypothesis: t0_equal_degree_pairs,
            conclusion: off_orbit_at_most_singleton_and_fixed_base,
        },
        TheoremClaim {
            id: "Prop3.15",
            description: "the orbit space is regular iff the base point is fixed",
            direction: Direction::Iff,
            expectation: Expectation::ReportOnly,
            note: "the converse argument needs the grade (k-1)/k to be positive, hence \
                   k >= 2; with k = 1 a full single cycle collapses the space to the \
                   indiscrete one, which is vacuously regular with a moving base point, \
                   and the sweep records exactly that.",
            applies: on_tau3,
            hypothesis: regular,
            conclusion: base_point_fixed,
        },
        TheoremClaim {
            id: "Prop3.16",
            description: "the orbit space is normal",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "asserted as stated. The sweep refutes it on two-point orbits with \
                   k >= 2: closure-generated closed sets such as (0, 1/2) and (1/2, 0) \
                   are disjoint and nonempty, yet every pair of nonempty opens overlaps \
                   on the orbit at grade at least 1/k, so no disjoint open separation \
                   exists. The two-case argument behind the claim only considers \
                   complements of basis members.",
            applies: on_tau3,
            hypothesis: always,
            conclusion: normal,
        },
        TheoremClaim {
            id: "Thm4.1",
            description: "if every element is periodic, the periodic-point and image-shell \
                          topologies coincide",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "forward direction only; the converse is registered separately.",
            applies: on_tau1,
            hypothesis: all_periodic,
            conclusion: chains_equal,
        },
        TheoremClaim {
            id: "Thm4.1-converse",
            description: "if the periodic-point and image-shell topologies coincide, every \
                          element is periodic",
            direction: Direction::Implies,
            expectation: Expectation::ReportOnly,
            note: "expected to fail: on the two-point constant map both chains have the \
                   members (1, 1/n) even though one element is not periodic. The grade \
                   laws 1/n and min(1, j/n) coincide pointwise whenever every non-core \
                   element sits in the first shell.",
            applies: on_tau1,
            hypothesis: chains_equal,
            conclusion: all_periodic,
        },
        TheoremClaim {
            id: "Thm4.2",
            description: "the periodic-point and orbit topologies never coincide",
            direction: Direction::Implies,
            expectation: Expectation::Asserted,
            note: "asserted as stated. The sweep refutes the 'never': one-to-one maps on \
                   a finite carrier are bijections, making the periodic-point space \
                   indiscrete, and whenever the orbit space degenerates to the \
                   indiscrete one (a one-element carrier, or a full single cycle with \
                   k = 1) the two coincide. The distinguishing argument (an open with a \
                   zero grade) needs a nonempty off-orbit set.",
            applies: on_tau3,
            hypothesis: always,
            conclusion: tau1_differs_from_tau3,
        },
        TheoremClaim {
            id: "Thm4.3",
            description: "the image-shell and orbit topologies coincide iff f is onto, the \
                          orbit covers the carrier and k = 1",
            direction: Direction::Iff,
            expectation: Expectation::ReportOnly,
            note: "the forward direction holds; the converse fails on a one-element \
                   carrier, where the orbit space is indiscrete for every k.",
            applies: on_tau3,
            hypothesis: tau2_equals_tau3,
            conclusion: onto_full_orbit_k_one,
        },
    ]
}

/// Ids of the asserted subset, for coverage tests and sweep summaries.
pub fn asserted_ids() -> BTreeSet<&'static str> {
    theorem_registry()
        .iter()
        .filter(|c| c.expectation == Expectation::Asserted)
        .map(|c| c.id)
        .collect()
}
