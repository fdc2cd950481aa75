//! The three fuzzy topologies induced by a self-map.
//!
//! Two of them (`tau1`, `tau2`) are nested chains `B_1 ⊇ B_2 ⊇ ...` given
//! by closed-form grade rules; they are represented symbolically by
//! [`ChainFamily`] and materialized on demand through a finite window.
//! The third (`tau3`) is generated from the orbit basis `{C} ∪ {C_n}` by
//! closing under pointwise max and min.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::endo::{EndoFunction, OrbitData};
use crate::error::{Error, Result};
use crate::fuzzy::{Carrier, FuzzySet};
use crate::grade::Grade;

/// Which chain construction a [`ChainFamily`] embodies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// `tau1`: grade 1 on periodic points, `1/n` elsewhere. Decreasing.
    Tau1 { periodic: BTreeSet<usize> },
    /// The complement family of `tau1` for a map without periodic points:
    /// uniform `(n-1)/n`. Increasing.
    Tau1Complement,
    /// `tau2`: grade 1 on the eventual image, `min(1, j/m)` for shell `j`.
    /// Decreasing.
    Tau2 { shell_index: Vec<usize> },
}

/// An index-parameterized nested family of fuzzy sets with a closed-form
/// grade rule; the symbolic form of the chain bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainFamily {
    carrier: Arc<Carrier>,
    kind: ChainKind,
}

impl ChainFamily {
    /// The periodic-point chain of `f`.
    pub fn tau1(f: &EndoFunction) -> ChainFamily {
        ChainFamily {
            carrier: Arc::clone(f.carrier()),
            kind: ChainKind::Tau1 {
                periodic: f.profile().periodic,
            },
        }
    }

    /// The image-shell chain of `f`.
    pub fn tau2(f: &EndoFunction) -> ChainFamily {
        ChainFamily {
            carrier: Arc::clone(f.carrier()),
            kind: ChainKind::Tau2 {
                shell_index: f.nested_image_partition().shell_index,
            },
        }
    }

    /// The complement chain of `f`, defined only when `f` has no periodic
    /// point. On a finite carrier some element is always periodic, so this
    /// constructor always fails there; it exists to enforce and explain
    /// that hypothesis. Use [`ChainFamily::tau1_complement_symbolic`] for
    /// the symbolic family itself.
    pub fn tau1_complement(f: &EndoFunction) -> Result<ChainFamily> {
        for x in f.carrier().elements() {
            let mut y = x;
            for m in 1..=f.carrier().size() {
                y = f.apply(y);
                if y == x {
                    return Err(Error::PeriodicPointPresent { x, m });
                }
            }
        }
        Ok(Self::tau1_complement_symbolic(Arc::clone(f.carrier())))
    }

    /// The uniform `(n-1)/n` family over a notional carrier, representing
    /// the complement chain of a fixed-point-free map.
    pub fn tau1_complement_symbolic(carrier: Arc<Carrier>) -> ChainFamily {
        ChainFamily {
            carrier,
            kind: ChainKind::Tau1Complement,
        }
    }

    /// A periodic-point chain with the periodic set prescribed rather
    /// than derived, for representing maps that exist only on larger
    /// carriers (a successor-like map has no periodic points at all, a
    /// structure no finite self-map realizes).
    pub fn tau1_symbolic(carrier: Arc<Carrier>, periodic: BTreeSet<usize>) -> ChainFamily {
        ChainFamily {
            carrier,
            kind: ChainKind::Tau1 { periodic },
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn kind(&self) -> &ChainKind {
        &self.kind
    }

    /// Closed-form grade of element `x` in the member with index `n >= 1`.
    pub fn grade_at(&self, n: u32, x: usize) -> Grade {
        let n = n.max(1);
        match &self.kind {
            ChainKind::Tau1 { periodic } => {
                if periodic.contains(&x) {
                    Grade::ONE
                } else {
                    Grade::unit_fraction(n)
                }
            }
            ChainKind::Tau1Complement => Grade::unit_fraction(n).complement(),
            ChainKind::Tau2 { shell_index } => {
                let j = shell_index[x];
                if j == 0 {
                    Grade::ONE
                } else {
                    Grade::capped_fraction(j as u32, n)
                }
            }
        }
    }

    /// The member with index `n` as an explicit fuzzy set.
    pub fn member(&self, n: u32) -> FuzzySet {
        let grades = self
            .carrier
            .elements()
            .map(|x| self.grade_at(n, x))
            .collect();
        FuzzySet::new(Arc::clone(&self.carrier), grades).expect("carrier-sized grade vector")
    }

    /// Whether grades shrink as the index grows (the `tau1`/`tau2` shape).
    pub fn is_decreasing(&self) -> bool {
        !matches!(self.kind, ChainKind::Tau1Complement)
    }

    /// Display name of the n-th member (`A_n`, `A_n^c` or `K_n`).
    pub fn member_name(&self, n: u32) -> String {
        match self.kind {
            ChainKind::Tau1 { .. } => format!("A{n}"),
            ChainKind::Tau1Complement => format!("A{n}c"),
            ChainKind::Tau2 { .. } => format!("K{n}"),
        }
    }

    /// Does a grade vector coincide with some member of the (unwindowed)
    /// family? Returns the least such index.
    ///
    /// Solved in closed form from the grade rule, not by scanning a
    /// materialized family.
    pub fn member_matching(&self, grades: &[Grade]) -> Option<u32> {
        match &self.kind {
            ChainKind::Tau1 { periodic } => {
                let mut needed: Option<Grade> = None;
                for x in self.carrier.elements() {
                    if periodic.contains(&x) {
                        if !grades[x].is_one() {
                            return None;
                        }
                    } else {
                        match needed {
                            None => needed = Some(grades[x]),
                            Some(g) if g == grades[x] => {}
                            _ => return None,
                        }
                    }
                }
                match needed {
                    // all periodic: every member is X
                    None => {
                        if grades.iter().all(|g| g.is_one()) {
                            Some(1)
                        } else {
                            None
                        }
                    }
                    Some(g) => {
                        // need g = 1/n exactly
                        if g.numer() == 1 {
                            Some(g.denom() as u32)
                        } else {
                            None
                        }
                    }
                }
            }
            ChainKind::Tau1Complement => {
                let g = grades[0];
                if grades.iter().any(|h| *h != g) {
                    return None;
                }
                // g = (n-1)/n means 1 - g = 1/n
                let inv = g.complement();
                if inv.numer() == 1 {
                    Some(inv.denom() as u32)
                } else {
                    None
                }
            }
            ChainKind::Tau2 { shell_index } => {
                // Candidate m values are pinned by any non-saturated shell
                // coordinate; otherwise every small m works and we take the
                // least one consistent with all coordinates.
                let mut candidate: Option<u32> = None;
                for x in self.carrier.elements() {
                    let j = shell_index[x];
                    if j == 0 {
                        if !grades[x].is_one() {
                            return None;
                        }
                    } else if !grades[x].is_one() {
                        // grade must be exactly j/m for some integer m > j
                        let g = grades[x];
                        if g.is_zero() {
                            // every member is strictly positive on shells
                            return None;
                        }
                        // m = j * denom / numer must be integral
                        let j = j as i64;
                        if (j * g.denom()) % g.numer() != 0 {
                            return None;
                        }
                        let m = (j * g.denom()) / g.numer();
                        if m <= j {
                            return None;
                        }
                        match candidate {
                            None => candidate = Some(m as u32),
                            Some(c) if i64::from(c) == m => {}
                            _ => return None,
                        }
                    }
                }
                let m = match candidate {
                    Some(m) => m,
                    // every coordinate saturated: K_1 fits
                    None => 1,
                };
                // verify all coordinates against the solved index
                for x in self.carrier.elements() {
                    if self.grade_at(m, x) != grades[x] {
                        return None;
                    }
                }
                Some(m)
            }
        }
    }
}

/// Where an explicit topology came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    MaterializedChain { window: u32 },
    OrbitBasis,
    Custom,
}

/// A finite fuzzy topology held as an explicit, deduplicated, canonically
/// sorted family of open sets. Always contains the empty set and the
/// whole carrier and is closed under pairwise max/min.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitTopology {
    carrier: Arc<Carrier>,
    opens: Vec<FuzzySet>,
    provenance: Provenance,
}

impl ExplicitTopology {
    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn opens(&self) -> &[FuzzySet] {
        &self.opens
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        false // ∅ and X are always present
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.opens
            .binary_search_by(|o| o.grades().cmp(set.grades()))
            .is_ok()
    }

    /// The closed sets: complements of the opens, canonically sorted.
    pub fn closeds(&self) -> Vec<FuzzySet> {
        let mut cs: Vec<FuzzySet> = self.opens.iter().map(|o| o.complement()).collect();
        cs.sort();
        cs.dedup();
        cs
    }

    /// Every distinct grade value appearing in the opens.
    pub fn occurring_grades(&self) -> BTreeSet<Grade> {
        let mut out = BTreeSet::new();
        for o in &self.opens {
            out.extend(o.grades().iter().copied());
        }
        out
    }
}

fn canonicalize(mut opens: Vec<FuzzySet>) -> Vec<FuzzySet> {
    opens.sort();
    opens.dedup();
    opens
}

/// Closes a covering family under pairwise max/min and adjoins the empty
/// set and the whole carrier.
///
/// Worklist fixpoint with deduplication by exact grade vector; finite
/// because every coordinate only ever takes grades already present in the
/// inputs (plus 0 and 1).
pub fn generate_topology(carrier: &Arc<Carrier>, basis: &[FuzzySet]) -> Result<ExplicitTopology> {
    for (i, b) in basis.iter().enumerate() {
        if b.carrier() != carrier {
            return Err(Error::CarrierMismatch {
                left: carrier.size(),
                right: b.carrier().size(),
            });
        }
        let _ = i;
    }
    // the basis must cover: pointwise sup equal to 1 everywhere
    for x in carrier.elements() {
        let sup = basis
            .iter()
            .map(|b| b.grade(x))
            .fold(Grade::ZERO, Grade::max);
        if !sup.is_one() {
            return Err(Error::DoesNotCover { element: x });
        }
    }

    let mut family: BTreeSet<Vec<Grade>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<Grade>> = VecDeque::new();
    let push = |family: &mut BTreeSet<Vec<Grade>>, queue: &mut VecDeque<Vec<Grade>>, v: Vec<Grade>| {
        if family.insert(v.clone()) {
            queue.push_back(v);
        }
    };
    push(&mut family, &mut queue, vec![Grade::ZERO; carrier.size()]);
    push(&mut family, &mut queue, vec![Grade::ONE; carrier.size()]);
    for b in basis {
        push(&mut family, &mut queue, b.grades().to_vec());
    }
    while let Some(v) = queue.pop_front() {
        let snapshot: Vec<Vec<Grade>> = family.iter().cloned().collect();
        for w in snapshot {
            let mut mx = Vec::with_capacity(v.len());
            let mut mn = Vec::with_capacity(v.len());
            for (a, b) in v.iter().zip(&w) {
                mx.push((*a).max(*b));
                mn.push((*a).min(*b));
            }
            push(&mut family, &mut queue, mx);
            push(&mut family, &mut queue, mn);
        }
    }

    let opens = family
        .into_iter()
        .map(|grades| FuzzySet::new(Arc::clone(carrier), grades).expect("sized vector"))
        .collect();
    Ok(ExplicitTopology {
        carrier: Arc::clone(carrier),
        opens: canonicalize(opens),
        provenance: Provenance::Custom,
    })
}

/// Materializes a finite window of a chain family.
///
/// The opens are the empty set, the whole carrier and the members with
/// indices `1..=window`. A chain is already closed under max/min (the
/// union of two members is the one with the extreme index), so no closure
/// pass is needed; debug builds assert the nesting.
pub fn materialize_chain(chain: &ChainFamily, window: u32) -> Result<ExplicitTopology> {
    if window == 0 {
        return Err(Error::ZeroWindow);
    }
    let carrier = Arc::clone(chain.carrier());
    let mut opens = vec![
        FuzzySet::empty(Arc::clone(&carrier)),
        FuzzySet::whole(Arc::clone(&carrier)),
    ];
    let mut prev: Option<FuzzySet> = None;
    for n in 1..=window {
        let m = chain.member(n);
        if let Some(p) = &prev {
            debug_assert!(
                if chain.is_decreasing() {
                    m.leq(p).unwrap()
                } else {
                    p.leq(&m).unwrap()
                },
                "chain members must be nested"
            );
        }
        prev = Some(m.clone());
        opens.push(m);
    }
    Ok(ExplicitTopology {
        carrier,
        opens: canonicalize(opens),
        provenance: Provenance::MaterializedChain { window },
    })
}

/// The orbit basis for `tau3`: the crisp off-orbit set `C` and the cycle
/// of sets `C_0, ..., C_{L-1}` with a 1 at the n-th orbit point, `1/k`
/// elsewhere on the orbit and 0 off it.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    /// `C`: grade 1 off the orbit, 0 on it. Empty iff the orbit covers X.
    pub off_orbit: FuzzySet,
    /// `C_n` indexed by orbit position.
    pub around: Vec<FuzzySet>,
}

impl OrbitBasis {
    pub fn all_members(&self) -> Vec<FuzzySet> {
        let mut v = vec![self.off_orbit.clone()];
        v.extend(self.around.iter().cloned());
        v
    }
}

pub fn tau3_basis(orbit: &OrbitData) -> OrbitBasis {
    let carrier = Arc::clone(orbit.carrier());
    let off_orbit = FuzzySet::indicator(Arc::clone(&carrier), orbit.off_orbit.iter().copied());
    let inner = Grade::unit_fraction(orbit.k);
    let around = (0..orbit.len())
        .map(|n| {
            let grades = carrier
                .elements()
                .map(|x| match orbit.position(x) {
                    Some(p) if p == n => Grade::ONE,
                    Some(_) => inner,
                    None => Grade::ZERO,
                })
                .collect();
            FuzzySet::new(Arc::clone(&carrier), grades).expect("sized vector")
        })
        .collect();
    OrbitBasis { off_orbit, around }
}

/// Builds the full `tau3` topology for an orbit.
pub fn tau3_topology(orbit: &OrbitData) -> Result<ExplicitTopology> {
    let basis = tau3_basis(orbit);
    let mut t = generate_topology(orbit.carrier(), &basis.all_members())?;
    t.provenance = Provenance::OrbitBasis;
    Ok(t)
}

/// A topology handle: either a chain with a materialization window or an
/// explicit finite family. Property and map deciders accept either form;
/// for chains they run both a closed-form route and the materialized
/// route and insist the verdicts agree.
#[derive(Clone, Debug)]
pub enum Space {
    Chain { family: ChainFamily, window: u32 },
    Explicit(ExplicitTopology),
}

impl Space {
    pub fn tau1(f: &EndoFunction, window: u32) -> Space {
        Space::Chain {
            family: ChainFamily::tau1(f),
            window,
        }
    }

    pub fn tau2(f: &EndoFunction, window: u32) -> Space {
        Space::Chain {
            family: ChainFamily::tau2(f),
            window,
        }
    }

    pub fn tau3(f: &EndoFunction, x0: usize, k: u32) -> Result<Space> {
        let orbit = f.orbit(x0, k)?;
        Ok(Space::Explicit(tau3_topology(&orbit)?))
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        match self {
            Space::Chain { family, .. } => family.carrier(),
            Space::Explicit(t) => t.carrier(),
        }
    }

    /// The explicit form: materializes chains, passes explicit families
    /// through.
    pub fn materialize(&self) -> Result<ExplicitTopology> {
        match self {
            Space::Chain { family, window } => materialize_chain(family, *window),
            Space::Explicit(t) => Ok(t.clone()),
        }
    }

    /// Is a fuzzy set open here? For chains this is decided from the
    /// grade rule (any member index is admitted, not only those inside
    /// the window); ∅ and X are always open.
    pub fn is_open(&self, set: &FuzzySet) -> Result<bool> {
        if set.carrier() != self.carrier() {
            return Err(Error::CarrierMismatch {
                left: self.carrier().size(),
                right: set.carrier().size(),
            });
        }
        Ok(match self {
            Space::Chain { family, .. } => {
                set.is_empty() || set.is_whole() || family.member_matching(set.grades()).is_some()
            }
            Space::Explicit(t) => t.contains(set),
        })
    }
}

/// Default materialization window for a carrier: size + 2. Every property
/// decision on a chain is fixed by its order structure together with
/// `B_1 = X`, so the window only needs to reach past the carrier size to
/// exercise all distinct shell grades.
pub fn default_window(carrier_size: usize) -> u32 {
    carrier_size as u32 + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn endo(map: &[usize]) -> EndoFunction {
        let c = Carrier::of_size(map.len()).unwrap();
        EndoFunction::new(c, map.to_vec()).unwrap()
    }

    fn g(p: i64, q: i64) -> Grade {
        Grade::new(p, q).unwrap()
    }

    fn grades(set: &FuzzySet) -> Vec<Grade> {
        set.grades().to_vec()
    }

    #[test]
    fn tau1_of_cycle_is_constantly_whole() {
        let f = endo(&[1, 2, 0]);
        let chain = ChainFamily::tau1(&f);
        for n in 1..=6 {
            assert!(chain.member(n).is_whole());
        }
    }

    #[test]
    fn tau1_of_constant_map() {
        let f = endo(&[0, 0, 0]);
        let chain = ChainFamily::tau1(&f);
        assert_eq!(grades(&chain.member(2)), vec![g(1, 1), g(1, 2), g(1, 2)]);
        assert_eq!(grades(&chain.member(1)), vec![g(1, 1), g(1, 1), g(1, 1)]);
    }

    #[test]
    fn symbolic_tau1_without_periodic_points_is_uniform() {
        // the successor-style chain: every member constant at 1/n
        let c = Carrier::of_size(4).unwrap();
        let chain = ChainFamily::tau1_symbolic(c, BTreeSet::new());
        for n in 1..=8u32 {
            for x in 0..4 {
                assert_eq!(chain.grade_at(n, x), Grade::unit_fraction(n));
            }
        }
    }

    #[test]
    fn tau1_complement_symbolic_rule() {
        let c = Carrier::of_size(3).unwrap();
        let chain = ChainFamily::tau1_complement_symbolic(c);
        assert_eq!(chain.grade_at(1, 0), Grade::ZERO);
        assert_eq!(chain.grade_at(3, 2), g(2, 3));
        // the intersection of members n and m is the member min(n, m)
        for n in 1..=8u32 {
            for m in 1..=8u32 {
                let meet = chain.member(n).intersection(&chain.member(m)).unwrap();
                assert_eq!(meet, chain.member(n.min(m)));
            }
        }
    }

    #[test]
    fn tau1_complement_requires_no_periodic_points() {
        let f = endo(&[1, 2, 0]);
        assert!(matches!(
            ChainFamily::tau1_complement(&f),
            Err(Error::PeriodicPointPresent { .. })
        ));
        // every finite map has a periodic point, so any map fails
        let f = endo(&[1, 2, 3, 4, 0]);
        assert!(ChainFamily::tau1_complement(&f).is_err());
    }

    #[test]
    fn tau2_members_match_worked_two_shell_example() {
        let f = endo(&[0, 3, 4, 0, 0]);
        let chain = ChainFamily::tau2(&f);
        assert!(chain.member(1).is_whole());
        assert_eq!(
            grades(&chain.member(2)),
            vec![g(1, 1), g(1, 2), g(1, 2), g(1, 1), g(1, 1)]
        );
        assert_eq!(
            grades(&chain.member(3)),
            vec![g(1, 1), g(1, 3), g(1, 3), g(2, 3), g(2, 3)]
        );
    }

    #[test]
    fn chain_intersection_rule_exhaustive() {
        // members of either decreasing chain intersect to the larger index
        for size in 1..=4usize {
            let total = size.pow(size as u32);
            for code in 0..total {
                let mut map = Vec::with_capacity(size);
                let mut c = code;
                for _ in 0..size {
                    map.push(c % size);
                    c /= size;
                }
                let f = endo(&map);
                for chain in [ChainFamily::tau1(&f), ChainFamily::tau2(&f)] {
                    assert!(chain.member(1).is_whole());
                    for n in 1..=6u32 {
                        for m in 1..=6u32 {
                            let meet = chain.member(n).intersection(&chain.member(m)).unwrap();
                            assert_eq!(meet, chain.member(n.max(m)), "map {map:?}");
                            let join = chain.member(n).union(&chain.member(m)).unwrap();
                            assert_eq!(join, chain.member(n.min(m)), "map {map:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn member_matching_solves_indices() {
        let f = endo(&[0, 3, 4, 0, 0]);
        let t1 = ChainFamily::tau1(&f);
        let t2 = ChainFamily::tau2(&f);
        for n in 1..=9u32 {
            assert_eq!(t1.member_matching(t1.member(n).grades()), Some(n));
            assert_eq!(t2.member_matching(t2.member(n).grades()), Some(n));
        }
        // X matches index 1 for a bijection's tau1 even though all members agree
        let id = endo(&[0, 1]);
        let t = ChainFamily::tau1(&id);
        assert_eq!(t.member_matching(t.member(7).grades()), Some(1));
        // a non-member
        let c = Carrier::of_size(5).unwrap();
        let odd = FuzzySet::new(c, vec![g(1, 1), g(1, 2), g(1, 3), g(1, 1), g(1, 1)]).unwrap();
        assert_eq!(t2.member_matching(odd.grades()), None);
    }

    #[test]
    fn materialized_tau1_of_bijection_is_indiscrete() {
        let f = endo(&[1, 2, 0]);
        let t = materialize_chain(&ChainFamily::tau1(&f), 6).unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn materialized_tau1_of_constant_map_window_three() {
        let f = endo(&[0, 0]);
        let t = materialize_chain(&ChainFamily::tau1(&f), 3).unwrap();
        let expected: BTreeSet<Vec<Grade>> = [
            vec![g(0, 1), g(0, 1)],
            vec![g(1, 1), g(1, 1)],
            vec![g(1, 1), g(1, 2)],
            vec![g(1, 1), g(1, 3)],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<Grade>> = t.opens().iter().map(|o| o.grades().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn materialized_tau2_window_three_matches_example() {
        let f = endo(&[0, 3, 4, 0, 0]);
        let chain = ChainFamily::tau2(&f);
        let t = materialize_chain(&chain, 3).unwrap();
        assert_eq!(t.len(), 4); // ∅, K1 = X, K2, K3
        assert!(t.contains(&chain.member(2)));
        assert!(t.contains(&chain.member(3)));
    }

    #[test]
    fn onto_maps_give_indiscrete_tau2_for_every_window() {
        // all bijections on up to 4 elements
        for size in 1..=4usize {
            let mut perm: Vec<usize> = (0..size).collect();
            loop {
                let f = endo(&perm);
                if f.profile().onto {
                    for w in 1..=6 {
                        let t = materialize_chain(&ChainFamily::tau2(&f), w).unwrap();
                        assert_eq!(t.len(), 2);
                    }
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn orbit_basis_three_cycle() {
        let f = endo(&[1, 2, 0]);
        let orbit = f.orbit(0, 2).unwrap();
        let basis = tau3_basis(&orbit);
        assert!(basis.off_orbit.is_empty()); // the orbit covers X
        assert_eq!(grades(&basis.around[0]), vec![g(1, 1), g(1, 2), g(1, 2)]);
        assert_eq!(grades(&basis.around[1]), vec![g(1, 2), g(1, 1), g(1, 2)]);
    }

    #[test]
    fn orbit_basis_with_fixed_point_k_one_is_crisp() {
        let f = endo(&[1, 0, 2]);
        let orbit = f.orbit(0, 1).unwrap();
        let basis = tau3_basis(&orbit);
        for cn in &basis.around {
            assert_eq!(grades(cn), vec![g(1, 1), g(1, 1), g(0, 1)]);
        }
    }

    #[test]
    fn orbit_basis_swap_plus_fixed() {
        let f = endo(&[1, 0, 2]);
        let orbit = f.orbit(0, 2).unwrap();
        let basis = tau3_basis(&orbit);
        assert_eq!(grades(&basis.off_orbit), vec![g(0, 1), g(0, 1), g(1, 1)]);
        assert_eq!(grades(&basis.around[1]), vec![g(1, 2), g(1, 1), g(0, 1)]);
    }

    #[test]
    fn orbit_basis_postconditions_exhaustive() {
        // C ∩ C_n = ∅; C ∪ (∪ C_n) = X; C_n ∩ C_m uniform 1/k on the orbit
        for size in 1..=4usize {
            let mut perm: Vec<usize> = (0..size).collect();
            loop {
                let f = endo(&perm);
                for x0 in 0..size {
                    for k in 1..=3u32 {
                        let orbit = f.orbit(x0, k).unwrap();
                        let basis = tau3_basis(&orbit);
                        let mut acc = basis.off_orbit.clone();
                        for cn in &basis.around {
                            assert!(basis.off_orbit.disjoint_from(cn).unwrap());
                            acc = acc.union(cn).unwrap();
                        }
                        assert!(acc.is_whole());
                        for (n, cn) in basis.around.iter().enumerate() {
                            for (m, cm) in basis.around.iter().enumerate() {
                                if n == m {
                                    continue;
                                }
                                let meet = cn.intersection(cm).unwrap();
                                for x in 0..size {
                                    let expected = if orbit.position(x).is_some() {
                                        Grade::unit_fraction(k)
                                    } else {
                                        Grade::ZERO
                                    };
                                    assert_eq!(meet.grade(x), expected);
                                }
                            }
                        }
                    }
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }

    #[test]
    fn generate_topology_of_whole_alone() {
        let c = Carrier::of_size(2).unwrap();
        let t = generate_topology(&c, &[FuzzySet::whole(Arc::clone(&c))]).unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn generate_topology_requires_cover() {
        let c = Carrier::of_size(2).unwrap();
        let half = FuzzySet::new(Arc::clone(&c), vec![g(1, 1), g(1, 2)]).unwrap();
        assert!(matches!(
            generate_topology(&c, &[half]),
            Err(Error::DoesNotCover { element: 1 })
        ));
    }

    /// Independent membership test: in a distributive lattice, the family
    /// generated by a basis consists of joins of meets of basis members,
    /// so `v` is generated iff it equals the join of all meets below it.
    fn lattice_generated(basis: &[FuzzySet], v: &FuzzySet) -> bool {
        if v.is_empty() || v.is_whole() {
            return true;
        }
        let n = basis.len();
        let carrier = v.carrier();
        let mut join = FuzzySet::empty(Arc::clone(carrier));
        for mask in 1u32..(1 << n) {
            let mut meet = FuzzySet::whole(Arc::clone(carrier));
            for (i, b) in basis.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    meet = meet.intersection(b).unwrap();
                }
            }
            if meet.leq(v).unwrap() {
                join = join.union(&meet).unwrap();
            }
        }
        join == *v
    }

    #[test]
    fn three_cycle_orbit_topology_against_normal_form_oracle() {
        let f = endo(&[1, 2, 0]);
        let orbit = f.orbit(0, 2).unwrap();
        let basis = tau3_basis(&orbit).all_members();
        let t = generate_topology(f.carrier(), &basis).unwrap();
        // frozen from the normal-form enumeration below: ∅, X, the three
        // C_n, their three pairwise unions, and the uniform 1/2 set
        assert_eq!(t.len(), 9);
        // every open is generated, and everything generated is open
        let grid = [Grade::ZERO, g(1, 2), Grade::ONE];
        let mut candidates = vec![Vec::new()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for p in &candidates {
                for &v in &grid {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            candidates = next;
        }
        for cand in candidates {
            let set = FuzzySet::new(Arc::clone(f.carrier()), cand).unwrap();
            assert_eq!(t.contains(&set), lattice_generated(&basis, &set), "{set:?}");
        }
    }

    #[test]
    fn swap_plus_fixed_orbit_topology_contents() {
        let f = endo(&[1, 0, 2]);
        let orbit = f.orbit(0, 2).unwrap();
        let basis = tau3_basis(&orbit);
        let t = generate_topology(f.carrier(), &basis.all_members()).unwrap();
        let c = &basis.off_orbit;
        assert!(t.contains(c));
        for cn in &basis.around {
            assert!(t.contains(cn));
            assert!(t.contains(&c.union(cn).unwrap()));
        }
        let meet = basis.around[0].intersection(&basis.around[1]).unwrap();
        assert_eq!(grades(&meet), vec![g(1, 2), g(1, 2), g(0, 1)]);
        assert!(t.contains(&meet));
        assert_eq!(t.len(), 10);
    }

    #[test]
    fn closure_is_idempotent() {
        let f = endo(&[1, 0, 2]);
        let orbit = f.orbit(0, 2).unwrap();
        let t = tau3_topology(&orbit).unwrap();
        let again = generate_topology(t.carrier(), t.opens()).unwrap();
        assert_eq!(t.opens(), again.opens());
    }

    #[test]
    fn crisp_orbit_grades_characterize_k_one_when_orbit_is_long() {
        // with at least two orbit points, some grade is strictly fuzzy iff k > 1
        let f = endo(&[1, 0, 2]);
        for k in 1..=3u32 {
            let orbit = f.orbit(0, k).unwrap();
            let t = tau3_topology(&orbit).unwrap();
            let crisp = t.opens().iter().all(|o| o.is_crisp());
            assert_eq!(crisp, k == 1);
        }
    }

    #[test]
    fn space_is_open_agrees_with_materialization_inside_window() {
        let f = endo(&[0, 3, 4, 0, 0]);
        for space in [Space::tau1(&f, 6), Space::tau2(&f, 6)] {
            let t = space.materialize().unwrap();
            for o in t.opens() {
                assert!(space.is_open(o).unwrap());
            }
        }
    }

    #[test]
    fn default_window_is_size_plus_two() {
        assert_eq!(default_window(5), 7);
    }
}
