//! Fuzzy sets over a finite carrier, with the lattice operations
//! (pointwise max/min/complement) and the membership conventions used by
//! the rest of the crate.
//!
//! Everything here is immutable after construction and safe to share
//! across threads.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;

/// The underlying finite set of points, canonically indexed `0..size`.
///
/// Labels are optional display names; indices are the identity of elements
/// everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    size: usize,
    labels: Option<Vec<String>>,
}

impl Carrier {
    pub fn of_size(size: usize) -> Result<Arc<Carrier>> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(Arc::new(Carrier { size, labels: None }))
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Arc<Carrier>> {
        if labels.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::BadLabels);
            }
        }
        Ok(Arc::new(Carrier {
            size: labels.len(),
            labels: Some(labels),
        }))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    /// Display name for an element: its label when present, else the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

fn check_same_carrier(a: &FuzzySet, b: &FuzzySet) -> Result<()> {
    if a.carrier() != b.carrier() {
        return Err(Error::CarrierMismatch {
            left: a.carrier().size(),
            right: b.carrier().size(),
        });
    }
    Ok(())
}

/// A fuzzy subset of the carrier: one exact grade per element.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySet {
    carrier: Arc<Carrier>,
    grades: Vec<Grade>,
}

// Sets over the same carrier order lexicographically by grade vector;
// this is the canonical order used for deduplication and witnesses.
impl PartialOrd for FuzzySet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FuzzySet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.grades.cmp(&other.grades)
    }
}

impl FuzzySet {
    pub fn new(carrier: Arc<Carrier>, grades: Vec<Grade>) -> Result<FuzzySet> {
        if grades.len() != carrier.size() {
            return Err(Error::MapLengthMismatch {
                got: grades.len(),
                size: carrier.size(),
            });
        }
        Ok(FuzzySet { carrier, grades })
    }

    /// The empty fuzzy set: all grades 0.
    pub fn empty(carrier: Arc<Carrier>) -> FuzzySet {
        let grades = vec![Grade::ZERO; carrier.size()];
        FuzzySet { carrier, grades }
    }

    /// The whole space: all grades 1.
    pub fn whole(carrier: Arc<Carrier>) -> FuzzySet {
        let grades = vec![Grade::ONE; carrier.size()];
        FuzzySet { carrier, grades }
    }

    /// Crisp indicator of a set of elements.
    pub fn indicator<I: IntoIterator<Item = usize>>(carrier: Arc<Carrier>, members: I) -> FuzzySet {
        let mut grades = vec![Grade::ZERO; carrier.size()];
        for x in members {
            grades[x] = Grade::ONE;
        }
        FuzzySet { carrier, grades }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn grade(&self, x: usize) -> Grade {
        self.grades[x]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    pub fn is_whole(&self) -> bool {
        self.grades.iter().all(|g| g.is_one())
    }

    pub fn is_crisp(&self) -> bool {
        self.grades.iter().all(|g| g.is_crisp())
    }

    /// Elements with strictly positive grade.
    pub fn support(&self) -> Vec<usize> {
        self.carrier
            .elements()
            .filter(|&x| !self.grade(x).is_zero())
            .collect()
    }

    /// Pointwise max.
    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet> {
        check_same_carrier(self, other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(FuzzySet {
            carrier: Arc::clone(&self.carrier),
            grades,
        })
    }

    /// Pointwise min.
    pub fn intersection(&self, other: &FuzzySet) -> Result<FuzzySet> {
        check_same_carrier(self, other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(FuzzySet {
            carrier: Arc::clone(&self.carrier),
            grades,
        })
    }

    /// Pointwise `1 - grade`.
    pub fn complement(&self) -> FuzzySet {
        let grades = self.grades.iter().map(|g| g.complement()).collect();
        FuzzySet {
            carrier: Arc::clone(&self.carrier),
            grades,
        }
    }

    /// Pointwise containment: `self(x) <= other(x)` everywhere.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        check_same_carrier(self, other)?;
        Ok(self
            .grades
            .iter()
            .zip(&other.grades)
            .all(|(a, b)| a <= b))
    }

    /// Disjointness: pointwise min identically zero.
    pub fn disjoint_from(&self, other: &FuzzySet) -> Result<bool> {
        check_same_carrier(self, other)?;
        Ok(self
            .grades
            .iter()
            .zip(&other.grades)
            .all(|(a, b)| (*a).min(*b).is_zero()))
    }

    /// Crisp membership of an element under one of the two conventions:
    /// positive (`grade > 0`) or full (`grade = 1`).
    ///
    /// The deciders read "x in open U" as full membership and "x avoids
    /// closed F" as zero grade; both readings are exposed because informal
    /// usage mixes them.
    pub fn crisp_in(&self, x: usize, mode: CrispMode) -> bool {
        match mode {
            CrispMode::Positive => !self.grade(x).is_zero(),
            CrispMode::Full => self.grade(x).is_one(),
        }
    }

    /// Fuzzy point membership: `(x, p)` belongs to this set iff
    /// `p <= grade(x)`.
    pub fn contains_point(&self, p: &FuzzyPoint) -> bool {
        p.degree() <= self.grade(p.element())
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.grades.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for FuzzySet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.grades.serialize(s)
    }
}

/// Which crisp membership convention to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrispMode {
    Positive,
    Full,
}

/// A fuzzy point `(x, p)`: the fuzzy set supported at `x` with grade `p`.
///
/// Degree zero is excluded: a degree-0 point would belong to every set and
/// make every separation question vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FuzzyPoint {
    element: usize,
    degree: Grade,
}

impl FuzzyPoint {
    pub fn new(element: usize, degree: Grade) -> Result<FuzzyPoint> {
        if degree.is_zero() {
            return Err(Error::ZeroDegreePoint);
        }
        Ok(FuzzyPoint { element, degree })
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn degree(&self) -> Grade {
        self.degree
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn carrier(n: usize) -> Arc<Carrier> {
        Carrier::of_size(n).unwrap()
    }

    fn set(c: &Arc<Carrier>, gs: &[(i64, i64)]) -> FuzzySet {
        let grades = gs.iter().map(|&(p, q)| Grade::new(p, q).unwrap()).collect();
        FuzzySet::new(Arc::clone(c), grades).unwrap()
    }

    #[test]
    fn union_identity_and_complement_cases() {
        let c = carrier(2);
        let a = set(&c, &[(1, 2), (1, 3)]);
        let empty = FuzzySet::empty(Arc::clone(&c));
        assert_eq!(empty.union(&a).unwrap(), a);

        // union of the half set with its complement stays at 1/2
        let half = set(&c, &[(1, 2), (1, 2)]);
        assert_eq!(half.union(&half.complement()).unwrap(), half);
    }

    #[test]
    fn union_of_orbit_basis_members() {
        // C_0 and C_1 on a 3-cycle with k = 2
        let c = carrier(3);
        let c0 = set(&c, &[(1, 1), (1, 2), (1, 2)]);
        let c1 = set(&c, &[(1, 2), (1, 1), (1, 2)]);
        assert_eq!(c0.union(&c1).unwrap(), set(&c, &[(1, 1), (1, 1), (1, 2)]));
    }

    #[test]
    fn intersection_cases() {
        let c = carrier(2);
        let whole = FuzzySet::whole(Arc::clone(&c));
        let a = set(&c, &[(1, 2), (2, 3)]);
        assert_eq!(whole.intersection(&a).unwrap(), a);

        // chain members intersect to the higher index: A_2 and A_3 on a
        // carrier with one periodic and one non-periodic element
        let a2 = set(&c, &[(1, 1), (1, 2)]);
        let a3 = set(&c, &[(1, 1), (1, 3)]);
        assert_eq!(a2.intersection(&a3).unwrap(), a3);
    }

    #[test]
    fn complement_cases() {
        let c = carrier(3);
        let whole = FuzzySet::whole(Arc::clone(&c));
        assert!(whole.complement().is_empty());
        let a = set(&c, &[(1, 3), (1, 3), (1, 3)]);
        assert_eq!(a.complement(), set(&c, &[(2, 3), (2, 3), (2, 3)]));
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn leq_cases() {
        let c = carrier(2);
        let a = set(&c, &[(1, 1), (1, 2)]);
        let empty = FuzzySet::empty(Arc::clone(&c));
        assert!(empty.leq(&a).unwrap());

        let a2 = set(&c, &[(1, 1), (1, 2)]);
        let a3 = set(&c, &[(1, 1), (1, 3)]);
        assert!(a3.leq(&a2).unwrap());
        assert!(!a2.leq(&a3).unwrap());

        // K_1 = X is not below K_2 when a shell is nonempty
        let k1 = FuzzySet::whole(Arc::clone(&c));
        let k2 = set(&c, &[(1, 1), (1, 2)]);
        assert!(!k1.leq(&k2).unwrap());
        assert!(k2.leq(&k1).unwrap());
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let a = FuzzySet::whole(carrier(2));
        let b = FuzzySet::whole(carrier(3));
        assert!(matches!(a.union(&b), Err(Error::CarrierMismatch { .. })));
        assert!(matches!(
            a.intersection(&b),
            Err(Error::CarrierMismatch { .. })
        ));
        assert!(a.leq(&b).is_err());
    }

    #[test]
    fn crisp_membership_modes() {
        let c = carrier(3);
        let empty = FuzzySet::empty(Arc::clone(&c));
        assert!(!empty.crisp_in(0, CrispMode::Positive));

        // C for the orbit {0, 1} with 2 off the orbit: (0, 0, 1)
        let off_orbit = set(&c, &[(0, 1), (0, 1), (1, 1)]);
        assert!(!off_orbit.crisp_in(0, CrispMode::Positive));
        assert!(off_orbit.crisp_in(2, CrispMode::Full));
    }

    #[test]
    fn fuzzy_point_membership() {
        let c = carrier(2);
        let whole = FuzzySet::whole(Arc::clone(&c));
        let p = FuzzyPoint::new(0, Grade::ONE).unwrap();
        assert!(whole.contains_point(&p));

        // (x, 1/2) with x non-periodic: in A_2, not in A_3
        let a2 = set(&c, &[(1, 1), (1, 2)]);
        let a3 = set(&c, &[(1, 1), (1, 3)]);
        let half_point = FuzzyPoint::new(1, Grade::new(1, 2).unwrap()).unwrap();
        assert!(a2.contains_point(&half_point));
        assert!(!a3.contains_point(&half_point));

        // (a, 3/4) against a set whose grade at a is 1/2
        let k2 = set(&c, &[(1, 1), (1, 2)]);
        let q = FuzzyPoint::new(1, Grade::new(3, 4).unwrap()).unwrap();
        assert!(!k2.contains_point(&q));
    }

    #[test]
    fn degree_zero_points_are_rejected() {
        assert!(FuzzyPoint::new(0, Grade::ZERO).is_err());
    }

    // A small grid of grades, closed under complement.
    fn grid() -> Vec<Grade> {
        [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]
            .iter()
            .map(|&(p, q)| Grade::new(p, q).unwrap())
            .collect()
    }

    fn all_sets(c: &Arc<Carrier>) -> Vec<FuzzySet> {
        let g = grid();
        let mut out = vec![Vec::new()];
        for _ in 0..c.size() {
            let mut next = Vec::new();
            for prefix in &out {
                for &v in &g {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|gs| FuzzySet::new(Arc::clone(c), gs).unwrap())
            .collect()
    }

    #[test]
    fn lattice_laws_exhaustive_on_two_elements() {
        let c = carrier(2);
        let sets = all_sets(&c);
        for a in &sets {
            assert_eq!(a.union(a).unwrap(), *a);
            assert_eq!(a.intersection(a).unwrap(), *a);
            for b in &sets {
                let u = a.union(b).unwrap();
                let i = a.intersection(b).unwrap();
                assert_eq!(u, b.union(a).unwrap());
                assert_eq!(i, b.intersection(a).unwrap());
                // De Morgan
                assert_eq!(u.complement(), a.complement().intersection(&b.complement()).unwrap());
                assert_eq!(i.complement(), a.complement().union(&b.complement()).unwrap());
                // lub / glb under leq
                assert!(a.leq(&u).unwrap() && b.leq(&u).unwrap());
                assert!(i.leq(a).unwrap() && i.leq(b).unwrap());
                for z in &sets {
                    if a.leq(z).unwrap() && b.leq(z).unwrap() {
                        assert!(u.leq(z).unwrap());
                    }
                    if z.leq(a).unwrap() && z.leq(b).unwrap() {
                        assert!(z.leq(&i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_laws_on_four_elements_coarse_grid() {
        let c = carrier(4);
        let coarse = [(0i64, 1i64), (1, 2), (1, 1)];
        let mut vectors = vec![Vec::new()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for v in &vectors {
                for &(p, q) in &coarse {
                    let mut w = v.clone();
                    w.push(Grade::new(p, q).unwrap());
                    next.push(w);
                }
            }
            vectors = next;
        }
        let sets: Vec<FuzzySet> = vectors
            .into_iter()
            .map(|v| FuzzySet::new(Arc::clone(&c), v).unwrap())
            .collect();
        for a in &sets {
            for b in &sets {
                let u = a.union(b).unwrap();
                let i = a.intersection(b).unwrap();
                assert_eq!(u, b.union(a).unwrap());
                assert_eq!(i, b.intersection(a).unwrap());
                assert_eq!(u.complement(), a.complement().intersection(&b.complement()).unwrap());
                assert_eq!(i.complement(), a.complement().union(&b.complement()).unwrap());
            }
        }
    }

    #[test]
    fn associativity_on_triples() {
        let c = carrier(1);
        let sets = all_sets(&c);
        for a in &sets {
            for b in &sets {
                for z in &sets {
                    let left = a.union(b).unwrap().union(z).unwrap();
                    let right = a.union(&b.union(z).unwrap()).unwrap();
                    assert_eq!(left, right);
                    let left = a.intersection(b).unwrap().intersection(z).unwrap();
                    let right = a.intersection(&b.intersection(z).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    fn arb_set(n: usize) -> impl Strategy<Value = FuzzySet> {
        proptest::collection::vec((0i64..=12, 1i64..=12), n).prop_map(move |pairs| {
            let c = Carrier::of_size(n).unwrap();
            let grades = pairs
                .into_iter()
                .map(|(p, q)| {
                    let (p, q) = if p > q { (q, p) } else { (p, q) };
                    Grade::new(p, q).unwrap()
                })
                .collect();
            FuzzySet::new(c, grades).unwrap()
        })
    }

    proptest! {
        #[test]
        fn point_membership_is_monotone(a in arb_set(4), b in arb_set(4), x in 0usize..4, p in (1i64..=12)) {
            let point = FuzzyPoint::new(x, Grade::new(1, p.max(1)).unwrap()).unwrap();
            let u = a.union(&b).unwrap();
            if a.contains_point(&point) {
                // a <= a ∪ b, so membership must persist
                prop_assert!(u.contains_point(&point));
            }
        }

        #[test]
        fn leq_is_a_partial_order(a in arb_set(3), b in arb_set(3)) {
            prop_assert!(a.leq(&a).unwrap());
            if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
                prop_assert_eq!(a, b);
            }
        }
    }
}
