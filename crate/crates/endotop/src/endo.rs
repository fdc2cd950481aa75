//! Self-maps on a finite carrier and the combinatorial data the three
//! constructions read off them: periodic points, the nested-image
//! partition, and cycle orbits.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::Carrier;

/// A total map `f : X -> X`, stored as `map[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoFunction {
    carrier: Arc<Carrier>,
    map: Vec<usize>,
}

impl EndoFunction {
    pub fn new(carrier: Arc<Carrier>, map: Vec<usize>) -> Result<EndoFunction> {
        if map.len() != carrier.size() {
            return Err(Error::MapLengthMismatch {
                got: map.len(),
                size: carrier.size(),
            });
        }
        for (x, &y) in map.iter().enumerate() {
            if y >= carrier.size() {
                return Err(Error::MapOutOfRange {
                    x,
                    image: y,
                    size: carrier.size(),
                });
            }
        }
        Ok(EndoFunction { carrier, map })
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `f^n(x)`; `n = 0` is the identity.
    pub fn iterate(&self, x: usize, n: usize) -> usize {
        let mut y = x;
        for _ in 0..n {
            y = self.map[y];
        }
        y
    }

    /// Is `x` on a cycle, i.e. `f^m(x) = x` for some `m >= 1`?
    ///
    /// Iterating `carrier.size()` steps suffices: any cycle through `x`
    /// has length at most the carrier size.
    pub fn is_periodic(&self, x: usize) -> bool {
        let mut y = x;
        for _ in 0..self.carrier.size() {
            y = self.map[y];
            if y == x {
                return true;
            }
        }
        false
    }

    pub fn profile(&self) -> FunctionProfile {
        let size = self.carrier.size();
        let image: BTreeSet<usize> = self.map.iter().copied().collect();
        let onto = image.len() == size;
        let injective = onto; // finite carrier
        let periodic: BTreeSet<usize> = self
            .carrier
            .elements()
            .filter(|&x| self.is_periodic(x))
            .collect();
        let all_periodic = periodic.len() == size;
        FunctionProfile {
            onto,
            injective,
            periodic,
            all_periodic,
        }
    }

    /// First witness pair for a failed injectivity check, if any.
    pub fn injectivity_witness(&self) -> Option<(usize, usize, usize)> {
        let mut preimage: Vec<Option<usize>> = vec![None; self.carrier.size()];
        for (x, &y) in self.map.iter().enumerate() {
            if let Some(a) = preimage[y] {
                return Some((a, x, y));
            }
            preimage[y] = Some(x);
        }
        None
    }

    /// Nested-image partition: the eventual image (core) plus the shells
    /// `f^{n-1}(X) \ f^n(X)` peeled off on the way to stabilization.
    pub fn nested_image_partition(&self) -> ImagePartition {
        let size = self.carrier.size();
        let mut current: BTreeSet<usize> = self.carrier.elements().collect();
        let mut shells: Vec<BTreeSet<usize>> = Vec::new();
        // The image chain strictly shrinks until it stabilizes, so at most
        // `size` iterations happen.
        loop {
            let next: BTreeSet<usize> = current.iter().map(|&x| self.map[x]).collect();
            let shell: BTreeSet<usize> = current.difference(&next).copied().collect();
            if shell.is_empty() {
                break;
            }
            shells.push(shell);
            current = next;
        }
        let core = current;
        let mut shell_index = vec![0usize; size];
        for (i, shell) in shells.iter().enumerate() {
            for &x in shell {
                shell_index[x] = i + 1;
            }
        }
        ImagePartition {
            core,
            shells,
            shell_index,
        }
    }

    /// The cycle through `x0`, in iteration order, for a one-to-one map.
    ///
    /// A one-to-one map on a finite carrier is a bijection, so every orbit
    /// is a pure cycle and the backward orbit coincides with the forward
    /// one; the residues `0..L-1` index the distinct basis sets built from
    /// the orbit.
    pub fn orbit(&self, x0: usize, k: u32) -> Result<OrbitData> {
        if x0 >= self.carrier.size() {
            return Err(Error::BasePointOutOfRange {
                x0,
                size: self.carrier.size(),
            });
        }
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some((a, b, image)) = self.injectivity_witness() {
            return Err(Error::NotInjective { a, b, image });
        }
        let mut orbit = vec![x0];
        let mut y = self.map[x0];
        while y != x0 {
            orbit.push(y);
            y = self.map[y];
        }
        let orbit_set: BTreeSet<usize> = orbit.iter().copied().collect();
        let off_orbit: BTreeSet<usize> = self
            .carrier
            .elements()
            .filter(|x| !orbit_set.contains(x))
            .collect();
        Ok(OrbitData {
            carrier: Arc::clone(&self.carrier),
            x0,
            k,
            orbit,
            off_orbit,
        })
    }
}

/// Global facts about a map that the constructions and claims consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionProfile {
    pub onto: bool,
    pub injective: bool,
    pub periodic: BTreeSet<usize>,
    pub all_periodic: bool,
}

/// The partition `X = core ∪ shell_1 ∪ ... ∪ shell_s` where the core is
/// the eventual image and `shell_n` is what the n-th image application
/// removes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImagePartition {
    pub core: BTreeSet<usize>,
    pub shells: Vec<BTreeSet<usize>>,
    /// `shell_index[x]` is the shell number of `x`, with 0 meaning the core.
    pub shell_index: Vec<usize>,
}

impl ImagePartition {
    pub fn shell_of(&self, x: usize) -> usize {
        self.shell_index[x]
    }
}

/// The cycle through a base point, with the fixed depth parameter `k`
/// used when grading the orbit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    carrier: Arc<Carrier>,
    pub x0: usize,
    pub k: u32,
    /// `orbit[i] = f^i(x0)`; the final element maps back to `x0`.
    pub orbit: Vec<usize>,
    pub off_orbit: BTreeSet<usize>,
}

impl OrbitData {
    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an orbit always contains its base point
    }

    /// Does the orbit cover the whole carrier?
    pub fn covers_carrier(&self) -> bool {
        self.off_orbit.is_empty()
    }

    /// Position of `x` on the orbit, if it is on it.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.orbit.iter().position(|&y| y == x)
    }
}
