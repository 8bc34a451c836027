//! Filling a tensor from generators using transposition signs.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sign::skew_swap_negative;
use crate::space::{Element, SuperSpace};

/// Values that can live in a super-skew tensor.
pub(crate) trait OrbitValue: Clone + PartialEq {
    fn negated(&self) -> Self;
    fn describe(&self, space: &SuperSpace) -> String;
}

impl OrbitValue for Element {
    fn negated(&self) -> Self {
        Element::negated(self)
    }
    fn describe(&self, space: &SuperSpace) -> String {
        space.format_element(self)
    }
}

impl OrbitValue for Scalar {
    fn negated(&self) -> Self {
        -self
    }
    fn describe(&self, _space: &SuperSpace) -> String {
        self.to_string()
    }
}

/// Extends `generators` to every tuple reachable by the adjacent swaps listed
/// in `swaps` (0-based `k` exchanges positions `k` and `k + 1`), each swap
/// contributing `-(-1)^{|a||b|}`.
///
/// Fails when an orbit forces a value to differ from one already assigned,
/// including the case `v = -v` with `v != 0`.
pub(crate) fn complete<T: OrbitValue>(
    space: &SuperSpace,
    generators: impl IntoIterator<Item = (Vec<usize>, T)>,
    swaps: &[usize],
) -> Result<BTreeMap<Vec<usize>, T>> {
    let mut filled: BTreeMap<Vec<usize>, T> = BTreeMap::new();
    for (tuple, value) in generators {
        let mut local: BTreeMap<Vec<usize>, T> = BTreeMap::new();
        let mut queue = VecDeque::new();
        local.insert(tuple.clone(), value.clone());
        queue.push_back((tuple, value));
        while let Some((t, v)) = queue.pop_front() {
            for &k in swaps {
                let mut u = t.clone();
                u.swap(k, k + 1);
                let w = if skew_swap_negative(space.parity(t[k]), space.parity(t[k + 1])) {
                    v.negated()
                } else {
                    v.clone()
                };
                match local.get(&u) {
                    Some(existing) if *existing != w => {
                        return Err(conflict(space, &u, &w, existing));
                    }
                    Some(_) => {}
                    None => {
                        local.insert(u.clone(), w.clone());
                        queue.push_back((u, w));
                    }
                }
            }
        }
        for (t, v) in local {
            match filled.get(&t) {
                Some(existing) if *existing != v => return Err(conflict(space, &t, existing, &v)),
                Some(_) => {}
                None => {
                    filled.insert(t, v);
                }
            }
        }
    }
    Ok(filled)
}

fn conflict<T: OrbitValue>(space: &SuperSpace, tuple: &[usize], expected: &T, found: &T) -> Error {
    Error::OrbitConflict {
        tuple: space.labels_of(tuple),
        expected: expected.describe(space),
        found: found.describe(space),
    }
}
