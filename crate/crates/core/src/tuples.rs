//! Enumeration of basis index tuples in lexicographic order.

/// All tuples in `{0..dim}^len`, lexicographically.
#[derive(Clone, Debug)]
pub struct Tuples {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(dim: usize, len: usize) -> Self {
        let current = if dim == 0 && len > 0 { None } else { Some(vec![0; len]) };
        Tuples { dim, current }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < self.dim {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    }
}

pub fn tuples(dim: usize, len: usize) -> Tuples {
    Tuples::new(dim, len)
}

/// Row-major flat index of a tuple.
pub(crate) fn flat_index(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * dim + t)
}

/// Inverse of [`flat_index`].
pub(crate) fn unflatten(dim: usize, len: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let all: Vec<_> = tuples(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[5], vec![1, 2]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(tuples(2, 0).count(), 1);
        assert_eq!(tuples(0, 2).count(), 0);
        for (i, t) in all.iter().enumerate() {
            assert_eq!(flat_index(3, t), i);
            assert_eq!(&unflatten(3, 2, i), t);
        }
    }
}
