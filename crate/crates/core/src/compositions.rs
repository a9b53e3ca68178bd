//! Ordered partitions (compositions) of a positive integer.
//!
//! Compositions of `n` are produced lazily in lexicographic order: the first
//! part ascends from 1 to `n`, and for each first part the compositions of
//! the remainder follow in the same order. For `n = 3` that is
//! `(1,1,1), (1,2), (2,1), (3)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::Error;

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Rejects empty input and zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Domain(format!(
                "a composition needs at least one part and no zero parts: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Streaming iterator over the compositions of `n`.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Compositions {
    /// Advances to the next composition and returns a view of its parts,
    /// without allocating.
    pub fn next_parts(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        if self.current.len() <= 1 {
            self.done = true;
            return None;
        }
        // drop the last part, bump the one before it, refill with ones
        let last = self.current.pop().expect("len > 1");
        *self.current.last_mut().expect("len > 0") += 1;
        self.current.extend(std::iter::repeat_n(1, last - 1));
        Some(&self.current)
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.next_parts().map(|p| Composition { parts: p.to_vec() })
    }
}

/// Every composition of `n >= 1`, each exactly once.
pub fn enumerate(n: usize) -> Result<Compositions, Error> {
    if n == 0 {
        return Err(Error::Domain(
            "compositions are enumerated for n >= 1 only".to_string(),
        ));
    }
    Ok(Compositions {
        current: vec![1; n],
        started: false,
        done: false,
    })
}

/// Number of compositions of `n >= 1`, i.e. `2^(n-1)`.
pub fn count(n: usize) -> Result<BigUint, Error> {
    if n == 0 {
        return Err(Error::Domain("count is defined for n >= 1".to_string()));
    }
    Ok(BigUint::one() << (n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn parts_of(n: usize) -> Vec<Vec<usize>> {
        enumerate(n).unwrap().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(parts_of(1), vec![vec![1]]);
        assert_eq!(
            parts_of(3),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        assert_eq!(parts_of(5).len(), 16);
    }

    #[test]
    fn zero_rejected() {
        assert!(enumerate(0).is_err());
        assert!(count(0).is_err());
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count(1).unwrap(), BigUint::from(1u32));
        assert_eq!(count(4).unwrap(), BigUint::from(8u32));
        assert_eq!(count(12).unwrap(), BigUint::from(2048u32));
        assert_eq!(enumerate(12).unwrap().count(), 2048);
    }

    // Recursive definition of the order, used as the oracle for the
    // iterative successor rule.
    fn recursive_order(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for first in 1..=n {
            if first == n {
                out.push(vec![n]);
            } else {
                for mut rest in recursive_order(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
        }
        out
    }

    #[test]
    fn matches_recursive_order() {
        for n in 1..=12 {
            assert_eq!(parts_of(n), recursive_order(n), "n = {n}");
        }
    }

    #[test]
    fn complete_and_distinct() {
        for n in 1..=14 {
            let all = parts_of(n);
            assert_eq!(all.len(), 1usize << (n - 1));
            assert!(all.iter().all(|p| p.iter().sum::<usize>() == n));
            assert!(all.iter().all(|p| !p.contains(&0)));
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    #[test]
    fn display_is_comma_separated() {
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(c.to_string(), "2,1,3");
        assert_eq!(c.len(), 3);
        assert_eq!(c.total(), 6);
    }

    #[test]
    fn serialized_stream_is_stable() {
        let render = || {
            enumerate(9)
                .unwrap()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(render(), render());
    }
}
