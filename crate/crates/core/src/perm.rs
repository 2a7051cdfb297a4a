use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a permutation of 1..={0}")]
pub struct NotAPermutation(pub usize);

/// A permutation of `1..=n` in one-line notation: `image[p - 1] = π(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (1..=n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Permutation, NotAPermutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x == 0 || x > n || seen[x - 1] {
                return Err(NotAPermutation(n));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition (i i+1).
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.image.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p - 1]
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.n(), next.n());
        Permutation { image: self.image.iter().map(|&x| next.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (p, &x) in self.image.iter().enumerate() {
            inv[x - 1] = p + 1;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(p, &x)| x == p + 1)
    }

    /// Cycles in order of their least element, each starting at that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p - 1] {
                seen[p - 1] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_image(vec![1, 1]).is_err());
        assert!(Permutation::from_image(vec![0, 1]).is_err());
        assert!(Permutation::from_image(vec![2, 3]).is_err());
    }

    #[test]
    fn composition_order() {
        let a = Permutation::adjacent(3, 1);
        let b = Permutation::adjacent(3, 2);
        // 1 -> 2 -> 3
        assert_eq!(a.then(&b).image(), &[3, 1, 2]);
        assert!(a.then(&a).is_identity());
        let c = a.then(&b);
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn cycles_of_three_cycle() {
        let p = Permutation::from_image(vec![3, 1, 2]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 3, 2]]);
        assert_eq!(Permutation::identity(3).cycle_count(), 3);
    }
}
