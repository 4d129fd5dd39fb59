use std::cmp::Ordering;

/// Exponent vector of a monomial `X1^a1 * ... * Xn^an`.
///
/// Ordered graded-lexicographically: first by total degree, then
/// lexicographically with `X1 > X2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The single variable `X(index)` (0-based) in `n` variables.
    pub fn var(index: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Self { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        // degree dominates
        assert!(m(&[0, 3]) > m(&[1, 1]));
        // same degree: lex with X1 > X2
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[2, 1, 0]) > m(&[2, 0, 1]));
    }
}
