use std::cmp::Ordering;

/// A monomial as a dense exponent vector. The vector length always equals
/// the variable count of the ring the monomial lives in.
///
/// Exponents are machine words; overflow aborts rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&a| a.checked_mul(n).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// True when every variable outside `keep` has exponent zero.
    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || keep[i])
    }
}

/// Lexicographic comparison (first variable most significant).
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic comparison.
pub fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Ties: smaller exponent in the last differing variable wins.
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// Grevlex restricted to a subset of variable positions.
pub fn cmp_grevlex_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    let da: u64 = vars.iter().map(|&i| a.0[i] as u64).sum();
    let db: u64 = vars.iter().map(|&i| b.0[i] as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &i in vars.iter().rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_basic() {
        // x^2 > xy > y^2 > x > y > 1 in grevlex on (x, y)
        let seq = [
            m(&[2, 0]),
            m(&[1, 1]),
            m(&[0, 2]),
            m(&[1, 0]),
            m(&[0, 1]),
            m(&[0, 0]),
        ];
        for w in seq.windows(2) {
            assert_eq!(cmp_grevlex(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_into(&b), m(&[1, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3]));
    }
}
