//! Exact multivariate polynomials over Q.
//!
//! `Poly` is the value type everything else is built on: a canonical term map
//! from exponent vectors to nonzero rational coefficients. Values are
//! immutable once built and freely shareable across threads.

use crate::error::{Error, Result};
use crate::monomial::{cmp_grevlex, Monomial};
use crate::ring::{ensure_same_ring, same_ring, RingRc};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone)]
pub struct Poly {
    ring: RingRc,
    // Canonical: no zero coefficients, keys all of ring.nvars() length.
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &RingRc) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &RingRc) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &RingRc, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn from_int(ring: &RingRc, c: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &RingRc, idx: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), idx), BigRational::one());
        Poly { ring: ring.clone(), terms }
    }

    pub fn var_named(ring: &RingRc, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, idx))
    }

    pub fn monomial(ring: &RingRc, mono: Monomial, coef: BigRational) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(mono, coef);
        p
    }

    pub fn from_terms<I>(ring: &RingRc, it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Unit of the local ring at the origin: nonzero constant term.
    pub fn is_local_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Lowest total degree among terms; the order (multiplicity) at 0.
    pub fn order_at_origin(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        debug_assert_eq!(mono.nvars(), self.ring.nvars());
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &coef;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut r = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn mul_monomial(&self, mono: &Monomial, coef: &BigRational) -> Poly {
        if coef.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coef))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn partial(&self, idx: usize) -> Poly {
        let mut r = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] = e - 1;
            r.add_term(m2, c * BigRational::from_integer(BigInt::from(e)));
        }
        r
    }

    pub fn partial_named(&self, name: &str) -> Result<Poly> {
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.partial(idx))
    }

    /// Substitutes one image polynomial (all in a common target ring) per
    /// variable of `self`'s ring. Realizes ring morphisms f* and F*.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Invalid(format!(
                "substitute: expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        if images.is_empty() {
            // Constant ring: nothing to substitute into, but there is no
            // target ring to land in either; keep self's ring.
            return Ok(self.clone());
        }
        let target = images[0].ring().clone();
        for im in images {
            ensure_same_ring(im.ring(), &target, "substitution images")?;
        }
        // Power cache per variable.
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|im| vec![Poly::one(&target), im.clone()])
            .collect();
        let mut result = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                t = t.mul(&powers[v][e as usize]);
            }
            result = result.add(&t);
        }
        Ok(result)
    }

    /// Transports this polynomial into `target` along a variable map:
    /// variable i of self becomes variable `map[i]` of target.
    pub fn rename_into(&self, target: &RingRc, map: &[usize]) -> Poly {
        let mut r = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] = x;
            }
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    /// Exact division; fails unless `self = q * den` exactly.
    pub fn exact_divide(&self, den: &Poly) -> Result<Poly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ensure_same_ring(&self.ring, den.ring(), "exact_divide")?;
        let (dm, dc) = den
            .terms
            .iter()
            .max_by(|a, b| cmp_grevlex(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero(&self.ring);
        while !rem.is_zero() {
            let (lm, lc) = rem
                .terms
                .iter()
                .max_by(|a, b| cmp_grevlex(a.0, b.0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if !dm.divides(&lm) {
                return Err(Error::NotDivisible);
            }
            let qm = dm.quotient_into(&lm);
            let qc = lc / &dc;
            quo.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&den.mul_monomial(&qm, &qc));
        }
        Ok(quo)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_divide(self).is_ok()
    }

    /// Weighted degree (maximum over terms) for the given weights.
    pub fn weighted_degree(&self, weights: &[u64]) -> Option<u64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    /// Some(d) if every term has the same weighted degree d.
    pub fn homogeneous_weighted_degree(&self, weights: &[u64]) -> Option<u64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Integer content together with the sign of the grevlex-leading
    /// coefficient. The primitive part has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        let lead_c = self
            .terms
            .iter()
            .max_by(|a, b| cmp_grevlex(a.0, b.0))
            .map(|(_, c)| c.clone())
            .unwrap();
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if lead_c.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Coefficient of a specific monomial (zero if absent).
    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Terms sorted descending by grevlex; the canonical print order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| cmp_grevlex(b.0, a.0));
        v
    }
}

fn fmt_coef(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(fmt_coef(&abs));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn arithmetic_and_canonical_form() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let p = parse_poly("x^2*y - 3*y", &r).unwrap();
        let q = parse_poly("3*y + x^2*y", &r).unwrap();
        let s = p.add(&q);
        assert_eq!(s, parse_poly("2*x^2*y", &r).unwrap());
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn substitution_cross_cap_image() {
        // g = Y3^2 - Y1^2*Y2 vanishes on (x, y^2, x*y).
        let src = Ring::new(vec!["x", "y"]).unwrap();
        let tgt = Ring::new(vec!["Y1", "Y2", "Y3"]).unwrap();
        let g = parse_poly("Y3^2 - Y1^2*Y2", &tgt).unwrap();
        let images = vec![
            parse_poly("x", &src).unwrap(),
            parse_poly("y^2", &src).unwrap(),
            parse_poly("x*y", &src).unwrap(),
        ];
        assert!(g.substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn substitution_identity_and_linear() {
        let tgt = Ring::new(vec!["Y1", "Y2"]).unwrap();
        let src = Ring::new(vec!["x"]).unwrap();
        let p = parse_poly("Y1 + Y2", &tgt).unwrap();
        let x = parse_poly("x", &src).unwrap();
        assert_eq!(
            p.substitute(&[x.clone(), x]).unwrap(),
            parse_poly("2*x", &src).unwrap()
        );
        let idy = vec![Poly::var(&tgt, 0), Poly::var(&tgt, 1)];
        assert_eq!(p.substitute(&idy).unwrap(), p);
    }

    #[test]
    fn partials() {
        let tgt = Ring::new(vec!["Y1", "Y2", "Y3"]).unwrap();
        let g = parse_poly("Y3^2 - Y1^2*Y2", &tgt).unwrap();
        assert_eq!(g.partial_named("Y3").unwrap(), parse_poly("2*Y3", &tgt).unwrap());
        let c = parse_poly("5", &tgt).unwrap();
        assert!(c.partial(0).is_zero());
    }

    #[test]
    fn exact_division() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let num = parse_poly("-2*x*y^2", &r).unwrap();
        let den = parse_poly("-2*y^2", &r).unwrap();
        assert_eq!(num.exact_divide(&den).unwrap(), parse_poly("x", &r).unwrap());
        let p = parse_poly("x^3 - y + 4", &r).unwrap();
        assert_eq!(p.exact_divide(&Poly::one(&r)).unwrap(), p);
        let x = parse_poly("x", &r).unwrap();
        let y = parse_poly("y", &r).unwrap();
        assert!(matches!(x.exact_divide(&y), Err(Error::NotDivisible)));
        assert!(matches!(x.exact_divide(&Poly::zero(&r)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn primitive_normalization() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let p = parse_poly("-2/3*x^2 - 4*y", &r).unwrap();
        let n = p.primitive_part();
        assert_eq!(n, parse_poly("x^2 + 6*y", &r).unwrap());
    }
}
