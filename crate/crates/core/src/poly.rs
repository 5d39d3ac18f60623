//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Poly`] is a term map from [`Monomial`] to a nonzero coefficient of its
//! ambient [`PolyRing`]; the canonical term order is graded-lexicographic.
//! `PolyRing<R>` itself implements [`Ring`], which is how polynomial rings
//! over Q (say Q[s]) serve as base rings for finite algebras.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Exponent vector of fixed length (the number of ambient variables).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1 in `nvars` variables.
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise quotient, `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

// graded-lex: compare total degree first, then exponent vectors left to right
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The polynomial ring `R[x_1..x_r]` as a ring object. The variable list is
/// fixed at construction and its order pins down the graded-lex term order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing<R: Ring> {
    coeff: R,
    vars: Vec<String>,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(coeff: R, vars: Vec<String>) -> Self {
        PolyRing { coeff, vars }
    }

    pub fn coeff_ring(&self) -> &R {
        &self.coeff
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The polynomial `x_i`.
    pub fn var_poly(&self, i: usize) -> Poly<R> {
        Poly::from_terms(
            self.clone(),
            [(Monomial::var(self.nvars(), i), self.coeff.one())],
        )
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R> {
        Poly::from_terms(self.clone(), [(Monomial::unit(self.nvars()), c)])
    }

    pub fn monomial(&self, m: Monomial, c: R::Elem) -> Poly<R> {
        Poly::from_terms(self.clone(), [(m, c)])
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// A sparse polynomial in canonical form: no zero coefficients are stored and
/// two polynomials are equal iff their term maps (and ambients) are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R: Ring> {
    ambient: PolyRing<R>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> Poly<R> {
    pub fn zero(ambient: PolyRing<R>) -> Self {
        Poly {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        ambient: PolyRing<R>,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Self {
        let mut p = Poly::zero(ambient);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) {
        assert_eq!(m.nvars(), self.ambient.nvars(), "monomial arity");
        let ring = self.ambient.coeff.clone();
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = ring.add(&old, &c);
                if !ring.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn ambient(&self) -> &PolyRing<R> {
        &self.ambient
    }

    pub fn coeff_ring(&self) -> &R {
        &self.ambient.coeff
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ambient.coeff.zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of variable `i` appearing in any term.
    pub fn degree_in_var(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    /// Is this a single monomial with unit coefficient?
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if self.ambient.coeff.is_one(c) {
                return Some(m);
            }
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().is_some_and(Monomial::is_unit)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    fn check_compatible(&self, other: &Poly<R>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch(format!(
                "operands live in different polynomial rings ({} vs {} variables over {})",
                self.nvars(),
                other.nvars(),
                self.ambient.coeff.notation()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly<R>) -> Result<Poly<R>> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly<R> {
        let ring = self.ambient.coeff.clone();
        Poly {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly<R>) -> Result<Poly<R>> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly<R>) -> Result<Poly<R>> {
        self.check_compatible(other)?;
        let ring = self.ambient.coeff.clone();
        let mut out = Poly::zero(self.ambient.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Poly<R> {
        let ring = self.ambient.coeff.clone();
        Poly::from_terms(
            self.ambient.clone(),
            self.terms
                .iter()
                .map(|(m, v)| (m.clone(), ring.mul(v, c))),
        )
    }

    pub fn pow(&self, k: u32) -> Poly<R> {
        let mut acc = self.ambient.constant(self.ambient.coeff.one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// Substitution homomorphism at a point with coordinates in the same
    /// coefficient ring; use [`Poly::map_coeffs`] first to move into the
    /// fraction field when evaluating integer polynomials at rational points.
    pub fn eval(&self, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let ring = &self.ambient.coeff;
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = ring.mul(&t, &ring.pow(x, e));
                }
            }
            acc = ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Evaluate a monomial at a point.
    pub fn eval_monomial(ring: &R, m: &Monomial, point: &[R::Elem]) -> R::Elem {
        let mut t = ring.one();
        for (x, &e) in point.iter().zip(m.exponents()) {
            if e > 0 {
                t = ring.mul(&t, &ring.pow(x, e));
            }
        }
        t
    }

    /// Apply a coefficient map into another ring, pruning zeros.
    pub fn map_coeffs<S: Ring>(
        &self,
        target: &PolyRing<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S> {
        assert_eq!(target.nvars(), self.nvars(), "variable count");
        Poly::from_terms(
            target.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ring = &self.ambient.coeff;
        // descending graded-lex; the sign of each printed coefficient is
        // folded into the separator so the output re-parses
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let formatted = ring.format(c);
            let (sign_is_minus, magnitude) = match formatted.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, formatted),
            };
            if idx == 0 {
                if sign_is_minus {
                    write!(f, "-")?;
                }
            } else if sign_is_minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.ambient.format_monomial(m);
            let coeff_is_unit_magnitude = magnitude == "1";
            if m.is_unit() {
                write!(f, "{magnitude}")?;
            } else if coeff_is_unit_magnitude {
                write!(f, "{mono}")?;
            } else if magnitude.contains(['+', '-', ' ']) {
                // composite coefficient (e.g. a polynomial): parenthesise
                write!(f, "({magnitude})*{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R>;

    fn zero(&self) -> Poly<R> {
        Poly::zero(self.clone())
    }
    fn one(&self) -> Poly<R> {
        self.constant(self.coeff.one())
    }
    fn is_zero(&self, a: &Poly<R>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a.add(b).expect("ambient mismatch")
    }
    fn neg(&self, a: &Poly<R>) -> Poly<R> {
        a.neg()
    }
    fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a.mul(b).expect("ambient mismatch")
    }
    fn from_bigint(&self, n: &BigInt) -> Poly<R> {
        self.constant(self.coeff.from_bigint(n))
    }
    fn inverse(&self, a: &Poly<R>) -> Option<Poly<R>> {
        // over a domain the units of R[x] are the unit constants
        if !self.coeff.is_domain() {
            return None;
        }
        if a.terms.len() != 1 {
            return None;
        }
        let (m, c) = a.terms.iter().next()?;
        if !m.is_unit() {
            return None;
        }
        self.coeff.inverse(c).map(|i| self.constant(i))
    }
    fn exact_div(&self, a: &Poly<R>, b: &Poly<R>) -> Option<Poly<R>> {
        if !self.coeff.is_domain() || b.is_zero() {
            return None;
        }
        // leading-term division; terminates with the quotient when b | a
        let mut rem = a.clone();
        let mut quot = self.zero();
        let (lm_b, lc_b) = b.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        while !rem.is_zero() {
            let (lm_r, lc_r) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
            let m = lm_r.div(&lm_b)?;
            let c = self.coeff.exact_div(&lc_r, &lc_b)?;
            let t = self.monomial(m, c);
            rem = rem.sub(&t.mul(b).ok()?).ok()?;
            quot = quot.add(&t).ok()?;
        }
        Some(quot)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn is_domain(&self) -> bool {
        self.coeff.is_domain()
    }
    fn format(&self, a: &Poly<R>) -> String {
        a.to_string()
    }
    fn parse_elem(&self, text: &str) -> Result<Poly<R>> {
        crate::parse::parse_poly(text, self)
    }
    fn notation(&self) -> String {
        format!("{}[{}]", self.coeff.notation(), self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, PrimeField, Rationals};

    fn qt() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["t".into()])
    }

    #[test]
    fn grlex_order() {
        // t^2 > t*u > u^2 > t > u > 1 in two variables (t, u)
        let m = |a, b| Monomial::new(vec![a, b]);
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 1) > m(0, 2));
        assert!(m(0, 2) > m(1, 0));
        assert!(m(1, 0) > m(0, 1));
        assert!(m(0, 1) > m(0, 0));
    }

    #[test]
    fn mul_identity_and_hand_expansions() {
        let ring = qt();
        let one = ring.one();
        let t = ring.var_poly(0);
        let f = one.add(&t).unwrap(); // 1 + t
        assert_eq!(f.mul(&one).unwrap(), f);
        // (1+t)(1-t) = 1 - t^2
        let g = one.sub(&t).unwrap();
        let prod = f.mul(&g).unwrap();
        let expected = one.sub(&t.mul(&t).unwrap()).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn mul_mod_two() {
        let f2 = PrimeField::new(2).unwrap();
        let ring = PolyRing::new(f2, vec!["t".into()]);
        let f = ring.one().add(&ring.var_poly(0)).unwrap();
        // (1+t)^2 = 1 + t^2 over Z/2
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.to_string(), "t^2 + 1");
    }

    #[test]
    fn eval_is_substitution() {
        let ring = qt();
        let t = ring.var_poly(0);
        let f = t.mul(&t).unwrap().add(&ring.one()).unwrap(); // t^2 + 1
        let q = Rationals;
        assert_eq!(f.eval(&[q.from_i64(2)]).unwrap(), q.from_i64(5));
        // constants evaluate to themselves
        let c = ring.constant(q.from_i64(42));
        assert_eq!(c.eval(&[q.from_i64(9)]).unwrap(), q.from_i64(42));
        // dimension mismatch is reported
        assert!(matches!(
            f.eval(&[]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn eval_kills_characteristic() {
        let f5 = PrimeField::new(5).unwrap();
        let ring = PolyRing::new(f5, vec!["t".into()]);
        let t = ring.var_poly(0);
        assert_eq!(t.eval(&[5 % 5]).unwrap(), 0);
    }

    #[test]
    fn exact_division_over_z() {
        let ring = PolyRing::new(Integers, vec!["t".into()]);
        let t = ring.var_poly(0);
        let two = ring.from_i64(2);
        let f = t.add(&ring.one()).unwrap().scale(&Integers.from_i64(2)); // 2t + 2
        assert_eq!(ring.exact_div(&f, &two), Some(t.add(&ring.one()).unwrap()));
        // 2t + 1 is not divisible by 2
        let g = t.scale(&Integers.from_i64(2)).add(&ring.one()).unwrap();
        assert_eq!(ring.exact_div(&g, &two), None);
    }

    #[test]
    fn display_descending_grlex() {
        let ring = qt();
        let t = ring.var_poly(0);
        let f = t
            .mul(&t)
            .unwrap()
            .add(&t.scale(&Rationals.from_i64(2)))
            .unwrap()
            .add(&ring.one())
            .unwrap();
        assert_eq!(f.to_string(), "t^2 + 2*t + 1");
        let g = ring.one().sub(&t.mul(&t).unwrap()).unwrap();
        assert_eq!(g.to_string(), "-t^2 + 1");
    }
}
