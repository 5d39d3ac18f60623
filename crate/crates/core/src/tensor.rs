//! The tensor algebra T^n_A F and its symmetric subring TS^n_A F.
//!
//! A [`TensorElem`] stores an element of T^n as a map from n-tuples of
//! monomials to coefficients (pure tensors of monomials are the natural
//! basis once every slot polynomial is expanded multilinearly). A
//! [`SymTensor`] is the orbit-sum canonical form of a symmetric tensor: each
//! key is a sorted tuple (a multiset) of monomials and the coefficient
//! multiplies the sum of the distinct permutations of that multiset, each
//! appearing exactly once. With that convention the multiset with
//! multiplicities `a_m` is exactly the *-monomial `prod* gamma^{a_m}(m)`,
//! which is what makes coefficient extraction against the canonical
//! homomorphism a direct basis read-off.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::ring::Ring;

/// An n-tuple of monomials, one per tensor slot.
pub type TensorKey = Vec<Monomial>;

/// All permutations of `0..n` with their signs (`true` = even).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(cur: &mut Vec<usize>, k: usize, sign: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, sign == (k == i), out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, true, &mut out);
    out
}

/// In-place lexicographic successor; `false` once the last arrangement is
/// reached. Starting from a sorted slice this enumerates the distinct
/// arrangements of a multiset exactly once.
pub fn next_permutation<T: Ord>(arr: &mut [T]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// The distinct arrangements of a multiset of monomials, each once.
pub fn distinct_arrangements(key: &[Monomial]) -> Vec<TensorKey> {
    let mut cur = key.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// An element of T^n_A F with F = A[x_1..x_r].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElem<R: Ring> {
    ambient: PolyRing<R>,
    n: usize,
    terms: BTreeMap<TensorKey, R::Elem>,
}

impl<R: Ring> TensorElem<R> {
    pub fn zero(ambient: PolyRing<R>, n: usize) -> Self {
        TensorElem {
            ambient,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit tensor 1 (x) ... (x) 1.
    pub fn unit(ambient: PolyRing<R>, n: usize) -> Self {
        let key = vec![Monomial::unit(ambient.nvars()); n];
        let one = ambient.coeff_ring().one();
        let mut t = TensorElem::zero(ambient, n);
        t.add_term(key, one);
        t
    }

    pub fn ambient(&self) -> &PolyRing<R> {
        &self.ambient
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &TensorKey) -> R::Elem {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.ambient.coeff_ring().zero())
    }

    pub fn add_term(&mut self, key: TensorKey, c: R::Elem) {
        debug_assert_eq!(key.len(), self.n);
        let ring = self.ambient.coeff_ring().clone();
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let s = ring.add(&old, &c);
                if !ring.is_zero(&s) {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    fn check_compatible(&self, other: &TensorElem<R>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch("tensor ambients differ".into()));
        }
        if self.n != other.n {
            return Err(Error::DegreeMismatch(format!(
                "tensor degrees {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElem<R>) -> Result<TensorElem<R>> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> TensorElem<R> {
        let ring = self.ambient.coeff_ring().clone();
        TensorElem {
            ambient: self.ambient.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorElem<R>) -> Result<TensorElem<R>> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> TensorElem<R> {
        let ring = self.ambient.coeff_ring().clone();
        let mut out = TensorElem::zero(self.ambient.clone(), self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), ring.mul(v, c));
        }
        out
    }

    /// Componentwise (internal) product of T^n: slots multiply as monomials.
    pub fn mul(&self, other: &TensorElem<R>) -> Result<TensorElem<R>> {
        self.check_compatible(other)?;
        let ring = self.ambient.coeff_ring().clone();
        let mut out = TensorElem::zero(self.ambient.clone(), self.n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key: TensorKey = k1.iter().zip(k2).map(|(a, b)| a.mul(b)).collect();
                out.add_term(key, ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// Rearrange the factors: slot `i` of the result holds slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> TensorElem<R> {
        assert_eq!(perm.len(), self.n);
        let mut out = TensorElem::zero(self.ambient.clone(), self.n);
        for (k, c) in &self.terms {
            let key: TensorKey = perm.iter().map(|&i| k[i].clone()).collect();
            out.add_term(key, c.clone());
        }
        out
    }

    /// `Ok(())` if fixed by every adjacent transposition, otherwise the
    /// 1-based indices of a violating transposition.
    pub fn symmetry_check(&self) -> Result<()> {
        for i in 0..self.n.saturating_sub(1) {
            for (k, c) in &self.terms {
                let mut swapped = k.clone();
                swapped.swap(i, i + 1);
                if self.coefficient(&swapped) != *c {
                    return Err(Error::NotSymmetric { i: i + 1, j: i + 2 });
                }
            }
        }
        Ok(())
    }

    pub fn map_coeffs<S: Ring>(
        &self,
        target: &PolyRing<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> TensorElem<S> {
        assert_eq!(target.nvars(), self.ambient.nvars());
        let mut out = TensorElem::zero(target.clone(), self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

/// Add `scale * (slots[0] (x) ... (x) slots[n-1])`, expanded multilinearly.
fn add_pure_tensor<R: Ring>(
    acc: &mut TensorElem<R>,
    slots: &[&Poly<R>],
    scale: &R::Elem,
) -> Result<()> {
    let ring = acc.ambient.coeff_ring().clone();
    for p in slots {
        if p.ambient() != acc.ambient() {
            return Err(Error::RingMismatch("tensor slot ambient differs".into()));
        }
    }
    fn rec<R: Ring>(
        acc: &mut TensorElem<R>,
        ring: &R,
        slots: &[&Poly<R>],
        key: &mut TensorKey,
        coeff: R::Elem,
    ) {
        if ring.is_zero(&coeff) {
            return;
        }
        let i = key.len();
        if i == slots.len() {
            acc.add_term(key.clone(), coeff);
            return;
        }
        for (m, c) in slots[i].terms() {
            key.push(m.clone());
            rec(acc, ring, slots, key, ring.mul(&coeff, c));
            key.pop();
        }
    }
    let mut key = Vec::with_capacity(slots.len());
    rec(acc, &ring, slots, &mut key, scale.clone());
    Ok(())
}

/// The pure tensor `f_1 (x) ... (x) f_n` of polynomial factors.
pub fn tensor_of_polys<R: Ring>(slots: &[&Poly<R>]) -> Result<TensorElem<R>> {
    let first = slots
        .first()
        .ok_or_else(|| Error::EmptyInput("tensor with no factors".into()))?;
    let ambient = first.ambient().clone();
    let one = ambient.coeff_ring().one();
    let mut acc = TensorElem::zero(ambient, slots.len());
    add_pure_tensor(&mut acc, slots, &one)?;
    Ok(acc)
}

/// `1 (x) .. (x) f (x) .. (x) 1` with `f` at the (1-based) slot `j`.
pub fn embed_factor<R: Ring>(f: &Poly<R>, j: usize, n: usize) -> Result<TensorElem<R>> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange(format!(
            "slot {j} of a degree-{n} tensor"
        )));
    }
    let one = f.ambient().one();
    let slots: Vec<&Poly<R>> = (1..=n).map(|i| if i == j { f } else { &one }).collect();
    tensor_of_polys(&slots)
}

/// The norm vector `nu(x) = sum_sigma sign(sigma) x_sigma(1) (x) ... (x)
/// x_sigma(n)`; equals the determinant of the matrix `(x_i[j])` in T^n, so
/// it is alternating in the inputs and vanishes when two of them coincide.
pub fn nu_vector<R: Ring>(xs: &[Poly<R>]) -> Result<TensorElem<R>> {
    if xs.is_empty() {
        return Err(Error::EmptyInput("norm vector of an empty list".into()));
    }
    let ambient = xs[0].ambient().clone();
    let ring = ambient.coeff_ring().clone();
    let mut acc = TensorElem::zero(ambient, xs.len());
    for (perm, even) in permutations_with_sign(xs.len()) {
        let slots: Vec<&Poly<R>> = perm.iter().map(|&i| &xs[i]).collect();
        let sign = if even { ring.one() } else { ring.neg(&ring.one()) };
        add_pure_tensor(&mut acc, &slots, &sign)?;
    }
    Ok(acc)
}

/// A symmetric tensor in orbit-sum form; the carrier of Gamma^n_A F.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymTensor<R: Ring> {
    ambient: PolyRing<R>,
    n: usize,
    orbits: BTreeMap<TensorKey, R::Elem>,
}

impl<R: Ring> SymTensor<R> {
    pub fn zero(ambient: PolyRing<R>, n: usize) -> Self {
        SymTensor {
            ambient,
            n,
            orbits: BTreeMap::new(),
        }
    }

    /// gamma^n(1), the unit of the internal product.
    pub fn unit(ambient: PolyRing<R>, n: usize) -> Self {
        let key = vec![Monomial::unit(ambient.nvars()); n];
        let one = ambient.coeff_ring().one();
        let mut s = SymTensor::zero(ambient, n);
        s.add_orbit(key, one);
        s
    }

    pub fn ambient(&self) -> &PolyRing<R> {
        &self.ambient
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> impl Iterator<Item = (&TensorKey, &R::Elem)> {
        self.orbits.iter()
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    pub fn coefficient(&self, key: &TensorKey) -> R::Elem {
        let mut sorted = key.clone();
        sorted.sort();
        self.orbits
            .get(&sorted)
            .cloned()
            .unwrap_or_else(|| self.ambient.coeff_ring().zero())
    }

    /// Accumulate a coefficient on the orbit of `key` (sorted on insert).
    pub fn add_orbit(&mut self, mut key: TensorKey, c: R::Elem) {
        debug_assert_eq!(key.len(), self.n);
        key.sort();
        let ring = self.ambient.coeff_ring().clone();
        if ring.is_zero(&c) {
            return;
        }
        match self.orbits.remove(&key) {
            None => {
                self.orbits.insert(key, c);
            }
            Some(old) => {
                let s = ring.add(&old, &c);
                if !ring.is_zero(&s) {
                    self.orbits.insert(key, s);
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymTensor<R>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch("symmetric tensor ambients differ".into()));
        }
        if self.n != other.n {
            return Err(Error::DegreeMismatch(format!(
                "symmetric tensor degrees {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymTensor<R>) -> Result<SymTensor<R>> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.orbits {
            out.add_orbit(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SymTensor<R> {
        let ring = self.ambient.coeff_ring().clone();
        SymTensor {
            ambient: self.ambient.clone(),
            n: self.n,
            orbits: self
                .orbits
                .iter()
                .map(|(k, c)| (k.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SymTensor<R>) -> Result<SymTensor<R>> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> SymTensor<R> {
        let ring = self.ambient.coeff_ring().clone();
        let mut out = SymTensor::zero(self.ambient.clone(), self.n);
        for (k, v) in &self.orbits {
            out.add_orbit(k.clone(), ring.mul(v, c));
        }
        out
    }

    /// Expand each orbit into the sum of its distinct permutations.
    pub fn expand(&self) -> TensorElem<R> {
        let mut out = TensorElem::zero(self.ambient.clone(), self.n);
        for (k, c) in &self.orbits {
            for arrangement in distinct_arrangements(k) {
                out.add_term(arrangement, c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<S: Ring>(
        &self,
        target: &PolyRing<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> SymTensor<S> {
        assert_eq!(target.nvars(), self.ambient.nvars());
        let mut out = SymTensor::zero(target.clone(), self.n);
        for (k, c) in &self.orbits {
            out.add_orbit(k.clone(), f(c));
        }
        out
    }
}

/// Inverse of [`SymTensor::expand`]; fails on tensors that are not fixed by
/// the symmetric group, naming a violating transposition.
pub fn orbit_compress<R: Ring>(u: &TensorElem<R>) -> Result<SymTensor<R>> {
    u.symmetry_check()?;
    let mut out = SymTensor::zero(u.ambient().clone(), u.degree());
    for (k, c) in u.terms() {
        let mut sorted = k.clone();
        sorted.sort();
        if sorted == *k {
            out.orbits.insert(sorted, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Rationals, Ring};

    fn qt() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["t".into()])
    }

    fn t_poly() -> Poly<Rationals> {
        qt().var_poly(0)
    }

    #[test]
    fn embed_examples() {
        let ring = qt();
        // 1 in any slot gives the unit tensor
        let u = embed_factor(&ring.one(), 2, 3).unwrap();
        assert_eq!(u, TensorElem::unit(ring.clone(), 3));
        // t in slot 2 of degree 2
        let t2 = embed_factor(&t_poly(), 2, 2).unwrap();
        let key = vec![Monomial::unit(1), Monomial::var(1, 0)];
        assert_eq!(t2.coefficient(&key), Rationals.one());
        assert_eq!(t2.terms().count(), 1);
        // linearity: 1+t in slot 1 gives (1,1) + (t,1)
        let f = ring.one().add(&t_poly()).unwrap();
        let e = embed_factor(&f, 1, 2).unwrap();
        assert_eq!(e.terms().count(), 2);
        assert!(matches!(embed_factor(&f, 3, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn componentwise_product() {
        let ring = qt();
        let t = t_poly();
        let a = embed_factor(&t, 1, 2).unwrap(); // t (x) 1
        let b = embed_factor(&t, 2, 2).unwrap(); // 1 (x) t
        let ab = a.mul(&b).unwrap(); // t (x) t
        let key = vec![Monomial::var(1, 0), Monomial::var(1, 0)];
        assert_eq!(ab.coefficient(&key), Rationals.one());
        // unit is the identity
        assert_eq!(a.mul(&TensorElem::unit(ring, 2)).unwrap(), a);
        // squaring t (x) t gives t^2 (x) t^2
        let sq = ab.mul(&ab).unwrap();
        let key2 = vec![Monomial::new(vec![2]), Monomial::new(vec![2])];
        assert_eq!(sq.coefficient(&key2), Rationals.one());
        assert_eq!(sq.terms().count(), 1);
    }

    #[test]
    fn nu_examples() {
        let ring = qt();
        let t = t_poly();
        // nu(t, t) = 0
        assert!(nu_vector(&[t.clone(), t.clone()]).unwrap().is_zero());
        // nu(1, t) = 1 (x) t - t (x) 1
        let nu = nu_vector(&[ring.one(), t.clone()]).unwrap();
        let k1 = vec![Monomial::unit(1), Monomial::var(1, 0)];
        let k2 = vec![Monomial::var(1, 0), Monomial::unit(1)];
        assert_eq!(nu.coefficient(&k1), Rationals.one());
        assert_eq!(nu.coefficient(&k2), Rationals.from_i64(-1));
        // swapping inputs negates
        let swapped = nu_vector(&[t, ring.one()]).unwrap();
        assert_eq!(swapped, nu.neg());
        assert!(matches!(
            nu_vector::<Rationals>(&[]),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn orbit_round_trip() {
        let ring = qt();
        let t = t_poly();
        // compress(t (x) t): singleton orbit {t,t}
        let tt = embed_factor(&t, 1, 2)
            .unwrap()
            .mul(&embed_factor(&t, 2, 2).unwrap())
            .unwrap();
        let s = orbit_compress(&tt).unwrap();
        assert_eq!(s.num_orbits(), 1);
        assert_eq!(
            s.coefficient(&vec![Monomial::var(1, 0), Monomial::var(1, 0)]),
            Rationals.one()
        );
        // expand({1,t} -> 1) = 1 (x) t + t (x) 1
        let mut sym = SymTensor::zero(ring.clone(), 2);
        sym.add_orbit(vec![Monomial::var(1, 0), Monomial::unit(1)], Rationals.one());
        let e = sym.expand();
        assert_eq!(e.terms().count(), 2);
        assert_eq!(orbit_compress(&e).unwrap(), sym);
        // the antisymmetric tensor is rejected with a named transposition
        let nu = nu_vector(&[ring.one(), t]).unwrap();
        assert_eq!(
            orbit_compress(&nu),
            Err(Error::NotSymmetric { i: 1, j: 2 })
        );
    }

    #[test]
    fn permutation_parity_table() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, even)| !even).count();
        assert_eq!(odd, 3);
        // identity is even
        assert!(perms.iter().any(|(p, even)| *even && *p == vec![0, 1, 2]));
        // a single transposition is odd
        assert!(perms.iter().any(|(p, even)| !even && *p == vec![1, 0, 2]));
    }

    #[test]
    fn arrangements_of_multiset() {
        let a = Monomial::new(vec![0]);
        let b = Monomial::new(vec![1]);
        let arr = distinct_arrangements(&[b.clone(), a.clone(), b.clone()]);
        assert_eq!(arr.len(), 3); // aab, aba, baa
        let arr2 = distinct_arrangements(&[a.clone(), a.clone()]);
        assert_eq!(arr2.len(), 1);
    }
}
