//! Free algebras of finite rank given by structure constants, and the
//! canonical homomorphism sigma_E : Gamma^n_A E -> A.
//!
//! sigma_E sends gamma^n(x) to det(e |-> ex). It is computed here without
//! choosing generators: adjoin indeterminates t_1..t_n, form the degree-n
//! determinant form D(t) = det(mult(sum t_i e_i)), and read sigma of an
//! orbit-sum basis element with slot multiplicities a off as the
//! coefficient of t^a in D. That device is exact because the orbit basis of
//! TS^n with the "each distinct shuffle once" convention corresponds
//! monomial-by-monomial to D's expansion.

use crate::error::{Error, Result};
use crate::matrix::{det, Mat};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::ring::Ring;
use crate::tensor::{orbit_compress, SymTensor, TensorElem, TensorKey};

/// An algebra free of finite rank n over its base, presented by structure
/// constants `e_i e_j = sum_k c_{ij}^k e_k` and the coordinates of 1.
///
/// Commutativity, associativity and the unit law are verified eagerly at
/// construction; the constructor is the sole validation gate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAlgebra<R: Ring> {
    base: R,
    rank: usize,
    unit: Vec<R::Elem>,
    // flattened [i][j][k]
    constants: Vec<R::Elem>,
}

impl<R: Ring> FiniteAlgebra<R> {
    pub fn new(
        base: R,
        rank: usize,
        unit: Vec<R::Elem>,
        constants: Vec<Vec<Vec<R::Elem>>>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidAlgebra("rank must be positive".into()));
        }
        if unit.len() != rank
            || constants.len() != rank
            || constants
                .iter()
                .any(|ci| ci.len() != rank || ci.iter().any(|cij| cij.len() != rank))
        {
            return Err(Error::InvalidAlgebra(
                "structure constant array must be rank^3 and unit length rank".into(),
            ));
        }
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for ci in &constants {
            for cij in ci {
                flat.extend(cij.iter().cloned());
            }
        }
        let alg = FiniteAlgebra {
            base,
            rank,
            unit,
            constants: flat,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank;
        let ring = &self.base;
        for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if self.c(i, j, k) != self.c(j, i, k) {
                        return Err(Error::InvalidAlgebra(format!(
                            "not commutative at e_{} e_{}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        for j in 0..n {
            let e_j: Vec<R::Elem> = (0..n)
                .map(|k| if k == j { ring.one() } else { ring.zero() })
                .collect();
            if self.mul_vec(&self.unit, &e_j) != e_j {
                return Err(Error::InvalidAlgebra(format!(
                    "unit does not act as identity on e_{}",
                    j + 1
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let left = self.mul_vec(&self.mul_vec(&ei, &ej), &ek);
                    let right = self.mul_vec(&ei, &self.mul_vec(&ej, &ek));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "not associative at (e_{} e_{}) e_{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> &[R::Elem] {
        &self.unit
    }

    /// Structure constant c_{ij}^k (0-based indices).
    pub fn c(&self, i: usize, j: usize, k: usize) -> &R::Elem {
        &self.constants[(i * self.rank + j) * self.rank + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<R::Elem> {
        (0..self.rank)
            .map(|k| {
                if k == i {
                    self.base.one()
                } else {
                    self.base.zero()
                }
            })
            .collect()
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        let n = self.rank;
        let ring = &self.base;
        let mut out = vec![ring.zero(); n];
        for i in 0..n {
            if ring.is_zero(&x[i]) {
                continue;
            }
            for j in 0..n {
                if ring.is_zero(&y[j]) {
                    continue;
                }
                let xy = ring.mul(&x[i], &y[j]);
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = ring.add(slot, &ring.mul(&xy, self.c(i, j, k)));
                }
            }
        }
        out
    }

    pub fn pow_vec(&self, x: &[R::Elem], e: u32) -> Vec<R::Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul_vec(&acc, x);
        }
        acc
    }

    /// Matrix of multiplication by `x`: column j holds the coordinates of
    /// `x . e_j`. Linear in `x`.
    pub fn mult_matrix(&self, x: &[R::Elem]) -> Result<Mat<R::Elem>> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "coordinate vector of length {} for a rank-{} algebra",
                x.len(),
                self.rank
            )));
        }
        let n = self.rank;
        let ring = &self.base;
        Ok(Mat::from_fn(n, n, |k, j| {
            let mut acc = ring.zero();
            for (i, xi) in x.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(xi, self.c(i, j, k)));
            }
            acc
        }))
    }

    /// Trace of multiplication by `x`.
    pub fn trace(&self, x: &[R::Elem]) -> Result<R::Elem> {
        let m = self.mult_matrix(x)?;
        let ring = &self.base;
        let mut acc = ring.zero();
        for k in 0..self.rank {
            acc = ring.add(&acc, m.at(k, k));
        }
        Ok(acc)
    }

    /// Characteristic polynomial det(L - x) of multiplication by `x`, as a
    /// univariate polynomial in `L` over the base.
    pub fn charpoly(&self, x: &[R::Elem]) -> Result<Poly<R>> {
        let m = self.mult_matrix(x)?;
        let lring = PolyRing::new(self.base.clone(), vec!["L".into()]);
        let lam = lring.var_poly(0);
        let n = self.rank;
        let mat = Mat::from_fn(n, n, |i, j| {
            let c = lring.constant(m.at(i, j).clone());
            if i == j {
                lam.sub(&c).expect("same ambient")
            } else {
                c.neg()
            }
        });
        Ok(det(&lring, &mat))
    }

    /// Determinant of the trace form [Tr(e_i e_j)]; generates the
    /// discriminant ideal for this basis.
    pub fn discriminant(&self) -> R::Elem {
        let n = self.rank;
        let traces: Vec<Vec<R::Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let prod = self.mul_vec(&self.basis_vector(i), &self.basis_vector(j));
                        self.trace(&prod).expect("rank-length vector")
                    })
                    .collect()
            })
            .collect();
        det(&self.base, &Mat::from_rows(traces))
    }

    /// The polynomial alphabet e_1..e_n over the base, in which symmetric
    /// tensors over this algebra are written (each slot a basis symbol).
    pub fn basis_alphabet(&self) -> PolyRing<R> {
        PolyRing::new(
            self.base.clone(),
            (1..=self.rank).map(|i| format!("e{i}")).collect(),
        )
    }

    /// A coordinate vector as a degree-1 polynomial in the basis alphabet.
    pub fn vector_as_alphabet_poly(&self, x: &[R::Elem]) -> Poly<R> {
        let alphabet = self.basis_alphabet();
        Poly::from_terms(
            alphabet.clone(),
            x.iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(self.rank, i), c.clone())),
        )
    }

    fn check_alphabet_tensor(&self, s: &SymTensor<R>) -> Result<()> {
        if s.degree() != self.rank {
            return Err(Error::DegreeMismatch(format!(
                "tensor degree {} but algebra rank {}",
                s.degree(),
                self.rank
            )));
        }
        if *s.ambient() != self.basis_alphabet() {
            return Err(Error::BadAlphabet(format!(
                "expected tensors over {}",
                self.basis_alphabet().notation()
            )));
        }
        for (key, _) in s.orbits() {
            for m in key {
                if m.total_degree() != 1 {
                    return Err(Error::BadAlphabet(format!(
                        "slot monomial of degree {}",
                        m.total_degree()
                    )));
                }
            }
        }
        Ok(())
    }

    /// The determinant form D(t) = det(mult(sum t_i e_i)) in adjoined
    /// variables t_1..t_n over the base.
    pub fn determinant_form(&self) -> Poly<R> {
        let n = self.rank;
        let tring = PolyRing::new(
            self.base.clone(),
            (1..=n).map(|i| format!("t{i}")).collect(),
        );
        let mat = Mat::from_fn(n, n, |k, j| {
            Poly::from_terms(
                tring.clone(),
                (0..n).map(|i| (Monomial::var(n, i), self.c(i, j, k).clone())),
            )
        });
        det(&tring, &mat)
    }

    /// The canonical homomorphism sigma_E on a degree-n symmetric tensor
    /// over the basis alphabet: the orbit with slot multiplicities `a`
    /// contributes its coefficient times the t^a-coefficient of the
    /// determinant form. sigma is a ring homomorphism for the internal
    /// product and sends c . gamma^n(1) to c.
    pub fn sigma(&self, s: &SymTensor<R>) -> Result<R::Elem> {
        self.check_alphabet_tensor(s)?;
        let d = self.determinant_form();
        let ring = &self.base;
        let mut acc = ring.zero();
        for (key, coeff) in s.orbits() {
            let mut exps = vec![0u32; self.rank];
            for m in key {
                let i = m
                    .exponents()
                    .iter()
                    .position(|&e| e == 1)
                    .expect("degree-1 slot");
                exps[i] += 1;
            }
            let dc = d.coefficient(&Monomial::new(exps));
            acc = ring.add(&acc, &ring.mul(coeff, &dc));
        }
        Ok(acc)
    }

    /// gamma^n of an algebra element given by coordinates, as a symmetric
    /// tensor over the basis alphabet.
    pub fn gamma_top(&self, x: &[R::Elem]) -> Result<SymTensor<R>> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch(
                "coordinate vector length".into(),
            ));
        }
        Ok(crate::divided::gamma(
            self.rank as u32,
            &self.vector_as_alphabet_poly(x),
        ))
    }

    /// Internal product of Gamma^n_B E: slots multiply through the
    /// structure constants and the result is re-expressed in the
    /// basis-orbit form.
    pub fn internal_mul(&self, u: &SymTensor<R>, v: &SymTensor<R>) -> Result<SymTensor<R>> {
        self.check_alphabet_tensor(u)?;
        self.check_alphabet_tensor(v)?;
        let alphabet = self.basis_alphabet();
        let ring = self.base.clone();
        let ue = u.expand();
        let ve = v.expand();
        let mut out = TensorElem::zero(alphabet, self.rank);
        for (ku, cu) in ue.terms() {
            for (kv, cv) in ve.terms() {
                // slotwise products as coordinate vectors
                let slot_vectors: Vec<Vec<R::Elem>> = ku
                    .iter()
                    .zip(kv)
                    .map(|(ma, mb)| {
                        let a = ma.exponents().iter().position(|&e| e == 1).unwrap();
                        let b = mb.exponents().iter().position(|&e| e == 1).unwrap();
                        (0..self.rank).map(|k| self.c(a, b, k).clone()).collect()
                    })
                    .collect();
                expand_slot_vectors(
                    &mut out,
                    &ring,
                    &slot_vectors,
                    &mut Vec::new(),
                    ring.mul(cu, cv),
                    self.rank,
                );
            }
        }
        orbit_compress(&out)
    }
}

/// Multilinear expansion of a tensor whose slots hold coordinate vectors.
pub(crate) fn expand_slot_vectors<R: Ring>(
    out: &mut TensorElem<R>,
    ring: &R,
    slots: &[Vec<R::Elem>],
    key: &mut TensorKey,
    coeff: R::Elem,
    rank: usize,
) {
    if ring.is_zero(&coeff) {
        return;
    }
    let i = key.len();
    if i == slots.len() {
        out.add_term(key.clone(), coeff);
        return;
    }
    for (k, c) in slots[i].iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        key.push(Monomial::var(rank, k));
        expand_slot_vectors(out, ring, slots, key, ring.mul(&coeff, c), rank);
        key.pop();
    }
}

/// E = base[t]/(m) for a monic polynomial m of degree n, with basis
/// 1, t, .., t^{n-1}. `lower` holds the coefficients of m - t^n, lowest
/// degree first.
pub fn univariate_quotient<R: Ring>(base: R, lower: &[R::Elem]) -> Result<FiniteAlgebra<R>> {
    let n = lower.len();
    if n == 0 {
        return Err(Error::InvalidAlgebra("rank must be positive".into()));
    }
    // powers of t up to t^{2n-2} reduced mod m
    let mut powers: Vec<Vec<R::Elem>> = Vec::with_capacity(2 * n - 1);
    for k in 0..n {
        let mut v = vec![base.zero(); n];
        v[k] = base.one();
        powers.push(v);
    }
    for k in n..=(2 * n).saturating_sub(2) {
        let prev = powers[k - 1].clone();
        // multiply by t: shift, then reduce t^n = -(lower)
        let mut v = vec![base.zero(); n];
        for i in 0..n - 1 {
            v[i + 1] = prev[i].clone();
        }
        let top = prev[n - 1].clone();
        for i in 0..n {
            let red = base.mul(&top, &base.neg(&lower[i]));
            v[i] = base.add(&v[i], &red);
        }
        powers.push(v);
    }
    let constants: Vec<Vec<Vec<R::Elem>>> = (0..n)
        .map(|i| (0..n).map(|j| powers[i + j].clone()).collect())
        .collect();
    let mut unit = vec![base.zero(); n];
    unit[0] = base.one();
    FiniteAlgebra::new(base, n, unit, constants)
}

/// The split algebra base^n: basis of orthogonal idempotents, unit all-ones.
pub fn split_algebra<R: Ring>(base: R, n: usize) -> Result<FiniteAlgebra<R>> {
    let constants: Vec<Vec<Vec<R::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            if i == j && j == k {
                                base.one()
                            } else {
                                base.zero()
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit = vec![base.one(); n];
    FiniteAlgebra::new(base, n, unit, constants)
}

/// Direct product of two algebras over the same base, basis concatenated.
pub fn product_algebra<R: Ring>(
    a: &FiniteAlgebra<R>,
    b: &FiniteAlgebra<R>,
) -> Result<FiniteAlgebra<R>> {
    if a.base != b.base {
        return Err(Error::RingMismatch(
            "product of algebras over different bases".into(),
        ));
    }
    let base = a.base.clone();
    let n = a.rank + b.rank;
    let constants: Vec<Vec<Vec<R::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            if i < a.rank && j < a.rank && k < a.rank {
                                a.c(i, j, k).clone()
                            } else if i >= a.rank && j >= a.rank && k >= a.rank {
                                b.c(i - a.rank, j - a.rank, k - a.rank).clone()
                            } else {
                                base.zero()
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut unit: Vec<R::Elem> = a.unit.clone();
    unit.extend(b.unit.iter().cloned());
    FiniteAlgebra::new(base, n, unit, constants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divided::{gamma, shuffle};
    use crate::ring::{Rationals, Ring};

    fn q() -> Rationals {
        Rationals
    }

    /// Q[t]/(t^2): lower coefficients of m - t^2 = (0, 0)
    fn dual_numbers() -> FiniteAlgebra<Rationals> {
        univariate_quotient(q(), &[q().zero(), q().zero()]).unwrap()
    }

    /// Q[t]/(t^2 - 1)
    fn hyperbolic() -> FiniteAlgebra<Rationals> {
        univariate_quotient(q(), &[q().from_i64(-1), q().zero()]).unwrap()
    }

    #[test]
    fn mult_matrix_examples() {
        let e = dual_numbers();
        // x = unit -> identity matrix
        let id = e.mult_matrix(e.unit()).unwrap();
        assert_eq!(id, crate::matrix::identity(&q(), 2));
        // x = t-bar -> [[0,0],[1,0]]
        let m = e.mult_matrix(&[q().zero(), q().one()]).unwrap();
        assert_eq!(*m.at(0, 0), q().zero());
        assert_eq!(*m.at(0, 1), q().zero());
        assert_eq!(*m.at(1, 0), q().one());
        assert_eq!(*m.at(1, 1), q().zero());
        // Q x Q with x = e2
        let s = split_algebra(q(), 2).unwrap();
        let m = s.mult_matrix(&[q().zero(), q().one()]).unwrap();
        assert_eq!(*m.at(0, 0), q().zero());
        assert_eq!(*m.at(1, 1), q().one());
        assert_eq!(*m.at(0, 1), q().zero());
        assert_eq!(*m.at(1, 0), q().zero());
    }

    #[test]
    fn charpoly_examples() {
        let e = dual_numbers();
        let cp = e.charpoly(&[q().zero(), q().one()]).unwrap();
        assert_eq!(cp.to_string(), "L^2");
        let h = hyperbolic();
        let cp = h.charpoly(&[q().zero(), q().one()]).unwrap();
        assert_eq!(cp.to_string(), "L^2 - 1");
        // x = unit -> (L - 1)^n
        let cp = h.charpoly(h.unit()).unwrap();
        assert_eq!(cp.to_string(), "L^2 - 2*L + 1");
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(dual_numbers().discriminant(), q().zero());
        assert_eq!(hyperbolic().discriminant(), q().from_i64(4));
        assert_eq!(split_algebra(q(), 2).unwrap().discriminant(), q().one());
        // Q[s][t]/(t^2 - s) over Q[s]: discriminant 4s
        let qs = PolyRing::new(q(), vec!["s".into()]);
        let s = qs.var_poly(0);
        let e = univariate_quotient(qs.clone(), &[s.neg(), qs.zero()]).unwrap();
        assert_eq!(e.discriminant().to_string(), "4*s");
    }

    #[test]
    fn sigma_examples() {
        // sigma(gamma^n(1)) = 1
        let h = hyperbolic();
        let one = h.gamma_top(h.unit()).unwrap();
        assert_eq!(h.sigma(&one).unwrap(), q().one());
        // Q x Q: sigma(orbit{e1,e2}) = 1
        let s = split_algebra(q(), 2).unwrap();
        let alphabet = s.basis_alphabet();
        let e1 = alphabet.var_poly(0);
        let e2 = alphabet.var_poly(1);
        let mixed = shuffle(&gamma(1, &e1), &gamma(1, &e2)).unwrap();
        assert_eq!(s.sigma(&mixed).unwrap(), q().one());
        // Q[t]/(t^2-1): sigma(gamma^2(t-bar)) = det [[0,1],[1,0]] = -1
        let g = h.gamma_top(&[q().zero(), q().one()]).unwrap();
        assert_eq!(h.sigma(&g).unwrap(), q().from_i64(-1));
    }

    #[test]
    fn sigma_rejects_wrong_alphabet() {
        let h = hyperbolic();
        // degree mismatch
        let bad = SymTensor::unit(h.basis_alphabet(), 3);
        assert!(matches!(h.sigma(&bad), Err(Error::DegreeMismatch(_))));
        // degree-2 slot monomial
        let alphabet = h.basis_alphabet();
        let e1sq = gamma(
            2,
            &alphabet.var_poly(0).mul(&alphabet.var_poly(0)).unwrap(),
        );
        assert!(matches!(h.sigma(&e1sq), Err(Error::BadAlphabet(_))));
    }

    #[test]
    fn constructor_rejects_bad_algebras() {
        // unit that is not an identity
        let bad_unit = FiniteAlgebra::new(
            q(),
            2,
            vec![q().zero(), q().one()],
            vec![
                vec![vec![q().one(), q().zero()], vec![q().zero(), q().one()]],
                vec![vec![q().zero(), q().one()], vec![q().one(), q().one()]],
            ],
        );
        assert!(matches!(bad_unit, Err(Error::InvalidAlgebra(_))));
        // non-commutative table
        let nc = FiniteAlgebra::new(
            q(),
            2,
            vec![q().one(), q().zero()],
            vec![
                vec![vec![q().one(), q().zero()], vec![q().zero(), q().one()]],
                vec![vec![q().one(), q().one()], vec![q().zero(), q().zero()]],
            ],
        );
        assert!(matches!(nc, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn algebra_internal_mul_matches_sigma_multiplicativity() {
        let h = hyperbolic();
        let u = h.gamma_top(&[q().from_i64(1), q().from_i64(2)]).unwrap();
        let v = h.gamma_top(&[q().from_i64(3), q().from_i64(-1)]).unwrap();
        let uv = h.internal_mul(&u, &v).unwrap();
        let su = h.sigma(&u).unwrap();
        let sv = h.sigma(&v).unwrap();
        assert_eq!(h.sigma(&uv).unwrap(), q().mul(&su, &sv));
        // gamma is multiplicative through the algebra product
        let x = [q().from_i64(1), q().from_i64(2)];
        let y = [q().from_i64(3), q().from_i64(-1)];
        let xy = h.mul_vec(&x, &y);
        assert_eq!(uv, h.gamma_top(&xy).unwrap());
    }

    #[test]
    fn product_algebra_blocks() {
        let e = product_algebra(&dual_numbers(), &split_algebra(q(), 1).unwrap()).unwrap();
        assert_eq!(e.rank(), 3);
        assert_eq!(e.discriminant(), q().zero());
        let s = split_algebra(q(), 3).unwrap();
        assert_eq!(s.discriminant(), q().one());
    }
}
