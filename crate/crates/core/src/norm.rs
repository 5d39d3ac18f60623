//! The Grothendieck-Deligne norm map for explicit rank-n quotients of a
//! polynomial algebra, and the decidable discriminant-ideal comparison
//! over fields and PIDs.
//!
//! A point of the Hilbert functor of n points is given here concretely: a
//! finite free algebra E over the base together with the images of the
//! polynomial variables. The induced map Gamma^n F -> Gamma^n E followed by
//! the canonical homomorphism sigma_E is the norm; applied to the ideal of
//! norms it produces the discriminant ideal of E.

use crate::algebra::{expand_slot_vectors, FiniteAlgebra};
use crate::divided::NormIdealGens;
use crate::error::{Error, Result};
use crate::matrix::{rank, Mat};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::ring::{Integers, PrimeField, Rationals, Ring};
use crate::tensor::{orbit_compress, SymTensor, TensorElem};

/// A homomorphism F = B[T_1..T_r] -> E determined by the images of the
/// variables, with E free of finite rank over B. Surjectivity of F -> E is
/// verified at construction by checking that the monomials in the images
/// span E over the fraction field of B.
#[derive(Clone, Debug)]
pub struct AlgebraMap<R: Ring> {
    source: PolyRing<R>,
    target: FiniteAlgebra<R>,
    images: Vec<Vec<R::Elem>>,
}

impl<R: Ring> AlgebraMap<R> {
    pub fn new(
        source: PolyRing<R>,
        target: FiniteAlgebra<R>,
        images: Vec<Vec<R::Elem>>,
    ) -> Result<Self> {
        if source.coeff_ring() != target.base() {
            return Err(Error::RingMismatch(
                "source coefficients and target base differ".into(),
            ));
        }
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} variable images for {} variables",
                images.len(),
                source.nvars()
            )));
        }
        if images.iter().any(|v| v.len() != target.rank()) {
            return Err(Error::DimensionMismatch(
                "image coordinates must have length = rank".into(),
            ));
        }
        let map = AlgebraMap {
            source,
            target,
            images,
        };
        if !map.images_generate()? {
            return Err(Error::NotSurjective);
        }
        Ok(map)
    }

    pub fn source(&self) -> &PolyRing<R> {
        &self.source
    }

    pub fn target(&self) -> &FiniteAlgebra<R> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<R::Elem>] {
        &self.images
    }

    /// Span closure: starting from 1, repeatedly multiply by the variable
    /// images; the monomial images span E over Frac(B) iff the rank of the
    /// collected coordinate matrix reaches the rank of E.
    fn images_generate(&self) -> Result<bool> {
        let n = self.target.rank();
        let base = self.target.base();
        let mut vectors: Vec<Vec<R::Elem>> = vec![self.target.unit().to_vec()];
        let mut frontier = vectors.clone();
        let mut current_rank = rank(base, &Mat::from_rows(vectors.clone()))?;
        loop {
            if current_rank == n {
                return Ok(true);
            }
            let mut next = Vec::new();
            for v in &frontier {
                for img in &self.images {
                    next.push(self.target.mul_vec(v, img));
                }
            }
            let mut all = vectors.clone();
            all.extend(next.iter().cloned());
            let new_rank = rank(base, &Mat::from_rows(all.clone()))?;
            if new_rank == current_rank {
                return Ok(false);
            }
            vectors = all;
            frontier = next;
            current_rank = new_rank;
        }
    }

    /// Coordinates of the image of a monomial of F.
    pub fn image_of_monomial(&self, m: &Monomial) -> Vec<R::Elem> {
        let mut acc = self.target.unit().to_vec();
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = self.target.mul_vec(&acc, &self.images[i]);
            }
        }
        acc
    }

    /// Coordinates of the image of a polynomial of F.
    pub fn image_of_poly(&self, f: &Poly<R>) -> Result<Vec<R::Elem>> {
        if f.ambient() != &self.source {
            return Err(Error::RingMismatch("polynomial not in the source ring".into()));
        }
        let base = self.target.base();
        let mut acc = vec![base.zero(); self.target.rank()];
        for (m, c) in f.terms() {
            let img = self.image_of_monomial(m);
            for (slot, coord) in acc.iter_mut().zip(img) {
                *slot = base.add(slot, &base.mul(c, &coord));
            }
        }
        Ok(acc)
    }

    /// The induced map Gamma^n_B F -> Gamma^n_B E: every slot is pushed
    /// through the homomorphism, re-expressed in the basis, and the result
    /// is symmetrised back into orbit form.
    pub fn reduce_symmetric_tensor(&self, s: &SymTensor<R>) -> Result<SymTensor<R>> {
        let n = self.target.rank();
        if s.degree() != n {
            return Err(Error::DegreeMismatch(format!(
                "tensor degree {} but target rank {}",
                s.degree(),
                n
            )));
        }
        if s.ambient() != &self.source {
            return Err(Error::RingMismatch("tensor not over the source ring".into()));
        }
        let base = self.target.base().clone();
        let alphabet = self.target.basis_alphabet();
        let expanded = s.expand();
        let mut out = TensorElem::zero(alphabet, n);
        for (key, coeff) in expanded.terms() {
            let slot_vectors: Vec<Vec<R::Elem>> =
                key.iter().map(|m| self.image_of_monomial(m)).collect();
            expand_slot_vectors(
                &mut out,
                &base,
                &slot_vectors,
                &mut Vec::new(),
                coeff.clone(),
                n,
            );
        }
        orbit_compress(&out)
    }

    /// The Grothendieck-Deligne norm of a degree-n element of Gamma^n_B F:
    /// sigma_E after reduction. A ring homomorphism for the internal
    /// product.
    pub fn norm_value(&self, s: &SymTensor<R>) -> Result<R::Elem> {
        let reduced = self.reduce_symmetric_tensor(s)?;
        self.target.sigma(&reduced)
    }

    /// Norm values of every generator of an ideal of norms. Requires the
    /// spanning module to be big enough for this point: the images of
    /// V alone must span E over Frac(B).
    pub fn norm_ideal_image(&self, gens: &NormIdealGens<R>) -> Result<Vec<R::Elem>> {
        let coords: Vec<Vec<R::Elem>> = gens
            .v_basis
            .iter()
            .map(|v| self.image_of_poly(v))
            .collect::<Result<_>>()?;
        let r = rank(self.target.base(), &Mat::from_rows(coords))?;
        if r != self.target.rank() {
            return Err(Error::NotSufficientlyBig);
        }
        gens.gens
            .iter()
            .map(|g| self.norm_value(&g.value))
            .collect()
    }
}

/// Rings in which finitely generated ideals are principal with a计算able
/// generator: fields, Z, and univariate polynomial rings over a field.
pub trait PrincipalGcdRing: Ring {
    /// A generator of the ideal spanned by the given elements.
    fn ideal_gcd(&self, elems: &[Self::Elem]) -> Result<Self::Elem>;

    /// Do `a` and `b` agree up to a unit?
    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;
}

impl PrincipalGcdRing for Integers {
    fn ideal_gcd(&self, elems: &[Self::Elem]) -> Result<Self::Elem> {
        use num_integer::Integer as _;
        Ok(elems
            .iter()
            .fold(self.zero(), |acc, x| acc.gcd(x)))
    }
    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(a == b || *a == -b)
    }
}

fn field_gcd<R: Ring>(ring: &R, elems: &[R::Elem]) -> R::Elem {
    if elems.iter().any(|x| !ring.is_zero(x)) {
        ring.one()
    } else {
        ring.zero()
    }
}

impl PrincipalGcdRing for Rationals {
    fn ideal_gcd(&self, elems: &[Self::Elem]) -> Result<Self::Elem> {
        Ok(field_gcd(self, elems))
    }
    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(self.is_zero(a) == self.is_zero(b))
    }
}

impl PrincipalGcdRing for PrimeField {
    fn ideal_gcd(&self, elems: &[Self::Elem]) -> Result<Self::Elem> {
        Ok(field_gcd(self, elems))
    }
    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(self.is_zero(a) == self.is_zero(b))
    }
}

/// Univariate division with remainder over a field.
fn poly_rem<R: Ring>(ring: &PolyRing<R>, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    let coeff = ring.coeff_ring().clone();
    let (bm, bc) = b.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let binv = coeff.inverse(&bc).expect("field coefficient");
    let mut rem = a.clone();
    loop {
        let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) else {
            return rem;
        };
        let Some(q) = rm.div(&bm) else {
            return rem;
        };
        let t = ring.monomial(q, coeff.mul(&rc, &binv));
        rem = rem.sub(&t.mul(b).unwrap()).unwrap();
    }
}

fn monic<R: Ring>(ring: &PolyRing<R>, a: &Poly<R>) -> Poly<R> {
    match a.leading_term() {
        None => a.clone(),
        Some((_, c)) => {
            let inv = ring
                .coeff_ring()
                .inverse(c)
                .expect("field coefficient");
            a.scale(&inv)
        }
    }
}

impl<R: Ring> PolyRing<R> {
    fn require_univariate_over_field(&self) -> Result<()> {
        if self.nvars() != 1 || !self.coeff_ring().is_field() {
            return Err(Error::UnsupportedBase(format!(
                "{} is not a univariate polynomial ring over a field",
                self.notation()
            )));
        }
        Ok(())
    }
}

impl<R: Ring> PrincipalGcdRing for PolyRing<R> {
    fn ideal_gcd(&self, elems: &[Self::Elem]) -> Result<Self::Elem> {
        self.require_univariate_over_field()?;
        let mut acc = self.zero();
        for e in elems {
            // euclid on (acc, e)
            let mut a = acc.clone();
            let mut b = e.clone();
            while !b.is_zero() {
                let r = poly_rem(self, &a, &b);
                a = b;
                b = r;
            }
            acc = monic(self, &a);
        }
        Ok(acc)
    }
    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        self.require_univariate_over_field()?;
        Ok(monic(self, a) == monic(self, b))
    }
}

/// Do two finite families generate the same ideal of a PID? Decided by
/// comparing gcds up to a unit.
pub fn pid_ideal_equal<R: PrincipalGcdRing>(
    ring: &R,
    gens_a: &[R::Elem],
    gens_b: &[R::Elem],
) -> Result<bool> {
    let ga = ring.ideal_gcd(gens_a)?;
    let gb = ring.ideal_gcd(gens_b)?;
    ring.associates(&ga, &gb)
}
