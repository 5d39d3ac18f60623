//! The divided-power algebra Gamma^n_A F realized on symmetric tensors.
//!
//! For a free algebra F (here a polynomial ring) the map gamma^n(f) |-> f
//! (x) ... (x) f identifies Gamma^n_A F with TS^n_A F, so every element here
//! is a [`SymTensor`]. Two products coexist and must not be confused:
//!
//! * the external (shuffle) product `*`: Gamma^n x Gamma^m -> Gamma^{n+m},
//!   [`shuffle`];
//! * the internal product on a fixed Gamma^n induced by the multiplication
//!   of F, [`internal_mul`].
//!
//! On orbit keys the shuffle product is multiset union weighted by binomial
//! coefficients; the internal product is componentwise multiplication of
//! tensor slots.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::ring::Ring;
use crate::tensor::{
    nu_vector, orbit_compress, permutations_with_sign, SymTensor, TensorKey,
};

/// gamma^a(f): the a-fold tensor power of `f` as a symmetric tensor.
///
/// gamma^0(f) is the unit of Gamma^0 = A. Multisets of `a` terms of `f`
/// index the orbits; each distinct arrangement occurs exactly once in the
/// tensor power, so the orbit coefficient is just the product of the chosen
/// term coefficients.
pub fn gamma<R: Ring>(a: u32, f: &Poly<R>) -> SymTensor<R> {
    let ambient = f.ambient().clone();
    let ring = ambient.coeff_ring().clone();
    let mut out = SymTensor::zero(ambient, a as usize);
    let terms: Vec<(&Monomial, &R::Elem)> = f.terms().collect();
    fn rec<R: Ring>(
        out: &mut SymTensor<R>,
        ring: &R,
        terms: &[(&Monomial, &R::Elem)],
        start: usize,
        left: u32,
        key: &mut TensorKey,
        coeff: R::Elem,
    ) {
        if left == 0 {
            out.add_orbit(key.clone(), coeff);
            return;
        }
        for i in start..terms.len() {
            let (m, c) = terms[i];
            key.push((*m).clone());
            rec(out, ring, terms, i, left - 1, key, ring.mul(&coeff, c));
            key.pop();
        }
    }
    let mut key = Vec::with_capacity(a as usize);
    rec(&mut out, &ring, &terms, 0, a, &mut key, ring.one());
    out
}

/// The external product `u * v` in the graded algebra Gamma_A F.
///
/// On orbits it is the multiset union; the multiplicity factor is
/// `prod_m C(mult_u(m) + mult_v(m), mult_u(m))`, the number of shuffles
/// merging equal monomials.
pub fn shuffle<R: Ring>(u: &SymTensor<R>, v: &SymTensor<R>) -> Result<SymTensor<R>> {
    if u.ambient() != v.ambient() {
        return Err(Error::RingMismatch("shuffle ambients differ".into()));
    }
    let ring = u.ambient().coeff_ring().clone();
    let mut out = SymTensor::zero(u.ambient().clone(), u.degree() + v.degree());
    for (ku, cu) in u.orbits() {
        for (kv, cv) in v.orbits() {
            let mut merged = ku.clone();
            merged.extend(kv.iter().cloned());
            let mut factor = BigInt::from(1);
            let mut distinct: Vec<&Monomial> = ku.iter().chain(kv.iter()).collect();
            distinct.sort();
            distinct.dedup();
            for m in distinct {
                let a = ku.iter().filter(|x| *x == m).count();
                let b = kv.iter().filter(|x| *x == m).count();
                factor *= binomial(BigInt::from(a + b), BigInt::from(a));
            }
            let c = ring.mul(&ring.mul(cu, cv), &ring.from_bigint(&factor));
            out.add_orbit(merged, c);
        }
    }
    Ok(out)
}

/// The internal product of Gamma^n_A F: componentwise multiplication of the
/// underlying tensors. gamma^n(f) . gamma^n(g) = gamma^n(fg).
pub fn internal_mul<R: Ring>(u: &SymTensor<R>, v: &SymTensor<R>) -> Result<SymTensor<R>> {
    if u.ambient() != v.ambient() {
        return Err(Error::RingMismatch("internal product ambients differ".into()));
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(format!(
            "internal product needs equal degrees, got {} and {}",
            u.degree(),
            v.degree()
        )));
    }
    let product = u.expand().mul(&v.expand())?;
    orbit_compress(&product)
}

/// Internal power u^k.
pub fn internal_pow<R: Ring>(u: &SymTensor<R>, k: u32) -> Result<SymTensor<R>> {
    let mut acc = SymTensor::unit(u.ambient().clone(), u.degree());
    for _ in 0..k {
        acc = internal_mul(&acc, u)?;
    }
    Ok(acc)
}

/// The shuffle monomial `prod*_j gamma^{a_j}(x_j)` of one margin row.
pub fn shuffle_monomial<R: Ring>(row: &[(u32, Poly<R>)]) -> Result<SymTensor<R>> {
    let first = row
        .first()
        .ok_or_else(|| Error::EmptyInput("empty shuffle monomial".into()))?;
    let ambient = first.1.ambient().clone();
    let mut acc = SymTensor::unit(ambient, 0);
    for (a, x) in row {
        acc = shuffle(&acc, &gamma(*a, x))?;
    }
    Ok(acc)
}

/// The margin system B{a_{i,j}}: non-negative integer tensors b on the index
/// set I = [1..q_1] x ... x [1..q_p] of total mass n whose (r,s)-marginal
/// sums equal a_{r,s}.
#[derive(Clone, Debug)]
pub struct MarginSystem {
    q: Vec<usize>,
    a: Vec<Vec<u32>>,
    n: u32,
}

impl MarginSystem {
    pub fn new(a: Vec<Vec<u32>>) -> Result<Self> {
        if a.is_empty() || a.iter().any(Vec::is_empty) {
            return Err(Error::EmptyInput("margin system with no factors".into()));
        }
        let sums: Vec<u32> = a.iter().map(|row| row.iter().sum()).collect();
        let n = sums[0];
        if sums.iter().any(|&s| s != n) {
            return Err(Error::BadMargins(format!("row sums {sums:?}")));
        }
        let q = a.iter().map(Vec::len).collect();
        Ok(MarginSystem { q, a, n })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn factors(&self) -> usize {
        self.q.len()
    }

    fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new()];
        for &qi in &self.q {
            let mut next = Vec::with_capacity(cells.len() * qi);
            for cell in &cells {
                for s in 0..qi {
                    let mut c = cell.clone();
                    c.push(s);
                    next.push(c);
                }
            }
            cells = next;
        }
        cells
    }

    /// Visit every margin tensor as `(cells, values)`; cells are in
    /// lexicographic order of their multi-indices. Enumeration prunes a
    /// branch as soon as a marginal can no longer be met.
    pub fn enumerate(&self, mut visit: impl FnMut(&[Vec<usize>], &[u32])) {
        let cells = self.cells();
        let p = self.q.len();
        // last flat cell touching margin (r, s)
        let mut last_cell = vec![vec![0usize; 0]; p];
        for (r, &qi) in self.q.iter().enumerate() {
            last_cell[r] = vec![0; qi];
            for (idx, cell) in cells.iter().enumerate() {
                last_cell[r][cell[r]] = idx;
            }
        }
        let mut rem = self.a.clone();
        let mut values = vec![0u32; cells.len()];
        fn rec(
            pos: usize,
            cells: &[Vec<usize>],
            last_cell: &[Vec<usize>],
            rem: &mut [Vec<u32>],
            values: &mut [u32],
            visit: &mut impl FnMut(&[Vec<usize>], &[u32]),
        ) {
            // margins with no future cell must already be exhausted
            for (r, row) in rem.iter().enumerate() {
                for (s, &left) in row.iter().enumerate() {
                    if left > 0 && last_cell[r][s] < pos {
                        return;
                    }
                }
            }
            if pos == cells.len() {
                visit(cells, values);
                return;
            }
            let cell = &cells[pos];
            let cap = cell
                .iter()
                .enumerate()
                .map(|(r, &s)| rem[r][s])
                .min()
                .unwrap_or(0);
            for b in 0..=cap {
                for (r, &s) in cell.iter().enumerate() {
                    rem[r][s] -= b;
                }
                values[pos] = b;
                rec(pos + 1, cells, last_cell, rem, values, visit);
                for (r, &s) in cell.iter().enumerate() {
                    rem[r][s] += b;
                }
            }
            values[pos] = 0;
        }
        rec(0, &cells, &last_cell, &mut rem, &mut values, &mut visit);
    }
}

/// The multiplication formula of the divided-power algebra: computes the
/// internal product
///
/// ```text
/// (prod*_j gamma^{a_{1,j}}(x_{1,j})) ... (prod*_j gamma^{a_{p,j}}(x_{p,j}))
///   = sum_{b in B{a_{i,j}}} prod*_{(i_1..i_p) in I}
///       gamma^{b_{i_1..i_p}}(x_{1,i_1} x_{2,i_2} ... x_{p,i_p})
/// ```
///
/// by enumerating the margin system on the right-hand side.
pub fn margin_product<R: Ring>(factors: &[Vec<(u32, Poly<R>)>]) -> Result<SymTensor<R>> {
    if factors.is_empty() {
        return Err(Error::EmptyInput("margin product with no factors".into()));
    }
    let system = MarginSystem::new(
        factors
            .iter()
            .map(|row| row.iter().map(|(a, _)| *a).collect())
            .collect(),
    )?;
    let ambient = factors[0][0].1.ambient().clone();
    for row in factors {
        for (_, x) in row {
            if x.ambient() != &ambient {
                return Err(Error::RingMismatch("margin product ambients differ".into()));
            }
        }
    }
    let n = system.degree() as usize;
    let mut total = SymTensor::zero(ambient.clone(), n);
    let mut failure = None;
    system.enumerate(|cells, values| {
        if failure.is_some() {
            return;
        }
        let mut term = SymTensor::unit(ambient.clone(), 0);
        for (cell, &b) in cells.iter().zip(values) {
            if b == 0 {
                continue;
            }
            let mut prod = ambient.one();
            for (r, &s) in cell.iter().enumerate() {
                prod = match prod.mul(&factors[r][s].1) {
                    Ok(p) => p,
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                };
            }
            term = match shuffle(&term, &gamma(b, &prod)) {
                Ok(t) => t,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
        }
        total = total.add(&term).expect("same degree");
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// delta(x, y) = det* [gamma^1(x_i y_j)], expanded as the signed sum over
/// permutations of shuffle products of degree-1 elements.
pub fn delta<R: Ring>(x: &[Poly<R>], y: &[Poly<R>]) -> Result<SymTensor<R>> {
    if x.is_empty() {
        return Err(Error::EmptyInput("delta of empty tuples".into()));
    }
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "delta needs tuples of equal length, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    let ambient = x[0].ambient().clone();
    let ring = ambient.coeff_ring().clone();
    let mut acc = SymTensor::zero(ambient.clone(), n);
    for (perm, even) in permutations_with_sign(n) {
        let mut term = SymTensor::unit(ambient.clone(), 0);
        for i in 0..n {
            let prod = x[i].mul(&y[perm[i]])?;
            term = shuffle(&term, &gamma(1, &prod))?;
        }
        if !even {
            term = term.scale(&ring.neg(&ring.one()));
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The independent route to delta through the norm vectors: the compression
/// of nu(x) . nu(y) in T^n. Agreement with [`delta`] is the statement that
/// alpha_n(delta(x,y)) = nu(x) nu(y).
pub fn delta_via_nu<R: Ring>(x: &[Poly<R>], y: &[Poly<R>]) -> Result<SymTensor<R>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "delta needs tuples of equal length, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let nx = nu_vector(x)?;
    let ny = nu_vector(y)?;
    orbit_compress(&nx.mul(&ny)?)
}

/// Determinant of a square matrix of degree-n symmetric tensors under the
/// internal product of Gamma^n.
pub fn det_internal<R: Ring>(entries: &[Vec<SymTensor<R>>]) -> Result<SymTensor<R>> {
    let n = entries.len();
    if n == 0 || entries.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("square matrix required".into()));
    }
    let ambient = entries[0][0].ambient().clone();
    let degree = entries[0][0].degree();
    let ring = ambient.coeff_ring().clone();
    let mut acc = SymTensor::zero(ambient.clone(), degree);
    for (perm, even) in permutations_with_sign(n) {
        let mut term = SymTensor::unit(ambient.clone(), degree);
        for i in 0..n {
            term = internal_mul(&term, &entries[i][perm[i]])?;
        }
        if !even {
            term = term.scale(&ring.neg(&ring.one()));
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// One generator delta(x, y) of the ideal of norms, tagged with the index
/// subsets of the spanning module it came from.
#[derive(Clone, Debug)]
pub struct NormGen<R: Ring> {
    pub x_indices: Vec<usize>,
    pub y_indices: Vec<usize>,
    pub value: SymTensor<R>,
}

/// Generators of the ideal of norms I_V attached to a spanning module V.
///
/// Only unordered n-subsets of the basis enter: reordering a tuple changes
/// delta by a sign only, so ordered duplicates are redundant. Generators
/// that vanish identically are pruned.
#[derive(Clone, Debug)]
pub struct NormIdealGens<R: Ring> {
    pub n: usize,
    pub v_basis: Vec<Poly<R>>,
    pub gens: Vec<NormGen<R>>,
}

/// All n-subsets of `0..m` in lexicographic order.
pub fn subsets_lex(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + m - n {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..n {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// delta(x, y) for x, y ranging over the n-element subsets of `v_basis`,
/// in lexicographic subset order. Empty when |V| < n (the zero ideal).
pub fn norm_ideal_generators<R: Ring>(n: usize, v_basis: &[Poly<R>]) -> Result<NormIdealGens<R>> {
    if v_basis.is_empty() {
        return Err(Error::EmptyInput("empty spanning module".into()));
    }
    let subsets = subsets_lex(v_basis.len(), n);
    let mut gens = Vec::new();
    for xs in &subsets {
        let x: Vec<Poly<R>> = xs.iter().map(|&i| v_basis[i].clone()).collect();
        for ys in &subsets {
            let y: Vec<Poly<R>> = ys.iter().map(|&i| v_basis[i].clone()).collect();
            let value = delta(&x, &y)?;
            if !value.is_zero() {
                gens.push(NormGen {
                    x_indices: xs.clone(),
                    y_indices: ys.clone(),
                    value,
                });
            }
        }
    }
    Ok(NormIdealGens {
        n,
        v_basis: v_basis.to_vec(),
        gens,
    })
}

/// One term of a telescoping reduction: `multiplier . delta(x, y)` with the
/// multiplier a degree-n symmetric tensor acting through the internal
/// product.
#[derive(Clone, Debug)]
pub struct DeltaReductionTerm<R: Ring> {
    pub multiplier: SymTensor<R>,
    pub x: Vec<Poly<R>>,
    pub y: Vec<Poly<R>>,
}

/// Rewrite delta(x, y) as a Gamma^n-combination of deltas whose entries have
/// degree < n in every variable, by repeatedly applying the telescoping
/// identity
///
/// ```text
/// gamma^1(x_1 f^n) * gamma^1(x_2) * ... * gamma^1(x_n)
///   = sum_{c=1}^n (-1)^{c+1} (gamma^c(f) * gamma^{n-c}(1))
///       . (gamma^1(x_1 f^{n-c}) * gamma^1(x_2) * ... * gamma^1(x_n))
/// ```
///
/// with f a single variable, first to the rows and then (through the
/// transpose symmetry of the determinant) to the columns. Entries must be
/// monomial multiples for the factor extraction; the result certifies that
/// delta(x, y) lies in the ideal generated by low-degree tuples.
pub fn reduce_delta_entries<R: Ring>(
    x: &[Poly<R>],
    y: &[Poly<R>],
) -> Result<Vec<DeltaReductionTerm<R>>> {
    let n = x.len();
    if n == 0 || y.len() != n {
        return Err(Error::DimensionMismatch("tuples of equal length > 0".into()));
    }
    let ambient = x[0].ambient().clone();
    let nvars = ambient.nvars();
    let unit = SymTensor::unit(ambient.clone(), n);

    // a tuple entry is reducible when every term is divisible by some t^n
    let reducible = |p: &Poly<R>| -> Option<usize> {
        if p.is_zero() {
            return None;
        }
        (0..nvars).find(|&v| {
            p.terms().all(|(m, _)| m.exponent(v) >= n as u32)
        })
    };

    let mut done: Vec<DeltaReductionTerm<R>> = Vec::new();
    let mut work = vec![DeltaReductionTerm {
        multiplier: unit,
        x: x.to_vec(),
        y: y.to_vec(),
    }];
    while let Some(term) = work.pop() {
        let find = |tuple: &[Poly<R>]| {
            tuple
                .iter()
                .enumerate()
                .find_map(|(k, p)| reducible(p).map(|v| (k, v)))
        };
        let (on_x, k, v) = match find(&term.x) {
            Some((k, v)) => (true, k, v),
            None => match find(&term.y) {
                Some((k, v)) => (false, k, v),
                None => {
                    done.push(term);
                    continue;
                }
            },
        };
        let ring = ambient.coeff_ring().clone();
        let f = ambient.var_poly(v);
        let f_pow_n = f.pow(n as u32);
        let tuple = if on_x { &term.x } else { &term.y };
        let g = ambient
            .exact_div(&tuple[k], &f_pow_n)
            .expect("entry divisible by t^n");
        for c in 1..=n as u32 {
            let cofactor = shuffle(&gamma(c, &f), &gamma(n as u32 - c, &ambient.one()))?;
            let mut multiplier = internal_mul(&term.multiplier, &cofactor)?;
            if c % 2 == 0 {
                multiplier = multiplier.scale(&ring.neg(&ring.one()));
            }
            let replaced = g.mul(&f.pow(n as u32 - c))?;
            let mut new_x = term.x.clone();
            let mut new_y = term.y.clone();
            if on_x {
                new_x[k] = replaced;
            } else {
                new_y[k] = replaced;
            }
            work.push(DeltaReductionTerm {
                multiplier,
                x: new_x,
                y: new_y,
            });
        }
    }
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::ring::{PrimeField, Rationals, Ring};

    fn qt() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["t".into()])
    }

    fn qp(s: &str) -> Poly<Rationals> {
        parse_poly(s, &qt()).unwrap()
    }

    fn qxy() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()])
    }

    #[test]
    fn gamma_relations() {
        let ring = qt();
        // (111): gamma^0(f) = 1 in Gamma^0
        let g0 = gamma(0, &qp("t^2+3"));
        assert_eq!(g0, SymTensor::unit(ring.clone(), 0));
        // (112): gamma^2(3t) = 9 gamma^2(t)
        let lhs = gamma(2, &qp("3*t"));
        let rhs = gamma(2, &qp("t")).scale(&Rationals.from_i64(9));
        assert_eq!(lhs, rhs);
        // (113): gamma^2(x+y) = gamma^2(x) + gamma^1(x)*gamma^1(y) + gamma^2(y)
        let rxy = qxy();
        let x = parse_poly("x", &rxy).unwrap();
        let y = parse_poly("y", &rxy).unwrap();
        let sum = parse_poly("x+y", &rxy).unwrap();
        let lhs = gamma(2, &sum);
        let rhs = gamma(2, &x)
            .add(&shuffle(&gamma(1, &x), &gamma(1, &y)).unwrap())
            .unwrap()
            .add(&gamma(2, &y))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_orbits(), 3);
    }

    #[test]
    fn shuffle_relation_114() {
        // gamma^1(t) * gamma^1(t) = 2 gamma^2(t)
        let t = qp("t");
        let lhs = shuffle(&gamma(1, &t), &gamma(1, &t)).unwrap();
        assert_eq!(lhs, gamma(2, &t).scale(&Rationals.from_i64(2)));
        // distinct factors keep coefficient 1
        let rxy = qxy();
        let x = parse_poly("x", &rxy).unwrap();
        let y = parse_poly("y", &rxy).unwrap();
        let xy = shuffle(&gamma(1, &x), &gamma(1, &y)).unwrap();
        assert_eq!(xy.num_orbits(), 1);
        let (_, c) = xy.orbits().next().unwrap();
        assert_eq!(*c, Rationals.one());
        // unit of Gamma^0 is the shuffle identity
        let u = gamma(2, &t);
        assert_eq!(shuffle(&u, &SymTensor::unit(qt(), 0)).unwrap(), u);
    }

    #[test]
    fn internal_product_is_multiplicative_on_gammas() {
        let t = qp("t");
        // gamma^2(t) . gamma^2(t) = gamma^2(t^2)
        let sq = internal_mul(&gamma(2, &t), &gamma(2, &t)).unwrap();
        assert_eq!(sq, gamma(2, &qp("t^2")));
        // unit of the internal product
        let u = delta(&[qp("1"), qp("t")], &[qp("1"), qp("t")]).unwrap();
        assert_eq!(
            internal_mul(&u, &SymTensor::unit(qt(), 2)).unwrap(),
            u
        );
    }

    #[test]
    fn internal_mul_expansion_identity() {
        // (g1(x)*g1(1)) . (g1(y)*g1(1)) = g1(xy)*g1(1) + g1(x)*g1(y)
        let rxy = qxy();
        let x = parse_poly("x", &rxy).unwrap();
        let y = parse_poly("y", &rxy).unwrap();
        let one = rxy.one();
        let lhs = internal_mul(
            &shuffle(&gamma(1, &x), &gamma(1, &one)).unwrap(),
            &shuffle(&gamma(1, &y), &gamma(1, &one)).unwrap(),
        )
        .unwrap();
        let xy = x.mul(&y).unwrap();
        let rhs = shuffle(&gamma(1, &xy), &gamma(1, &one))
            .unwrap()
            .add(&shuffle(&gamma(1, &x), &gamma(1, &y)).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn margin_product_degenerate_cases() {
        let t = qp("t");
        let one = qt().one();
        // p = 1: nothing to multiply
        let row = vec![(1u32, t.clone()), (1u32, one.clone())];
        let direct = shuffle_monomial(&row).unwrap();
        assert_eq!(margin_product(&[row.clone()]).unwrap(), direct);
        // p = 2 with single-column rows: gamma^n(x) . gamma^n(y) = gamma^n(xy)
        let f = qp("1+t");
        let g = qp("t^2");
        let prod = margin_product(&[vec![(2, f.clone())], vec![(2, g.clone())]]).unwrap();
        assert_eq!(prod, gamma(2, &f.mul(&g).unwrap()));
        // margin mismatch is rejected
        assert!(matches!(
            margin_product(&[vec![(2, f)], vec![(1, g)]]),
            Err(Error::BadMargins(_))
        ));
        let empty: Vec<Vec<(u32, Poly<Rationals>)>> = Vec::new();
        assert!(matches!(
            margin_product(&empty),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn margin_product_matches_internal_mul_example() {
        // ((1,1),(1,1)) margins with rows (x,1) and (y,1) reproduces the
        // internal product of the two shuffle monomials
        let rxy = qxy();
        let x = parse_poly("x", &rxy).unwrap();
        let y = parse_poly("y", &rxy).unwrap();
        let one = rxy.one();
        let rows = [
            vec![(1u32, x.clone()), (1u32, one.clone())],
            vec![(1u32, y.clone()), (1u32, one.clone())],
        ];
        let lhs = margin_product(&rows).unwrap();
        let rhs = internal_mul(
            &shuffle_monomial(&rows[0]).unwrap(),
            &shuffle_monomial(&rows[1]).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_examples() {
        // n = 1: delta((f),(g)) = gamma^1(fg)
        let d = delta(&[qp("1+t")], &[qp("t")]).unwrap();
        assert_eq!(d, gamma(1, &qp("t+t^2")));
        // repeated x entry kills delta
        let d0 = delta(&[qp("t"), qp("t")], &[qp("1"), qp("t")]).unwrap();
        assert!(d0.is_zero());
        // n = 2 standard chart generator: {1,t^2} - 2{t,t}
        let d2 = delta(&[qp("1"), qp("t")], &[qp("1"), qp("t")]).unwrap();
        let mut expected = SymTensor::zero(qt(), 2);
        expected.add_orbit(
            vec![Monomial::unit(1), Monomial::new(vec![2])],
            Rationals.one(),
        );
        expected.add_orbit(
            vec![Monomial::var(1, 0), Monomial::var(1, 0)],
            Rationals.from_i64(-2),
        );
        assert_eq!(d2, expected);
        // both construction routes agree
        assert_eq!(d2, delta_via_nu(&[qp("1"), qp("t")], &[qp("1"), qp("t")]).unwrap());
    }

    #[test]
    fn delta_via_nu_over_prime_field() {
        let f5 = PrimeField::new(5).unwrap();
        let ring = PolyRing::new(f5, vec!["t".into()]);
        let one = ring.one();
        let t = ring.var_poly(0);
        let t2 = t.mul(&t).unwrap();
        let x = [one.clone(), t.clone(), t2.clone()];
        let y = [t.clone(), t2, one];
        assert_eq!(delta(&x, &y).unwrap(), delta_via_nu(&x, &y).unwrap());
    }

    #[test]
    fn norm_ideal_generator_family() {
        // n = 1, V = {1}: the unit ideal
        let gens = norm_ideal_generators(1, &[qp("1")]).unwrap();
        assert_eq!(gens.gens.len(), 1);
        assert_eq!(gens.gens[0].value, SymTensor::unit(qt(), 1));
        // n = 2, V = {1, t}: a single generator, the delta above
        let gens = norm_ideal_generators(2, &[qp("1"), qp("t")]).unwrap();
        assert_eq!(gens.gens.len(), 1);
        assert_eq!(
            gens.gens[0].value,
            delta(&[qp("1"), qp("t")], &[qp("1"), qp("t")]).unwrap()
        );
        // |V| = 3, n = 2: C(3,2)^2 = 9 ordered subset pairs
        let gens = norm_ideal_generators(2, &[qp("1"), qp("t"), qp("t^2")]).unwrap();
        assert_eq!(gens.gens.len(), 9);
        // |V| < n: zero ideal
        let gens = norm_ideal_generators(2, &[qp("1")]).unwrap();
        assert!(gens.gens.is_empty());
    }

    #[test]
    fn subset_enumeration_order() {
        assert_eq!(
            subsets_lex(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets_lex(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(subsets_lex(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn telescoping_reduction_reaches_low_degree() {
        // delta((1, t^3), (1, t^3)) reduces to tuples with entries of
        // per-variable degree < 2, and the combination reproduces it
        let x = [qp("1"), qp("t^3")];
        let terms = reduce_delta_entries(&x, &x).unwrap();
        let mut recombined = SymTensor::zero(qt(), 2);
        for term in &terms {
            for p in term.x.iter().chain(&term.y) {
                assert!(p.degree_in_var(0) < 2, "entry {p} not reduced");
            }
            let d = delta(&term.x, &term.y).unwrap();
            recombined = recombined
                .add(&internal_mul(&term.multiplier, &d).unwrap())
                .unwrap();
        }
        assert_eq!(recombined, delta(&x, &x).unwrap());
    }
}
