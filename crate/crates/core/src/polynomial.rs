//! Dense univariate polynomials over a [`Field`].

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// A polynomial with coefficients stored low to high and no trailing zeros.
///
/// The zero polynomial has no coefficients and degree `None`; since
/// `None < Some(_)`, a bound check such as `f.degree() <= Some(b)` accepts
/// the zero polynomial for every `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl Polynomial {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|c| !field.contains(**c)) {
            field.check(bad)?;
        }
        Ok(Self::from_trusted(field, coeffs))
    }

    pub fn from_indices(field: &Field, coeffs: &[u32]) -> Result<Self> {
        let coeffs = coeffs.iter().map(|&c| field.elem(c)).collect::<Result<_>>()?;
        Ok(Self::from_trusted(field, coeffs))
    }

    pub(crate) fn from_trusted(field: &Field, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> Result<Self> {
        Self::new(field, vec![c])
    }

    /// The monomial c·X^i.
    pub fn monomial(field: &Field, c: Elem, i: usize) -> Result<Self> {
        let mut coeffs = vec![Elem::ZERO; i + 1];
        coeffs[i] = field.check(c)?;
        Ok(Self::from_trusted(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of X^i; zero beyond the degree.
    pub fn coeff_at(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn eval(&self, x: Elem) -> Result<Elem> {
        Ok(self.eval_unchecked(self.field.check(x)?))
    }

    pub(crate) fn eval_unchecked(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// The monic polynomial ∏ (X - r) over the given multiset of roots.
    pub fn linear_product(field: &Field, roots: &[Elem]) -> Result<Self> {
        let mut coeffs = vec![Elem::ONE];
        for &r in roots {
            let neg_r = field.neg(field.check(r)?);
            // multiply by (X - r) in place
            coeffs.push(Elem::ZERO);
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 { coeffs[i - 1] } else { Elem::ZERO };
                coeffs[i] = field.add(lower, field.mul(coeffs[i], neg_r));
            }
        }
        Ok(Self::from_trusted(field, coeffs))
    }

    /// The unique polynomial of degree below `points.len()` through all
    /// points, via Newton divided differences. An empty point set yields the
    /// zero polynomial.
    pub fn interpolate(field: &Field, points: &[(Elem, Elem)]) -> Result<Self> {
        let m = points.len();
        let mut xs = Vec::with_capacity(m);
        let mut dd = Vec::with_capacity(m);
        for &(x, y) in points {
            xs.push(field.check(x)?);
            dd.push(field.check(y)?);
        }
        for level in 1..m {
            for i in (level..m).rev() {
                let denom = field.sub(xs[i], xs[i - level]);
                let inv = field.inv(denom).map_err(|_| Error::DuplicateNode)?;
                dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), inv);
            }
        }
        // Horner on the Newton form: c_{m-1}, then acc·(X - x_i) + c_i.
        let mut coeffs: Vec<Elem> = Vec::with_capacity(m);
        for i in (0..m).rev() {
            let neg_x = field.neg(xs[i]);
            coeffs.push(Elem::ZERO);
            for j in (0..coeffs.len()).rev() {
                let lower = if j > 0 { coeffs[j - 1] } else { Elem::ZERO };
                coeffs[j] = field.add(lower, field.mul(coeffs[j], neg_x));
            }
            coeffs[0] = field.add(coeffs[0], dd[i]);
        }
        Ok(Self::from_trusted(field, coeffs))
    }

    fn same_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn zip_with(&self, other: &Polynomial, op: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        self.same_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| op(self.coeff_at(i), other.coeff_at(i))).collect();
        Ok(Self::from_trusted(&self.field, coeffs))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut coeffs = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_trusted(f, coeffs))
    }

    pub fn scale(&self, c: Elem) -> Result<Self> {
        let c = self.field.check(c)?;
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Ok(Self::from_trusted(&self.field, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(f: &Field, c: &[u32]) -> Polynomial {
        Polynomial::from_indices(f, c).unwrap()
    }

    fn e(i: u32) -> Elem {
        Elem::from_index(i)
    }

    #[test]
    fn evaluation() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(poly(&f5, &[1, 0, 1]).eval(e(2)).unwrap(), e(0));
        assert_eq!(Polynomial::zero(&f5).eval(e(3)).unwrap(), e(0));
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(poly(&f7, &[0, 1, 3]).eval(e(1)).unwrap(), e(4));
        assert_eq!(poly(&f7, &[0, 1, 3]).eval(e(7)).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn coefficients() {
        let f7 = Field::new(7, 1).unwrap();
        let f = poly(&f7, &[0, 1, 3]);
        assert_eq!(f.coeff_at(2), e(3));
        assert_eq!(f.coeff_at(0), e(0));
        assert_eq!(f.coeff_at(9), e(0));
        assert_eq!(poly(&f7, &[1, 0, 0]).degree(), Some(0));
        assert_eq!(poly(&f7, &[0, 0]).degree(), None);
        assert!(None < Some(0usize));
    }

    #[test]
    fn linear_products() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(Polynomial::linear_product(&f5, &[e(1), e(2)]).unwrap(), poly(&f5, &[2, 2, 1]));
        assert_eq!(Polynomial::linear_product(&f5, &[]).unwrap(), poly(&f5, &[1]));
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(Polynomial::linear_product(&f7, &[e(0), e(0)]).unwrap(), poly(&f7, &[0, 0, 1]));
    }

    #[test]
    fn interpolation() {
        let f5 = Field::new(5, 1).unwrap();
        let pts = [(e(0), e(1)), (e(1), e(2)), (e(2), e(3))];
        assert_eq!(Polynomial::interpolate(&f5, &pts).unwrap(), poly(&f5, &[1, 1]));
        assert!(Polynomial::interpolate(&f5, &[(e(0), e(0))]).unwrap().is_zero());
        let f7 = Field::new(7, 1).unwrap();
        let pts = [(e(1), e(1)), (e(2), e(4)), (e(3), e(2))];
        assert_eq!(Polynomial::interpolate(&f7, &pts).unwrap(), poly(&f7, &[0, 0, 1]));
        let dup = [(e(1), e(1)), (e(1), e(2))];
        assert_eq!(Polynomial::interpolate(&f7, &dup).unwrap_err(), Error::DuplicateNode);
    }

    #[test]
    fn ring_arithmetic() {
        let f5 = Field::new(5, 1).unwrap();
        assert!(poly(&f5, &[1, 1]).add(&poly(&f5, &[4, 4])).unwrap().is_zero());
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(poly(&f3, &[0, 1]).mul(&poly(&f3, &[0, 1])).unwrap(), poly(&f3, &[0, 0, 1]));
        assert!(poly(&f5, &[1, 0, 1]).scale(e(0)).unwrap().is_zero());
        assert_eq!(poly(&f5, &[1]).add(&poly(&f3, &[1])).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn linear_product_vanishes_exactly_on_roots() {
        for q in [5u32, 7, 9, 27] {
            let f = Field::from_order(q).unwrap();
            let roots: Vec<Elem> = f.elements().step_by(2).collect();
            let g = Polynomial::linear_product(&f, &roots).unwrap();
            assert_eq!(g.degree(), Some(roots.len()));
            for x in f.elements() {
                assert_eq!(g.eval(x).unwrap().is_zero(), roots.contains(&x));
            }
        }
    }

    fn field_and_points() -> impl Strategy<Value = (u32, Vec<(u32, u32)>)> {
        prop::sample::select(vec![3u32, 5, 7, 9, 11, 13, 25, 27]).prop_flat_map(|q| {
            let xs = prop::sample::subsequence((0..q).collect::<Vec<_>>(), 1..=q as usize)
                .prop_shuffle();
            xs.prop_flat_map(move |xs| {
                let n = xs.len();
                (
                    Just(q),
                    prop::collection::vec(0..q, n)
                        .prop_map(move |ys| xs.iter().copied().zip(ys).collect::<Vec<_>>()),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn interpolant_reproduces_points((q, pts) in field_and_points()) {
            let f = Field::from_order(q).unwrap();
            let pts: Vec<(Elem, Elem)> = pts.into_iter().map(|(x, y)| (e(x), e(y))).collect();
            let g = Polynomial::interpolate(&f, &pts).unwrap();
            for &(x, y) in &pts {
                prop_assert_eq!(g.eval(x).unwrap(), y);
            }
            for j in pts.len()..pts.len() + 3 {
                prop_assert_eq!(g.coeff_at(j), Elem::ZERO);
            }
        }

        #[test]
        fn degree_of_product_adds(
            q in prop::sample::select(vec![5u32, 7, 9]),
            a in prop::collection::vec(0u32..5, 1..6),
            b in prop::collection::vec(0u32..5, 1..6),
        ) {
            let f = Field::from_order(q).unwrap();
            let (pa, pb) = (poly(&f, &a), poly(&f, &b));
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let prod = pa.mul(&pb).unwrap();
            prop_assert_eq!(prod.degree(), Some(pa.degree().unwrap() + pb.degree().unwrap()));
        }
    }
}
