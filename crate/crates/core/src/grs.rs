//! Generalized Reed-Solomon codes and their length-(q+1) extensions.
//!
//! `GRS_k(a, v)` is the set of vectors (v_1 f(α_1), ..., v_n f(α_n)) for all
//! f of degree below k. The extended code `GRS_k(a, v, ∞)` uses all q field
//! elements as locators and appends the coefficient of X^(k-1) as one more
//! coordinate.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldRecord};
use crate::linear_code::{LinearCode, Matrix};
use crate::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    field: Field,
    locators: Vec<Elem>,
    multipliers: Vec<Elem>,
    k: usize,
    extended: bool,
}

/// Serialized form of a [`GrsSpec`], elements as canonical indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsRecord {
    pub field: FieldRecord,
    pub locators: Vec<Elem>,
    pub multipliers: Vec<Elem>,
    pub k: usize,
    pub extended: bool,
}

/// u_i = ∏_{j≠i} (α_i - α_j)^(-1); GRS_{n-k}(a, u) is the dual of GRS_k(a, 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualMultipliers {
    pub u: Vec<Elem>,
}

impl DualMultipliers {
    /// The common value when every u_i is equal.
    pub fn constant(&self) -> Option<Elem> {
        let first = *self.u.first()?;
        self.u.iter().all(|&x| x == first).then_some(first)
    }
}

pub fn dual_multipliers(field: &Field, locators: &[Elem]) -> Result<DualMultipliers> {
    check_locators(field, locators)?;
    let u = locators
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let prod = field.product(
                locators
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &aj)| field.sub(ai, aj)),
            );
            field.inv(prod).expect("distinct locators give a nonzero product")
        })
        .collect();
    Ok(DualMultipliers { u })
}

fn check_locators(field: &Field, locators: &[Elem]) -> Result<()> {
    let mut seen = HashSet::with_capacity(locators.len());
    for &a in locators {
        field.check(a)?;
        if !seen.insert(a) {
            return Err(Error::DuplicateLocator);
        }
    }
    Ok(())
}

impl GrsSpec {
    pub fn new(
        field: &Field,
        locators: Vec<Elem>,
        multipliers: Vec<Elem>,
        k: usize,
        extended: bool,
    ) -> Result<Self> {
        check_locators(field, &locators)?;
        if multipliers.len() != locators.len() {
            return Err(Error::LengthMismatch { left: locators.len(), right: multipliers.len() });
        }
        for (i, &v) in multipliers.iter().enumerate() {
            if field.check(v)?.is_zero() {
                return Err(Error::ZeroMultiplier(i + 1));
            }
        }
        let n = locators.len();
        if k == 0 || k > n {
            return Err(Error::InvalidDimension { n, k });
        }
        if extended && n != field.order() as usize {
            return Err(Error::ExtendedLocators { q: field.order(), got: n });
        }
        Ok(GrsSpec { field: field.clone(), locators, multipliers, k, extended })
    }

    pub fn from_record(record: &GrsRecord) -> Result<Self> {
        let field = Field::from_record(&record.field)?;
        Self::new(
            &field,
            record.locators.clone(),
            record.multipliers.clone(),
            record.k,
            record.extended,
        )
    }

    pub fn record(&self) -> GrsRecord {
        GrsRecord {
            field: self.field.record(),
            locators: self.locators.clone(),
            multipliers: self.multipliers.clone(),
            k: self.k,
            extended: self.extended,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn locators(&self) -> &[Elem] {
        &self.locators
    }

    pub fn multipliers(&self) -> &[Elem] {
        &self.multipliers
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// Code length: the number of locators, plus one for extended codes.
    pub fn length(&self) -> usize {
        self.locators.len() + usize::from(self.extended)
    }

    /// Generator with row r = (v_1 α_1^r, ..., v_n α_n^r); extended codes
    /// append the column (0, ..., 0, 1)ᵀ.
    pub fn generator(&self) -> LinearCode {
        let f = &self.field;
        let len = self.length();
        let mut g = Matrix::zeros(f, self.k, len);
        for (c, (&a, &v)) in self.locators.iter().zip(&self.multipliers).enumerate() {
            let mut entry = v;
            for r in 0..self.k {
                g.set(r, c, entry);
                entry = f.mul(entry, a);
            }
        }
        if self.extended {
            g.set(self.k - 1, len - 1, Elem::ONE);
        }
        LinearCode::new(g).expect("GRS generators have full row rank")
    }

    fn check_message(&self, f: &Polynomial) -> Result<()> {
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        match f.degree() {
            Some(d) if d >= self.k => Err(Error::DegreeTooHigh { degree: d, bound: self.k - 1 }),
            _ => Ok(()),
        }
    }

    /// (v_1 f(α_1), ..., v_n f(α_n)), followed by f_{k-1} for extended codes.
    pub fn codeword(&self, f: &Polynomial) -> Result<Vec<Elem>> {
        self.check_message(f)?;
        let fld = &self.field;
        let mut c: Vec<Elem> = self
            .locators
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &v)| fld.mul(v, f.eval_unchecked(a)))
            .collect();
        if self.extended {
            c.push(f.coeff_at(self.k - 1));
        }
        Ok(c)
    }

    /// The dual as a GRS spec: same locators, dimension n - k, multipliers
    /// v'_i = u_i / v_i.
    pub fn dual(&self) -> Result<GrsSpec> {
        let n = self.locators.len();
        if self.extended || self.k >= n {
            return Err(Error::ExtendedNotSupported);
        }
        let u = dual_multipliers(&self.field, &self.locators)?.u;
        let multipliers = u
            .iter()
            .zip(&self.multipliers)
            .map(|(&ui, &vi)| self.field.div(ui, vi))
            .collect::<Result<_>>()?;
        GrsSpec::new(&self.field, self.locators.clone(), multipliers, n - self.k, false)
    }

    /// Whether the codeword of `f` lies in the dual code, decided by
    /// interpolation rather than by the generator matrix.
    ///
    /// Non-extended: the interpolant g through (α_i, v_i² f(α_i) / u_i) must
    /// have degree at most n - k - 1. Extended: the interpolant g through
    /// (α_i, v_i² f(α_i)) over all q points must have degree at most q - k
    /// and coefficient g_{q-k} equal to f_{k-1}.
    pub fn in_dual(&self, f: &Polynomial) -> Result<bool> {
        self.check_message(f)?;
        let fld = &self.field;
        let n = self.locators.len();
        let values = self
            .locators
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &v)| fld.mul(fld.square(v), f.eval_unchecked(a)));
        if self.extended {
            let points: Vec<(Elem, Elem)> = self.locators.iter().copied().zip(values).collect();
            let g = Polynomial::interpolate(fld, &points)?;
            let q = n;
            Ok(g.degree() <= Some(q - self.k) && g.coeff_at(q - self.k) == f.coeff_at(self.k - 1))
        } else {
            let u = dual_multipliers(fld, &self.locators)?.u;
            let points = self
                .locators
                .iter()
                .zip(values)
                .zip(&u)
                .map(|((&a, t), &ui)| Ok((a, fld.div(t, ui)?)))
                .collect::<Result<Vec<_>>>()?;
            let g = Polynomial::interpolate(fld, &points)?;
            Ok(match (n - self.k).checked_sub(1) {
                Some(bound) => g.degree() <= Some(bound),
                None => g.is_zero(),
            })
        }
    }
}
