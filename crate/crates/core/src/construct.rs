//! Five deterministic constructions of LCD MDS codes from GRS and extended
//! GRS codes over GF(q), q > 3 odd, plus a dispatcher over their conditions.
//!
//! | construction         | condition on [n, k]              |
//! |----------------------|----------------------------------|
//! | `ExtendedQPlus1`     | n = q + 1                        |
//! | `DivisorOfQMinus1`   | n divides q - 1                  |
//! | `PrimePowerLength`   | n = p^l with 1 <= l <= e         |
//! | `LargeNPlusK`        | n < q and n + k >= q + 1         |
//! | `Window2n`           | n < q and 2n - k < q <= 2n       |
//!
//! All of them require 1 < k <= floor(n/2). Every auxiliary choice the
//! construction leaves open (γ, tail multipliers, element labeling) defaults
//! to the first admissible candidate in canonical order and can be overridden
//! through [`Overrides`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldRecord};
use crate::grs::{dual_multipliers, GrsRecord, GrsSpec};
use crate::linear_code::MdsRoute;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Construction {
    ExtendedQPlus1,
    DivisorOfQMinus1,
    PrimePowerLength,
    LargeNPlusK,
    Window2n,
}

impl Construction {
    /// Dispatcher order.
    pub const ALL: [Construction; 5] = [
        Construction::ExtendedQPlus1,
        Construction::DivisorOfQMinus1,
        Construction::PrimePowerLength,
        Construction::LargeNPlusK,
        Construction::Window2n,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Construction::ExtendedQPlus1 => "ExtendedQPlus1",
            Construction::DivisorOfQMinus1 => "DivisorOfQMinus1",
            Construction::PrimePowerLength => "PrimePowerLength",
            Construction::LargeNPlusK => "LargeNPlusK",
            Construction::Window2n => "Window2n",
        }
    }

    /// Position (1-based) in the dispatcher's condition list.
    pub fn condition(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.to_ascii_lowercase().replace(['-', '_'], "");
        let found = match norm.as_str() {
            "1" | "extended" | "extendedqplus1" => Construction::ExtendedQPlus1,
            "2" | "divisor" | "divisorofqminus1" => Construction::DivisorOfQMinus1,
            "3" | "primepower" | "primepowerlength" => Construction::PrimePowerLength,
            "4" | "largenk" | "largenplusk" => Construction::LargeNPlusK,
            "5" | "window" | "window2n" => Construction::Window2n,
            _ => return Err(format!("unknown construction `{s}`")),
        };
        Ok(found)
    }
}

/// Which branch of the extended construction fired.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtendedCase {
    /// 2 <= k < (q+1)/2
    Case1,
    /// k = (q+1)/2
    Case2,
}

/// Caller-supplied replacements for the default auxiliary choices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    /// γ for `ExtendedQPlus1` (must be primitive) and `PrimePowerLength`
    /// (γ² ≠ 1); a uniform tail multiplier for `DivisorOfQMinus1`.
    pub gamma: Option<Elem>,
    /// Per-coordinate tail multipliers for `DivisorOfQMinus1` and `LargeNPlusK`.
    pub tail_multipliers: Option<Vec<Elem>>,
    /// A relabeling α_1, ..., α_q of all field elements, for the
    /// constructions that start from a labeled field (`ExtendedQPlus1`,
    /// `LargeNPlusK`, `Window2n`).
    pub labeling: Option<Vec<Elem>>,
}

impl Overrides {
    pub const NONE: Overrides = Overrides { gamma: None, tail_multipliers: None, labeling: None };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChosenMultiplier {
    /// 1-based coordinate.
    pub position: usize,
    pub value: Elem,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<ExtendedCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<Elem>>,
    /// h, the product of the nonzero subgroup elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup_product: Option<Elem>,
    /// The constant value of every dual multiplier u_i (h^(-1) over a subgroup).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_multiplier: Option<Elem>,
    /// Field elements outside the locator set, in labeling order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chosen_multipliers: Vec<ChosenMultiplier>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub hull_dimension: usize,
    pub is_lcd: bool,
    pub is_mds: bool,
    pub mds_route: MdsRoute,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub construction: Construction,
    pub n: usize,
    pub k: usize,
    pub spec: GrsSpec,
    pub params: ConstructionParams,
    pub verified: Option<Verification>,
}

/// JSON form of a [`ConstructionReport`]. `field` and `generator` together
/// form a self-describing code file accepted by `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub construction: Construction,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub field: FieldRecord,
    pub spec: GrsRecord,
    pub params: ConstructionParams,
    pub generator: Vec<Vec<u32>>,
    pub verified: Option<Verification>,
}

impl ConstructionReport {
    pub fn field(&self) -> &Field {
        self.spec.field()
    }

    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            construction: self.construction,
            q: self.field().order(),
            n: self.n,
            k: self.k,
            field: self.field().record(),
            spec: self.spec.record(),
            params: self.params.clone(),
            generator: self.spec.generator().generator().to_indices(),
            verified: self.verified.clone(),
        }
    }

    pub fn from_record(record: &ReportRecord) -> Result<Self> {
        Ok(ConstructionReport {
            construction: record.construction,
            n: record.n,
            k: record.k,
            spec: GrsSpec::from_record(&record.spec)?,
            params: record.params.clone(),
            verified: record.verified.clone(),
        })
    }
}

impl Serialize for ConstructionReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.record().serialize(serializer)
    }
}

fn check_field(field: &Field) -> Result<()> {
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    if field.order() <= 3 {
        return Err(Error::QTooSmall(field.order()));
    }
    Ok(())
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k <= 1 || k > n / 2 {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok(())
}

/// The l with n = p^l, if any.
fn subgroup_degree(field: &Field, n: usize) -> Option<u32> {
    let p = field.characteristic() as usize;
    (1..=field.degree()).find(|&l| p.checked_pow(l) == Some(n))
}

/// Checks every hypothesis of one construction for GF(q) and [n, k].
pub fn check_hypotheses(c: Construction, field: &Field, n: usize, k: usize) -> Result<()> {
    check_field(field)?;
    check_k(n, k)?;
    let q = field.order() as usize;
    let fail = |why: String| Err(Error::HypothesisViolated(why));
    match c {
        Construction::ExtendedQPlus1 if n != q + 1 => {
            fail(format!("n = {n} is not q + 1 = {}", q + 1))
        }
        Construction::DivisorOfQMinus1 if n <= 1 || !(q - 1).is_multiple_of(n) => {
            Err(Error::NotADivisor { n: n as u64, q_minus_one: q as u32 - 1 })
        }
        Construction::PrimePowerLength if subgroup_degree(field, n).is_none() => fail(format!(
            "n = {n} is not p^l for p = {} and 1 <= l <= {}",
            field.characteristic(),
            field.degree()
        )),
        Construction::LargeNPlusK if n >= q => fail(format!("n = {n} is not below q = {q}")),
        Construction::LargeNPlusK if n + k < q + 1 => {
            fail(format!("n + k = {} is below q + 1 = {}", n + k, q + 1))
        }
        Construction::Window2n if n >= q => fail(format!("n = {n} is not below q = {q}")),
        Construction::Window2n if !(2 * n - k < q && q <= 2 * n) => {
            fail(format!("2n - k < q <= 2n fails: 2n - k = {}, q = {q}, 2n = {}", 2 * n - k, 2 * n))
        }
        _ => Ok(()),
    }
}

/// Every construction whose hypotheses hold, in dispatcher order.
pub fn applicable_constructions(field: &Field, n: usize, k: usize) -> Vec<Construction> {
    Construction::ALL.into_iter().filter(|&c| check_hypotheses(c, field, n, k).is_ok()).collect()
}

/// Runs one named construction.
pub fn construct(
    c: Construction,
    field: &Field,
    n: usize,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_hypotheses(c, field, n, k)?;
    match c {
        Construction::ExtendedQPlus1 => construct_extended(field, k, overrides),
        Construction::DivisorOfQMinus1 => construct_divisor(field, n, k, overrides),
        Construction::PrimePowerLength => {
            let l = subgroup_degree(field, n).expect("checked above");
            construct_prime_power(field, l, k, overrides)
        }
        Construction::LargeNPlusK => construct_large_nk(field, n, k, overrides),
        Construction::Window2n => construct_window(field, n, k, overrides),
    }
}

/// Tries the five conditions in order and returns the first construction
/// that applies.
pub fn construct_auto(
    field: &Field,
    n: usize,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_field(field)?;
    check_k(n, k)?;
    let q = field.order() as usize;
    if n > q + 1 {
        return Err(Error::HypothesisViolated(format!("n = {n} exceeds q + 1 = {}", q + 1)));
    }
    match applicable_constructions(field, n, k).first() {
        Some(&c) => construct(c, field, n, k, overrides),
        None => Err(Error::NoConstructionApplies { q: q as u32, n, k }),
    }
}

fn reject(what: &str, c: Construction, present: bool) -> Result<()> {
    if present {
        return Err(Error::InvalidOverride(format!("{what} does not apply to {c}")));
    }
    Ok(())
}

/// α_1, ..., α_q: the override if valid, else canonical order.
fn labeling(field: &Field, overrides: &Overrides) -> Result<Vec<Elem>> {
    let Some(order) = &overrides.labeling else {
        return Ok(field.elements().collect());
    };
    let q = field.order() as usize;
    let mut seen = vec![false; q];
    for &a in order {
        field
            .check(a)
            .map_err(|_| Error::InvalidOverride(format!("{a} is not a field element")))?;
        if std::mem::replace(&mut seen[a.index() as usize], true) {
            return Err(Error::InvalidOverride(format!("labeling repeats {a}")));
        }
    }
    if order.len() != q {
        return Err(Error::InvalidOverride(format!(
            "labeling lists {} elements, the field has {q}",
            order.len()
        )));
    }
    Ok(order.clone())
}

fn is_unit_or_zero(field: &Field, x: Elem) -> bool {
    x.is_zero() || field.square(x) == Elem::ONE
}

/// First canonical element outside {-1, 0, 1}.
fn first_non_unit(field: &Field) -> Elem {
    field
        .elements()
        .find(|&x| !is_unit_or_zero(field, x))
        .expect("q > 3 leaves an element outside {-1, 0, 1}")
}

fn checked_non_unit(field: &Field, x: Elem) -> Result<Elem> {
    field.check(x).map_err(|_| Error::InvalidOverride(format!("{x} is not a field element")))?;
    if is_unit_or_zero(field, x) {
        return Err(Error::InvalidOverride(format!("{x} lies in {{-1, 0, 1}}")));
    }
    Ok(x)
}

/// The length-(q+1) extended construction; 1 < k <= (q+1)/2.
///
/// Locators are all of GF(q) and γ is a primitive element. Case 1
/// (k < (q+1)/2) sets v_i = 1 for i <= q-k+1 and γ afterwards; Case 2
/// (k = (q+1)/2) sets v_i = 1 for i <= k-1 and γ afterwards.
pub fn construct_extended(
    field: &Field,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_field(field)?;
    let q = field.order() as usize;
    check_k(q + 1, k)?;
    reject("tail multipliers", Construction::ExtendedQPlus1, overrides.tail_multipliers.is_some())?;

    let locators = labeling(field, overrides)?;
    let gamma = match overrides.gamma {
        Some(g) => {
            let g = checked_non_unit(field, g)?;
            if field.multiplicative_order(g) != Some(q as u32 - 1) {
                return Err(Error::InvalidOverride(format!("γ = {g} is not a primitive element")));
            }
            g
        }
        None => field.primitive_element(),
    };
    let (case, ones) = if 2 * k == q + 1 {
        (ExtendedCase::Case2, k - 1)
    } else {
        (ExtendedCase::Case1, q - k + 1)
    };
    let multipliers = (0..q).map(|i| if i < ones { Elem::ONE } else { gamma }).collect();
    let spec = GrsSpec::new(field, locators, multipliers, k, true)?;

    Ok(ConstructionReport {
        construction: Construction::ExtendedQPlus1,
        n: q + 1,
        k,
        spec,
        params: ConstructionParams {
            case: Some(case),
            gamma: Some(gamma),
            labeling: overrides.labeling.clone(),
            ..Default::default()
        },
        verified: None,
    })
}

/// Length n dividing q - 1: locators are the powers ω^0, ..., ω^(n-1) of a
/// primitive n-th root of unity, v_i = 1 for i <= n-k+1 and the last k-1
/// multipliers lie outside {-1, 0, 1}.
pub fn construct_divisor(
    field: &Field,
    n: usize,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_hypotheses(Construction::DivisorOfQMinus1, field, n, k)?;
    reject("a labeling", Construction::DivisorOfQMinus1, overrides.labeling.is_some())?;
    let omega = field.nth_root_of_unity(n as u64)?;
    let locators: Vec<Elem> = (0..n as u64).map(|i| field.pow(omega, i)).collect();

    let (tail, gamma) = match (&overrides.tail_multipliers, overrides.gamma) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidOverride(
                "give either γ or tail multipliers, not both".into(),
            ))
        }
        (Some(list), None) => {
            if list.len() != k - 1 {
                return Err(Error::InvalidOverride(format!(
                    "expected {} tail multipliers, got {}",
                    k - 1,
                    list.len()
                )));
            }
            let tail =
                list.iter().map(|&x| checked_non_unit(field, x)).collect::<Result<Vec<_>>>()?;
            (tail, None)
        }
        (None, g) => {
            let g = match g {
                Some(g) => checked_non_unit(field, g)?,
                None => first_non_unit(field),
            };
            (vec![g; k - 1], Some(g))
        }
    };
    let head = n - k + 1;
    let mut multipliers = vec![Elem::ONE; head];
    multipliers.extend_from_slice(&tail);
    let chosen = tail
        .iter()
        .enumerate()
        .map(|(i, &value)| ChosenMultiplier { position: head + i + 1, value })
        .collect();
    let spec = GrsSpec::new(field, locators, multipliers, k, false)?;

    Ok(ConstructionReport {
        construction: Construction::DivisorOfQMinus1,
        n,
        k,
        spec,
        params: ConstructionParams {
            gamma,
            omega: Some(omega),
            chosen_multipliers: chosen,
            ..Default::default()
        },
        verified: None,
    })
}

/// Length n = p^l: locators are the additive subgroup spanned by
/// 1, x, ..., x^(l-1), v_i = 1 for i <= n-k and γ (γ² ≠ 1) afterwards.
///
/// Over a subgroup every dual multiplier equals h^(-1), where h is the
/// product of the nonzero subgroup elements; this is checked and recorded.
pub fn construct_prime_power(
    field: &Field,
    l: u32,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_field(field)?;
    let subgroup = field.additive_subgroup(l)?;
    let n = subgroup.len();
    check_k(n, k)?;
    reject("a labeling", Construction::PrimePowerLength, overrides.labeling.is_some())?;
    reject(
        "tail multipliers",
        Construction::PrimePowerLength,
        overrides.tail_multipliers.is_some(),
    )?;

    let h = field.product(subgroup.iter().copied().filter(|x| !x.is_zero()));
    let h_inv = field.inv(h)?;
    let u = dual_multipliers(field, &subgroup)?;
    if u.constant() != Some(h_inv) {
        return Err(Error::TheoremViolation(format!(
            "dual multipliers over the subgroup are not constant h^-1 = {h_inv}"
        )));
    }
    let gamma = match overrides.gamma {
        Some(g) => checked_non_unit(field, g)?,
        None => first_non_unit(field),
    };
    let multipliers = (0..n).map(|i| if i < n - k { Elem::ONE } else { gamma }).collect();
    let spec = GrsSpec::new(field, subgroup.clone(), multipliers, k, false)?;

    Ok(ConstructionReport {
        construction: Construction::PrimePowerLength,
        n,
        k,
        spec,
        params: ConstructionParams {
            gamma: Some(gamma),
            subgroup_degree: Some(l),
            subgroup: Some(subgroup),
            subgroup_product: Some(h),
            dual_multiplier: Some(h_inv),
            ..Default::default()
        },
        verified: None,
    })
}

/// ∏ (a - b) over the excluded elements b.
fn excluded_product(field: &Field, a: Elem, excluded: &[Elem]) -> Elem {
    field.product(excluded.iter().map(|&b| field.sub(a, b)))
}

/// Whether a tail multiplier satisfies -v²·∏_{j>n}(α_i - α_j) ≠ u_i.
fn large_nk_admissible(field: &Field, v: Elem, excluded_prod: Elem, u: Elem) -> bool {
    !v.is_zero() && field.neg(field.mul(field.square(v), excluded_prod)) != u
}

/// n < q with n + k >= q + 1: locators α_1..α_n, v_i = 1 for i <= q-k, and
/// each later v_i is the first nonzero element with
/// -v_i²·∏_{j>n}(α_i - α_j) ≠ u_i.
pub fn construct_large_nk(
    field: &Field,
    n: usize,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_hypotheses(Construction::LargeNPlusK, field, n, k)?;
    reject("γ", Construction::LargeNPlusK, overrides.gamma.is_some())?;
    let q = field.order() as usize;
    let labels = labeling(field, overrides)?;
    let (locators, excluded) = labels.split_at(n);
    let u = dual_multipliers(field, locators)?.u;

    let head = q - k;
    let tail_len = n - head;
    if let Some(list) = &overrides.tail_multipliers {
        if list.len() != tail_len {
            return Err(Error::InvalidOverride(format!(
                "expected {tail_len} tail multipliers, got {}",
                list.len()
            )));
        }
    }
    let mut multipliers = vec![Elem::ONE; head];
    let mut chosen = Vec::with_capacity(tail_len);
    for i in head..n {
        let prod = excluded_product(field, locators[i], excluded);
        let v = match &overrides.tail_multipliers {
            Some(list) => {
                let v = list[i - head];
                field
                    .check(v)
                    .map_err(|_| Error::InvalidOverride(format!("{v} is not a field element")))?;
                if !large_nk_admissible(field, v, prod, u[i]) {
                    return Err(Error::InvalidOverride(format!(
                        "multiplier {v} at position {} violates -v^2 * prod != u",
                        i + 1
                    )));
                }
                v
            }
            None => field
                .elements()
                .find(|&v| large_nk_admissible(field, v, prod, u[i]))
                .ok_or(Error::NoValidMultiplier(i + 1))?,
        };
        multipliers.push(v);
        chosen.push(ChosenMultiplier { position: i + 1, value: v });
    }
    let spec = GrsSpec::new(field, locators.to_vec(), multipliers, k, false)?;

    Ok(ConstructionReport {
        construction: Construction::LargeNPlusK,
        n,
        k,
        spec,
        params: ConstructionParams {
            excluded: Some(excluded.to_vec()),
            chosen_multipliers: chosen,
            labeling: overrides.labeling.clone(),
            ..Default::default()
        },
        verified: None,
    })
}

/// n < q with 2n - k < q <= 2n: locators α_1..α_n and
/// v_i = ∏_{j=1}^{n-k} (α_i - α_{n+j}).
pub fn construct_window(
    field: &Field,
    n: usize,
    k: usize,
    overrides: &Overrides,
) -> Result<ConstructionReport> {
    check_hypotheses(Construction::Window2n, field, n, k)?;
    reject("γ", Construction::Window2n, overrides.gamma.is_some())?;
    reject("tail multipliers", Construction::Window2n, overrides.tail_multipliers.is_some())?;
    let labels = labeling(field, overrides)?;
    let (locators, excluded) = labels.split_at(n);
    // q - n > n - k, so there are enough excluded elements
    let roots = &excluded[..n - k];
    let multipliers = locators.iter().map(|&a| excluded_product(field, a, roots)).collect();
    let spec = GrsSpec::new(field, locators.to_vec(), multipliers, k, false)?;

    Ok(ConstructionReport {
        construction: Construction::Window2n,
        n,
        k,
        spec,
        params: ConstructionParams {
            excluded: Some(excluded.to_vec()),
            labeling: overrides.labeling.clone(),
            ..Default::default()
        },
        verified: None,
    })
}

/// Re-checks a report's hypotheses and construction-specific identities,
/// then fills `verified` from the hull and MDS oracles.
///
/// A code that fails to be LCD or MDS is reported as
/// [`Error::TheoremViolation`]: it means the construction is implemented
/// wrongly or the report was altered.
pub fn verify_report(report: &ConstructionReport, budget: u64) -> Result<ConstructionReport> {
    let field = report.field();
    let spec = &report.spec;
    check_hypotheses(report.construction, field, report.n, report.k)?;
    if spec.length() != report.n || spec.k() != report.k {
        return Err(Error::TheoremViolation(format!(
            "spec is a [{}, {}] code, report claims [{}, {}]",
            spec.length(),
            spec.k(),
            report.n,
            report.k
        )));
    }
    let tag = report.construction;
    match tag {
        Construction::PrimePowerLength => {
            let h_inv = report.params.dual_multiplier;
            if h_inv.is_none() || dual_multipliers(field, spec.locators())?.constant() != h_inv {
                return Err(Error::TheoremViolation(
                    "dual multipliers over the subgroup differ from h^-1".into(),
                ));
            }
        }
        Construction::LargeNPlusK => {
            let q = field.order() as usize;
            let excluded: Vec<Elem> =
                field.elements().filter(|a| !spec.locators().contains(a)).collect();
            let u = dual_multipliers(field, spec.locators())?.u;
            let tail = spec.locators().iter().zip(spec.multipliers()).zip(&u).enumerate();
            for (i, ((&a, &v), &ui)) in tail.skip(q - report.k) {
                let prod = excluded_product(field, a, &excluded);
                if !large_nk_admissible(field, v, prod, ui) {
                    return Err(Error::TheoremViolation(format!(
                        "multiplier at position {} violates -v^2 * prod != u",
                        i + 1
                    )));
                }
            }
        }
        _ => {}
    }

    let code = spec.generator();
    let hull_dimension = code.hull_dimension();
    if hull_dimension != 0 {
        return Err(Error::TheoremViolation(format!(
            "{tag} [{}, {}] code has hull dimension {hull_dimension}",
            report.n, report.k
        )));
    }
    let mds = code.is_mds(budget)?;
    if !mds.is_mds {
        return Err(Error::TheoremViolation(format!(
            "{tag} [{}, {}] code is not MDS (minimum distance {:?})",
            report.n, report.k, mds.min_distance
        )));
    }
    let mut out = report.clone();
    out.verified = Some(Verification {
        hull_dimension,
        is_lcd: true,
        is_mds: true,
        mds_route: mds.route,
        min_distance: mds.min_distance,
    });
    Ok(out)
}
