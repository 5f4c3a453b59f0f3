//! Invariants of the candidate surface carried by an edgepath system.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::edgepath::{Edgepath, PathType, Skeleton};
use crate::system::{self, validate_system, EdgepathSystem, MontesinosKnot, DEFAULT_COMBINATION_CAP};
use crate::{Error, Fraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Essentiality {
    Proven,
    /// Neither the common-sign test nor the constant-path test applies. This
    /// is not a claim that the surface is inessential.
    Undetermined,
}

impl fmt::Display for Essentiality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Essentiality::Proven => "proven",
            Essentiality::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    pub system: EdgepathSystem,
    pub twist: Fraction,
    /// Twist of the Seifert reference; `slope = twist - reference_twist`.
    pub reference_twist: Fraction,
    pub slope: Fraction,
    pub sheets: BigUint,
    /// `-chi / #sheets`, type I only.
    pub euler_per_sheet: Option<Fraction>,
    pub euler: Option<BigInt>,
    pub boundary_components: BigUint,
    pub essential: Essentiality,
    pub seifert: bool,
}

impl SurfaceReport {
    pub fn system_type(&self) -> PathType {
        self.system.system_type()
    }
}

/// Sum of edge twists over every path; constant paths contribute nothing.
pub fn system_twist(sys: &EdgepathSystem) -> Result<Fraction, Error> {
    sys.paths().iter().map(Edgepath::twist).sum()
}

/// `r = tau(F) - tau(F_S)`.
pub fn boundary_slope(sys: &EdgepathSystem, reference: &EdgepathSystem) -> Result<Fraction, Error> {
    Ok(system_twist(sys)? - system_twist(reference)?)
}

/// The lcm of `k + l` over final partial edges of weight `k/(k+l)` and of
/// `k` over constant paths `(k/(k+l))<p/q> + (l/(k+l))<p/q>o`, both in lowest
/// terms. Systems with neither have one sheet.
pub fn number_of_sheets(sys: &EdgepathSystem) -> BigUint {
    let mut sheets = BigInt::one();
    for path in sys.paths() {
        let forced = match path {
            Edgepath::Walk { final_weight: Some(t), .. } => t.denom().clone(),
            Edgepath::Constant { weight, .. } => weight.numer().clone(),
            Edgepath::Walk { final_weight: None, .. } => continue,
        };
        sheets = sheets.lcm(&forced);
    }
    sheets.magnitude().clone()
}

/// `#sheets / denominator(slope)`, which must be a whole number.
pub fn boundary_components(sheets: &BigUint, slope: &Fraction) -> Result<BigUint, Error> {
    let den = slope.denom().magnitude();
    if den.is_zero() || !(sheets % den).is_zero() {
        return Err(Error::Integrity(format!("slope {slope} has a denominator that does not divide {sheets} sheets")));
    }
    Ok(sheets / den)
}

/// `-chi / #sheets` for a type I system:
///
/// ```text
/// sum_{non-constant} |gamma_i| + N_const - N + (N - 2 - sum_{const} 1/q_i) / (1 - u)
/// ```
pub fn euler_per_sheet(sys: &EdgepathSystem) -> Result<Fraction, Error> {
    if sys.system_type() != PathType::I {
        return Err(Error::NotTypeOne);
    }
    let n = Fraction::integer(sys.paths().len() as i64);
    let n_const = Fraction::integer(sys.constant_count() as i64);
    let mut lengths = Fraction::zero();
    let mut inv_q = Fraction::zero();
    for path in sys.paths() {
        match path {
            Edgepath::Constant { tangle, .. } => inv_q = inv_q + Fraction::new(1, tangle.denom().clone())?,
            walk => lengths = lengths + walk.length()?,
        }
    }
    let scale = (Fraction::one() - sys.common_u()).recip();
    Ok(lengths + &n_const - &n + (n - Fraction::integer(2) - inv_q) * scale)
}

pub fn euler_characteristic_type_one(sys: &EdgepathSystem, sheets: &BigUint) -> Result<BigInt, Error> {
    let chi = -(euler_per_sheet(sys)? * Fraction::integer(BigInt::from(sheets.clone())));
    if !chi.is_integer() {
        return Err(Error::Integrity(format!("Euler characteristic {chi} is not an integer for {sys}")));
    }
    Ok(chi.numer().clone())
}

/// Proven for type I systems whose last edges share one sign, or which
/// contain a constant edgepath; undetermined otherwise.
pub fn essentiality(sys: &EdgepathSystem) -> Result<Essentiality, Error> {
    if sys.system_type() != PathType::I {
        return Ok(Essentiality::Undetermined);
    }
    if sys.constant_count() > 0 {
        return Ok(Essentiality::Proven);
    }
    let mut signs = Vec::with_capacity(sys.paths().len());
    for path in sys.paths() {
        signs.push(path.last_step()?.and_then(|s| s.sign));
    }
    let common = signs.first().copied().flatten();
    if common.is_some() && signs.iter().all(|s| *s == common) {
        Ok(Essentiality::Proven)
    } else {
        Ok(Essentiality::Undetermined)
    }
}

pub fn analyze(sys: &EdgepathSystem, reference: &EdgepathSystem) -> Result<SurfaceReport, Error> {
    let twist = system_twist(sys)?;
    let reference_twist = system_twist(reference)?;
    let slope = &twist - &reference_twist;
    let sheets = number_of_sheets(sys);
    let boundary_components = boundary_components(&sheets, &slope)?;
    let (euler_per_sheet, euler) = if sys.system_type() == PathType::I {
        (Some(euler_per_sheet(sys)?), Some(euler_characteristic_type_one(sys, &sheets)?))
    } else {
        (None, None)
    };
    let seifert = sys == reference;
    if seifert && !slope.is_zero() {
        return Err(Error::Integrity(format!("reference system has slope {slope}")));
    }
    Ok(SurfaceReport {
        system: sys.clone(),
        twist,
        reference_twist,
        slope,
        sheets,
        euler_per_sheet,
        euler,
        boundary_components,
        essential: essentiality(sys)?,
        seifert,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotAnalysis {
    pub knot: MontesinosKnot,
    pub reference: EdgepathSystem,
    pub reference_twist: Fraction,
    /// One report per enumerated system, in enumeration order.
    pub reports: Vec<SurfaceReport>,
    pub degenerate: Vec<Vec<Skeleton>>,
}

pub fn analyze_knot(knot: &MontesinosKnot) -> Result<KnotAnalysis, Error> {
    analyze_knot_capped(knot, DEFAULT_COMBINATION_CAP)
}

/// Enumerates every system, checks each against the edgepath conditions and
/// reports on it relative to the Seifert reference.
pub fn analyze_knot_capped(knot: &MontesinosKnot, cap: u64) -> Result<KnotAnalysis, Error> {
    let enumeration = system::enumerate_systems_capped(knot, cap)?;
    let reference = system::find_seifert_system(knot)?;
    let reference_twist = system_twist(&reference)?;
    let mut reports = Vec::with_capacity(enumeration.systems.len());
    for sys in &enumeration.systems {
        if let Err(v) = validate_system(sys) {
            return Err(Error::Integrity(format!("enumerated system {sys} fails validation: {v}")));
        }
        reports.push(analyze(sys, &reference)?);
    }
    Ok(KnotAnalysis { knot: knot.clone(), reference, reference_twist, reports, degenerate: enumeration.degenerate })
}
