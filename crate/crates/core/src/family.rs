//! The knots `K_n = M(-1/2, 2/5, 1/n)`, `n` odd, and the two surfaces whose
//! slopes `2(n-1)^2/n` and `2(n^2-9n+15)/(n-7)` differ by `2(1/(n-7) - 1/n)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::diagram::Vertex;
use crate::edgepath::Edgepath;
use crate::surface::{analyze_knot, Essentiality, SurfaceReport};
use crate::system::{EdgepathSystem, MontesinosKnot};
use crate::{Error, Fraction};

fn check_index(n: i64) -> Result<(), Error> {
    if n < 11 || n % 2 == 0 {
        Err(Error::FamilyIndex(n))
    } else {
        Ok(())
    }
}

/// `M(-1/2, 2/5, 1/n)` for odd `n >= 3`.
pub fn family_knot(n: i64) -> Result<MontesinosKnot, Error> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::FamilyIndex(n));
    }
    MontesinosKnot::new(vec![Fraction::ratio(-1, 2), Fraction::ratio(2, 5), Fraction::ratio(1, n)])
}

fn walk(tangle: &Fraction, labels: &[Fraction], t: Option<Fraction>) -> Edgepath {
    Edgepath::Walk { tangle: tangle.clone(), vertices: labels.iter().cloned().map(Vertex::angle).collect(), final_weight: t }
}

/// The systems of the surfaces `F` (all last edges decreasing) and `F'`
/// (constant on `-1/2`).
pub fn pair_systems(n: i64) -> Result<(EdgepathSystem, EdgepathSystem), Error> {
    check_index(n)?;
    let knot = family_knot(n)?;
    let [a, b, c] = [Fraction::ratio(-1, 2), Fraction::ratio(2, 5), Fraction::ratio(1, n)];
    let (zero, half) = (Fraction::zero(), Fraction::ratio(1, 2));

    let gamma = EdgepathSystem::from_paths(
        knot.clone(),
        vec![
            walk(&a, &[a.clone(), Fraction::integer(-1)], Some(Fraction::ratio(1, n))),
            walk(&b, &[b.clone(), half.clone(), zero.clone()], Some(Fraction::ratio(1, n))),
            walk(&c, &[c.clone(), zero.clone()], Some(Fraction::ratio(n - 1, n))),
        ],
    )?;
    let gamma_prime = EdgepathSystem::from_paths(
        knot,
        vec![
            Edgepath::Constant { tangle: a, weight: Fraction::ratio(n - 7, n - 4) },
            walk(&b, &[b.clone(), half], Some(Fraction::ratio(n - 9, n - 7))),
            walk(&c, &[c.clone(), zero], Some(Fraction::ratio(n - 8, n - 7))),
        ],
    )?;
    Ok((gamma, gamma_prime))
}

/// The Seifert surface's system: `<inf> - <-1> - <-1/2>`,
/// `<inf> - <0> - <1/2> - <2/5>` and `<inf> - <1> - <1/2> - ... - <1/n>`.
pub fn seifert_system(n: i64) -> Result<EdgepathSystem, Error> {
    let knot = family_knot(n)?;
    let [a, b, c] = [Fraction::ratio(-1, 2), Fraction::ratio(2, 5), Fraction::ratio(1, n)];
    let inf = Fraction::infinity();
    let mut long: Vec<Fraction> = (1..=n).rev().map(|d| Fraction::ratio(1, d)).collect();
    long.push(inf.clone());
    EdgepathSystem::from_paths(
        knot,
        vec![
            walk(&a, &[a.clone(), Fraction::integer(-1), inf.clone()], None),
            walk(&b, &[b.clone(), Fraction::ratio(1, 2), Fraction::zero(), inf], None),
            walk(&c, &long, None),
        ],
    )
}

/// `(2(n-1)^2/n, 2(n^2-9n+15)/(n-7))`.
pub fn expected_slopes(n: i64) -> (Fraction, Fraction) {
    (Fraction::ratio(2 * (n - 1) * (n - 1), n), Fraction::ratio(2 * (n * n - 9 * n + 15), n - 7))
}

/// `2(1/(n-7) - 1/n)`.
pub fn expected_gap(n: i64) -> Fraction {
    Fraction::integer(2) * (Fraction::ratio(1, n - 7) - Fraction::ratio(1, n))
}

/// Invariants found for one of the two surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCheck {
    pub slope: Fraction,
    pub twist: Fraction,
    pub sheets: BigUint,
    pub euler: Option<BigInt>,
    pub euler_per_sheet: Option<Fraction>,
    pub boundary_components: BigUint,
    pub essential: Essentiality,
}

impl From<&SurfaceReport> for SurfaceCheck {
    fn from(r: &SurfaceReport) -> Self {
        SurfaceCheck {
            slope: r.slope.clone(),
            twist: r.twist.clone(),
            sheets: r.sheets.clone(),
            euler: r.euler.clone(),
            euler_per_sheet: r.euler_per_sheet.clone(),
            boundary_components: r.boundary_components.clone(),
            essential: r.essential,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCheck {
    pub n: i64,
    pub reference_twist: Fraction,
    pub first: Option<SurfaceCheck>,
    pub second: Option<SurfaceCheck>,
    /// `slope(F') - slope(F)` as enumerated.
    pub gap: Option<Fraction>,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl MemberCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_surface(
    label: &str,
    report: Option<&SurfaceReport>,
    slope: &Fraction,
    sheets: i64,
    failures: &mut Vec<String>,
) -> Option<SurfaceCheck> {
    let Some(r) = report else {
        failures.push(format!("{label}: system not enumerated"));
        return None;
    };
    let mut fail = |what: String| failures.push(format!("{label}: {what}"));
    if &r.slope != slope {
        fail(format!("slope {} != {slope}", r.slope));
    }
    if r.essential != Essentiality::Proven {
        fail(format!("essential = {}", r.essential));
    }
    if r.sheets != BigUint::from(sheets as u64) {
        fail(format!("sheets {} != {sheets}", r.sheets));
    }
    if r.euler_per_sheet != Some(Fraction::one()) {
        fail(format!("-chi/sheets = {:?} != 1", r.euler_per_sheet));
    }
    if r.euler != Some(BigInt::from(-sheets)) {
        fail(format!("euler = {:?} != {}", r.euler, -sheets));
    }
    if r.sheets != &r.boundary_components * r.slope.denom().magnitude() {
        fail(format!("sheets {} != {} components x denominator {}", r.sheets, r.boundary_components, r.slope.denom()));
    }
    Some(SurfaceCheck::from(r))
}

/// Enumerates `K_n` in full and checks the two surfaces, the Seifert
/// reference and the slope gap against their closed forms.
pub fn verify_member(n: i64) -> Result<MemberCheck, Error> {
    check_index(n)?;
    let knot = family_knot(n)?;
    let analysis = analyze_knot(&knot)?;
    let (gamma, gamma_prime) = pair_systems(n)?;
    let (slope, slope_prime) = expected_slopes(n);
    let mut failures = Vec::new();
    let mut notes = Vec::new();

    let expected_twist = Fraction::integer(4 - 2 * n);
    if analysis.reference_twist != expected_twist {
        failures.push(format!("reference twist {} != {expected_twist}", analysis.reference_twist));
    }
    match analysis.reports.iter().find(|r| r.seifert) {
        Some(r) if r.slope.is_zero() => {}
        Some(r) => failures.push(format!("reference slope {} != 0", r.slope)),
        None => failures.push("reference system missing from the enumeration".into()),
    }

    let find = |sys: &EdgepathSystem| analysis.reports.iter().find(|r| &r.system == sys);
    let first = check_surface("F", find(&gamma), &slope, n, &mut failures);
    let second = check_surface("F'", find(&gamma_prime), &slope_prime, n - 7, &mut failures);

    if let Some(f) = &first {
        if f.boundary_components != BigUint::from(1u32) {
            failures.push(format!("F: {} boundary components != 1", f.boundary_components));
        }
    }
    if let Some(f) = &second {
        if f.boundary_components != BigUint::from(1u32) {
            notes.push(format!(
                "F': {} sheets over reduced slope denominator {} gives {} boundary components; a single component would need the unreduced denominator {}",
                f.sheets,
                f.slope.denom(),
                f.boundary_components,
                n - 7
            ));
        }
    }

    let gap = match (&first, &second) {
        (Some(a), Some(b)) => Some(&b.slope - &a.slope),
        _ => None,
    };
    if let Some(g) = &gap {
        if g != &expected_gap(n) {
            failures.push(format!("gap {g} != {}", expected_gap(n)));
        }
    }

    Ok(MemberCheck { n, reference_twist: analysis.reference_twist, first, second, gap, failures, notes })
}
