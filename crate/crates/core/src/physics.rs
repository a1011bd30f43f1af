//! Meson tables, the θ-assignment of the pseudoscalar 16-plet and the mass
//! relations evaluated against it.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// The shipped data file, compiled in.
pub const SHIPPED_DATA: &str = include_str!("../data/mesons.csv");

/// Coefficient of each component in `η± = (η_c ± η′)/√2`.
pub const ETA_MIX_COEFF: f64 = FRAC_1_SQRT_2;

/// Default number of standard deviations for a consistent verdict.
pub const DEFAULT_Z: f64 = 2.0;

/// Default angles for the monotonicity check.
pub const DEFAULT_THETAS: [f64; 3] = [0.01, 0.3, 0.9];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MesonEntry {
    pub mass: f64,
    pub sigma: f64,
    pub source: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct MesonTable {
    pub entries: BTreeMap<String, MesonEntry>,
}

impl MesonTable {
    /// Parses `name,mass_mev,sigma_mev,source` records. `#` starts a comment;
    /// blank lines and a literal header line are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() || content.replace(' ', "") == "name,mass_mev,sigma_mev,source" {
                continue;
            }
            let err = |msg: String| Error::Parse { line, msg };
            let fields: Vec<&str> = content.splitn(4, ',').map(str::trim).collect();
            if fields.len() < 3 {
                return Err(err(format!("expected name,mass_mev,sigma_mev,source; got {content:?}")));
            }
            let name = fields[0];
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(format!("invalid meson name {name:?}")));
            }
            let mass: f64 = fields[1].parse().map_err(|_| err(format!("invalid mass {:?}", fields[1])))?;
            let sigma: f64 = fields[2].parse().map_err(|_| err(format!("invalid sigma {:?}", fields[2])))?;
            if !mass.is_finite() || mass <= 0.0 {
                return Err(err(format!("mass of {name} must be positive, got {mass}")));
            }
            if !sigma.is_finite() || sigma < 0.0 {
                return Err(err(format!("sigma of {name} must be non-negative, got {sigma}")));
            }
            let source = fields.get(3).copied().unwrap_or("").to_string();
            if entries.insert(name.to_string(), MesonEntry { mass, sigma, source }).is_some() {
                return Err(err(format!("duplicate meson {name}")));
            }
        }
        if entries.is_empty() {
            return Err(Error::input("meson data contains no records"));
        }
        Ok(Self { entries })
    }

    pub fn shipped() -> Self {
        Self::parse(SHIPPED_DATA).expect("shipped meson data parses")
    }

    pub fn get(&self, name: &str) -> Option<&MesonEntry> {
        self.entries.get(name)
    }

    /// `(mass, sigma)` for each name, or an error listing every missing one.
    pub fn require<const N: usize>(&self, names: [&str; N]) -> Result<[(f64, f64); N]> {
        let missing: Vec<String> =
            names.iter().filter(|n| !self.entries.contains_key(**n)).map(|n| n.to_string()).collect();
        if !missing.is_empty() {
            return Err(Error::MissingMesons(missing));
        }
        Ok(names.map(|n| {
            let e = &self.entries[n];
            (e.mass, e.sigma)
        }))
    }

    pub fn insert(&mut self, name: &str, mass: f64, sigma: f64) {
        self.entries.insert(name.to_string(), MesonEntry { mass, sigma, source: "manual".into() });
    }
}

pub fn load_meson_data(path: impl AsRef<Path>) -> Result<MesonTable> {
    MesonTable::parse(&std::fs::read_to_string(path)?)
}

/// Common mass of the degenerate pair `η±`: the mean of `m(η_c)` and `m(η′)`.
pub fn eta_doublet(m_eta_c: f64, m_eta_prime: f64) -> Result<f64> {
    if !(m_eta_c > 0.0 && m_eta_prime > 0.0) {
        return Err(Error::input("doublet masses must be positive"));
    }
    Ok(0.5 * (m_eta_c + m_eta_prime))
}

/// `A/B` and its first-order σ for independent A and B.
pub fn propagate_ratio_uncertainty(a: f64, sigma_a: f64, b: f64, sigma_b: f64) -> Result<(f64, f64)> {
    if b == 0.0 || !b.is_finite() {
        return Err(Error::input("ratio denominator must be finite and nonzero"));
    }
    let ratio = a / b;
    let rel_a = if sigma_a == 0.0 { 0.0 } else { sigma_a / a };
    let rel_b = sigma_b / b;
    Ok((ratio, ratio.abs() * rel_a.hypot(rel_b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Tension,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaResult {
    pub name: String,
    pub relation: String,
    pub lhs: f64,
    pub sigma_lhs: f64,
    pub rhs: f64,
    pub sigma_rhs: f64,
    pub ratio: f64,
    pub sigma_ratio: f64,
    pub z: f64,
    pub verdict: Verdict,
    /// `ratio` and `sigma_ratio` to five decimals.
    pub ratio_display: String,
    pub sigma_display: String,
}

impl FormulaResult {
    fn new(
        name: &str,
        relation: &str,
        (lhs, sigma_lhs): (f64, f64),
        (rhs, sigma_rhs): (f64, f64),
        z: f64,
    ) -> Result<Self> {
        let (ratio, sigma_ratio) = propagate_ratio_uncertainty(lhs, sigma_lhs, rhs, sigma_rhs)?;
        let verdict = if (ratio - 1.0).abs() <= z * sigma_ratio { Verdict::Consistent } else { Verdict::Tension };
        Ok(Self {
            name: name.into(),
            relation: relation.into(),
            lhs,
            sigma_lhs,
            rhs,
            sigma_rhs,
            ratio,
            sigma_ratio,
            z,
            verdict,
            ratio_display: format!("{ratio:.5}"),
            sigma_display: format!("{sigma_ratio:.5}"),
        })
    }
}

fn sum_sigma(parts: &[f64]) -> f64 {
    parts.iter().map(|s| s * s).sum::<f64>().sqrt()
}

/// `m(η_c) + m(η′)` against `2 m(D_s)`.
pub fn mass_formula_16(table: &MesonTable, z: f64) -> Result<FormulaResult> {
    let [(eta_c, s_c), (eta_p, s_p), (ds, s_ds)] = table.require(["eta_c", "eta_prime", "D_s"])?;
    FormulaResult::new(
        "formula16",
        "m(eta_c) + m(eta_prime) = 2 m(D_s)",
        (eta_c + eta_p, sum_sigma(&[s_c, s_p])),
        (2.0 * ds, 2.0 * s_ds),
        z,
    )
}

/// `m(J/ψ) + m(ω)` against `2 m(D_s*)`.
pub fn vector_analogue(table: &MesonTable, z: f64) -> Result<FormulaResult> {
    let [(jpsi, s_j), (omega, s_o), (ds, s_ds)] = table.require(["J_psi", "omega", "D_s_star"])?;
    FormulaResult::new(
        "vector",
        "m(J_psi) + m(omega) = 2 m(D_s_star)",
        (jpsi + omega, sum_sigma(&[s_j, s_o])),
        (2.0 * ds, 2.0 * s_ds),
        z,
    )
}

/// Gell-Mann–Okubo: `3 m(η)` against `4 m(K) − m(π)` with isospin-averaged K and π.
pub fn gmo_check(table: &MesonTable, z: f64) -> Result<FormulaResult> {
    let [(eta, s_eta), (kp, s_kp), (k0, s_k0), (pip, s_pip), (pi0, s_pi0)] =
        table.require(["eta", "K_plus", "K0", "pi_plus", "pi0"])?;
    let (m_k, s_k) = (0.5 * (kp + k0), 0.5 * sum_sigma(&[s_kp, s_k0]));
    let (m_pi, s_pi) = (0.5 * (pip + pi0), 0.5 * sum_sigma(&[s_pip, s_pi0]));
    FormulaResult::new(
        "gmo",
        "3 m(eta) = 4 m(K) - m(pi)",
        (3.0 * eta, 3.0 * s_eta),
        (4.0 * m_k - m_pi, sum_sigma(&[4.0 * s_k, s_pi])),
        z,
    )
}

/// `12 m(D̄)²` against `5 m(cc̄)² + 7 m₀²`, where `m(D̄)` averages D⁰, D⁺, D_s,
/// `m(cc̄)` is η_c and `m₀` averages the eight octet states (charge
/// conjugates counted twice with fully correlated errors).
pub fn burakovsky_check(table: &MesonTable, z: f64) -> Result<FormulaResult> {
    let [(d0, s_d0), (dp, s_dp), (ds, s_ds), (etac, s_etac), (pi0, s_pi0), (pip, s_pip), (kp, s_kp), (k0, s_k0), (eta, s_eta)] =
        table.require(["D0", "D_plus", "D_s", "eta_c", "pi0", "pi_plus", "K_plus", "K0", "eta"])?;
    let m_d = (d0 + dp + ds) / 3.0;
    let s_d = sum_sigma(&[s_d0, s_dp, s_ds]) / 3.0;
    let m_0 = (pi0 + 2.0 * pip + 2.0 * kp + 2.0 * k0 + eta) / 8.0;
    let s_0 = sum_sigma(&[s_pi0, 2.0 * s_pip, 2.0 * s_kp, 2.0 * s_k0, s_eta]) / 8.0;
    let sq = |m: f64, s: f64| (m * m, 2.0 * m * s);
    let (d2, s_d2) = sq(m_d, s_d);
    let (c2, s_c2) = sq(etac, s_etac);
    let (o2, s_o2) = sq(m_0, s_0);
    FormulaResult::new(
        "burakovsky",
        "12 m(Dbar)^2 = 5 m(eta_c)^2 + 7 m0^2",
        (12.0 * d2, 12.0 * s_d2),
        (5.0 * c2 + 7.0 * o2, sum_sigma(&[5.0 * s_c2, 7.0 * s_o2])),
        z,
    )
}

// ---------------------------------------------------------------------------
// θ-assignment

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Multiplet {
    Octet,
    Sixteen,
}

impl std::str::FromStr for Multiplet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "octet" | "8" => Ok(Multiplet::Octet),
            "sixteen" | "16" => Ok(Multiplet::Sixteen),
            other => Err(Error::input(format!("unknown multiplet {other:?}"))),
        }
    }
}

/// Which meson family supplies the masses of the 16-plet slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Pseudoscalar,
    Vector,
}

/// Mass slots shared by charge-conjugate rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    Pi0,
    PiCharged,
    KCharged,
    KNeutral,
    Eta,
    DNeutral,
    DCharged,
    DStrange,
    EtaDoublet,
}

impl Slot {
    /// Table names carrying the slot's mass; `EtaDoublet` averages two.
    pub fn names(self, family: Family) -> &'static [&'static str] {
        use Family::*;
        match (self, family) {
            (Slot::Pi0, Pseudoscalar) => &["pi0"],
            (Slot::PiCharged, Pseudoscalar) => &["pi_plus"],
            (Slot::KCharged, Pseudoscalar) => &["K_plus"],
            (Slot::KNeutral, Pseudoscalar) => &["K0"],
            (Slot::Eta, Pseudoscalar) => &["eta"],
            (Slot::DNeutral, Pseudoscalar) => &["D0"],
            (Slot::DCharged, Pseudoscalar) => &["D_plus"],
            (Slot::DStrange, Pseudoscalar) => &["D_s"],
            (Slot::EtaDoublet, Pseudoscalar) => &["eta_c", "eta_prime"],
            (Slot::Pi0, Vector) => &["rho0"],
            (Slot::PiCharged, Vector) => &["rho_plus"],
            (Slot::KCharged, Vector) => &["K_star_plus"],
            (Slot::KNeutral, Vector) => &["K_star0"],
            (Slot::Eta, Vector) => &["phi"],
            (Slot::DNeutral, Vector) => &["D_star0"],
            (Slot::DCharged, Vector) => &["D_star_plus"],
            (Slot::DStrange, Vector) => &["D_s_star"],
            (Slot::EtaDoublet, Vector) => &["J_psi", "omega"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaRow {
    pub label: &'static str,
    pub slot: Slot,
    /// Integer coefficients on `(θ₁, θ₂, θ₃)`; `None` for η, which sits on the
    /// zero value of the non-negative branch and has no angle.
    pub coefficients: Option<[i8; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaAssignment {
    pub multiplet: Multiplet,
    pub rows: Vec<ThetaRow>,
}

const fn row(label: &'static str, slot: Slot, c: [i8; 3]) -> ThetaRow {
    ThetaRow { label, slot, coefficients: Some(c) }
}

pub fn assign_thetas(multiplet: Multiplet) -> ThetaAssignment {
    let mut rows = vec![
        row("pi0", Slot::Pi0, [0, 0, 0]),
        row("pi+", Slot::PiCharged, [1, 0, 0]),
        row("pi-", Slot::PiCharged, [-1, 0, 0]),
        row("K+", Slot::KCharged, [-1, 1, 0]),
        row("K-", Slot::KCharged, [1, -1, 0]),
        row("K0", Slot::KNeutral, [1, 1, 0]),
        row("K0bar", Slot::KNeutral, [-1, -1, 0]),
        ThetaRow { label: "eta", slot: Slot::Eta, coefficients: None },
    ];
    if multiplet == Multiplet::Sixteen {
        rows.extend([
            row("D0", Slot::DNeutral, [-1, -1, 1]),
            row("D0bar", Slot::DNeutral, [1, 1, -1]),
            row("D+", Slot::DCharged, [1, -1, 1]),
            row("D-", Slot::DCharged, [-1, 1, -1]),
            row("D_s+", Slot::DStrange, [-1, 1, 1]),
            row("D_s-", Slot::DStrange, [1, -1, -1]),
            row("eta+", Slot::EtaDoublet, [1, 1, 1]),
            row("eta-", Slot::EtaDoublet, [-1, -1, -1]),
        ]);
    }
    ThetaAssignment { multiplet, rows }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlotEvaluation {
    pub slot: Slot,
    pub labels: Vec<&'static str>,
    pub signed_sum: f64,
    pub cos_sq: f64,
    pub mass: f64,
    pub sigma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityViolation {
    /// Slot with the larger cos² (expected lighter).
    pub lighter_expected: Slot,
    pub heavier_expected: Slot,
    pub mass_excess: f64,
    pub combined_sigma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub multiplet: Multiplet,
    pub family: Family,
    pub thetas: [f64; 3],
    pub slots: Vec<SlotEvaluation>,
    pub violations: Vec<MonotonicityViolation>,
    pub monotone: bool,
}

/// Requires larger `cos²(θ)` to go with smaller mass, slot by slot. A pair
/// only violates when the mass inversion exceeds the combined σ.
pub fn check_monotonicity(
    assignment: &ThetaAssignment,
    table: &MesonTable,
    thetas: [f64; 3],
    family: Family,
) -> Result<MonotonicityReport> {
    for (i, t) in thetas.iter().enumerate() {
        if !(0.0..=FRAC_PI_2).contains(t) {
            return Err(Error::input(format!("theta{} = {t} is outside [0, pi/2]", i + 1)));
        }
    }
    let mut slots: BTreeMap<Slot, SlotEvaluation> = BTreeMap::new();
    for r in &assignment.rows {
        let Some(c) = r.coefficients else { continue };
        let signed_sum: f64 = c.iter().zip(&thetas).map(|(&ci, t)| f64::from(ci) * t).sum();
        if signed_sum.abs() > FRAC_PI_2 {
            return Err(Error::input(format!(
                "signed angle sum for {} is {signed_sum}, outside [-pi/2, pi/2]",
                r.label
            )));
        }
        if let Some(e) = slots.get_mut(&r.slot) {
            e.labels.push(r.label);
            continue;
        }
        let names = r.slot.names(family);
        let (mass, sigma) = match names {
            [one] => table.require([*one])?[0],
            [a, b] => {
                let [(ma, sa), (mb, sb)] = table.require([*a, *b])?;
                (eta_doublet(ma, mb)?, 0.5 * sa.hypot(sb))
            }
            _ => unreachable!("slots map to one or two names"),
        };
        slots.insert(
            r.slot,
            SlotEvaluation {
                slot: r.slot,
                labels: vec![r.label],
                signed_sum,
                cos_sq: signed_sum.cos().powi(2),
                mass,
                sigma,
            },
        );
    }
    let slots: Vec<SlotEvaluation> = slots.into_values().collect();
    let mut violations = Vec::new();
    for a in &slots {
        for b in &slots {
            if a.cos_sq > b.cos_sq + 1e-12 {
                let combined_sigma = a.sigma.hypot(b.sigma);
                let mass_excess = a.mass - b.mass;
                if mass_excess > combined_sigma {
                    violations.push(MonotonicityViolation {
                        lighter_expected: a.slot,
                        heavier_expected: b.slot,
                        mass_excess,
                        combined_sigma,
                    });
                }
            }
        }
    }
    Ok(MonotonicityReport {
        multiplet: assignment.multiplet,
        family,
        thetas,
        monotone: violations.is_empty(),
        slots,
        violations,
    })
}

/// `m(ρ⁰) − m(ρ±)` from the table, reported without a sign judgement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RhoSplitting {
    pub delta_m: f64,
    pub sigma: f64,
    pub note: String,
}

pub fn rho_splitting(table: &MesonTable) -> Result<RhoSplitting> {
    let [(r0, s0), (rp, sp)] = table.require(["rho0", "rho_plus"])?;
    let (delta_m, sigma) = (r0 - rp, s0.hypot(sp));
    Ok(RhoSplitting {
        delta_m,
        sigma,
        note: format!(
            "m(rho0) - m(rho+) = {delta_m:.2} +/- {sigma:.2} MeV from the data file; the sign is not determined at this precision"
        ),
    })
}
