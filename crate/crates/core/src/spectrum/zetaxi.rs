//! Phase-indexed limits of the two ratio bounds along an eventually
//! periodic slope, and the exact repetition exponent of its case-2 word as
//! the minimum over all phases.
//!
//! For a period of length `L`, the `η`-limit at each phase feeds a
//! length-`L+1` product sum Λ (the limit of the normalized witness length
//! `t`), a geometric factor `ν` (the product of one full period of
//! `η`-limits), and finally
//!
//! * `ζ_i = 1 + (1 + η_i)/(t_i + 1 + η_i)` with `t_i = Λ_i/(1 − ν)`,
//! * `ξ_i = 1 + (t_i + η_i)/(1 + η_i)`.

use std::cmp::Ordering;
use std::fmt;

use crate::contfrac::{eta_limit, ContinuedFraction};
use crate::exact::QuadExt;
use crate::spectrum::evalues::SpectrumFamily;
use crate::{Error, Result};

/// Which of the two bounds attains a minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgminKind {
    Zeta,
    Xi,
}

impl fmt::Display for ArgminKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArgminKind::Zeta => "zeta",
            ArgminKind::Xi => "xi",
        })
    }
}

/// Exact per-phase limit data.
#[derive(Clone, Debug)]
pub struct PhaseValues {
    pub phase: usize,
    pub eta: QuadExt,
    /// Limit of the normalized witness length at this phase.
    pub t: QuadExt,
    pub zeta: QuadExt,
    pub xi: QuadExt,
}

/// The exact repetition exponent of a case-2 word with an eventually
/// periodic slope: the minimum over phases of both bounds, with every tie
/// reported.
#[derive(Clone, Debug)]
pub struct ExactRepResult {
    pub value: QuadExt,
    pub argmin_phase: usize,
    pub argmin_kind: ArgminKind,
    /// Every `(phase, kind)` attaining the minimum.
    pub argmins: Vec<(usize, ArgminKind)>,
    pub phases: Vec<PhaseValues>,
    /// Set when the period falls outside the families for which the
    /// phase-minimum formula is backed by a published argument; the value
    /// is then a method extrapolation, cross-validated empirically.
    pub extrapolated: bool,
}

/// Λ over the window read downwards from `phase`: with
/// `c_t = η*((phase − t) mod L)` for `t = 0..=L`, the sum
/// `c_0c_1 + c_0c_1c_2 + … + c_0⋯c_L`, evaluated in Horner form.
fn lambda_window(etas: &[QuadExt], phase: usize) -> Result<QuadExt> {
    let l = etas.len();
    let c = |t: usize| &etas[(phase + l - t % l) % l];
    let one = QuadExt::one();
    // Window length is L+1; indices t = 0..=L, with c_L = c_0.
    let mut acc = one.checked_add(c(l))?;
    for t in (2..l).rev() {
        acc = one.checked_add(&c(t).checked_mul(&acc)?)?;
    }
    c(0).checked_mul(c(1))?.checked_mul(&acc)
}

/// The per-phase limits for an arbitrary list of `η`-limits in phase order.
fn phase_values(etas: &[QuadExt]) -> Result<Vec<PhaseValues>> {
    let one = QuadExt::one();
    let mut nu = one.clone();
    for e in etas {
        nu = nu.checked_mul(e)?;
    }
    let denom = one.checked_sub(&nu)?;
    let mut out = Vec::with_capacity(etas.len());
    for phase in 0..etas.len() {
        let eta = etas[phase].clone();
        let lambda = lambda_window(etas, phase)?;
        let t = lambda.checked_div(&denom)?;
        let one_eta = one.checked_add(&eta)?;
        let zeta = one.checked_add(&one_eta.checked_div(&t.checked_add(&one_eta)?)?)?;
        let xi = one.checked_add(&t.checked_add(&eta)?.checked_div(&one_eta)?)?;
        out.push(PhaseValues { phase, eta, t, zeta, xi });
    }
    Ok(out)
}

/// `(ζ_i, ξ_i)` for the slope family with tail `(2,1,1)^n, 2,1,1,1`,
/// computed from the cached `e`-value table.
pub fn zeta_xi(n: usize, i: usize) -> Result<(QuadExt, QuadExt)> {
    let family = SpectrumFamily::new(n)?;
    if i >= family.period_len() {
        return Err(Error::OutOfRange(format!(
            "phase {i} out of range 0..{}",
            family.period_len()
        )));
    }
    let values = phase_values(&family.eta_stars())?;
    let v = &values[i];
    Ok((v.zeta.clone(), v.xi.clone()))
}

/// All `(ζ_i, ξ_i)` of family `n` in phase order.
pub fn zeta_xi_all(n: usize) -> Result<Vec<(QuadExt, QuadExt)>> {
    let family = SpectrumFamily::new(n)?;
    let values = phase_values(&family.eta_stars())?;
    Ok(values.into_iter().map(|v| (v.zeta, v.xi)).collect())
}

/// Detects the periods whose phase-minimum formula is backed by a published
/// argument: rotations of `(2,1,1)` and rotations of `(2,1,1)^n,2,1,1,1`.
fn proven_family(period: &[u64]) -> bool {
    let is_rotation_of = |target: &[u64]| -> bool {
        if period.len() != target.len() {
            return false;
        }
        (0..period.len()).any(|shift| {
            (0..period.len()).all(|i| period[(shift + i) % period.len()] == target[i])
        })
    };
    if is_rotation_of(&[2, 1, 1]) {
        return true;
    }
    if period.len() >= 7 && period.len() % 3 == 1 {
        let n = (period.len() - 4) / 3;
        let mut target = Vec::with_capacity(period.len());
        for _ in 0..n {
            target.extend_from_slice(&[2, 1, 1]);
        }
        target.extend_from_slice(&[2, 1, 1, 1]);
        return is_rotation_of(&target);
    }
    false
}

/// The exact repetition exponent of the case-2 word whose slope has the
/// given eventually periodic expansion: phase-aligned `η`-limits, the
/// fixed point `t = Λ/(1 − ν)` of the windowed product recursion, and the
/// exact minimum of both bounds over all phases.
pub fn rep_exact_case2(cf: &ContinuedFraction) -> Result<ExactRepResult> {
    if !cf.is_periodic() {
        return Err(Error::InvalidContinuedFraction(
            "an eventually periodic slope is required".into(),
        ));
    }
    let period = cf.period();
    let etas: Vec<QuadExt> =
        (0..period.len()).map(|i| eta_limit(period, i)).collect::<Result<_>>()?;
    let phases = phase_values(&etas)?;
    let mut argmins: Vec<(usize, ArgminKind)> = Vec::new();
    let mut best: Option<QuadExt> = None;
    for v in &phases {
        for (kind, value) in [(ArgminKind::Zeta, &v.zeta), (ArgminKind::Xi, &v.xi)] {
            match &best {
                None => {
                    best = Some(value.clone());
                    argmins.push((v.phase, kind));
                }
                Some(b) => match value.cmp_exact(b)? {
                    Ordering::Less => {
                        best = Some(value.clone());
                        argmins.clear();
                        argmins.push((v.phase, kind));
                    }
                    Ordering::Equal => argmins.push((v.phase, kind)),
                    Ordering::Greater => {}
                },
            }
        }
    }
    let (argmin_phase, argmin_kind) = argmins[0];
    Ok(ExactRepResult {
        value: best.unwrap(),
        argmin_phase,
        argmin_kind,
        argmins,
        phases,
        extrapolated: !proven_family(period),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts;
    use crate::exact::{within_pow10, Rational};
    use crate::spectrum::evalues::{gamma, tau, SpectrumFamily};

    fn cf(text: &str) -> ContinuedFraction {
        ContinuedFraction::parse(text).unwrap()
    }

    #[test]
    fn three_period_attains_the_maximum() {
        let result = rep_exact_case2(&cf("0;(2,1,1)")).unwrap();
        assert_eq!(result.value, consts::r_max());
        assert_eq!(result.argmin_phase, 0);
        assert_eq!(result.argmin_kind, ArgminKind::Zeta);
        assert_eq!(result.argmins.len(), 1);
        assert!(!result.extrapolated);
    }

    #[test]
    fn seven_period_attains_the_floor_value() {
        let result = rep_exact_case2(&cf("0;(2,1,1,2,1,1,1)")).unwrap();
        assert_eq!(result.value, consts::r_2());
        assert_eq!(result.argmin_phase, 0);
        assert_eq!(result.argmin_kind, ArgminKind::Zeta);
        assert!(!result.extrapolated);
        // Intermediate anchors: the phase-0 η-limit and t-limit.
        let p0 = &result.phases[0];
        assert_eq!(p0.eta, QuadExt::new(-37, 5, 38, 149).unwrap());
        assert_eq!(p0.t, QuadExt::new(1568, -45, 1159, 149).unwrap());
        // The minimum over the ξ side alone is 7(85 − √149)/305.
        let xi_min = result
            .phases
            .iter()
            .map(|p| p.xi.clone())
            .min_by(|a, b| a.cmp_exact(b).unwrap())
            .unwrap();
        assert_eq!(xi_min, QuadExt::new(595, -7, 305, 149).unwrap());
    }

    #[test]
    fn family_values_match_the_direct_limits() {
        // The e-value table is exactly the η-limit table of the period
        // (2,1,1)^n,2,1,1,1, phase by phase.
        for n in 1..=4usize {
            let mut period = Vec::new();
            for _ in 0..n {
                period.extend_from_slice(&[2, 1, 1]);
            }
            period.extend_from_slice(&[2, 1, 1, 1]);
            let family = SpectrumFamily::new(n).unwrap();
            for d in 0..period.len() {
                assert_eq!(
                    family.eta_star(d),
                    &eta_limit(&period, d).unwrap(),
                    "n = {n}, phase {d}"
                );
            }
            // Hence the two computation paths agree in full.
            let via_family = zeta_xi_all(n).unwrap();
            let via_limits =
                rep_exact_case2(&ContinuedFraction::new(0, vec![], period).unwrap()).unwrap();
            for (i, (z, x)) in via_family.iter().enumerate() {
                assert_eq!(z, &via_limits.phases[i].zeta);
                assert_eq!(x, &via_limits.phases[i].xi);
            }
        }
    }

    #[test]
    fn n_equals_one_family_gives_the_floor_value() {
        let values = zeta_xi_all(1).unwrap();
        let min = values
            .iter()
            .flat_map(|(z, x)| [z.clone(), x.clone()])
            .min_by(|a, b| a.cmp_exact(b).unwrap())
            .unwrap();
        assert_eq!(min, consts::r_2());
        assert_eq!(values[0].0, consts::r_2());
    }

    #[test]
    fn lambda_matches_its_product_recurrence() {
        // λ_j(m) = σ_j(m) + τ_j(m)(λ_j(m−1) − χ_j(m−1)) where τ_j and σ_j
        // are the leading window products and χ_j the last three terms of
        // the previous window sum.
        for n in 1..=5usize {
            let family = SpectrumFamily::new(n).unwrap();
            let etas = family.eta_stars();
            let l = etas.len();
            let c = |phase: usize, t: usize| &etas[(phase + l - t % l) % l];
            let prefix_products = |phase: usize| -> Vec<QuadExt> {
                let mut prods = Vec::with_capacity(l + 1);
                let mut acc = QuadExt::one();
                for t in 0..=l {
                    acc = &acc * c(phase, t);
                    prods.push(acc.clone());
                }
                prods
            };
            for j in 0..3usize {
                for m in 1..=n {
                    let phase = 3 * m + j;
                    let prev_phase = 3 * (m - 1) + j;
                    let lambda_m = lambda_window(&etas, phase).unwrap();
                    let lambda_prev = lambda_window(&etas, prev_phase).unwrap();
                    // Leading products of the current window.
                    let prods = prefix_products(phase);
                    let sigma = &(&prods[1] + &prods[2]) + &prods[3];
                    let tau3 = prods[2].clone();
                    // Last three summands of the previous window.
                    let prev = prefix_products(prev_phase);
                    let chi = &(&prev[l - 2] + &prev[l - 1]) + &prev[l];
                    let rhs = &sigma + &(&tau3 * &(&lambda_prev - &chi));
                    assert_eq!(lambda_m, rhs, "n={n} j={j} m={m}");
                }
            }
        }
    }

    #[test]
    fn lambda_at_phase_zero_factors_through_gamma() {
        for n in 1..=6usize {
            let family = SpectrumFamily::new(n).unwrap();
            let etas = family.eta_stars();
            let lambda0 = lambda_window(&etas, 0).unwrap();
            let expect = &(family.e(0, 0) * family.e(0, n + 1)) * &gamma(&family, n);
            assert_eq!(lambda0, expect, "n = {n}");
        }
    }

    #[test]
    fn nu_is_small_and_factors_through_tau() {
        // ν = Π η* equals e_0(n+1)·Π_{m≤n} τ(m) and stays below (3/4)^(3n+4).
        for n in 1..=6usize {
            let family = SpectrumFamily::new(n).unwrap();
            let mut nu = QuadExt::one();
            for e in family.eta_stars() {
                nu = &nu * &e;
            }
            let mut factored = family.e(0, n + 1).clone();
            for m in 0..=n {
                factored = &factored * &tau(&family, m);
            }
            assert_eq!(nu, factored, "n = {n}");
            let cap =
                QuadExt::from_ratio(&Rational::new(3.into(), 4.into())).pow_u(3 * n as u32 + 4);
            assert_eq!(nu.cmp_exact(&cap).unwrap(), Ordering::Less);
            assert_eq!(nu.sign(), Ordering::Greater);
        }
    }

    #[test]
    fn phase_zero_values_converge_to_the_gap_edge() {
        // ζ_0^(n) → r_1; at n = 20 the distance is below 1e-3.
        let (zeta, _) = zeta_xi(20, 0).unwrap();
        assert!(within_pow10(&zeta, &consts::r_1(), 3).unwrap());
        // λ_0 anchors: λ_0(0) → (10+√10)/15 and λ_0(1) → (19+√10)/27.
        let family = SpectrumFamily::new(25).unwrap();
        let etas = family.eta_stars();
        let lambda0 = lambda_window(&etas, 0).unwrap();
        let lambda1 = lambda_window(&etas, 3).unwrap();
        assert!(within_pow10(&lambda0, &QuadExt::new(10, 1, 15, 10).unwrap(), 6).unwrap());
        assert!(within_pow10(&lambda1, &QuadExt::new(19, 1, 27, 10).unwrap(), 6).unwrap());
    }

    #[test]
    fn extrapolation_flag() {
        assert!(!rep_exact_case2(&cf("0;(1,1,2)")).unwrap().extrapolated);
        assert!(!rep_exact_case2(&cf("0;(1,1,2,1,1,2,1)")).unwrap().extrapolated);
        assert!(rep_exact_case2(&cf("0;(1,2)")).unwrap().extrapolated);
        assert!(rep_exact_case2(&cf("0;(3,1)")).unwrap().extrapolated);
    }
}
