//! Exact spectrum machinery: propagation of the normalized state
//! `(t, η) = (|W_k|/q_k, q_{k-1}/q_k)` under partial-quotient patterns, the
//! two ratio bounds driven by that state, certified pattern-exclusion
//! bounds, the closed-form family converging to the gap edge, the
//! `e`-value algebra, exact repetition exponents of case-2 words with
//! eventually periodic slopes, and the integer-matrix cross-checks.

mod evalues;
mod matrices;
mod report;
mod zetaxi;

pub use evalues::{
    a_closed_form_check, e_value, e_value_direct, gamma, interlacing_check, sigma, step_matrix,
    tau, SpectrumFamily, SpectrumIndex,
};
pub use matrices::{
    discriminant_congruence, discriminant_congruence_range, hn_cross_check, q10_exclusion,
    DiscCongruence, HnCheck, MobiusMap,
};
pub use report::{Check, CheckStatus, IntJson, QuadJson, Report};
pub use zetaxi::{rep_exact_case2, zeta_xi, zeta_xi_all, ArgminKind, ExactRepResult, PhaseValues};

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::exact::{Integer, QuadExt};
use crate::{Error, Result};

/// The normalized pair driving every bound: `t = |W_k|/q_k` and
/// `η = q_{k-1}/q_k`, as exact scalars (rationals embed in [`QuadExt`]).
/// The small term `ε_k = 2/q_k` is not part of the state; it is attached
/// separately where a concrete `k` exists and vanishes in every limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundState {
    pub t: QuadExt,
    pub eta: QuadExt,
}

impl BoundState {
    pub fn new(t: QuadExt, eta: QuadExt) -> Result<Self> {
        if t.sign() == Ordering::Less {
            return Err(Error::InvalidArgument("t must be nonnegative".into()));
        }
        if eta.sign() == Ordering::Less || eta.cmp_exact(&QuadExt::one())? == Ordering::Greater {
            return Err(Error::InvalidArgument("eta must lie in [0, 1]".into()));
        }
        Ok(Self { t, eta })
    }
}

/// Appends partial quotients to the state, left to right: each digit `a`
/// maps `η ← 1/(a + η)` and `t ← η_new·(t + η_old)`.
pub fn propagate_state(state: &BoundState, digits: &[u64]) -> Result<BoundState> {
    let mut t = state.t.clone();
    let mut eta = state.eta.clone();
    for &a in digits {
        if a == 0 {
            return Err(Error::InvalidArgument("partial quotients must be positive".into()));
        }
        let eta_new = QuadExt::from_int(Integer::from(a)).checked_add(&eta)?.recip()?;
        t = eta_new.checked_mul(&t.checked_add(&eta)?)?;
        eta = eta_new;
    }
    Ok(BoundState { t, eta })
}

/// `1 + (1 + η)/(t + 1 + η)` — the ratio bound at index
/// `|W_k| + q_k + q_{k-1} − 2`, without its vanishing `ε_k` term.
pub fn bound_b1(state: &BoundState) -> QuadExt {
    let one = QuadExt::one();
    let num = &one + &state.eta;
    &one + &(&num / &(&state.t + &num))
}

/// `1 + (t + η)/(1 + η)` — the ratio bound at index `q_k + q_{k-1} − 2`,
/// without its vanishing `ε_k` term.
pub fn bound_b2(state: &BoundState) -> QuadExt {
    let one = QuadExt::one();
    &one + &(&(&state.t + &state.eta) / &(&one + &state.eta))
}

/// Integer coefficients of the state after a pattern of quotients, as a
/// function of the initial `(t, η)` one index before the pattern:
///
/// * `η_after = (a_prev + b_prev·η) / (a + b·η)`
/// * `t_after = (t + sum_a + sum_b·η) / (a + b·η)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternState {
    pub a: Integer,
    pub b: Integer,
    pub a_prev: Integer,
    pub b_prev: Integer,
    pub sum_a: Integer,
    pub sum_b: Integer,
}

/// Symbolic counterpart of [`propagate_state`].
pub fn propagate_pattern(digits: &[u64]) -> Result<PatternState> {
    if digits.is_empty() {
        return Err(Error::InvalidArgument("empty pattern".into()));
    }
    // Coordinates in the basis (q_{k-1}, q_{k-2}).
    let (mut a_prev, mut b_prev) = (Integer::zero(), Integer::one());
    let (mut a, mut b) = (Integer::one(), Integer::zero());
    let (mut sum_a, mut sum_b) = (Integer::zero(), Integer::zero());
    for &d in digits {
        if d == 0 {
            return Err(Error::InvalidArgument("partial quotients must be positive".into()));
        }
        sum_a += &a_prev;
        sum_b += &b_prev;
        let next_a = Integer::from(d) * &a + &a_prev;
        let next_b = Integer::from(d) * &b + &b_prev;
        a_prev = std::mem::replace(&mut a, next_a);
        b_prev = std::mem::replace(&mut b, next_b);
    }
    Ok(PatternState { a, b, a_prev, b_prev, sum_a, sum_b })
}

/// Which bound derives the `t`-constraint from the threshold and which one
/// is evaluated after the pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExclusionMode {
    /// Threshold through `B2` gives a lower bound on `t`; the pattern is
    /// then evaluated under `B1` (which decreases in `t`).
    B2ThenB1,
    /// Threshold through `B1` gives an upper bound on `t`; the pattern is
    /// then evaluated under `B2` (which increases in `t`).
    B1ThenB2,
}

/// A certified pattern-exclusion bound: the worst-case (over the free
/// initial `η ∈ [0, 1]`) value of the post-pattern ratio bound, with the
/// monotonicity certificate and both endpoint values reported.
#[derive(Clone, Debug)]
pub struct PatternBound {
    pub pattern: Vec<u64>,
    pub mode: ExclusionMode,
    pub threshold: QuadExt,
    /// Value at the certified worst-case endpoint.
    pub value: QuadExt,
    pub at_eta_zero: QuadExt,
    pub at_eta_one: QuadExt,
    /// `Greater`: bound increases in `η` (worst at 1); `Less`: decreases
    /// (worst at 0); `Equal`: constant.
    pub monotonicity: Ordering,
    /// Whether `value < threshold`, certifying that the pattern cannot
    /// occur in slopes whose words repeat above the threshold.
    pub excluded: bool,
}

/// Replicates the two-step exclusion argument: derive the `t`-constraint at
/// the pre-pattern index from the threshold via one ratio bound, propagate
/// the pattern symbolically, and evaluate the other bound at the worst-case
/// `η` endpoint. The worst endpoint is certified by the sign of the Möbius
/// determinant of the bound as a function of `η`; if the denominator is not
/// positive across `[0, 1]` the certificate fails and both endpoints are
/// reported in the error, never silently picked.
pub fn pattern_exclusion_bound(
    pattern: &[u64],
    threshold: &QuadExt,
    mode: ExclusionMode,
) -> Result<PatternBound> {
    if pattern.is_empty() {
        return Err(Error::InvalidArgument("empty pattern".into()));
    }
    if pattern.iter().any(|&d| d != 1 && d != 2) {
        return Err(Error::InvalidArgument(
            "exclusion patterns use partial quotients in {1, 2}".into(),
        ));
    }
    if threshold.cmp(&crate::consts::golden_ratio())? != Ordering::Greater {
        return Err(Error::InvalidArgument("the threshold must exceed the golden ratio".into()));
    }
    let ps = propagate_pattern(pattern)?;
    let one = QuadExt::one();
    let theta_bar = threshold.checked_sub(&one)?;
    // t-constraint at the pre-pattern index: t ≷ T0 + T1·η.
    let (t0, t1) = match mode {
        ExclusionMode::B2ThenB1 => (theta_bar.clone(), theta_bar.checked_sub(&one)?),
        ExclusionMode::B1ThenB2 => {
            let c = one.checked_sub(&theta_bar)?.checked_div(&theta_bar)?;
            (c.clone(), c)
        }
    };
    let int = |x: &Integer| QuadExt::from_int(x.clone());
    // The final bound is 1 + N(η)/M(η) with N, M linear in η.
    let (n0, n1, m0, m1) = match mode {
        ExclusionMode::B2ThenB1 => {
            let n0 = int(&(&ps.a + &ps.a_prev));
            let n1 = int(&(&ps.b + &ps.b_prev));
            let m0 = &(&t0 + &int(&ps.sum_a)) + &n0;
            let m1 = &(&t1 + &int(&ps.sum_b)) + &n1;
            (n0, n1, m0, m1)
        }
        ExclusionMode::B1ThenB2 => {
            let n0 = &(&t0 + &int(&ps.sum_a)) + &int(&ps.a_prev);
            let n1 = &(&t1 + &int(&ps.sum_b)) + &int(&ps.b_prev);
            let m0 = int(&(&ps.a + &ps.a_prev));
            let m1 = int(&(&ps.b + &ps.b_prev));
            (n0, n1, m0, m1)
        }
    };
    let m_at_one = m0.checked_add(&m1)?;
    if m0.sign() != Ordering::Greater || m_at_one.sign() != Ordering::Greater {
        return Err(Error::MonotonicityCertificate(format!(
            "denominator changes sign on [0, 1]: M(0) = {m0}, M(1) = {m_at_one}"
        )));
    }
    let at_eta_zero = one.checked_add(&n0.checked_div(&m0)?)?;
    let at_eta_one = one.checked_add(&n0.checked_add(&n1)?.checked_div(&m_at_one)?)?;
    let det = n1.checked_mul(&m0)?.checked_sub(&n0.checked_mul(&m1)?)?;
    let monotonicity = det.sign();
    let value = match monotonicity {
        Ordering::Greater => at_eta_one.clone(),
        _ => at_eta_zero.clone(),
    };
    let excluded = value.cmp(threshold)? == Ordering::Less;
    Ok(PatternBound {
        pattern: pattern.to_vec(),
        mode,
        threshold: threshold.clone(),
        value,
        at_eta_zero,
        at_eta_one,
        monotonicity,
        excluded,
    })
}

/// `p = 3 − √10` and `q = 3 + √10`, the eigenvalues of the three-step
/// growth matrix.
pub fn eigen_pair() -> (QuadExt, QuadExt) {
    (QuadExt::new(3, -1, 1, 10).unwrap(), QuadExt::new(3, 1, 1, 10).unwrap())
}

/// The closed-form upper bound for the slope family with `n` repetitions of
/// the three-block, evaluated exactly at the worst case `η = 0`.
/// Monotonically increasing in `n` with limit [`prop25_limit`].
pub fn prop25_term(n: u32) -> QuadExt {
    prop25_term_at_eta(n, &QuadExt::zero())
}

/// The same bound as a function of the free `η ≥ 0`; decreasing in `η`.
pub fn prop25_term_at_eta(n: u32, eta: &QuadExt) -> QuadExt {
    let (a, b) = prop25_numer_denom(n, eta);
    QuadExt::one() + a / b
}

fn prop25_numer_denom(n: u32, eta: &QuadExt) -> (QuadExt, QuadExt) {
    let (p, q) = eigen_pair();
    let (pn, qn) = (p.pow_u(n), q.pow_u(n));
    let lin = |c0: i64, c1: i64| QuadExt::new(c0, c1, 1, 10).unwrap();
    let a_const = (lin(-66, 21) * &pn + lin(66, 21) * &qn) * QuadExt::from_int(93);
    let a_eta = (lin(-25, 8) * &pn + lin(25, 8) * &qn) * QuadExt::from_int(93);
    let b_const = lin(60, 40) + (lin(-304, 97) * &pn + lin(304, 97) * &qn) * QuadExt::from_int(31);
    let b_eta = lin(60, 40) + (lin(-115, 37) * &pn + lin(115, 37) * &qn) * QuadExt::from_int(31);
    (&a_const + &(&a_eta * eta), &b_const + &(&b_eta * eta))
}

/// Exact limit of [`prop25_term`]: the dominant-eigenvalue ratio
/// `1 + 93(66 + 21√10) / (31(304 + 97√10))`, which equals the gap edge.
pub fn prop25_limit() -> QuadExt {
    let num = QuadExt::new(66, 21, 1, 10).unwrap() * QuadExt::from_int(93);
    let den = QuadExt::new(304, 97, 1, 10).unwrap() * QuadExt::from_int(31);
    QuadExt::one() + num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts;
    use crate::exact::Rational;

    fn rat(n: i64, d: i64) -> QuadExt {
        QuadExt::from_ratio(&Rational::new(n.into(), d.into()))
    }

    /// Decimal rendering truncated (not rounded) to `digits` places, the
    /// convention the reference values are quoted in.
    fn truncated(v: &QuadExt, digits: usize) -> String {
        let s = v.to_decimal_string(12);
        let dot = s.find('.').unwrap();
        s[..dot + 1 + digits].to_string()
    }

    #[test]
    fn propagation_matches_symbolic_coefficients() {
        // 2,1,1,1,1: η' = (8+3η)/(13+5η), t' = (t+11+5η)/(13+5η).
        let ps = propagate_pattern(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(
            (ps.a.clone(), ps.b.clone(), ps.a_prev.clone(), ps.b_prev.clone()),
            (13.into(), 5.into(), 8.into(), 3.into())
        );
        assert_eq!((ps.sum_a.clone(), ps.sum_b.clone()), (11.into(), 5.into()));

        // 1,2,1,2,1,2: η' = (15+11η)/(41+30η), t' = (t+20+15η)/(41+30η).
        let ps = propagate_pattern(&[1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!((ps.a_prev.clone(), ps.b_prev.clone()), (15.into(), 11.into()));
        assert_eq!((ps.a.clone(), ps.b.clone()), (41.into(), 30.into()));
        assert_eq!((ps.sum_a.clone(), ps.sum_b.clone()), (20.into(), 15.into()));

        // The numeric engine agrees at rational sample points.
        for (t, eta) in [(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 2)), (rat(71, 129), rat(1, 1))]
        {
            for pattern in
                [&[2u64, 1, 1, 1, 1][..], &[1, 2, 1, 2, 1, 2][..], &[1, 2, 1, 1, 2, 1, 2][..]]
            {
                let ps = propagate_pattern(pattern).unwrap();
                let state = BoundState::new(t.clone(), eta.clone()).unwrap();
                let out = propagate_state(&state, pattern).unwrap();
                let int = |x: &Integer| QuadExt::from_int(x.clone());
                let denom = &int(&ps.a) + &(&int(&ps.b) * &eta);
                let eta_sym = (&int(&ps.a_prev) + &(&int(&ps.b_prev) * &eta)) / &denom;
                let t_sym = (&(&t + &int(&ps.sum_a)) + &(&int(&ps.sum_b) * &eta)) / &denom;
                assert_eq!(out.eta, eta_sym);
                assert_eq!(out.t, t_sym);
            }
        }

        // Empty digit list leaves the state untouched.
        let s = BoundState::new(rat(1, 3), rat(2, 5)).unwrap();
        assert_eq!(propagate_state(&s, &[]).unwrap(), s);
    }

    #[test]
    fn ratio_bounds() {
        let degenerate = BoundState::new(QuadExt::zero(), QuadExt::zero()).unwrap();
        assert_eq!(bound_b1(&degenerate), QuadExt::from_int(2));
        let s = BoundState::new(QuadExt::zero(), rat(1, 2)).unwrap();
        assert_eq!(bound_b2(&s), QuadExt::one() + rat(1, 3));
    }

    #[test]
    fn exclusion_bound_for_the_five_digit_pattern() {
        // Threshold r_3, constraint through B2, evaluation through B1 at
        // the worst case η = 0: 1 + 47817/(74325 + 4φ) ≈ 1.64329.
        let b = pattern_exclusion_bound(&[2, 1, 1, 1, 1], &consts::r_3(), ExclusionMode::B2ThenB1)
            .unwrap();
        let phi = consts::golden_ratio();
        let expect = QuadExt::one()
            + QuadExt::from_int(47817) / (QuadExt::from_int(74325) + QuadExt::from_int(4) * phi);
        assert_eq!(b.value, expect);
        assert_eq!(b.monotonicity, Ordering::Less);
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 5), "1.64329");
    }

    #[test]
    fn exclusion_bounds_for_alternating_patterns() {
        // 121212 at threshold 1.645 via B1-then-B2, worst at η = 1:
        // 20524/12513 ≈ 1.6402.
        let t = rat(1645, 1000);
        let b = pattern_exclusion_bound(&[1, 2, 1, 2, 1, 2], &t, ExclusionMode::B1ThenB2).unwrap();
        assert_eq!(b.value, rat(20524, 12513));
        assert_eq!(b.monotonicity, Ordering::Greater);
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 4), "1.6402");

        // 1211212 at the same threshold: 1697/1032 ≈ 1.6443.
        let b =
            pattern_exclusion_bound(&[1, 2, 1, 1, 2, 1, 2], &t, ExclusionMode::B1ThenB2).unwrap();
        assert_eq!(b.value, rat(1697, 1032));
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 4), "1.6443");
    }

    #[test]
    fn exclusion_bounds_at_the_spectrum_floor() {
        let r2 = consts::r_2();
        let sqrt149 = QuadExt::sqrt_of(149).unwrap();
        // 21112111 via B2-then-B1: 1 + 185502/(280593 + 415√149) ≈ 1.64938.
        let b = pattern_exclusion_bound(&[2, 1, 1, 1, 2, 1, 1, 1], &r2, ExclusionMode::B2ThenB1)
            .unwrap();
        let expect = QuadExt::one()
            + QuadExt::from_int(185502)
                / (QuadExt::from_int(280593) + QuadExt::from_int(415) * &sqrt149);
        assert_eq!(b.value, expect);
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 5), "1.64938");

        // 2111212111212 via B1-then-B2: (27135284 + 415√149)/16466401 ≈ 1.6482.
        let b = pattern_exclusion_bound(
            &[2, 1, 1, 1, 2, 1, 2, 1, 1, 1, 2, 1, 2],
            &r2,
            ExclusionMode::B1ThenB2,
        )
        .unwrap();
        let expect = (QuadExt::from_int(27135284) + QuadExt::from_int(415) * &sqrt149)
            / QuadExt::from_int(16466401);
        assert_eq!(b.value, expect);
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 4), "1.6482");

        // 2112111212 via B1-then-B2: (4529477 + 415√149)/2749880 ≈ 1.6489.
        let b = pattern_exclusion_bound(
            &[2, 1, 1, 2, 1, 1, 1, 2, 1, 2],
            &r2,
            ExclusionMode::B1ThenB2,
        )
        .unwrap();
        let expect = (QuadExt::from_int(4529477) + QuadExt::from_int(415) * &sqrt149)
            / QuadExt::from_int(2749880);
        assert_eq!(b.value, expect);
        assert!(b.excluded);
        assert_eq!(truncated(&b.value, 4), "1.6489");
    }

    #[test]
    fn exclusion_rejects_low_thresholds_and_bad_patterns() {
        assert!(pattern_exclusion_bound(&[], &consts::r_2(), ExclusionMode::B2ThenB1).is_err());
        assert!(pattern_exclusion_bound(&[3, 1], &consts::r_2(), ExclusionMode::B2ThenB1).is_err());
        assert!(pattern_exclusion_bound(&[2, 1], &rat(3, 2), ExclusionMode::B2ThenB1).is_err());
    }

    #[test]
    fn closed_form_family_increases_to_the_gap_edge() {
        assert_eq!(prop25_limit(), consts::r_1());
        let mut prev = prop25_term(1);
        for n in 2..=12 {
            let cur = prop25_term(n);
            assert_eq!(prev.cmp_exact(&cur).unwrap(), Ordering::Less, "n = {n}");
            assert_eq!(cur.cmp_exact(&consts::r_1()).unwrap(), Ordering::Less);
            prev = cur;
        }
        // Decreasing in η: compare the endpoints η = 0 and η = 1.
        for n in 1..=6 {
            let hi = prop25_term_at_eta(n, &QuadExt::zero());
            let lo = prop25_term_at_eta(n, &QuadExt::one());
            assert_eq!(lo.cmp_exact(&hi).unwrap(), Ordering::Less, "n = {n}");
        }
    }

    #[test]
    fn closed_form_family_agrees_with_the_generic_machinery() {
        // The pattern 2111(211)^n 1 under the gap-edge threshold,
        // B2-then-B1, worst η = 0, reproduces the closed form exactly.
        for n in 1..=6u32 {
            let mut pattern = vec![2, 1, 1, 1];
            for _ in 0..n {
                pattern.extend_from_slice(&[2, 1, 1]);
            }
            pattern.push(1);
            let b = pattern_exclusion_bound(&pattern, &consts::r_1(), ExclusionMode::B2ThenB1)
                .unwrap();
            assert_eq!(b.value, prop25_term(n), "n = {n}");
            assert_eq!(b.monotonicity, Ordering::Less);
        }
    }
}
