//! Continued fractions: expansion data, convergents, exact evaluation of
//! eventually periodic expansions, and the limits of the ratios
//! `η_k = q_{k-1}/q_k` along residue classes of the period.
//!
//! A value is `a0 + 1/(a1 + 1/(a2 + …))` with partial quotients `a_k ≥ 1`
//! for `k ≥ 1`. The period, when present, is stored exactly as given —
//! rotations are semantically distinct because the phase of the period
//! indexes everything downstream.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{Integer, QuadExt, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    a0: Integer,
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

/// One step of the convergent recurrence: `(p_{k-1}, q_{k-1})` and
/// `(p_k, q_k)` with `p_k q_{k-1} − p_{k-1} q_k = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub k: usize,
    pub p_prev: Integer,
    pub q_prev: Integer,
    pub p: Integer,
    pub q: Integer,
}

impl ContinuedFraction {
    pub fn new<A: Into<Integer>>(a0: A, preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        let mut preperiod = preperiod;
        if preperiod.iter().chain(period.iter()).any(|&a| a == 0) {
            return Err(Error::InvalidContinuedFraction(
                "partial quotients with index >= 1 must be positive".into(),
            ));
        }
        // Canonical finite form: a trailing quotient 1 folds into its
        // predecessor (except for the length-1 expansion).
        if period.is_empty() {
            while preperiod.len() > 1 && *preperiod.last().unwrap() == 1 {
                preperiod.pop();
                *preperiod.last_mut().unwrap() += 1;
            }
        }
        Ok(Self { a0: a0.into(), preperiod, period })
    }

    /// Purely periodic expansion `[0; (period)]`.
    pub fn periodic(period: Vec<u64>) -> Result<Self> {
        Self::new(0, Vec::new(), period)
    }

    /// Parses the textual grammar `a0;d,d,…,(d,d,…)`. Whitespace is
    /// ignored; both the preperiod and the parenthesized period are
    /// optional; quotients are arbitrary positive integers.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidContinuedFraction(format!("{msg}: {text:?}"));
        let (head, tail) = match s.split_once(';') {
            Some((h, t)) => (h, t),
            None => (s.as_str(), ""),
        };
        let a0: Integer = head.parse().map_err(|_| bad("invalid integer part"))?;
        let parse_csv = |csv: &str| -> Result<Vec<u64>> {
            if csv.is_empty() {
                return Ok(Vec::new());
            }
            csv.split(',')
                .map(|tok| tok.parse::<u64>().map_err(|_| bad("invalid partial quotient")))
                .collect()
        };
        let (pre, per) = match tail.find('(') {
            None => {
                if tail.contains(')') {
                    return Err(bad("unmatched parenthesis"));
                }
                (parse_csv(tail)?, Vec::new())
            }
            Some(open) => {
                let Some(close) = tail.rfind(')') else {
                    return Err(bad("unmatched parenthesis"));
                };
                if close != tail.len() - 1 || close < open {
                    return Err(bad("period must close the expression"));
                }
                let pre_part = tail[..open].trim_end_matches(',');
                let per = parse_csv(&tail[open + 1..close])?;
                if per.is_empty() {
                    return Err(bad("empty period"));
                }
                (parse_csv(pre_part)?, per)
            }
        };
        Self::new(a0, pre, per)
    }

    pub fn a0(&self) -> &Integer {
        &self.a0
    }
    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }
    pub fn period(&self) -> &[u64] {
        &self.period
    }
    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }
    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Number of partial quotients `a_k`, `k ≥ 1`, for finite expansions.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.preperiod.len())
    }

    /// The partial quotient `a_k` for `k ≥ 1`; `None` past a finite end.
    pub fn quotient(&self, k: usize) -> Option<u64> {
        debug_assert!(k >= 1);
        let i = k - 1;
        if i < self.preperiod.len() {
            Some(self.preperiod[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.preperiod.len()) % self.period.len()])
        }
    }

    /// Exact `(p_k, q_k)` for `k = 0..=k_max` via the standard recurrence
    /// seeded with `(p_0, q_0) = (a_0, 1)` and `(p_{-1}, q_{-1}) = (1, 0)`.
    pub fn convergents(&self, k_max: usize) -> Result<Vec<ConvergentPair>> {
        let mut out = Vec::with_capacity(k_max + 1);
        let (mut p_prev, mut q_prev) = (Integer::one(), Integer::zero());
        let (mut p, mut q) = (self.a0.clone(), Integer::one());
        out.push(ConvergentPair {
            k: 0,
            p_prev: p_prev.clone(),
            q_prev: q_prev.clone(),
            p: p.clone(),
            q: q.clone(),
        });
        for k in 1..=k_max {
            let a = self.quotient(k).ok_or_else(|| {
                Error::OutOfRange(format!("convergent {k} requested past a finite expansion"))
            })?;
            let a = Integer::from(a);
            let p_next = &a * &p + &p_prev;
            let q_next = &a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push(ConvergentPair {
                k,
                p_prev: p_prev.clone(),
                q_prev: q_prev.clone(),
                p: p.clone(),
                q: q.clone(),
            });
        }
        Ok(out)
    }

    /// Exact value. Finite expansions fold to a rational; eventually
    /// periodic ones solve the Möbius fixed point of the period matrix and
    /// fold the preperiod by a Möbius action.
    pub fn value(&self) -> Result<QuadExt> {
        if self.is_finite() {
            let conv = self.convergents(self.preperiod.len())?;
            let last = conv.last().unwrap();
            return QuadExt::new(last.p.clone(), Integer::zero(), last.q.clone(), Integer::one());
        }
        let tail = purely_periodic_value(&self.period)?;
        // theta = (p_m + p_{m-1}·x) / (q_m + q_{m-1}·x) with x the purely
        // periodic tail value in (0, 1).
        let conv = self.convergents(self.preperiod.len())?;
        let last = conv.last().unwrap();
        let p = QuadExt::from_int(last.p.clone());
        let p_prev = QuadExt::from_int(last.p_prev.clone());
        let q = QuadExt::from_int(last.q.clone());
        let q_prev = QuadExt::from_int(last.q_prev.clone());
        (&p + &(&p_prev * &tail)).checked_div(&(&q + &(&q_prev * &tail)))
    }

    /// Exact `η_k = q_{k-1}/q_k` for `k ≥ 1`. Debug builds cross-check the
    /// reversed-expansion identity `η_k = [0; a_k, a_{k-1}, …, a_1]`.
    pub fn eta(&self, k: usize) -> Result<Rational> {
        if k == 0 {
            return Err(Error::OutOfRange("eta is defined for k >= 1".into()));
        }
        let conv = self.convergents(k)?;
        let last = &conv[k];
        let eta = Rational::new(last.q_prev.clone(), last.q.clone());
        debug_assert_eq!(eta, self.eta_reversed(k), "reversed-expansion identity");
        Ok(eta)
    }

    /// `[0; a_k, a_{k-1}, …, a_1]` evaluated as a plain fraction.
    fn eta_reversed(&self, k: usize) -> Rational {
        let mut v = Rational::zero();
        for i in 1..=k {
            let a = Rational::from_integer(Integer::from(self.quotient(i).unwrap()));
            v = (a + v).recip();
        }
        v
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let csv = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match (self.preperiod.is_empty(), self.period.is_empty()) {
            (true, true) => write!(f, "{}", self.a0),
            (false, true) => write!(f, "{};{}", self.a0, csv(&self.preperiod)),
            (true, false) => write!(f, "{};({})", self.a0, csv(&self.period)),
            (false, false) => {
                write!(f, "{};{},({})", self.a0, csv(&self.preperiod), csv(&self.period))
            }
        }
    }
}

/// Value of the purely periodic expansion `[0; (period)]`: the root in
/// `(0, 1)` of the fixed-point quadratic of the period's integer matrix.
fn purely_periodic_value(period: &[u64]) -> Result<QuadExt> {
    if period.iter().any(|&a| a == 0) {
        return Err(Error::InvalidContinuedFraction(
            "partial quotients must be positive".into(),
        ));
    }
    // Bypass the canonical finite-form rewrite: convergents only need the
    // raw quotient list.
    let raw = ContinuedFraction { a0: Integer::zero(), preperiod: period.to_vec(), period: vec![] };
    let conv = raw.convergents(period.len())?;
    let last = &conv[period.len()];
    // Q_{L-1} x² + (Q_L − P_{L-1}) x − P_L = 0, positive root.
    let q_lm1 = &last.q_prev;
    let lin = &last.q - &last.p_prev;
    let disc = &lin * &lin + Integer::from(4) * q_lm1 * &last.p;
    QuadExt::new(-lin, Integer::one(), Integer::from(2) * q_lm1, disc)
}

/// Exact limit of `η_k` along the arithmetic progression `k ≡ phase`
/// (relative to the start of the period): the value of the purely periodic
/// expansion whose quotients read the period backwards starting just below
/// the phase position.
pub fn eta_limit(period: &[u64], phase: usize) -> Result<QuadExt> {
    if period.is_empty() {
        return Err(Error::InvalidContinuedFraction("empty period".into()));
    }
    if phase >= period.len() {
        return Err(Error::OutOfRange(format!(
            "phase {phase} out of range for period of length {}",
            period.len()
        )));
    }
    let len = period.len();
    let reversed: Vec<u64> = (0..len).map(|j| period[(phase + 2 * len - 1 - j) % len]).collect();
    purely_periodic_value(&reversed)
}

/// Expands an exact value back into a continued fraction by the floor /
/// reciprocal loop, detecting periodicity by exact state repetition. The
/// iteration cap guards against implementation bugs; eventually periodic
/// termination is guaranteed for quadratic irrationals.
pub fn expand(x: &QuadExt, max_steps: usize) -> Result<ContinuedFraction> {
    let a0 = x.floor();
    let mut frac = x.checked_sub(&QuadExt::from_int(a0.clone()))?;
    let mut quotients: Vec<u64> = Vec::new();
    let mut seen: HashMap<QuadExt, usize> = HashMap::new();
    while !frac.is_zero() {
        if quotients.len() >= max_steps {
            return Err(Error::OutOfRange(format!(
                "no repetition after {max_steps} expansion steps"
            )));
        }
        let state = frac.recip()?;
        if let Some(&start) = seen.get(&state) {
            let preperiod = quotients[..start].to_vec();
            let period = quotients[start..].to_vec();
            return ContinuedFraction::new(a0, preperiod, period);
        }
        seen.insert(state.clone(), quotients.len());
        let a = state.floor();
        let a_u64 = u64::try_from(&a).map_err(|_| {
            Error::OutOfRange("partial quotient exceeds 64 bits".into())
        })?;
        quotients.push(a_u64);
        frac = state.checked_sub(&QuadExt::from_int(a))?;
    }
    ContinuedFraction::new(a0, quotients, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn cf(text: &str) -> ContinuedFraction {
        ContinuedFraction::parse(text).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(cf("0;(2,1,1)").period(), &[2, 1, 1]);
        assert_eq!(cf("0;1,(1,1,2)").preperiod(), &[1]);
        assert_eq!(cf(" 0 ; ( 2,1 , 1,2,1,1,1 ) ").period(), &[2, 1, 1, 2, 1, 1, 1]);
        assert_eq!(cf("-1;2,3").to_string(), "-1;2,3");
        assert_eq!(cf("0;1,(1,1,2)").to_string(), "0;1,(1,1,2)");
        assert_eq!(cf("0;(12,345)").period(), &[12, 345]);
        assert!(ContinuedFraction::parse("0;(2,0,1)").is_err());
        assert!(ContinuedFraction::parse("0;(2,1").is_err());
        assert!(ContinuedFraction::parse("x;(2)").is_err());
        // Canonical finite form: trailing 1 folds.
        assert_eq!(cf("0;2,1,1").preperiod(), &[2, 2]);
        assert_eq!(cf("0;1").preperiod(), &[1]);
    }

    #[test]
    fn convergents_of_the_recurrence() {
        let c = cf("0;(2,1,1)");
        let conv = c.convergents(6).unwrap();
        let qs: Vec<i64> = conv.iter().map(|cp| i64::try_from(&cp.q).unwrap()).collect();
        assert_eq!(qs, vec![1, 2, 3, 5, 13, 18, 31]);
        assert_eq!(conv[0].p, Integer::from(0));
        assert_eq!(conv[0].q, Integer::from(1));
    }

    #[test]
    fn determinant_identity_on_random_expansions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let period: Vec<u64> = (0..rng.gen_range(1..6)).map(|_| rng.gen_range(1..5)).collect();
            let pre: Vec<u64> = (0..rng.gen_range(0..4)).map(|_| rng.gen_range(1..5)).collect();
            let c = ContinuedFraction::new(0, pre, period).unwrap();
            for cp in c.convergents(20).unwrap().iter().skip(1) {
                let det = &cp.p * &cp.q_prev - &cp.p_prev * &cp.q;
                let expect = if cp.k % 2 == 1 { 1 } else { -1 };
                assert_eq!(det, Integer::from(expect), "k = {}", cp.k);
            }
        }
    }

    #[test]
    fn exact_values_of_periodic_expansions() {
        assert_eq!(cf("0;(1,1,2)").value().unwrap(), QuadExt::new(-2, 1, 2, 10).unwrap());
        assert_eq!(cf("0;1,(1,1,2)").value().unwrap(), QuadExt::new(0, 1, 5, 10).unwrap());
        assert_eq!(cf("0;(2,1,1)").value().unwrap(), QuadExt::new(-2, 1, 3, 10).unwrap());
        // Finite expansions are rational.
        assert_eq!(
            cf("0;2,3").value().unwrap(),
            QuadExt::from_ratio(&Rational::new(3.into(), 7.into()))
        );
        assert_eq!(cf("0;(1)").value().unwrap(), QuadExt::new(-1, 1, 2, 5).unwrap());
    }

    #[test]
    fn eta_values_and_reversed_identity() {
        let c = cf("0;(2,1,1)");
        assert_eq!(c.eta(4).unwrap(), Rational::new(5.into(), 13.into()));
        assert_eq!(c.eta(1).unwrap(), Rational::new(1.into(), 2.into()));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let period: Vec<u64> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(1..4)).collect();
            let c = ContinuedFraction::new(0, vec![], period).unwrap();
            for k in 1..=15 {
                assert_eq!(c.eta(k).unwrap(), c.eta_reversed(k));
            }
        }
    }

    #[test]
    fn eta_limits_of_the_seven_period() {
        let period = [2u64, 1, 1, 2, 1, 1, 1];
        assert_eq!(eta_limit(&period, 0).unwrap(), QuadExt::new(-37, 5, 38, 149).unwrap());
        assert_eq!(eta_limit(&period, 1).unwrap(), QuadExt::new(-39, 5, 58, 149).unwrap());
        assert_eq!(
            eta_limit(&[2, 1, 1], 0).unwrap(),
            cf("0;(1,1,2)").value().unwrap()
        );
    }

    #[test]
    fn eta_converges_to_its_limit() {
        // |η_{kL+i} − limit| < 1e-6 once kL+i ≥ 40, checked exactly.
        let period = vec![2u64, 1, 1, 2, 1, 1, 1];
        let c = ContinuedFraction::new(0, vec![], period.clone()).unwrap();
        let tol = QuadExt::from_ratio(&Rational::new(1.into(), 1_000_000.into()));
        for k in 40..=60usize {
            let phase = k % period.len();
            let limit = eta_limit(&period, phase).unwrap();
            let eta = QuadExt::from_ratio(&c.eta(k).unwrap());
            let diff = eta.checked_sub(&limit).unwrap();
            let abs = if diff.sign() == std::cmp::Ordering::Less { -diff } else { diff };
            assert_eq!(abs.cmp_exact(&tol).unwrap(), std::cmp::Ordering::Less, "k = {k}");
        }
    }

    #[test]
    fn eta_bounded_by_three_quarters_on_small_quotient_tails() {
        let bound = Rational::new(3.into(), 4.into());
        for text in ["0;(2,1,1)", "0;(2,1,1,2,1,1,1)", "0;1,2,(2,1,1)"] {
            let c = cf(text);
            for k in 3..=40 {
                assert!(c.eta(k).unwrap() <= bound, "{text} k={k}");
            }
        }
    }

    #[test]
    fn value_round_trips_through_expansion() {
        for text in ["0;(2,1,1)", "0;(1,1,2)", "0;1,(1,1,2)", "0;(2,1,1,2,1,1,1)", "2;1,2,(3,1)"] {
            let c = cf(text);
            let v = c.value().unwrap();
            let back = expand(&v, 10_000).unwrap();
            assert_eq!(back.value().unwrap(), v, "{text}");
        }
        // Rational round trip terminates.
        let r = QuadExt::from_ratio(&Rational::new(22.into(), 7.into()));
        let back = expand(&r, 10_000).unwrap();
        assert_eq!(back.value().unwrap(), r);
    }
}
