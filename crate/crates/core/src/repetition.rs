//! The repetition function `r(n, x)` — the length of the shortest prefix of
//! `x` containing two (possibly overlapping) occurrences of some length-`n`
//! factor — plus trailing-window estimates of the repetition exponent
//! `liminf r(n, x)/n`, structural consistency reports and the map to the
//! irrationality exponent.
//!
//! Two engines compute the same profile:
//!
//! * [`r_profile_oracle`] scans the windows of each length in order of their
//!   end position and reports the first repeat — a direct reading of the
//!   definition, quadratic overall;
//! * [`r_profile_fast`] maintains an online suffix automaton and converts
//!   the repeated-suffix lengths `s(m)` into `r(n) = min{m : s(m) ≥ n}`,
//!   amortized near-linear.
//!
//! The two never share code; their exact agreement is part of the test
//! surface.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::contfrac::ContinuedFraction;
use crate::exact::{rational_decimal_string, Integer, QuadExt, Rational};
use crate::words::{classify_case, BinaryWord, CaseTag};
use crate::{Error, Result};

/// The sequence `r(1..=n_max)` computed from a finite prefix. Entries the
/// prefix cannot resolve are absent, never fabricated.
#[derive(Clone, Debug)]
pub struct RepProfile {
    r: Vec<Option<u64>>,
    sturmian_hits: Vec<u64>,
    source_length: usize,
}

impl RepProfile {
    fn from_r(r: Vec<Option<u64>>, source_length: usize) -> Self {
        let sturmian_hits = r
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                let n = (i + 1) as u64;
                (*v == Some(2 * n + 1)).then_some(n)
            })
            .collect();
        Self { r, sturmian_hits, source_length }
    }

    pub fn n_max(&self) -> usize {
        self.r.len()
    }

    /// `r(n)`, 1-based, if the source prefix resolved it.
    pub fn r(&self, n: usize) -> Option<u64> {
        self.r.get(n - 1).copied().flatten()
    }

    /// `r(n)/n` as an exact rational.
    pub fn ratio(&self, n: usize) -> Option<Rational> {
        self.r(n).map(|r| Rational::new(r.into(), (n as u64).into()))
    }

    /// The `n` with `r(n) = 2n + 1`.
    pub fn sturmian_hits(&self) -> &[u64] {
        &self.sturmian_hits
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn resolved(&self) -> usize {
        self.r.iter().filter(|v| v.is_some()).count()
    }

    /// CSV serialization: header `n,r_n,ratio`, one row per resolved `n`,
    /// ratio printed with 12 digits, round half to even.
    pub fn csv(&self) -> String {
        let mut out = String::from("n,r_n,ratio\n");
        for n in 1..=self.n_max() {
            if let Some(r) = self.r(n) {
                let ratio = Rational::new(r.into(), (n as u64).into());
                let _ = writeln!(out, "{n},{r},{}", rational_decimal_string(&ratio, 12));
            }
        }
        out
    }
}

/// Definitional engine: for each `n`, the windows of length `n` are scanned
/// by increasing end position `m`; the first window equal to an earlier one
/// yields `r(n) = m`. Window lookups use a rolling fingerprint with exact
/// packed-bit confirmation, so the output is exact.
pub fn r_profile_oracle(x: &BinaryWord, n_max: usize) -> RepProfile {
    const BASE: u64 = 0x9E37_79B9_7F4A_7C15;
    let len = x.len();
    let bits: Vec<u64> = x.iter().map(u64::from).collect();
    let mut r = vec![None; n_max];
    for n in 1..=n_max.min(len.saturating_sub(1)) {
        let mut top = 1u64; // BASE^(n-1)
        for _ in 1..n {
            top = top.wrapping_mul(BASE);
        }
        let mut fp = 0u64;
        for &b in &bits[..n] {
            fp = fp.wrapping_mul(BASE).wrapping_add(b);
        }
        let mut buckets: HashMap<u64, Vec<u32>> = HashMap::new();
        let mut found = None;
        let mut start = 0usize; // 0-based window start
        loop {
            if let Some(prior) = buckets.get(&fp) {
                if prior.iter().any(|&p| x.eq_range(p as usize, x, start, n)) {
                    found = Some((start + n) as u64);
                    break;
                }
            }
            buckets.entry(fp).or_default().push(start as u32);
            if start + n >= len {
                break;
            }
            fp = fp
                .wrapping_sub(bits[start].wrapping_mul(top))
                .wrapping_mul(BASE)
                .wrapping_add(bits[start + n]);
            start += 1;
        }
        r[n - 1] = found;
    }
    RepProfile::from_r(r, len)
}

/// Online suffix automaton over the binary alphabet.
struct SuffixAutomaton {
    next: Vec<[u32; 2]>,
    link: Vec<i32>,
    len: Vec<u32>,
    last: usize,
}

impl SuffixAutomaton {
    fn with_capacity(n: usize) -> Self {
        let mut sam = Self {
            next: Vec::with_capacity(2 * n + 2),
            link: Vec::with_capacity(2 * n + 2),
            len: Vec::with_capacity(2 * n + 2),
            last: 0,
        };
        sam.push_state(0, -1);
        sam
    }

    fn push_state(&mut self, len: u32, link: i32) -> usize {
        self.next.push([u32::MAX; 2]);
        self.len.push(len);
        self.link.push(link);
        self.next.len() - 1
    }

    /// Extends by one symbol and returns the length of the longest suffix of
    /// the extended string that also occurs elsewhere in it.
    fn extend(&mut self, c: usize) -> usize {
        let cur = self.push_state(self.len[self.last] + 1, -1);
        let mut p = self.last as i32;
        while p >= 0 && self.next[p as usize][c] == u32::MAX {
            self.next[p as usize][c] = cur as u32;
            p = self.link[p as usize];
        }
        if p < 0 {
            self.link[cur] = 0;
        } else {
            let q = self.next[p as usize][c] as usize;
            if self.len[p as usize] + 1 == self.len[q] {
                self.link[cur] = q as i32;
            } else {
                let clone = self.push_state(self.len[p as usize] + 1, self.link[q]);
                self.next[clone] = self.next[q];
                while p >= 0 && self.next[p as usize][c] == q as u32 {
                    self.next[p as usize][c] = clone as u32;
                    p = self.link[p as usize];
                }
                self.link[q] = clone as i32;
                self.link[cur] = clone as i32;
            }
        }
        self.last = cur;
        self.len[self.link[cur] as usize] as usize
    }
}

/// `s(m)` for `m = 1..=|x|`: the length of the longest suffix of `x[1..m]`
/// that occurs as a factor of `x[1..m−1]`. Overlaps are handled for free:
/// an earlier occurrence ends strictly before `m`.
pub fn repeated_suffix_lengths(x: &BinaryWord) -> Vec<usize> {
    let mut sam = SuffixAutomaton::with_capacity(x.len());
    x.iter().map(|b| sam.extend(b as usize)).collect()
}

/// Near-linear engine: `r(n) = min{m : s(m) ≥ n}` over the repeated-suffix
/// profile. Output is identical to [`r_profile_oracle`].
pub fn r_profile_fast(x: &BinaryWord, n_max: usize) -> RepProfile {
    let s = repeated_suffix_lengths(x);
    let mut r = vec![None; n_max];
    let mut best = 0usize;
    for (m0, &sm) in s.iter().enumerate() {
        if sm > best {
            let m = (m0 + 1) as u64;
            for n in best + 1..=sm.min(n_max) {
                r[n - 1] = Some(m);
            }
            best = sm;
            if best >= n_max {
                break;
            }
        }
    }
    RepProfile::from_r(r, x.len())
}

/// Finite-data proxy for the repetition exponent: the exact minimum of
/// `r(n)/n` over a trailing window, plus the record lows at run boundaries.
#[derive(Clone, Debug)]
pub struct RepEstimate {
    pub window_min: Rational,
    /// `(n, r(n)/n)` at each `n` where the next step jumps (`r(n+1) > r(n)+1`),
    /// i.e. at the local minima of the piecewise decreasing ratio.
    pub record_lows: Vec<(u64, Rational)>,
    pub window: (usize, usize),
}

/// Minimum of `r(n)/n` over `n ∈ [window_fraction·n_max, n_max]` in exact
/// rational arithmetic. Only resolved entries participate.
pub fn rep_estimate(profile: &RepProfile, window_fraction: &Rational) -> Result<RepEstimate> {
    if window_fraction <= &Rational::zero() || window_fraction >= &Rational::new(1.into(), 1.into())
    {
        return Err(Error::InvalidArgument("window fraction must lie in (0, 1)".into()));
    }
    let n_max = profile.n_max();
    let lo_exact = window_fraction * Rational::from_integer(Integer::from(n_max));
    let n_lo = usize::try_from(&lo_exact.ceil().to_integer())
        .map_err(|_| Error::InvalidArgument("window start overflows".into()))?
        .max(1);
    let mut window_min: Option<Rational> = None;
    for n in n_lo..=n_max {
        if let Some(ratio) = profile.ratio(n) {
            if window_min.as_ref().is_none_or(|m| ratio < *m) {
                window_min = Some(ratio);
            }
        }
    }
    let window_min = window_min.ok_or_else(|| {
        Error::InvalidArgument(format!("no resolved entries in window [{n_lo}, {n_max}]"))
    })?;
    let mut record_lows = Vec::new();
    for n in 1..n_max {
        if let (Some(rn), Some(rn1)) = (profile.r(n), profile.r(n + 1)) {
            if rn1 > rn + 1 {
                record_lows.push((n as u64, profile.ratio(n).unwrap()));
            }
        }
    }
    Ok(RepEstimate { window_min, record_lows, window: (n_lo, n_max) })
}

/// Structural report for a profile checked against the Sturmian laws:
/// `r(n) ≤ 2n + 1` with infinitely many equalities, and unit steps
/// everywhere else.
#[derive(Clone, Debug, Default)]
pub struct SturmianReport {
    /// `n` with `r(n) > 2n + 1` (word cannot be Sturmian).
    pub upper_violations: Vec<usize>,
    /// Count of `n` with `r(n) = 2n + 1`.
    pub hits: usize,
    /// `n ≥ 2` where `r(n) ≠ 2n + 1` yet `r(n) ≠ r(n−1) + 1`.
    pub step_violations: Vec<usize>,
    /// `n` violating `n + 1 ≤ r(n)` or `r(n+1) ≥ r(n) + 1`.
    pub monotone_violations: Vec<usize>,
}

impl SturmianReport {
    pub fn is_clean(&self) -> bool {
        self.upper_violations.is_empty()
            && self.step_violations.is_empty()
            && self.monotone_violations.is_empty()
    }
}

pub fn sturmian_check(profile: &RepProfile) -> SturmianReport {
    let mut report = SturmianReport::default();
    for n in 1..=profile.n_max() {
        let Some(rn) = profile.r(n) else { continue };
        if rn < (n as u64) + 1 {
            report.monotone_violations.push(n);
        }
        if let Some(rn1) = profile.r(n + 1) {
            if rn1 < rn + 1 {
                report.monotone_violations.push(n);
            }
        }
        if rn > 2 * (n as u64) + 1 {
            report.upper_violations.push(n);
        } else if rn == 2 * (n as u64) + 1 {
            report.hits += 1;
        } else if n >= 2 {
            if let Some(prev) = profile.r(n - 1) {
                if rn != prev + 1 {
                    report.step_violations.push(n);
                }
            }
        }
    }
    report
}

/// `rep/(rep − 1)`, the irrationality exponent of the associated base-`b`
/// real for Sturmian words, with a distinguished infinity at `rep = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrationalityExponent {
    Finite(QuadExt),
    Infinite,
}

pub fn irrationality_exponent(rep: &QuadExt) -> Result<IrrationalityExponent> {
    let one = QuadExt::one();
    match rep.cmp_exact(&one)? {
        std::cmp::Ordering::Less => {
            Err(Error::InvalidArgument("repetition exponents are at least 1".into()))
        }
        std::cmp::Ordering::Equal => Ok(IrrationalityExponent::Infinite),
        std::cmp::Ordering::Greater => {
            let denom = rep.checked_sub(&one)?;
            Ok(IrrationalityExponent::Finite(rep.checked_div(&denom)?))
        }
    }
}

/// Per-level outcome of the two-branch prefix lower bound and the matching
/// state-ratio upper bounds.
#[derive(Clone, Debug)]
pub struct LevelBoundReport {
    pub k: usize,
    /// `None` when the level was skipped (not case 2).
    pub tag: Option<CaseTag>,
    pub branch1_checked: usize,
    pub branch1_failures: Vec<usize>,
    pub branch2_checked: usize,
    pub branch2_failures: Vec<usize>,
    /// Indices whose bound exceeds what the finite prefix can certify.
    pub unverifiable: usize,
    pub upper1_ok: Option<bool>,
    pub upper2_ok: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct LowerBoundReport {
    pub levels: Vec<LevelBoundReport>,
}

impl LowerBoundReport {
    pub fn all_pass(&self) -> bool {
        self.levels.iter().all(|l| {
            l.tag.is_none()
                || (l.branch1_failures.is_empty()
                    && l.branch2_failures.is_empty()
                    && l.upper1_ok != Some(false)
                    && l.upper2_ok != Some(false))
        })
    }

    pub fn checked_levels(&self) -> usize {
        self.levels.iter().filter(|l| l.tag.is_some()).count()
    }
}

/// Verifies, for every case-2 level `k` in range, the two-branch lower bound
///
/// * `r(n) ≥ n + q_k + q_{k−1}` on `q_k + q_{k−1} − 1 ≤ n ≤ |W_k| + q_k + q_{k−1} − 2`,
/// * `r(n) ≥ n + |W_k| + q_k + q_{k−1}` on `|W_k| + q_k + q_{k−1} − 1 ≤ n ≤ q_{k+1} + q_k − 2`,
///
/// against the computed profile, plus the ratio upper bounds
/// `1 + (1+η_k)/(t_k+1+η_k) + ε_k` and `1 + (t_k+η_k)/(1+η_k) + ε_k` at the
/// two distinguished indices. Levels that classify as case 1 or 3 are
/// skipped with a notice.
pub fn lower_bound_check(
    x: &BinaryWord,
    cf: &ContinuedFraction,
    k_range: RangeInclusive<usize>,
) -> Result<LowerBoundReport> {
    let len = x.len() as u64;
    let conv = cf.convergents(*k_range.end() + 1)?;
    let n_needed = u64::try_from(&(&conv[*k_range.end() + 1].q + &conv[*k_range.end()].q))
        .map_err(|_| Error::OutOfRange("convergent exceeds 64 bits".into()))?;
    let profile = r_profile_fast(x, usize::try_from(n_needed.min(len)).unwrap());
    // True r(n) is at least len+1 whenever the prefix shows no repeat.
    let r_lower = |n: usize| -> u64 { profile.r(n).unwrap_or(len + 1) };
    let mut report = LowerBoundReport::default();
    for k in k_range {
        let state = match classify_case(x, cf, k) {
            Ok(s) => s,
            Err(Error::InsufficientPrefix { needed, have }) => {
                return Err(Error::InsufficientPrefix { needed, have })
            }
            Err(e) => return Err(e),
        };
        if state.tag != CaseTag::Case2 {
            report.levels.push(LevelBoundReport {
                k,
                tag: None,
                branch1_checked: 0,
                branch1_failures: vec![],
                branch2_checked: 0,
                branch2_failures: vec![],
                unverifiable: 0,
                upper1_ok: None,
                upper2_ok: None,
            });
            continue;
        }
        let w_len = state.w.len() as u64;
        let qk = u64::try_from(&conv[k].q)
            .map_err(|_| Error::OutOfRange("convergent exceeds 64 bits".into()))?;
        let qk1 = u64::try_from(&conv[k].q_prev).unwrap();
        let qk_next = u64::try_from(&conv[k + 1].q)
            .map_err(|_| Error::OutOfRange("convergent exceeds 64 bits".into()))?;

        let mut level = LevelBoundReport {
            k,
            tag: Some(CaseTag::Case2),
            branch1_checked: 0,
            branch1_failures: vec![],
            branch2_checked: 0,
            branch2_failures: vec![],
            unverifiable: 0,
            upper1_ok: None,
            upper2_ok: None,
        };

        let run = |lo: u64,
                       hi: u64,
                       add: u64,
                       checked: &mut usize,
                       failures: &mut Vec<usize>,
                       unverifiable: &mut usize| {
            for n in lo..=hi {
                let bound = n + add;
                if bound > len + 1 {
                    // The prefix cannot certify a lower bound this large.
                    *unverifiable += 1;
                    continue;
                }
                *checked += 1;
                if r_lower(n as usize) < bound {
                    failures.push(n as usize);
                }
            }
        };
        run(
            qk + qk1 - 1,
            w_len + qk + qk1 - 2,
            qk + qk1,
            &mut level.branch1_checked,
            &mut level.branch1_failures,
            &mut level.unverifiable,
        );
        run(
            w_len + qk + qk1 - 1,
            qk_next + qk - 2,
            w_len + qk + qk1,
            &mut level.branch2_checked,
            &mut level.branch2_failures,
            &mut level.unverifiable,
        );

        // Ratio upper bounds at the two distinguished indices, exact.
        let eta = Rational::new(qk1.into(), qk.into());
        let t = Rational::new(w_len.into(), qk.into());
        let eps = Rational::new(2.into(), qk.into());
        let one = Rational::new(1.into(), 1.into());
        let n1 = w_len + qk + qk1 - 2;
        if let Some(r) = profile.r(n1 as usize) {
            let lhs = Rational::new(r.into(), n1.into());
            let rhs = &one + &((&one + &eta) / (&t + &one + &eta)) + &eps;
            level.upper1_ok = Some(lhs < rhs);
        }
        let n2 = qk + qk1 - 2;
        if let Some(r) = profile.r(n2 as usize) {
            let lhs = Rational::new(r.into(), n2.into());
            let rhs = &one + &((&t + &eta) / (&one + &eta)) + &eps;
            level.upper2_ok = Some(lhs < rhs);
        }
        report.levels.push(level);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{case2_word, sturmian_prefix, DigitMode};
    use rand::{Rng, SeedableRng};

    fn word(s: &str) -> BinaryWord {
        BinaryWord::from_str01(s).unwrap()
    }

    #[test]
    fn worked_prefix_values() {
        // Any word starting 01001001 has r(1) = 3, r(2) = 5, r(3) = 6,
        // r(4) = 7; the length-4 repeat overlaps at one letter.
        for engine in [r_profile_oracle, r_profile_fast] {
            let p = engine(&word("01001001"), 4);
            assert_eq!(p.r(1), Some(3));
            assert_eq!(p.r(2), Some(5));
            assert_eq!(p.r(3), Some(6));
            assert_eq!(p.r(4), Some(7));
        }
    }

    #[test]
    fn alternating_word_profile() {
        let mut s = String::new();
        for _ in 0..30 {
            s.push_str("01");
        }
        let p = r_profile_oracle(&word(&s), 20);
        for n in 1..=20 {
            assert_eq!(p.r(n), Some(n as u64 + 2), "n = {n}");
        }
    }

    #[test]
    fn unresolved_entries_are_absent() {
        let p = r_profile_oracle(&word("01"), 4);
        assert_eq!(p.r(1), None);
        assert_eq!(p.r(4), None);
        let p = r_profile_fast(&word("01"), 4);
        assert_eq!(p.r(1), None);
    }

    #[test]
    fn engines_agree_on_random_words() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let len = rng.gen_range(2..=512);
            let mut w = BinaryWord::new();
            for _ in 0..len {
                w.push(rng.gen_bool(0.5));
            }
            let n_max = len / 2 + 2;
            let a = r_profile_oracle(&w, n_max);
            let b = r_profile_fast(&w, n_max);
            for n in 1..=n_max {
                assert_eq!(a.r(n), b.r(n), "len = {len}, n = {n}, word = {w}");
            }
        }
    }

    #[test]
    fn repeated_suffix_lengths_are_lipschitz() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let len = rng.gen_range(2..400);
            let mut w = BinaryWord::new();
            for _ in 0..len {
                w.push(rng.gen_bool(0.4));
            }
            let s = repeated_suffix_lengths(&w);
            for m in 1..s.len() {
                assert!(s[m] <= s[m - 1] + 1, "s not Lipschitz at m = {}", m + 1);
            }
        }
    }

    #[test]
    fn estimate_on_an_eventually_periodic_word() {
        let mut s = String::new();
        for _ in 0..400 {
            s.push_str("01");
        }
        let p = r_profile_fast(&word(&s), 350);
        let est = rep_estimate(&p, &Rational::new(1.into(), 2.into())).unwrap();
        // r(n) = n + 2 gives ratios 1 + 2/n, below 1.01 for n ≥ 200.
        assert!(est.window_min < Rational::new(101.into(), 100.into()));
        assert!(est.window_min >= Rational::new(1.into(), 1.into()));
    }

    #[test]
    fn estimate_windows_and_errors() {
        let p = r_profile_fast(&word("0100100101"), 4);
        assert!(rep_estimate(&p, &Rational::new(0.into(), 1.into())).is_err());
        assert!(rep_estimate(&p, &Rational::new(3.into(), 2.into())).is_err());
        let est = rep_estimate(&p, &Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(est.window, (2, 4));
    }

    #[test]
    fn sturmian_laws_hold_on_rotation_codings() {
        let slopes = ["0;(2,1,1)", "0;(1,1,2)", "0;(2,1,1,2,1,1,1)", "0;(1,2)", "0;1,2,(2,1,1)"];
        for text in slopes {
            let cf = ContinuedFraction::parse(text).unwrap();
            let theta = cf.value().unwrap();
            let x = sturmian_prefix(&theta, &Rational::new(1.into(), 7.into()), 4200, DigitMode::Floor)
                .unwrap();
            let p = r_profile_fast(&x, 2000);
            let report = sturmian_check(&p);
            assert!(report.is_clean(), "{text}: {report:?}");
            assert!(report.hits >= 10, "{text}: only {} hits", report.hits);
        }
    }

    #[test]
    fn eventually_periodic_words_violate_the_hit_law() {
        let mut s = String::new();
        for _ in 0..300 {
            s.push_str("01");
        }
        let p = r_profile_fast(&word(&s), 250);
        let report = sturmian_check(&p);
        assert!(report.upper_violations.is_empty());
        // r(n) = n + 2 ≤ 2n for n ≥ 2: at most one hit, at n = 1.
        assert!(report.hits <= 1);
    }

    #[test]
    fn ratio_decreases_within_runs_after_a_hit() {
        let cf = ContinuedFraction::parse("0;(2,1,1)").unwrap();
        let theta = cf.value().unwrap();
        let x = sturmian_prefix(&theta, &Rational::zero(), 3000, DigitMode::Floor).unwrap();
        let p = r_profile_fast(&x, 1400);
        for &hit in p.sturmian_hits() {
            let mut n = hit as usize + 1;
            while let (Some(rn), Some(prev)) = (p.r(n), p.r(n - 1)) {
                if rn == 2 * n as u64 + 1 {
                    break;
                }
                assert_eq!(rn, prev + 1);
                assert!(p.ratio(n).unwrap() < p.ratio(n - 1).unwrap());
                n += 1;
                if n > p.n_max() {
                    break;
                }
            }
        }
    }

    #[test]
    fn irrationality_exponent_map() {
        let two = QuadExt::from_int(2);
        assert_eq!(
            irrationality_exponent(&two).unwrap(),
            IrrationalityExponent::Finite(two.clone())
        );
        assert_eq!(
            irrationality_exponent(&QuadExt::one()).unwrap(),
            IrrationalityExponent::Infinite
        );
        assert!(irrationality_exponent(&QuadExt::from_ratio(&Rational::new(1.into(), 2.into())))
            .is_err());
        // rep = r_max maps to r_max/(r_max − 1), exactly.
        let rmax = crate::consts::r_max();
        let IrrationalityExponent::Finite(mu) = irrationality_exponent(&rmax).unwrap() else {
            panic!("finite expected")
        };
        let back = &mu / &(&mu - &QuadExt::one());
        assert_eq!(back, rmax); // t ↦ t/(t−1) is an involution
    }

    #[test]
    fn complexity_bound_links_r_to_factor_count() {
        use crate::words::factor_count;
        let cf = ContinuedFraction::parse("0;(2,1,1)").unwrap();
        let theta = cf.value().unwrap();
        let x = sturmian_prefix(&theta, &Rational::zero(), 1200, DigitMode::Floor).unwrap();
        let p = r_profile_fast(&x, 500);
        for n in 1..=500 {
            if let Some(r) = p.r(n) {
                let bound = factor_count(&x, n).unwrap() as u64 + n as u64;
                assert!(r <= bound, "n = {n}: r = {r}, p + n = {bound}");
            }
        }
    }

    #[test]
    fn lower_bounds_on_a_case2_word() {
        let cf = ContinuedFraction::parse("0;(2,1,1,2,1,1,1)").unwrap();
        let x = case2_word(&cf, 30_000).unwrap();
        let report = lower_bound_check(&x, &cf, 4..=9).unwrap();
        assert_eq!(report.checked_levels(), 6);
        assert!(report.all_pass(), "{report:?}");
        for level in &report.levels {
            assert!(level.branch1_checked > 0);
            assert_eq!(level.upper1_ok, Some(true));
            assert_eq!(level.upper2_ok, Some(true));
        }
    }
}
