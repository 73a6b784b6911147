//! The three families of periodic continued-fraction values `e_j^(n)(m)`
//! that arise as phase-aligned limits of `q_{k-1}/q_k` along slopes with
//! tail `(2,1,1)^n, 2,1,1,1`, together with their step matrices, closed
//! forms, interlacing order and the product recurrences built on them.
//!
//! Every runtime value stays inside the single quadratic field generated by
//! `e_j^(n)(0)`; the `√10` closed forms are verified separately as pure
//! `√10` identities, so no degree-4 arithmetic ever happens.

use std::cmp::Ordering;


use crate::contfrac::ContinuedFraction;
use crate::exact::{QuadExt, Rational};
use crate::spectrum::matrices::MobiusMap;
use crate::spectrum::eigen_pair;
use crate::{Error, Result};

/// Index `(n, j, m)` into the three families. Direct continued-fraction
/// definitions exist for `m ≤ n+1` (j = 0) and `m ≤ n` (j = 1, 2); the
/// Möbius step matrices extend each family to arbitrary `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumIndex {
    pub n: usize,
    pub j: u8,
    pub m: usize,
}

impl SpectrumIndex {
    pub fn new(n: usize, j: u8, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("family index n starts at 1".into()));
        }
        if j > 2 {
            return Err(Error::OutOfRange("residue j must be 0, 1 or 2".into()));
        }
        Ok(Self { n, j, m })
    }
}

/// The integer Möbius step of family `j`: `e_j(m+1) = M_j * e_j(m)`.
/// These are projectively equal to the `√10` closed-form matrices.
pub fn step_matrix(j: u8) -> MobiusMap {
    match j {
        0 => MobiusMap::from_i64s(1, 3, 2, 5),
        1 => MobiusMap::from_i64s(1, 2, 3, 5),
        2 => MobiusMap::from_i64s(2, 3, 3, 4),
        _ => panic!("residue out of range"),
    }
}

fn three_blocks(reps: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(3 * reps);
    for _ in 0..reps {
        v.extend_from_slice(&[1, 1, 2]);
    }
    v
}

/// The period of the direct definition of `e_j^(n)(m)`.
fn direct_period(idx: SpectrumIndex) -> Result<Vec<u64>> {
    let SpectrumIndex { n, j, m } = idx;
    let limit = if j == 0 { n + 1 } else { n };
    if m > limit {
        return Err(Error::OutOfRange(format!(
            "direct definition of e_{j}^({n})({m}) needs m <= {limit}"
        )));
    }
    let mut period = Vec::with_capacity(3 * n + 4);
    match j {
        0 => {
            period.extend(three_blocks(m));
            period.push(1);
            period.extend(three_blocks(n + 1 - m));
        }
        1 => {
            period.push(2);
            period.extend(three_blocks(m));
            period.push(1);
            period.extend(three_blocks(n - m));
            period.extend_from_slice(&[1, 1]);
        }
        2 => {
            period.extend_from_slice(&[1, 2]);
            period.extend(three_blocks(m));
            period.push(1);
            period.extend(three_blocks(n - m));
            period.push(1);
        }
        _ => unreachable!(),
    }
    debug_assert_eq!(period.len(), 3 * n + 4);
    Ok(period)
}

/// `e_j^(n)(m)` straight from its periodic continued fraction.
pub fn e_value_direct(idx: SpectrumIndex) -> Result<QuadExt> {
    ContinuedFraction::new(0, Vec::new(), direct_period(idx)?)?.value()
}

/// `e_j^(n)(m)` via integer Möbius powers applied to `e_j^(n)(0)`; defined
/// for every `m`, agreeing with the direct definition where both exist.
pub fn e_value(idx: SpectrumIndex) -> Result<QuadExt> {
    let base = e_value_direct(SpectrumIndex { m: 0, ..idx })?;
    let step = step_matrix(idx.j);
    let mut v = base;
    for _ in 0..idx.m {
        v = step.apply(&v)?;
    }
    Ok(v)
}

/// Cached `e`-values of one family index `n`, with the phase table of
/// `η`-limits along the period of length `3n + 4`.
#[derive(Clone, Debug)]
pub struct SpectrumFamily {
    n: usize,
    e0: Vec<QuadExt>, // m = 0..=n+1
    e1: Vec<QuadExt>, // m = 0..=n
    e2: Vec<QuadExt>, // m = 0..=n
}

impl SpectrumFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("family index n starts at 1".into()));
        }
        let grow = |j: u8, count: usize| -> Result<Vec<QuadExt>> {
            let step = step_matrix(j);
            let mut v = vec![e_value_direct(SpectrumIndex { n, j, m: 0 })?];
            for _ in 1..count {
                let next = step.apply(v.last().unwrap())?;
                v.push(next);
            }
            Ok(v)
        };
        Ok(Self { n, e0: grow(0, n + 2)?, e1: grow(1, n + 1)?, e2: grow(2, n + 1)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Period length `3n + 4` of the underlying slope tail.
    pub fn period_len(&self) -> usize {
        3 * self.n + 4
    }

    /// Cached `e_j(m)`.
    pub fn e(&self, j: u8, m: usize) -> &QuadExt {
        match j {
            0 => &self.e0[m],
            1 => &self.e1[m],
            2 => &self.e2[m],
            _ => panic!("residue out of range"),
        }
    }

    /// `e_j(m)` for arbitrary `m` via the Möbius extension.
    pub fn e_extended(&self, j: u8, m: usize) -> Result<QuadExt> {
        let cache = match j {
            0 => &self.e0,
            1 => &self.e1,
            2 => &self.e2,
            _ => panic!("residue out of range"),
        };
        if m < cache.len() {
            return Ok(cache[m].clone());
        }
        let step = step_matrix(j);
        let mut v = cache.last().unwrap().clone();
        for _ in cache.len()..=m {
            v = step.apply(&v)?;
        }
        Ok(v)
    }

    /// The `η`-limit at phase `d` of the period: residues `3m`, `3m+1`,
    /// `3m+2` map to `e_0(m)`, `e_1(m)`, `e_2(m)`.
    pub fn eta_star(&self, d: usize) -> &QuadExt {
        let d = d % self.period_len();
        self.e((d % 3) as u8, d / 3)
    }

    /// All `η`-limits in phase order.
    pub fn eta_stars(&self) -> Vec<QuadExt> {
        (0..self.period_len()).map(|d| self.eta_star(d).clone()).collect()
    }
}

/// `τ^(n)(m) = e_2(m) e_1(m) e_0(m)`.
pub fn tau(family: &SpectrumFamily, m: usize) -> QuadExt {
    family.e(2, m) * family.e(1, m) * family.e(0, m)
}

/// `σ^(n)(m) = 1 + e_2(m) + e_2(m) e_1(m)`; identically 2.
pub fn sigma(family: &SpectrumFamily, m: usize) -> QuadExt {
    QuadExt::one() + family.e(2, m).clone() + family.e(2, m) * family.e(1, m)
}

/// The product recurrence `γ(0) = 2 + τ(0)`, `γ(m) = 2 + τ(m) γ(m−1)`.
pub fn gamma(family: &SpectrumFamily, m: usize) -> QuadExt {
    let two = QuadExt::from_int(2);
    let mut g = &two + &tau(family, 0);
    for i in 1..=m {
        g = &two + &(&tau(family, i) * &g);
    }
    g
}

/// Verifies the `√10` closed forms of the step-matrix powers: for each
/// family, `2√10 · M_j^m = q^m · A_j(m)` entrywise, and
/// `det A_j(m) = 40 r^m`, all exactly in the `√10` field.
pub fn a_closed_form_check(m: usize) -> Result<()> {
    let (p, q) = eigen_pair();
    let sqrt10 = QuadExt::sqrt_of(10)?;
    let two_sqrt10 = &QuadExt::from_int(2) * &sqrt10;
    let q_m = q.pow_u(m as u32);
    let r_m = p.pow_u(m as u32).checked_div(&q_m)?;
    let one_minus_r = QuadExt::one().checked_sub(&r_m)?;
    for j in 0..3u8 {
        // Diagonal entries are u ± √10 + (u ∓ √10-conjugate)·r^m with
        // u = 2 (families 0, 1) or u = 1 (family 2); off-diagonals are
        // integer multiples of (1 − r^m).
        let (u, off_top, off_bot) = match j {
            0 => (2i64, 3i64, 2i64),
            1 => (2, 2, 3),
            _ => (1, 3, 3),
        };
        let diag = |sign: i64| -> Result<QuadExt> {
            let c0 = QuadExt::new(-sign * u, 1, 1, 10)?;
            let c1 = QuadExt::new(sign * u, 1, 1, 10)?;
            c0.checked_add(&c1.checked_mul(&r_m)?)
        };
        let closed = [
            [diag(1)?, &QuadExt::from_int(off_top) * &one_minus_r],
            [&QuadExt::from_int(off_bot) * &one_minus_r, diag(-1)?],
        ];
        let power = step_matrix(j).pow(m);
        for (row, closed_row) in closed.iter().enumerate() {
            for (col, closed_entry) in closed_row.iter().enumerate() {
                let lhs = &two_sqrt10 * &QuadExt::from_int(power.entry(row, col).clone());
                let rhs = &q_m * closed_entry;
                if lhs != rhs {
                    return Err(Error::InvalidArgument(format!(
                        "closed form mismatch: family {j}, power {m}, entry ({row},{col})"
                    )));
                }
            }
        }
        let det = &(&closed[0][0] * &closed[1][1]) - &(&closed[0][1] * &closed[1][0]);
        let expect = &QuadExt::from_int(40) * &r_m;
        if det != expect {
            return Err(Error::InvalidArgument(format!(
                "determinant of closed form: family {j}, power {m}"
            )));
        }
    }
    Ok(())
}

/// Verifies the interlacing order of each family up to the given Möbius
/// depth, the rational envelope bounds, and the cross links between
/// families. All within-field comparisons are exact; the comparisons
/// against the `√10` fixed points cross fields through certified
/// enclosures.
pub fn interlacing_check(n: usize, depth: usize) -> Result<()> {
    let family = SpectrumFamily::new(n)?;
    let fail = |msg: String| Err(Error::InvalidArgument(msg));
    // Attracting fixed points of the three step matrices.
    let limits = [
        QuadExt::new(-2, 1, 2, 10)?,
        QuadExt::new(-2, 1, 3, 10)?,
        QuadExt::new(-1, 1, 3, 10)?,
    ];
    // Rational envelopes: e_0 < 3/5, e_1 < 2/5, e_2 < 3/4. The 3/5 bound
    // for family 0 starts at m = 1 (the step map contracts into it); the
    // m = 0 value only satisfies the universal 3/4 cap.
    let envelopes = [
        Rational::new(3.into(), 5.into()),
        Rational::new(2.into(), 5.into()),
        Rational::new(3.into(), 4.into()),
    ];
    let universal = Rational::new(3.into(), 4.into());
    for j in 0..3u8 {
        let values: Vec<QuadExt> =
            (0..=depth).map(|m| family.e_extended(j, m)).collect::<Result<_>>()?;
        for (m, v) in values.iter().enumerate() {
            if v.sign() != Ordering::Greater {
                return fail(format!("e_{j}({m}) not positive"));
            }
            let bound = if j == 0 && m == 0 { &universal } else { &envelopes[j as usize] };
            if v.cmp_exact(&QuadExt::from_ratio(bound))? != Ordering::Less {
                return fail(format!("e_{j}({m}) breaches its envelope"));
            }
        }
        // Family 1 ascends on even indices; families 0 and 2 on odd.
        let ascending_parity = if j == 1 { 0 } else { 1 };
        let mut lower: Vec<&QuadExt> = Vec::new();
        let mut upper: Vec<&QuadExt> = Vec::new();
        for (m, v) in values.iter().enumerate() {
            if m % 2 == ascending_parity {
                lower.push(v);
            } else {
                upper.push(v);
            }
        }
        for w in lower.windows(2) {
            if w[0].cmp_exact(w[1])? != Ordering::Less {
                return fail(format!("family {j}: ascending chain violated"));
            }
        }
        for w in upper.windows(2) {
            if w[0].cmp_exact(w[1])? != Ordering::Greater {
                return fail(format!("family {j}: descending chain violated"));
            }
        }
        // The limit separates the two chains.
        let limit = &limits[j as usize];
        if lower.last().unwrap().cmp(limit)? != Ordering::Less
            || upper.last().unwrap().cmp(limit)? != Ordering::Greater
        {
            return fail(format!("family {j}: limit does not separate the chains"));
        }
    }
    // Cross links: e_1(1) < e_0(1) and e_0(0) < e_2(1), exactly.
    if family.e(1, 1).cmp_exact(family.e(0, 1))? != Ordering::Less {
        return fail("cross link e_1(1) < e_0(1) violated".into());
    }
    if family.e(0, 0).cmp_exact(family.e(2, 1))? != Ordering::Less {
        return fail("cross link e_0(0) < e_2(1) violated".into());
    }
    // Base separation: e_0(0) sits above the limit of its own family.
    if family.e(0, 0).cmp(&limits[0])? != Ordering::Greater {
        return fail("e_0(0) not above its limit".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::within_pow10;

    #[test]
    fn step_matrices_have_the_right_fixed_points() {
        // Attracting fixed points in (0, 1) solve the three quadratics.
        let fixed = [
            QuadExt::new(-2, 1, 2, 10).unwrap(),
            QuadExt::new(-2, 1, 3, 10).unwrap(),
            QuadExt::new(-1, 1, 3, 10).unwrap(),
        ];
        for j in 0..3u8 {
            let m = step_matrix(j);
            assert_eq!(m.apply(&fixed[j as usize]).unwrap(), fixed[j as usize]);
        }
    }

    #[test]
    fn direct_and_matrix_routes_agree() {
        for n in 1..=5usize {
            for j in 0..3u8 {
                let limit = if j == 0 { n + 1 } else { n };
                for m in 0..=limit {
                    let idx = SpectrumIndex::new(n, j, m).unwrap();
                    assert_eq!(
                        e_value(idx).unwrap(),
                        e_value_direct(idx).unwrap(),
                        "n={n} j={j} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn step_relations_hold_exactly() {
        // e_0(m+1) = [0, 1, 1, 2+e_0(m)], and the analogous relations for
        // the other residues, checked through plain field arithmetic.
        let recip_plus = |k: i64, v: &QuadExt| -> QuadExt {
            (QuadExt::from_int(k) + v.clone()).recip().unwrap()
        };
        for n in 1..=8usize {
            let f = SpectrumFamily::new(n).unwrap();
            for m in 0..=n {
                let e0_next = recip_plus(1, &recip_plus(1, &recip_plus(2, f.e(0, m))));
                assert_eq!(&e0_next, f.e(0, m + 1), "n={n} m={m}");
                if m + 1 <= n {
                    let e1_next = recip_plus(2, &recip_plus(1, &recip_plus(1, f.e(1, m))));
                    assert_eq!(&e1_next, f.e(1, m + 1));
                    let e2_next = recip_plus(1, &recip_plus(2, &recip_plus(1, f.e(2, m))));
                    assert_eq!(&e2_next, f.e(2, m + 1));
                }
                // Chained definitions: e_1 = 1/(2+e_0), e_2 = 1/(1+e_1),
                // next e_0 = 1/(1+e_2).
                assert_eq!(&recip_plus(2, f.e(0, m)), f.e(1, m.min(n)));
                let e1 = f.e(1, m);
                assert_eq!(&recip_plus(1, e1), f.e(2, m));
                assert_eq!(&recip_plus(1, f.e(2, m)), f.e(0, m + 1));
            }
        }
    }

    #[test]
    fn sigma_is_two_and_tau_small() {
        let cap = QuadExt::from_ratio(&Rational::new(9.into(), 50.into()));
        for n in 1..=8usize {
            let f = SpectrumFamily::new(n).unwrap();
            for m in 0..=n {
                assert_eq!(sigma(&f, m), QuadExt::from_int(2), "n={n} m={m}");
                let t = tau(&f, m);
                assert_eq!(t.cmp_exact(&cap).unwrap(), Ordering::Less);
                assert_eq!(t.sign(), Ordering::Greater);
            }
        }
    }

    #[test]
    fn gamma_bounded_and_convergent() {
        let four = QuadExt::from_int(4);
        for n in 1..=8usize {
            let f = SpectrumFamily::new(n).unwrap();
            for m in 0..=n {
                let g = gamma(&f, m);
                assert_eq!(g.cmp_exact(&four).unwrap(), Ordering::Less);
                assert_eq!(gamma(&f, 0), QuadExt::from_int(2) + tau(&f, 0));
            }
        }
        // γ^(n)(n) approaches 2/(1−τ) = (4+√10)/3.
        let target = QuadExt::new(4, 1, 3, 10).unwrap();
        for n in [15usize, 18] {
            let f = SpectrumFamily::new(n).unwrap();
            assert!(within_pow10(&gamma(&f, n), &target, 6).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn e_values_converge_to_their_anchors() {
        // n → ∞ anchors of the m = 0 values: √10/5, (10−√10)/18, (28+√10)/43.
        let anchors = [
            QuadExt::new(0, 1, 5, 10).unwrap(),
            QuadExt::new(10, -1, 18, 10).unwrap(),
            QuadExt::new(28, 1, 43, 10).unwrap(),
        ];
        let f = SpectrumFamily::new(20).unwrap();
        for j in 0..3u8 {
            assert!(within_pow10(f.e(j, 0), &anchors[j as usize], 10).unwrap(), "j = {j}");
        }
        // And the tail anchor e_0^(n)(n+1) → (−2+√10)/2.
        let tail = QuadExt::new(-2, 1, 2, 10).unwrap();
        assert!(within_pow10(f.e(0, 21), &tail, 10).unwrap());
    }

    #[test]
    fn closed_forms_of_matrix_powers() {
        // m = 1 reduces to the integer matrices themselves.
        assert_eq!(step_matrix(0).entry(0, 0), &crate::exact::Integer::from(1));
        for m in 0..=10 {
            a_closed_form_check(m).unwrap();
        }
    }

    #[test]
    fn interlacing_chains() {
        for n in 1..=10 {
            interlacing_check(n, 2 * n + 4).unwrap();
        }
    }
}
