//! Integer 2×2 Möbius machinery: matrix powers of the three-step growth
//! matrix, the rational forms of the product functions built from them, the
//! discriminants of the base values and their congruence classification.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Zero};

use crate::exact::{Integer, QuadExt, Rational};
use crate::spectrum::evalues::{e_value, SpectrumIndex};
use crate::spectrum::zetaxi::zeta_xi;
use crate::{Error, Result};

/// A 2×2 integer matrix acting by linear fractional transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    m: [[Integer; 2]; 2],
}

impl MobiusMap {
    pub fn new(m: [[Integer; 2]; 2]) -> Result<Self> {
        let map = Self { m };
        if map.det().is_zero() {
            return Err(Error::InvalidArgument("singular Möbius matrix".into()));
        }
        Ok(map)
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new([[a.into(), b.into()], [c.into(), d.into()]]).expect("nonsingular")
    }

    pub fn identity() -> Self {
        Self::from_i64s(1, 0, 0, 1)
    }

    pub fn entry(&self, row: usize, col: usize) -> &Integer {
        &self.m[row][col]
    }

    pub fn det(&self) -> Integer {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> Integer {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| {
            &self.m[r][0] * &rhs.m[0][c] + &self.m[r][1] * &rhs.m[1][c]
        };
        Self { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `(a x + b)/(c x + d)`.
    pub fn apply(&self, x: &QuadExt) -> Result<QuadExt> {
        let conv = |v: &Integer| QuadExt::from_int(v.clone());
        let num = conv(&self.m[0][0]).checked_mul(x)?.checked_add(&conv(&self.m[0][1]))?;
        let den = conv(&self.m[1][0]).checked_mul(x)?.checked_add(&conv(&self.m[1][1]))?;
        num.checked_div(&den)
    }
}

/// Outcome of the two-route evaluation of the product function `h_n`.
#[derive(Clone, Debug)]
pub struct HnCheck {
    pub n: usize,
    /// `h_n` evaluated at the base value through the rational form.
    pub h: QuadExt,
    /// The phase-0 limit value recovered as `1 + 1/(h+1)`.
    pub zeta0: QuadExt,
    /// Rational form agrees with the raw product definition at the base value.
    pub raw_agrees: bool,
    /// `1 + 1/(h+1)` agrees exactly with the independently computed phase-0
    /// limit.
    pub zeta_agrees: bool,
    /// Factor identities verified at rational sample points.
    pub sample_identities_ok: bool,
}

impl HnCheck {
    pub fn all_ok(&self) -> bool {
        self.raw_agrees && self.zeta_agrees && self.sample_identities_ok
    }
}

fn mat_a() -> MobiusMap {
    MobiusMap::from_i64s(1, 3, 2, 5)
}

/// Raw product-definition evaluation of `(f_n, g_n, h_n)` at `z`.
fn hn_raw(n: usize, z: &QuadExt) -> Result<(QuadExt, QuadExt, QuadExt)> {
    let a = mat_a();
    let one = QuadExt::one();
    let two = QuadExt::from_int(2);
    // z_m = A^m * z for m = 0..=n+1.
    let mut zs = vec![z.clone()];
    for m in 1..=n + 1 {
        zs.push(a.pow(m).apply(z)?);
    }
    // y_m = z_m (2 z_{m+1} − 1) / z_{m+1}.
    let y: Vec<QuadExt> = (0..=n)
        .map(|m| {
            let factor = two.checked_mul(&zs[m + 1])?.checked_sub(&one)?;
            zs[m].checked_mul(&factor)?.checked_div(&zs[m + 1])
        })
        .collect::<Result<_>>()?;
    // f = 2 + 2 Σ_{j=0}^{n-1} Π_{i=j+1}^{n} y_i + Π_{i=0}^{n} y_i.
    let mut f = two.clone();
    for j in 0..n {
        let mut prod = one.clone();
        for yi in &y[j + 1..=n] {
            prod = prod.checked_mul(yi)?;
        }
        f = f.checked_add(&two.checked_mul(&prod)?)?;
    }
    let mut full = one.clone();
    for yi in &y {
        full = full.checked_mul(yi)?;
    }
    f = f.checked_add(&full)?;
    // g = z Π_{j=1}^{n+1} (2 z_j − 1).
    let mut g = z.clone();
    for zj in &zs[1..=n + 1] {
        g = g.checked_mul(&two.checked_mul(zj)?.checked_sub(&one)?)?;
    }
    // h = 1/(1+z) · z z_{n+1} f / (1 − g).
    let h = z
        .checked_mul(&zs[n + 1])?
        .checked_mul(&f)?
        .checked_div(&one.checked_sub(&g)?)?
        .checked_div(&one.checked_add(z)?)?;
    Ok((f, g, h))
}

/// Rational-form evaluation: with `A^m = (a_m b_m; c_m d_m)`,
/// `a'_{n+1} = 2Σ a_j + 1` and `b'_{n+1} = 2Σ b_j`,
///
/// * `f_n(z) = (a'z + b')/(a_{n+1}z + b_{n+1})`
/// * `g_n(z) = z/(c_{n+1}z + d_{n+1})`
/// * `h_n(z) = z/(1+z) · (a'z + b')/((c_{n+1} − 1)z + d_{n+1})`
fn hn_rational_form(n: usize, z: &QuadExt) -> Result<(QuadExt, QuadExt, QuadExt)> {
    let a = mat_a();
    let mut a_sum = Integer::zero();
    let mut b_sum = Integer::zero();
    for m in 1..=n + 1 {
        let p = a.pow(m);
        a_sum += p.entry(0, 0);
        b_sum += p.entry(0, 1);
    }
    let a_prime = Integer::from(2) * a_sum + Integer::one();
    let b_prime = Integer::from(2) * b_sum;
    let top = a.pow(n + 1);
    let conv = |v: Integer| QuadExt::from_int(v);
    let lin = |p: Integer, q: Integer, x: &QuadExt| -> Result<QuadExt> {
        conv(p).checked_mul(x)?.checked_add(&conv(q))
    };
    let f_num = lin(a_prime.clone(), b_prime.clone(), z)?;
    let f = f_num.checked_div(&lin(top.entry(0, 0).clone(), top.entry(0, 1).clone(), z)?)?;
    let g = z.checked_div(&lin(top.entry(1, 0).clone(), top.entry(1, 1).clone(), z)?)?;
    let h_den = lin(top.entry(1, 0) - Integer::one(), top.entry(1, 1).clone(), z)?;
    let one = QuadExt::one();
    let h = z
        .checked_div(&one.checked_add(z)?)?
        .checked_mul(&f_num.checked_div(&h_den)?)?;
    Ok((f, g, h))
}

/// Two-route evaluation of `h_n` at the base value `e_0^(n)(0)` plus the
/// recovery of the phase-0 limit as `1 + 1/(h_n + 1)`, all exact, plus the
/// factor identities at rational sample points.
pub fn hn_cross_check(n: usize) -> Result<HnCheck> {
    if n == 0 {
        return Err(Error::OutOfRange("defined for n >= 1".into()));
    }
    let z = e_value(SpectrumIndex::new(n, 0, 0)?)?;
    let (f_raw, g_raw, h_raw) = hn_raw(n, &z)?;
    let (f_form, g_form, h_form) = hn_rational_form(n, &z)?;
    let raw_agrees = f_raw == f_form && g_raw == g_form && h_raw == h_form;

    let one = QuadExt::one();
    let recovered =
        one.checked_add(&one.checked_div(&h_form.checked_add(&one)?)?)?;
    let zeta0 = zeta_xi(n, 0)?.0;
    let zeta_agrees = recovered == zeta0;

    let mut sample_identities_ok = true;
    let a = mat_a();
    for (num, den) in [(1i64, 2i64), (1, 3), (0, 1)] {
        let zr = QuadExt::from_ratio(&Rational::new(num.into(), den.into()));
        // y_m = (a_m z + b_m)/(a_{m+1} z + b_{m+1}) and
        // 2z_{m+1} − 1 = (c_m z + d_m)/(c_{m+1} z + d_{m+1}).
        for m in 0..=n {
            let pm = a.pow(m);
            let pm1 = a.pow(m + 1);
            let zm = pm.apply(&zr)?;
            let zm1 = pm1.apply(&zr)?;
            let two = QuadExt::from_int(2);
            let y = zm
                .checked_mul(&two.checked_mul(&zm1)?.checked_sub(&one)?)?
                .checked_div(&zm1)?;
            let lin = |p: &Integer, q: &Integer| -> Result<QuadExt> {
                QuadExt::from_int(p.clone())
                    .checked_mul(&zr)?
                    .checked_add(&QuadExt::from_int(q.clone()))
            };
            let y_form =
                lin(pm.entry(0, 0), pm.entry(0, 1))?.checked_div(&lin(pm1.entry(0, 0), pm1.entry(0, 1))?)?;
            let step_form = lin(pm.entry(1, 0), pm.entry(1, 1))?
                .checked_div(&lin(pm1.entry(1, 0), pm1.entry(1, 1))?)?;
            let step = two.checked_mul(&zm1)?.checked_sub(&one)?;
            if y != y_form || step != step_form {
                sample_identities_ok = false;
            }
        }
        let (f_raw, g_raw, h_raw) = hn_raw(n, &zr)?;
        let (f_form, g_form, h_form) = hn_rational_form(n, &zr)?;
        if f_raw != f_form || g_raw != g_form || h_raw != h_form {
            sample_identities_ok = false;
        }
    }
    Ok(HnCheck { n, h: h_form, zeta0, raw_agrees, zeta_agrees, sample_identities_ok })
}

/// The discriminant data of the base value at family index `n`, with its
/// congruence classification and the quadratic-field exclusion flag.
#[derive(Clone, Debug)]
pub struct DiscCongruence {
    pub n: usize,
    pub trace: Integer,
    pub disc: Integer,
    /// All three discriminant formulas agree.
    pub formulas_agree: bool,
    /// Residues match the classification tables mod 5 and mod 2.
    pub mod5_ok: bool,
    pub mod2_ok: bool,
    /// `n` odd or `n ≢ ±1 (mod 5)`: the base value then avoids the `√10`
    /// field.
    pub excluded_from_sqrt10: bool,
    /// `disc ≢ 0 (mod 10)` — the obstruction behind the exclusion.
    pub mod10_nonzero: bool,
}

impl DiscCongruence {
    pub fn consistent(&self) -> bool {
        self.formulas_agree
            && self.mod5_ok
            && self.mod2_ok
            && (!self.excluded_from_sqrt10 || self.mod10_nonzero)
    }
}

fn mat_b() -> MobiusMap {
    MobiusMap::from_i64s(5, 2, 3, 1)
}

fn mat_b1() -> MobiusMap {
    MobiusMap::from_i64s(1, 1, 1, 0)
}

/// Convergents of `[1; (1,1,2)]` rolled forward to index `3n+3`:
/// `(p_{3n+3}, p_{3n+2}, q_{3n+3}, q_{3n+2})`.
struct ReciprocalConvergents {
    p_prev: Integer,
    q_prev: Integer,
    p: Integer,
    q: Integer,
    index: usize,
}

impl ReciprocalConvergents {
    fn start() -> Self {
        // j = 0: (p_0, q_0) = (1, 1); (p_{-1}, q_{-1}) = (1, 0).
        Self {
            p_prev: Integer::one(),
            q_prev: Integer::zero(),
            p: Integer::one(),
            q: Integer::one(),
            index: 0,
        }
    }

    fn advance_to(&mut self, j_target: usize) {
        const PERIOD: [u64; 3] = [1, 1, 2];
        while self.index < j_target {
            self.index += 1;
            let a = Integer::from(PERIOD[(self.index - 1) % 3]);
            let p_next = &a * &self.p + &self.p_prev;
            let q_next = &a * &self.q + &self.q_prev;
            self.p_prev = std::mem::replace(&mut self.p, p_next);
            self.q_prev = std::mem::replace(&mut self.q, q_next);
        }
    }
}

fn classify(n: usize, b1_bpow: &MobiusMap, conv: &ReciprocalConvergents) -> DiscCongruence {
    let trace = b1_bpow.trace();
    let disc = &trace * &trace - Integer::from(if n % 2 == 0 { 4 } else { -4 });
    // The matrix power must reproduce the convergent matrix
    // (p_{3n+3} p_{3n+2}; q_{3n+3} q_{3n+2}).
    let entries_match = b1_bpow.entry(0, 0) == &conv.p
        && b1_bpow.entry(0, 1) == &conv.p_prev
        && b1_bpow.entry(1, 0) == &conv.q
        && b1_bpow.entry(1, 1) == &conv.q_prev;
    // Independent route: the discriminant of the fixed-point quadratic.
    let via_quadratic = {
        let d = &conv.q_prev - &conv.p;
        &d * &d + Integer::from(4) * &conv.q * &conv.p_prev
    };
    let via_square = {
        let s = &conv.q_prev + &conv.p;
        &s * &s - Integer::from(if (3 * n + 4) % 2 == 0 { 4 } else { -4 })
    };
    let formulas_agree = entries_match && disc == via_quadratic && disc == via_square;

    let mod5 = disc.mod_floor(&Integer::from(5));
    let k = n / 5;
    let sign = |v: i64| -> Integer {
        Integer::from(if k % 2 == 0 { v } else { -v }).mod_floor(&Integer::from(5))
    };
    let mod5_expect = match n % 5 {
        0 => sign(1),
        1 | 4 => Integer::zero(),
        2 => sign(2),
        3 => sign(-2),
        _ => unreachable!(),
    };
    let mod2_ok = disc.is_odd() == (n % 2 == 1);
    let excluded = n % 2 == 1 || !(n % 5 == 1 || n % 5 == 4);
    let mod10_nonzero = !disc.mod_floor(&Integer::from(10)).is_zero();
    DiscCongruence {
        n,
        trace,
        disc,
        formulas_agree,
        mod5_ok: mod5 == mod5_expect,
        mod2_ok,
        excluded_from_sqrt10: excluded,
        mod10_nonzero,
    }
}

/// Discriminant and congruence data for a single `n ≥ 0`.
pub fn discriminant_congruence(n: usize) -> DiscCongruence {
    discriminant_congruence_range(n).pop().unwrap()
}

/// Discriminant data for all `n = 0..=n_max`, computed with one running
/// matrix power and one rolling convergent pass.
pub fn discriminant_congruence_range(n_max: usize) -> Vec<DiscCongruence> {
    let b = mat_b();
    let b1 = mat_b1();
    let mut bpow = b.clone(); // B^{n+1} starting at n = 0
    let mut conv = ReciprocalConvergents::start();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        conv.advance_to(3 * n + 3);
        out.push(classify(n, &b1.mul(&bpow), &conv));
        bpow = bpow.mul(&b);
    }
    out
}

/// True when `n` is odd or `n ≢ ±1 (mod 5)` — the base value of family `n`
/// then lies outside the `√10` field. Debug builds additionally confirm
/// the mod-10 obstruction.
pub fn q10_exclusion(n: usize) -> bool {
    let excluded = n % 2 == 1 || !(n % 5 == 1 || n % 5 == 4);
    debug_assert!(
        !excluded || discriminant_congruence(n).mod10_nonzero,
        "exclusion without its mod-10 obstruction at n = {n}"
    );
    excluded
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_basics() {
        let a = mat_a();
        assert_eq!(a.det(), Integer::from(-1));
        assert_eq!(a.pow(0), MobiusMap::identity());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert!(MobiusMap::new([[1.into(), 2.into()], [2.into(), 4.into()]]).is_err());
        let x = QuadExt::new(0, 1, 2, 10).unwrap();
        let y = a.apply(&x).unwrap();
        let expect = (QuadExt::new(0, 1, 2, 10).unwrap() + QuadExt::from_int(3))
            / (QuadExt::sqrt_of(10).unwrap() + QuadExt::from_int(5));
        assert_eq!(y, expect);
    }

    #[test]
    fn product_function_cross_checks() {
        for n in 1..=12 {
            let check = hn_cross_check(n).unwrap();
            assert!(check.raw_agrees, "raw/rational mismatch at n = {n}");
            assert!(check.zeta_agrees, "phase-0 mismatch at n = {n}");
            assert!(check.sample_identities_ok, "sample identities at n = {n}");
        }
    }

    #[test]
    fn discriminants_and_congruences() {
        let d0 = discriminant_congruence(0);
        assert_eq!(d0.trace, Integer::from(10));
        assert_eq!(d0.disc, Integer::from(96));
        assert!(d0.consistent());
        let d1 = discriminant_congruence(1);
        assert_eq!(d1.trace, Integer::from(61));
        assert_eq!(d1.disc, Integer::from(3725));
        assert!(d1.consistent());
        for d in discriminant_congruence_range(200) {
            assert!(d.consistent(), "inconsistent at n = {}", d.n);
        }
        // Trace divisible by 5 exactly when the matrix exponent n+1 lands
        // on residue 1 mod 5.
        for d in discriminant_congruence_range(50) {
            let div5 = d.trace.mod_floor(&Integer::from(5)).is_zero();
            assert_eq!(div5, (d.n + 1) % 5 == 1, "n = {}", d.n);
        }
    }

    #[test]
    fn sqrt10_exclusion_hypothesis() {
        assert!(q10_exclusion(3));
        assert!(q10_exclusion(2));
        assert!(!q10_exclusion(4));
        assert!(!q10_exclusion(6));
        assert!(q10_exclusion(9));
    }

    #[test]
    fn base_discriminant_factors_through_149_at_n_1() {
        // 3725 = 25 · 149: the n = 1 base value lives in the √149 field.
        let z = e_value(SpectrumIndex::new(1, 0, 0).unwrap()).unwrap();
        assert_eq!(z.d(), &Integer::from(149));
    }
}
