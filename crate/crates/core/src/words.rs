//! Sturmian word generation and structure: rotation-coded digits,
//! characteristic blocks, the three-case prefix decomposition and factor
//! counting.

use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::contfrac::ContinuedFraction;
use crate::exact::{Integer, QuadExt, Rational};
use crate::{Error, Result};

/// A finite binary word stored as packed bits. Indexing is 1-based to match
/// the usual `x_1 x_2 …` convention; bit `1` is the least significant bit of
/// the first storage word, so serialized prefixes are reproducible exactly.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: Vec<u64>,
    len: usize,
}

impl BinaryWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self { bits: Vec::with_capacity(bits / 64 + 1), len: 0 }
    }

    pub fn from_digits(digits: &[u8]) -> Self {
        let mut w = Self::with_capacity(digits.len());
        for &d in digits {
            w.push(d != 0);
        }
        w
    }

    pub fn from_str01(s: &str) -> Result<Self> {
        let mut w = Self::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => w.push(false),
                '1' => w.push(true),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "binary words contain only '0' and '1', found {ch:?}"
                    )))
                }
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        let word = self.len / 64;
        if word == self.bits.len() {
            self.bits.push(0);
        }
        if bit {
            self.bits[word] |= 1u64 << (self.len % 64);
        }
        self.len += 1;
    }

    /// 1-based letter access.
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "index {i} out of 1..={}", self.len);
        self.bit0(i - 1)
    }

    #[inline]
    fn bit0(&self, i: usize) -> bool {
        (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    /// 64 bits starting at 0-based position `start`, zero-padded past the end.
    #[inline]
    fn chunk64(&self, start: usize) -> u64 {
        let word = start / 64;
        let off = start % 64;
        if word >= self.bits.len() {
            return 0;
        }
        let lo = self.bits[word] >> off;
        if off == 0 || word + 1 >= self.bits.len() {
            lo
        } else {
            lo | (self.bits[word + 1] << (64 - off))
        }
    }

    /// Exact equality of `self[s..s+len]` and `other[t..t+len]` (0-based).
    pub fn eq_range(&self, s: usize, other: &Self, t: usize, len: usize) -> bool {
        debug_assert!(s + len <= self.len && t + len <= other.len);
        let mut done = 0;
        while done + 64 <= len {
            if self.chunk64(s + done) != other.chunk64(t + done) {
                return false;
            }
            done += 64;
        }
        let rest = len - done;
        if rest == 0 {
            return true;
        }
        let mask = (1u64 << rest) - 1;
        (self.chunk64(s + done) & mask) == (other.chunk64(t + done) & mask)
    }

    /// Appends all of `other`.
    pub fn append(&mut self, other: &Self) {
        let mut copied = 0;
        while copied < other.len {
            let take = 64.min(other.len - copied);
            self.push_chunk(other.chunk64(copied), take);
            copied += take;
        }
    }

    /// Appends the low `nbits` of `chunk`.
    fn push_chunk(&mut self, chunk: u64, nbits: usize) {
        debug_assert!(nbits <= 64);
        if nbits == 0 {
            return;
        }
        let chunk = if nbits == 64 { chunk } else { chunk & ((1u64 << nbits) - 1) };
        let off = self.len % 64;
        if off == 0 {
            self.bits.push(chunk);
        } else {
            let last = self.bits.last_mut().unwrap();
            *last |= chunk << off;
            if off + nbits > 64 {
                self.bits.push(chunk >> (64 - off));
            }
        }
        self.len += nbits;
    }

    /// The subword of `len` letters starting at 1-based position `start`.
    pub fn subword(&self, start: usize, len: usize) -> Self {
        assert!(start >= 1 && start + len - 1 <= self.len);
        let mut w = Self::with_capacity(len);
        let base = start - 1;
        let mut copied = 0;
        while copied < len {
            let take = 64.min(len - copied);
            w.push_chunk(self.chunk64(base + copied), take);
            copied += take;
        }
        w
    }

    pub fn prefix(&self, len: usize) -> Self {
        self.subword(1, len)
    }

    pub fn suffix(&self, len: usize) -> Self {
        self.subword(self.len - len + 1, len)
    }

    pub fn starts_with(&self, prefix: &Self) -> bool {
        prefix.len <= self.len && self.eq_range(0, prefix, 0, prefix.len)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterate letters as bits.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bit0(i))
    }

    /// The packed storage including the masked tail; useful as a hash key.
    pub fn packed(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.bit0(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 80 {
            write!(f, "BinaryWord({self})")
        } else {
            write!(f, "BinaryWord(len={}, {}…)", self.len, self.prefix(64))
        }
    }
}

/// Which floor convention drives the rotation coding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitMode {
    Floor,
    Ceiling,
}

/// The `n`-th digit of the rotation coding with slope `theta` and intercept
/// `rho`: a difference of consecutive floors (or ceilings) of `θk + ρ`.
pub fn sturmian_digit(theta: &QuadExt, rho: &Rational, n: u64, mode: DigitMode) -> Result<bool> {
    validate_slope_intercept(theta, rho)?;
    if n == 0 {
        return Err(Error::OutOfRange("digits are indexed from 1".into()));
    }
    let at = |k: u64| -> QuadExt {
        let kq = QuadExt::from_int(Integer::from(k));
        &(theta * &kq) + &QuadExt::from_ratio(rho)
    };
    let (hi, lo) = (at(n + 1), at(n));
    let diff = match mode {
        DigitMode::Floor => hi.floor() - lo.floor(),
        DigitMode::Ceiling => hi.ceil() - lo.ceil(),
    };
    debug_assert!(diff == Integer::zero() || diff == Integer::from(1));
    Ok(!diff.is_zero())
}

fn validate_slope_intercept(theta: &QuadExt, rho: &Rational) -> Result<()> {
    if theta.is_rational() {
        return Err(Error::InvalidArgument(
            "the slope must be irrational; rational slopes give eventually periodic words".into(),
        ));
    }
    if theta.sign() != std::cmp::Ordering::Greater
        || theta.cmp_exact(&QuadExt::one())? != std::cmp::Ordering::Less
    {
        return Err(Error::InvalidArgument("the slope must lie in (0, 1)".into()));
    }
    if rho.is_negative() || *rho >= Rational::from_integer(Integer::from(1)) {
        return Err(Error::InvalidArgument("the intercept must lie in [0, 1)".into()));
    }
    Ok(())
}

/// The length-`len` prefix of the rotation coding, generated incrementally
/// (one exact floor per letter).
pub fn sturmian_prefix(
    theta: &QuadExt,
    rho: &Rational,
    len: usize,
    mode: DigitMode,
) -> Result<BinaryWord> {
    validate_slope_intercept(theta, rho)?;
    let mut w = BinaryWord::with_capacity(len);
    let mut y = &(theta.clone()) + &QuadExt::from_ratio(rho); // θ·1 + ρ
    let take = |v: &QuadExt| match mode {
        DigitMode::Floor => v.floor(),
        DigitMode::Ceiling => v.ceil(),
    };
    let mut prev = take(&y);
    for _ in 0..len {
        y = &y + theta;
        let cur = take(&y);
        w.push(&cur - &prev == Integer::from(1));
        prev = cur;
    }
    Ok(w)
}

/// The characteristic blocks `M_0 = 0`, `M_1 = 0^(a_1−1) 1`,
/// `M_{k+1} = M_k^{a_{k+1}} M_{k−1}`, for `k = 0..=k_max`. Lengths follow
/// the convergent denominators and the digit-1 counts the numerators.
pub fn characteristic_blocks(cf: &ContinuedFraction, k_max: usize) -> Result<Vec<BinaryWord>> {
    let mut blocks = Vec::with_capacity(k_max + 1);
    let mut m_prev = BinaryWord::from_digits(&[0]);
    blocks.push(m_prev.clone());
    if k_max == 0 {
        return Ok(blocks);
    }
    let a1 = require_quotient(cf, 1)?;
    let mut m = BinaryWord::with_capacity(a1 as usize);
    for _ in 0..a1 - 1 {
        m.push(false);
    }
    m.push(true);
    blocks.push(m.clone());
    for k in 2..=k_max {
        let a = require_quotient(cf, k)?;
        let mut next = BinaryWord::with_capacity(m.len() * a as usize + m_prev.len());
        for _ in 0..a {
            next.append(&m);
        }
        next.append(&m_prev);
        m_prev = std::mem::replace(&mut m, next);
        blocks.push(m.clone());
    }
    if cfg!(debug_assertions) {
        let conv = cf.convergents(k_max)?;
        for (k, b) in blocks.iter().enumerate() {
            debug_assert_eq!(Integer::from(b.len()), conv[k].q, "length of block {k}");
            debug_assert_eq!(Integer::from(b.count_ones()), conv[k].p, "weight of block {k}");
        }
    }
    Ok(blocks)
}

fn require_quotient(cf: &ContinuedFraction, k: usize) -> Result<u64> {
    cf.quotient(k)
        .ok_or_else(|| Error::OutOfRange(format!("partial quotient {k} past a finite expansion")))
}

/// The common prefix of `M_k M_{k−1}` and `M_{k−1} M_k` — both concatenations
/// with the last two letters removed. It is also a prefix of `M_{k+1}`.
pub fn tilde_block(cf: &ContinuedFraction, k: usize) -> Result<BinaryWord> {
    if k == 0 {
        return Err(Error::OutOfRange("tilde blocks are defined for k >= 1".into()));
    }
    let blocks = characteristic_blocks(cf, k)?;
    let (m_prev, m) = (&blocks[k - 1], &blocks[k]);
    let total = m.len() + m_prev.len();
    if total < 2 {
        return Err(Error::OutOfRange("degenerate block pair of total length < 2".into()));
    }
    let mut ab = m.clone();
    ab.append(m_prev);
    let mut ba = m_prev.clone();
    ba.append(m);
    debug_assert!(ab.eq_range(0, &ba, 0, total - 2), "concatenations differ before last two");
    debug_assert!(
        !ab.eq_range(total - 2, &ba, total - 2, 2),
        "concatenations agree on last two letters"
    );
    Ok(ab.prefix(total - 2))
}

/// Prefix of the infinite concatenation `1 · M_0 · M_1 · M_2 · …`, a
/// Sturmian word of the same slope that satisfies the case-2 decomposition
/// at every level.
pub fn case2_word(cf: &ContinuedFraction, length: usize) -> Result<BinaryWord> {
    if length == 0 {
        return Err(Error::OutOfRange("requested an empty prefix".into()));
    }
    let mut w = BinaryWord::with_capacity(length + 64);
    w.push(true);
    let mut m_prev = BinaryWord::from_digits(&[0]);
    w.append(&m_prev);
    if w.len() >= length {
        return Ok(w.prefix(length));
    }
    let a1 = require_quotient(cf, 1)?;
    let mut m = BinaryWord::with_capacity(a1 as usize);
    for _ in 0..a1 - 1 {
        m.push(false);
    }
    m.push(true);
    let mut k = 1;
    while w.len() < length {
        w.append(&m);
        k += 1;
        let a = require_quotient(cf, k)?;
        let mut next = BinaryWord::with_capacity(m.len() * a as usize + m_prev.len());
        for _ in 0..a {
            next.append(&m);
        }
        next.append(&m_prev);
        m_prev = std::mem::replace(&mut m, next);
    }
    Ok(w.prefix(length))
}

/// The three mutually exclusive decompositions of a Sturmian word relative
/// to level `k`, with witness `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
}

/// Outcome of [`classify_case`]: the unique `(case, W)` pair that matches.
#[derive(Clone, Debug)]
pub struct CaseState {
    pub k: usize,
    pub tag: CaseTag,
    pub w: BinaryWord,
}

/// Finds the unique decomposition of `x` at level `k`:
///
/// * case 1 — `x = W M_k M̃_k …` with `W` a non-empty suffix of `M_k`,
/// * case 2 — `x = W M_{k−1} M_k M̃_k …` with `W` a non-empty suffix of `M_k`,
/// * case 3 — `x = W M_k M̃_k …` with `W` a non-empty suffix of `M_{k−1}`.
///
/// All candidates are enumerated by increasing `|W|` within case order, the
/// full pattern length is required, and uniqueness is asserted: zero matches
/// is a classification error, two or more contradict the decomposition's
/// uniqueness and are reported as an internal consistency failure.
pub fn classify_case(x: &BinaryWord, cf: &ContinuedFraction, k: usize) -> Result<CaseState> {
    if k == 0 {
        return Err(Error::OutOfRange("classification is defined for k >= 1".into()));
    }
    let blocks = characteristic_blocks(cf, k)?;
    let (m_prev, m) = (&blocks[k - 1], &blocks[k]);
    let tilde = tilde_block(cf, k)?;

    let mut matches: Vec<(CaseTag, usize)> = Vec::new();
    let mut max_needed = 0usize;
    let mut undecidable = false;

    let mut try_candidates = |tag: CaseTag, source: &BinaryWord, with_mprev: bool| {
        for w_len in 1..=source.len() {
            let mut pattern = source.suffix(w_len);
            if with_mprev {
                pattern.append(m_prev);
            }
            pattern.append(m);
            pattern.append(&tilde);
            if pattern.len() > x.len() {
                undecidable = true;
                max_needed = max_needed.max(pattern.len());
                continue;
            }
            if x.starts_with(&pattern) {
                matches.push((tag, w_len));
            }
        }
    };
    try_candidates(CaseTag::Case1, m, false);
    try_candidates(CaseTag::Case2, m, true);
    try_candidates(CaseTag::Case3, m_prev, false);

    match matches.len() {
        1 => {
            let (tag, w_len) = matches[0];
            let source = if tag == CaseTag::Case3 { m_prev } else { m };
            Ok(CaseState { k, tag, w: source.suffix(w_len) })
        }
        0 if undecidable => Err(Error::InsufficientPrefix { needed: max_needed, have: x.len() }),
        0 => Err(Error::NoCaseMatch { k }),
        n => Err(Error::AmbiguousCase { k, count: n }),
    }
}

/// Number of distinct length-`n` factors of the finite word — a lower bound
/// for the complexity of any infinite extension. Plain window scan with
/// deduplication; no suffix structure is warranted at this scale.
pub fn factor_count(x: &BinaryWord, n: usize) -> Result<usize> {
    if n == 0 || n > x.len() {
        return Err(Error::OutOfRange(format!(
            "factor length {n} out of 1..={}",
            x.len()
        )));
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    for start in 1..=x.len() - n + 1 {
        seen.insert(x.subword(start, n).bits);
    }
    Ok(seen.len())
}
