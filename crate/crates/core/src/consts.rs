//! The named constants of the repetition spectrum, as exact field elements.

use crate::exact::QuadExt;

/// `√10 − 3/2 = 1.66227…`, the maximum repetition exponent over Sturmian
/// words; attained exactly on slopes with continued-fraction tail `(2,1,1)`.
pub fn r_max() -> QuadExt {
    QuadExt::new(-3, 2, 2, 10).unwrap()
}

/// `(48 + √10)/31 = 1.65039…`, the right edge of the gap: no Sturmian word
/// has a repetition exponent strictly between `r_1` and `r_max`, and `r_1`
/// is the largest accumulation point of the attained values.
pub fn r_1() -> QuadExt {
    QuadExt::new(48, 1, 31, 10).unwrap()
}

/// `(415√149 − 2693)/1438 = 1.65001…`, attained exactly on the slope with
/// periodic tail `(2,1,1,2,1,1,1)`.
pub fn r_2() -> QuadExt {
    QuadExt::new(-2693, 415, 1438, 149).unwrap()
}

/// `2(1869 + 2φ)/2277 = 1.64447…`, the exclusion threshold above which the
/// partial quotients of the slope are forced into `{1, 2}` without the
/// pattern `2,1,1,1,1`.
pub fn r_3() -> QuadExt {
    // 2(1869 + 2φ)/2277 with φ = (1+√5)/2 collapses to (3740 + 2√5)/2277.
    QuadExt::new(3740, 2, 2277, 5).unwrap()
}

/// The golden ratio `(1 + √5)/2`.
pub fn golden_ratio() -> QuadExt {
    QuadExt::new(1, 1, 2, 5).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_digit_decimals() {
        assert_eq!(r_max().to_decimal_string(6), "1.662278");
        assert_eq!(r_1().to_decimal_string(6), "1.650396");
        assert_eq!(r_2().to_decimal_string(6), "1.650014");
        assert_eq!(r_3().to_decimal_string(6), "1.644476");
        assert_eq!(golden_ratio().to_decimal_string(6), "1.618034");
    }

    #[test]
    fn ordering_of_thresholds() {
        use std::cmp::Ordering::Less;
        let (rmax, r1, r2, r3, phi) = (r_max(), r_1(), r_2(), r_3(), golden_ratio());
        assert_eq!(phi.cmp(&r3).unwrap(), Less);
        assert_eq!(r3.cmp(&r2).unwrap(), Less);
        assert_eq!(r2.cmp(&r1).unwrap(), Less);
        assert_eq!(r1.cmp(&rmax).unwrap(), Less);
    }

    #[test]
    fn r3_matches_its_golden_ratio_form() {
        // 2(1869 + 2φ)/2277 assembled from φ directly.
        let phi = golden_ratio();
        let v = (QuadExt::from_int(1869) + QuadExt::from_int(2) * phi)
            * QuadExt::from_int(2)
            / QuadExt::from_int(2277);
        assert_eq!(v, r_3());
    }
}
