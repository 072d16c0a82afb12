//! Matrix exponential by scaling and squaring with a [13/13] Padé
//! approximant (Higham 2005).

use nalgebra::DMatrix;

use crate::error::{Error, Result};

const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

/// Largest 1-norm for which the degree-13 approximant meets unit roundoff.
const THETA13: f64 = 5.371_920_351_148_152;

fn one_norm(a: &DMatrix<f64>) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// exp(A) for a square matrix.
pub fn expm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::validation(
            "matrix exponential needs a square matrix",
        ));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::numerical(
            "matrix exponential of a non-finite matrix",
        ));
    }
    let norm = one_norm(a);
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = a * 2f64.powi(-squarings);
    let b = &PADE13;
    let ident = DMatrix::<f64>::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (&a6 * b[13] + &a4 * b[11] + &a2 * b[9])
        + &a6 * b[7]
        + &a4 * b[5]
        + &a2 * b[3]
        + &ident * b[1];
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b[12] + &a4 * b[10] + &a2 * b[8])
        + &a6 * b[6]
        + &a4 * b[4]
        + &a2 * b[2]
        + &ident * b[0];
    let lu = (&v - &u).lu();
    let mut r = lu
        .solve(&(&v + &u))
        .ok_or_else(|| Error::numerical("singular denominator in Padé approximant"))?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    if r.iter().any(|v| !v.is_finite()) {
        return Err(Error::numerical("matrix exponential overflowed"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn zero_and_diagonal() {
        let z = DMatrix::<f64>::zeros(3, 3);
        assert_eq!(expm(&z).unwrap(), DMatrix::identity(3, 3));
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-1e4, 0.5, -3.0]));
        let e = expm(&d).unwrap();
        assert_abs_diff_eq!(e[(0, 0)], 0.0, epsilon = 1e-300);
        // eleven squarings amplify roundoff in the slow entry
        assert_relative_eq!(e[(1, 1)], 0.5f64.exp(), max_relative = 1e-12);
        assert_relative_eq!(e[(2, 2)], (-3.0f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn rotation_generator() {
        let th = 2.7;
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -th, th, 0.0]);
        let e = expm(&a).unwrap();
        assert_abs_diff_eq!(e[(0, 0)], th.cos(), epsilon = 1e-14);
        assert_abs_diff_eq!(e[(1, 0)], th.sin(), epsilon = 1e-14);
    }

    #[test]
    fn agrees_with_reference_implementation() {
        let a =
            DMatrix::from_row_slice(3, 3, &[-2.0, 0.3, 1.1, 0.5, -0.3, 0.2, 1.5, 0.0, -1.3]) * 7.0;
        let mine = expm(&a).unwrap();
        let reference = a.clone().exp();
        for (x, y) in mine.iter().zip(reference.iter()) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(expm(&DMatrix::<f64>::zeros(2, 3)).is_err());
        assert!(expm(&DMatrix::from_element(2, 2, f64::NAN)).is_err());
    }
}
