//! Benchmark fixtures shared by the criterion targets.

use hfusion_core::presentations::{build_hef, build_hplusq, PresentationSpec};
use hfusion_core::{ExactMatrix, Scalar};

/// H(E,F) for a diagonal `E` and lower-bidiagonal `F` of size `n`, both with trace `n(n+1)/2`.
pub fn hef(n: usize) -> PresentationSpec {
    let k = n as i64;
    let e: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| if i == j { i + 1 } else { 0 }).collect()).collect();
    let f: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        k - i
                    } else if i == j + 1 {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let (er, fr): (Vec<&[i64]>, Vec<&[i64]>) =
        (e.iter().map(Vec::as_slice).collect(), f.iter().map(Vec::as_slice).collect());
    build_hef(&ExactMatrix::from_i64(&er), &ExactMatrix::from_i64(&fr), true).expect("traces agree")
}

pub fn hplus_symbolic() -> PresentationSpec {
    build_hplusq(&Scalar::q()).expect("q is nonzero")
}
