//! Small reference codes used throughout the tests, the CLI and the FFI.

use crate::code::LinearCode;
use crate::field::FieldSpec;
use crate::linalg::FqMatrix;

fn binary_code(rows: &[&[u32]], d: usize) -> LinearCode {
    let g = FqMatrix::from_rows(FieldSpec::binary(), rows).expect("fixture rows are rectangular");
    LinearCode::from_generator(&g, Some(d)).expect("fixture generator is full rank")
}

/// Binary Hamming `[7, 4, 3]` code, `G = [I_4 | A]`.
pub fn hamming_7_4() -> LinearCode {
    binary_code(
        &[
            &[1, 0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 1],
            &[0, 0, 0, 1, 1, 0, 1],
        ],
        3,
    )
}

/// Binary `[5, 2, 3]` code with codewords of weights 3, 3 and 4.
pub fn code_5_2() -> LinearCode {
    binary_code(&[&[1, 0, 1, 1, 0], &[0, 1, 1, 0, 1]], 3)
}

/// Coefficients of `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`, lowest first.
const GOLAY_POLY: [u32; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

/// Binary Golay `[23, 12, 7]` code generated by the shifts of its cyclic
/// generator polynomial, then reduced to systematic form.
pub fn golay_23_12() -> LinearCode {
    let rows: Vec<Vec<u32>> = (0..12)
        .map(|i| {
            let mut row = vec![0; 23];
            row[i..i + 12].copy_from_slice(&GOLAY_POLY);
            row
        })
        .collect();
    let g = FqMatrix::from_rows(FieldSpec::binary(), &rows).expect("rectangular");
    LinearCode::from_generator(&g, Some(7)).expect("cyclic shifts are independent")
}

/// Binary repetition `[n, 1, n]` code.
pub fn repetition(n: usize) -> LinearCode {
    let row = vec![1u32; n];
    binary_code(&[&row], n)
}
