//! Pinned numerical constants. These are inputs to the reference paths and
//! are never computed here.

/// π to 40 significant digits (OEIS A000796).
pub const PI_40: &str = "3.141592653589793238462643383279502884197";

/// Euler–Mascheroni γ to 40 significant digits (OEIS A001620).
pub const EULER_GAMMA_40: &str = "0.5772156649015328606065120900824024310422";

/// `B_2, B_4, …, B_26` as `(numerator, denominator)`; classical table values
/// used only by the Euler–Maclaurin tail of the direct Hurwitz zeta sum.
pub const EM_BERNOULLI: [(i64, i64); 13] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
];
