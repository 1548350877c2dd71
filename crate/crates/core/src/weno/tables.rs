//! Exact coefficients of the fifth-order interpolation in the random direction.
//!
//! Every coefficient has the form `(a + b√15)/den` and is written that way,
//! with the surd evaluated once. Side index 0 targets `ξ_ℓ − κΔξ`, side 1
//! targets `ξ_ℓ + κΔξ`. Parabola tables list the coefficient of each stencil
//! value, `P[i][k]` multiplying window entry `i + k`.

/// `√15` to double precision.
pub const SQRT_15: f64 = 3.872_983_346_207_417;

const fn surd(a: f64, b: f64, den: f64) -> f64 {
    (a + b * SQRT_15) / den
}

pub type Parabolas = [[f64; 3]; 3];

/// Candidate parabolas on the centered five-point window `ℓ−2..=ℓ+2`.
pub const INTERIOR_P: [Parabolas; 2] = [
    [
        [surd(3.0, -2.0, 40.0), -surd(3.0, -4.0, 20.0), surd(43.0, -6.0, 40.0)],
        [surd(3.0, 2.0, 40.0), 17.0 / 20.0, surd(3.0, -2.0, 40.0)],
        [surd(43.0, 6.0, 40.0), -surd(3.0, 4.0, 20.0), surd(3.0, 2.0, 40.0)],
    ],
    [
        [surd(3.0, 2.0, 40.0), -surd(3.0, 4.0, 20.0), surd(43.0, 6.0, 40.0)],
        [surd(3.0, -2.0, 40.0), 17.0 / 20.0, surd(3.0, 2.0, 40.0)],
        [surd(43.0, -6.0, 40.0), -surd(3.0, -4.0, 20.0), surd(3.0, -2.0, 40.0)],
    ],
];

/// Linear weights of the centered window.
pub const INTERIOR_D: [[f64; 3]; 2] = [
    [surd(43.0, 6.0, 240.0), 77.0 / 120.0, surd(43.0, -6.0, 240.0)],
    [surd(43.0, -6.0, 240.0), 77.0 / 120.0, surd(43.0, 6.0, 240.0)],
];

/// Candidate parabolas on the one-sided window of cells `1..=5`, for targets
/// in cell 1 (`[0]`) and cell 2 (`[1]`).
pub const BOUNDARY_P: [[Parabolas; 2]; 2] = [
    [
        [
            [surd(43.0, 6.0, 40.0), -surd(3.0, 4.0, 20.0), surd(3.0, 2.0, 40.0)],
            [surd(123.0, 10.0, 40.0), -surd(63.0, 8.0, 20.0), surd(43.0, 6.0, 40.0)],
            [surd(243.0, 14.0, 40.0), -surd(163.0, 12.0, 20.0), surd(123.0, 10.0, 40.0)],
        ],
        [
            [surd(43.0, -6.0, 40.0), -surd(3.0, -4.0, 20.0), surd(3.0, -2.0, 40.0)],
            [surd(123.0, -10.0, 40.0), -surd(63.0, -8.0, 20.0), surd(43.0, -6.0, 40.0)],
            [surd(243.0, -14.0, 40.0), -surd(163.0, -12.0, 20.0), surd(123.0, -10.0, 40.0)],
        ],
    ],
    [
        [
            [surd(3.0, 2.0, 40.0), 17.0 / 20.0, surd(3.0, -2.0, 40.0)],
            [surd(43.0, 6.0, 40.0), -surd(3.0, 4.0, 20.0), surd(3.0, 2.0, 40.0)],
            [surd(123.0, 10.0, 40.0), -surd(63.0, 8.0, 20.0), surd(43.0, 6.0, 40.0)],
        ],
        [
            [surd(3.0, -2.0, 40.0), 17.0 / 20.0, surd(3.0, 2.0, 40.0)],
            [surd(43.0, -6.0, 40.0), -surd(3.0, -4.0, 20.0), surd(3.0, -2.0, 40.0)],
            [surd(123.0, -10.0, 40.0), -surd(63.0, -8.0, 20.0), surd(43.0, -6.0, 40.0)],
        ],
    ],
];

/// Positive part `d̃` of the split one-sided linear weights, `[cell][side][i]`.
pub const BOUNDARY_D_TILDE: [[[f64; 3]; 2]; 2] = [
    [
        [
            surd(18489.0, -782.0, 17787.0),
            surd(-711.0, 640.0, 17787.0),
            surd(9.0, 142.0, 17787.0),
        ],
        [
            surd(77142.0, -5368.0, 73767.0),
            surd(-2844.0, 5048.0, 73767.0),
            surd(-531.0, 320.0, 73767.0),
        ],
    ],
    [
        [
            surd(38022.0, 2648.0, 73767.0),
            surd(36276.0, -2968.0, 73767.0),
            surd(-531.0, 320.0, 73767.0),
        ],
        [surd(123.0, -10.0, 240.0), surd(57.0, 4.0, 120.0), surd(3.0, 2.0, 240.0)],
    ],
];

/// Negative part `d̂` of the split one-sided linear weights, `[cell][side][i]`.
pub const BOUNDARY_D_HAT: [[[f64; 3]; 2]; 2] = [
    [
        [
            surd(8769.0, -1342.0, 5334.0),
            surd(-1662.0, 640.0, 2667.0),
            surd(-111.0, 62.0, 5334.0),
        ],
        [
            surd(19131.0, -1564.0, 17607.0),
            surd(-942.0, 1244.0, 17607.0),
            surd(-582.0, 320.0, 17607.0),
        ],
    ],
    [
        [
            surd(9171.0, 524.0, 17607.0),
            surd(9018.0, -844.0, 17607.0),
            surd(-582.0, 320.0, 17607.0),
        ],
        [0.0, 0.0, 0.0],
    ],
];

/// Factor `δ̃` multiplying the `d̃` group, `[cell][side]`.
pub const BOUNDARY_DELTA_TILDE: [[f64; 2]; 2] = [
    [surd(83.0, 8.0, 40.0), surd(157.0, 2.0, 80.0)],
    [surd(157.0, 2.0, 80.0), 1.0],
];

/// Factor `δ̂` multiplying the `d̂` group, `[cell][side]`.
pub const BOUNDARY_DELTA_HAT: [[f64; 2]; 2] = [
    [surd(43.0, 8.0, 40.0), surd(77.0, 2.0, 80.0)],
    [surd(77.0, 2.0, 80.0), 0.0],
];
