//! Fixed filter banks for the two tree stages.
//!
//! Level 1 uses a symmetric biorthogonal 9/7 pair constructed exactly from
//! the degree-3 half-band factorization (the real root of 20y³+10y²+4y+1
//! polished to machine precision), scaled so sum(h0)=sqrt(2) and
//! conv(h0,g0)+conv(h1,g1)=2δ holds at machine precision. Levels ≥2 use a
//! 14-tap orthonormal quarter-shift lowpass (tree B is its time reverse)
//! projected onto the double-shift orthonormality manifold: residuals
//! |Σh²−1|, |Σh[n]h[n+2k]|, |Σh−√2| are all below 1e-15, and the group
//! delay at DC sits a quarter sample ahead of the filter midpoint, which
//! is what makes the two trees combine into near-analytic coefficients.

/// Level-1 analysis lowpass (9 taps, symmetric, centered on index 4).
pub const H0O: [f64; 9] = [
    0.037828455506995456,
    -0.02384946501937999,
    -0.11062440441842336,
    0.3774028556126538,
    0.8526986790094034,
    0.3774028556126538,
    -0.11062440441842336,
    -0.02384946501937999,
    0.037828455506995456,
];

/// Level-1 synthesis lowpass (7 taps, symmetric, centered on index 3).
pub const G0O: [f64; 7] = [
    -0.06453888262893843,
    -0.04068941760955842,
    0.4180922732222122,
    0.7884856164056644,
    0.4180922732222122,
    -0.04068941760955842,
    -0.06453888262893843,
];

/// Level-1 analysis highpass: h1[n] = (-1)^n g0[n] on centered indices.
pub const H1O: [f64; 7] = [
    0.06453888262893843,
    -0.04068941760955842,
    -0.4180922732222122,
    0.7884856164056644,
    -0.4180922732222122,
    -0.04068941760955842,
    0.06453888262893843,
];

/// Level-1 synthesis highpass: g1[n] = (-1)^n h0[n] on centered indices.
pub const G1O: [f64; 9] = [
    0.037828455506995456,
    0.02384946501937999,
    -0.11062440441842336,
    -0.3774028556126538,
    0.8526986790094034,
    -0.3774028556126538,
    -0.11062440441842336,
    0.02384946501937999,
    0.037828455506995456,
];

/// Quarter-shift tree-A analysis lowpass for levels ≥2 (14 taps).
/// Projected onto {‖h‖=1, double-shift orthogonality, Σh=√2, H(π)=0};
/// the last constraint is explicit because the quadratic ones alone only
/// bound the alternating sum to ~1e-8, which would leak DC into the
/// highpass bands.
pub const H0A: [f64; 14] = [
    0.003253131213957575,
    -0.003883199718130105,
    0.034660234311078814,
    -0.03887268786365344,
    -0.1172040157499941,
    0.27529547986449665,
    0.756145534122678,
    0.5688105339884555,
    0.011865973985477478,
    -0.10671168816241441,
    0.023825378650400467,
    0.017025219690094205,
    -0.005439455347050704,
    -0.004556876612300749,
];

pub const QLEN: usize = 14;

/// Tree-B lowpass: time reverse of tree A.
pub fn h0b() -> [f64; QLEN] {
    let mut h = H0A;
    h.reverse();
    h
}

/// Tree-A highpass: within-tree quadrature mirror, h1a[n] = (-1)^n h0a[N-1-n].
pub fn h1a() -> [f64; QLEN] {
    let mut h = [0.0; QLEN];
    for (n, v) in h.iter_mut().enumerate() {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        *v = sign * H0A[QLEN - 1 - n];
    }
    h
}

/// Tree-B highpass: time reverse of tree A's.
pub fn h1b() -> [f64; QLEN] {
    let mut h = h1a();
    h.reverse();
    h
}
