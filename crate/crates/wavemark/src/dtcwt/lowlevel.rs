//! Column-direction filtering primitives. Row filtering is done by
//! transposing, filtering columns, transposing back — plane sizes here are
//! small enough that clarity wins over cache tricks.

use crate::plane::Plane;

/// Reflect an index into [0, n) with the "repeated edge sample" convention:
/// ..., x[1], x[0], | x[0], x[1], ..., x[n-1], | x[n-1], x[n-2], ...
#[inline]
pub fn reflect(i: i64, n: usize) -> usize {
    let n = n as i64;
    let period = 2 * n;
    let mut m = i % period;
    if m < 0 {
        m += period;
    }
    if m >= n {
        m = period - 1 - m;
    }
    m as usize
}

/// Filter each column with an odd-length centered filter; output size equals
/// input size (no decimation). `center` is the tap index aligned with the
/// output sample.
pub fn colfilter(x: &Plane, h: &[f64], center: usize) -> Plane {
    let (rows, cols) = (x.rows(), x.cols());
    let mut out = Plane::zeros(rows, cols);
    for k in 0..rows {
        for (i, &hv) in h.iter().enumerate() {
            let src = reflect(k as i64 + i as i64 - center as i64, rows);
            let srow = x.row(src);
            let orow = &mut out.data_mut()[k * cols..(k + 1) * cols];
            for c in 0..cols {
                orow[c] += hv * srow[c];
            }
        }
    }
    out
}

/// Decimate columns by two with the dual even-length pair (ha, hb): ha
/// consumes the even-index rows (one tree), hb the odd-index rows (the
/// other), and the two half-rate streams are re-interleaved into the
/// output. Rows must be a multiple of 4.
///
/// Tree-a output lands on even output rows when dot(ha,hb) > 0, odd rows
/// otherwise; this keeps the tree→row-parity assignment consistent between
/// the lowpass and highpass calls so the quad corners of downstream bands
/// always pair the same trees.
pub fn coldfilt(x: &Plane, ha: &[f64], hb: &[f64]) -> Plane {
    let (rows, cols) = (x.rows(), x.cols());
    assert_eq!(rows % 4, 0, "coldfilt input rows must be a multiple of 4");
    let m = ha.len();
    assert_eq!(m % 2, 0);
    assert_eq!(m, hb.len());
    let half = rows / 2;
    let mut out = Plane::zeros(half, cols);
    let a_even = ha.iter().zip(hb).map(|(a, b)| a * b).sum::<f64>() > 0.0;

    // grid of extended positions with stride 4; original index = value - m
    let nt = (rows + 2 * m - 7) / 4 + 1;
    let t: Vec<i64> = (0..nt).map(|i| 5 + 4 * i as i64).collect();
    let hm = m / 2;

    // valid "convolution" along the strided grid: flip the half-filter
    let mut accumulate = |branch_rows: &mut dyn FnMut(usize) -> usize,
                          offset: i64,
                          hhalf_src: &dyn Fn(usize) -> f64| {
        for k in 0..half / 2 {
            let dst = branch_rows(k);
            for i in 0..hm {
                let ext_pos = t[i + k] + offset;
                let src = reflect(ext_pos - m as i64, rows);
                let hv = hhalf_src(hm - 1 - i);
                let srow = x.row(src);
                let orow_base = dst * cols;
                for c in 0..cols {
                    out.data_mut()[orow_base + c] += hv * srow[c];
                }
            }
        }
    };

    let (a_base, b_base) = if a_even { (0, 1) } else { (1, 0) };
    // ha split into its even-index and odd-index taps, applied on two
    // interleaved sample grids that together cover one tree's samples
    accumulate(&mut |k| 2 * k + a_base, -1, &|j| ha[2 * j]);
    accumulate(&mut |k| 2 * k + a_base, -3, &|j| ha[2 * j + 1]);
    accumulate(&mut |k| 2 * k + b_base, 0, &|j| hb[2 * j]);
    accumulate(&mut |k| 2 * k + b_base, -2, &|j| hb[2 * j + 1]);
    out
}

/// Exact adjoint of `coldfilt`: scatters each output sample back through the
/// same taps. Because the composite (lowpass ⊕ highpass) analysis operator
/// is orthogonal, applying the adjoint per band and summing reconstructs the
/// input exactly.
pub fn coldfilt_adjoint(y: &Plane, ha: &[f64], hb: &[f64], out_rows: usize) -> Plane {
    let (half, cols) = (y.rows(), y.cols());
    assert_eq!(half * 2, out_rows);
    assert_eq!(out_rows % 4, 0);
    let m = ha.len();
    let mut out = Plane::zeros(out_rows, cols);
    let a_even = ha.iter().zip(hb).map(|(a, b)| a * b).sum::<f64>() > 0.0;

    let nt = (out_rows + 2 * m - 7) / 4 + 1;
    let t: Vec<i64> = (0..nt).map(|i| 5 + 4 * i as i64).collect();
    let hm = m / 2;

    let mut scatter = |branch_rows: &mut dyn FnMut(usize) -> usize,
                       offset: i64,
                       hhalf_src: &dyn Fn(usize) -> f64| {
        for k in 0..half / 2 {
            let src = branch_rows(k);
            for i in 0..hm {
                let ext_pos = t[i + k] + offset;
                let dst = reflect(ext_pos - m as i64, out_rows);
                let hv = hhalf_src(hm - 1 - i);
                for c in 0..cols {
                    let v = hv * y.get(src, c);
                    out.add_at(dst, c, v);
                }
            }
        }
    };

    let (a_base, b_base) = if a_even { (0, 1) } else { (1, 0) };
    scatter(&mut |k| 2 * k + a_base, -1, &|j| ha[2 * j]);
    scatter(&mut |k| 2 * k + a_base, -3, &|j| ha[2 * j + 1]);
    scatter(&mut |k| 2 * k + b_base, 0, &|j| hb[2 * j]);
    scatter(&mut |k| 2 * k + b_base, -2, &|j| hb[2 * j + 1]);
    out
}
