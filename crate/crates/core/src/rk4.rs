//! Classical fourth-order Runge-Kutta step for a fixed-size complex state.

use num_complex::Complex64;

pub(crate) fn step<const N: usize, F>(y: &mut [Complex64; N], h: f64, rhs: F)
where
    F: Fn(&[Complex64; N]) -> [Complex64; N],
{
    let shifted = |base: &[Complex64; N], k: &[Complex64; N], scale: f64| {
        let mut out = *base;
        for (o, ki) in out.iter_mut().zip(k) {
            *o += ki * scale;
        }
        out
    };
    let k1 = rhs(y);
    let k2 = rhs(&shifted(y, &k1, 0.5 * h));
    let k3 = rhs(&shifted(y, &k2, 0.5 * h));
    let k4 = rhs(&shifted(y, &k3, h));
    for i in 0..N {
        y[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (h / 6.0);
    }
}
