//! Kernel estimators of the time-varying second-moment structure: the local
//! covariance A^2(u), its time average, the deviation matrix M(u) =
//! A^2(u) - Abar^2, the standardizer F(u) = A(u)^{-1}, and the fourth-moment
//! constant mu4.

use crate::error::{Error, Result};
use crate::numeric::{
    default_floor, spd_sqrt_inverse, Mat, SymMatrix,
};
use serde::{Deserialize, Serialize};

/// Observed p-variate series, column t holding X_t (t = 1..T).
#[derive(Debug, Clone)]
pub struct TimeSeries {
    p: usize,
    len: usize,
    data: Mat,
}

impl TimeSeries {
    pub fn new(p: usize, len: usize, data: Mat) -> Result<Self> {
        if p == 0 || len < 4 {
            return Err(Error::DomainError(format!(
                "need p >= 1 and T >= 4, got p={p}, T={len}"
            )));
        }
        if data.rows() != p || data.cols() != len {
            return Err(Error::DomainError("data matrix shape mismatch".into()));
        }
        if data.data().iter().any(|x| !x.is_finite()) {
            return Err(Error::DomainError("non-finite observation".into()));
        }
        Ok(TimeSeries { p, len, data })
    }

    /// Build from observation rows: `rows[t]` is X_{t+1} of length p.
    pub fn from_observations(rows: &[Vec<f64>]) -> Result<Self> {
        let len = rows.len();
        if len < 4 {
            return Err(Error::DomainError(format!("need T >= 4, got {len}")));
        }
        let p = rows[0].len();
        let mut data = Mat::zeros(p, len);
        for (t, row) in rows.iter().enumerate() {
            if row.len() != p {
                return Err(Error::DomainError(format!(
                    "row {t} has {} columns, expected {p}",
                    row.len()
                )));
            }
            for i in 0..p {
                data[(i, t)] = row[i];
            }
        }
        TimeSeries::new(p, len, data)
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Observation X_t, 0-indexed by `t` in 0..T.
    pub fn observation(&self, t: usize) -> Vec<f64> {
        self.data.column(t)
    }

    pub fn value(&self, i: usize, t: usize) -> f64 {
        self.data[(i, t)]
    }

    /// Default bandwidth T^{-0.35}.
    pub fn default_bandwidth(&self) -> f64 {
        (self.len as f64).powf(-0.35)
    }

    /// Sample second moment (1/T) sum_t X_t X_t'.
    pub fn mean_outer(&self) -> SymMatrix {
        let mut acc = Mat::zeros(self.p, self.p);
        for t in 0..self.len {
            for i in 0..self.p {
                let xi = self.data[(i, t)];
                for j in i..self.p {
                    acc[(i, j)] += xi * self.data[(j, t)];
                }
            }
        }
        let inv = 1.0 / self.len as f64;
        let mut m = SymMatrix::zeros(self.p);
        for i in 0..self.p {
            for j in i..self.p {
                m.set_sym(i, j, acc[(i, j)] * inv);
            }
        }
        m
    }
}

/// Kernel family. Only the triangle kernel is implemented; the enum leaves
/// room for others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelFamily {
    Triangle,
}

/// Kernel choice plus bandwidth and the squared L2 norms entering the test
/// statistics.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct KernelSpec {
    pub family: KernelFamily,
    /// Bandwidth in (0, 0.5).
    pub bandwidth: f64,
    /// ||K||_2^2; exactly 2/3 for the triangle kernel.
    pub l2norm_sq: f64,
    /// ||Kbar||_2^2 where Kbar = K * K is the convolution kernel.
    pub conv_l2norm_sq: f64,
}

impl KernelSpec {
    pub fn triangle(bandwidth: f64) -> Result<Self> {
        if !(bandwidth > 0.0 && bandwidth < 0.5) {
            return Err(Error::DomainError(format!(
                "bandwidth {bandwidth} not in (0, 0.5)"
            )));
        }
        let (l2, conv) = convolution_norms_impl();
        Ok(KernelSpec {
            family: KernelFamily::Triangle,
            bandwidth,
            l2norm_sq: l2,
            conv_l2norm_sq: conv,
        })
    }

    /// Triangle kernel with the default bandwidth T^{-0.35}.
    pub fn default_for_len(len: usize) -> Self {
        KernelSpec::triangle((len as f64).powf(-0.35)).expect("default bandwidth valid for T >= 5")
    }
}

/// Triangle kernel K(v) = 1 - |v| on (-1, 1).
pub fn triangle_kernel(v: f64) -> f64 {
    let a = v.abs();
    if a < 1.0 {
        1.0 - a
    } else {
        0.0
    }
}

/// Convolution kernel Kbar(u) = int K(v) K(u - v) dv for the triangle
/// kernel: the centered cubic B-spline on [-2, 2].
pub fn triangle_convolution(u: f64) -> f64 {
    let a = u.abs();
    if a >= 2.0 {
        0.0
    } else if a <= 1.0 {
        (4.0 - 6.0 * a * a + 3.0 * a * a * a) / 6.0
    } else {
        let w = 2.0 - a;
        w * w * w / 6.0
    }
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let simpson = |x0: f64, x1: f64| {
        let xm = 0.5 * (x0 + x1);
        (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(xm) + f(x1))
    };
    let whole = simpson(a, b);
    let left = simpson(a, m);
    let right = simpson(m, b);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        left + right + (left + right - whole) / 15.0
    } else {
        adaptive_simpson(f, a, m, tol / 2.0, depth - 1)
            + adaptive_simpson(f, m, b, tol / 2.0, depth - 1)
    }
}

fn convolution_norms_impl() -> (f64, f64) {
    let l2 = 2.0 / 3.0;
    let conv = adaptive_simpson(
        &|u| {
            let k = triangle_convolution(u);
            k * k
        },
        -2.0,
        2.0,
        1e-10,
        40,
    );
    (l2, conv)
}

/// (||K||_2^2, ||Kbar||_2^2) for the given kernel family.
pub fn convolution_norms(k: &KernelSpec) -> (f64, f64) {
    match k.family {
        KernelFamily::Triangle => (k.l2norm_sq, k.conv_l2norm_sq),
    }
}

/// Kernel-smoothed local covariance and derived matrices at one rescaled
/// time u.
#[derive(Debug, Clone)]
pub struct LocalCovarianceEstimate {
    pub u: f64,
    /// Ahat^2(u) = (1/T) sum_t X_t X_t' K_h(u - t/T).
    pub a2_hat: SymMatrix,
    /// Abar^2 = (1/T) sum_t X_t X_t'.
    pub abar2_hat: SymMatrix,
    /// Mhat(u) = a2_hat - abar2_hat.
    pub m_hat: SymMatrix,
    /// Fhat(u): symmetric inverse square root of a2_hat.
    pub f_hat: SymMatrix,
}

fn check_band(u: f64, h: f64) -> Result<()> {
    if !(u >= h && u <= 1.0 - h) {
        return Err(Error::BoundaryError(format!(
            "u = {u} outside kernel-supported band [{h}, {}]",
            1.0 - h
        )));
    }
    Ok(())
}

fn a2_with_abar(x: &TimeSeries, u: f64, k: &KernelSpec) -> Result<SymMatrix> {
    check_band(u, k.bandwidth)?;
    let t_len = x.len() as f64;
    let h = k.bandwidth;
    // only t with |u - t/T| < h contribute
    let lo = ((u - h) * t_len).floor().max(1.0) as usize;
    let hi = ((u + h) * t_len).ceil().min(t_len) as usize;
    let p = x.dim();
    let mut acc = Mat::zeros(p, p);
    for t in lo..=hi {
        let w = triangle_kernel((u - t as f64 / t_len) / h) / h;
        if w == 0.0 {
            continue;
        }
        for i in 0..p {
            let xi = w * x.value(i, t - 1);
            for j in i..p {
                acc[(i, j)] += xi * x.value(j, t - 1);
            }
        }
    }
    let inv = 1.0 / t_len;
    let mut m = SymMatrix::zeros(p);
    for i in 0..p {
        for j in i..p {
            m.set_sym(i, j, acc[(i, j)] * inv);
        }
    }
    Ok(m)
}

/// Ahat^2(u) = (1/T) sum_t X_t X_t' K_h(u - t/T). Requires u in [h, 1-h].
pub fn estimate_a2(x: &TimeSeries, u: f64, k: &KernelSpec) -> Result<SymMatrix> {
    a2_with_abar(x, u, k)
}

/// Full local estimate at u: Ahat^2, Abar^2, Mhat and the standardizer
/// Fhat = (Ahat^2)^{-1/2} with the default eigenvalue floor.
pub fn estimate_m(x: &TimeSeries, u: f64, k: &KernelSpec) -> Result<LocalCovarianceEstimate> {
    let estimator = KernelEstimator::new(x, *k);
    estimator.m_at(u)
}

/// Caches the time-averaged second moment so repeated per-u estimates do not
/// recompute it.
pub struct KernelEstimator<'a> {
    x: &'a TimeSeries,
    spec: KernelSpec,
    abar2: SymMatrix,
}

impl<'a> KernelEstimator<'a> {
    pub fn new(x: &'a TimeSeries, spec: KernelSpec) -> Self {
        KernelEstimator {
            x,
            spec,
            abar2: x.mean_outer(),
        }
    }

    pub fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    pub fn abar2(&self) -> &SymMatrix {
        &self.abar2
    }

    pub fn a2_at(&self, u: f64) -> Result<SymMatrix> {
        a2_with_abar(self.x, u, &self.spec)
    }

    pub fn m_at(&self, u: f64) -> Result<LocalCovarianceEstimate> {
        let a2_hat = self.a2_at(u)?;
        let m_hat = a2_hat.sub(&self.abar2);
        let f_hat = spd_sqrt_inverse(&a2_hat, default_floor(&a2_hat))?;
        Ok(LocalCovarianceEstimate {
            u,
            a2_hat,
            abar2_hat: self.abar2.clone(),
            m_hat,
            f_hat,
        })
    }
}

/// How mu4 = E(Y^2 - 1)^2 is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mu4Method {
    /// Gaussian innovations: mu4 = 2 exactly.
    GaussianFixed,
    /// Standardize by Ahat(t/T)^{-1} and average fourth powers.
    PlugIn,
    /// Kernel-weighted U-statistics on (tr X_t X_t')^2.
    TraceUStat,
}

/// Estimated (or fixed) fourth-moment constant.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Mu4Estimate {
    pub value: f64,
    pub method: Mu4Method,
    /// Set when a degenerate denominator forced the Gaussian fallback.
    pub degenerate_fallback: bool,
}

impl Mu4Estimate {
    pub fn gaussian() -> Self {
        Mu4Estimate {
            value: 2.0,
            method: Mu4Method::GaussianFixed,
            degenerate_fallback: false,
        }
    }
}

const MU4_FLOOR: f64 = 0.05;

/// Estimate mu4 by the chosen method. `a2_grid` optionally supplies
/// precomputed local covariances (u ascending) for the plug-in path; when
/// absent, each Ahat(t/T) is computed directly with u clamped to the
/// supported band.
pub fn estimate_mu4(
    x: &TimeSeries,
    method: Mu4Method,
    k: &KernelSpec,
    a2_grid: Option<&[(f64, SymMatrix)]>,
) -> Result<Mu4Estimate> {
    match method {
        Mu4Method::GaussianFixed => Ok(Mu4Estimate::gaussian()),
        Mu4Method::PlugIn => mu4_plugin(x, k, a2_grid),
        Mu4Method::TraceUStat => mu4_trace_ustat(x, k),
    }
}

fn inverse_sqrt_of(a2: &SymMatrix) -> Result<SymMatrix> {
    spd_sqrt_inverse(a2, default_floor(a2))
}

fn mu4_plugin(
    x: &TimeSeries,
    k: &KernelSpec,
    a2_grid: Option<&[(f64, SymMatrix)]>,
) -> Result<Mu4Estimate> {
    let p = x.dim();
    let t_len = x.len();
    let h = k.bandwidth;

    // Inverse square roots, either from the supplied grid or from a fresh
    // per-t estimate with u clamped into [h, 1-h].
    let mut total = 0.0;
    match a2_grid {
        Some(grid) if !grid.is_empty() => {
            let inv: Vec<SymMatrix> = grid
                .iter()
                .map(|(_, a2)| inverse_sqrt_of(a2))
                .collect::<Result<_>>()?;
            for t in 1..=t_len {
                let u = (t as f64 / t_len as f64).clamp(h, 1.0 - h);
                // nearest grid point
                let mut best = 0;
                let mut bestd = f64::INFINITY;
                for (i, (ug, _)) in grid.iter().enumerate() {
                    let d = (ug - u).abs();
                    if d < bestd {
                        bestd = d;
                        best = i;
                    }
                }
                let y = inv[best].as_mat().matvec(&x.observation(t - 1));
                for yi in y {
                    total += yi.powi(4) - 1.0;
                }
            }
        }
        _ => {
            let estimator = KernelEstimator::new(x, *k);
            for t in 1..=t_len {
                let u = (t as f64 / t_len as f64).clamp(h, 1.0 - h);
                let a2 = estimator.a2_at(u)?;
                let f = inverse_sqrt_of(&a2)?;
                let y = f.as_mat().matvec(&x.observation(t - 1));
                for yi in y {
                    total += yi.powi(4) - 1.0;
                }
            }
        }
    }
    let raw = total / (t_len as f64 * p as f64);
    Ok(Mu4Estimate {
        value: raw.max(MU4_FLOOR),
        method: Mu4Method::PlugIn,
        degenerate_fallback: false,
    })
}

/// Trace-based estimator from weighted U-statistics.
///
/// (1/T) sum (tr X_t X_t')^2 converges to mu4 I1 + 4 I2 + (I1 + I3), where
/// I1 = int sum_i (A^2_ii)^2, I2 = int sum_{i<j} (A^2_ij)^2 and
/// I3 = int sum_{i != i'} A^2_ii A^2_i'i'; the last bracket is the limit of
/// the pure trace term (1/T) sum (tr A^2(t/T))^2. Each integral is estimated
/// by a kernel-weighted U-statistic over pairs t1 != t2.
fn mu4_trace_ustat(x: &TimeSeries, k: &KernelSpec) -> Result<Mu4Estimate> {
    let t_len = x.len();
    if t_len < 50 {
        return Err(Error::DomainError(format!(
            "TraceUStat needs T >= 50, got {t_len}"
        )));
    }
    let p = x.dim();
    let h = k.bandwidth;
    let tf = t_len as f64;

    // (1/T) sum (tr X X')^2
    let traces: Vec<f64> = (0..t_len)
        .map(|t| (0..p).map(|i| x.value(i, t) * x.value(i, t)).sum())
        .collect();
    let s_trace = traces.iter().map(|q| q * q).sum::<f64>() / tf;

    // pair sums truncated to |t1 - t2| <= Th (kernel support)
    let max_lag = (tf * h).floor() as usize;
    let mut i1 = 0.0;
    let mut i2 = 0.0;
    let mut i3 = 0.0;
    for lag in 1..=max_lag.min(t_len - 1) {
        let w = triangle_kernel(lag as f64 / (tf * h)) / h;
        if w == 0.0 {
            continue;
        }
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        let mut s_tot = 0.0;
        for t in 0..t_len - lag {
            let mut diag_prod = 0.0;
            for i in 0..p {
                let ai = x.value(i, t) * x.value(i, t);
                let bi = x.value(i, t + lag) * x.value(i, t + lag);
                diag_prod += ai * bi;
            }
            s1 += diag_prod;
            s_tot += traces[t] * traces[t + lag];
            for i in 0..p {
                for j in (i + 1)..p {
                    s2 += (x.value(i, t) * x.value(j, t))
                        * (x.value(i, t + lag) * x.value(j, t + lag));
                }
            }
        }
        // each unordered pair counts twice in the U-statistic
        i1 += 2.0 * w * s1;
        i2 += 2.0 * w * s2;
        i3 += 2.0 * w * (s_tot - s1);
    }
    let norm = tf * (tf - 1.0);
    i1 /= norm;
    i2 /= norm;
    i3 /= norm;

    if i1 <= 0.0 {
        return Err(Error::DegenerateEstimate(format!(
            "U-statistic I1 = {i1:.3e} is nonpositive"
        )));
    }
    let raw = (s_trace - i1 - i3 - 4.0 * i2) / i1;
    Ok(Mu4Estimate {
        value: raw.max(MU4_FLOOR),
        method: Mu4Method::TraceUStat,
        degenerate_fallback: false,
    })
}

/// `estimate_mu4` with the documented fallback: a degenerate trace
/// denominator falls back to the Gaussian value with a warning flag.
pub fn estimate_mu4_or_fallback(
    x: &TimeSeries,
    method: Mu4Method,
    k: &KernelSpec,
    a2_grid: Option<&[(f64, SymMatrix)]>,
) -> Result<Mu4Estimate> {
    match estimate_mu4(x, method, k, a2_grid) {
        Ok(e) => Ok(e),
        Err(Error::DegenerateEstimate(_)) => Ok(Mu4Estimate {
            value: 2.0,
            method: Mu4Method::GaussianFixed,
            degenerate_fallback: true,
        }),
        Err(e) => Err(e),
    }
}
