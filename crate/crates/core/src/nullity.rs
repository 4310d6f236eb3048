//! Matrix inertia, pseudo nullity d(M) = d0 + min(d+, d-), constructive
//! pseudo-null bases, membership tests and (1,1)-pseudo-null-space
//! enumeration.
//!
//! A pseudo null space of a symmetric M is the span of an orthonormal C1
//! with C1' M C1 = 0. It always decomposes into zero-eigenvectors plus
//! balanced mixtures of one positive- and one negative-eigenvalue
//! eigenvector, which is what the constructions here produce.

use crate::error::{Error, Result};
use crate::numeric::{norm2, sym_eigen, Mat, SymMatrix};
use serde::{Deserialize, Serialize};

/// Signature counts of a symmetric matrix at a zero tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Inertia {
    pub d0: usize,
    pub d_plus: usize,
    pub d_minus: usize,
    /// Tolerance actually used to classify eigenvalues.
    pub zero_tol: f64,
}

impl Inertia {
    pub fn pseudo_nullity(&self) -> usize {
        self.d0 + self.d_plus.min(self.d_minus)
    }
}

/// Where a pseudo-null basis column came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ColumnSource {
    /// Eigenvector of a (near-)zero eigenvalue; index into the zero class.
    ZeroEigvec(usize),
    /// Mixture coef_pos * s_+ + coef_neg * s_- of the pos_rank-th largest
    /// positive and neg_rank-th most negative eigenvectors. Coefficients
    /// satisfy coef_pos^2 lambda_+ + coef_neg^2 lambda_- = 0 and
    /// coef_pos^2 + coef_neg^2 = 1.
    PairedCombo {
        pos_rank: usize,
        neg_rank: usize,
        coef_pos: f64,
        coef_neg: f64,
    },
}

/// Orthonormal columns annihilating M: C1' M C1 = 0.
#[derive(Debug, Clone)]
pub struct PseudoNullBasis {
    /// p x d matrix with orthonormal columns.
    pub columns: Mat,
    pub sources: Vec<ColumnSource>,
}

impl PseudoNullBasis {
    pub fn ambient_dim(&self) -> usize {
        self.columns.rows()
    }

    pub fn dim(&self) -> usize {
        self.columns.cols()
    }
}

/// Injective pairing between positive- and negative-eigenvalue ranks with
/// the mixing weights used for each pair (alpha^2 + beta^2 = 1, both
/// nonnegative).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneOnePairing {
    /// (positive rank, negative rank) pairs; ranks are magnitude-sorted,
    /// 0 = largest positive / most negative.
    pub pairs: Vec<(usize, usize)>,
    /// Per-pair (alpha, beta).
    pub mixing: Vec<(f64, f64)>,
}

/// Default relative zero tolerance: 1e-8 times the largest eigenvalue
/// magnitude.
pub fn default_zero_tol(eigenvalues: &[f64]) -> f64 {
    let max = eigenvalues.iter().fold(0.0f64, |a, &l| a.max(l.abs()));
    1e-8 * max
}

/// Eigenvalues and eigenvectors split into zero / positive / negative
/// classes. Positive ranks are sorted by descending eigenvalue, negative
/// ranks by ascending (most negative first); the zero class keeps the
/// ascending eigenvalue order.
struct SignClasses {
    zero: Vec<(f64, Vec<f64>)>,
    pos: Vec<(f64, Vec<f64>)>,
    neg: Vec<(f64, Vec<f64>)>,
}

fn classify(m: &SymMatrix, zero_tol: f64) -> Result<SignClasses> {
    let eig = sym_eigen(m)?;
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvector(i);
        if l.abs() < zero_tol || l == 0.0 {
            zero.push((l, v));
        } else if l > 0.0 {
            pos.push((l, v));
        } else {
            neg.push((l, v));
        }
    }
    // eigenvalues come ascending; stable descending sort keeps the smaller
    // original index first on ties. Negatives are already most-negative-first.
    pos.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    Ok(SignClasses { zero, pos, neg })
}

/// Counts of (near-)zero, positive and negative eigenvalues.
pub fn inertia(m: &SymMatrix, zero_tol: f64) -> Result<Inertia> {
    if zero_tol < 0.0 {
        return Err(Error::DomainError("zero_tol must be >= 0".into()));
    }
    let c = classify(m, zero_tol)?;
    Ok(Inertia {
        d0: c.zero.len(),
        d_plus: c.pos.len(),
        d_minus: c.neg.len(),
        zero_tol,
    })
}

/// Inertia at the default relative tolerance.
pub fn inertia_default(m: &SymMatrix) -> Result<Inertia> {
    let eig = sym_eigen(m)?;
    let tol = default_zero_tol(&eig.eigenvalues);
    inertia(m, tol)
}

/// d(M) = d0 + min(d+, d-).
pub fn pseudo_nullity(m: &SymMatrix, zero_tol: f64) -> Result<usize> {
    Ok(inertia(m, zero_tol)?.pseudo_nullity())
}

/// Mixing coefficients (alpha, beta), both nonnegative, with
/// alpha^2 lambda_+ + beta^2 lambda_- = 0 and alpha^2 + beta^2 = 1.
pub fn mixing_coefficients(lambda_pos: f64, lambda_neg: f64) -> (f64, f64) {
    let a2 = lambda_neg.abs() / (lambda_pos + lambda_neg.abs());
    (a2.sqrt(), (1.0 - a2).sqrt())
}

/// Constructive pseudo-null basis: the zero-class eigenvectors plus
/// min(d+, d-) balanced mixtures. The default pairing matches the i-th
/// largest positive with the i-th most negative eigenvalue; an explicit
/// `pairing` overrides it.
pub fn construct_pseudo_null_basis(
    m: &SymMatrix,
    zero_tol: f64,
    pairing: Option<&OneOnePairing>,
) -> Result<PseudoNullBasis> {
    let c = classify(m, zero_tol)?;
    let n_mix = c.pos.len().min(c.neg.len());

    let mut columns: Vec<Vec<f64>> = Vec::new();
    let mut sources = Vec::new();
    for (i, (_, v)) in c.zero.iter().enumerate() {
        columns.push(v.clone());
        sources.push(ColumnSource::ZeroEigvec(i));
    }

    let pairs: Vec<(usize, usize)> = match pairing {
        Some(pr) => {
            if pr.pairs.len() != pr.mixing.len() {
                return Err(Error::DomainError(
                    "pairing pairs/mixing length mismatch".into(),
                ));
            }
            for &(pi, ni) in &pr.pairs {
                if pi >= c.pos.len() || ni >= c.neg.len() {
                    return Err(Error::DomainError(format!(
                        "pairing rank ({pi}, {ni}) out of range"
                    )));
                }
            }
            pr.pairs.clone()
        }
        None => (0..n_mix).map(|i| (i, i)).collect(),
    };

    for &(pi, ni) in &pairs {
        let (lp, sp) = &c.pos[pi];
        let (ln, sn) = &c.neg[ni];
        let (alpha, beta) = mixing_coefficients(*lp, *ln);
        let col: Vec<f64> = sp
            .iter()
            .zip(sn.iter())
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        columns.push(col);
        sources.push(ColumnSource::PairedCombo {
            pos_rank: pi,
            neg_rank: ni,
            coef_pos: alpha,
            coef_neg: beta,
        });
    }

    let p = m.dim();
    Ok(PseudoNullBasis {
        columns: Mat::from_columns(p, &columns),
        sources,
    })
}

/// Unit-vector membership test: |w' M w| <= tol * ||M||_F.
pub fn is_pseudo_eigenvector(m: &SymMatrix, w: &[f64], tol: f64) -> Result<bool> {
    if w.len() != m.dim() {
        return Err(Error::DomainError("vector length != matrix dim".into()));
    }
    if (norm2(w) - 1.0).abs() > 1e-8 {
        return Err(Error::DomainError(format!(
            "w must be a unit vector, got norm {}",
            norm2(w)
        )));
    }
    Ok(m.quad_form(w).abs() <= tol * m.frobenius_norm())
}

/// Whether two pseudo eigenvectors span a common pseudo null space:
/// additionally requires the cross form |w1' M w2| <= tol * ||M||_F.
pub fn same_pseudo_null_space(m: &SymMatrix, w1: &[f64], w2: &[f64], tol: f64) -> Result<bool> {
    if !is_pseudo_eigenvector(m, w1, tol)? || !is_pseudo_eigenvector(m, w2, tol)? {
        return Err(Error::DomainError(
            "both vectors must be pseudo eigenvectors".into(),
        ));
    }
    Ok(m.bilinear(w1, w2).abs() <= tol * m.frobenius_norm())
}

/// Result of enumerating (1,1)-pseudo null spaces.
#[derive(Debug, Clone)]
pub struct EnumeratedSpaces {
    pub spaces: Vec<PseudoNullBasis>,
    /// Full pairing count C(d+, m) C(d-, m) m!, even when capped.
    pub total: u128,
    pub truncated: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product::<u128>().max(1)
}

/// Number of distinct (1,1)-pseudo null spaces for the given sign counts.
pub fn count_11_spaces(d_plus: usize, d_minus: usize) -> u128 {
    let m = d_plus.min(d_minus);
    binomial(d_plus, m) * binomial(d_minus, m) * factorial(m)
}

/// Enumerate all distinct (1,1)-pseudo null spaces: injective pairings of m
/// = min(d+, d-) positive ranks with negative ranks, each mixed with the
/// nonnegative coefficient solution. Deterministic order; stops at `cap`
/// spaces with the `truncated` flag set.
pub fn enumerate_11_spaces(m: &SymMatrix, zero_tol: f64, cap: usize) -> Result<EnumeratedSpaces> {
    let c = classify(m, zero_tol)?;
    let dp = c.pos.len();
    let dn = c.neg.len();
    let mm = dp.min(dn);
    let total = count_11_spaces(dp, dn);

    let mut spaces = Vec::new();
    let mut truncated = false;

    if mm == 0 {
        // no mixtures: the single space is the zero class span (possibly empty)
        if !c.zero.is_empty() {
            let basis = construct_pseudo_null_basis(m, zero_tol, None)?;
            spaces.push(basis);
        }
        return Ok(EnumeratedSpaces {
            spaces,
            total,
            truncated,
        });
    }

    let pos_subsets = k_subsets(dp, mm);
    let neg_subsets = k_subsets(dn, mm);
    'outer: for ps in &pos_subsets {
        for ns in &neg_subsets {
            for perm in permutations(ns) {
                if spaces.len() >= cap {
                    truncated = true;
                    break 'outer;
                }
                let pairing = OneOnePairing {
                    pairs: ps.iter().copied().zip(perm.iter().copied()).collect(),
                    mixing: ps
                        .iter()
                        .zip(perm.iter())
                        .map(|(&pi, &ni)| mixing_coefficients(c.pos[pi].0, c.neg[ni].0))
                        .collect(),
                };
                spaces.push(construct_pseudo_null_basis(m, zero_tol, Some(&pairing))?);
            }
        }
    }
    Ok(EnumeratedSpaces {
        spaces,
        total,
        truncated,
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = items.to_vec();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    if cur.is_empty() {
        out.push(Vec::new());
    } else {
        heap(cur.len(), &mut cur, &mut out);
        // lexicographic order for determinism
        out.sort();
        out.dedup();
    }
    out
}

/// Sample truncations of the positive/negative counts: the largest r <=
/// d_hat whose top (resp. bottom) r eigenvalues all have the required sign.
/// The `d0_hat` smallest-magnitude eigenvalues are treated as the zero class
/// and excluded first.
pub fn truncated_sample_counts(
    eigenvalues: &[f64],
    d0_hat: usize,
    dplus_hat: usize,
    dminus_hat: usize,
) -> Result<(usize, usize)> {
    let p = eigenvalues.len();
    if d0_hat + dplus_hat + dminus_hat > p {
        return Err(Error::DomainError(format!(
            "d0 + d+ + d- = {} exceeds p = {p}",
            d0_hat + dplus_hat + dminus_hat
        )));
    }
    for w in eigenvalues.windows(2) {
        if w[0] > w[1] {
            return Err(Error::DomainError("eigenvalues must be ascending".into()));
        }
    }
    // drop the d0_hat smallest-|lambda| entries (stable: lowest index wins ties)
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&i, &j| {
        eigenvalues[i]
            .abs()
            .partial_cmp(&eigenvalues[j].abs())
            .unwrap()
            .then(i.cmp(&j))
    });
    let zero: std::collections::BTreeSet<usize> = order.iter().take(d0_hat).copied().collect();
    let rest: Vec<f64> = (0..p)
        .filter(|i| !zero.contains(i))
        .map(|i| eigenvalues[i])
        .collect();

    let mut d_tilde_plus = 0;
    for r in 1..=dplus_hat.min(rest.len()) {
        if rest[rest.len() - r] > 0.0 {
            d_tilde_plus = r;
        } else {
            break;
        }
    }
    let mut d_tilde_minus = 0;
    for r in 1..=dminus_hat.min(rest.len()) {
        if rest[r - 1] < 0.0 {
            d_tilde_minus = r;
        } else {
            break;
        }
    }
    Ok((d_tilde_plus, d_tilde_minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{dot, RandomStream};

    fn example31(sign: f64) -> SymMatrix {
        SymMatrix::from_diag(&[sign, -sign, sign])
    }

    #[test]
    fn inertia_of_example_matrix() {
        let i = inertia(&example31(1.0), 1e-8).unwrap();
        assert_eq!((i.d0, i.d_plus, i.d_minus), (0, 2, 1));
    }

    #[test]
    fn inertia_of_zero_matrix() {
        let i = inertia(&SymMatrix::zeros(3), 1e-8).unwrap();
        assert_eq!((i.d0, i.d_plus, i.d_minus), (3, 0, 0));
    }

    #[test]
    fn inertia_reads_diagonal() {
        let i = inertia(&SymMatrix::from_diag(&[1.0, -2.0, 0.0, 3.0]), 1e-8).unwrap();
        assert_eq!((i.d0, i.d_plus, i.d_minus), (1, 2, 1));
        assert_eq!(i.pseudo_nullity(), 2);
    }

    #[test]
    fn pseudo_nullity_values() {
        assert_eq!(pseudo_nullity(&example31(1.0), 1e-8).unwrap(), 1);
        assert_eq!(pseudo_nullity(&SymMatrix::identity(4), 1e-8).unwrap(), 0);
        assert_eq!(
            pseudo_nullity(&SymMatrix::from_diag(&[1.0, -2.0, 0.0, 3.0]), 1e-8).unwrap(),
            2
        );
    }

    fn basis_checks(m: &SymMatrix, b: &PseudoNullBasis) {
        let d = b.dim();
        // orthonormal
        for i in 0..d {
            for j in 0..d {
                let g = dot(&b.columns.column(i), &b.columns.column(j));
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((g - want).abs() < 1e-10, "gram({i},{j}) = {g}");
            }
        }
        // annihilation
        let c = b.columns.transpose().matmul(m.as_mat()).matmul(&b.columns);
        assert!(
            c.frobenius_norm() <= 1e-8 * m.frobenius_norm().max(1e-300),
            "C' M C norm {}",
            c.frobenius_norm()
        );
    }

    #[test]
    fn construct_example_basis() {
        let m = example31(1.0);
        let b = construct_pseudo_null_basis(&m, 1e-8, None).unwrap();
        assert_eq!(b.dim(), 1);
        let col = b.columns.column(0);
        let s = 1.0 / 2f64.sqrt();
        assert!((col[0] - s).abs() < 1e-12);
        assert!((col[1] - s).abs() < 1e-12);
        assert!(col[2].abs() < 1e-12);
        basis_checks(&m, &b);
    }

    #[test]
    fn construct_zero_matrix_gives_full_basis() {
        let m = SymMatrix::zeros(3);
        let b = construct_pseudo_null_basis(&m, 1e-8, None).unwrap();
        assert_eq!(b.dim(), 3);
        basis_checks(&m, &b);
    }

    #[test]
    fn construct_two_by_two_mixture() {
        let m = SymMatrix::from_diag(&[2.0, -1.0]);
        let b = construct_pseudo_null_basis(&m, 1e-8, None).unwrap();
        assert_eq!(b.dim(), 1);
        let col = b.columns.column(0);
        assert!((col[0] - (1.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((col[1] - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(m.quad_form(&col).abs() < 1e-12);
    }

    #[test]
    fn membership_tests_match_example() {
        let m = example31(1.0);
        let s = 1.0 / 2f64.sqrt();
        assert!(is_pseudo_eigenvector(&m, &[0.0, s, s], 1e-8).unwrap());
        assert!(!is_pseudo_eigenvector(&m, &[1.0, 0.0, 0.0], 1e-8).unwrap());
        assert!(is_pseudo_eigenvector(&m, &[s, s, 0.0], 1e-8).unwrap());
        // the two pseudo eigenvectors do not share a pseudo null space
        assert!(!same_pseudo_null_space(&m, &[0.0, s, s], &[s, s, 0.0], 1e-8).unwrap());
        assert!(same_pseudo_null_space(&m, &[s, s, 0.0], &[s, s, 0.0], 1e-8).unwrap());
        // zero matrix: everything shares the (full) pseudo null space
        let z = SymMatrix::zeros(3);
        assert!(same_pseudo_null_space(&z, &[0.0, s, s], &[s, s, 0.0], 1e-8).unwrap());
    }

    #[test]
    fn membership_rejects_non_unit() {
        let m = example31(1.0);
        assert!(is_pseudo_eigenvector(&m, &[1.0, 1.0, 0.0], 1e-8).is_err());
    }

    #[test]
    fn count_matches_remark() {
        assert_eq!(count_11_spaces(3, 5), 60);
        assert_eq!(count_11_spaces(1, 1), 1);
        assert_eq!(count_11_spaces(2, 1), 2);
    }

    #[test]
    fn enumerate_example_spaces() {
        let m = example31(1.0);
        let e = enumerate_11_spaces(&m, 1e-8, 512).unwrap();
        assert_eq!(e.total, 2);
        assert!(!e.truncated);
        assert_eq!(e.spaces.len(), 2);
        let s = 1.0 / 2f64.sqrt();
        let c0 = e.spaces[0].columns.column(0);
        let c1 = e.spaces[1].columns.column(0);
        assert!((c0[0] - s).abs() < 1e-12 && (c0[1] - s).abs() < 1e-12 && c0[2].abs() < 1e-12);
        assert!(c1[0].abs() < 1e-12 && (c1[1] - s).abs() < 1e-12 && (c1[2] - s).abs() < 1e-12);
        for b in &e.spaces {
            basis_checks(&m, b);
        }
    }

    #[test]
    fn enumerate_respects_cap() {
        // d+ = 3, d- = 5 gives 60 pairings
        let m = SymMatrix::from_diag(&[1.0, 2.0, 3.0, -1.0, -2.0, -3.0, -4.0, -5.0]);
        let full = enumerate_11_spaces(&m, 1e-8, 512).unwrap();
        assert_eq!(full.total, 60);
        assert_eq!(full.spaces.len(), 60);
        assert!(!full.truncated);
        let capped = enumerate_11_spaces(&m, 1e-8, 10).unwrap();
        assert_eq!(capped.spaces.len(), 10);
        assert!(capped.truncated);
        assert_eq!(capped.total, 60);
        // the capped prefix matches the full enumeration
        for (a, b) in capped.spaces.iter().zip(full.spaces.iter()) {
            assert_eq!(a.columns, b.columns);
        }
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            truncated_sample_counts(&[-2.0, -0.1, 0.5, 3.0], 0, 2, 2).unwrap(),
            (2, 2)
        );
        assert_eq!(
            truncated_sample_counts(&[-2.0, 0.01, 0.5, 3.0], 0, 2, 2).unwrap(),
            (2, 1)
        );
        assert_eq!(
            truncated_sample_counts(&[0.1, 0.5, 3.0], 0, 0, 1).unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn truncation_excludes_zero_class() {
        // with one zero-class entry (the 0.01), the bottom of the rest is -2
        assert_eq!(
            truncated_sample_counts(&[-2.0, 0.01, 0.5, 3.0], 1, 2, 1).unwrap(),
            (2, 1)
        );
    }

    #[test]
    fn random_matrices_constructive_invariants() {
        let mut rng = RandomStream::new(808).into_rng();
        use rand::Rng;
        for _ in 0..500 {
            let p = 2 + (rng.random::<u32>() % 7) as usize;
            let mut entries = vec![0.0; p * p];
            for e in entries.iter_mut() {
                *e = rng.random_range(-1.0..1.0);
            }
            let m = SymMatrix::from_row_major(p, &entries).unwrap();
            let eig = sym_eigen(&m).unwrap();
            let tol = default_zero_tol(&eig.eigenvalues);
            let i = inertia(&m, tol).unwrap();
            let b = construct_pseudo_null_basis(&m, tol, None).unwrap();
            assert_eq!(b.dim(), i.pseudo_nullity());
            basis_checks(&m, &b);
        }
    }

    #[test]
    fn poincare_bound_stochastic_falsification() {
        // no orthonormal frame with pseudo_nullity + 1 columns annihilates M
        let mut rng = RandomStream::new(909).into_rng();
        use rand::Rng;
        for _ in 0..40 {
            let p = 3 + (rng.random::<u32>() % 6) as usize;
            let mut entries = vec![0.0; p * p];
            for e in entries.iter_mut() {
                *e = rng.random_range(-1.0..1.0);
            }
            let m = SymMatrix::from_row_major(p, &entries).unwrap();
            let eig = sym_eigen(&m).unwrap();
            let tol = default_zero_tol(&eig.eigenvalues);
            let d = pseudo_nullity(&m, tol).unwrap();
            if d + 1 > p {
                continue;
            }
            let norm = m.frobenius_norm();
            for _ in 0..10_000 {
                // random (d+1)-frame by Gram-Schmidt on Gaussian columns
                let mut cols: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
                for _ in 0..=d {
                    let mut v: Vec<f64> =
                        (0..p).map(|_| rng.random_range(-1.0..1.0f64)).collect();
                    for c in &cols {
                        let proj = dot(&v, c);
                        for (vi, ci) in v.iter_mut().zip(c.iter()) {
                            *vi -= proj * ci;
                        }
                    }
                    let n = norm2(&v);
                    if n < 1e-6 {
                        v = vec![0.0; p];
                        v[0] = 1.0;
                    } else {
                        for vi in v.iter_mut() {
                            *vi /= n;
                        }
                    }
                    cols.push(v);
                }
                let c = Mat::from_columns(p, &cols);
                let q = c.transpose().matmul(m.as_mat()).matmul(&c);
                assert!(
                    q.frobenius_norm() > 1e-8 * norm,
                    "random frame annihilated M beyond pseudo nullity"
                );
            }
        }
    }

    #[test]
    fn scaling_equivariance() {
        let mut rng = RandomStream::new(111).into_rng();
        use rand::Rng;
        for _ in 0..50 {
            let p = 2 + (rng.random::<u32>() % 5) as usize;
            let mut entries = vec![0.0; p * p];
            for e in entries.iter_mut() {
                *e = rng.random_range(-1.0..1.0);
            }
            let m = SymMatrix::from_row_major(p, &entries).unwrap();
            let eig = sym_eigen(&m).unwrap();
            let base = pseudo_nullity(&m, default_zero_tol(&eig.eigenvalues)).unwrap();
            for &c in &[2.0, -3.0, 1e-6, 1e6] {
                let scaled = m.scaled(c);
                let eig_s = sym_eigen(&scaled).unwrap();
                let got = pseudo_nullity(&scaled, default_zero_tol(&eig_s.eigenvalues)).unwrap();
                assert_eq!(got, base, "scaling by {c} changed pseudo nullity");
            }
        }
    }
}
