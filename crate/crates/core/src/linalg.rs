use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier.
pub fn charpoly<T: Scalar>(m: &Matrix<T>) -> Result<Poly<T>> {
    let n = m.require_square()?;
    // p(x) = x^n + c_1 x^{n-1} + ... + c_n
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut mk = m.clone();
    let mut ck = T::zero();
    for k in 1..=n {
        if k > 1 {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted.set(i, i, shifted.at(i, i).clone() + ck.clone());
            }
            mk = m.mul(&shifted);
        }
        ck = -(mk.trace()? / T::from_int(k as i64));
        coeffs[n - k] = ck.clone();
    }
    Ok(Poly::new(coeffs))
}

/// Minimal polynomial, monic. Candidate factors come from the squarefree
/// decomposition of the characteristic polynomial; the exponent of each
/// factor f is the smallest d at which rank(f(M)^d) stabilizes.
pub fn minimal_poly<T: Scalar>(m: &Matrix<T>) -> Result<Poly<T>> {
    let cp = charpoly(m)?;
    let dec = cp.squarefree_decomposition();
    let mut out = Poly::one();
    for (f, mult) in &dec {
        let fm = f.eval_matrix(m);
        let mut d = 1;
        let mut power = fm.clone();
        while d < *mult {
            let next = power.mul(&fm);
            if next.rank() == power.rank() {
                break;
            }
            power = next;
            d += 1;
        }
        for _ in 0..d {
            out = out.mul(f);
        }
    }
    debug_assert!(out.eval_matrix(m).is_zero());
    Ok(out)
}

/// True iff the minimal polynomial is squarefree, i.e. the squarefree part
/// of the characteristic polynomial already annihilates the matrix.
pub fn is_semisimple<T: Scalar>(m: &Matrix<T>) -> Result<bool> {
    let cp = charpoly(m)?;
    Ok(cp.squarefree_part().eval_matrix(m).is_zero())
}

/// True iff (M - I)^dim = 0.
pub fn is_unipotent<T: Scalar>(m: &Matrix<T>) -> Result<bool> {
    let n = m.require_square()?;
    let nilpart = m.sub(&Matrix::identity(n));
    Ok(nilpart.pow(n as u64).is_zero())
}

/// Multiplicative Jordan-Chevalley decomposition M = S*U = U*S with S
/// semisimple and U unipotent, both defined over the base field.
///
/// S is found by a Newton iteration on the squarefree part g of the
/// characteristic polynomial, starting at M; convergence is quadratic in
/// nilpotency degree, so ceil(log2 dim) steps suffice and the result is
/// checked exactly.
pub fn jordan_chevalley<T: Scalar>(m: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let n = m.require_square()?;
    let cp = charpoly(m)?;
    if cp.coeff(0).is_zero() {
        return Err(Error::Singular);
    }
    let g = cp.squarefree_part();
    let dg = g.derivative();
    let mut s = m.clone();
    let mut steps = 0usize;
    let max_steps = usize::BITS as usize - (n.max(1)).leading_zeros() as usize + 1;
    while !g.eval_matrix(&s).is_zero() {
        if steps > max_steps {
            // unreachable for invertible input; keep the failure loud
            return Err(Error::Singular);
        }
        let correction = dg.eval_matrix(&s).inverse()?.mul(&g.eval_matrix(&s));
        s = s.sub(&correction);
        steps += 1;
    }
    let u = s.inverse()?.mul(m);
    debug_assert!(s.mul(&u) == u.mul(&s));
    Ok((s, u))
}

/// Small sparse multivariate polynomial used only by the symbolic
/// invertibility fallback of [`conjugator_solve`].
#[derive(Clone, PartialEq)]
struct MPoly<T> {
    // exponent vector -> coefficient
    terms: BTreeMap<Vec<u32>, T>,
    nvars: usize,
}

impl<T: Scalar> MPoly<T> {
    fn zero(nvars: usize) -> Self {
        MPoly { terms: BTreeMap::new(), nvars }
    }

    fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, T::one());
        MPoly { terms, nvars }
    }

    fn scale_var(i: usize, c: T, nvars: usize) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        let mut p = Self::var(i, nvars);
        for v in p.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(T::zero);
            *entry = entry.clone() + c.clone();
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.clone() * c2.clone();
                let entry = out.terms.entry(e).or_insert_with(T::zero);
                *entry = entry.clone() + c;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }
}

/// Symbolic determinant of sum(t_i * K_i) by Laplace expansion; identically
/// zero iff no invertible combination exists.
fn symbolic_combination_det<T: Scalar>(kernel: &[Matrix<T>], n: usize) -> MPoly<T> {
    let m = kernel.len();
    // entries of the generic combination as multivariate polynomials
    let entry = |i: usize, j: usize| -> MPoly<T> {
        let mut p = MPoly::zero(m);
        for (k, mat) in kernel.iter().enumerate() {
            p = p.add(&MPoly::scale_var(k, mat.at(i, j).clone(), m));
        }
        p
    };
    // recursive Laplace expansion over column 0 of the submatrix
    fn det_rec<T: Scalar>(
        rows: &[usize],
        cols: &[usize],
        entry: &dyn Fn(usize, usize) -> MPoly<T>,
        nvars: usize,
    ) -> MPoly<T> {
        if rows.len() == 1 {
            return entry(rows[0], cols[0]);
        }
        let mut acc = MPoly::zero(nvars);
        for (k, &r) in rows.iter().enumerate() {
            let e = entry(r, cols[0]);
            if e.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let minor = det_rec(&sub_rows, &cols[1..], entry, nvars);
            let term = e.mul(&minor);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
        }
        acc
    }
    let idx: Vec<usize> = (0..n).collect();
    det_rec(&idx, &idx, &entry, m)
}

/// Finds an invertible X with X*A = B*X over the base field, if one exists.
///
/// The intertwiner space is computed exactly; an invertible element is then
/// searched among all small-integer coefficient combinations (entries in
/// -2..=2). If every combination is singular and the space is small enough,
/// a symbolic determinant of the generic combination settles existence.
pub fn conjugator_solve<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    let n = a.require_square()?;
    let nb = b.require_square()?;
    if n != nb {
        return Err(Error::DimMismatch { expected: n, got: nb });
    }
    // linear system on vec(X): (X A - B X) = 0
    let n2 = n * n;
    let sys = Matrix::from_fn(n2, n2, |row, col| {
        let (i, j) = (row / n, row % n);
        let (p, q) = (col / n, col % n);
        // coefficient of X[p][q] in (X A - B X)[i][j]
        let mut c = T::zero();
        if p == i {
            c = c + a.at(q, j).clone();
        }
        if q == j {
            c = c - b.at(i, p).clone();
        }
        c
    });
    let kernel: Vec<Matrix<T>> = sys
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect();
    if kernel.is_empty() {
        return Ok(None);
    }
    let m = kernel.len();

    // single basis elements first, then the full small grid
    for k in &kernel {
        if k.is_invertible() {
            return Ok(Some(k.clone()));
        }
    }
    let grid_size = 5u64.checked_pow(m as u32);
    if let Some(total) = grid_size.filter(|&t| t <= 200_000) {
        let mut coeffs = vec![-2i64; m];
        for step in 0..total {
            if step > 0 {
                let mut i = 0;
                loop {
                    coeffs[i] += 1;
                    if coeffs[i] <= 2 {
                        break;
                    }
                    coeffs[i] = -2;
                    i += 1;
                }
            }
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let mut cand = Matrix::zero(n, n);
            for (c, k) in coeffs.iter().zip(&kernel) {
                if *c != 0 {
                    cand = cand.add(&k.scale(&T::from_int(*c)));
                }
            }
            if cand.is_invertible() {
                return Ok(Some(cand));
            }
        }
    }
    // symbolic fallback: the generic-combination determinant vanishes
    // identically iff no invertible solution exists
    if n <= 5 {
        let det = symbolic_combination_det(&kernel, n);
        if det.is_zero() {
            return Ok(None);
        }
        // a nonzero polynomial of per-variable degree <= n cannot vanish on
        // the whole grid {0..n}^m; walk it until a witness appears
        let mut coeffs = vec![0u64; m];
        loop {
            let mut cand = Matrix::zero(n, n);
            for (c, k) in coeffs.iter().zip(&kernel) {
                if *c != 0 {
                    cand = cand.add(&k.scale(&T::from_int(*c as i64)));
                }
            }
            if cand.is_invertible() {
                return Ok(Some(cand));
            }
            let mut i = 0;
            loop {
                if i == m {
                    // exhausted: contradicts det != 0
                    return Ok(None);
                }
                coeffs[i] += 1;
                if coeffs[i] <= n as u64 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
    Err(Error::cap("conjugator invertibility search", 200_000))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, Q};

    fn mat(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| qi(rows[i][j]))
    }

    fn poly(coeffs: &[i64]) -> Poly<Q> {
        Poly::new(coeffs.iter().map(|&c| qi(c)).collect())
    }

    /// Independent 2x2 characteristic polynomial by cofactor expansion.
    fn charpoly2_oracle(m: &Matrix<Q>) -> Poly<Q> {
        let tr = m.at(0, 0).clone() + m.at(1, 1).clone();
        let det = m.at(0, 0).clone() * m.at(1, 1).clone()
            - m.at(0, 1).clone() * m.at(1, 0).clone();
        Poly::new(vec![det, -tr, qi(1)])
    }

    #[test]
    fn charpoly_examples() {
        // identity: x^2 - 2x + 1
        let id = Matrix::<Q>::identity(2);
        assert_eq!(charpoly(&id).unwrap(), poly(&[1, -2, 1]));
        // psi: x^2 - 3x + 1, frozen from the cofactor oracle
        let psi = mat(&[&[2, 1], &[1, 1]]);
        assert_eq!(charpoly(&psi).unwrap(), charpoly2_oracle(&psi));
        assert_eq!(charpoly(&psi).unwrap(), poly(&[1, -3, 1]));
        // rotation: x^2 + 1
        let rot = mat(&[&[0, -1], &[1, 0]]);
        assert_eq!(charpoly(&rot).unwrap(), charpoly2_oracle(&rot));
        assert_eq!(charpoly(&rot).unwrap(), poly(&[1, 0, 1]));
        // non-square input errors
        let rect = Matrix::<Q>::zero(2, 3);
        assert!(matches!(charpoly(&rect), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn semisimple_and_unipotent_tests() {
        let id = Matrix::<Q>::identity(2);
        assert!(is_semisimple(&id).unwrap());
        assert!(is_unipotent(&id).unwrap());
        let psi = mat(&[&[2, 1], &[1, 1]]);
        assert!(is_semisimple(&psi).unwrap());
        assert!(!is_unipotent(&psi).unwrap());
        let shear = mat(&[&[1, 1], &[0, 1]]);
        assert!(!is_semisimple(&shear).unwrap());
        assert!(is_unipotent(&shear).unwrap());
    }

    #[test]
    fn minimal_poly_examples() {
        let shear = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(minimal_poly(&shear).unwrap(), poly(&[1, -2, 1]));
        let id = Matrix::<Q>::identity(3);
        assert_eq!(minimal_poly(&id).unwrap(), poly(&[-1, 1]));
        let psi = mat(&[&[2, 1], &[1, 1]]);
        assert_eq!(minimal_poly(&psi).unwrap(), poly(&[1, -3, 1]));
    }

    /// rho1(x,0,0,1): corner entry x, middle block psi.
    fn rho1(x: i64) -> Matrix<Q> {
        mat(&[&[1, 0, 0, x], &[0, 2, 1, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn jordan_chevalley_examples() {
        // semisimple block-diagonal element: S = itself, U = I
        let (s, u) = jordan_chevalley(&rho1(0)).unwrap();
        assert_eq!(s, rho1(0));
        assert!(u.is_identity());
        // corner perturbation is no longer semisimple
        let (s, u) = jordan_chevalley(&rho1(1)).unwrap();
        assert!(!u.is_identity());
        assert!(is_semisimple(&s).unwrap());
        assert!(is_unipotent(&u).unwrap());
        assert_eq!(s.mul(&u), rho1(1));
        assert_eq!(u.mul(&s), rho1(1));
        // already unipotent
        let shear = mat(&[&[1, 1], &[0, 1]]);
        let (s, u) = jordan_chevalley(&shear).unwrap();
        assert!(s.is_identity());
        assert_eq!(u, shear);
        // idempotence on the semisimple part
        let (s2, u2) = jordan_chevalley(&s).unwrap();
        assert!(s2.is_identity() && u2.is_identity());
        // singular input
        let sing = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(jordan_chevalley(&sing), Err(Error::Singular));
    }

    #[test]
    fn conjugator_examples() {
        let psi = mat(&[&[2, 1], &[1, 1]]);
        // (psi, psi): any invertible solution is fine
        let x = conjugator_solve(&psi, &psi).unwrap().unwrap();
        assert_eq!(x.mul(&psi), psi.mul(&x));
        assert!(x.is_invertible());
        // (psi, psi^{-1}): conjugate over Q
        let psi_inv = psi.inverse().unwrap();
        let x = conjugator_solve(&psi, &psi_inv).unwrap().unwrap();
        assert_eq!(x.mul(&psi), psi_inv.mul(&x));
        assert!(x.is_invertible());
        // (psi^2, psi^3): impossible, eigenvalues off the unit circle
        assert!(conjugator_solve(&psi.pow(2), &psi.pow(3)).unwrap().is_none());
        // dimension mismatch
        let id3 = Matrix::<Q>::identity(3);
        assert!(matches!(
            conjugator_solve(&psi, &id3),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn symbolic_fallback_on_all_singular_grid() {
        // A = B = diag(1,2): intertwiners are diagonal, grid finds diag(1,1)
        let d = mat(&[&[1, 0], &[0, 2]]);
        let x = conjugator_solve(&d, &d).unwrap().unwrap();
        assert!(x.is_invertible());
    }
}
