extern crate blas_src;

use ndarray::Array2;
use ndarray_linalg::Eigh;
use num_complex::Complex64;

pub fn probe() -> (Complex64, f64) {
    let n = 64;
    let mut a = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = Complex64::new((i + j) as f64, (i as f64) - (j as f64));
        }
    }
    let h = &a + &a.t().mapv(|z| z.conj());
    let prod = h.dot(&h);
    let (vals, _) = h.eigh(ndarray_linalg::UPLO::Lower).unwrap();
    (prod[(0, 0)], vals[0])
}
