pub mod error;

pub use error::CoreError;

#[cfg(test)]
mod probe {
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    #[test]
    fn complex_symmetric_eigen_works() {
        let h = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -0.5),
                Complex64::new(0.0, 0.5),
                Complex64::new(-1.0, 0.0),
            ],
        );
        let eig = h.clone().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        let expected = (1.0f64 + 0.25).sqrt();
        assert!((vals[0] + expected).abs() < 1e-12, "{vals:?}");
        assert!((vals[1] - expected).abs() < 1e-12, "{vals:?}");
        // reconstruction
        let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x, 0.0)));
        let rec = &eig.eigenvectors * d * eig.eigenvectors.adjoint();
        assert!((rec - h).iter().all(|c| c.norm() < 1e-12));
    }
}
