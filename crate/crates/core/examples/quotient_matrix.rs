//! Equitable quotient of `K_t ∇ (2K_1 ∪ K_{n−t−2})` and its characteristic
//! polynomial.

use spectral_factors::families::two_pendant_join;
use spectral_factors::quotient::{
    b1_partition, char_poly, eval_int, f_poly, matrix_spectral_radius, quotient_matrix,
};
use spectral_factors::spectral::spectral_radius;
use spectral_factors::theorems::format_real;

fn main() -> spectral_factors::Result<()> {
    for (t, n) in [(1, 6), (2, 8), (3, 12), (4, 20)] {
        let g = two_pendant_join(n, t)?;
        let b1 = quotient_matrix(&g, &b1_partition(n, t))?;
        let poly = char_poly(&b1)?;
        let lambda = matrix_spectral_radius(&b1, 1e-13)?;
        let rho = spectral_radius(&g, 1e-13)?.rho;
        println!(
            "t={t} n={n:<2} char_poly={poly:?} f(0)={} lambda1={} rho={} f(lambda1)={:.1e}",
            eval_int(&poly, 0),
            format_real(lambda),
            format_real(rho),
            f_poly(n as f64, t as f64, lambda)
        );
    }
    Ok(())
}
