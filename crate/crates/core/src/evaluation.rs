//! Numerical evaluation on the unit disk and the quadrature used to verify
//! orthonormality.
//!
//! The radial polynomial is evaluated by Horner's rule in `t = rho^2`
//! followed by one multiplication with `rho^|m|`; the powers descend in
//! steps of two, so this uses every coefficient exactly once. Inner products
//! over the disk combine Gauss-Legendre quadrature in `t` (the substitution
//! `rho^2 = t` makes the radial integrand a polynomial in `t`, integrated
//! exactly once the node count exceeds half its degree) with the trapezoid
//! rule in the angle, which is exact for trigonometric polynomials whenever
//! the node count exceeds the highest frequency. With the default 64 x 256
//! configuration, deviations from `pi delta_jj'` are pure rounding noise for
//! any degree this crate can represent in `i128`.

use std::f64::consts::{PI, TAU};

use crate::coefficients::{zernike_spec, AngularFactor, AngularKind, RadialPoly, ZernikeSpec};
use crate::error::{Error, Result};
use crate::indexing::NollIndex;

/// Point of the closed unit disk in polar coordinates.
///
/// `theta` is unrestricted because the angular factors are periodic; `rho`
/// must lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    rho: f64,
    theta: f64,
}

impl EvalPoint {
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rho) {
            return Err(Error::RhoDomain { rho });
        }
        Ok(EvalPoint { rho, theta })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Node counts for disk quadrature: Gauss-Legendre radially, trapezoid
/// angularly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureConfig {
    radial_nodes: usize,
    angular_nodes: usize,
}

impl QuadratureConfig {
    pub fn new(radial_nodes: usize, angular_nodes: usize) -> Result<Self> {
        if radial_nodes < 2 {
            return Err(Error::QuadratureConfig {
                reason: "radial node count below 2",
            });
        }
        if angular_nodes < 4 {
            return Err(Error::QuadratureConfig {
                reason: "angular node count below 4",
            });
        }
        Ok(QuadratureConfig {
            radial_nodes,
            angular_nodes,
        })
    }

    pub fn radial_nodes(&self) -> usize {
        self.radial_nodes
    }

    pub fn angular_nodes(&self) -> usize {
        self.angular_nodes
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            radial_nodes: 64,
            angular_nodes: 256,
        }
    }
}

/// Evaluates a radial polynomial without checking the domain. Accepts any
/// `rho`, which makes the analytic continuation outside the disk available
/// to parity checks.
pub fn eval_radial_unchecked(poly: &RadialPoly, rho: f64) -> f64 {
    let t = rho * rho;
    let mut acc = 0.0;
    for &c in poly.coeffs() {
        acc = acc * t + c as f64;
    }
    acc * rho.powi(poly.m_abs() as i32)
}

/// Evaluates a radial polynomial at `rho` in `[0, 1]`.
pub fn eval_radial(poly: &RadialPoly, rho: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::RhoDomain { rho });
    }
    Ok(eval_radial_unchecked(poly, rho))
}

fn angular_value(factor: AngularFactor, theta: f64) -> f64 {
    let arg = factor.frequency() as f64 * theta;
    match factor.kind() {
        AngularKind::Unity => 1.0,
        AngularKind::Cosine => arg.cos(),
        AngularKind::Sine => arg.sin(),
    }
}

/// Evaluates one polynomial at a point, optionally with the normalization
/// coefficient applied.
pub fn eval_zernike(spec: &ZernikeSpec, pt: EvalPoint, normalized: bool) -> f64 {
    let radial = eval_radial_unchecked(spec.radial(), pt.rho());
    let angular = angular_value(spec.angular(), pt.theta());
    let norm = if normalized { spec.norm().value() } else { 1.0 };
    norm * radial * angular
}

/// Legendre polynomial `P_n` and its derivative at `x`, by the three-term
/// recurrence. Requires `n >= 1` and `|x| < 1`.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    for k in 2..=n {
        let next = ((2 * k - 1) as f64 * x * cur - (k - 1) as f64 * prev) / k as f64;
        prev = cur;
        cur = next;
    }
    let derivative = n as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, derivative)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
///
/// Roots come from Newton iteration with the Chebyshev-like initial guess
/// `cos(pi (i + 3/4) / (n + 1/2))`, converged to one part in 1e15; each
/// weight is `2 / ((1 - x^2) P_n'(x)^2)`. Symmetric pairs are mirrored
/// rather than recomputed.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (value, derivative) = legendre_with_derivative(n, x);
            let step = value / derivative;
            x -= step;
            if step.abs() <= 1e-15 {
                break;
            }
        }
        let (_, derivative) = legendre_with_derivative(n, x);
        let weight = 2.0 / ((1.0 - x * x) * derivative * derivative);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weight;
        weights[n - 1 - i] = weight;
    }
    (nodes, weights)
}

/// Inner product `<Z_j1, Z_j2>` over the unit disk by tensor quadrature.
///
/// The integrand factorizes into radial and angular parts, so the tensor sum
/// collapses into the product of a radial Gauss-Legendre sum (in `t = rho^2`,
/// mapped from `[-1, 1]`, hence the factor 1/4) and an angular trapezoid sum.
/// Orthonormal polynomials give `pi` on the diagonal and `0` elsewhere.
pub fn inner_product(j1: NollIndex, j2: NollIndex, config: &QuadratureConfig) -> Result<f64> {
    let first = zernike_spec(j1)?;
    let second = zernike_spec(j2)?;
    let (nodes, weights) = gauss_legendre(config.radial_nodes);
    let mut radial = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let t = 0.5 * (x + 1.0);
        let rho = t.sqrt();
        radial += 0.25
            * w
            * eval_radial_unchecked(first.radial(), rho)
            * eval_radial_unchecked(second.radial(), rho);
    }
    let mut angular = 0.0;
    for i in 0..config.angular_nodes {
        let theta = TAU * i as f64 / config.angular_nodes as f64;
        angular += angular_value(first.angular(), theta) * angular_value(second.angular(), theta);
    }
    angular *= TAU / config.angular_nodes as f64;
    Ok(first.norm().value() * second.norm().value() * radial * angular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::radial_coefficients;
    use crate::indexing::{validate_nm, BwIndex};

    fn bw(n: i64, m: i64) -> BwIndex {
        validate_nm(n, m).unwrap()
    }

    #[test]
    fn eval_point_checks_rho() {
        assert!(EvalPoint::new(-0.1, 0.0).is_err());
        assert!(EvalPoint::new(1.1, 0.0).is_err());
        assert!(EvalPoint::new(f64::NAN, 0.0).is_err());
        assert!(EvalPoint::new(1.0, -7.0).is_ok());
    }

    #[test]
    fn radial_known_values() {
        let poly = radial_coefficients(bw(4, 0)).unwrap();
        assert_eq!(eval_radial(&poly, 1.0).unwrap(), 1.0);
        assert_eq!(eval_radial(&poly, 0.0).unwrap(), 1.0);
        // 6/16 - 6/4 + 1
        assert!((eval_radial(&poly, 0.5).unwrap() - (-0.125)).abs() < 1e-15);
        assert!(eval_radial(&poly, 2.0).is_err());
    }

    #[test]
    fn zernike_value_includes_all_factors() {
        let spec = zernike_spec(NollIndex::new(4).unwrap()).unwrap();
        let pt = EvalPoint::new(1.0, 0.0).unwrap();
        assert_eq!(eval_zernike(&spec, pt, false), 1.0);
        assert_eq!(eval_zernike(&spec, pt, true), 3.0f64.sqrt());
    }

    #[test]
    fn gauss_legendre_small_rules() {
        let (nodes, weights) = gauss_legendre(2);
        let x = 1.0 / 3.0f64.sqrt();
        assert!((nodes[0] + x).abs() < 1e-15 && (nodes[1] - x).abs() < 1e-15);
        assert!((weights[0] - 1.0).abs() < 1e-15 && (weights[1] - 1.0).abs() < 1e-15);

        let (nodes, weights) = gauss_legendre(3);
        let x = (3.0f64 / 5.0).sqrt();
        assert!((nodes[0] + x).abs() < 1e-15 && nodes[1].abs() < 1e-15);
        assert!((weights[0] - 5.0 / 9.0).abs() < 1e-15);
        assert!((weights[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // degree 2n-1 on [-1, 1]: x^k integrates to 0 or 2/(k+1)
        let (nodes, weights) = gauss_legendre(8);
        for k in 0..=15u32 {
            let sum: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            let exact = if k % 2 == 1 {
                0.0
            } else {
                2.0 / (k as f64 + 1.0)
            };
            assert!((sum - exact).abs() < 1e-13, "k={k}: {sum} vs {exact}");
        }
    }

    #[test]
    fn inner_product_diagonal_is_pi() {
        let config = QuadratureConfig::default();
        for j in [1u64, 4, 11, 22, 36] {
            let j = NollIndex::new(j).unwrap();
            let value = inner_product(j, j, &config).unwrap();
            assert!((value - PI).abs() < 1e-12, "j={j}: {value}");
        }
    }

    #[test]
    fn inner_product_off_diagonal_vanishes() {
        let config = QuadratureConfig::default();
        for (a, b) in [(1u64, 4u64), (2, 3), (4, 11), (5, 13), (7, 8), (12, 24)] {
            let a = NollIndex::new(a).unwrap();
            let b = NollIndex::new(b).unwrap();
            let value = inner_product(a, b, &config).unwrap();
            assert!(value.abs() < 1e-12, "({a}, {b}): {value}");
        }
    }

    #[test]
    fn too_few_angular_nodes_alias() {
        // cos(4 theta) sampled at multiples of pi/2 aliases to 1, so the
        // inner product of Z_6 with itself doubles instead of giving pi
        let config = QuadratureConfig::new(64, 4).unwrap();
        let j = NollIndex::new(6).unwrap();
        let value = inner_product(j, j, &config).unwrap();
        assert!((value - PI).abs() > 1.0);
    }

    #[test]
    fn quadrature_config_minimums() {
        assert!(QuadratureConfig::new(1, 256).is_err());
        assert!(QuadratureConfig::new(64, 3).is_err());
        assert!(QuadratureConfig::new(2, 4).is_ok());
    }
}
