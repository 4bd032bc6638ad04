//! Shared numerical helpers: gamma wrappers, the upper incomplete gamma
//! function, Gauss-Legendre nodes, and Richardson extrapolation.

use once_cell::sync::Lazy;

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

pub fn digamma(x: f64) -> f64 {
    statrs::function::gamma::digamma(x)
}

/// Upper incomplete gamma `Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt` for
/// `x > 0` and real `s` (including `s <= 0`).
pub fn upper_gamma(s: f64, x: f64) -> f64 {
    assert!(x > 0.0, "upper_gamma requires x > 0");
    if s > 0.0 && x < s + 1.0 {
        // lower series, then complement
        gamma(s) * (1.0 - lower_regularized_series(s, x))
    } else {
        upper_gamma_cf(s, x)
    }
}

/// Regularized lower incomplete gamma P(s, x) by power series; valid for
/// s > 0, best for x < s + 1.
fn lower_regularized_series(s: f64, x: f64) -> f64 {
    let mut ap = s;
    let mut sum = 1.0 / s;
    let mut del = sum;
    for _ in 0..500 {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if del.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    sum * (-x + s * x.ln() - ln_gamma(s)).exp()
}

/// Continued fraction for the upper incomplete gamma (modified Lentz).
fn upper_gamma_cf(s: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=500 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x + s * x.ln()).exp() * h
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[0, 1]`.
pub fn gauss_legendre_unit(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: Lazy<(Vec<f64>, Vec<f64>)> = Lazy::new(|| build_gauss_legendre(80));
    assert_eq!(n, 80, "only the cached 80-point rule is provided");
    &CACHE
}

fn build_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess on [-1, 1], refined by Newton
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j as f64 + 1.0) * x * p1 - j as f64 * p2) / (j as f64 + 1.0);
            }
            pp = n as f64 * (x * p0 - p1) / (x * x - 1.0);
            let dx = p0 / pp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    // map [-1, 1] -> [0, 1]
    for i in 0..n {
        nodes[i] = 0.5 * (nodes[i] + 1.0);
        weights[i] *= 0.5;
    }
    (nodes, weights)
}

/// Richardson-extrapolated central difference of `f` at `x`.
///
/// Builds the classic h^2 tableau from `levels` halvings of `h0`.
pub fn richardson_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h0: f64, levels: usize) -> f64 {
    let mut column: Vec<f64> = (0..levels)
        .map(|i| {
            let h = h0 / 2f64.powi(i as i32);
            (f(x + h) - f(x - h)) / (2.0 * h)
        })
        .collect();
    let mut factor = 4.0;
    while column.len() > 1 {
        column = column
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        factor *= 4.0;
    }
    column[0]
}

/// Richardson-extrapolated symmetric limit of `f` at `x`: the even part of
/// `f(x + h)` as `h -> 0`. Used for finite parts and numeric residues.
pub fn richardson_symmetric_limit<F: Fn(f64) -> f64>(f: F, x: f64, h0: f64, levels: usize) -> f64 {
    let mut column: Vec<f64> = (0..levels)
        .map(|i| {
            let h = h0 / 2f64.powi(i as i32);
            0.5 * (f(x + h) + f(x - h))
        })
        .collect();
    let mut factor = 4.0;
    while column.len() > 1 {
        column = column
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        factor *= 4.0;
    }
    column[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_gamma_against_closed_forms() {
        // Gamma(1, x) = e^{-x}
        for x in [0.5, 1.0, 3.0, 10.0] {
            assert!((upper_gamma(1.0, x) - (-x).exp()).abs() < 1e-14 * (-x).exp());
        }
        // Gamma(2, x) = (x + 1) e^{-x}
        for x in [1.0f64, 2.5, 7.0] {
            let want = (x + 1.0) * (-x).exp();
            assert!((upper_gamma(2.0, x) - want).abs() < 1e-13 * want);
        }
        // Gamma(0, x) = E_1(x); E_1(1) = 0.21938393439552027...
        assert!((upper_gamma(0.0, 1.0) - 0.21938393439552027).abs() < 1e-13);
        // Gamma(-1/2, 1) = 2/e - 2*sqrt(pi)*erfc(1) = 0.17814771178156069...
        assert!((upper_gamma(-0.5, 1.0) - 0.178_147_711_781_560_7).abs() < 1e-12);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_and_exponentials() {
        let (x, w) = gauss_legendre_unit(80);
        let quad =
            |f: &dyn Fn(f64) -> f64| -> f64 { x.iter().zip(w).map(|(&xi, &wi)| wi * f(xi)).sum() };
        assert!((quad(&|t| t * t) - 1.0 / 3.0).abs() < 1e-15);
        let want = 1f64.exp() - 1.0;
        assert!((quad(&|t| t.exp()) - want).abs() < 1e-14);
    }

    #[test]
    fn richardson_differentiates_accurately() {
        let d = richardson_derivative(|x| x.sin(), 0.7, 0.1, 4);
        assert!((d - 0.7f64.cos()).abs() < 1e-12);
    }
}
