//! Derivative-free Nelder–Mead minimization in a fixed number of dimensions.

/// Settings for [`nelder_mead`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    pub max_iters: usize,
    /// Stop once both the simplex diameter and the spread of function values
    /// fall below this.
    pub tolerance: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self { max_iters: 200, tolerance: 1e-10 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum<const N: usize> {
    pub x: [f64; N],
    pub value: f64,
    pub iterations: usize,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

fn lerp<const N: usize>(from: &[f64; N], to: &[f64; N], t: f64) -> [f64; N] {
    std::array::from_fn(|i| from[i] + t * (to[i] - from[i]))
}

/// Minimizes `f` starting from an axis-aligned simplex of edge `step` at `x0`.
pub fn nelder_mead<const N: usize>(
    mut f: impl FnMut(&[f64; N]) -> f64,
    x0: [f64; N],
    step: f64,
    options: NelderMeadOptions,
) -> Minimum<N> {
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, f(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step;
        simplex.push((x, f(&x)));
    }

    let mut iterations = 0;
    while iterations < options.max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0];
        let worst = simplex[N];
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| x.iter().zip(&best.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if diameter < options.tolerance && (worst.1 - best.1).abs() < options.tolerance {
            break;
        }
        iterations += 1;

        let centroid: [f64; N] =
            std::array::from_fn(|i| simplex[..N].iter().map(|(x, _)| x[i]).sum::<f64>() / N as f64);
        let reflected = lerp(&centroid, &worst.0, -REFLECT);
        let fr = f(&reflected);

        if fr < best.1 {
            let expanded = lerp(&centroid, &worst.0, -EXPAND);
            let fe = f(&expanded);
            simplex[N] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
            continue;
        }
        if fr < simplex[N - 1].1 {
            simplex[N] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < worst.1 {
            let c = lerp(&centroid, &reflected, CONTRACT);
            (c, f(&c))
        } else {
            let c = lerp(&centroid, &worst.0, CONTRACT);
            (c, f(&c))
        };
        if fc < worst.1.min(fr) {
            simplex[N] = (contracted, fc);
            continue;
        }
        for vertex in simplex.iter_mut().skip(1) {
            let x = lerp(&best.0, &vertex.0, SHRINK);
            *vertex = (x, f(&x));
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    Minimum { x: simplex[0].0, value: simplex[0].1, iterations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let m = nelder_mead(|x: &[f64; 2]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2), [0.0, 0.0], 0.5, NelderMeadOptions::default());
        assert!((m.x[0] - 1.0).abs() < 1e-5 && (m.x[1] + 2.0).abs() < 1e-5);
        assert!(m.value < 1e-10);
    }

    #[test]
    fn rosenbrock_with_budget() {
        let opts = NelderMeadOptions { max_iters: 2000, tolerance: 1e-12 };
        let m = nelder_mead(|x: &[f64; 2]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2), [-1.2, 1.0], 0.1, opts);
        assert!((m.x[0] - 1.0).abs() < 1e-4 && (m.x[1] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn respects_iteration_cap() {
        let opts = NelderMeadOptions { max_iters: 3, tolerance: 0.0 };
        let m = nelder_mead(|x: &[f64; 1]| x[0] * x[0], [5.0], 1.0, opts);
        assert_eq!(m.iterations, 3);
    }
}
