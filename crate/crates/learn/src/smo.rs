//! Sequential minimal optimization for the linear soft-margin SVM dual.
//!
//! Classic two-loop structure (a full pass alternating with non-bound
//! passes) with deterministic first-violator working-pair selection, so a
//! given dataset always trains to the same model. The linear kernel lets
//! the weight vector be maintained directly, which keeps error evaluation
//! at O(d) without an error cache.

/// Solver hyperparameters. Defaults mirror common toolkit defaults: C = 1,
/// KKT tolerance 1e-3, numerical epsilon 1e-12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoParams {
    pub c: f64,
    pub tolerance: f64,
    pub epsilon: f64,
}

impl Default for SmoParams {
    fn default() -> Self {
        SmoParams {
            c: 1.0,
            tolerance: 1e-3,
            epsilon: 1e-12,
        }
    }
}

/// A trained binary classifier: `f(x) = w . x + b`, positive predicts the
/// pair's first class.
#[derive(Debug, Clone)]
pub struct BinarySvm {
    pub weights: Vec<f64>,
    pub bias: f64,
    /// Dual variables, kept for feasibility checks.
    pub alphas: Vec<f64>,
    pub passes: usize,
}

impl BinarySvm {
    pub fn decision(&self, x: &[f64]) -> f64 {
        dot(&self.weights, x) + self.bias
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Solver<'a> {
    xs: &'a [Vec<f64>],
    ys: &'a [f64],
    params: SmoParams,
    alphas: Vec<f64>,
    weights: Vec<f64>,
    bias: f64,
}

impl<'a> Solver<'a> {
    fn output(&self, i: usize) -> f64 {
        dot(&self.weights, &self.xs[i]) + self.bias
    }

    fn error(&self, i: usize) -> f64 {
        self.output(i) - self.ys[i]
    }

    fn kernel(&self, i: usize, j: usize) -> f64 {
        dot(&self.xs[i], &self.xs[j])
    }

    fn is_non_bound(&self, i: usize) -> bool {
        self.alphas[i] > 0.0 && self.alphas[i] < self.params.c
    }

    fn take_step(&mut self, i1: usize, i2: usize) -> bool {
        if i1 == i2 {
            return false;
        }
        let (a1_old, a2_old) = (self.alphas[i1], self.alphas[i2]);
        let (y1, y2) = (self.ys[i1], self.ys[i2]);
        let (e1, e2) = (self.error(i1), self.error(i2));
        let s = y1 * y2;
        let c = self.params.c;
        let eps = self.params.epsilon;

        let (low, high) = if (y1 - y2).abs() > f64::EPSILON {
            ((a2_old - a1_old).max(0.0), (c + a2_old - a1_old).min(c))
        } else {
            ((a2_old + a1_old - c).max(0.0), (a2_old + a1_old).min(c))
        };
        if (high - low).abs() < eps {
            return false;
        }

        let k11 = self.kernel(i1, i1);
        let k12 = self.kernel(i1, i2);
        let k22 = self.kernel(i2, i2);
        let eta = k11 + k22 - 2.0 * k12;

        let mut a2 = if eta > eps {
            (a2_old + y2 * (e1 - e2) / eta).clamp(low, high)
        } else {
            // Degenerate direction: evaluate the dual objective at both ends.
            let f1 = y1 * (e1 + self.bias) - a1_old * k11 - s * a2_old * k12;
            let f2 = y2 * (e2 + self.bias) - s * a1_old * k12 - a2_old * k22;
            let l1 = a1_old + s * (a2_old - low);
            let h1 = a1_old + s * (a2_old - high);
            let low_obj = l1 * f1 + low * f2
                + 0.5 * l1 * l1 * k11
                + 0.5 * low * low * k22
                + s * low * l1 * k12;
            let high_obj = h1 * f1 + high * f2
                + 0.5 * h1 * h1 * k11
                + 0.5 * high * high * k22
                + s * high * h1 * k12;
            if low_obj < high_obj - eps {
                low
            } else if low_obj > high_obj + eps {
                high
            } else {
                a2_old
            }
        };
        // Snap to the box to avoid vanishing residuals.
        if a2 < eps {
            a2 = 0.0;
        } else if a2 > c - eps {
            a2 = c;
        }
        if (a2 - a2_old).abs() < eps * (a2 + a2_old + eps) {
            return false;
        }
        let a1 = a1_old + s * (a2_old - a2);
        let a1 = if a1 < eps {
            0.0
        } else if a1 > c - eps {
            c
        } else {
            a1
        };

        let d1 = y1 * (a1 - a1_old);
        let d2 = y2 * (a2 - a2_old);

        // Threshold update keeps f(x) consistent with the KKT conditions of
        // whichever multiplier ends non-bound.
        let b1 = e1 + d1 * k11 + d2 * k12;
        let b2 = e2 + d1 * k12 + d2 * k22;
        let delta_b = if a1 > 0.0 && a1 < c {
            b1
        } else if a2 > 0.0 && a2 < c {
            b2
        } else {
            (b1 + b2) / 2.0
        };
        self.bias -= delta_b;

        for (w, (v1, v2)) in self
            .weights
            .iter_mut()
            .zip(self.xs[i1].iter().zip(&self.xs[i2]))
        {
            *w += d1 * v1 + d2 * v2;
        }
        self.alphas[i1] = a1;
        self.alphas[i2] = a2;
        true
    }

    fn examine(&mut self, i2: usize) -> bool {
        let y2 = self.ys[i2];
        let a2 = self.alphas[i2];
        let e2 = self.error(i2);
        let r2 = e2 * y2;
        let violates = (r2 < -self.params.tolerance && a2 < self.params.c)
            || (r2 > self.params.tolerance && a2 > 0.0);
        if !violates {
            return false;
        }

        // Second-choice heuristic: the non-bound partner with the largest
        // |E1 - E2|, lowest index on ties.
        let mut best: Option<(f64, usize)> = None;
        for i1 in 0..self.xs.len() {
            if self.is_non_bound(i1) {
                let gap = (self.error(i1) - e2).abs();
                if best.is_none_or(|(g, _)| gap > g) {
                    best = Some((gap, i1));
                }
            }
        }
        if let Some((_, i1)) = best {
            if self.take_step(i1, i2) {
                return true;
            }
        }
        // Fall back to every non-bound example, then every example, in
        // ascending index order.
        for i1 in 0..self.xs.len() {
            if self.is_non_bound(i1) && self.take_step(i1, i2) {
                return true;
            }
        }
        for i1 in 0..self.xs.len() {
            if self.take_step(i1, i2) {
                return true;
            }
        }
        false
    }
}

/// Solve the binary problem. `ys` must be +-1. Rows are examined in index
/// order, so training is fully deterministic.
pub fn solve_binary(xs: &[Vec<f64>], ys: &[f64], params: SmoParams) -> BinarySvm {
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty(), "empty training set");
    debug_assert!(ys.iter().all(|y| *y == 1.0 || *y == -1.0));
    let dim = xs[0].len();

    let mut solver = Solver {
        xs,
        ys,
        params,
        alphas: vec![0.0; xs.len()],
        weights: vec![0.0; dim],
        bias: 0.0,
    };

    // Safety valve against pathological cycling; generous enough that every
    // practical dataset converges long before reaching it.
    let max_passes = 200 + 200 * xs.len();
    let mut passes = 0usize;
    let mut examine_all = true;
    let mut num_changed = 1usize;
    while (num_changed > 0 || examine_all) && passes < max_passes {
        num_changed = 0;
        for i in 0..xs.len() {
            if examine_all || solver.is_non_bound(i) {
                num_changed += solver.examine(i) as usize;
            }
        }
        if examine_all {
            examine_all = false;
        } else if num_changed == 0 {
            examine_all = true;
        }
        passes += 1;
    }

    BinarySvm {
        weights: solver.weights,
        bias: solver.bias,
        alphas: solver.alphas,
        passes,
    }
}

/// Largest KKT violation of the dual solution; feasibility oracle for tests.
pub fn max_kkt_violation(svm: &BinarySvm, xs: &[Vec<f64>], ys: &[f64], params: &SmoParams) -> f64 {
    let mut worst: f64 = 0.0;
    for ((x, &y), &alpha) in xs.iter().zip(ys).zip(&svm.alphas) {
        let margin = y * svm.decision(x);
        let violation = if alpha <= params.epsilon {
            (1.0 - margin).max(0.0)
        } else if alpha >= params.c - params.epsilon {
            (margin - 1.0).max(0.0)
        } else {
            (margin - 1.0).abs()
        };
        worst = worst.max(violation);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separable_points_reach_full_training_accuracy() {
        let xs = vec![
            vec![0.0, 0.0],
            vec![0.0, 1.0],
            vec![5.0, 5.0],
            vec![5.0, 6.0],
        ];
        let ys = vec![-1.0, -1.0, 1.0, 1.0];
        let svm = solve_binary(&xs, &ys, SmoParams::default());
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(svm.decision(x).signum(), *y);
        }
    }

    #[test]
    fn dual_constraints_hold() {
        let xs = vec![
            vec![0.0, 0.2],
            vec![0.3, 0.1],
            vec![0.9, 0.8],
            vec![1.0, 0.7],
            vec![0.2, 0.1],
            vec![0.8, 1.0],
        ];
        let ys = vec![-1.0, -1.0, 1.0, 1.0, -1.0, 1.0];
        let params = SmoParams::default();
        let svm = solve_binary(&xs, &ys, params);
        let sum: f64 = svm.alphas.iter().zip(&ys).map(|(a, y)| a * y).sum();
        assert!(sum.abs() < 1e-9, "sum alpha_i y_i = {sum}");
        for &a in &svm.alphas {
            assert!((-params.epsilon..=params.c + params.epsilon).contains(&a));
        }
        assert!(max_kkt_violation(&svm, &xs, &ys, &params) <= params.tolerance + 1e-9);
    }

    #[test]
    fn xor_is_not_linearly_separable() {
        let xs = vec![
            vec![0.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
        ];
        let ys = vec![1.0, 1.0, -1.0, -1.0];
        let params = SmoParams::default();
        let svm = solve_binary(&xs, &ys, params);
        let correct = xs
            .iter()
            .zip(&ys)
            .filter(|(x, y)| svm.decision(x).signum() == **y)
            .count();
        assert!(correct <= 3, "xor cannot be separated, got {correct}/4");
        // The dual must still be feasible at convergence.
        let sum: f64 = svm.alphas.iter().zip(&ys).map(|(a, y)| a * y).sum();
        assert!(sum.abs() < 1e-9);
        assert!(max_kkt_violation(&svm, &xs, &ys, &params) <= params.tolerance + 1e-9);
    }

    #[test]
    fn training_is_deterministic() {
        let xs: Vec<Vec<f64>> = (0..30)
            .map(|i| vec![(i % 7) as f64 * 0.1, (i % 5) as f64 * 0.2])
            .collect();
        let ys: Vec<f64> = (0..30).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let a = solve_binary(&xs, &ys, SmoParams::default());
        let b = solve_binary(&xs, &ys, SmoParams::default());
        assert_eq!(a.weights, b.weights);
        assert_eq!(a.bias, b.bias);
        assert_eq!(a.alphas, b.alphas);
    }
}
