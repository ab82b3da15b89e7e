//! Gauss-Legendre rules on `[-1, 1]`, cached per order.

use std::sync::OnceLock;

const ORDERS: [usize; 7] = [16, 32, 64, 128, 256, 512, 1024];

/// Nodes and weights of the `n`-point rule, by Newton iteration on `P_n`.
fn compute_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: [OnceLock<(Vec<f64>, Vec<f64>)>; 7] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = ORDERS.iter().position(|&o| o == n).expect("cached order");
    CACHE[slot].get_or_init(|| compute_rule(n))
}

/// `∫_a^b f` with a fixed rule of order `n` (one of the cached orders).
pub(crate) fn fixed<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = rule(n);
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    half * nodes.iter().zip(weights).map(|(&x, &w)| w * f(mid + half * x)).sum::<f64>()
}

/// Doubles the order until successive estimates agree to `rel_tol`.
/// Returns the estimate and the last difference.
pub(crate) fn adaptive<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, rel_tol: f64) -> (f64, f64) {
    let mut previous = fixed(&mut f, a, b, ORDERS[0]);
    let mut diff = f64::INFINITY;
    for &n in &ORDERS[1..] {
        let current = fixed(&mut f, a, b, n);
        diff = (current - previous).abs();
        if diff <= rel_tol * current.abs() + 1e-300 {
            return (current, diff);
        }
        previous = current;
    }
    (previous, diff)
}
