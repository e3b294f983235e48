//! Strategy parameters that depend on the dimension and the population size.

/// `4 + floor(3 ln n)`.
pub fn default_lambda(n: usize) -> usize {
    assert!(n >= 1, "dimension must be positive");
    4 + (3.0 * (n as f64).ln()).floor() as usize
}

/// Recombination weights and learning rates for one `(n, lambda)` pair.
#[derive(Debug, Clone)]
pub struct StrategyParams {
    pub lambda: usize,
    pub mu: usize,
    pub weights: Vec<f64>,
    pub mu_eff: f64,
    pub c_sigma: f64,
    pub d_sigma: f64,
    pub c_c: f64,
    pub c1: f64,
    pub c_mu: f64,
    pub chi_n: f64,
    /// Expected squared Fisher norm of one parameter update under random
    /// selection; normalizes the population size adaptation path.
    pub update_norm: f64,
}

impl StrategyParams {
    pub fn new(n: usize, lambda: usize) -> Self {
        let nf = n as f64;
        let mu = (lambda / 2).max(1);
        let raw: Vec<f64> = (1..=mu)
            .map(|i| ((lambda as f64 + 1.0) / 2.0).ln() - (i as f64).ln())
            .collect();
        let total: f64 = raw.iter().sum();
        let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let mu_eff = 1.0 / weights.iter().map(|w| w * w).sum::<f64>();

        let c_sigma = (mu_eff + 2.0) / (nf + mu_eff + 5.0);
        let d_sigma = 1.0 + 2.0 * (((mu_eff - 1.0) / (nf + 1.0)).sqrt() - 1.0).max(0.0) + c_sigma;
        let c_c = (4.0 + mu_eff / nf) / (nf + 4.0 + 2.0 * mu_eff / nf);
        let c1 = 2.0 / ((nf + 1.3).powi(2) + mu_eff);
        let c_mu = (1.0 - c1).min(2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((nf + 2.0).powi(2) + mu_eff));
        let chi_n = nf.sqrt() * (1.0 - 1.0 / (4.0 * nf) + 1.0 / (21.0 * nf * nf));
        // mean part: n / mu_eff; covariance part: 0.5 * E||c1 (pp' - I) + c_mu sum w (zz' - I)||_F^2
        let update_norm = nf / mu_eff + 0.5 * (nf * nf + nf) * (c1 * c1 + c_mu * c_mu / mu_eff);

        StrategyParams { lambda, mu, weights, mu_eff, c_sigma, d_sigma, c_c, c1, c_mu, chi_n, update_norm }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_lambda_examples() {
        assert_eq!(default_lambda(7), 9);
        assert_eq!(default_lambda(11), 11);
        assert_eq!(default_lambda(1), 4);
    }

    #[test]
    fn weights_are_normalized_and_decreasing() {
        for lambda in [4, 9, 11, 72, 88] {
            let p = StrategyParams::new(7, lambda);
            assert!((p.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(p.weights.windows(2).all(|w| w[0] > w[1]));
            assert!(p.c1 + p.c_mu <= 1.0);
            assert!(p.mu_eff >= 1.0 && p.mu_eff <= p.mu as f64);
        }
    }
}
