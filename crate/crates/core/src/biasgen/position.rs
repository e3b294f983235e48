//! Position function: maps the position-related variables onto the unit
//! simplex through a biased remapping, then shapes the front with `p`.

/// Averages the position variables into `m - 1` group means. Group `i`
/// (0-based) holds variables `i, i + (m-1), i + 2(m-1), ...`.
pub fn sigma(x_pos: &[f64], m: usize) -> Vec<f64> {
    assert!(m >= 2, "at least two objectives are required");
    let groups = m - 1;
    assert!(
        x_pos.len() >= groups,
        "need at least m-1 = {groups} position variables, got {}",
        x_pos.len()
    );
    (0..groups)
        .map(|i| {
            let (sum, count) = x_pos
                .iter()
                .skip(i)
                .step_by(groups)
                .fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
            sum / count as f64
        })
        .collect()
}

/// Simplex coordinates of the position-bias center. A prefix of `c_pos`
/// summing to one leaves the remaining coordinates undefined; they are set
/// to zero.
pub fn chat(c_pos: &[f64]) -> Vec<f64> {
    let m = c_pos.len();
    let mut out = Vec::with_capacity(m.saturating_sub(1));
    let mut prefix = 0.0;
    for &c in &c_pos[..m - 1] {
        let denom = 1.0 - prefix;
        prefix += c;
        if denom <= 1e-15 {
            out.push(0.0);
        } else {
            out.push(((1.0 - prefix) / denom).clamp(0.0, 1.0));
        }
    }
    out
}

/// Biased remapping of one group mean. Both ends of `[0, 1]` map to
/// `chat`; the minimum sits at `chat / 2` and the maximum at
/// `(1 + chat) / 2`.
pub fn remap(sigma: f64, chat: f64, gamma: f64) -> f64 {
    let v = if sigma < chat {
        2f64.powf(gamma) * chat.powf(1.0 - gamma) * (sigma - chat / 2.0).abs().powf(gamma)
    } else if sigma > chat {
        1.0 - 2f64.powf(gamma)
            * (1.0 - chat).powf(1.0 - gamma)
            * (sigma - (1.0 + chat) / 2.0).abs().powf(gamma)
    } else {
        sigma
    };
    v.clamp(0.0, 1.0)
}

/// Maps `m - 1` coordinates in `[0, 1]` onto the unit simplex in `R^m`.
pub fn simplex_map(xhat: &[f64]) -> Vec<f64> {
    let m = xhat.len() + 1;
    let mut y = Vec::with_capacity(m);
    let mut prod = 1.0;
    for &v in xhat {
        y.push((1.0 - v) * prod);
        prod *= v;
    }
    y.push(prod);
    y
}

/// Simplex image of the position variables.
pub fn simplex_point(x_pos: &[f64], chat_v: &[f64], gamma: f64) -> Vec<f64> {
    let m = chat_v.len() + 1;
    let xhat: Vec<f64> = sigma(x_pos, m)
        .into_iter()
        .zip(chat_v)
        .map(|(s, &c)| remap(s, c, gamma))
        .collect();
    simplex_map(&xhat)
}

/// Front shape applied to a simplex point: `y^p`, or `1 - y^p` for the
/// inverted variants.
pub fn shape(y: &[f64], p: &[f64], inverted: bool) -> Vec<f64> {
    y.iter()
        .zip(p)
        .map(|(&yi, &pi)| {
            let v = yi.powf(pi);
            if inverted {
                1.0 - v
            } else {
                v
            }
        })
        .collect()
}
