//! Small quadrature and summation helpers shared across the crate.

/// Abscissas (positive half) and weights of the 32-point Gauss-Legendre
/// rule on [-1, 1].
const GL32_X: [f64; 16] = [
    0.048_307_665_687_738_316,
    0.144_471_961_582_796_49,
    0.239_287_362_252_137_07,
    0.331_868_602_282_127_65,
    0.421_351_276_130_635_35,
    0.506_899_908_932_229_39,
    0.587_715_757_240_762_33,
    0.663_044_266_930_215_2,
    0.732_182_118_740_289_68,
    0.794_483_795_967_942_41,
    0.849_367_613_732_569_97,
    0.896_321_155_766_052_12,
    0.934_906_075_937_739_69,
    0.964_762_255_587_506_43,
    0.985_611_511_545_268_34,
    0.997_263_861_849_481_56,
];
const GL32_W: [f64; 16] = [
    0.096_540_088_514_727_8,
    0.095_638_720_079_274_86,
    0.093_844_399_080_804_57,
    0.091_173_878_695_763_88,
    0.087_652_093_004_403_81,
    0.083_311_924_226_946_75,
    0.078_193_895_787_070_31,
    0.072_345_794_108_848_51,
    0.065_822_222_776_361_85,
    0.058_684_093_478_535_55,
    0.050_998_059_262_376_18,
    0.042_835_898_022_226_68,
    0.034_273_862_913_021_43,
    0.025_392_065_309_262_06,
    0.016_274_394_730_905_67,
    0.007_018_610_009_470_1,
];

/// 32-point Gauss-Legendre on [lo, hi].
pub fn gl32<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut acc = 0.0;
    for i in 0..16 {
        acc += GL32_W[i] * (f(c + h * GL32_X[i]) + f(c - h * GL32_X[i]));
    }
    acc * h
}

/// Composite GL over consecutive panels given by `breaks`.
pub fn gl32_panels<F: Fn(f64) -> f64>(f: &F, breaks: &[f64]) -> f64 {
    breaks.windows(2).map(|w| gl32(f, w[0], w[1])).sum()
}

/// Deterministic pairwise-tree summation: the same result regardless of
/// how callers chunk the work, and better rounding than a running sum.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Cumulative trapezoid of samples `ys` at nodes `xs`, anchored at 0 on
/// the left endpoint.
pub fn cumulative_trapezoid(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    assert_eq!(xs.len(), ys.len());
    let mut out = Vec::with_capacity(xs.len());
    let mut acc = 0.0;
    out.push(0.0);
    for i in 1..xs.len() {
        acc += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
        out.push(acc);
    }
    out
}

/// Least-squares line fit through (x, y); returns (slope, intercept, r^2,
/// slope standard error).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64, f64) {
    let n = xs.len() as f64;
    assert!(n >= 2.0);
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let r2 = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };
    let stderr = if n > 2.0 {
        (ss_res / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    (slope, intercept, r2, stderr)
}
