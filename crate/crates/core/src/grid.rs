//! Phase-space grids and sampled fields.
//!
//! Fields are cell-centered: `values[ix * nv + iv]` is the cell average at
//! `(x_centers[ix], v_centers[iv])`, so that total mass is the exact
//! weighted sum of values and the solver's flux bookkeeping telescopes to
//! machine precision.

use std::sync::Arc;

use rand::Rng;

use crate::quad::pairwise_sum;

/// A 1-d cell partition: centers with positive widths.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1d {
    pub centers: Vec<f64>,
    pub widths: Vec<f64>,
}

impl Grid1d {
    /// Uniform partition of [lo, hi] into n cells.
    pub fn uniform(lo: f64, hi: f64, n: usize) -> Grid1d {
        assert!(n > 0 && hi > lo);
        let w = (hi - lo) / n as f64;
        Grid1d {
            centers: (0..n).map(|i| lo + (i as f64 + 0.5) * w).collect(),
            widths: vec![w; n],
        }
    }

    /// Partition of [0, 1] with geometrically refined cells near both
    /// walls (width doubling from `w_min` up to the uniform interior
    /// width `w_int`). Used for the near-wall Hölder experiments.
    pub fn wall_refined(w_min: f64, w_int: f64) -> Grid1d {
        assert!(w_min > 0.0 && w_min < w_int && w_int < 0.25);
        let mut left = Vec::new();
        let mut w = w_min;
        let mut x = 0.0;
        while w < w_int {
            left.push((x, w));
            x += w;
            // two cells per level keeps the growth ratio modest
            left.push((x, w));
            x += w;
            w *= 2.0;
        }
        let refined_span = x;
        let interior = 1.0 - 2.0 * refined_span;
        assert!(interior > 0.2, "refinement spans too much of the interval");
        let n_int = (interior / w_int).ceil() as usize;
        let w_act = interior / n_int as f64;
        let mut edges = Vec::new();
        let mut acc = 0.0;
        for &(_, w) in &left {
            edges.push((acc, w));
            acc += w;
        }
        for _ in 0..n_int {
            edges.push((acc, w_act));
            acc += w_act;
        }
        for &(_, w) in left.iter().rev() {
            edges.push((acc, w));
            acc += w;
        }
        let centers = edges.iter().map(|&(e, w)| e + 0.5 * w).collect();
        let widths = edges.iter().map(|&(_, w)| w).collect();
        Grid1d { centers, widths }
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn lo(&self) -> f64 {
        self.centers[0] - 0.5 * self.widths[0]
    }

    pub fn hi(&self) -> f64 {
        *self.centers.last().unwrap() + 0.5 * self.widths.last().unwrap()
    }

    pub fn min_width(&self) -> f64 {
        self.widths.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// Tensor grid over [0,1] x [-L, L].
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    pub x: Grid1d,
    pub v: Grid1d,
}

impl PhaseGrid {
    /// Uniform nx-by-nv grid; nv is made odd so v = 0 lies on a cell
    /// center (the transport speed vanishes there).
    pub fn uniform(nx: usize, nv: usize, l: f64) -> Arc<PhaseGrid> {
        let nv = if nv % 2 == 0 { nv + 1 } else { nv };
        Arc::new(PhaseGrid {
            x: Grid1d::uniform(0.0, 1.0, nx),
            v: Grid1d::uniform(-l, l, nv),
        })
    }

    /// Wall-refined in x, uniform (odd) in v.
    pub fn wall_refined(w_min: f64, w_int: f64, nv: usize, l: f64) -> Arc<PhaseGrid> {
        let nv = if nv % 2 == 0 { nv + 1 } else { nv };
        Arc::new(PhaseGrid {
            x: Grid1d::wall_refined(w_min, w_int),
            v: Grid1d::uniform(-l, l, nv),
        })
    }

    pub fn l_max(&self) -> f64 {
        self.v.hi()
    }

    pub fn n_cells(&self) -> usize {
        self.x.len() * self.v.len()
    }

    /// Index of the cell whose center is v = 0.
    pub fn v_zero_index(&self) -> usize {
        let nv = self.v.len();
        let i = nv / 2;
        debug_assert!(self.v.centers[i].abs() < 1e-12 * self.v.hi());
        i
    }
}

/// A sampled scalar field f(x, v) at one time.
#[derive(Debug, Clone)]
pub struct PhaseField {
    pub grid: Arc<PhaseGrid>,
    pub values: Vec<f64>,
    pub time: f64,
}

impl PhaseField {
    pub fn zeros(grid: Arc<PhaseGrid>) -> PhaseField {
        let n = grid.n_cells();
        PhaseField { grid, values: vec![0.0; n], time: 0.0 }
    }

    pub fn from_fn<F: Fn(f64, f64) -> f64>(grid: Arc<PhaseGrid>, f: F) -> PhaseField {
        let nv = grid.v.len();
        let mut values = vec![0.0; grid.n_cells()];
        for (ix, &x) in grid.x.centers.iter().enumerate() {
            for (iv, &v) in grid.v.centers.iter().enumerate() {
                values[ix * nv + iv] = f(x, v);
            }
        }
        PhaseField { grid, values, time: 0.0 }
    }

    #[inline]
    pub fn at(&self, ix: usize, iv: usize) -> f64 {
        self.values[ix * self.grid.v.len() + iv]
    }

    /// Total mass, deterministic summation order.
    pub fn mass(&self) -> f64 {
        let nv = self.grid.v.len();
        let per_cell: Vec<f64> = (0..self.values.len())
            .map(|k| {
                let (ix, iv) = (k / nv, k % nv);
                self.values[k] * self.grid.x.widths[ix] * self.grid.v.widths[iv]
            })
            .collect();
        pairwise_sum(&per_cell)
    }

    pub fn sup(&self) -> f64 {
        self.values.iter().cloned().fold(0.0_f64, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Weighted integral of g(x, v) f(x, v).
    pub fn moment<F: Fn(f64, f64) -> f64>(&self, g: F) -> f64 {
        let nv = self.grid.v.len();
        let per_cell: Vec<f64> = (0..self.values.len())
            .map(|k| {
                let (ix, iv) = (k / nv, k % nv);
                let x = self.grid.x.centers[ix];
                let v = self.grid.v.centers[iv];
                self.values[k] * g(x, v) * self.grid.x.widths[ix] * self.grid.v.widths[iv]
            })
            .collect();
        pairwise_sum(&per_cell)
    }

    /// x-marginal H(v) = int f dx, one value per v cell.
    pub fn x_marginal(&self) -> Vec<f64> {
        let nv = self.grid.v.len();
        (0..nv)
            .map(|iv| {
                let col: Vec<f64> = (0..self.grid.x.len())
                    .map(|ix| self.values[ix * nv + iv] * self.grid.x.widths[ix])
                    .collect();
                pairwise_sum(&col)
            })
            .collect()
    }
}

/// Initial-data presets shared by the grid solvers and the Monte Carlo
/// oracle, so the two can be run on matched data.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialData {
    /// exp(-(x-x0)^2/2sx^2 - (v-v0)^2/2sv^2), restricted to the domain.
    GaussianBlob { x0: f64, v0: f64, sx: f64, sv: f64 },
    /// Indicator of the Euclidean ball of radius r around (x0, v0).
    Ball { x0: f64, v0: f64, r: f64 },
    /// Separable bump x(1-x) * exp(-v^2/2).
    Product,
    /// All particles at one phase point (Monte Carlo only; the grid
    /// version is a single-cell spike).
    PointMass { x0: f64, v0: f64 },
}

impl InitialData {
    /// Unnormalized density at (x, v); zero outside [0,1] x R.
    pub fn density(&self, x: f64, v: f64) -> f64 {
        if !(0.0..=1.0).contains(&x) {
            return 0.0;
        }
        match *self {
            InitialData::GaussianBlob { x0, v0, sx, sv } => {
                let dx = (x - x0) / sx;
                let dv = (v - v0) / sv;
                (-0.5 * (dx * dx + dv * dv)).exp()
            }
            InitialData::Ball { x0, v0, r } => {
                let d2 = (x - x0) * (x - x0) + (v - v0) * (v - v0);
                if d2 <= r * r {
                    1.0
                } else {
                    0.0
                }
            }
            InitialData::Product => x * (1.0 - x) * (-0.5 * v * v).exp(),
            InitialData::PointMass { .. } => 0.0,
        }
    }

    /// Sample a phase point from the normalized density restricted to
    /// [0,1] x [-l, l], by rejection.
    pub fn sample<R: Rng>(&self, rng: &mut R, l: f64) -> (f64, f64) {
        match *self {
            InitialData::PointMass { x0, v0 } => (x0, v0),
            InitialData::GaussianBlob { x0, v0, sx, sv } => loop {
                let x: f64 = x0 + sx * sample_standard_normal(rng);
                let v: f64 = v0 + sv * sample_standard_normal(rng);
                if (0.0..=1.0).contains(&x) && v.abs() <= l {
                    return (x, v);
                }
            },
            InitialData::Ball { x0, v0, r } => loop {
                let x = x0 + r * (2.0 * rng.gen::<f64>() - 1.0);
                let v = v0 + r * (2.0 * rng.gen::<f64>() - 1.0);
                if self.density(x, v) > 0.0 && v.abs() <= l {
                    return (x, v);
                }
            },
            InitialData::Product => loop {
                let x = rng.gen::<f64>();
                let v = sample_standard_normal(rng);
                // envelope: x(1-x) <= 1/4
                if rng.gen::<f64>() * 0.25 <= x * (1.0 - x) && v.abs() <= l {
                    return (x, v);
                }
            },
        }
    }

    /// Grid realization of the preset.
    pub fn realize(&self, grid: Arc<PhaseGrid>) -> PhaseField {
        match *self {
            InitialData::PointMass { x0, v0 } => {
                let mut f = PhaseField::zeros(grid);
                let ix = nearest(&f.grid.x.centers, x0);
                let iv = nearest(&f.grid.v.centers, v0);
                let w = f.grid.x.widths[ix] * f.grid.v.widths[iv];
                let nv = f.grid.v.len();
                f.values[ix * nv + iv] = 1.0 / w;
                f
            }
            _ => PhaseField::from_fn(grid, |x, v| self.density(x, v)),
        }
    }
}

fn nearest(xs: &[f64], x: f64) -> usize {
    let mut best = 0;
    let mut dist = f64::INFINITY;
    for (i, &c) in xs.iter().enumerate() {
        let d = (c - x).abs();
        if d < dist {
            dist = d;
            best = i;
        }
    }
    best
}

/// Box-Muller from two uniforms. Fixed consumption of randomness per call
/// (exactly two draws) keeps per-particle streams reproducible under any
/// execution order.
pub fn sample_standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn uniform_grid_covers_interval() {
        let g = Grid1d::uniform(0.0, 1.0, 64);
        assert_eq!(g.len(), 64);
        assert_relative_eq!(g.lo(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(g.hi(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(g.widths.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn wall_refined_partitions_unit_interval() {
        let g = Grid1d::wall_refined(1.0 / 16384.0, 1.0 / 128.0);
        assert_relative_eq!(g.widths.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(g.min_width(), 1.0 / 16384.0);
        // strictly increasing centers
        assert!(g.centers.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn v_zero_is_a_center() {
        let g = PhaseGrid::uniform(16, 32, 8.0);
        let i = g.v_zero_index();
        assert!(g.v.centers[i].abs() < 1e-14);
    }

    #[test]
    fn mass_of_constant_field() {
        let g = PhaseGrid::uniform(10, 21, 4.0);
        let f = PhaseField::from_fn(g, |_, _| 2.0);
        assert_relative_eq!(f.mass(), 2.0 * 8.0, max_relative = 1e-13);
    }

    #[test]
    fn blob_samples_match_density_moments() {
        use rand::SeedableRng;
        let blob = InitialData::GaussianBlob { x0: 0.5, v0: 0.0, sx: 0.08, sv: 0.5 };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let n = 200_000;
        let mut mx = 0.0;
        let mut mv2 = 0.0;
        for _ in 0..n {
            let (x, v) = blob.sample(&mut rng, 8.0);
            mx += x;
            mv2 += v * v;
        }
        mx /= n as f64;
        mv2 /= n as f64;
        // interior blob: truncation is negligible, moments are the
        // untruncated Gaussian ones
        assert_relative_eq!(mx, 0.5, epsilon = 2e-3);
        assert_relative_eq!(mv2, 0.25, max_relative = 2e-2);
    }
}
