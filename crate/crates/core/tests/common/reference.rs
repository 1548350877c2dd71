//! Direct, loop-per-cell evaluation of the semi-discrete right-hand side.
//!
//! Written without the library's face tables, scratch buffers or parallel
//! loops. Only the one-sided random interpolation next to the ends of a
//! random axis is borrowed from the library; its coefficient tables are
//! checked on their own elsewhere.

use stochastic_fv::models::{Model, Point};
use stochastic_fv::recon::Boundary;
use stochastic_fv::solver::Discretization;
use stochastic_fv::weno::{interp_boundary, Side, WenoParams};

const KAPPA_REF: f64 = 0.5 * 0.774_596_669_241_483_4; // (1/2)·√(3/5)
const MU: [f64; 3] = [5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0];

fn lagrange_at(nodes: &[f64], t: f64) -> Vec<f64> {
    (0..nodes.len())
        .map(|k| {
            let mut b = 1.0;
            for m in 0..nodes.len() {
                if m != k {
                    b *= (t - nodes[m]) / (nodes[k] - nodes[m]);
                }
            }
            b
        })
        .collect()
}

/// Centered WENO-Z value at offset `t` (in cell widths) from the middle of a
/// five-point window.
fn weno_centered(v: &[f64; 5], t: f64, p: &WenoParams) -> f64 {
    let cand: Vec<f64> = (0..3)
        .map(|k| {
            let pos = [k as f64 - 2.0, k as f64 - 1.0, k as f64];
            let l = lagrange_at(&pos, t);
            l[0] * v[k] + l[1] * v[k + 1] + l[2] * v[k + 2]
        })
        .collect();
    // linear weights: match the outer coefficients of the quartic interpolant
    let quartic = lagrange_at(&[-2.0, -1.0, 0.0, 1.0, 2.0], t);
    let p0 = lagrange_at(&[-2.0, -1.0, 0.0], t);
    let p2 = lagrange_at(&[0.0, 1.0, 2.0], t);
    let d0 = quartic[0] / p0[0];
    let d2 = quartic[4] / p2[2];
    let d = [d0, 1.0 - d0 - d2, d2];
    let sq = |a: f64| a * a;
    let beta = [
        13.0 / 12.0 * sq(v[0] - 2.0 * v[1] + v[2]) + 0.25 * sq(v[0] - 4.0 * v[1] + 3.0 * v[2]),
        13.0 / 12.0 * sq(v[1] - 2.0 * v[2] + v[3]) + 0.25 * sq(v[1] - v[3]),
        13.0 / 12.0 * sq(v[2] - 2.0 * v[3] + v[4]) + 0.25 * sq(3.0 * v[2] - 4.0 * v[3] + v[4]),
    ];
    let tau = (beta[2] - beta[0]).abs();
    let mean = v.iter().sum::<f64>() / 5.0;
    let phi = v.iter().map(|x| (x - mean).abs()).sum::<f64>() / 5.0;
    let alpha: Vec<f64> =
        (0..3).map(|k| d[k] * (1.0 + sq(tau / (beta[k] + p.eps1 * phi * phi + p.eps2)))).collect();
    let s: f64 = alpha.iter().sum();
    (0..3).map(|k| alpha[k] / s * cand[k]).sum()
}

/// Values at `(c − κ, c, c + κ)` of every cell of one random line.
fn line_nodes(vals: &[f64], p: &WenoParams) -> Vec<[f64; 3]> {
    let n = vals.len();
    if n == 1 {
        return vec![[vals[0]; 3]];
    }
    let first: [f64; 5] = [vals[0], vals[1], vals[2], vals[3], vals[4]];
    let last: [f64; 5] = [vals[n - 1], vals[n - 2], vals[n - 3], vals[n - 4], vals[n - 5]];
    (0..n)
        .map(|l| {
            if l <= 1 {
                [
                    interp_boundary(&first, l + 1, Side::Minus, p),
                    vals[l],
                    interp_boundary(&first, l + 1, Side::Plus, p),
                ]
            } else if l >= n - 2 {
                // mirrored window: the left node becomes the right one
                [
                    interp_boundary(&last, n - l, Side::Plus, p),
                    vals[l],
                    interp_boundary(&last, n - l, Side::Minus, p),
                ]
            } else {
                let w = [vals[l - 2], vals[l - 1], vals[l], vals[l + 1], vals[l + 2]];
                [weno_centered(&w, -KAPPA_REF, p), vals[l], weno_centered(&w, KAPPA_REF, p)]
            }
        })
        .collect()
}

/// Random-space node values of one face side: `out[r][q]` per component.
fn random_nodes(
    centre_vals: &[f64],
    nxi: usize,
    neta: Option<usize>,
    p: &WenoParams,
) -> Vec<Vec<f64>> {
    match neta {
        None => line_nodes(centre_vals, p).into_iter().map(|a| a.to_vec()).collect(),
        Some(ne) => {
            let mut out = vec![vec![0.0; 9]; nxi * ne];
            // along ξ for every η center
            let mut half = vec![[0.0; 3]; nxi * ne];
            for m in 0..ne {
                let line: Vec<f64> = (0..nxi).map(|l| centre_vals[l * ne + m]).collect();
                for (l, n) in line_nodes(&line, p).into_iter().enumerate() {
                    half[l * ne + m] = n;
                }
            }
            // then along η for every ξ node
            for l in 0..nxi {
                for a in 0..3 {
                    let line: Vec<f64> = (0..ne).map(|m| half[l * ne + m][a]).collect();
                    for (m, n) in line_nodes(&line, p).into_iter().enumerate() {
                        for b in 0..3 {
                            out[l * ne + m][a * 3 + b] = n[b];
                        }
                    }
                }
            }
            out
        }
    }
}

struct Setup<'a> {
    disc: &'a Discretization,
    nx: usize,
    ny: usize,
    nxi: usize,
    neta: Option<usize>,
    nr: usize,
    nc: usize,
    two_d: bool,
}

impl Setup<'_> {
    fn node(&self, r: usize, q: usize) -> (f64, f64) {
        let g = &self.disc.grid;
        let off = [-KAPPA_REF, 0.0, KAPPA_REF];
        match self.neta {
            None => {
                let l = r;
                (g.xi().center(l) + off[q] * g.dxi(), 0.0)
            }
            Some(ne) => {
                let (l, m) = (r / ne, r % ne);
                let e = g.eta().unwrap();
                (g.xi().center(l) + off[q / 3] * g.dxi(), e.center(m) + off[q % 3] * e.spacing())
            }
        }
    }

    fn n_nodes(&self) -> usize {
        if self.neta.is_some() {
            9
        } else {
            3
        }
    }

    fn weight(&self, r: usize, q: usize) -> f64 {
        let (xi, eta) = self.node(r, q);
        let mu = match self.neta {
            None => MU[q],
            Some(_) => MU[q / 3] * MU[q % 3],
        };
        mu * self.disc.pdf.eval(xi, eta)
    }

    fn centre_density(&self, r: usize) -> f64 {
        let g = &self.disc.grid;
        let (xi, eta) = match self.neta {
            None => (g.xi().center(r), 0.0),
            Some(ne) => (g.xi().center(r / ne), g.eta().unwrap().center(r % ne)),
        };
        self.disc.pdf.eval(xi, eta).max(1e-300)
    }

    fn bottom(&self, x: f64, y: f64, r: usize, q: usize) -> f64 {
        match &self.disc.model {
            Model::ShallowWater(m) => {
                let (xi, eta) = self.node(r, q);
                m.bottom.eval(Point { x, y, xi, eta })
            }
            Model::Euler(_) => 0.0,
        }
    }

    fn gamma(&self, r: usize, q: usize) -> f64 {
        let (xi, eta) = self.node(r, q);
        self.disc.model.gamma_at(xi, eta)
    }

    /// Bottom at the four (or two) faces of physical cell `(ix, iy)`.
    fn zbar(&self, ix: usize, iy: usize, r: usize) -> f64 {
        let g = &self.disc.grid;
        let x = g.x();
        let mut s = 0.0;
        for q in 0..self.n_nodes() {
            let w = self.weight(r, q);
            if self.two_d {
                let y = g.y().unwrap();
                let (xc, yc) = (x.center(ix), y.center(iy));
                s += w
                    * (self.bottom(x.face(ix), yc, r, q)
                        + self.bottom(x.face(ix + 1), yc, r, q)
                        + self.bottom(xc, y.face(iy), r, q)
                        + self.bottom(xc, y.face(iy + 1), r, q));
            } else {
                s += w * (self.bottom(x.face(ix), 0.0, r, q) + self.bottom(x.face(ix + 1), 0.0, r, q));
            }
        }
        if self.two_d {
            0.25 * s
        } else {
            0.5 * s
        }
    }
}

fn minmod(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b.min(c))
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b.max(c))
    } else {
        0.0
    }
}

fn euler_flux(u: &[f64], k: usize, gamma: f64) -> (Vec<f64>, f64, f64) {
    let n = u.len();
    let rho = u[0];
    let kin: f64 = (1..n - 1).map(|j| u[j] * u[j]).sum::<f64>() / rho;
    let p = (gamma - 1.0) * (u[n - 1] - 0.5 * kin);
    assert!(rho > 0.0 && p >= 0.0, "inadmissible reference state {u:?}");
    let un = u[k] / rho;
    let mut f: Vec<f64> = (0..n).map(|j| u[j] * un).collect();
    f[k] += p;
    f[n - 1] = un * (u[n - 1] + p);
    let c = (gamma * p / rho).sqrt();
    (f, un - c, un + c)
}

/// SWE face state from reconstructed `(w, momenta)`; returns conserved
/// state, flux, speed bounds.
fn swe_face(raw: &[f64], z: f64, k: usize, g: f64, eps: f64) -> (Vec<f64>, Vec<f64>, f64, f64) {
    let n = raw.len();
    let h = raw[0].max(z) - z;
    let mut state = vec![h; n];
    let mut vel = vec![0.0; n];
    for j in 1..n {
        let d = h.max(eps);
        vel[j] = 2.0 * h * raw[j] / (h * h + d * d);
        state[j] = h * vel[j];
    }
    let mut f: Vec<f64> = (0..n).map(|j| state[j] * vel[k]).collect();
    f[0] = state[k];
    f[k] += 0.5 * g * h * h;
    let c = (g * h).sqrt();
    (state, f, vel[k] - c, vel[k] + c)
}

/// `dU/dt` of every weighted average, field layout.
pub fn reference_rhs(disc: &Discretization, values: &[f64]) -> Vec<f64> {
    let g = &disc.grid;
    let s = Setup {
        disc,
        nx: g.nx(),
        ny: g.ny(),
        nxi: g.n_xi(),
        neta: g.eta().map(|a| a.n_cells()),
        nr: g.n_rand(),
        nc: disc.n_components(),
        two_d: g.y().is_some(),
    };
    let (nx, ny, nr, nc) = (s.nx, s.ny, s.nr, s.nc);
    let is_swe = matches!(disc.model, Model::ShallowWater(_));
    let at = |ix: usize, iy: usize, r: usize, c: usize| values[((ix * ny + iy) * nr + r) * nc + c];
    // values entering the reconstruction
    let mut rec = vec![0.0; values.len()];
    for ix in 0..nx {
        for iy in 0..ny {
            for r in 0..nr {
                for c in 0..nc {
                    let mut v = at(ix, iy, r, c);
                    if is_swe && c == 0 {
                        v += s.zbar(ix, iy, r);
                    }
                    rec[((ix * ny + iy) * nr + r) * nc + c] = v;
                }
            }
        }
    }
    let theta = disc.scheme.slope.theta();
    let mut rhs = vec![0.0; values.len()];
    let dirs: Vec<usize> = if s.two_d { vec![0, 1] } else { vec![0] };
    for &d in &dirs {
        let bc = disc.scheme.bc[d];
        let n_along = if d == 0 { nx } else { ny };
        let n_lines = if d == 0 { ny } else { nx };
        let spacing = if d == 0 { g.dx() } else { g.dy() };
        let k = d + 1;
        for line in 0..n_lines {
            let cell_val = |j: isize, r: usize, c: usize| -> f64 {
                let jj = match bc {
                    Boundary::Free => j.clamp(0, n_along as isize - 1) as usize,
                    Boundary::Periodic => j.rem_euclid(n_along as isize) as usize,
                };
                let (ix, iy) = if d == 0 { (jj, line) } else { (line, jj) };
                rec[((ix * ny + iy) * nr + r) * nc + c]
            };
            let slope = |j: isize, r: usize, c: usize| -> f64 {
                let ghost = (j < 0 || j as usize >= n_along) && bc == Boundary::Free;
                if ghost {
                    return 0.0;
                }
                let (um, u, up) = (cell_val(j - 1, r, c), cell_val(j, r, c), cell_val(j + 1, r, c));
                minmod(theta * (u - um), 0.5 * (up - um), theta * (up - u))
            };
            let mut fluxes = vec![vec![0.0; nr * nc]; n_along + 1];
            let mut h_below = vec![vec![0.0; nr * 9]; n_along + 1];
            let mut h_above = vec![vec![0.0; nr * 9]; n_along + 1];
            for f in 0..=n_along {
                let (jl, jr) = (f as isize - 1, f as isize);
                let face_pos = if d == 0 { g.x().face(f) } else { g.y().unwrap().face(f) };
                let (fx, fy) = if d == 0 {
                    (face_pos, if s.two_d { g.y().unwrap().center(line) } else { 0.0 })
                } else {
                    (g.x().center(line), face_pos)
                };
                // point values at random-cell centers, then nodes
                let mut below = vec![vec![vec![0.0; nc]; s.n_nodes()]; nr];
                let mut above = below.clone();
                for c in 0..nc {
                    let lo: Vec<f64> = (0..nr)
                        .map(|r| (cell_val(jl, r, c) + 0.5 * slope(jl, r, c)) * (1.0 / s.centre_density(r)))
                        .collect();
                    let hi: Vec<f64> = (0..nr)
                        .map(|r| (cell_val(jr, r, c) - 0.5 * slope(jr, r, c)) * (1.0 / s.centre_density(r)))
                        .collect();
                    let lo_n = random_nodes(&lo, s.nxi, s.neta, &disc.scheme.weno);
                    let hi_n = random_nodes(&hi, s.nxi, s.neta, &disc.scheme.weno);
                    for r in 0..nr {
                        for q in 0..s.n_nodes() {
                            below[r][q][c] = lo_n[r][q];
                            above[r][q][c] = hi_n[r][q];
                        }
                    }
                }
                for r in 0..nr {
                    let eval = |raw: &[f64], q: usize| -> (Vec<f64>, Vec<f64>, f64, f64) {
                        match &disc.model {
                            Model::Euler(_) => {
                                let (f, lo, hi) = euler_flux(raw, k, s.gamma(r, q));
                                (raw.to_vec(), f, lo, hi)
                            }
                            Model::ShallowWater(m) => {
                                swe_face(raw, s.bottom(fx, fy, r, q), k, m.g, m.eps)
                            }
                        }
                    };
                    let mid = s.n_nodes() / 2;
                    // speed bounds from the center node, hence the center γ
                    let (_, _, l1, n1) = eval(&below[r][mid], mid);
                    let (_, _, l2, n2) = eval(&above[r][mid], mid);
                    let am = l1.min(l2).min(0.0);
                    let ap = n1.max(n2).max(0.0);
                    for q in 0..s.n_nodes() {
                        let (um, fm, _, _) = eval(&below[r][q], q);
                        let (up, fp, _, _) = eval(&above[r][q], q);
                        let w = s.weight(r, q);
                        for c in 0..nc {
                            let h = if ap - am < 1e-12 {
                                0.5 * (fm[c] + fp[c])
                            } else {
                                let inv = 1.0 / (ap - am);
                                (ap * fm[c] - am * fp[c]) * inv + ap * am * inv * (up[c] - um[c])
                            };
                            fluxes[f][r * nc + c] += w * h;
                        }
                        h_below[f][r * 9 + q] = um[0];
                        h_above[f][r * 9 + q] = up[0];
                    }
                }
            }
            for j in 0..n_along {
                let (ix, iy) = if d == 0 { (j, line) } else { (line, j) };
                for r in 0..nr {
                    for c in 0..nc {
                        let o = ((ix * ny + iy) * nr + r) * nc + c;
                        rhs[o] -= (fluxes[j + 1][r * nc + c] - fluxes[j][r * nc + c]) * (1.0 / spacing);
                    }
                    if let Model::ShallowWater(m) = &disc.model {
                        let face = |f: usize| -> (f64, f64) {
                            let pos = if d == 0 { g.x().face(f) } else { g.y().unwrap().face(f) };
                            if d == 0 {
                                (pos, if s.two_d { g.y().unwrap().center(line) } else { 0.0 })
                            } else {
                                (g.x().center(line), pos)
                            }
                        };
                        let (xl, yl) = face(j);
                        let (xr, yr) = face(j + 1);
                        let mut src = 0.0;
                        for q in 0..s.n_nodes() {
                            let hl = h_above[j][r * 9 + q];
                            let hr = h_below[j + 1][r * 9 + q];
                            let zl = s.bottom(xl, yl, r, q);
                            let zr = s.bottom(xr, yr, r, q);
                            src += s.weight(r, q) * (-0.5 * m.g * (hl + hr) * (zr - zl));
                        }
                        rhs[((ix * ny + iy) * nr + r) * nc + k] += src * (1.0 / spacing);
                    }
                }
            }
        }
    }
    rhs
}
