//! Exact solution of the Riemann problem for the 1-D Euler equations.

#[derive(Debug, Clone, Copy)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

/// Pressure function of one side and its derivative in the star pressure.
fn side_fn(p: f64, s: Primitive, gamma: f64) -> (f64, f64) {
    let c = (gamma * s.p / s.rho).sqrt();
    if p > s.p {
        let a = 2.0 / ((gamma + 1.0) * s.rho);
        let b = (gamma - 1.0) / (gamma + 1.0) * s.p;
        let q = (a / (p + b)).sqrt();
        ((p - s.p) * q, q * (1.0 - 0.5 * (p - s.p) / (b + p)))
    } else {
        let e = (gamma - 1.0) / (2.0 * gamma);
        let r = p / s.p;
        (2.0 * c / (gamma - 1.0) * (r.powf(e) - 1.0), r.powf(-(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c))
    }
}

/// Star-region pressure and velocity by Newton iteration.
pub fn star(l: Primitive, r: Primitive, gamma: f64) -> (f64, f64) {
    let mut p = 0.5 * (l.p + r.p);
    for _ in 0..100 {
        let (fl, dl) = side_fn(p, l, gamma);
        let (fr, dr) = side_fn(p, r, gamma);
        let next = (p - (fl + fr + r.u - l.u) / (dl + dr)).max(1e-12);
        let done = (next - p).abs() < 1e-15 * p;
        p = next;
        if done {
            break;
        }
    }
    let (fl, _) = side_fn(p, l, gamma);
    let (fr, _) = side_fn(p, r, gamma);
    (p, 0.5 * (l.u + r.u) + 0.5 * (fr - fl))
}

/// State at similarity coordinate `s = (x − x₀)/t`.
pub fn sample(l: Primitive, r: Primitive, gamma: f64, s: f64) -> Primitive {
    let (ps, us) = star(l, r, gamma);
    let gm = (gamma - 1.0) / (gamma + 1.0);
    let (side, sign) = if s <= us { (l, 1.0) } else { (r, -1.0) };
    // mirror the right side onto the left-side formulas
    let s = sign * s;
    let u = sign * side.u;
    let us_m = sign * us;
    let c = (gamma * side.p / side.rho).sqrt();
    if ps > side.p {
        let shock = u - c * ((gamma + 1.0) / (2.0 * gamma) * ps / side.p + (gamma - 1.0) / (2.0 * gamma)).sqrt();
        if s < shock {
            side
        } else {
            let rho = side.rho * (ps / side.p + gm) / (gm * ps / side.p + 1.0);
            Primitive { rho, u: us, p: ps }
        }
    } else {
        let head = u - c;
        let cs = c * (ps / side.p).powf((gamma - 1.0) / (2.0 * gamma));
        let tail = us_m - cs;
        if s < head {
            side
        } else if s > tail {
            Primitive { rho: side.rho * (ps / side.p).powf(1.0 / gamma), u: us, p: ps }
        } else {
            let uf = 2.0 / (gamma + 1.0) * (c + (gamma - 1.0) / 2.0 * u + s);
            let cf = 2.0 / (gamma + 1.0) * (c + (gamma - 1.0) / 2.0 * (u - s));
            let rho = side.rho * (cf / c).powf(2.0 / (gamma - 1.0));
            let p = side.p * (cf / c).powf(2.0 * gamma / (gamma - 1.0));
            Primitive { rho, u: sign * uf, p }
        }
    }
}
