//! Sanity checks of the test-side oracles themselves.

mod common;

use common::sod_exact::{sample, star, Primitive};

#[test]
fn sod_star_state() {
    let l = Primitive { rho: 1.0, u: 0.0, p: 1.0 };
    let r = Primitive { rho: 0.125, u: 0.0, p: 0.1 };
    let (p, u) = star(l, r, 1.4);
    // tabulated reference values for this problem
    assert!((p - 0.30313).abs() < 1e-5, "{p}");
    assert!((u - 0.92745).abs() < 1e-5, "{u}");
    let post_shock = sample(l, r, 1.4, 1.5);
    assert!((post_shock.rho - 0.26557).abs() < 1e-5);
    let contact_left = sample(l, r, 1.4, 0.9);
    assert!((contact_left.rho - 0.42632).abs() < 1e-5);
}

#[test]
fn riemann_sampler_returns_end_states_far_away() {
    let l = Primitive { rho: 1.0, u: 0.0, p: 1.0 };
    let r = Primitive { rho: 0.125, u: 0.0, p: 0.1 };
    let far_left = sample(l, r, 1.4, -5.0);
    let far_right = sample(l, r, 1.4, 5.0);
    assert_eq!((far_left.rho, far_left.u, far_left.p), (1.0, 0.0, 1.0));
    assert_eq!((far_right.rho, far_right.u, far_right.p), (0.125, 0.0, 0.1));
}

#[test]
fn riemann_sampler_is_mirror_symmetric() {
    let l = Primitive { rho: 0.4, u: -0.3, p: 0.5 };
    let r = Primitive { rho: 1.1, u: 0.2, p: 2.0 };
    let mirror = |s: Primitive| Primitive { rho: s.rho, u: -s.u, p: s.p };
    for s in [-1.3, -0.4, 0.0, 0.25, 0.9] {
        let a = sample(l, r, 1.4, s);
        let b = sample(mirror(r), mirror(l), 1.4, -s);
        assert!((a.rho - b.rho).abs() < 1e-10 && (a.u + b.u).abs() < 1e-10, "s = {s}");
        assert!((a.p - b.p).abs() < 1e-10);
    }
}
