//! Frozen reference values and cross-checks between independent routes to
//! the same number.

use approx::assert_abs_diff_eq;
use lel_core::asymptotics::{
    converge_sweep, integrand, kdim_constant, quad_constant, rectangle_average, BranchWeighting, Rule,
};
use lel_core::lattice::{self, boundary_chain};
use lel_core::lel::{lel, lel_of_graph};
use lel_core::spectral::{closed_form_spectrum, numeric_spectrum, spectrum_compare, DEFAULT_CAP};
use lel_core::{Boundary, Family, LatticeSpec};

// Midpoint rule, 1024 points per axis, three Richardson levels.
const FROZEN: [(Family, BranchWeighting, f64); 7] = [
    (Family::Square, BranchWeighting::SpectrumDerived, 1.916_182_797_366),
    (Family::Hexagonal, BranchWeighting::SpectrumDerived, 1.635_695_212_829),
    (Family::J31212, BranchWeighting::SpectrumDerived, 1.617_632_651_505),
    (Family::J31212, BranchWeighting::Published, 1.337_544_864_614),
    (Family::TriangularKagome, BranchWeighting::SpectrumDerived, 1.894_918_348_598),
    (Family::TriangularKagome, BranchWeighting::Published, 1.708_193_157_337),
    (Family::M3342, BranchWeighting::SpectrumDerived, 2.152_526_610_189),
];

#[test]
fn frozen_constants() {
    for (f, w, expect) in FROZEN {
        let r = quad_constant::<f64>(&integrand(f, w), 1024, Rule::Midpoint, 3).unwrap();
        assert_abs_diff_eq!(r.constant_h, expect, epsilon = 1e-11);
        assert!(r.error_estimate < 1e-8, "{f}: {}", r.error_estimate);
        let g = quad_constant::<f64>(&integrand(f, w), 1024, Rule::Gauss, 2).unwrap();
        assert_abs_diff_eq!(g.constant_h, expect, epsilon = 1e-9);
    }
}

#[test]
fn frozen_kdim() {
    let expect = [4.0 / std::f64::consts::PI, 1.916_182_797_366, 2.387_602_242_86, 2.777_647_739_22];
    for (k, e) in (1..=4).zip(expect) {
        let r = kdim_constant::<f64>(k, 1024, 3).unwrap();
        assert_abs_diff_eq!(r.constant_h, e, epsilon = 1e-9);
    }
}

/// Per-vertex LEL of an `N x N`-cell torus equals the rectangle rule with
/// nodes `k/N`, the torus momenta.
#[test]
fn torus_sum_is_unshifted_rule() {
    let n = 12;
    let cases = [
        (Family::Square, n, n),
        (Family::Hexagonal, n - 1, n - 1),
        (Family::J31212, n - 1, n - 1),
        (Family::TriangularKagome, n - 1, n - 1),
        (Family::M3342, n, n),
    ];
    for (f, m, k) in cases {
        let spec = LatticeSpec::new(f, Boundary::Torus, m, k);
        let per_vertex = lel(&closed_form_spectrum::<f64>(&spec).unwrap()).unwrap().per_vertex;
        let rule = rectangle_average(&integrand(f, BranchWeighting::SpectrumDerived), n, 0.0);
        assert_abs_diff_eq!(per_vertex, rule, epsilon = 1e-12);
    }
}

#[test]
fn torus_closed_form_lel_matches_eigensolver() {
    for (f, m, n) in [
        (Family::Square, 5, 6),
        (Family::Hexagonal, 4, 3),
        (Family::J31212, 4, 4),
        (Family::TriangularKagome, 3, 3),
        (Family::M3342, 4, 5),
    ] {
        let spec = LatticeSpec::new(f, Boundary::Torus, m, n);
        let closed = closed_form_spectrum::<f64>(&spec).unwrap();
        let numeric = numeric_spectrum::<f64>(&lattice::build(&spec).unwrap(), DEFAULT_CAP).unwrap();
        assert!(spectrum_compare(&closed, &numeric, 1e-9).unwrap().pass, "{spec}");
        assert_abs_diff_eq!(lel(&closed).unwrap().value, lel(&numeric).unwrap().value, epsilon = 1e-8);
    }
}

#[test]
fn square_cylinder_and_free_closed_forms_match_eigensolver() {
    for b in [Boundary::Cylinder, Boundary::Free] {
        let spec = LatticeSpec::new(Family::Square, b, 7, 5);
        let closed = lel(&closed_form_spectrum::<f64>(&spec).unwrap()).unwrap().value;
        let numeric = lel_of_graph::<f64>(&lattice::build(&spec).unwrap(), DEFAULT_CAP).unwrap().value;
        assert_abs_diff_eq!(closed, numeric, epsilon = 1e-9);
    }
}

#[test]
fn kdim_two_is_square_constant() {
    let k2 = kdim_constant::<f64>(2, 1024, 3).unwrap().constant_h;
    let sq = quad_constant::<f64>(&integrand(Family::Square, BranchWeighting::default()), 1024, Rule::Midpoint, 3)
        .unwrap()
        .constant_h;
    assert_abs_diff_eq!(k2, sq, epsilon = 1e-4);
    assert!(kdim_constant::<f64>(3, 1024, 3).unwrap().constant_h > k2);
}

#[test]
fn boundary_spread_shrinks_for_every_family() {
    let sizes: &[(Family, [(usize, usize); 2])] = &[
        (Family::Square, [(6, 6), (12, 12)]),
        (Family::Hexagonal, [(4, 4), (8, 8)]),
        (Family::J31212, [(2, 2), (5, 5)]),
        (Family::TriangularKagome, [(2, 2), (4, 4)]),
        (Family::M3342, [(3, 4), (7, 8)]),
    ];
    for (f, s) in sizes {
        let h = quad_constant::<f64>(&integrand(*f, BranchWeighting::default()), 256, Rule::Midpoint, 3)
            .unwrap()
            .constant_h;
        let r = converge_sweep(*f, s, &[Boundary::Torus, Boundary::Free], h, DEFAULT_CAP).unwrap();
        let spread = r.boundary_spread();
        assert!(spread[1].1 < spread[0].1, "{f}: {spread:?}");
        let free = r.boundary_rows(Boundary::Free).map(|q| q.deviation).collect::<Vec<_>>();
        assert!(free[1] < free[0], "{f}: {free:?}");
    }
}

#[test]
fn cutting_edges_moves_lel_by_at_most_sqrt2_each() {
    // Cutting k edges moves LEL by at most sqrt(2)·k.
    for f in Family::ALL {
        let spec = LatticeSpec::new(f, Boundary::Torus, 3, 4);
        let c = boundary_chain(&spec).unwrap();
        let torus = lel_of_graph::<f64>(&c.torus, DEFAULT_CAP).unwrap().value;
        let free = lel_of_graph::<f64>(&c.free, DEFAULT_CAP).unwrap().value;
        let cut = c.torus.n_edges() - c.free.n_edges();
        assert!((torus - free).abs() <= std::f64::consts::SQRT_2 * cut as f64 + 1e-8, "{f}");
    }
}
