use super::*;
use crate::diagrams::enumerate_diagrams;
use crate::feynman::graphs::graphs;
use crate::feynman::FeynmanDiagram;
use crate::quotient::{generate_4t, QuotientBasis};
use crate::ratio;
use alloc::string::ToString;

fn cd(pairs: &[(usize, usize)]) -> ChordDiagram {
    ChordDiagram::from_pairs(pairs).unwrap()
}

fn clock(pairs: &[(usize, usize)]) -> ChordDiagram {
    ChordDiagram::from_positions(pairs).unwrap()
}

fn one(d: ChordDiagram) -> DiagramSum {
    DiagramSum::from_diagram(d)
}

fn x() -> ChordDiagram {
    cd(&[(0, 2), (1, 3)])
}

fn n2() -> ChordDiagram {
    cd(&[(0, 1), (2, 3)])
}

/// Direct enumeration of all `n^(2m)` sheet assignments.
fn brute_cable(d: &ChordDiagram, n: usize) -> DiagramSum {
    let partner = d.partner();
    let pts = partner.len();
    let mut out = DiagramSum::zero(d.degree());
    let total = n.pow(pts as u32);
    for code in 0..total {
        let mut sheet = vec![0; pts];
        let mut c = code;
        for s in sheet.iter_mut() {
            *s = c % n;
            c /= n;
        }
        let mut order: Vec<usize> = (0..pts).collect();
        order.sort_by_key(|&t| (sheet[t], t));
        let mut pos = vec![0; pts];
        for (i, &t) in order.iter().enumerate() {
            pos[t] = i;
        }
        let mut q = vec![0; pts];
        for t in 0..pts {
            q[pos[t]] = pos[partner[t]];
        }
        out.add_term(ChordDiagram::from_involution(&q), int(1));
    }
    out
}

#[test]
fn cable_examples() {
    assert_eq!(cable(&DiagramSum::one(), 4).unwrap(), DiagramSum::one());
    assert_eq!(cable(&one(ChordDiagram::single()), 3).unwrap(), DiagramSum::term(ChordDiagram::single(), int(9)));
    let c = cable(&one(x()), 2).unwrap();
    let mut want = DiagramSum::zero(2);
    want.add_term(x(), int(8));
    want.add_term(n2(), int(8));
    assert_eq!(c, want);
    assert_eq!(c.to_string(), "8*cd[0-2,1-3] + 8*cd[0-1,2-3]");
    assert_eq!(cable(&one(x()), 0), Err(Error::ZeroCableOrder));
}

#[test]
fn cable_matches_brute_force() {
    let mut cabler = Cabler::new();
    for m in 0..=3 {
        for d in enumerate_diagrams(m) {
            for n in 1..=3 {
                if m == 3 && n == 3 {
                    continue;
                }
                assert_eq!(cabler.cable_diagram(&d, n as u64).unwrap(), brute_cable(&d, n), "{d} n={n}");
            }
        }
    }
    for d in enumerate_diagrams(4).into_iter().take(4) {
        assert_eq!(cabler.cable_diagram(&d, 2).unwrap(), brute_cable(&d, 2));
    }
}

#[test]
fn cable_mass_and_4t() {
    let mut cabler = Cabler::new();
    for m in 2..=4 {
        let b = QuotientBasis::build(m);
        for n in [2u64, 3] {
            for d in enumerate_diagrams(m).into_iter().take(6) {
                let v = one(d);
                let c = cabler.cable(&v, n).unwrap();
                assert_eq!(c.mass(), int((n as i64).pow(2 * m as u32)) * v.mass());
            }
            for r in generate_4t(m).into_iter().take(if m == 4 { 40 } else { usize::MAX }) {
                let c = cabler.cable(&r, n).unwrap();
                assert!(b.reduce(&c).unwrap().iter().all(Zero::is_zero));
            }
        }
    }
}

#[test]
fn s_and_theta_examples() {
    let c = ChordDiagram::single();
    assert_eq!(s_op(&one(c.clone())), DiagramSum::one());
    assert_eq!(s_op(&one(x())), DiagramSum::term(c.clone(), int(2)));
    assert!(s_op(&DiagramSum::one()).is_zero());
    let d = clock(&[(10, 0), (6, 11), (3, 9), (4, 8)]);
    let mut want = DiagramSum::zero(3);
    want.add_term(clock(&[(6, 11), (3, 9), (4, 8)]), int(3));
    want.add_term(clock(&[(10, 0), (3, 9), (4, 8)]), int(1));
    assert_eq!(s_op(&one(d)), want);

    assert_eq!(theta_op(&DiagramSum::one()), one(c.clone()));
    assert_eq!(theta_op(&one(c.clone())), one(n2()));
    assert_eq!(theta_op(&one(x())), one(cd(&[(0, 2), (1, 3), (4, 5)])));
}

#[test]
fn deframe_examples() {
    let c = ChordDiagram::single();
    assert!(deframe(&one(c)).is_zero());
    assert!(deframe(&one(n2())).is_zero());
    let mut want = DiagramSum::zero(2);
    want.add_term(x(), int(1));
    want.add_term(n2(), int(-1));
    assert_eq!(deframe(&one(x())), want);
}

#[test]
fn d_examples() {
    assert!(d_op(&DiagramSum::one()).is_zero());
    let mut want = DiagramSum::zero(2);
    want.add_term(n2(), int(1));
    want.add_term(x(), int(-1));
    assert_eq!(d_op(&one(ChordDiagram::single())), want);

    let d = clock(&[(6, 11), (3, 9), (4, 8)]);
    let mut want = DiagramSum::zero(4);
    want.add_term(clock(&[(6, 11), (3, 9), (4, 8), (2, 10)]), int(2));
    want.add_term(clock(&[(6, 11), (2, 10), (3, 8), (4, 9)]), int(-2));
    want.add_term(clock(&[(6, 11), (3, 9), (4, 8), (7, 10)]), int(1));
    want.add_term(clock(&[(7, 11), (3, 9), (4, 8), (6, 10)]), int(-1));
    assert_eq!(d_op(&one(d)), want);
}

#[test]
fn product_examples() {
    let c = one(ChordDiagram::single());
    assert_eq!(product(&DiagramSum::one(), &one(x())), one(x()));
    assert_eq!(product(&c, &c), one(n2()));
    assert_eq!(product(&one(x()), &c), theta_op(&one(x())));
}

#[test]
fn exact_operator_identities() {
    for m in 1..=4 {
        for d in enumerate_diagrams(m) {
            let v = one(d);
            assert_eq!(d_op(&s_op(&v)), s_op(&d_op(&v)), "d s");
        }
    }
    // Leibniz rule, exactly while the total degree stays at most 3
    for (p, q) in [(1, 2), (2, 1), (1, 1)] {
        for a in enumerate_diagrams(p) {
            for b in enumerate_diagrams(q) {
                let (a, b) = (one(a.clone()), one(b));
                let lhs = s_op(&product(&a, &b));
                let rhs = product(&s_op(&a), &b).checked_add(&product(&a, &s_op(&b))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn leibniz_mod_4t() {
    let b = QuotientBasis::build(3);
    for (p, q) in [(2, 2), (1, 3), (3, 1)] {
        for a in enumerate_diagrams(p) {
            for c in enumerate_diagrams(q) {
                let (a, c) = (one(a.clone()), one(c));
                let lhs = s_op(&product(&a, &c));
                let rhs = product(&s_op(&a), &c).checked_add(&product(&a, &s_op(&c))).unwrap();
                assert!(b.equal_mod_4t(&lhs, &rhs).unwrap());
            }
        }
    }
}

/// `theta` cuts the loop at the canonical basepoint, so these identities
/// hold for classes rather than for individual circle diagrams.
#[test]
fn deframing_is_a_projection_onto_ker_s() {
    let bases: Vec<QuotientBasis> = (0..=5).map(QuotientBasis::build).collect();
    for m in 1..=5 {
        for d in enumerate_diagrams(m) {
            let v = one(d);
            let f = deframe(&v);
            assert!(bases[m - 1].reduce(&s_op(&f)).unwrap().iter().all(Zero::is_zero), "s phi");
            assert!(bases[m].equal_mod_4t(&deframe(&f), &f).unwrap(), "phi phi");
        }
    }
    assert!(deframe(&DiagramSum::one()) == DiagramSum::one());
}

#[test]
fn fixed_points_of_deframing() {
    // phi(v) = v exactly on the kernel of s, and nowhere else
    for m in 1..=4 {
        let up = QuotientBasis::build(m);
        let down = QuotientBasis::build(m - 1);
        let ker = s_kernel(&up, &down).unwrap();
        assert!(!ker.is_empty() || m == 1);
        for k in &ker {
            let v = up.lift(k);
            assert!(down.reduce(&s_op(&v)).unwrap().iter().all(Zero::is_zero));
            assert!(up.equal_mod_4t(&deframe(&v), &v).unwrap());
        }
        for d in up.basis_diagrams() {
            let v = one(d);
            let fixed = up.equal_mod_4t(&deframe(&v), &v).unwrap();
            let killed = down.reduce(&s_op(&v)).unwrap().iter().all(Zero::is_zero);
            assert_eq!(fixed, killed);
        }
    }
}

#[test]
fn d_and_s_preserve_4t() {
    for m in 2..=4 {
        let down = QuotientBasis::build(m - 1);
        let up = QuotientBasis::build(m + 1);
        for r in generate_4t(m) {
            assert!(down.reduce(&s_op(&r)).unwrap().iter().all(Zero::is_zero));
            assert!(up.reduce(&d_op(&r)).unwrap().iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn product_is_well_defined_mod_4t() {
    // cutting the first factor at every basepoint gives the same class
    for (p, q) in [(1, 2), (2, 2)] {
        let b = QuotientBasis::build(p + q);
        for a in enumerate_diagrams(p) {
            for c in enumerate_diagrams(q) {
                let base = product(&one(a.clone()), &one(c.clone()));
                for r in 0..a.points() {
                    let rot = a.rotated(r);
                    let mut partner = rot.clone();
                    let shift = rot.len();
                    partner.extend(c.partner().into_iter().map(|x| x + shift));
                    let other = one(ChordDiagram::from_involution(&partner));
                    assert!(b.equal_mod_4t(&base, &other).unwrap());
                }
            }
        }
    }
}

#[test]
fn chord_removal_commutes_with_resolution() {
    for m in 1..=3 {
        for g in graphs(m) {
            let lhs = s_op(&g.stu_resolve().unwrap());
            let mut rhs = DiagramSum::zero(m - 1);
            for h in chord_free_deletions(&g) {
                rhs.add_scaled(&int(1), &h.stu_resolve().unwrap());
            }
            assert_eq!(lhs, rhs, "{g}");
        }
    }
}

/// Deleting a chord of the resolved sum touches only leg-to-leg edges.
fn chord_free_deletions(g: &FeynmanDiagram) -> Vec<FeynmanDiagram> {
    g.chord_deletions()
}

#[test]
fn polynomial_display_and_eval() {
    let p = CablingPolynomial::new(vec![int(0), ratio(-1, 2), int(0), int(3)]);
    assert_eq!(p.to_string(), "-1/2*n + 3*n^3");
    assert_eq!(p.eval(&int(2)), int(23));
    assert_eq!(p.degree(), Some(3));
    assert_eq!(CablingPolynomial::new(vec![int(0), int(0)]).to_string(), "0");
    assert_eq!(CablingPolynomial::new(vec![int(2), int(1)]).to_string(), "2 + n");
}

#[test]
fn cabling_polynomial_examples() {
    let mut cabler = Cabler::new();
    let b1 = QuotientBasis::build(1);
    let w = &b1.dual_weights()[0];
    let p = cabling_polynomial(w, &one(ChordDiagram::single()), &mut cabler).unwrap();
    assert_eq!(p.degree(), None);

    let b2 = QuotientBasis::build(2);
    let tau2 = crate::feynman::tau_resolved(&crate::Partition::new(vec![2]).unwrap()).unwrap();
    for w in b2.dual_weights() {
        let p = cabling_polynomial(&w, &one(x()), &mut cabler).unwrap();
        let expect = if w.evaluate(&tau2).unwrap().is_zero() { None } else { Some(2) };
        if expect.is_some() {
            assert_eq!(p.degree(), expect);
        }
    }
    assert!(matches!(
        cabling_polynomial(&b2.dual_weights()[0], &one(ChordDiagram::single()), &mut cabler),
        Err(Error::DegreeMismatch { .. })
    ));
}

