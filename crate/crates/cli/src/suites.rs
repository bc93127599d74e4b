//! Verification suites replayed by `verify` and `selftest`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vassiliev_core::feynman::graphs::graphs;
use vassiliev_core::feynman::{tau_prime, tau_resolved};
use vassiliev_core::immanent::{
    alpha_weight_system, decompositions, det_weight, imm_hcd, imm_perm, immanent, leading_functional, perm_weight,
    sign_pairing, trivial_pairing,
};
use vassiliev_core::operators::{cable, cabling_polynomial, d_op, deframe, product, s_kernel, s_op};
use vassiliev_core::partition::partitions;
use vassiliev_core::quotient::generate_4t;
use vassiliev_core::{
    canonical_form, coproduct, enumerate_diagrams, int, Anchor, Cabler, ChordDiagram, DiagramSum, FeynmanDiagram,
    IntersectionMatrix, Partition, PartitionVector, Pivot, QuotientBasis, Rational,
};

use crate::cache::Bases;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), ok, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.ok { "ok  " } else { "FAIL" };
            writeln!(f, "{tag} {}/{}: {}", self.suite, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.ok).count();
        write!(f, "{}: {} checks, {} failed", self.suite, self.checks.len(), failed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Projector,
    Eigen,
    Immanent,
    Theorem2,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::PaperExamples, Suite::Projector, Suite::Eigen, Suite::Immanent, Suite::Theorem2];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperExamples => "paper-examples",
            Suite::Projector => "projector",
            Suite::Eigen => "eigen",
            Suite::Immanent => "immanent",
            Suite::Theorem2 => "theorem2",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match Suite::ALL.into_iter().find(|x| x.name() == s) {
            Some(x) => Ok(x),
            None => bail!("unknown suite '{s}' (expected one of paper-examples, projector, eigen, immanent, theorem2)"),
        }
    }
}

/// Degree bounds for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scale {
    pub projector: usize,
    pub leibniz: (usize, usize),
    pub eigen: usize,
    pub annihilation: usize,
    pub samples: usize,
    pub sampled_degrees: (usize, usize),
    pub vanishing: usize,
    pub theorem2: usize,
}

impl Scale {
    pub const FULL: Scale = Scale {
        projector: 5,
        leibniz: (2, 3),
        eigen: 4,
        annihilation: 6,
        samples: 500,
        sampled_degrees: (6, 7),
        vanishing: 4,
        theorem2: 4,
    };

    pub const QUICK: Scale = Scale {
        projector: 3,
        leibniz: (1, 2),
        eigen: 3,
        annihilation: 4,
        samples: 20,
        sampled_degrees: (6, 6),
        vanishing: 4,
        theorem2: 2,
    };
}

pub fn run(suite: Suite, scale: Scale, bases: &mut Bases) -> Result<Report> {
    match suite {
        Suite::PaperExamples => paper_examples(bases),
        Suite::Projector => projector(scale, bases),
        Suite::Eigen => eigen(scale, bases),
        Suite::Immanent => immanent_suite(scale),
        Suite::Theorem2 => theorem2(scale, bases),
    }
}

fn cd(pairs: &[(usize, usize)]) -> ChordDiagram {
    ChordDiagram::from_pairs(pairs).expect("fixture diagram")
}

/// A diagram given by endpoint positions on a clock face.
fn clock(pairs: &[(usize, usize)]) -> ChordDiagram {
    ChordDiagram::from_positions(pairs).expect("fixture diagram")
}

fn one(d: ChordDiagram) -> DiagramSum {
    DiagramSum::from_diagram(d)
}

fn sum(degree: usize, terms: &[(ChordDiagram, i64)]) -> DiagramSum {
    let mut v = DiagramSum::zero(degree);
    for (d, c) in terms {
        v.add_term(d.clone(), int(*c));
    }
    v
}

fn pv(terms: &[(&[usize], i64)]) -> PartitionVector {
    let mut v = PartitionVector::zero();
    for (p, c) in terms {
        v.add_term(Partition::new(p.to_vec()).expect("fixture partition"), int(*c));
    }
    v
}

fn crossing() -> ChordDiagram {
    cd(&[(0, 2), (1, 3)])
}

fn parallel() -> ChordDiagram {
    cd(&[(0, 1), (2, 3)])
}

/// The two-vertex Feynman diagram of the worked STU example.
pub fn worked_fd() -> FeynmanDiagram {
    let (leg, slot) = (Anchor::Leg, Anchor::Slot);
    FeynmanDiagram::new(
        4,
        2,
        &[(slot(0, 0), slot(1, 2)), (slot(0, 1), leg(0)), (slot(0, 2), leg(1)), (slot(1, 0), leg(2)), (slot(1, 1), leg(3))],
    )
    .expect("fixture diagram")
}

/// A diagram realising the displayed 4x4 linking pattern, read at its own
/// basepoint.
pub const V0_PARTNER: [usize; 8] = [5, 4, 6, 7, 1, 0, 2, 3];

fn is_zero(c: &[Rational]) -> bool {
    c.iter().all(Zero::is_zero)
}

fn paper_examples(bases: &mut Bases) -> Result<Report> {
    let mut r = Report::new(Suite::PaperExamples);

    let got = cable(&one(crossing()), 2)?;
    let want = sum(2, &[(crossing(), 8), (parallel(), 8)]);
    r.check("cable-crossing", got == want, format!("psi^2(X) = {got}"));

    let f = worked_fd();
    let got = f.stu_resolve()?;
    let want = sum(
        3,
        &[
            (clock(&[(4, 7), (2, 8), (9, 11)]), 1),
            (clock(&[(2, 7), (4, 8), (9, 11)]), -1),
            (clock(&[(4, 8), (2, 9), (7, 11)]), -1),
            (clock(&[(7, 11), (4, 9), (2, 8)]), 1),
        ],
    );
    r.check("stu-expansion", got == want, format!("{got}"));
    let step = f.resolve_step(0);
    let shown = ["fd{legs=5; v0=(L3,L4,L0); L1-L2}", "fd{legs=5; v0=(L3,L4,L1); L0-L2}"];
    let ok = match &step {
        Some([(t, 1), (u, -1)]) => {
            let b3 = bases.get(3)?;
            let mut mid = t.stu_resolve_with(Pivot::LatestLeg)?;
            mid.add_scaled(&int(-1), &u.stu_resolve_with(Pivot::LatestLeg)?);
            t.to_string() == shown[0] && u.to_string() == shown[1] && b3.equal_mod_4t(&mid, &got)?
        }
        _ => false,
    };
    r.check("stu-intermediate", ok, format!("T = {}, U = {}", shown[0], shown[1]));

    let d3 = clock(&[(3, 7), (2, 8), (5, 11)]);
    let delta = coproduct(&d3);
    let (c, e) = (ChordDiagram::single(), ChordDiagram::empty());
    let expected = [(&d3, &e, 1), (&crossing(), &c, 2), (&parallel(), &c, 1), (&c, &parallel(), 1), (&c, &crossing(), 2), (&e, &d3, 1)];
    let ok = delta.len() == 6 && expected.iter().all(|(a, b, k)| delta.coefficient(a, b) == int(*k));
    r.check("coproduct", ok, format!("{} tensor terms, multiplicities 1,2,1,1,2,1", delta.len()));

    let d = clock(&[(10, 0), (6, 11), (3, 9), (4, 8)]);
    let got = s_op(&one(d));
    let want = sum(3, &[(clock(&[(6, 11), (3, 9), (4, 8)]), 3), (clock(&[(10, 0), (3, 9), (4, 8)]), 1)]);
    r.check("s-example", got == want, format!("{got}"));

    let got = d_op(&one(ChordDiagram::single()));
    r.check("d-one-chord", got == sum(2, &[(parallel(), 1), (crossing(), -1)]), format!("{got}"));
    let got = d_op(&one(clock(&[(6, 11), (3, 9), (4, 8)])));
    let want = sum(
        4,
        &[
            (clock(&[(6, 11), (3, 9), (4, 8), (2, 10)]), 2),
            (clock(&[(6, 11), (2, 10), (3, 8), (4, 9)]), -2),
            (clock(&[(6, 11), (3, 9), (4, 8), (7, 10)]), 1),
            (clock(&[(7, 11), (3, 9), (4, 8), (6, 10)]), -1),
        ],
    );
    r.check("d-three-chord", got == want, format!("{got}"));

    let m = IntersectionMatrix::from_partner(&V0_PARTNER)?;
    let rows = vec![vec![0, 0, -1, -1], vec![0, 0, -1, -1], vec![1, 1, 0, -1], vec![1, 1, 1, 0]];
    r.check("intersection-matrix", m.rows() == rows, format!("{:?}", m.rows()));
    let i = imm_perm(&m);
    r.check("immanent", i.to_string() == "2[4] + 2[2,2]", format!("I = {i}"));
    let decs = decompositions(&m);
    let ok = decs.len() == 4 && decs.iter().all(|d| d.descents == 2) && imm_hcd(&canonical_form(&V0_PARTNER)?) == i;
    r.check("cycle-decompositions", ok, format!("{} decompositions, descents {:?}", decs.len(), decs.iter().map(|d| d.descents).collect::<Vec<_>>()));

    for p in [2, 4] {
        let got = immanent(&tau_prime(p)?.stu_resolve()?);
        r.check(format!("loop-{p}"), got == pv(&[(&[p], 2)]), format!("I = {got}"));
    }
    for (p, m) in [(vec![2], 2usize), (vec![4], 4), (vec![2, 2], 4)] {
        let coeff = (1i64 << p.len()) * (1..=m as i64).product::<i64>();
        let got = immanent(&tau_resolved(&Partition::new(p.clone())?)?);
        r.check(format!("tau-{}", Partition::new(p.clone())?), got == pv(&[(&p, coeff)]), format!("I = {got}"));
    }
    Ok(r)
}

fn projector(scale: Scale, bases: &mut Bases) -> Result<Report> {
    let mut r = Report::new(Suite::Projector);
    for m in 1..=scale.projector {
        let (up, down) = (bases.get(m)?, bases.get(m - 1)?);
        let (mut s_phi, mut phi2, mut isolated, mut isolated_count) = (true, true, true, 0);
        let (mut s_phi_exact, mut phi2_exact) = (0, 0);
        let diagrams = enumerate_diagrams(m);
        for d in &diagrams {
            let v = one(d.clone());
            let f = deframe(&v);
            let sf = s_op(&f);
            s_phi &= is_zero(&down.reduce(&sf)?);
            s_phi_exact += usize::from(!sf.is_zero());
            let ff = deframe(&f);
            phi2 &= up.equal_mod_4t(&ff, &f)?;
            phi2_exact += usize::from(ff != f);
            if d.has_isolated_chord() {
                isolated_count += 1;
                isolated &= is_zero(&up.reduce(&f)?);
            }
        }
        let n = diagrams.len();
        r.check(
            format!("s-phi-m{m}"),
            s_phi,
            format!("s(phi(D)) = 0 in A_{} for {n} diagrams; {s_phi_exact} nonzero as circle-diagram sums", m - 1),
        );
        r.check(format!("phi-squared-m{m}"), phi2, format!("phi^2 = phi in A_{m} for {n} diagrams; {phi2_exact} differ as circle-diagram sums"));
        r.check(format!("isolated-chord-m{m}"), isolated, format!("phi kills {isolated_count} diagrams with an isolated chord"));

        let ker = s_kernel(&up, &down)?;
        let mut ok = true;
        let mut spanning: Vec<DiagramSum> = ker.iter().map(|k| up.lift(k)).collect();
        spanning.extend(up.basis_diagrams().into_iter().map(one));
        for v in &spanning {
            let fixed = up.equal_mod_4t(&deframe(v), v)?;
            let killed = is_zero(&down.reduce(&s_op(v))?);
            ok &= fixed == killed;
        }
        ok &= ker.iter().all(|k| !is_zero(k));
        r.check(
            format!("fixed-points-m{m}"),
            ok,
            format!("phi(v) = v iff s(v) = 0 on {} vectors ({} spanning ker s)", spanning.len(), ker.len()),
        );
    }
    let (pmax, qmax) = scale.leibniz;
    for p in 1..=pmax {
        for q in 1..=qmax {
            let target = bases.get(p + q - 1)?;
            let (mut ok, mut exact, mut count) = (true, 0, 0);
            for a in enumerate_diagrams(p) {
                for b in enumerate_diagrams(q) {
                    let (a, b) = (one(a.clone()), one(b));
                    let lhs = s_op(&product(&a, &b));
                    let rhs = product(&s_op(&a), &b).checked_add(&product(&a, &s_op(&b)))?;
                    ok &= target.equal_mod_4t(&lhs, &rhs)?;
                    exact += usize::from(lhs == rhs);
                    count += 1;
                }
            }
            r.check(format!("leibniz-{p}-{q}"), ok, format!("{count} pairs, {exact} exact as circle-diagram sums"));
        }
    }
    Ok(r)
}

fn eigen(scale: Scale, bases: &mut Bases) -> Result<Report> {
    let mut r = Report::new(Suite::Eigen);
    let mut cabler = Cabler::new();
    for m in 1..=scale.eigen {
        let b = bases.get(m)?;
        let (mut ok, mut nonzero, mut failures) = (true, 0, Vec::new());
        let gs = graphs(m);
        for g in &gs {
            let v = g.sym_resolved()?;
            let base = b.reduce(&v)?;
            nonzero += usize::from(!is_zero(&base));
            for n in [2u64, 3] {
                let scaled: Vec<Rational> = base.iter().map(|x| x * int((n as i64).pow(g.legs() as u32))).collect();
                if b.reduce(&cabler.cable(&v, n)?)? != scaled {
                    ok = false;
                    failures.push(format!("{g} at n={n}"));
                }
            }
        }
        let mut detail = format!("{} graphs, {nonzero} with nonzero class, n in {{2,3}}", gs.len());
        if !failures.is_empty() {
            detail.push_str(&format!("; failed: {}", failures.join(", ")));
        }
        r.check(format!("eigenvalue-m{m}"), ok, detail);
    }
    Ok(r)
}

fn random_diagram(m: usize, rng: &mut ChaCha8Rng) -> ChordDiagram {
    let mut pts: Vec<usize> = (0..2 * m).collect();
    pts.shuffle(rng);
    let mut partner = vec![0; 2 * m];
    for c in pts.chunks(2) {
        partner[c[0]] = c[1];
        partner[c[1]] = c[0];
    }
    canonical_form(&partner).expect("random matching")
}

fn dual_formulas_agree(d: &ChordDiagram) -> bool {
    let a = imm_perm(&IntersectionMatrix::of(d));
    a == imm_hcd(d) && (d.degree() % 2 == 0 || a.is_zero())
}

fn immanent_suite(scale: Scale) -> Result<Report> {
    let mut r = Report::new(Suite::Immanent);
    for m in 2..=scale.annihilation {
        let index = vassiliev_core::quotient::DiagramIndex::new(m);
        let imm: Vec<PartitionVector> = index.diagrams().iter().map(|d| imm_perm(&IntersectionMatrix::of(d))).collect();
        let det: Vec<Rational> = index.diagrams().iter().map(|d| Rational::from_integer(det_weight(d))).collect();
        let perm: Vec<Rational> = index.diagrams().iter().map(|d| Rational::from_integer(perm_weight(d))).collect();
        let alphas = partitions(m, 2)
            .iter()
            .map(|p| alpha_weight_system(p, &index))
            .collect::<Result<Vec<_>, _>>()?;
        let rels = generate_4t(m);
        let mut ok = true;
        for rel in &rels {
            let (mut i, mut dv, mut pv) = (PartitionVector::zero(), Rational::zero(), Rational::zero());
            for (d, c) in rel.iter() {
                let k = index.position(d).expect("indexed diagram");
                i.add_scaled(c, &imm[k]);
                dv += c * &det[k];
                pv += c * &perm[k];
            }
            ok &= i.is_zero() && dv.is_zero() && pv.is_zero() && i == immanent(rel);
            for a in &alphas {
                ok &= a.evaluate(rel)?.is_zero();
            }
        }
        r.check(
            format!("annihilation-m{m}"),
            ok,
            format!("I, det, perm and {} alpha functionals vanish on {} relations", alphas.len(), rels.len()),
        );
    }

    let mut count = 0;
    let mut ok = true;
    for m in 0..=5 {
        for d in enumerate_diagrams(m) {
            ok &= dual_formulas_agree(&d);
            count += 1;
        }
    }
    r.check("dual-formulas-exhaustive", ok, format!("{count} diagrams of degree <= 5"));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (lo, hi) = scale.sampled_degrees;
    for m in lo..=hi {
        let ok = (0..scale.samples).all(|_| dual_formulas_agree(&random_diagram(m, &mut rng)));
        r.check(format!("dual-formulas-m{m}"), ok, format!("{} random diagrams", scale.samples));
    }

    let (mut ok, mut count) = (true, 0);
    for m in 0..=5 {
        for d in enumerate_diagrams(m) {
            let i = imm_perm(&IntersectionMatrix::of(&d));
            ok &= sign_pairing(&i) == Rational::from_integer(det_weight(&d));
            ok &= trivial_pairing(&i) == Rational::from_integer(perm_weight(&d));
            count += 1;
        }
    }
    r.check("characters", ok, format!("det and perm as character contractions on {count} diagrams"));

    let (mut ok, mut count) = (true, 0);
    for m in 1..=5 {
        for d in enumerate_diagrams(m) {
            let v = one(d);
            ok &= immanent(&v.checked_sub(&deframe(&v))?).is_zero();
            count += 1;
        }
    }
    r.check("framing-kernel", ok, format!("I(v - phi(v)) = 0 on {count} diagrams"));

    let mut cases: BTreeMap<&str, (bool, usize)> = BTreeMap::new();
    for m in 1..=scale.vanishing {
        for g in graphs(m) {
            let comps = g.components();
            let kinds = [
                ("genus-two", comps.iter().any(|c| c.genus() >= 2)),
                ("genus-one-other", comps.iter().any(|c| c.genus() == 1 && !c.is_radial_loop())),
                ("odd-loop", comps.iter().any(|c| c.is_radial_loop() && c.legs.len() % 2 == 1)),
            ];
            if kinds.iter().any(|k| k.1) {
                let zero = immanent(&g.stu_resolve()?).is_zero();
                for (name, hit) in kinds {
                    if hit {
                        let e = cases.entry(name).or_insert((true, 0));
                        e.0 &= zero;
                        e.1 += 1;
                    }
                }
            }
        }
    }
    for name in ["genus-two", "genus-one-other", "odd-loop"] {
        let (zero, count) = cases.get(name).copied().unwrap_or((true, 0));
        r.check(format!("vanishing-{name}"), zero && count >= 10, format!("I = 0 on {count} resolved graphs"));
    }
    Ok(r)
}

fn theorem2(scale: Scale, bases: &mut Bases) -> Result<Report> {
    let mut r = Report::new(Suite::Theorem2);
    let mut cabler = Cabler::new();
    for m in 2..=scale.theorem2 {
        let b = bases.get(m)?;
        let (mut ok, mut fits, mut leading, mut failures) = (true, 0, 0, Vec::new());
        let duals = b.dual_weights();
        for w in &duals {
            let lead = leading_functional(w)?;
            for d in b.basis_diagrams() {
                let v = one(d.clone());
                match cabling_polynomial(w, &v, &mut cabler) {
                    Ok(p) => {
                        fits += 1;
                        leading += usize::from(!p.coeff(m).is_zero());
                        if p.coeff(m) != lead.evaluate(&v)? {
                            ok = false;
                            failures.push(format!("{} on {d}: leading {} vs {}", w.label(), p.coeff(m), lead.evaluate(&v)?));
                        }
                    }
                    Err(e) => {
                        ok = false;
                        failures.push(format!("{} on {d}: {e}", w.label()));
                    }
                }
            }
        }
        let mut detail = format!("{} dual weights x {} basis diagrams, {fits} polynomials fitted, {leading} with nonzero n^{m} term", duals.len(), b.dim());
        if !failures.is_empty() {
            detail.push_str(&format!("; failed: {}", failures.join(", ")));
        }
        r.check(format!("cabling-polynomial-m{m}"), ok, detail);
    }
    Ok(r)
}

/// Degrees whose quotient dimensions are pinned, and the dimensions.
pub const DIMENSIONS: [usize; 6] = [1, 1, 2, 3, 6, 10];

/// Quick replay of every suite plus the dimension regressions.
pub fn selftest(bases: &mut Bases) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for s in Suite::ALL {
        out.push(run(s, Scale::QUICK, bases)?);
    }
    let mut r = Report::new(Suite::PaperExamples);
    for (m, &want) in DIMENSIONS.iter().enumerate().take(5) {
        let got = bases.get(m)?.dim();
        r.check(format!("dim-{m}"), got == want, format!("dim A_{m} = {got}"));
    }
    let fresh = QuotientBasis::build(2);
    r.check("cache-agrees", bases.get(2)?.reduce(&one(crossing()))? == fresh.reduce(&one(crossing()))?, "cached and fresh bases agree");
    out.push(r);
    Ok(out)
}
