//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero when a criterion fails, except for the printed
//! source rule of criterion 10, which is checked against the values
//! actually observed on the decagon (see the README).

use std::process::ExitCode;
use std::time::Instant;

use syzygy_cli::sweep;
use syzygy_core::fixtures;
use syzygy_core::homology::{GorensteinVerdict, HomDim, Homology, IndecomposableList};
use syzygy_core::knit::DEFAULT_KNIT_LIMIT;
use syzygy_core::model::PuncturedModel;
use syzygy_core::surface::normalized_triangulations;
use syzygy_core::verify::{stable_quiver_report, SweepSummary, Tally, OMEGA_CASES};
use syzygy_core::{Algebra, Field, Rep};

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line { ok, detail: detail.into() }
}

fn tally(t: &Tally) -> String {
    format!("{}/{}", t.pass, t.pass + t.fail)
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let alg = Algebra::new(fixtures::loop_rad2()).unwrap();
    let mut h = Homology::new(&alg);
    let m = alg.injective(0).unwrap().direct_sum(&alg.simple(0));
    let r = h.igusa_todorov(&m).unwrap();
    let t = start.elapsed();
    let ok = (r.phi, r.psi) == (2, 3) && t.as_secs_f64() < 1.0;
    line(ok, format!("phi(I(1)+S(1)) = {}, psi = {}, {:.3}s", r.phi, r.psi, t.as_secs_f64()))
}

fn criterion_2() -> Line {
    let start = Instant::now();
    let alg = Algebra::new(fixtures::mata()).unwrap();
    let mut h = Homology::new(&alg);
    let g = h.gorenstein_dimension().unwrap();
    let pd = h.proj_dim(alg.injective(1).unwrap()).unwrap();
    let list = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT).unwrap();
    let dims = h.it_dimensions(&IndecomposableList { modules: list.entries().to_vec(), complete: true }).unwrap();
    let t = start.elapsed();
    let ok = g.verdict == GorensteinVerdict::NotGorenstein && pd == HomDim::Infinite && dims == (1, 1) && t.as_secs_f64() < 1.0;
    line(
        ok,
        format!(
            "not Gorenstein: {}, pd I(2) = {pd}, phidim = {}, psidim = {} over {} indecomposables, {:.3}s",
            g.verdict == GorensteinVerdict::NotGorenstein,
            dims.0,
            dims.1,
            list.entries().len(),
            t.as_secs_f64()
        ),
    )
}

fn criterion_3(s: &SweepSummary) -> Line {
    let [a, b, c, d] = s.by_type;
    line(
        s.cmp.ok() && s.sizes.ok() && d == 0 && s.triangulations > 0,
        format!(
            "{} triangulations (I {a}, II {b}, III {c}, other {d}), catalogue = CMP set {}, sizes {}",
            s.triangulations,
            tally(&s.cmp),
            tally(&s.sizes)
        ),
    )
}

fn criterion_4(s: &SweepSummary) -> Line {
    let hits: Vec<String> = OMEGA_CASES.iter().zip(&s.omega_cases).map(|(n, c)| format!("{n}={c}")).collect();
    line(
        s.omega.ok() && s.omega_cases.iter().all(|&c| c > 0),
        format!("n = 3..7, syzygy formula {}, cases {}", tally(&s.omega), hits.join(" ")),
    )
}

fn criterion_5(s: &SweepSummary) -> Line {
    line(s.bits.ok() && s.bits.pass > 0, format!("{} modules over {} algebras with d <= 1", tally(&s.bits), s.one_gorenstein))
}

fn criterion_6(s: &SweepSummary) -> Line {
    let [g0, g1, other] = s.by_gorenstein;
    line(
        s.it.ok() && other == 0,
        format!("d = 0 on {g0}, d = 1 on {g1}, other {other}; phidim = psidim = d {}", tally(&s.it)),
    )
}

fn criterion_7(s: &SweepSummary) -> Line {
    line(s.calibration.ok(), format!("P(a) and I(a) against tau-1 a and tau a: {}", tally(&s.calibration)))
}

fn criterion_8() -> Line {
    let start = Instant::now();
    let model = PuncturedModel::new(fixtures::punctured_square(), Field::default()).unwrap();
    let alg = model.alg();
    let h = Homology::new(alg);
    let si = h.selfinjective_report().unwrap();
    let nonproj: Vec<Rep> = model.family.modules().iter().filter(|m| !alg.is_projective(m)).cloned().collect();
    let per = h.verify_tau_periodicity(&nonproj).unwrap();
    let t = start.elapsed();
    let ok = si.selfinjective && nonproj.len() == 8 && per.iter().all(|&b| b) && t.as_secs_f64() < 5.0;
    line(
        ok,
        format!(
            "selfinjective {}, Nakayama order {}, tau^{} fixes {}/{} non-projectives, {:.3}s",
            si.selfinjective,
            si.order,
            2 * si.order,
            per.iter().filter(|&&b| b).count(),
            nonproj.len(),
            t.as_secs_f64()
        ),
    )
}

fn criterion_9() -> Line {
    let f = Field::default();
    let mut cmp = Tally::default();
    let mut period = Tally::default();
    let mut count = 0;
    for n in 4..=8 {
        let (s, _) = sweep::polygon(n, f, 0).unwrap();
        cmp.merge(&s.cmp);
        period.merge(&s.period3);
        count += s.triangulations;
    }
    line(cmp.ok() && period.ok(), format!("{count} triangulations, CMP set {}, period 3 {}", tally(&cmp), tally(&period)))
}

/// Returns the line and whether the only failure is the documented one.
fn criterion_10(s: &SweepSummary) -> (Line, bool) {
    let model = PuncturedModel::new(fixtures::decagon(), Field::default()).unwrap();
    let (q, mesh, _) = stable_quiver_report(&model).unwrap();
    let m = mesh.expect("the decagon is of type I");
    let rest_ok = s.tau_tilde.ok() && q.vertices.len() == 48 && m.sources_agree_with_mesh_rule && m.stable_hom.ok();
    let printed = m.literal_rule_sources == m.two_move_sources;
    let detail = format!(
        "translation {}, {} vertices, {} red, {} blue, two-move sources {}, printed rule predicts {}, mesh rule {}, moves with nonzero stable Hom {}",
        tally(&s.tau_tilde),
        m.vertices,
        m.red,
        m.blue,
        m.two_move_sources,
        m.literal_rule_sources,
        m.mesh_rule_sources,
        tally(&m.stable_hom)
    );
    let documented = rest_ok && !printed && (m.two_move_sources, m.literal_rule_sources) == (32, 24);
    (line(rest_ok && printed, detail), documented)
}

fn main() -> ExitCode {
    let f = Field::default();
    let mut small = SweepSummary::default();
    for n in 3..=6 {
        let (s, _) = sweep::run(&normalized_triangulations(n), f, 0, 0).unwrap();
        small.merge(&s);
    }
    let (seven, _) = sweep::run(&normalized_triangulations(7), f, 0, 0).unwrap();
    let mut wide = small.clone();
    wide.merge(&seven);

    let (l10, documented) = criterion_10(&small);
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(&small),
        criterion_4(&wide),
        criterion_5(&small),
        criterion_6(&small),
        criterion_7(&small),
        criterion_8(),
        criterion_9(),
        l10,
    ];
    let mut unexpected = 0;
    for (k, l) in lines.iter().enumerate() {
        println!("criterion {}: {} {}", k + 1, if l.ok { "PASS" } else { "FAIL" }, l.detail);
        if !l.ok && !(k == 9 && documented) {
            unexpected += 1;
        }
    }
    println!("n = 7 sweep: every check {}", if seven.ok() { "passes" } else { "does not pass" });
    let passed = lines.iter().filter(|l| l.ok).count();
    println!("acceptance: {passed}/10 PASS");
    if documented {
        println!("criterion 10: the printed two-move source rule gives 24 sources where the quiver has 32; known deviation");
    }
    if unexpected > 0 || !seven.ok() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
