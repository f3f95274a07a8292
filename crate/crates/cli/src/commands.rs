//! Command implementations; each returns the rendered output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use syzygy_core::cmp::{cmp_catalog, MoveColor, StableVertex};
use syzygy_core::homology::{GorensteinVerdict, Homology, IndecomposableList};
use syzygy_core::knit::DEFAULT_KNIT_LIMIT;
use syzygy_core::model::{PolygonModel, PuncturedModel};
use syzygy_core::polygon::enumerate_polygon_triangulations;
use syzygy_core::surface::{normalized_triangulations, Triangulation, TriangulationType};
use syzygy_core::verify::{algebraic_cmp, check_polygon, check_triangulation, stable_quiver_report, Tally, OMEGA_CASES};
use syzygy_core::{Algebra, Error, Rep};

use crate::input::{polygon_json, presentation_json, triangulation_json, Input, RepJson};
use crate::sweep::{self, PolygonSummary};
use crate::{CliError, Format, Options, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Geometric,
    Algebraic,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Surface {
    Punctured,
    Polygon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    All,
    Calibration,
    Cmp,
    Omega,
    Tau,
    Period,
    Bits,
    It,
    Selfinjective,
}

fn vec_str(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn algebra_of(input: &Input, o: &Options) -> Result<Algebra, CliError> {
    Ok(Algebra::with_max_len(input.presentation(o.field()?)?, o.max_len)?.with_seed(o.seed))
}

fn punctured_model(t: &Triangulation, o: &Options) -> Result<PuncturedModel, CliError> {
    Ok(PuncturedModel::with_seed(t.clone(), o.field()?, o.seed)?)
}

fn type_name(t: TriangulationType) -> &'static str {
    match t {
        TriangulationType::I => "I",
        TriangulationType::II => "II",
        TriangulationType::III => "III",
        TriangulationType::Other => "other",
    }
}

fn surface_summary(input: &Input) -> Option<serde_json::Value> {
    match input {
        Input::Punctured(t) => {
            Some(json!({"type": type_name(t.classify()), "n": t.n, "m": t.m(), "d": t.d(), "t": t.t()}))
        }
        Input::Polygon(t) => Some(json!({"type": "A", "n": t.n, "t": t.internal_triangles().len()})),
        Input::Algebra(_) => None,
    }
}

pub fn build(input: &Input, o: &Options) -> Result<Report, CliError> {
    let alg = algebra_of(input, o)?;
    let mut h = Homology::with_bound(&alg, o.orbit_bound);
    let g = h.gorenstein_dimension()?;
    let si = h.selfinjective_report()?;
    let q = alg.quiver();
    let mut rows = Vec::new();
    for i in 0..q.vertex_count() {
        let p = alg.projective(i)?.clone();
        let inj = alg.injective(i)?.clone();
        let pd = h.proj_dim(&inj)?;
        let id = h.inj_dim(&p)?;
        rows.push((q.vertices[i].clone(), p.dims, inj.dims, pd, id));
    }
    if o.format == Format::Json {
        let vertices: Vec<_> = rows
            .iter()
            .map(|(v, p, i, pd, id)| {
                json!({"vertex": v, "projective": p, "injective": i, "pd_injective": pd.to_string(), "id_projective": id.to_string()})
            })
            .collect();
        let body = json!({
            "presentation": presentation_json(&alg.pres),
            "surface": surface_summary(input),
            "dimension": alg.dimension(),
            "vertices": vertices,
            "gorenstein": {
                "d_left": g.d_left.to_string(),
                "d_right": g.d_right.to_string(),
                "dimension": g.dimension(),
            },
            "selfinjective": si.selfinjective,
            "nakayama": si.nakayama,
            "nakayama_order": si.selfinjective.then_some(si.order),
        });
        return Ok(Report::ok(pretty(&body)));
    }
    let mut s = String::new();
    let p = alg.field().characteristic();
    writeln!(s, "quiver: {} vertices, {} arrows, {} relations over GF({p})", q.vertex_count(), q.arrow_count(), alg.pres.relations.len()).ok();
    writeln!(s, "dim {}", alg.dimension()).ok();
    match input {
        Input::Punctured(t) => writeln!(s, "type {}, m={}, d={}, t={}", type_name(t.classify()), t.m(), t.d(), t.t()).ok(),
        Input::Polygon(t) => writeln!(s, "polygon, {} internal triangles", t.internal_triangles().len()).ok(),
        Input::Algebra(_) => None,
    };
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(6);
    let cw = rows.iter().map(|r| vec_str(&r.1).len()).max().unwrap_or(5).max(5);
    writeln!(s, "{:w$}  {:cw$}  {:cw$}  {:>6}  {:>6}", "vertex", "dim P", "dim I", "pd I", "id P").ok();
    for (v, pp, ii, pd, id) in &rows {
        writeln!(s, "{v:w$}  {:cw$}  {:cw$}  {:>6}  {:>6}", vec_str(pp), vec_str(ii), pd.to_string(), id.to_string()).ok();
    }
    match g.verdict {
        GorensteinVerdict::Gorenstein(d) => {
            writeln!(s, "Gorenstein d={d} (proj.dim D(B) = {}, inj.dim B = {})", g.d_left, g.d_right).ok()
        }
        GorensteinVerdict::NotGorenstein => {
            writeln!(s, "not Gorenstein: proj.dim D(B) = {}, inj.dim B = {}", g.d_left, g.d_right).ok()
        }
    };
    if si.selfinjective {
        writeln!(s, "selfinjective, Nakayama permutation {} of order {}", vec_str(&si.nakayama), si.order).ok();
    } else {
        writeln!(s, "not selfinjective").ok();
    }
    Ok(Report::ok(s))
}

#[derive(Clone, Debug, Serialize)]
struct Entry {
    family: &'static str,
    label: String,
    arc: Option<String>,
    dims: Vec<usize>,
}

fn render_entries(title: &str, entries: &[Entry], s: &mut String) {
    writeln!(s, "{title}: {} modules", entries.len()).ok();
    for e in entries {
        let arc = e.arc.clone().unwrap_or_else(|| "-".into());
        writeln!(s, "  {:<6} {:<12} {:<14} {}", e.family, e.label, arc, vec_str(&e.dims)).ok();
    }
}

fn gorenstein_d(h: &mut Homology<'_>) -> Result<usize, CliError> {
    Ok(h.gorenstein_dimension()?.dimension().ok_or(Error::NotGorenstein)?)
}

pub fn cmp(input: &Input, method: Method, o: &Options) -> Result<Report, CliError> {
    let mut geo: Option<Vec<Entry>> = None;
    let mut alg_entries: Option<Vec<Entry>> = None;
    let mut verdict: Option<bool> = None;
    let mut notes = Vec::new();
    match input {
        Input::Punctured(t) => {
            let model = punctured_model(t, o)?;
            let alg = model.alg();
            let mut h = Homology::with_bound(alg, o.orbit_bound);
            let mut geo_ids = Vec::new();
            if method != Method::Algebraic {
                let cat = cmp_catalog(&model)?;
                let mut out = Vec::new();
                for e in &cat.odot {
                    let a = e.arc.arc();
                    out.push(Entry {
                        family: "odot",
                        label: format!("M(r{},b{})", e.i, e.j),
                        arc: a.map(|a| a.to_string()),
                        dims: a.map(|a| t.crossing_vector(&a)).unwrap_or_else(|| vec![0; t.len()]),
                    });
                }
                for (k, e) in cat.delta.iter().enumerate() {
                    for (x, a) in e.arcs.iter().enumerate() {
                        out.push(Entry { family: "delta", label: format!("Δ{k}.{x}"), arc: Some(a.to_string()), dims: t.crossing_vector(a) });
                    }
                }
                for (k, e) in cat.club.iter().enumerate() {
                    out.push(Entry { family: "club", label: format!("♣{k}"), arc: e.arc.map(|a| a.to_string()), dims: e.module.dims.clone() });
                }
                for m in cat.modules(&model) {
                    geo_ids.push(if m.is_zero() { None } else { model.family.registry.find(alg, &m, alg.seed)? });
                }
                notes.push(format!("expected size {:?}", cat.expected_size()));
                geo = Some(out);
            }
            if method != Method::Geometric {
                let d = gorenstein_d(&mut h)?;
                let ids = algebraic_cmp(&model, &h, d)?;
                let mut out = Vec::new();
                for &id in &ids {
                    let k = model.family.ids.iter().position(|&x| x == id).expect("arc of a class");
                    let a = model.family.arcs[k];
                    out.push(Entry { family: "alg", label: a.name(), arc: Some(a.to_string()), dims: t.crossing_vector(&a) });
                }
                if method == Method::Both {
                    let total = geo_ids.len();
                    let mut g: Vec<usize> = geo_ids.iter().flatten().copied().collect();
                    g.sort_unstable();
                    g.dedup();
                    verdict = Some(g.len() == total && g == ids);
                }
                out.sort_by(|a, b| a.arc.cmp(&b.arc));
                alg_entries = Some(out);
            }
        }
        Input::Polygon(t) => {
            let model = PolygonModel::new(t.clone(), o.field()?)?;
            if method != Method::Algebraic {
                let mut out = Vec::new();
                for (k, tr) in t.internal_triangle_cmp_arcs().iter().enumerate() {
                    for (x, c) in tr.iter().enumerate() {
                        out.push(Entry { family: "delta", label: format!("Δ{k}.{x}"), arc: Some(c.to_string()), dims: t.crossing_vector(c) });
                    }
                }
                geo = Some(out);
            }
            if method != Method::Geometric {
                let alg = model.alg();
                let mut h = Homology::with_bound(alg, o.orbit_bound);
                let d = gorenstein_d(&mut h)?;
                let mut out = Vec::new();
                for (k, m) in model.family.modules().iter().enumerate() {
                    if !alg.is_projective(m) && h.is_torsionless(m)? && h.is_cmp(m, d) {
                        let c = model.family.arcs[k];
                        out.push(Entry { family: "alg", label: c.name(), arc: Some(c.to_string()), dims: m.dims.clone() });
                    }
                }
                alg_entries = Some(out);
            }
            let c = check_polygon(t, o.field()?)?;
            if method == Method::Both {
                verdict = Some(c.cmp_match);
            }
            notes.push(format!("syzygy period 3 on {}/{} triangle modules", c.period3.pass, c.period3.pass + c.period3.fail));
        }
        Input::Algebra(_) => {
            if method != Method::Algebraic {
                return Err(CliError::Input("the geometric catalogue needs a triangulation input".into()));
            }
            let alg = algebra_of(input, o)?;
            let mut h = Homology::with_bound(&alg, o.orbit_bound);
            let d = gorenstein_d(&mut h)?;
            let reg = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT)?;
            let mut out = Vec::new();
            for (k, m) in reg.entries().iter().enumerate() {
                if !alg.is_projective(m) && h.is_torsionless(m)? && h.is_cmp(m, d) {
                    out.push(Entry { family: "alg", label: format!("#{k}"), arc: None, dims: m.dims.clone() });
                }
            }
            alg_entries = Some(out);
        }
    }
    let failed = verdict == Some(false);
    if o.format == Format::Json {
        let body = json!({"geometric": geo, "algebraic": alg_entries, "match": verdict, "notes": notes});
        return Ok(Report { body: pretty(&body), failed });
    }
    let mut s = String::new();
    if let Some(g) = &geo {
        render_entries("geometric catalogue", g, &mut s);
    }
    if let Some(a) = &alg_entries {
        render_entries("algebraic CMP set", a, &mut s);
    }
    for n in &notes {
        writeln!(s, "{n}").ok();
    }
    if let Some(v) = verdict {
        writeln!(s, "verdict: {}", if v { "MATCH" } else { "MISMATCH" }).ok();
    }
    Ok(Report { body: s, failed })
}

/// Algebra, certified complete list of indecomposables and their names.
fn indecomposables(input: &Input, o: &Options) -> Result<(Algebra, Vec<Rep>, Vec<String>), CliError> {
    Ok(match input {
        Input::Punctured(t) => {
            let m = punctured_model(t, o)?;
            let names = m.family.arcs.iter().map(|a| a.name()).collect();
            (m.family.alg.clone(), m.family.modules().to_vec(), names)
        }
        Input::Polygon(t) => {
            let m = PolygonModel::new(t.clone(), o.field()?)?;
            let names = m.family.arcs.iter().map(|c| c.name()).collect();
            (m.family.alg.clone(), m.family.modules().to_vec(), names)
        }
        Input::Algebra(_) => {
            let alg = algebra_of(input, o)?;
            let reg = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT)?;
            let mods = reg.entries().to_vec();
            let names = (0..mods.len()).map(|k| format!("#{k}")).collect();
            (alg, mods, names)
        }
    })
}

/// `P(v)`, `I(v)` or `S(v)` for a vertex name `v`.
pub fn parse_module(alg: &Algebra, spec: &str) -> Result<Rep, CliError> {
    let bad = || CliError::Input(format!("--module {spec:?}: expected P(v), I(v) or S(v)"));
    let (kind, rest) = spec.split_at(spec.find('(').ok_or_else(bad)?);
    let name = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let v = alg.quiver().vertex_index(name).ok_or_else(|| CliError::Input(format!("--module {spec:?}: unknown vertex {name:?}")))?;
    Ok(match kind {
        "P" => alg.projective(v)?.clone(),
        "I" => alg.injective(v)?.clone(),
        "S" => alg.simple(v),
        _ => return Err(bad()),
    })
}

pub fn itdim(input: &Input, modules: &[String], per_module: bool, o: &Options) -> Result<Report, CliError> {
    let (alg, mods, names) = indecomposables(input, o)?;
    let mut h = Homology::with_bound(&alg, o.orbit_bound);
    let g = h.gorenstein_dimension()?.dimension();
    let mut body = serde_json::Map::new();
    let mut s = String::new();
    body.insert("gorenstein".into(), json!(g));
    match g {
        Some(d) => writeln!(s, "Gorenstein d={d}").ok(),
        None => writeln!(s, "not Gorenstein").ok(),
    };
    if !modules.is_empty() {
        let parts = modules.iter().map(|m| parse_module(&alg, m)).collect::<Result<Vec<_>, _>>()?;
        let r = h.igusa_todorov_sum(&parts)?;
        writeln!(s, "module {}: phi={} psi={}", modules.join(" + "), r.phi, r.psi).ok();
        body.insert("module".into(), json!({"summands": modules, "phi": r.phi, "psi": r.psi}));
    } else {
        let (phi, psi) = h.it_dimensions(&IndecomposableList { modules: mods.clone(), complete: true })?;
        writeln!(s, "phidim={phi} psidim={psi} over {} indecomposables", mods.len()).ok();
        body.insert("phidim".into(), json!(phi));
        body.insert("psidim".into(), json!(psi));
        body.insert("indecomposables".into(), json!(mods.len()));
    }
    if per_module {
        let mut rows = Vec::new();
        for (m, name) in mods.iter().zip(&names) {
            let r = h.igusa_todorov(m)?;
            writeln!(s, "  {name:<12} {:<16} phi={} psi={}", vec_str(&m.dims), r.phi, r.psi).ok();
            rows.push(json!({"name": name, "dims": m.dims, "phi": r.phi, "psi": r.psi}));
        }
        body.insert("per_module".into(), json!(rows));
    }
    Ok(Report::ok(if o.format == Format::Json { pretty(&body) } else { s }))
}

pub fn arquiver(input: &Input, o: &Options) -> Result<Report, CliError> {
    let Input::Punctured(t) = input else {
        return Err(CliError::Input("the stable quiver needs a punctured-disc triangulation".into()));
    };
    let model = punctured_model(t, o)?;
    let (q, mesh, homs) = stable_quiver_report(&model)?;
    let body = match o.format {
        Format::Dot => q.to_dot(),
        Format::Json => {
            let vertices: Vec<_> = q
                .vertices
                .iter()
                .enumerate()
                .map(|(k, v)| json!({"id": k, "label": v.label(), "arc": q.arcs[k].map(|a| a.to_string())}))
                .collect();
            let arrows: Vec<_> = q
                .arrows
                .iter()
                .map(|&(a, b, c)| json!({"from": a, "to": b, "color": if c == MoveColor::Red { "red" } else { "blue" }}))
                .collect();
            let tau: Vec<_> = q.tau.iter().enumerate().filter_map(|(k, t)| t.map(|t| json!({"from": k, "to": t}))).collect();
            pretty(&json!({"vertices": vertices, "arrows": arrows, "tau": tau}))
        }
        Format::Text => {
            let mut s = String::new();
            let clubs = q.vertices.iter().filter(|v| matches!(v, StableVertex::Club(_))).count();
            let deltas = q.vertices.iter().filter(|v| matches!(v, StableVertex::Delta(..))).count();
            writeln!(s, "{} vertices ({} puncture, {deltas} triangle, {clubs} self-folded)", q.vertices.len(), q.vertices.len() - deltas - clubs).ok();
            writeln!(s, "{} red and {} blue moves", q.count(MoveColor::Red), q.count(MoveColor::Blue)).ok();
            if let Some(m) = &mesh {
                writeln!(s, "two-move sources: {} (mesh rule {}, printed rule {})", m.two_move_sources, m.mesh_rule_sources, m.literal_rule_sources).ok();
                writeln!(s, "moves with nonzero stable Hom: {}/{}", m.stable_hom.pass, m.stable_hom.pass + m.stable_hom.fail).ok();
            }
            let orbit = |k: usize| {
                let mut x = k;
                for step in 1..=q.vertices.len() {
                    x = q.tau[x]?;
                    if x == k {
                        return Some(step);
                    }
                }
                None
            };
            let mut orders: Vec<usize> = (0..q.vertices.len()).filter_map(orbit).collect();
            orders.sort_unstable();
            orders.dedup();
            writeln!(s, "translation orbit lengths: {}", vec_str(&orders)).ok();
            if !homs.is_empty() {
                writeln!(s, "largest stable Hom between triangle or self-folded entries: {}", homs.iter().max().unwrap_or(&0)).ok();
            }
            s
        }
    };
    Ok(Report::ok(body))
}

#[derive(Clone, Debug, Serialize)]
struct Row {
    check: &'static str,
    pass: usize,
    fail: usize,
    note: String,
}

fn row(check: &'static str, t: &Tally, note: impl Into<String>) -> Row {
    Row { check, pass: t.pass, fail: t.fail, note: note.into() }
}

fn flag(check: &'static str, ok: bool, note: impl Into<String>) -> Row {
    Row { check, pass: usize::from(ok), fail: usize::from(!ok), note: note.into() }
}

fn selected(c: Check, name: &str) -> bool {
    let own = match c {
        Check::All => return true,
        Check::Calibration => "calibration",
        Check::Cmp => "cmp",
        Check::Omega => "omega",
        Check::Tau => "tau",
        Check::Period => "period",
        Check::Bits => "bits",
        Check::It => "it",
        Check::Selfinjective => "selfinjective",
    };
    name == own || (own == "cmp" && name == "size")
}

fn render_rows(title: String, rows: Vec<Row>, extra: Vec<String>, check: Check, o: &Options) -> Report {
    let rows: Vec<Row> = rows.into_iter().filter(|r| selected(check, r.check)).collect();
    let failed = rows.iter().any(|r| r.fail > 0);
    if o.format == Format::Json {
        return Report { body: pretty(&json!({"title": title, "checks": rows, "notes": extra, "pass": !failed})), failed };
    }
    let mut s = format!("{title}\n{:<14} {:>8} {:>6}  note\n", "check", "pass", "fail");
    for r in &rows {
        writeln!(s, "{:<14} {:>8} {:>6}  {}", r.check, r.pass, r.fail, r.note).ok();
    }
    for e in &extra {
        writeln!(s, "{e}").ok();
    }
    writeln!(s, "{}", if failed { "FAIL" } else { "PASS" }).ok();
    Report { body: s, failed }
}

fn cases_line(cases: &[usize; 12]) -> String {
    let parts: Vec<String> = OMEGA_CASES.iter().zip(cases).map(|(n, c)| format!("{n}={c}")).collect();
    format!("syzygy configurations: {}", parts.join(" "))
}

pub fn verify_input(input: &Input, check: Check, o: &Options) -> Result<Report, CliError> {
    let f = o.field()?;
    match input {
        Input::Punctured(t) => {
            let c = check_triangulation(t, f, o.seed)?;
            let classified = c.ty != TriangulationType::Other && c.gorenstein.is_some();
            let mut rows = vec![row("calibration", &c.calibration, "P(a), I(a) against the arcs of tau^-1 a, tau a")];
            if classified {
                rows.push(flag("cmp", c.cmp_match, "geometric catalogue equals the algebraic CMP set"));
                rows.push(flag("size", c.size_ok(), format!("{} entries, formula {:?}", c.catalog_size, c.expected_size)));
            }
            rows.push(row("omega", &c.omega, "syzygy of M(r_i,b_j) is M(r_(j-1),b_i)"));
            rows.push(row("tau", &c.tau_tilde, "translation on labels against the syzygy squared"));
            rows.push(row("period", &c.period3, "triangle and self-folded entries"));
            if matches!(c.gorenstein, Some(0 | 1)) {
                rows.push(row("bits", &c.bits, "(a1)-(a4) and (b1)-(b4) agree"));
            }
            rows.push(flag("it", c.it_ok(), format!("d={:?} phidim={:?} psidim={:?}", c.gorenstein, c.phi, c.psi)));
            let mut extra = vec![cases_line(&c.omega_cases)];
            if c.gorenstein == Some(0) {
                let model = punctured_model(t, o)?;
                let h = Homology::with_bound(model.alg(), o.orbit_bound);
                let si = h.selfinjective_report()?;
                let nonproj: Vec<Rep> = model.family.modules().iter().filter(|m| !model.alg().is_projective(m)).cloned().collect();
                let per = h.verify_tau_periodicity(&nonproj)?;
                let mut tally = Tally::default();
                per.iter().for_each(|&b| tally.record(b));
                rows.push(row("selfinjective", &tally, format!("tau^{} on non-projectives", 2 * si.order)));
            }
            if !classified {
                extra.push("no geometric catalogue for this triangulation".into());
            }
            let title = format!("triangulation of type {} with {} marked points", type_name(c.ty), c.n);
            Ok(render_rows(title, rows, extra, check, o))
        }
        Input::Polygon(t) => {
            let c = check_polygon(t, f)?;
            let rows = vec![
                flag("cmp", c.cmp_match, format!("{} triangle modules", 3 * c.t)),
                row("period", &c.period3, "syzygy period 3"),
            ];
            Ok(render_rows(format!("polygon triangulation with {} vertices", c.n), rows, Vec::new(), check, o))
        }
        Input::Algebra(_) => {
            let alg = algebra_of(input, o)?;
            let mut h = Homology::with_bound(&alg, o.orbit_bound);
            let g = h.gorenstein_dimension()?;
            let mut rows = Vec::new();
            let mut extra = Vec::new();
            let reg = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT)?;
            let mods = reg.entries().to_vec();
            match g.dimension() {
                Some(d) if d <= 1 => {
                    let mut t = Tally::default();
                    for m in &mods {
                        t.record(h.characterization_bits(m, d)?.consistent());
                    }
                    rows.push(row("bits", &t, "(a1)-(a4) and (b1)-(b4) agree"));
                }
                Some(d) => extra.push(format!("characterization skipped: Gorenstein of dimension {d}")),
                None => extra.push(format!(
                    "characterization skipped: not Gorenstein (proj.dim D(B) = {}, inj.dim B = {})",
                    g.d_left, g.d_right
                )),
            }
            let (phi, psi) = h.it_dimensions(&IndecomposableList { modules: mods.clone(), complete: true })?;
            match g.dimension() {
                Some(d) => rows.push(flag("it", phi == d && psi == d, format!("d={d} phidim={phi} psidim={psi}"))),
                None => extra.push(format!("phidim={phi} psidim={psi}")),
            }
            let si = h.selfinjective_report()?;
            if si.selfinjective {
                let nonproj: Vec<Rep> = mods.iter().filter(|m| !alg.is_projective(m)).cloned().collect();
                let mut t = Tally::default();
                h.verify_tau_periodicity(&nonproj)?.iter().for_each(|&b| t.record(b));
                rows.push(row("selfinjective", &t, format!("tau^{} on non-projectives", 2 * si.order)));
            }
            Ok(render_rows(format!("algebra with {} indecomposables", mods.len()), rows, extra, check, o))
        }
    }
}

pub fn verify_sweep(n: usize, surface: Surface, check: Check, o: &Options) -> Result<Report, CliError> {
    let f = o.field()?;
    match surface {
        Surface::Punctured => {
            let (s, time) = sweep::punctured(n, f, o.seed, o.jobs)?;
            let rows = vec![
                row("calibration", &s.calibration, ""),
                row("cmp", &s.cmp, "catalogue equals algebraic CMP set"),
                row("size", &s.sizes, "catalogue size formula"),
                row("omega", &s.omega, "label formula for the syzygy"),
                row("tau", &s.tau_tilde, "translation on labels"),
                row("period", &s.period3, "triangle and self-folded entries"),
                row("bits", &s.bits, format!("over {} algebras with d <= 1", s.one_gorenstein)),
                row("it", &s.it, "Gorenstein d in {0,1} and phidim = psidim = d"),
            ];
            let [a, b, c, d] = s.by_type;
            let [g0, g1, g2] = s.by_gorenstein;
            let mut extra = vec![
                format!("types: I {a}, II {b}, III {c}, other {d}"),
                format!("Gorenstein dimension: 0 on {g0}, 1 on {g1}, other {g2}"),
                cases_line(&s.omega_cases),
                format!("elapsed {:.2}s", time.as_secs_f64()),
            ];
            for arcs in &s.failures {
                let names: Vec<String> = arcs.iter().map(|a| a.name()).collect();
                extra.push(format!("failing triangulation: {}", names.join(" ")));
            }
            let title = format!("sweep over {} triangulations of the once-punctured {n}-gon", s.triangulations);
            Ok(render_rows(title, rows, extra, check, o))
        }
        Surface::Polygon => {
            let (s, time): (PolygonSummary, _) = sweep::polygon(n, f, o.jobs)?;
            let rows = vec![row("cmp", &s.cmp, "triangle modules equal the CMP set"), row("period", &s.period3, "syzygy period 3")];
            let extra = vec![format!("{} internal triangles", s.triangles), format!("elapsed {:.2}s", time.as_secs_f64())];
            Ok(render_rows(format!("sweep over {} triangulations of the {n}-gon", s.triangulations), rows, extra, check, o))
        }
    }
}

pub fn enumerate(n: usize, surface: Surface, o: &Options) -> Result<Report, CliError> {
    match surface {
        Surface::Punctured => {
            let ts = normalized_triangulations(n);
            if o.format == Format::Json {
                return Ok(Report::ok(pretty(&ts.iter().map(triangulation_json).collect::<Vec<_>>())));
            }
            let mut s = format!("{} triangulations of the once-punctured {n}-gon\n", ts.len());
            for (k, t) in ts.iter().enumerate() {
                let names: Vec<String> = t.arcs.iter().map(|a| a.name()).collect();
                writeln!(s, "{k:>5}  {:<5} m={} d={} t={}  {}", type_name(t.classify()), t.m(), t.d(), t.t(), names.join(" ")).ok();
            }
            Ok(Report::ok(s))
        }
        Surface::Polygon => {
            let ts = enumerate_polygon_triangulations(n);
            if o.format == Format::Json {
                return Ok(Report::ok(pretty(&ts.iter().map(polygon_json).collect::<Vec<_>>())));
            }
            let mut s = format!("{} triangulations of the {n}-gon\n", ts.len());
            for (k, t) in ts.iter().enumerate() {
                let names: Vec<String> = t.chords.iter().map(|c| c.name()).collect();
                writeln!(s, "{k:>5}  t={}  {}", t.internal_triangles().len(), names.join(" ")).ok();
            }
            Ok(Report::ok(s))
        }
    }
}

/// The module of every arc, for inspection.
pub fn modules_json(t: &Triangulation, o: &Options) -> Result<String, CliError> {
    let model = punctured_model(t, o)?;
    let out: Vec<_> = model
        .family
        .arcs
        .iter()
        .zip(model.family.modules())
        .map(|(a, m)| json!({"arc": a.name(), "module": RepJson::from(m)}))
        .collect();
    Ok(pretty(&out))
}
