use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use strlink::alexander::{
    alexander_function, alexander_function_one_var, alexander_one_var_closure, factorization_residual, full_report,
    knot_closure_relation, normalize_rat_unit, torsion, AlexReport,
};
use strlink::algebra::text::{format_poly, format_ratfunc};
use strlink::diagram::{parse_braid, parse_input};
use strlink::finitetype::{alternating_sum, taylor_gassner, SeriesMatrix};
use strlink::gassner::{self, default_angles, solve_fox, unitary_spectrum_check, GassnerMatrix};
use strlink::json::{gassner_to_json, matrix_to_json, report_to_json, series_to_json};
use strlink::walks::{solve_labeling, twist_formula, walk_matrix};
use strlink::wirtinger::check_augmentation;
use strlink::{Error, MorseWord, RatFunc, RatMatrix};

use crate::Command;

pub struct Output {
    pub text: String,
    pub json: Value,
    /// Name of the first failed identity, if any.
    pub violation: Option<String>,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::NotExact | Error::Singular => 2,
            _ => 1,
        };
        let message = match &e {
            Error::Parse { line, col, msg } => format!("line {line}, column {col}: {msg}"),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

type Res<T> = Result<T, Failure>;

fn one_var() -> Vec<String> {
    vec!["t".into()]
}

fn matrix_text(m: &RatMatrix, names: &[String]) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format_ratfunc(x, names)).collect();
        let _ = writeln!(s, "[{}]", row.join(", "));
    }
    s
}

fn gassner_output(g: &GassnerMatrix) -> Output {
    Output { text: matrix_text(&g.matrix, &g.var_names), json: gassner_to_json(g), violation: None }
}

fn read(path: &Path) -> Res<MorseWord> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    Ok(parse_input(&text)?)
}

fn braid_b(n: usize, word: &str) -> Res<MorseWord> {
    Ok(parse_braid(&format!("braid {n}: {word}"))?)
}

fn require_pure(w: &MorseWord) -> Res<()> {
    if w.is_pure()? {
        Ok(())
    } else {
        Err(Failure { code: 1, message: "this command needs a pure string link".into() })
    }
}

pub fn run(cmd: &Command, path: &Path) -> Res<Output> {
    let w = read(path)?;
    match cmd {
        Command::Gassner(_) => Ok(gassner_output(&gassner::gassner(&w)?)),
        Command::Burau(_) => Ok(gassner_output(&gassner::burau(&w)?)),
        Command::Reduce(_) => {
            require_pure(&w)?;
            let g = gassner::gassner(&w)?;
            let r = gassner::reduce(&g)?;
            Ok(Output { text: matrix_text(&r, &g.var_names), json: matrix_to_json(&r, &g.var_names), violation: None })
        }
        Command::Alexander { braid_b: b, .. } => alexander(&w, b.as_deref()),
        Command::Torsion(_) => torsion_cmd(&w),
        Command::Report(_) => {
            let r = full_report(&w)?;
            let violation = r.checks.iter().find(|(_, ok)| !ok).map(|(n, _)| n.clone());
            Ok(Output { text: report_text(&r), json: report_to_json(&r), violation })
        }
        Command::Twist { strand, .. } => twist(&w, *strand),
        Command::Taylor { order, .. } => {
            let s = taylor_gassner(&w, *order)?;
            Ok(Output { text: series_text(&s), json: series_to_json(&s), violation: None })
        }
        Command::Altsum { flips, order, .. } => altsum(&w, flips, *order),
        Command::Walkcheck { labels, .. } => walkcheck(&w, *labels),
        Command::Spectrum { angles, .. } => spectrum(&w, angles.as_deref()),
        Command::Verify { braid_b: b, .. } => verify(&w, b.as_deref()),
    }
}

fn alexander(w: &MorseWord, b: Option<&str>) -> Res<Output> {
    let d = w.trace()?;
    let sol = solve_fox(&d)?;
    let g = gassner::gassner_from_diagram(&d)?;
    let b_g = gassner::burau(w)?;
    let names = &g.var_names;
    let t = one_var();
    let mut j = serde_json::Map::new();
    let mut text = String::new();
    if d.ncolors >= 2 {
        let v = strlink::alexander::closure_matrix(&sol);
        let p = format_poly(&strlink::alexander::alexander_poly_closure(&v)?, names);
        let _ = writeln!(text, "closure polynomial: {p}");
        j.insert("closure_polynomial".into(), json!(p));
    }
    let p1 = format_poly(&alexander_one_var_closure(w)?, &t);
    let af = format_ratfunc(&normalize_rat_unit(&alexander_function(&g)?), names);
    let af1 = format_ratfunc(&normalize_rat_unit(&alexander_function_one_var(&b_g)?), &t);
    let _ = writeln!(text, "one-variable closure polynomial: {p1}");
    let _ = writeln!(text, "alexander function: {af}");
    let _ = writeln!(text, "one-variable alexander function: {af1}");
    j.insert("closure_polynomial_one_var".into(), json!(p1));
    j.insert("alexander_function".into(), json!(af));
    j.insert("alexander_function_one_var".into(), json!(af1));
    let mut violation = None;
    if let Some(b) = b {
        let bw = braid_b(w.n(), b)?;
        let k = knot_closure_relation(w, Some(&bw))?;
        let _ = writeln!(text, "closure of L B: {}", format_poly(&k.knot_poly, &t));
        let _ = writeln!(text, "det(I - r(L)): {}", format_ratfunc(&k.det_l, &t));
        let _ = writeln!(text, "det(I - r(L) r(B)): {}", format_ratfunc(&k.det_lb, &t));
        let _ = writeln!(text, "knot-closure relation: {}", if k.holds { "holds" } else { "FAILS" });
        j.insert(
            "knot_closure".into(),
            json!({
                "knot_polynomial": format_poly(&k.knot_poly, &t),
                "det_l": format_ratfunc(&k.det_l, &t),
                "det_lb": format_ratfunc(&k.det_lb, &t),
                "holds": k.holds,
            }),
        );
        if !k.holds {
            violation = Some("knot-closure relation".into());
        }
    }
    Ok(Output { text, json: Value::Object(j), violation })
}

fn torsion_cmd(w: &MorseWord) -> Res<Output> {
    let d = w.trace()?;
    let sol = solve_fox(&d)?;
    let names = gassner::gassner_from_diagram(&d)?.var_names;
    let tau = torsion(&sol)?;
    let tau1 = torsion(&solve_fox(&w.monochrome().trace()?)?)?;
    let (a, b) = (format_poly(&tau, &names), format_poly(&tau1, &one_var()));
    Ok(Output {
        text: format!("torsion: {a}\none-variable torsion: {b}\n"),
        json: json!({ "vars": names, "torsion": a, "torsion_one_var": b }),
        violation: None,
    })
}

fn report_text(r: &AlexReport) -> String {
    let names = &r.gassner.var_names;
    let t = one_var();
    let mut rows: Vec<(String, String)> = vec![
        ("strands".into(), r.n.to_string()),
        ("crossings".into(), r.crossings.to_string()),
    ];
    if let Some(p) = &r.closure_poly {
        rows.push(("closure polynomial".into(), format_poly(p, names)));
    }
    rows.push(("closure polynomial (t)".into(), format_poly(&r.closure_one_var, &t)));
    rows.push(("torsion".into(), format_poly(&r.torsion, names)));
    rows.push(("torsion (t)".into(), format_poly(&r.torsion_one_var, &t)));
    rows.push(("alexander function".into(), format_ratfunc(&normalize_rat_unit(&r.alexander_function), names)));
    rows.push(("alexander function (t)".into(), format_ratfunc(&normalize_rat_unit(&r.alexander_function_one_var), &t)));
    for (name, ok) in &r.checks {
        rows.push((format!("check: {name}"), if *ok { "pass" } else { "FAIL" }.into()));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<width$}  {v}");
    }
    s
}

fn twist(w: &MorseWord, strand: usize) -> Res<Output> {
    require_pure(w)?;
    let g = gassner::gassner(w)?;
    let by_formula = twist_formula(&g, strand)?;
    let by_word = gassner::gassner(&w.add_twist(strand)?)?;
    let mut out = gassner_output(&by_formula);
    if by_formula.matrix != by_word.matrix {
        out.violation = Some("twist formula against the twisted diagram".into());
    }
    Ok(out)
}

fn series_text(s: &SeriesMatrix) -> String {
    let mut out = s.display();
    for (idx, m) in s.coefficients() {
        let rows: Vec<String> =
            m.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
        let _ = writeln!(out, "b{idx:?} = {}", rows.join(" "));
    }
    out
}

fn altsum(w: &MorseWord, flips: &[usize], order: Option<u32>) -> Res<Output> {
    let s = alternating_sum(w, flips, order)?;
    let k = flips.len() as u32;
    let vanishes = s.vanishes_below(k);
    let lowest = s.order();
    let mut text = format!(
        "flips: {flips:?}\nlowest nonzero degree: {}\nvanishes below degree {k}: {}\n",
        lowest.map_or("none within truncation".to_string(), |o| o.to_string()),
        if vanishes { "yes" } else { "NO" }
    );
    text.push_str(&series_text(&s));
    let json = json!({ "flips": flips, "lowest_degree": lowest, "vanishes_below_k": vanishes, "series": series_to_json(&s) });
    let violation = (!vanishes).then(|| format!("alternating sum over {k} flips vanishes below degree {k}"));
    Ok(Output { text, json, violation })
}

fn walkcheck(w: &MorseWord, labels: Option<usize>) -> Res<Output> {
    let d = w.trace()?;
    let g = gassner::gassner_from_diagram(&d)?;
    let walks = walk_matrix(&d)?;
    let ok = walks == g.matrix;
    let mut text = format!("walk matrix equals gassner matrix: {}\n", if ok { "yes" } else { "NO" });
    let mut json = json!({ "agree": ok, "walk_matrix": matrix_to_json(&walks, &g.var_names) });
    if let Some(s) = labels {
        if s == 0 || s > d.n {
            return Err(Failure { code: 1, message: format!("strand {s} out of range 1..={}", d.n) });
        }
        let top: Vec<RatFunc> =
            (0..d.n).map(|i| if i + 1 == s { RatFunc::one(d.ncolors) } else { RatFunc::zero(d.ncolors) }).collect();
        let lab = solve_labeling(&d, &top)?;
        let mut map = serde_json::Map::new();
        for (e, x) in lab.iter().enumerate() {
            let v = format_ratfunc(x, &g.var_names);
            let _ = writeln!(text, "e{e}\t{v}");
            map.insert(format!("e{e}"), json!(v));
        }
        json["labels"] = Value::Object(map);
    }
    let violation = (!ok).then(|| "walk matrix equals gassner matrix".to_string());
    Ok(Output { text, json, violation })
}

fn spectrum(w: &MorseWord, angles: Option<&[f64]>) -> Res<Output> {
    require_pure(w)?;
    let g = gassner::gassner(w)?;
    if g.n < 2 {
        return Err(Failure { code: 1, message: "reduced matrix needs at least two strands".into() });
    }
    let r = gassner::reduce(&g)?;
    let angles = angles.map(<[f64]>::to_vec).unwrap_or_else(|| default_angles(g.n, g.nvars));
    let bound = 1.0 / (g.n as f64 + 1.0);
    if angles.iter().any(|&a| a <= 0.0 || a >= bound) {
        eprintln!("warning: angles outside (0, {bound:.4}); the spectrum need not be unitary");
    }
    let s = unitary_spectrum_check(&r, &angles, 1e-8)?;
    let mut text = format!("distinct eigenvalues of the reduced matrix at angles {angles:?}\n");
    for z in &s.eigenvalues {
        let _ = writeln!(text, "{:+.12} {:+.12}i  |z| = {:.12}", z.re, z.im, z.norm());
    }
    let _ = writeln!(text, "max ||z| - 1| = {:.3e}", s.max_deviation);
    let json = json!({
        "angles": angles,
        "eigenvalues": s.eigenvalues.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
        "max_deviation": s.max_deviation,
        "unitary": s.passed(),
    });
    Ok(Output { text, json, violation: None })
}

fn verify(w: &MorseWord, b: Option<&str>) -> Res<Output> {
    let d = w.trace()?;
    let sol = solve_fox(&d)?;
    let g = gassner::gassner_from_diagram(&d)?;
    let pure = w.is_pure()?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    if pure {
        let (right, left) = g.eigenvector_residuals();
        checks.push(("(I - gamma) w = 0".into(), right.iter().all(RatFunc::is_zero)));
        checks.push(("u (I - gamma) = 0".into(), left.iter().all(RatFunc::is_zero)));
    }
    checks.push(("closure matrix factorization".into(), factorization_residual(&sol)?.is_zero()));
    checks.push(("augmentation of det(A B) is a unit".into(), check_augmentation(&sol.fox).is_ok()));
    checks.push(("walk matrix equals gassner matrix".into(), walk_matrix(&d)? == g.matrix));
    let inv = w.stack(&w.invert()?)?;
    checks.push(("L followed by its inverse is trivial".into(), gassner::gassner(&inv)?.is_identity()));
    let r = full_report(w)?;
    checks.extend(r.checks.iter().cloned());
    if let Some(b) = b {
        let k = knot_closure_relation(w, Some(&braid_b(w.n(), b)?))?;
        checks.push(("knot-closure relation".into(), k.holds));
    }
    let mut text = String::new();
    for (name, ok) in &checks {
        let _ = writeln!(text, "{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    let violation = checks.iter().find(|(_, ok)| !ok).map(|(n, _)| n.clone());
    let json = json!({
        "checks": checks.iter().map(|(n, ok)| json!({ "name": n, "passed": ok })).collect::<Vec<_>>(),
        "passed": violation.is_none(),
    });
    Ok(Output { text, json, violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(Failure::from(Error::Invariant("x".into())).code, 2);
        assert_eq!(Failure::from(Error::Diagram("x".into())).code, 1);
        assert_eq!(Failure::from(Error::Shape("x".into())).code, 1);
    }
}
