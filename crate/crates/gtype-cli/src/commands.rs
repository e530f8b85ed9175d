use std::path::Path;

use gtype_algebra::{double_boundaries, mixing_report, perron_root, power};
use gtype_boundary::{boundary_code_table, Boundary, Code, Orbits};
use gtype_core::{parse_candidate, parse_geometric_type, serialize, validate, GeometricType};
use gtype_obstructions::{find_condition, pa_verdict, ConditionWitness, Kind, Reason, Status, VerdictOptions};
use gtype_oracle::{geometric_impasse, geometric_obstructions, realizer_euler, ribbons};
use gtype_surface::{surface_report, surface_report_unchecked, SurfaceReport};

use crate::error::CliError;
use crate::render::render_svg;
use crate::{Command, Io, Relation};

type Outcome = Result<i32, CliError>;

fn out_err(e: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source: e }
}

macro_rules! say {
    ($io:expr, $($arg:tt)*) => {
        writeln!($io.out, $($arg)*).map_err(out_err)?
    };
}

fn read_input(path: &Path, io: &mut Io) -> Result<String, CliError> {
    let mut s = String::new();
    let res = if path.as_os_str() == "-" {
        io.stdin.read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|x| s = x)
    };
    res.map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(s)
}

fn load(path: &Path, io: &mut Io) -> Result<GeometricType, CliError> {
    Ok(parse_geometric_type(&read_input(path, io)?)?)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub(crate) fn dispatch(cmd: &Command, io: &mut Io) -> Outcome {
    match cmd {
        Command::Validate { file } => validate_cmd(file, io),
        Command::Info { file } => info(&load(file, io)?, io),
        Command::Power { m, file } => {
            let p = power(&load(file, io)?, *m as usize)?;
            write!(io.out, "{}", serialize(&p)).map_err(out_err)?;
            Ok(0)
        }
        Command::Invert { file } => {
            let inv = load(file, io)?.invert();
            write!(io.out, "{}", serialize(&inv)).map_err(out_err)?;
            Ok(0)
        }
        Command::Check { verify: Some(cert), file, .. } => verify_cmd(&load(file, io)?, cert, io),
        Command::Check { max_power, verify: None, file } => check(&load(file, io)?, max_power.map(|p| p as usize), io),
        Command::Boundary { file } => boundary(&load(file, io)?, io),
        Command::Related { rel, file, code1, code2 } => related(&load(file, io)?, *rel, code1, code2, io),
        Command::Surface { force, file } => surface(&load(file, io)?, *force, io),
        Command::Oracle { m, file } => oracle(&load(file, io)?, *m as usize, io),
        Command::Render { m, o, file } => {
            let t = load(file, io)?;
            let rs = match m {
                Some(m) => ribbons(&t, *m as usize)?,
                None => Vec::new(),
            };
            std::fs::write(o, render_svg(&t, &rs))
                .map_err(|source| CliError::Io { path: o.display().to_string(), source })?;
            Ok(0)
        }
    }
}

fn validate_cmd(file: &Path, io: &mut Io) -> Outcome {
    let c = parse_candidate(&read_input(file, io)?)?;
    let r = validate(&c);
    if r.ok {
        say!(io, "ok");
        return Ok(0);
    }
    say!(io, "invalid");
    for v in &r.violations {
        say!(io, "violation rule={} {}", v.rule, v.detail);
    }
    Ok(3)
}

fn info(t: &GeometricType, io: &mut Io) -> Outcome {
    let a = t.incidence_matrix();
    let mix = mixing_report(&a);
    say!(io, "n={}", t.n());
    say!(io, "h={}", join(t.hs(), ","));
    say!(io, "v={}", join(t.vs(), ","));
    say!(io, "alpha={}", t.alpha());
    say!(io, "A={a}");
    say!(io, "binary={}", mix.binary);
    say!(io, "mixing={}", mix.mixing);
    match mix.witness_exponent {
        Some(k) => say!(io, "witness_exponent={k}"),
        None => say!(io, "witness_exponent=none"),
    }
    say!(io, "positive_at_n={}", mix.positive_at_n);
    let dbs = double_boundaries(t);
    if dbs.is_empty() {
        say!(io, "double_boundary=none");
    }
    for d in dbs {
        say!(io, "double_boundary {d}");
    }
    match perron_root(&a) {
        Ok(x) => say!(io, "perron={x:.12}"),
        Err(_) => say!(io, "perron=none"),
    }
    Ok(0)
}

fn check(t: &GeometricType, max_power: Option<usize>, io: &mut Io) -> Outcome {
    let v = pa_verdict(t, VerdictOptions { max_power, ..VerdictOptions::default() });
    say!(io, "status={}", v.status);
    say!(io, "powers_examined={}", v.powers_examined);
    say!(io, "mixing={}", v.mixing.mixing);
    for r in &v.reasons {
        match r {
            Reason::DoubleBoundary(d) => say!(io, "reason={} {d}", r.name()),
            Reason::Condition(w) => {
                say!(io, "reason={}", r.name());
                say!(io, "{w}");
            }
            Reason::NotMixing => say!(io, "reason={}", r.name()),
        }
    }
    if let Some(n) = &v.note {
        say!(io, "note={n}");
    }
    Ok(match v.status {
        Status::InClass => 0,
        Status::NotInClass => 1,
        Status::Inconclusive => 4,
    })
}

fn verify_cmd(t: &GeometricType, cert: &Path, io: &mut Io) -> Outcome {
    let text = std::fs::read_to_string(cert).map_err(|source| CliError::Io { path: cert.display().to_string(), source })?;
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    if lines.is_empty() {
        return Err(CliError::Parse(format!("{}: no certificate", cert.display())));
    }
    let mut all = true;
    for line in lines {
        let w: ConditionWitness = line.parse().map_err(|e: gtype_obstructions::CertificateError| CliError::Parse(e.to_string()))?;
        let ok = w.verify(t)?;
        all &= ok;
        say!(io, "{} {w}", if ok { "verified" } else { "failed" });
    }
    Ok(if all { 0 } else { 1 })
}

fn orbit_lines(io: &mut Io, tag: &str, o: &Orbits) -> Result<(), CliError> {
    for c in &o.cycles {
        say!(io, "{tag}_cycle {}", join(c, " "));
    }
    for (l, d) in &o.tails {
        say!(io, "{tag}_tail {l} steps={d}");
    }
    Ok(())
}

fn boundary(t: &GeometricType, io: &mut Io) -> Outcome {
    let tab = boundary_code_table(t)?;
    orbit_lines(io, "gamma", &tab.gamma_orbits)?;
    orbit_lines(io, "upsilon", &tab.upsilon_orbits)?;
    for (l, c) in &tab.s_codes {
        say!(io, "s {l} {c}");
    }
    for (l, c) in &tab.u_codes {
        say!(io, "u {l} {c}");
    }
    for c in &tab.per_s {
        say!(io, "per_s {c}");
    }
    for c in &tab.per_u {
        say!(io, "per_u {c}");
    }
    say!(io, "s_codes_distinct={}", tab.s_codes_distinct());
    say!(io, "corner_property={}", tab.has_corner_property());
    Ok(0)
}

fn related(t: &GeometricType, rel: Relation, a: &str, b: &str, io: &mut Io) -> Outcome {
    let (w, v): (Code, Code) = (a.parse()?, b.parse()?);
    let bd = Boundary::new(t)?;
    let chain = match rel {
        Relation::S => bd.s_related(&w, &v)?,
        Relation::U => bd.u_related(&w, &v)?,
        Relation::T => bd.t_related(&w, &v)?,
    };
    say!(io, "related={}", chain.is_some());
    if let Some(c) = chain {
        say!(io, "steps={}", c.len());
        for s in c {
            say!(io, "step {s}");
        }
    }
    Ok(0)
}

fn print_report(r: &SurfaceReport, io: &mut Io) -> Result<(), CliError> {
    for o in &r.orbits {
        let codes = join(&r.classes[o.representative].codes, " ");
        say!(io, "orbit period={} prongs={} codes={codes}", o.period, o.prongs);
    }
    say!(io, "chi={} genus={}", r.chi, r.genus);
    Ok(())
}

fn surface(t: &GeometricType, force: bool, io: &mut Io) -> Outcome {
    if !force {
        print_report(&surface_report(t)?, io)?;
        return Ok(0);
    }
    let r = surface_report_unchecked(t)?;
    print_report(&r, io)?;
    for w in &r.warnings {
        let _ = writeln!(io.err, "warning: {w}");
    }
    if r.warnings.is_empty() {
        Ok(0)
    } else {
        Err(CliError::Tripwire(format!("prong computation inconsistent, {} warnings", r.warnings.len())))
    }
}

fn oracle(t: &GeometricType, m: usize, io: &mut Io) -> Outcome {
    let mut bad = 0;
    for k in 1..=m {
        let p = power(t, k)?;
        let geo = geometric_obstructions(t, k)?;
        let imp = geometric_impasse(t, k)?.is_some();
        let rows = [
            (Kind::Impasse, imp),
            (Kind::Type1, geo.type1.is_some()),
            (Kind::Type2, geo.type2.is_some()),
            (Kind::Type3, geo.type3.is_some()),
        ];
        for (kind, g) in rows {
            let c = find_condition(&p, kind, k).is_some();
            bad += usize::from(c != g);
            say!(io, "m={k} kind={kind} combinatorial={c} geometric={g} agree={}", c == g);
        }
    }
    for k in 0..=m {
        let r = realizer_euler(t, k)?;
        bad += usize::from(r.chi != r.chi_cells);
        say!(
            io,
            "realizer m={k} chi={} chi_cells={} components={} boundary_circles={} genus={}",
            r.chi,
            r.chi_cells,
            r.components,
            r.boundary_circles,
            r.genus
        );
    }
    say!(io, "disagreements={bad}");
    if bad > 0 {
        return Err(CliError::Tripwire(format!("{bad} disagreements with the affine model")));
    }
    Ok(0)
}
