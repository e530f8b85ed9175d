//! Byte-for-byte reports. `UPDATE_GOLDEN=1` rewrites the expected files.

use std::path::PathBuf;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gtype_cli::run(std::iter::once("gtype").chain(args.iter().copied()), &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).display().to_string()
}

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "{name}");
}

#[test]
fn reports() {
    let cases: [(&str, &[&str], i32); 10] = [
        ("info_cat.out", &["info", "t_cat.gt"], 0),
        ("power2_cat.out", &["power", "-m", "2", "t_cat.gt"], 0),
        ("invert_pa4.out", &["invert", "t_pa4.gt"], 0),
        ("check_hs.out", &["check", "t_hs.gt"], 1),
        ("check_id.out", &["check", "t_id.gt"], 1),
        ("check_cat.out", &["check", "t_cat.gt"], 1),
        ("boundary_cat.out", &["boundary", "t_cat.gt"], 0),
        ("surface_pa4.out", &["surface", "t_pa4.gt"], 0),
        ("surface_sphere.out", &["surface", "t_sphere.gt"], 0),
        ("oracle_hs.out", &["oracle", "-m", "3", "t_hs.gt"], 0),
    ];
    for (name, args, code) in cases {
        let file = fixture(args[args.len() - 1]);
        let mut argv: Vec<&str> = args[..args.len() - 1].to_vec();
        argv.push(&file);
        let (c, out, err) = run(&argv, "");
        assert_eq!(c, code, "{name}: {err}");
        golden(name, &out);
    }
}

#[test]
fn cat_surface_forced() {
    let (c, out, err) = run(&["surface", &fixture("t_cat.gt")], "");
    assert_eq!(c, 3);
    assert!(out.is_empty() && err.contains("not in the pseudo-Anosov class"));
    let (c, out, err) = run(&["surface", "--force", &fixture("t_cat.gt")], "");
    assert_eq!(c, 5);
    assert!(out.ends_with("chi=0 genus=1\n"), "{out}");
    assert!(err.contains("a-sum 3"));
}

#[test]
fn output_reparses() {
    for f in ["t_cat.gt", "t_pa4.gt", "t_bak.gt", "t_hs.gt"] {
        for args in [vec!["power", "-m", "3"], vec!["invert"]] {
            let mut argv = args.clone();
            let file = fixture(f);
            argv.push(&file);
            let (c, out, _) = run(&argv, "");
            assert_eq!(c, 0);
            let (c, ok, _) = run(&["validate", "-"], &out);
            assert_eq!((c, ok.as_str()), (0, "ok\n"), "{f} {args:?}");
        }
    }
}

#[test]
fn certificates_roundtrip() {
    let cat = fixture("t_cat.gt");
    let (_, out, _) = run(&["check", &cat], "");
    let certs: String = out.lines().filter(|l| l.starts_with("WITNESS")).map(|l| format!("{l}\n")).collect();
    assert!(!certs.is_empty());
    let dir = std::env::temp_dir().join(format!("gtype-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.cert");
    std::fs::write(&good, &certs).unwrap();
    let (c, out, _) = run(&["check", "--verify", good.to_str().unwrap(), &cat], "");
    assert_eq!(c, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("verified")));
    // a stripe that is not a fold of the cat type
    let bad = dir.join("bad.cert");
    std::fs::write(&bad, "WITNESS impasse m=1 i=1 j=1\n").unwrap();
    assert_eq!(run(&["check", "--verify", bad.to_str().unwrap(), &cat], "").0, 1);
    std::fs::write(&bad, "WITNESS nonsense\n").unwrap();
    assert_eq!(run(&["check", "--verify", bad.to_str().unwrap(), &cat], "").0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "/nonexistent.gt"], "").0, 2);
    assert_eq!(run(&["validate", "-"], "GT v1\nn=x\n").0, 2);
    let missing = "GT v1\nn=1\nh=2\nv=2\nmap (1,1)->(1,1) +1\n";
    let (c, out, _) = run(&["validate", "-"], missing);
    assert_eq!(c, 3);
    assert!(out.starts_with("invalid\nviolation rule="));
    assert_eq!(run(&["info", "-"], missing).0, 3);
    assert_eq!(run(&["power", "-m", "0", &fixture("t_cat.gt")], "").0, 2);
    assert_eq!(run(&["boundary", &fixture("t_bak.gt")], "").0, 3);
    assert_eq!(run(&["boundary", &fixture("t_id.gt")], "").0, 3);
    assert_eq!(run(&["oracle", "-m", "1", &fixture("t_id.gt")], "").0, 3);
    let cat = fixture("t_cat.gt");
    assert_eq!(run(&["check", "--max-power", "1", &cat], "").0, 4);
    assert_eq!(run(&["related", "--rel", "s", &cat, "(1)^-|1|(1)^+", "(2)^-|2|(2)^+"], "").0, 3);
    assert_eq!(run(&["related", "--rel", "s", &cat, "(1)^-|1|(1)^+", "(1"], "").0, 2);
    assert_eq!(run(&["related", "--rel", "x", &cat, "(1)^-|1|(1)^+", "(1)^-|1|(1)^+"], "").0, 2);
}

#[test]
fn related_reports_chain() {
    let cat = fixture("t_cat.gt");
    let (c, out, _) = run(&["related", "--rel", "T", &cat, "(1)^-|1|(1)^+", "(12)^-|2|(12)^+"], "");
    assert_eq!(c, 0);
    assert!(out.starts_with("related=true\nsteps=1\nstep "));
    let (c, out, _) = run(&["related", "--rel", "T", &cat, "(1)^-|1|(1)^+", "(112)^-|2|(112)^+"], "");
    assert_eq!((c, out.as_str()), (0, "related=false\n"));
}

#[test]
fn render_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("gtype-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.svg"), dir.join("b.svg"));
    for p in [&a, &b] {
        assert_eq!(run(&["render", "-m", "2", "-o", p.to_str().unwrap(), &fixture("t_cat.gt")], "").0, 0);
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("class=\"ribbon\"").count(), 2);
    golden("render_cat_m2.svg", &svg);
    std::fs::remove_dir_all(&dir).unwrap();
}
