use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn glacalc(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glacalc"))
        .args(args)
        .arg("--file")
        .arg(fixture(file))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn heisenberg_validates() {
    let o = glacalc(&["validate"], "heisenberg.gla");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("seed: 0"));
    assert!(out.ends_with("status: pass\n"));
}

#[test]
fn mc_prints_the_heisenberg_equation() {
    let o = glacalc(&["mc"], "heisenberg.gla");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.ends_with(": d t^3 = -t^1∧t^2")), "{}", stdout(&o));
    // the hand-typed table prints the same line
    let o = glacalc(&["mc"], "heisenberg_table.gla");
    assert!(stdout(&o).contains("d t^3 = -t^1∧t^2"));
}

#[test]
fn frobenius_names_the_obstruction() {
    let o = glacalc(&["frobenius", "--arg", "E12"], "heisenberg.gla");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[fail] obstruction: A^3_12 = -1"), "{}", stdout(&o));

    let o = glacalc(&["frobenius", "--arg", "E13"], "heisenberg.gla");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[pass] certificate"));
}

#[test]
fn decisions_exit_one_on_failure() {
    for (args, file, code) in [
        (vec!["involutive", "--arg", "E12"], "heisenberg.gla", 1),
        (vec!["involutive", "--arg", "Eu"], "heisenberg.gla", 1),
        (vec!["cartan", "--arg", "E13"], "heisenberg.gla", 0),
        (vec!["cartan", "--arg", "borel"], "sl2.gla", 0),
        (vec!["cartan", "--arg", "ef"], "sl2.gla", 1),
        (vec!["eas", "--arg", "I13", "--arg", "E13"], "heisenberg.gla", 0),
        (vec!["eas", "--arg", "E12"], "heisenberg.gla", 1),
        (vec!["validate", "--arg", "dilate"], "morphisms.gla", 0),
        (vec!["validate", "--arg", "broken"], "morphisms.gla", 1),
        (vec!["validate", "--arg", "collapse"], "morphisms.gla", 1),
        (vec!["symplectic"], "plane.gla", 0),
        (vec!["symplectic", "--arg", "killing"], "sl2.gla", 1),
    ] {
        let o = glacalc(&args, file);
        assert_eq!(o.status.code(), Some(code), "{args:?}\n{}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn evaluations_print_values() {
    for (args, file, expected) in [
        (vec!["eval", "--arg", "w12", "--arg", "u", "--arg", "t2"], "heisenberg.gla", "value: 1"),
        (vec!["d", "--arg", "th3"], "heisenberg.gla", "value: -t^1∧t^2"),
        (vec!["wedge", "--arg", "th1", "--arg", "th2"], "heisenberg.gla", "value: t^1∧t^2"),
        (vec!["interior", "--arg", "t1", "--arg", "w12"], "heisenberg.gla", "value: t^2"),
        (vec!["lie", "--arg", "t1", "--arg", "th3"], "heisenberg.gla", "value: -t^2"),
        (vec!["pullback", "--arg", "dilate", "--arg", "h3"], "morphisms.gla", "value: 2*t^3"),
        (vec!["annihilator", "--arg", "borel"], "sl2.gla", "theta^1: t^3"),
        (vec!["cohomology"], "heisenberg.gla", "H^1: 2"),
        (vec!["cohomology", "--arg", "w12"], "heisenberg.gla", "exact: eta = -t^3"),
        (vec!["cohomology", "--arg", "w13"], "heisenberg.gla", "exact: no"),
        (vec!["d", "--arg", "f"], "chart.gla", "value: 3*x^2*t^1"),
        (vec!["mc", "--arg", "Tm"], "chart.gla", "d x = (x^2 - 2*x + 1)*t^1"),
    ] {
        let o = glacalc(&args, file);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stderr(&o));
        assert!(stdout(&o).contains(expected), "{args:?}\n{}", stdout(&o));
    }
}

#[test]
fn definition_errors_carry_positions() {
    for (file, needle) in [
        ("errors/antisymmetry.gla", "line 4, column 1: "),
        ("errors/undeclared.gla", "line 6, column 12: undeclared element or basis label `u`"),
        ("errors/syntax.gla", "line 8, column 14: "),
    ] {
        let o = glacalc(&["validate"], file);
        assert_eq!(o.status.code(), Some(2), "{file}");
        assert!(stdout(&o).is_empty());
        assert!(stderr(&o).contains(needle), "{file}: {}", stderr(&o));
    }
    assert!(stderr(&glacalc(&["validate"], "errors/antisymmetry.gla")).contains("antisymmetry"));
}

#[test]
fn usage_errors_exit_two() {
    for (args, file) in [
        (vec!["frobenius", "--arg", "nope"], "heisenberg.gla"),
        (vec!["wedge", "--arg", "th1"], "heisenberg.gla"),
        (vec!["eval", "--arg", "w12", "--arg", "u"], "heisenberg.gla"),
        (vec!["d", "--arg", "th1", "--arg", "th2"], "heisenberg.gla"),
        (vec!["cohomology", "--arg", "df"], "chart.gla"),
        (vec!["frobenius"], "plane.gla"),
        (vec!["explode"], "heisenberg.gla"),
        (vec!["validate"], "missing.gla"),
    ] {
        let o = glacalc(&args, file);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn machine_records_parse() {
    let o = glacalc(&["validate", "--machine", "--seed", "7"], "der_plus_f.gla");
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "command=validate args=D");
    assert_eq!(lines[1], "seed=7");
    assert_eq!(*lines.last().unwrap(), "status=pass");
    for l in &lines[2..lines.len() - 1] {
        let rest = l.strip_prefix("check=").expect(l);
        let (_, rest) = rest.split_once(" verdict=").expect(l);
        let (verdict, _) = rest.split_once(" witness=").expect(l);
        assert!(["pass", "fail"].contains(&verdict), "{l}");
    }
}

#[test]
fn seeds_are_reported_and_reproducible() {
    for seed in ["0", "1", "99"] {
        let args = ["validate", "--machine", "--seed", seed, "--arg", "broken"];
        let a = glacalc(&args, "morphisms.gla");
        let b = glacalc(&args, "morphisms.gla");
        assert_eq!(a.stdout, b.stdout);
        assert!(stdout(&a).contains(&format!("seed={seed}\n")));
    }
}
