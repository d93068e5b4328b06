use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_weightlattice");

fn code_path(name: &str) -> String {
    format!("{}/../core/data/codes/{name}.code", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("WEIGHTLATTICE_FLAT_BUDGET").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .env_remove("WEIGHTLATTICE_FLAT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn text_field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: "))).unwrap()
}

#[track_caller]
fn assert_exit(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stdout: {}\nstderr: {}", stdout(o), stderr(o));
}

#[test]
fn golden_text_outputs() {
    let cases: [(&[&str], &str); 6] = [
        (&["enumerate", &code_path("hexacode")], "enumerate_hexacode.txt"),
        (&["--factor-display", "enumerate", &code_path("hexacode")], "enumerate_hexacode_factored.txt"),
        (&["enumerate", &code_path("golay3")], "enumerate_golay3.txt"),
        (&["formula", "hamming", "--p", "2", "--m", "3"], "formula_hamming_2_3.txt"),
        (&["specialize", "--primes", "2,3,5,7,11,13", &code_path("p4")], "specialize_p4.txt"),
        (&["lattice", &code_path("mds_3_2")], "lattice_mds_3_2.txt"),
    ];
    for (args, file) in cases {
        let o = run(args);
        assert_exit(&o, 0);
        assert_eq!(stdout(&o), golden(file), "{file}");
    }
}

#[test]
fn golden_json_lattice() {
    let o = run(&["--format", "json", "lattice", &code_path("mds_3_2")]);
    assert_exit(&o, 0);
    assert_eq!(stdout(&o), golden("lattice_mds_3_2.json"));
}

#[test]
fn text_and_json_encode_the_same_polynomials() {
    for name in ["hexacode", "hamming74", "golay3", "c6", "mds_5_3", "p5"] {
        let path = code_path(name);
        let text = run(&["enumerate", &path]);
        let js = run(&["--format", "json", "enumerate", &path]);
        assert_exit(&text, 0);
        assert_exit(&js, 0);
        let out = stdout(&text);
        let v = json(&js);
        for key in ["omega", "rho"] {
            // feed both encodings back through the polynomial reader; the
            // k = 0 transform is injective, so equal output means equal input
            let from_text = run_stdin(&["macwilliams", "--k", "0", "-"], text_field(&out, key));
            let from_json = run_stdin(&["macwilliams", "--k", "0", "-"], &v[key].to_string());
            if key == "rho" {
                // rho carries z, which the transform rejects for both encodings alike
                assert_exit(&from_text, 2);
                assert_exit(&from_json, 2);
                continue;
            }
            assert_exit(&from_text, 0);
            assert_exit(&from_json, 0);
            assert_eq!(stdout(&from_text), stdout(&from_json), "{name} {key}");
        }
        assert_eq!(v["min_distance"].to_string(), text_field(&out, "min_distance"));
        assert_eq!(v["flat_count"].to_string(), text_field(&out, "flats"));
    }
}

#[test]
fn json_enumerate_report_fields() {
    let o = run(&["--format", "json", "enumerate", "--at-q", "4", &code_path("hexacode")]);
    assert_exit(&o, 0);
    let v = json(&o);
    assert_eq!(v["n"], 6);
    assert_eq!(v["k"], 3);
    assert_eq!(v["min_distance"], 4);
    assert_eq!(v["flat_count"], 23);
    assert_eq!(v["weights_at_q"]["weights"].to_string(), "[1,0,0,0,45,0,18]");
    assert_eq!(v["omega"].as_array().unwrap().len(), 4);
}

#[test]
fn negative_coefficient_at_q_two() {
    let o = run(&["enumerate", "--at-q", "2", &code_path("hexacode")]);
    assert_exit(&o, 0);
    assert!(stdout(&o).contains("weights at q=2: 1 0 0 0 15 -12 4"), "{}", stdout(&o));
}

#[test]
fn macwilliams_examples() {
    let hexa = run(&["macwilliams", &code_path("hexacode")]);
    assert_exit(&hexa, 0);
    assert_eq!(stdout(&hexa).trim(), text_field(&golden("enumerate_hexacode.txt"), "omega"));

    let rep = run(&["macwilliams", &code_path("mds_3_2")]);
    assert_exit(&rep, 0);
    assert_eq!(stdout(&rep).trim(), "x^3 + (q-1)*y^3");

    let even = run(&["--format", "json", "enumerate", &code_path("mds_3_2")]);
    let omega = json(&even)["omega"].to_string();
    assert_exit(&run_stdin(&["macwilliams", "--k", "2", "-"], &omega), 0);
    let wrong = run_stdin(&["macwilliams", "--k", "7", "-"], &omega);
    assert_exit(&wrong, 4);
    assert!(stderr(&wrong).contains("divisible"));

    // a whole enumerate report is accepted as well
    let piped = run_stdin(&["macwilliams", "--k", "2", "-"], &stdout(&even));
    assert_eq!(stdout(&piped).trim(), "x^3 + (q-1)*y^3");
}

#[test]
fn code_from_standard_input() {
    let text = std::fs::read_to_string(code_path("hamming74")).unwrap();
    let o = run_stdin(&["mindist", "-"], &text);
    assert_exit(&o, 0);
    assert_eq!(stdout(&o).trim(), "3");
    let o = run_stdin(&["--format", "json", "mindist", "-"], &text);
    assert_eq!(json(&o)["min_distance"], 3);
}

#[test]
fn charpoly_and_formulas() {
    let o = run(&["charpoly", &code_path("mds_4_2")]);
    assert_exit(&o, 0);
    assert_eq!(stdout(&o).trim(), "q^2-4*q+3");
    let o = run(&["--factor-display", "charpoly", &code_path("mds_4_2")]);
    assert_eq!(stdout(&o).trim(), "(q-1)*(q-3)");

    let mds = run(&["formula", "mds", "--n", "3", "--k", "2"]);
    assert_exit(&mds, 0);
    let direct = run(&["enumerate", &code_path("mds_3_2")]);
    assert_eq!(stdout(&mds).trim(), text_field(&stdout(&direct), "rho"));
    assert_exit(&run(&["formula", "mds", "--n", "3", "--k", "4"]), 2);
    assert_exit(&run(&["formula", "hamming", "--p", "1", "--m", "2"]), 2);
    assert_exit(&run(&["formula", "hamming", "--p", "6", "--m", "2"]), 2);
}

#[test]
fn specialize_reports_exceptional_primes() {
    let o = run(&["--format", "json", "specialize", "--primes", "2,3,5,7,11,13", &code_path("p4")]);
    assert_exit(&o, 0);
    assert_eq!(json(&o)["exceptional_primes"].to_string(), "[2,3]");
    let o = run(&["specialize", "--primes", "2,3,5,7", &code_path("p5")]);
    assert!(stdout(&o).ends_with("exceptional primes: none\n"));
    assert_exit(&run(&["specialize", "--primes", "4", &code_path("p4")]), 2);
}

#[test]
fn verify_passes_and_reports() {
    let o = run(&["verify", "--ext", "1,2", &code_path("hamming74")]);
    assert_exit(&o, 0);
    assert!(stdout(&o).ends_with("pass\n"));
    let o = run(&["--format", "json", "--sequential", "verify", "--ext", "1", &code_path("hexacode")]);
    assert_exit(&o, 0);
    assert_eq!(json(&o)["pass"], true);
}

#[test]
fn golay_fixture_and_generator() {
    let o = run(&["golay"]);
    assert_exit(&o, 0);
    assert!(stdout(&o).trim_end().ends_with("x^24"));
    let g = run(&["golay", "--generator"]);
    assert_exit(&g, 0);
    // the printed generator is itself a readable code file
    let d = run_stdin(&["verify", "--ext", "1", "--flat-budget", "10", "-"], &stdout(&g));
    assert_exit(&d, 3);
    let m = run_stdin(&["--format", "json", "specialize", "--primes", "2", "-"], &stdout(&g));
    assert_exit(&m, 2);
}

#[test]
fn malformed_input_names_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("field gf 2\n2 3\n1 0 1\n0 x 1\n", "line 4, column 3"),
        ("field gf 6\n1 1\n1\n", "line 1, column 7"),
        ("field gf 2\n2 3\n1 0 1\n", "expected row 2"),
        ("field gf 2\n2 3\n1 0 1\n1 0 1\n", "line"),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.code"));
        std::fs::write(&path, text).unwrap();
        let o = run(&["enumerate", path.to_str().unwrap()]);
        assert_exit(&o, 2);
        assert!(stderr(&o).contains(needle), "case {i}: {}", stderr(&o));
    }
    assert_exit(&run(&["enumerate", dir.path().join("missing.code").to_str().unwrap()]), 2);
}

#[test]
fn zero_columns_need_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.code");
    std::fs::write(&path, "field gf 3\n1 3\n1 0 2\n").unwrap();
    let p = path.to_str().unwrap();
    assert_exit(&run(&["enumerate", p]), 2);
    let o = run(&["--allow-zero-columns", "mindist", p]);
    assert_exit(&o, 0);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn exit_codes_under_fault_injection() {
    assert_exit(&run(&[]), 2);
    assert_exit(&run(&["frobnicate"]), 2);
    assert_exit(&run(&["--format", "yaml", "enumerate", &code_path("hexacode")]), 2);
    assert_exit(&run(&["--flat-budget", "5", "enumerate", &code_path("golay3")]), 3);
    let env = Command::new(BIN)
        .args(["enumerate", &code_path("golay3")])
        .env("WEIGHTLATTICE_FLAT_BUDGET", "5")
        .output()
        .unwrap();
    assert_exit(&env, 3);
    assert_exit(&run(&["verify", "--budget", "100", &code_path("golay3")]), 3);
    assert_exit(&run(&["verify", &code_path("p5")]), 2);
    assert_exit(&run_stdin(&["macwilliams", "--k", "1", "-"], "x^2 + y"), 2);
    assert_exit(&run_stdin(&["macwilliams", "--k", "1", "-"], "x^2 + (q-1)*y"), 2);
    assert_exit(&run_stdin(&["macwilliams", "--k", "1", "-"], "x + y"), 4);
}
