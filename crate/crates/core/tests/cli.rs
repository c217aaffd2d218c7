use painleve::cli::{run, EXIT_OK, EXIT_USAGE};
use painleve::exact::Recursion;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("painleve-series").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn tau_default_parameters() {
    let (code, out, _) = invoke(&["tau", "--terms", "20"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["lambda"], "1/1");
    let c = v["coefficients"].as_array().unwrap();
    assert_eq!(c.len(), 21);
    assert_eq!(c[5]["value"], "-1/20");
    assert_eq!(c[20]["value"], "83/117976320000");
}

#[test]
fn json_and_csv_carry_identical_tokens() {
    for args in [
        &["laurent", "--g2", "-0.05", "--lambda", "3/22", "--g3", "2", "--terms", "30"][..],
        &["elliptic", "--case", "lemniscatic", "--digits", "20"][..],
    ] {
        let (_, json, _) = invoke(&[args, &["--format", "json"]].concat());
        let (_, csv, _) = invoke(&[args, &["--format", "csv"]].concat());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut from_json = Vec::new();
        for (key, value) in v.as_object().unwrap() {
            if let Some(rows) = value.as_array() {
                for row in rows {
                    for cell in row.as_object().unwrap().values() {
                        from_json.push(cell.as_str().unwrap().to_string());
                    }
                }
            } else if key == "meta" {
                for cell in value.as_object().unwrap().values() {
                    from_json.push(cell.as_str().unwrap().to_string());
                }
            }
        }
        let mut from_csv = Vec::new();
        let mut header = true;
        for line in csv.lines() {
            if let Some(meta) = line.strip_prefix("# ") {
                if let Some((_, value)) = meta.split_once('=') {
                    from_csv.push(value.to_string());
                }
                header = true;
                continue;
            }
            if line.is_empty() {
                continue;
            }
            if header {
                header = false;
                continue;
            }
            from_csv.extend(line.split(',').map(|s| s.trim_matches('"').to_string()));
        }
        from_json.sort();
        from_csv.sort();
        assert_eq!(from_json, from_csv, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["poles", "--terms", "60", "--digits", "15", "--format", "csv"];
    let (code, a, _) = invoke(&args);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = invoke(&args);
    assert_eq!(a, b);
    assert!(a.starts_with("re,im,stability\n"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = invoke(&["laurent", "--g2", "1/0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("1/0"));
    assert_eq!(invoke(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["laurent", "--format", "svg"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["pentagon", "--digits", "41"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
    // all parameters zero: no poles besides the origin
    let (code, _, _) = invoke(&["poles", "--lambda", "0", "--terms", "30"]);
    assert_ne!(code, EXIT_OK);
}

#[test]
fn verify_passes_and_integrality_is_reported() {
    let (code, out, _) = invoke(&["verify", "--g2", "3/7", "--lambda", "-2", "--g3", "1/5", "--terms", "40"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("\"fail\""));
    let (code, out, _) = invoke(&["triple-sum", "--terms", "40", "--check-integrality"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["integrality_violations"], "0");
}

#[test]
fn cache_is_written_and_extended() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.cache");
    let cache_arg = cache.to_str().unwrap();
    let (code, first, _) = invoke(&["laurent", "--g2", "1", "--terms", "50", "--cache", cache_arg]);
    assert_eq!(code, EXIT_OK);
    let stored = painleve::cli::read_cache(&cache).unwrap();
    assert_eq!(stored.table.recursion(), Recursion::Laurent);
    assert_eq!(stored.table.order(), 50);
    let (_, longer, _) = invoke(&["laurent", "--g2", "1", "--terms", "80", "--cache", cache_arg]);
    assert_eq!(painleve::cli::read_cache(&cache).unwrap().table.order(), 80);
    let (_, fresh, _) = invoke(&["laurent", "--g2", "1", "--terms", "80"]);
    assert_eq!(longer, fresh);
    assert!(first.len() < longer.len());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poles.svg");
    let (code, stdout, _) =
        invoke(&["poles", "--terms", "60", "--digits", "12", "--format", "svg", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.is_empty());
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<circle"));
}
