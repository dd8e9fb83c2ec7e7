use jsonschema::JSONSchema;
use liftscope_cli::run;
use serde_json::Value;
use std::path::{Path, PathBuf};

const EXAMPLES: &[(&str, &[&str])] = &[
    ("power_cube", &["-f", "x", "-g", "y^3"]),
    ("cusp", &["-f", "x^3", "-g", "y^2"]),
    ("local_obstruction", &["-f", "x", "-g", "y^2 + 1/2"]),
    ("graph_removal", &["-f", "x^4", "-g", "y^4"]),
    (
        "chebyshev",
        &["-f", "2*x^2 - 1", "-g", "4*y^3 - 3*y", "--certificate", "A=4*t^3 - 3*t,B=2*t^2 - 1"],
    ),
    ("pell", &["-f", "x^2", "-g", "5*y^2 + 1"]),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(manifest_dir().join("schema/report.schema.json")).unwrap();
    JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn report(args: &[&str], dir: &Path, name: &str) -> Value {
    let path = dir.join(format!("{name}.json"));
    let mut argv = vec!["liftscope", "analyze"];
    argv.extend_from_slice(args);
    let path_str = path.to_str().unwrap().to_string();
    argv.extend_from_slice(&["--json", &path_str]);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(argv, &mut out, &mut err);
    assert_eq!(status, 0, "{}", String::from_utf8_lossy(&err));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn assert_valid(schema: &JSONSchema, value: &Value) {
    if let Err(errors) = schema.validate(value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
}

#[test]
fn reports_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let schema = schema();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in EXAMPLES {
        let value = report(args, dir.path(), name);
        assert_valid(&schema, &value);
        let golden = manifest_dir().join("tests/golden").join(format!("{name}.json"));
        if update {
            std::fs::write(&golden, serde_json::to_string_pretty(&value).unwrap() + "\n").unwrap();
            continue;
        }
        let expected: Value = serde_json::from_str(&std::fs::read_to_string(&golden).unwrap()).unwrap();
        assert_eq!(value, expected, "{name} differs from its golden file");
    }
}

#[test]
fn census_section_validates() {
    let dir = tempfile::tempdir().unwrap();
    let value = report(
        &["-f", "x", "-g", "y^2", "--census", "--checkpoints", "100,1000,10000"],
        dir.path(),
        "census",
    );
    assert_valid(&schema(), &value);
    let census = &value["census"];
    assert_eq!(census["counts"], serde_json::json!([11, 32, 101]));
    assert_eq!(census["agrees"], Value::Bool(true));
}

#[test]
fn schema_rejects_malformed_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut value = report(&["-f", "x", "-g", "y^2"], dir.path(), "square");
    value["theta"] = serde_json::json!(0.5);
    assert!(!schema().is_valid(&value));
}
