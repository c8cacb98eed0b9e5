use std::path::PathBuf;
use std::process::{Command, Output};

fn kunzlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kunzlab"))
        .args(args)
        .env_remove("KUNZLAB_REF_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kunzlab-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn count_json_and_csv() {
    let o = kunzlab(&["count", "--f", "29", "--m", "10"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 2249);
    assert_eq!(v["query"]["length"], 9);

    let o = kunzlab(&["count", "--f", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "count\n5\n");
}

#[test]
fn enumerate_lists_words() {
    let o = kunzlab(&["enumerate", "--f", "5", "--format", "csv"]);
    let rows: Vec<String> = csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    assert_eq!(rows, ["1,1,1,1,1", "1,2", "2,1,1", "2,2", "3"]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        kunzlab(&["count", "--f", "3", "--m", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(kunzlab(&["count", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        kunzlab(&["verify", "--suite", "med"]).status.code(),
        Some(0)
    );
    let help = kunzlab(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("verify"));
}

#[test]
fn reference_data_override() {
    let dir = scratch_dir("refdata");
    std::fs::write(dir.join("table1.csv"), "ell,count\n1,1\n2,99\n").unwrap();
    std::fs::write(dir.join("table2.csv"), "f,m,count\n").unwrap();
    let run = |env: Option<&PathBuf>, flag: Option<&PathBuf>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_kunzlab"));
        c.args(["table", "stressed3", "--ell-max", "2", "--format", "csv"]);
        c.env_remove("KUNZLAB_REF_DATA");
        if let Some(e) = env {
            c.env("KUNZLAB_REF_DATA", e);
        }
        if let Some(f) = flag {
            c.arg("--ref-data").arg(f);
        }
        c.output().unwrap()
    };
    assert_eq!(stdout(&run(None, None)), "ell,count\n1,1\n2,2\n");
    assert_eq!(stdout(&run(None, Some(&dir))), "ell,count\n1,1\n2,99\n");
    let missing = dir.join("missing");
    assert_eq!(
        stdout(&run(Some(&dir), Some(&missing))),
        "ell,count\n1,1\n2,99\n"
    );
    assert_eq!(run(Some(&missing), None).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn count_is_byte_identical_across_threads() {
    let queries: [&[&str]; 4] = [
        &["count", "--f", "33"],
        &["count", "--f", "40", "--m", "12"],
        &["count", "--ell", "14", "--depth", "3", "--stressed"],
        &["count", "--f", "30", "--med", "--format", "csv"],
    ];
    for q in queries {
        let outs: Vec<Vec<u8>> = ["1", "4", "16"]
            .iter()
            .map(|t| {
                let mut args = vec!["--threads", t];
                args.extend_from_slice(q);
                kunzlab(&args).stdout
            })
            .collect();
        assert!(!outs[0].is_empty());
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{q:?}");
    }
}

#[test]
fn hom_from_graph_file() {
    let dir = scratch_dir("hom");
    let path = dir.join("c4.txt");
    std::fs::write(&path, "# vertices 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = kunzlab(&["hom", "--q", "3", "--graph", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let k22 = kunzlab(&["hom", "--q", "3", "--d", "2"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&k22)).unwrap();
    assert_eq!(a["count"], b["count"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn plot_and_constants() {
    let o = kunzlab(&["plot", "table1-ratio"]);
    let text = stdout(&o);
    assert!(text.starts_with("ell,count,ratio\n"));
    assert_eq!(text.lines().count(), 57);
    let o = kunzlab(&["constants", "--which", "c1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["decimal_lower"], "1.2755");
    assert_eq!(v["decimal_upper"], "1.4068");
}
