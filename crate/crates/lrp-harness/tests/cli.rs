use std::path::PathBuf;
use std::process::Command;

fn lrp() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lrp"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lrp-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn sample_verify_render_pipeline() {
    let dir = scratch("pipeline");
    let graph = dir.join("g.txt");
    let ok = lrp()
        .args([
            "sample", "--d", "2", "--n", "16", "--alpha", "2", "--beta", "1.5", "--p", "0.3",
            "--seed", "4", "--out",
        ])
        .arg(&graph)
        .status()
        .unwrap();
    assert!(ok.success());
    let text = std::fs::read_to_string(&graph).unwrap();
    assert!(text.starts_with("2 4 4 2 1.5 0.3\n"));

    let out = lrp()
        .arg("verify")
        .arg(&graph)
        .args(["--k", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let msg = String::from_utf8(out.stdout).unwrap();
    assert!(
        msg.starts_with("holds") || msg.starts_with("not applicable"),
        "{msg}"
    );

    let image = dir.join("g.ppm");
    let ok = lrp()
        .arg("render")
        .arg(&graph)
        .arg("--out")
        .arg(&image)
        .status()
        .unwrap();
    assert!(ok.success());
    assert!(std::fs::read(&image)
        .unwrap()
        .starts_with(b"P6\n4 4\n255\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_emits_counts_csv() {
    let dir = scratch("enumerate");
    let out = lrp()
        .args(["enumerate", "--m-max", "3", "--b-max", "5"])
        .env("LRP_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows[0], "kind,parameter,count");
    for want in [
        "hole_free_animals_d2,1,1",
        "hole_free_animals_d2,2,4",
        "hole_free_animals_d2,3,18",
        "f_vectors,3,2",
        "f_vectors,5,14",
    ] {
        assert!(rows.contains(&want), "missing {want}");
    }
    assert!(dir.join("census_d2_m3.txt").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scaling_writes_csv_from_config() {
    let dir = scratch("scaling");
    let config = dir.join("cfg.json");
    std::fs::write(
        &config,
        r#"{"params":{"d":2,"alpha":2.0,"beta":2.0,"p":0.5},"n_grid":[64,256],"replicas":4,"master_seed":3}"#,
    )
    .unwrap();
    let ok = lrp()
        .args(["--threads", "1", "scaling", "--config"])
        .arg(&config)
        .env("LRP_OUTPUT_DIR", &dir)
        .status()
        .unwrap();
    assert!(ok.success());
    let text = std::fs::read_to_string(dir.join("scaling.csv")).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(dir.join("scaling_replicas.csv").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn geometry_reports_blocks_of_a_site_set() {
    let dir = scratch("geometry");
    let input = dir.join("s.txt");
    std::fs::write(&input, "2 5\n0 0\n1 0\n0 1\n2 2\n").unwrap();
    let out = lrp().arg("geometry").arg(&input).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("0,3,3,0,"));
    assert!(lines[2].starts_with("1,1,1,0,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_config_fails_cleanly() {
    let dir = scratch("bad");
    let config = dir.join("cfg.json");
    std::fs::write(&config, r#"{"params":{"d":2,"alpha":2.0,"beta":2.0,"p":0.5},"n_grid":[],"replicas":4,"master_seed":3}"#).unwrap();
    let out = lrp()
        .args(["lln", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("n_grid"));
    std::fs::remove_dir_all(&dir).unwrap();
}
