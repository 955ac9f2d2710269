#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unbias_cli::syntax::{parse_mor, parse_obj, render_mor, render_obj};
use unbias_core::free_smc::gen::{random_mor, random_obj};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Stdout, then stderr and the exit code, in the layout of the `.out` files.
pub fn transcript(args: &[String]) -> String {
    let out = unbias_cli::run(std::iter::once("unbias".to_string()).chain(args.iter().cloned()));
    let mut text = out.stdout;
    if !out.stderr.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&out.stderr);
    }
    text.push_str(&format!("--- exit {}\n", out.code));
    text
}

pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases: Vec<(String, Vec<String>)> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            if path.extension()? != "args" {
                return None;
            }
            let name = path.file_stem()?.to_string_lossy().into_owned();
            let args = fs::read_to_string(&path).ok()?.lines().map(str::to_string).collect();
            Some((name, args))
        })
        .collect();
    cases.sort();
    cases
}

/// Names of the cases whose output differs from the stored transcript.
/// With `UPDATE_GOLDEN` set the transcripts are rewritten instead.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (name, args) in golden_cases() {
        let got = transcript(&args);
        let path = golden_dir().join(format!("{name}.out"));
        if update {
            fs::write(&path, &got).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => bad.push(format!("{name}:\n--- want\n{want}--- got\n{got}")),
            Err(_) => bad.push(format!("{name}: missing {}", path.display())),
        }
    }
    bad
}

const LEAVES: [&str; 5] = ["x", "y", "z", "w0", "gen_1"];

/// Renders and reparses `n` random objects and morphisms, returning the
/// first term that does not come back unchanged.
pub fn round_trip(n: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let leaves: Vec<String> = LEAVES.iter().map(|s| s.to_string()).collect();
    for i in 0..n {
        let o = random_obj(&mut rng, &leaves);
        let text = render_obj(&o);
        match parse_obj(&text) {
            Ok(back) if back == o => {}
            other => return Err(format!("object {i}: `{text}` came back as {other:?}")),
        }
        let t = random_mor(&mut rng, &o, 1 + i % 4);
        let text = render_mor(&t);
        match parse_mor(&text) {
            Ok(back) if back == t => {}
            other => return Err(format!("morphism {i}: `{text}` came back as {other:?}")),
        }
    }
    Ok(())
}
