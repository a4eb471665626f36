#![allow(dead_code)]

use std::process::{Command, Output};

pub fn pecomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pecomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let out = pecomb(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).expect("stdout is JSON")
}

pub fn code(args: &[&str]) -> i32 {
    pecomb(args).status.code().expect("exit code")
}
