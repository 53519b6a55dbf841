//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "braidcluster.h"

int main(void) {
    BcWord *w = NULL;
    BcPoint *base = NULL, *image = NULL;
    char *text = NULL;
    if (bc_word_parse("s2 r1 s1 r2", 3, BC_GROUP_FLAT_VIRTUAL, &w) != BC_STATUS_OK) return 1;
    if (bc_point_default(w, &base) != BC_STATUS_OK) return 2;
    if (bc_apply_word(w, base, &image) != BC_STATUS_OK) return 3;
    if (bc_point_to_string(image, &text) != BC_STATUS_OK) return 4;
    int ok = strcmp(text, "-5,4/11,-11/5") == 0;
    printf("%s\n", text);
    bc_string_free(text);
    if (bc_word_parse("r1", 2, BC_GROUP_BRAID, &w) != BC_STATUS_INVALID) return 5;
    if (bc_last_error() == NULL) return 6;
    bc_point_free(image);
    bc_point_free(base);
    bc_word_free(w);
    return ok ? 0 : 7;
}
"#;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<this test>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let lib = target_dir().join("libbraidcluster_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = work.join("smoke.c");
    let exe = work.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let build = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(build.status.success(), "{}", String::from_utf8_lossy(&build.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "exit {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "-5,4/11,-11/5");
}
