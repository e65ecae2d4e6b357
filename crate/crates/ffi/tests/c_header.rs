use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// Directory holding the shared library built alongside this test binary.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap().to_path_buf();
    for dir in [deps.clone(), deps.parent().unwrap().to_path_buf()] {
        if dir
            .join(format!(
                "{}aluffi_kit_ffi{}",
                std::env::consts::DLL_PREFIX,
                std::env::consts::DLL_SUFFIX
            ))
            .exists()
        {
            return dir;
        }
    }
    panic!("shared library not found next to {}", exe.display());
}

#[test]
fn header_declares_the_public_api() {
    let header = std::fs::read_to_string(manifest_dir().join("include/aluffi_kit.h")).unwrap();
    for name in [
        "ak_analyze",
        "ak_options_default",
        "ak_last_error_message",
        "ak_report_free",
        "ak_report_json",
        "ak_report_from_json",
        "ak_report_text",
        "ak_report_locally_eulerian",
        "ak_report_jacobian_linear_type",
        "ak_report_gradient_linear_type",
        "ak_report_singular_point_count",
        "ak_report_milnor_tjurina",
        "ak_string_free",
        "ak_version",
        "typedef struct AkReport AkReport",
        "AK_STATUS_RESOURCE_LIMIT = 5",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let libs = lib_dir();
    let status = Command::new(&cc)
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg("-L")
        .arg(&libs)
        .arg("-laluffi_kit_ffi")
        .arg(format!("-Wl,-rpath,{}", libs.display()))
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run C compiler {cc}: {e}"));
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "C program failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
