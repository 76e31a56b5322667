use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use ordsemi_ffi::*;

const EXAMPLE: &str =
    "osg v1\nelements: a e f\ntable:\na e f\na e f\na e f\norder:\na <= e\na <= f\n";

fn parse(text: &str) -> (OsgStatus, *mut OsgSemigroup) {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    let status = unsafe { osg_parse(c.as_ptr(), &mut h) };
    (status, h)
}

fn last_error() -> String {
    let p = osg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { osg_string_free(p) };
    s
}

#[test]
fn parse_query_free() {
    let (status, h) = parse(EXAMPLE);
    assert_eq!(status, OsgStatus::Ok);
    unsafe {
        let mut n = 0;
        assert_eq!(osg_size(h, &mut n), OsgStatus::Ok);
        assert_eq!(n, 3);
        let mut p = 9;
        assert_eq!(osg_multiply(h, 1, 2, &mut p), OsgStatus::Ok);
        assert_eq!(p, 2);
        let mut le = false;
        assert_eq!(osg_leq(h, 0, 1, &mut le), OsgStatus::Ok);
        assert!(le);
        let mut t = OsgTruth::False;
        assert_eq!(osg_is_right_inverse(h, &mut t), OsgStatus::Ok);
        assert_eq!(t, OsgTruth::True);
        let name = CString::new("left_clifford").unwrap();
        assert_eq!(osg_class(h, name.as_ptr(), &mut t), OsgStatus::Ok);
        assert_eq!(t, OsgTruth::False);
        let expr = CString::new("right_clifford and not has_zero").unwrap();
        assert_eq!(osg_eval(h, expr.as_ptr(), &mut le), OsgStatus::Ok);
        assert!(le);
        osg_free(h);
    }
}

#[test]
fn json_reports() {
    let (_, h) = parse(EXAMPLE);
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(osg_classify_json(h, &mut out), OsgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["right_inverse"]["holds"], true);
        assert_eq!(osg_theorems_json(h, &mut out), OsgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["T5_EQUIV"]["verdict"], "consistent");
        assert_eq!(osg_to_text(h, &mut out), OsgStatus::Ok);
        assert!(take_string(out).starts_with("osg v1\n"));
        osg_free(h);
    }
}

#[test]
fn green_labels() {
    let (_, h) = parse(EXAMPLE);
    let rel = |r: &str| CString::new(r).unwrap();
    unsafe {
        let mut labels = [9usize; 3];
        assert_eq!(
            osg_green_classes(h, rel("L").as_ptr(), labels.as_mut_ptr(), 3),
            OsgStatus::Ok
        );
        assert_eq!(labels, [0, 1, 2]);
        assert_eq!(
            osg_green_classes(h, rel("R").as_ptr(), labels.as_mut_ptr(), 3),
            OsgStatus::Ok
        );
        assert_eq!(labels, [0, 0, 0]);
        assert_eq!(
            osg_green_classes(h, rel("R").as_ptr(), labels.as_mut_ptr(), 2),
            OsgStatus::OutOfRange
        );
        assert_eq!(
            osg_green_classes(h, rel("X").as_ptr(), labels.as_mut_ptr(), 3),
            OsgStatus::UnknownName
        );
        osg_free(h);
    }
}

#[test]
fn power_handle() {
    let (_, rz) = parse("osg v1\nelements: e f\ntable:\ne f\ne f\n");
    let (_, ex) = parse(EXAMPLE);
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(osg_power(rz, &mut p), OsgStatus::Ok);
        let mut n = 0;
        osg_size(p, &mut n);
        assert_eq!(n, 3);
        osg_free(p);
        assert_eq!(osg_power(ex, &mut p), OsgStatus::InvalidStructure);
        assert!(last_error().contains("discrete"));
        osg_free(rz);
        osg_free(ex);
    }
}

#[test]
fn error_codes() {
    let (status, h) = parse("osg v1\nelements: e f\ntable:\ne f\ne f\norder:\ne <= f\nf <= e\n");
    assert_eq!(status, OsgStatus::InvalidStructure);
    assert!(h.is_null());
    assert!(last_error().contains("antisymmetry"));
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(osg_parse(ptr::null(), &mut h), OsgStatus::NullArgument);
        let bad = [0xffu8, 0];
        assert_eq!(
            osg_parse(bad.as_ptr().cast(), &mut h),
            OsgStatus::InvalidUtf8
        );
        let mut n = 0;
        assert_eq!(osg_size(ptr::null(), &mut n), OsgStatus::NullArgument);
        let (_, ok) = parse(EXAMPLE);
        assert_eq!(osg_size(ok, ptr::null_mut()), OsgStatus::NullArgument);
        assert_eq!(osg_multiply(ok, 3, 0, &mut n), OsgStatus::OutOfRange);
        let expr = CString::new("regular and bogus").unwrap();
        let mut b = false;
        assert_eq!(osg_eval(ok, expr.as_ptr(), &mut b), OsgStatus::UnknownName);
        assert!(last_error().contains("bogus"));
        osg_free(ok);
        osg_free(ptr::null_mut());
        osg_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(osg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libordsemi_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "smoke exited with {:?}",
        run.status.code()
    );
    assert_eq!(
        String::from_utf8(run.stdout).unwrap(),
        format!("ok {}\n", env!("CARGO_PKG_VERSION"))
    );
}
