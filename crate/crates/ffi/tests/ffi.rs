use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use reconf_ffi::*;

fn last_error() -> String {
    let p = rc_last_error();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn parse(text: &str) -> *mut RcGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rc_graph_parse(c.as_ptr(), &mut g) }, RcStatus::Ok);
    g
}

const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

#[test]
fn build_and_measure() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(rc_graph_new(4, &mut g), RcStatus::Ok);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert_eq!(rc_graph_add_edge(g, u, v), RcStatus::Ok);
        }
        let (mut n, mut m) = (0, 0);
        assert_eq!(rc_graph_size(g, &mut n, &mut m), RcStatus::Ok);
        assert_eq!((n, m), (4, 4));
        assert!(rc_last_error().is_null());

        assert_eq!(rc_graph_add_edge(g, 0, 9), RcStatus::Input);
        assert!(last_error().contains('9'));
        rc_graph_free(g);
    }
}

#[test]
fn thresholds_and_detectors() {
    let g = parse(C6);
    let mut k = 0;
    unsafe {
        assert_eq!(rc_threshold(g, RcModel::Mtj, 22, &mut k), RcStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(rc_threshold(g, RcModel::Tar, 22, &mut k), RcStatus::Ok);
        assert_eq!(k, 2);
        assert_eq!(rc_bistable_rank(g, 16, &mut k), RcStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(rc_pumpkin_number(g, 16, &mut k), RcStatus::Ok);
        assert_eq!(k, 6);
        assert_eq!(rc_threshold(g, RcModel::Mtj, 4, &mut k), RcStatus::Resource);
        assert!(last_error().contains("cap"));
        rc_graph_free(g);
    }
}

#[test]
fn reconfigure_round_trip() {
    let g = parse(C6);
    let (i, j) = ([0usize, 2, 4], [1usize, 3, 5]);
    let mut text = ptr::null_mut();
    let mut cost = 0;
    unsafe {
        let status = rc_reconfigure(g, RcMethod::Pathwidth, RcModel::Tar, i.as_ptr(), 3, j.as_ptr(), 3, &mut text, &mut cost);
        assert_eq!(status, RcStatus::Ok);
        assert!(cost <= 2);
        let (si, sj) = (CString::new("0 2 4").unwrap(), CString::new("1 3 5").unwrap());
        let mut checked = 0;
        assert_eq!(rc_verify_sequence(g, RcModel::Tar, si.as_ptr(), sj.as_ptr(), text, &mut checked), RcStatus::Ok);
        assert_eq!(checked, cost);
        // the same text read under the jumping rules changes set sizes
        assert_eq!(rc_verify_sequence(g, RcModel::Mtj, si.as_ptr(), sj.as_ptr(), text, &mut checked), RcStatus::Semantic);
        assert!(last_error().contains("step"));
        rc_string_free(text);

        let status = rc_reconfigure(g, RcMethod::VertexCover, RcModel::Mtj, i.as_ptr(), 3, j.as_ptr(), 3, &mut text, &mut cost);
        assert_eq!(status, RcStatus::Ok);
        assert_eq!(cost, 3);
        rc_string_free(text);

        let status = rc_reconfigure(g, RcMethod::FeedbackVertexSet, RcModel::Mtj, i.as_ptr(), 3, j.as_ptr(), 3, &mut text, &mut cost);
        assert_eq!(status, RcStatus::Input);
        let dependent = [0usize, 1];
        let status = rc_reconfigure(g, RcMethod::VertexCover, RcModel::Mtj, dependent.as_ptr(), 2, j.as_ptr(), 2, &mut text, &mut cost);
        assert_eq!(status, RcStatus::Input);
        rc_graph_free(g);
    }
}

#[test]
fn null_pointers_are_reported() {
    let mut k = 0;
    unsafe {
        assert_eq!(rc_threshold(ptr::null(), RcModel::Mtj, 22, &mut k), RcStatus::NullPointer);
        assert_eq!(rc_graph_parse(ptr::null(), &mut ptr::null_mut()), RcStatus::NullPointer);
        assert_eq!(rc_graph_new(3, ptr::null_mut()), RcStatus::NullPointer);
        let g = parse(C6);
        assert_eq!(rc_threshold(g, RcModel::Mtj, 22, ptr::null_mut()), RcStatus::NullPointer);
        rc_graph_free(g);
        rc_graph_free(ptr::null_mut());
        rc_string_free(ptr::null_mut());
    }
}

#[test]
fn malformed_text_is_an_input_error() {
    let bad = CString::new("3 2\n0 1\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rc_graph_parse(bad.as_ptr(), &mut g) }, RcStatus::Input);
    assert!(g.is_null());
    assert!(last_error().contains("line"));
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(rc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/reconf.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["rc_graph_parse", "rc_threshold", "rc_reconfigure", "rc_verify_sequence", "RC_STATUS_PANIC", "typedef struct RcGraph RcGraph"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // a C compiler, when present, must accept the header as is
    if let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c"]).arg(&header).status() {
        assert!(status.success());
    }
}
