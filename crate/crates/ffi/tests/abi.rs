//! Calls through the exported C functions, and a C program compiled
//! against the generated header.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ptl_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    let mut needed = 0;
    unsafe {
        assert_eq!(ptl_last_error(buf.as_mut_ptr(), buf.len(), &mut needed), PtlStatus::Ok);
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

#[test]
fn graph6_round_trip_and_counts() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ptl_graph_from_graph6(cstr("Ek]w").as_ptr(), &mut g), PtlStatus::Ok);
        let (mut n, mut m) = (0, 0);
        assert_eq!(ptl_graph_counts(g, &mut n, &mut m), PtlStatus::Ok);
        assert_eq!((n, m), (6, 10));
        let mut needed = 0;
        assert_eq!(ptl_graph_to_graph6(g, ptr::null_mut(), 0, &mut needed), PtlStatus::BufferTooSmall);
        assert_eq!(needed, 5);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(ptl_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut needed), PtlStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "Ek]w");
        ptl_graph_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ptl_graph_from_graph6(ptr::null(), &mut g), PtlStatus::NullPointer);
        assert_eq!(ptl_graph_from_graph6(cstr("E~~~~~~").as_ptr(), &mut g), PtlStatus::ParseError);
        assert!(!last_error().is_empty());
        assert_eq!(ptl_pattern_graph(cstr("H9").as_ptr(), &mut g), PtlStatus::InvalidArgument);
        let loops = [0u32, 0];
        assert_eq!(ptl_graph_from_edges(2, loops.as_ptr(), 1, &mut g), PtlStatus::InvalidArgument);
        let mut ex = 0;
        assert_eq!(ptl_exact_turan(12, cstr("C3").as_ptr(), 9, 1, &mut ex), PtlStatus::CeilingExceeded);
        assert!(last_error().contains("ceiling"));
        let name = CStr::from_ptr(ptl_status_name(PtlStatus::NonPlanar));
        assert_eq!(name.to_str().unwrap(), "graph is not planar");
        ptl_graph_free(ptr::null_mut());
        ptl_plane_free(ptr::null_mut());
    }
}

#[test]
fn planarity_and_freeness() {
    unsafe {
        let k5: Vec<u32> = (0..5u32).flat_map(|i| (i + 1..5).flat_map(move |j| [i, j])).collect();
        let mut g = ptr::null_mut();
        assert_eq!(ptl_graph_from_edges(5, k5.as_ptr(), 10, &mut g), PtlStatus::Ok);
        let mut planar = true;
        assert_eq!(ptl_is_planar(g, &mut planar), PtlStatus::Ok);
        assert!(!planar);
        let mut pg = ptr::null_mut();
        assert_eq!(ptl_embed(g, &mut pg), PtlStatus::NonPlanar);
        let mut h = ptr::null_mut();
        assert_eq!(ptl_pattern_graph(cstr("C3").as_ptr(), &mut h), PtlStatus::Ok);
        let mut free = true;
        assert_eq!(ptl_is_free(g, h, &mut free), PtlStatus::Ok);
        assert!(!free);
        ptl_graph_free(h);
        ptl_graph_free(g);
    }
}

#[test]
fn family_faces_and_density() {
    unsafe {
        let mut pg = ptr::null_mut();
        assert_eq!(ptl_family_generate(cstr("b5_ring").as_ptr(), cstr("k=4").as_ptr(), &mut pg), PtlStatus::Ok);
        let (mut faces, mut tri) = (0, 0);
        assert_eq!(ptl_plane_face_counts(pg, &mut faces, &mut tri), PtlStatus::Ok);
        // Euler: 20 - 46 + F = 2
        assert_eq!(faces, 28);
        let (mut num, mut den) = (0, 0);
        assert_eq!(ptl_plane_max_density(pg, &mut num, &mut den), PtlStatus::Ok);
        assert_eq!((num, den), (1, 1));
        let mut g = ptr::null_mut();
        assert_eq!(ptl_plane_graph(pg, &mut g), PtlStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(ptl_pattern_graph(cstr("H5").as_ptr(), &mut h), PtlStatus::Ok);
        let mut free = false;
        assert_eq!(ptl_is_free(g, h, &mut free), PtlStatus::Ok);
        assert!(free);
        ptl_graph_free(h);
        ptl_graph_free(g);
        ptl_plane_free(pg);
        assert_eq!(
            ptl_family_generate(cstr("b5_ring").as_ptr(), cstr("k").as_ptr(), &mut pg),
            PtlStatus::ParseError
        );
    }
}

#[test]
fn exact_turan_theta4() {
    let mut ex = 0;
    unsafe {
        assert_eq!(ptl_exact_turan(4, cstr("Theta4").as_ptr(), 9, 0, &mut ex), PtlStatus::Ok);
    }
    assert_eq!(ex, 4);
}

/// The static library of the current profile. Test binaries live in
/// `deps/`, next to it; `cargo build` also copies it one level up.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    let here = deps.join("libptl_ffi.a");
    if here.exists() {
        here
    } else {
        deps.parent().unwrap().join("libptl_ffi.a")
    }
}

#[test]
fn c_program_links_against_header() {
    let lib = static_lib();
    assert!(lib.exists(), "{} missing", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "ptl.h"
int main(void) {
    PtlGraph *g = NULL;
    if (ptl_pattern_graph("H6", &g) != PTL_STATUS_OK) return 1;
    size_t n = 0, m = 0;
    ptl_graph_counts(g, &n, &m);
    size_t ex = 0;
    if (ptl_exact_turan(5, "C3", 9, 1, &ex) != PTL_STATUS_OK) return 2;
    printf("%zu %zu %zu\n", n, m, ex);
    ptl_graph_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "7 8 6\n");
}
