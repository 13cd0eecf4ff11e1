use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use minor_density_ffi::*;

fn graph6(s: &str) -> *mut MdGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { md_graph_from_graph6(c.as_ptr(), &mut g) }, MdStatus::Ok);
    g
}

fn family(s: &str) -> *mut MdGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { md_graph_from_family(c.as_ptr(), &mut g) }, MdStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(md_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn round_trip_and_counts() {
    let g = graph6("C~");
    unsafe {
        assert_eq!((md_graph_order(g), md_graph_size(g)), (4, 6));
        let mut s = ptr::null_mut();
        assert_eq!(md_graph_to_graph6(g, &mut s), MdStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "C~");
        md_string_free(s);
        let (mut n, mut d) = (0, 0);
        assert_eq!(md_density(g, &mut n, &mut d), MdStatus::Ok);
        assert_eq!((n, d), (3, 2));
        md_graph_free(g);
    }
}

#[test]
fn t_density_and_balance() {
    let g = family("fan-cliques:3,1");
    unsafe {
        let (mut n, mut d) = (0, 0);
        assert_eq!(md_t_density(g, 1, &mut n, &mut d), MdStatus::Ok);
        assert_eq!((n, d), (25, 11));
        let mut v = false;
        assert_eq!(md_balance_check(g, 1, true, 0, &mut v), MdStatus::Ok);
        assert!(v);
        assert_eq!(md_balance_check(g, -1, false, 1, &mut v), MdStatus::Budget);
        assert!(last_error().contains("budget"));
        md_graph_free(g);
    }
    let c4 = graph6("Cr");
    unsafe {
        let mut v = true;
        assert_eq!(md_balance_check(c4, -1, true, 0, &mut v), MdStatus::Ok);
        assert!(!v);
        let mut class = MdPlantClass::PlantEq;
        assert_eq!(md_plant_classify(c4, &mut class), MdStatus::Ok);
        assert_eq!(class, MdPlantClass::NotPlant);
        md_graph_free(c4);
    }
}

#[test]
fn catalog_calls() {
    unsafe {
        let mut m = MdMembership::InB;
        assert_eq!(md_catalog_membership(14, 11, &mut m), MdStatus::Ok);
        assert_eq!(m, MdMembership::NotInB);
        assert_eq!(md_catalog_membership(25, 11, &mut m), MdStatus::Ok);
        assert_eq!(m, MdMembership::KnownAbove2);
        let (mut n, mut d) = (0, 0);
        assert_eq!(md_catalog_next_above(1, 1, &mut n, &mut d), MdStatus::Ok);
        assert_eq!((n, d), (6, 5));
        let mut g = ptr::null_mut();
        assert_eq!(md_catalog_witness(20, 13, &mut g), MdStatus::Ok);
        assert_eq!((md_graph_order(g), md_graph_size(g)), (13, 20));
        md_graph_free(g);
        assert_eq!(md_catalog_witness(14, 11, &mut g), MdStatus::Domain);
        assert_eq!(md_catalog_membership(1, 0, &mut m), MdStatus::Domain);
    }
}

#[test]
fn errors_and_nulls() {
    let bad = CString::new("not graph6!").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(md_graph_from_graph6(bad.as_ptr(), &mut g), MdStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(md_graph_from_graph6(ptr::null(), &mut g), MdStatus::Null);
        let spec = CString::new("gkm:1,0").unwrap();
        assert_eq!(md_graph_from_family(spec.as_ptr(), &mut g), MdStatus::Domain);
        let mut n = 0;
        assert_eq!(md_density(ptr::null(), &mut n, &mut n), MdStatus::Null);
        assert_eq!(md_graph_order(ptr::null()), 0);
        md_graph_free(ptr::null_mut());
        md_string_free(ptr::null_mut());
        let k = graph6("C~");
        assert_eq!(md_density(k, ptr::null_mut(), ptr::null_mut()), MdStatus::Null);
        md_graph_free(k);
    }
}

#[test]
fn header_declares_the_api() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/minor_density.h");
    let header = std::fs::read_to_string(&path).unwrap();
    for name in [
        "md_graph_from_graph6",
        "md_graph_from_family",
        "md_graph_free",
        "md_graph_to_graph6",
        "md_string_free",
        "md_density",
        "md_t_density",
        "md_balance_check",
        "md_plant_classify",
        "md_catalog_membership",
        "md_catalog_next_above",
        "md_catalog_witness",
        "md_last_error",
        "MD_STATUS_BUDGET",
        "typedef struct MdGraph MdGraph",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    // The header must compile as C when a compiler is around.
    if let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&path).output() {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
