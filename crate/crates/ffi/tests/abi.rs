use std::ffi::{CStr, CString};
use std::ptr;

use rivercross_ffi::*;

const WORKED_MC: &str = "\
[(3,3)|(0,0):L]
[(1,3)|(2,0):R]
[(2,3)|(1,0):L]
[(0,3)|(3,0):R]
[(1,3)|(2,0):L]
[(1,1)|(2,2):R]
[(2,2)|(1,1):L]
[(2,0)|(1,3):R]
[(3,0)|(0,3):L]
[(1,0)|(2,3):R]
[(2,0)|(1,3):L]
[(0,0)|(3,3):R]
";

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    rc_string_free(s);
    out
}

unsafe fn graph(flavor: RcFlavor, n: usize, b: usize) -> *mut RcGraph {
    let mut g = ptr::null_mut();
    assert_eq!(rc_graph_new(flavor, n, b, 0, &mut g), RcStatus::Ok);
    assert!(!g.is_null());
    g
}

#[test]
fn capacity_and_errors() {
    unsafe {
        let mut b = 0;
        assert_eq!(rc_capacity(6, &mut b), RcStatus::Ok);
        assert_eq!(b, 4);
        assert_eq!(rc_capacity(1, &mut b), RcStatus::InvalidSize);
        let msg = CStr::from_ptr(rc_last_error()).to_str().unwrap();
        assert!(msg.contains("n=1"), "{msg}");
        assert_eq!(rc_capacity(3, ptr::null_mut()), RcStatus::NullOrUtf8);
        assert_eq!(rc_capacity(3, &mut b), RcStatus::Ok);
        assert!(rc_last_error().is_null());
    }
}

#[test]
fn counts_through_handles() {
    unsafe {
        let g = graph(RcFlavor::Hw, 3, 0);
        let (mut states, mut len, mut count) = (0usize, 0usize, 0u64);
        assert_eq!(rc_graph_state_count(g, &mut states), RcStatus::Ok);
        assert_eq!(states, 44);
        assert_eq!(rc_graph_shortest(g, &mut len, &mut count), RcStatus::Ok);
        assert_eq!((len, count), (11, 486));
        rc_graph_free(g);

        let g = graph(RcFlavor::Mc, 4, 2);
        let (mut comp, mut feasible) = (0usize, true);
        assert_eq!(rc_graph_reachability(g, &mut comp, &mut feasible), RcStatus::Ok);
        assert_eq!((comp, feasible), (11, false));
        assert_eq!(rc_graph_shortest(g, &mut len, &mut count), RcStatus::Infeasible);
        let mut dot = ptr::null_mut();
        assert_eq!(rc_graph_dot(g, true, &mut dot), RcStatus::Ok);
        assert!(take(dot).starts_with("graph mc_n4_b2 {"));
        rc_graph_free(g);
    }
}

#[test]
fn solutions_json_round_trip() {
    unsafe {
        let g = graph(RcFlavor::Mc, 3, 2);
        let mut js = ptr::null_mut();
        assert_eq!(rc_graph_solutions_json(g, 10, &mut js), RcStatus::Ok);
        let text = take(js);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["count"], 4);
        assert_eq!(v["solutions"].as_array().unwrap().len(), 4);
        // the report is itself an accepted solution file
        let c = CString::new(text).unwrap();
        let mut fiber = 0u64;
        assert_eq!(rc_fiber_count(3, 0, c.as_ptr(), &mut fiber), RcStatus::Ok);
        assert!(fiber > 0);
        rc_graph_free(g);
    }
}

#[test]
fn fiber_and_lift() {
    unsafe {
        let sol = CString::new(WORKED_MC).unwrap();
        let mut count = 0u64;
        assert_eq!(rc_fiber_count(3, 2, sol.as_ptr(), &mut count), RcStatus::Ok);
        assert_eq!(count, 216);
        let mut js = ptr::null_mut();
        assert_eq!(rc_lift_json(3, 2, sol.as_ptr(), &mut js), RcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(js)).unwrap();
        assert_eq!(v["rotations_only"], true);
        assert_eq!(v["permutations"][1], serde_json::json!([3, 1, 2]));

        let bad = CString::new("[(3,3)|(0,0):L]\n[(0,0)|(3,3):R]\n").unwrap();
        assert_eq!(rc_fiber_count(3, 2, bad.as_ptr(), &mut count), RcStatus::InvalidStep);
        assert_eq!(rc_fiber_count(3, 2, ptr::null(), &mut count), RcStatus::NullOrUtf8);
    }
}

#[test]
fn catcheck_small() {
    unsafe {
        let (mut ok, mut js) = (false, ptr::null_mut());
        assert_eq!(rc_catcheck_json(2, 2, 4, 1, &mut ok, &mut js), RcStatus::Ok);
        assert!(ok);
        let v: serde_json::Value = serde_json::from_str(&take(js)).unwrap();
        assert_eq!(v["report"]["full"], true);
        assert_eq!(v["report"]["L"], 4);
    }
}

#[test]
fn free_accepts_null() {
    unsafe {
        rc_graph_free(ptr::null_mut());
        rc_string_free(ptr::null_mut());
    }
}
