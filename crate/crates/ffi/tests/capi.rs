//! Exercises the C entry points the way a foreign caller would: raw
//! pointers, status codes, out-parameters.

use std::ffi::CString;
use std::ptr;

use rhdist_ffi::*;

fn make(values: &[u64]) -> *mut RhCcdh {
    let mut h: *mut RhCcdh = ptr::null_mut();
    let status = unsafe { rh_ccdh_from_values(values.as_ptr(), values.len(), &mut h) };
    assert_eq!(status, RhStatus::RhOk);
    assert!(!h.is_null());
    h
}

#[test]
fn build_query_and_free_a_handle() {
    let h = make(&[6, 3, 1, 1, 1]);
    unsafe {
        assert_eq!(rh_ccdh_delta(h), 5);
        assert_eq!(rh_ccdh_value(h, 1), 6);
        assert_eq!(rh_ccdh_value(h, 2), 3);
        assert_eq!(rh_ccdh_value(h, 9), 0);
        assert_eq!(rh_ccdh_value(h, 0), 0);
        let mut y = 0.0;
        assert_eq!(rh_ccdh_smooth_eval(h, 1.5, &mut y), RhStatus::RhOk);
        assert!((y - 4.5).abs() < 1e-12);
        assert_eq!(
            rh_ccdh_smooth_eval(h, 0.5, &mut y),
            RhStatus::RhInvalidArgument
        );
        rh_ccdh_free(h);
        rh_ccdh_free(ptr::null_mut());
    }
}

#[test]
fn invalid_values_are_rejected() {
    let mut h: *mut RhCcdh = ptr::null_mut();
    let increasing = [3u64, 4];
    let status = unsafe { rh_ccdh_from_values(increasing.as_ptr(), 2, &mut h) };
    assert_eq!(status, RhStatus::RhParseError);
    assert!(h.is_null());
    let status = unsafe { rh_ccdh_from_values(ptr::null(), 0, &mut h) };
    assert_eq!(status, RhStatus::RhNullPointer);
}

#[test]
fn degrees_constructor_matches_values_constructor() {
    let degrees = [1u64, 1, 1, 1, 1, 5];
    let mut h: *mut RhCcdh = ptr::null_mut();
    unsafe {
        assert_eq!(
            rh_ccdh_from_degrees(degrees.as_ptr(), degrees.len(), &mut h),
            RhStatus::RhOk
        );
        assert_eq!(rh_ccdh_delta(h), 5);
        assert_eq!(rh_ccdh_value(h, 1), 6);
        rh_ccdh_free(h);
        let zero = [0u64];
        assert_eq!(
            rh_ccdh_from_degrees(zero.as_ptr(), 1, &mut h),
            RhStatus::RhInvalidArgument
        );
    }
}

#[test]
fn smooth_and_discrete_distances() {
    let k3 = make(&[3, 3]);
    let k5 = make(&[5, 5, 5, 5]);
    let mut d = RhDistance {
        forward: -1.0,
        backward: -1.0,
        distance: -1.0,
    };
    unsafe {
        assert_eq!(rh_smooth_distance(k3, k5, &mut d), RhStatus::RhOk);
        assert!((d.distance - 2.0 / 3.0).abs() < 1e-9);
        assert_eq!(d.distance, d.forward.max(d.backward));
        assert_eq!(rh_discrete_distance(k3, k3, &mut d), RhStatus::RhOk);
        assert_eq!(d.distance, 0.0);
        assert_eq!(
            rh_smooth_distance(ptr::null(), k5, &mut d),
            RhStatus::RhNullPointer
        );
        let mut ratio = 0.0;
        assert_eq!(rh_normalized_ratio(k3, k5, &mut ratio), RhStatus::RhOk);
        assert!((ratio - 11.0 / 21.0).abs() < 1e-9);
        rh_ccdh_free(k3);
        rh_ccdh_free(k5);
    }
}

#[test]
fn edge_list_loader_and_status_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.txt");
    std::fs::write(&path, "a b\nb c\nc a\n").unwrap();
    let cpath = CString::new(path.to_str().unwrap()).unwrap();
    let mut h: *mut RhCcdh = ptr::null_mut();
    unsafe {
        assert_eq!(
            rh_ccdh_from_edge_list_path(cpath.as_ptr(), &mut h),
            RhStatus::RhOk
        );
        assert_eq!(rh_ccdh_delta(h), 2);
        assert_eq!(rh_ccdh_value(h, 2), 3);
        rh_ccdh_free(h);

        let missing = CString::new(dir.path().join("nope.txt").to_str().unwrap()).unwrap();
        assert_eq!(
            rh_ccdh_from_edge_list_path(missing.as_ptr(), &mut h),
            RhStatus::RhIoError
        );
        let name = std::ffi::CStr::from_ptr(rh_status_name(RhStatus::RhEmptyGraph));
        assert_eq!(name.to_str().unwrap(), "empty graph");
    }
}
