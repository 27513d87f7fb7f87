use std::ffi::CStr;
use std::ptr;

use sparse_duals_ffi::*;

fn semigroup(gens: &[u64]) -> *mut SdSemigroup {
    let mut s = ptr::null_mut();
    let status = unsafe { sd_semigroup_new(gens.as_ptr(), gens.len(), &mut s) };
    assert_eq!(status, SdStatus::Ok);
    s
}

fn curve(q: u64) -> *mut SdCurve {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { sd_curve_new(q, &mut c) }, SdStatus::Ok);
    c
}

fn last_error() -> String {
    let p = sd_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { sd_string_free(p) };
    s
}

#[test]
fn semigroup_basics_round_trip() {
    let s = semigroup(&[3, 5]);
    unsafe {
        assert_eq!(sd_semigroup_genus(s), 4);
        assert_eq!(sd_semigroup_conductor(s), 8);
        assert!(sd_semigroup_contains(s, 8));
        assert!(!sd_semigroup_contains(s, 7));
        assert!(!sd_semigroup_contains(s, -3));
        assert_eq!(sd_semigroup_lambda(s, 0), 0);
        assert_eq!(sd_semigroup_lambda(s, 3), 6);

        let mut buf = [0u64; 8];
        let mut len = 0;
        assert_eq!(sd_semigroup_gaps(s, buf.as_mut_ptr(), buf.len(), &mut len), SdStatus::Ok);
        assert_eq!(&buf[..len], &[1, 2, 4, 7]);
        sd_semigroup_free(s);
    }
}

#[test]
fn short_buffer_reports_required_length() {
    let s = semigroup(&[3, 5]);
    unsafe {
        let mut buf = [0u64; 2];
        let mut len = 0;
        let status = sd_semigroup_gaps(s, buf.as_mut_ptr(), buf.len(), &mut len);
        assert_eq!(status, SdStatus::BufferTooSmall);
        assert_eq!(len, 4);

        let mut len = 0;
        let status = sd_semigroup_gaps(s, ptr::null_mut(), 0, &mut len);
        assert_eq!(status, SdStatus::BufferTooSmall);
        assert_eq!(len, 4);
        sd_semigroup_free(s);
    }
}

#[test]
fn invalid_generators_map_to_status_codes() {
    let mut s = ptr::null_mut();
    let gens = [4u64, 6];
    let status = unsafe { sd_semigroup_new(gens.as_ptr(), gens.len(), &mut s) };
    assert_eq!(status, SdStatus::GcdNotOne);
    assert!(s.is_null());
    assert!(last_error().contains('2'));

    let status = unsafe { sd_semigroup_new(ptr::null(), 2, &mut s) };
    assert_eq!(status, SdStatus::NullPointer);
    let status = unsafe { sd_semigroup_new(ptr::null(), 0, &mut s) };
    assert_eq!(status, SdStatus::InvalidArgument);
}

#[test]
fn leaders_and_complements() {
    let s = semigroup(&[3, 5]);
    unsafe {
        let mut leaders = [0u64; 32];
        let mut len = 0;
        let status = sd_leader_set(s, 20, leaders.as_mut_ptr(), leaders.len(), &mut len);
        assert_eq!(status, SdStatus::Ok);
        let leaders = &leaders[..len];
        assert_eq!(&leaders[..2], &[10, 12]);
        assert!(!leaders.contains(&9));
        for &l in leaders {
            let i = (0..).find(|&i| sd_semigroup_lambda(s, i) == l).unwrap();
            assert_eq!(sd_gap_pair_count(s, i), 0);
        }

        let mut d = [0u64; 8];
        let status = sd_maximum_sparse_complement(s, 10, d.as_mut_ptr(), d.len(), &mut len);
        assert_eq!(status, SdStatus::Ok);
        assert_eq!(&d[..len], &[0, 5, 10]);

        let status = sd_maximum_sparse_complement(s, 9, d.as_mut_ptr(), d.len(), &mut len);
        assert_eq!(status, SdStatus::NotALeader);
        let status = sd_maximum_sparse_complement(s, 7, d.as_mut_ptr(), d.len(), &mut len);
        assert_eq!(status, SdStatus::NotInSemigroup);
        sd_semigroup_free(s);
    }
}

#[test]
fn inclusion_report_agrees() {
    let s = semigroup(&[3, 5]);
    unsafe {
        let mut r = SdInclusionReport::default();
        assert_eq!(sd_inclusion_report(s, 12, 10, &mut r), SdStatus::Ok);
        assert!(r.all_agree);
        assert!(r.complement_inclusion || !r.ideal_inclusion);
        assert_eq!(sd_inclusion_report(s, 12, 10, ptr::null_mut()), SdStatus::NullPointer);
        sd_semigroup_free(s);
    }
}

#[test]
fn curve_rejects_large_fields() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { sd_curve_new(17, &mut c) }, SdStatus::FieldTooLarge);
    assert!(last_error().contains("exceeds 256"));
    assert_eq!(unsafe { sd_curve_new(6, &mut c) }, SdStatus::NotPrimePower);
}

#[test]
fn code_sequence_on_all_points() {
    let c = curve(2);
    unsafe {
        assert_eq!(sd_curve_point_count(c), 8);
        assert_eq!(sd_curve_genus(c), 1);

        let idx: Vec<usize> = (1..=8).collect();
        let mut cs = ptr::null_mut();
        assert_eq!(sd_code_sequence_new(c, idx.as_ptr(), idx.len(), &mut cs), SdStatus::Ok);

        let mut w = [0u64; 8];
        let mut len = 0;
        assert_eq!(sd_code_sequence_wstar(cs, w.as_mut_ptr(), w.len(), &mut len), SdStatus::Ok);
        assert_eq!(len, 8);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(sd_code_sequence_criterion(cs));

        let mut x = [0u8; 8];
        let mut found = false;
        let status = sd_code_sequence_isometry_vector(cs, x.as_mut_ptr(), x.len(), &mut len, &mut found);
        assert_eq!(status, SdStatus::Ok);
        assert!(found);
        assert_eq!(len, 8);
        assert_eq!(x[0], 1);
        assert!(x.iter().all(|&v| v != 0));

        let json: serde_json::Value = serde_json::from_str(&take_string(sd_code_sequence_json(cs))).unwrap();
        assert_eq!(json["n"], 8);
        assert_eq!(json["criterion"], true);
        sd_code_sequence_free(cs);
        sd_curve_free(c);
    }
}

#[test]
fn code_sequence_rejects_bad_points() {
    let c = curve(2);
    unsafe {
        let mut cs = ptr::null_mut();
        let dup = [1usize, 1];
        assert_eq!(sd_code_sequence_new(c, dup.as_ptr(), 2, &mut cs), SdStatus::DuplicatePoints);
        let out = [1usize, 9];
        assert_eq!(sd_code_sequence_new(c, out.as_ptr(), 2, &mut cs), SdStatus::PointOutOfRange);
        assert!(cs.is_null());
        sd_curve_free(c);
    }
}

#[test]
fn hierarchy_matches_reference_counts() {
    let c = curve(2);
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(sd_hierarchy_new(c, 2, &mut h), SdStatus::Ok);
        assert_eq!(sd_hierarchy_node_count(h), 31);
        assert_eq!(sd_hierarchy_edge_count(h), 60);

        let dot = take_string(sd_hierarchy_dot(h));
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot, take_string(sd_hierarchy_dot(h)));

        let json: serde_json::Value = serde_json::from_str(&take_string(sd_hierarchy_json(h))).unwrap();
        assert_eq!(json["edges"].as_array().unwrap().len(), 60);
        sd_hierarchy_free(h);
        sd_curve_free(c);
    }
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        sd_semigroup_free(ptr::null_mut());
        sd_curve_free(ptr::null_mut());
        sd_code_sequence_free(ptr::null_mut());
        sd_hierarchy_free(ptr::null_mut());
        sd_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sparse_duals.h")).unwrap();
    for name in [
        "sd_last_error",
        "sd_string_free",
        "sd_semigroup_new",
        "sd_semigroup_gaps",
        "sd_leader_set",
        "sd_maximum_sparse_complement",
        "sd_inclusion_report",
        "sd_curve_new",
        "sd_code_sequence_new",
        "sd_code_sequence_isometry_vector",
        "sd_hierarchy_new",
        "sd_hierarchy_dot",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct SdSemigroup SdSemigroup;"));
}
