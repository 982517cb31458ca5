use std::ffi::{c_char, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pconn_ffi::*;

fn from_graph6(s: &str) -> *mut PconnGraph {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pconn_graph_from_graph6(text.as_ptr(), &mut g) }, PconnStatus::Ok);
    g
}

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    let len = unsafe { pconn_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let bytes: Vec<u8> = buf[..len.min(255)].iter().map(|&c| c as u8).collect();
    String::from_utf8(bytes).unwrap()
}

#[test]
fn star_from_edges() {
    let edges = [0usize, 1, 0, 2, 0, 3];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pconn_graph_from_edges(4, edges.as_ptr(), 3, &mut g), PconnStatus::Ok);
        assert_eq!(pconn_graph_vertex_count(g), 4);
        assert_eq!(pconn_graph_edge_count(g), 3);
        let (mut u, mut v) = (0, 0);
        assert_eq!(pconn_graph_edge(g, 2, &mut u, &mut v), PconnStatus::Ok);
        assert_eq!((u, v), (0, 3));
        assert_eq!(pconn_graph_edge(g, 3, &mut u, &mut v), PconnStatus::InvalidArgument);

        let mut value = 0;
        let mut colors = [0u32; 3];
        assert_eq!(pconn_pc_exact(g, 0, &mut value, colors.as_mut_ptr(), 3), PconnStatus::Ok);
        assert_eq!(value, 3);
        let mut sorted = colors;
        sorted.sort();
        assert_eq!(sorted, [1, 2, 3]);

        let mut ok = true;
        let same = [1u32, 1, 2];
        assert_eq!(pconn_check_coloring(g, same.as_ptr(), 3, &mut ok), PconnStatus::Ok);
        assert!(!ok);
        pconn_graph_free(g);
    }
}

#[test]
fn cycle_from_graph6() {
    let g = from_graph6("Dhc");
    unsafe {
        let mut set = [0usize; 5];
        let mut size = 0;
        assert_eq!(pconn_min_two_step_dominating(g, set.as_mut_ptr(), 5, &mut size), PconnStatus::Ok);
        assert_eq!(size, 2);
        let mut small = [0usize; 1];
        assert_eq!(
            pconn_min_two_step_dominating(g, small.as_mut_ptr(), 1, &mut size),
            PconnStatus::BufferTooSmall
        );
        assert_eq!(size, 2);
        pconn_graph_free(g);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("D").unwrap();
        assert_eq!(pconn_graph_from_graph6(bad.as_ptr(), &mut g), PconnStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().starts_with("parse error"));

        assert_eq!(pconn_graph_from_graph6(ptr::null(), &mut g), PconnStatus::NullPointer);
        let loops = [1usize, 1];
        assert_eq!(pconn_graph_from_edges(3, loops.as_ptr(), 1, &mut g), PconnStatus::InvalidArgument);

        let two = [0usize, 1];
        assert_eq!(pconn_graph_from_edges(3, two.as_ptr(), 1, &mut g), PconnStatus::Ok);
        let mut value = 0;
        assert_eq!(pconn_pc_exact(g, 0, &mut value, ptr::null_mut(), 0), PconnStatus::Disconnected);
        pconn_graph_free(g);

        let p = from_graph6("Dhc");
        let mut colors = [0u32; 2];
        assert_eq!(pconn_pc_exact(p, 0, &mut value, colors.as_mut_ptr(), 2), PconnStatus::BufferTooSmall);
        assert_eq!(pconn_pc_exact(ptr::null(), 0, &mut value, ptr::null_mut(), 0), PconnStatus::NullPointer);
        assert_eq!(pconn_graph_vertex_count(ptr::null()), 0);
        pconn_graph_free(p);
        pconn_graph_free(ptr::null_mut());
    }
}

#[test]
fn budget_is_reported() {
    // pc 3, and refuting 2 colors takes more than one search node
    let (sharp, _) = pconn::classes::sharpness_family_interval(2).unwrap();
    let flat: Vec<usize> = sharp.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    let mut value = 0;
    unsafe {
        let n = sharp.vertex_count();
        assert_eq!(pconn_graph_from_edges(n, flat.as_ptr(), sharp.edge_count(), &mut g), PconnStatus::Ok);
        assert_eq!(pconn_pc_exact(g, 1, &mut value, ptr::null_mut(), 0), PconnStatus::Budget);
        assert!(last_error().contains("budget"));
        assert_eq!(pconn_pc_exact(g, 0, &mut value, ptr::null_mut(), 0), PconnStatus::Ok);
        assert_eq!(value, 3);
        pconn_graph_free(g);
    }
}

/// Compiles a C program against the generated header and static library.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libpconn_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("pconn_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "pc 2 size 2");
}
