use toric_codes::cyclic::{bch_build, LinearCode};
use toric_codes::delpezzo::{build_family, FamilyId};
use toric_codes::distance::{message_count, min_distance_exhaustive, weight_distribution, SearchOptions, Traversal};

fn opts(chunks: usize, threads: Option<usize>, traversal: Traversal) -> SearchOptions {
    SearchOptions { chunks, threads, traversal, ..SearchOptions::default() }
}

#[test]
fn chunking_and_threads_do_not_change_the_result() {
    for (family, q) in [(FamilyId::C3, 5), (FamilyId::C4, 4), (FamilyId::C6, 5), (FamilyId::C8, 3)] {
        let code = build_family(family, q).unwrap();
        let one = min_distance_exhaustive(&code, &opts(1, Some(1), Traversal::Gray)).unwrap();
        let eight = min_distance_exhaustive(&code, &opts(8, Some(4), Traversal::Gray)).unwrap();
        assert_eq!(one, eight, "{family} q={q}");
        assert!(one.exact);
    }
}

#[test]
fn gray_and_direct_traversals_agree() {
    for (family, q) in [(FamilyId::C3, 4), (FamilyId::C4, 5), (FamilyId::C9, 5)] {
        let code = build_family(family, q).unwrap();
        let gray = min_distance_exhaustive(&code, &opts(16, None, Traversal::Gray)).unwrap();
        let direct = min_distance_exhaustive(&code, &opts(16, None, Traversal::Direct)).unwrap();
        assert_eq!(gray.d, direct.d, "{family} q={q}");
        assert_eq!(direct.witness.iter().filter(|&&c| c != 0).count(), direct.d);
    }
}

#[test]
fn witness_is_a_codeword_of_minimum_weight() {
    let code = build_family(FamilyId::C4, 5).unwrap();
    let r = min_distance_exhaustive(&code, &SearchOptions::default()).unwrap();
    assert!(code.contains(&r.witness));
    assert_eq!(r.witness.iter().filter(|&&c| c != 0).count(), r.d);
    assert_eq!(r.messages, message_count(5, code.k()));
}

#[test]
fn spectrum_agrees_with_minimum_distance() {
    let code = build_family(FamilyId::C3, 3).unwrap();
    let spectrum = weight_distribution(&code, None).unwrap();
    assert_eq!(spectrum.values().sum::<u64>(), 81);
    assert_eq!(spectrum.get(&0), Some(&1));
    let min_nonzero = spectrum.keys().copied().find(|&w| w > 0).unwrap();
    assert_eq!(min_nonzero, 7);
    // nonzero multiples of a codeword share its weight
    for (&w, &count) in &spectrum {
        if w > 0 {
            assert_eq!(count % 2, 0, "weight {w}");
        }
    }
    for (family, q) in [(FamilyId::C4, 3), (FamilyId::C6, 5)] {
        let code = build_family(family, q).unwrap();
        let spectrum = weight_distribution(&code, Some(2)).unwrap();
        let d = min_distance_exhaustive(&code, &SearchOptions::default()).unwrap().d;
        assert_eq!(spectrum.keys().copied().find(|&w| w > 0), Some(d));
    }
}

#[test]
fn double_dual_has_the_same_distance() {
    for (q, n, d_star, b) in [(2u64, 15usize, 5usize, 1i64), (3, 13, 4, 1), (4, 17, 3, 1)] {
        let code = bch_build(q, n, d_star, b).unwrap();
        let back = code.dual().unwrap().dual().unwrap();
        let d1 = min_distance_exhaustive(&code, &SearchOptions::default()).unwrap().d;
        let d2 = min_distance_exhaustive(&back, &SearchOptions::default()).unwrap().d;
        assert_eq!(d1, d2);
        assert!(d1 >= d_star);
    }
}

#[test]
fn cyclic_and_linear_views_agree() {
    let code = build_family(FamilyId::C4, 4).unwrap();
    let linear = LinearCode::from_cyclic(&code);
    let a = min_distance_exhaustive(&code, &SearchOptions::default()).unwrap();
    let b = min_distance_exhaustive(&linear, &SearchOptions::default()).unwrap();
    assert_eq!(a.d, b.d);
    assert_eq!(a.d, 9);
}

/// The searches behind --slow; about two minutes on one core.
#[test]
#[ignore]
fn slow_family_distances() {
    for (family, q, d) in [
        (FamilyId::C9, 7, 35),
        (FamilyId::C8, 8, 47),
        (FamilyId::C8, 9, 62),
        (FamilyId::C9, 8, 48),
        (FamilyId::C9, 9, 63),
    ] {
        let code = build_family(family, q).unwrap();
        let r = min_distance_exhaustive(&code, &SearchOptions::default()).unwrap();
        assert!(r.exact);
        assert_eq!(r.d, d, "{family} q={q}");
    }
}
