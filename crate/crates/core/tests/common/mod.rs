use std::collections::BTreeSet;

use hfusion_core::diamond::AmbiguityKind;

/// Expected ambiguities of the H(E,F) system from index ranges: two duplicate-lhs
/// inclusions and four overlap families of sizes m*n.
pub fn expected_hef_census(mm: usize, nn: usize) -> BTreeSet<(AmbiguityKind, String)> {
    let u = |i: usize, j: usize| format!("u{i}{j}");
    let v = |i: usize, j: usize| format!("v{i}{j}");
    let mut s = BTreeSet::new();
    s.insert((AmbiguityKind::Inclusion, format!("{}.{}", v(1, 1), u(1, 1))));
    s.insert((AmbiguityKind::Inclusion, format!("{}.{}", u(mm, nn), v(mm, nn))));
    for i in 1..=mm {
        for j in 1..=nn {
            s.insert((AmbiguityKind::Overlap, format!("{}.{}.{}", u(i, nn), v(1, nn), u(1, j))));
            s.insert((AmbiguityKind::Overlap, format!("{}.{}.{}", v(i, 1), u(mm, 1), v(mm, j))));
        }
    }
    for i in 1..=nn {
        for j in 1..=mm {
            s.insert((AmbiguityKind::Overlap, format!("{}.{}.{}", v(1, i), u(1, nn), v(j, nn))));
            s.insert((AmbiguityKind::Overlap, format!("{}.{}.{}", u(mm, i), v(mm, 1), u(j, 1))));
        }
    }
    s
}
