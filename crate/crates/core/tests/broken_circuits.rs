use relroots::graphs::{broken_circuit_complex, Multigraph};
use relroots::roots::{find_roots, Verdict};

/// Connected simple graphs on `n` vertices, one per edge subset of `K_n`.
fn connected_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Multigraph::new(n, edges).unwrap();
        g.is_connected().then_some(g)
    })
}

#[test]
fn some_small_broken_circuit_complex_has_a_root_outside() {
    let witness = (3..=6).flat_map(connected_graphs).find_map(|g| {
        let br = broken_circuit_complex(&g, None).unwrap();
        let rel = br.reliability().unwrap();
        if rel.h.degree().unwrap_or(0) == 0 {
            return None;
        }
        let report = find_roots(&rel.h).unwrap();
        (report.verdict == Verdict::RootOutside).then_some((g, report.max_modulus))
    });
    let (g, modulus) = witness.expect("a witness on at most six vertices");
    println!("witness {:?} with max modulus {modulus}", g.edges);
    assert!(modulus > 1.0);
}
