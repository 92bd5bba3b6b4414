use chromsym::csf::{
    a_coefficient_via_tableaux, a_coefficients, c_by_length, chromatic_symmetric_function, f_coefficients,
    proper_coloring_count,
};
use chromsym::orderstruct::acyclic_orientation_sink_counts;
use chromsym::symfunc::inverse_kostka;
use chromsym::tableaux::enumerate_p_tableaux;
use chromsym::{Basis, Graph, Poset};
use num::{BigInt, BigRational};
use proptest::prelude::*;

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Random relations `u < v` with `u < v` as integers, so the closure is
/// always acyclic.
fn poset_from_mask(n: usize, mask: u32) -> Poset {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let rel: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Poset::from_relations(n, &rel).unwrap()
}

// Colourings with content exactly `counts` (colour i used counts[i] times).
fn colourings_with_content(g: &Graph, counts: &[usize]) -> u64 {
    fn rec(g: &Graph, v: usize, colour: &mut Vec<usize>, left: &mut Vec<usize>) -> u64 {
        if v == g.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..left.len() {
            if left[c] == 0 || (0..v).any(|u| g.has_edge(u, v) && colour[u] == c) {
                continue;
            }
            left[c] -= 1;
            colour[v] = c;
            total += rec(g, v + 1, colour, left);
            left[c] += 1;
        }
        total
    }
    rec(g, 0, &mut vec![0; g.len()], &mut counts.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_coefficients_count_colourings(n in 1usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask);
        let x = chromatic_symmetric_function(&g).unwrap();
        for (lambda, c) in x.coeffs_by_partition() {
            let direct = colourings_with_content(&g, lambda.parts());
            prop_assert_eq!(c, BigRational::from_integer(BigInt::from(direct)), "{}", lambda);
        }
    }

    #[test]
    fn specialization_counts_colourings(n in 1usize..=6, mask in any::<u32>(), k in 0usize..=4) {
        let g = graph_from_mask(n, mask);
        let x = chromatic_symmetric_function(&g).unwrap();
        prop_assert_eq!(
            x.specialize_ones(k).unwrap(),
            BigRational::from_integer(BigInt::from(proper_coloring_count(&g, k)))
        );
    }

    #[test]
    fn sink_counts_match_length_sums(n in 1usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask);
        let c = c_by_length(&a_coefficients(&g).unwrap(), n);
        let kappa: Vec<i64> = acyclic_orientation_sink_counts(&g).unwrap().to_vec(n).into_iter().map(|k| k as i64).collect();
        prop_assert_eq!(c, kappa);
    }

    #[test]
    fn omega_schur_matches_f(n in 1usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask);
        let wx = chromatic_symmetric_function(&g).unwrap().omega().unwrap().convert(Basis::Schur).unwrap();
        for c in f_coefficients(&g).unwrap() {
            prop_assert_eq!(wx.coeff(&c.partition), BigRational::from_integer(BigInt::from(c.value)));
        }
    }

    #[test]
    fn conversions_round_trip(n in 1usize..=6, mask in any::<u32>()) {
        let x = chromatic_symmetric_function(&graph_from_mask(n, mask)).unwrap();
        for b in Basis::ALL {
            prop_assert_eq!(&x.convert(b).unwrap().convert(Basis::Monomial).unwrap(), &x);
        }
    }

    #[test]
    fn claw_free_incomparability_graphs(n in 1usize..=5, mask in any::<u32>()) {
        let p = poset_from_mask(n, mask);
        prop_assume!(p.is_three_plus_one_free());
        let g = p.incomparability_graph();
        let a = a_coefficients(&g).unwrap();
        let f = f_coefficients(&g).unwrap();
        for (ca, cf) in a.iter().zip(&f) {
            prop_assert_eq!(a_coefficient_via_tableaux(&p, &ca.partition).unwrap(), ca.value);
            prop_assert_eq!(enumerate_p_tableaux(&p, &cf.partition).unwrap().len() as i64, cf.value);
            prop_assert!(ca.value >= 0);
            let via_f: i64 = f.iter().map(|m| inverse_kostka(&ca.partition, &m.partition).unwrap() * m.value).sum();
            prop_assert_eq!(via_f, ca.value);
        }
    }
}

#[test]
fn signed_count_refuses_claws() {
    // 0 < 1 < 2 with 3 free: incomparability graph is a claw centred at 3
    let p = Poset::from_relations(4, &[(0, 1), (1, 2)]).unwrap();
    assert!(!p.incomparability_graph().is_clawfree());
    let err = a_coefficient_via_tableaux(&p, &"4".parse().unwrap()).unwrap_err();
    assert!(err.to_string().contains("0 < 1 < 2"), "{err}");
}
