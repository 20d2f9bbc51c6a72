use combinat::{
    compose, gen_c_points, gen_s_points, hook_length_count, identity, inverse, is_identity,
    partitions_desc, standard_tableaux, tabloid_basis, Partition,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;

fn p(s: &str) -> Partition {
    Partition::from_str(s).unwrap()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn composition_is_apply_left_then_right() {
    let s = gen_s_points(3);
    let c = gen_c_points(3);
    assert_eq!(s, vec![1, 0, 2]);
    assert_eq!(c, vec![1, 2, 0]);
    // Point 0 moves to 1 under s, then to 2 under c.
    assert_eq!(compose(&s, &c), vec![2, 1, 0]);
    // Point 0 moves to 1 under c, then back to 0 under s.
    assert_eq!(compose(&c, &s), vec![0, 2, 1]);
}

#[test]
fn generators_satisfy_their_orders() {
    for n in 1..=8 {
        let s = gen_s_points(n);
        let c = gen_c_points(n);
        assert!(is_identity(&compose(&s, &s)), "s^2 = 1 at n={n}");
        let mut power = identity(n);
        for _ in 0..n {
            power = compose(&power, &c);
        }
        assert!(is_identity(&power), "c^n = 1 at n={n}");
    }
}

#[test]
fn inverses_cancel() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let mut perm: Vec<usize> = (0..8).collect();
        perm.shuffle(&mut rng);
        assert!(is_identity(&compose(&perm, &inverse(&perm))));
        assert!(is_identity(&compose(&inverse(&perm), &perm)));
    }
}

#[test]
fn tabloid_counts_are_multinomial() {
    for n in 1..=6 {
        for lam in partitions_desc(n) {
            let basis = tabloid_basis(&lam);
            let denom: usize = lam.parts().iter().map(|&part| factorial(part)).product();
            assert_eq!(basis.tabloids.len(), factorial(n) / denom, "{lam:?}");
        }
    }
    assert_eq!(tabloid_basis(&p("1^7")).tabloids.len(), 5040);
    assert_eq!(tabloid_basis(&p("3,2,1,1")).tabloids.len(), 420);
    assert_eq!(tabloid_basis(&p("2,1^5")).tabloids.len(), 2520);
}

#[test]
fn tabloids_are_sorted_and_canonical() {
    let basis = tabloid_basis(&p("2,2,1"));
    for w in basis.tabloids.windows(2) {
        assert!(w[0] < w[1], "list must be strictly sorted");
    }
    for t in &basis.tabloids {
        assert_eq!(t.len(), 3);
        assert_eq!((t[0].len(), t[1].len(), t[2].len()), (2, 2, 1));
        for row in t {
            assert!(row.windows(2).all(|w| w[0] < w[1]), "rows sorted");
        }
    }
}

#[test]
fn generator_actions_are_index_permutations_of_the_right_order() {
    for n in 2..=6 {
        for lam in partitions_desc(n) {
            let basis = tabloid_basis(&lam);
            let dim = basis.tabloids.len();
            let mut seen_s = vec![false; dim];
            let mut seen_c = vec![false; dim];
            for i in 0..dim {
                seen_s[basis.perm_s[i]] = true;
                seen_c[basis.perm_c[i]] = true;
            }
            assert!(seen_s.iter().all(|&b| b), "s action is a bijection");
            assert!(seen_c.iter().all(|&b| b), "c action is a bijection");
            for i in 0..dim {
                assert_eq!(basis.perm_s[basis.perm_s[i]], i, "s has order 2");
            }
            let mut j: Vec<usize> = (0..dim).collect();
            for _ in 0..n {
                j = j.iter().map(|&k| basis.perm_c[k]).collect();
            }
            assert!((0..dim).all(|i| j[i] == i), "c has order dividing n");
        }
    }
}

#[test]
fn hand_checked_two_point_tabloids() {
    let basis = tabloid_basis(&p("1,1"));
    assert_eq!(basis.tabloids, vec![vec![vec![0], vec![1]], vec![vec![1], vec![0]]]);
    assert_eq!(basis.perm_s, vec![1, 0]);
    assert_eq!(basis.perm_c, vec![1, 0]);
}

#[test]
fn index_action_respects_composition() {
    // Acting by c then s at the index level must agree with applying the
    // composite point map directly to each tabloid.
    let lam = p("2,2,1");
    let n = lam.n();
    let basis = tabloid_basis(&lam);
    let cs = compose(&gen_c_points(n), &gen_s_points(n));
    for (i, t) in basis.tabloids.iter().enumerate() {
        let mut image: Vec<Vec<u8>> = t
            .iter()
            .map(|row| {
                let mut out: Vec<u8> = row.iter().map(|&x| cs[x as usize] as u8).collect();
                out.sort_unstable();
                out
            })
            .collect();
        image.iter_mut().for_each(|row| row.sort_unstable());
        let j = basis.tabloids.binary_search(&image).unwrap();
        assert_eq!(basis.perm_s[basis.perm_c[i]], j);
    }
}

#[test]
fn standard_tableaux_are_standard_and_counted_by_hooks() {
    for n in 1..=7 {
        let mut square_sum = 0usize;
        for lam in partitions_desc(n) {
            let tableaux = standard_tableaux(&lam);
            let count = tableaux.len();
            assert_eq!(count as u64, hook_length_count(&lam), "{lam:?}");
            square_sum += count * count;
            for t in &tableaux {
                for row in t {
                    assert!(row.windows(2).all(|w| w[0] < w[1]), "rows increase");
                }
                for r in 1..t.len() {
                    for c in 0..t[r].len() {
                        assert!(t[r - 1][c] < t[r][c], "columns increase");
                    }
                }
            }
        }
        assert_eq!(square_sum, factorial(n), "sum of squares at n={n}");
    }
}

#[test]
fn known_tableau_counts() {
    assert_eq!(hook_length_count(&p("2,1")), 2);
    assert_eq!(hook_length_count(&p("2,2")), 2);
    assert_eq!(hook_length_count(&p("3,2")), 5);
    assert_eq!(hook_length_count(&p("4,3")), 14);
    assert_eq!(hook_length_count(&p("3,2,1")), 16);

    let expected_n7 = [1, 6, 14, 15, 14, 35, 20, 21, 21, 35, 15, 14, 14, 6, 1];
    for (lam, &count) in partitions_desc(7).iter().zip(&expected_n7) {
        assert_eq!(hook_length_count(lam), count, "{lam:?}");
    }
    let expected_n5 = [1, 4, 5, 6, 5, 4, 1];
    for (lam, &count) in partitions_desc(5).iter().zip(&expected_n5) {
        assert_eq!(hook_length_count(lam), count, "{lam:?}");
    }
}
