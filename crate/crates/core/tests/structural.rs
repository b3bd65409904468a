use num_bigint::{BigInt, BigUint};

use symsplit::characters::{
    character, chi_power, class_size, degree, global, inner_product, mn_value, power_map,
    theta_class, trivial,
};
use symsplit::kronecker::{kronecker_coefficient, square_split, sym_alt_parts};
use symsplit::partitions::{enumerate, Partition};

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[test]
fn row_orthogonality_up_to_8() {
    for n in 1..=8 {
        let parts = enumerate(n, None).unwrap();
        let chars: Vec<_> = parts.iter().map(|l| character(l).unwrap()).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                assert_eq!(
                    inner_product(a, b).unwrap(),
                    i128::from(i == j),
                    "n={n} {} {}",
                    parts[i],
                    parts[j]
                );
            }
        }
    }
}

#[test]
fn column_orthogonality_up_to_8() {
    for n in 1..=8 {
        let table = global().table(n).unwrap();
        let k = table.parts.len();
        for a in 0..k {
            for b in 0..k {
                let s: i64 = table.rows.iter().map(|r| r[a] * r[b]).sum();
                let expected = if a == b {
                    let z = factorial(n) / class_size(&table.parts[a]);
                    i64::try_from(z).unwrap()
                } else {
                    0
                };
                assert_eq!(
                    s, expected,
                    "n={n} classes {} {}",
                    table.parts[a], table.parts[b]
                );
            }
        }
    }
}

#[test]
fn twisted_square_is_sym_minus_alt_up_to_10() {
    for n in 1..=10 {
        for lambda in enumerate(n, None).unwrap() {
            let chi = character(&lambda).unwrap();
            let (s, a) = sym_alt_parts(&chi).unwrap();
            assert_eq!(chi_power(&chi, 2).unwrap(), s.sub(&a).unwrap(), "{lambda}");
            assert_eq!(chi.mul(&chi).unwrap(), s.add(&a).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn frobenius_schur_indicator_is_one_up_to_10() {
    for n in 1..=10 {
        let one = trivial(n).unwrap();
        for lambda in enumerate(n, None).unwrap() {
            let twisted = chi_power(&character(&lambda).unwrap(), 2).unwrap();
            assert_eq!(inner_product(&twisted, &one).unwrap(), 1, "{lambda}");
        }
    }
}

#[test]
fn dimension_sums_up_to_10() {
    for n in 1..=10 {
        for lambda in enumerate(n, None).unwrap() {
            let f = BigInt::from(degree(&lambda));
            let s = square_split(&lambda).unwrap();
            assert_eq!(s.sym.degree(), &f * (&f + 1) / 2, "{lambda}");
            assert_eq!(s.alt.degree(), &f * (&f - 1) / 2, "{lambda}");
        }
    }
}

#[test]
fn hook_length_degree_matches_identity_value_up_to_12() {
    for n in 1..=12 {
        let identity = Partition::column(n);
        for lambda in enumerate(n, None).unwrap() {
            let mn = mn_value(&lambda, &identity).unwrap();
            assert_eq!(
                BigUint::from(u64::try_from(mn).unwrap()),
                degree(&lambda),
                "{lambda}"
            );
        }
    }
}

#[test]
fn split_is_conjugation_invariant() {
    for n in 1..=10 {
        for lambda in enumerate(n, None).unwrap() {
            assert_eq!(
                square_split(&lambda).unwrap().sym,
                square_split(&lambda.conjugate()).unwrap().sym
            );
            assert_eq!(
                square_split(&lambda).unwrap().alt,
                square_split(&lambda.conjugate()).unwrap().alt
            );
        }
    }
}

#[test]
fn staircase_multiplicity_parity() {
    for k in 1..=4 {
        let rho = Partition::staircase(k);
        for lambda in enumerate(rho.size(), None).unwrap() {
            let g = kronecker_coefficient(&lambda, &lambda, &rho).unwrap();
            assert_eq!(g.rem_euclid(2), i64::from(lambda == rho), "{lambda}");
        }
    }
}

#[test]
fn longest_constituent_of_square() {
    for n in 1..=9 {
        for lambda in enumerate(n, None).unwrap() {
            let longest = square_split(&lambda)
                .unwrap()
                .square()
                .iter()
                .map(|(nu, _)| nu.len())
                .max()
                .unwrap();
            assert_eq!(longest, lambda.self_intersection(), "{lambda}");
        }
    }
}

#[test]
fn power_characters_against_class_indicators() {
    for n in 1..=7 {
        let parts = enumerate(n, None).unwrap();
        for lambda in &parts {
            let chi = character(lambda).unwrap();
            for m in 2..=3 {
                let twisted = chi_power(&chi, m).unwrap();
                for class in &parts {
                    let lhs = inner_product(&twisted, &theta_class(class).unwrap()).unwrap();
                    assert_eq!(
                        lhs,
                        i128::from(mn_value(lambda, &power_map(class, m)).unwrap()),
                        "{lambda} {class} m={m}"
                    );
                }
            }
        }
    }
}
