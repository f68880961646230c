//! Reference closed forms, stored both as printed (shifted binomials,
//! unreduced denominators) and in the four-basis canonical shape.
#![allow(dead_code)]

use absbinom_core::exactmath::{frac, rat, BigRat, Poly};
use absbinom_core::fitter::{BasisKind, BasisTerm, ClosedForm, PrintedBasis, PrintedTerm};
use absbinom_core::SumSpec;

/// `coeff * n^shift * (ints, lowest power first)`.
pub fn p(coeff: BigRat, shift: usize, ints: &[i64]) -> Poly {
    &Poly::monomial(coeff, shift) * &Poly::from_ints(ints)
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    a * b
}

pub const P1: [i64; 6] = [-90, 668, -1952, 2800, -1960, 531];
pub const P2: [i64; 8] = [-201, 2206, -9951, 23945, -33189, 26439, -11160, 1917];

pub struct Reference {
    pub name: &'static str,
    pub spec: SumSpec,
    pub printed: Vec<PrintedTerm>,
    pub canonical: ClosedForm,
}

fn canonical(spec: SumSpec, terms: Vec<(BasisKind, Vec<u32>, Poly)>) -> ClosedForm {
    let terms = terms
        .into_iter()
        .map(|(kind, denom_offsets, numerator)| BasisTerm { kind, denom_offsets, numerator })
        .collect();
    ClosedForm::new(spec, terms).unwrap()
}

/// The five identities recovered with proved degree plans.
pub fn rediscoveries() -> Vec<Reference> {
    use BasisKind::*;
    let cubic = SumSpec::full_square(0, 0, 3, 1);
    let fifth = SumSpec::full_square(0, 0, 5, 1);
    let odd_sq = SumSpec::full_square(1, 1, 2, 1);
    let odd_sq3 = SumSpec::full_square(3, 3, 2, 1);
    let seventh = SumSpec::full_square(0, 0, 7, 1);
    vec![
        Reference {
            name: "|j^3-i^3|",
            spec: cubic,
            printed: vec![PrintedTerm::new(p(rat(4), 2, &[-2, 5]), vec![(4, 1)], PrintedBasis::Central4nShift(1))],
            canonical: canonical(cubic, vec![(Central4n, vec![1], p(rat(2), 2, &[-2, 5]))]),
        },
        Reference {
            name: "|j^5-i^5|",
            spec: fifth,
            printed: vec![PrintedTerm::new(
                p(rat(8), 2, &[-6, 36, -70, 43]),
                vec![(4, 2), (4, 3)],
                PrintedBasis::Central4nShift(2),
            )],
            canonical: canonical(fifth, vec![(Central4n, vec![1, 3], p(rat(2), 2, &[-6, 36, -70, 43]))]),
        },
        Reference {
            name: "|ij(j^2-i^2)|",
            spec: odd_sq,
            printed: vec![PrintedTerm::new(p(rat(2), 3, &[-1, 1]), vec![(2, 1)], PrintedBasis::CentralSq)],
            canonical: canonical(odd_sq, vec![(CentralSq, vec![1], p(rat(2), 3, &[-1, 1]))]),
        },
        Reference {
            name: "|i^3j^3(j^2-i^2)|",
            spec: odd_sq3,
            printed: vec![PrintedTerm::new(
                mul(&p(rat(2), 4, &[-1, 1]), &Poly::from_ints(&[2, -6, 3])),
                vec![(2, 1), (2, 3)],
                PrintedBasis::CentralSq,
            )],
            canonical: canonical(
                odd_sq3,
                vec![(CentralSq, vec![1, 3], mul(&p(rat(2), 4, &[-1, 1]), &Poly::from_ints(&[2, -6, 3])))],
            ),
        },
        Reference {
            name: "|j^7-i^7|",
            spec: seventh,
            printed: vec![PrintedTerm::new(
                p(rat(16), 2, &P1),
                vec![(4, 3), (4, 4), (4, 5)],
                PrintedBasis::Central4nShift(3),
            )],
            canonical: canonical(seventh, vec![(Central4n, vec![1, 3, 5], p(rat(2), 2, &P1))]),
        },
    ]
}

/// The two identities that need a generic Ansatz.
pub fn stretch() -> Vec<Reference> {
    use BasisKind::*;
    let a = SumSpec::full_square(4, 3, 5, 1);
    let b = SumSpec::full_square(1, 1, 3, 3);
    let a_sq = p(rat(1), 4, &[565, -3592, 9105, -11853, 8332, -2968, 414]);
    let a_16 = mul(&p(frac(1, 128), 2, &[-1, 3]), &Poly::from_ints(&[-34, 147, -210, 105]));
    let b_4 = p(frac(1, 16), 2, &[496, -2442, 4503, -3870, 1377]);
    let b_c4 = p(rat(-4), 3, &P2);
    vec![
        Reference {
            name: "|i^4j^3(j^5-i^5)|",
            spec: a,
            printed: vec![
                PrintedTerm::new(a_sq.scale(&frac(1, 2)), vec![(2, 5), (2, 3), (2, 1)], PrintedBasis::CentralSq),
                PrintedTerm::new(a_16.clone(), vec![], PrintedBasis::Pow16),
            ],
            canonical: canonical(
                a,
                vec![(CentralSq, vec![1, 3, 5], a_sq.scale(&frac(1, 2))), (Pow16, vec![], a_16)],
            ),
        },
        Reference {
            name: "|ij(j^3-i^3)^3|",
            spec: b,
            printed: vec![
                PrintedTerm::new(b_4.clone(), vec![], PrintedBasis::Pow4Central),
                PrintedTerm::new(b_c4.clone(), vec![(4, 7), (4, 5), (4, 3), (4, 1)], PrintedBasis::Central4nShift(0)),
            ],
            canonical: canonical(b, vec![(Central4n, vec![1, 3, 5, 7], b_c4), (Pow4Central, vec![], b_4)]),
        },
    ]
}
