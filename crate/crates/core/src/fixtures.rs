//! Named arrangements used by the tests, benches and CLI examples.

use crate::arrangement::Arrangement;

pub struct Fixture {
    pub name: &'static str,
    pub arrangement: Arrangement,
}

fn build(dimension: usize, forms: &[(&[i64], i64)]) -> Arrangement {
    Arrangement::from_integer_forms(dimension, forms).expect("fixture is valid")
}

/// `Q = (x+1)(x-1)(y+1)(y-1)(x-y)` with the factor order.
pub fn example_e() -> Arrangement {
    build(
        2,
        &[
            (&[1, 0], 1),
            (&[1, 0], -1),
            (&[0, 1], 1),
            (&[0, 1], -1),
            (&[1, -1], 0),
        ],
    )
}

/// The coordinate axes `x = 0, y = 0`.
pub fn normal_n2() -> Arrangement {
    build(2, &[(&[1, 0], 0), (&[0, 1], 0)])
}

/// Points `x = 0, 1, 2` on the line.
pub fn three_points() -> Arrangement {
    build(1, &[(&[1], 0), (&[1], -1), (&[1], -2)])
}

/// `x = 0, y = 0, x + y = 1`.
pub fn general_position_gp() -> Arrangement {
    build(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1)])
}

/// `x = 0, x = 1, y = 0, y = x, y = x - 1`, supersolvable with blocks
/// `{1, 2}` and `{3, 4, 5}`.
pub fn supersolvable_e_prime() -> Arrangement {
    build(
        2,
        &[
            (&[1, 0], 0),
            (&[1, 0], -1),
            (&[0, 1], 0),
            (&[1, -1], 0),
            (&[1, -1], -1),
        ],
    )
}

pub fn supersolvable_e_prime_blocks() -> Vec<Vec<usize>> {
    vec![vec![1, 2], vec![3, 4, 5]]
}

/// Rank two with an admissible order (`nu = 3`) and a mixed maximal flat:
/// `x = 0, x = 1, y = 0, y = x - 1`; the triple point is `(1, 0)`.
pub fn admissible_mixed() -> Arrangement {
    build(
        2,
        &[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0), (&[1, -1], -1)],
    )
}

/// No two lines parallel, with a triple point at the origin:
/// `x = 0, y = 0, x + y = 0, x - y = 1`.
pub fn general_position_to_infinity() -> Arrangement {
    build(
        2,
        &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0), (&[1, -1], -1)],
    )
}

/// The square `x = -1, x = 1, y = -1, y = 1`, a normal arrangement.
pub fn square() -> Arrangement {
    build(
        2,
        &[(&[1, 0], 1), (&[1, 0], -1), (&[0, 1], 1), (&[0, 1], -1)],
    )
}

/// A rank-3 arrangement with triple lines:
/// `x = 0, y = 0, z = 0, x = y, y = z, x + y + z = 1`.
pub fn rank_three() -> Arrangement {
    build(
        3,
        &[
            (&[1, 0, 0], 0),
            (&[0, 1, 0], 0),
            (&[0, 0, 1], 0),
            (&[1, -1, 0], 0),
            (&[0, 1, -1], 0),
            (&[1, 1, 1], -1),
        ],
    )
}

pub fn all() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "E",
            arrangement: example_e(),
        },
        Fixture {
            name: "N2",
            arrangement: normal_n2(),
        },
        Fixture {
            name: "P3",
            arrangement: three_points(),
        },
        Fixture {
            name: "GP",
            arrangement: general_position_gp(),
        },
        Fixture {
            name: "Eprime",
            arrangement: supersolvable_e_prime(),
        },
        Fixture {
            name: "ADM",
            arrangement: admissible_mixed(),
        },
        Fixture {
            name: "GPI",
            arrangement: general_position_to_infinity(),
        },
        Fixture {
            name: "SQ",
            arrangement: square(),
        },
        Fixture {
            name: "R3",
            arrangement: rank_three(),
        },
    ]
}

pub fn by_name(name: &str) -> Option<Arrangement> {
    all()
        .into_iter()
        .find(|f| f.name == name)
        .map(|f| f.arrangement)
}
