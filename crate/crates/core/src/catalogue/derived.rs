//! Fixture data computed offline by exact hull and planar-graph enumeration.
//! The regeneration test in `tests/derived_fixtures.rs` recomputes all of it.

/// Sum of the standard `d`-simplex and the segment `[0, e_1 + e_2]`. Vertex
/// `0` is the origin, then `e_1, e_1 + s, e_2, e_2 + s, ..` up to `e_d + s`.
pub(super) const PENTASM_3: &[&[usize]] = &[
    &[0, 1, 2, 3, 4],
    &[0, 1, 5],
    &[0, 3, 5],
    &[1, 2, 5, 6],
    &[2, 4, 6],
    &[3, 4, 5, 6],
];

pub(super) const PENTASM_4: &[&[usize]] = &[
    &[0, 1, 2, 3, 4, 5, 6],
    &[0, 1, 2, 3, 4, 7, 8],
    &[0, 1, 5, 7],
    &[0, 3, 5, 7],
    &[1, 2, 5, 6, 7, 8],
    &[2, 4, 6, 8],
    &[3, 4, 5, 6, 7, 8],
];

pub(super) const PENTASM_5: &[&[usize]] = &[
    &[0, 1, 2, 3, 4, 5, 6, 7, 8],
    &[0, 1, 2, 3, 4, 5, 6, 9, 10],
    &[0, 1, 2, 3, 4, 7, 8, 9, 10],
    &[0, 1, 5, 7, 9],
    &[0, 3, 5, 7, 9],
    &[1, 2, 5, 6, 7, 8, 9, 10],
    &[2, 4, 6, 8, 10],
    &[3, 4, 5, 6, 7, 8, 9, 10],
];

/// Vertices 0 and 1 have degree 4.
pub(super) const ANTIWEDGE: &[&[usize]] = &[
    &[0, 1, 2],
    &[0, 1, 3],
    &[0, 2, 4],
    &[0, 3, 4, 5],
    &[1, 2, 4, 5],
    &[1, 3, 5],
];

/// Ordered by edge count, then by canonical edge list.
pub(super) const SEVEN_VERTEX: &[&[&[usize]]] = &[
    &[
        &[0, 1, 2],
        &[0, 1, 3],
        &[0, 2, 4, 5],
        &[0, 3, 4, 6],
        &[1, 2, 3, 5, 6],
        &[4, 5, 6],
    ],
    &[
        &[0, 1, 2],
        &[0, 1, 3, 5],
        &[0, 2, 4, 6],
        &[0, 3, 4],
        &[1, 2, 5, 6],
        &[3, 4, 5, 6],
    ],
    &[
        &[0, 1, 2],
        &[0, 1, 3],
        &[0, 2, 4],
        &[0, 3, 5],
        &[0, 4, 6],
        &[0, 5, 6],
        &[1, 2, 3, 4, 5, 6],
    ],
    &[
        &[0, 1, 2],
        &[0, 1, 3],
        &[0, 2, 4],
        &[0, 3, 5],
        &[0, 4, 5, 6],
        &[1, 2, 4, 6],
        &[1, 3, 5, 6],
    ],
    &[
        &[0, 1, 2],
        &[0, 1, 3],
        &[0, 2, 4],
        &[0, 3, 5, 6],
        &[0, 4, 5],
        &[1, 2, 4, 5, 6],
        &[1, 3, 6],
    ],
];

/// The four 4-polytopes with seven vertices sharing the degree sequence
/// (4,4,4,5,5,6,6), facets in their published order.
pub(super) const TABLE1: [&[&[usize]]; 4] = [
    &[
        &[2, 3, 4, 5, 6],
        &[1, 3, 4, 5, 6],
        &[1, 2, 5, 6],
        &[1, 2, 4, 6],
        &[1, 2, 3, 5],
        &[0, 2, 3, 4],
        &[0, 1, 3, 4],
        &[0, 1, 2, 4],
        &[0, 1, 2, 3],
    ],
    &[
        &[2, 3, 4, 5, 6],
        &[1, 3, 4, 5, 6],
        &[0, 1, 2, 5, 6],
        &[1, 2, 4, 6],
        &[0, 2, 3, 5],
        &[0, 1, 3, 5],
        &[1, 2, 3, 4],
        &[0, 1, 2, 3],
    ],
    &[
        &[1, 2, 3, 4, 5, 6],
        &[0, 3, 4, 5, 6],
        &[0, 2, 5, 6],
        &[0, 2, 4, 6],
        &[0, 2, 3, 5],
        &[0, 1, 3, 4],
        &[0, 1, 2, 4],
        &[0, 1, 2, 3],
    ],
    &[
        &[2, 3, 4, 5, 6],
        &[1, 3, 4, 5, 6],
        &[0, 1, 2, 5, 6],
        &[0, 1, 2, 3, 4],
        &[1, 2, 4, 6],
        &[0, 2, 3, 5],
        &[0, 1, 3, 5],
    ],
];
