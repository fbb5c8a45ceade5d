//! Reference graphs used across the crate and its test suites.

use crate::embedding::PlaneTriangulation;

pub fn k3() -> PlaneTriangulation {
    PlaneTriangulation::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]], [0, 1, 2]).unwrap()
}

pub fn k4() -> PlaneTriangulation {
    PlaneTriangulation::from_faces(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
}

/// The unique triangulation on five vertices (one vertex embedded in a K4 face).
pub fn order5() -> PlaneTriangulation {
    PlaneTriangulation::from_faces(
        5,
        &[
            [0, 1, 4],
            [1, 2, 4],
            [0, 2, 4],
            [0, 1, 3],
            [1, 2, 3],
            [0, 2, 3],
        ],
    )
    .unwrap()
}

pub fn octahedron() -> PlaneTriangulation {
    PlaneTriangulation::from_faces(
        6,
        &[
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 2],
            [1, 3, 2],
            [1, 4, 3],
            [1, 5, 4],
            [1, 2, 5],
        ],
    )
    .unwrap()
}

/// Double wheel C_k + 2K_1: two centers 0, 1 joined to the rim 2..2+k.
pub fn double_wheel(k: usize) -> PlaneTriangulation {
    assert!(k >= 3);
    let rim = |i: usize| 2 + i % k;
    let mut faces = Vec::new();
    for i in 0..k {
        faces.push([0, rim(i), rim(i + 1)]);
        faces.push([1, rim(i + 1), rim(i)]);
    }
    PlaneTriangulation::from_faces(k + 2, &faces).unwrap()
}

pub fn icosahedron() -> PlaneTriangulation {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push([0, u(i), u(i + 1)]);
        faces.push([u(i), u(i + 1), l(i)]);
        faces.push([u(i + 1), l(i + 1), l(i)]);
        faces.push([11, l(i + 1), l(i)]);
    }
    PlaneTriangulation::from_faces(12, &faces).unwrap()
}

/// The 8-vertex triangulation with degree sequence 44445555: a square
/// antiprism with one diagonal added in each square face.
pub fn eight_vertex_4455() -> PlaneTriangulation {
    PlaneTriangulation::from_faces(
        8,
        &[
            [0, 1, 2],
            [0, 2, 3],
            [4, 5, 6],
            [4, 6, 7],
            [0, 4, 5],
            [0, 5, 1],
            [1, 5, 6],
            [1, 6, 2],
            [2, 6, 7],
            [2, 7, 3],
            [3, 7, 4],
            [3, 4, 0],
        ],
    )
    .unwrap()
}
