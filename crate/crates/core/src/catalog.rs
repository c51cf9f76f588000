//! Named graph families with fixed vertex orderings.
//!
//! | name             | params | ordering                                            |
//! |------------------|--------|-----------------------------------------------------|
//! | `path`           | `[n]`  | `0..n` along the path                               |
//! | `cycle`          | `[n]`  | cyclic, `n >= 3`                                    |
//! | `complete`       | `[n]`  | any; edges by gap, then start                       |
//! | `star`           | `[m]`  | `K_{1,m}`, center `0`                               |
//! | `wheel`          | `[n]`  | hub `0`, rim `1..=n` cyclic, `n >= 3`               |
//! | `petersen`       | `[]`   | outer 5-cycle `0..5`, inner pentagram `5..10`       |
//! | `truncated_cube` | `[]`   | vertex `3c + a`: cube corner `c`, axis `a`          |

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "star",
    "wheel",
    "petersen",
    "truncated_cube",
];

pub fn catalog_graph(name: &str, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Error::BadParams {
        name: name.to_string(),
        msg: msg.to_string(),
    };
    let one = |min: usize| -> Result<usize> {
        match params {
            [k] if *k >= min => Ok(*k),
            [_] => Err(bad(&format!("parameter must be at least {min}"))),
            _ => Err(bad("expected exactly one parameter")),
        }
    };
    let none = || -> Result<()> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(bad("takes no parameters"))
        }
    };
    match name {
        "path" => path(one(1)?),
        "cycle" => cycle(one(3)?),
        "complete" => complete(one(1)?),
        "star" => star(one(1)?),
        "wheel" => wheel(one(3)?),
        "petersen" => {
            none()?;
            petersen()
        }
        "truncated_cube" => {
            none()?;
            truncated_cube()
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

/// Edges ordered by gap `b - a`, then by `a`; `K3` comes out as
/// `v1v2, v2v3, v1v3`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for gap in 1..n {
        for a in 0..n - gap {
            edges.push((a, a + gap));
        }
    }
    Graph::new(n, &edges)
}

pub fn star(m: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
    Graph::new(m + 1, &edges)
}

pub fn wheel(rim: usize) -> Result<Graph> {
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    for i in 1..=rim {
        edges.push((i, i % rim + 1));
    }
    Graph::new(rim + 1, &edges)
}

pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges)
}

/// Truncated cube: each corner `c` (bits = coordinates) of the cube becomes a
/// triangle `{3c, 3c+1, 3c+2}`; vertex `3c + a` is joined to `3c' + a` where
/// `c'` is the neighbouring corner along axis `a`.
pub fn truncated_cube() -> Result<Graph> {
    let mut edges = Vec::with_capacity(36);
    for c in 0..8 {
        edges.push((3 * c, 3 * c + 1));
        edges.push((3 * c + 1, 3 * c + 2));
        edges.push((3 * c, 3 * c + 2));
    }
    for c in 0..8usize {
        for a in 0..3 {
            let d = c ^ (1 << a);
            if c < d {
                edges.push((3 * c + a, 3 * d + a));
            }
        }
    }
    Graph::new(24, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cases: &[(&str, &[usize], usize, usize)] = &[
            ("path", &[11], 11, 10),
            ("path", &[1], 1, 0),
            ("cycle", &[6], 6, 6),
            ("complete", &[3], 3, 3),
            ("star", &[3], 4, 3),
            ("wheel", &[5], 6, 10),
            ("petersen", &[], 10, 15),
            ("truncated_cube", &[], 24, 36),
        ];
        for &(name, params, n, m) in cases {
            let g = catalog_graph(name, params).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "{name}");
        }
    }

    #[test]
    fn path_distances() {
        let g = path(9).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(g.dist(i, j) as usize, i.abs_diff(j));
            }
        }
    }

    #[test]
    fn regularity() {
        let tc = truncated_cube().unwrap();
        assert!((0..24).all(|v| tc.degree(v) == 3));
        let p = petersen().unwrap();
        assert!((0..10).all(|v| p.degree(v) == 3));
        let w = wheel(4).unwrap();
        assert_eq!(w.degree(0), 4);
        assert!((1..5).all(|v| w.degree(v) == 3));
    }

    #[test]
    fn bad_input() {
        assert_eq!(
            catalog_graph("dodecahedron", &[]).unwrap_err(),
            Error::UnknownName("dodecahedron".into())
        );
        assert!(matches!(
            catalog_graph("cycle", &[2]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            catalog_graph("path", &[]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            catalog_graph("petersen", &[3]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            catalog_graph("star", &[0]),
            Err(Error::BadParams { .. })
        ));
    }
}
