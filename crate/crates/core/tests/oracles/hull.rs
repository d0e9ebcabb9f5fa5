//! Exact convex hull facets of small integer point sets.

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for col in 0..n {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][col] * det(&minor);
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facets of the hull of full-dimensional integer points, each as the sorted
/// list of input indices of the hull vertices on it, together with the sorted
/// list of input indices that are vertices.
pub fn hull_facets(points: &[Vec<i64>]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let d = points[0].len();
    let mut planes: Vec<Vec<usize>> = Vec::new();
    for subset in combinations(points.len(), d) {
        let base = &points[subset[0]];
        let rows: Vec<Vec<i64>> = subset[1..]
            .iter()
            .map(|&i| (0..d).map(|j| points[i][j] - base[j]).collect())
            .collect();
        let normal: Vec<i64> = (0..d)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * det(&minor)
            })
            .collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let side = |p: &Vec<i64>| -> i64 { (0..d).map(|j| normal[j] * (p[j] - base[j])).sum() };
        let values: Vec<i64> = points.iter().map(side).collect();
        let pos = values.iter().any(|&v| v > 0);
        let neg = values.iter().any(|&v| v < 0);
        if pos && neg {
            continue;
        }
        let on: Vec<usize> = (0..points.len()).filter(|&i| values[i] == 0).collect();
        if !planes.contains(&on) {
            planes.push(on);
        }
    }
    // A point is a vertex iff the facets through it meet only in it.
    let vertices: Vec<usize> = (0..points.len())
        .filter(|&p| {
            let through: Vec<&Vec<usize>> = planes.iter().filter(|f| f.contains(&p)).collect();
            (0..points.len())
                .filter(|&q| through.iter().all(|f| f.contains(&q)))
                .count()
                == 1
        })
        .collect();
    let mut facets: Vec<Vec<usize>> = planes
        .into_iter()
        .map(|f| f.into_iter().filter(|p| vertices.contains(p)).collect())
        .collect();
    facets.sort();
    (vertices, facets)
}

/// Facets relabeled so that the `i`-th vertex becomes `i`.
pub fn hull_incidence(points: &[Vec<i64>]) -> (usize, Vec<Vec<usize>>) {
    let (vertices, facets) = hull_facets(points);
    let mut relabeled: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            f.iter()
                .map(|p| vertices.iter().position(|v| v == p).unwrap())
                .collect()
        })
        .collect();
    relabeled.sort();
    (vertices.len(), relabeled)
}

/// The Minkowski sum of the standard `d`-simplex with the segment from the
/// origin to `e_1 + e_2`, listed as `v` then `v + s` for each simplex vertex
/// `v`, minus the non-vertex point `s`.
pub fn pentasm_points(d: usize) -> Vec<Vec<i64>> {
    let mut simplex = vec![vec![0; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        simplex.push(e);
    }
    let mut pts = Vec::new();
    for v in &simplex {
        pts.push(v.clone());
        let mut w = v.clone();
        w[0] += 1;
        w[1] += 1;
        pts.push(w);
    }
    pts
}
