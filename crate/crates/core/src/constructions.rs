//! Parameterised graph constructions, their reference colorings, predicted
//! edge counts, and the closed-form bounds they are measured against.
//!
//! Vertex labels follow a fixed role order so that every built graph, and
//! every certificate derived from it, is reproducible:
//!
//! * `J(a, b, c)`: `y, z`, then `A`, `B`, `C`.
//! * `GEven(n)`: `y, z, y1, y2, y3, z1, z2, z3`, then the `n/2 - 4` matching edges of `H`.
//! * `GOdd(n)`: `y, z, y1..y4, z1..z3`, then the `(n-1)/2 - 4` matching edges of `H`.
//! * `General(k, n)`: `y, z, u, w`, then `H1, H2` (`K_{k-2}`), `H3, H4`
//!   (`K_{⌈k/2⌉-1}`), `s` copies of `K_{⌈k/2⌉}` and `t` copies of `K_{⌈k/2⌉+1}`.

use std::fmt;

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConstructionSpec {
    /// `K_{1, n-1}`.
    Star { n: usize },
    J { a: usize, b: usize, c: usize },
    /// `C5` with vertex `i` blown up into an independent set of `multiplicities[i]` copies.
    C5Dup { multiplicities: [usize; 5] },
    Petersen,
    GEven { n: usize },
    GOdd { n: usize },
    General { k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Y,
    Z,
    U,
    W,
    /// `y_i`, 1-based.
    YIndexed(usize),
    /// `z_i`, 1-based.
    ZIndexed(usize),
    A,
    B,
    C,
    /// Member of the i-th (1-based) clique of `H`.
    H(usize),
    Center,
    Leaf,
    /// Blow-up class of the underlying 5-cycle.
    Class(usize),
    Outer,
    Inner,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Y => write!(f, "y"),
            Role::Z => write!(f, "z"),
            Role::U => write!(f, "u"),
            Role::W => write!(f, "w"),
            Role::YIndexed(i) => write!(f, "y{i}"),
            Role::ZIndexed(i) => write!(f, "z{i}"),
            Role::A => write!(f, "A"),
            Role::B => write!(f, "B"),
            Role::C => write!(f, "C"),
            Role::H(i) => write!(f, "H{i}"),
            Role::Center => write!(f, "center"),
            Role::Leaf => write!(f, "leaf"),
            Role::Class(i) => write!(f, "X{i}"),
            Role::Outer => write!(f, "outer"),
            Role::Inner => write!(f, "inner"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BuiltConstruction {
    pub spec: ConstructionSpec,
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// The tree order `k` the construction is designed for, if any.
    pub k: Option<usize>,
    pub reference_coloring: Option<TwoColoring>,
    pub warnings: Vec<String>,
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `⌈k/2⌉`.
pub fn half_up(k: usize) -> usize {
    k.div_ceil(2)
}

/// Size parameters of `General(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneralParams {
    pub half: usize,
    pub s: usize,
    pub t: usize,
    /// Smallest admissible `n`: `2k + (⌈k/2⌉ + 1)⌈k/2⌉ - 2`.
    pub n_min: usize,
    /// True for `n_min <= n < n_min + 4`, where two published thresholds disagree.
    pub ambiguous_range: bool,
}

pub fn general_min_n(k: usize) -> usize {
    let h = half_up(k);
    2 * k + (h + 1) * h - 2
}

pub fn general_params(k: usize, n: usize) -> Result<GeneralParams> {
    if k < 5 {
        return Err(invalid(format!("General needs k >= 5, got k = {k}")));
    }
    let n_min = general_min_n(k);
    if n < n_min {
        return Err(invalid(format!(
            "General({k}, n) needs n >= 2k + (⌈k/2⌉+1)⌈k/2⌉ - 2 = {n_min}, got n = {n}"
        )));
    }
    let half = half_up(k);
    // s·h + t·(h+1) = rest with t = rest mod h
    let rest = n - 2 * k - 2 * half + 2;
    let t = rest % half;
    let s = rest
        .checked_sub(t * (half + 1))
        .ok_or_else(|| invalid(format!("General({k}, {n}) forces s < 0")))?
        / half;
    Ok(GeneralParams {
        half,
        s,
        t,
        n_min,
        ambiguous_range: n < n_min + 4,
    })
}

impl ConstructionSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionSpec::Star { n } if n < 2 => Err(invalid("Star needs n >= 2")),
            ConstructionSpec::J { a, b, c } => {
                if a < 1 {
                    return Err(invalid("J needs |A| >= 1"));
                }
                if (b == 0) != (c == 0) {
                    return Err(invalid("J needs B and C both empty or both non-empty"));
                }
                Ok(())
            }
            ConstructionSpec::C5Dup { multiplicities } if multiplicities.contains(&0) => {
                Err(invalid("C5Dup multiplicities must be positive"))
            }
            ConstructionSpec::GEven { n } if n < 8 || n % 2 != 0 => {
                Err(invalid(format!("GEven needs even n >= 8, got {n}")))
            }
            ConstructionSpec::GOdd { n } if n < 9 || n % 2 != 1 => {
                Err(invalid(format!("GOdd needs odd n >= 9, got {n}")))
            }
            ConstructionSpec::General { k, n } => general_params(k, n).map(|_| ()),
            _ => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            ConstructionSpec::Star { n }
            | ConstructionSpec::GEven { n }
            | ConstructionSpec::GOdd { n }
            | ConstructionSpec::General { n, .. } => n,
            ConstructionSpec::J { a, b, c } => a + b + c + 2,
            ConstructionSpec::C5Dup { multiplicities } => multiplicities.iter().sum(),
            ConstructionSpec::Petersen => 10,
        }
    }

    pub fn target_k(&self) -> Option<usize> {
        match *self {
            ConstructionSpec::GEven { .. } | ConstructionSpec::GOdd { .. } => Some(4),
            ConstructionSpec::General { k, .. } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Star { n } => write!(f, "Star({n})"),
            ConstructionSpec::J { a, b, c } => write!(f, "J({a}, {b}, {c})"),
            ConstructionSpec::C5Dup { multiplicities: m } => {
                write!(f, "C5Dup({}, {}, {}, {}, {})", m[0], m[1], m[2], m[3], m[4])
            }
            ConstructionSpec::Petersen => write!(f, "Petersen"),
            ConstructionSpec::GEven { n } => write!(f, "GEven({n})"),
            ConstructionSpec::GOdd { n } => write!(f, "GOdd({n})"),
            ConstructionSpec::General { k, n } => write!(f, "General({k}, {n})"),
        }
    }
}

/// Accumulates labelled vertices and edges for a construction.
struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            roles: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, r: Role) -> usize {
        self.roles.push(r);
        self.roles.len() - 1
    }

    fn group(&mut self, r: Role, size: usize) -> Vec<usize> {
        (0..size).map(|_| self.vertex(r)).collect()
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn join(&mut self, x: usize, to: &[usize]) {
        self.edges.extend(to.iter().map(|&v| (x, v)));
    }

    fn complete_between(&mut self, xs: &[usize], ys: &[usize]) {
        for &x in xs {
            self.join(x, ys);
        }
    }

    fn finish(self) -> (Graph, Vec<Role>) {
        let n = self.roles.len();
        (Graph::from_edges(n, self.edges).expect("constructions are simple graphs"), self.roles)
    }
}

/// Labels of the matching/clique components of `H` in a build, in order.
fn h_components(roles: &[Role]) -> Vec<Vec<usize>> {
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for (v, r) in roles.iter().enumerate() {
        if let Role::H(i) = *r {
            if comps.len() < i {
                comps.resize(i, Vec::new());
            }
            comps[i - 1].push(v);
        }
    }
    comps
}

pub fn build(spec: &ConstructionSpec) -> Result<BuiltConstruction> {
    spec.validate()?;
    let mut b = Builder::new();
    let mut warnings = Vec::new();
    match *spec {
        ConstructionSpec::Star { n } => {
            let c = b.vertex(Role::Center);
            let leaves = b.group(Role::Leaf, n - 1);
            b.join(c, &leaves);
        }
        ConstructionSpec::J { a, b: nb, c: nc } => {
            let y = b.vertex(Role::Y);
            let z = b.vertex(Role::Z);
            let av = b.group(Role::A, a);
            let bv = b.group(Role::B, nb);
            let cv = b.group(Role::C, nc);
            b.join(y, &av);
            b.join(y, &bv);
            b.join(z, &av);
            b.join(z, &cv);
            b.complete_between(&bv, &cv);
        }
        ConstructionSpec::C5Dup { multiplicities } => {
            let classes: Vec<Vec<usize>> = (0..5)
                .map(|i| b.group(Role::Class(i), multiplicities[i]))
                .collect();
            for i in 0..5 {
                b.complete_between(&classes[i], &classes[(i + 1) % 5]);
            }
        }
        ConstructionSpec::Petersen => {
            let outer = b.group(Role::Outer, 5);
            let inner = b.group(Role::Inner, 5);
            for i in 0..5 {
                b.edges.push((outer[i], outer[(i + 1) % 5]));
                b.edges.push((outer[i], inner[i]));
                b.edges.push((inner[i], inner[(i + 2) % 5]));
            }
        }
        ConstructionSpec::GEven { n } => {
            let y = b.vertex(Role::Y);
            let z = b.vertex(Role::Z);
            let ys = [1, 2, 3].map(|i| b.vertex(Role::YIndexed(i)));
            let zs = [1, 2, 3].map(|i| b.vertex(Role::ZIndexed(i)));
            let h = matching(&mut b, n / 2 - 4);
            b.join(y, &h);
            b.join(y, &[ys[0], ys[1], ys[2], zs[0], zs[1], zs[2]]);
            b.join(z, &h);
            b.join(z, &[ys[0], ys[1], ys[2], zs[0], zs[1]]);
            b.join(ys[0], &[ys[1], zs[0], zs[1], zs[2]]);
            b.join(ys[1], &[zs[0], zs[1], zs[2]]);
            b.join(zs[0], &[zs[1]]);
            b.join(zs[2], &[ys[2]]);
        }
        ConstructionSpec::GOdd { n } => {
            let y = b.vertex(Role::Y);
            let z = b.vertex(Role::Z);
            let ys = [1, 2, 3, 4].map(|i| b.vertex(Role::YIndexed(i)));
            let zs = [1, 2, 3].map(|i| b.vertex(Role::ZIndexed(i)));
            let h = matching(&mut b, (n - 1) / 2 - 4);
            b.join(y, &h);
            b.join(y, &[ys[0], zs[0], zs[1], zs[2]]);
            b.join(z, &h);
            b.join(z, &[ys[0], ys[1], ys[2], ys[3], zs[0], zs[1], zs[2]]);
            b.join(zs[0], &[ys[0], ys[1], ys[2], ys[3], zs[1]]);
            b.join(zs[1], &[ys[0], ys[1], ys[2], ys[3]]);
            b.join(ys[1], &[ys[2]]);
            b.join(ys[3], &[zs[2]]);
        }
        ConstructionSpec::General { k, n } => {
            let p = general_params(k, n)?;
            if p.ambiguous_range {
                warnings.push(format!(
                    "n = {n} lies below 2k + (⌈k/2⌉+1)⌈k/2⌉ + 2 = {}; only the weaker threshold holds",
                    p.n_min + 4
                ));
            }
            let y = b.vertex(Role::Y);
            let z = b.vertex(Role::Z);
            let u = b.vertex(Role::U);
            let w = b.vertex(Role::W);
            let mut sizes = vec![k - 2, k - 2, p.half - 1, p.half - 1];
            sizes.extend(std::iter::repeat_n(p.half, p.s));
            sizes.extend(std::iter::repeat_n(p.half + 1, p.t));
            let comps: Vec<Vec<usize>> = sizes
                .iter()
                .enumerate()
                .map(|(i, &sz)| b.group(Role::H(i + 1), sz))
                .collect();
            for c in &comps {
                b.clique(c);
            }
            let all_h: Vec<usize> = comps.iter().flatten().copied().collect();
            b.complete_between(&comps[0], &comps[1]);
            b.join(y, &all_h);
            b.join(y, &[w]);
            b.join(z, &all_h);
            b.join(z, &[u]);
            b.join(u, &[w]);
            b.join(u, &comps[1]);
            b.join(u, &comps[2]);
            b.join(w, &comps[0]);
            b.join(w, &comps[3]);
        }
    }
    let (graph, roles) = b.finish();
    let mut built = BuiltConstruction {
        spec: *spec,
        graph,
        roles,
        k: spec.target_k(),
        reference_coloring: None,
        warnings,
    };
    if built.k.is_some() {
        built.reference_coloring = Some(reference_coloring_of(&built)?);
    }
    Ok(built)
}

fn matching(b: &mut Builder, pairs: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(2 * pairs);
    for i in 1..=pairs {
        let p = b.group(Role::H(i), 2);
        b.edges.push((p[0], p[1]));
        out.extend(p);
    }
    out
}

fn find_role(roles: &[Role], r: Role) -> usize {
    roles.iter().position(|&x| x == r).expect("role present")
}

fn reference_coloring_of(built: &BuiltConstruction) -> Result<TwoColoring> {
    let roles = &built.roles;
    let at = |r: Role| find_role(roles, r);
    let mut blue: Vec<(usize, usize)> = Vec::new();
    let h = h_components(roles);
    for comp in &h {
        for (i, &a) in comp.iter().enumerate() {
            for &c in &comp[i + 1..] {
                blue.push((a, c));
            }
        }
    }
    let (y, z) = (at(Role::Y), at(Role::Z));
    let yi = |i| at(Role::YIndexed(i));
    let zi = |i| at(Role::ZIndexed(i));
    match built.spec {
        ConstructionSpec::GEven { .. } => {
            blue.extend([(y, yi(1)), (y, yi(2)), (yi(1), yi(2))]);
            blue.extend([(z, zi(1)), (z, zi(2)), (zi(1), zi(2))]);
            blue.push((yi(3), zi(3)));
        }
        ConstructionSpec::GOdd { .. } => {
            blue.extend([(z, zi(1)), (z, zi(2)), (zi(1), zi(2))]);
            blue.extend([(y, yi(1)), (yi(2), yi(3)), (yi(4), zi(3))]);
        }
        ConstructionSpec::General { .. } => {
            let (u, w) = (at(Role::U), at(Role::W));
            for (apex, comp) in [(y, &h[0]), (z, &h[1]), (u, &h[2]), (w, &h[3])] {
                blue.extend(comp.iter().map(|&v| (apex, v)));
            }
        }
        _ => unreachable!("only constructions with a target k carry a reference coloring"),
    }
    TwoColoring::with_blue_pairs(&built.graph, &blue)
}

/// The designed bad coloring of `GEven`, `GOdd` and `General`.
pub fn reference_coloring(spec: &ConstructionSpec) -> Result<TwoColoring> {
    if spec.target_k().is_none() {
        return Err(Error::Unsupported(format!("{spec} has no reference coloring")));
    }
    Ok(build(spec)?.reference_coloring.expect("set for targeted constructions"))
}

/// Edge count predicted by summing the join lists of each construction.
pub fn predicted_edge_count(spec: &ConstructionSpec) -> Result<usize> {
    spec.validate()?;
    Ok(match *spec {
        ConstructionSpec::Star { n } => n - 1,
        ConstructionSpec::J { a, b, c } => 2 * a + b + c + b * c,
        ConstructionSpec::C5Dup { multiplicities: m } => (0..5).map(|i| m[i] * m[(i + 1) % 5]).sum(),
        ConstructionSpec::Petersen => 15,
        ConstructionSpec::GEven { n } => 5 * n / 2,
        ConstructionSpec::GOdd { n } => (5 * n - 1) / 2,
        ConstructionSpec::General { k, n } => {
            let p = general_params(k, n)?;
            let h = p.half;
            let inside_h = 2 * choose2(k - 2) + 2 * choose2(h - 1) + p.s * choose2(h) + p.t * choose2(h + 1);
            let h1_h2 = (k - 2) * (k - 2);
            let y_and_z = 2 * (n - 3);
            let u_extra = 1 + (k - 2) + (h - 1);
            let w_extra = (k - 2) + (h - 1);
            inside_h + h1_h2 + y_and_z + u_extra + w_extra
        }
    })
}

/// Closed form for `General(k, n)` that charges the apexes `y`, `z` with
/// `n - 2` neighbours each. Both have degree `n - 3` in the built graph, so
/// this overshoots the true count by exactly 2. Kept as a diagnostic.
pub fn uncorrected_formula_edge_count(k: usize, n: usize) -> Result<usize> {
    let p = general_params(k, n)?;
    let h = p.half;
    Ok(2 * (n - 2)
        + choose2(2 * k - 4)
        + (2 * (k - 2) + 1)
        + (p.s + 2) * choose2(h)
        + p.t * choose2(h + 1))
}

/// Lower and upper bounds on the saturation number for `(K3, T_k)` at `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeBounds {
    /// `3/2 + ⌈k/2⌉/2`.
    pub slope: f64,
    pub c_lower: f64,
    pub c_upper: f64,
    pub lower: f64,
    pub upper: f64,
}

/// All quantities are multiples of 1/2, so `f64` holds them exactly.
pub fn edge_bounds(k: usize, n: usize) -> Result<EdgeBounds> {
    general_params(k, n)?;
    let h = half_up(k) as f64;
    let kf = k as f64;
    let slope = 1.5 + h / 2.0;
    let c_lower = (h / 2.0 + 1.5) * kf - 2.0;
    let c_upper = 2.0 * kf * kf - 6.0 * kf + 1.5 - h * (kf - h / 2.0 - 1.0);
    Ok(EdgeBounds {
        slope,
        c_lower,
        c_upper,
        lower: slope * n as f64 - c_lower,
        upper: slope * n as f64 + c_upper,
    })
}

/// Upper bound for `sat(n, R_min(K_t, T_k))` for a fixed tree `T_k`.
pub fn fixed_tree_upper_bound(t: usize, k: usize, n: usize) -> Result<i64> {
    if t < 2 || k < 2 {
        return Err(invalid("need t >= 2 and k >= 2"));
    }
    let c2 = |x: i64| x * (x - 1) / 2;
    let (t, k, n) = (t as i64, k as i64, n as i64);
    let q = (t - 2) * (k - 1);
    let r = n % (k - 1);
    Ok(n * q - q * q + c2(q) + (n / (k - 1)) * c2(k - 1) + c2(r))
}

/// `⌊5n/2⌋`, valid from `n = 18`.
pub fn k3t4_sat_value(n: usize) -> Result<usize> {
    if n < 18 {
        return Err(invalid(format!("value known only for n >= 18, got {n}")));
    }
    Ok(5 * n / 2)
}

/// `⌊5n/2⌋ - 5`, valid from `n = 11`.
pub fn k3p3_sat_value(n: usize) -> Result<usize> {
    if n < 11 {
        return Err(invalid(format!("value known only for n >= 11, got {n}")));
    }
    Ok(5 * n / 2 - 5)
}

/// Conjectured value: `C(n, 2)` below `r`, else `(r-2)(n-r+2) + C(r-2, 2)`.
pub fn conjectured_clique_sat_value(r: usize, n: usize) -> Result<usize> {
    if r < 3 {
        return Err(invalid("r must be at least 3"));
    }
    Ok(if n < r {
        choose2(n)
    } else {
        (r - 2) * (n - r + 2) + choose2(r - 2)
    })
}

/// A fixed spread of valid specs covering every construction kind.
pub fn catalog() -> Vec<ConstructionSpec> {
    use ConstructionSpec::*;
    let mut out = vec![
        Star { n: 2 },
        Star { n: 10 },
        J { a: 1, b: 0, c: 0 },
        J { a: 4, b: 2, c: 3 },
        J { a: 6, b: 1, c: 1 },
        C5Dup { multiplicities: [1, 1, 1, 1, 1] },
        C5Dup { multiplicities: [3, 1, 2, 1, 1] },
        Petersen,
    ];
    out.extend((8..=24).step_by(2).map(|n| GEven { n }));
    out.extend((9..=25).step_by(2).map(|n| GOdd { n }));
    for k in 5..=8 {
        let lo = general_min_n(k);
        out.extend((lo..lo + 4).map(|n| General { k, n }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_bad_coloring;

    #[test]
    fn edge_count_examples() {
        let e = |s: ConstructionSpec| build(&s).unwrap().graph.m();
        assert_eq!(e(ConstructionSpec::GEven { n: 18 }), 45);
        assert_eq!(e(ConstructionSpec::GOdd { n: 19 }), 47);
        assert_eq!(e(ConstructionSpec::General { k: 5, n: 20 }), 68);
        let j = build(&ConstructionSpec::J { a: 4, b: 2, c: 3 }).unwrap();
        assert_eq!((j.graph.n(), j.graph.m()), (11, 19));
        assert_eq!(j.graph.m(), 2 * 11 - 3);
    }

    #[test]
    fn predicted_examples() {
        let p = |s| predicted_edge_count(&s).unwrap();
        assert_eq!(p(ConstructionSpec::J { a: 6, b: 1, c: 1 }), 15);
        assert_eq!(p(ConstructionSpec::GEven { n: 18 }), 45);
        assert_eq!(p(ConstructionSpec::General { k: 5, n: 23 }), 77);
        assert_eq!(p(ConstructionSpec::General { k: 5, n: 20 }), 68);
    }

    #[test]
    fn predicted_matches_built_on_catalog() {
        for spec in catalog() {
            let b = build(&spec).unwrap();
            assert_eq!(b.graph.m(), predicted_edge_count(&spec).unwrap(), "{spec}");
            assert_eq!(b.graph.n(), spec.n(), "{spec}");
            assert_eq!(b.roles.len(), spec.n());
        }
    }

    #[test]
    fn reference_colorings_are_bad() {
        for spec in catalog() {
            let b = build(&spec).unwrap();
            if let (Some(k), Some(c)) = (b.k, &b.reference_coloring) {
                assert!(is_bad_coloring(&b.graph, k, c).unwrap(), "{spec}");
            }
        }
    }

    #[test]
    fn godd_reference_has_blue_z_triangle() {
        let b = build(&ConstructionSpec::GOdd { n: 19 }).unwrap();
        let c = b.reference_coloring.unwrap();
        let at = |r| find_role(&b.roles, r);
        for (p, q) in [
            (at(Role::Z), at(Role::ZIndexed(1))),
            (at(Role::Z), at(Role::ZIndexed(2))),
            (at(Role::ZIndexed(1)), at(Role::ZIndexed(2))),
        ] {
            let i = b.graph.edge_index(p, q).unwrap();
            assert_eq!(c.get(i), crate::Color::Blue);
        }
    }

    #[test]
    fn general_h1_edges_in_2k_minus_3_triangles() {
        let b = build(&ConstructionSpec::General { k: 5, n: 20 }).unwrap();
        let h1: Vec<usize> = (0..20).filter(|&v| b.roles[v] == Role::H(1)).collect();
        assert_eq!(h1.len(), 3);
        let i = b.graph.edge_index(h1[0], h1[1]).unwrap();
        assert_eq!(b.graph.triangles_through_edge(i).unwrap(), 7);
    }

    #[test]
    fn general_parameters() {
        let p = general_params(5, 20).unwrap();
        assert_eq!((p.half, p.s, p.t, p.n_min), (3, 2, 0, 20));
        assert!(p.ambiguous_range);
        let p = general_params(5, 23).unwrap();
        assert_eq!((p.s, p.t), (3, 0));
        assert!(!general_params(5, 24).unwrap().ambiguous_range);
        let p = general_params(6, 22).unwrap();
        assert_eq!((p.half, p.s, p.t), (3, 2, 0));
        let p = general_params(6, 23).unwrap();
        assert_eq!((p.s, p.t), (1, 1));
        assert!(general_params(5, 19).is_err());
        assert!(general_params(4, 30).is_err());
    }

    #[test]
    fn uncorrected_formula_overshoots_by_two() {
        assert_eq!(uncorrected_formula_edge_count(5, 20).unwrap(), 70);
        for k in 5..=9 {
            let lo = general_min_n(k);
            for n in lo..lo + 10 {
                let built = build(&ConstructionSpec::General { k, n }).unwrap().graph.m();
                assert_eq!(uncorrected_formula_edge_count(k, n).unwrap(), built + 2);
            }
        }
    }

    #[test]
    fn bounds_at_k5() {
        let b = edge_bounds(5, 20).unwrap();
        assert_eq!(b.c_lower, 13.0);
        assert_eq!(b.lower, 47.0);
        assert_eq!(b.c_upper, 14.0);
        assert_eq!(b.upper, 74.0);
        assert!(edge_bounds(5, 19).is_err());
    }

    #[test]
    fn fixed_tree_upper_bound_examples() {
        assert_eq!(fixed_tree_upper_bound(2, 4, 10).unwrap(), 9);
        assert_eq!(fixed_tree_upper_bound(2, 2, 5).unwrap(), 0);
        assert_eq!(fixed_tree_upper_bound(3, 3, 10).unwrap(), 22);
        assert!(fixed_tree_upper_bound(1, 3, 10).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(k3t4_sat_value(18).unwrap(), 45);
        assert_eq!(k3t4_sat_value(19).unwrap(), 47);
        assert!(k3t4_sat_value(17).is_err());
        assert_eq!(k3p3_sat_value(11).unwrap(), 22);
        assert!(k3p3_sat_value(10).is_err());
        assert_eq!(conjectured_clique_sat_value(6, 5).unwrap(), 10);
        assert_eq!(conjectured_clique_sat_value(6, 56).unwrap(), 214);
        assert_eq!(conjectured_clique_sat_value(6, 6).unwrap(), 14);
        assert!(conjectured_clique_sat_value(2, 6).is_err());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        use ConstructionSpec::*;
        for bad in [
            J { a: 0, b: 1, c: 1 },
            J { a: 2, b: 1, c: 0 },
            GEven { n: 6 },
            GEven { n: 19 },
            GOdd { n: 7 },
            GOdd { n: 18 },
            General { k: 4, n: 40 },
            General { k: 5, n: 19 },
            C5Dup { multiplicities: [1, 0, 1, 1, 1] },
            Star { n: 1 },
        ] {
            assert!(build(&bad).is_err(), "{bad}");
        }
        assert!(reference_coloring(&Petersen).is_err());
    }

    #[test]
    fn general_warns_in_ambiguous_range() {
        assert_eq!(build(&ConstructionSpec::General { k: 5, n: 21 }).unwrap().warnings.len(), 1);
        assert!(build(&ConstructionSpec::General { k: 5, n: 24 }).unwrap().warnings.is_empty());
    }
}
