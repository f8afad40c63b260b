//! Forbidden graphs built from C3 and Theta4, parametric families, the figure
//! fixtures, and a subgraph (not induced) matcher.

use std::fmt;
use std::str::FromStr;

use crate::embedding::plane::{from_drawing, PlaneGraph};
use crate::error::PatternError;
use crate::graph::{Edge, Graph};

/// Plane fixtures drawn in the theta-pair figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fixture {
    D1,
    D2,
    D3,
    D11,
    D12,
}

/// A named forbidden graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    Cycle(usize),
    Path(usize),
    Theta4,
    ThetaK(usize),
    Wheel(usize),
    Fan(usize),
    Friendship(usize),
    /// K1 joined to a disjoint union of paths with the given vertex counts.
    K1JoinLinearForest(Vec<usize>),
    /// K2 + M_t.
    MatchingPlus(usize),
    DisjointUnion(Box<PatternSpec>, Box<PatternSpec>),
    Fixture(Fixture),
}

fn invalid(name: &str, reason: &str) -> PatternError {
    PatternError::InvalidParameter {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn cycle_edges(vs: &[usize]) -> Vec<Edge> {
    (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect()
}

impl PatternSpec {
    pub fn build(&self) -> Result<Graph, PatternError> {
        let g = |n: usize, e: &[Edge]| Graph::from_edges(n, e).expect("pattern edge lists are simple");
        Ok(match self {
            PatternSpec::H1 => complete(4),
            PatternSpec::H2 => g(5, &[(0, 3), (3, 4), (4, 1), (0, 2), (2, 3), (4, 2), (2, 1)]),
            PatternSpec::H3 => g(
                5,
                &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 3), (3, 1), (0, 4), (4, 1)],
            ),
            // Theta4 on 0..4 with chord 0-2; triangle 0,4,5 at a chord end
            PatternSpec::H4 => g(
                6,
                &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 5), (5, 0), (0, 4)],
            ),
            // chord 1-3, so vertex 0 has degree 2 in the Theta4
            PatternSpec::H5 => g(
                6,
                &[(1, 2), (2, 3), (3, 0), (0, 1), (1, 3), (4, 5), (5, 0), (0, 4)],
            ),
            PatternSpec::H6 => complete(3).disjoint_union(&theta4()),
            PatternSpec::Cycle(k) => {
                if *k < 3 {
                    return Err(invalid("C", "cycle length must be at least 3"));
                }
                g(*k, &cycle_edges(&(0..*k).collect::<Vec<_>>()))
            }
            PatternSpec::Path(k) => {
                if *k < 1 {
                    return Err(invalid("P", "path needs at least one vertex"));
                }
                path(*k)
            }
            PatternSpec::Theta4 => theta4(),
            PatternSpec::ThetaK(k) => match k {
                4 => theta4(),
                5 => {
                    let mut e = cycle_edges(&[0, 1, 2, 3, 4]);
                    e.push((0, 2));
                    g(5, &e)
                }
                _ => return Err(invalid("Theta", "only Theta4 and Theta5 are single graphs")),
            },
            PatternSpec::Wheel(k) => {
                if *k < 3 {
                    return Err(invalid("W", "wheel needs a rim of length at least 3"));
                }
                let rim: Vec<usize> = (1..=*k).collect();
                let mut e = cycle_edges(&rim);
                e.extend(rim.iter().map(|&v| (0, v)));
                g(k + 1, &e)
            }
            PatternSpec::Fan(k) => {
                if *k < 2 {
                    return Err(invalid("F", "fan needs a path of at least 2 vertices"));
                }
                Graph::empty(1).join(&path(*k))
            }
            PatternSpec::Friendship(t) => {
                if *t < 1 {
                    return Err(invalid("Friendship", "t must be at least 1"));
                }
                let mut e = Vec::new();
                for i in 0..*t {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    e.extend([(0, a), (0, b), (a, b)]);
                }
                g(2 * t + 1, &e)
            }
            PatternSpec::K1JoinLinearForest(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid("K1+LF", "parts must be nonempty paths"));
                }
                let forest = parts
                    .iter()
                    .fold(Graph::empty(0), |acc, &p| acc.disjoint_union(&path(p)));
                Graph::empty(1).join(&forest)
            }
            PatternSpec::MatchingPlus(t) => {
                if *t < 1 {
                    return Err(invalid("K2+M", "t must be at least 1"));
                }
                complete(2).join(&matching(*t))
            }
            PatternSpec::DisjointUnion(a, b) => a.build()?.disjoint_union(&b.build()?),
            PatternSpec::Fixture(f) => fixture_plane(*f).graph().clone(),
        })
    }

    /// Short name used on the command line and in reports.
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::H1 => write!(f, "H1"),
            PatternSpec::H2 => write!(f, "H2"),
            PatternSpec::H3 => write!(f, "H3"),
            PatternSpec::H4 => write!(f, "H4"),
            PatternSpec::H5 => write!(f, "H5"),
            PatternSpec::H6 => write!(f, "H6"),
            PatternSpec::Cycle(k) => write!(f, "C{k}"),
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Theta4 => write!(f, "Theta4"),
            PatternSpec::ThetaK(k) => write!(f, "Theta{k}"),
            PatternSpec::Wheel(k) => write!(f, "W{k}"),
            PatternSpec::Fan(k) => write!(f, "F{k}"),
            PatternSpec::Friendship(t) => write!(f, "Friendship{t}"),
            PatternSpec::K1JoinLinearForest(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "K1+LF({})", parts.join(","))
            }
            PatternSpec::MatchingPlus(t) => write!(f, "K2+M{t}"),
            PatternSpec::DisjointUnion(a, b) => write!(f, "{a}|{b}"),
            PatternSpec::Fixture(x) => write!(f, "{x:?}"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    /// Accepts `H1`..`H6`, `C3+Theta4`, `Theta4`, `Theta{k}`, `C{k}`, `P{k}`,
    /// `W{k}`, `F{k}`, `Friendship{t}`, `K2+M{t}`, `K1+LF(a,b,..)`, `A|B` and
    /// the fixtures `D1`, `D2`, `D3`, `D11`, `D12`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || PatternError::UnknownName(s.to_string());
        let num = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
        if let Some((a, b)) = s.split_once('|') {
            return Ok(PatternSpec::DisjointUnion(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        if let Some(inner) = s.strip_prefix("K1+LF(").and_then(|r| r.strip_suffix(')')) {
            let parts = inner
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = PatternSpec::K1JoinLinearForest(parts);
            spec.build()?;
            return Ok(spec);
        }
        let spec = match s {
            "H1" => PatternSpec::H1,
            "H2" => PatternSpec::H2,
            "H3" => PatternSpec::H3,
            "H4" => PatternSpec::H4,
            "H5" => PatternSpec::H5,
            "H6" | "C3+Theta4" => PatternSpec::H6,
            "Theta4" => PatternSpec::Theta4,
            "D1" => PatternSpec::Fixture(Fixture::D1),
            "D2" => PatternSpec::Fixture(Fixture::D2),
            "D3" => PatternSpec::Fixture(Fixture::D3),
            "D11" => PatternSpec::Fixture(Fixture::D11),
            "D12" => PatternSpec::Fixture(Fixture::D12),
            _ => {
                if let Some(r) = s.strip_prefix("K2+M") {
                    PatternSpec::MatchingPlus(num(r)?)
                } else if let Some(r) = s.strip_prefix("Friendship") {
                    PatternSpec::Friendship(num(r)?)
                } else if let Some(r) = s.strip_prefix("Theta") {
                    PatternSpec::ThetaK(num(r)?)
                } else if let Some(r) = s.strip_prefix('C') {
                    PatternSpec::Cycle(num(r)?)
                } else if let Some(r) = s.strip_prefix('P') {
                    PatternSpec::Path(num(r)?)
                } else if let Some(r) = s.strip_prefix('W') {
                    PatternSpec::Wheel(num(r)?)
                } else if let Some(r) = s.strip_prefix('F') {
                    PatternSpec::Fan(num(r)?)
                } else {
                    return Err(unknown());
                }
            }
        };
        spec.build()?;
        Ok(spec)
    }
}

pub fn build_pattern(spec: &PatternSpec) -> Result<Graph, PatternError> {
    spec.build()
}

fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    Graph::from_edges(n, &e).expect("complete graph is simple")
}

fn path(k: usize) -> Graph {
    let e: Vec<Edge> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &e).expect("path is simple")
}

/// M_t: floor(t/2) disjoint edges, plus an isolated vertex when t is odd.
pub fn matching(t: usize) -> Graph {
    let e: Vec<Edge> = (0..t / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(t, &e).expect("matching is simple")
}

fn theta4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("theta is simple")
}

/// Vertex names of a fixture, in label order.
pub fn fixture_names(f: Fixture) -> &'static [&'static str] {
    match f {
        Fixture::D1 | Fixture::D2 | Fixture::D3 => &["u", "v", "a", "b", "x", "y"],
        Fixture::D11 => &["u", "v", "a", "b", "q", "x", "y"],
        Fixture::D12 => &["u", "v", "a", "b", "c", "x", "y"],
    }
}

/// The fixture as drawn, with the drawing's outer face. In D1, D2 and D3 the
/// pair is `e = uv` (0-1) and `f = ab` (2-3).
pub fn fixture_plane(f: Fixture) -> PlaneGraph {
    let (u, v, a, b) = (0, 1, 2, 3);
    let pg = match f {
        Fixture::D1 => {
            let (x, y) = (4, 5);
            from_drawing(
                6,
                &[(u, v), (a, b), (u, x), (u, y), (u, a), (u, b), (v, x), (v, y), (v, a), (v, b)],
                &[(-1.0, 0.6), (1.0, 0.6), (0.0, -0.5), (0.0, -1.3), (0.0, 1.1), (0.0, 0.1)],
                &[],
                &[u, x, v, b],
            )
        }
        Fixture::D2 => {
            let (x, y) = (4, 5);
            from_drawing(
                6,
                &[(u, v), (a, b), (x, u), (x, v), (x, a), (x, b), (y, u), (y, v), (y, a), (y, b)],
                &[(-0.1, 0.0), (0.6, 0.0), (1.5, 0.0), (2.2, 0.0), (1.05, 1.2), (1.05, -1.2)],
                &[],
                &[x, u, y, b],
            )
        }
        Fixture::D3 => {
            let (x, y) = (4, 5);
            from_drawing(
                6,
                &[(y, u), (y, v), (a, b), (x, v), (x, u), (x, a), (x, b), (u, v), (u, a), (u, b)],
                &[(0.8, 0.6), (-0.8, 1.1), (0.0, -0.3), (0.0, -1.3), (-0.8, 0.6), (0.8, 1.1)],
                &[],
                &[v, y, u, b, x],
            )
        }
        Fixture::D11 => {
            let (q, x, y) = (4, 5, 6);
            let mut e = vec![(u, v), (a, b), (b, q)];
            for w in [u, v, a, b, q] {
                e.push((x, w));
                e.push((y, w));
            }
            from_drawing(
                7,
                &e,
                &[(0.0, 0.0), (0.65, 0.0), (1.45, 0.0), (2.1, 0.0), (2.8, 0.0), (1.4, 1.2), (1.4, -1.2)],
                &[],
                &[x, u, y, q],
            )
        }
        Fixture::D12 => {
            let (c, x, y) = (4, 5, 6);
            let mut e = vec![(u, v), (a, b), (b, c), (c, x), (u, b), (u, c)];
            for w in [u, v, a, b] {
                e.push((x, w));
                e.push((y, w));
            }
            from_drawing(
                7,
                &e,
                &[(0.0, 0.0), (0.9, 0.0), (1.7, 0.0), (2.6, 0.0), (2.25, 0.85), (1.19, 1.0), (1.19, -1.0)],
                &[
                    ((u, b), (0.0, 1.0)),
                    ((b, u), (0.0, 1.0)),
                    ((u, c), (0.9, 1.5)),
                    ((c, u), (-1.35, 0.65)),
                ],
                &[u, b, y],
            )
        }
    };
    pg.expect("fixture drawings are plane")
}

/// Dense adjacency rows as bitsets, for fast host lookups.
struct Bits {
    words: usize,
    rows: Vec<u64>,
}

impl Bits {
    fn new(g: &Graph) -> Self {
        let words = g.order().div_ceil(64).max(1);
        let mut rows = vec![0u64; words * g.order()];
        for (u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Bits { words, rows }
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Matching order for pattern vertices: connected-first, highest degree first.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let k = h.order();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    bits: Bits,
    order: Vec<usize>,
    /// For each position, earlier pattern neighbors (by position).
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, order: Vec<usize>) -> Self {
        let mut pos = vec![0; h.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                h.neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&p| p < i)
                    .collect()
            })
            .collect();
        Matcher {
            g,
            h,
            bits: Bits::new(g),
            order,
            back,
            map: vec![usize::MAX; h.order()],
            used: vec![false; g.order()],
        }
    }

    fn feasible(&self, i: usize, x: usize) -> bool {
        let p = self.order[i];
        !self.used[x]
            && self.g.degree(x) >= self.h.degree(p)
            && self.back[i]
                .iter()
                .all(|&j| self.bits.has(x, self.map[self.order[j]]))
    }

    fn search(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let p = self.order[i];
        let candidates: Vec<usize> = match self.back[i].first() {
            Some(&j) => self.g.neighbors(self.map[self.order[j]]).to_vec(),
            None => (0..self.g.order()).collect(),
        };
        for x in candidates {
            if !self.feasible(i, x) {
                continue;
            }
            self.map[p] = x;
            self.used[x] = true;
            if self.search(i + 1) {
                return true;
            }
            self.used[x] = false;
            self.map[p] = usize::MAX;
        }
        false
    }
}

/// An injective map `witness[p]` from pattern vertices to host vertices that
/// carries every pattern edge onto a host edge, if one exists.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.order() > g.order() || h.size() > g.size() {
        return None;
    }
    if h.order() == 0 {
        return Some(Vec::new());
    }
    let mut m = Matcher::new(g, h, pattern_order(h));
    m.search(0).then_some(m.map)
}

pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_subgraph(g, h).is_some()
}

/// Looks only for copies of `h` that use host vertex `v`. When `g - v` is
/// known to be `h`-free this decides containment for all of `g`.
pub fn find_subgraph_through(g: &Graph, h: &Graph, v: usize) -> Option<Vec<usize>> {
    if h.order() > g.order() || h.size() > g.size() {
        return None;
    }
    for p in 0..h.order() {
        if h.degree(p) > g.degree(v) {
            continue;
        }
        // place p first, then the usual connected-first order
        let mut order = vec![p];
        let mut placed = vec![false; h.order()];
        placed[p] = true;
        while order.len() < h.order() {
            let next = (0..h.order())
                .filter(|&w| !placed[w])
                .max_by_key(|&w| {
                    let back = h.neighbors(w).iter().filter(|&&z| placed[z]).count();
                    (back, h.degree(w), std::cmp::Reverse(w))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut m = Matcher::new(g, h, order);
        if !m.feasible(0, v) {
            continue;
        }
        m.map[p] = v;
        m.used[v] = true;
        if m.search(1) {
            return Some(m.map);
        }
    }
    None
}

/// Pattern-freeness with cheap necessary-condition filters in front.
pub fn is_free(g: &Graph, h: &Graph) -> bool {
    if h.order() > g.order() || h.size() > g.size() || h.max_degree() > g.max_degree() {
        return true;
    }
    if h.triangle_count() > 0 && g.triangle_count() == 0 {
        return true;
    }
    !contains_subgraph(g, h)
}

pub fn is_free_spec(g: &Graph, spec: &PatternSpec) -> Result<bool, PatternError> {
    Ok(is_free(g, &spec.build()?))
}
