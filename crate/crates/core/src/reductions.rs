//! The 3-SAT to metric dimension reduction: a formula with `n` variables and
//! `m` clauses becomes a graph on `6n + 5m` vertices whose metric dimension
//! is `n + m` exactly when the formula is satisfiable.
//!
//! Vertex numbering: variable `i` owns the block `6i..6i+6` in cycle order
//! `T, a1, b1, F, b2, a2`; clause `j` owns `6n + 5j .. 6n + 5j + 5` in order
//! `c1, c2, c3, c4, c5`, with `c2` the centre of the star.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::resolving::is_resolving;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, negated: true }
    }

    /// DIMACS form: `var + 1`, negative when negated.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn from_dimacs(x: i64) -> Result<Literal> {
        if x == 0 {
            return Err(Error::parse("literal 0 is the clause terminator"));
        }
        Ok(Literal { var: x.unsigned_abs() as usize - 1, negated: x < 0 })
    }

    fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// A CNF formula with exactly three literals over distinct variables per
/// clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl SatFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<SatFormula> {
        if num_vars == 0 {
            return Err(Error::input("a formula needs at least one variable"));
        }
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::input(format!("clause {j} uses variable {} but there are {num_vars}", l.var + 1)));
            }
            if c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var {
                return Err(Error::input(format!("clause {j} repeats a variable")));
            }
        }
        Ok(SatFormula { num_vars, clauses })
    }

    /// Build from DIMACS-style literals, e.g. `[[1, -2, 3], [2, 3, -4]]`.
    pub fn from_ints(num_vars: usize, clauses: &[[i64; 3]]) -> Result<SatFormula> {
        let clauses = clauses
            .iter()
            .map(|c| Ok([Literal::from_dimacs(c[0])?, Literal::from_dimacs(c[1])?, Literal::from_dimacs(c[2])?]))
            .collect::<Result<Vec<_>>>()?;
        SatFormula::new(num_vars, clauses)
    }

    /// Parse `p cnf n m` followed by 0-terminated clauses; `c` lines are
    /// comments.
    pub fn from_dimacs(text: &str) -> Result<SatFormula> {
        let mut header: Option<(usize, usize)> = None;
        let mut lits: Vec<i64> = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                match f[..] {
                    ["cnf", n, m] => {
                        let n = n.parse().map_err(|_| Error::parse(format!("bad variable count '{n}'")))?;
                        let m = m.parse().map_err(|_| Error::parse(format!("bad clause count '{m}'")))?;
                        header = Some((n, m));
                    }
                    _ => return Err(Error::parse(format!("bad header '{line}'"))),
                }
                continue;
            }
            if header.is_none() {
                return Err(Error::parse("clause before the 'p cnf' header"));
            }
            for tok in line.split_whitespace() {
                lits.push(tok.parse().map_err(|_| Error::parse(format!("bad literal '{tok}'")))?);
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse("missing 'p cnf' header"))?;
        let mut clauses = Vec::new();
        for chunk in lits.split(|&x| x == 0) {
            match chunk.len() {
                0 => continue,
                3 => clauses.push([chunk[0], chunk[1], chunk[2]]),
                k => return Err(Error::input(format!("clause with {k} literals; exactly 3 are required"))),
            }
        }
        if lits.last().is_some_and(|&x| x != 0) {
            return Err(Error::parse("last clause is not 0-terminated"));
        }
        if clauses.len() != m {
            return Err(Error::parse(format!("header announces {m} clauses, found {}", clauses.len())));
        }
        SatFormula::from_ints(n, &clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s += &format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs());
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.num_vars {
            return Err(Error::input(format!("assignment has {} values for {} variables", assignment.len(), self.num_vars)));
        }
        Ok(self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment))))
    }

    /// Every satisfying assignment, by counting through all `2^n`.
    pub fn satisfying_assignments(&self) -> Vec<Vec<bool>> {
        assert!(self.num_vars < 32, "exhaustive enumeration only for small formulas");
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|a| self.is_satisfied_by(a).expect("length matches"))
            .collect()
    }
}

/// Gadget vertices, with 0-based variable / clause indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    T(usize),
    A1(usize),
    B1(usize),
    F(usize),
    B2(usize),
    A2(usize),
    /// `C(k, j)` is `c^k_j`, `k` in `1..=5`.
    C(u8, usize),
}

impl fmt::Display for Role {
    /// Names use 1-based indices, as in DIMACS: `T_1`, `a1_1`, `c4_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::T(i) => write!(f, "T_{}", i + 1),
            Role::A1(i) => write!(f, "a1_{}", i + 1),
            Role::B1(i) => write!(f, "b1_{}", i + 1),
            Role::F(i) => write!(f, "F_{}", i + 1),
            Role::B2(i) => write!(f, "b2_{}", i + 1),
            Role::A2(i) => write!(f, "a2_{}", i + 1),
            Role::C(k, j) => write!(f, "c{}_{}", k, j + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub formula: SatFormula,
}

impl ReductionGraph {
    pub fn vertex(&self, role: Role) -> Vertex {
        let n = self.formula.num_vars;
        match role {
            Role::T(i) => 6 * i,
            Role::A1(i) => 6 * i + 1,
            Role::B1(i) => 6 * i + 2,
            Role::F(i) => 6 * i + 3,
            Role::B2(i) => 6 * i + 4,
            Role::A2(i) => 6 * i + 5,
            Role::C(k, j) => 6 * n + 5 * j + (k as usize - 1),
        }
    }

    pub fn role(&self, v: Vertex) -> Role {
        let n = self.formula.num_vars;
        if v < 6 * n {
            let i = v / 6;
            [Role::T(i), Role::A1(i), Role::B1(i), Role::F(i), Role::B2(i), Role::A2(i)][v % 6]
        } else {
            let w = v - 6 * n;
            Role::C((w % 5 + 1) as u8, w / 5)
        }
    }

    /// `(name, vertex)` for every vertex, in vertex order.
    pub fn labels(&self) -> Vec<(String, Vertex)> {
        (0..self.graph.n()).map(|v| (self.role(v).to_string(), v)).collect()
    }
}

pub fn sat_to_graph(f: &SatFormula) -> ReductionGraph {
    let (n, m) = (f.num_vars, f.clauses.len());
    let base = |i: usize| 6 * i;
    let clause = |j: usize, k: usize| 6 * n + 5 * j + (k - 1);
    let mut edges = Vec::new();
    for i in 0..n {
        for s in 0..6 {
            edges.push((base(i) + s, base(i) + (s + 1) % 6));
        }
    }
    for j in 0..m {
        for k in [1, 3, 4, 5] {
            edges.push((clause(j, 2), clause(j, k)));
        }
    }
    for (j, c) in f.clauses.iter().enumerate() {
        for i in 0..n {
            let (t, fv) = (base(i), base(i) + 3);
            edges.push((t, clause(j, 1)));
            edges.push((fv, clause(j, 1)));
            match c.iter().find(|l| l.var == i) {
                Some(l) if !l.negated => edges.push((fv, clause(j, 3))),
                Some(_) => edges.push((t, clause(j, 3))),
                None => edges.extend([(fv, clause(j, 3)), (t, clause(j, 3))]),
            }
        }
    }
    let graph = Graph::new(6 * n + 5 * m, edges).expect("gadget edges are distinct");
    ReductionGraph { graph, formula: f.clone() }
}

/// `{c4_j} ∪ {a1_i : x_i true} ∪ {b1_i : x_i false}`, returned sorted, with
/// whether it resolves the graph (guaranteed when the assignment satisfies
/// the formula).
pub fn assignment_to_resolving_set(rg: &ReductionGraph, assignment: &[bool]) -> Result<(VertexSet, bool)> {
    rg.formula.is_satisfied_by(assignment)?;
    let mut set: Vec<Vertex> = (0..rg.formula.clauses.len()).map(|j| rg.vertex(Role::C(4, j))).collect();
    for (i, &x) in assignment.iter().enumerate() {
        set.push(rg.vertex(if x { Role::A1(i) } else { Role::B1(i) }));
    }
    set.sort_unstable();
    let set = VertexSet::new(set)?;
    let ok = is_resolving(&rg.graph.all_pairs_distances(), &set)?.is_resolved();
    Ok((set, ok))
}

/// `x_i` is true iff `a1_i` or `a2_i` is in `r`. Requires `r` to be a
/// resolving set of size `n + m`.
pub fn resolving_set_to_assignment(rg: &ReductionGraph, r: &VertexSet) -> Result<Vec<bool>> {
    let want = rg.formula.num_vars + rg.formula.clauses.len();
    if r.len() != want {
        return Err(Error::input(format!("expected a set of size {want}, got {}", r.len())));
    }
    r.check_range(rg.graph.n())?;
    if let Some((u, v)) = is_resolving(&rg.graph.all_pairs_distances(), r)?.witness() {
        return Err(Error::input(format!("set does not resolve: {} and {} collide", rg.role(u), rg.role(v))));
    }
    Ok((0..rg.formula.num_vars)
        .map(|i| r.contains(rg.vertex(Role::A1(i))) || r.contains(rg.vertex(Role::A2(i))))
        .collect())
}
