//! Dual graphs of tilings, budgeted Hamiltonian-path search, two-level
//! tilings, and conforming Hamiltonian paths.
//!
//! Searches are exhaustive backtracking with a node budget; a result is
//! flagged exhaustive only when the whole tree was explored. Tie-breaking is
//! by ascending node index, so the first witness found is the
//! lexicographically smallest one.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::enumerate::SearchBudget;
use crate::exact::{similarity_from_triangles, AffineSimilarity, Point};
use crate::geom::{triangles_share_segment, ApproxBox};
use crate::tiling::{validate_reptiling, Tiling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("inner tilings must have equal tile counts")]
    MismatchedTileCounts,
    #[error("inner tiling master must match the outer master")]
    MasterMismatch,
    #[error("expected {expected} inner tilings, got {got}")]
    WrongInnerCount { expected: usize, got: usize },
    #[error("two-level tiling is not a valid reptiling")]
    InvalidTwoLevel,
}

/// One node per tile; an edge where two tiles touch in more than one point.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Builds the dual: tiles are adjacent iff they share a boundary segment of
/// positive length.
pub fn build_dual(t: &Tiling) -> DualGraph {
    let n = t.tile_count();
    let mut adjacency = vec![Vec::new(); n];
    let boxes: Vec<ApproxBox> = t.tiles().iter().map(ApproxBox::of_triangle).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if !boxes[i].intersects(&boxes[j]) {
                continue;
            }
            if triangles_share_segment(&t.tiles()[i], &t.tiles()[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    DualGraph { adjacency }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathResult {
    pub found: bool,
    pub order: Vec<usize>,
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

impl PathResult {
    fn not_found(exhaustive: bool, nodes: u64) -> PathResult {
        PathResult {
            found: false,
            order: Vec::new(),
            exhaustive,
            nodes_explored: nodes,
        }
    }
}

/// Verifies a claimed Hamiltonian path against the adjacency.
pub fn verify_path(g: &DualGraph, order: &[usize]) -> bool {
    if order.len() != g.node_count() {
        return false;
    }
    let mut seen = vec![false; g.node_count()];
    for &v in order {
        if v >= g.node_count() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    order.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Backtracking Hamiltonian-path search. Starts and neighbor choices are
/// taken in ascending order, so a found path is the lexicographically
/// smallest witness.
pub fn hamiltonian_path(g: &DualGraph, budget: &SearchBudget) -> PathResult {
    let n = g.node_count();
    if n == 0 {
        return PathResult {
            found: true,
            order: vec![],
            exhaustive: true,
            nodes_explored: 0,
        };
    }
    let mut nodes: u64 = 0;
    let mut visited = vec![false; n];
    let mut path = Vec::with_capacity(n);

    fn dfs(
        g: &DualGraph,
        visited: &mut [bool],
        path: &mut Vec<usize>,
        nodes: &mut u64,
        budget: &SearchBudget,
    ) -> Result<bool, ()> {
        *nodes += 1;
        if *nodes > budget.max_nodes {
            return Err(());
        }
        if path.len() == g.node_count() {
            return Ok(true);
        }
        let current = *path.last().unwrap();
        for &next in &g.adjacency[current] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            path.push(next);
            match dfs(g, visited, path, nodes, budget) {
                Ok(true) => return Ok(true),
                Ok(false) => {}
                Err(()) => return Err(()),
            }
            path.pop();
            visited[next] = false;
        }
        Ok(false)
    }

    for start in 0..n {
        visited[start] = true;
        path.push(start);
        match dfs(g, &mut visited, &mut path, &mut nodes, budget) {
            Ok(true) => {
                debug_assert!(verify_path(g, &path));
                return PathResult {
                    found: true,
                    order: path,
                    exhaustive: true,
                    nodes_explored: nodes,
                };
            }
            Ok(false) => {}
            Err(()) => return PathResult::not_found(false, nodes),
        }
        path.pop();
        visited[start] = false;
    }
    PathResult::not_found(true, nodes)
}

/// An `r^2`-reptiling obtained by reptiling a master and then reptiling each
/// intermediate tile with the same number of atoms.
#[derive(Debug, Clone)]
pub struct TwoLevelTiling {
    pub intermediate: Tiling,
    pub atoms: Tiling,
    /// Atom index to intermediate-tile index.
    pub membership: Vec<usize>,
    /// Master-to-intermediate-tile similarity used for each intermediate.
    pub maps: Vec<AffineSimilarity>,
}

impl TwoLevelTiling {
    pub fn atoms_of(&self, intermediate: usize) -> Vec<usize> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, m)| **m == intermediate)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Deterministic master-to-tile similarity: the first vertex correspondence
/// (in a fixed permutation order) that is a similarity.
fn tile_similarity(master: &[Point; 3], tile: &[Point; 3]) -> Option<AffineSimilarity> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in PERMS {
        let dst = [
            tile[perm[0]].clone(),
            tile[perm[1]].clone(),
            tile[perm[2]].clone(),
        ];
        if let Ok(map) = similarity_from_triangles(master, &dst) {
            return Some(map);
        }
    }
    None
}

/// Composes an outer reptiling with inner reptilings of the same master:
/// one shared inner tiling, or one per intermediate tile.
pub fn two_level(outer: &Tiling, inners: &[&Tiling]) -> Result<TwoLevelTiling, DualError> {
    let r = outer.tile_count();
    if inners.is_empty() || (inners.len() != 1 && inners.len() != r) {
        return Err(DualError::WrongInnerCount {
            expected: r,
            got: inners.len(),
        });
    }
    let count = inners[0].tile_count();
    for inner in inners {
        if inner.tile_count() != count {
            return Err(DualError::MismatchedTileCounts);
        }
        if inner.master() != outer.master() {
            return Err(DualError::MasterMismatch);
        }
    }
    let mut atoms = Vec::with_capacity(r * count);
    let mut membership = Vec::with_capacity(r * count);
    let mut maps = Vec::with_capacity(r);
    for (i, tile) in outer.tiles().iter().enumerate() {
        let map = tile_similarity(outer.master(), tile).ok_or(DualError::InvalidTwoLevel)?;
        let inner = if inners.len() == 1 { inners[0] } else { inners[i] };
        for atom in inner.tiles() {
            atoms.push(map.apply_triangle(atom));
            membership.push(i);
        }
        maps.push(map);
    }
    let atoms = Tiling::new(outer.radicand().clone(), outer.master().clone(), atoms)
        .map_err(|_| DualError::InvalidTwoLevel)?;
    if !validate_reptiling(&atoms).ok() {
        return Err(DualError::InvalidTwoLevel);
    }
    Ok(TwoLevelTiling {
        intermediate: outer.clone(),
        atoms,
        membership,
        maps,
    })
}

/// Feasible entry/exit table of one intermediate tile: local atom index
/// pairs admitting an internal Hamiltonian path, with one witness each.
type FeasibleTable = BTreeMap<(usize, usize), Vec<usize>>;

fn internal_feasible(
    adjacency: &[Vec<usize>],
    budget: &SearchBudget,
    nodes: &mut u64,
) -> Option<FeasibleTable> {
    let n = adjacency.len();
    let mut table = FeasibleTable::new();

    fn dfs(
        adjacency: &[Vec<usize>],
        visited: &mut [bool],
        path: &mut Vec<usize>,
        table: &mut FeasibleTable,
        nodes: &mut u64,
        budget: &SearchBudget,
    ) -> Result<(), ()> {
        *nodes += 1;
        if *nodes > budget.max_nodes {
            return Err(());
        }
        if path.len() == adjacency.len() {
            let key = (path[0], *path.last().unwrap());
            table.entry(key).or_insert_with(|| path.clone());
            return Ok(());
        }
        let current = *path.last().unwrap();
        for &next in &adjacency[current] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            path.push(next);
            dfs(adjacency, visited, path, table, nodes, budget)?;
            path.pop();
            visited[next] = false;
        }
        Ok(())
    }

    for start in 0..n {
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut path = vec![start];
        if dfs(adjacency, &mut visited, &mut path, &mut table, nodes, budget).is_err() {
            return None;
        }
    }
    Some(table)
}

/// Searches for an atom order where consecutive atoms touch in more than a
/// single point and each intermediate tile's atoms are consecutive.
///
/// Per intermediate tile, the feasible entry/exit pairs are computed by
/// exhaustive search (memoized on the atom geometry normalized back to the
/// master frame); the top level then searches the intermediate dual for a
/// sequence with compatible cross-boundary adjacencies.
pub fn conforming_hamiltonian_path(
    t2: &TwoLevelTiling,
    budget: &SearchBudget,
) -> PathResult {
    let inter_dual = build_dual(&t2.intermediate);
    let atom_dual = build_dual(&t2.atoms);
    let r = t2.intermediate.tile_count();
    let mut nodes: u64 = 0;

    // Local atom lists and internal adjacency per intermediate tile.
    let mut local_atoms: Vec<Vec<usize>> = Vec::with_capacity(r);
    for i in 0..r {
        local_atoms.push(t2.atoms_of(i));
    }
    let mut tables: Vec<FeasibleTable> = Vec::with_capacity(r);
    let mut memo: BTreeMap<Vec<[Point; 3]>, FeasibleTable> = BTreeMap::new();
    for i in 0..r {
        let atoms = &local_atoms[i];
        let index_of: BTreeMap<usize, usize> =
            atoms.iter().enumerate().map(|(k, a)| (*a, k)).collect();
        let adjacency: Vec<Vec<usize>> = atoms
            .iter()
            .map(|a| {
                atom_dual.adjacency[*a]
                    .iter()
                    .filter_map(|b| index_of.get(b).copied())
                    .collect()
            })
            .collect();
        // Normalize the atom geometry back to the master frame; congruent
        // sub-tilings share a table.
        let key: Vec<[Point; 3]> = match t2.maps[i].inverse() {
            Ok(inv) => atoms
                .iter()
                .map(|a| inv.apply_triangle(&t2.atoms.tiles()[*a]))
                .collect(),
            Err(_) => Vec::new(),
        };
        let table = if !key.is_empty() {
            if let Some(t) = memo.get(&key) {
                t.clone()
            } else {
                match internal_feasible(&adjacency, budget, &mut nodes) {
                    Some(t) => {
                        memo.insert(key, t.clone());
                        t
                    }
                    None => return PathResult::not_found(false, nodes),
                }
            }
        } else {
            match internal_feasible(&adjacency, budget, &mut nodes) {
                Some(t) => t,
                None => return PathResult::not_found(false, nodes),
            }
        };
        tables.push(table);
    }

    struct Ctx<'a> {
        inter_dual: &'a DualGraph,
        atom_dual: &'a DualGraph,
        local_atoms: &'a [Vec<usize>],
        tables: &'a [FeasibleTable],
        budget: &'a SearchBudget,
    }

    // State: sequence of (intermediate, (entry, exit)) in local indices.
    fn dfs(
        ctx: &Ctx,
        visited: &mut [bool],
        seq: &mut Vec<(usize, (usize, usize))>,
        nodes: &mut u64,
    ) -> Result<bool, ()> {
        *nodes += 1;
        if *nodes > ctx.budget.max_nodes {
            return Err(());
        }
        if seq.len() == ctx.inter_dual.node_count() {
            return Ok(true);
        }
        let (cur, (_, exit_local)) = *seq.last().unwrap();
        let exit_atom = ctx.local_atoms[cur][exit_local];
        for &next in &ctx.inter_dual.adjacency[cur] {
            if visited[next] {
                continue;
            }
            for (&(entry, exit), _) in &ctx.tables[next] {
                let entry_atom = ctx.local_atoms[next][entry];
                if !ctx.atom_dual.has_edge(exit_atom, entry_atom) {
                    continue;
                }
                visited[next] = true;
                seq.push((next, (entry, exit)));
                match dfs(ctx, visited, seq, nodes) {
                    Ok(true) => return Ok(true),
                    Ok(false) => {}
                    Err(()) => return Err(()),
                }
                seq.pop();
                visited[next] = false;
            }
        }
        Ok(false)
    }

    let ctx = Ctx {
        inter_dual: &inter_dual,
        atom_dual: &atom_dual,
        local_atoms: &local_atoms,
        tables: &tables,
        budget,
    };
    let mut visited = vec![false; r];
    let mut seq: Vec<(usize, (usize, usize))> = Vec::new();
    for start in 0..r {
        let keys: Vec<(usize, usize)> = tables[start].keys().cloned().collect();
        for key in keys {
            visited[start] = true;
            seq.push((start, key));
            match dfs(&ctx, &mut visited, &mut seq, &mut nodes) {
                Ok(true) => {
                    let mut order = Vec::new();
                    for (tile, key) in &seq {
                        let witness = &tables[*tile][key];
                        order.extend(witness.iter().map(|l| local_atoms[*tile][*l]));
                    }
                    debug_assert!(verify_path(&atom_dual, &order));
                    return PathResult {
                        found: true,
                        order,
                        exhaustive: true,
                        nodes_explored: nodes,
                    };
                }
                Ok(false) => {}
                Err(()) => return PathResult::not_found(false, nodes),
            }
            seq.pop();
            visited[start] = false;
        }
    }
    PathResult::not_found(true, nodes)
}
