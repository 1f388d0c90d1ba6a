//! Finite scenario trees: construction, validation and sampling.
//!
//! A tree represents a finite-support stochastic process over stages
//! `1..=T`. The root carries the deterministic first-stage outcome; every
//! edge carries the conditional probability of the child given its parent.
//! Node ids are dense integers assigned in breadth-first order, which keeps
//! references from cuts, couplings and serialized files stable.
//!
//! Trees are immutable after construction and safe to share across
//! threads. Sampling takes an explicit seed and owns its generator state.

use crate::rng;
use rand::Rng;
use thiserror::Error;

/// Probability tolerance at construction time.
pub const PROB_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("tree must have at least 2 stages, got {0}")]
    TooFewStages(usize),
    #[error("node {0}: {1}")]
    BadNode(usize, String),
    #[error("expected exactly one root at stage 1")]
    BadRoot,
    #[error("children of node {node} have probabilities summing to {sum}, expected 1")]
    BadConditional { node: usize, sum: f64 },
    #[error("node {0} is a leaf at stage {1}, expected stage {2}")]
    ShortLeaf(usize, usize, usize),
    #[error("stage {stage}: outcome has dimension {got}, expected {want}")]
    BadDimension { stage: usize, got: usize, want: usize },
    #[error("probabilities sum to {0}, expected 1 (tolerance {1:e})")]
    BadWeights(f64, f64),
    #[error("paths disagree in stage count or dimensions")]
    MismatchedPaths,
    #[error("empty path set")]
    EmptyPaths,
    #[error("stage {0} has empty support")]
    EmptySupport(usize),
    #[error("grid width must be positive, got {0}")]
    BadGridWidth(f64),
    #[error("unknown node id {0}")]
    UnknownNode(usize),
    #[error("node {0} is a leaf")]
    LeafNode(usize),
}

/// One node of a scenario tree.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeNode {
    pub id: usize,
    /// 1-based stage; the root sits at stage 1.
    pub stage: usize,
    pub parent: Option<usize>,
    pub outcome: Vec<f64>,
    /// Conditional probability given the parent; 1 for the root.
    pub prob: f64,
}

/// A finite-support stochastic process with explicit filtration.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioTree {
    stage_count: usize,
    dims: Vec<usize>,
    nodes: Vec<TreeNode>,
    children: Vec<Vec<usize>>,
}

/// One realization of stages `2..=T`; the first stage is implied by the
/// tree root.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePath {
    pub outcomes: Vec<Vec<f64>>,
    pub weight: Option<f64>,
}

impl SamplePath {
    pub fn new(outcomes: Vec<Vec<f64>>) -> Self {
        SamplePath { outcomes, weight: None }
    }
}

/// Per-stage distributions of a stagewise-independent process.
#[derive(Debug, Clone, PartialEq)]
pub struct StagewiseMarginals {
    pub stage1: Vec<f64>,
    /// Marginals for stages `2..=T`, in stage order.
    pub marginals: Vec<DiscreteMarginal>,
}

/// Atoms of one stage marginal.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMarginal {
    pub outcomes: Vec<Vec<f64>>,
    pub probs: Vec<f64>,
}

impl DiscreteMarginal {
    pub fn new(outcomes: Vec<Vec<f64>>, probs: Vec<f64>) -> Result<Self, TreeError> {
        if outcomes.is_empty() || outcomes.len() != probs.len() {
            return Err(TreeError::EmptySupport(0));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_TOL {
            return Err(TreeError::BadWeights(sum, PROB_TOL));
        }
        if probs.iter().any(|&p| p <= 0.0) {
            return Err(TreeError::BadWeights(sum, PROB_TOL));
        }
        let d = outcomes[0].len();
        if outcomes.iter().any(|o| o.len() != d) {
            return Err(TreeError::MismatchedPaths);
        }
        Ok(DiscreteMarginal { outcomes, probs })
    }

    pub fn dim(&self) -> usize {
        self.outcomes[0].len()
    }
}

impl StagewiseMarginals {
    pub fn new(stage1: Vec<f64>, marginals: Vec<DiscreteMarginal>) -> Result<Self, TreeError> {
        if marginals.is_empty() {
            return Err(TreeError::TooFewStages(1));
        }
        Ok(StagewiseMarginals { stage1, marginals })
    }

    pub fn stage_count(&self) -> usize {
        self.marginals.len() + 1
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![self.stage1.len()];
        d.extend(self.marginals.iter().map(|m| m.dim()));
        d
    }

    /// Independent per-stage sampling; deterministic given the seed.
    pub fn sample_paths(&self, count: usize, seed: u64) -> Vec<SamplePath> {
        let mut gen = rng::seeded(seed);
        (0..count)
            .map(|_| {
                let outcomes = self
                    .marginals
                    .iter()
                    .map(|m| m.outcomes[pick(&m.probs, &mut gen)].clone())
                    .collect();
                SamplePath::new(outcomes)
            })
            .collect()
    }
}

fn pick(probs: &[f64], gen: &mut impl Rng) -> usize {
    let u: f64 = gen.random();
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    probs.len() - 1
}

impl ScenarioTree {
    /// Builds a tree from raw nodes, checking every structural invariant.
    ///
    /// Nodes must be listed in id order with ids dense from 0; the root has
    /// id 0, stage 1 and probability 1. Children probabilities must sum to
    /// one within [`PROB_TOL`] and zero-probability children are rejected.
    pub fn from_nodes(nodes: Vec<TreeNode>) -> Result<Self, TreeError> {
        if nodes.is_empty() {
            return Err(TreeError::BadRoot);
        }
        let stage_count = nodes.iter().map(|n| n.stage).max().unwrap_or(0);
        if stage_count < 2 {
            return Err(TreeError::TooFewStages(stage_count));
        }
        for (i, n) in nodes.iter().enumerate() {
            if n.id != i {
                return Err(TreeError::BadNode(n.id, "ids must be dense and ordered".into()));
            }
            if !n.prob.is_finite() || n.prob <= 0.0 || n.prob > 1.0 + PROB_TOL {
                return Err(TreeError::BadNode(n.id, format!("probability {} not in (0,1]", n.prob)));
            }
            if n.outcome.iter().any(|x| !x.is_finite()) {
                return Err(TreeError::BadNode(n.id, "non-finite outcome".into()));
            }
        }
        if nodes[0].stage != 1 || nodes[0].parent.is_some() || (nodes[0].prob - 1.0).abs() > PROB_TOL
        {
            return Err(TreeError::BadRoot);
        }
        if nodes.iter().skip(1).any(|n| n.parent.is_none() || n.stage == 1) {
            return Err(TreeError::BadRoot);
        }

        let mut dims = vec![usize::MAX; stage_count];
        let mut children = vec![Vec::new(); nodes.len()];
        for n in &nodes {
            let want = &mut dims[n.stage - 1];
            if *want == usize::MAX {
                *want = n.outcome.len();
            } else if *want != n.outcome.len() {
                return Err(TreeError::BadDimension {
                    stage: n.stage,
                    got: n.outcome.len(),
                    want: *want,
                });
            }
            if let Some(p) = n.parent {
                if p >= nodes.len() {
                    return Err(TreeError::UnknownNode(p));
                }
                if nodes[p].stage + 1 != n.stage {
                    return Err(TreeError::BadNode(
                        n.id,
                        format!("stage {} but parent at stage {}", n.stage, nodes[p].stage),
                    ));
                }
                children[p].push(n.id);
            }
        }
        for n in &nodes {
            if children[n.id].is_empty() {
                if n.stage != stage_count {
                    return Err(TreeError::ShortLeaf(n.id, n.stage, stage_count));
                }
            } else {
                let sum: f64 = children[n.id].iter().map(|&c| nodes[c].prob).sum();
                if (sum - 1.0).abs() > PROB_TOL {
                    return Err(TreeError::BadConditional { node: n.id, sum });
                }
            }
        }
        Ok(ScenarioTree { stage_count, dims, nodes, children })
    }

    /// Re-checks every construction invariant; constructors always produce
    /// trees for which this passes.
    pub fn validate(&self) -> Result<(), TreeError> {
        Self::from_nodes(self.nodes.clone()).map(|_| ())
    }

    /// Builds a scenario fan: one child chain per path, Dirac conditionals
    /// beyond stage 2. Identical paths are kept separate, never merged. The
    /// root outcome is the zero vector with the dimension of stage 2.
    pub fn build_fan(paths: &[SamplePath], probs: &[f64]) -> Result<Self, TreeError> {
        if paths.is_empty() {
            return Err(TreeError::EmptyPaths);
        }
        if paths.len() != probs.len() {
            return Err(TreeError::MismatchedPaths);
        }
        check_consistent(paths)?;
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(TreeError::BadWeights(sum, 1e-9));
        }
        if probs.iter().any(|&p| p <= 0.0) {
            return Err(TreeError::BadWeights(sum, 1e-9));
        }
        let horizon = paths[0].outcomes.len(); // stages 2..=T
        let d2 = paths[0].outcomes[0].len();
        let renorm: Vec<f64> = probs.iter().map(|p| p / sum).collect();

        let mut nodes = vec![TreeNode {
            id: 0,
            stage: 1,
            parent: None,
            outcome: vec![0.0; d2],
            prob: 1.0,
        }];
        // breadth-first: all stage-2 nodes first, then stage 3, ...
        let mut prev: Vec<usize> = Vec::new();
        for (k, (path, &p)) in paths.iter().zip(&renorm).enumerate() {
            let id = nodes.len();
            nodes.push(TreeNode {
                id,
                stage: 2,
                parent: Some(0),
                outcome: path.outcomes[0].clone(),
                prob: p,
            });
            prev.push(id);
            let _ = k;
        }
        for s in 1..horizon {
            let mut next = Vec::with_capacity(paths.len());
            for (k, path) in paths.iter().enumerate() {
                let id = nodes.len();
                nodes.push(TreeNode {
                    id,
                    stage: s + 2,
                    parent: Some(prev[k]),
                    outcome: path.outcomes[s].clone(),
                    prob: 1.0,
                });
                next.push(id);
            }
            prev = next;
        }
        Self::from_nodes(nodes)
    }

    /// Builds the full product tree of stagewise-independent marginals:
    /// every stage-`t` node has one child per stage-`t+1` atom.
    pub fn build_product(m: &StagewiseMarginals) -> Result<Self, TreeError> {
        let mut nodes = vec![TreeNode {
            id: 0,
            stage: 1,
            parent: None,
            outcome: m.stage1.clone(),
            prob: 1.0,
        }];
        let mut frontier = vec![0usize];
        for (k, marg) in m.marginals.iter().enumerate() {
            if marg.outcomes.is_empty() {
                return Err(TreeError::EmptySupport(k + 2));
            }
            let mut next = Vec::with_capacity(frontier.len() * marg.outcomes.len());
            for &parent in &frontier {
                for (o, &p) in marg.outcomes.iter().zip(&marg.probs) {
                    let id = nodes.len();
                    nodes.push(TreeNode {
                        id,
                        stage: k + 2,
                        parent: Some(parent),
                        outcome: o.clone(),
                        prob: p,
                    });
                    next.push(id);
                }
            }
            frontier = next;
        }
        Self::from_nodes(nodes)
    }

    /// Clusters equally weighted sample paths onto a uniform grid of
    /// spacing `grid_width` and merges paths with identical snapped
    /// prefixes.
    ///
    /// The grid at stage `t` is axis-aligned with cell boundaries anchored
    /// at the coordinate-wise mean of the stage-`t` values, so centroids
    /// sit at `mean + r*(z + 1/2)`. Values exactly halfway between two
    /// centroids snap to the lower one. Edge probabilities are path counts
    /// conditioned on the parent.
    pub fn adapt_empirical(paths: &[SamplePath], grid_width: f64) -> Result<Self, TreeError> {
        if paths.is_empty() {
            return Err(TreeError::EmptyPaths);
        }
        if !(grid_width > 0.0) || !grid_width.is_finite() {
            return Err(TreeError::BadGridWidth(grid_width));
        }
        check_consistent(paths)?;
        let horizon = paths[0].outcomes.len();
        let d2 = paths[0].outcomes[0].len();

        // Snap every stage of every path to its grid centroid.
        let mut snapped: Vec<Vec<Vec<f64>>> = vec![Vec::with_capacity(horizon); paths.len()];
        for s in 0..horizon {
            let d = paths[0].outcomes[s].len();
            let mut anchor = vec![0.0; d];
            for p in paths {
                for (a, x) in anchor.iter_mut().zip(&p.outcomes[s]) {
                    *a += x;
                }
            }
            for a in anchor.iter_mut() {
                *a /= paths.len() as f64;
            }
            for (k, p) in paths.iter().enumerate() {
                let v = p.outcomes[s]
                    .iter()
                    .zip(&anchor)
                    .map(|(x, a)| {
                        // cell index; a boundary value joins the lower cell
                        let z = ((x - a) / grid_width).ceil() - 1.0;
                        a + grid_width * (z + 0.5)
                    })
                    .collect();
                snapped[k].push(v);
            }
        }

        // Merge snapped prefixes stage by stage.
        let mut nodes = vec![TreeNode {
            id: 0,
            stage: 1,
            parent: None,
            outcome: vec![0.0; d2],
            prob: 1.0,
        }];
        // node id -> paths passing through it
        let mut at_node: Vec<(usize, Vec<usize>)> = vec![(0, (0..paths.len()).collect())];
        for s in 0..horizon {
            let mut next_nodes: Vec<(usize, Vec<usize>)> = Vec::new();
            for (parent, members) in &at_node {
                // group members by snapped value, first occurrence order
                let mut groups: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
                for &k in members {
                    let key: Vec<u64> = snapped[k][s].iter().map(|x| x.to_bits()).collect();
                    match groups.iter_mut().find(|(g, _)| *g == key) {
                        Some((_, v)) => v.push(k),
                        None => groups.push((key, vec![k])),
                    }
                }
                for (_, group) in groups {
                    let id = nodes.len();
                    nodes.push(TreeNode {
                        id,
                        stage: s + 2,
                        parent: Some(*parent),
                        outcome: snapped[group[0]][s].clone(),
                        prob: group.len() as f64 / members.len() as f64,
                    });
                    next_nodes.push((id, group));
                }
            }
            at_node = next_nodes;
        }
        // Grouping above appends children depth-first; renumber breadth-first.
        let tree = Self::from_nodes_relaxed(nodes)?;
        Ok(tree)
    }

    /// Renumbers arbitrary (consistent) nodes into breadth-first id order
    /// and validates.
    fn from_nodes_relaxed(nodes: Vec<TreeNode>) -> Result<Self, TreeError> {
        let stage_count = nodes.iter().map(|n| n.stage).max().unwrap_or(0);
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by_key(|&i| (nodes[i].stage, i));
        let mut new_id = vec![0usize; nodes.len()];
        for (fresh, &old) in order.iter().enumerate() {
            new_id[nodes[old].id] = fresh;
        }
        let renumbered = order
            .iter()
            .enumerate()
            .map(|(fresh, &old)| TreeNode {
                id: fresh,
                stage: nodes[old].stage,
                parent: nodes[old].parent.map(|p| new_id[p]),
                outcome: nodes[old].outcome.clone(),
                prob: nodes[old].prob,
            })
            .collect();
        let _ = stage_count;
        Self::from_nodes(renumbered)
    }

    pub fn stage_count(&self) -> usize {
        self.stage_count
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> Result<&TreeNode, TreeError> {
        self.nodes.get(id).ok_or(TreeError::UnknownNode(id))
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    /// Node ids at a 1-based stage, ascending.
    pub fn stage_nodes(&self, stage: usize) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.stage == stage)
            .map(|n| n.id)
            .collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.stage_nodes(self.stage_count)
    }

    /// Unconditional probability of reaching a node.
    pub fn node_prob(&self, id: usize) -> f64 {
        let mut p = 1.0;
        let mut cur = Some(id);
        while let Some(i) = cur {
            p *= self.nodes[i].prob;
            cur = self.nodes[i].parent;
        }
        p
    }

    /// The conditional distribution over next-stage outcomes at a node.
    pub fn conditional(&self, id: usize) -> Result<Vec<(Vec<f64>, f64)>, TreeError> {
        let node = self.node(id)?;
        if self.children[node.id].is_empty() {
            return Err(TreeError::LeafNode(id));
        }
        Ok(self.children[id]
            .iter()
            .map(|&c| (self.nodes[c].outcome.clone(), self.nodes[c].prob))
            .collect())
    }

    /// Root-to-leaf node id chains with their path probabilities, in leaf
    /// id order.
    pub fn paths(&self) -> Vec<(Vec<usize>, f64)> {
        self.leaves()
            .into_iter()
            .map(|leaf| {
                let mut chain = vec![leaf];
                while let Some(p) = self.nodes[*chain.last().unwrap()].parent {
                    chain.push(p);
                }
                chain.reverse();
                (chain.clone(), self.node_prob(leaf))
            })
            .collect()
    }

    /// The outcome sequence (stages `1..=T`) along the path to a leaf.
    pub fn path_outcomes(&self, leaf: usize) -> Vec<Vec<f64>> {
        let mut chain = vec![leaf];
        while let Some(p) = self.nodes[*chain.last().unwrap()].parent {
            chain.push(p);
        }
        chain.reverse();
        chain.into_iter().map(|id| self.nodes[id].outcome.clone()).collect()
    }

    /// Ancestral sampling from the root; deterministic given the seed.
    pub fn sample_paths(&self, count: usize, seed: u64) -> Vec<SamplePath> {
        let mut gen = rng::seeded(seed);
        (0..count)
            .map(|_| {
                let mut outcomes = Vec::with_capacity(self.stage_count - 1);
                let mut cur = 0usize;
                while !self.children[cur].is_empty() {
                    let probs: Vec<f64> =
                        self.children[cur].iter().map(|&c| self.nodes[c].prob).collect();
                    cur = self.children[cur][pick(&probs, &mut gen)];
                    outcomes.push(self.nodes[cur].outcome.clone());
                }
                SamplePath::new(outcomes)
            })
            .collect()
    }
}

fn check_consistent(paths: &[SamplePath]) -> Result<(), TreeError> {
    let horizon = paths[0].outcomes.len();
    if horizon == 0 {
        return Err(TreeError::TooFewStages(1));
    }
    for p in paths {
        if p.outcomes.len() != horizon {
            return Err(TreeError::MismatchedPaths);
        }
        for (a, b) in p.outcomes.iter().zip(&paths[0].outcomes) {
            if a.len() != b.len() {
                return Err(TreeError::MismatchedPaths);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_path_fan() -> ScenarioTree {
        let paths = vec![
            SamplePath::new(vec![vec![0.0], vec![1.0]]),
            SamplePath::new(vec![vec![0.0], vec![-1.0]]),
        ];
        ScenarioTree::build_fan(&paths, &[0.5, 0.5]).unwrap()
    }

    #[test]
    fn fan_has_one_chain_per_path() {
        let t = two_path_fan();
        assert_eq!(t.stage_count(), 3);
        assert_eq!(t.leaves().len(), 2);
        for (chain, p) in t.paths() {
            assert_eq!(chain.len(), 3);
            assert!((p - 0.5).abs() < 1e-15);
        }
        // beyond stage 2 every conditional is Dirac
        for id in t.stage_nodes(2) {
            let cond = t.conditional(id).unwrap();
            assert_eq!(cond.len(), 1);
            assert!((cond[0].1 - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn fan_keeps_identical_chains_separate() {
        let p = SamplePath::new(vec![vec![1.0], vec![2.0]]);
        let paths = vec![p.clone(), p.clone(), p.clone(), p];
        let t = ScenarioTree::build_fan(&paths, &[0.25; 4]).unwrap();
        assert_eq!(t.leaves().len(), 4);
    }

    #[test]
    fn degenerate_single_path_fan() {
        let t =
            ScenarioTree::build_fan(&[SamplePath::new(vec![vec![2.0], vec![3.0]])], &[1.0]).unwrap();
        assert_eq!(t.nodes().len(), 3);
        assert_eq!(t.paths()[0].1, 1.0);
    }

    #[test]
    fn product_counts_nodes() {
        let m = StagewiseMarginals::new(
            vec![0.0],
            vec![
                DiscreteMarginal::new(vec![vec![1.0], vec![2.0]], vec![0.5, 0.5]).unwrap(),
                DiscreteMarginal::new(vec![vec![3.0], vec![4.0]], vec![0.3, 0.7]).unwrap(),
            ],
        )
        .unwrap();
        let t = ScenarioTree::build_product(&m).unwrap();
        assert_eq!(t.nodes().len(), 1 + 2 + 4);
        // conditional at any stage-2 node equals the stage-3 marginal
        for id in t.stage_nodes(2) {
            let cond = t.conditional(id).unwrap();
            assert_eq!(cond.len(), 2);
            assert_eq!(cond[0].0, vec![3.0]);
            assert!((cond[0].1 - 0.3).abs() < 1e-15);
            assert!((cond[1].1 - 0.7).abs() < 1e-15);
        }
    }

    #[test]
    fn product_of_single_atoms_is_chain() {
        let m = StagewiseMarginals::new(
            vec![0.0],
            vec![DiscreteMarginal::new(vec![vec![5.0]], vec![1.0]).unwrap()],
        )
        .unwrap();
        let t = ScenarioTree::build_product(&m).unwrap();
        assert_eq!(t.nodes().len(), 2);
    }

    #[test]
    fn dirac_then_split_product_path_probs() {
        // stage-2 Dirac at 0, stage-3 split between -1 and 1
        let m = StagewiseMarginals::new(
            vec![0.0],
            vec![
                DiscreteMarginal::new(vec![vec![0.0]], vec![1.0]).unwrap(),
                DiscreteMarginal::new(vec![vec![-1.0], vec![1.0]], vec![0.5, 0.5]).unwrap(),
            ],
        )
        .unwrap();
        let t = ScenarioTree::build_product(&m).unwrap();
        let probs: Vec<f64> = t.paths().iter().map(|(_, p)| *p).collect();
        assert_eq!(probs, vec![0.5, 0.5]);
    }

    #[test]
    fn conditional_rejects_leaves_and_unknown_ids() {
        let t = two_path_fan();
        let leaf = t.leaves()[0];
        assert!(matches!(t.conditional(leaf), Err(TreeError::LeafNode(_))));
        assert!(matches!(t.conditional(999), Err(TreeError::UnknownNode(999))));
    }

    #[test]
    fn adapt_snaps_to_centroids() {
        // values {4.8, 5.2, -4.9, -5.1}: mean ~0, spacing 10 -> centroids ±5
        let paths: Vec<SamplePath> = [4.8, 5.2, -4.9, -5.1]
            .iter()
            .map(|&v| SamplePath::new(vec![vec![v]]))
            .collect();
        let t = ScenarioTree::adapt_empirical(&paths, 10.0).unwrap();
        let mut outs: Vec<f64> = t.stage_nodes(2).iter().map(|&i| t.node(i).unwrap().outcome[0]).collect();
        outs.sort_by(f64::total_cmp);
        assert_eq!(outs.len(), 2);
        assert!((outs[0] + 5.0).abs() < 1e-12 && (outs[1] - 5.0).abs() < 1e-12);
        for &id in &t.stage_nodes(2) {
            assert!((t.node(id).unwrap().prob - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn adapt_identical_paths_gives_chain() {
        let p = SamplePath::new(vec![vec![1.0], vec![2.0]]);
        let t = ScenarioTree::adapt_empirical(&[p.clone(), p.clone(), p], 0.5).unwrap();
        assert_eq!(t.nodes().len(), 3);
        assert!(t.nodes().iter().all(|n| (n.prob - 1.0).abs() < 1e-15));
    }

    #[test]
    fn adapt_with_tiny_grid_matches_fan_on_distinct_paths() {
        let paths = vec![
            SamplePath::new(vec![vec![0.1], vec![1.0]]),
            SamplePath::new(vec![vec![0.9], vec![-1.0]]),
            SamplePath::new(vec![vec![2.3], vec![0.4]]),
        ];
        let adapted = ScenarioTree::adapt_empirical(&paths, 1e-9).unwrap();
        let fan = ScenarioTree::build_fan(&paths, &[1.0 / 3.0; 3]).unwrap();
        assert_eq!(adapted.leaves().len(), fan.leaves().len());
        // same path probabilities; outcomes agree to grid resolution
        for ((ca, pa), (cf, pf)) in adapted.paths().iter().zip(fan.paths().iter()) {
            assert!((pa - pf).abs() < 1e-12);
            for (na, nf) in ca.iter().zip(cf.iter()).skip(1) {
                let oa = &adapted.node(*na).unwrap().outcome;
                let of = &fan.node(*nf).unwrap().outcome;
                assert!((oa[0] - of[0]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_consistent() {
        let t = two_path_fan();
        let a = t.sample_paths(32, 9);
        let b = t.sample_paths(32, 9);
        assert_eq!(a, b);
        let chain =
            ScenarioTree::build_fan(&[SamplePath::new(vec![vec![2.0], vec![3.0]])], &[1.0]).unwrap();
        for p in chain.sample_paths(5, 1) {
            assert_eq!(p.outcomes, vec![vec![2.0], vec![3.0]]);
        }
    }

    #[test]
    fn sample_frequencies_match_probabilities() {
        let m = StagewiseMarginals::new(
            vec![0.0],
            vec![DiscreteMarginal::new(vec![vec![1.0], vec![2.0]], vec![0.3, 0.7]).unwrap()],
        )
        .unwrap();
        let k = 10_000;
        let samples = m.sample_paths(k, 123);
        let hits = samples.iter().filter(|p| p.outcomes[0][0] == 1.0).count();
        let freq = hits as f64 / k as f64;
        // binomial 4-sigma band around 0.3
        let band = 4.0 * (0.3f64 * 0.7 / k as f64).sqrt();
        assert!((freq - 0.3).abs() <= band, "freq {freq} outside 0.3 ± {band}");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(ScenarioTree::build_fan(&[], &[]).is_err());
        let p = SamplePath::new(vec![vec![1.0]]);
        assert!(ScenarioTree::build_fan(&[p.clone()], &[0.9]).is_err());
        assert!(ScenarioTree::adapt_empirical(&[p], 0.0).is_err());
        let q = SamplePath::new(vec![vec![1.0, 2.0]]);
        assert!(ScenarioTree::build_fan(
            &[SamplePath::new(vec![vec![1.0]]), q],
            &[0.5, 0.5]
        )
        .is_err());
    }

    #[test]
    fn constructor_outputs_validate() {
        let t = two_path_fan();
        t.validate().unwrap();
        let m = StagewiseMarginals::new(
            vec![0.0],
            vec![DiscreteMarginal::new(vec![vec![1.0], vec![2.0]], vec![0.4, 0.6]).unwrap()],
        )
        .unwrap();
        ScenarioTree::build_product(&m).unwrap().validate().unwrap();
    }
}
