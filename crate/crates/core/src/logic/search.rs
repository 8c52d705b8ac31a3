//! Bounded forward proof search.
//!
//! Saturates, level by level, every sequent an observer can derive with
//! trees of at most `max_depth` nodes per branch. Leaves are ledger axioms,
//! assumed hypotheses and identity instances. Linear axioms are tracked per
//! derivation: a tree may use a finite axiom at most as many times as the
//! ledger allows, so two separate derivations may each use the one copy but
//! their combination may not.
//!
//! Rule parameters (identity formulas, the discarded conjunct of `&L`,
//! weakening formulas) range over a finite universe: every atom and its
//! orthocomplement, `_|_` when the observer can define it, and every subformula of the axioms and
//! hypotheses in play.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::axiom::{AxiomId, Uses, BASE_ATOM};
use super::derivation::Step;
use super::{DerivationTree, Formula, ObserverProfile, Rule, RuleKind, Sequent};

/// Depth of the deepest derivation exhibited for the three observers.
pub const DEFAULT_DEPTH: usize = 4;

type Fid = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Atom(u32),
    Orth(Fid),
    Conj(Fid, Fid),
    Disj(Fid, Fid),
    Implies(Fid, Fid),
    Falsum,
}

#[derive(Debug, Default)]
struct Table {
    nodes: Vec<Node>,
    index: HashMap<Node, Fid>,
    atoms: Vec<String>,
}

impl Table {
    fn mk(&mut self, node: Node) -> Fid {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = self.nodes.len() as Fid;
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn orth(&mut self, x: Fid) -> Fid {
        match self.nodes[x as usize] {
            Node::Orth(y) => y,
            _ => self.mk(Node::Orth(x)),
        }
    }

    fn intern(&mut self, f: &Formula) -> Fid {
        match f {
            Formula::Atom(name) => {
                let a = match self.atoms.iter().position(|x| x == name) {
                    Some(i) => i as u32,
                    None => {
                        self.atoms.push(name.clone());
                        (self.atoms.len() - 1) as u32
                    }
                };
                self.mk(Node::Atom(a))
            }
            Formula::Falsum => self.mk(Node::Falsum),
            Formula::Orth(inner) => {
                let x = self.intern(inner);
                self.orth(x)
            }
            Formula::Conj(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::Conj(l, r))
            }
            Formula::Disj(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::Disj(l, r))
            }
            Formula::Implies(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::Implies(l, r))
            }
        }
    }

    fn intern_sequent(&mut self, s: &Sequent) -> SeqKey {
        (
            s.antecedent.as_ref().map(|f| self.intern(f)),
            s.succedent.as_ref().map(|f| self.intern(f)),
        )
    }

    /// Id of `f` if it was ever built during the search.
    fn lookup(&self, f: &Formula) -> Option<Fid> {
        let node = match f {
            Formula::Atom(name) => Node::Atom(self.atoms.iter().position(|x| x == name)? as u32),
            Formula::Falsum => Node::Falsum,
            Formula::Orth(inner) => {
                let x = self.lookup(inner)?;
                if let Node::Orth(y) = self.nodes[x as usize] {
                    return Some(y);
                }
                Node::Orth(x)
            }
            Formula::Conj(l, r) => Node::Conj(self.lookup(l)?, self.lookup(r)?),
            Formula::Disj(l, r) => Node::Disj(self.lookup(l)?, self.lookup(r)?),
            Formula::Implies(l, r) => Node::Implies(self.lookup(l)?, self.lookup(r)?),
        };
        self.index.get(&node).copied()
    }

    fn formula(&self, id: Fid) -> Formula {
        match self.nodes[id as usize] {
            Node::Atom(a) => Formula::Atom(self.atoms[a as usize].clone()),
            Node::Falsum => Formula::Falsum,
            Node::Orth(x) => Formula::Orth(Box::new(self.formula(x))),
            Node::Conj(l, r) => self.formula(l).conj(self.formula(r)),
            Node::Disj(l, r) => self.formula(l).disj(self.formula(r)),
            Node::Implies(l, r) => self.formula(l).implies(self.formula(r)),
        }
    }
}

type SeqKey = (Option<Fid>, Option<Fid>);
/// Uses per axiom, indexed like [`AxiomId::ALL`].
type Usage = [u8; 4];

#[derive(Debug, Clone, Copy)]
enum Origin {
    Axiom(AxiomId),
    Hypothesis,
    Identity(Fid),
    Unary(RuleKind, Option<Fid>, u32),
    Binary(RuleKind, u32, u32),
}

#[derive(Debug, Clone)]
struct Item {
    seq: SeqKey,
    usage: Usage,
    origin: Origin,
}

/// Everything derivable within the depth bound.
#[derive(Debug)]
pub struct SearchOutcome {
    table: Table,
    items: Vec<Item>,
    first_of_level: Vec<usize>,
}

impl SearchOutcome {
    fn key(&self, s: &Sequent) -> Option<SeqKey> {
        let side = |f: &Option<Formula>| match f {
            None => Some(None),
            Some(f) => self.table.lookup(f).map(Some),
        };
        Some((side(&s.antecedent)?, side(&s.succedent)?))
    }

    pub fn derivable(&self, s: &Sequent) -> bool {
        self.position(s).is_some()
    }

    fn position(&self, s: &Sequent) -> Option<usize> {
        let key = self.key(s)?;
        self.items.iter().position(|it| it.seq == key)
    }

    /// A shallowest derivation of `s`, if any.
    pub fn witness(&self, s: &Sequent) -> Option<DerivationTree> {
        self.position(s).map(|i| self.tree(i))
    }

    /// Distinct derivable sequents.
    pub fn sequents(&self) -> BTreeSet<Sequent> {
        self.items.iter().map(|it| self.sequent(it.seq)).collect()
    }

    /// Derivable sequents with a shallowest derivation of exactly `depth`.
    pub fn sequents_at_depth(&self, depth: usize) -> BTreeSet<Sequent> {
        let lo = self.first_of_level.get(depth.wrapping_sub(1)).copied().unwrap_or(self.items.len());
        let hi = self.first_of_level.get(depth).copied().unwrap_or(self.items.len());
        self.items[lo..hi].iter().map(|it| self.sequent(it.seq)).collect()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn sequent(&self, (l, r): SeqKey) -> Sequent {
        Sequent::new(l.map(|f| self.table.formula(f)), r.map(|f| self.table.formula(f)))
    }

    fn tree(&self, i: usize) -> DerivationTree {
        let item = &self.items[i];
        let conclusion = self.sequent(item.seq);
        let param = |p: Option<Fid>| p.map(|f| self.table.formula(f));
        let (step, children) = match item.origin {
            Origin::Axiom(id) => (Step::Axiom(id), vec![]),
            Origin::Hypothesis => (Step::Assumption, vec![]),
            Origin::Identity(f) => (Step::Rule(Rule::Identity(self.table.formula(f))), vec![]),
            Origin::Unary(kind, p, c) => (
                Step::Rule(Rule::build(kind, param(p)).expect("well-formed search rule")),
                vec![self.tree(c as usize)],
            ),
            Origin::Binary(kind, l, r) => (
                Step::Rule(Rule::build(kind, None).expect("well-formed search rule")),
                vec![self.tree(l as usize), self.tree(r as usize)],
            ),
        };
        DerivationTree::from_parts(conclusion, step, children)
    }
}

struct Saturator<'p> {
    profile: &'p ObserverProfile,
    table: Table,
    items: Vec<Item>,
    seen: HashMap<(SeqKey, Usage), usize>,
    limits: Usage,
    linear: [bool; 4],
    params: Vec<Fid>,
    /// When set, the last level keeps only these sequents.
    goals: Option<HashSet<SeqKey>>,
    last: bool,
}

impl Saturator<'_> {
    fn push(&mut self, seq: SeqKey, usage: Usage, origin: Origin) {
        if self.seen.contains_key(&(seq, usage)) {
            return;
        }
        self.seen.insert((seq, usage), self.items.len());
        self.items.push(Item { seq, usage, origin });
    }

    fn combine(&self, a: Usage, b: Usage) -> Option<Usage> {
        let mut out = [0u8; 4];
        for k in 0..4 {
            let sum = a[k].checked_add(b[k])?;
            if self.linear[k] && sum > self.limits[k] {
                return None;
            }
            out[k] = sum;
        }
        Some(out)
    }

    /// Interns `node`, except on a goal-restricted last level where only
    /// formulas already known (and so possibly part of a goal) are needed.
    fn node(&mut self, node: Node) -> Option<Fid> {
        if self.last && self.goals.is_some() {
            self.table.index.get(&node).copied()
        } else {
            Some(self.table.mk(node))
        }
    }

    fn has(&self, rule: RuleKind) -> bool {
        self.profile.has_rule(rule)
    }

    fn level(&mut self, prev_start: usize, old_len: usize) {
        let mut by_ante: HashMap<Option<Fid>, Vec<usize>> = HashMap::new();
        let mut by_succ: HashMap<Option<Fid>, Vec<usize>> = HashMap::new();
        for (i, it) in self.items[..old_len].iter().enumerate() {
            by_ante.entry(it.seq.0).or_default().push(i);
            by_succ.entry(it.seq.1).or_default().push(i);
        }
        let fresh = |i: usize, j: usize| i.max(j) >= prev_start;

        let mut out: Vec<(SeqKey, Usage, Origin)> = Vec::new();

        for i in prev_start..old_len {
            let it = self.items[i].clone();
            let (ante, succ) = it.seq;
            if let Some(f) = ante {
                for p in self.params.clone() {
                    if self.has(RuleKind::AndLeft1) {
                        if let Some(c) = self.node(Node::Conj(f, p)) {
                            out.push(((Some(c), succ), it.usage, Origin::Unary(RuleKind::AndLeft1, Some(p), i as u32)));
                        }
                    }
                    if self.has(RuleKind::AndLeft2) {
                        if let Some(c) = self.node(Node::Conj(p, f)) {
                            out.push(((Some(c), succ), it.usage, Origin::Unary(RuleKind::AndLeft2, Some(p), i as u32)));
                        }
                    }
                }
            } else if self.has(RuleKind::WeakenLeft) {
                for &p in &self.params {
                    out.push(((Some(p), succ), it.usage, Origin::Unary(RuleKind::WeakenLeft, Some(p), i as u32)));
                }
            }
            match succ {
                None if self.has(RuleKind::WeakenRight) => {
                    for &p in &self.params {
                        out.push(((ante, Some(p)), it.usage, Origin::Unary(RuleKind::WeakenRight, Some(p), i as u32)));
                    }
                }
                Some(f) if self.has(RuleKind::FalsumDef) => {
                    let rewritten = match self.table.nodes[f as usize] {
                        Node::Orth(x) => {
                            let bot = self.table.mk(Node::Falsum);
                            self.node(Node::Implies(x, bot))
                        }
                        Node::Implies(x, g) if self.table.nodes[g as usize] == Node::Falsum => match self.table.nodes[x as usize] {
                            Node::Orth(y) => Some(y),
                            _ => self.node(Node::Orth(x)),
                        },
                        _ => None,
                    };
                    if let Some(r) = rewritten {
                        out.push(((ante, Some(r)), it.usage, Origin::Unary(RuleKind::FalsumDef, None, i as u32)));
                    }
                }
                _ => {}
            }
        }

        for i in 0..old_len {
            let li = self.items[i].clone();
            let (ante, succ) = li.seq;
            if let Some(f) = succ {
                if self.has(RuleKind::Cut) {
                    for &j in by_ante.get(&Some(f)).into_iter().flatten() {
                        if !fresh(i, j) {
                            continue;
                        }
                        let rj = &self.items[j];
                        if let Some(u) = self.combine(li.usage, rj.usage) {
                            out.push(((ante, rj.seq.1), u, Origin::Binary(RuleKind::Cut, i as u32, j as u32)));
                        }
                    }
                }
                if self.has(RuleKind::AndFormation) {
                    for &j in by_ante.get(&ante).into_iter().flatten() {
                        let rj = self.items[j].clone();
                        let Some(g) = rj.seq.1 else { continue };
                        if !fresh(i, j) {
                            continue;
                        }
                        if let Some(u) = self.combine(li.usage, rj.usage) {
                            if let Some(c) = self.node(Node::Conj(f, g)) {
                                out.push(((ante, Some(c)), u, Origin::Binary(RuleKind::AndFormation, i as u32, j as u32)));
                            }
                        }
                    }
                }
            }
            if let Some(f) = ante {
                if self.has(RuleKind::OrFormation) {
                    for &j in by_succ.get(&succ).into_iter().flatten() {
                        let rj = self.items[j].clone();
                        let Some(g) = rj.seq.0 else { continue };
                        if !fresh(i, j) {
                            continue;
                        }
                        if let Some(u) = self.combine(li.usage, rj.usage) {
                            if let Some(d) = self.node(Node::Disj(f, g)) {
                                out.push(((Some(d), succ), u, Origin::Binary(RuleKind::OrFormation, i as u32, j as u32)));
                            }
                        }
                    }
                }
            }
            if let Some(imp) = succ {
                if let (true, Node::Implies(h, g)) = (self.has(RuleKind::ModusPonens), self.table.nodes[imp as usize]) {
                    for &j in by_ante.get(&ante).into_iter().flatten() {
                        let lj = &self.items[j];
                        if lj.seq.1 != Some(h) || !fresh(i, j) {
                            continue;
                        }
                        if let Some(u) = self.combine(lj.usage, li.usage) {
                            out.push(((ante, Some(g)), u, Origin::Binary(RuleKind::ModusPonens, j as u32, i as u32)));
                        }
                    }
                }
            }
        }

        for (seq, usage, origin) in out {
            if let (true, Some(goals)) = (self.last, &self.goals) {
                if !goals.contains(&seq) {
                    continue;
                }
            }
            self.push(seq, usage, origin);
        }
    }
}

/// Saturates what `profile` derives from its ledger, identity instances and
/// `hypotheses` within `max_depth`. The profile's ledger is not consumed.
pub fn bounded_search(profile: &ObserverProfile, hypotheses: &[Sequent], max_depth: usize) -> SearchOutcome {
    saturate(profile, hypotheses, max_depth, None)
}

/// Like [`bounded_search`], but the deepest level only records `goals`.
/// Answers derivability of `goals` (and of anything shallower) at a
/// fraction of the cost.
pub fn search_for(
    profile: &ObserverProfile,
    hypotheses: &[Sequent],
    max_depth: usize,
    goals: &[Sequent],
) -> SearchOutcome {
    saturate(profile, hypotheses, max_depth, Some(goals))
}

fn saturate(
    profile: &ObserverProfile,
    hypotheses: &[Sequent],
    max_depth: usize,
    goals: Option<&[Sequent]>,
) -> SearchOutcome {
    let mut table = Table::default();
    let mut limits = [0u8; 4];
    let mut linear = [false; 4];
    let mut axioms = Vec::new();
    for (k, id) in AxiomId::ALL.into_iter().enumerate() {
        match profile.ledger.remaining(id) {
            Some(Uses::Finite(0)) | None => {}
            Some(Uses::Finite(n)) => {
                linear[k] = true;
                limits[k] = n.min(u8::MAX as u32) as u8;
                axioms.push((k, id));
            }
            Some(Uses::Unlimited) => axioms.push((k, id)),
        }
    }

    let mut universe: BTreeSet<Fid> = BTreeSet::new();
    let base = table.intern(&Formula::atom(BASE_ATOM));
    let mut sources: Vec<Sequent> = axioms.iter().map(|(_, id)| id.sequent()).collect();
    sources.extend(hypotheses.iter().cloned());
    universe.insert(base);
    if profile.has_rule(RuleKind::FalsumDef) {
        universe.insert(table.mk(Node::Falsum));
    }
    for s in &sources {
        for f in s.antecedent.iter().chain(&s.succedent) {
            for sub in f.subformulas() {
                universe.insert(table.intern(sub));
            }
        }
    }
    for a in 0..table.atoms.len() {
        let atom = table.mk(Node::Atom(a as u32));
        let o = table.orth(atom);
        universe.insert(atom);
        universe.insert(o);
    }
    let params: Vec<Fid> = universe.into_iter().collect();

    let mut sat = Saturator {
        profile,
        table,
        items: Vec::new(),
        seen: HashMap::new(),
        limits,
        linear,
        params,
        goals: None,
        last: false,
    };

    for (k, id) in axioms {
        let key = sat.table.intern_sequent(&id.sequent());
        let mut usage = [0u8; 4];
        if linear[k] {
            usage[k] = 1;
        }
        sat.push(key, usage, Origin::Axiom(id));
    }
    for h in hypotheses {
        let key = sat.table.intern_sequent(h);
        sat.push(key, [0; 4], Origin::Hypothesis);
    }
    if profile.has_rule(RuleKind::Identity) {
        for p in sat.params.clone() {
            sat.push((Some(p), Some(p)), [0; 4], Origin::Identity(p));
        }
    }
    if let Some(goals) = goals {
        sat.goals = Some(goals.iter().map(|g| sat.table.intern_sequent(g)).collect());
    }

    let mut first_of_level = vec![0];
    for _ in 1..max_depth {
        let prev_start = *first_of_level.last().expect("non-empty");
        let old_len = sat.items.len();
        if prev_start == old_len {
            break;
        }
        first_of_level.push(old_len);
        sat.last = first_of_level.len() == max_depth;
        sat.level(prev_start, old_len);
    }
    first_of_level.push(sat.items.len());

    SearchOutcome {
        table: sat.table,
        items: sat.items,
        first_of_level,
    }
}
