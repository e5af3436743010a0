use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use term_core::{Flag, Kind, Term};

use crate::kb::{KnowledgeBase, Source, Statement};
use crate::rules::{inference_rules, Lit, Pat, Rule, CONTRA, CONTRA_LAW, MAX_VARS};
use crate::universe::{Id, Universe};

pub type FactId = usize;
type Binding = [Option<Id>; MAX_VARS];
const EMPTY: Binding = [None; MAX_VARS];

/// A relational atom over universe terms, already in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Le(Kind, Id, Id),
    Prop(Flag, Id),
    LeM(Id, Id),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Input(Source),
    /// Forward application; premises in rule order.
    Rule { rule: usize, premises: Vec<FactId> },
    /// Contrapositive of `rule`: the first premise is the refuted conclusion,
    /// the rest are the other premises in rule order, and premise `free`
    /// of the rule is the one refuted.
    Contra { rule: usize, free: usize, premises: Vec<FactId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub atom: Atom,
    pub positive: bool,
    pub origin: Origin,
}

impl Fact {
    pub fn premises(&self) -> &[FactId] {
        match &self.origin {
            Origin::Input(_) => &[],
            Origin::Rule { premises, .. } | Origin::Contra { premises, .. } => premises,
        }
    }
}

/// A fact derived or given with both signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction {
    pub positive: FactId,
    pub negative: FactId,
}

#[derive(Default)]
struct Index {
    succ: [Vec<Vec<Id>>; 6],
    pred: [Vec<Vec<Id>>; 6],
    all: [Vec<(Id, Id)>; 6],
    props: [Vec<Id>; 12],
    lem: Vec<(Id, Id)>,
}

impl Index {
    fn new(n: usize) -> Index {
        let mut i = Index::default();
        for k in 0..6 {
            i.succ[k] = vec![Vec::new(); n];
            i.pred[k] = vec![Vec::new(); n];
        }
        i
    }

    fn insert(&mut self, a: Atom) {
        match a {
            Atom::Le(k, x, y) => {
                self.succ[k.index()][x as usize].push(y);
                self.pred[k.index()][y as usize].push(x);
                self.all[k.index()].push((x, y));
            }
            Atom::Prop(f, x) => self.props[f.index()].push(x),
            Atom::LeM(x, y) => self.lem.push((x, y)),
        }
    }
}

struct Store {
    facts: Vec<Fact>,
    /// sign 0 is positive, 1 negative
    known: [HashMap<Atom, FactId>; 2],
    idx: [Index; 2],
    contradictions: Vec<Contradiction>,
    quarantined: HashSet<FactId>,
}

fn sign(positive: bool) -> usize {
    usize::from(!positive)
}

impl Store {
    fn new(n: usize) -> Store {
        Store {
            facts: Vec::new(),
            known: [HashMap::new(), HashMap::new()],
            idx: [Index::new(n), Index::new(n)],
            contradictions: Vec::new(),
            quarantined: HashSet::new(),
        }
    }

    fn get(&self, a: &Atom, positive: bool) -> Option<FactId> {
        self.known[sign(positive)].get(a).copied()
    }

    /// Insert a new fact. A fact clashing with a known one is recorded as a
    /// contradiction and not propagated.
    fn add(&mut self, atom: Atom, positive: bool, origin: Origin) -> Option<FactId> {
        if self.get(&atom, positive).is_some() {
            return None;
        }
        let id = self.facts.len();
        self.facts.push(Fact { atom, positive, origin });
        if let Some(other) = self.get(&atom, !positive) {
            let (p, n) = if positive { (id, other) } else { (other, id) };
            self.contradictions.push(Contradiction { positive: p, negative: n });
            self.quarantined.insert(id);
            return None;
        }
        self.known[sign(positive)].insert(atom, id);
        self.idx[sign(positive)].insert(atom);
        Some(id)
    }
}

// ---- pattern matching against the universe ----

fn is_bound(p: &Pat, b: &Binding) -> bool {
    let mut v = Vec::new();
    p.vars(&mut v);
    v.iter().all(|v| b[*v].is_some())
}

fn build(u: &Universe, p: &Pat, b: &Binding) -> Term {
    match p {
        Pat::Var(v) | Pat::MedvVar(v) => u.term(b[*v].expect("bound")).clone(),
        Pat::Const(t) => t.clone(),
        Pat::Un(op, c) => Term::unary(*op, build(u, c, b)),
        Pat::Bin(op, l, r) => Term::binary(*op, build(u, l, b), build(u, r, b)),
        Pat::MBin(op, l, r) => Term::medv_op(*op, build(u, l, b), build(u, r, b)),
    }
}

fn inst(u: &Universe, k: Kind, p: &Pat, b: &Binding) -> Option<Id> {
    match p {
        Pat::Var(v) | Pat::MedvVar(v) => Some(u.nf(k, b[*v]?)),
        _ => u.lookup_nf(k, &build(u, p, b)),
    }
}

fn match_raw(u: &Universe, p: &Pat, r: Id, b: &mut Binding) -> bool {
    let t = u.term(r);
    match p {
        Pat::Var(v) | Pat::MedvVar(v) => {
            if matches!(p, Pat::MedvVar(_)) && !matches!(t, Term::Medv(_)) {
                return false;
            }
            match b[*v] {
                Some(x) => x == r,
                None => {
                    b[*v] = Some(r);
                    true
                }
            }
        }
        Pat::Const(c) => t == c,
        Pat::Un(op, c) => matches!(t, Term::Unary(o, _) if o == op) && match_raw(u, c, u.children(r)[0], b),
        Pat::Bin(op, l, rr) => {
            matches!(t, Term::Binary(o, _, _) if o == op)
                && match_raw(u, l, u.children(r)[0], b)
                && match_raw(u, rr, u.children(r)[1], b)
        }
        Pat::MBin(op, l, rr) => {
            matches!(t, Term::MedvOp(o, _, _) if o == op)
                && match_raw(u, l, u.children(r)[0], b)
                && match_raw(u, rr, u.children(r)[1], b)
        }
    }
}

/// Bindings extending `b` under which `p` denotes `target` at kind `k`.
///
/// A bare unbound variable binds to `target` itself, or with `exhaustive`
/// to every member with that normal form.
fn match_pat(u: &Universe, k: Kind, p: &Pat, target: Id, b: Binding, exhaustive: bool) -> Vec<Binding> {
    match p {
        Pat::Var(v) | Pat::MedvVar(v) => {
            if matches!(p, Pat::MedvVar(_)) && !matches!(u.term(target), Term::Medv(_)) {
                return Vec::new();
            }
            match b[*v] {
                Some(x) if u.nf(k, x) == target => vec![b],
                Some(_) => Vec::new(),
                None if exhaustive => u
                    .inv(k, target)
                    .iter()
                    .map(|&r| {
                        let mut b2 = b;
                        b2[*v] = Some(r);
                        b2
                    })
                    .collect(),
                None => {
                    let mut b2 = b;
                    b2[*v] = Some(target);
                    vec![b2]
                }
            }
        }
        _ if is_bound(p, &b) => {
            if inst(u, k, p, &b) == Some(target) {
                vec![b]
            } else {
                Vec::new()
            }
        }
        _ => {
            let mut out = Vec::new();
            for &r in u.inv(k, target) {
                let mut b2 = b;
                if match_raw(u, p, r, &mut b2) && !out.contains(&b2) {
                    out.push(b2);
                }
            }
            out
        }
    }
}

fn atom_of(u: &Universe, lit: &Lit, b: &Binding) -> Option<Atom> {
    let k = lit.kind();
    Some(match lit {
        Lit::Le(k, p, q) => Atom::Le(*k, inst(u, *k, p, b)?, inst(u, *k, q, b)?),
        Lit::Prop(f, p) => Atom::Prop(*f, inst(u, k, p, b)?),
        Lit::LeM(p, q) => Atom::LeM(inst(u, k, p, b)?, inst(u, k, q, b)?),
    })
}

fn same_shape(lit: &Lit, a: &Atom) -> bool {
    match (lit, a) {
        (Lit::Le(k, ..), Atom::Le(k2, ..)) => k == k2,
        (Lit::Prop(f, _), Atom::Prop(f2, _)) => f == f2,
        (Lit::LeM(..), Atom::LeM(..)) => true,
        _ => false,
    }
}

fn match_lit(u: &Universe, lit: &Lit, a: &Atom, b: Binding, exhaustive: bool) -> Vec<Binding> {
    let k = lit.kind();
    let sides: Vec<(&Pat, Id)> = match (lit, a) {
        (Lit::Le(k1, p, q), Atom::Le(k2, x, y)) if k1 == k2 => vec![(p, *x), (q, *y)],
        (Lit::Prop(f1, p), Atom::Prop(f2, x)) if f1 == f2 => vec![(p, *x)],
        (Lit::LeM(p, q), Atom::LeM(x, y)) => vec![(p, *x), (q, *y)],
        _ => return Vec::new(),
    };
    let mut bs = vec![b];
    for (p, x) in sides {
        bs = bs.into_iter().flat_map(|b| match_pat(u, k, p, x, b, exhaustive)).collect();
    }
    bs.retain(|b| atom_of(u, lit, b) == Some(*a));
    bs
}

/// Raw members that `p` could denote, found by climbing from a bound
/// variable or constant. `None` when `p` has no anchor.
fn climb(u: &Universe, p: &Pat, b: &Binding) -> Option<Vec<Id>> {
    let up = |cs: Vec<Id>, pos: u8, test: &dyn Fn(&Term) -> bool| -> Vec<Id> {
        let mut out: Vec<Id> = Vec::new();
        for c in cs {
            for &(par, i) in u.parents(c) {
                if i == pos && test(u.term(par)) && !out.contains(&par) {
                    out.push(par);
                }
            }
        }
        out
    };
    match p {
        Pat::Var(v) | Pat::MedvVar(v) => b[*v].map(|x| vec![x]),
        Pat::Const(t) => u.id(t).map(|x| vec![x]),
        Pat::Un(op, c) => climb(u, c, b).map(|cs| up(cs, 0, &|t| matches!(t, Term::Unary(o, _) if o == op))),
        Pat::Bin(op, l, r) => {
            let test = |t: &Term| matches!(t, Term::Binary(o, _, _) if o == op);
            if let Some(cs) = climb(u, l, b) {
                Some(up(cs, 0, &test))
            } else {
                climb(u, r, b).map(|cs| up(cs, 1, &test))
            }
        }
        Pat::MBin(op, l, r) => {
            let test = |t: &Term| matches!(t, Term::MedvOp(o, _, _) if o == op);
            if let Some(cs) = climb(u, l, b) {
                Some(up(cs, 0, &test))
            } else {
                climb(u, r, b).map(|cs| up(cs, 1, &test))
            }
        }
    }
}

fn enum_struct(u: &Universe, p: &Pat, b: Binding) -> Vec<Binding> {
    if is_bound(p, &b) {
        return vec![b];
    }
    let cands: Vec<Id> = climb(u, p, &b).unwrap_or_else(|| u.ids().collect());
    cands
        .into_iter()
        .filter_map(|r| {
            let mut b2 = b;
            match_raw(u, p, r, &mut b2).then_some(b2)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Req {
    Pos,
    Neg,
    /// any instantiation inside the universe
    Any,
}

struct Matcher<'a> {
    u: &'a Universe,
    s: &'a Store,
}

impl Matcher<'_> {
    fn cost(&self, lit: &Lit, req: Req, b: &Binding) -> usize {
        if lit.vars().iter().all(|v| b[*v].is_some()) {
            return 0;
        }
        let u = self.u;
        match req {
            Req::Any => {
                if lit.pats().iter().any(|p| !is_bound(p, b) && climb(u, p, b).is_none()) {
                    u.len() + 1
                } else {
                    4
                }
            }
            Req::Pos | Req::Neg => {
                let ix = &self.s.idx[sign(req == Req::Pos)];
                match lit {
                    Lit::Le(k, p, q) => {
                        if is_bound(p, b) {
                            inst(u, *k, p, b).map_or(0, |x| ix.succ[k.index()][x as usize].len())
                        } else if is_bound(q, b) {
                            inst(u, *k, q, b).map_or(0, |y| ix.pred[k.index()][y as usize].len())
                        } else {
                            ix.all[k.index()].len() + 2
                        }
                    }
                    Lit::Prop(f, _) => ix.props[f.index()].len(),
                    Lit::LeM(..) => ix.lem.len(),
                }
            }
        }
    }

    fn enumerate(&self, lit: &Lit, req: Req, b: Binding) -> Vec<Binding> {
        let u = self.u;
        if lit.vars().iter().all(|v| b[*v].is_some()) {
            let ok = match (atom_of(u, lit, &b), req) {
                (None, _) => false,
                (Some(_), Req::Any) => true,
                (Some(a), r) => self.s.get(&a, r == Req::Pos).is_some(),
            };
            return if ok { vec![b] } else { Vec::new() };
        }
        if req == Req::Any {
            let mut bs = vec![b];
            for p in lit.pats() {
                bs = bs.into_iter().flat_map(|b| enum_struct(u, p, b)).collect();
            }
            bs.retain(|b| atom_of(u, lit, b).is_some());
            return bs;
        }
        let ix = &self.s.idx[sign(req == Req::Pos)];
        let mut out = Vec::new();
        let mut take = |a: Atom| {
            for b2 in match_lit(u, lit, &a, b, false) {
                if !out.contains(&b2) {
                    out.push(b2);
                }
            }
        };
        match lit {
            Lit::Le(k, p, q) => {
                let ki = k.index();
                if is_bound(p, &b) {
                    if let Some(x) = inst(u, *k, p, &b) {
                        for &y in &ix.succ[ki][x as usize] {
                            take(Atom::Le(*k, x, y));
                        }
                    }
                } else if is_bound(q, &b) {
                    if let Some(y) = inst(u, *k, q, &b) {
                        for &x in &ix.pred[ki][y as usize] {
                            take(Atom::Le(*k, x, y));
                        }
                    }
                } else {
                    for &(x, y) in &ix.all[ki] {
                        take(Atom::Le(*k, x, y));
                    }
                }
            }
            Lit::Prop(f, _) => {
                for &x in &ix.props[f.index()] {
                    take(Atom::Prop(*f, x));
                }
            }
            Lit::LeM(..) => {
                for &(x, y) in &ix.lem {
                    take(Atom::LeM(x, y));
                }
            }
        }
        out
    }

    fn join(&self, mut lits: Vec<(&Lit, Req)>, b: Binding, out: &mut Vec<Binding>) {
        if lits.is_empty() {
            out.push(b);
            return;
        }
        let (i, _) = lits
            .iter()
            .enumerate()
            .map(|(i, (l, r))| (i, self.cost(l, *r, &b)))
            .min_by_key(|(_, c)| *c)
            .expect("nonempty");
        let (lit, req) = lits.remove(i);
        for b2 in self.enumerate(lit, req, b) {
            self.join(lits.clone(), b2, out);
        }
    }
}

// ---- closure ----

/// A saturated fact base over a finite universe.
pub struct Closure {
    pub universe: Universe,
    store: Store,
    pub depth: usize,
}

impl std::fmt::Debug for Closure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Closure")
            .field("universe", &self.universe.len())
            .field("facts", &self.store.facts.len())
            .finish()
    }
}

/// Three-way answer of a query; the fact ids carry the traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes(Vec<FactId>),
    No(Vec<FactId>),
    Unknown,
}

impl Answer {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Answer::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Answer::Yes(_) => "YES",
            Answer::No(_) => "NO",
            Answer::Unknown => "UNKNOWN",
        }
    }
}

/// Derivation tree of a fact. Subproofs already shown elsewhere in the
/// tree are cut and marked `repeated`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub conclusion: String,
    pub rule: String,
    pub law: String,
    pub premises: Vec<ProofTrace>,
    pub repeated: bool,
}

impl ProofTrace {
    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(|p| p.depth()).max().unwrap_or(0)
    }
}

/// Indented rendering of a trace, one conclusion per line.
pub fn explain(t: &ProofTrace) -> String {
    fn go(t: &ProofTrace, indent: usize, out: &mut String) {
        let mark = if t.repeated { " (shown above)" } else { "" };
        let _ = writeln!(out, "{:indent$}{}   [{}: {}]{}", "", t.conclusion, t.rule, t.law, mark, indent = indent);
        for p in &t.premises {
            go(p, indent + 2, out);
        }
    }
    let mut s = String::new();
    go(t, 0, &mut s);
    s
}

impl Closure {
    /// Saturate `kb` over the universe of its terms, the `extra` terms and
    /// `depth` layers of unary operations.
    pub fn new(kb: &KnowledgeBase, depth: usize, extra: &[Term]) -> Closure {
        let mut seeds: Vec<Term> = kb.atoms.keys().map(|a| Term::atom(a.clone())).collect();
        for i in &kb.inputs {
            seeds.extend(i.stmt.terms());
        }
        seeds.extend(extra.iter().cloned());
        let universe = Universe::build(&seeds, depth, kb.input_facts());
        let store = Store::new(universe.len());
        let mut c = Closure { universe, store, depth };
        c.saturate(kb);
        c
    }

    fn statement_atom(&self, s: &Statement) -> Option<Atom> {
        let u = &self.universe;
        Some(match s {
            Statement::Le(k, a, b) => Atom::Le(*k, u.lookup_nf(*k, a)?, u.lookup_nf(*k, b)?),
            Statement::Prop(f, t) => Atom::Prop(*f, u.lookup_nf(Kind::SW, t)?),
            Statement::LeM(a, b) => {
                Atom::LeM(u.id(&Term::medv(a.clone()))?, u.id(&Term::medv(b.clone()))?)
            }
        })
    }

    fn saturate(&mut self, kb: &KnowledgeBase) {
        for i in &kb.inputs {
            if let Some(a) = self.statement_atom(&i.stmt) {
                self.store.add(a, i.positive, Origin::Input(i.source.clone()));
            }
        }
        let rules = inference_rules();
        for (ri, r) in rules.iter().enumerate().filter(|(_, r)| r.is_axiom()) {
            let m = Matcher { u: &self.universe, s: &self.store };
            let mut bs = Vec::new();
            m.join(vec![(&r.conclusion, Req::Any)], EMPTY, &mut bs);
            for b in bs {
                self.emit(ri, &b);
            }
        }
        let mut next = 0;
        while next < self.store.facts.len() {
            let id = next;
            next += 1;
            if self.store.quarantined.contains(&id) {
                continue;
            }
            if self.store.facts[id].positive {
                self.fire_positive(id);
            } else {
                self.fire_negative(id);
            }
        }
    }

    fn fire_positive(&mut self, id: FactId) {
        let atom = self.store.facts[id].atom;
        for (ri, r) in inference_rules().iter().enumerate() {
            for (i, prem) in r.premises.iter().enumerate() {
                if !same_shape(prem, &atom) {
                    continue;
                }
                let (fwd, contra) = {
                    let m = Matcher { u: &self.universe, s: &self.store };
                    let mut fwd = Vec::new();
                    let mut contra = Vec::new();
                    for b in match_lit(&self.universe, prem, &atom, EMPTY, false) {
                        let mut lits: Vec<(&Lit, Req)> =
                            r.premises.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| (p, Req::Pos)).collect();
                        lits.push((&r.conclusion, Req::Any));
                        m.join(lits, b, &mut fwd);
                        for j in (0..r.premises.len()).filter(|j| *j != i) {
                            let mut lits: Vec<(&Lit, Req)> = vec![(&r.conclusion, Req::Neg), (&r.premises[j], Req::Any)];
                            lits.extend(
                                r.premises.iter().enumerate().filter(|(l, _)| *l != i && *l != j).map(|(_, p)| (p, Req::Pos)),
                            );
                            let mut bs = Vec::new();
                            m.join(lits, b, &mut bs);
                            contra.extend(bs.into_iter().map(|b| (j, b)));
                        }
                    }
                    (fwd, contra)
                };
                for b in fwd {
                    self.emit(ri, &b);
                }
                for (j, b) in contra {
                    self.emit_contra(ri, j, &b);
                }
            }
        }
    }

    fn fire_negative(&mut self, id: FactId) {
        let atom = self.store.facts[id].atom;
        for (ri, r) in inference_rules().iter().enumerate() {
            if r.is_axiom() || !same_shape(&r.conclusion, &atom) {
                continue;
            }
            let found = {
                let m = Matcher { u: &self.universe, s: &self.store };
                let mut found = Vec::new();
                for b in match_lit(&self.universe, &r.conclusion, &atom, EMPTY, false) {
                    for j in 0..r.premises.len() {
                        let mut lits: Vec<(&Lit, Req)> = vec![(&r.premises[j], Req::Any)];
                        lits.extend(r.premises.iter().enumerate().filter(|(l, _)| *l != j).map(|(_, p)| (p, Req::Pos)));
                        let mut bs = Vec::new();
                        m.join(lits, b, &mut bs);
                        found.extend(bs.into_iter().map(|b| (j, b)));
                    }
                }
                found
            };
            for (j, b) in found {
                self.emit_contra(ri, j, &b);
            }
        }
    }

    fn emit(&mut self, ri: usize, b: &Binding) {
        let r = &inference_rules()[ri];
        let u = &self.universe;
        let Some(c) = atom_of(u, &r.conclusion, b) else { return };
        if self.store.get(&c, true).is_some() {
            return;
        }
        let mut premises = Vec::with_capacity(r.premises.len());
        for p in &r.premises {
            match atom_of(u, p, b).and_then(|a| self.store.get(&a, true)) {
                Some(id) => premises.push(id),
                None => return,
            }
        }
        self.store.add(c, true, Origin::Rule { rule: ri, premises });
    }

    fn emit_contra(&mut self, ri: usize, free: usize, b: &Binding) {
        let r = &inference_rules()[ri];
        let u = &self.universe;
        let Some(target) = atom_of(u, &r.premises[free], b) else { return };
        if self.store.get(&target, false).is_some() || self.store.get(&target, true).is_some() {
            return;
        }
        let Some(refuted) = atom_of(u, &r.conclusion, b).and_then(|c| self.store.get(&c, false)) else { return };
        let mut premises = vec![refuted];
        for (j, p) in r.premises.iter().enumerate().filter(|(j, _)| *j != free) {
            let _ = j;
            match atom_of(u, p, b).and_then(|a| self.store.get(&a, true)) {
                Some(id) => premises.push(id),
                None => return,
            }
        }
        self.store.add(target, false, Origin::Contra { rule: ri, free, premises });
    }

    // ---- inspection ----

    pub fn facts(&self) -> &[Fact] {
        &self.store.facts
    }

    pub fn fact(&self, id: FactId) -> &Fact {
        &self.store.facts[id]
    }

    /// Ids of the facts in force (contradicting facts are excluded).
    pub fn established(&self) -> impl Iterator<Item = FactId> + '_ {
        (0..self.store.facts.len()).filter(|i| !self.store.quarantined.contains(i))
    }

    pub fn contradictions(&self) -> &[Contradiction] {
        &self.store.contradictions
    }

    pub fn status(&self, a: &Atom) -> Option<(bool, FactId)> {
        if let Some(id) = self.store.get(a, true) {
            return Some((true, id));
        }
        self.store.get(a, false).map(|id| (false, id))
    }

    pub fn show_atom(&self, a: &Atom, positive: bool) -> String {
        let u = &self.universe;
        match *a {
            Atom::Le(k, x, y) => {
                format!("{} {k} {} {}", if positive { "le" } else { "nle" }, u.term(x), u.term(y))
            }
            Atom::Prop(f, x) => format!("{} {f} {}", if positive { "prop" } else { "notprop" }, u.term(x)),
            Atom::LeM(x, y) => format!("{} {} {}", if positive { "leM" } else { "nleM" }, u.term(x), u.term(y)),
        }
    }

    pub fn show(&self, id: FactId) -> String {
        let f = &self.store.facts[id];
        self.show_atom(&f.atom, f.positive)
    }

    /// The established facts as printed lines, for comparing closures.
    pub fn fact_set(&self) -> BTreeSet<String> {
        self.established().map(|i| self.show(i)).collect()
    }

    pub fn le_atom(&self, k: Kind, a: &Term, b: &Term) -> Option<Atom> {
        Some(Atom::Le(k, self.universe.lookup_nf(k, a)?, self.universe.lookup_nf(k, b)?))
    }

    pub fn prop_atom(&self, f: Flag, t: &Term) -> Option<Atom> {
        Some(Atom::Prop(f, self.universe.lookup_nf(Kind::SW, t)?))
    }

    fn answer(&self, a: Option<Atom>) -> Answer {
        match a.and_then(|a| self.status(&a)) {
            Some((true, id)) => Answer::Yes(vec![id]),
            Some((false, id)) => Answer::No(vec![id]),
            None => Answer::Unknown,
        }
    }

    pub fn query_le(&self, k: Kind, a: &Term, b: &Term) -> Answer {
        self.answer(self.le_atom(k, a, b))
    }

    pub fn query_prop(&self, f: Flag, t: &Term) -> Answer {
        self.answer(self.prop_atom(f, t))
    }

    /// `a ≡k b` as the conjunction of both reductions.
    pub fn query_equiv(&self, k: Kind, a: &Term, b: &Term) -> Answer {
        match (self.query_le(k, a, b), self.query_le(k, b, a)) {
            (Answer::Yes(mut x), Answer::Yes(y)) => {
                x.extend(y);
                Answer::Yes(x)
            }
            (Answer::No(x), _) | (_, Answer::No(x)) => Answer::No(x),
            _ => Answer::Unknown,
        }
    }

    pub fn rule_name(&self, id: FactId) -> String {
        match &self.store.facts[id].origin {
            Origin::Input(Source::Seed(_)) => "seed".into(),
            Origin::Input(Source::User) => "given".into(),
            Origin::Rule { rule, .. } => inference_rules()[*rule].name.clone(),
            Origin::Contra { rule, .. } => format!("{CONTRA} via {}", inference_rules()[*rule].name),
        }
    }

    fn law(&self, id: FactId) -> String {
        match &self.store.facts[id].origin {
            Origin::Input(Source::Seed(c)) => c.clone(),
            Origin::Input(Source::User) => "user fact".into(),
            Origin::Rule { rule, .. } => inference_rules()[*rule].law.into(),
            Origin::Contra { rule, .. } => format!("{CONTRA_LAW} ({})", inference_rules()[*rule].law),
        }
    }

    pub fn trace(&self, id: FactId) -> ProofTrace {
        let mut seen = HashSet::new();
        self.trace_in(id, &mut seen)
    }

    fn trace_in(&self, id: FactId, seen: &mut HashSet<FactId>) -> ProofTrace {
        let repeated = !seen.insert(id);
        let premises = if repeated {
            Vec::new()
        } else {
            self.store.facts[id].premises().iter().map(|p| self.trace_in(*p, seen)).collect()
        };
        ProofTrace { conclusion: self.show(id), rule: self.rule_name(id), law: self.law(id), premises, repeated }
    }

    pub fn explain(&self, id: FactId) -> String {
        explain(&self.trace(id))
    }

    /// Check that a derived fact is an instance of its rule: premises and
    /// conclusion are matched against the rule's templates from scratch.
    pub fn replay(&self, id: FactId) -> bool {
        let f = &self.store.facts[id];
        let atoms = |ids: &[FactId], positive: bool| -> Option<Vec<Atom>> {
            ids.iter()
                .map(|p| {
                    let g = &self.store.facts[*p];
                    (g.positive == positive && !self.store.quarantined.contains(p)).then_some(g.atom)
                })
                .collect()
        };
        match &f.origin {
            Origin::Input(_) => true,
            Origin::Rule { rule, premises } => {
                let Some(ps) = atoms(premises, true) else { return false };
                f.positive && premises.iter().all(|p| *p < id) && validate(&self.universe, &inference_rules()[*rule], &ps, &f.atom)
            }
            Origin::Contra { rule, free, premises } => {
                let r = &inference_rules()[*rule];
                let Some((&refuted, rest)) = premises.split_first() else { return false };
                let c = &self.store.facts[refuted];
                let Some(mut ps) = atoms(rest, true) else { return false };
                if f.positive || c.positive || *free > ps.len() || premises.iter().any(|p| *p >= id) {
                    return false;
                }
                ps.insert(*free, f.atom);
                validate(&self.universe, r, &ps, &c.atom)
            }
        }
    }
}

fn validate(u: &Universe, r: &Rule, premises: &[Atom], conclusion: &Atom) -> bool {
    if premises.len() != r.premises.len() {
        return false;
    }
    let lits: Vec<&Lit> = r.premises.iter().chain(std::iter::once(&r.conclusion)).collect();
    let atoms: Vec<&Atom> = premises.iter().chain(std::iter::once(conclusion)).collect();
    // A literal whose instance collapsed under normalization cannot bind its
    // own variables, so try every order until the others have bound them.
    orders(lits.len()).into_iter().any(|order| {
        let mut bs = vec![EMPTY];
        for &i in &order {
            bs = bs.into_iter().flat_map(|b| match_lit(u, lits[i], atoms[i], b, true)).collect();
            bs.dedup();
            if bs.is_empty() {
                return false;
            }
        }
        bs.iter().any(|b| lits.iter().zip(&atoms).all(|(l, a)| atom_of(u, l, b) == Some(**a)))
    })
}

/// Permutations of `0..n`, the identity first.
fn orders(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in orders(n - 1) {
        for pos in (0..=rest.len()).rev() {
            let mut o = rest.clone();
            o.insert(pos, n - 1);
            out.push(o);
        }
    }
    out
}
