use std::collections::HashMap;
use std::sync::Mutex;

use rewrite_engine::{normalize, Facts};
use term_core::{Kind, Term, UnOp};

pub type Id = u32;

/// The finite set of terms closure may talk about, with normal forms at
/// every kind and structural indexes.
///
/// Built from seed terms: subterm closure, normal forms at all kinds, then
/// `depth` rounds of the unary operations, then normal forms again.
pub struct Universe {
    terms: Vec<Term>,
    ids: HashMap<Term, Id>,
    children: Vec<Vec<Id>>,
    parents: Vec<Vec<(Id, u8)>>,
    nf: Vec<[Id; 6]>,
    inv: [Vec<Vec<Id>>; 6],
    facts: Box<dyn Facts + Send + Sync>,
    cache: Mutex<HashMap<(Kind, Term), Option<Id>>>,
}

impl std::fmt::Debug for Universe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Universe").field("len", &self.terms.len()).finish()
    }
}

impl Universe {
    pub fn build<F: Facts + Send + Sync + 'static>(seeds: &[Term], depth: usize, facts: F) -> Universe {
        let mut b = Builder { terms: Vec::new(), ids: HashMap::new() };
        for c in [Term::Zero, Term::One, Term::Inf] {
            b.add(&c);
        }
        for t in seeds {
            b.add(t);
        }
        let mut nfs: HashMap<(Kind, Id), Id> = HashMap::new();
        b.close_nf(&facts, &mut nfs, 0);
        let mut frontier: Vec<Id> = (0..b.terms.len() as Id).collect();
        for _ in 0..depth {
            let mut next = Vec::new();
            for &i in &frontier {
                for op in UnOp::ALL {
                    let t = Term::unary(op, b.terms[i as usize].clone());
                    let before = b.terms.len();
                    let id = b.add(&t);
                    if b.terms.len() > before {
                        next.push(id);
                    }
                }
            }
            frontier = next;
        }
        b.close_nf(&facts, &mut nfs, 0);

        let n = b.terms.len();
        let mut children = vec![Vec::new(); n];
        let mut parents = vec![Vec::new(); n];
        for (i, t) in b.terms.iter().enumerate() {
            for (pos, c) in t.children().into_iter().enumerate() {
                let c = b.ids[c];
                children[i].push(c);
                parents[c as usize].push((i as Id, pos as u8));
            }
        }
        let nf: Vec<[Id; 6]> = (0..n as Id).map(|i| Kind::ALL.map(|k| nfs[&(k, i)])).collect();
        let mut inv: [Vec<Vec<Id>>; 6] = Default::default();
        for k in Kind::ALL {
            inv[k.index()] = vec![Vec::new(); n];
            for i in 0..n {
                inv[k.index()][nf[i][k.index()] as usize].push(i as Id);
            }
        }
        Universe {
            terms: b.terms,
            ids: b.ids,
            children,
            parents,
            nf,
            inv,
            facts: Box::new(facts),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, id: Id) -> &Term {
        &self.terms[id as usize]
    }

    pub fn id(&self, t: &Term) -> Option<Id> {
        self.ids.get(t).copied()
    }

    pub fn children(&self, id: Id) -> &[Id] {
        &self.children[id as usize]
    }

    pub fn parents(&self, id: Id) -> &[(Id, u8)] {
        &self.parents[id as usize]
    }

    pub fn nf(&self, k: Kind, id: Id) -> Id {
        self.nf[id as usize][k.index()]
    }

    /// All members whose normal form at `k` is `id`.
    pub fn inv(&self, k: Kind, id: Id) -> &[Id] {
        &self.inv[k.index()][id as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = Id> {
        0..self.terms.len() as Id
    }

    /// Normal form of an arbitrary term at `k`, if it lies in the universe.
    pub fn lookup_nf(&self, k: Kind, t: &Term) -> Option<Id> {
        if let Some(i) = self.id(t) {
            return Some(self.nf(k, i));
        }
        let key = (k, t.clone());
        if let Some(r) = self.cache.lock().unwrap().get(&key) {
            return *r;
        }
        let r = normalize(t, k, &*self.facts).ok().and_then(|n| self.id(&n)).map(|i| self.nf(k, i));
        self.cache.lock().unwrap().insert(key, r);
        r
    }
}

struct Builder {
    terms: Vec<Term>,
    ids: HashMap<Term, Id>,
}

impl Builder {
    /// Intern `t` with all its subterms.
    fn add(&mut self, t: &Term) -> Id {
        if let Some(&i) = self.ids.get(t) {
            return i;
        }
        for c in t.children() {
            self.add(c);
        }
        let i = self.terms.len() as Id;
        self.terms.push(t.clone());
        self.ids.insert(t.clone(), i);
        i
    }

    /// Add normal forms at every kind until nothing new appears.
    fn close_nf<F: Facts>(&mut self, facts: &F, nfs: &mut HashMap<(Kind, Id), Id>, mut from: usize) {
        while from < self.terms.len() {
            let end = self.terms.len();
            for i in from..end {
                for k in Kind::ALL {
                    let t = self.terms[i].clone();
                    // a term that fails to normalize stands for itself
                    let n = normalize(&t, k, facts).unwrap_or(t);
                    let id = self.add(&n);
                    nfs.insert((k, i as Id), id);
                }
            }
            from = end;
        }
        // normal forms are fixpoints, but only by confluence; pin them
        for i in 0..self.terms.len() as Id {
            for k in Kind::ALL {
                let n = nfs[&(k, i)];
                nfs.entry((k, n)).and_modify(|m| *m = n);
            }
        }
    }
}
