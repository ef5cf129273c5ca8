//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! Pairs are processed degree by degree with the Gebauer–Möller update.
//! Optionally every basis element carries its expression in the input
//! generators; S-pairs that reduce to zero then yield syzygies of the input
//! (Schreyer's construction), and pairs dropped by the coprimality criterion
//! contribute their Koszul relation.

use crate::field::Fp;
use crate::monomial::Monomial;

use super::svec::{Frame, SVec};
use super::GbStats;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
    deg: i64,
    key: u128,
}

/// A monic basis with a lookup table of leading terms by position.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub frame: Frame,
    pub basis: Vec<SVec>,
    pub leads: Vec<(Monomial, u32)>,
    by_pos: Vec<Vec<usize>>,
}

impl Reducer {
    pub fn new(frame: Frame) -> Self {
        let rank = frame.twists.len();
        Reducer { frame, basis: Vec::new(), leads: Vec::new(), by_pos: vec![Vec::new(); rank] }
    }

    pub fn push(&mut self, v: SVec) -> usize {
        let lead = *v.lead().expect("nonzero basis element");
        let idx = self.basis.len();
        self.leads.push((lead.mon, lead.pos));
        self.by_pos[lead.pos as usize].push(idx);
        self.basis.push(v);
        idx
    }

    fn find(&self, mon: &Monomial, pos: u32) -> Option<usize> {
        self.by_pos[pos as usize].iter().copied().find(|&k| self.leads[k].0.divides(mon))
    }

    /// Full reduction of `v`. When `rep` is given, the same operations are
    /// applied to it using `reps` as the expressions of the basis elements.
    pub fn reduce(&self, v: &mut SVec, mut rep: Option<(&Frame, &[SVec], &mut SVec)>) {
        let k = self.frame.field;
        let mut i = 0;
        while i < v.terms.len() {
            let t = v.terms[i];
            match self.find(&t.mon, t.pos) {
                Some(b) => {
                    let q = self.leads[b].0.quotient_of(&t.mon).expect("divisor");
                    let c = k.neg(t.coeff);
                    self.frame.axpy_from(v, i, c, &q, &self.basis[b]);
                    if let Some((rf, reps, r)) = rep.as_mut() {
                        rf.axpy(r, c, &q, &reps[b]);
                    }
                }
                None => i += 1,
            }
        }
    }

    pub fn reduces_to_zero(&self, v: &SVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v, None);
        v.is_zero()
    }
}

pub(crate) struct Output {
    /// Reduced basis sorted by increasing leading term.
    pub reducer: Reducer,
    /// Indices of inputs that belong to a minimal generating set.
    pub minimal: Vec<usize>,
    /// Generators of the syzygy module of the inputs (when tracking).
    pub syzygies: Vec<SVec>,
    pub stats: GbStats,
}

struct Engine {
    red: Reducer,
    rep_frame: Option<Frame>,
    reps: Vec<SVec>,
    degs: Vec<i64>,
    pairs: Vec<Pair>,
    syzygies: Vec<SVec>,
    minimal: Vec<usize>,
    rank_one: bool,
    stats: GbStats,
}

/// Runs Buchberger on nonzero homogeneous `gens`. With `rep_twists` set, the
/// inputs' degrees, representations and syzygies are tracked.
pub(crate) fn run(frame: Frame, gens: Vec<SVec>, rep_twists: Option<Vec<i32>>) -> Output {
    let rank_one = frame.twists.len() == 1;
    let rep_frame = rep_twists.map(|tw| Frame::new(frame.field, crate::order::MonomialOrder::TermOverPosition, tw));
    let mut e = Engine {
        red: Reducer::new(frame),
        rep_frame,
        reps: Vec::new(),
        degs: Vec::new(),
        pairs: Vec::new(),
        syzygies: Vec::new(),
        minimal: Vec::new(),
        rank_one,
        stats: GbStats::default(),
    };
    let gen_deg: Vec<i64> = gens.iter().map(|g| e.red.frame.degree(g.lead().expect("nonzero generator"))).collect();
    let mut queue: Vec<usize> = (0..gens.len()).collect();
    queue.sort_by_key(|&i| gen_deg[i]);
    let mut next = 0;
    loop {
        let pair_deg = e.pairs.iter().map(|p| p.deg).min();
        let gen_d = queue.get(next).map(|&i| gen_deg[i]);
        let d = match (pair_deg, gen_d) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let (mut now, later): (Vec<Pair>, Vec<Pair>) = std::mem::take(&mut e.pairs).into_iter().partition(|p| p.deg == d);
        e.pairs = later;
        now.sort_by(|a, b| a.key.cmp(&b.key).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        for p in now {
            e.stats.spairs += 1;
            let (v, rep) = e.spoly(&p);
            e.process(v, rep, None);
        }
        while next < queue.len() && gen_deg[queue[next]] == d {
            let i = queue[next];
            let rep = e.rep_frame.as_ref().map(|rf| rf.unit(i));
            e.process(gens[i].clone(), rep, Some(i));
            next += 1;
        }
    }
    e.minimal.sort_unstable();
    e.finish()
}

impl Engine {
    fn spoly(&self, p: &Pair) -> (SVec, Option<SVec>) {
        let k = self.red.frame.field;
        let qi = self.red.leads[p.i].0.quotient_of(&p.lcm).expect("lcm");
        let qj = self.red.leads[p.j].0.quotient_of(&p.lcm).expect("lcm");
        let mut v = self.red.frame.mul_term(Fp::ONE, &qi, &self.red.basis[p.i]);
        self.red.frame.axpy(&mut v, k.neg(Fp::ONE), &qj, &self.red.basis[p.j]);
        let rep = self.rep_frame.as_ref().map(|rf| {
            let mut r = rf.mul_term(Fp::ONE, &qi, &self.reps[p.i]);
            rf.axpy(&mut r, k.neg(Fp::ONE), &qj, &self.reps[p.j]);
            r
        });
        (v, rep)
    }

    fn process(&mut self, mut v: SVec, mut rep: Option<SVec>, input: Option<usize>) {
        match (&self.rep_frame, rep.as_mut()) {
            (Some(rf), Some(r)) => self.red.reduce(&mut v, Some((rf, &self.reps, r))),
            _ => self.red.reduce(&mut v, None),
        }
        if v.is_zero() {
            self.stats.zero_reductions += 1;
            if let Some(r) = rep.filter(|r| !r.is_zero()) {
                self.syzygies.push(r);
            }
            return;
        }
        let k = self.red.frame.field;
        let inv = k.inv(v.terms[0].coeff).expect("nonzero lead");
        let v = self.red.frame.scale(&v, inv);
        if let (Some(rf), Some(r)) = (&self.rep_frame, rep) {
            self.reps.push(rf.scale(&r, inv));
        }
        let deg = self.red.frame.degree(&v.terms[0]);
        let h = self.red.push(v);
        self.degs.push(deg);
        if let Some(i) = input {
            self.minimal.push(i);
        }
        self.update(h);
    }

    /// Gebauer–Möller pair update for the new element `h`.
    fn update(&mut self, h: usize) {
        let (mh, ph) = self.red.leads[h];
        let cands: Vec<(usize, Monomial)> = self.red.by_pos[ph as usize]
            .iter()
            .copied()
            .filter(|&g| g != h)
            .map(|g| (g, mh.lcm(&self.red.leads[g].0)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, &(g, l)) in cands.iter().enumerate() {
            let disjoint = self.rank_one && mh.is_coprime(&self.red.leads[g].0);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(&l))
                || kept.iter().any(|(_, l2, _)| l2.divides(&l));
            if disjoint || !dominated {
                kept.push((g, l, disjoint));
            } else {
                self.stats.pairs_pruned += 1;
            }
        }
        let leads = &self.red.leads;
        let before = self.pairs.len();
        self.pairs.retain(|p| {
            !(p.pos == ph
                && mh.divides(&p.lcm)
                && leads[p.i].0.lcm(&mh) != p.lcm
                && leads[p.j].0.lcm(&mh) != p.lcm)
        });
        self.stats.pairs_pruned += before - self.pairs.len();
        for (g, l, disjoint) in kept {
            if disjoint {
                self.stats.pairs_pruned += 1;
                self.koszul(g, h);
                continue;
            }
            let deg = l.degree() as i64 + self.red.frame.twists[ph as usize] as i64;
            let key = self.red.frame.key(&l, ph as usize);
            self.pairs.push(Pair { i: g, j: h, lcm: l, pos: ph, deg, key });
        }
    }

    /// Records `b_g * rep_h - b_h * rep_g` for a coprime pair in rank one.
    fn koszul(&mut self, g: usize, h: usize) {
        let Some(rf) = &self.rep_frame else { return };
        let k = self.red.frame.field;
        let poly = |v: &SVec| v.terms.iter().map(|t| (t.coeff, t.mon)).collect::<Vec<_>>();
        let fg = poly(&self.red.basis[g]);
        let fh: Vec<_> = poly(&self.red.basis[h]).into_iter().map(|(c, m)| (k.neg(c), m)).collect();
        let mut s = rf.mul_poly(&fg, &self.reps[h]);
        let t = rf.mul_poly(&fh, &self.reps[g]);
        rf.axpy(&mut s, Fp::ONE, &Monomial::ONE, &t);
        if !s.is_zero() {
            self.syzygies.push(s);
        }
    }

    /// Tail-reduces every element and sorts by leading term.
    fn finish(self) -> Output {
        let Engine { red, syzygies, minimal, stats, .. } = self;
        let mut reduced: Vec<SVec> = red
            .basis
            .iter()
            .map(|b| {
                let mut v = b.clone();
                let lead = v.terms.remove(0);
                red.reduce(&mut v, None);
                v.terms.insert(0, lead);
                v
            })
            .collect();
        let mut idx: Vec<usize> = (0..reduced.len()).collect();
        idx.sort_by_key(|&b| reduced[b].terms[0].key);
        let mut out = Reducer::new(red.frame);
        for &b in &idx {
            out.push(std::mem::take(&mut reduced[b]));
        }
        Output { reducer: out, minimal, syzygies, stats }
    }
}
