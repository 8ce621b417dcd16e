//! Buchberger's algorithm on submodules of graded free modules.
//!
//! One engine serves ideals (rank one), module Gröbner bases, minimal
//! generators of a quotient `(U + V) / V`, and kernels read off a graph
//! module under a block order.

use std::cmp::Ordering;

use super::vector::{make_monic, sub_mul, ModOrder, Term, Vector};
use crate::ring::{FieldSpec, Monomial};

/// Settings for one run.
#[derive(Clone, Debug)]
pub struct GbSpec<'a> {
    pub field: FieldSpec,
    pub ord: &'a ModOrder,
    /// Degree of each basis vector of the ambient free module.
    pub twists: &'a [i32],
    /// Variable weights; `None` means all ones.
    pub weights: Option<&'a [u32]>,
    /// Components `>= split` form the kernel block of a graph module.
    pub split: Option<usize>,
    /// Stop once every remaining pair and input lies above this degree.
    pub max_degree: Option<i32>,
    /// Homogeneous input: process degree by degree.
    pub graded: bool,
}

impl<'a> GbSpec<'a> {
    pub fn new(field: FieldSpec, ord: &'a ModOrder, twists: &'a [i32]) -> Self {
        GbSpec { field, ord, twists, weights: None, split: None, max_degree: None, graded: true }
    }
}

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    lead: Monomial,
    comp: u32,
    mask: u32,
    deg: i32,
    redundant: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i32,
    kernel: bool,
}

/// Result of a run.
#[derive(Clone, Debug, Default)]
pub struct GbOutput {
    /// Reduced, monic basis sorted ascending by leading term.
    pub basis: Vec<Vector>,
    /// Indices into `U` of inputs that survived reduction, i.e. minimal
    /// generators of `(U + V) / V` in graded mode.
    pub mingens: Vec<usize>,
    /// New kernel-block elements found outside kernel pairs, in degree
    /// order; minimal generators of the kernel in graded mode.
    pub kernel: Vec<Vector>,
}

struct Engine<'a> {
    spec: GbSpec<'a>,
    elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    rank1: bool,
}

impl<'a> Engine<'a> {
    fn wdeg(&self, m: &Monomial) -> i32 {
        match self.spec.weights {
            None => m.degree() as i32,
            Some(w) => m.exps().iter().zip(w).map(|(&e, &w)| e as i32 * w as i32).sum(),
        }
    }

    fn term_deg(&self, t: &Term) -> i32 {
        self.wdeg(&t.m) + self.spec.twists[t.comp as usize]
    }

    fn vec_deg(&self, v: &[Term]) -> i32 {
        v.iter().map(|t| self.term_deg(t)).max().unwrap_or(i32::MIN)
    }

    /// Sugar of the pair `(i, j)` with lcm `l`.
    fn pair_sugar(&self, i: usize, j: usize, l: &Monomial) -> i32 {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let da = a.deg + self.wdeg(l) - self.wdeg(&a.lead);
        let db = b.deg + self.wdeg(l) - self.wdeg(&b.lead);
        da.max(db)
    }

    fn is_kernel_comp(&self, c: u32) -> bool {
        matches!(self.spec.split, Some(s) if c as usize >= s)
    }

    fn find_reducer(&self, m: &Monomial, comp: u32) -> Option<usize> {
        let list = self.by_comp.get(comp as usize)?;
        let mask = m.divmask();
        list.iter()
            .copied()
            .find(|&i| {
                let e = &self.elems[i];
                e.mask & !mask == 0 && e.lead.divides(m)
            })
    }

    /// Top reduction; leaves tails alone.
    fn top_reduce(&self, mut v: Vector) -> Vector {
        let f = self.spec.field;
        while let Some(t) = v.first().copied() {
            match self.find_reducer(&t.m, t.comp) {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = g.lead.quotient_of(&t.m);
                    v = sub_mul(&v[1..], t.c, &q, &g.v[1..], self.spec.ord, f);
                }
                None => break,
            }
        }
        v
    }

    /// Reduction of every term.
    fn full_reduce(&self, mut v: Vector, skip: Option<usize>) -> Vector {
        let f = self.spec.field;
        let mut out = Vec::new();
        let mut start = 0;
        while start < v.len() {
            let t = v[start];
            let red = self.by_comp.get(t.comp as usize).and_then(|list| {
                let mask = t.m.divmask();
                list.iter().copied().find(|&i| {
                    let e = &self.elems[i];
                    Some(i) != skip && !e.redundant && e.mask & !mask == 0 && e.lead.divides(&t.m)
                })
            });
            match red {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = g.lead.quotient_of(&t.m);
                    v = sub_mul(&v[start + 1..], t.c, &q, &g.v[1..], self.spec.ord, f);
                    start = 0;
                }
                None => {
                    out.push(t);
                    start += 1;
                }
            }
        }
        out
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = a.lead.quotient_of(&p.lcm);
        let qb = b.lead.quotient_of(&p.lcm);
        // both monic: qa*a - qb*b, leads cancel
        let f = self.spec.field;
        let mut left: Vector = a.v[1..].iter().map(|t| Term { m: t.m.mul(&qa), ..*t }).collect();
        if left.is_empty() && b.v.len() == 1 {
            return Vec::new();
        }
        left = sub_mul(&left, 1, &qb, &b.v[1..], self.spec.ord, f);
        left
    }

    /// Adds a monic, top-reduced element and updates pairs (Gebauer–Möller).
    fn insert(&mut self, v: Vector, deg: i32) -> usize {
        let lead = v[0].m;
        let comp = v[0].comp;
        let h = self.elems.len();
        let kernel_h = self.is_kernel_comp(comp);
        self.elems.push(Elem { v, lead, comp, mask: lead.divmask(), deg, redundant: false });
        while self.by_comp.len() <= comp as usize {
            self.by_comp.push(Vec::new());
        }

        // candidate new pairs
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for &g in &self.by_comp[comp as usize] {
            let e = &self.elems[g];
            if e.redundant {
                continue;
            }
            let coprime = self.rank1 && lead.is_coprime(&e.lead);
            cand.push((g, lead.lcm(&e.lead), coprime));
        }
        // chain criterion on new pairs, then drop coprime ones
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..cand.len() {
            let (g, l, coprime) = cand[k];
            let dominated = !coprime
                && (cand[k + 1..].iter().any(|c| c.1.divides(&l))
                    || keep.iter().any(|c| c.1.divides(&l)));
            if coprime || !dominated {
                keep.push((g, l, coprime));
            }
        }
        // old pairs killed by the new lead
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if elems[p.i].comp != comp {
                return true;
            }
            if !lead.divides(&p.lcm) {
                return true;
            }
            let li = lead.lcm(&elems[p.i].lead);
            let lj = lead.lcm(&elems[p.j].lead);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, coprime) in keep {
            if coprime {
                continue;
            }
            let deg = self.pair_sugar(g, h, &l);
            self.pairs.push(Pair { i: g, j: h, lcm: l, deg, kernel: kernel_h });
        }
        for &g in &self.by_comp[comp as usize] {
            if !self.elems[g].redundant && lead.divides(&self.elems[g].lead) {
                self.elems[g].redundant = true;
            }
        }
        self.by_comp[comp as usize].push(h);
        h
    }

    fn next_pair(&mut self, upto: i32) -> Option<Pair> {
        let ord = self.spec.ord;
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            if p.deg > upto {
                continue;
            }
            best = match best {
                None => Some(k),
                Some(b) => {
                    let q = &self.pairs[b];
                    let better = p.deg < q.deg
                        || (p.deg == q.deg
                            && (p.kernel && !q.kernel
                                || (p.kernel == q.kernel
                                    && ord.cmp(&p.lcm, self.elems[p.i].comp, &q.lcm, self.elems[q.i].comp)
                                        == Ordering::Less)));
                    if better {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(|k| self.pairs.swap_remove(k))
    }

    fn add_reduced(&mut self, mut r: Vector, deg: i32, from_input: bool, from_kernel_pair: bool, out: &mut GbOutput) -> bool {
        if r.is_empty() {
            return false;
        }
        make_monic(&mut r, self.spec.field);
        let kernel = self.is_kernel_comp(r[0].comp);
        if kernel && !from_kernel_pair {
            out.kernel.push(r.clone());
        }
        let _ = from_input;
        self.insert(r, deg);
        true
    }
}

fn lowest(items: &[(i32, usize)], pos: usize) -> Option<i32> {
    items.get(pos).map(|x| x.0)
}

/// Runs Buchberger on `v_inputs` followed by `u_inputs`.
///
/// In graded mode the degrees are handled in increasing order and, within a
/// degree, pairs come first, then `V`, then `U`; the surviving `U` inputs are
/// minimal generators of `(U + V) / V`.
pub fn run(spec: &GbSpec<'_>, v_inputs: &[Vector], u_inputs: &[Vector]) -> GbOutput {
    let mut eng = Engine {
        spec: spec.clone(),
        elems: Vec::new(),
        by_comp: vec![Vec::new(); spec.twists.len()],
        pairs: Vec::new(),
        rank1: spec.twists.len() == 1,
    };
    let mut out = GbOutput::default();
    let mut vs: Vec<(i32, usize)> = v_inputs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_empty())
        .map(|(i, v)| (eng.vec_deg(v), i))
        .collect();
    let mut us: Vec<(i32, usize)> = u_inputs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_empty())
        .map(|(i, v)| (eng.vec_deg(v), i))
        .collect();
    vs.sort();
    us.sort();
    let (mut vp, mut up) = (0, 0);
    let cap = spec.max_degree.unwrap_or(i32::MAX);

    if spec.graded {
        loop {
            let dp = eng.pairs.iter().map(|p| p.deg).min();
            let d = [dp, lowest(&vs, vp), lowest(&us, up)].into_iter().flatten().min();
            let Some(d) = d else { break };
            if d > cap {
                break;
            }
            while let Some(p) = eng.next_pair(d) {
                let s = eng.spoly(&p);
                let r = eng.top_reduce(s);
                eng.add_reduced(r, d, false, p.kernel, &mut out);
            }
            while vp < vs.len() && vs[vp].0 == d {
                let r = eng.top_reduce(v_inputs[vs[vp].1].clone());
                eng.add_reduced(r, d, true, false, &mut out);
                vp += 1;
            }
            while up < us.len() && us[up].0 == d {
                let r = eng.top_reduce(u_inputs[us[up].1].clone());
                if eng.add_reduced(r, d, true, false, &mut out) {
                    out.mingens.push(us[up].1);
                }
                up += 1;
            }
        }
    } else {
        // sugar strategy: inputs enter as pairs of their own
        let all: Vec<&Vector> = v_inputs.iter().chain(u_inputs.iter()).collect();
        let mut order: Vec<(i32, usize)> = all.iter().enumerate().filter(|(_, v)| !v.is_empty()).map(|(i, v)| (eng.vec_deg(v), i)).collect();
        order.sort();
        let mut ip = 0;
        loop {
            let dp = eng.pairs.iter().map(|p| p.deg).min();
            let di = order.get(ip).map(|x| x.0);
            let d = match (dp, di) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if d > cap {
                break;
            }
            if di == Some(d) {
                let idx = order[ip].1;
                ip += 1;
                let r = eng.top_reduce(all[idx].clone());
                let deg = eng.vec_deg(&r);
                eng.add_reduced(r, deg.max(d), true, false, &mut out);
                continue;
            }
            let p = eng.next_pair(d).unwrap();
            let s = eng.spoly(&p);
            let r = eng.top_reduce(s);
            if !r.is_empty() {
                let deg = eng.vec_deg(&r).max(p.deg);
                eng.add_reduced(r, deg, false, p.kernel, &mut out);
            }
        }
    }

    // interreduce
    let keep: Vec<usize> = (0..eng.elems.len()).filter(|&i| !eng.elems[i].redundant).collect();
    let mut basis: Vec<Vector> = Vec::with_capacity(keep.len());
    for &i in &keep {
        let v = eng.elems[i].v.clone();
        let lead = v[0];
        let mut tail = eng.full_reduce(v[1..].to_vec(), Some(i));
        let mut r = vec![lead];
        r.append(&mut tail);
        make_monic(&mut r, spec.field);
        basis.push(r);
    }
    basis.sort_by(|a, b| spec.ord.cmp_terms(&a[0], &b[0]));
    out.basis = basis;
    out
}

/// Fully reduces `v` against a reduced basis.
pub fn normal_form(spec: &GbSpec<'_>, basis: &[Vector], v: Vector) -> Vector {
    let f = spec.field;
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); spec.twists.len()];
    for (i, g) in basis.iter().enumerate() {
        by_comp[g[0].comp as usize].push(i);
    }
    let masks: Vec<u32> = basis.iter().map(|g| g[0].m.divmask()).collect();
    let mut v = v;
    let mut out = Vec::new();
    let mut start = 0;
    while start < v.len() {
        let t = v[start];
        let mask = t.m.divmask();
        let red = by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| masks[i] & !mask == 0 && basis[i][0].m.divides(&t.m));
        match red {
            Some(i) => {
                let g = &basis[i];
                let q = g[0].m.quotient_of(&t.m);
                let c = f.mul(t.c, f.inv(g[0].c));
                v = sub_mul(&v[start + 1..], c, &q, &g[1..], spec.ord, f);
                start = 0;
            }
            None => {
                out.push(t);
                start += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::vector::{from_poly, to_poly};
    use crate::ring::{MonomialOrder, RingContext};

    #[test]
    fn one_spair() {
        let r = RingContext::standard(3);
        let ord = ModOrder::top(MonomialOrder::Grevlex);
        let f1 = r.monomial(&[2, 0, 0]).add(&r.monomial(&[0, 2, 0]));
        let f2 = r.monomial(&[1, 1, 0]);
        let spec = GbSpec::new(r.field, &ord, &[0]);
        let out = run(&spec, &[], &[from_poly(&f1, &ord), from_poly(&f2, &ord)]);
        let got: Vec<_> = out.basis.iter().map(|v| to_poly(v, 3, r.field)).collect();
        assert_eq!(got, vec![f2, f1, r.monomial(&[0, 3, 0])]);
        assert_eq!(out.mingens, vec![0, 1]);
    }
}
