//! Buchberger's algorithm for ideals and for submodules of free modules,
//! syzygies by the extended (stacked identity) construction, and quotient
//! dimension counting through standard monomials.
//!
//! Module elements use the position-over-term order: the lowest position index
//! is the most significant, ties are broken by the ring's monomial order.
//! Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use super::ring::same_ring;
use super::{Coeff, Monomial, MonomialOrder, PolyError, PolyMatrix, Polynomial, Ring};

/// Dimension over the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(*n),
            Dim::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Dim::Infinite)
    }
}

impl Add for Dim {
    type Output = Dim;
    fn add(self, rhs: Dim) -> Dim {
        match (self, rhs) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b),
            _ => Dim::Infinite,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "INFINITE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub c: Coeff,
}

/// Sparse module element, terms strictly decreasing in position-over-term order.
pub(crate) type SVec = Vec<VTerm>;

fn pot_cmp(order: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

fn to_svec(v: &[Polynomial]) -> SVec {
    v.iter()
        .enumerate()
        .flat_map(|(pos, p)| p.terms().iter().map(move |(m, c)| VTerm { pos, mono: m.clone(), c: c.clone() }))
        .collect()
}

fn from_svec(ring: &Ring, rank: usize, s: &[VTerm], offset: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for t in s {
        if t.pos >= offset && t.pos < offset + rank {
            parts[t.pos - offset].push((t.mono.clone(), t.c.clone()));
        }
    }
    parts.into_iter().map(|terms| Polynomial::from_sorted_terms(ring, terms)).collect()
}

/// `a - c * mono * b`, both inputs sorted.
fn sub_scaled(order: MonomialOrder, a: &[VTerm], b: &[VTerm], mono: &Monomial, c: &Coeff) -> SVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<VTerm> = None;
    let next_b = |j: usize| -> Option<VTerm> {
        b.get(j).map(|t| VTerm { pos: t.pos, mono: t.mono.mul(mono), c: t.c.mul(c).neg() })
    };
    if j < b.len() {
        bj = next_b(j);
    }
    while i < a.len() {
        let Some(bt) = bj.as_ref() else { break };
        match pot_cmp(order, (a[i].pos, &a[i].mono), (bt.pos, &bt.mono)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bj.take().expect("present"));
                j += 1;
                bj = next_b(j);
            }
            Ordering::Equal => {
                let s = a[i].c.add(&bt.c);
                if !s.is_zero() {
                    out.push(VTerm { pos: a[i].pos, mono: a[i].mono.clone(), c: s });
                }
                i += 1;
                j += 1;
                bj = next_b(j);
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    if let Some(bt) = bj {
        out.push(bt);
        j += 1;
        while let Some(t) = next_b(j) {
            out.push(t);
            j += 1;
        }
    }
    out
}

fn make_monic(mut v: SVec) -> SVec {
    if let Some(first) = v.first() {
        if !first.c.is_one() {
            let inv = first.c.inv().expect("nonzero leading coefficient");
            for t in v.iter_mut() {
                t.c = t.c.mul(&inv);
            }
        }
    }
    v
}

/// Fully reduces `f` by the monic elements selected from `basis`.
fn reduce_by<'a>(order: MonomialOrder, f: SVec, basis: impl Fn() -> Box<dyn Iterator<Item = &'a SVec> + 'a>) -> SVec {
    let mut done: SVec = Vec::new();
    let mut f = f;
    let mut start = 0;
    while start < f.len() {
        let head = &f[start];
        let divisor = basis().find(|g| {
            let l = &g[0];
            l.pos == head.pos && l.mono.divides(&head.mono)
        });
        match divisor {
            Some(g) => {
                let mono = g[0].mono.quotient_of(&head.mono);
                let c = head.c.clone();
                f = sub_scaled(order, &f[start + 1..], &g[1..], &mono, &c);
                start = 0;
            }
            None => {
                done.push(f[start].clone());
                start += 1;
            }
        }
    }
    done
}

struct Buchberger {
    order: MonomialOrder,
    ideal: bool,
    polys: Vec<SVec>,
    active: Vec<bool>,
    pairs: BTreeSet<(u32, usize, usize)>,
}

impl Buchberger {
    fn lead(&self, i: usize) -> &VTerm {
        &self.polys[i][0]
    }

    fn pair_lcm(&self, i: usize, j: usize) -> Monomial {
        self.lead(i).mono.lcm(&self.lead(j).mono)
    }

    fn reduce(&self, f: SVec) -> SVec {
        let polys = &self.polys;
        let active = &self.active;
        reduce_by(self.order, f, || Box::new(polys.iter().zip(active.iter()).filter(|(_, a)| **a).map(|(p, _)| p)))
    }

    fn spoly(&self, i: usize, j: usize) -> SVec {
        let l = self.pair_lcm(i, j);
        let mi = self.lead(i).mono.quotient_of(&l);
        let mj = self.lead(j).mono.quotient_of(&l);
        let gi: SVec = self.polys[i][1..]
            .iter()
            .map(|t| VTerm { pos: t.pos, mono: t.mono.mul(&mi), c: t.c.clone() })
            .collect();
        sub_scaled(self.order, &gi, &self.polys[j][1..], &mj, &self.polys[j][0].c)
    }

    /// Gebauer–Möller installation of a new basis element.
    fn insert(&mut self, h: SVec) {
        let t = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let hpos = self.lead(t).pos;
        let hmono = self.lead(t).mono.clone();

        let cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&g| self.active[g] && self.lead(g).pos == hpos)
            .map(|g| {
                let coprime = self.ideal && self.lead(g).mono.is_coprime(&hmono);
                (g, self.pair_lcm(g, t), coprime)
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, l, coprime)) in cands.iter().enumerate() {
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *coprime || !dominated {
                kept.push((*g, l.clone(), *coprime));
            }
        }

        let old: Vec<(u32, usize, usize)> = self.pairs.iter().copied().collect();
        for (d, i, j) in old {
            if self.lead(i).pos != hpos {
                continue;
            }
            let l = self.pair_lcm(i, j);
            if hmono.divides(&l) && self.pair_lcm(i, t) != l && self.pair_lcm(j, t) != l {
                self.pairs.remove(&(d, i, j));
            }
        }
        for (g, l, coprime) in kept {
            if !coprime {
                self.pairs.insert((l.degree(), g, t));
            }
        }
        for g in 0..t {
            if self.active[g] && self.lead(g).pos == hpos && hmono.divides(&self.lead(g).mono) {
                self.active[g] = false;
            }
        }
        self.active[t] = true;
    }

    fn run(order: MonomialOrder, ideal: bool, input: Vec<SVec>) -> Vec<SVec> {
        let mut bb = Buchberger { order, ideal, polys: Vec::new(), active: Vec::new(), pairs: BTreeSet::new() };
        for g in input {
            let h = bb.reduce(g);
            if !h.is_empty() {
                bb.insert(make_monic(h));
            }
        }
        while let Some(key) = bb.pairs.iter().next().copied() {
            bb.pairs.remove(&key);
            let (_, i, j) = key;
            let s = bb.spoly(i, j);
            let h = bb.reduce(s);
            if !h.is_empty() {
                bb.insert(make_monic(h));
            }
        }
        let mut basis: Vec<SVec> = bb
            .polys
            .into_iter()
            .zip(bb.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        interreduce(order, &mut basis);
        basis
    }
}

/// Minimalizes, tail-reduces and sorts (ascending by leading term).
fn interreduce(order: MonomialOrder, basis: &mut Vec<SVec>) {
    let n = basis.len();
    let keep: Vec<bool> = (0..n)
        .map(|i| {
            !(0..n).any(|j| {
                j != i
                    && basis[j][0].pos == basis[i][0].pos
                    && basis[j][0].mono.divides(&basis[i][0].mono)
                    && (basis[j][0].mono != basis[i][0].mono || j < i)
            })
        })
        .collect();
    let minimal: Vec<SVec> = basis.drain(..).zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let tail = reduce_by(order, g[1..].to_vec(), || {
            Box::new(minimal.iter().enumerate().filter(move |(j, _)| *j != i).map(|(_, p)| p))
        });
        let mut out = vec![g[0].clone()];
        out.extend(tail);
        reduced.push(out);
    }
    reduced.sort_by(|a, b| pot_cmp(order, (a[0].pos, &a[0].mono), (b[0].pos, &b[0].mono)));
    *basis = reduced;
}

/// Reduced Gröbner basis of an ideal (`rank == 1`) or of a submodule of `R^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    rank: usize,
    elems: Vec<SVec>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Ideal generators (first component of each element).
    pub fn generators(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|e| from_svec(&self.ring, 1, e, 0).remove(0)).collect()
    }

    pub fn vectors(&self) -> Vec<Vec<Polynomial>> {
        self.elems.iter().map(|e| from_svec(&self.ring, self.rank, e, 0)).collect()
    }

    /// `(position, monomial)` of each leading term.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().map(|e| (e[0].pos, e[0].mono.clone())).collect()
    }

    /// True when the basis generates the whole free module.
    pub fn is_unit(&self) -> bool {
        (0..self.rank).all(|p| self.elems.iter().any(|e| e[0].pos == p && e[0].mono.is_one()))
    }

    fn reduce_svec(&self, v: SVec) -> SVec {
        let elems = &self.elems;
        reduce_by(self.ring.order(), v, || Box::new(elems.iter()))
    }

    pub fn reduce_vector(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
        self.check_vector(v)?;
        Ok(from_svec(&self.ring, self.rank, &self.reduce_svec(to_svec(v)), 0))
    }

    fn check_vector(&self, v: &[Polynomial]) -> Result<(), PolyError> {
        if v.len() != self.rank {
            return Err(PolyError::LengthMismatch { expected: self.rank, found: v.len() });
        }
        if v.iter().any(|p| !same_ring(p.ring(), &self.ring)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    /// Checks the reduced-basis invariants: monic leads, no reducible term
    /// in any element, every S-element reduces to zero.
    pub fn is_reduced_groebner(&self) -> bool {
        let order = self.ring.order();
        for (i, g) in self.elems.iter().enumerate() {
            if !g[0].c.is_one() {
                return false;
            }
            for t in g.iter() {
                let reducible = self.elems.iter().enumerate().any(|(j, h)| {
                    (j != i || t.mono != g[0].mono || t.pos != g[0].pos)
                        && h[0].pos == t.pos
                        && h[0].mono.divides(&t.mono)
                });
                if reducible {
                    return false;
                }
            }
        }
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                if a[0].pos != b[0].pos {
                    continue;
                }
                let l = a[0].mono.lcm(&b[0].mono);
                let ma = a[0].mono.quotient_of(&l);
                let mb = b[0].mono.quotient_of(&l);
                let sa: SVec = a[1..].iter().map(|t| VTerm { pos: t.pos, mono: t.mono.mul(&ma), c: t.c.clone() }).collect();
                let s = sub_scaled(order, &sa, &b[1..], &mb, &b[0].c);
                if !self.reduce_svec(s).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn leads_at(&self, pos: usize) -> Vec<&Monomial> {
        self.elems.iter().filter(|e| e[0].pos == pos).map(|e| &e[0].mono).collect()
    }

    /// Number of standard monomials of each exact total degree `0..=max_degree`,
    /// summed over positions.
    pub fn hilbert_slices(&self, max_degree: u32) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut out = vec![0usize; max_degree as usize + 1];
        for pos in 0..self.rank {
            let leads = self.leads_at(pos);
            let bounds = vec![max_degree + 1; n];
            for_each_monomial(&bounds, max_degree, &leads, &mut |m| {
                out[m.iter().sum::<u32>() as usize] += 1;
            });
        }
        out
    }
}

/// Upper bounds on standard-monomial exponents from pure-power leading terms,
/// or `None` when some variable has no pure power (unbounded staircase).
fn staircase_bounds(nvars: usize, leads: &[&Monomial]) -> Option<Vec<u32>> {
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let b = leads
            .iter()
            .filter(|m| m.exponents().iter().enumerate().all(|(w, &e)| w == v || e == 0))
            .map(|m| m.exponents()[v])
            .min()?;
        bounds.push(b);
    }
    Some(bounds)
}

/// Calls `f` on every exponent vector inside `bounds` (exclusive) with total
/// degree at most `max_degree` that is not divisible by any of `excluded`.
fn for_each_monomial(bounds: &[u32], max_degree: u32, excluded: &[&Monomial], f: &mut dyn FnMut(&[u32])) {
    fn rec(
        k: usize,
        cur: &mut Vec<u32>,
        deg: u32,
        bounds: &[u32],
        max_degree: u32,
        excluded: &[&Monomial],
        f: &mut dyn FnMut(&[u32]),
    ) {
        if excluded.iter().any(|m| m.exponents().iter().zip(cur.iter()).all(|(a, b)| a <= b)) {
            return;
        }
        if k == bounds.len() {
            f(cur);
            return;
        }
        let mut e = 0;
        while e < bounds[k] && deg + e <= max_degree {
            cur[k] = e;
            let blocked = excluded.iter().any(|m| m.exponents().iter().zip(cur.iter()).all(|(a, b)| a <= b));
            if blocked {
                break;
            }
            rec(k + 1, cur, deg + e, bounds, max_degree, excluded, f);
            e += 1;
        }
        cur[k] = 0;
    }
    let mut cur = vec![0u32; bounds.len()];
    rec(0, &mut cur, 0, bounds, max_degree, excluded, f);
}

pub fn buchberger(gens: &[Polynomial], ring: &Ring) -> Result<GroebnerBasis, PolyError> {
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(PolyError::RingMismatch);
    }
    let input = gens.iter().map(|g| to_svec(std::slice::from_ref(g))).collect();
    let elems = Buchberger::run(ring.order(), true, input);
    Ok(GroebnerBasis { ring: ring.clone(), rank: 1, elems })
}

pub fn module_groebner(
    vectors: &[Vec<Polynomial>],
    ambient_rank: usize,
    ring: &Ring,
) -> Result<GroebnerBasis, PolyError> {
    for v in vectors {
        if v.len() != ambient_rank {
            return Err(PolyError::LengthMismatch { expected: ambient_rank, found: v.len() });
        }
        if v.iter().any(|p| !same_ring(p.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
    }
    let input = vectors.iter().map(|v| to_svec(v)).collect();
    let elems = Buchberger::run(ring.order(), ambient_rank == 1, input);
    Ok(GroebnerBasis { ring: ring.clone(), rank: ambient_rank, elems })
}

pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    if g.rank != 1 {
        return Err(PolyError::LengthMismatch { expected: g.rank, found: 1 });
    }
    Ok(g.reduce_vector(std::slice::from_ref(f))?.remove(0))
}

/// Number of standard monomials of `R^rank / <G>`.
pub fn quotient_dim(g: &GroebnerBasis) -> Dim {
    let n = g.ring.nvars();
    let mut total = 0usize;
    for pos in 0..g.rank {
        let leads = g.leads_at(pos);
        if leads.iter().any(|m| m.is_one()) {
            continue;
        }
        let Some(bounds) = staircase_bounds(n, &leads) else {
            return Dim::Infinite;
        };
        for_each_monomial(&bounds, u32::MAX, &leads, &mut |_| total += 1);
    }
    Dim::Finite(total)
}

pub fn submodule_membership(v: &[Polynomial], g: &GroebnerBasis) -> Result<bool, PolyError> {
    Ok(g.reduce_vector(v)?.iter().all(Polynomial::is_zero))
}

/// Generators of `{v : M v = 0}`. They form the reduced Gröbner basis of the
/// syzygy module.
pub fn syzygy_basis(m: &PolyMatrix) -> Vec<Vec<Polynomial>> {
    Lifter::new(m).syzygies()
}

/// Stacked basis of the columns of `[M; Id]`, used both for syzygies and for
/// solving `M a = v`.
pub struct Lifter {
    ring: Ring,
    rows: usize,
    cols: usize,
    gb: GroebnerBasis,
}

impl Lifter {
    pub fn new(m: &PolyMatrix) -> Self {
        let ring = m.ring().clone();
        let (rows, cols) = (m.rows(), m.cols());
        let stacked: Vec<Vec<Polynomial>> = (0..cols)
            .map(|j| {
                let mut v = m.col_vec(j);
                v.extend((0..cols).map(|k| if k == j { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }));
                v
            })
            .collect();
        let gb = module_groebner(&stacked, rows + cols, &ring).expect("consistent stacked vectors");
        Lifter { ring, rows, cols, gb }
    }

    pub fn syzygies(&self) -> Vec<Vec<Polynomial>> {
        self.gb
            .elems
            .iter()
            .filter(|e| e[0].pos >= self.rows)
            .map(|e| from_svec(&self.ring, self.cols, e, self.rows))
            .collect()
    }

    /// Gröbner basis of the column module of `M`.
    pub fn image_basis(&self) -> GroebnerBasis {
        let elems = self
            .gb
            .elems
            .iter()
            .filter(|e| e[0].pos < self.rows)
            .map(|e| e.iter().filter(|t| t.pos < self.rows).cloned().collect())
            .collect();
        GroebnerBasis { ring: self.ring.clone(), rank: self.rows, elems }
    }

    /// Some `a` with `M a = v`, or `None` if `v` is outside the column module.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>, PolyError> {
        if v.len() != self.rows {
            return Err(PolyError::LengthMismatch { expected: self.rows, found: v.len() });
        }
        let r = self.gb.reduce_svec(to_svec(v));
        if r.iter().any(|t| t.pos < self.rows) {
            return Ok(None);
        }
        Ok(Some(from_svec(&self.ring, self.cols, &r, self.rows).iter().map(Polynomial::neg).collect()))
    }
}

/// `dim_k (K / I)` where `K` is generated by `kernel_gens` and `I ⊆ K` is given
/// by a Gröbner basis. Counts monomials in `LT(K) \ LT(I)`.
pub fn quotient_module_dim(
    kernel_gens: &[Vec<Polynomial>],
    image_basis: &GroebnerBasis,
) -> Result<Dim, PolyError> {
    let kernel = module_groebner(kernel_gens, image_basis.rank, &image_basis.ring)?;
    quotient_of_bases(&kernel, image_basis)
}

pub(crate) fn quotient_of_bases(kernel: &GroebnerBasis, image: &GroebnerBasis) -> Result<Dim, PolyError> {
    let mut total = 0usize;
    for_each_quotient_monomial(kernel, image, &mut |_, _| total += 1).map(|finite| {
        if finite {
            Dim::Finite(total)
        } else {
            Dim::Infinite
        }
    })
}

/// Visits `(position, exponents)` for each monomial of `LT(K) \ LT(I)` in
/// ascending position then grevlex-free enumeration order. Returns `Ok(false)`
/// without visiting anything if the set is infinite.
#[allow(clippy::needless_range_loop)]
pub(crate) fn for_each_quotient_monomial(
    kernel: &GroebnerBasis,
    image: &GroebnerBasis,
    f: &mut dyn FnMut(usize, &[u32]),
) -> Result<bool, PolyError> {
    if kernel.rank != image.rank || !same_ring(&kernel.ring, &image.ring) {
        return Err(PolyError::RingMismatch);
    }
    for e in &image.elems {
        if !kernel.reduce_svec(e.clone()).is_empty() {
            return Err(PolyError::ImageNotInKernel);
        }
    }
    let n = kernel.ring.nvars();
    let mut boxes = Vec::with_capacity(kernel.rank);
    for pos in 0..kernel.rank {
        let kl = kernel.leads_at(pos);
        let il = image.leads_at(pos);
        let mut bounds = vec![0u32; n];
        for k in &kl {
            if il.iter().any(|i| i.divides(k)) {
                continue;
            }
            for v in 0..n {
                // smallest extra power of v pushing k into LT(I)
                let extra = il
                    .iter()
                    .filter(|i| (0..n).all(|w| w == v || i.exponents()[w] <= k.exponents()[w]))
                    .map(|i| i.exponents()[v].saturating_sub(k.exponents()[v]))
                    .min();
                match extra {
                    Some(x) => bounds[v] = bounds[v].max(k.exponents()[v] + x),
                    None => return Ok(false),
                }
            }
        }
        boxes.push((pos, kl, il, bounds));
    }
    for (pos, kl, il, bounds) in boxes {
        if kl.is_empty() {
            continue;
        }
        if n == 0 {
            if il.is_empty() {
                f(pos, &[]);
            }
            continue;
        }
        for_each_monomial(&bounds, u32::MAX, &il, &mut |m| {
            if kl.iter().any(|k| k.exponents().iter().zip(m).all(|(a, b)| a <= b)) {
                f(pos, m);
            }
        });
    }
    Ok(true)
}

/// Element of `K` with the given leading monomial, reduced modulo `I`.
pub(crate) fn kernel_representative(
    kernel: &GroebnerBasis,
    image: &GroebnerBasis,
    pos: usize,
    exps: &[u32],
) -> Vec<Polynomial> {
    let target = Monomial::from_exponents(exps);
    let g = kernel
        .elems
        .iter()
        .find(|e| e[0].pos == pos && e[0].mono.divides(&target))
        .expect("monomial lies in LT(K)");
    let shift = g[0].mono.quotient_of(&target);
    let scaled: SVec = g.iter().map(|t| VTerm { pos: t.pos, mono: t.mono.mul(&shift), c: t.c.clone() }).collect();
    from_svec(&kernel.ring, kernel.rank, &image.reduce_svec(scaled), 0)
}
