//! Ideals, submodules of free modules, and the Groebner-engine operations on
//! them: standard bases under global and local orders, normal forms,
//! elimination, preimages under ring maps, colon ideals and saturation,
//! subquotient dimensions and minimal free resolutions.

use crate::dimension::Dim;
use crate::engine::buchberger::{reduces_to_zero, standard_basis, EngineLimits};
use crate::engine::dim::{local_quotient_basis, local_quotient_dim, module_coker_dim};
use crate::engine::resolution::{minimal_free_resolution, ResolutionData};
use crate::engine::syzygy::syzygies;
use crate::engine::vector::{evec_from_poly, evec_from_polys, evec_to_poly, evec_to_polys, EVec};
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, RingOrder};
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::{ensure_same_ring, Ring, RingRc};
use num::bigint::BigInt;
use std::sync::OnceLock;

/// A finitely generated ideal, optionally carrying one cached standard basis.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRc,
    gens: Vec<Poly>,
    cache: OnceLock<CachedBasis>,
}

#[derive(Debug, Clone)]
pub struct CachedBasis {
    pub order: ModuleOrder,
    pub basis: Vec<Poly>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(c) = self.cache.get() {
            let _ = cache.set(c.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    /// Zero generators are dropped; generators are normalized to primitive
    /// integer form and deterministically ordered.
    pub fn new(ring: &RingRc, gens: Vec<Poly>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            ensure_same_ring(g.ring(), ring, "ideal generator")?;
            if !g.is_zero() {
                out.push(g.primitive_part());
            }
        }
        sort_polys(&mut out);
        out.dedup();
        Ok(Ideal { ring: ring.clone(), gens: out, cache: OnceLock::new() })
    }

    pub fn parse(ring: &RingRc, texts: &[&str]) -> Result<Self> {
        let gens = texts
            .iter()
            .map(|t| parse_poly(t, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn unit(ring: &RingRc) -> Self {
        Ideal::new(ring, vec![Poly::one(ring)]).unwrap()
    }

    pub fn zero(ring: &RingRc) -> Self {
        Ideal::new(ring, vec![]).unwrap()
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Standard basis under the given order; the first computed basis is
    /// cached (write-once).
    pub fn basis(&self, ord: &ModuleOrder, lim: &EngineLimits) -> Result<Vec<Poly>> {
        if let Some(c) = self.cache.get() {
            if orders_match(&c.order, ord) {
                return Ok(c.basis.clone());
            }
        }
        let vecs: Vec<EVec<BigInt>> = self.gens.iter().map(|p| evec_from_poly(p, ord)).collect();
        let b = standard_basis(&vecs, ord, lim)?;
        let polys: Vec<Poly> = b.iter().map(|v| evec_to_poly(v, &self.ring)).collect();
        let _ = self
            .cache
            .set(CachedBasis { order: ord.clone(), basis: polys.clone() });
        Ok(polys)
    }

    /// Reduced Groebner basis under grevlex; canonical for golden output.
    pub fn groebner(&self, lim: &EngineLimits) -> Result<Vec<Poly>> {
        self.basis(&ModuleOrder::top(RingOrder::Grevlex), lim)
    }

    /// Membership in the localized ideal at the origin (Mora normal form).
    pub fn contains_local(&self, p: &Poly, lim: &EngineLimits) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let ord = ModuleOrder::top(RingOrder::local(self.ring.nvars()));
        let basis = self.basis_vectors(&ord, lim)?;
        reduces_to_zero(&evec_from_poly(p, &ord), &basis, &ord, lim)
    }

    /// Membership in the polynomial ideal (global grevlex normal form).
    pub fn contains_global(&self, p: &Poly, lim: &EngineLimits) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let ord = ModuleOrder::top(RingOrder::Grevlex);
        let basis = self.basis_vectors(&ord, lim)?;
        reduces_to_zero(&evec_from_poly(p, &ord), &basis, &ord, lim)
    }

    fn basis_vectors(&self, ord: &ModuleOrder, lim: &EngineLimits) -> Result<Vec<EVec<BigInt>>> {
        let polys = self.basis(ord, lim)?;
        Ok(polys.iter().map(|p| evec_from_poly(p, ord)).collect())
    }

    /// Local (at the origin) equality of ideals by mutual Mora membership.
    pub fn equals_local(&self, other: &Ideal, lim: &EngineLimits) -> Result<bool> {
        for g in other.gens() {
            if !self.contains_local(g, lim)? {
                return Ok(false);
            }
        }
        for g in self.gens() {
            if !other.contains_local(g, lim)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// dim_C of R_loc / I at the origin.
    pub fn local_quotient_dim(&self, lim: &EngineLimits) -> Result<Dim> {
        local_quotient_dim(&self.gens, self.ring.nvars(), lim)
    }

    /// Monomial basis of R_loc / I when finite.
    pub fn local_quotient_basis(&self, lim: &EngineLimits) -> Result<Vec<Monomial>> {
        local_quotient_basis(&self.gens, self.ring.nvars(), lim)
    }
}

fn orders_match(a: &ModuleOrder, b: &ModuleOrder) -> bool {
    // Conservative: identical ring order and both plain term-over-position.
    if a.ring != b.ring {
        return false;
    }
    matches!(
        (&a.ext, &b.ext),
        (crate::order::ModuleExtension::Top, crate::order::ModuleExtension::Top)
    )
}

fn sort_polys(polys: &mut [Poly]) {
    polys.sort_by(|a, b| {
        let sa = a.sorted_terms();
        let sb = b.sorted_terms();
        sa.iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect::<Vec<_>>()
            .cmp(&sb.iter().map(|(m, c)| (m.clone(), c.clone())).collect::<Vec<_>>())
    });
}

/// Exact normal form of `p` against a standard basis. Under a global order
/// this is the unique remainder with `p - NF(p)` in the ideal; under a local
/// order it is a weak normal form: `u*p - NF(p)` lies in the ideal for some
/// local unit u, and NF(p) = 0 exactly when p is in the localized ideal.
pub fn normal_form(p: &Poly, basis: &[Poly], ord: &ModuleOrder, lim: &EngineLimits) -> Result<Poly> {
    for b in basis {
        ensure_same_ring(b.ring(), p.ring(), "normal form basis")?;
    }
    if ord.is_global() {
        Ok(nf_exact_global(p, basis, ord))
    } else {
        // weak normal form: engine result up to rational scale
        let vecs: Vec<EVec<BigInt>> = basis.iter().map(|b| evec_from_poly(b, ord)).collect();
        let r = crate::engine::reduce::nf_mora(&evec_from_poly(p, ord), &vecs, ord, lim.mora_step_cap)?;
        Ok(evec_to_poly(&r, p.ring()).primitive_part())
    }
}

fn nf_exact_global(p: &Poly, basis: &[Poly], ord: &ModuleOrder) -> Poly {
    let mut rem = Poly::zero(p.ring());
    let mut h = p.clone();
    'outer: while !h.is_zero() {
        // leading term under ord
        let (lm, lc) = h
            .terms()
            .max_by(|a, b| ord.ring.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        for b in basis {
            if b.is_zero() {
                continue;
            }
            let (bm, bc) = b
                .terms()
                .max_by(|x, y| ord.ring.cmp(x.0, y.0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if bm.divides(&lm) {
                let q = bm.quotient_into(&lm);
                let f = lc / &bc;
                h = h.sub(&b.mul_monomial(&q, &f));
                continue 'outer;
            }
        }
        rem = rem.add(&Poly::monomial(p.ring(), lm.clone(), lc.clone()));
        h = h.sub(&Poly::monomial(p.ring(), lm, lc));
    }
    rem
}

/// I ∩ k[remaining variables]: block elimination order, then the basis
/// elements free of the killed variables, transported into the subring.
pub fn eliminate(ideal: &Ideal, kill_names: &[&str], lim: &EngineLimits) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut kill = Vec::new();
    for name in kill_names {
        kill.push(
            ring.var_index(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?,
        );
    }
    let keep: Vec<usize> = (0..ring.nvars()).filter(|i| !kill.contains(i)).collect();
    if kill.is_empty() {
        return Ok(ideal.clone());
    }
    let ord = ModuleOrder::top(RingOrder::eliminate(kill.clone(), keep.clone()));
    let basis = ideal.basis(&ord, lim)?;

    let mut keep_mask = vec![false; ring.nvars()];
    for &i in &keep {
        keep_mask[i] = true;
    }
    let sub = ring.subring(&keep)?;
    let mut down = vec![0usize; ring.nvars()];
    for (new_idx, &old_idx) in keep.iter().enumerate() {
        down[old_idx] = new_idx;
    }
    let mut gens = Vec::new();
    for b in &basis {
        if b.terms().all(|(m, _)| m.supported_on(&keep_mask)) {
            let mut q = Poly::zero(&sub);
            for (m, c) in b.terms() {
                let mut e = vec![0u32; sub.nvars()];
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        e[down[i]] = x;
                    }
                }
                q = q.add(&Poly::monomial(&sub, Monomial(e), c.clone()));
            }
            gens.push(q);
        }
    }
    Ideal::new(&sub, gens)
}

/// A polynomial ring map A -> B recorded by the image of each A-variable.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: RingRc,
    target: RingRc,
    images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: &RingRc, target: &RingRc, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::Invalid(format!(
                "ring map needs {} images, got {}",
                source.nvars(),
                images.len()
            )));
        }
        for im in &images {
            ensure_same_ring(im.ring(), target, "ring map image")?;
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn source(&self) -> &RingRc {
        &self.source
    }

    pub fn target(&self) -> &RingRc {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        ensure_same_ring(p.ring(), &self.source, "ring map argument")?;
        p.substitute(&self.images)
    }
}

/// (phi)^-1(a) for a ring map phi: A -> B and an ideal a of B, computed as
/// (a * T + <y_i - phi_i>) ∩ A in the joined ring T = B ⊗ A.
pub fn preimage(phi: &RingMap, a: &Ideal, lim: &EngineLimits) -> Result<Ideal> {
    ensure_same_ring(a.ring(), phi.target(), "preimage ideal")?;
    let b_ring = phi.target();
    let a_ring = phi.source();
    let joined = Ring::join(b_ring, a_ring)?;
    let b_map: Vec<usize> = (0..b_ring.nvars()).collect();
    let a_map: Vec<usize> = (0..a_ring.nvars()).map(|i| b_ring.nvars() + i).collect();

    let mut gens: Vec<Poly> = a
        .gens()
        .iter()
        .map(|g| g.rename_into(&joined, &b_map))
        .collect();
    for (i, im) in phi.images().iter().enumerate() {
        let lhs = Poly::var(&joined, b_ring.nvars() + i);
        let rhs = im.rename_into(&joined, &b_map);
        gens.push(lhs.sub(&rhs));
    }
    let big = Ideal::new(&joined, gens)?;
    let kill: Vec<&str> = b_ring.vars().iter().map(|s| s.as_str()).collect();
    let elim = eliminate(&big, &kill, lim)?;
    // transport into the exact source ring value
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.rename_into(a_ring, &(0..a_ring.nvars()).collect::<Vec<_>>()))
        .collect();
    let _ = a_map;
    Ideal::new(a_ring, gens)
}

/// Intersection I ∩ J via the t-trick: (t*I + (1-t)*J) ∩ R.
pub fn intersect(i: &Ideal, j: &Ideal, lim: &EngineLimits) -> Result<Ideal> {
    ensure_same_ring(i.ring(), j.ring(), "intersection")?;
    let r = i.ring();
    let mut tname = "t".to_string();
    while r.var_index(&tname).is_some() {
        tname.push('_');
    }
    let tring = Ring::new(
        std::iter::once(tname.clone())
            .chain(r.vars().iter().cloned())
            .collect::<Vec<_>>(),
    )?;
    let up: Vec<usize> = (1..=r.nvars()).collect();
    let t = Poly::var(&tring, 0);
    let one_minus_t = Poly::one(&tring).sub(&t);
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(t.mul(&g.rename_into(&tring, &up)));
    }
    for g in j.gens() {
        gens.push(one_minus_t.mul(&g.rename_into(&tring, &up)));
    }
    let big = Ideal::new(&tring, gens)?;
    let elim = eliminate(&big, &[&tname], lim)?;
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.rename_into(r, &(0..r.nvars()).collect::<Vec<_>>()))
        .collect();
    Ideal::new(r, gens)
}

/// Colon ideal I : J = { h : h*J ⊆ I }.
pub fn ideal_quotient(i: &Ideal, j: &Ideal, lim: &EngineLimits) -> Result<Ideal> {
    ensure_same_ring(i.ring(), j.ring(), "ideal quotient")?;
    if j.is_zero_ideal() {
        return Ok(Ideal::unit(i.ring()));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.gens() {
        // I : <f> = (I ∩ <f>) / f
        let jf = Ideal::new(i.ring(), vec![f.clone()])?;
        let meet = intersect(i, &jf, lim)?;
        let mut gens = Vec::new();
        for g in meet.gens() {
            gens.push(g.exact_divide(f)?);
        }
        let q = Ideal::new(i.ring(), gens)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q, lim)?,
        });
    }
    Ok(acc.unwrap())
}

/// Saturation I : J^infinity, stabilizing the ascending chain of quotients.
pub fn saturation(i: &Ideal, j: &Ideal, lim: &EngineLimits) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = ideal_quotient(&cur, j, lim)?;
        if ideal_equal_global(&next, &cur, lim)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Polynomial (global) equality of ideals by mutual membership.
pub fn ideal_equal_global(a: &Ideal, b: &Ideal, lim: &EngineLimits) -> Result<bool> {
    for g in b.gens() {
        if !a.contains_global(g, lim)? {
            return Ok(false);
        }
    }
    for g in a.gens() {
        if !b.contains_global(g, lim)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Radical membership by the Rabinowitsch trick: h in sqrt(I) iff
/// 1 ∈ I + <1 - t*h> in R[t].
pub fn radical_membership(h: &Poly, i: &Ideal, lim: &EngineLimits) -> Result<bool> {
    ensure_same_ring(h.ring(), i.ring(), "radical membership")?;
    let r = i.ring();
    let mut tname = "t".to_string();
    while r.var_index(&tname).is_some() {
        tname.push('_');
    }
    let tring = Ring::new(
        r.vars()
            .iter()
            .cloned()
            .chain(std::iter::once(tname))
            .collect::<Vec<_>>(),
    )?;
    let up: Vec<usize> = (0..r.nvars()).collect();
    let t = Poly::var(&tring, r.nvars());
    let mut gens: Vec<Poly> = i.gens().iter().map(|g| g.rename_into(&tring, &up)).collect();
    gens.push(Poly::one(&tring).sub(&t.mul(&h.rename_into(&tring, &up))));
    let big = Ideal::new(&tring, gens)?;
    let one = Poly::one(&tring);
    big.contains_global(&one, lim)
}

/// A finitely generated submodule of R^rank.
#[derive(Debug, Clone, PartialEq)]
pub struct Submodule {
    ring: RingRc,
    rank: usize,
    gens: Vec<Vec<Poly>>,
}

impl Submodule {
    pub fn new(ring: &RingRc, rank: usize, gens: Vec<Vec<Poly>>) -> Result<Self> {
        let mut out = Vec::new();
        for v in gens {
            if v.len() != rank {
                return Err(Error::Invalid(format!(
                    "submodule vector of length {} in ambient rank {}",
                    v.len(),
                    rank
                )));
            }
            for p in &v {
                ensure_same_ring(p.ring(), ring, "submodule entry")?;
            }
            if v.iter().any(|p| !p.is_zero()) {
                out.push(v);
            }
        }
        Ok(Submodule { ring: ring.clone(), rank, gens: out })
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Vec<Poly>] {
        &self.gens
    }

    /// Generators of the syzygy module of this submodule's generators.
    pub fn syzygies(&self, lim: &EngineLimits) -> Result<Submodule> {
        let ord = ModuleOrder::top(RingOrder::Grevlex);
        let vecs: Vec<EVec<BigInt>> =
            self.gens.iter().map(|v| evec_from_polys(v, &ord)).collect();
        let syz = syzygies(&vecs, self.rank, RingOrder::Grevlex, lim)?;
        let out = syz
            .iter()
            .map(|v| evec_to_polys(v, &self.ring, self.gens.len()))
            .collect();
        Submodule::new(&self.ring, self.gens.len(), out)
    }

    /// dim_C of (R^rank / this submodule) localized at the origin.
    pub fn coker_dim_local(&self, lim: &EngineLimits) -> Result<Dim> {
        module_coker_dim(&self.gens, self.rank, self.ring.nvars(), lim)
    }

    /// Minimal local free resolution of R^rank / this submodule.
    pub fn resolve_coker(&self, lim: &EngineLimits) -> Result<Resolution> {
        let data = minimal_free_resolution(&self.ring, self.rank, &self.gens, lim)?;
        Ok(Resolution { data })
    }
}

/// A minimal free resolution over the local ring at the origin.
#[derive(Debug, Clone)]
pub struct Resolution {
    data: ResolutionData,
}

impl Resolution {
    pub fn maps(&self) -> &[PolyMatrix] {
        &self.data.maps
    }

    pub fn length(&self) -> usize {
        self.data.maps.len()
    }

    pub fn projective_dimension(&self) -> usize {
        self.data.projective_dimension()
    }

    pub fn minimal_generator_count(&self) -> usize {
        self.data.rank
    }

    pub fn verify(&self) -> bool {
        crate::engine::resolution::verify_resolution(&self.data)
    }
}

/// dim_C (P / J) at the origin for ideals J ⊆ P: the subquotient is
/// presented on P's generators by the syzygies of (P | J) and counted by the
/// local staircase of the relation module.
pub fn subquotient_dim(p: &Ideal, j: &Ideal, lim: &EngineLimits) -> Result<Dim> {
    ensure_same_ring(p.ring(), j.ring(), "subquotient")?;
    for g in j.gens() {
        if !p.contains_local(g, lim)? {
            return Err(Error::InclusionViolated(format!(
                "generator `{g}` of the denominator is not in the numerator ideal"
            )));
        }
    }
    let rels = subquotient_relations(p.gens(), j.gens(), p.ring(), lim)?;
    module_coker_dim(&rels, p.gens().len(), p.ring().nvars(), lim)
}

/// Relations of the classes of `p_gens` in P/J: projections of the syzygies
/// of (p_gens | j_gens) onto the P block.
pub fn subquotient_relations(
    p_gens: &[Poly],
    j_gens: &[Poly],
    ring: &RingRc,
    lim: &EngineLimits,
) -> Result<Vec<Vec<Poly>>> {
    let ord = ModuleOrder::top(RingOrder::Grevlex);
    let all: Vec<EVec<BigInt>> = p_gens
        .iter()
        .chain(j_gens.iter())
        .map(|q| evec_from_poly(q, &ord))
        .collect();
    let syz = syzygies(&all, 1, RingOrder::Grevlex, lim)?;
    let m = p_gens.len();
    let mut rels = Vec::new();
    for v in syz {
        let terms: Vec<_> = v.terms.into_iter().filter(|t| (t.comp as usize) < m).collect();
        let w = EVec { terms };
        if !w.is_zero() {
            rels.push(evec_to_polys(&w, ring, m));
        }
    }
    Ok(rels)
}

/// Lead staircase dimension of a module given directly by relation vectors.
pub fn relations_coker_dim(
    rels: &[Vec<Poly>],
    rank: usize,
    ring: &RingRc,
    lim: &EngineLimits,
) -> Result<Dim> {
    module_coker_dim(rels, rank, ring.nvars(), lim)
}

/// Local staircase dimension for an ideal presented by raw generators.
pub fn quotient_dim(gens: &[Poly], ring: &RingRc, lim: &EngineLimits) -> Result<Dim> {
    local_quotient_dim(gens, ring.nvars(), lim)
}
