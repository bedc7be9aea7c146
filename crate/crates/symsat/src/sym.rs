//! Symmetries as bijections on assignment literals.
//!
//! A symmetry is represented extensionally: a total bijective mapping on the
//! finite universe of `(variable, value)` literals. Everything else —
//! application to assignments, composition, inversion, conjugation, closure
//! of a generator set, and generation of a full solution from a partial one —
//! is built on top of that single representation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque variable identifier. Values are indices into the ambient universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A single `variable = value` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: VarId,
    pub val: i32,
}

impl Literal {
    pub fn new(var: VarId, val: i32) -> Self {
        Literal { var, val }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.var, self.val)
    }
}

/// An unordered set of literals, not necessarily functional.
pub type LitSet = BTreeSet<Literal>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("literal {0} is outside the map's universe")]
    UniverseMismatch(Literal),
    #[error("maps are defined over different universes")]
    DifferentUniverses,
    #[error("mapping is not a bijection: literal {0} has no preimage")]
    NotBijective(Literal),
    #[error("assignment is not functional: variable {var} takes both {a} and {b}")]
    NonFunctional { var: VarId, a: i32, b: i32 },
    #[error("closure exceeded the size bound of {0} maps")]
    ClosureBound(usize),
    #[error("generation is inconsistent: variable {var} is forced to both {a} and {b}")]
    InconsistentGeneration { var: VarId, a: i32, b: i32 },
}

/// The finite literal universe: every declared variable together with its
/// finite integer domain. Maps, assignments and models all agree on one of
/// these.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    domains: Vec<Vec<i32>>,
    offsets: Vec<u32>,
    total: u32,
}

impl Universe {
    /// Build a universe from per-variable domains. Domains are sorted and
    /// deduplicated; variable `i` gets id `VarId(i)`.
    pub fn new(domains: Vec<Vec<i32>>) -> Arc<Universe> {
        let domains: Vec<Vec<i32>> = domains
            .into_iter()
            .map(|mut d| {
                d.sort_unstable();
                d.dedup();
                d
            })
            .collect();
        let mut offsets = Vec::with_capacity(domains.len());
        let mut total = 0u32;
        for d in &domains {
            offsets.push(total);
            total += d.len() as u32;
        }
        Arc::new(Universe {
            domains,
            offsets,
            total,
        })
    }

    /// Uniform universe: `n_vars` variables all sharing the same domain.
    pub fn uniform(n_vars: usize, domain: Vec<i32>) -> Arc<Universe> {
        Universe::new(vec![domain; n_vars])
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    pub fn num_literals(&self) -> usize {
        self.total as usize
    }

    pub fn domain(&self, var: VarId) -> &[i32] {
        &self.domains[var.index()]
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.domains.len() as u32).map(VarId)
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.vars()
            .flat_map(move |v| self.domain(v).iter().map(move |&val| Literal::new(v, val)))
    }

    /// Dense index of a literal, or `None` if it lies outside the universe.
    pub fn lit_index(&self, lit: Literal) -> Option<u32> {
        let d = self.domains.get(lit.var.index())?;
        let pos = d.binary_search(&lit.val).ok()?;
        Some(self.offsets[lit.var.index()] + pos as u32)
    }

    pub fn lit_at(&self, index: u32) -> Literal {
        // offsets is sorted; find the var owning this index
        let var = match self.offsets.binary_search(&index) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let pos = (index - self.offsets[var]) as usize;
        Literal::new(VarId(var as u32), self.domains[var][pos])
    }

    pub fn contains(&self, lit: Literal) -> bool {
        self.lit_index(lit).is_some()
    }
}

/// A consistent (functional) set of literals: each variable appears at most
/// once. A *total* assignment covers every variable of the universe.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    map: BTreeMap<VarId, i32>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    /// Build from literal pairs, rejecting two values for one variable.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, SymError>
    where
        I: IntoIterator<Item = (VarId, i32)>,
    {
        let mut map = BTreeMap::new();
        for (var, val) in pairs {
            if let Some(&prev) = map.get(&var) {
                if prev != val {
                    return Err(SymError::NonFunctional { var, a: prev, b: val });
                }
            }
            map.insert(var, val);
        }
        Ok(Assignment { map })
    }

    /// Interpret a literal set as an assignment, rejecting non-functional sets.
    pub fn from_lit_set(set: &LitSet) -> Result<Self, SymError> {
        Assignment::from_pairs(set.iter().map(|l| (l.var, l.val)))
    }

    pub fn get(&self, var: VarId) -> Option<i32> {
        self.map.get(&var).copied()
    }

    pub fn set(&mut self, var: VarId, val: i32) {
        self.map.insert(var, val);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_total(&self, universe: &Universe) -> bool {
        self.map.len() == universe.num_vars()
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.map.iter().map(|(&var, &val)| Literal::new(var, val))
    }

    pub fn to_lit_set(&self) -> LitSet {
        self.literals().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.map.iter().map(|(&v, &x)| (v, x))
    }
}

/// A bijection on the literal universe.
///
/// Bijectivity is verified eagerly at construction time; every constructor
/// returns an error if the supplied mapping misses or doubles up a literal.
#[derive(Clone)]
pub struct SymmetryMap {
    universe: Arc<Universe>,
    name: String,
    forward: Vec<u32>,
}

impl fmt::Debug for SymmetryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetryMap({})", self.name)
    }
}

impl PartialEq for SymmetryMap {
    /// Extensional equality: same universe, same image for every literal.
    /// The name plays no part.
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other) && self.forward == other.forward
    }
}

impl Eq for SymmetryMap {}

impl SymmetryMap {
    /// Build a map from a closure giving the image of every literal.
    pub fn from_fn<F>(
        universe: Arc<Universe>,
        name: impl Into<String>,
        f: F,
    ) -> Result<SymmetryMap, SymError>
    where
        F: Fn(Literal) -> Literal,
    {
        let n = universe.num_literals();
        let mut forward = vec![0u32; n];
        let mut seen = vec![false; n];
        for lit in universe.literals() {
            let src = universe.lit_index(lit).unwrap();
            let img = f(lit);
            let dst = universe
                .lit_index(img)
                .ok_or(SymError::UniverseMismatch(img))?;
            forward[src as usize] = dst;
            if seen[dst as usize] {
                return Err(SymError::NotBijective(img));
            }
            seen[dst as usize] = true;
        }
        // surjectivity follows from injectivity on a finite set, but make the
        // check explicit so a broken table is reported against the literal
        if let Some(hole) = seen.iter().position(|&s| !s) {
            return Err(SymError::NotBijective(universe.lit_at(hole as u32)));
        }
        Ok(SymmetryMap {
            universe,
            name: name.into(),
            forward,
        })
    }

    pub fn identity(universe: Arc<Universe>) -> SymmetryMap {
        SymmetryMap::from_fn(universe, "identity", |l| l).expect("identity is a bijection")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn same_universe(&self, other: &SymmetryMap) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    /// Image of a single literal.
    pub fn apply_lit(&self, lit: Literal) -> Result<Literal, SymError> {
        let idx = self
            .universe
            .lit_index(lit)
            .ok_or(SymError::UniverseMismatch(lit))?;
        Ok(self.universe.lit_at(self.forward[idx as usize]))
    }

    /// Image of a literal set: `{ sigma(a) | a in A }`.
    pub fn apply_set(&self, set: &LitSet) -> Result<LitSet, SymError> {
        set.iter().map(|&l| self.apply_lit(l)).collect()
    }

    /// Image of an assignment. The image set need not be functional; the
    /// caller decides whether to reinterpret it as an assignment.
    pub fn apply(&self, a: &Assignment) -> Result<LitSet, SymError> {
        a.literals().map(|l| self.apply_lit(l)).collect()
    }

    /// Does `sigma` fix the solution `a` as a set, i.e. `sigma(A) = A`?
    pub fn is_internal_symmetry(&self, a: &Assignment) -> Result<bool, SymError> {
        // set equality; since `a` is functional and sigma is a bijection,
        // comparing images literal by literal suffices
        for lit in a.literals() {
            let img = self.apply_lit(lit)?;
            if a.get(img.var) != Some(img.val) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &SymmetryMap) -> Result<SymmetryMap, SymError> {
        if !self.same_universe(other) {
            return Err(SymError::DifferentUniverses);
        }
        let forward = other
            .forward
            .iter()
            .map(|&mid| self.forward[mid as usize])
            .collect();
        Ok(SymmetryMap {
            universe: self.universe.clone(),
            name: format!("{}∘{}", self.name, other.name),
            forward,
        })
    }

    pub fn inverse(&self) -> SymmetryMap {
        let mut forward = vec![0u32; self.forward.len()];
        for (src, &dst) in self.forward.iter().enumerate() {
            forward[dst as usize] = src as u32;
        }
        SymmetryMap {
            universe: self.universe.clone(),
            name: format!("{}⁻¹", self.name),
            forward,
        }
    }

    /// `tau ∘ sigma ∘ tau⁻¹`.
    pub fn conjugate(tau: &SymmetryMap, sigma: &SymmetryMap) -> Result<SymmetryMap, SymError> {
        tau.compose(&sigma.compose(&tau.inverse())?)
    }

    /// True iff `self ∘ other = other ∘ self` on every literal.
    pub fn commutes(&self, other: &SymmetryMap) -> Result<bool, SymError> {
        if !self.same_universe(other) {
            return Err(SymError::DifferentUniverses);
        }
        Ok((0..self.forward.len()).all(|i| {
            self.forward[other.forward[i] as usize] == other.forward[self.forward[i] as usize]
        }))
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &d)| i as u32 == d)
    }

    /// Serialize as `{name, pairs: [[var, val, var', val'], ...]}`.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[i64; 4]> = self
            .universe
            .literals()
            .map(|lit| {
                let img = self.apply_lit(lit).unwrap();
                [
                    lit.var.0 as i64,
                    lit.val as i64,
                    img.var.0 as i64,
                    img.val as i64,
                ]
            })
            .collect();
        serde_json::to_string(&serde_json::json!({
            "name": self.name,
            "pairs": pairs,
        }))
        .expect("map serialization cannot fail")
    }

    /// Parse the `{name, pairs}` form, rebuilding the universe from the
    /// left-hand literals of the pairs.
    pub fn from_json(text: &str) -> Result<SymmetryMap, String> {
        #[derive(Deserialize)]
        struct Wire {
            name: String,
            pairs: Vec<[i64; 4]>,
        }
        let wire: Wire = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut domains: BTreeMap<u32, Vec<i32>> = BTreeMap::new();
        for p in &wire.pairs {
            domains.entry(p[0] as u32).or_default().push(p[1] as i32);
        }
        let n_vars = domains.keys().next_back().map_or(0, |&v| v as usize + 1);
        let mut dom_vec = vec![Vec::new(); n_vars];
        for (v, d) in domains {
            dom_vec[v as usize] = d;
        }
        let universe = Universe::new(dom_vec);
        let table: BTreeMap<Literal, Literal> = wire
            .pairs
            .iter()
            .map(|p| {
                (
                    Literal::new(VarId(p[0] as u32), p[1] as i32),
                    Literal::new(VarId(p[2] as u32), p[3] as i32),
                )
            })
            .collect();
        SymmetryMap::from_fn(universe, wire.name, |l| table[&l]).map_err(|e| e.to_string())
    }

    /// Key for deduplication in closure computations.
    fn graph_key(&self) -> &[u32] {
        &self.forward
    }
}

/// A finite set of generating symmetries over one shared universe.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    maps: Vec<SymmetryMap>,
}

impl GeneratorSet {
    pub fn new(maps: Vec<SymmetryMap>) -> Result<GeneratorSet, SymError> {
        if let Some(first) = maps.first() {
            for m in &maps[1..] {
                if !first.same_universe(m) {
                    return Err(SymError::DifferentUniverses);
                }
            }
        }
        Ok(GeneratorSet { maps })
    }

    pub fn maps(&self) -> &[SymmetryMap] {
        &self.maps
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Default hard bound on closure size, guarding against malformed generators.
pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;

/// All compositions of one or more generators, deduplicated by extensional
/// equality: the fixed point of pairwise composition starting from the
/// generators themselves. Note the result contains the identity only when
/// some product of generators equals it.
pub fn closure(gens: &GeneratorSet, max_size: usize) -> Result<Vec<SymmetryMap>, SymError> {
    use std::collections::HashMap;
    assert!(max_size > 0, "closure bound must be positive");
    let mut out: Vec<SymmetryMap> = Vec::new();
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut queue: Vec<usize> = Vec::new();
    for g in gens.maps() {
        if !seen.contains_key(g.graph_key()) {
            seen.insert(g.graph_key().to_vec(), out.len());
            queue.push(out.len());
            out.push(g.clone());
        }
    }
    while let Some(i) = queue.pop() {
        for g in gens.maps() {
            let prod = g.compose(&out[i])?;
            if !seen.contains_key(prod.graph_key()) {
                if out.len() >= max_size {
                    return Err(SymError::ClosureBound(max_size));
                }
                seen.insert(prod.graph_key().to_vec(), out.len());
                queue.push(out.len());
                out.push(prod);
            }
        }
    }
    Ok(out)
}

/// `A = B ∪ Σ*(B)`: expand a partial assignment by every symmetry in the
/// closure of the generators. Fails if two distinct values are forced onto
/// one variable.
pub fn generate(b: &Assignment, gens: &GeneratorSet) -> Result<Assignment, SymError> {
    generate_bounded(b, gens, DEFAULT_CLOSURE_BOUND)
}

pub fn generate_bounded(
    b: &Assignment,
    gens: &GeneratorSet,
    max_size: usize,
) -> Result<Assignment, SymError> {
    let mut result = b.clone();
    if gens.is_empty() {
        return Ok(result);
    }
    for sigma in closure(gens, max_size)? {
        for lit in b.literals() {
            let img = sigma.apply_lit(lit)?;
            match result.get(img.var) {
                None => result.set(img.var, img.val),
                Some(prev) if prev == img.val => {}
                Some(prev) => {
                    return Err(SymError::InconsistentGeneration {
                        var: img.var,
                        a: prev,
                        b: img.val,
                    })
                }
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Arc<Universe> {
        // three variables over {0,1,2}
        Universe::uniform(3, vec![0, 1, 2])
    }

    /// Rotate values upward on every variable: v -> v+1 mod 3.
    fn rot_values(u: &Arc<Universe>) -> SymmetryMap {
        SymmetryMap::from_fn(u.clone(), "rotv", |l| {
            Literal::new(l.var, (l.val + 1).rem_euclid(3))
        })
        .unwrap()
    }

    /// Swap variables 0 and 1.
    fn swap01(u: &Arc<Universe>) -> SymmetryMap {
        SymmetryMap::from_fn(u.clone(), "swap01", |l| {
            let var = match l.var.0 {
                0 => VarId(1),
                1 => VarId(0),
                v => VarId(v),
            };
            Literal::new(var, l.val)
        })
        .unwrap()
    }

    #[test]
    fn identity_applies_trivially() {
        let u = tiny();
        let id = SymmetryMap::identity(u.clone());
        let a = Assignment::from_pairs([(VarId(0), 1), (VarId(1), 2), (VarId(2), 0)]).unwrap();
        assert_eq!(id.apply(&a).unwrap(), a.to_lit_set());
        assert!(id.is_internal_symmetry(&a).unwrap());
    }

    #[test]
    fn bijectivity_is_checked_eagerly() {
        let u = tiny();
        let err = SymmetryMap::from_fn(u, "collapse", |l| Literal::new(l.var, 0)).unwrap_err();
        assert!(matches!(err, SymError::NotBijective(_)));
    }

    #[test]
    fn out_of_universe_image_is_rejected() {
        let u = tiny();
        let err = SymmetryMap::from_fn(u, "escape", |l| Literal::new(l.var, l.val + 10))
            .unwrap_err();
        assert!(matches!(err, SymError::UniverseMismatch(_)));
    }

    #[test]
    fn apply_rejects_foreign_literal() {
        let u = tiny();
        let id = SymmetryMap::identity(u);
        let foreign = Literal::new(VarId(7), 0);
        assert_eq!(
            id.apply_lit(foreign),
            Err(SymError::UniverseMismatch(foreign))
        );
    }

    #[test]
    fn compose_with_identity_is_noop() {
        let u = tiny();
        let sigma = rot_values(&u);
        let id = SymmetryMap::identity(u);
        assert_eq!(sigma.compose(&id).unwrap(), sigma);
        assert_eq!(id.compose(&sigma).unwrap(), sigma);
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let u = tiny();
        let sigma = rot_values(&u);
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
        assert!(sigma.inverse().compose(&sigma).unwrap().is_identity());
        assert!(SymmetryMap::identity(u).inverse().is_identity());
    }

    #[test]
    fn involution_is_self_inverse() {
        let u = tiny();
        let sigma = swap01(&u);
        assert_eq!(sigma.inverse(), sigma);
    }

    #[test]
    fn composition_order_applies_right_map_first() {
        let u = tiny();
        let rot = rot_values(&u);
        let swap = swap01(&u);
        // (swap ∘ rot)(x) = swap(rot(x))
        let both = swap.compose(&rot).unwrap();
        let lit = Literal::new(VarId(0), 0);
        assert_eq!(both.apply_lit(lit).unwrap(), Literal::new(VarId(1), 1));
    }

    #[test]
    fn conjugate_by_identity() {
        let u = tiny();
        let sigma = rot_values(&u);
        let id = SymmetryMap::identity(u);
        assert_eq!(SymmetryMap::conjugate(&id, &sigma).unwrap(), sigma);
        assert!(SymmetryMap::conjugate(&sigma, &id).unwrap().is_identity());
    }

    #[test]
    fn commutes_with_identity_and_disjoint_actions() {
        let u = tiny();
        let rot = rot_values(&u);
        let swap = swap01(&u);
        let id = SymmetryMap::identity(u);
        assert!(rot.commutes(&id).unwrap());
        // value rotation acts the same on every variable, so it commutes
        // with the variable swap
        assert!(rot.commutes(&swap).unwrap());
    }

    #[test]
    fn noncommuting_pair_detected() {
        let u = tiny();
        let swap = swap01(&u);
        // rotate values of variable 0 only
        let rot0 = SymmetryMap::from_fn(u, "rot0", |l| {
            if l.var.0 == 0 {
                Literal::new(l.var, (l.val + 1).rem_euclid(3))
            } else {
                l
            }
        })
        .unwrap();
        assert!(!swap.commutes(&rot0).unwrap());
    }

    #[test]
    fn closure_of_identity_is_identity() {
        let u = tiny();
        let id = SymmetryMap::identity(u);
        let gens = GeneratorSet::new(vec![id]).unwrap();
        let c = closure(&gens, 10).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].is_identity());
    }

    #[test]
    fn closure_of_value_rotation_has_order_three() {
        let u = tiny();
        let gens = GeneratorSet::new(vec![rot_values(&u)]).unwrap();
        let c = closure(&gens, 10).unwrap();
        assert_eq!(c.len(), 3); // rot, rot², rot³ = id
        assert!(c.iter().any(|m| m.is_identity()));
    }

    #[test]
    fn closure_bound_is_enforced() {
        let u = tiny();
        let gens = GeneratorSet::new(vec![rot_values(&u)]).unwrap();
        assert_eq!(closure(&gens, 2), Err(SymError::ClosureBound(2)));
    }

    #[test]
    fn generate_with_identity_returns_input() {
        let u = tiny();
        let b = Assignment::from_pairs([(VarId(0), 1), (VarId(1), 0), (VarId(2), 2)]).unwrap();
        let gens = GeneratorSet::new(vec![SymmetryMap::identity(u)]).unwrap();
        assert_eq!(generate(&b, &gens).unwrap(), b);
    }

    #[test]
    fn generate_reports_the_clashing_variable() {
        let u = tiny();
        // rotating values of var 0 forces a second value onto it
        let rot0 = SymmetryMap::from_fn(u, "rot0", |l| {
            if l.var.0 == 0 {
                Literal::new(l.var, (l.val + 1).rem_euclid(3))
            } else {
                l
            }
        })
        .unwrap();
        let b = Assignment::from_pairs([(VarId(0), 0)]).unwrap();
        let gens = GeneratorSet::new(vec![rot0]).unwrap();
        let err = generate(&b, &gens).unwrap_err();
        assert!(matches!(
            err,
            SymError::InconsistentGeneration { var: VarId(0), .. }
        ));
    }

    #[test]
    fn generate_is_idempotent() {
        let u = tiny();
        let swap = swap01(&u);
        let b = Assignment::from_pairs([(VarId(0), 1), (VarId(2), 2)]).unwrap();
        let gens = GeneratorSet::new(vec![swap]).unwrap();
        let once = generate(&b, &gens).unwrap();
        let twice = generate(&once, &gens).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn json_round_trip_preserves_the_map() {
        let u = tiny();
        let sigma = swap01(&u).compose(&rot_values(&u)).unwrap();
        let back = SymmetryMap::from_json(&sigma.to_json()).unwrap();
        assert_eq!(back.name(), sigma.name());
        for lit in u.literals() {
            assert_eq!(back.apply_lit(lit), sigma.apply_lit(lit));
        }
    }

    #[test]
    fn non_functional_assignment_rejected() {
        let err = Assignment::from_pairs([(VarId(0), 1), (VarId(0), 2)]).unwrap_err();
        assert_eq!(
            err,
            SymError::NonFunctional {
                var: VarId(0),
                a: 1,
                b: 2
            }
        );
    }
}
