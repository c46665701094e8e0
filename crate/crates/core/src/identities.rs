//! Formal Lie polynomials and group words, their evaluation, and identity
//! checks on concrete algebras and groups.
//!
//! Both kinds of expression have a prefix notation:
//!
//! ```text
//! (lin 1 (br x0 x1 x2) 1 (br x0 x2 x1))     Lie polynomial
//! (br x0 (br x1 x2))                         single monomial, coefficient 1
//! (pow (comm x1 x2) 3)                       group word
//! (mul x0 (inv x1) x0)
//! ```
//!
//! `br` and `comm` with more than two arguments are left-normed.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Location, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::lie::{nilpotency_index, GradedLieRing, LieElement};

pub const HIGMAN_MONOMIAL_BUDGET: usize = 5040;
pub const WORD_EVALUATION_BUDGET: u64 = 100_000_000;
pub const LIE_TUPLE_BUDGET: u64 = 10_000_000;
/// Algebras with at most this many elements are scanned exhaustively by the
/// Engel check.
pub const ENGEL_EXACT_LIMIT: u64 = 1 << 16;
const ENGEL_SAMPLES: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Var(usize),
    Br(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    /// `[x_{v1}, x_{v2}, ..., x_{vk}]`.
    pub fn left_normed(vars: &[usize]) -> Self {
        let mut it = vars.iter();
        let first = *it.next().expect("at least one variable");
        it.fold(BracketTree::Var(first), |acc, &v| {
            BracketTree::Br(Box::new(acc), Box::new(BracketTree::Var(v)))
        })
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            BracketTree::Var(v) => out.push(*v),
            BracketTree::Br(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Variables in order of occurrence, with repetition.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn eval(&self, l: &GradedLieRing, assignment: &[Vec<u32>]) -> Result<Vec<u32>> {
        match self {
            BracketTree::Var(v) => assignment.get(*v).cloned().ok_or(Error::UnboundVariable(*v)),
            BracketTree::Br(a, b) => Ok(l.bracket_coords(&a.eval(l, assignment)?, &b.eval(l, assignment)?)),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Var(v) => write!(f, "x{v}"),
            BracketTree::Br(..) => {
                // flatten the left spine
                let mut right = Vec::new();
                let mut node = self;
                while let BracketTree::Br(a, b) = node {
                    right.push(b.as_ref());
                    node = a;
                }
                write!(f, "(br {node}")?;
                for t in right.iter().rev() {
                    write!(f, " {t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Integer combination of bracket monomials; coefficients are reduced mod p
/// only at evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiePolynomial {
    terms: Vec<(i64, BracketTree)>,
    multilinear: bool,
}

impl LiePolynomial {
    pub fn new(terms: Vec<(i64, BracketTree)>) -> Self {
        let vars = variables_of(&terms);
        let multilinear = terms.iter().all(|(_, t)| {
            let mut occ = t.occurrences();
            occ.sort_unstable();
            occ == vars
        });
        Self { terms, multilinear }
    }

    pub fn terms(&self) -> &[(i64, BracketTree)] {
        &self.terms
    }

    pub fn is_multilinear(&self) -> bool {
        self.multilinear
    }

    /// Sorted distinct variable indices.
    pub fn variables(&self) -> Vec<usize> {
        variables_of(&self.terms)
    }

    fn arity(&self) -> usize {
        self.variables().last().map_or(0, |&v| v + 1)
    }

    fn eval_coords(&self, l: &GradedLieRing, assignment: &[Vec<u32>]) -> Result<Vec<u32>> {
        let p = l.prime() as i64;
        let mut acc = vec![0u32; l.dim()];
        for (c, t) in &self.terms {
            let c = c.rem_euclid(p) as u32;
            if c == 0 {
                continue;
            }
            let v = t.eval(l, assignment)?;
            for (a, x) in acc.iter_mut().zip(v) {
                *a = ((*a as u64 + c as u64 * x as u64) % p as u64) as u32;
            }
        }
        Ok(acc)
    }
}

fn variables_of(terms: &[(i64, BracketTree)]) -> Vec<usize> {
    let mut vars: Vec<usize> = terms.iter().flat_map(|(_, t)| t.occurrences()).collect();
    vars.sort_unstable();
    vars.dedup();
    vars
}

impl fmt::Display for LiePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(lin")?;
        for (c, t) in &self.terms {
            write!(f, " {c} {t}")?;
        }
        write!(f, ")")
    }
}

/// `sum over pi in S_{n-1} of [x_0, x_{pi(1)}, ..., x_{pi(n-1)}]`.
pub fn higman_polynomial(n: usize) -> Result<LiePolynomial> {
    higman_polynomial_with_budget(n, HIGMAN_MONOMIAL_BUDGET)
}

pub fn higman_polynomial_with_budget(n: usize, budget: usize) -> Result<LiePolynomial> {
    if n < 2 {
        return Err(Error::HypothesisNotMet(format!("Higman polynomial needs n >= 2, got {n}")));
    }
    let count = (1..n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    match count {
        Some(c) if c <= budget => {}
        _ => {
            return Err(Error::OutOfBudget(format!(
                "({}-1)! monomials exceed the budget of {budget}",
                n
            )))
        }
    }
    let mut perm: Vec<usize> = (1..n).collect();
    let mut terms = Vec::new();
    loop {
        let mut vars = vec![0];
        vars.extend_from_slice(&perm);
        terms.push((1, BracketTree::left_normed(&vars)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(LiePolynomial::new(terms))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn evaluate_lie(f: &LiePolynomial, l: &GradedLieRing, assignment: &[LieElement]) -> Result<LieElement> {
    if assignment.iter().any(|u| u.algebra_id() != l.id()) {
        return Err(Error::MismatchedAlgebra);
    }
    let coords: Vec<Vec<u32>> = assignment.iter().map(|u| u.coords().to_vec()).collect();
    Ok(l.element(f.eval_coords(l, &coords)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityMode {
    /// Basis tuples only; sufficient for multilinear polynomials.
    Basis,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    pub mode: IdentityMode,
    pub tuples_checked: u64,
    /// Assignment indexed by variable, on failure.
    pub counterexample: Option<Vec<LieElement>>,
}

pub fn holds_identity(f: &LiePolynomial, l: &GradedLieRing) -> Result<IdentityVerdict> {
    holds_identity_with_budget(f, l, LIE_TUPLE_BUDGET)
}

pub fn holds_identity_with_budget(f: &LiePolynomial, l: &GradedLieRing, budget: u64) -> Result<IdentityVerdict> {
    let arity = f.arity();
    let vars = f.variables();
    let dim = l.dim();
    let p = l.prime() as u64;
    let mut checked = 0u64;
    let mut assignment = vec![vec![0u32; dim]; arity];
    if f.is_multilinear() {
        // Basis tuples whose degrees sum past the top degree bracket to zero.
        let cap = (dim as u64).checked_pow(vars.len() as u32).unwrap_or(u64::MAX);
        let mut found = None;
        let top = l.top_degree();
        scan_basis(l, f, &vars, 0, 0, top, &mut assignment, &mut checked, budget, cap, &mut found)?;
        let counterexample = found.map(|coords: Vec<Vec<u32>>| coords.into_iter().map(|c| l.element(c)).collect());
        return Ok(IdentityVerdict {
            holds: counterexample.is_none(),
            mode: IdentityMode::Basis,
            tuples_checked: checked,
            counterexample,
        });
    }
    let size = p.checked_pow(dim as u32);
    let total = size.and_then(|s| s.checked_pow(vars.len() as u32));
    match total {
        Some(t) if t <= budget => {}
        _ => {
            return Err(Error::OutOfBudget(format!(
                "exhaustive scan of {} variables over an algebra of order {}^{} exceeds {budget} tuples",
                vars.len(),
                p,
                dim
            )))
        }
    }
    let size = size.unwrap();
    let total = total.unwrap();
    for t in 0..total {
        let mut rest = t;
        for &v in &vars {
            assignment[v] = digits(rest % size, p as u32, dim);
            rest /= size;
        }
        checked += 1;
        if f.eval_coords(l, &assignment)?.iter().any(|&c| c != 0) {
            return Ok(IdentityVerdict {
                holds: false,
                mode: IdentityMode::Exhaustive,
                tuples_checked: checked,
                counterexample: Some(assignment.into_iter().map(|c| l.element(c)).collect()),
            });
        }
    }
    Ok(IdentityVerdict {
        holds: true,
        mode: IdentityMode::Exhaustive,
        tuples_checked: checked,
        counterexample: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn scan_basis(
    l: &GradedLieRing,
    f: &LiePolynomial,
    vars: &[usize],
    pos: usize,
    degree: usize,
    top: usize,
    assignment: &mut Vec<Vec<u32>>,
    checked: &mut u64,
    budget: u64,
    cap: u64,
    found: &mut Option<Vec<Vec<u32>>>,
) -> Result<()> {
    if found.is_some() {
        return Ok(());
    }
    if pos == vars.len() {
        *checked += 1;
        if *checked > budget {
            return Err(Error::OutOfBudget(format!(
                "basis scan of {cap} tuples exceeds {budget}"
            )));
        }
        if f.eval_coords(l, assignment)?.iter().any(|&c| c != 0) {
            *found = Some(assignment.clone());
        }
        return Ok(());
    }
    for a in 0..l.dim() {
        let d = degree + l.basis_degree(a);
        if d > top && vars.len() > 1 {
            continue;
        }
        assignment[vars[pos]] = crate::lie::unit(l.dim(), a);
        scan_basis(l, f, vars, pos + 1, d, top, assignment, checked, budget, cap, found)?;
    }
    assignment[vars[pos]] = vec![0; l.dim()];
    Ok(())
}

fn digits(mut x: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (x % p as u64) as u32;
        x /= p as u64;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelVerdict {
    pub holds: bool,
    /// `true` when only basis elements and random combinations were tried.
    pub sampled: bool,
    pub elements_checked: u64,
    pub witness: Option<LieElement>,
}

/// Whether `(ad a)^n = 0` for every `a` in `L`.
pub fn is_n_engel_algebra(l: &GradedLieRing, n: usize, seed: u64) -> EngelVerdict {
    let p = l.prime();
    let dim = l.dim();
    let size = (p as u64).checked_pow(dim as u32).filter(|&s| s <= ENGEL_EXACT_LIMIT);
    let candidates: Vec<Vec<u32>> = match size {
        Some(s) => (0..s).map(|x| digits(x, p, dim)).collect(),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v: Vec<Vec<u32>> = (0..dim).map(|a| crate::lie::unit(dim, a)).collect();
            v.extend((0..ENGEL_SAMPLES).map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect()));
            v
        }
    };
    let mut checked = 0;
    for c in candidates {
        checked += 1;
        let u = l.element(c);
        let ad = l.ad_matrix(&u).expect("element of this algebra");
        if !ad.pow(n as u64).is_zero() {
            return EngelVerdict {
                holds: false,
                sampled: size.is_none(),
                elements_checked: checked,
                witness: Some(u),
            };
        }
    }
    EngelVerdict {
        holds: true,
        sampled: size.is_none(),
        elements_checked: checked,
        witness: None,
    }
}

/// Least `n` with `(ad u)^n = 0`, via [`nilpotency_index`]; exposed for reports.
pub fn ad_index(l: &GradedLieRing, u: &LieElement) -> Result<Option<usize>> {
    Ok(nilpotency_index(&l.ad_matrix(u)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupWord {
    Var(usize),
    Inv(Box<GroupWord>),
    Mul(Vec<GroupWord>),
    /// Left-normed, at least two entries.
    Comm(Vec<GroupWord>),
    Pow(Box<GroupWord>, i64),
}

impl GroupWord {
    pub fn var(v: usize) -> Self {
        GroupWord::Var(v)
    }

    pub fn comm(words: Vec<GroupWord>) -> Self {
        GroupWord::Comm(words)
    }

    pub fn pow(self, e: i64) -> Self {
        GroupWord::Pow(Box::new(self), e)
    }

    /// `[x_0, x_1, ..., x_{k-1}]^q`.
    pub fn commutator_power(k: usize, q: i64) -> Self {
        GroupWord::Comm((0..k).map(GroupWord::Var).collect()).pow(q)
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut out = HashSet::new();
        self.collect_vars(&mut out);
        let mut v: Vec<usize> = out.into_iter().collect();
        v.sort_unstable();
        v
    }

    fn collect_vars(&self, out: &mut HashSet<usize>) {
        match self {
            GroupWord::Var(v) => {
                out.insert(*v);
            }
            GroupWord::Inv(w) | GroupWord::Pow(w, _) => w.collect_vars(out),
            GroupWord::Mul(ws) | GroupWord::Comm(ws) => ws.iter().for_each(|w| w.collect_vars(out)),
        }
    }

    fn arity(&self) -> usize {
        self.variables().last().map_or(0, |&v| v + 1)
    }

    /// Evaluates on element indices of `g`.
    pub fn eval_idx(&self, g: &FiniteGroup, assignment: &[usize]) -> Result<usize> {
        match self {
            GroupWord::Var(v) => {
                let x = *assignment.get(*v).ok_or(Error::UnboundVariable(*v))?;
                if x >= g.order() {
                    return Err(Error::ForeignElement);
                }
                Ok(x)
            }
            GroupWord::Inv(w) => Ok(g.inv(w.eval_idx(g, assignment)?)),
            GroupWord::Mul(ws) => ws
                .iter()
                .try_fold(g.identity(), |acc, w| Ok(g.mul(acc, w.eval_idx(g, assignment)?))),
            GroupWord::Comm(ws) => {
                let xs: Vec<usize> = ws.iter().map(|w| w.eval_idx(g, assignment)).collect::<Result<_>>()?;
                g.long_comm(&xs)
            }
            GroupWord::Pow(w, e) => Ok(g.pow(w.eval_idx(g, assignment)?, *e)),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, ws: &[GroupWord]| {
            write!(f, "({head}")?;
            for w in ws {
                write!(f, " {w}")?;
            }
            write!(f, ")")
        };
        match self {
            GroupWord::Var(v) => write!(f, "x{v}"),
            GroupWord::Inv(w) => write!(f, "(inv {w})"),
            GroupWord::Mul(ws) => list(f, "mul", ws),
            GroupWord::Comm(ws) => list(f, "comm", ws),
            GroupWord::Pow(w, e) => write!(f, "(pow {w} {e})"),
        }
    }
}

pub fn evaluate_group_word(w: &GroupWord, g: &FiniteGroup, assignment: &[GroupElement]) -> Result<GroupElement> {
    let idx: Vec<usize> = assignment.iter().map(|x| g.index_of(x)).collect::<Result<_>>()?;
    Ok(g.element(w.eval_idx(g, &idx)?).clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordVerdict {
    pub holds: bool,
    pub evaluations: u64,
    /// Element indices assigned to `x_0, x_1, ...` on failure.
    pub counterexample: Option<Vec<usize>>,
}

pub fn group_satisfies(w: &GroupWord, g: &FiniteGroup) -> Result<WordVerdict> {
    group_satisfies_with_budget(w, g, WORD_EVALUATION_BUDGET)
}

pub fn group_satisfies_with_budget(w: &GroupWord, g: &FiniteGroup, budget: u64) -> Result<WordVerdict> {
    let k = w.arity();
    let n = g.order() as u64;
    let total = n.checked_pow(k as u32).filter(|&t| t <= budget).ok_or_else(|| {
        Error::OutOfBudget(format!("|G|^{k} with |G| = {n} exceeds {budget} evaluations"))
    })?;
    let decode = |t: u64| -> Vec<usize> {
        let mut rest = t;
        (0..k)
            .map(|_| {
                let x = (rest % n) as usize;
                rest /= n;
                x
            })
            .collect()
    };
    let bad = (0..total)
        .into_par_iter()
        .find_first(|&t| w.eval_idx(g, &decode(t)).map_or(true, |x| x != g.identity()));
    match bad {
        Some(t) => {
            let a = decode(t);
            w.eval_idx(g, &a)?;
            Ok(WordVerdict { holds: false, evaluations: t + 1, counterexample: Some(a) })
        }
        None => Ok(WordVerdict { holds: true, evaluations: total, counterexample: None }),
    }
}

/// Least `n <= cutoff` with `[y, n x] = 1` for every `y`, or `None`.
pub fn engel_index_of_element(g: &FiniteGroup, x: usize, cutoff: usize) -> Result<Option<usize>> {
    if x >= g.order() {
        return Err(Error::ForeignElement);
    }
    let e = g.identity();
    let mut worst = 1;
    let mut seen = HashSet::new();
    for y in 0..g.order() {
        seen.clear();
        let mut z = y;
        let mut steps = 0;
        while z != e {
            if !seen.insert(z) || steps >= cutoff {
                return Ok(None);
            }
            z = g.comm(z, x);
            steps += 1;
        }
        worst = worst.max(steps);
    }
    Ok((worst <= cutoff).then_some(worst))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Sexp {
    Atom(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn col(&self) -> usize {
        match self {
            Sexp::Atom(_, c) | Sexp::List(_, c) => *c,
        }
    }
}

/// Parse failure inside a single expression: 0-based byte column and message.
pub(crate) type ExprError = (usize, String);

fn read_sexp(text: &str) -> std::result::Result<Sexp, ExprError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    fn read(text: &str, bytes: &[u8], pos: &mut usize) -> std::result::Result<Sexp, ExprError> {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        let start = *pos;
        match bytes.get(start) {
            None => Err((start, "unexpected end of expression".into())),
            Some(b')') => Err((start, "unexpected `)`".into())),
            Some(b'(') => {
                *pos += 1;
                let mut items = Vec::new();
                loop {
                    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                        *pos += 1;
                    }
                    match bytes.get(*pos) {
                        None => return Err((start, "unclosed `(`".into())),
                        Some(b')') => {
                            *pos += 1;
                            return Ok(Sexp::List(items, start));
                        }
                        _ => items.push(read(text, bytes, pos)?),
                    }
                }
            }
            Some(_) => {
                while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() && !matches!(bytes[*pos], b'(' | b')') {
                    *pos += 1;
                }
                Ok(Sexp::Atom(text[start..*pos].to_string(), start))
            }
        }
    }
    let s = read(text, bytes, &mut pos)?;
    skip(&mut pos);
    if pos != bytes.len() {
        return Err((pos, "trailing input after expression".into()));
    }
    Ok(s)
}

fn variable(s: &Sexp) -> std::result::Result<usize, ExprError> {
    match s {
        Sexp::Atom(a, c) => a
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or((*c, format!("expected a variable like `x0`, found `{a}`"))),
        Sexp::List(_, c) => Err((*c, "expected a variable".into())),
    }
}

fn integer(s: &Sexp) -> std::result::Result<i64, ExprError> {
    match s {
        Sexp::Atom(a, c) => a.parse().map_err(|_| (*c, format!("expected an integer, found `{a}`"))),
        Sexp::List(_, c) => Err((*c, "expected an integer".into())),
    }
}

fn head(items: &[Sexp], col: usize) -> std::result::Result<&str, ExprError> {
    match items.first() {
        Some(Sexp::Atom(h, _)) => Ok(h),
        _ => Err((col, "expected an operator after `(`".into())),
    }
}

fn bracket_tree(s: &Sexp) -> std::result::Result<BracketTree, ExprError> {
    match s {
        Sexp::Atom(..) => Ok(BracketTree::Var(variable(s)?)),
        Sexp::List(items, col) => {
            if head(items, *col)? != "br" {
                return Err((*col, "expected `br`".into()));
            }
            if items.len() < 3 {
                return Err((*col, "`br` needs at least two arguments".into()));
            }
            let mut acc = bracket_tree(&items[1])?;
            for t in &items[2..] {
                acc = BracketTree::Br(Box::new(acc), Box::new(bracket_tree(t)?));
            }
            Ok(acc)
        }
    }
}

pub(crate) fn parse_lie_expr(text: &str) -> std::result::Result<LiePolynomial, ExprError> {
    let s = read_sexp(text)?;
    if let Sexp::List(items, col) = &s {
        if head(items, *col)? == "lin" {
            let rest = &items[1..];
            if rest.is_empty() || rest.len() % 2 != 0 {
                return Err((*col, "`lin` takes coefficient/monomial pairs".into()));
            }
            let terms = rest
                .chunks(2)
                .map(|pair| Ok((integer(&pair[0])?, bracket_tree(&pair[1])?)))
                .collect::<std::result::Result<_, ExprError>>()?;
            return Ok(LiePolynomial::new(terms));
        }
    }
    Ok(LiePolynomial::new(vec![(1, bracket_tree(&s)?)]))
}

fn group_word(s: &Sexp) -> std::result::Result<GroupWord, ExprError> {
    match s {
        Sexp::Atom(..) => Ok(GroupWord::Var(variable(s)?)),
        Sexp::List(items, col) => {
            let args = &items[1..];
            let arity = |n: usize| {
                if args.len() == n {
                    Ok(())
                } else {
                    Err((*col, format!("`{}` takes {n} argument(s)", head(items, *col).unwrap_or(""))))
                }
            };
            match head(items, *col)? {
                "inv" => {
                    arity(1)?;
                    Ok(GroupWord::Inv(Box::new(group_word(&args[0])?)))
                }
                "pow" => {
                    arity(2)?;
                    Ok(GroupWord::Pow(Box::new(group_word(&args[0])?), integer(&args[1])?))
                }
                "mul" => Ok(GroupWord::Mul(args.iter().map(group_word).collect::<std::result::Result<_, _>>()?)),
                "comm" => {
                    if args.len() < 2 {
                        return Err((*col, "`comm` needs at least two arguments".into()));
                    }
                    Ok(GroupWord::Comm(args.iter().map(group_word).collect::<std::result::Result<_, _>>()?))
                }
                other => Err((items[0].col(), format!("unknown word operator `{other}`"))),
            }
        }
    }
}

pub(crate) fn parse_word_expr(text: &str) -> std::result::Result<GroupWord, ExprError> {
    group_word(&read_sexp(text)?)
}

fn located<T>(r: std::result::Result<T, ExprError>) -> Result<T> {
    r.map_err(|(col, message)| Error::Syntax {
        location: Location { line: 1, column: col + 1 },
        message,
    })
}

pub fn parse_lie_polynomial(text: &str) -> Result<LiePolynomial> {
    located(parse_lie_expr(text))
}

pub fn parse_group_word(text: &str) -> Result<GroupWord> {
    located(parse_word_expr(text))
}
