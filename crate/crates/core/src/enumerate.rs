//! Exhaustive generation of small ordered semigroups.
//!
//! Labeled enumeration is the ground truth: every associative table on `n`
//! labeled elements, crossed with every compatible partial order. Isomorphism
//! reduction is a separate pass over canonical encodings. Anti-isomorphic
//! structures are kept apart.

use std::collections::BTreeMap;
use std::path::Path;

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::classify::{Classifier, CLASS_NAMES};

use crate::config::{Limits, Readings, ENUMERATE_HARD_MAX};
use crate::error::{Error, Result};
use crate::format::write_osg;
use crate::predicate::Expr;
use crate::semigroup::{default_names, validate_named, OrderedSemigroup};
use crate::set::ElementSet;

/// A Cayley table on `0..n`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u8>,
}

impl CayleyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.get(a, b)).collect())
            .collect()
    }
}

/// A partial order on `0..n`, as one down-set per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    below: Vec<ElementSet>,
}

impl PartialOrder {
    pub fn discrete(n: usize) -> Self {
        PartialOrder {
            below: (0..n).map(ElementSet::singleton).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn is_discrete(&self) -> bool {
        self.below
            .iter()
            .enumerate()
            .all(|(a, &s)| s == ElementSet::singleton(a))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.leq(i, j)).collect())
            .collect()
    }
}

fn check_bound(n: usize, allow_large: bool) -> Result<()> {
    let max = if allow_large {
        ENUMERATE_HARD_MAX
    } else {
        Limits::default().enumerate_n
    };
    if n == 0 || n > max {
        return Err(Error::SizeBound {
            what: "exhaustive enumeration",
            n,
            max,
        });
    }
    Ok(())
}

/// Whether every associativity triple whose four cells are all among the
/// first `filled` cells holds.
fn partially_associative(n: usize, cells: &[u8], filled: usize) -> bool {
    let known = |a: usize, b: usize| a * n + b < filled;
    for x in 0..n {
        for y in 0..n {
            if !known(x, y) {
                continue;
            }
            let xy = cells[x * n + y] as usize;
            for z in 0..n {
                if !known(y, z) || !known(xy, z) {
                    continue;
                }
                let yz = cells[y * n + z] as usize;
                if known(x, yz) && cells[xy * n + z] != cells[x * n + yz] {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(n: usize, cells: &mut Vec<u8>, out: &mut Vec<CayleyTable>) {
    let filled = cells.len();
    if filled == n * n {
        out.push(CayleyTable {
            n,
            cells: cells.clone(),
        });
        return;
    }
    for v in 0..n as u8 {
        cells.push(v);
        if partially_associative(n, cells, filled + 1) {
            extend(n, cells, out);
        }
        cells.pop();
    }
}

/// All tables whose first row is `first_row`, in lexicographic order.
pub fn tables_with_first_row(n: usize, first_row: &[u8]) -> Vec<CayleyTable> {
    let mut cells = Vec::with_capacity(n * n);
    let mut out = Vec::new();
    for (i, &v) in first_row.iter().enumerate() {
        cells.push(v);
        if !partially_associative(n, &cells, i + 1) {
            return out;
        }
    }
    extend(n, &mut cells, &mut out);
    out
}

fn first_rows(n: usize) -> Vec<Vec<u8>> {
    (0..n)
        .map(|_| 0..n as u8)
        .multi_cartesian_product()
        .collect()
}

/// Every associative table on `n` labeled elements, in lexicographic order.
pub fn enumerate_tables(n: usize, allow_large: bool) -> Result<Vec<CayleyTable>> {
    enumerate_tables_with(n, allow_large, false)
}

/// As [`enumerate_tables`], optionally splitting the search by first row across threads.
/// The result is identical either way.
pub fn enumerate_tables_with(
    n: usize,
    allow_large: bool,
    parallel: bool,
) -> Result<Vec<CayleyTable>> {
    check_bound(n, allow_large)?;
    let rows = first_rows(n);
    let chunks: Vec<Vec<CayleyTable>> = if parallel {
        rows.par_iter()
            .map(|r| tables_with_first_row(n, r))
            .collect()
    } else {
        rows.iter().map(|r| tables_with_first_row(n, r)).collect()
    };
    Ok(chunks.into_iter().flatten().collect())
}

/// Every partial order on `0..n`, discrete first.
pub fn all_partial_orders(n: usize) -> Vec<PartialOrder> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    fn go(
        k: usize,
        pairs: &[(usize, usize)],
        leq: &mut Vec<Vec<bool>>,
        out: &mut Vec<PartialOrder>,
    ) {
        let n = leq.len();
        if k == pairs.len() {
            let transitive = (0..n)
                .all(|i| (0..n).all(|j| !leq[i][j] || (0..n).all(|l| !leq[j][l] || leq[i][l])));
            if transitive {
                let below = (0..n)
                    .map(|j| (0..n).filter(|&i| leq[i][j]).collect())
                    .collect();
                out.push(PartialOrder { below });
            }
            return;
        }
        let (i, j) = pairs[k];
        go(k + 1, pairs, leq, out);
        leq[i][j] = true;
        go(k + 1, pairs, leq, out);
        leq[i][j] = false;
        leq[j][i] = true;
        go(k + 1, pairs, leq, out);
        leq[j][i] = false;
    }
    go(0, &pairs, &mut leq, &mut out);
    out
}

fn compatible(table: &CayleyTable, order: &PartialOrder) -> bool {
    let n = table.n();
    for a in 0..n {
        for b in order.below[a].iter() {
            // b ≤ a
            for x in 0..n {
                if !order.leq(table.get(x, b), table.get(x, a))
                    || !order.leq(table.get(b, x), table.get(a, x))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Every partial order compatible with `table` on both sides.
pub fn compatible_orders(table: &CayleyTable) -> Vec<PartialOrder> {
    all_partial_orders(table.n())
        .into_iter()
        .filter(|o| compatible(table, o))
        .collect()
}

fn orders_for(table: &CayleyTable, posets: &[PartialOrder]) -> Vec<PartialOrder> {
    posets
        .iter()
        .filter(|o| compatible(table, o))
        .cloned()
        .collect()
}

pub fn build(table: &CayleyTable, order: &PartialOrder) -> OrderedSemigroup {
    validate_named(default_names(table.n()), &table.rows(), &order.matrix())
        .expect("enumerated structures satisfy every axiom")
}

/// Lexicographically least `(n, table, order)` byte string over all relabelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    /// Hex SHA-256 prefix used for corpus file names.
    pub fn digest(&self) -> String {
        let h = Sha256::digest(&self.0);
        hex::encode(&h[..8])
    }
}

/// Encoding of `s` under the relabeling where new element `p` is old element `order[p]`.
fn encode(s: &OrderedSemigroup, order: &[usize]) -> Vec<u8> {
    let n = s.n();
    let mut pos = vec![0usize; n];
    for (p, &old) in order.iter().enumerate() {
        pos[old] = p;
    }
    let mut out = Vec::with_capacity(1 + 2 * n * n);
    out.push(n as u8);
    for &a in order {
        for &b in order {
            out.push(pos[s.mul(a, b)] as u8);
        }
    }
    for &a in order {
        for &b in order {
            out.push(s.leq(a, b) as u8);
        }
    }
    out
}

/// The encoding of `s` as labeled, without minimizing.
pub fn labeled_form(s: &OrderedSemigroup) -> CanonicalForm {
    CanonicalForm(encode(s, &(0..s.n()).collect::<Vec<_>>()))
}

fn best_relabeling(s: &OrderedSemigroup) -> (CanonicalForm, Vec<usize>) {
    let n = s.n();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for order in (0..n).permutations(n) {
        let enc = encode(s, &order);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            best = Some((enc, order));
        }
    }
    let (enc, order) = best.expect("at least one permutation");
    (CanonicalForm(enc), order)
}

/// Isomorphism-invariant encoding: equal iff the structures are isomorphic as
/// ordered semigroups. Cost is `n!` relabelings.
pub fn canonicalize(s: &OrderedSemigroup) -> CanonicalForm {
    best_relabeling(s).0
}

/// `s` relabeled into its canonical form, with default element names.
pub fn canonical_representative(s: &OrderedSemigroup) -> OrderedSemigroup {
    let (_, order) = best_relabeling(s);
    let mut perm = vec![0; s.n()];
    for (p, &old) in order.iter().enumerate() {
        perm[old] = p;
    }
    s.relabel(&perm)
        .with_names(default_names(s.n()))
        .expect("default names are valid")
}

/// Options for [`Corpus::build`].
#[derive(Clone, Debug, Default)]
pub struct CorpusOptions {
    pub n: usize,
    pub up_to_iso: bool,
    pub allow_large: bool,
    pub parallel: bool,
}

/// All ordered semigroups of one order, in a schedule-independent sequence.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub n: usize,
    pub up_to_iso: bool,
    /// Associative tables (labeled).
    pub tables: usize,
    /// Ordered structures before isomorphism reduction.
    pub labeled: usize,
    /// Labeled order: by table, then by order. Up to isomorphism: canonical
    /// representatives sorted by canonical form.
    pub structures: Vec<OrderedSemigroup>,
}

impl Corpus {
    pub fn build(opts: &CorpusOptions) -> Result<Corpus> {
        let n = opts.n;
        let tables = enumerate_tables_with(n, opts.allow_large, opts.parallel)?;
        let posets = all_partial_orders(n);
        let expand = |t: &CayleyTable| -> Vec<OrderedSemigroup> {
            orders_for(t, &posets).iter().map(|o| build(t, o)).collect()
        };
        let labeled: Vec<OrderedSemigroup> = if opts.parallel {
            tables.par_iter().flat_map_iter(expand).collect()
        } else {
            tables.iter().flat_map(expand).collect()
        };
        let labeled_count = labeled.len();
        let structures = if opts.up_to_iso {
            let keyed: Vec<(CanonicalForm, OrderedSemigroup)> = if opts.parallel {
                labeled
                    .par_iter()
                    .map(|s| (canonicalize(s), s.clone()))
                    .collect()
            } else {
                labeled
                    .iter()
                    .map(|s| (canonicalize(s), s.clone()))
                    .collect()
            };
            let mut classes: BTreeMap<CanonicalForm, OrderedSemigroup> = BTreeMap::new();
            for (k, s) in keyed {
                classes.entry(k).or_insert(s);
            }
            classes
                .into_values()
                .map(|s| canonical_representative(&s))
                .collect()
        } else {
            labeled
        };
        Ok(Corpus {
            n,
            up_to_iso: opts.up_to_iso,
            tables: tables.len(),
            labeled: labeled_count,
            structures,
        })
    }
}

/// Every ordered semigroup of order `1..=n_max`, labeled, concatenated by order.
pub fn corpus_up_to(
    n_max: usize,
    up_to_iso: bool,
    parallel: bool,
) -> Result<Vec<OrderedSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let c = Corpus::build(&CorpusOptions {
            n,
            up_to_iso,
            allow_large: false,
            parallel,
        })?;
        out.extend(c.structures);
    }
    Ok(out)
}

/// Structures of order `opts.n` satisfying `expr`, in corpus order, at most `limit` of them.
pub fn search(
    opts: &CorpusOptions,
    expr: &Expr,
    limit: Option<usize>,
    readings: Readings,
    limits: Limits,
) -> Result<Vec<OrderedSemigroup>> {
    let corpus = Corpus::build(opts)?;
    let keep = |s: &OrderedSemigroup| expr.eval(s, readings, limits);
    let mut hits: Vec<OrderedSemigroup> = if opts.parallel {
        corpus.structures.into_par_iter().filter(keep).collect()
    } else {
        corpus.structures.into_iter().filter(keep).collect()
    };
    if let Some(k) = limit {
        hits.truncate(k);
    }
    Ok(hits)
}

/// Deterministic summary of an emitted corpus: counts, per-class tallies over
/// the kept structures, and the file name of each kept structure in order.
pub fn manifest(
    corpus: &Corpus,
    filter: Option<&str>,
    kept: &[OrderedSemigroup],
    readings: Readings,
    limits: Limits,
    parallel: bool,
) -> Value {
    let classify = |s: &OrderedSemigroup| Classifier::with(s, readings, limits).classify();
    let reports: Vec<_> = if parallel {
        kept.par_iter().map(classify).collect()
    } else {
        kept.iter().map(classify).collect()
    };
    let mut classes = Map::new();
    for name in CLASS_NAMES {
        classes.insert(
            name.to_string(),
            json!(reports.iter().filter(|r| r.holds(name)).count()),
        );
    }
    let files: Vec<String> = kept.iter().map(corpus_file_name).collect();
    json!({
        "format": "osg v1",
        "n": corpus.n,
        "up_to_iso": corpus.up_to_iso,
        "filter": filter,
        "tables": corpus.tables,
        "ordered": corpus.labeled,
        "structures": kept.len(),
        "classes": classes,
        "files": files,
    })
}

/// `<digest>.osg`, hashed from the labeled encoding; for canonical
/// representatives that is the canonical form.
pub fn corpus_file_name(s: &OrderedSemigroup) -> String {
    format!("{}.osg", labeled_form(s).digest())
}

/// Writes every kept structure and `manifest.json` into `dir`; returns the manifest.
pub fn emit_corpus(
    dir: &Path,
    corpus: &Corpus,
    filter: Option<&str>,
    kept: &[OrderedSemigroup],
    readings: Readings,
    limits: Limits,
    parallel: bool,
) -> Result<Value> {
    std::fs::create_dir_all(dir)?;
    for s in kept {
        std::fs::write(dir.join(corpus_file_name(s)), write_osg(s))?;
    }
    let m = manifest(corpus, filter, kept, readings, limits, parallel);
    let text = serde_json::to_string_pretty(&m).expect("manifest serializes");
    std::fs::write(dir.join("manifest.json"), text + "\n")?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::bottomed_right_zero;

    #[test]
    fn small_table_counts() {
        assert_eq!(enumerate_tables(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_tables(2, false).unwrap().len(), 8);
        assert!(enumerate_tables(5, false).is_err());
        assert!(enumerate_tables(0, false).is_err());
    }

    #[test]
    fn tables_are_sorted_and_associative() {
        let ts = enumerate_tables(3, false).unwrap();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        for t in &ts {
            assert!(partially_associative(3, &t.cells, 9));
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(
            enumerate_tables_with(3, false, true).unwrap(),
            enumerate_tables(3, false).unwrap()
        );
    }

    #[test]
    fn poset_counts() {
        // Labeled posets: 1, 3, 19, 219.
        let counts: Vec<usize> = (1..=4).map(|n| all_partial_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
        assert!(all_partial_orders(3)[0].is_discrete());
    }

    #[test]
    fn right_zero_orders() {
        let rz = CayleyTable {
            n: 2,
            cells: vec![0, 1, 0, 1],
        };
        assert_eq!(compatible_orders(&rz).len(), 3);
        let trivial = CayleyTable {
            n: 1,
            cells: vec![0],
        };
        assert_eq!(compatible_orders(&trivial).len(), 1);
    }

    #[test]
    fn example_order_is_enumerated() {
        let s = bottomed_right_zero();
        let t = CayleyTable {
            n: 3,
            cells: vec![0, 1, 2, 0, 1, 2, 0, 1, 2],
        };
        let found = compatible_orders(&t)
            .iter()
            .any(|o| o.matrix() == s.leq_matrix());
        assert!(found);
    }

    #[test]
    fn canonical_form_examples() {
        let rz = build(
            &CayleyTable {
                n: 2,
                cells: vec![0, 1, 0, 1],
            },
            &PartialOrder::discrete(2),
        );
        assert_eq!(canonicalize(&rz), canonicalize(&rz.relabel(&[1, 0])));
        let s = bottomed_right_zero();
        assert_eq!(canonicalize(&s), canonicalize(&s.relabel(&[0, 2, 1])));
        let lz = build(
            &CayleyTable {
                n: 2,
                cells: vec![0, 0, 1, 1],
            },
            &PartialOrder::discrete(2),
        );
        assert_ne!(canonicalize(&rz), canonicalize(&lz));
    }

    #[test]
    fn search_examples() {
        let opts = |n| CorpusOptions {
            n,
            ..Default::default()
        };
        let d = (Readings::default(), Limits::default());
        let expr = Expr::parse("regular and not right_inverse").unwrap();
        let hits = search(&opts(2), &expr, None, d.0, d.1).unwrap();
        let lz = build(
            &CayleyTable {
                n: 2,
                cells: vec![0, 0, 1, 1],
            },
            &PartialOrder::discrete(2),
        );
        assert!(hits.contains(&lz));
        let none = search(
            &opts(1),
            &Expr::parse("not regular").unwrap(),
            None,
            d.0,
            d.1,
        )
        .unwrap();
        assert!(none.is_empty());
        let one = search(&opts(2), &expr, Some(1), d.0, d.1).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn canonical_representative_is_fixed_point() {
        let s = bottomed_right_zero();
        let r = canonical_representative(&s);
        assert_eq!(labeled_form(&r), canonicalize(&s));
        assert_eq!(canonical_representative(&r), r);
    }
}
