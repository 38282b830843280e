//! Colorings, ordered b-partitions and coloring validation.

use crate::error::{Error, Result};
use crate::graph::{sort_by_weight, Mode, WeightedGraph};
use crate::weight::{format_weight, Weight};
use num_traits::Zero;
use std::fmt;

/// An ordered sequence of color classes over item ids, with cached class
/// weights and the objective value `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
    class_weights: Vec<Weight>,
    total_weight: Weight,
}

impl Coloring {
    pub fn empty() -> Self {
        Coloring {
            classes: Vec::new(),
            class_weights: Vec::new(),
            total_weight: Weight::zero(),
        }
    }

    /// Builds a coloring of `g` from classes of item ids, computing each class
    /// weight as its heaviest item. Empty classes are dropped and each class
    /// is stored ascending.
    ///
    /// Panics if an id is not an item of `g`.
    pub fn from_classes(g: &WeightedGraph, classes: Vec<Vec<usize>>) -> Self {
        let mut kept = Vec::with_capacity(classes.len());
        let mut class_weights = Vec::with_capacity(classes.len());
        for mut class in classes.into_iter().filter(|c| !c.is_empty()) {
            class.sort_unstable();
            let wmax = class
                .iter()
                .map(|&i| g.weight(i))
                .max()
                .expect("non-empty class");
            class_weights.push(wmax);
            kept.push(class);
        }
        let total_weight = class_weights.iter().copied().sum();
        Coloring {
            classes: kept,
            class_weights,
            total_weight,
        }
    }

    /// Raw constructor that trusts the caller's class weights; used to build
    /// deliberately inconsistent colorings for validation.
    pub fn from_parts(classes: Vec<Vec<usize>>, class_weights: Vec<Weight>) -> Self {
        let total_weight = class_weights.iter().copied().sum();
        Coloring {
            classes,
            class_weights,
            total_weight,
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<Vec<usize>> {
        self.classes
    }

    pub fn class_weights(&self) -> &[Weight] {
        &self.class_weights
    }

    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class weights sorted non-increasing.
    pub fn sorted_class_weights(&self) -> Vec<Weight> {
        let mut ws = self.class_weights.clone();
        ws.sort_unstable_by(|a, b| b.cmp(a));
        ws
    }

    /// Color index of every item, or `None` for uncovered items.
    pub fn assignment(&self, item_count: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; item_count];
        for (c, class) in self.classes.iter().enumerate() {
            for &i in class {
                if i < item_count {
                    out[i] = Some(c);
                }
            }
        }
        out
    }
}

/// Blocks of the ordered b-partition of an item set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderedPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Sorts `items` by weight (descending, ties to the smaller id) and chops the
/// sequence into consecutive blocks of `b`. `weights` runs parallel to
/// `items`.
pub fn ordered_b_partition(items: &[usize], weights: &[Weight], b: usize) -> Result<OrderedPartition> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    if items.len() != weights.len() {
        return Err(Error::param(format!(
            "{} items but {} weights",
            items.len(),
            weights.len()
        )));
    }
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &c| weights[c].cmp(&weights[a]).then(items[a].cmp(&items[c])));
    let sorted: Vec<usize> = order.into_iter().map(|i| items[i]).collect();
    Ok(OrderedPartition {
        blocks: sorted.chunks(b).map(<[usize]>::to_vec).collect(),
    })
}

/// Ordered b-partition of a set of items of `g`, with weights taken from the
/// graph.
pub fn partition_items(g: &WeightedGraph, items: &[usize], b: usize) -> Result<OrderedPartition> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let mut sorted = items.to_vec();
    sort_by_weight(&mut sorted, |i| g.weight(i));
    Ok(OrderedPartition {
        blocks: sorted.chunks(b).map(<[usize]>::to_vec).collect(),
    })
}

/// One reason a coloring is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownItem { class: usize, item: usize },
    DuplicateItem { item: usize },
    MissingItem { item: usize },
    EmptyClass { class: usize },
    AdjacentItems { class: usize, a: usize, b: usize },
    CardinalityBound { class: usize, size: usize, bound: usize },
    ClassWeightMismatch { class: usize, stated: Weight, actual: Weight },
    TotalWeightMismatch { stated: Weight, actual: Weight },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownItem { class, item } => {
                write!(f, "unknown item {item} in class {class}")
            }
            Violation::DuplicateItem { item } => write!(f, "item {item} appears in two classes"),
            Violation::MissingItem { item } => write!(f, "item {item} is not colored"),
            Violation::EmptyClass { class } => write!(f, "class {class} is empty"),
            Violation::AdjacentItems { class, a, b } => {
                write!(f, "adjacent items {a} and {b} share class {class}")
            }
            Violation::CardinalityBound { class, size, bound } => write!(
                f,
                "cardinality bound: class {class} has {size} items, bound is {bound}"
            ),
            Violation::ClassWeightMismatch { class, stated, actual } => write!(
                f,
                "class {class} weight is {} but its heaviest item weighs {}",
                format_weight(stated),
                format_weight(actual)
            ),
            Violation::TotalWeightMismatch { stated, actual } => write!(
                f,
                "total weight is {} but class weights sum to {}",
                format_weight(stated),
                format_weight(actual)
            ),
        }
    }
}

/// Outcome of validating a coloring; carries recomputed weights either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
    pub class_weights: Vec<Weight>,
    pub total_weight: Weight,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks raw classes: disjoint cover of all items, no conflicting pair in a
/// class, no class above `b`. Recomputes class weights (unknown items are
/// ignored for the weight).
pub fn validate_classes(g: &WeightedGraph, classes: &[Vec<usize>], b: usize) -> ValidityReport {
    let m = g.item_count();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; m];
    let mut class_weights = Vec::with_capacity(classes.len());

    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            violations.push(Violation::EmptyClass { class: c });
        }
        if class.len() > b {
            violations.push(Violation::CardinalityBound {
                class: c,
                size: class.len(),
                bound: b,
            });
        }
        let mut heaviest = Weight::zero();
        for &item in class {
            if item >= m {
                violations.push(Violation::UnknownItem { class: c, item });
                continue;
            }
            heaviest = heaviest.max(g.weight(item));
            match owner[item] {
                Some(_) => violations.push(Violation::DuplicateItem { item }),
                None => owner[item] = Some(c),
            }
        }
        class_weights.push(heaviest);
        let known: Vec<usize> = class.iter().copied().filter(|&i| i < m).collect();
        'pairs: for (x, &a) in known.iter().enumerate() {
            for &bb in &known[x + 1..] {
                if g.items_conflict(a, bb) {
                    violations.push(Violation::AdjacentItems { class: c, a, b: bb });
                    break 'pairs;
                }
            }
        }
    }
    for (item, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(Violation::MissingItem { item });
        }
    }
    let total_weight = class_weights.iter().copied().sum();
    ValidityReport {
        violations,
        class_weights,
        total_weight,
    }
}

/// [`validate_classes`] plus consistency of the coloring's cached weights.
pub fn validate_coloring(g: &WeightedGraph, c: &Coloring, b: usize) -> ValidityReport {
    let mut report = validate_classes(g, c.classes(), b);
    if c.class_weights().len() != c.classes().len() {
        report.violations.push(Violation::TotalWeightMismatch {
            stated: c.total_weight(),
            actual: report.total_weight,
        });
        return report;
    }
    for (i, (stated, actual)) in c.class_weights().iter().zip(&report.class_weights).enumerate() {
        if stated != actual {
            report.violations.push(Violation::ClassWeightMismatch {
                class: i,
                stated: *stated,
                actual: *actual,
            });
        }
    }
    if c.total_weight() != report.total_weight {
        report.violations.push(Violation::TotalWeightMismatch {
            stated: c.total_weight(),
            actual: report.total_weight,
        });
    }
    report
}

/// Requires the graph to be in `mode`.
pub(crate) fn require_mode(g: &WeightedGraph, mode: Mode) -> Result<()> {
    if g.mode() != mode {
        return Err(Error::param(format!(
            "expected a {mode}-weighted graph, got {}",
            g.mode()
        )));
    }
    Ok(())
}
