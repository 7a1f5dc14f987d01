//! Golden configurations with their exact node and weight values.

use splinequad::engine::{Family, FreeParameter, Partition, RuleRequest};

pub struct Golden {
    pub name: &'static str,
    pub request: RuleRequest,
    pub partition: Partition,
    /// (node, weight) pairs sorted by node, 30 significant digits.
    pub expected: &'static [(&'static str, &'static str)],
}

const LENGTHS: [f64; 6] = [1.0, 2.0, 3.0, 1.0, 1.0, 1.0];

const C1_CUBIC: &[(&str, &str)] = &[
    (
        "0.250000000000000000000000000000",
        "0.592592592592592592592592592593",
    ),
    (
        "1.24590163934426229508196721311",
        "1.46854811838653222180167764935",
    ),
    (
        "3.16770110966937212125709652505",
        "2.35013464383737852528941214121",
    ),
    (
        "5.58282902405192609756608104703",
        "2.08872199927045862964347505851",
    ),
    (
        "6.99905923639592406240750919623",
        "0.997162095477486963888345651385",
    ),
    (
        "7.96739130434782608695652173913",
        "0.910247957842958474191904314364",
    ),
    (
        "8.75000000000000000000000000000",
        "0.592592592592592592592592592593",
    ),
];

const C0_CUBIC: &[(&str, &str)] = &[
    (
        "0.236398874298326460388169277604",
        "0.560066308488861449517447800450",
    ),
    (
        "0.906458268558816396754687865253",
        "0.773267024844471883815885532884",
    ),
    (
        "2.00000000000000000000000000000",
        "1.33333333333333333333333333333",
    ),
    (
        "3.00000000000000000000000000000",
        "0.833333333333333333333333333333",
    ),
    (
        "4.50000000000000000000000000000",
        "2.00000000000000000000000000000",
    ),
    (
        "6.08463764954519109257145993161",
        "0.974441463590872927244826102116",
    ),
    (
        "6.84393377902623747885711149696",
        "0.692225203075793739421840564551",
    ),
    (
        "7.50000000000000000000000000000",
        "0.666666666666666666666666666667",
    ),
    (
        "8.12984378812835756567558911627",
        "0.622376773805484849714359050862",
    ),
    (
        "8.77015621187164243432441088373",
        "0.544289892861181816952307615805",
    ),
];

fn partition() -> Partition {
    Partition::new(0.0, 9.0, LENGTHS.to_vec()).expect("fixture partition is valid")
}

/// Gaussian C1 cubic rule, one node per subinterval.
pub fn c1_cubic() -> Golden {
    Golden {
        name: "5.1",
        request: RuleRequest {
            continuity: 1,
            nodes_per_subinterval: 1,
            family: Family::Full,
            middle_index: 3,
            free_parameter: FreeParameter::DefaultZero,
        },
        partition: partition(),
        expected: C1_CUBIC,
    }
}

/// C0 cubic half rule with a node pinned at 3.
pub fn c0_cubic() -> Golden {
    Golden {
        name: "9.1",
        request: RuleRequest {
            continuity: 0,
            nodes_per_subinterval: 2,
            family: Family::Half,
            middle_index: 3,
            free_parameter: FreeParameter::PinNode(3.0),
        },
        partition: partition(),
        expected: C0_CUBIC,
    }
}
