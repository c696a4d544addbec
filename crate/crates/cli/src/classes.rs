use clap::ValueEnum;
use compsub::recognize::{
    cograph_cotree, domino, find_hole, find_induced, find_induced_cycle_at_least,
    find_induced_path, find_p3, gem, house, is_extended_p4_laden, perfect_elimination_ordering,
    split_partition,
};
use compsub::Graph;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Cograph,
    Chordal,
    Split,
    HoleFree,
    P5Free,
    DistanceHereditary,
    ExtendedP4Laden,
    Cluster,
}

impl Class {
    pub const ALL: [Class; 8] = [
        Class::Cograph,
        Class::Chordal,
        Class::Split,
        Class::HoleFree,
        Class::P5Free,
        Class::DistanceHereditary,
        Class::ExtendedP4Laden,
        Class::Cluster,
    ];

    fn name(self) -> &'static str {
        match self {
            Class::Cograph => "cograph",
            Class::Chordal => "chordal",
            Class::Split => "split",
            Class::HoleFree => "hole-free",
            Class::P5Free => "p5-free",
            Class::DistanceHereditary => "distance-hereditary",
            Class::ExtendedP4Laden => "extended-p4-laden",
            Class::Cluster => "cluster",
        }
    }
}

fn record(member: bool, key: &str, witness: Value) -> Value {
    json!({ "member": member, key: witness })
}

fn membership(g: &Graph, class: Class) -> Value {
    match class {
        Class::Cograph => match cograph_cotree(g) {
            Ok(_) => json!({ "member": true }),
            Err(e) => record(false, "p4", json!(e.p4)),
        },
        Class::Chordal => match perfect_elimination_ordering(g) {
            Some(order) => record(true, "elimination_order", json!(order)),
            None => record(
                false,
                "chordless_cycle",
                json!(find_induced_cycle_at_least(g, 4)),
            ),
        },
        Class::Split => match split_partition(g) {
            Some(p) => json!({ "member": true, "clique": p.clique, "independent": p.independent }),
            None => json!({ "member": false }),
        },
        Class::HoleFree => match find_hole(g) {
            None => json!({ "member": true }),
            Some(h) => record(false, "hole", json!(h)),
        },
        Class::P5Free => match find_induced_path(g, 5) {
            None => json!({ "member": true }),
            Some(p) => record(false, "p5", json!(p)),
        },
        Class::DistanceHereditary => {
            if let Some(h) = find_hole(g) {
                return record(false, "hole", json!(h));
            }
            for (name, pattern) in [("house", house()), ("gem", gem()), ("domino", domino())] {
                if let Some(vs) = find_induced(g, &pattern) {
                    return record(false, name, json!(vs));
                }
            }
            json!({ "member": true })
        }
        Class::ExtendedP4Laden => json!({ "member": is_extended_p4_laden(g) }),
        Class::Cluster => match find_p3(g) {
            None => json!({ "member": true }),
            Some(p) => record(false, "p3", json!(p)),
        },
    }
}

/// Membership and witness per requested class (all classes when empty).
pub fn report(g: &Graph, classes: &[Class]) -> Value {
    let classes = if classes.is_empty() {
        &Class::ALL[..]
    } else {
        classes
    };
    let mut map = Map::new();
    for &c in classes {
        map.insert(c.name().to_string(), membership(g, c));
    }
    Value::Object(map)
}
