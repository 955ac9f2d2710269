mod support;

#[test]
fn render_then_parse() {
    support::round_trip(1000, 17).unwrap();
}

#[test]
fn other_seeds() {
    for seed in [0, 1, 99] {
        support::round_trip(200, seed).unwrap();
    }
}
