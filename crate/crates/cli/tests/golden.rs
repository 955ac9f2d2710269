mod support;

#[test]
fn transcripts_match() {
    let cases = support::golden_cases();
    assert!(cases.len() >= 15, "only {} golden cases", cases.len());
    let bad = support::golden_mismatches();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
