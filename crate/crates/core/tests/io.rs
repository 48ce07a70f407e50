use proptest::prelude::*;

use qtwist::cochain::{extend_seed, Cochain, SeedKind};
use qtwist::io::{
    emit_cochain, emit_space, format_relation, load_cochain, load_space, CochainFile, IoError, SpaceFile,
};
use qtwist::linalg::frac;
use qtwist::random;
use qtwist::scenarios::{build_psi_q, grassmann, plane, plane_weights, r_matrix};
use qtwist::space::{twist, QuantumSpace};

fn sample_cochain() -> Cochain {
    extend_seed(&r_matrix(&frac(2, 3)), SeedKind::Bicharacter, 3).unwrap()
}

fn space_json(relations: &str) -> String {
    format!(r#"{{"name": "A", "generators": ["a", "b"], "cutoff": 3, "relations": {relations}}}"#)
}

fn parse_space(text: &str) -> Result<QuantumSpace, IoError> {
    serde_json::from_str::<SpaceFile>(text).unwrap().to_space(None)
}

fn invalid_at(r: Result<QuantumSpace, IoError>) -> String {
    match r {
        Err(IoError::Invalid { at, .. }) => at,
        other => panic!("expected an invalid-input error, got {other:?}"),
    }
}

#[test]
fn plane_file_matches_the_built_in_plane() {
    let text = r#"{"name": "plane", "generators": ["x", "y"], "cutoff": 4,
        "relations": [{"degree": 2, "terms": [{"word": [0, 1], "coef": "1"}, {"word": [1, 0], "coef": "-1"}]}]}"#;
    assert_eq!(parse_space(text).unwrap(), plane(4));
}

#[test]
fn empty_relations_give_the_free_algebra() {
    let qs = parse_space(&space_json("[]")).unwrap();
    assert_eq!(qs.hilbert(), vec![1, 2, 4, 8]);
}

#[test]
fn malformed_relations_are_located() {
    let len = space_json(r#"[{"degree": 2, "terms": [{"word": [0], "coef": "1"}]}]"#);
    assert_eq!(invalid_at(parse_space(&len)), "relations[0].terms[0]");
    let zero = space_json(r#"[{"degree": 2, "terms": [{"word": [0, 1], "coef": "1"}, {"word": [1, 1], "coef": "0"}]}]"#);
    assert_eq!(invalid_at(parse_space(&zero)), "relations[0].terms[1]");
    let letter = space_json(r#"[{"degree": 2, "terms": [{"word": [0, 2], "coef": "1"}]}]"#);
    assert_eq!(invalid_at(parse_space(&letter)), "relations[0].terms[0]");
    let decimal = space_json(r#"[{"degree": 2, "terms": [{"word": [0, 1], "coef": "1.5"}]}]"#);
    assert_eq!(invalid_at(parse_space(&decimal)), "relations[0].terms[0]");
    let linear = space_json(r#"[{"degree": 1, "terms": [{"word": [0], "coef": "1"}]}]"#);
    assert_eq!(invalid_at(parse_space(&linear)), "relations[0]");
    let high = space_json(r#"[{"degree": 4, "terms": [{"word": [0, 0, 0, 0], "coef": "1"}]}]"#);
    assert_eq!(invalid_at(parse_space(&high)), "relations[0]");
}

#[test]
fn unknown_fields_and_kinds_are_rejected() {
    assert!(serde_json::from_str::<SpaceFile>(r#"{"name": "A", "generators": [], "cutoff": 2, "relations": [], "x": 1}"#)
        .is_err());
    assert!(serde_json::from_str::<CochainFile>(r#"{"kind": "mystery", "cutoff": 2}"#).is_err());
}

#[test]
fn cutoffs_may_only_be_lowered() {
    let f = SpaceFile::from_space(&plane(3));
    assert!(matches!(f.to_space(Some(4)), Err(IoError::RaisedCutoff { requested: 4, file: 3 })));
    assert_eq!(f.to_space(Some(2)).unwrap(), plane(2));
    let c = CochainFile::from_cochain(&sample_cochain());
    assert!(matches!(c.to_cochain(Some(4)), Err(IoError::RaisedCutoff { .. })));
    assert_eq!(c.to_cochain(Some(2)).unwrap(), sample_cochain().truncate(2).unwrap());
}

#[test]
fn explicit_files_must_cover_every_index() {
    let mut f = CochainFile::from_cochain(&sample_cochain());
    if let CochainFile::Explicit { blocks, .. } = &mut f {
        blocks.remove(3);
    }
    assert!(matches!(f.to_cochain(None), Err(IoError::Invalid { at, .. }) if at == "blocks"));
}

#[test]
fn seed_kinds_match_the_library_extension() {
    let seed = serde_json::to_string(&qtwist::io::emit_matrix(&r_matrix(&frac(2, 3)))).unwrap();
    let text = &format!(r#"{{"kind": "bicharacter", "cutoff": 3, "seed": {seed}}}"#);
    let f: CochainFile = serde_json::from_str(text).unwrap();
    assert_eq!(f.to_cochain(None).unwrap(), sample_cochain());
    let diag = r#"{"kind": "diagonal", "cutoff": 3, "q": "3/2", "weights": [[0, 1], [0, 0]]}"#;
    let f: CochainFile = serde_json::from_str(diag).unwrap();
    assert_eq!(f.to_cochain(None).unwrap(), build_psi_q(&plane_weights(), &frac(3, 2), 3).unwrap());
    assert!(serde_json::from_str::<CochainFile>(r#"{"kind": "bicharacter", "cutoff": 3, "seed": [["1","0"],["0","1"]]}"#)
        .unwrap()
        .to_cochain(None)
        .is_err());
}

#[test]
fn primitive_files_denote_the_coboundary() {
    let theta = random::cochain(&mut random::rng(4), 1, 2, 3, true);
    let blocks: Vec<String> = (0..=3)
        .map(|n| format!(r#"{{"degree": {n}, "matrix": {}}}"#, serde_json::to_string(&qtwist::io::emit_matrix(theta.block(&[n]))).unwrap()))
        .collect();
    let text = format!(r#"{{"kind": "primitive", "cutoff": 3, "theta": [{}]}}"#, blocks.join(","));
    let f: CochainFile = serde_json::from_str(&text).unwrap();
    assert_eq!(f.to_cochain(None).unwrap(), theta.coboundary().full);
}

#[test]
fn twisted_plane_relation_renders_with_names() {
    let qs = twist(&plane(3), &build_psi_q(&plane_weights(), &frac(3, 2), 3).unwrap()).unwrap();
    let rels = qs.ideal().minimal_relations();
    assert_eq!(rels.len(), 1);
    let names = vec!["a".to_string(), "b".to_string()];
    assert_eq!(format_relation(&rels[0], &names), "ab - 3/2 ba");
}

#[test]
fn files_round_trip_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let sp = dir.path().join("g.json");
    std::fs::write(&sp, emit_space(&grassmann(3))).unwrap();
    assert_eq!(load_space(&sp, None).unwrap(), grassmann(3));
    let cp = dir.path().join("c.json");
    std::fs::write(&cp, emit_cochain(&sample_cochain())).unwrap();
    assert_eq!(load_cochain(&cp, None).unwrap(), sample_cochain());
    assert!(matches!(load_space(&dir.path().join("missing.json"), None), Err(IoError::Read { .. })));
    std::fs::write(&sp, "{not json").unwrap();
    assert!(matches!(load_space(&sp, None), Err(IoError::Json { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn twisted_spaces_round_trip_byte_identically(n in 1i64..=9, m in 1i64..=9) {
        let psi = build_psi_q(&plane_weights(), &frac(n, m), 3).unwrap();
        let qs = twist(&plane(3), &psi).unwrap();
        let text = emit_space(&qs);
        let back = serde_json::from_str::<SpaceFile>(&text).unwrap().to_space(None).unwrap();
        prop_assert_eq!(&back, &qs);
        prop_assert_eq!(emit_space(&back), text);
    }

    #[test]
    fn cochains_round_trip_byte_identically(seed in any::<u64>(), level in 0usize..=2) {
        let c = random::cochain(&mut random::rng(seed), level, 2, 2, false);
        let text = emit_cochain(&c);
        let back = serde_json::from_str::<CochainFile>(&text).unwrap().to_cochain(None).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(emit_cochain(&back), text);
    }
}
