use tavoid_core::atlas::*;

#[test]
fn leech_minimal_vectors_by_shape() {
    let shapes = leech_shapes();
    let sizes: Vec<usize> = shapes.iter().map(Vec::len).collect();
    assert_eq!(sizes, [1104, 97152, 98304]);
    assert_eq!(leech_minimal().len(), 196560);
}

#[test]
fn golay_weights() {
    let w = golay24().weight_distribution();
    assert_eq!(w[8], 759);
    assert_eq!(w[12], 2576);
    assert_eq!(w.iter().sum::<usize>(), 4096);
    assert_eq!(dual_golay23().codewords().len(), 2048);
}

#[test]
fn atlas_sizes() {
    let mut atlas = Atlas::new();
    let expected = [
        (CodeId::Leech, 196560, 24),
        (CodeId::C4600, 4600, 23),
        (CodeId::C47104, 47104, 23),
        (CodeId::C93150, 93150, 23),
        (CodeId::C552, 552, 23),
        (CodeId::C11178, 11178, 23),
        (CodeId::C48600, 48600, 23),
        (CodeId::C2816, 2816, 22),
        (CodeId::C2025, 2025, 22),
        (CodeId::BarnesWall, 4320, 16),
        (CodeId::DualGolay, 2048, 23),
        (CodeId::PetersenFirst, 10, 5),
        (CodeId::PetersenSecond, 10, 4),
    ];
    assert_eq!(expected.len(), CodeId::ALL.len());
    for (id, len, dim) in expected {
        let c = atlas.build(id).unwrap();
        assert_eq!((c.len(), c.dim()), (len, dim), "{id}");
    }
}

#[test]
fn code_names_round_trip() {
    for id in CodeId::ALL {
        assert_eq!(id.name().parse::<CodeId>().unwrap(), id);
        assert!(!id.recipe().is_empty());
    }
    assert!("nonsense".parse::<CodeId>().is_err());
}
