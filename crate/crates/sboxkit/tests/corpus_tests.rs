use sboxkit::{
    acnv, coordinate_nonlinearities, corpus_get, corpus_list, parse_sbox, sac, sbox_nonlinearity,
    serialize_sbox, Error, SboxLayout,
};

#[test]
fn listing_is_stable_and_complete() {
    let listing = corpus_list();
    let ids: Vec<&str> = listing.iter().map(|(id, _)| *id).collect();
    assert_eq!(
        ids,
        vec![
            "aes",
            "whirlpool",
            "skipjack",
            "paper_sc",
            "paper_sc_best",
            "paper_aes_opt",
            "paper_whirlpool_opt",
            "paper_fantomas_opt",
            "paper_skipjack_opt",
        ]
    );
    for (id, provenance) in &listing {
        assert!(!provenance.is_empty(), "{id} lacks provenance");
        let entry = corpus_get(id).unwrap();
        assert_eq!(entry.id, *id);
        assert_eq!(entry.sbox.n(), 8);
    }
}

#[test]
fn unknown_id_is_reported() {
    let err = corpus_get("des").unwrap_err();
    assert!(matches!(err, Error::UnknownCorpusId { ref id } if id == "des"));
}

#[test]
fn every_expected_metric_matches_recomputation() {
    for (id, _) in corpus_list() {
        let entry = corpus_get(id).unwrap();
        let Some(expected) = entry.expected else {
            continue;
        };
        if let Some(nls) = expected.coordinate_nls {
            assert_eq!(
                coordinate_nonlinearities(&entry.sbox),
                nls.to_vec(),
                "coordinate profile of {id}"
            );
        }
        if let Some(value) = expected.acnv {
            assert_eq!(acnv(&entry.sbox), value, "acnv of {id}");
        }
        if let Some(nl) = expected.nl {
            assert_eq!(sbox_nonlinearity(&entry.sbox), nl, "nl of {id}");
        }
        if let Some(average) = expected.sac_average {
            assert_eq!(sac(&entry.sbox).average, average, "sac average of {id}");
        }
    }
}

#[test]
fn optimized_variants_share_their_frozen_first_row() {
    for (original, optimized) in [
        ("aes", "paper_aes_opt"),
        ("whirlpool", "paper_whirlpool_opt"),
        ("skipjack", "paper_skipjack_opt"),
    ] {
        let a = corpus_get(original).unwrap();
        let b = corpus_get(optimized).unwrap();
        assert_eq!(a.sbox.dlut()[..16], b.sbox.dlut()[..16], "{optimized}");
    }
}

#[test]
fn baseline_table_maps_the_documented_input() {
    let sc = corpus_get("paper_sc").unwrap();
    assert_eq!(sc.sbox.dlut()[0xf5], 0x5d);
    assert_eq!(
        &sc.sbox.dlut()[..16],
        &[0xab, 0xf0, 0x5e, 0x3f, 0xfa, 0xe2, 0x6f, 0x8e, 0x3c, 0x36, 0x30, 0xdb, 0x29, 0x73, 0xda, 0x45]
    );
}

#[test]
fn aes_table_matches_its_specification_anchors() {
    let aes = corpus_get("aes").unwrap();
    let dlut = aes.sbox.dlut();
    assert_eq!(dlut[0x00], 0x63);
    assert_eq!(dlut[0x01], 0x7c);
    assert_eq!(dlut[0x53], 0xed);
    assert_eq!(dlut[0xff], 0x16);
    // the defining algebraic property: inversion in GF(2^8) then affine map
    let affine = |v: u8| -> u8 {
        let mut out = 0u8;
        for bit in 0..8 {
            let b = ((v >> bit) & 1)
                ^ ((v >> ((bit + 4) % 8)) & 1)
                ^ ((v >> ((bit + 5) % 8)) & 1)
                ^ ((v >> ((bit + 6) % 8)) & 1)
                ^ ((v >> ((bit + 7) % 8)) & 1)
                ^ ((0x63 >> bit) & 1);
            out |= b << bit;
        }
        out
    };
    let gf_mul = |mut a: u8, mut b: u8| -> u8 {
        let mut out = 0u8;
        while b != 0 {
            if b & 1 != 0 {
                out ^= a;
            }
            let carry = a & 0x80 != 0;
            a <<= 1;
            if carry {
                a ^= 0x1b;
            }
            b >>= 1;
        }
        out
    };
    for x in 0..=255u16 {
        let inv = if x == 0 {
            0
        } else {
            (1..=255u16)
                .map(|c| c as u8)
                .find(|&c| gf_mul(x as u8, c) == 1)
                .unwrap()
        };
        assert_eq!(dlut[x as usize], affine(inv) as u16, "entry {x:#04x}");
    }
}

#[test]
fn classical_tables_match_their_specification_first_rows() {
    let skipjack = corpus_get("skipjack").unwrap();
    assert_eq!(
        &skipjack.sbox.dlut()[..16],
        &[0xa3, 0xd7, 0x09, 0x83, 0xf8, 0x48, 0xf6, 0xf4, 0xb3, 0x21, 0x15, 0x78, 0x99, 0xb1, 0xaf, 0xf9]
    );
    assert_eq!(skipjack.sbox.dlut()[0xff], 0x46);
    let whirlpool = corpus_get("whirlpool").unwrap();
    assert_eq!(
        &whirlpool.sbox.dlut()[..16],
        &[0x18, 0x23, 0xc6, 0xe8, 0x87, 0xb8, 0x01, 0x4f, 0x36, 0xa6, 0xd2, 0xf5, 0x79, 0x6f, 0x91, 0x52]
    );
    assert_eq!(whirlpool.sbox.dlut()[0xff], 0x86);
}

#[test]
fn every_entry_round_trips_through_both_layouts() {
    for (id, _) in corpus_list() {
        let entry = corpus_get(id).unwrap();
        for layout in [SboxLayout::Flat, SboxLayout::Grid16] {
            let text = serialize_sbox(&entry.sbox, layout).unwrap();
            assert_eq!(parse_sbox(&text).unwrap(), entry.sbox, "{id}");
        }
    }
}
