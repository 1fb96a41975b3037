use sboxkit::{parse_sbox, random_sbox, serialize_sbox, Error, SBox, SboxLayout};

#[test]
fn parses_flat_hex_with_comments_and_whitespace() {
    let text = "# a 3-bit table\n  04 7 2\t6 1 0 3 5  # trailing note\n";
    let s = parse_sbox(text).unwrap();
    assert_eq!(s.n(), 3);
    assert_eq!(s.dlut(), &[4, 7, 2, 6, 1, 0, 3, 5]);
}

#[test]
fn parses_uppercase_and_padded_tokens() {
    let vals: Vec<String> = (0..64).map(|v| format!("{v:02X}")).collect();
    let s = parse_sbox(&vals.join(" ")).unwrap();
    assert_eq!(s.n(), 6);
    assert_eq!(s.dlut()[0x3f], 0x3f);
    // leading zeros up to the four-digit token cap are fine
    let s = parse_sbox("0004 7 2 6 1 0 3 05").unwrap();
    assert_eq!(s.dlut(), &[4, 7, 2, 6, 1, 0, 3, 5]);
}

#[test]
fn rejects_token_counts_that_are_not_a_supported_power_of_two() {
    // four tokens would mean n = 2, below the smallest supported dimension
    assert!(matches!(
        parse_sbox("0 1 2 3"),
        Err(Error::UnsupportedSize { tokens: 4 })
    ));
    assert!(matches!(
        parse_sbox("0 1 2 3 4 5 6"),
        Err(Error::UnsupportedSize { tokens: 7 })
    ));
    assert!(matches!(
        parse_sbox(""),
        Err(Error::UnsupportedSize { tokens: 0 })
    ));
}

#[test]
fn rejects_bad_tokens() {
    let err = parse_sbox("0 1 2 3 4 5 6 zz").unwrap_err();
    assert!(matches!(err, Error::BadToken { ref token } if token == "zz"));
    // five hex digits exceed the 16-bit token width
    let err = parse_sbox("0 1 2 3 4 5 6 12345").unwrap_err();
    assert!(matches!(err, Error::BadToken { ref token } if token == "12345"));
}

#[test]
fn rejects_out_of_range_and_duplicate_values() {
    assert!(matches!(
        parse_sbox("0 1 2 3 4 5 6 9"),
        Err(Error::ValueOutOfRange { value: 9, n: 3 })
    ));
    assert!(matches!(
        parse_sbox("0 1 2 3 4 5 6 6"),
        Err(Error::DuplicateValue { value: 6 })
    ));
}

#[test]
fn flat_round_trip_preserves_every_table() {
    for n in 3..=8 {
        let s = random_sbox(n, 1000 + n as u64).unwrap();
        let text = serialize_sbox(&s, SboxLayout::Flat).unwrap();
        assert!(text.ends_with('\n'));
        assert_eq!(parse_sbox(&text).unwrap(), s);
    }
}

#[test]
fn grid_round_trip_at_n8() {
    let s = random_sbox(8, 42).unwrap();
    let text = serialize_sbox(&s, SboxLayout::Grid16).unwrap();
    assert_eq!(text.lines().count(), 16);
    for line in text.lines() {
        assert_eq!(line.split_whitespace().count(), 16);
    }
    assert_eq!(parse_sbox(&text).unwrap(), s);
}

#[test]
fn grid_layout_requires_n8() {
    let s = SBox::identity(4);
    assert!(matches!(
        serialize_sbox(&s, SboxLayout::Grid16),
        Err(Error::GridRequiresN8 { n: 4 })
    ));
}

#[test]
fn token_width_tracks_dimension() {
    // 9-bit values need three hex digits; check padding stays parseable
    let s = random_sbox(9, 9).unwrap();
    let text = serialize_sbox(&s, SboxLayout::Flat).unwrap();
    for token in text.split_whitespace() {
        assert_eq!(token.len(), 3);
    }
    assert_eq!(parse_sbox(&text).unwrap(), s);
}

#[test]
fn sbox_construction_validates() {
    assert!(matches!(
        SBox::new(vec![0, 1]),
        Err(Error::UnsupportedSize { tokens: 2 })
    ));
    let mut dlut: Vec<u16> = (0..256).collect();
    dlut[255] = 0;
    assert!(matches!(
        SBox::new(dlut),
        Err(Error::DuplicateValue { value: 0 })
    ));
}
