use double_eta::verify::{
    elementary_identities, family_identities, quotient_laws, weyl_laws, IdentityRange, SampleConfig,
};

#[test]
fn family_identities_hold() {
    let r = family_identities(IdentityRange::default());
    assert!(r.all_passed(), "{r}");
}

#[test]
fn weyl_laws_hold() {
    let r = weyl_laws(SampleConfig::default());
    assert!(r.all_passed(), "{r}");
}

#[test]
fn quotient_laws_hold() {
    let r = quotient_laws(SampleConfig {
        samples: 60,
        max_degree: 8,
        ..SampleConfig::default()
    });
    assert!(r.all_passed(), "{r}");
}

#[test]
fn elementary_sums_vanish() {
    let r = elementary_identities(8, 6);
    assert!(r.all_passed(), "{r}");
}
