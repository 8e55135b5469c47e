use double_eta::verify::{double_eta_table, hat_eta_table};

#[test]
fn double_eta_table_matches() {
    let r = double_eta_table();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.len(), 17);
}

#[test]
fn hat_table_matches() {
    let r = hat_eta_table();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.len(), 13);
}
