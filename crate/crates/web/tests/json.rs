use cubic_chow_web::{fano_cohomology_json, intersection_degree_json, product_formula_json, MAX_N};

#[test]
fn fano_surface_diamond() {
    let v = fano_cohomology_json(3).unwrap();
    assert_eq!(v["fano"]["betti"], serde_json::json!([1, 10, 45, 10, 1]));
    assert_eq!(v["fano"]["euler"], 27);
    assert_eq!(v["cubic"]["euler"], -6);
    assert_eq!(v["tate"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["fano"]["rows"][2], serde_json::json!([10, 25, 10]));
}

#[test]
fn lines_on_cubic_surface() {
    let v = intersection_degree_json(2, "1", true).unwrap();
    assert_eq!(v["degree"], "27");
    assert_eq!(v["pieri"], "27");
    let v = intersection_degree_json(3, "x^2", true).unwrap();
    assert_eq!(v["degree"], "45");
    let v = intersection_degree_json(3, "x^6", false).unwrap();
    assert_eq!(
        (v["degree"].as_str(), v["pieri"].as_str()),
        (Some("5"), Some("5"))
    );
}

#[test]
fn product_formula_terms() {
    let v = product_formula_json(5, 2, 1, "7/2", "-4").unwrap();
    assert_eq!(v["a"], "1/9");
    assert_eq!(v["result"], "-14/9*h^3");
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn bad_input_is_rejected() {
    assert!(fano_cohomology_json(1).is_err());
    assert!(fano_cohomology_json(MAX_N + 1).is_err());
    assert!(intersection_degree_json(2, "x^3", false).is_err());
    assert!(intersection_degree_json(2, "x +", false).is_err());
    assert!(product_formula_json(4, 2, 2, "1", "1").is_err());
    assert!(product_formula_json(5, 1, 1, "1/0", "1").is_err());
}
