use serde_json::Value;
use stackwilf_demo::{hook_report, slide_report, sort_report};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn sorting() {
    let v = parse(sort_report("43512"));
    assert_eq!(v["sorted"], serde_json::json!([3, 4, 1, 2, 5]));
    let v = parse(sort_report("123"));
    assert_eq!(v["fertility"], 5);
    assert_eq!(v["preimages"].as_array().unwrap().len(), 5);
}

#[test]
fn hooks_carry_geometry() {
    let v = parse(hook_report("2314"));
    assert_eq!(v["descents"], serde_json::json!([2]));
    let c = &v["configurations"][0];
    assert_eq!(c["hooks"], serde_json::json!([[2, 4]]));
    let colors = c["colors"].as_array().unwrap();
    assert_eq!(colors.len(), 4);
    assert!(colors[3].is_null());
    assert_eq!(c["composition"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum::<u64>(), 3);
}

#[test]
fn sliding() {
    assert_eq!(parse(slide_report("1423", "swu"))["result"], serde_json::json!([3, 4, 1, 2]));
    assert_eq!(parse(slide_report("3412", "swu_inv"))["result"], serde_json::json!([1, 4, 2, 3]));
    assert_eq!(parse(slide_report("3124", "swl"))["result"], serde_json::json!([1, 3, 2, 4]));
}

#[test]
fn errors_are_json() {
    for out in [sort_report("1 3"), slide_report("231", "swu"), slide_report("12", "up"), hook_report("1234567890")] {
        assert!(parse(out)["error"].is_string());
    }
}
