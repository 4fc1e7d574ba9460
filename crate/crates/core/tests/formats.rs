use genus2::group::enumerate_jacobian;
use genus2::mumford::DivisorJson;
use genus2::{CurveParams, FieldModulus, MumfordDivisor};

fn c7() -> CurveParams {
    CurveParams::from_ints(FieldModulus::new(7).unwrap(), &[1, 0, 0, 0, 0, 1]).unwrap()
}

#[test]
fn text_round_trip_on_every_class() {
    let c = c7();
    for d in enumerate_jacobian(&c, 1000).unwrap() {
        let s = d.to_string();
        assert_eq!(MumfordDivisor::parse(&c, &s).unwrap(), d, "{s}");
        assert_eq!(MumfordDivisor::parse(&c, &s.replace(' ', ";")).unwrap(), d);
    }
}

#[test]
fn json_round_trip_on_every_class() {
    let c = c7();
    for d in enumerate_jacobian(&c, 1000).unwrap() {
        let text = serde_json::to_string(&d.to_json()).unwrap();
        let back: DivisorJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MumfordDivisor::from_json(&c, &back).unwrap(), d);
    }
}

#[test]
fn known_encodings() {
    let c = c7();
    assert_eq!(MumfordDivisor::identity(c.modulus()).to_string(), "u=[1] v=[]");
    let d = MumfordDivisor::parse(&c, "u=[0,6,1] v=[1,2]").unwrap();
    assert_eq!(serde_json::to_string(&d.to_json()).unwrap(), r#"{"u":[0,6,1],"v":[1,2]}"#);
}

#[test]
fn curve_header_round_trip() {
    let c = c7();
    assert_eq!(c.header(), "p=7\nf=[1,0,0,0,0,1]\n");
    assert_eq!(CurveParams::parse_header(&c.header()).unwrap(), c);
    // negative coefficients are reduced
    let n = CurveParams::parse_header("p=7\nf=[-6,0,0,0,0,1]").unwrap();
    assert_eq!(n, c);
}

#[test]
fn malformed_divisors_are_rejected() {
    let c = c7();
    for s in ["", "u=[0,6,1]", "v=[1,2]", "u=[0,6,2] v=[1,2]", "u=[0,6,1] v=[1,5]", "u=[0,0,0,1] v=[1]", "w=[1]"] {
        assert!(MumfordDivisor::parse(&c, s).is_err(), "{s:?}");
    }
}
