use kvsyz::{Error, PrimeField, Ring};

#[test]
fn field_examples() {
    let k = PrimeField::new(32003).unwrap();
    assert_eq!(k.inv(k.elem(2)).unwrap().value(), 16002);
    let a = k.elem(12345);
    assert!(k.add(a, k.neg(a)).is_zero());
    assert_eq!(k.mul(k.elem(1), a), a);
    assert!(matches!(k.inv(k.elem(0)), Err(Error::ZeroInverse)));
    assert!(matches!(PrimeField::new(32001), Err(Error::NotPrime(32001))));
}

#[test]
fn polynomial_examples() {
    let r = Ring::default();
    let p = |s: &str| r.parse(s).unwrap();
    assert_eq!(r.mul(&r.add(&r.x(), &r.y()), &r.sub(&r.x(), &r.y())), p("x^2 - y^2"));
    assert!(r.mul(&p("x + z"), &p("0")).is_zero());
    let xyz = r.mul(&p("xy"), &r.z());
    assert_eq!(xyz, p("x*y*z"));
    assert_eq!(xyz.homogeneous_degree(), Some(3));
}

#[test]
fn parser_examples() {
    let r = Ring::default();
    assert_eq!(r.display(&r.parse("xy").unwrap()).to_string(), "x*y");
    assert_eq!(r.display(&r.parse("y - 2*x").unwrap()).to_string(), "-2*x + y");
    assert_eq!(r.display(&r.parse("x^2*y + 3z^3").unwrap()).to_string(), "x^2*y + 3*z^3");
    assert!(matches!(r.parse("x + w"), Err(Error::UnknownVariable { pos: 4, name: 'w' })));
    assert!(matches!(r.parse("x + * y"), Err(Error::Syntax { .. })));
}

#[test]
fn jacobian_examples() {
    let r = Ring::default();
    let p = |s: &str| r.parse(s).unwrap();
    assert_eq!(r.jacobian(&p("x*y*z")).unwrap(), [p("y*z"), p("x*z"), p("x*y")]);
    assert_eq!(r.jacobian(&p("x^3")).unwrap(), [p("3*x^2"), p("0"), p("0")]);
    let q = r.product(&r.parse_list("x, y - x, z - x").unwrap());
    let [qx, qy, qz] = r.jacobian(&q).unwrap();
    let euler = r.add(&r.add(&r.mul(&r.x(), &qx), &r.mul(&r.y(), &qy)), &r.mul(&r.z(), &qz));
    assert_eq!(euler, r.scale(&q, r.field().elem(3)));
    let small = Ring::new(3).unwrap();
    assert!(matches!(small.jacobian(&small.parse("x*y*z").unwrap()), Err(Error::CharacteristicDividesDegree { p: 3, degree: 3 })));
}
