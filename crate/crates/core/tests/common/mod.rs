#![allow(dead_code)]

use gm2_height::curves::Curve;
use gm2_height::heights::Point2;

/// `(field, x, y, torsion)`; coordinates are polynomials in the field generator `t`.
pub const POINTS: &[(&str, &str, &str, bool)] = &[
    ("Q", "2", "3", false),
    ("Q", "1/2", "3", false),
    ("Q", "-2", "5/7", false),
    ("Q", "4", "9", false),
    ("Q", "3/4", "-1", false),
    ("Q", "10", "1/10", false),
    ("Q", "6", "35/12", false),
    ("t^2-2", "t", "1+t", false),
    ("t^2-2", "t", "3", false),
    ("t^2-2", "1+t", "1-t", false),
    ("t^2-2", "2*t", "t/3", false),
    ("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2", false),
    ("t^4-10*t^2+1", "t", "1", false),
    ("t^4-10*t^2+1", "(11*t-t^3)/2", "t^2-5", false),
    ("zeta_5", "t", "2", false),
    ("zeta_5", "1+t", "t^2", false),
    ("zeta_5", "t", "t^2", true),
    ("t^3-2", "t", "t^2", false),
    ("t^3-2", "t+1", "2", false),
    ("t^2+1", "-1", "t", true),
    ("t^2+1", "1+t", "2-t", false),
    ("zeta_3", "t", "t+1", true),
];

pub fn points() -> Vec<(Point2, bool)> {
    POINTS.iter().map(|&(k, x, y, tor)| (Point2::parse(k, x, y).unwrap(), tor)).collect()
}

pub const CURVES: &[&str] = &[
    "x+y-1",
    "x+y+1",
    "x+y-5",
    "x^2-2",
    "x*y-1",
    "x^2-y^3",
    "x^2+y^2-1",
    "x^2*y+x*y^2+1",
    "y^2-x^3-x-1",
    "2*x*y-3",
    "x^2*y^2+x*y+1",
    "x^3+y^3-2*x*y",
];

pub fn curves() -> Vec<Curve> {
    CURVES.iter().map(|s| Curve::parse(s).unwrap()).collect()
}
