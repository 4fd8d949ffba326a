use super::Dissection;
use crate::exactnum::QuadExt;

const DIGITS: usize = 12;

/// 12 significant digits, trailing zeros dropped.
fn coord(v: &QuadExt) -> String {
    let s = v.approx(DIGITS);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

/// Renders the parts as SVG 1.1 `<rect>` elements.
///
/// The target is scaled to `px` pixels wide (height in proportion) and
/// flipped so that `y` grows upward as in the tiling file. Coordinates are
/// computed exactly and rounded only when printed.
pub fn to_svg(d: &Dissection, px: u32) -> String {
    let t = d.target();
    let scale = &QuadExt::from(i64::from(px)) / &t.w;
    let top = t.top();
    let width = coord(&(&t.w * &scale));
    let height = coord(&(&t.h * &scale));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    for p in d.parts() {
        let x = coord(&(&(&p.x - &t.x) * &scale));
        let y = coord(&(&(&top - &p.top()) * &scale));
        let w = coord(&(&p.w * &scale));
        let h = coord(&(&p.h * &scale));
        out.push_str(&format!(
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
