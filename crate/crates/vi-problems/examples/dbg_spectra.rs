use vi_problems::{gen_bilinear, regenerate};
fn main() {
    let inst = gen_bilinear::<f64>(5, 3, 9001).unwrap();
    let desc = inst.descriptor();
    let direct = regenerate::<f64>(&desc);
    println!("direct regen ok: {}", direct.is_ok());
    let text = serde_json::to_string(&desc).unwrap();
    let parsed: vi_problems::InstanceDescriptor = serde_json::from_str(&text).unwrap();
    println!("spectra equal after json: {}", parsed.spectra == desc.spectra);
    for (a, b) in parsed.spectra[0].iter().zip(&desc.spectra[0]) {
        if a != b { println!("{a:.20e} vs {b:.20e}"); }
    }
}
