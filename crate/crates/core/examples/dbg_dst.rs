use ndarray::Array2;
use num_complex::Complex64;
use rustfft::FftPlanner;

fn main() {
    // reference: 1D DST of x = [1, 0, 0]: out[k] = 2/4 * sin(pi (k+1) * 1 / 4)
    let j = 3usize;
    let n = 2 * (j + 1);
    let mut buf = vec![Complex64::default(); n];
    let x = [1.0, 0.0, 0.0];
    for i in 0..j {
        buf[i + 1] = Complex64::new(x[i], 0.0);
        buf[n - 1 - i] = Complex64::new(-x[i], 0.0);
    }
    println!("buf: {:?}", buf.iter().map(|z| z.re).collect::<Vec<_>>());
    let fft = FftPlanner::new().plan_fft_forward(n);
    fft.process(&mut buf);
    for k in 1..=j {
        let got = -buf[k].im / (j as f64 + 1.0);
        let expect = 2.0 / 4.0 * (std::f64::consts::PI * (k as f64) / 4.0).sin();
        println!("k={k} got {got} expect {expect}");
    }
    // and via the library
    let mut f = Array2::zeros((3, 3));
    f[[0, 0]] = 1.0;
    let out = patcs_core::eigenbasis::dst2(&f).unwrap();
    println!("dst2 row0: {:?}", out.row(0));
    let jp = 4.0;
    println!("expect00: {}", 2.0 / jp * (std::f64::consts::PI / jp).sin() * (std::f64::consts::PI / jp).sin());
}
