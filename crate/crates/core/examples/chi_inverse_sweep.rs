//! Sweeping the disorder width at fixed coupling ratio: two maxima per curve.

use tls_complexity::curve::Curve;
use tls_complexity::tls::LambdaDisorder;

fn main() -> tls_complexity::Result<()> {
    for zeta in [0.01, 0.05] {
        for kind in [LambdaDisorder::Binary, LambdaDisorder::Box] {
            let curve = Curve::ChiInverse { kind, zeta };
            let maxima = curve.local_maxima(curve.default_bracket(), 4096, 1e-9)?;
            let at: Vec<String> = maxima
                .iter()
                .map(|m| format!("{:.4} (S_C {:.5})", m.x, m.value))
                .collect();
            println!("{} zeta = {zeta}: {}", curve.name(), at.join(", "));
        }
    }
    Ok(())
}
