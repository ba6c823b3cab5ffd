use flagdressian::prevariety::*;
use flagdressian::matroid::{uniform, m4};
fn main() {
    let t0 = std::time::Instant::now();
    let sys = generate_relations(&[1, 2], 4).unwrap();
    let pf = prevariety_fan(&sys).unwrap();
    println!("FlDr(1,2;4): ambient {} dim {} lin {} f {:?} cells {} [{:?}]",
        pf.fan.ambient_dim, pf.fan.dim, pf.fan.lineality_dim, pf.fan.f_vector, pf.cells.len(), t0.elapsed());

    let t0 = std::time::Instant::now();
    let sys = generate_relations(&[1, 2, 3], 4).unwrap();
    println!("Fl(1,2,3;4) system: {} polys", sys.polys.len());
    let pf = prevariety_fan(&sys).unwrap();
    println!("Fl(1,2,3;4): ambient {} dim {} lin {} f {:?} cells {} [{:?}]",
        pf.fan.ambient_dim, pf.fan.dim, pf.fan.lineality_dim, pf.fan.f_vector, pf.cells.len(), t0.elapsed());

    let t0 = std::time::Instant::now();
    let sys = generate_relations(&[2, 3], 6).unwrap();
    println!("(2,3;6) raw system: {} polys", sys.polys.len());
    let sup = vec![uniform(2, 6).bases().to_vec(), m4().bases().to_vec()];
    match restrict_to_stratum(&sys, &sup).unwrap() {
        Restriction::System(s) => {
            println!("restricted: {} polys, {} vars", s.polys.len(), s.n_vars);
            let pf = prevariety_fan(&s).unwrap();
            println!("FlDr(U26,M4): ambient {} dim {} lin {} f {:?} cells {} [{:?}]",
                pf.fan.ambient_dim, pf.fan.dim, pf.fan.lineality_dim, pf.fan.f_vector, pf.cells.len(), t0.elapsed());
        }
        _ => println!("infeasible?!"),
    }
}
