use hypcone::cones::{double_description, is_extreme_ray, is_facet, rays_adjacent, remove_redundancy, tight_set};
use hypcone::hypermetric::{as_cut, cut_vector, cut_sets, generate_cuts, generate_hyp, generate_met, path_metric};
use hypcone::symmetry::{stabilizer, symmetric_group, OrbitTable};
use hypcone::{HCone, Inequality, RayVector, SimpleGraph};

fn sorted_rays(c: &hypcone::VCone) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = c.rays().iter().map(|r| r.coords().to_vec()).collect();
    v.sort();
    v
}

#[test]
fn hyp5_rays_are_the_cuts() {
    let rays = double_description(&generate_hyp(5).unwrap()).unwrap();
    assert_eq!(rays.len(), 15);
    assert!(rays.rays().iter().all(|r| as_cut(r).is_some()));
    assert_eq!(sorted_rays(&rays), sorted_rays(&generate_cuts(5).unwrap()));
}

#[test]
fn hyp6_rays_are_the_cuts() {
    let rays = double_description(&generate_hyp(6).unwrap()).unwrap();
    assert_eq!(rays.len(), 31);
    assert_eq!(sorted_rays(&rays), sorted_rays(&generate_cuts(6).unwrap()));
}

#[test]
fn met5_has_ten_non_cut_rays() {
    let rays = double_description(&generate_met(5).unwrap()).unwrap();
    assert_eq!(rays.len(), 25);
    let non_cut: Vec<&RayVector> = rays.rays().iter().filter(|r| as_cut(r).is_none()).collect();
    assert_eq!(non_cut.len(), 10);
    // the path metric of K_{2,3}
    let k23 = SimpleGraph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let d = path_metric(&k23).unwrap();
    assert!(non_cut.iter().any(|r| **r == d));
    let table = OrbitTable::partition(&non_cut.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(), 5).unwrap();
    assert_eq!(table.sizes, vec![10]);
}

#[test]
fn hyp_facet_counts() {
    assert_eq!(generate_hyp(5).unwrap().len(), 40);
    assert_eq!(generate_hyp(7).unwrap().len(), 3773);
}

#[test]
fn hyp5_list_is_irredundant() {
    let hyp = generate_hyp(5).unwrap();
    let (kept, _) = remove_redundancy(&hyp, None).unwrap();
    assert_eq!(kept.len(), hyp.len());
    let rays = generate_cuts(5).unwrap();
    assert!(hyp.inequalities().iter().all(|f| is_facet(&rays, f).unwrap()));
}

#[test]
fn met5_plus_pentagonal_redundancy() {
    let mut list = generate_met(5).unwrap().inequalities().to_vec();
    let met_len = list.len();
    list.extend(generate_hyp(5).unwrap().inequalities().iter().cloned());
    let (kept, stats) = remove_redundancy(&HCone::new(5, list).unwrap(), None).unwrap();
    assert_eq!(stats.distinct, 40);
    assert_eq!(kept.len(), 40);
    assert!(met_len < kept.len());
}

#[test]
fn pruned_and_unpruned_agree_on_hyp6_with_extra_rows() {
    let mut list = generate_hyp(6).unwrap().inequalities().to_vec();
    let b = hypcone::BVector::new(vec![2, 1, 1, -1, -1, -1]).unwrap();
    for d in symmetric_group(6).unwrap().orbit(&hypcone::hypermetric::hypermetric_coefficients(&b)) {
        list.push(Inequality::le(d).unwrap());
    }
    let c = HCone::new(6, list).unwrap();
    let group = symmetric_group(6).unwrap().permutations().to_vec();
    let (a, sa) = remove_redundancy(&c, None).unwrap();
    let (b, sb) = remove_redundancy(&c, Some(&group)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), generate_hyp(6).unwrap().len());
    assert!(sb.probes < sa.probes);
}

#[test]
fn cut_tight_sets_on_hyp5() {
    let hyp = generate_hyp(5).unwrap();
    for s in cut_sets(5).unwrap() {
        let r = cut_vector(&s);
        assert!(is_extreme_ray(&hyp, &r).unwrap());
        assert!(tight_set(&hyp, &r).unwrap().len() >= 9);
    }
    let cuts: Vec<RayVector> = generate_cuts(5).unwrap().rays().to_vec();
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            assert!(rays_adjacent(&hyp, &cuts[i], &cuts[j]).unwrap());
        }
    }
}

#[test]
fn triangle_stabilizer_order() {
    let met = generate_met(4).unwrap();
    let f = met.inequalities()[0].coeffs();
    assert_eq!(stabilizer(f, 4).unwrap().len(), 2);
}
