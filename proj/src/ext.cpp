#include "strataforge/ext.hpp"

namespace strataforge {

Resolution resolve2(const Module& b) {
    Resolution r;
    r.b = b;
    r.p0 = projective_cover(b);
    r.omega1 = kernel(r.p0.epi);
    r.p1 = projective_cover(r.omega1.module);
    r.omega2 = kernel(r.p1.epi);
    return r;
}

Mat vectorize(const ModuleMorphism& f) {
    int n = 0;
    for (const auto& b : f.blocks) n += b.rows() * b.cols();
    Mat v(f.dom.field(), n, 1);
    int at = 0;
    for (const auto& b : f.blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) v.set(at++, 0, b.at(i, j));
    return v;
}

namespace {

Mat vectorize_all(const std::vector<ModuleMorphism>& fs, const Field& f, int n) {
    Mat m(f, n, static_cast<int>(fs.size()));
    for (size_t c = 0; c < fs.size(); ++c) {
        Mat v = vectorize(fs[c]);
        for (int i = 0; i < n; ++i) m.set(i, c, v.at(i, 0));
    }
    return m;
}

ModuleMorphism combine(const std::vector<ModuleMorphism>& basis, const Mat& coeffs,
                       const Module& dom, const Module& cod) {
    ModuleMorphism r = zero_morphism(dom, cod);
    for (size_t i = 0; i < basis.size(); ++i)
        if (coeffs.at(static_cast<int>(i), 0) != 0)
            r = r.add(basis[i].scale(coeffs.at(static_cast<int>(i), 0)));
    return r;
}

}  // namespace

ExtSpace ext_space(const ModuleMorphism& omega_incl, const Module& n) {
    const Module& omega = omega_incl.dom;
    const Module& p = omega_incl.cod;
    ExtSpace out;
    out.omega = omega;
    out.n = n;
    out.homs = hom_basis(omega, n);
    const Field& f = omega.field();
    int hd = static_cast<int>(out.homs.size());
    // coboundaries: restrictions g . incl for g : P -> N
    std::vector<ModuleMorphism> from_p = hom_basis(p, n);
    Mat coords(f, hd, static_cast<int>(from_p.size()));
    if (hd > 0) {
        int vn = vectorize(out.homs[0]).rows();
        Mat hom_mat = vectorize_all(out.homs, f, vn);
        for (size_t c = 0; c < from_p.size(); ++c) {
            Mat v = vectorize(from_p[c].compose(omega_incl));
            Mat cc = coordinates_in(hom_mat, v);
            for (int i = 0; i < hd; ++i) coords.set(i, static_cast<int>(c), cc.at(i, 0));
        }
    }
    out.rel = column_space(coords);
    out.comp = complement_basis(out.rel.cols() ? out.rel : Mat(f, hd, 0));
    return out;
}

ModuleMorphism ExtSpace::cocycle(int i) const {
    ModuleMorphism r = zero_morphism(omega, n);
    for (size_t j = 0; j < homs.size(); ++j)
        if (comp.at(static_cast<int>(j), i) != 0)
            r = r.add(homs[j].scale(comp.at(static_cast<int>(j), i)));
    return r;
}

Mat ExtSpace::class_of(const ModuleMorphism& f) const {
    const Field& fld = omega.field();
    if (homs.empty()) return Mat(fld, 0, 1);
    int vn = vectorize(homs[0]).rows();
    Mat hom_mat = vectorize_all(homs, fld, vn);
    Mat c = coordinates_in(hom_mat, vectorize(f));
    // write c over [rel | comp]; the comp part is the class
    Mat basis = rel.hstack(comp);
    Mat y = coordinates_in(basis, c);
    return y.submatrix(rel.cols(), rel.cols() + comp.cols(), 0, 1);
}

ExtSpace ext1(const Resolution& r, const Module& n) { return ext_space(r.omega1.inclusion, n); }

ExtSpace ext2(const Resolution& r, const Module& n) { return ext_space(r.omega2.inclusion, n); }

ModuleMorphism lift_through_epi(const ModuleMorphism& f, const ModuleMorphism& epi) {
    std::vector<ModuleMorphism> homs = hom_basis(f.dom, epi.dom);
    const Field& fld = f.dom.field();
    Mat target = vectorize(f);
    std::vector<ModuleMorphism> composed;
    for (const auto& h : homs) composed.push_back(epi.compose(h));
    Mat cols = vectorize_all(composed, fld, target.rows());
    SolveResult s = solve(cols, target);
    if (!s.solution) throw VerifyError("lift_through_epi: no lift exists");
    return combine(homs, *s.solution, f.dom, epi.dom);
}

ModuleMorphism factor_through_injection(const ModuleMorphism& incl, const ModuleMorphism& f) {
    ModuleMorphism r{f.dom, incl.dom, {}};
    for (int v = 0; v < f.dom.num_vertices(); ++v)
        r.blocks.push_back(coordinates_in(incl.blocks[v], f.blocks[v]));
    return r;
}

Extension realize_extension(const Resolution& r, const Module& n, const ModuleMorphism& cocycle) {
    AlgebraPtr alg = r.b.alg;
    const Module& p0 = r.p0.cover;
    DirectSumResult np = direct_sum(alg, {n, p0});
    // omega1 -> N + P0, x |-> (c(x), -i(x))
    ModuleMorphism emb = np.injections[0].compose(cocycle).add(
        np.injections[1].compose(r.omega1.inclusion).scale(Scalar(-1)));
    QuotientModuleResult cok = cokernel(emb);
    Extension out;
    out.e = cok.module;
    out.incl_n = cok.projection.compose(np.injections[0]);
    // E -> B induced by (n, p) |-> epi(p); well-defined since emb's image dies
    ModuleMorphism g = r.p0.epi.compose(np.projections[1]);
    ModuleMorphism bar{out.e, r.b, {}};
    for (int v = 0; v < out.e.num_vertices(); ++v)
        bar.blocks.push_back(g.blocks[v].mul(cok.sections[v]));
    bar.verify();
    out.proj_b = std::move(bar);
    if (!out.incl_n.is_injective() || !out.proj_b.is_surjective())
        throw VerifyError("realize_extension: sequence is not short exact");
    if (!out.proj_b.compose(out.incl_n).is_zero())
        throw VerifyError("realize_extension: composite N -> B nonzero");
    if (out.e.total() != n.total() + r.b.total())
        throw VerifyError("realize_extension: middle term has wrong dimension");
    return out;
}

ModuleMorphism cocycle_of_extension(const Resolution& r, const Extension& ext) {
    // lift p0.epi through proj_b, then restrict to omega1 and pull back along incl_n
    ModuleMorphism lambda = lift_through_epi(r.p0.epi, ext.proj_b);
    ModuleMorphism restricted = lambda.compose(r.omega1.inclusion);  // omega1 -> E
    return factor_through_injection(ext.incl_n, restricted);
}

ModuleMorphism yoneda_push(const Resolution& rb, const ModuleMorphism& c1,
                           const Resolution& rm, const ModuleMorphism& c2) {
    // c1 . (P1 ->> omega1): P1(B) -> M, lifted through P0(M) ->> M
    ModuleMorphism f = c1.compose(rb.p1.epi);
    ModuleMorphism u = lift_through_epi(f, rm.p0.epi);
    // restricted to omega2(B), u lands in omega1(M)
    ModuleMorphism v = factor_through_injection(rm.omega1.inclusion,
                                                u.compose(rb.omega2.inclusion));
    return c2.compose(v);
}

}  // namespace strataforge
