#include "strataforge/presentation.hpp"

namespace strataforge {

GeneratorResult projective_generator(AlgebraPtr lambda,
                                     const std::map<int, CoverCertificate>& covers) {
    if (static_cast<int>(covers.size()) != lambda->num_vertices())
        throw MalformedError("projective_generator: need exactly one cover per simple");
    std::vector<Module> parts;
    GeneratorResult out;
    for (const auto& [v, cert] : covers) {
        if (cert.cover.alg != lambda)
            throw MalformedError("projective_generator: cover over the wrong algebra");
        out.summand_vertices.push_back(v);
        parts.push_back(cert.cover);
    }
    DirectSumResult d = direct_sum(lambda, parts);
    out.g = std::move(d.module);
    out.injections = std::move(d.injections);
    out.projections = std::move(d.projections);
    return out;
}

EndAlgebra generator_endomorphisms(const GeneratorResult& gen) {
    EndAlgebra e = endomorphism_algebra(gen.g, /*opposite=*/true);
    const Quiver& q = gen.g.alg->quiver();
    for (size_t i = 0; i < gen.summand_vertices.size(); ++i) {
        e.alg.idem_labels.push_back(q.vertices[gen.summand_vertices[i]]);
        e.alg.idems.push_back(e.coords_of(gen.injections[i].compose(gen.projections[i])));
    }
    return e;
}

namespace {

// right multiplication by the basis element b, as a module morphism
// P(target(b)) -> P(source(b)) between the direct projectives
ModuleMorphism right_mult(AlgebraPtr alg, int b, const std::vector<Module>& proj) {
    const Field& f = alg->field();
    int from = alg->basis_target(b), to = alg->basis_source(b);
    // fiber layout of the projectives (mirrors projective_module)
    auto layout = [&](int v) {
        std::vector<int> pos(alg->dim(), -1);
        std::vector<std::vector<int>> fiber(alg->num_vertices());
        for (int i = 0; i < alg->dim(); ++i)
            if (alg->basis_source(i) == v) {
                pos[i] = static_cast<int>(fiber[alg->basis_target(i)].size());
                fiber[alg->basis_target(i)].push_back(i);
            }
        return std::pair{pos, fiber};
    };
    auto [pos_to, fiber_to] = layout(to);
    auto [pos_from, fiber_from] = layout(from);
    ModuleMorphism m{proj[from], proj[to], {}};
    for (int w = 0; w < alg->num_vertices(); ++w) {
        Mat block(f, proj[to].dims[w], proj[from].dims[w]);
        for (size_t j = 0; j < fiber_from[w].size(); ++j) {
            const Coords& prod = alg->mul_basis(fiber_from[w][j], b);
            for (int i = 0; i < alg->dim(); ++i) {
                if (prod[i] == 0) continue;
                if (pos_to[i] < 0 || alg->basis_target(i) != w)
                    throw VerifyError("right multiplication leaves the expected fiber");
                block.set(pos_to[i], static_cast<int>(j), prod[i]);
            }
        }
        m.blocks.push_back(std::move(block));
    }
    return m;
}

ModuleMorphism invert(const ModuleMorphism& f) {
    ModuleMorphism out{f.cod, f.dom, {}};
    const Field& fld = f.dom.field();
    for (const Mat& b : f.blocks) {
        if (b.rows() != b.cols()) throw VerifyError("cannot invert a non-square morphism");
        SolveResult s = solve(b, Mat::identity(fld, b.rows()));
        if (!s.solution) throw VerifyError("cannot invert a singular morphism");
        out.blocks.push_back(*s.solution);
    }
    out.verify();
    return out;
}

}  // namespace

RecoveryResult recover_algebra(AlgebraPtr lambda,
                               const std::map<int, CoverCertificate>& covers) {
    const Field& f = lambda->field();
    GeneratorResult gen = projective_generator(lambda, covers);
    EndAlgebra endo = generator_endomorphisms(gen);
    GabrielResult gab = gabriel_presentation(endo.alg);
    RecoveryResult out{std::move(gen), std::move(endo), std::move(gab), Mat{f, 0, 0}};

    int n = lambda->dim();
    if (out.endo.alg.dim != n)
        throw VerifyError("End(G) dimension differs from the algebra dimension");

    // chi: lambda -> End(G), x |-> u . (right mult by x) . u^{-1}, where u_v
    // is a chosen isomorphism from the direct projective onto the cover
    std::vector<Module> proj;
    std::vector<ModuleMorphism> u, u_inv;
    for (int v = 0; v < lambda->num_vertices(); ++v)
        proj.push_back(projective_module(lambda, v));
    for (size_t i = 0; i < out.generator.summand_vertices.size(); ++i) {
        int v = out.generator.summand_vertices[i];
        auto w = indecomposable_isomorphism(proj[v], covers.at(v).cover);
        if (!w) throw VerifyError("cover is not isomorphic to the direct projective");
        u.push_back(*w);
        u_inv.push_back(invert(*w));
    }

    Mat chi(f, n, n);
    for (int b = 0; b < n; ++b) {
        int s = lambda->basis_source(b), t = lambda->basis_target(b);
        ModuleMorphism phi = out.generator.injections[s]
                                 .compose(u[s])
                                 .compose(right_mult(lambda, b, proj))
                                 .compose(u_inv[t])
                                 .compose(out.generator.projections[t]);
        Coords c = out.endo.coords_of(phi);
        for (int i = 0; i < n; ++i) chi.set(i, b, c[i]);
    }
    SolveResult inv = solve(chi, out.gabriel.to_algebra);
    if (!inv.solution || rref(chi).rank != n)
        throw VerifyError("the canonical map lambda -> End(G) is not bijective");
    out.iso_to_lambda = *inv.solution;
    if (!is_algebra_isomorphism(out.gabriel.realized, *lambda, out.iso_to_lambda))
        throw VerifyError("recovered presentation is not isomorphic to the input algebra");
    return out;
}

ExtQuiverResult ext_quiver_with_quadratic_relations(AlgebraPtr lambda) {
    const Field& f = lambda->field();
    int nv = lambda->num_vertices();
    std::vector<Module> simples;
    std::vector<Resolution> res;
    for (int v = 0; v < nv; ++v) {
        simples.push_back(simple_module(lambda, v));
        res.push_back(resolve2(simples.back()));
    }
    std::vector<std::vector<ExtSpace>> e1;
    for (int i = 0; i < nv; ++i) {
        e1.emplace_back();
        for (int j = 0; j < nv; ++j) e1.back().push_back(ext1(res[i], simples[j]));
    }

    ExtQuiverResult out;
    out.quiver.vertices = lambda->quiver().vertices;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            for (int k = 0; k < e1[i][j].dim(); ++k)
                out.quiver.arrows.push_back(Arrow{"x" + std::to_string(i) + "_" +
                                                      std::to_string(j) + "_" +
                                                      std::to_string(k),
                                                  i, j});
    out.quiver.validate();

    for (int i = 0; i < nv; ++i)
        for (int k = 0; k < nv; ++k) {
            QuadraticBlock blk;
            blk.source = i;
            blk.target = k;
            for (int j = 0; j < nv; ++j)
                for (int a = 0; a < e1[j][k].dim(); ++a)
                    for (int b = 0; b < e1[i][j].dim(); ++b)
                        blk.slots.push_back(TensorSlot{j, a, b});
            if (blk.slots.empty()) continue;
            ExtSpace e2 = ext2(res[i], simples[k]);
            Mat pairing(f, e2.dim(), static_cast<int>(blk.slots.size()));
            for (size_t col = 0; col < blk.slots.size(); ++col) {
                const TensorSlot& sl = blk.slots[col];
                ModuleMorphism y = yoneda_push(res[i], e1[i][sl.mid].cocycle(sl.right),
                                               res[sl.mid], e1[sl.mid][k].cocycle(sl.left));
                Mat cls = e2.class_of(y);
                for (int r = 0; r < e2.dim(); ++r)
                    pairing.set(r, static_cast<int>(col), cls.at(r, 0));
            }
            blk.kernel = kernel_basis(pairing);
            blk.relations = column_space(pairing.transpose());
            out.blocks.push_back(std::move(blk));
        }
    return out;
}

}  // namespace strataforge
