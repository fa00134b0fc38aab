#include "strataforge/module.hpp"

#include <numeric>

namespace strataforge {

int Module::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int Module::offset(int v) const { return std::accumulate(dims.begin(), dims.begin() + v, 0); }

Mat Module::path_action(const PathWord& p) const {
    const Quiver& q = alg->quiver();
    int src = p.source;
    // block: fiber(src) -> fiber(at)
    Mat block = Mat::identity(field(), dims[src]);
    int at = src;
    for (int a : p.arrows) {
        block = arrow_maps[a].mul(block);
        at = q.arrows[a].target;
    }
    Mat m(field(), total(), total());
    int ro = offset(at), co = offset(src);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) m.set(ro + i, co + j, block.at(i, j));
    return m;
}

Mat Module::basis_action(int i) const { return path_action(alg->basis()[i]); }

Mat Module::action(const Coords& x) const {
    Mat m(field(), total(), total());
    for (int i = 0; i < alg->dim(); ++i)
        if (x[i] != 0) m = m.add(basis_action(i).scale(x[i]));
    return m;
}

void Module::validate() const {
    const Quiver& q = alg->quiver();
    if (static_cast<int>(dims.size()) != num_vertices())
        throw MalformedError("module: dimension vector length mismatch");
    for (int d : dims)
        if (d < 0) throw MalformedError("module: negative dimension");
    if (arrow_maps.size() != q.arrows.size())
        throw MalformedError("module: arrow map count mismatch");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (arrow_maps[a].rows() != dims[q.arrows[a].target] ||
            arrow_maps[a].cols() != dims[q.arrows[a].source])
            throw MalformedError("module: arrow map '" + q.arrows[a].name + "' has wrong shape");
        if (arrow_maps[a].field() != field())
            throw MalformedError("module: arrow map over the wrong field");
    }
    for (const auto& rel : alg->presentation().relations) {
        Mat acc(field(), total(), total());
        for (const auto& t : rel) acc = acc.add(path_action(t.path).scale(t.coeff));
        if (!acc.is_zero()) throw MalformedError("module: relation not satisfied");
    }
}

Module zero_module(AlgebraPtr alg) {
    Module m{alg, std::vector<int>(alg->num_vertices(), 0), {}};
    const Quiver& q = alg->quiver();
    for (const auto& a : q.arrows) m.arrow_maps.emplace_back(alg->field(), 0, 0);
    (void)q;
    return m;
}

Module simple_module(AlgebraPtr alg, int v) {
    Module m = zero_module(alg);
    m.dims[v] = 1;
    const Quiver& q = alg->quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a)
        m.arrow_maps[a] = Mat(alg->field(), m.dims[q.arrows[a].target], m.dims[q.arrows[a].source]);
    return m;
}

Module projective_module(AlgebraPtr alg, int v) {
    const Quiver& q = alg->quiver();
    const Field& f = alg->field();
    // fiber at w: basis residues with source v and target w, ascending
    std::vector<std::vector<int>> fiber(q.vertices.size());
    std::vector<int> pos(alg->dim(), -1);
    for (int i = 0; i < alg->dim(); ++i)
        if (alg->basis_source(i) == v) {
            pos[i] = static_cast<int>(fiber[alg->basis_target(i)].size());
            fiber[alg->basis_target(i)].push_back(i);
        }
    Module m{alg, {}, {}};
    for (const auto& fb : fiber) m.dims.push_back(static_cast<int>(fb.size()));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        Mat map(f, m.dims[t], m.dims[s]);
        int ai = alg->arrow_basis_index(static_cast<int>(a));
        for (int j = 0; j < m.dims[s]; ++j) {
            const Coords& prod = alg->mul_basis(ai, fiber[s][j]);
            for (int i = 0; i < alg->dim(); ++i) {
                if (prod[i] == 0) continue;
                if (pos[i] < 0 || alg->basis_target(i) != t)
                    throw VerifyError("projective module: product leaves the fiber");
                map.set(pos[i], j, prod[i]);
            }
        }
        m.arrow_maps.push_back(std::move(map));
    }
    return m;
}

Mat ModuleMorphism::total_matrix() const {
    Mat m(dom.field(), cod.total(), dom.total());
    for (int v = 0; v < dom.num_vertices(); ++v) {
        int ro = cod.offset(v), co = dom.offset(v);
        for (int i = 0; i < blocks[v].rows(); ++i)
            for (int j = 0; j < blocks[v].cols(); ++j) m.set(ro + i, co + j, blocks[v].at(i, j));
    }
    return m;
}

void ModuleMorphism::verify() const {
    const Quiver& q = dom.alg->quiver();
    if (static_cast<int>(blocks.size()) != dom.num_vertices())
        throw MalformedError("morphism: block count mismatch");
    for (int v = 0; v < dom.num_vertices(); ++v)
        if (blocks[v].rows() != cod.dims[v] || blocks[v].cols() != dom.dims[v])
            throw MalformedError("morphism: block shape mismatch");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        if (blocks[t].mul(dom.arrow_maps[a]) != cod.arrow_maps[a].mul(blocks[s]))
            throw VerifyError("morphism does not commute with arrow '" + q.arrows[a].name + "'");
    }
}

bool ModuleMorphism::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool ModuleMorphism::is_injective() const {
    for (const auto& b : blocks)
        if (rank(b) != b.cols()) return false;
    return true;
}

bool ModuleMorphism::is_surjective() const {
    for (const auto& b : blocks)
        if (rank(b) != b.rows()) return false;
    return true;
}

ModuleMorphism ModuleMorphism::compose(const ModuleMorphism& inner) const {
    ModuleMorphism r{inner.dom, cod, {}};
    for (int v = 0; v < dom.num_vertices(); ++v) r.blocks.push_back(blocks[v].mul(inner.blocks[v]));
    return r;
}

ModuleMorphism ModuleMorphism::add(const ModuleMorphism& o) const {
    ModuleMorphism r{dom, cod, {}};
    for (int v = 0; v < dom.num_vertices(); ++v) r.blocks.push_back(blocks[v].add(o.blocks[v]));
    return r;
}

ModuleMorphism ModuleMorphism::scale(const Scalar& c) const {
    ModuleMorphism r{dom, cod, {}};
    for (const auto& b : blocks) r.blocks.push_back(b.scale(c));
    return r;
}

bool ModuleMorphism::operator==(const ModuleMorphism& o) const { return blocks == o.blocks; }

ModuleMorphism zero_morphism(const Module& dom, const Module& cod) {
    ModuleMorphism r{dom, cod, {}};
    for (int v = 0; v < dom.num_vertices(); ++v)
        r.blocks.emplace_back(dom.field(), cod.dims[v], dom.dims[v]);
    return r;
}

ModuleMorphism identity_morphism(const Module& m) {
    ModuleMorphism r{m, m, {}};
    for (int v = 0; v < m.num_vertices(); ++v)
        r.blocks.push_back(Mat::identity(m.field(), m.dims[v]));
    return r;
}

std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n) {
    const Field& f = m.field();
    const Quiver& q = m.alg->quiver();
    int nv = m.num_vertices();
    // variable layout: per vertex, row-major block entries
    std::vector<int> var_off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + n.dims[v] * m.dims[v];
    int nvars = var_off[nv];
    int nrows = 0;
    for (const auto& a : q.arrows) nrows += n.dims[a.target] * m.dims[a.source];
    Mat sys(f, nrows, nvars);
    int row = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        const Mat& ma = m.arrow_maps[a];
        const Mat& na = n.arrow_maps[a];
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j) {
                // (f_t * Ma)_{ij} - (Na * f_s)_{ij} = 0
                for (int k = 0; k < m.dims[t]; ++k)
                    sys.set(row, var_off[t] + i * m.dims[t] + k,
                            sys.at(row, var_off[t] + i * m.dims[t] + k) + ma.at(k, j));
                for (int k = 0; k < n.dims[s]; ++k)
                    sys.set(row, var_off[s] + k * m.dims[s] + j,
                            sys.at(row, var_off[s] + k * m.dims[s] + j) - na.at(i, k));
                ++row;
            }
    }
    Mat ker = kernel_basis(sys);
    std::vector<ModuleMorphism> out;
    for (int c = 0; c < ker.cols(); ++c) {
        ModuleMorphism h{m, n, {}};
        for (int v = 0; v < nv; ++v) {
            Mat b(f, n.dims[v], m.dims[v]);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    b.set(i, j, ker.at(var_off[v] + i * m.dims[v] + j, c));
            h.blocks.push_back(std::move(b));
        }
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

// Build the submodule structure on per-vertex column spans that are known to
// be closed under the arrow maps.
SubmoduleResult submodule_from_spans(const Module& m, std::vector<Mat> spans) {
    const Quiver& q = m.alg->quiver();
    Module sub{m.alg, {}, {}};
    for (const auto& s : spans) sub.dims.push_back(s.cols());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        sub.arrow_maps.push_back(coordinates_in(spans[t], m.arrow_maps[a].mul(spans[s])));
    }
    ModuleMorphism incl{sub, m, std::move(spans)};
    return SubmoduleResult{std::move(sub), std::move(incl)};
}

}  // namespace

SubmoduleResult kernel(const ModuleMorphism& f) {
    std::vector<Mat> spans;
    for (int v = 0; v < f.dom.num_vertices(); ++v) spans.push_back(kernel_basis(f.blocks[v]));
    return submodule_from_spans(f.dom, std::move(spans));
}

SubmoduleResult image(const ModuleMorphism& f) {
    std::vector<Mat> spans;
    for (int v = 0; v < f.dom.num_vertices(); ++v) spans.push_back(column_space(f.blocks[v]));
    return submodule_from_spans(f.cod, std::move(spans));
}

QuotientModuleResult quotient_module(const Module& m, const ModuleMorphism& into) {
    const Field& f = m.field();
    const Quiver& q = m.alg->quiver();
    QuotientModuleResult out;
    out.module.alg = m.alg;
    std::vector<Mat> projs, sects;
    for (int v = 0; v < m.num_vertices(); ++v) {
        Mat im = column_space(into.blocks[v]);
        Mat comp = complement_basis(im);
        Mat square = im.hstack(comp);
        Mat proj(f, comp.cols(), m.dims[v]);
        if (m.dims[v] > 0) {
            SolveResult inv = solve(square, Mat::identity(f, m.dims[v]));
            proj = inv.solution->submatrix(im.cols(), m.dims[v], 0, m.dims[v]);
        }
        out.module.dims.push_back(comp.cols());
        projs.push_back(std::move(proj));
        sects.push_back(std::move(comp));
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        out.module.arrow_maps.push_back(projs[t].mul(m.arrow_maps[a]).mul(sects[s]));
    }
    out.projection = ModuleMorphism{m, out.module, std::move(projs)};
    out.sections = std::move(sects);
    return out;
}

QuotientModuleResult cokernel(const ModuleMorphism& f) { return quotient_module(f.cod, f); }

SubmoduleResult submodule_generated(const Module& m, const std::vector<Mat>& gens) {
    const Quiver& q = m.alg->quiver();
    std::vector<Mat> spans;
    for (int v = 0; v < m.num_vertices(); ++v) spans.push_back(column_space(gens[v]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            int s = q.arrows[a].source, t = q.arrows[a].target;
            Mat pushed = m.arrow_maps[a].mul(spans[s]);
            if (!subspace_contains(spans[t], pushed)) {
                spans[t] = subspace_sum(spans[t], pushed);
                changed = true;
            }
        }
    }
    return submodule_from_spans(m, std::move(spans));
}

SubmoduleResult radical_submodule(const Module& m) {
    const Quiver& q = m.alg->quiver();
    std::vector<Mat> spans;
    for (int v = 0; v < m.num_vertices(); ++v) {
        Mat acc(m.field(), m.dims[v], 0);
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].target == v) acc = acc.hstack(m.arrow_maps[a]);
        spans.push_back(column_space(acc));
    }
    return submodule_from_spans(m, std::move(spans));
}

QuotientModuleResult top_of(const Module& m) {
    return quotient_module(m, radical_submodule(m).inclusion);
}

SubmoduleResult socle_of(const Module& m) {
    const Quiver& q = m.alg->quiver();
    std::vector<Mat> spans;
    for (int v = 0; v < m.num_vertices(); ++v) {
        Mat stacked(m.field(), 0, m.dims[v]);
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == v) stacked = stacked.vstack(m.arrow_maps[a]);
        spans.push_back(kernel_basis(stacked));
    }
    return submodule_from_spans(m, std::move(spans));
}

DirectSumResult direct_sum(AlgebraPtr alg, const std::vector<Module>& parts) {
    const Quiver& q = alg->quiver();
    const Field& f = alg->field();
    DirectSumResult out;
    out.module.alg = alg;
    out.module.dims.assign(q.vertices.size(), 0);
    for (const auto& p : parts)
        for (size_t v = 0; v < q.vertices.size(); ++v) out.module.dims[v] += p.dims[v];
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        Mat map(f, out.module.dims[t], out.module.dims[s]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.dims[t]; ++i)
                for (int j = 0; j < p.dims[s]; ++j)
                    map.set(ro + i, co + j, p.arrow_maps[a].at(i, j));
            ro += p.dims[t];
            co += p.dims[s];
        }
        out.module.arrow_maps.push_back(std::move(map));
    }
    std::vector<int> at(q.vertices.size(), 0);
    for (const auto& p : parts) {
        ModuleMorphism inj{p, out.module, {}}, prj{out.module, p, {}};
        for (size_t v = 0; v < q.vertices.size(); ++v) {
            Mat ib(f, out.module.dims[v], p.dims[v]);
            for (int i = 0; i < p.dims[v]; ++i) ib.set(at[v] + i, i, Scalar(1));
            prj.blocks.push_back(ib.transpose());
            inj.blocks.push_back(std::move(ib));
            at[v] += p.dims[v];
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(prj));
    }
    return out;
}

ProjectiveCoverResult projective_cover(const Module& m) {
    AlgebraPtr alg = m.alg;
    QuotientModuleResult top = top_of(m);
    ProjectiveCoverResult out;
    out.multiplicities = top.module.dims;
    std::vector<Module> parts;
    std::vector<std::pair<int, int>> origin;  // (vertex, copy)
    for (int v = 0; v < m.num_vertices(); ++v)
        for (int c = 0; c < out.multiplicities[v]; ++c) {
            parts.push_back(projective_module(alg, v));
            origin.emplace_back(v, c);
        }
    DirectSumResult sum = direct_sum(alg, parts);
    out.cover = sum.module;
    ModuleMorphism epi = zero_morphism(out.cover, m);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        auto [v, c] = origin[pi];
        // generator: lift the c-th top basis vector at v back into m
        Mat gen = top.sections[v].col(c);  // m.dims[v] x 1
        // phi: P(v) -> m, path residue b at vertex w |-> action(b) * gen
        const Module& pv = parts[pi];
        ModuleMorphism phi = zero_morphism(pv, m);
        std::vector<std::vector<int>> fiber(m.num_vertices());
        for (int i = 0; i < alg->dim(); ++i)
            if (alg->basis_source(i) == v) fiber[alg->basis_target(i)].push_back(i);
        for (int w = 0; w < m.num_vertices(); ++w) {
            Mat b(m.field(), m.dims[w], pv.dims[w]);
            for (int j = 0; j < pv.dims[w]; ++j) {
                const PathWord& path = alg->basis()[fiber[w][j]];
                // act on gen, reading off the block fiber(v) -> fiber(w)
                Mat blockact = Mat::identity(m.field(), m.dims[v]);
                int at = v;
                for (int arr : path.arrows) {
                    blockact = m.arrow_maps[arr].mul(blockact);
                    at = alg->quiver().arrows[arr].target;
                }
                Mat col = blockact.mul(gen);
                for (int i = 0; i < m.dims[w]; ++i) b.set(i, j, col.at(i, 0));
            }
            phi.blocks[w] = std::move(b);
        }
        epi = epi.add(phi.compose(sum.projections[pi]));
    }
    epi.verify();
    if (!epi.is_surjective()) throw VerifyError("projective cover: lifted map is not surjective");
    out.epi = std::move(epi);
    return out;
}

std::vector<int> composition_factors(const Module& m) { return m.dims; }

int composition_length(const Module& m) { return m.total(); }

}  // namespace strataforge
