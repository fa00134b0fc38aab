#include "strataforge/recollement.hpp"

#include <algorithm>
#include <map>

namespace strataforge {

namespace {

Coords mat_col(const Mat& m, int j) {
    Coords c(m.rows());
    for (int i = 0; i < m.rows(); ++i) c[i] = m.at(i, j);
    return c;
}

Mat coords_as_col(const Field& f, const Coords& c) {
    Mat m(f, static_cast<int>(c.size()), 1);
    for (size_t i = 0; i < c.size(); ++i) m.set(static_cast<int>(i), 0, c[i]);
    return m;
}

// block of a total-space endomorphism between two vertex fibers
Mat fiber_block(const Module& m, const Mat& act, int v_src, int v_tgt) {
    int ro = m.offset(v_tgt), co = m.offset(v_src);
    return act.submatrix(ro, ro + m.dims[v_tgt], co, co + m.dims[v_src]);
}

}  // namespace

RecollementDatum make_recollement(AlgebraPtr lambda, const std::vector<int>& open_vertices) {
    RecollementDatum r;
    r.lambda = lambda;
    r.open_vertices = open_vertices;
    std::sort(r.open_vertices.begin(), r.open_vertices.end());
    int nv = lambda->num_vertices();
    for (int v : r.open_vertices)
        if (v < 0 || v >= nv) throw MalformedError("recollement: open vertex out of range");
    if (std::adjacent_find(r.open_vertices.begin(), r.open_vertices.end()) !=
        r.open_vertices.end())
        throw MalformedError("recollement: duplicate open vertex");
    for (int v = 0; v < nv; ++v)
        if (!std::binary_search(r.open_vertices.begin(), r.open_vertices.end(), v))
            r.closed_vertices.push_back(v);
    r.open_index_of.assign(nv, -1);
    r.closed_index_of.assign(nv, -1);
    for (size_t i = 0; i < r.open_vertices.size(); ++i)
        r.open_index_of[r.open_vertices[i]] = static_cast<int>(i);
    for (size_t i = 0; i < r.closed_vertices.size(); ++i)
        r.closed_index_of[r.closed_vertices[i]] = static_cast<int>(i);

    if (!r.open_vertices.empty()) {
        CornerResult c = corner(*lambda, r.open_vertices);
        r.corner_to_parent = c.to_parent;
        r.corner_from_parent = c.from_parent;
        r.open_algebra = std::make_shared<Algebra>(std::move(c.algebra));
    }
    if (!r.closed_vertices.empty()) {
        QuotientResult q = quotient_by_idempotent_ideal(*lambda, r.open_vertices);
        if (q.algebra.is_zero())
            throw MalformedError("recollement: closed vertices die in the quotient");
        r.quotient_projection = q.projection;
        r.quotient_section = q.section;
        r.closed_algebra = std::make_shared<Algebra>(std::move(q.algebra));
    }
    return r;
}

Module j_upper_star(const RecollementDatum& r, const Module& m) {
    if (!r.has_open()) throw MalformedError("recollement has no open part");
    const Algebra& o = *r.open_algebra;
    Module out{r.open_algebra, {}, {}};
    for (int v : r.open_vertices) out.dims.push_back(m.dims[v]);
    for (size_t a = 0; a < o.quiver().arrows.size(); ++a) {
        Coords x = mat_col(r.corner_to_parent, o.arrow_basis_index(static_cast<int>(a)));
        Mat act = m.action(x);
        int s = r.open_vertices[o.quiver().arrows[a].source];
        int t = r.open_vertices[o.quiver().arrows[a].target];
        out.arrow_maps.push_back(fiber_block(m, act, s, t));
    }
    return out;
}

Module i_lower_star(const RecollementDatum& r, const Module& n) {
    if (!r.has_closed()) throw MalformedError("recollement has no closed part");
    const Algebra& lam = *r.lambda;
    const Field& f = lam.field();
    Module out{r.lambda, std::vector<int>(lam.num_vertices(), 0), {}};
    for (int v = 0; v < lam.num_vertices(); ++v)
        if (r.closed_index_of[v] >= 0) out.dims[v] = n.dims[r.closed_index_of[v]];
    for (size_t a = 0; a < lam.quiver().arrows.size(); ++a) {
        int s = lam.quiver().arrows[a].source, t = lam.quiver().arrows[a].target;
        if (r.closed_index_of[s] < 0 || r.closed_index_of[t] < 0) {
            out.arrow_maps.emplace_back(f, out.dims[t], out.dims[s]);
            continue;
        }
        Coords img = mat_col(r.quotient_projection, lam.arrow_basis_index(static_cast<int>(a)));
        Mat act = n.action(img);
        out.arrow_maps.push_back(fiber_block(n, act, r.closed_index_of[s], r.closed_index_of[t]));
    }
    return out;
}

namespace {

// convert a lambda-module with zero open fibers into a closed-algebra module
Module to_closed(const RecollementDatum& r, const Module& m) {
    const Algebra& c = *r.closed_algebra;
    for (int v : r.open_vertices)
        if (m.dims[v] != 0) throw VerifyError("module is not supported on the closed part");
    Module out{r.closed_algebra, {}, {}};
    for (int v : r.closed_vertices) out.dims.push_back(m.dims[v]);
    for (size_t a = 0; a < c.quiver().arrows.size(); ++a) {
        Coords lift = mat_col(r.quotient_section, c.arrow_basis_index(static_cast<int>(a)));
        Mat act = m.action(lift);
        int s = r.closed_vertices[c.quiver().arrows[a].source];
        int t = r.closed_vertices[c.quiver().arrows[a].target];
        out.arrow_maps.push_back(fiber_block(m, act, s, t));
    }
    return out;
}

}  // namespace

Module i_upper_star(const RecollementDatum& r, const Module& m) {
    if (!r.has_closed()) throw MalformedError("recollement has no closed part");
    const Field& f = m.field();
    std::vector<Mat> gens;
    for (int v = 0; v < m.num_vertices(); ++v)
        gens.push_back(r.closed_index_of[v] < 0 ? Mat::identity(f, m.dims[v])
                                                : Mat(f, m.dims[v], 0));
    SubmoduleResult lel = submodule_generated(m, gens);
    QuotientModuleResult q = quotient_module(m, lel.inclusion);
    return to_closed(r, q.module);
}

CoSubmodule i_upper_shriek(const RecollementDatum& r, const Module& m) {
    if (!r.has_closed()) throw MalformedError("recollement has no closed part");
    const Algebra& lam = *r.lambda;
    const Field& f = m.field();
    std::vector<Mat> spans;
    for (int v = 0; v < m.num_vertices(); ++v) {
        if (r.closed_index_of[v] < 0) {
            spans.emplace_back(f, m.dims[v], 0);
            continue;
        }
        // joint kernel of every basis path from v into the open part
        Mat stacked(f, 0, m.dims[v]);
        for (int b = 0; b < lam.dim(); ++b) {
            if (lam.basis_source(b) != v) continue;
            if (r.open_index_of[lam.basis_target(b)] < 0) continue;
            Mat act = m.path_action(lam.basis()[b]);
            stacked = stacked.vstack(fiber_block(m, act, v, lam.basis_target(b)));
        }
        spans.push_back(kernel_basis(stacked));
    }
    const Quiver& q = lam.quiver();
    Module sub{r.lambda, {}, {}};
    for (const auto& s : spans) sub.dims.push_back(s.cols());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        sub.arrow_maps.push_back(coordinates_in(spans[t], m.arrow_maps[a].mul(spans[s])));
    }
    ModuleMorphism incl{sub, m, spans};
    CoSubmodule out;
    out.closed_module = to_closed(r, sub);
    out.in_lambda = SubmoduleResult{std::move(sub), std::move(incl)};
    return out;
}

namespace {

// the raw tensor space of j_! N and its quotient structure
struct ShriekBuild {
    Module mod;  // the lambda-module j_! N
    // raw slots per lambda vertex: (lambda basis index with open source, N coord)
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<Mat> proj, sect;  // per vertex: raw <-> module fibers
};

ShriekBuild build_shriek(const RecollementDatum& r, const Module& n) {
    const Algebra& lam = *r.lambda;
    const Algebra& o = *r.open_algebra;
    const Field& f = lam.field();
    int nv = lam.num_vertices();
    ShriekBuild out;
    out.raw.resize(nv);
    std::vector<std::map<std::pair<int, int>, int>> slot(nv);
    auto n_fiber_of = [&](int b) { return n.dims[r.open_index_of[lam.basis_source(b)]]; };
    for (int b = 0; b < lam.dim(); ++b) {
        if (r.open_index_of[lam.basis_source(b)] < 0) continue;
        int w = lam.basis_target(b);
        for (int k = 0; k < n_fiber_of(b); ++k) {
            slot[w][{b, k}] = static_cast<int>(out.raw[w].size());
            out.raw[w].emplace_back(b, k);
        }
    }
    // relations: b*x (x) nk  -  b (x) x*nk, per vertex of b's target
    std::vector<std::vector<Coords>> rels(nv);
    for (int b = 0; b < lam.dim(); ++b) {
        int v = lam.basis_source(b);
        if (r.open_index_of[v] < 0) continue;
        int w = lam.basis_target(b);
        for (int xo = 0; xo < o.dim(); ++xo) {
            // x must end (in lambda terms) at b's source
            int x_tgt = r.open_vertices[o.basis_target(xo)];
            if (x_tgt != v) continue;
            int x_src_o = o.basis_source(xo);
            int x_src = r.open_vertices[x_src_o];
            Coords xl = mat_col(r.corner_to_parent, xo);  // x in lambda coords
            Coords bx = lam.mul(lam.basis_elt(b), xl);    // source x_src, target w
            // N action of x: fiber x_src_o -> fiber of b's source
            Mat actx = n.action(o.basis_elt(xo));
            Mat xblock = fiber_block(n, actx, x_src_o, r.open_index_of[v]);
            for (int k = 0; k < n.dims[x_src_o]; ++k) {
                Coords rel(out.raw[w].size(), Scalar(0));
                for (int bp = 0; bp < lam.dim(); ++bp) {
                    if (bx[bp] == 0) continue;
                    auto it = slot[w].find({bp, k});
                    if (it == slot[w].end())
                        throw VerifyError("tensor relation leaves the raw space");
                    rel[it->second] = f.reduce(rel[it->second] + bx[bp]);
                }
                for (int kp = 0; kp < n.dims[r.open_index_of[v]]; ++kp) {
                    if (xblock.at(kp, k) == 0) continue;
                    int sl = slot[w].at({b, kp});
                    rel[sl] = f.reduce(rel[sl] - xblock.at(kp, k));
                }
                bool nz = false;
                for (const auto& c : rel)
                    if (c != 0) { nz = true; break; }
                if (nz) rels[w].push_back(std::move(rel));
            }
        }
    }
    out.mod.alg = r.lambda;
    for (int w = 0; w < nv; ++w) {
        int rd = static_cast<int>(out.raw[w].size());
        Mat rm(f, rd, static_cast<int>(rels[w].size()));
        for (size_t j = 0; j < rels[w].size(); ++j)
            for (int i = 0; i < rd; ++i) rm.set(i, static_cast<int>(j), rels[w][j][i]);
        Mat killed = column_space(rm);
        Mat comp = complement_basis(killed);
        Mat proj(f, comp.cols(), rd);
        if (rd > 0) {
            Mat square = killed.hstack(comp);
            SolveResult inv = solve(square, Mat::identity(f, rd));
            proj = inv.solution->submatrix(killed.cols(), rd, 0, rd);
        }
        out.mod.dims.push_back(comp.cols());
        out.proj.push_back(std::move(proj));
        out.sect.push_back(std::move(comp));
    }
    const Quiver& q = lam.quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        int rs = static_cast<int>(out.raw[s].size()), rt = static_cast<int>(out.raw[t].size());
        Mat rawact(f, rt, rs);
        int abasis = lam.arrow_basis_index(static_cast<int>(a));
        for (int j = 0; j < rs; ++j) {
            auto [b, k] = out.raw[s][j];
            const Coords& prod = lam.mul_basis(abasis, b);
            for (int bp = 0; bp < lam.dim(); ++bp) {
                if (prod[bp] == 0) continue;
                rawact.set(slot[t].at({bp, k}), j, prod[bp]);
            }
        }
        out.mod.arrow_maps.push_back(out.proj[t].mul(rawact).mul(out.sect[s]));
    }
    return out;
}

// the right-adjoint side: assignment spaces and fiber bases of j_* N
struct StarBuild {
    Module mod;  // j_* N
    // per lambda vertex w: the basis paths w -> open, and slot offsets into
    // the assignment space
    std::vector<std::vector<int>> bw;
    std::vector<std::vector<int>> bw_offset;
    std::vector<Mat> fiber;  // assignment-space columns spanning Hom_O(eLe_w, N)
};

StarBuild build_star(const RecollementDatum& r, const Module& n) {
    const Algebra& lam = *r.lambda;
    const Algebra& o = *r.open_algebra;
    const Field& f = lam.field();
    int nv = lam.num_vertices();
    StarBuild out;
    out.bw.resize(nv);
    out.bw_offset.resize(nv);
    std::vector<std::map<int, int>> pos(nv);  // lambda basis -> index in bw
    std::vector<int> adim(nv, 0);
    for (int w = 0; w < nv; ++w) {
        for (int b = 0; b < lam.dim(); ++b) {
            if (lam.basis_source(b) != w) continue;
            if (r.open_index_of[lam.basis_target(b)] < 0) continue;
            pos[w][b] = static_cast<int>(out.bw[w].size());
            out.bw_offset[w].push_back(adim[w]);
            out.bw[w].push_back(b);
            adim[w] += n.dims[r.open_index_of[lam.basis_target(b)]];
        }
    }
    auto value_slice = [&](int w, int bpos) {
        int b = out.bw[w][bpos];
        return std::pair<int, int>{out.bw_offset[w][bpos],
                                   n.dims[r.open_index_of[lam.basis_target(b)]]};
    };
    out.mod.alg = r.lambda;
    for (int w = 0; w < nv; ++w) {
        // O-linearity constraints: phi(x*b) = x*phi(b)
        std::vector<Coords> rows;
        for (size_t bp = 0; bp < out.bw[w].size(); ++bp) {
            int b = out.bw[w][bp];
            int u = lam.basis_target(b);  // open
            for (int xo = 0; xo < o.dim(); ++xo) {
                int x_src = r.open_vertices[o.basis_source(xo)];
                if (x_src != u) continue;
                int x_tgt_o = o.basis_target(xo);
                Coords xl = mat_col(r.corner_to_parent, xo);
                Coords xb = lam.mul(xl, lam.basis_elt(b));  // in span of bw[w]
                Mat actx = n.action(o.basis_elt(xo));
                Mat xblock = fiber_block(n, actx, o.basis_source(xo), x_tgt_o);
                int tdim = n.dims[x_tgt_o];
                for (int comp = 0; comp < tdim; ++comp) {
                    Coords row(adim[w], Scalar(0));
                    for (int bpp = 0; bpp < lam.dim(); ++bpp) {
                        if (xb[bpp] == 0) continue;
                        auto it = pos[w].find(bpp);
                        if (it == pos[w].end())
                            throw VerifyError("hom constraint leaves the assignment space");
                        auto [off, len] = value_slice(w, it->second);
                        if (len != tdim) throw VerifyError("hom constraint slice mismatch");
                        row[off + comp] = f.reduce(row[off + comp] + xb[bpp]);
                    }
                    auto [boff, blen] = value_slice(w, static_cast<int>(bp));
                    for (int k = 0; k < blen; ++k)
                        row[boff + k] = f.reduce(row[boff + k] - xblock.at(comp, k));
                    rows.push_back(std::move(row));
                }
            }
        }
        Mat sys(f, static_cast<int>(rows.size()), adim[w]);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < adim[w]; ++j) sys.set(static_cast<int>(i), j, rows[i][j]);
        out.fiber.push_back(kernel_basis(sys));
        out.mod.dims.push_back(out.fiber.back().cols());
    }
    const Quiver& q = lam.quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].source, t = q.arrows[a].target;
        // (a . phi)(y) = phi(y * a) for y starting at t
        Mat raw(f, adim[t], out.mod.dims[s]);
        for (int col = 0; col < out.mod.dims[s]; ++col) {
            for (size_t yp = 0; yp < out.bw[t].size(); ++yp) {
                int y = out.bw[t][yp];
                Coords ya = lam.mul(lam.basis_elt(y),
                                    lam.basis_elt(lam.arrow_basis_index(static_cast<int>(a))));
                auto [yoff, ylen] = value_slice(t, static_cast<int>(yp));
                for (int bpp = 0; bpp < lam.dim(); ++bpp) {
                    if (ya[bpp] == 0) continue;
                    auto it = pos[s].find(bpp);
                    if (it == pos[s].end())
                        throw VerifyError("action leaves the assignment space");
                    auto [off, len] = value_slice(s, it->second);
                    for (int k = 0; k < ylen; ++k)
                        raw.set(yoff + k, col,
                                raw.at(yoff + k, col) + ya[bpp] * out.fiber[s].at(off + k, col));
                }
            }
        }
        out.mod.arrow_maps.push_back(coordinates_in(out.fiber[t], raw));
    }
    return out;
}

}  // namespace

Module j_lower_shriek(const RecollementDatum& r, const Module& n) {
    if (!r.has_open()) throw MalformedError("recollement has no open part");
    return build_shriek(r, n).mod;
}

Module j_lower_star(const RecollementDatum& r, const Module& n) {
    if (!r.has_open()) throw MalformedError("recollement has no open part");
    return build_star(r, n).mod;
}

ModuleMorphism canonical_map(const RecollementDatum& r, const Module& n) {
    if (!r.has_open()) throw MalformedError("recollement has no open part");
    const Algebra& lam = *r.lambda;
    const Field& f = lam.field();
    ShriekBuild sh = build_shriek(r, n);
    StarBuild st = build_star(r, n);
    ModuleMorphism out{sh.mod, st.mod, {}};
    for (int w = 0; w < lam.num_vertices(); ++w) {
        int rd = static_cast<int>(sh.raw[w].size());
        // raw slot (b (x) n_k) |-> assignment y |-> corner(y*b) . n_k
        Mat raw_to_assign(f, st.fiber[w].rows(), rd);
        for (int j = 0; j < rd; ++j) {
            auto [b, k] = sh.raw[w][j];
            int v = lam.basis_source(b);  // open
            for (size_t yp = 0; yp < st.bw[w].size(); ++yp) {
                int y = st.bw[w][yp];
                Coords yb = lam.mul(lam.basis_elt(y), lam.basis_elt(b));  // in eLe
                Mat ybm = coords_as_col(f, yb);
                Mat oc = r.corner_from_parent.mul(ybm);
                Coords occ(oc.rows());
                for (int i = 0; i < oc.rows(); ++i) occ[i] = oc.at(i, 0);
                Mat actn = n.action(occ);
                int src_fiber = r.open_index_of[v];
                int tgt_fiber = r.open_index_of[lam.basis_target(y)];
                Mat block = fiber_block(n, actn, src_fiber, tgt_fiber);
                int off = st.bw_offset[w][yp];
                for (int i = 0; i < block.rows(); ++i)
                    raw_to_assign.set(off + i, j, block.at(i, k));
            }
        }
        Mat assign = raw_to_assign.mul(sh.sect[w]);
        out.blocks.push_back(coordinates_in(st.fiber[w], assign));
    }
    out.verify();
    return out;
}

Module intermediate_extension(const RecollementDatum& r, const Module& n) {
    return image(canonical_map(r, n)).module;
}

std::vector<GluedSimple> classify_simples(const RecollementDatum& r) {
    std::vector<GluedSimple> out;
    for (int v : r.closed_vertices)
        out.push_back(GluedSimple{v, false, simple_module(r.lambda, v)});
    for (size_t i = 0; i < r.open_vertices.size(); ++i) {
        Module s = simple_module(r.open_algebra, static_cast<int>(i));
        out.push_back(GluedSimple{r.open_vertices[i], true, intermediate_extension(r, s)});
    }
    std::sort(out.begin(), out.end(),
              [](const GluedSimple& a, const GluedSimple& b) {
                  return a.lambda_vertex < b.lambda_vertex;
              });
    return out;
}

}  // namespace strataforge
