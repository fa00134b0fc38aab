#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "strataforge/algebra.hpp"

namespace strataforge {

Coords StructAlgebra::mul(const Coords& a, const Coords& b) const {
    Coords r(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            const Coords& t = table[i][j];
            for (int k = 0; k < dim; ++k)
                if (t[k] != 0) r[k] = field.reduce(r[k] + a[i] * b[j] * t[k]);
        }
    }
    return r;
}

Mat StructAlgebra::left_mult(const Coords& a) const {
    Mat m(field, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Coords bj(dim, Scalar(0));
        bj[j] = Scalar(1);
        Coords col = mul(a, bj);
        for (int i = 0; i < dim; ++i) m.set(i, j, col[i]);
    }
    return m;
}

Mat StructAlgebra::elements_matrix(const std::vector<Coords>& xs) const {
    Mat m(field, dim, static_cast<int>(xs.size()));
    for (int j = 0; j < static_cast<int>(xs.size()); ++j)
        for (int i = 0; i < dim; ++i) m.set(i, j, xs[j][i]);
    return m;
}

void StructAlgebra::verify() const {
    Coords u = unit;
    for (int i = 0; i < dim; ++i) {
        Coords bi(dim, Scalar(0));
        bi[i] = Scalar(1);
        if (mul(u, bi) != bi || mul(bi, u) != bi)
            throw VerifyError("struct algebra: unit axiom fails");
    }
    Coords s(dim, Scalar(0));
    for (size_t a = 0; a < idems.size(); ++a) {
        for (size_t b = 0; b < idems.size(); ++b) {
            Coords p = mul(idems[a], idems[b]);
            Coords expect = (a == b) ? idems[a] : Coords(dim, Scalar(0));
            for (int k = 0; k < dim; ++k)
                if (field.reduce(p[k]) != field.reduce(expect[k]))
                    throw VerifyError("struct algebra: idempotents not orthogonal");
        }
        for (int k = 0; k < dim; ++k) s[k] = field.reduce(s[k] + idems[a][k]);
    }
    if (!idems.empty())
        for (int k = 0; k < dim; ++k)
            if (field.reduce(s[k]) != field.reduce(u[k]))
                throw VerifyError("struct algebra: idempotents do not sum to the unit");
}

StructAlgebra struct_view(const Algebra& a) {
    StructAlgebra s;
    s.field = a.field();
    s.dim = a.dim();
    s.table.assign(s.dim, std::vector<Coords>(s.dim));
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j) s.table[i][j] = a.mul_basis(i, j);
    s.unit = a.unit();
    for (int v = 0; v < a.num_vertices(); ++v) {
        s.idem_labels.push_back(a.quiver().vertices[v]);
        s.idems.push_back(a.basis_elt(a.vertex_idempotent(v)));
    }
    return s;
}

namespace {

Scalar trace(const Mat& m) {
    Scalar t(0);
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return m.field().reduce(t);
}

Mat mat_pow(const Mat& m, long long e) {
    Mat r = Mat::identity(m.field(), m.rows());
    Mat b = m;
    while (e > 0) {
        if (e & 1) r = r.mul(b);
        b = b.mul(b);
        e >>= 1;
    }
    return r;
}

// span of {x*y : x in xs, y in ys} as columns
Mat product_span(const StructAlgebra& a, const Mat& xs, const Mat& ys) {
    std::vector<Coords> prods;
    for (int i = 0; i < xs.cols(); ++i)
        for (int j = 0; j < ys.cols(); ++j) {
            Coords x(a.dim), y(a.dim);
            for (int k = 0; k < a.dim; ++k) { x[k] = xs.at(k, i); y[k] = ys.at(k, j); }
            prods.push_back(a.mul(x, y));
        }
    if (prods.empty()) return Mat(a.field, a.dim, 0);
    return column_space(a.elements_matrix(prods));
}

bool span_is_nilpotent(const StructAlgebra& a, const Mat& basis) {
    Mat layer = basis;
    for (int step = 0; step <= a.dim + 1; ++step) {
        if (layer.cols() == 0) return true;
        layer = product_span(a, layer, basis);
    }
    return false;
}

// One pass of the radical chain, without the cross-verification.
Mat radical_chain(const StructAlgebra& a, const std::vector<Mat>& rep) {
    const Field& f = a.field;
    int n = rep.empty() ? 0 : rep[0].rows();
    // current subspace basis as columns
    Mat basis = Mat::identity(f, a.dim);
    auto rep_of = [&](const Coords& x) {
        Mat m(f, n, n);
        for (int i = 0; i < a.dim; ++i)
            if (x[i] != 0) m = m.add(rep[i].scale(x[i]));
        return m;
    };
    if (f.kind() == Field::Kind::Rationals) {
        int r = basis.cols();
        Mat g(f, r, r);
        std::vector<Mat> reps;
        for (int i = 0; i < r; ++i) {
            Coords x(a.dim);
            for (int k = 0; k < a.dim; ++k) x[k] = basis.at(k, i);
            reps.push_back(rep_of(x));
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) g.set(i, j, trace(reps[i].mul(reps[j])));
        Mat ker = kernel_basis(g);
        return column_space(basis.mul(ker));
    }
    // Characteristic p: trace of p-th powers is Frobenius-degenerate mod p, so
    // the refined forms are computed on integer lifts and divided by p^i
    // before reducing (Cohen-Ivanyos-Wales).
    long long p = f.characteristic();
    Field rat = Field::rationals();
    for (long long q = 1; q <= n || q == 1; q *= p) {
        int r = basis.cols();
        if (r == 0) break;
        std::vector<Mat> lifts;  // integer-lift rep matrices, entries in [0, p)
        for (int i = 0; i < r; ++i) {
            Coords x(a.dim);
            for (int k = 0; k < a.dim; ++k) x[k] = basis.at(k, i);
            Mat m = rep_of(x);
            Mat lift(rat, n, n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) lift.set(u, v, f.reduce(m.at(u, v)));
            lifts.push_back(std::move(lift));
        }
        // rows: y index, cols: x index; entry (Tr((X Y)^q) / q) mod p
        Mat sys(f, r, r);
        for (int t = 0; t < r; ++t)
            for (int s = 0; s < r; ++s) {
                Scalar tr = trace(mat_pow(lifts[s].mul(lifts[t]), q));
                Scalar g = tr / Scalar(q);
                if (boost::multiprecision::denominator(g) != 1)
                    throw VerifyError("radical: trace form value not divisible as expected");
                sys.set(t, s, f.reduce(g));
            }
        Mat ker = kernel_basis(sys);
        basis = column_space(basis.mul(ker));
    }
    return basis;
}

}  // namespace

Mat radical_basis(const StructAlgebra& a, const std::vector<Mat>* rep_in) {
    if (a.dim == 0) return Mat(a.field, 0, 0);
    std::vector<Mat> rep;
    if (rep_in) {
        rep = *rep_in;
    } else {
        for (int i = 0; i < a.dim; ++i) {
            Coords bi(a.dim, Scalar(0));
            bi[i] = Scalar(1);
            rep.push_back(a.left_mult(bi));
        }
    }
    Mat rad = radical_chain(a, rep);
    // rad must be a nilpotent two-sided ideal with semisimple quotient
    if (!span_is_nilpotent(a, rad)) throw VerifyError("radical: computed span is not nilpotent");
    Mat full = Mat::identity(a.field, a.dim);
    Mat both = subspace_sum(product_span(a, full, rad), product_span(a, rad, full));
    if (both.cols() > 0 && !subspace_contains(rad, both))
        throw VerifyError("radical: computed span is not an ideal");
    StructQuotient q = quotient_struct(a, rad);
    if (q.algebra.dim > 0) {
        std::vector<Mat> qrep;
        for (int i = 0; i < q.algebra.dim; ++i) {
            Coords bi(q.algebra.dim, Scalar(0));
            bi[i] = Scalar(1);
            qrep.push_back(q.algebra.left_mult(bi));
        }
        if (radical_chain(q.algebra, qrep).cols() != 0)
            throw VerifyError("radical: quotient is not semisimple");
    }
    return rad;
}

StructQuotient quotient_struct(const StructAlgebra& a, const Mat& ideal) {
    StructQuotient out;
    Mat idl = column_space(ideal);
    Mat comp = complement_basis(idl);
    int qd = comp.cols();
    Mat square = idl.hstack(comp);  // invertible
    SolveResult inv = solve(square, Mat::identity(a.field, a.dim));
    if (!inv.solution) throw VerifyError("quotient_struct: basis completion failed");
    Mat proj = inv.solution->submatrix(idl.cols(), a.dim, 0, a.dim);  // qd x dim
    out.algebra.field = a.field;
    out.algebra.dim = qd;
    out.algebra.table.assign(qd, std::vector<Coords>(qd));
    auto col_coords = [&](const Mat& m, int j) {
        Coords c(m.rows());
        for (int i = 0; i < m.rows(); ++i) c[i] = m.at(i, j);
        return c;
    };
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j) {
            Coords prod = a.mul(col_coords(comp, i), col_coords(comp, j));
            Mat pv(a.field, a.dim, 1);
            for (int k = 0; k < a.dim; ++k) pv.set(k, 0, prod[k]);
            Mat img = proj.mul(pv);
            Coords c(qd);
            for (int k = 0; k < qd; ++k) c[k] = img.at(k, 0);
            out.algebra.table[i][j] = c;
        }
    Mat uv(a.field, a.dim, 1);
    for (int k = 0; k < a.dim; ++k) uv.set(k, 0, a.unit[k]);
    Mat uimg = proj.mul(uv);
    out.algebra.unit.assign(qd, Scalar(0));
    for (int k = 0; k < qd; ++k) out.algebra.unit[k] = uimg.at(k, 0);
    out.projection = proj;
    out.section = comp;
    return out;
}

namespace {

std::vector<PathWord> quiver_paths(const Quiver& q, int maxlen, int cap = 40000) {
    std::vector<PathWord> out, layer;
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) layer.push_back(PathWord{v, {}});
    out = layer;
    for (int l = 1; l <= maxlen && !layer.empty(); ++l) {
        std::vector<PathWord> next;
        for (const auto& p : layer) {
            int t = p.target(q);
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
                if (q.arrows[a].source == t) {
                    PathWord w = p;
                    w.arrows.push_back(a);
                    next.push_back(std::move(w));
                }
        }
        out.insert(out.end(), next.begin(), next.end());
        if (static_cast<int>(out.size()) > cap)
            throw ResourceError("path budget exceeded in presentation search");
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GabrielResult gabriel_presentation(const StructAlgebra& a) {
    const Field& f = a.field;
    a.verify();
    if (a.idems.empty()) throw MalformedError("gabriel: algebra without idempotent list");
    Mat rad = radical_basis(a);  // left regular representation
    int nv = static_cast<int>(a.idems.size());
    if (a.dim - rad.cols() != nv)
        throw MalformedError("gabriel: algebra is not split basic over its idempotents");
    Mat full = Mat::identity(f, a.dim);
    Mat rad2 = product_span(a, rad, rad);

    auto sandwich = [&](const Mat& xs, int v, int w) {
        // e_w * x * e_v for each column
        std::vector<Coords> out;
        for (int j = 0; j < xs.cols(); ++j) {
            Coords x(a.dim);
            for (int k = 0; k < a.dim; ++k) x[k] = xs.at(k, j);
            out.push_back(a.mul(a.idems[w], a.mul(x, a.idems[v])));
        }
        if (out.empty()) return Mat(f, a.dim, 0);
        return column_space(a.elements_matrix(out));
    };

    AlgebraPresentation pres{f, Quiver{}, {}};
    pres.quiver.vertices = a.idem_labels;
    std::vector<Coords> arrow_elements;
    for (int v = 0; v < nv; ++v)
        for (int w = 0; w < nv; ++w) {
            Mat rvw = sandwich(rad, v, w);
            Mat r2vw = sandwich(rad2, v, w);
            Mat grown = r2vw;
            int k = 0;
            for (int j = 0; j < rvw.cols(); ++j) {
                Mat cand = rvw.submatrix(0, a.dim, j, j + 1);
                if (subspace_contains(grown, cand)) continue;
                grown = subspace_sum(grown, cand);
                std::string name = "a" + std::to_string(pres.quiver.arrows.size()) + "_" +
                                   a.idem_labels[v] + "_" + a.idem_labels[w] + "_" + std::to_string(k++);
                pres.quiver.arrows.push_back(Arrow{name, v, w});
                Coords c(a.dim);
                for (int i = 0; i < a.dim; ++i) c[i] = cand.at(i, 0);
                arrow_elements.push_back(std::move(c));
            }
        }

    auto phi = [&](const PathWord& p) {
        Coords acc = a.idems[p.source];
        for (int arr : p.arrows) acc = a.mul(arrow_elements[arr], acc);
        return acc;
    };

    // nilpotency degree of the radical
    int nildeg = 1;
    {
        Mat layer = rad;
        while (layer.cols() > 0) {
            layer = product_span(a, layer, rad);
            ++nildeg;
            if (nildeg > a.dim + 1) throw VerifyError("gabriel: radical fails to be nilpotent");
        }
    }

    std::vector<PathWord> paths = quiver_paths(pres.quiver, nildeg);
    std::map<PathWord, int> pindex;
    for (size_t i = 0; i < paths.size(); ++i) pindex[paths[i]] = static_cast<int>(i);
    int np = static_cast<int>(paths.size());

    // surjectivity check
    {
        std::vector<Coords> imgs;
        for (const auto& p : paths) imgs.push_back(phi(p));
        if (rank(a.elements_matrix(imgs)) != a.dim)
            throw VerifyError("gabriel: arrows and idempotents fail to generate");
    }

    // kernel generators, degree by degree
    std::vector<std::vector<std::pair<int, Scalar>>> gens;  // sparse path-coefficient vectors
    auto gens_span_upto = [&](int d) {
        // columns: p*g*q for g in gens, total length <= d, over the path index space
        std::vector<std::vector<std::pair<int, Scalar>>> cols;
        for (const auto& g : gens) {
            int glen = 0;
            int gs = -1, gt = -1;
            for (const auto& [pi, c] : g) {
                glen = std::max(glen, paths[pi].length());
                gs = paths[pi].source;
                gt = paths[pi].target(pres.quiver);
            }
            for (const auto& inner : paths) {
                if (inner.target(pres.quiver) != gs) continue;
                for (const auto& outer : paths) {
                    if (outer.source != gt) continue;
                    if (inner.length() + glen + outer.length() > d) continue;
                    std::vector<std::pair<int, Scalar>> col;
                    for (const auto& [pi, c] : g) {
                        PathWord w = concat(pres.quiver, outer, concat(pres.quiver, paths[pi], inner));
                        col.emplace_back(pindex.at(w), c);
                    }
                    cols.push_back(std::move(col));
                }
            }
        }
        return cols;
    };

    for (int d = 2; d <= nildeg; ++d) {
        // per (s, t) block
        for (int s = 0; s < nv; ++s)
            for (int t = 0; t < nv; ++t) {
                std::vector<int> block;  // path indices s -> t, length <= d
                for (int i = 0; i < np; ++i)
                    if (paths[i].source == s && paths[i].length() <= d &&
                        paths[i].target(pres.quiver) == t)
                        block.push_back(i);
                if (block.empty()) continue;
                Mat imgm(f, a.dim, static_cast<int>(block.size()));
                for (int j = 0; j < static_cast<int>(block.size()); ++j) {
                    Coords img = phi(paths[block[j]]);
                    for (int i = 0; i < a.dim; ++i) imgm.set(i, j, img[i]);
                }
                Mat ker = kernel_basis(imgm);
                if (ker.cols() == 0) continue;
                // existing ideal span restricted to this block
                auto icols = gens_span_upto(d);
                std::map<int, int> blockpos;
                for (int j = 0; j < static_cast<int>(block.size()); ++j) blockpos[block[j]] = j;
                std::vector<Coords> ivecs;
                for (const auto& col : icols) {
                    bool in_block = !col.empty();
                    Coords v(block.size(), Scalar(0));
                    for (const auto& [pi, c] : col) {
                        auto it = blockpos.find(pi);
                        if (it == blockpos.end()) { in_block = false; break; }
                        v[it->second] = f.reduce(v[it->second] + c);
                    }
                    if (in_block) ivecs.push_back(std::move(v));
                }
                Mat ispan(f, static_cast<int>(block.size()), static_cast<int>(ivecs.size()));
                for (int j = 0; j < static_cast<int>(ivecs.size()); ++j)
                    for (int i = 0; i < static_cast<int>(block.size()); ++i)
                        ispan.set(i, j, ivecs[j][i]);
                Mat grown = column_space(ispan);
                for (int j = 0; j < ker.cols(); ++j) {
                    Mat cand = ker.submatrix(0, static_cast<int>(block.size()), j, j + 1);
                    if (subspace_contains(grown, cand)) continue;
                    grown = subspace_sum(grown, cand);
                    std::vector<std::pair<int, Scalar>> g;
                    Relation rel;
                    for (int i = 0; i < static_cast<int>(block.size()); ++i) {
                        if (cand.at(i, 0) == 0) continue;
                        if (paths[block[i]].length() < 2)
                            throw VerifyError("gabriel: relation with a short path");
                        g.emplace_back(block[i], cand.at(i, 0));
                        rel.push_back(RelationTerm{cand.at(i, 0), paths[block[i]]});
                    }
                    gens.push_back(std::move(g));
                    pres.relations.push_back(std::move(rel));
                }
            }
    }

    GabrielResult out{pres, realize(pres), Mat(f, 0, 0), Mat(f, 0, 0)};
    const Algebra& r = out.realized;
    if (r.dim() != a.dim)
        throw VerifyError("gabriel: realized presentation has dimension " + std::to_string(r.dim()) +
                          " but algebra has " + std::to_string(a.dim));
    Mat t(f, a.dim, r.dim());
    for (int j = 0; j < r.dim(); ++j) {
        Coords img = phi(r.basis()[j]);
        for (int i = 0; i < a.dim; ++i) t.set(i, j, img[i]);
    }
    if (rank(t) != a.dim) throw VerifyError("gabriel: translation is not bijective");
    // multiplicativity
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) {
            const Coords& prod = r.mul_basis(i, j);
            Mat pv(f, r.dim(), 1);
            for (int k = 0; k < r.dim(); ++k) pv.set(k, 0, prod[k]);
            Mat lhs = t.mul(pv);
            Coords bi(a.dim), bj(a.dim);
            for (int k = 0; k < a.dim; ++k) { bi[k] = t.at(k, i); bj[k] = t.at(k, j); }
            Coords rhs = a.mul(bi, bj);
            for (int k = 0; k < a.dim; ++k)
                if (f.reduce(lhs.at(k, 0)) != f.reduce(rhs[k]))
                    throw VerifyError("gabriel: translation is not multiplicative");
        }
    SolveResult inv = solve(t, Mat::identity(f, a.dim));
    out.to_algebra = t;
    out.from_algebra = *inv.solution;
    return out;
}

CornerResult corner(const Algebra& a, const std::vector<int>& vertices) {
    if (vertices.empty()) throw MalformedError("empty corner");
    std::set<int> vs(vertices.begin(), vertices.end());
    std::vector<int> keep;
    for (int i = 0; i < a.dim(); ++i)
        if (vs.count(a.basis_source(i)) && vs.count(a.basis_target(i))) keep.push_back(i);
    StructAlgebra c;
    c.field = a.field();
    c.dim = static_cast<int>(keep.size());
    c.table.assign(c.dim, std::vector<Coords>(c.dim));
    std::map<int, int> pos;
    for (int i = 0; i < c.dim; ++i) pos[keep[i]] = i;
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j) {
            const Coords& full = a.mul_basis(keep[i], keep[j]);
            Coords cc(c.dim, Scalar(0));
            for (int k = 0; k < a.dim(); ++k) {
                if (full[k] == 0) continue;
                auto it = pos.find(k);
                if (it == pos.end())
                    throw VerifyError("corner: product escapes the corner span");
                cc[it->second] = full[k];
            }
            c.table[i][j] = cc;
        }
    c.unit.assign(c.dim, Scalar(0));
    for (int v : vertices) {
        c.idem_labels.push_back(a.quiver().vertices[v]);
        Coords e(c.dim, Scalar(0));
        e[pos.at(a.vertex_idempotent(v))] = Scalar(1);
        for (int k = 0; k < c.dim; ++k) c.unit[k] = c.field.reduce(c.unit[k] + e[k]);
        c.idems.push_back(std::move(e));
    }
    GabrielResult g = gabriel_presentation(c);
    // corner coords -> parent coords (inclusion)
    Mat incl(a.field(), a.dim(), c.dim);
    for (int j = 0; j < c.dim; ++j) incl.set(keep[j], j, Scalar(1));
    Mat to_parent = incl.mul(g.to_algebra);
    // left inverse: from_parent * to_parent == I
    SolveResult li = solve(to_parent.transpose(), Mat::identity(a.field(), to_parent.cols()));
    if (!li.solution) throw VerifyError("corner: translation has deficient rank");
    return CornerResult{std::move(g.realized), to_parent, li.solution->transpose()};
}

QuotientResult quotient_by_idempotent_ideal(const Algebra& a, const std::vector<int>& vertices) {
    const Field& f = a.field();
    if (vertices.empty()) {
        // zero ideal: the quotient is the algebra itself
        return QuotientResult{a, Mat::identity(f, a.dim()), Mat::identity(f, a.dim())};
    }
    std::vector<Coords> gens;
    for (int v : vertices) {
        Coords e = a.basis_elt(a.vertex_idempotent(v));
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                Coords x = a.mul(a.basis_elt(i), a.mul(e, a.basis_elt(j)));
                bool nz = false;
                for (const auto& s : x)
                    if (s != 0) { nz = true; break; }
                if (nz) gens.push_back(std::move(x));
            }
    }
    StructAlgebra sa = struct_view(a);
    Mat ideal = gens.empty() ? Mat(f, a.dim(), 0) : column_space(sa.elements_matrix(gens));
    if (ideal.cols() == a.dim()) {
        // everything dies: signal the zero algebra explicitly
        AlgebraPresentation zp{f, Quiver{}, {}};
        return QuotientResult{realize(zp), Mat(f, 0, a.dim()), Mat(f, a.dim(), 0)};
    }
    StructQuotient sq = quotient_struct(sa, ideal);
    // idempotents of the quotient: images of the complementary vertex idempotents
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) continue;
        Mat ev(f, a.dim(), 1);
        for (int k = 0; k < a.dim(); ++k) ev.set(k, 0, a.basis_elt(a.vertex_idempotent(v))[k]);
        Mat img = sq.projection.mul(ev);
        if (img.is_zero())
            throw MalformedError("quotient: closed-vertex idempotent dies in A/AeA");
        Coords c(sq.algebra.dim);
        for (int k = 0; k < sq.algebra.dim; ++k) c[k] = img.at(k, 0);
        sq.algebra.idem_labels.push_back(a.quiver().vertices[v]);
        sq.algebra.idems.push_back(std::move(c));
    }
    GabrielResult g = gabriel_presentation(sq.algebra);
    Mat projection = g.from_algebra.mul(sq.projection);
    Mat section = sq.section.mul(g.to_algebra);
    return QuotientResult{std::move(g.realized), projection, section};
}

Algebra opposite(const Algebra& a) {
    AlgebraPresentation p = a.presentation();
    for (auto& arr : p.quiver.arrows) std::swap(arr.source, arr.target);
    for (auto& rel : p.relations)
        for (auto& term : rel) {
            // reversed word starts at the old target (taken from the original quiver)
            PathWord w = term.path;
            w.source = term.path.target(a.quiver());
            std::reverse(w.arrows.begin(), w.arrows.end());
            term.path = w;
        }
    return realize(p);
}

bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Mat& t) {
    if (a.dim() != b.dim() || t.rows() != b.dim() || t.cols() != a.dim()) return false;
    if (rank(t) != a.dim()) return false;
    const Field& f = a.field();
    auto apply = [&](const Coords& x) {
        Coords r(b.dim(), Scalar(0));
        for (int i = 0; i < b.dim(); ++i) {
            Scalar s(0);
            for (int j = 0; j < a.dim(); ++j) s += t.at(i, j) * x[j];
            r[i] = f.reduce(s);
        }
        return r;
    };
    if (apply(a.unit()) != b.unit()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Coords lhs = apply(a.mul_basis(i, j));
            Coords rhs = b.mul(apply(a.basis_elt(i)), apply(a.basis_elt(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace strataforge
