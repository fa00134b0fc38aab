#include "strataforge/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace strataforge {

Coords Algebra::unit() const {
    Coords u = zero_elt();
    for (int v = 0; v < num_vertices(); ++v) u[idem_[v]] = Scalar(1);
    return u;
}

Coords Algebra::basis_elt(int i) const {
    Coords c = zero_elt();
    c[i] = Scalar(1);
    return c;
}

Coords Algebra::mul(const Coords& a, const Coords& b) const {
    Coords r = zero_elt();
    const Field& f = field();
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            const Coords& t = table_[i][j];
            for (int k = 0; k < dim(); ++k)
                if (t[k] != 0) r[k] = f.reduce(r[k] + a[i] * b[j] * t[k]);
        }
    }
    return r;
}

bool Algebra::structurally_equal(const Algebra& o) const {
    return pres_.field == o.pres_.field && pres_.quiver.vertices == o.pres_.quiver.vertices &&
           basis_ == o.basis_ && table_ == o.table_;
}

std::string Algebra::describe_elt(const Coords& c) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << field().to_string(c[i]) << "*" << basis_[i].to_string(quiver());
    }
    if (first) os << "0";
    return os.str();
}

void Algebra::verify_associative() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                Coords lhs = mul(table_[i][j], basis_elt(k));
                Coords rhs = mul(basis_elt(i), table_[j][k]);
                for (int t = 0; t < dim(); ++t)
                    if (field().reduce(lhs[t]) != field().reduce(rhs[t]))
                        throw VerifyError("structure constants not associative at basis triple (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
            }
}

void Algebra::verify_radical_nilpotent() const {
    // radical = span of positive-length residues
    std::vector<Coords> layer;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].length() > 0) layer.push_back(basis_elt(i));
    std::vector<Coords> rad = layer;
    if (layer.empty()) return;
    for (int step = 0; step <= dim() + 1; ++step) {
        std::vector<Coords> next;
        for (const auto& x : layer)
            for (const auto& r : rad) {
                Coords p = mul(x, r);
                bool nz = false;
                for (const auto& s : p)
                    if (s != 0) { nz = true; break; }
                if (nz) next.push_back(p);
            }
        if (next.empty()) return;
        // prune to a basis to keep layers small
        Mat m(field(), dim(), static_cast<int>(next.size()));
        for (int j = 0; j < static_cast<int>(next.size()); ++j)
            for (int i = 0; i < dim(); ++i) m.set(i, j, next[j][i]);
        Mat cs = column_space(m);
        layer.clear();
        for (int j = 0; j < cs.cols(); ++j) {
            Coords c(dim());
            for (int i = 0; i < dim(); ++i) c[i] = cs.at(i, j);
            layer.push_back(std::move(c));
        }
    }
    throw MalformedError("infinite-dimensional algebra: arrow ideal is not nilpotent");
}

namespace {

std::vector<PathWord> enumerate_paths(const Quiver& q, int maxlen, int cap) {
    std::vector<PathWord> out;
    std::vector<PathWord> layer;
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
        layer.push_back(PathWord{v, {}});
    out = layer;
    for (int l = 1; l <= maxlen && !layer.empty(); ++l) {
        std::vector<PathWord> next;
        for (const auto& p : layer) {
            int t = p.target(q);
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                if (q.arrows[a].source != t) continue;
                PathWord w = p;
                w.arrows.push_back(a);
                next.push_back(std::move(w));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        if (static_cast<int>(out.size()) > cap)
            throw ResourceError("path enumeration budget exceeded while realizing algebra");
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Algebra realize(const AlgebraPresentation& pres, int max_degree, int max_paths) {
    pres.validate();
    const Quiver& q = pres.quiver;
    const Field& f = pres.field;

    Algebra alg;
    alg.pres_ = pres;
    if (q.vertices.empty()) return alg;  // the zero algebra

    int max_rel_len = 0;
    for (const auto& rel : pres.relations)
        for (const auto& t : rel) max_rel_len = std::max(max_rel_len, t.path.length());

    std::set<PathWord> prev_alive;
    bool have_prev = false;

    for (int D = 2; D <= max_degree; ++D) {
        std::vector<PathWord> paths = enumerate_paths(q, D, max_paths);
        std::map<PathWord, int> index;
        for (size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);
        int n = static_cast<int>(paths.size());
        auto desc = [&](int asc) { return n - 1 - asc; };

        // ideal generators p * r * q with every term of length <= D
        std::vector<std::vector<std::pair<int, Scalar>>> gens;
        for (const auto& rel : pres.relations) {
            int rs = rel.front().path.source;
            int rt = rel.front().path.target(q);
            int rlen = 0;
            for (const auto& t : rel) rlen = std::max(rlen, t.path.length());
            for (const auto& inner : paths) {
                if (inner.target(q) != rs) continue;
                for (const auto& outer : paths) {
                    if (outer.source != rt) continue;
                    if (inner.length() + rlen + outer.length() > D) continue;
                    std::vector<std::pair<int, Scalar>> g;
                    for (const auto& t : rel) {
                        PathWord w = concat(q, outer, concat(q, t.path, inner));
                        g.emplace_back(desc(index.at(w)), t.coeff);
                    }
                    gens.push_back(std::move(g));
                }
            }
        }

        Mat m(f, static_cast<int>(gens.size()), n);
        for (int r = 0; r < static_cast<int>(gens.size()); ++r)
            for (const auto& [c, v] : gens[r]) m.set(r, c, m.at(r, c) + v);
        RrefResult rr = rref(m);

        std::vector<bool> dead(n, false);
        for (int c : rr.pivot_cols) dead[n - 1 - c] = true;  // back to ascending index

        std::set<PathWord> alive;
        int lmax = 0;
        for (int i = 0; i < n; ++i)
            if (!dead[i]) {
                alive.insert(paths[i]);
                lmax = std::max(lmax, paths[i].length());
            }

        bool top_layer_alive = lmax == D;
        int d_needed = std::max(2 * lmax + max_rel_len + 1, 2);
        bool stable = have_prev && alive == prev_alive;
        prev_alive = alive;
        have_prev = true;
        if (top_layer_alive || D < d_needed || !stable) {
            if (D == max_degree)
                throw MalformedError(top_layer_alive
                                         ? "infinite-dimensional algebra: arrow ideal is not "
                                           "nilpotent modulo the relations"
                                         : "realize: basis failed to stabilize within degree bound");
            continue;
        }

        // Accepted.  Build the basis and the normal-form table.
        alg.basis_.assign(alive.begin(), alive.end());  // set order == deglex ascending
        int dim = static_cast<int>(alg.basis_.size());
        std::map<PathWord, int> bindex;
        for (int i = 0; i < dim; ++i) bindex[alg.basis_[i]] = i;

        // expansion of every dead path over the alive basis
        std::map<int, Coords> dead_nf;  // key: ascending path index
        for (int pr = 0; pr < rr.rank; ++pr) {
            int pivot_asc = n - 1 - rr.pivot_cols[pr];
            Coords nf(dim, Scalar(0));
            for (int c = 0; c < n; ++c) {
                if (c == rr.pivot_cols[pr]) continue;
                const Scalar& v = rr.echelon.at(pr, c);
                if (v == 0) continue;
                int asc = n - 1 - c;
                auto it = bindex.find(paths[asc]);
                if (it == bindex.end())
                    throw VerifyError("realize: reduction escapes the accepted basis");
                nf[it->second] = f.neg(v);
            }
            dead_nf[pivot_asc] = std::move(nf);
        }

        auto normal_form = [&](const PathWord& w) -> Coords {
            Coords r(dim, Scalar(0));
            auto it = index.find(w);
            if (it == index.end()) throw VerifyError("realize: product path beyond reduction degree");
            auto bi = bindex.find(w);
            if (bi != bindex.end()) {
                r[bi->second] = Scalar(1);
                return r;
            }
            auto di = dead_nf.find(it->second);
            if (di == dead_nf.end()) throw VerifyError("realize: dead path without reduction row");
            return di->second;
        };

        alg.src_.resize(dim);
        alg.tgt_.resize(dim);
        alg.idem_.assign(q.vertices.size(), -1);
        for (int i = 0; i < dim; ++i) {
            alg.src_[i] = alg.basis_[i].source;
            alg.tgt_[i] = alg.basis_[i].target(q);
            if (alg.basis_[i].length() == 0) alg.idem_[alg.basis_[i].source] = i;
        }
        for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
            if (alg.idem_[v] < 0)
                throw MalformedError("malformed relation: vertex idempotent lies in the ideal");
        alg.arrow_basis_.assign(q.arrows.size(), -1);
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
            PathWord w{q.arrows[a].source, {a}};
            auto it = bindex.find(w);
            if (it == bindex.end())
                throw VerifyError("realize: arrow residue missing from basis");
            alg.arrow_basis_[a] = it->second;
        }

        alg.table_.assign(dim, std::vector<Coords>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (alg.src_[i] != alg.tgt_[j]) {
                    alg.table_[i][j] = Coords(dim, Scalar(0));
                    continue;
                }
                alg.table_[i][j] = normal_form(concat(q, alg.basis_[i], alg.basis_[j]));
            }

        // relations act as zero
        for (const auto& rel : pres.relations) {
            Coords acc(dim, Scalar(0));
            for (const auto& t : rel) {
                Coords nf = normal_form(t.path);
                for (int i = 0; i < dim; ++i) acc[i] = f.reduce(acc[i] + t.coeff * nf[i]);
            }
            for (const auto& s : acc)
                if (s != 0) throw VerifyError("realize: relation does not vanish in the quotient");
        }

        alg.verify_associative();
        alg.verify_radical_nilpotent();
        return alg;
    }
    throw MalformedError("realize: degree bound reached");
}

void StratifiedAlgebra::validate() const {
    if (!algebra) throw MalformedError("stratified algebra without algebra");
    int nv = algebra->num_vertices();
    std::vector<int> seen(nv, 0);
    for (const auto& s : strata) {
        if (s.empty()) throw MalformedError("empty stratum");
        for (int v : s) {
            if (v < 0 || v >= nv) throw MalformedError("stratum vertex out of range");
            if (seen[v]++) throw MalformedError("vertex listed in two strata");
        }
    }
    for (int v = 0; v < nv; ++v)
        if (!seen[v]) throw MalformedError("vertex '" + algebra->quiver().vertices[v] +
                                           "' missing from the stratification");
}

std::vector<int> StratifiedAlgebra::open_vertices_after(int k) const {
    std::vector<int> out;
    for (size_t i = k; i < strata.size(); ++i)
        out.insert(out.end(), strata[i].begin(), strata[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strataforge
