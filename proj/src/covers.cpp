#include "strataforge/covers.hpp"

#include <algorithm>

namespace strataforge {

CoverCertificate certify_cover(const Module& p, int simple_vertex, int stratum) {
    AlgebraPtr alg = p.alg;
    if (simple_vertex < 0 || simple_vertex >= alg->num_vertices())
        throw MalformedError("certify_cover: vertex out of range");
    CoverCertificate c{simple_vertex, stratum, p, zero_morphism(p, p), {}, {}};
    std::vector<ModuleMorphism> to_simple;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        std::vector<ModuleMorphism> h = hom_basis(p, simple_module(alg, v));
        if (v == simple_vertex) to_simple = h;
        c.hom_row.push_back(static_cast<int>(h.size()));
    }
    Resolution res = resolve2(p);
    for (int v = 0; v < alg->num_vertices(); ++v)
        c.ext_row.push_back(ext1(res, simple_module(alg, v)).dim());
    if (to_simple.size() != 1)
        throw VerifyError("certify_cover: Hom(P, S) is not one-dimensional at vertex " +
                          std::to_string(simple_vertex));
    c.epi = to_simple[0];
    verify_certificate(c);
    return c;
}

void verify_certificate(const CoverCertificate& c) {
    const Module& p = c.cover;
    AlgebraPtr alg = p.alg;
    int nv = alg->num_vertices();
    if (static_cast<int>(c.hom_row.size()) != nv || static_cast<int>(c.ext_row.size()) != nv)
        throw VerifyError("certificate tables have the wrong length");
    for (int v = 0; v < nv; ++v) {
        int want = v == c.simple_vertex ? 1 : 0;
        if (c.hom_row[v] != want)
            throw VerifyError("certificate Hom row is not the indicator of vertex " +
                              std::to_string(c.simple_vertex));
        if (c.ext_row[v] != 0)
            throw VerifyError("certificate Ext row is nonzero at vertex " + std::to_string(v));
    }
    c.epi.verify();
    if (c.epi.cod.dims != simple_module(alg, c.simple_vertex).dims)
        throw VerifyError("certificate epi does not land in the claimed simple");
    if (!c.epi.is_surjective()) throw VerifyError("certificate epi is not surjective");
}

CoverCertificate transport_cover(const RecollementDatum& r, TransportCase tc,
                                 const CoverCertificate& cert, int stratum) {
    switch (tc) {
        case TransportCase::OpenExtend: {
            if (!r.has_open()) throw MalformedError("transport: recollement has no open part");
            if (cert.cover.alg != r.open_algebra)
                throw MalformedError("transport open-extend wants a corner-algebra cover");
            int v = r.open_vertices[cert.simple_vertex];
            return certify_cover(j_lower_shriek(r, cert.cover), v, stratum);
        }
        case TransportCase::OpenRestrict: {
            if (cert.cover.alg != r.lambda)
                throw MalformedError("transport open-restrict wants a glued cover");
            int v = r.open_index_of[cert.simple_vertex];
            if (v < 0) throw MalformedError("transport open-restrict: vertex is not open");
            return certify_cover(j_upper_star(r, cert.cover), v, stratum);
        }
        case TransportCase::ClosedRestrict: {
            if (cert.cover.alg != r.lambda)
                throw MalformedError("transport closed-restrict wants a glued cover");
            int v = r.closed_index_of[cert.simple_vertex];
            if (v < 0) throw MalformedError("transport closed-restrict: vertex is not closed");
            return certify_cover(i_upper_star(r, cert.cover), v, stratum);
        }
    }
    throw MalformedError("transport: unknown case");
}

Module build_B(const GlueLevel& g, int closed_vertex) {
    int ci = g.r.closed_index_of[closed_vertex];
    if (ci < 0) throw MalformedError("build_B: vertex is not in the closed stratum");
    return i_lower_star(g.r, projective_module(g.r.closed_algebra, ci));
}

AssembledP assemble_P(const GlueLevel& g, const Module& b) {
    AlgebraPtr lam = g.sa.algebra;
    Resolution res = resolve2(b);
    AssembledP out{zero_module(lam), {}};
    std::vector<Module> parts;
    for (int m : g.open_lambda) {
        int d = ext1(res, simple_module(lam, m)).dim();
        out.ext_dims.push_back(d);
        auto it = g.open_covers.find(m);
        if (it == g.open_covers.end())
            throw MalformedError("assemble_P: no cover recorded for open vertex " +
                                 std::to_string(m));
        for (int k = 0; k < d; ++k) parts.push_back(it->second.cover);
    }
    if (!parts.empty()) out.p = direct_sum(lam, parts).module;
    return out;
}

QSearch find_Q_epsilon(const GlueLevel& g, const Module& p, const Module& b,
                       const std::vector<int>& ext_dims) {
    AlgebraPtr lam = g.sa.algebra;
    const Field& f = lam->field();
    if (!f.is_prime_field())
        throw UnsupportedError("the quotient search requires a finite prime field");
    long long prime = f.characteristic();

    Resolution res = resolve2(b);
    std::vector<Module> simples;
    std::vector<ExtSpace> ext_b;  // Ext^1(B, S_N) per open simple
    for (size_t n = 0; n < g.open_lambda.size(); ++n) {
        simples.push_back(simple_module(lam, g.open_lambda[n]));
        ext_b.push_back(ext1(res, simples.back()));
        if (ext_b.back().dim() != ext_dims[n])
            throw VerifyError("assembled Ext dimensions disagree with the resolution");
    }

    std::vector<QuotientModuleResult> quotients = all_quotients(p, g.budget);
    long long steps = 0;
    auto tick = [&]() {
        if (++steps > g.budget) throw ResourceError("budget exceeded searching for (Q, epsilon)");
    };

    std::optional<QSearch> chosen;
    std::vector<int> passing;
    for (QuotientModuleResult& q : quotients) {
        tick();
        // dimension pre-filter: Hom(Q, S_N) must already have the right size
        std::vector<std::vector<ModuleMorphism>> homs;
        bool ok = true;
        for (size_t n = 0; n < simples.size(); ++n) {
            homs.push_back(hom_basis(q.module, simples[n]));
            if (static_cast<int>(homs.back().size()) != ext_dims[n]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        ExtSpace eq = ext1(res, q.module);
        int d = eq.dim();
        std::vector<long long> digits(d, 0);
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= prime;
        for (long long it = 0; it < count; ++it) {
            tick();
            ModuleMorphism eps = zero_morphism(res.omega1.module, q.module);
            for (int i = 0; i < d; ++i)
                if (digits[i] != 0) eps = eps.add(eq.cocycle(i).scale(Scalar(digits[i])));
            bool iso = true;
            for (size_t n = 0; n < simples.size() && iso; ++n) {
                int h = ext_dims[n];
                Mat cls(f, h, h);
                for (int j = 0; j < h; ++j) {
                    Mat col = ext_b[n].class_of(homs[n][j].compose(eps));
                    for (int i = 0; i < h; ++i) cls.set(i, j, col.at(i, 0));
                }
                if (rref(cls).rank != h) iso = false;
            }
            if (iso) {
                passing.push_back(q.module.total());
                if (!chosen)
                    chosen = QSearch{res, q, eps, {}};
                break;  // one witness per quotient is enough for the record
            }
            int pos = 0;
            while (pos < d && ++digits[pos] == prime) digits[pos++] = 0;
        }
    }
    if (!chosen) throw VerifyError("no quotient of P admits a valid (Q, epsilon) pair");
    std::sort(passing.rbegin(), passing.rend());
    chosen->passing_lengths = passing;
    return *chosen;
}

CoverCertificate extend_to_cover(const GlueLevel& g, const QSearch& s, int closed_vertex) {
    Extension ext = realize_extension(s.res_b, s.q.module, s.epsilon);
    return certify_cover(ext.e, closed_vertex, 0);
}

bool check_Q_recovered(const GlueLevel& g, const QSearch& s, const CoverCertificate& cert) {
    Module jq = j_lower_shriek(g.r, j_upper_star(g.r, cert.cover));
    return modules_isomorphic(s.q.module, jq).isomorphic;
}

CoversResult construct_all_covers(const StratifiedAlgebra& sa, long long budget) {
    sa.validate();
    AlgebraPtr lam = sa.algebra;
    if (!lam->field().is_prime_field())
        throw UnsupportedError("cover construction requires a finite prime field");

    CoversResult out;
    if (sa.strata.size() <= 1) {
        // single stratum: the direct projective covers, still certified
        for (int v = 0; v < lam->num_vertices(); ++v)
            out.covers.emplace(v, certify_cover(projective_module(lam, v), v, 0));
        return out;
    }

    std::vector<int> open = sa.open_vertices_after(1);
    RecollementDatum r = make_recollement(lam, open);

    StratifiedAlgebra corner_sa{r.open_algebra, {}};
    for (size_t k = 1; k < sa.strata.size(); ++k) {
        std::vector<int> stratum;
        for (int v : sa.strata[k]) stratum.push_back(r.open_index_of[v]);
        corner_sa.strata.push_back(std::move(stratum));
    }
    CoversResult sub = construct_all_covers(corner_sa, budget);

    GlueLevel g{sa, r, open, {}, budget};
    for (const auto& [cv, cert] : sub.covers) {
        CoverCertificate t = transport_cover(r, TransportCase::OpenExtend, cert,
                                             cert.stratum + 1);
        g.open_covers.emplace(t.simple_vertex, t);
        out.covers.emplace(t.simple_vertex, std::move(t));
    }
    for (CoverOutcome o : sub.outcomes) {
        o.lambda_vertex = r.open_vertices[o.lambda_vertex];
        out.outcomes.push_back(std::move(o));
    }

    for (int closed_vertex : sa.strata[0]) {
        Module b = build_B(g, closed_vertex);
        AssembledP ap = assemble_P(g, b);
        QSearch s = find_Q_epsilon(g, ap.p, b, ap.ext_dims);
        CoverCertificate cert = extend_to_cover(g, s, closed_vertex);
        CoverOutcome o;
        o.lambda_vertex = closed_vertex;
        o.passing_lengths = s.passing_lengths;
        o.q_length = s.q.module.total();
        o.q_recovered = check_Q_recovered(g, s, cert);
        o.unique_maximal =
            s.passing_lengths.size() < 2 || s.passing_lengths[0] > s.passing_lengths[1];
        out.outcomes.push_back(std::move(o));
        out.covers.emplace(closed_vertex, std::move(cert));
    }
    std::sort(out.outcomes.begin(), out.outcomes.end(),
              [](const CoverOutcome& a, const CoverOutcome& b) {
                  return a.lambda_vertex < b.lambda_vertex;
              });
    return out;
}

}  // namespace strataforge
