// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "strataforge/cli.hpp"

using namespace strataforge;

namespace {

const std::array<const char*, 5> kCorpus = {"F1_field.json", "F2_a2.json", "F3_cp1.json",
                                            "F4_loop.json", "F5_chain.json"};

std::string fixture_path(const std::string& name) {
    return std::string(SF_FIXTURE_DIR) + "/" + name;
}

StratifiedAlgebra over_prime(const Fixture& fx, long long p) {
    AlgebraPresentation pres = fx.presentation;
    pres.field = Field::prime(p);
    for (auto& rel : pres.relations)
        for (auto& t : rel) t.coeff = pres.field.reduce(t.coeff);
    StratifiedAlgebra sa{std::make_shared<Algebra>(realize(pres)), fx.stratified.strata};
    sa.validate();
    return sa;
}

struct Corpus {
    std::vector<Fixture> fixtures;                       // F1..F5
    std::map<std::pair<int, long long>, StratifiedAlgebra> algebras;
    std::map<std::pair<int, long long>, CoversResult> covers;

    const StratifiedAlgebra& at(int i, long long p) {
        auto key = std::make_pair(i, p);
        auto it = algebras.find(key);
        if (it == algebras.end()) it = algebras.emplace(key, over_prime(fixtures[i], p)).first;
        return it->second;
    }
    const CoversResult& covers_of(int i, long long p) {
        auto key = std::make_pair(i, p);
        auto it = covers.find(key);
        if (it == covers.end()) it = covers.emplace(key, construct_all_covers(at(i, p))).first;
        return it->second;
    }
};

Corpus corpus;

bool expect(bool ok, const std::string& what, std::string& note) {
    if (!ok && note.empty()) note = what;
    return ok;
}

// ---- criterion 1: covers agree with the directly computed projectives ----

bool criterion1(std::string& note) {
    bool ok = true;
    for (int i = 0; i < (int)kCorpus.size(); ++i)
        for (long long p : {2LL, 3LL, 5LL}) {
            const StratifiedAlgebra& sa = corpus.at(i, p);
            const CoversResult& res = corpus.covers_of(i, p);
            for (int v = 0; v < sa.algebra->num_vertices(); ++v) {
                const CoverCertificate& c = res.covers.at(v);
                Module direct = projective_module(sa.algebra, v);
                ok &= expect(modules_isomorphic(c.cover, direct).isomorphic,
                             corpus.fixtures[i].name + " p=" + std::to_string(p) +
                                 " vertex " + std::to_string(v) + ": cover != P(v)",
                             note);
                ok &= expect(c.epi.is_surjective(), "cover epi not surjective", note);
            }
        }
    return ok;
}

// ---- criterion 2: certificate tables ----

bool criterion2(std::string& note) {
    bool ok = true;
    for (int i = 0; i < (int)kCorpus.size(); ++i)
        for (long long p : {2LL, 3LL, 5LL}) {
            const StratifiedAlgebra& sa = corpus.at(i, p);
            for (const auto& [v, c] : corpus.covers_of(i, p).covers) {
                for (int w = 0; w < sa.algebra->num_vertices(); ++w) {
                    ok &= expect(c.hom_row[w] == (w == v ? 1 : 0), "Hom row is not the indicator",
                                 note);
                    ok &= expect(c.ext_row[w] == 0, "Ext^1 row is not zero", note);
                }
                // and the tables are honest: recompute from scratch
                Module s = simple_module(sa.algebra, v);
                ok &= expect((int)hom_basis(c.cover, s).size() == 1, "recomputed Hom mismatch",
                             note);
                Resolution r = resolve2(c.cover);
                for (int w = 0; w < sa.algebra->num_vertices(); ++w)
                    ok &= expect(ext1(r, simple_module(sa.algebra, w)).dim() == 0,
                                 "recomputed Ext^1 nonzero", note);
            }
        }
    return ok;
}

// ---- criterion 3: Q = j_! j^* P_L and uniqueness of the maximum ----

bool criterion3(std::string& note) {
    bool ok = true;
    for (int i = 0; i < (int)kCorpus.size(); ++i)
        for (long long p : {2LL, 3LL, 5LL})
            for (const CoverOutcome& oc : corpus.covers_of(i, p).outcomes) {
                ok &= expect(oc.q_recovered, corpus.fixtures[i].name + ": Q != j_! j^* P_L", note);
                ok &= expect(oc.unique_maximal,
                             corpus.fixtures[i].name + ": maximal passing quotient not unique",
                             note);
                ok &= expect(oc.passing_lengths.empty() || oc.passing_lengths[0] == oc.q_length,
                             "selected Q is not of maximal passing length", note);
            }
    return ok;
}

// ---- criterion 4: the CP^1 model ----

bool criterion4(std::string& note) {
    Fixture fx = load_fixture(fixture_path("F3_cp1.json"));
    CoversResult res = construct_all_covers(fx.stratified);
    int o = 0, c = 1;  // vertex order in the fixture
    bool ok = expect(res.outcomes.size() == 1, "expected one glue level", note);
    if (!ok) return false;
    const CoverOutcome& oc = res.outcomes[0];
    ok &= expect(oc.lambda_vertex == c, "outcome is not about the closed simple", note);
    ok &= expect(oc.passing_lengths == std::vector<int>{2, 1}, "passing lengths != {2, 1}", note);
    ok &= expect(oc.q_length == 2, "selected Q does not have length 2", note);
    const Module& cover = res.covers.at(c).cover;
    ok &= expect(composition_length(cover) == 3, "cover of the closed simple has length != 3",
                 note);
    std::vector<int> factors = composition_factors(cover);
    ok &= expect(factors[c] == 2 && factors[o] == 1,
                 "composition factors are not {closed, open, closed}", note);
    return ok;
}

// ---- criterion 5: the degenerate case P = 0, Q = 0, P_L = B_L ----

bool criterion5(std::string& note) {
    Fixture fx = load_fixture(fixture_path("F6_degenerate.json"));
    const StratifiedAlgebra& sa = fx.stratified;
    RecollementDatum r = make_recollement(sa.algebra, sa.open_vertices_after(1));
    GlueLevel g{sa, r, r.open_vertices, {}, 1 << 20};
    int open_v = r.open_vertices[0];
    g.open_covers.emplace(open_v, certify_cover(projective_module(sa.algebra, open_v), open_v, 1));
    int closed_v = r.closed_vertices[0];
    Module b = build_B(g, closed_v);
    AssembledP ap = assemble_P(g, b);
    bool ok = expect(ap.p.total() == 0, "P is not the zero module", note);
    QSearch s = find_Q_epsilon(g, ap.p, b, ap.ext_dims);
    ok &= expect(s.q.module.total() == 0, "Q is not the zero module", note);
    ok &= expect(s.epsilon.is_zero(), "epsilon is not zero", note);
    CoverCertificate cert = extend_to_cover(g, s, closed_v);
    ok &= expect(modules_isomorphic(cert.cover, b).isomorphic, "P_L != B_L", note);
    return ok;
}

// ---- criterion 6: recollement identities on random modules ----

Module random_module(AlgebraPtr a, std::mt19937& rng) {
    int nv = a->num_vertices();
    std::vector<Module> tgt;
    int nt = 1 + (int)(rng() % 2);
    for (int i = 0; i < nt; ++i) tgt.push_back(projective_module(a, (int)(rng() % nv)));
    DirectSumResult big = direct_sum(a, tgt);
    Module src = projective_module(a, (int)(rng() % nv));
    std::vector<ModuleMorphism> hb = hom_basis(src, big.module);
    ModuleMorphism f = zero_morphism(src, big.module);
    for (const ModuleMorphism& h : hb) {
        long long c = rng() % 3;
        if (c != 0) f = f.add(h.scale(a->field().reduce(Scalar(c))));
    }
    return cokernel(f).module;
}

bool criterion6(std::string& note) {
    bool ok = true;
    std::mt19937 rng(20260823);
    for (int i = 0; i < (int)kCorpus.size(); ++i) {
        const StratifiedAlgebra& sa = corpus.fixtures[i].stratified;
        if (sa.strata.size() < 2) continue;
        RecollementDatum r = make_recollement(sa.algebra, sa.open_vertices_after(1));
        for (int trial = 0; trial < 100 && ok; ++trial) {
            Module m = random_module(sa.algebra, rng);
            Module n = random_module(r.open_algebra, rng);
            Module c = random_module(r.closed_algebra, rng);

            ok &= expect(modules_isomorphic(j_upper_star(r, j_lower_shriek(r, n)), n).isomorphic,
                         "j^* j_! != id", note);
            ok &= expect(modules_isomorphic(j_upper_star(r, j_lower_star(r, n)), n).isomorphic,
                         "j^* j_* != id", note);
            Module ic = i_lower_star(r, c);
            ok &= expect(modules_isomorphic(i_upper_star(r, ic), c).isomorphic, "i^* i_* != id",
                         note);
            ok &= expect(modules_isomorphic(i_upper_shriek(r, ic).closed_module, c).isomorphic,
                         "i^! i_* != id", note);
            ok &= expect(j_upper_star(r, ic).total() == 0, "j^* i_* != 0", note);

            ok &= expect(hom_basis(j_lower_shriek(r, n), m).size() ==
                             hom_basis(n, j_upper_star(r, m)).size(),
                         "adjunction (j_!, j^*) dims differ", note);
            ok &= expect(hom_basis(m, j_lower_star(r, n)).size() ==
                             hom_basis(j_upper_star(r, m), n).size(),
                         "adjunction (j^*, j_*) dims differ", note);
            ok &= expect(hom_basis(i_upper_star(r, m), c).size() == hom_basis(m, ic).size(),
                         "adjunction (i^*, i_*) dims differ", note);
            ok &= expect(hom_basis(ic, m).size() ==
                             hom_basis(c, i_upper_shriek(r, m).closed_module).size(),
                         "adjunction (i_*, i^!) dims differ", note);
        }
    }
    return ok;
}

// ---- criterion 7: recovery of the algebra from End(sum of covers) ----

bool criterion7(std::string& note) {
    bool ok = true;
    for (int i = 0; i < (int)kCorpus.size(); ++i) {
        const Fixture& fx = corpus.fixtures[i];
        long long p = fx.presentation.field.characteristic();
        const StratifiedAlgebra& sa = corpus.at(i, p);
        RecoveryResult rec = recover_algebra(sa.algebra, corpus.covers_of(i, p).covers);
        ok &= expect(rec.gabriel.realized.dim() == sa.algebra->dim(),
                     fx.name + ": recovered dimension differs", note);
        ok &= expect(is_algebra_isomorphism(rec.gabriel.realized, *sa.algebra, rec.iso_to_lambda),
                     fx.name + ": iso_to_lambda is not an isomorphism", note);
    }
    return ok;
}

// ---- criterion 8: Ext^1 counts vs exhaustive middle-term enumeration ----

// all modules over F_2 with the given dimension vector (brute-force arrow maps
// checked against the relations)
std::vector<Module> all_modules_f2(AlgebraPtr a, const std::vector<int>& dims) {
    const Quiver& q = a->quiver();
    std::vector<std::pair<int, int>> shapes;  // rows x cols per arrow
    int total_entries = 0;
    for (const Arrow& ar : q.arrows) {
        shapes.push_back({dims[ar.target], dims[ar.source]});
        total_entries += dims[ar.target] * dims[ar.source];
    }
    std::vector<Module> out;
    for (long long mask = 0; mask < (1LL << total_entries); ++mask) {
        Module m{a, dims, {}};
        long long rest = mask;
        for (auto [r, c] : shapes) {
            Mat map(a->field(), r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    map.set(i, j, Scalar(rest & 1));
                    rest >>= 1;
                }
            m.arrow_maps.push_back(map);
        }
        bool valid = true;
        for (const auto& rel : a->presentation().relations) {
            Mat act(a->field(), m.total(), m.total());
            for (const RelationTerm& t : rel)
                act = act.add(m.path_action(t.path).scale(t.coeff));
            if (!act.is_zero()) { valid = false; break; }
        }
        if (valid) out.push_back(std::move(m));
    }
    return out;
}

// |Z| for extensions of b by n: number of off-diagonal block tuples making
// N (+) B a module, by exhaustive enumeration over F_2
long long count_extension_matrices(const Module& b, const Module& n) {
    AlgebraPtr a = b.alg;
    const Quiver& q = a->quiver();
    int total_entries = 0;
    for (const Arrow& ar : q.arrows) total_entries += n.dims[ar.target] * b.dims[ar.source];
    std::vector<int> dims(b.dims.size());
    for (size_t v = 0; v < dims.size(); ++v) dims[v] = n.dims[v] + b.dims[v];
    long long count = 0;
    for (long long mask = 0; mask < (1LL << total_entries); ++mask) {
        Module e{a, dims, {}};
        long long rest = mask;
        for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
            const Arrow& ar = q.arrows[ai];
            Mat map(a->field(), dims[ar.target], dims[ar.source]);
            for (int i = 0; i < n.dims[ar.target]; ++i)
                for (int j = 0; j < n.dims[ar.source]; ++j)
                    map.set(i, j, n.arrow_maps[ai].at(i, j));
            for (int i = 0; i < b.dims[ar.target]; ++i)
                for (int j = 0; j < b.dims[ar.source]; ++j)
                    map.set(n.dims[ar.target] + i, n.dims[ar.source] + j,
                            b.arrow_maps[ai].at(i, j));
            for (int i = 0; i < n.dims[ar.target]; ++i)
                for (int j = 0; j < b.dims[ar.source]; ++j) {
                    map.set(i, n.dims[ar.source] + j, Scalar(rest & 1));
                    rest >>= 1;
                }
            e.arrow_maps.push_back(map);
        }
        bool valid = true;
        for (const auto& rel : a->presentation().relations) {
            Mat act(a->field(), e.total(), e.total());
            for (const RelationTerm& t : rel)
                act = act.add(e.path_action(t.path).scale(t.coeff));
            if (!act.is_zero()) { valid = false; break; }
        }
        if (valid) ++count;
    }
    return count;
}

bool criterion8(std::string& note) {
    bool ok = true;
    for (int i = 0; i < (int)kCorpus.size(); ++i) {
        AlgebraPtr a = corpus.at(i, 2).algebra;
        int nv = a->num_vertices();
        // all dimension vectors with total 1 or 2
        std::vector<std::vector<int>> dvecs;
        for (int v = 0; v < nv; ++v) {
            std::vector<int> d(nv, 0);
            d[v] = 1;
            dvecs.push_back(d);
            d[v] = 2;
            dvecs.push_back(d);
            for (int w = v + 1; w < nv; ++w) {
                std::vector<int> e(nv, 0);
                e[v] = e[w] = 1;
                dvecs.push_back(e);
            }
        }
        std::vector<Module> mods;
        for (const auto& d : dvecs)
            for (Module& m : all_modules_f2(a, d)) mods.push_back(std::move(m));
        for (const Module& b : mods) {
            Resolution res = resolve2(b);
            for (const Module& n : mods) {
                long long z = count_extension_matrices(b, n);
                // |Ext^1| = |Z| * 2^{dim Hom(B,N)} / 2^{sum_v n_v b_v}
                int homd = (int)hom_basis(b, n).size();
                int raw = 0;
                for (int v = 0; v < nv; ++v) raw += n.dims[v] * b.dims[v];
                long long classes = (z << homd) >> raw;
                long long resolved = 1LL << ext1(res, n).dim();
                ok &= expect((z << homd) == (classes << raw) && classes == resolved,
                             corpus.fixtures[i].name + ": Ext^1 count mismatch", note);
                if (!ok) return false;
            }
        }
    }
    return ok;
}

// ---- criterion 9: Krull-Schmidt recovers planted direct sums ----

bool criterion9(std::string& note) {
    bool ok = true;
    std::mt19937 rng(424242);
    for (int i = 0; i < (int)kCorpus.size(); ++i) {
        const Fixture& fx = corpus.fixtures[i];
        AlgebraPtr a = fx.stratified.algebra;
        // pool of pairwise non-isomorphic indecomposables
        std::vector<Module> pool;
        for (int v = 0; v < a->num_vertices(); ++v) {
            pool.push_back(simple_module(a, v));
            Module p = projective_module(a, v);
            bool fresh = true;
            for (const Module& m : pool)
                if (modules_isomorphic(m, p).isomorphic) { fresh = false; break; }
            if (fresh) pool.push_back(std::move(p));
        }
        for (int trial = 0; trial < 50 && ok; ++trial) {
            int k = 2 + (int)(rng() % 3);
            std::vector<int> planted;
            std::vector<Module> parts;
            for (int s = 0; s < k; ++s) {
                int pick = (int)(rng() % pool.size());
                planted.push_back(pick);
                parts.push_back(pool[pick]);
            }
            Module sum = direct_sum(a, parts).module;
            std::vector<Summand> dec = decompose(sum);
            std::vector<int> found;
            for (const Summand& s : dec) {
                int which = -1;
                for (int j = 0; j < (int)pool.size(); ++j)
                    if (modules_isomorphic(s.module, pool[j]).isomorphic) { which = j; break; }
                found.push_back(which);
            }
            std::multiset<int> want(planted.begin(), planted.end());
            std::multiset<int> got(found.begin(), found.end());
            ok &= expect(want == got, fx.name + ": decomposition is not the planted multiset",
                         note);
        }
    }
    return ok;
}

// ---- criterion 10: byte-identical CLI reports ----

std::pair<int, std::string> run_binary(const std::string& args) {
    std::string cmd = std::string(SF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), nread);
    return {WEXITSTATUS(pclose(pipe)), out};
}

bool criterion10(std::string& note) {
    bool ok = true;
    for (const char* file : {"F1_field.json", "F2_a2.json", "F3_cp1.json", "F4_loop.json",
                             "F5_chain.json", "F6_degenerate.json"})
        for (const char* cmd : {"check", "covers", "present", "extquiver"})
            for (const char* mode : {"text", "json"}) {
                std::string args = std::string(cmd) + " " + fixture_path(file) + " --report " +
                                   mode;
                auto [c1, o1] = run_binary(args);
                auto [c2, o2] = run_binary(args);
                ok &= expect(c1 == 0 && c2 == 0,
                             std::string(file) + " " + cmd + ": nonzero exit", note);
                ok &= expect(!o1.empty() && o1 == o2,
                             std::string(file) + " " + cmd + " --report " + mode +
                                 ": reports differ between runs",
                             note);
            }
    return ok;
}

}  // namespace

int main() {
    for (const char* file : kCorpus) corpus.fixtures.push_back(load_fixture(fixture_path(file)));

    struct Criterion {
        const char* title;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> crits = {
        {"1. oracle equivalence: constructed covers match direct projectives", criterion1},
        {"2. cover certificates: Hom indicator rows, zero Ext^1 rows", criterion2},
        {"3. Q = j_! j^* P_L and unique maximal passing quotient", criterion3},
        {"4. CP^1 model: passing lengths {2,1}, cover factors {c, o, c}", criterion4},
        {"5. degenerate case: P = 0, Q = 0, P_L = B_L", criterion5},
        {"6. recollement identity and adjunction suite on random modules", criterion6},
        {"7. recovery: realize(gabriel(End(sum of covers))) = Lambda", criterion7},
        {"8. Ext^1 counts vs exhaustive middle-term enumeration", criterion8},
        {"9. Krull-Schmidt: planted direct-sum multisets recovered", criterion9},
        {"10. determinism: byte-identical CLI reports", criterion10},
    };

    int failures = 0;
    for (const Criterion& c : crits) {
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS  " : "FAIL  ") << c.title;
        if (!ok && !note.empty()) std::cout << "  [" << note << "]";
        std::cout << std::endl;
    }
    return failures;
}
