#include "strataforge/lattice.hpp"

#include <algorithm>
#include <map>

namespace strataforge {

namespace {

std::string span_key(const std::vector<Mat>& spans) {
    std::string k;
    for (const auto& s : spans) k += s.to_string() + "|";
    return k;
}

int span_total(const std::vector<Mat>& spans) {
    int t = 0;
    for (const auto& s : spans) t += s.cols();
    return t;
}

}  // namespace

std::vector<SubmoduleResult> all_submodules(const Module& m, long long budget) {
    const Field& f = m.field();
    if (!f.is_prime_field())
        throw UnsupportedError("submodule enumeration requires a finite coefficient field");
    long long p = f.characteristic();
    long long steps = 0;
    auto tick = [&](long long n = 1) {
        steps += n;
        if (steps > budget) throw ResourceError("budget exceeded enumerating submodules");
    };

    std::map<std::string, std::vector<Mat>> seen;
    auto canon = [&](const std::vector<Mat>& spans) {
        std::vector<Mat> c;
        for (const auto& s : spans) c.push_back(column_space(s));
        return c;
    };
    auto insert = [&](const std::vector<Mat>& spans) {
        std::vector<Mat> c = canon(spans);
        std::string k = span_key(c);
        if (seen.count(k)) return false;
        tick();
        seen.emplace(std::move(k), std::move(c));
        return true;
    };

    // zero and cyclic submodules
    {
        std::vector<Mat> zero;
        for (int v = 0; v < m.num_vertices(); ++v) zero.emplace_back(f, m.dims[v], 0);
        insert(zero);
    }
    for (int v = 0; v < m.num_vertices(); ++v) {
        int d = m.dims[v];
        if (d == 0) continue;
        long long count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            tick();
        }
        std::vector<long long> digits(d, 0);
        for (long long n = 0; n < count; ++n) {
            tick();
            // normalized representatives: first nonzero coordinate equal to 1
            int first = -1;
            for (int i = 0; i < d; ++i)
                if (digits[i] != 0) { first = i; break; }
            if (first >= 0 && digits[first] == 1) {
                std::vector<Mat> gens;
                for (int w = 0; w < m.num_vertices(); ++w) gens.emplace_back(f, m.dims[w], 0);
                Mat g(f, d, 1);
                for (int i = 0; i < d; ++i) g.set(i, 0, Scalar(digits[i]));
                gens[v] = g;
                SubmoduleResult s = submodule_generated(m, gens);
                insert(s.inclusion.blocks);
            }
            int pos = 0;
            while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
        }
    }

    // close under pairwise sums
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Mat>> current;
        for (const auto& [k, s] : seen) current.push_back(s);
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j) {
                tick();
                std::vector<Mat> sum;
                for (int v = 0; v < m.num_vertices(); ++v)
                    sum.push_back(subspace_sum(current[i][v], current[j][v]));
                if (insert(sum)) grew = true;
            }
    }

    std::vector<std::pair<std::pair<int, std::string>, std::vector<Mat>>> ordered;
    for (const auto& [k, s] : seen) ordered.push_back({{span_total(s), k}, s});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<SubmoduleResult> out;
    for (auto& [key, spans] : ordered) {
        const Quiver& q = m.alg->quiver();
        Module sub{m.alg, {}, {}};
        for (const auto& s : spans) sub.dims.push_back(s.cols());
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            int s = q.arrows[a].source, t = q.arrows[a].target;
            sub.arrow_maps.push_back(coordinates_in(spans[t], m.arrow_maps[a].mul(spans[s])));
        }
        ModuleMorphism incl{sub, m, spans};
        out.push_back(SubmoduleResult{std::move(sub), std::move(incl)});
    }
    return out;
}

std::vector<QuotientModuleResult> all_quotients(const Module& m, long long budget) {
    std::vector<SubmoduleResult> subs = all_submodules(m, budget);
    std::vector<QuotientModuleResult> out;
    for (const auto& s : subs) out.push_back(quotient_module(m, s.inclusion));
    // submodules come sorted by increasing dimension, so quotients by decreasing
    return out;
}

}  // namespace strataforge
