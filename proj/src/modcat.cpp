#include "strataforge/modcat.hpp"

#include <algorithm>

namespace strataforge {

// --- polynomial helpers ---

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_normalize(const Field& f, Poly p) {
    int d = poly_deg(p);
    if (d < 0) return {};
    p.resize(d + 1);
    Scalar lead = f.reduce(p[d]);
    Scalar inv = f.inv(lead);
    for (auto& c : p) c = f.mul(c, inv);
    return p;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.reduce(r[i + j] + a[i] * b[j]);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    int db = poly_deg(b);
    if (db < 0) throw MalformedError("poly division by zero");
    Poly rem = a;
    int dr = poly_deg(rem);
    Poly quo(std::max(dr - db + 1, 0), Scalar(0));
    Scalar lead_inv = f.inv(b[db]);
    while (dr >= db) {
        Scalar c = f.mul(rem[dr], lead_inv);
        quo[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] = f.sub(rem[dr - db + i], c * b[i]);
        dr = poly_deg(rem);
    }
    rem.resize(dr + 1);
    return {std::move(quo), std::move(rem)};
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    a = poly_deg(a) >= 0 ? poly_normalize(f, a) : Poly{};
    b = poly_deg(b) >= 0 ? poly_normalize(f, b) : Poly{};
    while (poly_deg(b) >= 0) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (poly_deg(a) < 0) return {};
    return poly_normalize(f, a);
}

Poly poly_derivative(const Field& f, const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(f.mul(p[i], Scalar(i)));
    return r;
}

namespace {

bool poly_eq(const Poly& a, const Poly& b) {
    int da = poly_deg(a), db = poly_deg(b);
    if (da != db) return false;
    for (int i = 0; i <= da; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Poly poly_pow(const Field& f, const Poly& p, int k) {
    Poly r{Scalar(1)};
    for (int i = 0; i < k; ++i) r = poly_mul(f, r, p);
    return r;
}

Scalar poly_eval(const Field& f, const Poly& p, const Scalar& x) {
    Scalar r(0);
    for (int i = poly_deg(p); i >= 0; --i) r = f.reduce(r * x + p[i]);
    return r;
}

// u with u*a == 1 mod b (a, b coprime)
Poly poly_inv_mod(const Field& f, const Poly& a, const Poly& b) {
    Poly r0 = poly_normalize(f, b), r1 = poly_divmod(f, a, b).second;
    Poly t0{}, t1{Scalar(1)};
    while (poly_deg(r1) > 0) {
        auto [q, r2] = poly_divmod(f, r0, r1);
        Poly t2 = t0;
        Poly qt = poly_mul(f, q, t1);
        t2.resize(std::max(t2.size(), qt.size()), Scalar(0));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = f.sub(t2[i], qt[i]);
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (poly_deg(r1) != 0) throw VerifyError("poly_inv_mod: inputs not coprime");
    Scalar inv = f.inv(r1[0]);
    for (auto& c : t1) c = f.mul(c, inv);
    return t1;
}

Coords poly_eval_elt(const StructAlgebra& a, const Poly& p, const Coords& x) {
    Coords r(a.dim, Scalar(0));
    for (int i = poly_deg(p); i >= 0; --i) {
        r = a.mul(r, x);
        for (int k = 0; k < a.dim; ++k) r[k] = a.field.reduce(r[k] + p[i] * a.unit[k]);
    }
    return r;
}

std::vector<BigInt> divisors_of(BigInt n, long long budget) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    BigInt i = 1;
    long long steps = 0;
    for (; i * i <= n; ++i) {
        if (++steps > budget) throw ResourceError("budget exceeded enumerating divisors");
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

std::vector<Scalar> rational_roots(const Poly& mu, long long budget) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Field q = Field::rationals();
    // integerize
    BigInt l = 1;
    for (const auto& c : mu) l = l / boost::multiprecision::gcd(l, denominator(c)) * denominator(c);
    std::vector<BigInt> ic;
    for (const auto& c : mu) ic.push_back(numerator(Scalar(c * Scalar(l))));
    int d = poly_deg(mu);
    std::vector<Scalar> roots;
    if (ic[0] == 0) roots.push_back(Scalar(0));
    BigInt a0 = ic[0], an = ic[d];
    if (a0 == 0) {
        // strip the factor t before applying the rational root bound
        int k = 0;
        while (k <= d && ic[k] == 0) ++k;
        a0 = ic[k];
    }
    for (const BigInt& p : divisors_of(a0, budget))
        for (const BigInt& qd : divisors_of(an, budget))
            for (int sign : {1, -1}) {
                Scalar r = Scalar(sign) * Scalar(p) / Scalar(qd);
                if (poly_eval(q, mu, r) == 0 &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// squarefree decomposition in characteristic zero: mu = prod a_i^i
std::vector<std::pair<Poly, int>> squarefree_decompose(const Field& f, const Poly& mu) {
    std::vector<std::pair<Poly, int>> out;
    Poly g = poly_gcd(f, mu, poly_derivative(f, mu));
    if (poly_deg(g) <= 0) {
        out.emplace_back(poly_normalize(f, mu), 1);
        return out;
    }
    Poly c = poly_divmod(f, mu, g).first;  // product of distinct primes
    int i = 1;
    while (poly_deg(c) > 0) {
        Poly cn = poly_gcd(f, c, g);
        Poly ai = poly_divmod(f, c, cn).first;
        if (poly_deg(ai) > 0) out.emplace_back(poly_normalize(f, ai), i);
        if (poly_deg(cn) > 0) g = poly_divmod(f, g, cn).first;
        c = std::move(cn);
        ++i;
    }
    return out;
}

// first (hence lowest-degree, hence irreducible) monic divisor of degree in
// [1, deg/2], or empty if none
Poly first_irreducible_divisor_fp(const Field& f, const Poly& mu, long long budget) {
    long long p = f.characteristic();
    int dmu = poly_deg(mu);
    long long steps = 0;
    for (int d = 1; 2 * d <= dmu; ++d) {
        std::vector<long long> digits(d, 0);
        while (true) {
            if (++steps > budget) throw ResourceError("budget exceeded during polynomial factoring");
            Poly cand(d + 1, Scalar(0));
            cand[d] = Scalar(1);
            for (int i = 0; i < d; ++i) cand[i] = Scalar(digits[i]);
            if (poly_deg(poly_divmod(f, mu, cand).second) < 0) return cand;
            int pos = 0;
            while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == d) break;
        }
    }
    return {};
}

}  // namespace

Poly min_poly(const StructAlgebra& a, const Coords& x) {
    const Field& f = a.field;
    std::vector<Coords> powers{a.unit};
    while (true) {
        Mat m = a.elements_matrix(powers);
        Coords next = a.mul(powers.back(), x);
        Mat v(f, a.dim, 1);
        for (int i = 0; i < a.dim; ++i) v.set(i, 0, next[i]);
        SolveResult s = solve(m, v);
        if (s.solution) {
            Poly mu(powers.size() + 1, Scalar(0));
            mu[powers.size()] = Scalar(1);
            for (size_t i = 0; i < powers.size(); ++i)
                mu[i] = f.neg(s.solution->at(static_cast<int>(i), 0));
            return mu;
        }
        powers.push_back(std::move(next));
        if (static_cast<int>(powers.size()) > a.dim + 1)
            throw VerifyError("min_poly: no relation found");
    }
}

PolySplit split_min_poly(const Field& fld, const Poly& mu_in, long long budget) {
    Poly mu = poly_normalize(fld, mu_in);
    int d = poly_deg(mu);
    if (d <= 1) return PolySplit{PolySplit::Kind::Irreducible, {}, {}};
    if (fld.is_prime_field()) {
        Poly q = first_irreducible_divisor_fp(fld, mu, budget);
        if (poly_deg(q) < 0) return PolySplit{PolySplit::Kind::Irreducible, {}, {}};
        Poly rest = mu;
        Poly qk{Scalar(1)};
        while (true) {
            auto [quo, rem] = poly_divmod(fld, rest, q);
            if (poly_deg(rem) >= 0) break;
            rest = quo;
            qk = poly_mul(fld, qk, q);
        }
        if (poly_deg(rest) <= 0) return PolySplit{PolySplit::Kind::PurePower, q, {}};
        return PolySplit{PolySplit::Kind::Coprime, qk, rest};
    }
    // rationals: roots first, then squarefree structure
    std::vector<Scalar> roots = rational_roots(mu, budget);
    if (!roots.empty()) {
        Scalar r = roots.front();
        Poly lin{fld.neg(r), Scalar(1)};
        Poly rest = mu;
        Poly lk{Scalar(1)};
        while (true) {
            auto [quo, rem] = poly_divmod(fld, rest, lin);
            if (poly_deg(rem) >= 0) break;
            rest = quo;
            lk = poly_mul(fld, lk, lin);
        }
        if (poly_deg(rest) <= 0)
            return poly_deg(lk) >= 2 ? PolySplit{PolySplit::Kind::PurePower, lin, {}}
                                     : PolySplit{PolySplit::Kind::Irreducible, {}, {}};
        return PolySplit{PolySplit::Kind::Coprime, lk, rest};
    }
    auto sqf = squarefree_decompose(fld, mu);
    if (sqf.size() > 1) {
        Poly f0 = poly_pow(fld, sqf[0].first, sqf[0].second);
        return PolySplit{PolySplit::Kind::Coprime, f0, poly_divmod(fld, mu, f0).first};
    }
    const auto& [base, mult] = sqf[0];
    if (mult >= 2) {
        if (poly_deg(base) <= 3) return PolySplit{PolySplit::Kind::PurePower, base, {}};
        return PolySplit{PolySplit::Kind::Unknown, {}, {}};
    }
    // squarefree with no rational roots
    if (d <= 3) return PolySplit{PolySplit::Kind::Irreducible, {}, {}};
    return PolySplit{PolySplit::Kind::Unknown, {}, {}};
}

// --- endomorphism algebras ---

ModuleMorphism EndAlgebra::element(const Coords& c) const {
    if (basis.empty()) throw MalformedError("end algebra has an empty hom basis");
    ModuleMorphism r = zero_morphism(basis[0].dom, basis[0].cod);
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) r = r.add(basis[i].scale(c[i]));
    return r;
}

Coords EndAlgebra::coords_of(const ModuleMorphism& f) const {
    const Field& fld = alg.field;
    if (basis.empty()) return {};
    int vn = vectorize(basis[0]).rows();
    Mat m(fld, vn, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
        Mat v = vectorize(basis[c]);
        for (int i = 0; i < vn; ++i) m.set(i, static_cast<int>(c), v.at(i, 0));
    }
    Mat cc = coordinates_in(m, vectorize(f));
    Coords out(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) out[i] = cc.at(static_cast<int>(i), 0);
    return out;
}

EndAlgebra endomorphism_algebra(const Module& m, bool opposite) {
    EndAlgebra out;
    out.basis = hom_basis(m, m);
    out.alg.field = m.field();
    out.alg.dim = static_cast<int>(out.basis.size());
    out.alg.table.assign(out.alg.dim, std::vector<Coords>(out.alg.dim));
    for (int i = 0; i < out.alg.dim; ++i)
        for (int j = 0; j < out.alg.dim; ++j) {
            ModuleMorphism prod = opposite ? out.basis[j].compose(out.basis[i])
                                           : out.basis[i].compose(out.basis[j]);
            out.alg.table[i][j] = out.coords_of(prod);
        }
    if (out.alg.dim > 0) out.alg.unit = out.coords_of(identity_morphism(m));
    return out;
}

// --- idempotent search in a semisimple algebra ---

namespace {

struct IdemSearch {
    bool division = false;  // certified division algebra
    Coords idem;            // otherwise: a nontrivial idempotent
};

bool coords_zero(const Coords& c) {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool coords_equal(const Field& f, const Coords& a, const Coords& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (f.reduce(a[i]) != f.reduce(b[i])) return false;
    return true;
}

// idempotent right identity of the proper nonzero left ideal B*y
Coords left_ideal_idempotent(const StructAlgebra& b, const Coords& y) {
    const Field& f = b.field;
    std::vector<Coords> gens;
    for (int i = 0; i < b.dim; ++i) {
        Coords bi(b.dim, Scalar(0));
        bi[i] = Scalar(1);
        gens.push_back(b.mul(bi, y));
    }
    Mat ideal = column_space(b.elements_matrix(gens));
    int r = ideal.cols();
    if (r == 0 || r == b.dim) throw VerifyError("left ideal is not proper");
    auto col = [&](int j) {
        Coords c(b.dim);
        for (int i = 0; i < b.dim; ++i) c[i] = ideal.at(i, j);
        return c;
    };
    // e = sum c_k y_k with z_j * e = z_j for every ideal basis vector z_j
    Mat sys(f, b.dim * r, r);
    Mat rhs(f, b.dim * r, 1);
    for (int j = 0; j < r; ++j) {
        Coords zj = col(j);
        for (int k = 0; k < r; ++k) {
            Coords prod = b.mul(zj, col(k));
            for (int comp = 0; comp < b.dim; ++comp) sys.set(j * b.dim + comp, k, prod[comp]);
        }
        for (int comp = 0; comp < b.dim; ++comp) rhs.set(j * b.dim + comp, 0, zj[comp]);
    }
    SolveResult s = solve(sys, rhs);
    if (!s.solution) throw VerifyError("semisimple left ideal has no idempotent generator");
    Coords e(b.dim, Scalar(0));
    for (int k = 0; k < r; ++k) {
        Coords yk = col(k);
        for (int i = 0; i < b.dim; ++i)
            e[i] = f.reduce(e[i] + s.solution->at(k, 0) * yk[i]);
    }
    if (coords_zero(e) || coords_equal(f, e, b.unit) || !coords_equal(f, b.mul(e, e), e))
        throw VerifyError("left ideal idempotent extraction failed");
    return e;
}

// returns an idempotent if this element exposes one; sets `division` when the
// element certifies that B is a field
std::optional<Coords> try_element(const StructAlgebra& b, const Coords& x, long long budget,
                                  bool* division) {
    const Field& f = b.field;
    if (coords_zero(x)) return std::nullopt;
    Poly mu = min_poly(b, x);
    PolySplit sp = split_min_poly(f, mu, budget);
    switch (sp.kind) {
        case PolySplit::Kind::Coprime: {
            Poly u = poly_inv_mod(f, sp.f, sp.g);  // u*f == 1 mod g
            Coords e = poly_eval_elt(b, poly_mul(f, u, sp.f), x);
            if (coords_zero(e) || coords_equal(f, e, b.unit) ||
                !coords_equal(f, b.mul(e, e), e))
                throw VerifyError("coprime idempotent extraction failed");
            return e;
        }
        case PolySplit::Kind::PurePower: {
            Coords y = poly_eval_elt(b, sp.f, x);  // nonzero nilpotent
            return left_ideal_idempotent(b, y);
        }
        case PolySplit::Kind::Irreducible:
            if (poly_deg(mu) == b.dim && b.dim > 1) *division = true;
            return std::nullopt;
        case PolySplit::Kind::Unknown:
            return std::nullopt;
    }
    return std::nullopt;
}

IdemSearch find_idempotent(const StructAlgebra& b, long long budget) {
    const Field& f = b.field;
    if (b.dim == 1) return IdemSearch{true, {}};
    bool division = false;
    std::vector<Coords> candidates;
    for (int i = 0; i < b.dim; ++i) {
        Coords bi(b.dim, Scalar(0));
        bi[i] = Scalar(1);
        candidates.push_back(bi);
    }
    for (int i = 0; i < b.dim; ++i)
        for (int j = i + 1; j < b.dim; ++j) {
            Coords s(b.dim, Scalar(0));
            s[i] = Scalar(1);
            s[j] = Scalar(1);
            candidates.push_back(s);
        }
    for (const auto& x : candidates) {
        auto e = try_element(b, x, budget, &division);
        if (e) return IdemSearch{false, *e};
        if (division) return IdemSearch{true, {}};
    }
    if (!f.is_prime_field())
        throw UnsupportedError(
            "cannot certify indecomposability: residue algebra over Q admits no "
            "rational idempotent witness");
    // exhaustive over the finite residue algebra
    long long p = f.characteristic();
    long long count = 1;
    for (int i = 0; i < b.dim; ++i) {
        count *= p;
        if (count > budget)
            throw ResourceError("budget exceeded during exhaustive idempotent search");
    }
    std::vector<long long> digits(b.dim, 0);
    for (long long n = 0; n < count; ++n) {
        Coords x(b.dim);
        for (int i = 0; i < b.dim; ++i) x[i] = Scalar(digits[i]);
        auto e = try_element(b, x, budget, &division);
        if (e) return IdemSearch{false, *e};
        if (division) return IdemSearch{true, {}};
        int pos = 0;
        while (pos < b.dim && ++digits[pos] == p) digits[pos++] = 0;
    }
    return IdemSearch{true, {}};  // every element generates a field: division
}

}  // namespace

std::vector<Summand> decompose(const Module& m, long long budget) {
    if (m.total() == 0) return {};
    EndAlgebra e = endomorphism_algebra(m);
    Mat rad = radical_basis(e.alg);
    StructQuotient q = quotient_struct(e.alg, rad);
    IdemSearch found = find_idempotent(q.algebra, budget);
    if (found.division) {
        return {Summand{m, identity_morphism(m), identity_morphism(m)}};
    }
    // lift the idempotent along the nilpotent kernel
    Mat ebar(m.field(), q.algebra.dim, 1);
    for (int i = 0; i < q.algebra.dim; ++i) ebar.set(i, 0, found.idem[i]);
    Mat lifted = q.section.mul(ebar);
    Coords ec(e.alg.dim);
    for (int i = 0; i < e.alg.dim; ++i) ec[i] = lifted.at(i, 0);
    const Field& f = m.field();
    bool converged = false;
    for (int it = 0; it <= m.total() + 3; ++it) {
        Coords sq = e.alg.mul(ec, ec);
        if (coords_equal(f, sq, ec)) {
            converged = true;
            break;
        }
        // 3e^2 - 2e^3
        Coords cube = e.alg.mul(sq, ec);
        for (int i = 0; i < e.alg.dim; ++i)
            ec[i] = f.reduce(Scalar(3) * sq[i] - Scalar(2) * cube[i]);
    }
    if (!converged) throw VerifyError("idempotent lifting did not converge");
    ModuleMorphism phi = e.element(ec);
    ModuleMorphism psi = identity_morphism(m).add(phi.scale(Scalar(-1)));
    if (phi.is_zero() || psi.is_zero()) throw VerifyError("lifted idempotent is trivial");
    std::vector<Summand> out;
    for (const ModuleMorphism* part : {&phi, &psi}) {
        SubmoduleResult im = image(*part);
        ModuleMorphism proj = factor_through_injection(im.inclusion, *part);
        for (const Summand& s : decompose(im.module, budget))
            out.push_back(Summand{s.module, im.inclusion.compose(s.inclusion),
                                  s.projection.compose(proj)});
    }
    return out;
}

std::optional<ModuleMorphism> indecomposable_isomorphism(const Module& m, const Module& n) {
    if (m.dims != n.dims) return std::nullopt;
    if (m.total() == 0) return identity_morphism(m);
    std::vector<ModuleMorphism> fs = hom_basis(m, n), gs = hom_basis(n, m);
    for (const auto& fmor : fs)
        for (const auto& g : gs) {
            Mat t = g.compose(fmor).total_matrix();
            Mat power = t;
            for (int i = 1; i < m.total(); ++i) power = power.mul(t);
            if (!power.is_zero()) {
                if (!fmor.is_isomorphism())
                    throw VerifyError("non-nilpotent composite without isomorphism");
                return fmor;
            }
        }
    return std::nullopt;
}

IsoResult modules_isomorphic(const Module& m, const Module& n, long long budget) {
    if (m.dims != n.dims) return IsoResult{false, std::nullopt};
    std::vector<Summand> dm = decompose(m, budget), dn = decompose(n, budget);
    if (dm.size() != dn.size()) return IsoResult{false, std::nullopt};
    std::vector<bool> used(dn.size(), false);
    ModuleMorphism witness = zero_morphism(m, n);
    for (const Summand& sm : dm) {
        bool matched = false;
        for (size_t j = 0; j < dn.size(); ++j) {
            if (used[j]) continue;
            auto w = indecomposable_isomorphism(sm.module, dn[j].module);
            if (w) {
                used[j] = true;
                matched = true;
                witness = witness.add(dn[j].inclusion.compose(w->compose(sm.projection)));
                break;
            }
        }
        if (!matched) return IsoResult{false, std::nullopt};
    }
    witness.verify();
    if (!witness.is_isomorphism())
        throw VerifyError("assembled isomorphism witness is not invertible");
    return IsoResult{true, witness};
}

}  // namespace strataforge
