#include <algorithm>
#include <map>
#include <set>

#include "qrep/frobenius.hpp"

namespace qrep {

namespace {

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Scalar>;

void add_term(Polynomial& p, Monomial mono, const Scalar& c) {
    if (c.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = p.find(mono);
    if (it == p.end()) p.emplace(std::move(mono), c);
    else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

}  // namespace

std::optional<Algebra> solve_structure(CategoryPtr cat, const StructureProblem& problem, const std::string& tag) {
    const Category& c = *cat;
    const auto& J = problem.object;
    if (J.empty() || J[0] != 0) throw std::invalid_argument("algebra object must start with the unit label");
    std::set<int> jset(J.begin(), J.end());
    if (jset.size() != J.size()) throw std::invalid_argument("repeated label in haploid object");

    // Variables: m_{ab}^c with a, b nonzero.
    std::map<std::array<int, 3>, int> var;
    std::vector<std::array<int, 3>> var_key;
    for (int a : J)
        for (int b : J)
            for (int x : J)
                if (a && b && c.fusion(a, b, x)) {
                    var.emplace(std::array<int, 3>{a, b, x}, static_cast<int>(var_key.size()));
                    var_key.push_back({a, b, x});
                }
    std::map<int, Scalar> known;
    for (const auto& [key, value] : problem.gauge) {
        auto it = var.find(key);
        if (it == var.end()) throw std::invalid_argument("gauge component is not a structure constant");
        known.emplace(it->second, Scalar(c.field(), value));
    }
    // Term for m_{ab}^x: empty optional if inadmissible, else monomial (possibly constant).
    auto mono = [&](int a, int b, int x) -> std::optional<Monomial> {
        if (!c.fusion(a, b, x)) return std::nullopt;
        if (a == 0 || b == 0) return Monomial{};
        return Monomial{var.at({a, b, x})};
    };

    std::vector<Polynomial> eqs;
    for (int a : J)
        for (int b : J)
            for (int x : J)
                for (int d : J)
                    for (int f = 0; f <= c.level(); ++f) {
                        Polynomial p;
                        for (int e : J) {
                            auto m1 = mono(a, b, e), m2 = mono(e, x, d);
                            if (!m1 || !m2) continue;
                            Scalar w = c.Finv(a, b, x, d, f, e);
                            if (w.is_zero()) continue;
                            Monomial m = *m1;
                            m.insert(m.end(), m2->begin(), m2->end());
                            add_term(p, m, w);
                        }
                        if (jset.count(f)) {
                            auto r1 = mono(b, x, f), r2 = mono(a, f, d);
                            if (r1 && r2) {
                                Monomial m = *r1;
                                m.insert(m.end(), r2->begin(), r2->end());
                                add_term(p, m, -c.one());
                            }
                        }
                        if (!p.empty()) eqs.push_back(std::move(p));
                    }
    if (problem.commutative)
        for (int a : J)
            for (int b : J)
                for (int x : J)
                    if (a && b && c.fusion(a, b, x)) {
                        Polynomial p;
                        add_term(p, {var.at({a, b, x})}, c.one());
                        add_term(p, {var.at({b, a, x})}, -c.R(a, b, x));
                        if (!p.empty()) eqs.push_back(std::move(p));
                    }

    // Iterated linear elimination: substitute known values, solve the equations that
    // became linear, fix every variable the linear system determines uniquely.
    for (;;) {
        std::vector<Polynomial> linear;
        std::vector<Polynomial> remaining;
        for (const auto& p : eqs) {
            Polynomial q;
            for (const auto& [m, coef] : p) {
                Monomial rest;
                Scalar v = coef;
                for (int x : m) {
                    auto it = known.find(x);
                    if (it == known.end()) rest.push_back(x);
                    else v *= it->second;
                }
                add_term(q, rest, v);
            }
            if (q.empty()) continue;
            bool lin = true;
            for (const auto& [m, coef] : q) lin = lin && m.size() <= 1;
            if (lin) linear.push_back(q);
            remaining.push_back(std::move(q));
        }
        eqs = std::move(remaining);
        if (linear.empty()) break;
        std::set<int> vars;
        for (const auto& p : linear)
            for (const auto& [m, coef] : p)
                if (!m.empty()) vars.insert(m[0]);
        std::vector<int> cols(vars.begin(), vars.end());
        const int nv = static_cast<int>(cols.size());
        std::vector<std::vector<Scalar>> rows;
        for (const auto& p : linear) {
            std::vector<Scalar> row(nv + 1, c.zero());
            for (const auto& [m, coef] : p) {
                if (m.empty()) row[nv] = coef;
                else row[std::lower_bound(cols.begin(), cols.end(), m[0]) - cols.begin()] = coef;
            }
            rows.push_back(std::move(row));
        }
        auto piv = row_reduce(rows, nv + 1);
        int fixed = 0;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] == nv) return std::nullopt;
            bool determined = true;
            for (int j = piv[r] + 1; j < nv && determined; ++j) determined = rows[r][j].is_zero();
            if (!determined) continue;
            known.emplace(cols[piv[r]], -rows[r][nv]);
            ++fixed;
        }
        if (!fixed) break;
    }
    if (!eqs.empty() || known.size() != var_key.size()) return std::nullopt;

    Algebra alg;
    alg.cat = cat;
    alg.tag = tag;
    alg.label = J;
    std::map<int, int> index;
    for (std::size_t s = 0; s < J.size(); ++s) index[J[s]] = static_cast<int>(s);
    for (int a : J) {
        alg.m[{0, index[a], index[a]}] = c.one();
        alg.m[{index[a], 0, index[a]}] = c.one();
    }
    for (const auto& [v, value] : known)
        if (!value.is_zero()) {
            auto [a, b, x] = var_key[v];
            alg.m[{index[a], index[b], index[x]}] = value;
        }
    alg.unit.assign(J.size(), c.zero());
    alg.counit.assign(J.size(), c.zero());
    alg.unit[0] = c.one();
    alg.counit[0] = alg.dim();
    try {
        derive_comultiplication(alg);
    } catch (const InvalidAlgebra&) {
        return std::nullopt;
    }
    if (!check_ssfa(alg).all()) return std::nullopt;
    return alg;
}

std::optional<Series> parse_series(const std::string& s) {
    if (s == "D") return Series::D;
    if (s == "E6") return Series::E6;
    if (s == "E7") return Series::E7;
    if (s == "E8") return Series::E8;
    return std::nullopt;
}

std::string series_name(Series s) {
    switch (s) {
        case Series::D: return "D";
        case Series::E6: return "E6";
        case Series::E7: return "E7";
        case Series::E8: return "E8";
    }
    return "?";
}

bool series_available(int level, Series s) {
    switch (s) {
        case Series::D: return level >= 4 && level % 2 == 0;
        case Series::E6: return level == 10;
        case Series::E7: return level == 16;
        case Series::E8: return level == 28;
    }
    return false;
}

StructureProblem ade_problem(int level, Series s) {
    if (!series_available(level, s))
        throw UnsupportedAlgebra(series_name(s) + " algebra is not available at level " + std::to_string(level));
    const int k = level;
    switch (s) {
        case Series::D: return {{0, k}, {{{k, k, 0}, 1}}, false};
        case Series::E6: return {{0, 6}, {{{6, 6, 6}, 1}}, true};
        case Series::E7: return {{0, 8, 16}, {{{8, 8, 8}, 1}, {{8, 16, 8}, 1}}, false};
        case Series::E8: return {{0, 10, 18, 28}, {{{10, 10, 10}, 1}, {{18, 18, 18}, 1}, {{10, 28, 18}, 1}}, true};
    }
    throw UnsupportedAlgebra("unknown series");
}

Algebra build_ade(CategoryPtr cat, Series s) {
    auto problem = ade_problem(cat->level(), s);
    auto alg = solve_structure(cat, problem, series_name(s));
    if (!alg) throw InvalidAlgebra("no structure constants for " + series_name(s));
    return *alg;
}

}  // namespace qrep
